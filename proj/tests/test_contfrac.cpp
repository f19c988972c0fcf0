#include <doctest.h>

#include <random>
#include <vector>

#include "foldrun/contfrac.hpp"
#include "foldrun/errors.hpp"
#include "foldrun/theorems.hpp"

using namespace foldrun;

namespace {

BigRational frac(long long p, long long q) { return BigRational(BigInt(p), BigInt(q)); }

// Value of [a0; a1, ..., at] by evaluating from the back.
BigRational reference_value(const std::vector<BigInt>& terms) {
    BigRational v = BigRational(terms.back());
    for (std::size_t i = terms.size() - 1; i-- > 0;) v = BigRational(terms[i]) + 1 / v;
    return v;
}

}  // namespace

TEST_CASE("expansion of rationals") {
    CHECK(cf_from_rational(frac(3, 4)) == make_cf({0, 1, 3}));
    CHECK(cf_from_rational(frac(13, 16)) == make_cf({0, 1, 4, 3}));
    CHECK(cf_from_rational(frac(11, 16)) == make_cf({0, 1, 2, 5}));
    CHECK(cf_from_rational(frac(-7, 3)) == make_cf({-3, 1, 2}));
    CHECK(cf_from_rational(frac(5, 1)) == make_cf({5}));
    const BigRational x(BigInt(3472818177ULL), BigInt(1) << 32);
    CHECK(cf_from_rational(x) == make_cf({0, 1, 4, 4, 2, 6, 4, 2, 4, 4, 6, 4, 2, 4, 6, 2, 4, 5}));
    CHECK(make_cf({0, 1, 4, 3}).to_string() == "[0, 1, 4, 3]");
}

TEST_CASE("round trip on random rationals with up to 256-bit parts") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 1000; ++rep) {
        BigInt p = 0, q = 0;
        const int words = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < words; ++i) {
            p = (p << 64) + BigInt(rng());
            q = (q << 64) + BigInt(rng());
        }
        if (q == 0) q = 1;
        if (rng() % 2 == 0) p = -p;
        const BigRational r(p, q);
        const ContinuedFraction cf = cf_from_rational(r);
        REQUIRE(cf_to_rational(cf) == r);
        REQUIRE(reference_value(cf.terms) == r);
        REQUIRE(canonicalize(cf) == cf);
    }
}

TEST_CASE("zero contraction and canonical form") {
    CHECK(contract_zeros(make_cf({0, 2, 0, 3})) == make_cf({0, 5}));
    CHECK(contract_zeros(make_cf({0, 2, 3, 0})) == make_cf({0, 2}));
    CHECK(canonicalize(make_cf({0, 1, 2, 1})) == make_cf({0, 1, 3}));
    CHECK_THROWS_AS(canonicalize(make_cf({0, -1, 2})), InvalidInput);
    CHECK_THROWS_AS(cf_to_rational(make_cf({0, 0})), InvalidInput);
}

TEST_CASE("parity adjustment") {
    CHECK(set_parity(make_cf({0, 2}), Parity::odd) == make_cf({0, 2}));
    CHECK(set_parity(make_cf({0, 1, 3}), Parity::odd) == make_cf({0, 1, 2, 1}));
    CHECK(set_parity(make_cf({0, 1, 2, 1}), Parity::even) == make_cf({0, 1, 3}));
    CHECK_THROWS_AS(set_parity(make_cf({3}), Parity::odd), InvalidInput);
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 500; ++rep) {
        ContinuedFraction cf = make_cf({0});
        const int t = 1 + static_cast<int>(rng() % 20);
        for (int i = 0; i < t; ++i) cf.terms.emplace_back(1 + rng() % 50);
        for (Parity p : {Parity::even, Parity::odd}) {
            const ContinuedFraction adjusted = set_parity(cf, p);
            REQUIRE(cf_to_rational(adjusted) == cf_to_rational(cf));
            REQUIRE(adjusted.fractional_length() % 2 == (p == Parity::odd ? 1U : 0U));
        }
    }
}

TEST_CASE("folding") {
    const ContinuedFraction once = fold_step(make_cf({0, 2}), Sign::plus);
    CHECK(once == make_cf({0, 1, 3}));
    CHECK(cf_to_rational(once) == frac(3, 4));
    const ContinuedFraction twice = fold_step(set_parity(once, Parity::odd), Sign::plus);
    CHECK(cf_to_rational(twice) == frac(13, 16));
    CHECK_THROWS_AS(fold_step(make_cf({0, 1, 3}), Sign::plus), InvalidInput);
    CHECK_THROWS_AS(fold_step(make_cf({1, 3}), Sign::plus), InvalidInput);
}

TEST_CASE("iterated folds from [0, 2] reproduce alpha") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 2 + rng() % 9;
        std::vector<Sign> eps;
        for (std::size_t i = 2; i <= n; ++i) eps.push_back(rng() % 2 ? Sign::plus : Sign::minus);
        ContinuedFraction cf = fold_step(make_cf({0, 2}), Sign::plus);
        for (Sign e : eps) cf = fold_step(set_parity(cf, Parity::odd), e);
        REQUIRE(cf_to_rational(cf) == alpha_value(eps));
    }
}

TEST_CASE("alpha and its predicted expansion") {
    const auto pmmp = parse_sign_vector("+,-,-,+");
    CHECK(format_sign_vector(pmmp) == "+,-,-,+");
    CHECK(alpha_value(pmmp) == BigRational(BigInt(3472818177ULL), BigInt(1) << 32));
    CHECK(alpha_value(parse_sign_vector("+")) == frac(13, 16));
    CHECK(alpha_value(parse_sign_vector("-")) == frac(11, 16));
    CHECK(predicted_cf(parse_sign_vector("+")) == make_cf({0, 1, 4, 3}));
    CHECK(predicted_cf(parse_sign_vector("-")) == make_cf({0, 1, 2, 5}));
    CHECK(predicted_cf(pmmp) == make_cf({0, 1, 4, 4, 2, 6, 4, 2, 4, 4, 6, 4, 2, 4, 6, 2, 4, 5}));
    CHECK_THROWS_AS(alpha_value(std::vector<Sign>{}), InvalidInput);
    CHECK_THROWS_AS(alpha_value(std::vector<Sign>(16, Sign::plus)), InvalidInput);
    CHECK_NOTHROW(alpha_value(std::vector<Sign>(15, Sign::plus)));
    CHECK_THROWS_AS(parse_sign_vector("+,x"), InvalidInput);
}

TEST_CASE("theorem sweep and its sensitivity") {
    CHECK(cf_theorem_check(5).passed);
    CHECK(cf_theorem_check(8).passed);
    const CheckReport broken = cf_theorem_check(5, [](std::span<const Sign> eps) {
        ContinuedFraction cf = predicted_cf(eps);
        if (eps.size() == 3) cf.terms[3] += 1;
        return cf;
    });
    CHECK_FALSE(broken.passed);
    REQUIRE(broken.witness.has_value());
    CHECK(broken.witness->code == "+,+,+");
}

TEST_CASE("continued-fraction suite") {
    for (const CheckReport& r : cf_suite(8, 100, 4)) {
        INFO(r.name);
        CHECK(r.passed);
    }
}
