#include "foldrun/contfrac.hpp"

#include <sstream>

#include "foldrun/errors.hpp"
#include "foldrun/runs.hpp"

namespace foldrun {

namespace mp = boost::multiprecision;

std::string ContinuedFraction::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i != 0) out << ", ";
        out << terms[i];
    }
    out << ']';
    return out.str();
}

ContinuedFraction make_cf(std::initializer_list<long long> terms) {
    ContinuedFraction cf;
    for (long long t : terms) cf.terms.emplace_back(t);
    return cf;
}

ContinuedFraction cf_from_rational(const BigRational& r) {
    BigInt p = mp::numerator(r);
    BigInt q = mp::denominator(r);
    ContinuedFraction cf;
    // Floor division for the integer part; afterwards remainders are positive.
    BigInt a = p / q;
    if (p % q != 0 && p < 0) --a;
    cf.terms.push_back(a);
    p -= a * q;
    while (p != 0) {
        BigInt rem;
        BigInt quo;
        mp::divide_qr(q, p, quo, rem);
        cf.terms.push_back(std::move(quo));
        q = std::move(p);
        p = std::move(rem);
    }
    return cf;
}

BigRational cf_to_rational(const ContinuedFraction& cf) {
    if (cf.terms.empty()) throw InvalidInput("empty continued fraction");
    BigInt p_prev = 1;
    BigInt q_prev = 0;
    BigInt p = cf.terms[0];
    BigInt q = 1;
    for (std::size_t i = 1; i < cf.terms.size(); ++i) {
        BigInt p_next = cf.terms[i] * p + p_prev;
        BigInt q_next = cf.terms[i] * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    if (q == 0) throw InvalidInput("continued fraction " + cf.to_string() + " has no finite value");
    return BigRational(p, q);
}

ContinuedFraction contract_zeros(ContinuedFraction cf) {
    std::vector<BigInt> out;
    out.reserve(cf.terms.size());
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        if (i == 0 || cf.terms[i] != 0) {
            out.push_back(std::move(cf.terms[i]));
            continue;
        }
        // cf.terms[i] == 0 at a fractional position.
        if (i + 1 < cf.terms.size()) {
            out.back() += cf.terms[i + 1];
            ++i;
        } else {
            if (out.size() < 2) throw InvalidInput("continued fraction ends in [a, 0] with no finite value");
            out.pop_back();
        }
    }
    cf.terms = std::move(out);
    return cf;
}

ContinuedFraction canonicalize(ContinuedFraction cf) {
    cf = contract_zeros(std::move(cf));
    for (std::size_t i = 1; i < cf.terms.size(); ++i) {
        if (cf.terms[i] < 1) throw InvalidInput("negative partial quotient in " + cf.to_string());
    }
    if (cf.terms.size() >= 2 && cf.terms.back() == 1) {
        cf.terms.pop_back();
        cf.terms.back() += 1;
    }
    return cf;
}

ContinuedFraction set_parity(const ContinuedFraction& cf, Parity parity) {
    const std::size_t t = cf.fractional_length();
    if (t == 0) throw InvalidInput("parity of an expansion without fractional part cannot change");
    const bool odd = (t % 2) == 1;
    if (odd == (parity == Parity::odd)) return cf;
    ContinuedFraction out = cf;
    if (out.terms.back() == 1) {
        // [.., a, 1] = [.., a+1]
        out.terms.pop_back();
        out.terms.back() += 1;
    } else {
        out.terms.back() -= 1;
        out.terms.emplace_back(1);
    }
    return out;
}

ContinuedFraction fold_step(const ContinuedFraction& cf, Sign eps) {
    const std::size_t t = cf.fractional_length();
    if (cf.terms.empty() || cf.terms[0] != 0) throw InvalidInput("folding needs an expansion [0; a1..at]");
    if (t % 2 == 0) throw InvalidInput("folding needs an odd number of partial quotients");
    for (std::size_t i = 1; i <= t; ++i) {
        if (cf.terms[i] < 1) throw InvalidInput("folding needs positive partial quotients");
    }
    const int e = to_int(eps);
    ContinuedFraction out;
    out.terms.assign(cf.terms.begin(), cf.terms.end() - 1);
    out.terms.push_back(cf.terms[t] - e);
    out.terms.push_back(cf.terms[t] + e);
    for (std::size_t i = t - 1; i >= 1; --i) out.terms.push_back(cf.terms[i]);
    return contract_zeros(std::move(out));
}

std::vector<Sign> parse_sign_vector(std::string_view text) {
    std::vector<Sign> out;
    for (char c : text) {
        if (c == ',' || c == ' ') continue;
        if (c == '+') {
            out.push_back(Sign::plus);
        } else if (c == '-') {
            out.push_back(Sign::minus);
        } else {
            throw InvalidInput(std::string("bad sign character '") + c + "'");
        }
    }
    if (out.empty()) throw InvalidInput("empty sign vector");
    return out;
}

std::string format_sign_vector(std::span<const Sign> eps) {
    std::string out;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (i != 0) out.push_back(',');
        out.push_back(to_char(eps[i]));
    }
    return out;
}

BigRational alpha_value(std::span<const Sign> eps) {
    const std::size_t n = eps.size() + 1;
    if (eps.empty()) throw InvalidInput("alpha needs at least eps_2");
    if (n > max_alpha_index) {
        throw InvalidInput("alpha index " + std::to_string(n) + " exceeds cap " + std::to_string(max_alpha_index));
    }
    // Common denominator 2^(2^n): every term is an exact multiple of it.
    const unsigned shift = 1U << n;
    const BigInt den = BigInt(1) << shift;
    BigInt num = (BigInt(3) << (shift - 2));
    for (std::size_t i = 2; i <= n; ++i) {
        const BigInt term = BigInt(1) << (shift - (1U << i));
        if (eps[i - 2] == Sign::plus) {
            num += term;
        } else {
            num -= term;
        }
    }
    return BigRational(num, den);
}

ContinuedFraction predicted_cf(std::span<const Sign> eps) {
    if (eps.empty()) throw InvalidInput("prediction needs at least eps_2");
    std::vector<Sign> code{Sign::plus};
    code.insert(code.end(), eps.begin(), eps.end());
    const RunDecomposition runs = run_decompose(FoldCode::from_signs(code));
    ContinuedFraction cf = make_cf({0, 1});
    for (std::uint32_t r : runs.lengths) cf.terms.emplace_back(2 * r);
    cf.terms.back() += 1;
    return cf;
}

CheckReport cf_theorem_check(std::size_t n_max, const CfPredictor& predictor) {
    if (n_max < 2) throw InvalidInput("sweep bound must be at least 2");
    const std::string bound = "n<=" + std::to_string(n_max);
    for (std::size_t n = 2; n <= n_max; ++n) {
        const std::size_t k = n - 1;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<Sign> eps(k);
            for (std::size_t i = 0; i < k; ++i) eps[i] = ((mask >> i) & 1U) != 0 ? Sign::minus : Sign::plus;
            const ContinuedFraction computed = cf_from_rational(alpha_value(eps));
            const ContinuedFraction predicted = canonicalize(predictor(eps));
            if (!(computed == predicted)) {
                Witness w;
                w.code = format_sign_vector(eps);
                w.values = {static_cast<std::int64_t>(n)};
                w.detail = "computed " + computed.to_string() + " predicted " + predicted.to_string();
                return CheckReport::fail("cf.alpha_expansion", bound, std::move(w));
            }
        }
    }
    return CheckReport::pass("cf.alpha_expansion", bound);
}

}  // namespace foldrun
