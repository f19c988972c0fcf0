#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "foldrun/errors.hpp"
#include "foldrun/factors.hpp"
#include "foldrun/foldcore.hpp"
#include "foldrun/runs.hpp"
#include "oracles.hpp"

using namespace foldrun;

namespace {

std::vector<int> run_word(std::size_t t, std::uint64_t index) {
    return oracle::runs_of(oracle::unfold(oracle::code(t, index))).lengths;
}

std::set<std::string> strings(const FactorInventory& inv) { return inv.factors; }

// Runs ending before 13(3n+2), computed from the reference decomposition.
std::vector<int> reference_window(std::size_t t, std::uint64_t index, std::size_t n) {
    const oracle::Runs r = oracle::runs_of(oracle::unfold(oracle::code(t, index)));
    std::vector<int> out;
    for (std::size_t k = 0; k < r.lengths.size() && r.ends[k] < 13 * (3 * n + 2); ++k) out.push_back(r.lengths[k]);
    return out;
}

std::size_t reference_right_special(const std::vector<int>& w, std::size_t n) {
    std::set<std::vector<int>> special;
    for (const auto& x : oracle::factors(w, n)) {
        std::set<int> ext;
        for (const auto& y : oracle::factors(w, n + 1)) {
            if (std::equal(x.begin(), x.end(), y.begin())) ext.insert(y.back());
        }
        if (ext.size() >= 2) special.insert(x);
    }
    return special.size();
}

const std::vector<std::uint32_t> r1111{2, 1, 2, 2, 3, 2, 1, 2};

}  // namespace

TEST_CASE("overlaps") {
    const std::vector<std::uint32_t> w{1, 2, 1, 2, 1};
    const auto found = find_overlaps(w);
    CHECK(std::find(found.begin(), found.end(), OverlapWitness{1, 2}) != found.end());
    CHECK(find_overlaps(r1111).empty());
    CHECK(find_overlaps(std::vector<std::uint32_t>{3, 3, 3}) == std::vector<OverlapWitness>{{1, 1}});
    CHECK(find_overlaps(std::vector<std::uint32_t>{1, 1}).empty());
}

TEST_CASE("squares") {
    CHECK(strings(find_squares(r1111)) == std::set<std::string>{"22"});
    const std::vector<std::uint32_t> w{1, 2, 3, 1, 2, 3, 2, 2};
    CHECK(strings(find_squares(w)) == std::set<std::string>{"123123", "22"});
    const auto witnesses = square_witnesses(w);
    REQUIRE(witnesses.size() == 2);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& s : witnesses) seen.emplace(s.position, s.order);
    CHECK(seen == std::set<std::pair<std::size_t, std::size_t>>{{1, 3}, {7, 1}});
}

TEST_CASE("palindromes") {
    CHECK(strings(find_palindromes(r1111, 8)) == std::set<std::string>{"1", "2", "3", "22", "212", "232"});
    CHECK(strings(find_palindromes(std::vector<std::uint32_t>{2}, 1)) == std::set<std::string>{"2"});
    CHECK_THROWS_AS(find_palindromes(r1111, 0), InvalidInput);
}

TEST_CASE("factor inventories agree with a brute-force scan") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t t = 1 + rng() % 9;
        const std::uint64_t index = rng() % (std::uint64_t{1} << t);
        const std::vector<int> w = run_word(t, index);
        const std::vector<std::uint32_t> w32(w.begin(), w.end());
        std::set<std::string> squares, palindromes;
        for (std::size_t len = 1; len <= w.size(); ++len) {
            for (const auto& x : oracle::factors(w, len)) {
                std::string s;
                for (int c : x) s += static_cast<char>('0' + c);
                if (len % 2 == 0 && s.substr(0, len / 2) == s.substr(len / 2)) squares.insert(s);
                if (len <= 7 && std::equal(s.begin(), s.end(), s.rbegin())) palindromes.insert(s);
            }
            if (len <= 12) REQUIRE(factor_count(w32, len) == oracle::factors(w, len).size());
        }
        REQUIRE(strings(find_squares(w32)) == squares);
        REQUIRE(strings(find_palindromes(w32, 7)) == palindromes);
    }
}

TEST_CASE("windows and minimum code lengths") {
    CHECK(window_span(6) == 260);
    CHECK(minimum_code_length(1) == 8);
    CHECK(minimum_code_length(6) == 10);
    CHECK(minimum_code_length(30) == 12);
    CHECK(factor_count(r1111, 1) == 3);
    try {
        (void)subword_complexity(FoldCode::parse("++++"), 1);
        FAIL("expected a rejection");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("at least 8") != std::string::npos);
    }
}

TEST_CASE("complexity values at the start of the linear range") {
    for (std::uint64_t index : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{1234}, std::uint64_t{4095}}) {
        const FoldCode f = FoldCode::enumerate(12, index);
        CHECK(subword_complexity(f, 6) == 28);
        CHECK(subword_complexity(f, 7) == 32);
        CHECK(right_special_count(f, 6) == 4);
    }
    CHECK(right_special_count(FoldCode::regular(14), 20) == 4);
}

TEST_CASE("windowed counts agree with a brute-force scan of the same window") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 6; ++rep) {
        const std::uint64_t index = rng() % 4096;
        const FoldCode f = FoldCode::enumerate(12, index);
        for (std::size_t n : {1, 2, 4, 5, 6, 9}) {
            const std::vector<int> w = reference_window(12, index, n);
            REQUIRE(subword_complexity(f, n) == oracle::factors(w, n).size());
            const std::vector<int> w_next = reference_window(12, index, n + 1);
            REQUIRE(right_special_count(f, n) == reference_right_special(w_next, n));
        }
    }
}

TEST_CASE("right extensions") {
    CHECK(max_right_extensions(std::vector<std::uint32_t>{1, 2, 1, 3, 1, 1}, 1) == 3);
    CHECK(max_right_extensions(r1111, 1) == 3);
    CHECK(max_right_extensions(r1111, 2) == 1);
}
