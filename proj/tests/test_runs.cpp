#include <doctest.h>

#include <vector>

#include "foldrun/errors.hpp"
#include "foldrun/foldcore.hpp"
#include "foldrun/runs.hpp"
#include "oracles.hpp"

using namespace foldrun;

TEST_CASE("runs of the word of ++++") {
    const RunDecomposition r = run_decompose(FoldCode::parse("++++"));
    CHECK(r.lengths == std::vector<std::uint32_t>{2, 1, 2, 2, 3, 2, 1, 2});
    CHECK(r.starts == std::vector<std::uint64_t>{1, 3, 4, 6, 8, 11, 13, 14});
    CHECK(r.ends == std::vector<std::uint64_t>{2, 3, 5, 7, 10, 12, 13, 15});
    CHECK(r.start(0) == 0);
    CHECK(r.end(0) == 0);
}

TEST_CASE("degenerate decompositions") {
    const std::vector<Sign> one{Sign::plus};
    const RunDecomposition r = run_decompose(one);
    CHECK(r.lengths == std::vector<std::uint32_t>{1});
    CHECK(r.starts == std::vector<std::uint64_t>{1});
    CHECK(r.ends == std::vector<std::uint64_t>{1});
    CHECK_THROWS_AS(run_decompose(std::vector<Sign>{}), InvalidInput);
    CHECK_THROWS_AS(run_decompose(FoldCode()), InvalidInput);
}

TEST_CASE("associated code") {
    CHECK(assoc_code(FoldCode::parse("++++")) == FoldCode::parse("+--"));
    CHECK(assoc_code(FoldCode::parse("--")) == FoldCode::parse("+"));
    CHECK(assoc_code(FoldCode::parse("+-+")) == FoldCode::parse("--"));
    CHECK(assoc_code(FoldCode::parse("-++")) == FoldCode::parse("-+"));
    CHECK_THROWS_AS(assoc_code(FoldCode::parse("+")), InvalidInput);
}

TEST_CASE("predicted end positions") {
    CHECK(predicted_end_positions(FoldCode::parse("++++")) == std::vector<std::uint64_t>{2, 3, 5, 7, 10, 12, 13});
    CHECK(predicted_end_positions(FoldCode::parse("++")) == std::vector<std::uint64_t>{2});
}

TEST_CASE("decomposition, run count and end positions for every code with t <= 12") {
    for (std::size_t t = 1; t <= 12; ++t) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << t); ++i) {
            const FoldCode f = FoldCode::enumerate(t, i);
            const RunDecomposition r = run_decompose(f);
            const oracle::Runs expected = oracle::runs_of(oracle::unfold(oracle::code(t, i)));
            REQUIRE(r.size() == expected.lengths.size());
            REQUIRE(r.size() == (std::size_t{1} << (t - 1)));
            for (std::size_t k = 0; k < r.size(); ++k) {
                REQUIRE(static_cast<int>(r.lengths[k]) == expected.lengths[k]);
                REQUIRE(r.starts[k] == expected.starts[k]);
                REQUIRE(r.ends[k] == expected.ends[k]);
                REQUIRE(r.lengths[k] >= 1);
                REQUIRE(r.lengths[k] <= 3);
            }
            if (t >= 2) {
                const auto predicted = predicted_end_positions(f);
                REQUIRE(predicted.size() == r.size() - 1);
                for (std::size_t n = 1; n <= predicted.size(); ++n) REQUIRE(predicted[n - 1] == r.end(n));
            }
        }
    }
}

TEST_CASE("single-run queries agree with the decomposition for t <= 12") {
    for (std::size_t t = 1; t <= 12; ++t) {
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << t); ++i) {
            const FoldCode f = FoldCode::enumerate(t, i);
            const RunDecomposition r = run_decompose(f);
            REQUIRE(run_count(f) == r.size());
            for (std::size_t n = 1; n <= r.size(); ++n) {
                REQUIRE(run_start(f, n) == r.start(n));
                REQUIRE(run_end(f, n) == r.end(n));
                REQUIRE(run_length(f, n) == r.length(n));
            }
            CHECK_THROWS_AS(run_start(f, 0), IndexError);
            CHECK_THROWS_AS(run_end(f, r.size() + 1), IndexError);
        }
    }
    CHECK(run_count(FoldCode()) == 0);
}

TEST_CASE("single-run queries scale past materialized lengths") {
    const FoldCode f = FoldCode::regular(50);
    CHECK(run_start(f, 1) == 1);
    CHECK(run_end(f, 5) == 10);
    CHECK(run_length(f, 5) == 3);
    // The last run of the regular word ends at 2^t - 1.
    CHECK(run_end(f, std::uint64_t{1} << 49) == (std::uint64_t{1} << 50) - 1);
}
