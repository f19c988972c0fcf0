#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "foldrun/automaton.hpp"
#include "foldrun/errors.hpp"
#include "foldrun/foldcore.hpp"
#include "foldrun/inference.hpp"
#include "foldrun/oracle.hpp"
#include "foldrun/theorems.hpp"
#include "oracles.hpp"

using namespace foldrun;

namespace {

const StandardAutomata& standard() {
    static const StandardAutomata automata = infer_standard_automata();
    return automata;
}

std::vector<int> literal_code(const std::string& lit) {
    std::vector<int> c;
    for (char ch : lit) {
        if (ch == '+') c.push_back(1);
        if (ch == '-') c.push_back(-1);
    }
    return c;
}

// Right-special length-n factors of the run-length word of a long
// brute-force unfolding, dropping the possibly truncated final run.
std::size_t brute_right_special(const std::vector<int>& code, std::size_t n) {
    const oracle::Runs r = oracle::runs_of(oracle::unfold(code));
    std::vector<int> w(r.lengths.begin(), r.lengths.end() - 1);
    std::map<std::vector<int>, std::set<int>> ext;
    for (std::size_t i = 0; i + n < w.size(); ++i) ext[{w.begin() + i, w.begin() + i + n}].insert(w[i + n]);
    std::size_t count = 0;
    for (const auto& [factor, next] : ext) count += next.size() >= 2 ? 1 : 0;
    return count;
}

}  // namespace

TEST_CASE("start-position checks pass on the inferred automaton") {
    for (std::size_t L : {2, 10}) {
        for (const auto& r : sp_suite(standard().sp, L)) {
            INFO(r.name << " L=" << L);
            CHECK(r.passed);
            CHECK(r.bound == "t<=" + std::to_string(L));
        }
    }
    CHECK(sp_suite(standard().sp, 2).size() == 8);
    CHECK_THROWS_AS(sp_suite(standard().sp, 1), InvalidInput);
}

TEST_CASE("corrupted start-position automata are rejected with sound witnesses") {
    const Automaton& sp = standard().sp;
    const auto universe = universe_transitions(sp, 7);
    bool functional_or_boundary = false;
    std::size_t rejected = 0;
    for (const auto& [q, s] : universe) {
        for (Automaton::State to = 0; to < sp.state_count(); ++to) {
            if (to == sp.next(q, s)) continue;
            Automaton mutant = sp;
            mutant.set_next(q, s, to);
            const auto reports = sp_suite(mutant, 4);
            bool failed = false;
            for (const auto& r : reports) {
                if (r.passed) continue;
                failed = true;
                REQUIRE(r.witness.has_value());
                const FoldCode f = FoldCode::parse(r.witness->code);
                if (r.name == "sp.partial_function") {
                    functional_or_boundary = true;
                    const auto& v = r.witness->values;
                    const std::uint64_t n = static_cast<std::uint64_t>(v[0]);
                    const auto values = function_values(mutant, f, std::vector<std::uint64_t>{n}, f.effective_length() + 3);
                    CHECK(values.size() >= 2);
                    CHECK(v[1] != v[2]);
                }
                if (r.name == "sp.run_boundaries") functional_or_boundary = true;
            }
            if (failed) {
                ++rejected;
                // The mutant must really disagree with the ground truth.
                CHECK(verify_exhaustive(mutant, sp_oracle(), 7).has_value());
            }
        }
        if (rejected >= 30) break;
    }
    CHECK(rejected > 0);
    CHECK(functional_or_boundary);
}

TEST_CASE("run-length theorems on small codes") {
    CHECK(check_run_count(10).passed);
    CHECK(check_run_lengths(10).passed);
    CHECK(check_end_positions(10).passed);
    CHECK(check_overlap_free(10).passed);
    CHECK(check_square_orders(10).passed);
    CHECK(check_square_order_one(10).passed);
    CHECK(check_square_order_three(10).passed);
    CHECK(check_square_inventory(10).passed);
    CHECK(check_squares_present(9, 8).passed);
    CHECK(check_palindromes(9).passed);
    CHECK(check_no_triple_extension(10).passed);
    CHECK(check_complexity(6, 12, 13).passed);
    CHECK(check_right_special_exactly_four(6, 12, 13).passed);
}

TEST_CASE("four right-special factors fails at length five with a genuine witness") {
    const CheckReport r = check_right_special_at_most_four(5, 8, 13);
    REQUIRE_FALSE(r.passed);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->values == std::vector<std::int64_t>{5});
    CHECK(brute_right_special(literal_code(r.witness->code), 5) == 5);
    CHECK(brute_right_special(std::vector<int>(16, 1), 5) == 5);
    CHECK(check_right_special_at_most_four(6, 12, 13).passed);
}

TEST_CASE("continued-fraction checks") {
    CHECK(check_worked_example().passed);
    CHECK(check_folding_lemma(100, 3).passed);
    CHECK(check_inductive_step(8).passed);
}
