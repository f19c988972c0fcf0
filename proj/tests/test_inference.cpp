#include <doctest.h>

#include <vector>

#include "foldrun/automaton.hpp"
#include "foldrun/errors.hpp"
#include "foldrun/foldcore.hpp"
#include "foldrun/inference.hpp"
#include "foldrun/oracle.hpp"
#include "foldrun/theorems.hpp"

using namespace foldrun;

namespace {

const StandardAutomata& standard() {
    static const StandardAutomata automata = infer_standard_automata();
    return automata;
}

// Product of a with a depth counter saturating at depth: a tree-shaped
// unfolding of the first levels that accepts the same language.
Automaton unfold_levels(const Automaton& a, std::size_t depth) {
    const std::size_t n = a.state_count();
    Automaton u(a.alphabet(), a.mode(), n * (depth + 1));
    for (std::size_t d = 0; d <= depth; ++d) {
        const std::size_t nd = std::min(d + 1, depth);
        for (std::size_t q = 0; q < n; ++q) {
            const auto id = static_cast<Automaton::State>(d * n + q);
            u.set_value(id, a.value(static_cast<Automaton::State>(q)));
            for (Symbol s = 0; s < a.alphabet().size(); ++s) {
                u.set_next(id, s, static_cast<Automaton::State>(nd * n + a.next(static_cast<Automaton::State>(q), s)));
            }
        }
    }
    return u;
}

}  // namespace

TEST_CASE("oracle ground truth on small codes") {
    const FoldCode f = FoldCode::parse("++++");
    CHECK(oracle_sp(f, 5, 8));
    CHECK_FALSE(oracle_sp(f, 5, 9));
    CHECK_FALSE(oracle_sp(f, 9, 16));
    CHECK(oracle_sp(f, 0, 0));
    CHECK(oracle_ep(f, 5, 10));
    CHECK(oracle_ep(f, 0, 0));
    CHECK(oracle_rl(f, 5) == 3);
    CHECK_THROWS_AS(oracle_rl(f, 9), IndexError);
    CHECK(oracle_ep(FoldCode::parse("++"), 2, 3));
    CHECK(lnk_accepts(std::vector<int>{1, -1, 0}, 3));
    CHECK_FALSE(lnk_accepts(std::vector<int>{1, -1, 0}, 7));
    CHECK_FALSE(lnk_accepts(std::vector<int>{1, 0, -1}, 3));
    CHECK(lnk_accepts(std::vector<int>{}, 0));
}

TEST_CASE("oracles reject invalid code tracks") {
    const Oracle sp = sp_oracle();
    CHECK(sp.label(DecodedInputs{{1, 0, 1}, {1, 1}}) == 0);
    CHECK(sp.label(DecodedInputs{{1, 1, 0}, {1, 1}}) == 1);
    const Oracle rl = rl_oracle();
    CHECK(rl.label(DecodedInputs{{0, 1}, {1}}) == 0);
    CHECK(rl.label(DecodedInputs{{1, 1, 1, 1, 0}, {5}}) == 3);
}

TEST_CASE("inferred automata have the expected minimal sizes and verify") {
    const auto& a = standard();
    CHECK(a.sp.state_count() == sp_state_count);
    CHECK(a.ep.state_count() == ep_state_count);
    CHECK(a.rl.state_count() == rl_state_count);
    CHECK_FALSE(verify_exhaustive(a.sp, sp_oracle(), 10).has_value());
    CHECK_FALSE(verify_exhaustive(a.ep, ep_oracle(), 10).has_value());
    CHECK_FALSE(verify_exhaustive(a.rl, rl_oracle(), 10).has_value());
    CHECK(minimize(a.sp) == a.sp);
}

TEST_CASE("the level unfolding minimizes back to the same automaton") {
    const auto& sp = standard().sp;
    const Automaton tree = unfold_levels(sp, 6);
    CHECK(tree.state_count() == sp.state_count() * 7);
    const Automaton m = minimize(tree);
    CHECK(m.state_count() == sp_state_count);
    CHECK(m == sp);
}

TEST_CASE("function values of the inferred automata") {
    const auto& a = standard();
    const FoldCode f = FoldCode::parse("++++");
    CHECK(function_values(a.sp, f, std::vector<std::uint64_t>{5}, 7) == std::vector<std::uint64_t>{8});
    CHECK(function_values(a.ep, f, std::vector<std::uint64_t>{5}, 7) == std::vector<std::uint64_t>{10});
    CHECK(function_values(a.sp, f, std::vector<std::uint64_t>{9}, 7).empty());
    CHECK(evaluate_inputs(a.rl, f, std::vector<std::uint64_t>{5}, 6) == 3);
    CHECK(evaluate_inputs(a.rl, f, std::vector<std::uint64_t>{9}, 6) == 0);
    // Padding does not change the answer.
    for (std::size_t width = 7; width <= 12; ++width) {
        CHECK(function_values(a.sp, f, std::vector<std::uint64_t>{5}, width) == std::vector<std::uint64_t>{8});
    }
}

TEST_CASE("the length automaton") {
    const Automaton lnk = infer_automaton(lnk_oracle(), 8, 4);
    CHECK(lnk.state_count() == 3);
    CHECK_FALSE(verify_exhaustive(lnk, lnk_oracle(), 9).has_value());
    CHECK(function_values(lnk, FoldCode::parse("+-+"), {}, 6) == std::vector<std::uint64_t>{7});
}

TEST_CASE("a flipped output is caught with a genuine counterexample") {
    const Oracle oracle = sp_oracle();
    const Automaton& sp = standard().sp;
    const auto universe = universe_transitions(sp, 8);
    REQUIRE_FALSE(universe.empty());
    std::size_t caught = 0;
    std::size_t tried = 0;
    for (const auto& [q, s] : universe) {
        if (tried == 40) break;
        const Automaton::State target = sp.next(q, s);
        Automaton mutant = sp;
        mutant.set_next(q, s, static_cast<Automaton::State>((target + 1) % sp.state_count()));
        ++tried;
        const auto cex = verify_exhaustive(mutant, oracle, 8);
        if (!cex) continue;
        ++caught;
        const auto inputs = decode_inputs(cex->word, true);
        CHECK(oracle.label(inputs) == cex->expected);
        CHECK(mutant.evaluate(to_symbols(mutant.alphabet(), cex->word)) == cex->actual);
        CHECK(cex->actual != cex->expected);
    }
    CHECK(caught > 0);

    // Flipping the verdict of a state reached by a valid word is always visible.
    Automaton flipped = sp;
    const Automaton::State q = universe.back().first;
    flipped.set_value(q, flipped.value(q) == 0 ? 1 : 0);
    CHECK(verify_exhaustive(flipped, oracle, 8).has_value());
}

TEST_CASE("inference reports an unclosed hypothesis") {
    // x = 2^n - 1 is not automatic; shallow tests cannot close it.
    Oracle o;
    o.name = "pow";
    o.alphabet = TrackAlphabet::numbers(2);
    o.kind = OracleKind::relation;
    o.relation = [](const FoldCode&, Oracle::Args v) { return v[0] < 20 && v[1] == (std::uint64_t{1} << v[0]) - 1; };
    CHECK_THROWS_AS(infer_automaton(o, 6, 2), InferenceError);
}
