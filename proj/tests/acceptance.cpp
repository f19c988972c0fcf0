// Acceptance run: one PASS/FAIL line per criterion, with timing. Exits 1 if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "foldrun/automaton.hpp"
#include "foldrun/cli.hpp"
#include "foldrun/contfrac.hpp"
#include "foldrun/factors.hpp"
#include "foldrun/inference.hpp"
#include "foldrun/oracle.hpp"
#include "foldrun/theorems.hpp"

using namespace foldrun;

namespace {

// Collects sub-results of one criterion and prints the failing ones.
class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            passed_ = false;
            details_.push_back(what);
        }
    }

    void expect(const CheckReport& r) {
        expect(r.passed, r.name + " [" + r.bound + "]" + (r.witness ? " witness " + r.witness->to_string() : ""));
    }

    void note(const std::string& text) { notes_.push_back(text); }

    bool passed() const noexcept { return passed_; }
    const std::vector<std::string>& details() const noexcept { return details_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

private:
    bool passed_ = true;
    std::vector<std::string> details_;
    std::vector<std::string> notes_;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
    std::ostringstream out;
    std::ostringstream err;
    code = run_cli(args, out, err);
    return out.str();
}

void golden_tables(Criterion& c) {
    const std::filesystem::path dir = FOLDRUN_GOLDEN_DIR;
    const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
        {{"gen", "--regular", "--length", "5", "--count", "16"}, "gen_regular_16.tsv"},
        {{"gen", "--code", "++++"}, "gen_code_1111.tsv"},
        {{"runs", "--code", "++++"}, "runs_code_1111.tsv"},
    };
    for (const auto& [args, file] : cases) {
        int code = 0;
        const std::string out = cli_output(args, code);
        c.expect(code == exit_ok && out == slurp(dir / file), file + " differs");
    }
}

const StandardAutomata& standard() {
    static const StandardAutomata automata = infer_standard_automata();
    return automata;
}

// Redirects universe transitions of a verified automaton one at a time.
// Mutants that still agree with the oracle on every valid word of the depth
// are universe-equivalent and skipped; every other mutant must come with a
// genuine counterexample. Random valid words cross-check the skips.
void mutate_automaton(Criterion& c, const std::string& name, const Automaton& a, const Oracle& oracle,
                      std::size_t depth, std::size_t mutations) {
    std::mt19937_64 rng(11);
    const auto universe = universe_transitions(a, depth);
    std::size_t detected = 0;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < mutations; ++i) {
        const auto [q, s] = universe[rng() % universe.size()];
        Automaton mutant = a;
        const auto shift = 1 + rng() % (a.state_count() - 1);
        mutant.set_next(q, s, static_cast<Automaton::State>((a.next(q, s) + shift) % a.state_count()));
        const auto cex = verify_exhaustive(mutant, oracle, depth);
        if (cex) {
            const auto inputs = decode_inputs(cex->word, true);
            const Word w = to_symbols(a.alphabet(), cex->word);
            c.expect(oracle.label(inputs) == cex->expected && mutant.evaluate(w) == cex->actual
                         && cex->actual != cex->expected,
                     name + ": counterexample " + cex->to_string() + " is not genuine");
            ++detected;
            continue;
        }
        ++skipped;
        for (int k = 0; k < 2000; ++k) {
            const std::size_t t = rng() % (depth + 1);
            const FoldCode f = FoldCode::enumerate(t, t == 0 ? 0 : rng() % (std::uint64_t{1} << t));
            std::vector<std::uint64_t> nums(a.alphabet().track_count() - 1);
            for (auto& x : nums) x = rng() % (std::uint64_t{1} << depth);
            const Word w = to_symbols(a.alphabet(), encode_inputs(f, nums, depth));
            if (mutant.evaluate(w) != a.evaluate(w)) {
                c.expect(false, name + ": skipped mutant differs on " + f.to_string());
                break;
            }
        }
    }
    c.expect(detected > 0, name + ": no mutant detected");
    c.note(name + " " + std::to_string(detected) + " detected, " + std::to_string(skipped) + " universe-equivalent skipped");
}

void mutate_cf(Criterion& c) {
    // Corrupt one term of one predicted expansion; the sweep must name it.
    const std::vector<Sign> target = parse_sign_vector("+,-,-,+");
    const auto expected = format_sign_vector(target);
    for (std::size_t term = 1; term < predicted_cf(target).terms.size(); ++term) {
        const CfPredictor corrupted = [&](std::span<const Sign> eps) {
            ContinuedFraction cf = predicted_cf(eps);
            if (std::equal(eps.begin(), eps.end(), target.begin(), target.end())) cf.terms[term] += 1;
            return cf;
        };
        const CheckReport r = cf_theorem_check(5, corrupted);
        c.expect(!r.passed && r.witness && r.witness->code == expected,
                 "corrupted term " + std::to_string(term) + " not reported");
    }
}

struct Entry {
    int number;
    std::string title;
    double budget_seconds;
    std::function<void(Criterion&)> run;
};

}  // namespace

int main() {
    const std::vector<Entry> entries{
        {1, "golden tables", 1, golden_tables},
        {2, "run count and run lengths, t<=12", 10,
         [](Criterion& c) {
             c.expect(check_run_count(12));
             c.expect(check_run_lengths(12));
         }},
        {3, "ending positions, t<=12", 10, [](Criterion& c) { c.expect(check_end_positions(12)); }},
        {4, "overlap-free run-length words, t<=10", 5, [](Criterion& c) { c.expect(check_overlap_free(10)); }},
        {5, "square inventory, t<=10; all squares at t=7", 5,
         [](Criterion& c) {
             c.expect(check_square_inventory(10));
             c.expect(check_squares_present(7));
         }},
        {6, "palindrome inventory, t=9, length<=7", 5, [](Criterion& c) { c.expect(check_palindromes(9)); }},
        {7, "complexity 4n+4 and right-special counts", 60,
         [](Criterion& c) {
             c.expect(subword_complexity(FoldCode::regular(14), 6) == 28, "complexity at n=6 is not 28");
             c.expect(check_complexity(6, 30, 14));
             c.expect(check_right_special_exactly_four(6, 30, 14));
             c.expect(check_right_special_at_most_four(5, 5, 14));
         }},
        {8, "inferred automata verify at depth 10 with 17/13/31 states", 60,
         [](Criterion& c) {
             const auto& a = standard();
             const std::pair<const Automaton*, Oracle> items[] = {
                 {&a.sp, sp_oracle()}, {&a.ep, ep_oracle()}, {&a.rl, rl_oracle()}};
             for (const auto& [automaton, oracle] : items) {
                 const auto cex = verify_exhaustive(*automaton, oracle, 10);
                 c.expect(!cex, oracle.name + " counterexample " + (cex ? cex->to_string() : ""));
             }
             c.expect(a.sp.state_count() == sp_state_count, "sp has " + std::to_string(a.sp.state_count()) + " states");
             c.expect(a.ep.state_count() == ep_state_count, "ep has " + std::to_string(a.ep.state_count()) + " states");
             c.expect(a.rl.state_count() == rl_state_count, "rl has " + std::to_string(a.rl.state_count()) + " states");
         }},
        {9, "regular specializations, indices <= 10^5", 30,
         [](Criterion& c) {
             for (const auto& r : regular_suite(specialize_standard(standard()), 100000)) c.expect(r);
         }},
        {10, "continued fractions, n<=12; worked example; folding lemma", 60,
         [](Criterion& c) {
             c.expect(cf_theorem_check(12));
             c.expect(check_worked_example());
             c.expect(check_folding_lemma(500, 1));
         }},
        {11, "mutation sensitivity", 10,
         [](Criterion& c) {
             const auto& a = standard();
             mutate_automaton(c, "sp", a.sp, sp_oracle(), 8, 20);
             mutate_automaton(c, "ep", a.ep, ep_oracle(), 8, 20);
             mutate_automaton(c, "rl", a.rl, rl_oracle(), 8, 20);
             mutate_cf(c);
         }},
    };

    bool all = true;
    for (const auto& e : entries) {
        Criterion c;
        const auto start = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && c.passed();
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs, budget %.0fs", seconds, e.budget_seconds);
        std::cout << "criterion " << e.number << ": " << (c.passed() ? "PASS" : "FAIL") << "  " << e.title << "  ("
                  << timing << ")\n";
        for (const auto& d : c.details()) std::cout << "    " << d << '\n';
        for (const auto& n : c.notes()) std::cout << "    note: " << n << '\n';
        std::cout.flush();
    }
    return all ? 0 : 1;
}
