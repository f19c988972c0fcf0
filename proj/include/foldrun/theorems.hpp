#ifndef FOLDRUN_THEOREMS_HPP
#define FOLDRUN_THEOREMS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "foldrun/automaton.hpp"
#include "foldrun/report.hpp"

namespace foldrun {

// Bounded, named checks. Every check sweeps all valid codes (or indices)
// within its bound and stops at the first violation, which it reports as a
// witness that can be re-evaluated through the semantic functions of
// foldcore/runs/factors.

/// The three automata over (f, n[, x]) inferred from the semantic oracles.
struct StandardAutomata {
    Automaton sp;  // x = S_f[n]
    Automaton ep;  // x = E_f[n]
    Automaton rl;  // R_f[n], 0 where there is no run
};

/// Their specializations to the regular sequence, plus t(n).
struct RegularAutomata {
    Automaton sp_reg;
    Automaton ep_reg;
    Automaton rlr;
    Automaton tt;
};

/// Minimal state counts of the inferred automata, dead state included.
inline constexpr std::size_t sp_state_count = 17;
inline constexpr std::size_t ep_state_count = 13;
inline constexpr std::size_t rl_state_count = 31;

StandardAutomata infer_standard_automata(std::size_t sample_depth = 10, std::size_t test_depth = 6);
RegularAutomata specialize_standard(const StandardAutomata& automata, std::size_t tt_depth = 10);

// Correctness of a candidate start-position automaton, for all valid codes
// with at most max_code_len instructions. Indices range over n < 2^(t+1) and
// values over x < 2^(t+3). Reports, in order:
//   sp.partial_function   at most one x per (f, n)
//   sp.origin             (f, 0, 0) accepted
//   sp.first_run          (f, 1, 1) accepted when t >= 1
//   sp.last_run_exists    some x at n = 2^(t-1)
//   sp.no_run_past_end    nothing for n > 2^(t-1)
//   sp.last_run_constant  P_f[x..2^t-1] constant for the last start x
//   sp.starts_increase    x_{n-1} < x_n for 1 <= n <= 2^(t-1)
//   sp.run_boundaries     P_f[y..x-1] all differ from P_f[x]
// Throws InvalidInput if max_code_len < 2.
std::vector<CheckReport> sp_suite(const Automaton& sp, std::size_t max_code_len);

/// Number of runs is 2^(t-1), for 1 <= t <= max_code_len.
CheckReport check_run_count(std::size_t max_code_len);
/// Every run has length 1, 2 or 3.
CheckReport check_run_lengths(std::size_t max_code_len);
/// E_f[n] = 2n - eps_n for n < 2^(t-1), eps from the associated code.
CheckReport check_end_positions(std::size_t max_code_len);
/// No run-length word contains an overlap.
CheckReport check_overlap_free(std::size_t max_code_len);
/// Squares in run-length words have order 1 or 3.
CheckReport check_square_orders(std::size_t max_code_len);
/// The only square of order 1 is 22.
CheckReport check_square_order_one(std::size_t max_code_len);
/// The only squares of order 3 are 123123 and 321321.
CheckReport check_square_order_three(std::size_t max_code_len);
/// The union of all squares is exactly {22, 123123, 321321}.
CheckReport check_square_inventory(std::size_t max_code_len);
/// For 7 <= t <= max_code_len every code has all three squares. Codes with
/// t = max_code_len + 1 and + 2 are sampled; a miss there is noted, not failed.
CheckReport check_squares_present(std::size_t max_code_len, std::size_t samples = 64);
/// Union of palindromes of length <= 7 over all codes with exactly
/// code_len instructions is {1, 2, 3, 22, 212, 232, 12321, 32123}.
CheckReport check_palindromes(std::size_t code_len = 9);
/// No factor of length >= 2 has three distinct right extensions.
CheckReport check_no_triple_extension(std::size_t max_code_len);
/// Windowed factor counts are 4n+4 for n_from <= n <= n_to (28 at n = 6),
/// over all codes with exactly code_len instructions.
CheckReport check_complexity(std::size_t n_from, std::size_t n_to, std::size_t code_len);
/// At most four right-special factors of each length n_from..n_to.
CheckReport check_right_special_at_most_four(std::size_t n_from, std::size_t n_to, std::size_t code_len);
/// Exactly four right-special factors of each length n_from..n_to.
CheckReport check_right_special_exactly_four(std::size_t n_from, std::size_t n_to, std::size_t code_len);

/// Semantic sweeps on run-length words, with bounds derived from L:
/// complexity and right-special checks use codes of length max(L, 14) and
/// n up to 30.
std::vector<CheckReport> runs_suite(std::size_t max_code_len);

/// Verifies the inferred automata against the oracles to verify_depth,
/// reports their state counts, and cross-checks them with the semantic
/// theorems for codes with at most max_code_len instructions.
std::vector<CheckReport> automata_suite(const StandardAutomata& automata, std::size_t verify_depth,
                                        std::size_t max_code_len);

/// Regular-sequence checks for indices <= max_index, through both the
/// semantic run decomposition and the specialized automata; tt
/// well-formedness at tt_depth. Throws InvalidInput if max_index < 16.
std::vector<CheckReport> regular_suite(const RegularAutomata& automata, std::uint64_t max_index,
                                       std::size_t tt_depth = 10);

/// Continued-fraction checks: the alpha expansion for n <= n_max, the
/// 32-bit worked example, the folding identity on `samples` random
/// expansions, and the inductive step for n < n_max.
std::vector<CheckReport> cf_suite(std::size_t n_max, std::size_t samples = 500, std::uint64_t seed = 1);

/// The folding identity value(fold(cf, eps)) = value(cf) + eps/q^2 on
/// random odd-length expansions.
CheckReport check_folding_lemma(std::size_t samples, std::uint64_t seed);

/// Folding the prediction for eps by eps_{n+1} gives the prediction for the
/// extended vector, for all vectors with n + 1 <= n_max.
CheckReport check_inductive_step(std::size_t n_max);

/// 3472818177 / 2^32 expands to its known 18-term continued fraction.
CheckReport check_worked_example();

}  // namespace foldrun

#endif  // FOLDRUN_THEOREMS_HPP
