#ifndef FOLDRUN_REGULAR_HPP
#define FOLDRUN_REGULAR_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "foldrun/automaton.hpp"
#include "foldrun/oracle.hpp"
#include "foldrun/runs.hpp"

namespace foldrun {

/// Restricts the instruction track of `a` to the regular code 1^t 0^* and
/// projects it away. The index on track 1 is constrained to
/// 1 <= n < 2^(t-1), so only runs that are complete in the infinite regular
/// sequence count; t ranges over every length, including lengths beyond the
/// numeric word (padding). Acceptors additionally accept the all-zero input
/// (n = 0 and every other track 0). For DFAOs, conflicting outputs resolve
/// to the smallest positive value. The result is minimized.
Automaton specialize_regular(const Automaton& a);

/// Runs of the regular paperfolding sequence: g = lengths, h = ends,
/// starts, with at least `runs` complete runs.
RunDecomposition regular_runs(std::size_t runs);

/// t(1), t(2), ...: the positive integers not in {h(n) + 1 : n >= 0}
/// (h(0) = 0) in increasing order, for every value <= limit.
std::vector<std::uint64_t> complement_sequence(std::uint64_t limit);

/// Function oracle over (n, x) for x = t(n); queries past the table throw
/// InferenceError.
Oracle tt_oracle(std::uint64_t limit);

/// Infers the synchronized automaton for t(n). `limit` bounds the sampled
/// values of t and must cover n < 2^(sample_depth + test_depth).
Automaton build_tt(std::uint64_t limit, std::size_t sample_depth = 10, std::size_t test_depth = 6);

/// Default sample limit for build_tt at the given depths.
std::uint64_t default_tt_limit(std::size_t sample_depth, std::size_t test_depth);

}  // namespace foldrun

#endif  // FOLDRUN_REGULAR_HPP
