#ifndef FOLDRUN_RUNS_HPP
#define FOLDRUN_RUNS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "foldrun/foldcore.hpp"

namespace foldrun {

/// Maximal runs of a word: parallel 1-based sequences of lengths (R),
/// start positions (S) and end positions (E). Index 0 is the virtual run
/// with start = end = 0.
struct RunDecomposition {
    std::vector<std::uint32_t> lengths;
    std::vector<std::uint64_t> starts;
    std::vector<std::uint64_t> ends;

    std::size_t size() const noexcept { return lengths.size(); }

    std::uint32_t length(std::size_t k) const { return lengths.at(k - 1); }
    std::uint64_t start(std::size_t k) const { return k == 0 ? 0 : starts.at(k - 1); }
    std::uint64_t end(std::size_t k) const { return k == 0 ? 0 : ends.at(k - 1); }
};

/// Throws InvalidInput on the empty word.
RunDecomposition run_decompose(std::span<const Sign> word);
RunDecomposition run_decompose(const PaperfoldingWord& word);
RunDecomposition run_decompose(const FoldCode& code);

/// The associated code g: 11x -> 1(-x), 1(-1)x -> (-1)(-x), (-1)1x -> (-1)x,
/// (-1)(-1)x -> 1x. Throws InvalidInput when f has fewer than two instructions.
FoldCode assoc_code(const FoldCode& f);

/// 2n - eps_n for 1 <= n < 2^(t-1), where eps_n = 1 exactly when the
/// associated word has -1 at position n.
std::vector<std::uint64_t> predicted_end_positions(const FoldCode& f);

// Single-run queries without materializing the word. They follow the
// unfolding recurrence: the runs of P a (-P^R) are those of P, then those of
// P reversed, with a absorbed into whichever neighbour run it matches.
// All require 1 <= n <= 2^(t-1) and throw IndexError otherwise.
std::uint64_t run_start(const FoldCode& f, std::uint64_t n);
std::uint64_t run_end(const FoldCode& f, std::uint64_t n);
std::uint32_t run_length(const FoldCode& f, std::uint64_t n);

/// Number of runs of P_f, i.e. 2^(t-1) (0 for the empty code).
std::uint64_t run_count(const FoldCode& f) noexcept;

}  // namespace foldrun

#endif  // FOLDRUN_RUNS_HPP
