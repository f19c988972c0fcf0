#ifndef FOLDRUN_FACTORS_HPP
#define FOLDRUN_FACTORS_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "foldrun/foldcore.hpp"
#include "foldrun/runs.hpp"

namespace foldrun {

/// A set of factors, each rendered as a digit string ("123123").
/// Letters must be single decimal digits.
struct FactorInventory {
    std::size_t max_length = 0;
    std::set<std::string> factors;

    bool contains(const std::string& w) const { return factors.count(w) != 0; }
    std::size_t size() const noexcept { return factors.size(); }
};

std::string render_factor(std::span<const std::uint32_t> word);

/// An overlap a x a x a of period `period` beginning at 1-based `position`.
struct OverlapWitness {
    std::size_t position;
    std::size_t period;

    friend bool operator==(const OverlapWitness&, const OverlapWitness&) = default;
};

/// Every (i, n), n >= 1, with w[i+k] = w[i+n+k] for 0 <= k <= n.
std::vector<OverlapWitness> find_overlaps(std::span<const std::uint32_t> word);

/// Occurrence of a square zz with |z| = order at 1-based position.
struct SquareWitness {
    std::size_t position;
    std::size_t order;
};

std::vector<SquareWitness> square_witnesses(std::span<const std::uint32_t> word);

/// Distinct squares, one entry per word.
FactorInventory find_squares(std::span<const std::uint32_t> word);

/// Palindromic factors of length <= max_len. Throws InvalidInput if max_len < 1.
FactorInventory find_palindromes(std::span<const std::uint32_t> word, std::size_t max_len);

/// Number of distinct length-n factors of the whole word (no windowing).
std::size_t factor_count(std::span<const std::uint32_t> word, std::size_t n);

// Windowed complexity of run-length words.
//
// A run-length factor of length n spans at most 3n+2 symbols of the
// paperfolding word, counting the two delimiting neighbours, and every
// factor of length m of a paperfolding word occurs in its prefix of length
// 13m. The window for n is therefore the set of runs ending strictly before
// position 13(3n+2); codes must have at least
// ceil(log2(13(3n+2)+1)) + 1 instructions so every run in the window is
// complete in all extensions of the code.

std::uint64_t window_span(std::size_t n) noexcept;

std::size_t minimum_code_length(std::size_t n) noexcept;

/// Leading run lengths whose runs end before window_span(n).
std::span<const std::uint32_t> factor_window(const RunDecomposition& runs, std::size_t n);

/// Distinct length-n factors within the window. Throws InvalidInput naming
/// the minimum code length when f is too short.
std::size_t subword_complexity(const FoldCode& f, std::size_t n);
std::size_t subword_complexity(const RunDecomposition& runs, std::size_t code_length, std::size_t n);

/// Length-n factors with at least two distinct right extensions. Extensions
/// are length n+1 factors, so the window and the minimum length are those of n+1.
std::size_t right_special_count(const FoldCode& f, std::size_t n);
std::size_t right_special_count(const RunDecomposition& runs, std::size_t code_length, std::size_t n);

/// Largest number of distinct right extensions of any length-n factor of word.
std::size_t max_right_extensions(std::span<const std::uint32_t> word, std::size_t n);

}  // namespace foldrun

#endif  // FOLDRUN_FACTORS_HPP
