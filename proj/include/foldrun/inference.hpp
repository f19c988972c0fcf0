#ifndef FOLDRUN_INFERENCE_HPP
#define FOLDRUN_INFERENCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "foldrun/automaton.hpp"
#include "foldrun/oracle.hpp"

namespace foldrun {

/// Residual inference. Access words are explored breadth first up to
/// sample_depth; two words share a state when the oracle agrees on every
/// extension of length <= test_depth. The hypothesis is checked against
/// the oracle on all words of length <= sample_depth and minimized.
/// Throws InferenceError on an unclosed hypothesis or a disagreement,
/// naming the offending word and its class representative.
Automaton infer_automaton(const Oracle& oracle, std::size_t sample_depth, std::size_t test_depth);

struct Counterexample {
    std::vector<Letter> word;
    int expected = 0;  // oracle verdict
    int actual = 0;    // automaton verdict

    std::string to_string() const;
};

/// Compares a with the oracle on every word of length <= depth whose code
/// track, if any, is a valid (possibly padded) code. Returns the first
/// disagreement in depth-first order.
std::optional<Counterexample> verify_exhaustive(const Automaton& a, const Oracle& oracle, std::size_t depth);

/// All x < 2^width with (code, args, x) accepted at that width, ascending.
/// The last track of a is the value track; pass an empty code when a has no
/// code track.
std::vector<std::uint64_t> function_values(const Automaton& a, const FoldCode& code,
                                           std::span<const std::uint64_t> args, std::size_t width);

/// Value of a on the encoding of (code, nums) at the given width.
int evaluate_inputs(const Automaton& a, const FoldCode& code, std::span<const std::uint64_t> nums,
                    std::size_t width);

/// (state, symbol) pairs read by some word of length <= depth whose code
/// track is valid.
std::vector<std::pair<Automaton::State, Symbol>> universe_transitions(const Automaton& a, std::size_t depth);

}  // namespace foldrun

#endif  // FOLDRUN_INFERENCE_HPP
