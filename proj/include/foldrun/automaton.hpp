#ifndef FOLDRUN_AUTOMATON_HPP
#define FOLDRUN_AUTOMATON_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "foldrun/foldcore.hpp"

namespace foldrun {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
/// One product letter: a component per track.
using Letter = std::vector<int>;

/// Product alphabet of k tracks. Product symbols are numbered in
/// lexicographic order of their tuples, track 0 most significant.
class TrackAlphabet {
public:
    TrackAlphabet() = default;
    /// Each track is a nonempty, strictly increasing list of symbols.
    explicit TrackAlphabet(std::vector<std::vector<int>> tracks);

    /// {-1,0,1} followed by `numeric` binary tracks.
    static TrackAlphabet code_and_numbers(std::size_t numeric);
    /// `numeric` binary tracks.
    static TrackAlphabet numbers(std::size_t numeric);

    std::size_t track_count() const noexcept { return tracks_.size(); }
    std::span<const int> track(std::size_t i) const { return tracks_.at(i); }
    std::size_t size() const noexcept { return size_; }

    /// Throws InvalidInput for a tuple outside the alphabet.
    Symbol index(std::span<const int> letter) const;
    Letter letter(Symbol s) const;
    int component(Symbol s, std::size_t track) const;

    /// True when the first track is the instruction track {-1,0,1}.
    bool has_code_track() const noexcept;

    friend bool operator==(const TrackAlphabet&, const TrackAlphabet&) = default;

private:
    std::vector<std::vector<int>> tracks_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
};

std::string format_letter(const Letter& letter, char sep = ',');

enum class Mode { accept, output };

/// Complete deterministic automaton over a TrackAlphabet. State 0 is
/// initial. In accept mode state values are 0/1; in output mode they are
/// the DFAO outputs.
class Automaton {
public:
    using State = std::uint32_t;

    Automaton() = default;
    /// `states` states, every transition to state 0, every value 0.
    Automaton(TrackAlphabet alphabet, Mode mode, std::size_t states);

    const TrackAlphabet& alphabet() const noexcept { return alphabet_; }
    Mode mode() const noexcept { return mode_; }
    std::size_t state_count() const noexcept { return values_.size(); }

    State next(State q, Symbol s) const noexcept { return delta_[q * alphabet_.size() + s]; }
    void set_next(State q, Symbol s, State to);

    int value(State q) const noexcept { return values_[q]; }
    void set_value(State q, int v);
    bool accepting(State q) const noexcept { return values_[q] != 0; }

    State add_state(int value = 0);

    State run(std::span<const Symbol> word, State from = 0) const noexcept;
    int evaluate(std::span<const Symbol> word) const noexcept { return value(run(word)); }
    bool accepts(std::span<const Symbol> word) const noexcept { return accepting(run(word)); }

    /// Throws InvalidInput if a transition leaves the state range or an
    /// accept-mode value is not 0/1.
    void validate() const;

    friend bool operator==(const Automaton&, const Automaton&) = default;

private:
    TrackAlphabet alphabet_;
    Mode mode_ = Mode::accept;
    std::vector<int> values_;
    std::vector<State> delta_;
};

/// Lsd-first encoding. Track 0 carries f zero-padded to width; each numeric
/// track carries base-2 digits padded with zeros. Throws InvalidInput if
/// width is shorter than the code or any number's bit length.
std::vector<Letter> encode_inputs(const FoldCode& f, std::span<const std::uint64_t> nums, std::size_t width);
std::vector<Letter> encode_numbers(std::span<const std::uint64_t> nums, std::size_t width);

struct DecodedInputs {
    std::vector<int> code;  // raw track 0, possibly invalid; empty without a code track
    std::vector<std::uint64_t> nums;
};

DecodedInputs decode_inputs(std::span<const Letter> word, bool code_track);

Word to_symbols(const TrackAlphabet& alphabet, std::span<const Letter> letters);
std::vector<Letter> to_letters(const TrackAlphabet& alphabet, std::span<const Symbol> word);

/// Reachable states renumbered in breadth-first order (symbols ascending).
Automaton canonical(const Automaton& a);

/// Minimal equivalent automaton (Moore partition refinement), BFS-numbered.
Automaton minimize(const Automaton& a);

/// Shortest word of length <= depth on which a and b disagree, if any.
/// Throws InvalidInput when alphabets or modes differ.
std::optional<Word> distinguishing_word(const Automaton& a, const Automaton& b, std::size_t depth);

inline bool equivalent(const Automaton& a, const Automaton& b, std::size_t depth) {
    return !distinguishing_word(a, b, depth).has_value();
}

/// DFAO whose output is the priority of the first accepting part, or 0.
Automaton combine(std::span<const std::pair<Automaton, int>> parts);

// Text format:
//   tracks <k>
//   track <i> <symbols...>          (k lines)
//   mode accept|output
//   state <id> <value>              (one per state, ids 0..n-1)
//   trans <src> <s1;...;sk> <dst>   (every state x symbol exactly once)
void write_automaton(const Automaton& a, std::ostream& out);
std::string write_automaton(const Automaton& a);
/// Throws ParseError with the offending line number.
Automaton read_automaton(std::istream& in);
Automaton read_automaton(const std::string& text);

/// Graphviz rendering; nodes and edges in BFS order.
std::string to_dot(const Automaton& a, const std::string& name = "automaton");

}  // namespace foldrun

#endif  // FOLDRUN_AUTOMATON_HPP
