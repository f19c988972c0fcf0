#ifndef FOLDRUN_ORACLE_HPP
#define FOLDRUN_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foldrun/automaton.hpp"
#include "foldrun/foldcore.hpp"

namespace foldrun {

/// relation: yes/no on all numeric tracks.
/// function: the last numeric track is the value of a partial function of
///           the other tracks (synchronized sequence).
/// output:   DFAO value of all numeric tracks.
enum class OracleKind { relation, function, output };

/// Semantic ground truth for automaton inference and verification. When the
/// alphabet has a code track, words whose track 0 is not a valid code are
/// rejected (relation/function) or mapped to output 0 before the callbacks
/// run; callbacks only ever see valid codes.
struct Oracle {
    using Args = std::span<const std::uint64_t>;

    std::string name;
    TrackAlphabet alphabet;
    OracleKind kind = OracleKind::relation;
    std::function<bool(const FoldCode&, Args)> relation;
    std::function<std::optional<std::uint64_t>(const FoldCode&, Args)> function;
    std::function<int(const FoldCode&, Args)> output;

    bool code_track() const noexcept { return alphabet.has_code_track(); }
    /// Tracks read as arguments: all numeric tracks except, for functions, the last.
    std::size_t argument_count() const noexcept;

    /// Verdict on a complete decoded word: 0/1 for relation and function
    /// oracles, the output value otherwise.
    int label(const DecodedInputs& inputs) const;
};

/// Valid code and x = 2^t - 1, t the number of instructions.
bool lnk_accepts(std::span<const int> code_symbols, std::uint64_t x);

/// x = S_f[n], with S_f[0] = 0 and no run beyond 2^(t-1).
bool oracle_sp(const FoldCode& f, std::uint64_t n, std::uint64_t x);
/// x = E_f[n], with E_f[0] = 0.
bool oracle_ep(const FoldCode& f, std::uint64_t n, std::uint64_t x);
/// R_f[n]; throws IndexError outside 1 <= n <= 2^(t-1).
int oracle_rl(const FoldCode& f, std::uint64_t n);

std::optional<std::uint64_t> start_position(const FoldCode& f, std::uint64_t n);
std::optional<std::uint64_t> end_position(const FoldCode& f, std::uint64_t n);

Oracle lnk_oracle();
Oracle sp_oracle();
Oracle ep_oracle();
/// DFAO over (f, n): R_f[n] in {1,2,3}, and 0 where no run exists.
Oracle rl_oracle();
/// Acceptor over (f, n) for R_f[n] = value.
Oracle rl_value_oracle(int value);

}  // namespace foldrun

#endif  // FOLDRUN_ORACLE_HPP
