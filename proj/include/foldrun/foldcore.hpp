#ifndef FOLDRUN_FOLDCORE_HPP
#define FOLDRUN_FOLDCORE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foldrun {

/// A hill (+1) or valley (-1). Negation is the only operation on signs.
enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr Sign operator-(Sign s) noexcept {
    return s == Sign::plus ? Sign::minus : Sign::plus;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// Throws InvalidInput unless v is -1 or +1.
Sign sign_from_int(int v);

char to_char(Sign s) noexcept;

/// True iff no nonzero symbol follows a zero symbol.
bool is_valid_code(std::span<const int> symbols) noexcept;

/// Unfolding instructions f_0 f_1 ... over {-1,+1}, optionally followed by
/// zero padding. Two codes differing only in padding denote the same
/// paperfolding word and compare equal.
class FoldCode {
public:
    FoldCode() = default;

    /// Throws InvalidInput if a symbol is outside {-1,0,1} or a nonzero
    /// symbol follows a zero.
    explicit FoldCode(std::vector<int> symbols);

    static FoldCode from_signs(std::span<const Sign> instructions);

    /// Compact literal over {+,-,0}, e.g. "++-+0".
    static FoldCode parse(std::string_view literal);

    /// The code 1^t of the regular paperfolding sequence.
    static FoldCode regular(std::size_t t);

    /// The i-th code of effective length t in the canonical sweep order:
    /// bit k of index set means f_k = -1, so index 0 is the regular code.
    static FoldCode enumerate(std::size_t t, std::uint64_t index);

    std::span<const std::int8_t> symbols() const noexcept { return symbols_; }
    std::size_t effective_length() const noexcept { return length_; }

    /// Instruction f_k; requires k < effective_length().
    Sign operator[](std::size_t k) const noexcept { return static_cast<Sign>(symbols_[k]); }

    std::vector<Sign> instructions() const;

    /// Same instructions, zero-padded (or trimmed of padding) to width symbols.
    /// Throws InvalidInput if width < effective_length().
    FoldCode padded(std::size_t width) const;

    FoldCode extended(Sign a) const;

    std::string to_string() const;

    friend bool operator==(const FoldCode& a, const FoldCode& b) noexcept;

private:
    std::vector<std::int8_t> symbols_;
    std::size_t length_ = 0;
};

/// Word-materializing operations refuse codes longer than this.
inline constexpr std::size_t max_materialized_length = 30;

/// A finite paperfolding word p_1 p_2 ... p_N, indexed from 1.
class PaperfoldingWord {
public:
    PaperfoldingWord() = default;
    explicit PaperfoldingWord(std::vector<Sign> terms) : terms_(std::move(terms)) {}

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// 1-based, unchecked.
    Sign operator[](std::size_t n) const noexcept { return terms_[n - 1]; }
    /// 1-based, throws IndexError.
    Sign at(std::size_t n) const;

    std::span<const Sign> terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    std::string to_string() const;

    friend bool operator==(const PaperfoldingWord&, const PaperfoldingWord&) = default;

private:
    std::vector<Sign> terms_;
};

/// P a (-P^R).
PaperfoldingWord unfold_once(const PaperfoldingWord& word, Sign a);

/// Iterates unfold_once over the instructions of code.
PaperfoldingWord paperfolding_word(const FoldCode& code);

/// p_n without materializing the word. Writing n = m 2^k with m odd, the
/// term is f_k when m = 1 (mod 4) and -f_k otherwise.
Sign paperfolding_term(const FoldCode& code, std::uint64_t n);

}  // namespace foldrun

#endif  // FOLDRUN_FOLDCORE_HPP
