#include "foldrun/foldcore.hpp"

#include <algorithm>
#include <bit>

#include "foldrun/errors.hpp"

namespace foldrun {

Sign sign_from_int(int v) {
    if (v == 1) return Sign::plus;
    if (v == -1) return Sign::minus;
    throw InvalidInput("sign must be -1 or +1, got " + std::to_string(v));
}

char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

bool is_valid_code(std::span<const int> symbols) noexcept {
    bool padding = false;
    for (int s : symbols) {
        if (s < -1 || s > 1) return false;
        if (s == 0) {
            padding = true;
        } else if (padding) {
            return false;
        }
    }
    return true;
}

FoldCode::FoldCode(std::vector<int> symbols) {
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] < -1 || symbols[i] > 1) {
            throw InvalidInput("code symbol out of range at position " + std::to_string(i));
        }
    }
    if (!is_valid_code(symbols)) {
        throw InvalidInput("invalid code: nonzero instruction after zero padding");
    }
    symbols_.assign(symbols.begin(), symbols.end());
    length_ = static_cast<std::size_t>(
        std::count_if(symbols_.begin(), symbols_.end(), [](std::int8_t s) { return s != 0; }));
}

FoldCode FoldCode::from_signs(std::span<const Sign> instructions) {
    FoldCode code;
    code.symbols_.reserve(instructions.size());
    for (Sign s : instructions) code.symbols_.push_back(static_cast<std::int8_t>(s));
    code.length_ = instructions.size();
    return code;
}

FoldCode FoldCode::parse(std::string_view literal) {
    std::vector<int> symbols;
    symbols.reserve(literal.size());
    for (char c : literal) {
        switch (c) {
            case '+': symbols.push_back(1); break;
            case '-': symbols.push_back(-1); break;
            case '0': symbols.push_back(0); break;
            default:
                throw InvalidInput(std::string("bad code literal character '") + c + "'");
        }
    }
    return FoldCode(std::move(symbols));
}

FoldCode FoldCode::regular(std::size_t t) {
    std::vector<Sign> ones(t, Sign::plus);
    return from_signs(ones);
}

FoldCode FoldCode::enumerate(std::size_t t, std::uint64_t index) {
    std::vector<Sign> f(t);
    for (std::size_t k = 0; k < t; ++k) {
        f[k] = (k < 64 && ((index >> k) & 1U) != 0) ? Sign::minus : Sign::plus;
    }
    return from_signs(f);
}

std::vector<Sign> FoldCode::instructions() const {
    std::vector<Sign> out;
    out.reserve(length_);
    for (std::size_t k = 0; k < length_; ++k) out.push_back((*this)[k]);
    return out;
}

FoldCode FoldCode::padded(std::size_t width) const {
    if (width < length_) {
        throw InvalidInput("width " + std::to_string(width) + " shorter than code length " +
                           std::to_string(length_));
    }
    FoldCode out;
    out.symbols_.assign(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(length_));
    out.symbols_.resize(width, 0);
    out.length_ = length_;
    return out;
}

FoldCode FoldCode::extended(Sign a) const {
    FoldCode out;
    out.symbols_.assign(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(length_));
    out.symbols_.push_back(static_cast<std::int8_t>(a));
    out.length_ = length_ + 1;
    return out;
}

std::string FoldCode::to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (std::int8_t s : symbols_) out.push_back(s > 0 ? '+' : s < 0 ? '-' : '0');
    return out;
}

bool operator==(const FoldCode& a, const FoldCode& b) noexcept {
    return a.length_ == b.length_ &&
           std::equal(a.symbols_.begin(), a.symbols_.begin() + static_cast<std::ptrdiff_t>(a.length_),
                      b.symbols_.begin());
}

Sign PaperfoldingWord::at(std::size_t n) const {
    if (n == 0 || n > terms_.size()) {
        throw IndexError("index " + std::to_string(n) + " outside 1.." + std::to_string(terms_.size()));
    }
    return terms_[n - 1];
}

std::string PaperfoldingWord::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i != 0) out.push_back(' ');
        out += std::to_string(to_int(terms_[i]));
    }
    return out;
}

PaperfoldingWord unfold_once(const PaperfoldingWord& word, Sign a) {
    std::vector<Sign> out;
    out.reserve(2 * word.size() + 1);
    out.insert(out.end(), word.begin(), word.end());
    out.push_back(a);
    for (auto it = word.terms().rbegin(); it != word.terms().rend(); ++it) out.push_back(-*it);
    return PaperfoldingWord(std::move(out));
}

PaperfoldingWord paperfolding_word(const FoldCode& code) {
    const std::size_t t = code.effective_length();
    if (t > max_materialized_length) {
        throw InvalidInput("code length " + std::to_string(t) + " exceeds materialization cap " +
                           std::to_string(max_materialized_length));
    }
    // Unfold in place: each step appends a and the negated reversal.
    std::vector<Sign> terms;
    terms.reserve((std::size_t{1} << t) - 1);
    for (std::size_t k = 0; k < t; ++k) {
        const std::size_t half = terms.size();
        terms.push_back(code[k]);
        for (std::size_t i = half; i-- > 0;) terms.push_back(-terms[i]);
    }
    return PaperfoldingWord(std::move(terms));
}

Sign paperfolding_term(const FoldCode& code, std::uint64_t n) {
    const std::size_t t = code.effective_length();
    if (n == 0 || (t < 64 && n >= (std::uint64_t{1} << t))) {
        throw IndexError("term index " + std::to_string(n) + " outside 1..2^" + std::to_string(t) + "-1");
    }
    const auto k = static_cast<std::size_t>(std::countr_zero(n));
    const std::uint64_t m = n >> k;
    return (m & 3U) == 1 ? code[k] : -code[k];
}

}  // namespace foldrun
