#include "foldrun/factors.hpp"

#include <algorithm>
#include <bit>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "foldrun/errors.hpp"

namespace foldrun {

std::string render_factor(std::span<const std::uint32_t> word) {
    std::string out;
    out.reserve(word.size());
    for (std::uint32_t letter : word) {
        if (letter > 9) throw InvalidInput("factor letter " + std::to_string(letter) + " is not a digit");
        out.push_back(static_cast<char>('0' + letter));
    }
    return out;
}

namespace {

// match[j] = 1 iff word[j] == word[j + period]; returns, for each j, the
// length of the run of matches starting at j.
std::vector<std::size_t> match_runs(std::span<const std::uint32_t> word, std::size_t period) {
    const std::size_t m = word.size() - period;
    std::vector<std::size_t> run(m + 1, 0);
    for (std::size_t j = m; j-- > 0;) run[j] = word[j] == word[j + period] ? run[j + 1] + 1 : 0;
    return run;
}

// Letters packed into bytes so factors can be hashed as string_views.
std::string as_bytes(std::span<const std::uint32_t> word) {
    std::string out(word.size(), '\0');
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] > 255) throw InvalidInput("letter too large for factor hashing");
        out[i] = static_cast<char>(word[i]);
    }
    return out;
}

}  // namespace

std::vector<OverlapWitness> find_overlaps(std::span<const std::uint32_t> word) {
    std::vector<OverlapWitness> out;
    for (std::size_t n = 1; 2 * n + 1 <= word.size(); ++n) {
        const auto run = match_runs(word, n);
        for (std::size_t i = 0; i + 2 * n < word.size(); ++i) {
            if (run[i] >= n + 1) out.push_back({i + 1, n});
        }
    }
    return out;
}

std::vector<SquareWitness> square_witnesses(std::span<const std::uint32_t> word) {
    std::vector<SquareWitness> out;
    for (std::size_t n = 1; 2 * n <= word.size(); ++n) {
        const auto run = match_runs(word, n);
        for (std::size_t i = 0; i + 2 * n <= word.size(); ++i) {
            if (run[i] >= n) out.push_back({i + 1, n});
        }
    }
    return out;
}

FactorInventory find_squares(std::span<const std::uint32_t> word) {
    FactorInventory inv;
    for (const auto& w : square_witnesses(word)) {
        inv.factors.insert(render_factor(word.subspan(w.position - 1, 2 * w.order)));
        inv.max_length = std::max(inv.max_length, 2 * w.order);
    }
    return inv;
}

FactorInventory find_palindromes(std::span<const std::uint32_t> word, std::size_t max_len) {
    if (max_len < 1) throw InvalidInput("palindrome length bound must be at least 1");
    FactorInventory inv;
    inv.max_length = max_len;
    // Expand around each centre; odd centres at letters, even between them.
    for (std::size_t c = 0; c < 2 * word.size(); ++c) {
        std::size_t lo = c / 2;
        std::size_t hi = lo + (c % 2);
        if (hi >= word.size()) continue;
        while (word[lo] == word[hi] && hi - lo + 1 <= max_len) {
            inv.factors.insert(render_factor(word.subspan(lo, hi - lo + 1)));
            if (lo == 0 || hi + 1 == word.size()) break;
            --lo;
            ++hi;
        }
    }
    return inv;
}

std::size_t factor_count(std::span<const std::uint32_t> word, std::size_t n) {
    if (n == 0) return 1;
    if (n > word.size()) return 0;
    const std::string bytes = as_bytes(word);
    const std::string_view view(bytes);
    std::unordered_set<std::string_view> seen;
    seen.reserve(word.size());
    for (std::size_t i = 0; i + n <= view.size(); ++i) seen.insert(view.substr(i, n));
    return seen.size();
}

std::size_t max_right_extensions(std::span<const std::uint32_t> word, std::size_t n) {
    if (n + 1 > word.size()) return 0;
    const std::string bytes = as_bytes(word);
    const std::string_view view(bytes);
    std::unordered_map<std::string_view, std::uint32_t> extensions;  // bitmask of next letters
    for (std::size_t i = 0; i + n < view.size(); ++i) {
        extensions[view.substr(i, n)] |= std::uint32_t{1} << (word[i + n] & 31U);
    }
    std::size_t best = 0;
    for (const auto& [factor, mask] : extensions) {
        best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
    return best;
}

std::uint64_t window_span(std::size_t n) noexcept { return 13 * (3 * static_cast<std::uint64_t>(n) + 2); }

std::size_t minimum_code_length(std::size_t n) noexcept {
    const std::uint64_t w = window_span(n) + 1;
    // ceil(log2(w))
    const auto ceil_log2 = static_cast<std::size_t>(std::bit_width(w - 1));
    return ceil_log2 + 1;
}

std::span<const std::uint32_t> factor_window(const RunDecomposition& runs, std::size_t n) {
    const std::uint64_t span = window_span(n);
    const auto it = std::lower_bound(runs.ends.begin(), runs.ends.end(), span);
    const auto count = static_cast<std::size_t>(it - runs.ends.begin());
    return std::span<const std::uint32_t>(runs.lengths).first(count);
}

namespace {

void require_code_length(std::size_t code_length, std::size_t n) {
    const std::size_t need = minimum_code_length(n);
    if (code_length < need) {
        throw InvalidInput("factor length " + std::to_string(n) + " needs a code of at least " +
                           std::to_string(need) + " instructions, got " + std::to_string(code_length));
    }
}

}  // namespace

std::size_t subword_complexity(const RunDecomposition& runs, std::size_t code_length, std::size_t n) {
    require_code_length(code_length, n);
    return factor_count(factor_window(runs, n), n);
}

std::size_t subword_complexity(const FoldCode& f, std::size_t n) {
    require_code_length(f.effective_length(), n);
    return subword_complexity(run_decompose(f), f.effective_length(), n);
}

std::size_t right_special_count(const RunDecomposition& runs, std::size_t code_length, std::size_t n) {
    require_code_length(code_length, n + 1);
    const auto window = factor_window(runs, n + 1);
    if (window.size() < n + 1) return 0;
    const std::string bytes = as_bytes(window);
    const std::string_view view(bytes);
    std::unordered_map<std::string_view, std::uint32_t> extensions;
    extensions.reserve(window.size());
    for (std::size_t i = 0; i + n < view.size(); ++i) {
        extensions[view.substr(i, n)] |= std::uint32_t{1} << (window[i + n] & 31U);
    }
    return static_cast<std::size_t>(std::count_if(extensions.begin(), extensions.end(), [](const auto& e) {
        return std::popcount(e.second) >= 2;
    }));
}

std::size_t right_special_count(const FoldCode& f, std::size_t n) {
    require_code_length(f.effective_length(), n + 1);
    return right_special_count(run_decompose(f), f.effective_length(), n);
}

}  // namespace foldrun
