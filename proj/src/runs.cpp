#include "foldrun/runs.hpp"

#include <string>

#include "foldrun/errors.hpp"

namespace foldrun {

RunDecomposition run_decompose(std::span<const Sign> word) {
    if (word.empty()) throw InvalidInput("run decomposition of the empty word");
    RunDecomposition out;
    std::uint64_t start = 1;
    for (std::size_t i = 1; i <= word.size(); ++i) {
        if (i == word.size() || word[i] != word[i - 1]) {
            out.starts.push_back(start);
            out.ends.push_back(i);
            out.lengths.push_back(static_cast<std::uint32_t>(i - start + 1));
            start = i + 1;
        }
    }
    return out;
}

RunDecomposition run_decompose(const PaperfoldingWord& word) { return run_decompose(word.terms()); }

RunDecomposition run_decompose(const FoldCode& code) { return run_decompose(paperfolding_word(code)); }

FoldCode assoc_code(const FoldCode& f) {
    const std::size_t t = f.effective_length();
    if (t < 2) throw InvalidInput("associated code needs at least two instructions");
    const Sign f0 = f[0];
    const Sign f1 = f[1];
    std::vector<Sign> g;
    g.reserve(t - 1);
    // Leading symbol and whether the tail x is negated.
    bool negate_tail = false;
    if (f0 == Sign::plus && f1 == Sign::plus) {
        g.push_back(Sign::plus);
        negate_tail = true;
    } else if (f0 == Sign::plus) {
        g.push_back(Sign::minus);
        negate_tail = true;
    } else if (f1 == Sign::plus) {
        g.push_back(Sign::minus);
    } else {
        g.push_back(Sign::plus);
    }
    for (std::size_t k = 2; k < t; ++k) g.push_back(negate_tail ? -f[k] : f[k]);
    return FoldCode::from_signs(g);
}

std::vector<std::uint64_t> predicted_end_positions(const FoldCode& f) {
    const FoldCode g = assoc_code(f);
    const std::uint64_t runs = run_count(f);
    std::vector<std::uint64_t> out;
    out.reserve(runs - 1);
    for (std::uint64_t n = 1; n < runs; ++n) {
        const std::uint64_t eps = paperfolding_term(g, n) == Sign::plus ? 0 : 1;
        out.push_back(2 * n - eps);
    }
    return out;
}

std::uint64_t run_count(const FoldCode& f) noexcept {
    const std::size_t t = f.effective_length();
    return t == 0 ? 0 : std::uint64_t{1} << (t - 1);
}

namespace {

enum class Bound { start, end };

void check_run_index(const FoldCode& f, std::uint64_t n) {
    const std::size_t t = f.effective_length();
    if (t == 0 || t > 64 || n == 0 || n > run_count(f)) {
        throw IndexError("run index " + std::to_string(n) + " outside 1..2^(t-1) for t=" + std::to_string(t));
    }
}

// Bound of run n of P_{f_0..f_{t-1}}.
std::uint64_t locate(const FoldCode& f, std::size_t t, std::uint64_t n, Bound which) {
    while (true) {
        if (t == 1) return 1;
        const std::uint64_t half = std::uint64_t{1} << (t - 2);  // runs of the shorter word
        const std::uint64_t mid = std::uint64_t{1} << (t - 1);   // position of the new instruction
        const Sign a = f[t - 1];
        // Last symbol of P_{f_0..f_{t-2}}: position 2^(t-1) - 1.
        const Sign last = (t - 1 == 1) ? f[0] : -f[0];
        const bool joins_left = (a == last);
        if (n <= half) {
            if (which == Bound::end && n == half && joins_left) return mid;
            --t;
            continue;
        }
        const std::uint64_t j = n - half;
        if (which == Bound::start && j == 1 && !joins_left) return mid;
        // Run j of -P^R mirrors run half+1-j of P; start and end swap.
        const std::uint64_t mirrored = half + 1 - j;
        const Bound flipped = which == Bound::start ? Bound::end : Bound::start;
        return 2 * mid - locate(f, t - 1, mirrored, flipped);
    }
}

}  // namespace

std::uint64_t run_start(const FoldCode& f, std::uint64_t n) {
    check_run_index(f, n);
    return locate(f, f.effective_length(), n, Bound::start);
}

std::uint64_t run_end(const FoldCode& f, std::uint64_t n) {
    check_run_index(f, n);
    return locate(f, f.effective_length(), n, Bound::end);
}

std::uint32_t run_length(const FoldCode& f, std::uint64_t n) {
    return static_cast<std::uint32_t>(run_end(f, n) - run_start(f, n) + 1);
}

}  // namespace foldrun
