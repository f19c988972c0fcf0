#ifndef FOLDRUN_TESTS_ORACLES_HPP
#define FOLDRUN_TESTS_ORACLES_HPP

// Brute-force reference implementations used only by the tests. They work on
// plain integers and share no code with the library.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

// P_{fa} = P_f a (-P_f reversed), over the nonzero symbols of code.
inline std::vector<int> unfold(const std::vector<int>& code) {
    std::vector<int> p;
    for (int a : code) {
        if (a == 0) break;
        std::vector<int> next = p;
        next.push_back(a);
        for (auto it = p.rbegin(); it != p.rend(); ++it) next.push_back(-*it);
        p = std::move(next);
    }
    return p;
}

struct Runs {
    std::vector<int> lengths;
    std::vector<std::uint64_t> starts, ends;  // 1-based positions
};

inline Runs runs_of(const std::vector<int>& word) {
    Runs r;
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j + 1 < word.size() && word[j + 1] == word[i]) ++j;
        r.lengths.push_back(static_cast<int>(j - i + 1));
        r.starts.push_back(i + 1);
        r.ends.push_back(j + 1);
        i = j + 1;
    }
    return r;
}

// All codes with exactly t instructions, bit k of the index meaning f_k = -1.
inline std::vector<int> code(std::size_t t, std::uint64_t index) {
    std::vector<int> c(t);
    for (std::size_t k = 0; k < t; ++k) c[k] = ((index >> k) & 1U) != 0 ? -1 : 1;
    return c;
}

// Distinct length-n factors of w.
inline std::set<std::vector<int>> factors(const std::vector<int>& w, std::size_t n) {
    std::set<std::vector<int>> out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.emplace(w.begin() + i, w.begin() + i + n);
    return out;
}

}  // namespace oracle

#endif  // FOLDRUN_TESTS_ORACLES_HPP
