#include "foldrun/theorems.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "foldrun/contfrac.hpp"
#include "foldrun/errors.hpp"
#include "foldrun/factors.hpp"
#include "foldrun/foldcore.hpp"
#include "foldrun/inference.hpp"
#include "foldrun/oracle.hpp"
#include "foldrun/regular.hpp"
#include "foldrun/runs.hpp"

namespace foldrun {

namespace {

std::uint64_t pow2(std::size_t k) { return std::uint64_t{1} << k; }

std::string code_bound(std::size_t max_code_len) { return "t<=" + std::to_string(max_code_len); }

Witness make_witness(const FoldCode& f, std::vector<std::int64_t> values, std::string detail = {}) {
    Witness w;
    w.code = f.to_string();
    w.values = std::move(values);
    w.detail = std::move(detail);
    return w;
}

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Calls fn(f) for every code with t_min <= t <= t_max instructions in sweep
// order; stops as soon as fn returns false.
template <class Fn>
void for_each_code(std::size_t t_min, std::size_t t_max, Fn&& fn) {
    for (std::size_t t = t_min; t <= t_max; ++t) {
        for (std::uint64_t i = 0; i < pow2(t); ++i) {
            if (!fn(FoldCode::enumerate(t, i))) return;
        }
    }
}

bool contains(const std::vector<std::uint64_t>& values, std::uint64_t x) {
    return std::binary_search(values.begin(), values.end(), x);
}

std::size_t width_for(std::uint64_t v) { return static_cast<std::size_t>(std::bit_width(v)) + 1; }

}  // namespace

// ---------------------------------------------------------------------------
// Automata

StandardAutomata infer_standard_automata(std::size_t sample_depth, std::size_t test_depth) {
    return {infer_automaton(sp_oracle(), sample_depth, test_depth),
            infer_automaton(ep_oracle(), sample_depth, test_depth),
            infer_automaton(rl_oracle(), sample_depth, test_depth)};
}

RegularAutomata specialize_standard(const StandardAutomata& automata, std::size_t tt_depth) {
    constexpr std::size_t tt_test_depth = 6;
    return {specialize_regular(automata.sp), specialize_regular(automata.ep), specialize_regular(automata.rl),
            build_tt(default_tt_limit(tt_depth, tt_test_depth), tt_depth, tt_test_depth)};
}

// ---------------------------------------------------------------------------
// Start-position automaton

std::vector<CheckReport> sp_suite(const Automaton& sp, std::size_t max_code_len) {
    if (max_code_len < 2) throw InvalidInput("sp_suite needs max_code_len >= 2");
    static const std::array<const char*, 8> names = {
        "sp.partial_function", "sp.origin",          "sp.first_run",      "sp.last_run_exists",
        "sp.no_run_past_end",  "sp.last_run_constant", "sp.starts_increase", "sp.run_boundaries"};
    std::array<std::optional<Witness>, 8> found;

    for_each_code(0, max_code_len, [&](const FoldCode& f) {
        const std::size_t t = f.effective_length();
        const std::uint64_t indices = pow2(t + 1);
        const std::size_t width = t + 3;
        const std::uint64_t half = t >= 1 ? pow2(t - 1) : 0;
        const std::uint64_t last = pow2(t) - 1;
        auto term = [&](std::uint64_t p) { return paperfolding_term(f, p); };
        auto record = [&](std::size_t k, std::vector<std::int64_t> values, std::string detail) {
            if (!found[k]) found[k] = make_witness(f, std::move(values), std::move(detail));
        };

        std::vector<std::vector<std::uint64_t>> vals(indices);
        for (std::uint64_t n = 0; n < indices; ++n) {
            const std::uint64_t args[] = {n};
            vals[n] = function_values(sp, f, args, width);
        }

        for (std::uint64_t n = 0; n < indices && !found[0]; ++n) {
            if (vals[n].size() > 1) record(0, {as_int(n), as_int(vals[n][0]), as_int(vals[n][1])}, "two values");
        }
        if (!contains(vals[0], 0)) record(1, {0, 0}, "(f,0,0) rejected");
        if (t >= 1 && !contains(vals[1], 1)) record(2, {1, 1}, "(f,1,1) rejected");
        if (t >= 1 && vals[half].empty()) record(3, {as_int(half)}, "no start for the last run");
        for (std::uint64_t n = half + 1; n < indices && !found[4]; ++n) {
            if (!vals[n].empty()) record(4, {as_int(n), as_int(vals[n][0])}, "start past the last run");
        }
        if (t >= 1) {
            for (std::uint64_t x : vals[half]) {
                if (x > last || found[5]) continue;
                if (x == 0) {
                    record(5, {as_int(half), 0}, "last run starts at position 0");
                    continue;
                }
                for (std::uint64_t p = x; p <= last; ++p) {
                    if (term(p) != term(x)) {
                        record(5, {as_int(half), as_int(x), as_int(p)}, "last run not constant");
                        break;
                    }
                }
            }
        }
        for (std::uint64_t n = 1; n <= half && !found[6]; ++n) {
            for (std::uint64_t y : vals[n - 1]) {
                for (std::uint64_t z : vals[n]) {
                    if (!(y < z)) record(6, {as_int(n), as_int(y), as_int(z)}, "starts not increasing");
                }
            }
        }
        for (std::uint64_t n = 2; n < indices && !found[7]; ++n) {
            for (std::uint64_t y : vals[n - 1]) {
                for (std::uint64_t x : vals[n]) {
                    if (x > last || found[7]) continue;
                    if (y == 0 || x == 0) {
                        record(7, {as_int(n), as_int(y), as_int(x)}, "start at position 0");
                        continue;
                    }
                    for (std::uint64_t p = y; p < x; ++p) {
                        if (term(p) == term(x)) {
                            record(7, {as_int(n), as_int(y), as_int(x), as_int(p)}, "symbol before start matches it");
                            break;
                        }
                    }
                }
            }
        }
        return true;
    });

    std::vector<CheckReport> out;
    for (std::size_t k = 0; k < names.size(); ++k) {
        out.push_back(found[k] ? CheckReport::fail(names[k], code_bound(max_code_len), *found[k])
                               : CheckReport::pass(names[k], code_bound(max_code_len)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Run-length words

CheckReport check_run_count(std::size_t max_code_len) {
    const char* name = "runs.count";
    std::optional<Witness> w;
    for_each_code(1, max_code_len, [&](const FoldCode& f) {
        const std::size_t count = run_decompose(f).size();
        const std::uint64_t expected = pow2(f.effective_length() - 1);
        if (count != expected) w = make_witness(f, {as_int(count), as_int(expected)}, "run count");
        return !w;
    });
    return w ? CheckReport::fail(name, code_bound(max_code_len), *w) : CheckReport::pass(name, code_bound(max_code_len));
}

CheckReport check_run_lengths(std::size_t max_code_len) {
    const char* name = "runs.lengths_1_2_3";
    std::optional<Witness> w;
    for_each_code(1, max_code_len, [&](const FoldCode& f) {
        const RunDecomposition runs = run_decompose(f);
        for (std::size_t n = 1; n <= runs.size(); ++n) {
            const std::uint32_t r = runs.length(n);
            if (r < 1 || r > 3) {
                w = make_witness(f, {as_int(n), r}, "run length");
                break;
            }
        }
        return !w;
    });
    return w ? CheckReport::fail(name, code_bound(max_code_len), *w) : CheckReport::pass(name, code_bound(max_code_len));
}

CheckReport check_end_positions(std::size_t max_code_len) {
    const char* name = "runs.end_positions";
    std::optional<Witness> w;
    for_each_code(2, max_code_len, [&](const FoldCode& f) {
        const RunDecomposition runs = run_decompose(f);
        const std::vector<std::uint64_t> predicted = predicted_end_positions(f);
        for (std::size_t n = 1; n <= predicted.size(); ++n) {
            if (predicted[n - 1] != runs.end(n)) {
                w = make_witness(f, {as_int(n), as_int(runs.end(n)), as_int(predicted[n - 1])},
                                 "actual end vs 2n - eps_n");
                break;
            }
        }
        return !w;
    });
    return w ? CheckReport::fail(name, code_bound(max_code_len), *w) : CheckReport::pass(name, code_bound(max_code_len));
}

CheckReport check_overlap_free(std::size_t max_code_len) {
    const char* name = "runs.overlap_free";
    std::optional<Witness> w;
    for_each_code(1, max_code_len, [&](const FoldCode& f) {
        const RunDecomposition runs = run_decompose(f);
        const auto overlaps = find_overlaps(runs.lengths);
        if (!overlaps.empty()) {
            w = make_witness(f, {as_int(overlaps[0].position), as_int(overlaps[0].period)}, "overlap at position/period");
        }
        return !w;
    });
    return w ? CheckReport::fail(name, code_bound(max_code_len), *w) : CheckReport::pass(name, code_bound(max_code_len));
}

namespace {

// First square occurrence in a run-length word rejected by `bad`.
template <class Bad>
CheckReport square_check(const char* name, std::size_t max_code_len, Bad&& bad) {
    std::optional<Witness> w;
    for_each_code(1, max_code_len, [&](const FoldCode& f) {
        const RunDecomposition runs = run_decompose(f);
        for (const SquareWitness& s : square_witnesses(runs.lengths)) {
            const auto z = std::span<const std::uint32_t>(runs.lengths).subspan(s.position - 1, s.order);
            if (bad(s.order, render_factor(z))) {
                w = make_witness(f, {as_int(s.position), as_int(s.order)}, "square of " + render_factor(z));
                break;
            }
        }
        return !w;
    });
    return w ? CheckReport::fail(name, code_bound(max_code_len), *w) : CheckReport::pass(name, code_bound(max_code_len));
}

const std::set<std::string>& expected_squares() {
    static const std::set<std::string> squares{"22", "123123", "321321"};
    return squares;
}

}  // namespace

CheckReport check_square_orders(std::size_t max_code_len) {
    return square_check("runs.square_orders", max_code_len,
                        [](std::size_t order, const std::string&) { return order != 1 && order != 3; });
}

CheckReport check_square_order_one(std::size_t max_code_len) {
    return square_check("runs.square_order_one", max_code_len,
                        [](std::size_t order, const std::string& z) { return order == 1 && z != "2"; });
}

CheckReport check_square_order_three(std::size_t max_code_len) {
    return square_check("runs.square_order_three", max_code_len, [](std::size_t order, const std::string& z) {
        return order == 3 && z != "123" && z != "321";
    });
}

CheckReport check_square_inventory(std::size_t max_code_len) {
    const char* name = "runs.square_inventory";
    std::set<std::string> all;
    std::optional<Witness> w;
    for_each_code(1, max_code_len, [&](const FoldCode& f) {
        for (const std::string& sq : find_squares(run_decompose(f).lengths).factors) {
            if (!expected_squares().count(sq) && !w) w = make_witness(f, {}, "unexpected square " + sq);
            all.insert(sq);
        }
        return !w;
    });
    if (!w && all != expected_squares()) {
        std::string missing;
        for (const auto& sq : expected_squares()) {
            if (!all.count(sq)) missing += (missing.empty() ? "" : ",") + sq;
        }
        Witness m;
        m.detail = "never occurs: " + missing;
        w = m;
    }
    return w ? CheckReport::fail(name, code_bound(max_code_len), *w) : CheckReport::pass(name, code_bound(max_code_len));
}

CheckReport check_squares_present(std::size_t max_code_len, std::size_t samples) {
    const char* name = "runs.squares_present";
    const std::string bound = "7<=t<=" + std::to_string(max_code_len);
    auto missing_in = [](const FoldCode& f) -> std::optional<std::string> {
        const FactorInventory squares = find_squares(run_decompose(f).lengths);
        for (const auto& sq : expected_squares()) {
            if (!squares.contains(sq)) return sq;
        }
        return std::nullopt;
    };
    std::optional<Witness> w;
    for_each_code(7, max_code_len, [&](const FoldCode& f) {
        if (auto sq = missing_in(f)) w = make_witness(f, {}, "missing square " + *sq);
        return !w;
    });
    if (w) return CheckReport::fail(name, bound, *w);

    // Longer codes are only sampled; a miss there is reported as a note.
    std::mt19937_64 rng(7);
    std::string note;
    for (std::size_t t = std::max<std::size_t>(max_code_len + 1, 7); t <= max_code_len + 2 && note.empty(); ++t) {
        std::uniform_int_distribution<std::uint64_t> pick(0, pow2(t) - 1);
        for (std::size_t s = 0; s < samples; ++s) {
            const FoldCode f = FoldCode::enumerate(t, pick(rng));
            if (auto sq = missing_in(f)) {
                note = "sampled code " + f.to_string() + " lacks " + *sq;
                break;
            }
        }
    }
    return CheckReport::pass(name, bound, note);
}

CheckReport check_palindromes(std::size_t code_len) {
    const char* name = "runs.palindromes";
    const std::string bound = "t=" + std::to_string(code_len) + ",len<=7";
    static const std::set<std::string> expected{"1", "2", "3", "22", "212", "232", "12321", "32123"};
    std::set<std::string> all;
    std::optional<Witness> w;
    for_each_code(code_len, code_len, [&](const FoldCode& f) {
        for (const std::string& p : find_palindromes(run_decompose(f).lengths, 7).factors) {
            if (!expected.count(p) && !w) w = make_witness(f, {}, "unexpected palindrome " + p);
            all.insert(p);
        }
        return !w;
    });
    if (!w && all != expected) {
        std::string missing;
        for (const auto& p : expected) {
            if (!all.count(p)) missing += (missing.empty() ? "" : ",") + p;
        }
        Witness m;
        m.detail = "never occurs: " + missing;
        w = m;
    }
    return w ? CheckReport::fail(name, bound, *w) : CheckReport::pass(name, bound);
}

CheckReport check_no_triple_extension(std::size_t max_code_len) {
    const char* name = "runs.no_triple_extension";
    // A factor with three right extensions passes them on to its length-2
    // suffix, so short lengths decide the question for every n >= 2.
    constexpr std::size_t max_n = 12;
    std::optional<Witness> w;
    for_each_code(1, max_code_len, [&](const FoldCode& f) {
        const RunDecomposition runs = run_decompose(f);
        for (std::size_t n = 2; n <= max_n && n < runs.size(); ++n) {
            const std::size_t ext = max_right_extensions(runs.lengths, n);
            if (ext > 2) {
                w = make_witness(f, {as_int(n), as_int(ext)}, "right extensions of a length-n factor");
                break;
            }
        }
        return !w;
    });
    return w ? CheckReport::fail(name, code_bound(max_code_len), *w) : CheckReport::pass(name, code_bound(max_code_len));
}

namespace {

// Applies check(runs, n) for n_from..n_to to every code with exactly
// code_len instructions, skipping codes whose window for n_to + 1 repeats an
// earlier one (the windowed counts depend on nothing else).
template <class Check>
CheckReport windowed_check(const char* name, std::size_t n_from, std::size_t n_to, std::size_t code_len,
                           Check&& check) {
    const std::string bound =
        std::to_string(n_from) + "<=n<=" + std::to_string(n_to) + ",t=" + std::to_string(code_len);
    if (n_from > n_to) throw InvalidInput("empty length range");
    std::set<std::vector<std::uint32_t>> seen;
    std::optional<Witness> w;
    for_each_code(code_len, code_len, [&](const FoldCode& f) {
        const RunDecomposition runs = run_decompose(f);
        const auto window = factor_window(runs, n_to + 1);
        if (!seen.emplace(window.begin(), window.end()).second) return true;
        for (std::size_t n = n_from; n <= n_to; ++n) {
            if (auto detail = check(runs, n)) {
                w = make_witness(f, {as_int(n)}, *detail);
                break;
            }
        }
        return !w;
    });
    return w ? CheckReport::fail(name, bound, *w) : CheckReport::pass(name, bound);
}

}  // namespace

CheckReport check_complexity(std::size_t n_from, std::size_t n_to, std::size_t code_len) {
    return windowed_check("runs.complexity", n_from, n_to, code_len,
                          [&](const RunDecomposition& runs, std::size_t n) -> std::optional<std::string> {
                              const std::size_t c = subword_complexity(runs, code_len, n);
                              if (c == 4 * n + 4) return std::nullopt;
                              return std::to_string(c) + " factors, expected " + std::to_string(4 * n + 4);
                          });
}

CheckReport check_right_special_at_most_four(std::size_t n_from, std::size_t n_to, std::size_t code_len) {
    return windowed_check("runs.right_special_at_most_four", n_from, n_to, code_len,
                          [&](const RunDecomposition& runs, std::size_t n) -> std::optional<std::string> {
                              const std::size_t c = right_special_count(runs, code_len, n);
                              if (c <= 4) return std::nullopt;
                              return std::to_string(c) + " right-special factors";
                          });
}

CheckReport check_right_special_exactly_four(std::size_t n_from, std::size_t n_to, std::size_t code_len) {
    return windowed_check("runs.right_special_exactly_four", n_from, n_to, code_len,
                          [&](const RunDecomposition& runs, std::size_t n) -> std::optional<std::string> {
                              const std::size_t c = right_special_count(runs, code_len, n);
                              if (c == 4) return std::nullopt;
                              return std::to_string(c) + " right-special factors";
                          });
}

std::vector<CheckReport> runs_suite(std::size_t max_code_len) {
    if (max_code_len < 1) throw InvalidInput("runs suite needs max_code_len >= 1");
    const std::size_t windowed_len = std::max<std::size_t>(max_code_len, 14);
    return {
        check_run_count(max_code_len),
        check_run_lengths(max_code_len),
        check_end_positions(max_code_len),
        check_overlap_free(max_code_len),
        check_square_orders(max_code_len),
        check_square_order_one(max_code_len),
        check_square_order_three(max_code_len),
        check_square_inventory(max_code_len),
        check_squares_present(max_code_len),
        check_palindromes(9),
        check_no_triple_extension(max_code_len),
        check_complexity(6, 30, windowed_len),
        check_right_special_at_most_four(5, 30, windowed_len),
        check_right_special_exactly_four(6, 30, windowed_len),
    };
}

// ---------------------------------------------------------------------------
// Inferred automata against the semantic theorems

namespace {

CheckReport verified(const char* name, const Automaton& a, const Oracle& oracle, std::size_t depth) {
    const std::string bound = "depth<=" + std::to_string(depth);
    if (auto ce = verify_exhaustive(a, oracle, depth)) {
        Witness w;
        w.detail = ce->to_string();
        return CheckReport::fail(name, bound, w);
    }
    return CheckReport::pass(name, bound);
}

CheckReport state_count(const char* name, const Automaton& a, std::size_t expected) {
    const std::string bound = "minimal";
    if (a.state_count() == expected) {
        return CheckReport::pass(name, bound, std::to_string(expected) + " states");
    }
    Witness w;
    w.values = {as_int(a.state_count()), as_int(expected)};
    w.detail = std::to_string(a.state_count()) + " states, expected " + std::to_string(expected);
    return CheckReport::fail(name, bound, w);
}

CheckReport padding_invariant(const char* name, const Automaton& a) {
    const Letter zero(a.alphabet().track_count(), 0);
    const Symbol z = a.alphabet().index(zero);
    for (Automaton::State q = 0; q < a.state_count(); ++q) {
        if (a.value(a.next(q, z)) != a.value(q)) {
            Witness w;
            w.values = {q};
            w.detail = "appending a zero letter changes the value of state " + std::to_string(q);
            return CheckReport::fail(name, "all states", w);
        }
    }
    return CheckReport::pass(name, "all states");
}

}  // namespace

std::vector<CheckReport> automata_suite(const StandardAutomata& automata, std::size_t verify_depth,
                                        std::size_t max_code_len) {
    std::vector<CheckReport> out;
    out.push_back(verified("automata.sp.verified", automata.sp, sp_oracle(), verify_depth));
    out.push_back(verified("automata.ep.verified", automata.ep, ep_oracle(), verify_depth));
    out.push_back(verified("automata.rl.verified", automata.rl, rl_oracle(), verify_depth));
    out.push_back(state_count("automata.sp.states", automata.sp, sp_state_count));
    out.push_back(state_count("automata.ep.states", automata.ep, ep_state_count));
    out.push_back(state_count("automata.rl.states", automata.rl, rl_state_count));
    out.push_back(padding_invariant("automata.sp.padding", automata.sp));
    out.push_back(padding_invariant("automata.ep.padding", automata.ep));
    out.push_back(padding_invariant("automata.rl.padding", automata.rl));

    // RL assembled from the three per-value acceptors.
    {
        std::vector<std::pair<Automaton, int>> parts;
        for (int v = 1; v <= 3; ++v) parts.emplace_back(infer_automaton(rl_value_oracle(v), 10, 6), v);
        const Automaton combined = minimize(combine(parts));
        const std::string bound = "depth<=" + std::to_string(verify_depth);
        if (auto word = distinguishing_word(combined, automata.rl, verify_depth)) {
            Witness w;
            w.detail = "combined and direct RL differ on a word of length " + std::to_string(word->size());
            out.push_back(CheckReport::fail("automata.rl.combined", bound, w));
        } else {
            out.push_back(CheckReport::pass("automata.rl.combined", bound));
        }
    }

    const std::string bound = code_bound(max_code_len);

    // ep follows from sp: E[n] = S[n+1] - 1 below the last run, and the last
    // run ends at 2^t - 1.
    {
        std::optional<Witness> w;
        for_each_code(1, max_code_len, [&](const FoldCode& f) {
            const std::size_t t = f.effective_length();
            const std::size_t width = t + 3;
            const std::uint64_t half = pow2(t - 1);
            for (std::uint64_t n = 0; n < pow2(t + 1) && !w; ++n) {
                std::vector<std::uint64_t> expected;
                const std::uint64_t next[] = {n + 1};
                if (n < half) {
                    for (std::uint64_t z : function_values(automata.sp, f, next, width)) {
                        if (z >= 1) expected.push_back(z - 1);
                    }
                } else if (n == half) {
                    expected.push_back(pow2(t) - 1);
                }
                const std::uint64_t args[] = {n};
                const auto actual = function_values(automata.ep, f, args, width);
                if (actual != expected) {
                    w = make_witness(f, {as_int(n), actual.empty() ? -1 : as_int(actual[0])},
                                     "ep disagrees with the value derived from sp");
                }
            }
            return !w;
        });
        out.push_back(w ? CheckReport::fail("automata.ep_from_sp", bound, *w)
                        : CheckReport::pass("automata.ep_from_sp", bound));
    }

    // End-position theorem through the ep automaton.
    {
        std::optional<Witness> w;
        for_each_code(2, max_code_len, [&](const FoldCode& f) {
            const auto predicted = predicted_end_positions(f);
            for (std::size_t n = 1; n <= predicted.size() && !w; ++n) {
                const std::uint64_t args[] = {n};
                const auto actual = function_values(automata.ep, f, args, f.effective_length() + 3);
                if (actual.size() != 1 || actual[0] != predicted[n - 1]) {
                    w = make_witness(f, {as_int(n), as_int(predicted[n - 1])}, "ep automaton misses 2n - eps_n");
                }
            }
            return !w;
        });
        out.push_back(w ? CheckReport::fail("automata.end_positions", bound, *w)
                        : CheckReport::pass("automata.end_positions", bound));
    }

    // Run lengths through the RL automaton, compared with the decomposition.
    {
        std::optional<Witness> w;
        for_each_code(1, max_code_len, [&](const FoldCode& f) {
            const RunDecomposition runs = run_decompose(f);
            const std::size_t width = f.effective_length() + 2;
            for (std::uint64_t n = 0; n < pow2(f.effective_length() + 1) && !w; ++n) {
                const std::uint64_t args[] = {n};
                const int v = evaluate_inputs(automata.rl, f, args, width);
                const int expected = n >= 1 && n <= runs.size() ? static_cast<int>(runs.length(n)) : 0;
                if (v != expected || (n >= 1 && n <= runs.size() && (v < 1 || v > 3))) {
                    w = make_witness(f, {as_int(n), v, expected}, "RL value vs run length");
                }
            }
            return !w;
        });
        out.push_back(w ? CheckReport::fail("automata.run_lengths", bound, *w)
                        : CheckReport::pass("automata.run_lengths", bound));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Regular sequence

namespace {

struct RegularData {
    RunDecomposition runs;                // g = lengths, h = ends
    std::vector<std::uint64_t> t_values;  // t(1), t(2), ...

    std::uint32_t g(std::uint64_t n) const { return runs.length(n); }
    std::uint64_t h(std::uint64_t n) const { return runs.end(n); }
    std::uint64_t t(std::uint64_t n) const { return t_values.at(n - 1); }
};

RegularData regular_data(std::uint64_t max_index) {
    RegularData d;
    std::uint64_t limit = 4 * max_index + 64;
    for (;;) {
        d.t_values = complement_sequence(limit);
        if (d.t_values.size() >= 2 * max_index) break;
        limit *= 2;
    }
    // g is read at h(i) + 1 and t(2i), both below limit.
    d.runs = regular_runs(limit + 1);
    return d;
}

std::optional<std::uint64_t> single_value(const Automaton& a, std::uint64_t n, std::size_t width) {
    const std::uint64_t args[] = {n};
    const auto v = function_values(a, FoldCode(), args, width);
    if (v.size() != 1) return std::nullopt;
    return v[0];
}

int output_at(const Automaton& a, std::uint64_t n) {
    const std::uint64_t args[] = {n};
    return evaluate_inputs(a, FoldCode(), args, width_for(n));
}

Witness index_witness(std::vector<std::int64_t> values, std::string detail) {
    Witness w;
    w.code = "1^w";
    w.values = std::move(values);
    w.detail = std::move(detail);
    return w;
}

CheckReport verdict(const char* name, const std::string& bound, const std::optional<Witness>& w) {
    return w ? CheckReport::fail(name, bound, *w) : CheckReport::pass(name, bound);
}

}  // namespace

std::vector<CheckReport> regular_suite(const RegularAutomata& automata, std::uint64_t max_index,
                                       std::size_t tt_depth) {
    if (max_index < 16) throw InvalidInput("regular suite needs max_index >= 16");
    const RegularData d = regular_data(max_index);
    const std::string bound = "n<=" + std::to_string(max_index);
    const std::size_t value_width = width_for(4 * max_index + 64) + 1;
    std::vector<CheckReport> out;

    // g(n) = 1 exactly when n = 2, 7 (mod 8).
    {
        std::optional<Witness> w;
        for (std::uint64_t n = 1; n <= max_index && !w; ++n) {
            const bool expected = n % 8 == 2 || n % 8 == 7;
            if ((d.g(n) == 1) != expected) w = index_witness({as_int(n), d.g(n)}, "g(n) vs n mod 8");
            const int v = output_at(automata.rlr, n);
            if (!w && (v == 1) != expected) w = index_witness({as_int(n), v}, "RLR(n) vs n mod 8");
        }
        out.push_back(verdict("regular.g_mod8", bound, w));
    }

    // h(n) = 2n for n = 1 (mod 4).
    {
        std::optional<Witness> w;
        for (std::uint64_t n = 1; n <= max_index && !w; n += 4) {
            if (d.h(n) != 2 * n) w = index_witness({as_int(n), as_int(d.h(n))}, "h(n) != 2n");
            const std::uint64_t args[] = {n, 2 * n};
            if (!w && evaluate_inputs(automata.ep_reg, FoldCode(), args, width_for(2 * n)) == 0) {
                w = index_witness({as_int(n), as_int(2 * n)}, "ep_reg rejects (n, 2n)");
            }
        }
        out.push_back(verdict("regular.h_2n", bound, w));
    }

    // The specialized automata agree with the semantic g, h and starts.
    {
        std::optional<Witness> w;
        for (std::uint64_t n = 1; n <= max_index && !w; ++n) {
            const int v = output_at(automata.rlr, n);
            if (v != static_cast<int>(d.g(n))) w = index_witness({as_int(n), v, d.g(n)}, "RLR(n) vs g(n)");
        }
        out.push_back(verdict("regular.rlr_matches", bound, w));
    }
    {
        std::optional<Witness> w;
        for (std::uint64_t n = 0; n <= max_index && !w; ++n) {
            const auto v = single_value(automata.ep_reg, n, value_width);
            if (v != d.h(n)) w = index_witness({as_int(n), as_int(d.h(n))}, "ep_reg(n) vs h(n)");
        }
        out.push_back(verdict("regular.ep_reg_matches", bound, w));
    }
    {
        std::optional<Witness> w;
        for (std::uint64_t n = 0; n <= max_index && !w; ++n) {
            const auto v = single_value(automata.sp_reg, n, value_width);
            if (v != d.runs.start(n)) w = index_witness({as_int(n), as_int(d.runs.start(n))}, "sp_reg(n) vs start");
        }
        out.push_back(verdict("regular.sp_reg_matches", bound, w));
    }
    {
        std::optional<Witness> w;
        for (std::uint64_t n = 1; n <= max_index && !w; ++n) {
            const auto v = single_value(automata.tt, n, value_width);
            if (v != d.t(n)) w = index_witness({as_int(n), as_int(d.t(n))}, "tt(n) vs t(n)");
        }
        out.push_back(verdict("regular.tt_matches", bound, w));
    }

    // Well-formedness of tt for n < 2^depth; values have at most depth + 2 bits.
    {
        const std::uint64_t top = pow2(tt_depth);
        const std::size_t width = tt_depth + 2;
        const std::string tt_bound = "n<2^" + std::to_string(tt_depth);
        std::vector<std::vector<std::uint64_t>> tt(top);
        for (std::uint64_t n = 1; n < top; ++n) {
            const std::uint64_t args[] = {n};
            tt[n] = function_values(automata.tt, FoldCode(), args, width);
        }
        std::optional<Witness> total, functional, increasing, complement;
        for (std::uint64_t n = 1; n < top; ++n) {
            if (!total && tt[n].empty()) total = index_witness({as_int(n)}, "no value");
            if (!functional && tt[n].size() > 1) {
                functional = index_witness({as_int(n), as_int(tt[n][0]), as_int(tt[n][1])}, "two values");
            }
            if (!increasing && n + 1 < top) {
                for (std::uint64_t y : tt[n]) {
                    for (std::uint64_t z : tt[n + 1]) {
                        if (!(y < z) && !increasing) increasing = index_witness({as_int(n), as_int(y), as_int(z)}, "not increasing");
                    }
                }
            }
        }
        // Values of t against one plus the values of ep_reg, for x < 2^depth.
        std::set<std::uint64_t> t_set, h_set;
        for (std::uint64_t n = 1; n < top; ++n) t_set.insert(tt[n].begin(), tt[n].end());
        for (std::uint64_t m = 0; m < top; ++m) {
            const std::uint64_t args[] = {m};
            for (std::uint64_t y : function_values(automata.ep_reg, FoldCode(), args, width)) h_set.insert(y);
        }
        for (std::uint64_t x = 1; x < top && !complement; ++x) {
            const bool in_t = t_set.count(x) != 0;
            const bool in_h = h_set.count(x - 1) != 0;
            if (in_t == in_h) complement = index_witness({as_int(x)}, in_t ? "value of t and in H" : "in neither t nor H");
        }
        out.push_back(verdict("regular.tt_total", tt_bound, total));
        out.push_back(verdict("regular.tt_functional", tt_bound, functional));
        out.push_back(verdict("regular.tt_increasing", tt_bound, increasing));
        out.push_back(verdict("regular.tt_complement", tt_bound, complement));
    }

    // The sum property, semantically and through ep_reg / tt / RLR.
    {
        std::optional<Witness> w;
        for (std::uint64_t i = 0; i <= max_index && !w; ++i) {
            if (d.g(d.h(i) + 1) != 2) w = index_witness({as_int(i), as_int(d.h(i) + 1)}, "g(h(i)+1) != 2");
            if (w || i == 0) continue;
            const auto x = single_value(automata.ep_reg, i, value_width);
            if (!x || output_at(automata.rlr, *x + 1) != 2) w = index_witness({as_int(i)}, "RLR[ep_reg(i)+1] != 2");
        }
        out.push_back(verdict("regular.sum_a", bound, w));
    }
    for (const auto& [name, parity, value] : {std::tuple{"regular.sum_b", 0, 3}, std::tuple{"regular.sum_c", 1, 1}}) {
        std::optional<Witness> w;
        for (std::uint64_t i = 1; i <= max_index && !w; ++i) {
            const std::uint64_t k = 2 * i - static_cast<std::uint64_t>(parity);
            if (static_cast<int>(d.g(d.t(k))) != value) {
                w = index_witness({as_int(i), as_int(d.t(k)), d.g(d.t(k))}, "g(t(k)) for k = " + std::to_string(k));
            }
            if (w) break;
            const auto x = single_value(automata.tt, k, value_width);
            if (!x || output_at(automata.rlr, *x) != value) {
                w = index_witness({as_int(i)}, "RLR[tt(k)] for k = " + std::to_string(k));
            }
        }
        out.push_back(verdict(name, bound, w));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Continued fractions

CheckReport check_worked_example() {
    const char* name = "cf.worked_example";
    const std::vector<Sign> eps{Sign::plus, Sign::minus, Sign::minus, Sign::plus};
    const BigRational value(BigInt(3472818177ULL), BigInt(1) << 32);
    const ContinuedFraction expected = make_cf({0, 1, 4, 4, 2, 6, 4, 2, 4, 4, 6, 4, 2, 4, 6, 2, 4, 5});
    Witness w;
    w.code = format_sign_vector(eps);
    if (alpha_value(eps) != value) {
        w.detail = "alpha is not 3472818177/2^32";
        return CheckReport::fail(name, "n=5", w);
    }
    const ContinuedFraction computed = cf_from_rational(value);
    if (!(computed == expected)) {
        w.detail = "expansion " + computed.to_string();
        return CheckReport::fail(name, "n=5", w);
    }
    const ContinuedFraction predicted = predicted_cf(eps);
    if (!(predicted == expected)) {
        w.detail = "prediction " + predicted.to_string();
        return CheckReport::fail(name, "n=5", w);
    }
    return CheckReport::pass(name, "n=5");
}

CheckReport check_folding_lemma(std::size_t samples, std::uint64_t seed) {
    const char* name = "cf.folding_lemma";
    const std::string bound = std::to_string(samples) + " samples";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> half_length(0, 40);
    std::uniform_int_distribution<int> quotient(1, 1000);
    std::bernoulli_distribution coin;
    for (std::size_t s = 0; s < samples; ++s) {
        ContinuedFraction cf = make_cf({0});
        const int t = 2 * half_length(rng) + 1;
        for (int i = 0; i < t; ++i) cf.terms.emplace_back(quotient(rng));
        const Sign eps = coin(rng) ? Sign::plus : Sign::minus;
        const BigRational before = cf_to_rational(cf);
        const BigInt q = denominator(before);
        const BigRational expected = before + BigRational(BigInt(to_int(eps)), q * q);
        const BigRational after = cf_to_rational(fold_step(cf, eps));
        if (after != expected) {
            Witness w;
            w.code = cf.to_string();
            w.values = {to_int(eps)};
            w.detail = "fold changes the value by something other than eps/q^2";
            return CheckReport::fail(name, bound, w);
        }
    }
    return CheckReport::pass(name, bound);
}

CheckReport check_inductive_step(std::size_t n_max) {
    const char* name = "cf.inductive_step";
    const std::string bound = "n<=" + std::to_string(n_max);
    for (std::size_t n = 2; n < n_max; ++n) {
        const std::size_t k = n - 1;
        for (std::uint64_t mask = 0; mask < pow2(k); ++mask) {
            std::vector<Sign> eps(k);
            for (std::size_t i = 0; i < k; ++i) eps[i] = ((mask >> i) & 1U) != 0 ? Sign::minus : Sign::plus;
            const ContinuedFraction base = set_parity(predicted_cf(eps), Parity::odd);
            for (Sign next : {Sign::plus, Sign::minus}) {
                std::vector<Sign> extended = eps;
                extended.push_back(next);
                const ContinuedFraction folded = canonicalize(fold_step(base, next));
                const ContinuedFraction predicted = canonicalize(predicted_cf(extended));
                if (!(folded == predicted)) {
                    Witness w;
                    w.code = format_sign_vector(extended);
                    w.detail = "folded " + folded.to_string() + " predicted " + predicted.to_string();
                    return CheckReport::fail(name, bound, w);
                }
            }
        }
    }
    return CheckReport::pass(name, bound);
}

std::vector<CheckReport> cf_suite(std::size_t n_max, std::size_t samples, std::uint64_t seed) {
    return {cf_theorem_check(n_max), check_worked_example(), check_folding_lemma(samples, seed),
            check_inductive_step(n_max)};
}

}  // namespace foldrun
