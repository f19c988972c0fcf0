#include "foldrun/inference.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "foldrun/errors.hpp"

namespace foldrun {

namespace {

// Tracks read by suffix probes: everything except a function's value track.
TrackAlphabet input_alphabet(const Oracle& o) {
    const std::size_t in_tracks =
        o.alphabet.track_count() - (o.kind == OracleKind::function ? 1 : 0);
    std::vector<std::vector<int>> tracks;
    for (std::size_t i = 0; i < in_tracks; ++i) {
        const auto t = o.alphabet.track(i);
        tracks.emplace_back(t.begin(), t.end());
    }
    return TrackAlphabet(std::move(tracks));
}

void require_binary_numeric_tracks(const TrackAlphabet& alphabet) {
    const std::size_t first = alphabet.has_code_track() ? 1 : 0;
    for (std::size_t i = first; i < alphabet.track_count(); ++i) {
        const auto t = alphabet.track(i);
        if (t.size() != 2 || t[0] != 0 || t[1] != 1) throw InvalidInput("numeric tracks must be binary");
    }
}

struct Suffix {
    std::size_t length = 0;
    std::vector<int> code;
    bool code_valid = true;
    bool code_nonzero = false;
    std::vector<std::uint64_t> values;  // one per numeric input track, lsd first
};

using Signature = std::vector<std::int64_t>;

struct SignatureHash {
    std::size_t operator()(const Signature& s) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (std::int64_t v : s) h = (h ^ static_cast<std::size_t>(v + 2)) * 1099511628211ULL;
        return h;
    }
};

class Prober {
public:
    Prober(const Oracle& oracle, std::size_t test_depth) : oracle_(oracle), inputs_(input_alphabet(oracle)) {
        const bool code = oracle.code_track();
        const std::size_t numeric = inputs_.track_count() - (code ? 1 : 0);
        std::vector<Symbol> digits;
        for (std::size_t len = 0; len <= test_depth; ++len) {
            digits.assign(len, 0);
            while (true) {
                Suffix s;
                s.length = len;
                s.values.assign(numeric, 0);
                for (std::size_t i = 0; i < len; ++i) {
                    const Letter l = inputs_.letter(digits[i]);
                    if (code) s.code.push_back(l[0]);
                    for (std::size_t k = 0; k < numeric; ++k) {
                        if (l[k + (code ? 1 : 0)] != 0) s.values[k] |= std::uint64_t{1} << i;
                    }
                }
                s.code_valid = is_valid_code(s.code);
                s.code_nonzero = std::any_of(s.code.begin(), s.code.end(), [](int c) { return c != 0; });
                suffixes_.push_back(std::move(s));
                // Odometer over the input alphabet.
                std::size_t pos = 0;
                while (pos < len && ++digits[pos] == inputs_.size()) digits[pos++] = 0;
                if (pos == len) break;
            }
        }
    }

    Signature signature(std::span<const Letter> prefix) const {
        const bool code_track = oracle_.code_track();
        const DecodedInputs p = decode_inputs(prefix, code_track);
        const std::size_t m = prefix.size();
        const bool prefix_valid = is_valid_code(p.code);
        const bool prefix_closed = std::find(p.code.begin(), p.code.end(), 0) != p.code.end();
        std::vector<Sign> instructions;
        for (int c : p.code) {
            if (c != 0) instructions.push_back(c > 0 ? Sign::plus : Sign::minus);
        }
        const std::size_t n_in = oracle_.argument_count();
        std::vector<std::uint64_t> nums(n_in, 0);
        const std::uint64_t x_prefix = oracle_.kind == OracleKind::function && m > 0 ? p.nums.back() : 0;
        std::vector<Sign> joined;

        Signature sig;
        sig.reserve(suffixes_.size());
        for (const Suffix& s : suffixes_) {
            if (code_track && (!prefix_valid || !s.code_valid || (prefix_closed && s.code_nonzero))) {
                sig.push_back(oracle_.kind == OracleKind::function ? -1 : 0);
                continue;
            }
            joined = instructions;
            for (int c : s.code) {
                if (c != 0) joined.push_back(c > 0 ? Sign::plus : Sign::minus);
            }
            const FoldCode f = FoldCode::from_signs(joined);
            for (std::size_t k = 0; k < n_in; ++k) {
                nums[k] = (m > 0 ? p.nums[k] : 0) | (s.values[k] << m);
            }
            switch (oracle_.kind) {
                case OracleKind::relation:
                    sig.push_back(oracle_.relation(f, nums) ? 1 : 0);
                    break;
                case OracleKind::output:
                    sig.push_back(oracle_.output(f, nums));
                    break;
                case OracleKind::function: {
                    const auto v = oracle_.function(f, nums);
                    const std::size_t width = m + s.length;
                    const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
                    if (!v.has_value() || (width < 64 && *v >= (std::uint64_t{1} << width)) ||
                        (*v & mask) != x_prefix) {
                        sig.push_back(-1);
                    } else {
                        sig.push_back(static_cast<std::int64_t>(*v >> m));
                    }
                    break;
                }
            }
        }
        return sig;
    }

    // Verdict of the probed word itself (the empty suffix comes first).
    int value_of(const Signature& sig) const {
        return oracle_.kind == OracleKind::function ? (sig[0] == 0 ? 1 : 0) : static_cast<int>(sig[0]);
    }

private:
    const Oracle& oracle_;
    TrackAlphabet inputs_;
    std::vector<Suffix> suffixes_;
};

std::string describe(std::span<const Letter> word) {
    std::string out = "[";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i != 0) out += ' ';
        out += '(' + format_letter(word[i]) + ')';
    }
    return out + "]";
}

}  // namespace

std::string Counterexample::to_string() const {
    return describe(word) + " expected " + std::to_string(expected) + " got " + std::to_string(actual);
}

Automaton infer_automaton(const Oracle& oracle, std::size_t sample_depth, std::size_t test_depth) {
    if (sample_depth < 1 || test_depth < 1) throw InvalidInput("inference depths must be at least 1");
    if (sample_depth + test_depth > 60) throw InvalidInput("inference depths too large");
    require_binary_numeric_tracks(oracle.alphabet);
    const TrackAlphabet& alphabet = oracle.alphabet;
    const Prober prober(oracle, test_depth);

    std::vector<std::vector<Letter>> reps{{}};
    std::unordered_map<Signature, Automaton::State, SignatureHash> classes;
    std::vector<int> values;
    {
        Signature sig = prober.signature(reps[0]);
        values.push_back(prober.value_of(sig));
        classes.emplace(std::move(sig), 0);
    }
    std::vector<std::vector<Automaton::State>> delta;
    for (std::size_t q = 0; q < reps.size(); ++q) {
        delta.emplace_back(alphabet.size(), 0);
        for (Symbol s = 0; s < alphabet.size(); ++s) {
            std::vector<Letter> w = reps[q];
            w.push_back(alphabet.letter(s));
            Signature sig = prober.signature(w);
            auto it = classes.find(sig);
            if (it == classes.end()) {
                if (w.size() > sample_depth) {
                    throw InferenceError(oracle.name + ": hypothesis not closed within sample depth " +
                                         std::to_string(sample_depth) + "; new class at " + describe(w));
                }
                const auto id = static_cast<Automaton::State>(reps.size());
                values.push_back(prober.value_of(sig));
                reps.push_back(std::move(w));
                it = classes.emplace(std::move(sig), id).first;
            }
            delta[q][s] = it->second;
        }
    }

    const Mode mode = oracle.kind == OracleKind::output ? Mode::output : Mode::accept;
    Automaton hypothesis(alphabet, mode, reps.size());
    for (std::size_t q = 0; q < reps.size(); ++q) {
        const auto state = static_cast<Automaton::State>(q);
        hypothesis.set_value(state, values[q]);
        for (Symbol s = 0; s < alphabet.size(); ++s) hypothesis.set_next(state, s, delta[q][s]);
    }

    if (const auto cex = verify_exhaustive(hypothesis, oracle, sample_depth)) {
        const Word w = to_symbols(alphabet, cex->word);
        const auto cls = hypothesis.run(w);
        throw InferenceError(oracle.name + ": inconsistent class: " + describe(cex->word) + " has label " +
                             std::to_string(cex->expected) + " but shares a class with representative " +
                             describe(reps[cls]) + " labelled " + std::to_string(cex->actual));
    }
    return minimize(hypothesis);
}

namespace {

class Verifier {
public:
    Verifier(const Automaton& a, const Oracle& o, std::size_t depth)
        : a_(a), o_(o), depth_(depth), inputs_(input_alphabet(o)) {
        code_track_ = o.code_track();
        const std::size_t numeric = o.alphabet.track_count() - (code_track_ ? 1 : 0);
        nums_.assign(numeric, 0);
        counts_.assign(depth + 1, std::vector<std::uint64_t>(a.state_count(), 0));
        states_.assign(depth + 1, 0);
    }

    std::optional<Counterexample> run() {
        if (o_.kind == OracleKind::function) {
            counts_[0][0] = 1;
            visit_function(0);
        } else {
            visit_plain(0);
        }
        return found_;
    }

private:
    bool closed() const { return code_track_ && !code_.empty() && code_.back() == 0; }

    FoldCode current_code() const { return code_track_ ? FoldCode(code_) : FoldCode(); }

    std::vector<Letter> current_word(std::optional<std::uint64_t> x) const {
        std::vector<Letter> w;
        for (std::size_t i = 0; i < input_stack_.size(); ++i) {
            Letter l = inputs_.letter(input_stack_[i]);
            if (x.has_value()) l.push_back(i < 64 ? static_cast<int>((*x >> i) & 1U) : 0);
            w.push_back(std::move(l));
        }
        return w;
    }

    bool allowed(Symbol s) const { return !closed() || inputs_.component(s, 0) == 0; }

    void push(Symbol s) {
        const std::size_t level = input_stack_.size();
        input_stack_.push_back(s);
        const std::size_t first = code_track_ ? 1 : 0;
        if (code_track_) code_.push_back(inputs_.component(s, 0));
        for (std::size_t k = 0; k + first < inputs_.track_count(); ++k) {
            if (inputs_.component(s, k + first) != 0) nums_[k] |= std::uint64_t{1} << level;
        }
    }

    void pop() {
        const std::size_t level = input_stack_.size() - 1;
        input_stack_.pop_back();
        if (code_track_) code_.pop_back();
        for (auto& v : nums_) v &= ~(std::uint64_t{1} << level);
    }

    void visit_function(std::size_t level) {
        check_function(level);
        if (found_ || level == depth_) return;
        const auto& cur = counts_[level];
        auto& nxt = counts_[level + 1];
        for (Symbol s = 0; s < inputs_.size() && !found_; ++s) {
            if (!allowed(s)) continue;
            std::fill(nxt.begin(), nxt.end(), 0);
            for (std::size_t q = 0; q < cur.size(); ++q) {
                if (cur[q] == 0) continue;
                for (Symbol b = 0; b < 2; ++b) nxt[a_.next(static_cast<Automaton::State>(q), 2 * s + b)] += cur[q];
            }
            push(s);
            visit_function(level + 1);
            pop();
        }
    }

    void check_function(std::size_t level) {
        const FoldCode f = current_code();
        const auto args = std::span<const std::uint64_t>(nums_).first(nums_.size() - 1);
        const auto v = o_.function(f, args);
        const bool expected = v.has_value() && (level >= 64 || *v < (std::uint64_t{1} << level));
        std::uint64_t total = 0;
        for (std::size_t q = 0; q < counts_[level].size(); ++q) {
            if (a_.accepting(static_cast<Automaton::State>(q))) total += counts_[level][q];
        }
        if (expected) {
            const auto word = current_word(*v);
            if (!a_.accepts(to_symbols(a_.alphabet(), word))) {
                found_ = Counterexample{word, 1, 0};
                return;
            }
            if (total == 1) return;
        } else if (total == 0) {
            return;
        }
        for (std::uint64_t x : function_values(a_, f, args, level)) {
            if (!expected || x != *v) {
                found_ = Counterexample{current_word(x), 0, 1};
                return;
            }
        }
    }

    void visit_plain(std::size_t level) {
        const int want = o_.label(DecodedInputs{code_, nums_});
        const int got = a_.value(states_[level]);
        if (want != got) {
            found_ = Counterexample{current_word(std::nullopt), want, got};
            return;
        }
        if (level == depth_) return;
        for (Symbol s = 0; s < inputs_.size() && !found_; ++s) {
            if (!allowed(s)) continue;
            states_[level + 1] = a_.next(states_[level], s);
            push(s);
            visit_plain(level + 1);
            pop();
        }
    }

    const Automaton& a_;
    const Oracle& o_;
    std::size_t depth_;
    TrackAlphabet inputs_;
    bool code_track_ = false;
    std::vector<int> code_;
    std::vector<std::uint64_t> nums_;
    std::vector<Symbol> input_stack_;
    std::vector<std::vector<std::uint64_t>> counts_;
    std::vector<Automaton::State> states_;
    std::optional<Counterexample> found_;
};

}  // namespace

std::optional<Counterexample> verify_exhaustive(const Automaton& a, const Oracle& oracle, std::size_t depth) {
    if (!(a.alphabet() == oracle.alphabet)) throw InvalidInput("automaton alphabet does not match oracle");
    if ((a.mode() == Mode::output) != (oracle.kind == OracleKind::output)) {
        throw InvalidInput("automaton mode does not match oracle kind");
    }
    if (depth > 62) throw InvalidInput("verification depth too large");
    require_binary_numeric_tracks(oracle.alphabet);
    Verifier v(a, oracle, depth);
    return v.run();
}

namespace {

std::vector<Letter> encode_for(const Automaton& a, const FoldCode& code, std::span<const std::uint64_t> nums,
                               std::size_t width) {
    return a.alphabet().has_code_track() ? encode_inputs(code, nums, width) : encode_numbers(nums, width);
}

}  // namespace

std::vector<std::uint64_t> function_values(const Automaton& a, const FoldCode& code,
                                           std::span<const std::uint64_t> args, std::size_t width) {
    if (width > 63) throw InvalidInput("width too large");
    const std::vector<Letter> inputs = encode_for(a, code, args, width);
    // sym[i][b]: full symbol at position i with value bit b.
    std::vector<std::array<Symbol, 2>> sym(width);
    for (std::size_t i = 0; i < width; ++i) {
        Letter l = inputs[i];
        l.push_back(0);
        sym[i][0] = a.alphabet().index(l);
        l.back() = 1;
        sym[i][1] = a.alphabet().index(l);
    }
    const std::size_t n = a.state_count();
    std::vector<std::vector<char>> live(width + 1, std::vector<char>(n, 0));
    for (std::size_t q = 0; q < n; ++q) live[width][q] = a.accepting(static_cast<Automaton::State>(q)) ? 1 : 0;
    for (std::size_t i = width; i-- > 0;) {
        for (std::size_t q = 0; q < n; ++q) {
            const auto st = static_cast<Automaton::State>(q);
            live[i][q] = (live[i + 1][a.next(st, sym[i][0])] || live[i + 1][a.next(st, sym[i][1])]) ? 1 : 0;
        }
    }
    std::vector<std::uint64_t> out;
    if (!live[0][0]) return out;
    struct Frame {
        std::size_t pos;
        Automaton::State q;
        std::uint64_t x;
    };
    std::vector<Frame> stack{{0, 0, 0}};
    while (!stack.empty()) {
        const Frame fr = stack.back();
        stack.pop_back();
        if (fr.pos == width) {
            out.push_back(fr.x);
            continue;
        }
        for (std::uint64_t b = 0; b < 2; ++b) {
            const auto to = a.next(fr.q, sym[fr.pos][b]);
            if (live[fr.pos + 1][to]) stack.push_back({fr.pos + 1, to, fr.x | (b << fr.pos)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int evaluate_inputs(const Automaton& a, const FoldCode& code, std::span<const std::uint64_t> nums,
                    std::size_t width) {
    return a.evaluate(to_symbols(a.alphabet(), encode_for(a, code, nums, width)));
}

std::vector<std::pair<Automaton::State, Symbol>> universe_transitions(const Automaton& a, std::size_t depth) {
    const bool code = a.alphabet().has_code_track();
    // (state, closed) pairs with their shortest distance from the start.
    std::set<std::pair<Automaton::State, bool>> seen{{0, false}};
    std::deque<std::tuple<Automaton::State, bool, std::size_t>> queue{{0, false, 0}};
    std::set<std::pair<Automaton::State, Symbol>> used;
    while (!queue.empty()) {
        const auto [q, closed, dist] = queue.front();
        queue.pop_front();
        if (dist == depth) continue;
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            const int c = code ? a.alphabet().component(s, 0) : 0;
            if (closed && c != 0) continue;
            used.emplace(q, s);
            const std::pair<Automaton::State, bool> to{a.next(q, s), code && (closed || c == 0)};
            if (seen.insert(to).second) queue.emplace_back(to.first, to.second, dist + 1);
        }
    }
    return {used.begin(), used.end()};
}

}  // namespace foldrun
