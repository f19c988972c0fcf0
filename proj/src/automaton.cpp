#include "foldrun/automaton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "foldrun/errors.hpp"

namespace foldrun {

TrackAlphabet::TrackAlphabet(std::vector<std::vector<int>> tracks) : tracks_(std::move(tracks)) {
    if (tracks_.empty()) throw InvalidInput("alphabet needs at least one track");
    for (const auto& t : tracks_) {
        if (t.empty() || !std::is_sorted(t.begin(), t.end()) ||
            std::adjacent_find(t.begin(), t.end()) != t.end()) {
            throw InvalidInput("track symbols must be nonempty and strictly increasing");
        }
    }
    strides_.assign(tracks_.size(), 1);
    for (std::size_t i = tracks_.size() - 1; i-- > 0;) strides_[i] = strides_[i + 1] * tracks_[i + 1].size();
    size_ = strides_[0] * tracks_[0].size();
}

TrackAlphabet TrackAlphabet::code_and_numbers(std::size_t numeric) {
    std::vector<std::vector<int>> tracks{{-1, 0, 1}};
    tracks.insert(tracks.end(), numeric, std::vector<int>{0, 1});
    return TrackAlphabet(std::move(tracks));
}

TrackAlphabet TrackAlphabet::numbers(std::size_t numeric) {
    return TrackAlphabet(std::vector<std::vector<int>>(numeric, std::vector<int>{0, 1}));
}

Symbol TrackAlphabet::index(std::span<const int> letter) const {
    if (letter.size() != tracks_.size()) throw InvalidInput("letter arity does not match track count");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < tracks_.size(); ++i) {
        const auto& t = tracks_[i];
        const auto it = std::lower_bound(t.begin(), t.end(), letter[i]);
        if (it == t.end() || *it != letter[i]) {
            throw InvalidInput("symbol " + std::to_string(letter[i]) + " not in track " + std::to_string(i));
        }
        idx += static_cast<std::size_t>(it - t.begin()) * strides_[i];
    }
    return static_cast<Symbol>(idx);
}

Letter TrackAlphabet::letter(Symbol s) const {
    Letter out(tracks_.size());
    for (std::size_t i = 0; i < tracks_.size(); ++i) out[i] = component(s, i);
    return out;
}

int TrackAlphabet::component(Symbol s, std::size_t track) const {
    return tracks_[track][(s / strides_[track]) % tracks_[track].size()];
}

bool TrackAlphabet::has_code_track() const noexcept {
    return !tracks_.empty() && tracks_[0] == std::vector<int>{-1, 0, 1};
}

std::string format_letter(const Letter& letter, char sep) {
    std::string out;
    for (std::size_t i = 0; i < letter.size(); ++i) {
        if (i != 0) out.push_back(sep);
        out += std::to_string(letter[i]);
    }
    return out;
}

Automaton::Automaton(TrackAlphabet alphabet, Mode mode, std::size_t states)
    : alphabet_(std::move(alphabet)), mode_(mode), values_(states, 0), delta_(states * alphabet_.size(), 0) {}

void Automaton::set_next(State q, Symbol s, State to) {
    if (q >= state_count() || to >= state_count() || s >= alphabet_.size()) {
        throw InvalidInput("transition out of range");
    }
    delta_[q * alphabet_.size() + s] = to;
}

void Automaton::set_value(State q, int v) {
    if (q >= state_count()) throw InvalidInput("state out of range");
    if (mode_ == Mode::accept && v != 0 && v != 1) throw InvalidInput("acceptance value must be 0 or 1");
    values_[q] = v;
}

Automaton::State Automaton::add_state(int value) {
    const auto q = static_cast<State>(values_.size());
    values_.push_back(0);
    delta_.resize(delta_.size() + alphabet_.size(), 0);
    set_value(q, value);
    return q;
}

Automaton::State Automaton::run(std::span<const Symbol> word, State from) const noexcept {
    State q = from;
    for (Symbol s : word) q = next(q, s);
    return q;
}

void Automaton::validate() const {
    if (values_.empty()) throw InvalidInput("automaton has no states");
    if (delta_.size() != values_.size() * alphabet_.size()) throw InvalidInput("transition table size mismatch");
    for (State to : delta_) {
        if (to >= state_count()) throw InvalidInput("transition target out of range");
    }
    if (mode_ == Mode::accept) {
        for (int v : values_) {
            if (v != 0 && v != 1) throw InvalidInput("acceptance value must be 0 or 1");
        }
    }
}

std::vector<Letter> encode_inputs(const FoldCode& f, std::span<const std::uint64_t> nums, std::size_t width) {
    if (width < f.effective_length()) throw InvalidInput("width shorter than the instruction code");
    std::vector<Letter> out = encode_numbers(nums, width);
    for (std::size_t i = 0; i < width; ++i) {
        const int c = i < f.effective_length() ? to_int(f[i]) : 0;
        out[i].insert(out[i].begin(), c);
    }
    return out;
}

std::vector<Letter> encode_numbers(std::span<const std::uint64_t> nums, std::size_t width) {
    for (std::uint64_t v : nums) {
        if (static_cast<std::size_t>(std::bit_width(v)) > width) {
            throw InvalidInput("width " + std::to_string(width) + " too small for " + std::to_string(v));
        }
    }
    std::vector<Letter> out(width);
    for (std::size_t i = 0; i < width; ++i) {
        out[i].reserve(nums.size() + 1);
        for (std::uint64_t v : nums) out[i].push_back(i < 64 ? static_cast<int>((v >> i) & 1U) : 0);
    }
    return out;
}

DecodedInputs decode_inputs(std::span<const Letter> word, bool code_track) {
    DecodedInputs out;
    if (word.empty()) return out;
    const std::size_t first = code_track ? 1 : 0;
    out.nums.assign(word[0].size() - first, 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (code_track) out.code.push_back(word[i][0]);
        for (std::size_t k = first; k < word[i].size(); ++k) {
            if (word[i][k] != 0 && i < 64) out.nums[k - first] |= std::uint64_t{1} << i;
        }
    }
    return out;
}

Word to_symbols(const TrackAlphabet& alphabet, std::span<const Letter> letters) {
    Word out;
    out.reserve(letters.size());
    for (const auto& l : letters) out.push_back(alphabet.index(l));
    return out;
}

std::vector<Letter> to_letters(const TrackAlphabet& alphabet, std::span<const Symbol> word) {
    std::vector<Letter> out;
    out.reserve(word.size());
    for (Symbol s : word) out.push_back(alphabet.letter(s));
    return out;
}

namespace {

std::vector<Automaton::State> bfs_order(const Automaton& a) {
    std::vector<Automaton::State> order{0};
    std::vector<bool> seen(a.state_count(), false);
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            const auto to = a.next(order[i], s);
            if (!seen[to]) {
                seen[to] = true;
                order.push_back(to);
            }
        }
    }
    return order;
}

}  // namespace

Automaton canonical(const Automaton& a) {
    a.validate();
    const auto order = bfs_order(a);
    std::vector<Automaton::State> rename(a.state_count(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = static_cast<Automaton::State>(i);
    Automaton out(a.alphabet(), a.mode(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto q = static_cast<Automaton::State>(i);
        out.set_value(q, a.value(order[i]));
        for (Symbol s = 0; s < a.alphabet().size(); ++s) out.set_next(q, s, rename[a.next(order[i], s)]);
    }
    return out;
}

Automaton minimize(const Automaton& input) {
    const Automaton a = canonical(input);
    const std::size_t n = a.state_count();
    const std::size_t k = a.alphabet().size();

    // Initial partition by value, then refine by successor classes.
    std::vector<std::uint32_t> cls(n);
    {
        std::map<int, std::uint32_t> ids;
        for (std::size_t q = 0; q < n; ++q) {
            cls[q] = ids.try_emplace(a.value(static_cast<Automaton::State>(q)), ids.size()).first->second;
        }
    }
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> refined(n);
        std::vector<std::uint32_t> key(k + 1);
        for (std::size_t q = 0; q < n; ++q) {
            key[0] = cls[q];
            for (Symbol s = 0; s < k; ++s) key[s + 1] = cls[a.next(static_cast<Automaton::State>(q), s)];
            refined[q] = ids.try_emplace(key, ids.size()).first->second;
        }
        cls = std::move(refined);
        if (ids.size() == classes) break;
        classes = ids.size();
    }

    Automaton quotient(a.alphabet(), a.mode(), classes);
    for (std::size_t q = 0; q < n; ++q) {
        const auto c = static_cast<Automaton::State>(cls[q]);
        quotient.set_value(c, a.value(static_cast<Automaton::State>(q)));
        for (Symbol s = 0; s < k; ++s) quotient.set_next(c, s, cls[a.next(static_cast<Automaton::State>(q), s)]);
    }
    // Class of the initial state must become state 0.
    Automaton rooted(quotient.alphabet(), quotient.mode(), classes);
    std::vector<Automaton::State> swap(classes);
    for (std::size_t c = 0; c < classes; ++c) swap[c] = static_cast<Automaton::State>(c);
    std::swap(swap[0], swap[cls[0]]);
    for (std::size_t c = 0; c < classes; ++c) {
        const auto from = static_cast<Automaton::State>(c);
        rooted.set_value(swap[from], quotient.value(from));
        for (Symbol s = 0; s < k; ++s) rooted.set_next(swap[from], s, swap[quotient.next(from, s)]);
    }
    return canonical(rooted);
}

std::optional<Word> distinguishing_word(const Automaton& a, const Automaton& b, std::size_t depth) {
    if (!(a.alphabet() == b.alphabet())) throw InvalidInput("alphabet mismatch");
    if (a.mode() != b.mode()) throw InvalidInput("mode mismatch");
    using Pair = std::pair<Automaton::State, Automaton::State>;
    std::map<Pair, std::pair<Pair, Symbol>> parent;
    std::deque<std::pair<Pair, std::size_t>> queue;
    const Pair root{0, 0};
    parent.emplace(root, std::make_pair(root, Symbol{0}));
    queue.emplace_back(root, 0);
    while (!queue.empty()) {
        const auto [p, len] = queue.front();
        queue.pop_front();
        if (a.value(p.first) != b.value(p.second)) {
            Word w;
            for (Pair cur = p; cur != root;) {
                const auto& [prev, sym] = parent.at(cur);
                w.push_back(sym);
                cur = prev;
            }
            std::reverse(w.begin(), w.end());
            return w;
        }
        if (len == depth) continue;
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            const Pair to{a.next(p.first, s), b.next(p.second, s)};
            if (parent.emplace(to, std::make_pair(p, s)).second) queue.emplace_back(to, len + 1);
        }
    }
    return std::nullopt;
}

Automaton combine(std::span<const std::pair<Automaton, int>> parts) {
    if (parts.empty()) throw InvalidInput("combine needs at least one part");
    const TrackAlphabet& alphabet = parts[0].first.alphabet();
    for (const auto& [part, value] : parts) {
        if (!(part.alphabet() == alphabet) || part.mode() != Mode::accept) {
            throw InvalidInput("combine parts must be acceptors over one alphabet");
        }
    }
    using Tuple = std::vector<Automaton::State>;
    std::map<Tuple, Automaton::State> ids;
    std::vector<Tuple> states{Tuple(parts.size(), 0)};
    ids.emplace(states[0], 0);
    Automaton out(alphabet, Mode::output, 0);
    for (std::size_t i = 0; i < states.size(); ++i) {
        int v = 0;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (parts[p].first.accepting(states[i][p])) {
                v = parts[p].second;
                break;
            }
        }
        out.add_state(v);
    }
    // States are discovered lazily; grow the table as targets appear.
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (Symbol s = 0; s < alphabet.size(); ++s) {
            Tuple to(parts.size());
            for (std::size_t p = 0; p < parts.size(); ++p) to[p] = parts[p].first.next(states[i][p], s);
            auto [it, fresh] = ids.try_emplace(to, static_cast<Automaton::State>(states.size()));
            if (fresh) {
                states.push_back(to);
                int v = 0;
                for (std::size_t p = 0; p < parts.size(); ++p) {
                    if (parts[p].first.accepting(to[p])) {
                        v = parts[p].second;
                        break;
                    }
                }
                out.add_state(v);
            }
            out.set_next(static_cast<Automaton::State>(i), s, it->second);
        }
    }
    return minimize(out);
}

void write_automaton(const Automaton& a, std::ostream& out) {
    const TrackAlphabet& alpha = a.alphabet();
    out << "tracks " << alpha.track_count() << '\n';
    for (std::size_t i = 0; i < alpha.track_count(); ++i) {
        out << "track " << i;
        for (int s : alpha.track(i)) out << ' ' << s;
        out << '\n';
    }
    out << "mode " << (a.mode() == Mode::accept ? "accept" : "output") << '\n';
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        out << "state " << q << ' ' << a.value(static_cast<Automaton::State>(q)) << '\n';
    }
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        for (Symbol s = 0; s < alpha.size(); ++s) {
            out << "trans " << q << ' ' << format_letter(alpha.letter(s), ';') << ' '
                << a.next(static_cast<Automaton::State>(q), s) << '\n';
        }
    }
}

std::string write_automaton(const Automaton& a) {
    std::ostringstream out;
    write_automaton(a, out);
    return out.str();
}

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-empty line split into fields; false at end of input.
    bool next(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            std::istringstream ss(line);
            fields.clear();
            for (std::string f; ss >> f;) fields.push_back(f);
            if (!fields.empty()) return true;
        }
        ++number_;
        return false;
    }

    std::size_t line() const noexcept { return number_; }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

long long parse_int(const std::string& s, std::size_t line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
    return v;
}

void expect(const std::vector<std::string>& fields, const std::string& keyword, std::size_t arity,
            std::size_t line) {
    if (fields[0] != keyword) throw ParseError(line, "expected '" + keyword + "', got '" + fields[0] + "'");
    if (arity != 0 && fields.size() != arity) throw ParseError(line, "wrong number of fields for " + keyword);
}

}  // namespace

Automaton read_automaton(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> f;
    if (!reader.next(f)) throw ParseError(reader.line(), "empty automaton file");
    expect(f, "tracks", 2, reader.line());
    const long long k = parse_int(f[1], reader.line());
    if (k < 1 || k > 16) throw ParseError(reader.line(), "track count out of range");

    std::vector<std::vector<int>> tracks;
    for (long long i = 0; i < k; ++i) {
        if (!reader.next(f)) throw ParseError(reader.line(), "truncated: missing track line");
        expect(f, "track", 0, reader.line());
        if (f.size() < 3 || parse_int(f[1], reader.line()) != i) throw ParseError(reader.line(), "bad track line");
        std::vector<int> symbols;
        for (std::size_t j = 2; j < f.size(); ++j) symbols.push_back(static_cast<int>(parse_int(f[j], reader.line())));
        tracks.push_back(std::move(symbols));
    }
    TrackAlphabet alphabet;
    try {
        alphabet = TrackAlphabet(tracks);
    } catch (const InvalidInput& e) {
        throw ParseError(reader.line(), e.what());
    }

    if (!reader.next(f)) throw ParseError(reader.line(), "truncated: missing mode line");
    expect(f, "mode", 2, reader.line());
    Mode mode = Mode::accept;
    if (f[1] == "output") {
        mode = Mode::output;
    } else if (f[1] != "accept") {
        throw ParseError(reader.line(), "mode must be accept or output");
    }

    std::vector<int> values;
    bool more = reader.next(f);
    while (more && f[0] == "state") {
        expect(f, "state", 3, reader.line());
        if (parse_int(f[1], reader.line()) != static_cast<long long>(values.size())) {
            throw ParseError(reader.line(), "state ids must be consecutive from 0");
        }
        const long long v = parse_int(f[2], reader.line());
        if (mode == Mode::accept && v != 0 && v != 1) throw ParseError(reader.line(), "acceptance must be 0 or 1");
        values.push_back(static_cast<int>(v));
        more = reader.next(f);
    }
    if (values.empty()) throw ParseError(reader.line(), "no states");

    Automaton a(alphabet, mode, values.size());
    for (std::size_t q = 0; q < values.size(); ++q) a.set_value(static_cast<Automaton::State>(q), values[q]);
    std::vector<bool> seen(values.size() * alphabet.size(), false);
    std::size_t count = 0;
    while (more) {
        expect(f, "trans", 4, reader.line());
        const long long src = parse_int(f[1], reader.line());
        const long long dst = parse_int(f[3], reader.line());
        if (src < 0 || dst < 0 || src >= static_cast<long long>(values.size()) ||
            dst >= static_cast<long long>(values.size())) {
            throw ParseError(reader.line(), "state id out of range");
        }
        Letter letter;
        std::istringstream parts(f[2]);
        for (std::string part; std::getline(parts, part, ';');) {
            letter.push_back(static_cast<int>(parse_int(part, reader.line())));
        }
        Symbol s = 0;
        try {
            s = alphabet.index(letter);
        } catch (const InvalidInput& e) {
            throw ParseError(reader.line(), e.what());
        }
        const std::size_t slot = static_cast<std::size_t>(src) * alphabet.size() + s;
        if (seen[slot]) throw ParseError(reader.line(), "duplicate transition");
        seen[slot] = true;
        ++count;
        a.set_next(static_cast<Automaton::State>(src), s, static_cast<Automaton::State>(dst));
        more = reader.next(f);
    }
    if (count != seen.size()) {
        throw ParseError(reader.line(), "truncated: " + std::to_string(seen.size() - count) + " transitions missing");
    }
    return a;
}

Automaton read_automaton(const std::string& text) {
    std::istringstream in(text);
    return read_automaton(in);
}

std::string to_dot(const Automaton& a, const std::string& name) {
    const TrackAlphabet& alpha = a.alphabet();
    std::vector<Automaton::State> order = bfs_order(a);
    std::vector<bool> listed(a.state_count(), false);
    for (auto q : order) listed[q] = true;
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        if (!listed[q]) order.push_back(static_cast<Automaton::State>(q));
    }

    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  init [shape=point];\n";
    out << "  init -> 0;\n";
    for (auto q : order) {
        out << "  " << q << " [label=\"" << q;
        if (a.mode() == Mode::output) {
            out << '/' << a.value(q) << "\"];\n";
        } else {
            out << "\"" << (a.accepting(q) ? ", shape=doublecircle" : "") << "];\n";
        }
    }
    for (auto q : order) {
        std::map<Automaton::State, std::vector<Symbol>> edges;
        for (Symbol s = 0; s < alpha.size(); ++s) edges[a.next(q, s)].push_back(s);
        // Targets in the order they are first reached from q.
        std::vector<std::pair<Symbol, Automaton::State>> targets;
        for (const auto& [to, syms] : edges) targets.emplace_back(syms.front(), to);
        std::sort(targets.begin(), targets.end());
        for (const auto& [first, to] : targets) {
            out << "  " << q << " -> " << to << " [label=\"";
            const auto& syms = edges[to];
            for (std::size_t i = 0; i < syms.size(); ++i) {
                if (i != 0) out << "\\n";
                out << '[' << format_letter(alpha.letter(syms[i])) << ']';
            }
            out << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace foldrun
