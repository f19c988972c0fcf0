#include "foldrun/regular.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "foldrun/errors.hpp"
#include "foldrun/inference.hpp"

namespace foldrun {

namespace {

// Constraint on (f, n) for f = 1^t 0^* and 1 <= n < 2^(t-1).
enum class Phase : std::uint8_t { start, ones, zeros, dead };

struct Constraint {
    Phase phase = Phase::start;
    bool nonzero = false;  // some bit of n was 1
    bool pending = false;  // bit of n at the latest 1-position

    bool accepting() const noexcept { return phase == Phase::zeros && nonzero; }

    friend auto operator<=>(const Constraint&, const Constraint&) = default;
};

Constraint step(Constraint c, int f, int bit) {
    switch (c.phase) {
        case Phase::start:
        case Phase::ones:
            if (f == 1) return {Phase::ones, c.nonzero || bit != 0, bit != 0};
            // First padding position t: bits t-1 and t of n must be 0.
            if (c.phase == Phase::start || c.pending || bit != 0) return {Phase::dead, false, false};
            return {Phase::zeros, c.nonzero, false};
        case Phase::zeros:
            if (f != 0 || bit != 0) return {Phase::dead, false, false};
            return c;
        case Phase::dead:
            break;
    }
    return {Phase::dead, false, false};
}

using Item = std::pair<Automaton::State, Constraint>;

class Specializer {
public:
    explicit Specializer(const Automaton& a) : a_(a) {
        const TrackAlphabet& alpha = a.alphabet();
        if (!alpha.has_code_track() || alpha.track_count() < 2) {
            throw InvalidInput("specialization needs an instruction track and an index track");
        }
        numeric_ = TrackAlphabet::numbers(alpha.track_count() - 1);
        for (Symbol s = 0; s < numeric_.size(); ++s) {
            Letter l = numeric_.letter(s);
            l.insert(l.begin(), 1);
            with_one_.push_back(alpha.index(l));
            l[0] = 0;
            with_zero_.push_back(alpha.index(l));
        }
    }

    const TrackAlphabet& numeric() const { return numeric_; }

    std::vector<Item> advance(const std::vector<Item>& from, Symbol s) const {
        std::set<Item> out;
        const int bit = numeric_.component(s, 0);
        for (const auto& [q, c] : from) {
            for (int f : {1, 0}) {
                const Constraint nc = step(c, f, bit);
                if (nc.phase == Phase::dead) continue;
                out.emplace(a_.next(q, f == 1 ? with_one_[s] : with_zero_[s]), nc);
            }
        }
        return {out.begin(), out.end()};
    }

    // Values reachable through padding (f in {1,0}, numeric tracks 0) at
    // items satisfying the constraint.
    const std::set<int>& closure(const Item& item) {
        auto it = closures_.find(item);
        if (it != closures_.end()) return it->second;
        std::set<int> values;
        std::set<Item> seen{item};
        std::vector<Item> stack{item};
        while (!stack.empty()) {
            const Item cur = stack.back();
            stack.pop_back();
            if (cur.second.accepting()) values.insert(a_.value(cur.first));
            for (const Item& nxt : advance({cur}, 0)) {
                if (seen.insert(nxt).second) stack.push_back(nxt);
            }
        }
        return closures_.emplace(item, std::move(values)).first->second;
    }

private:
    const Automaton& a_;
    TrackAlphabet numeric_;
    std::vector<Symbol> with_one_;
    std::vector<Symbol> with_zero_;
    std::map<Item, std::set<int>> closures_;
};

}  // namespace

Automaton specialize_regular(const Automaton& a) {
    a.validate();
    Specializer spec(a);
    const bool acceptor = a.mode() == Mode::accept;

    using Key = std::pair<std::vector<Item>, bool>;  // items, all-zero input so far
    std::map<Key, Automaton::State> ids;
    std::vector<Key> keys{{{{0, Constraint{}}}, true}};
    ids.emplace(keys[0], 0);
    Automaton out(spec.numeric(), a.mode(), 0);

    auto value_of = [&](const Key& key) {
        std::set<int> values;
        for (const Item& item : key.first) {
            const auto& v = spec.closure(item);
            values.insert(v.begin(), v.end());
        }
        if (acceptor) return (key.second || values.count(1) != 0) ? 1 : 0;
        for (int v : values) {
            if (v > 0) return v;
        }
        return 0;
    };

    out.add_state(value_of(keys[0]));
    for (std::size_t i = 0; i < keys.size(); ++i) {
        for (Symbol s = 0; s < spec.numeric().size(); ++s) {
            Key next{spec.advance(keys[i].first, s), keys[i].second && s == 0};
            auto [it, fresh] = ids.try_emplace(next, static_cast<Automaton::State>(keys.size()));
            if (fresh) {
                keys.push_back(next);
                out.add_state(value_of(next));
            }
            out.set_next(static_cast<Automaton::State>(i), s, it->second);
        }
    }
    return minimize(out);
}

RunDecomposition regular_runs(std::size_t runs) {
    std::size_t t = 1;
    while ((std::size_t{1} << (t - 1)) < runs) ++t;
    // The last run of P_{1^t} is complete for t >= 2: p_{2^t} = 1 follows a -1.
    return run_decompose(FoldCode::regular(std::max<std::size_t>(t, 2)));
}

std::vector<std::uint64_t> complement_sequence(std::uint64_t limit) {
    // h(n) ~ 2n, so limit/2 + 2 runs cover every h(n) + 1 <= limit.
    const RunDecomposition runs = regular_runs(static_cast<std::size_t>(limit / 2 + 2));
    std::vector<bool> in_h(limit + 2, false);
    in_h[1] = true;  // h(0) + 1
    for (std::uint64_t e : runs.ends) {
        if (e + 1 <= limit) in_h[e + 1] = true;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1; x <= limit; ++x) {
        if (!in_h[x]) out.push_back(x);
    }
    return out;
}

Oracle tt_oracle(std::uint64_t limit) {
    auto table = std::make_shared<std::vector<std::uint64_t>>(complement_sequence(limit));
    Oracle o;
    o.name = "tt";
    o.alphabet = TrackAlphabet::numbers(2);
    o.kind = OracleKind::function;
    o.function = [table, limit](const FoldCode&, Oracle::Args args) -> std::optional<std::uint64_t> {
        const std::uint64_t n = args[0];
        if (n == 0) return std::nullopt;
        if (n > table->size()) {
            throw InferenceError("t(" + std::to_string(n) + ") lies beyond the sample limit " + std::to_string(limit));
        }
        return (*table)[n - 1];
    };
    return o;
}

std::uint64_t default_tt_limit(std::size_t sample_depth, std::size_t test_depth) {
    return std::uint64_t{1} << (sample_depth + test_depth + 2);
}

Automaton build_tt(std::uint64_t limit, std::size_t sample_depth, std::size_t test_depth) {
    return infer_automaton(tt_oracle(limit), sample_depth, test_depth);
}

}  // namespace foldrun
