#include "foldrun/oracle.hpp"

#include "foldrun/errors.hpp"
#include "foldrun/runs.hpp"

namespace foldrun {

std::size_t Oracle::argument_count() const noexcept {
    const std::size_t numeric = alphabet.track_count() - (code_track() ? 1 : 0);
    return kind == OracleKind::function ? numeric - 1 : numeric;
}

int Oracle::label(const DecodedInputs& inputs) const {
    FoldCode code;
    if (code_track()) {
        if (!is_valid_code(inputs.code)) return 0;
        code = FoldCode(inputs.code);
    }
    // The empty word decodes to no tracks at all; it stands for all zeros.
    std::vector<std::uint64_t> nums = inputs.nums;
    nums.resize(alphabet.track_count() - (code_track() ? 1 : 0), 0);
    switch (kind) {
        case OracleKind::relation:
            return relation(code, nums) ? 1 : 0;
        case OracleKind::function: {
            const auto args = std::span<const std::uint64_t>(nums).first(nums.size() - 1);
            const auto v = function(code, args);
            return v.has_value() && *v == nums.back() ? 1 : 0;
        }
        case OracleKind::output:
            return output(code, nums);
    }
    return 0;
}

bool lnk_accepts(std::span<const int> code_symbols, std::uint64_t x) {
    if (!is_valid_code(code_symbols)) return false;
    std::size_t t = 0;
    for (int s : code_symbols) t += s != 0 ? 1 : 0;
    if (t >= 64) return false;
    return x == (std::uint64_t{1} << t) - 1;
}

std::optional<std::uint64_t> start_position(const FoldCode& f, std::uint64_t n) {
    if (n == 0) return 0;
    if (n > run_count(f)) return std::nullopt;
    return run_start(f, n);
}

std::optional<std::uint64_t> end_position(const FoldCode& f, std::uint64_t n) {
    if (n == 0) return 0;
    if (n > run_count(f)) return std::nullopt;
    return run_end(f, n);
}

bool oracle_sp(const FoldCode& f, std::uint64_t n, std::uint64_t x) {
    const auto s = start_position(f, n);
    return s.has_value() && *s == x;
}

bool oracle_ep(const FoldCode& f, std::uint64_t n, std::uint64_t x) {
    const auto e = end_position(f, n);
    return e.has_value() && *e == x;
}

int oracle_rl(const FoldCode& f, std::uint64_t n) { return static_cast<int>(run_length(f, n)); }

Oracle lnk_oracle() {
    Oracle o;
    o.name = "lnk";
    o.alphabet = TrackAlphabet::code_and_numbers(1);
    o.kind = OracleKind::relation;
    o.relation = [](const FoldCode& f, Oracle::Args nums) {
        const auto t = f.effective_length();
        return t < 64 && nums[0] == (std::uint64_t{1} << t) - 1;
    };
    return o;
}

Oracle sp_oracle() {
    Oracle o;
    o.name = "sp";
    o.alphabet = TrackAlphabet::code_and_numbers(2);
    o.kind = OracleKind::function;
    o.function = [](const FoldCode& f, Oracle::Args args) { return start_position(f, args[0]); };
    return o;
}

Oracle ep_oracle() {
    Oracle o;
    o.name = "ep";
    o.alphabet = TrackAlphabet::code_and_numbers(2);
    o.kind = OracleKind::function;
    o.function = [](const FoldCode& f, Oracle::Args args) { return end_position(f, args[0]); };
    return o;
}

Oracle rl_oracle() {
    Oracle o;
    o.name = "RL";
    o.alphabet = TrackAlphabet::code_and_numbers(1);
    o.kind = OracleKind::output;
    o.output = [](const FoldCode& f, Oracle::Args args) {
        const std::uint64_t n = args[0];
        if (n == 0 || n > run_count(f)) return 0;
        return static_cast<int>(run_length(f, n));
    };
    return o;
}

Oracle rl_value_oracle(int value) {
    Oracle o;
    o.name = "rl" + std::to_string(value);
    o.alphabet = TrackAlphabet::code_and_numbers(1);
    o.kind = OracleKind::relation;
    o.relation = [value](const FoldCode& f, Oracle::Args args) {
        const std::uint64_t n = args[0];
        return n != 0 && n <= run_count(f) && static_cast<int>(run_length(f, n)) == value;
    };
    return o;
}

}  // namespace foldrun
