#ifndef FOLDRUN_REPORT_HPP
#define FOLDRUN_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace foldrun {

/// Concrete violation: the code (or sign vector) as a compact literal plus
/// the integer arguments involved.
struct Witness {
    std::string code;
    std::vector<std::int64_t> values;
    std::string detail;

    std::string to_string() const;
};

/// Result of one bounded check. A failing report always carries a witness.
struct CheckReport {
    std::string name;
    std::string bound;
    bool passed = true;
    std::optional<Witness> witness;
    std::string note;  // informational, never affects the verdict

    static CheckReport pass(std::string name, std::string bound, std::string note = {});
    static CheckReport fail(std::string name, std::string bound, Witness witness);
};

bool all_passed(const std::vector<CheckReport>& reports) noexcept;

}  // namespace foldrun

#endif  // FOLDRUN_REPORT_HPP
