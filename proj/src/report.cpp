#include "foldrun/report.hpp"

#include <algorithm>

namespace foldrun {

std::string Witness::to_string() const {
    std::string out = "code=" + (code.empty() ? std::string("()") : code);
    if (!values.empty()) {
        out += " values=";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i != 0) out += ',';
            out += std::to_string(values[i]);
        }
    }
    if (!detail.empty()) out += " (" + detail + ")";
    return out;
}

CheckReport CheckReport::pass(std::string name, std::string bound, std::string note) {
    CheckReport r;
    r.name = std::move(name);
    r.bound = std::move(bound);
    r.note = std::move(note);
    return r;
}

CheckReport CheckReport::fail(std::string name, std::string bound, Witness witness) {
    CheckReport r;
    r.name = std::move(name);
    r.bound = std::move(bound);
    r.passed = false;
    r.witness = std::move(witness);
    return r;
}

bool all_passed(const std::vector<CheckReport>& reports) noexcept {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace foldrun
