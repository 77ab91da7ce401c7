#include "report.hpp"

#include <algorithm>

namespace pairweave::cli {

bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json Report::to_json() const {
    Json out;
    out["schema"] = kSchema;
    out["command"] = command;
    out["params"] = params;
    Json list = Json::array();
    for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    out["checks"] = std::move(list);
    if (!details.empty()) out["details"] = details;
    out["pass"] = pass();
    return out;
}

}  // namespace pairweave::cli
