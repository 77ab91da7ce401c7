#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pairweave/qpoly.hpp"
#include "pairweave/rational.hpp"
#include "pairweave/sequence.hpp"

namespace pairweave::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "pairweave/1";

struct Check {
    std::string name;
    Json expected;
    Json actual;
    bool pass = false;
};

/// Machine-readable outcome of one command. Overall pass iff every check
/// passes; `details` carries exploratory findings that are not checks.
struct Report {
    std::string command;
    Json params = Json::object();
    std::vector<Check> checks;
    Json details = Json::object();

    void check(std::string name, Json expected, Json actual, bool pass) {
        checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
    }
    bool pass() const;
    Json to_json() const;
};

inline Json to_json(const Rational& x) { return x.to_string(); }
inline Json to_json(const QPoly& p) { return p.to_strings(); }

template <typename Tag>
Json to_json(const Sequence<Rational, Tag>& s) {
    return to_strings(s);
}

template <typename Tag>
Json to_json(const Sequence<QPoly, Tag>& s) {
    Json out = Json::array();
    for (const auto& p : s.terms()) out.push_back(p.to_strings());
    return out;
}

}  // namespace pairweave::cli
