#pragma once

// Run reports emitted by the command-line driver.
//
// Structured layout (stable field names):
//   {"command": "...", "arguments": [...],
//    "configuration": {...},                      // presets, bounds, conventions
//    "verdicts": [{"check", "expected", "passed", "as_expected", "detail", "witness"}],
//    "statistics": {...},
//    "timing_ms": {"<phase>": ms, ...}}
//
// "expected" is the outcome the check should have (false for the checks a
// counterexample preset is built to fail). Everything except timing_ms is a
// deterministic function of the inputs and flags.

#include <chrono>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace bisimp {

struct Verdict {
    std::string check;
    bool expected = true;
    bool passed = false;
    std::string detail;
    nlohmann::json witness; ///< null when there is nothing to show

    bool as_expected() const { return expected == passed; }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct RunReport {
    std::string command;
    std::vector<std::string> arguments;
    nlohmann::json configuration = nlohmann::json::object();
    std::vector<Verdict> verdicts;
    nlohmann::json statistics = nlohmann::json::object();
    std::map<std::string, double> timing_ms;

    bool all_as_expected() const {
        for (const auto& v : verdicts)
            if (!v.as_expected()) return false;
        return true;
    }

    Verdict& add(std::string check, bool expected, bool passed, std::string detail = {},
                 nlohmann::json witness = nullptr) {
        verdicts.push_back({std::move(check), expected, passed, std::move(detail), std::move(witness)});
        return verdicts.back();
    }

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline void to_json(nlohmann::json& j, const Verdict& v) {
    j = {{"check", v.check},       {"expected", v.expected}, {"passed", v.passed},
         {"as_expected", v.as_expected()}, {"detail", v.detail}, {"witness", v.witness}};
}

inline void from_json(const nlohmann::json& j, Verdict& v) {
    j.at("check").get_to(v.check);
    j.at("expected").get_to(v.expected);
    j.at("passed").get_to(v.passed);
    j.at("detail").get_to(v.detail);
    v.witness = j.at("witness");
}

inline void to_json(nlohmann::json& j, const RunReport& r) {
    j = {{"command", r.command},
         {"arguments", r.arguments},
         {"configuration", r.configuration},
         {"verdicts", r.verdicts},
         {"all_as_expected", r.all_as_expected()},
         {"statistics", r.statistics},
         {"timing_ms", r.timing_ms}};
}

inline void from_json(const nlohmann::json& j, RunReport& r) {
    j.at("command").get_to(r.command);
    j.at("arguments").get_to(r.arguments);
    r.configuration = j.at("configuration");
    j.at("verdicts").get_to(r.verdicts);
    r.statistics = j.at("statistics");
    j.at("timing_ms").get_to(r.timing_ms);
}

inline std::string render_text(const RunReport& r) {
    std::ostringstream os;
    os << "command: " << r.command << "\n";
    os << "configuration: " << r.configuration.dump() << "\n";
    for (const auto& v : r.verdicts) {
        os << (v.passed ? "PASS " : "FAIL ") << v.check;
        if (!v.expected) os << " (expected to fail)";
        if (!v.as_expected()) os << " [UNEXPECTED]";
        os << "\n";
        if (!v.detail.empty()) os << "    " << v.detail << "\n";
        if (!v.witness.is_null()) os << "    witness: " << v.witness.dump() << "\n";
    }
    if (!r.statistics.empty()) os << "statistics: " << r.statistics.dump() << "\n";
    for (const auto& [phase, ms] : r.timing_ms) os << "time " << phase << ": " << ms << " ms\n";
    os << (r.all_as_expected() ? "result: all checks as expected" : "result: some checks NOT as expected") << "\n";
    return os.str();
}

/// Milliseconds since construction.
class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace bisimp
