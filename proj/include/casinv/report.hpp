/*
   Copyright 2026 The casinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace casinv {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Status { Pass, Fail, SkippedDegenerate };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::SkippedDegenerate:
            return "skipped-degenerate";
    }
    return "fail";
}

inline Status status_from_string(std::string_view s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "skipped-degenerate") return Status::SkippedDegenerate;
    throw ParseError("unknown status '" + std::string(s) + "'");
}

/// One named sub-check of a report (one n, one identity, one scale point).
struct CheckEntry {
    std::string name;
    Status status = Status::Pass;
    std::string lhs;
    std::string rhs;
    std::string note;

    friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct VerificationReport {
    std::string theorem;
    std::map<std::string, std::string> inputs;
    Status status = Status::Pass;
    std::string lhs;
    std::string rhs;
    std::vector<std::string> notes;
    std::vector<CheckEntry> checks;

    bool passed() const noexcept { return status == Status::Pass; }

    void add(CheckEntry entry) { checks.push_back(std::move(entry)); }

    /// Overall status from the checks: any fail wins, then any pass; a
    /// report whose checks were all skipped is skipped. The first failing
    /// check's sides are copied to the top level.
    void settle() {
        bool any_pass = false;
        for (const auto& c : checks) {
            if (c.status == Status::Fail) {
                status = Status::Fail;
                lhs = c.lhs;
                rhs = c.rhs;
                if (!c.note.empty()) notes.push_back(c.name + ": " + c.note);
                return;
            }
            any_pass = any_pass || c.status == Status::Pass;
        }
        status = any_pass ? Status::Pass : Status::SkippedDegenerate;
    }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["theorem"] = r.theorem;
    j["inputs"] = r.inputs;
    j["status"] = to_string(r.status);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["notes"] = r.notes;
    j["version"] = kVersion;
    if (!r.checks.empty()) {
        auto& arr = j["checks"] = nlohmann::json::array();
        for (const auto& c : r.checks) {
            nlohmann::json e{{"name", c.name}, {"status", to_string(c.status)}, {"lhs", c.lhs}, {"rhs", c.rhs}};
            if (!c.note.empty()) e["note"] = c.note;
            arr.push_back(std::move(e));
        }
    }
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    try {
        VerificationReport r;
        r.theorem = j.at("theorem").get<std::string>();
        r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
        r.status = status_from_string(j.at("status").get<std::string>());
        r.lhs = j.at("lhs").get<std::string>();
        r.rhs = j.at("rhs").get<std::string>();
        r.notes = j.at("notes").get<std::vector<std::string>>();
        if (j.contains("checks")) {
            for (const auto& e : j.at("checks")) {
                CheckEntry c;
                c.name = e.at("name").get<std::string>();
                c.status = status_from_string(e.at("status").get<std::string>());
                c.lhs = e.at("lhs").get<std::string>();
                c.rhs = e.at("rhs").get<std::string>();
                c.note = e.value("note", std::string{});
                r.checks.push_back(std::move(c));
            }
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report JSON: ") + e.what());
    }
}

inline std::string print_report(const VerificationReport& r) { return to_json(r).dump(2); }

inline VerificationReport parse_report(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what());
    }
    return report_from_json(j);
}

/// Human-readable summary, one line per check.
inline std::string report_text(const VerificationReport& r) {
    std::string out = r.theorem + ": " + std::string(to_string(r.status)) + "\n";
    for (const auto& [k, v] : r.inputs) out += "  " + k + " = " + v + "\n";
    if (r.status == Status::Fail) out += "  lhs: " + r.lhs + "\n  rhs: " + r.rhs + "\n";
    for (const auto& c : r.checks) {
        out += "  [" + std::string(to_string(c.status)) + "] " + c.name;
        if (!c.note.empty()) out += " (" + c.note + ")";
        out += "\n";
    }
    for (const auto& n : r.notes) out += "  note: " + n + "\n";
    return out;
}

}  // namespace casinv
