#pragma once

// Structured pass/fail reporting: one record per checked identity with the
// located coefficient mismatches, plus stable text and json emission. Reports
// with identical configuration are byte-identical apart from runtime_ms.

#include <qav/dist.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace qav {

enum class CheckStatus { Pass, Fail, Inconclusive };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "inconclusive";
    }
}

struct CheckRecord {
    std::string name;
    std::string anchor;  // the identity being checked, written out
    CheckStatus status = CheckStatus::Pass;
    std::vector<Mismatch> mismatches;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    std::map<std::string, std::string> params;  // config echo, fixed key order
    std::vector<CheckRecord> checks;
    long long runtime_ms = 0;

    CheckStatus overall() const {
        CheckStatus s = CheckStatus::Pass;
        for (const auto& c : checks) {
            if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
            if (c.status == CheckStatus::Inconclusive) s = CheckStatus::Inconclusive;
        }
        return s;
    }

    int exit_code() const {
        switch (overall()) {
            case CheckStatus::Pass: return 0;
            case CheckStatus::Fail: return 1;
            default: return 3;
        }
    }
};

inline std::string emit_text(const VerificationReport& r) {
    std::string out = "suite " + r.suite + "\n";
    for (const auto& [k, v] : r.params) out += "  " + k + " = " + v + "\n";
    for (const auto& c : r.checks) {
        out += std::string("[") + status_name(c.status) + "] " + c.name;
        if (!c.anchor.empty()) out += "  {" + c.anchor + "}";
        out += "\n";
        if (!c.note.empty()) out += "    note: " + c.note + "\n";
        for (const auto& m : c.mismatches)
            out += "    at " + m.location + ": lhs = " + m.lhs + ", rhs = " + m.rhs + "\n";
    }
    out += std::string("overall: ") + status_name(r.overall()) + "  (" +
           std::to_string(r.runtime_ms) + " ms)\n";
    return out;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["anchor"] = c.anchor;
        cj["status"] = status_name(c.status);
        cj["mismatches"] = nlohmann::ordered_json::array();
        for (const auto& m : c.mismatches) {
            nlohmann::ordered_json mj;
            mj["location"] = m.location;
            mj["lhs"] = m.lhs;
            mj["rhs"] = m.rhs;
            cj["mismatches"].push_back(mj);
        }
        if (!c.note.empty()) cj["note"] = c.note;
        j["checks"].push_back(cj);
    }
    j["overall"] = status_name(r.overall());
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

inline std::string emit_json(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

inline VerificationReport parse_json(const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
        r.params[it.key()] = it.value().get<std::string>();
    for (const auto& cj : j.at("checks")) {
        CheckRecord c;
        c.name = cj.at("name").get<std::string>();
        c.anchor = cj.at("anchor").get<std::string>();
        std::string st = cj.at("status").get<std::string>();
        c.status = st == "pass" ? CheckStatus::Pass
                                : (st == "fail" ? CheckStatus::Fail : CheckStatus::Inconclusive);
        for (const auto& mj : cj.at("mismatches")) {
            Mismatch m;
            m.location = mj.at("location").get<std::string>();
            m.lhs = mj.at("lhs").get<std::string>();
            m.rhs = mj.at("rhs").get<std::string>();
            c.mismatches.push_back(m);
        }
        if (cj.contains("note")) c.note = cj.at("note").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    r.runtime_ms = j.at("runtime_ms").get<long long>();
    return r;
}

}  // namespace qav
