// Acceptance suite: one criterion per check, each with its configuration and
// runtime budget pinned here. Every comparison is exact (zero tolerance);
// prints one pass/fail line per criterion and exits nonzero on any failure.

#include <qav/suites.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace qav;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void report(int idx, const std::string& what, bool ok, long long ms, long long budget_ms,
            const std::string& detail = {}) {
    bool in_budget = budget_ms <= 0 || ms <= budget_ms;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %d: %s (%lld ms%s)%s%s\n", pass ? "PASS" : "FAIL", idx,
                what.c_str(), ms,
                budget_ms > 0 ? (", budget " + std::to_string(budget_ms) + " ms").c_str() : "",
                detail.empty() ? "" : " - ", detail.c_str());
}

SuiteConfig config(const std::string& suite, int weight, int zmin, int zmax, int wmin, int wmax) {
    SuiteConfig c;
    c.suite = suite;
    c.weight = weight;
    c.zmin = zmin;
    c.zmax = zmax;
    c.wmin = wmin;
    c.wmax = wmax;
    return c;
}

std::string first_problem(const VerificationReport& r) {
    for (const auto& c : r.checks) {
        if (c.status == CheckStatus::Pass) continue;
        std::string d = c.name + ": " + status_name(c.status);
        if (!c.mismatches.empty())
            d += " at " + c.mismatches.front().location + " (" + c.mismatches.front().lhs +
                 " vs " + c.mismatches.front().rhs + ")";
        if (!c.note.empty()) d += " [" + c.note + "]";
        return d;
    }
    return {};
}

}  // namespace

int main() {
    // 1. Yang-Baxter on z, w in [0..6], zero mismatches
    {
        Timer t;
        auto rep = run_suite(config("ybe", 3, 0, 6, 0, 6));
        report(1, "yang-baxter equation on windows [0..6]^2",
               rep.overall() == CheckStatus::Pass, t.ms(), 5000, first_problem(rep));
    }

    // 2. exchange relations in the evaluation representation, |exp| <= 5
    {
        Timer t;
        auto rep = run_suite(config("rll-eval", 3, -5, 5, -5, 5));
        report(2, "evaluation-representation exchange relations, all four sign families",
               rep.overall() == CheckStatus::Pass, t.ms(), 30000, first_problem(rep));
    }

    // 3. every current relation at level zero, |exp| <= 5, delta bracket included
    {
        Timer t;
        auto rep = run_suite(config("drinfeld-eval", 3, -5, 5, -5, 5));
        bool has_bracket = false;
        for (const auto& c : rep.checks)
            if (c.name.find("bracket") != std::string::npos) has_bracket = true;
        report(3, "current relations at level zero including the delta bracket",
               rep.overall() == CheckStatus::Pass && has_bracket, t.ms(), 60000,
               first_problem(rep));
    }

    // 4. coproduct transport at W = 4, both signs, generic central units
    {
        Timer t;
        auto rep = run_suite(config("coproduct-transport", 4, -4, 4, -4, 4));
        bool all8 = rep.checks.size() == 8 && rep.overall() == CheckStatus::Pass;
        report(4, "closed coproduct formulas equal the matrix-coproduct components, W = 4",
               all8, t.ms(), 120000, first_problem(rep));
    }

    // 5. antipode transport at W = 4
    {
        Timer t;
        auto rep = run_suite(config("antipode-transport", 4, -4, 4, -4, 4));
        bool all8 = rep.checks.size() == 8 && rep.overall() == CheckStatus::Pass;
        report(5, "closed antipode formulas equal the inverse-matrix components, W = 4", all8,
               t.ms(), 120000, first_problem(rep));
    }

    // 6. Hopf axioms for the transported structure at W = 3
    {
        Timer t;
        auto rep = run_suite(config("hopf-axioms", 3, -3, 3, -3, 3));
        bool all24 = rep.checks.size() == 24 && rep.overall() == CheckStatus::Pass;
        report(6, "coassociativity, counit and both antipode identities, W = 3", all24, t.ms(),
               300000, first_problem(rep));
    }

    // 7. the counterexample: transported and plain antipodes differ on k1,
    //    symbolically and in the representation
    {
        Timer t;
        auto rep = run_suite(config("counterexample", 2, -2, 2, -2, 2));
        report(7, "antipode difference on k1 is nonzero, symbolically and evaluated",
               rep.overall() == CheckStatus::Pass, t.ms(), 0, first_problem(rep));
    }

    // 8a. monotonicity: the passing configurations also pass at W-1 and on
    //     shrunken windows
    {
        Timer t;
        bool ok = true;
        std::string detail;
        std::vector<SuiteConfig> shrunk = {
            config("ybe", 3, 0, 5, 0, 5),
            config("rll-eval", 3, -4, 4, -4, 4),
            config("drinfeld-eval", 3, -4, 4, -4, 4),
            config("coproduct-transport", 3, -3, 3, -3, 3),
            config("antipode-transport", 3, -3, 3, -3, 3),
            config("hopf-axioms", 2, -2, 2, -2, 2),
            config("counterexample", 1, -1, 1, -1, 1),
        };
        for (const auto& c : shrunk) {
            auto rep = run_suite(c);
            if (rep.overall() != CheckStatus::Pass) {
                ok = false;
                detail = c.suite + " failed shrunk: " + first_problem(rep);
                break;
            }
        }
        report(8, "monotonicity: every suite also passes at W-1 and shrunken windows", ok,
               t.ms(), 0, detail);
    }

    // 8b. fault injection: planted single-coefficient corruptions are detected
    //     with a located mismatch
    {
        Timer t;
        struct Plant {
            const char* suite;
            Corruption c;
        };
        std::vector<Plant> plants = {
            {"ybe", {"R:2,2", 1, 0}},
            {"ybe", {"R:3,3", 2, 0}},
            {"ybe", {"R:3,2", 0, 0}},
            {"rll-eval", {"L+:1,1", 1, 0}},
            {"rll-eval", {"L+:2,1", 1, 0}},
            {"rll-eval", {"L-:2,2", -1, 0}},
            {"drinfeld-eval", {"k1+", 1, 0}},
            {"drinfeld-eval", {"k2+", 2, 0}},
            {"drinfeld-eval", {"e+", 2, 0}},
            {"drinfeld-eval", {"f+", 1, 0}},
            {"coproduct-transport", {"cop:k1", 1, 0}},
            {"coproduct-transport", {"cop:k2", 2, 0}},
            {"coproduct-transport", {"cop:e", 1, 0}},
            {"coproduct-transport", {"cop:f", 0, 0}},
            {"coproduct-transport", {"L:2,1", 1, 0}},
            {"antipode-transport", {"anti:k1", 1, 0}},
            {"antipode-transport", {"anti:k2", 1, 0}},
            {"antipode-transport", {"anti:e", 1, 0}},
            {"antipode-transport", {"anti:f", 0, 0}},
            {"hopf-axioms", {"table:k1+1", 0, 0}},
            {"hopf-axioms", {"table:k2+0", 0, 0}},
        };
        int detected = 0;
        std::string detail;
        for (const auto& p : plants) {
            auto cfg = config(p.suite, 2, -2, 2, -2, 2);
            cfg.corruption = p.c;
            auto rep = run_suite(cfg);
            bool located = false;
            for (const auto& c : rep.checks)
                if (!c.mismatches.empty()) located = true;
            if (rep.overall() == CheckStatus::Fail && located) {
                ++detected;
            } else if (detail.empty()) {
                detail = std::string("undetected plant ") + p.suite + "/" + p.c.target;
            }
        }
        bool ok = detected == static_cast<int>(plants.size()) && detected >= 12;
        report(8, "fault injection: " + std::to_string(detected) + "/" +
                      std::to_string(plants.size()) + " plants detected with located mismatches",
               ok, t.ms(), 0, detail);
    }

    if (failures == 0) {
        std::printf("acceptance: all criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
