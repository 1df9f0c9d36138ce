#pragma once

// Suite orchestration: runs the identity suites at requested cutoffs and
// windows, assembles deterministic reports, and hosts the fault-injection
// hooks used by the regression suite. Identical configurations produce
// byte-identical reports apart from the runtime field.

#include <qav/evalrep.hpp>
#include <qav/report.hpp>

#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <set>

namespace qav {

inline const char* family_name(Family f) {
    switch (f) {
        case Family::E: return "e";
        case Family::F: return "f";
        case Family::K1: return "k1";
        case Family::K2: return "k2";
    }
    return "?";
}

struct Corruption {
    std::string target;  // e.g. "R:2,2", "L+:1,1", "k1+", "cop:k1", "anti:f", "table:k1+0"
    int ez = 0;
    int ew = 0;
};

struct SuiteConfig {
    std::string suite = "all";
    int weight = 3;
    int zmin = -5, zmax = 5;
    int wmin = -5, wmax = 5;
    std::string sign = "both";
    std::string format = "text";
    bool spot_check = false;
    uint64_t spot_seed = 0;
    std::optional<Corruption> corruption;
};

inline const std::set<std::string>& suite_names() {
    static const std::set<std::string> names = {
        "ybe",          "rll-eval",          "drinfeld-eval", "coproduct-transport",
        "antipode-transport", "hopf-axioms", "counterexample", "all"};
    return names;
}

inline void validate(const SuiteConfig& c) {
    if (!suite_names().count(c.suite)) throw Error("unknown suite: " + c.suite);
    if (c.weight < 0) throw Error("weight cutoff must be nonnegative");
    if (c.zmin > c.zmax || c.wmin > c.wmax) throw Error("window bounds out of order");
    if (c.sign != "plus" && c.sign != "minus" && c.sign != "both")
        throw Error("sign must be plus, minus or both");
    if (c.format != "text" && c.format != "json") throw Error("format must be text or json");
}

namespace suitedetail {

inline std::vector<Sign> signs_of(const SuiteConfig& c) {
    if (c.sign == "plus") return {Sign::Plus};
    if (c.sign == "minus") return {Sign::Minus};
    return {Sign::Plus, Sign::Minus};
}

inline const char* sign_tag(Sign s) { return s == Sign::Plus ? "+" : "-"; }

// ----- spot-check support --------------------------------------------------

struct Spot {
    bool on = false;
    std::array<BigRat, kNumUnits> vals{};
};

inline Spot make_spot(const SuiteConfig& c) {
    Spot s;
    s.on = c.spot_check;
    if (!s.on) return s;
    uint64_t x = c.spot_seed ? c.spot_seed : 1;
    auto next = [&x] {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return x;
    };
    // small random rationals away from 0 and 1
    for (int i = 0; i < kNumUnits; ++i) {
        long long n = 2 + static_cast<long long>(next() % 11);
        long long d = 2 + static_cast<long long>(next() % 7);
        if (n == d) n += 1;
        s.vals[i] = BigRat::fraction(n, d);
    }
    return s;
}

inline ScalarPoly spot_eval(const ScalarPoly& p, const Spot& s) {
    return ScalarPoly(p.evaluate(s.vals));
}
inline NCPoly spot_eval(const NCPoly& p, const Spot& s) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) r.add_term(w, spot_eval(c, s));
    return r;
}
template <int L>
TensorPoly<L> spot_eval(const TensorPoly<L>& p, const Spot& s) {
    TensorPoly<L> r;
    for (const auto& [k, c] : p.terms()) r.add_term(k, spot_eval(c, s));
    return r;
}

template <class C>
FormalDist<C> spot_eval(const FormalDist<C>& d, const Spot& s) {
    return map_coeffs(d, [&](const C& c) { return spot_eval(c, s); });
}

// compare two distributions into a check record, applying the spot reduction
// when enabled
template <class C>
void record_compare(CheckRecord& rec, const FormalDist<C>& lhs, const FormalDist<C>& rhs, int zlo,
                    int zhi, int wlo, int whi, const Spot& spot, const std::string& where = {}) {
    try {
        std::vector<Mismatch> mm;
        if (spot.on)
            mm = dist_compare(spot_eval(lhs, spot), spot_eval(rhs, spot), zlo, zhi, wlo, whi);
        else
            mm = dist_compare(lhs, rhs, zlo, zhi, wlo, whi);
        for (auto& m : mm) {
            if (!where.empty()) m.location = where + " " + m.location;
            rec.mismatches.push_back(std::move(m));
        }
        if (!rec.mismatches.empty()) rec.status = CheckStatus::Fail;
    } catch (const Inconclusive& e) {
        rec.status = CheckStatus::Inconclusive;
        rec.note = e.what();
    }
}

// ----- corruption hooks -----------------------------------------------------

inline bool target_is(const Corruption& c, const std::string& prefix, std::string* rest = nullptr) {
    if (c.target.rfind(prefix, 0) != 0) return false;
    if (rest) *rest = c.target.substr(prefix.size());
    return true;
}

template <class C>
void poke(FormalDist<C>& d, int ez, int ew, const C& delta) {
    if (!d.in_window(ez, ew))
        throw Error("corruption target outside the window: (" + std::to_string(ez) + "," +
                    std::to_string(ew) + ")");
    d.add_coeff(ez, ew, delta);
}

// per-sign targets may fall outside one sign's window; skip those quietly,
// the other sign still carries the plant
template <class C>
void try_poke(FormalDist<C>& d, int ez, int ew, const C& delta) {
    if (d.in_window(ez, ew)) d.add_coeff(ez, ew, delta);
}

inline Family family_of(const std::string& name) {
    if (name == "k1") return Family::K1;
    if (name == "k2") return Family::K2;
    if (name == "e") return Family::E;
    if (name == "f") return Family::F;
    throw Error("unknown current family: " + name);
}

// ----- individual suites -----------------------------------------------------

inline VerificationReport run_ybe(const SuiteConfig& cfg) {
    VerificationReport rep;
    rep.suite = "ybe";
    int zhi = std::max(cfg.zmax, 0), whi = std::max(cfg.wmax, 0);
    int win = std::max(zhi, whi);
    Spot spot = make_spot(cfg);

    Mat<SDist, 4> r12 = r_matrix(win, RArg::Z);
    if (cfg.corruption) {
        std::string rest;
        if (target_is(*cfg.corruption, "R:", &rest)) {
            int i = rest[0] - '0', j = rest[2] - '0';
            poke(r12(i, j), cfg.corruption->ez, 0, ScalarPoly(1));
        } else {
            throw Error("ybe corruption targets look like R:i,j");
        }
    }
    auto [lhs, rhs] = ybe_sides(win, &r12);
    CheckRecord rec;
    rec.name = "yang-baxter";
    rec.anchor = "R12(z) R13(zw) R23(w) = R23(w) R13(zw) R12(z)";
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j)
            record_compare(rec, lhs(i, j), rhs(i, j), 0, zhi, 0, whi, spot,
                           "entry(" + std::to_string(i) + "," + std::to_string(j) + ")");
    rep.checks.push_back(std::move(rec));
    return rep;
}

inline int symmetric_extent(const SuiteConfig& cfg) {
    return std::max(0, std::min(std::min(-cfg.zmin, cfg.zmax), std::min(-cfg.wmin, cfg.wmax)));
}

inline void corrupt_eval_rep(EvalRep& rep, const Corruption& c) {
    std::string rest;
    MatS delta = unit_matrix(1, 1, ScalarPoly(1));
    if (target_is(c, "L+:", &rest)) {
        int i = rest[0] - '0', j = rest[2] - '0';
        poke(rep.lp(i, j), c.ez, 0, delta);
    } else if (target_is(c, "L-:", &rest)) {
        int i = rest[0] - '0', j = rest[2] - '0';
        poke(rep.lm(i, j), c.ez, 0, delta);
    } else if (target_is(c, "k1+")) {
        poke(rep.gp.k1, c.ez, 0, delta);
    } else if (target_is(c, "k2+")) {
        poke(rep.gp.k2, c.ez, 0, delta);
    } else if (target_is(c, "e+")) {
        poke(rep.gp.e, c.ez, 0, delta);
    } else if (target_is(c, "f+")) {
        poke(rep.gp.f, c.ez, 0, delta);
    } else if (target_is(c, "x+")) {
        poke(rep.x_plus, c.ez, 0, delta);
    } else {
        throw Error("unknown evaluation corruption target: " + c.target);
    }
    // the X currents are derived values; rebuild them from the gauss factors
    if (!target_is(c, "x+")) {
        rep.x_plus = rep.gp.e - rep.gm.e;
        rep.x_minus = rep.gp.f - rep.gm.f;
    }
}

inline VerificationReport run_rll_eval(const SuiteConfig& cfg) {
    VerificationReport rep;
    rep.suite = "rll-eval";
    int extent = symmetric_extent(cfg);
    EvalRep ev = build_eval_rep(extent + 2);

    CheckRecord choice;
    choice.name = "factor choice and zero modes";
    choice.anchor = "l+_21[0] = l-_12[0] = 0, diagonal zero modes mutually inverse";
    choice.note = std::string("accepted ") + factor_choice_name(ev.choice) +
                  (ev.rejected_reason.empty() ? "" : "; rejected " + ev.rejected_reason);
    rep.checks.push_back(choice);

    if (cfg.corruption) corrupt_eval_rep(ev, *cfg.corruption);

    for (auto& chk : check_rll(ev, extent)) {
        CheckRecord rec;
        rec.name = chk.name;
        rec.anchor = "R(z/w) L1(z) L2(w) = L2(w) L1(z) R(z/w), denominators cleared";
        rec.mismatches = std::move(chk.mismatches);
        if (chk.inconclusive) {
            rec.status = CheckStatus::Inconclusive;
            rec.note = chk.note;
        } else if (!rec.mismatches.empty()) {
            rec.status = CheckStatus::Fail;
        }
        rep.checks.push_back(std::move(rec));
    }
    return rep;
}

inline VerificationReport run_drinfeld_eval(const SuiteConfig& cfg) {
    VerificationReport rep;
    rep.suite = "drinfeld-eval";
    int extent = symmetric_extent(cfg);
    std::function<void(EvalRep&)> hook;
    if (cfg.corruption) {
        Corruption c = *cfg.corruption;
        hook = [c](EvalRep& r) { corrupt_eval_rep(r, c); };
    }

    // consistency gate: a current-relation failure only localizes a Gauss or
    // current-map bug when the exchange relations themselves hold
    {
        EvalRep gate_rep = build_eval_rep(extent + 2);
        if (hook) hook(gate_rep);
        CheckRecord gate;
        gate.name = "consistency gate (exchange relations)";
        gate.anchor = "exchange relations must hold before the current relations are read";
        for (auto& chk : check_rll(gate_rep, extent)) {
            if (chk.inconclusive) {
                gate.status = CheckStatus::Inconclusive;
                gate.note = chk.note;
            }
            for (auto& m : chk.mismatches) gate.mismatches.push_back(std::move(m));
        }
        if (!gate.mismatches.empty()) gate.status = CheckStatus::Fail;
        bool gate_ok = gate.status == CheckStatus::Pass;
        rep.checks.push_back(std::move(gate));
        if (!gate_ok) {
            CheckRecord skipped;
            skipped.name = "current relations";
            skipped.anchor = "current relations at level zero, denominators cleared";
            skipped.status = CheckStatus::Inconclusive;
            skipped.note = "not run: the consistency gate failed";
            rep.checks.push_back(std::move(skipped));
            return rep;
        }
    }

    for (auto& chk : check_drinfeld(extent, hook)) {
        CheckRecord rec;
        rec.name = chk.name;
        rec.anchor = "current relations at level zero, denominators cleared";
        rec.mismatches = std::move(chk.mismatches);
        if (chk.inconclusive) {
            rec.status = CheckStatus::Inconclusive;
            rec.note = chk.note;
        } else if (!rec.mismatches.empty()) {
            rec.status = CheckStatus::Fail;
        }
        rep.checks.push_back(std::move(rec));
    }
    return rep;
}

inline VerificationReport run_coproduct_transport(const SuiteConfig& cfg) {
    VerificationReport rep;
    rep.suite = "coproduct-transport";
    const int W = cfg.weight;
    Spot spot = make_spot(cfg);
    static const std::map<Family, std::string> anchors = {
        {Family::K1, "Delta(k1) = k1 (x) k1 + k1 f (x) e k1"},
        {Family::K2, "Delta(k2) = sum (-1)^n k2 f^n (x) e^n k2"},
        {Family::E, "Delta(e) = e (x) 1 + sum (-1)^n k2 f^n k1^{-1} (x) e^{n+1}"},
        {Family::F, "Delta(f) = 1 (x) f + sum (-1)^n f^{n+1} (x) k1^{-1} e^n k2"}};
    for (Sign s : signs_of(cfg)) {
        int lo = s == Sign::Plus ? 0 : -W, hi = s == Sign::Plus ? W : 0;
        Mat2<NCPoly> l = build_L_symbolic(s, W, W);
        if (cfg.corruption) {
            std::string rest;
            if (target_is(*cfg.corruption, "L:", &rest)) {
                int i = rest[0] - '0', j = rest[2] - '0';
                try_poke(l(i, j), cfg.corruption->ez, 0, NCPoly(1));
            }
        }
        auto dl = rs_coproduct(l, s, W);
        auto g = gauss_decompose(dl, W);
        std::map<Family, const T2Dist*> matrix_route = {
            {Family::K1, &g.k1}, {Family::K2, &g.k2}, {Family::E, &g.e}, {Family::F, &g.f}};
        for (auto fam : {Family::K1, Family::K2, Family::E, Family::F}) {
            T2Dist closed = closed_coproduct(fam, s, W, W);
            if (cfg.corruption) {
                std::string rest;
                if (target_is(*cfg.corruption, "cop:", &rest) && fam == family_of(rest))
                    try_poke(closed, cfg.corruption->ez, 0, TensorPoly<2>(1));
            }
            CheckRecord rec;
            rec.name = std::string("coproduct transport ") + family_name(fam) + sign_tag(s);
            rec.anchor = anchors.at(fam);
            record_compare(rec, *matrix_route.at(fam), closed, lo, hi, 0, 0, spot);
            rep.checks.push_back(std::move(rec));
        }
    }
    return rep;
}

inline VerificationReport run_antipode_transport(const SuiteConfig& cfg) {
    VerificationReport rep;
    rep.suite = "antipode-transport";
    const int W = cfg.weight;
    Spot spot = make_spot(cfg);
    static const std::map<Family, std::string> anchors = {
        {Family::K1, "S(k1) = k1^{-1} + f k2^{-1} e"},
        {Family::K2, "S(k2) = k2^{-1} - f k2^{-1} {sum (-1)^n (k1 f k2^{-1} e)^n} k1 k2^{-1} e"},
        {Family::E, "S(e) = -{sum (-1)^n (k1 f k2^{-1} e)^n} k1 k2^{-1} e"},
        {Family::F, "S(f) = -f k2^{-1} {sum (-1)^n (k1 f k2^{-1} e)^n} k1"}};
    for (Sign s : signs_of(cfg)) {
        int lo = s == Sign::Plus ? 0 : -W, hi = s == Sign::Plus ? W : 0;
        Mat2<NCPoly> l = build_L_symbolic(s, W, W);
        Mat2<NCPoly> inv = mat_inverse(l, W);
        auto reads = antipode_reads(inv, W);
        std::map<Family, const NCDist*> matrix_route = {{Family::K1, &reads.k1},
                                                        {Family::K2, &reads.k2},
                                                        {Family::E, &reads.e},
                                                        {Family::F, &reads.f}};
        for (auto fam : {Family::K1, Family::K2, Family::E, Family::F}) {
            NCDist closed = closed_antipode(fam, s, W, W);
            if (cfg.corruption) {
                std::string rest;
                if (target_is(*cfg.corruption, "anti:", &rest) && fam == family_of(rest))
                    try_poke(closed, cfg.corruption->ez, 0, NCPoly(1));
            }
            CheckRecord rec;
            rec.name = std::string("antipode transport ") + family_name(fam) + sign_tag(s);
            rec.anchor = anchors.at(fam);
            record_compare(rec, *matrix_route.at(fam), closed, lo, hi, 0, 0, spot);
            rep.checks.push_back(std::move(rec));
        }
    }
    return rep;
}

inline VerificationReport run_hopf_axioms(const SuiteConfig& cfg) {
    VerificationReport rep;
    rep.suite = "hopf-axioms";
    const int W = cfg.weight;
    Spot spot = make_spot(cfg);
    HopfTables tables = build_hopf_tables(W);
    if (cfg.corruption) {
        std::string rest;
        if (target_is(*cfg.corruption, "table:", &rest)) {
            // e.g. table:k1+0 corrupts the coproduct of mode 0 of k1+
            Family fam = family_of(rest.substr(0, rest.size() - 2));
            Sign s = rest[rest.size() - 2] == '+' ? Sign::Plus : Sign::Minus;
            int mode = rest.back() - '0';
            tables.cop[pack_gen(fam, s, mode)] =
                tables.cop[pack_gen(fam, s, mode)] + TensorPoly<2>(1);
        }
    }
    for (Sign s : signs_of(cfg)) {
        int lo = s == Sign::Plus ? 0 : -W, hi = s == Sign::Plus ? W : 0;
        for (auto fam : {Family::K1, Family::K2, Family::E, Family::F}) {
            T2Dist d = closed_coproduct(fam, s, W, W);
            std::string base = std::string(family_name(fam)) + sign_tag(s);

            CheckRecord coassoc;
            coassoc.name = "coassociativity " + base;
            coassoc.anchor = "(Delta (x) id) Delta = (id (x) Delta) Delta";
            record_compare(coassoc, coassoc_left(d, tables), coassoc_right(d, tables), lo, hi, 0,
                           0, spot);
            rep.checks.push_back(std::move(coassoc));

            CheckRecord counit;
            counit.name = "counit " + base;
            counit.anchor = "(eps (x) id) Delta = id = (id (x) eps) Delta";
            NCDist cur = current_dist(fam, s, W, W);
            record_compare(counit, counit_left(d), cur, lo, hi, 0, 0, spot, "(eps x id)");
            record_compare(counit, counit_right(d), cur, lo, hi, 0, 0, spot, "(id x eps)");
            rep.checks.push_back(std::move(counit));

            CheckRecord anti;
            anti.name = "antipode axiom " + base;
            anti.anchor = "m (S (x) id) Delta = eta eps = m (id (x) S) Delta";
            NCDist target = s == Sign::Plus ? NCDist::make(Var::Z, Support::LowerBounded, 0, W)
                                            : NCDist::make(Var::Z, Support::UpperBounded, -W, 0);
            if (!counit_value(fam).is_zero()) target.set_coeff(0, 0, NCPoly(1));
            record_compare(anti, antipode_convolve_left(d, tables), target, lo, hi, 0, 0, spot,
                           "(S x id)");
            record_compare(anti, antipode_convolve_right(d, tables), target, lo, hi, 0, 0, spot,
                           "(id x S)");
            rep.checks.push_back(std::move(anti));
        }
    }
    return rep;
}

inline VerificationReport run_counterexample(const SuiteConfig& cfg) {
    VerificationReport rep;
    rep.suite = "counterexample";
    const int W = std::max(1, cfg.weight);
    for (Sign s : signs_of(cfg)) {
        CheckRecord rec;
        rec.name = std::string("antipodes differ on k1") + sign_tag(s);
        rec.anchor = "S(k1) - k1^{-1} = f k2^{-1} e is nonzero at weight 1";
        NCDist transported = closed_antipode(Family::K1, s, W, W);
        NCDist plain = drinfeld_antipode(Family::K1, s, W, W);
        NCDist diff = transported - plain;
        NCPoly at_weight1 = diff.coeff(sign_factor(s) * 1).truncate_weight(1);
        if (at_weight1.is_zero()) {
            rec.status = CheckStatus::Fail;
            rec.note = "difference vanished at weight 1";
        } else {
            rec.note = "witness " + at_weight1.to_string();
        }
        rep.checks.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "evaluation witness";
        rec.anchor = "f+(z) k2+(z)^{-1} e+(z) has a nonzero coefficient in the representation";
        EvalWitness wit = counterexample_eval(std::max(2, W));
        if (!wit.nonzero) {
            rec.status = CheckStatus::Fail;
            rec.note = "no nonzero coefficient in the window";
        } else if (!wit.stable) {
            rec.status = CheckStatus::Fail;
            rec.note = "witness not stable under window enlargement";
        } else {
            rec.note = "witness at z^" + std::to_string(wit.exponent) + ": " + wit.value;
        }
        rep.checks.push_back(std::move(rec));
    }
    return rep;
}

}  // namespace suitedetail

inline VerificationReport run_suite(const SuiteConfig& cfg) {
    validate(cfg);
    using namespace suitedetail;
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    if (cfg.suite == "ybe") {
        rep = run_ybe(cfg);
    } else if (cfg.suite == "rll-eval") {
        rep = run_rll_eval(cfg);
    } else if (cfg.suite == "drinfeld-eval") {
        rep = run_drinfeld_eval(cfg);
    } else if (cfg.suite == "coproduct-transport") {
        rep = run_coproduct_transport(cfg);
    } else if (cfg.suite == "antipode-transport") {
        rep = run_antipode_transport(cfg);
    } else if (cfg.suite == "hopf-axioms") {
        rep = run_hopf_axioms(cfg);
    } else if (cfg.suite == "counterexample") {
        rep = run_counterexample(cfg);
    } else {
        // all: the subsuites run as independent tasks; assembly order is fixed
        std::vector<std::string> order = {"ybe",
                                          "rll-eval",
                                          "drinfeld-eval",
                                          "coproduct-transport",
                                          "antipode-transport",
                                          "hopf-axioms",
                                          "counterexample"};
        std::vector<std::future<VerificationReport>> futs;
        for (const auto& name : order) {
            SuiteConfig sub = cfg;
            sub.suite = name;
            futs.push_back(std::async(std::launch::async, [sub] { return run_suite(sub); }));
        }
        rep.suite = "all";
        for (auto& f : futs) {
            VerificationReport sub = f.get();
            for (auto& c : sub.checks) {
                c.name = sub.suite + ": " + c.name;
                rep.checks.push_back(std::move(c));
            }
        }
    }
    rep.params["suite"] = cfg.suite;
    rep.params["weight"] = std::to_string(cfg.weight);
    rep.params["zwindow"] = "[" + std::to_string(cfg.zmin) + "," + std::to_string(cfg.zmax) + "]";
    rep.params["wwindow"] = "[" + std::to_string(cfg.wmin) + "," + std::to_string(cfg.wmax) + "]";
    rep.params["sign"] = cfg.sign;
    rep.params["spot_check"] = cfg.spot_check ? std::to_string(cfg.spot_seed) : "off";
    if (cfg.corruption)
        rep.params["corruption"] = cfg.corruption->target + "@z^" +
                                   std::to_string(cfg.corruption->ez);
    auto end = std::chrono::steady_clock::now();
    rep.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return rep;
}

}  // namespace qav
