#pragma once

// The two-dimensional evaluation representation at level zero. L+(z) and
// L-(z) are directional expansions of a contraction of R(z/a) against one
// tensor factor of the R matrix; the evaluation parameter a is a formal unit,
// so every check here stays exact.
//
// The construction is self-validating: both factor choices are built, the
// zero-mode triangularity constraints pick the consistent one, and the
// exchange-relation suite gates everything downstream. For the
// accepted contraction the aux-space pairing is transposed relative to the
// printed basis order, so the exchange intertwiner uses the same transposed
// index pairing as the contraction itself. All relation checks run in
// denominator-cleared form: rational prefactors are multiplied out to finite
// polynomial matrices, which keeps every product inside the windowed-support
// rules.

#include <qav/realizations.hpp>

#include <functional>

namespace qav {

using MDist = FormalDist<MatS>;

enum class FactorChoice { FirstLeg, SecondLeg };
inline const char* factor_choice_name(FactorChoice c) {
    return c == FactorChoice::FirstLeg ? "first-leg" : "second-leg";
}

namespace evaldetail {

// printed R as rational entries in a formal ratio u: pair (num, den) of
// polynomials, den = 1 - u q^2 for the middle block
struct Rat {
    std::vector<std::pair<int, ScalarPoly>> num;  // exponent of u -> coefficient
    bool unit_den = false;                        // corners have denominator 1
    bool zero = false;
};

inline Rat r_entry(int row, int col) {
    const ScalarPoly one(1), q = ScalarPoly::q(1), q2 = ScalarPoly::q(2);
    Rat r;
    if (row == 1 && col == 1) {
        r.num = {{0, one}};
        r.unit_den = true;
    } else if (row == 4 && col == 4) {
        r.num = {{0, one}};
        r.unit_den = true;
    } else if ((row == 2 && col == 2) || (row == 3 && col == 3)) {
        r.num = {{0, q}, {1, ScalarPoly(0) - q}};  // (1-u) q
    } else if (row == 2 && col == 3) {
        r.num = {{1, one - q2}};  // u (1-q^2)
    } else if (row == 3 && col == 2) {
        r.num = {{0, one - q2}};  // 1-q^2
    } else {
        r.zero = true;
    }
    return r;
}

// instantiate a polynomial in u as a finite distribution, u = z * a^{-1}
inline SDist poly_in_z_over_a(const std::vector<std::pair<int, ScalarPoly>>& terms) {
    int lo = 0, hi = 0;
    for (auto& [p, c] : terms) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    SDist d = SDist::make(Var::Z, Support::Finite, lo, hi);
    for (auto& [p, c] : terms) d.add_coeff(p, 0, c * ScalarPoly::unit(Unit::A, -p));
    return d;
}

inline MDist lift(const SDist& s, int module_row, int module_col) {
    return map_coeffs_to<MatS>(
        s, [&](const ScalarPoly& c) { return unit_matrix(module_row, module_col, c); });
}

}  // namespace evaldetail

// one aux entry of the contraction: l_ij[k,l] = R[(ik),(jl)] for the first
// factor choice, R[(ki),(lj)] for the second
inline MDist eval_l_entry(int i, int j, Sign sign, FactorChoice choice, int win) {
    using namespace evaldetail;
    const bool asc = sign == Sign::Plus;
    int lo = asc ? 0 : -win, hi = asc ? win : 0;
    MDist acc = asc ? MDist::make(Var::Z, Support::LowerBounded, lo, hi)
                    : MDist::make(Var::Z, Support::UpperBounded, lo, hi);
    for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
            int row = choice == FactorChoice::FirstLeg ? 2 * (i - 1) + k : 2 * (k - 1) + i;
            int col = choice == FactorChoice::FirstLeg ? 2 * (j - 1) + l : 2 * (l - 1) + j;
            Rat rat = r_entry(row, col);
            if (rat.zero) continue;
            SDist num = poly_in_z_over_a(rat.num);
            SDist series;
            if (rat.unit_den) {
                if (!asc) {
                    // a constant entry is its own descending expansion
                    series = SDist::make(Var::Z, Support::UpperBounded, lo, hi);
                    for (const auto& [e, c] : num.coeffs())
                        if (e[0] >= lo && e[0] <= hi) series.add_coeff(e[0], 0, c);
                } else {
                    series = SDist::make(Var::Z, Support::LowerBounded, lo, hi);
                    for (const auto& [e, c] : num.coeffs())
                        if (e[0] >= lo && e[0] <= hi) series.add_coeff(e[0], 0, c);
                }
            } else {
                SDist den = poly_in_z_over_a(
                    {{0, ScalarPoly(1)}, {1, ScalarPoly(0) - ScalarPoly::q(2)}});
                series = expand_rational(num, den, Var::Z, asc, lo, hi);
            }
            acc = acc + lift(series, k, l);
        }
    return acc;
}

inline Mat2<MatS> eval_l_matrix(Sign sign, FactorChoice choice, int win) {
    Mat2<MatS> m;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) m(i, j) = eval_l_entry(i, j, sign, choice, win);
    return m;
}

// zero-mode constraints: l+_21[0] = 0, l-_12[0] = 0, and the diagonal zero
// modes of the two signs are mutually inverse
inline std::string triangularity_violation(const Mat2<MatS>& lp, const Mat2<MatS>& lm) {
    if (!lp(2, 1).coeff(0).is_zero())
        return "l+_21[0] = " + lp(2, 1).coeff(0).to_string();
    if (!lm(1, 2).coeff(0).is_zero())
        return "l-_12[0] = " + lm(1, 2).coeff(0).to_string();
    for (int i = 1; i <= 2; ++i) {
        MatS prod = lp(i, i).coeff(0) * lm(i, i).coeff(0);
        MatS prod2 = lm(i, i).coeff(0) * lp(i, i).coeff(0);
        if (!(prod == MatS(1)) || !(prod2 == MatS(1)))
            return "l_" + std::to_string(i) + std::to_string(i) +
                   "[0] zero modes are not mutually inverse: " + prod.to_string();
    }
    return {};
}

struct EvalRep {
    FactorChoice choice;
    std::string rejected_reason;  // why the other factor choice failed
    Mat2<MatS> lp, lm;
    GaussFactors<MatS> gp, gm;
    MDist x_plus, x_minus;  // in z, level 0
};

// try both factor choices, accept the one that satisfies the zero-mode
// constraints; a configuration error if neither does
inline EvalRep build_eval_rep(int win) {
    std::string reasons[2];
    for (FactorChoice choice : {FactorChoice::SecondLeg, FactorChoice::FirstLeg}) {
        Mat2<MatS> lp = eval_l_matrix(Sign::Plus, choice, win);
        Mat2<MatS> lm = eval_l_matrix(Sign::Minus, choice, win);
        std::string bad = triangularity_violation(lp, lm);
        if (!bad.empty()) {
            reasons[choice == FactorChoice::SecondLeg ? 0 : 1] =
                std::string(factor_choice_name(choice)) + ": " + bad;
            continue;
        }
        EvalRep rep;
        rep.choice = choice;
        rep.rejected_reason = reasons[0];
        rep.lp = lp;
        rep.lm = lm;
        rep.gp = gauss_decompose(lp, kExpInf);
        rep.gm = gauss_decompose(lm, kExpInf);
        rep.x_plus = rep.gp.e - rep.gm.e;
        rep.x_minus = rep.gp.f - rep.gm.f;
        return rep;
    }
    throw Error("both factor choices violate the zero-mode constraints: " + reasons[0] + " / " +
                reasons[1]);
}

// ---------------------------------------------------------------------------
// exchange relations
// ---------------------------------------------------------------------------

namespace evaldetail {

// denominator-cleared intertwiner (w - z q^2) R(z/w), as finite polynomial
// matrices; index pairing matches the factor choice (the second-leg
// contraction pairs the aux spaces in the transposed basis order)
inline Mat<FormalDist<MatS>, 4> cleared_r_zw(FactorChoice choice) {
    const ScalarPoly one(1), q = ScalarPoly::q(1), q2 = ScalarPoly::q(2);
    auto fin = [&](std::initializer_list<std::pair<std::array<int, 2>, ScalarPoly>> terms) {
        int zlo = 0, zhi = 0, wlo = 0, whi = 0;
        for (auto& [e, c] : terms) {
            zlo = std::min(zlo, e[0]);
            zhi = std::max(zhi, e[0]);
            wlo = std::min(wlo, e[1]);
            whi = std::max(whi, e[1]);
        }
        MDist d = MDist::make(Var::Z, Support::Finite, zlo, zhi);
        d.axis(Var::W) = Axis{true, Support::Finite, wlo, whi};
        for (auto& [e, c] : terms)
            if (!c.is_zero()) d.add_coeff(e[0], e[1], c * MatS(1));
        return d;
    };
    // (w - z q^2) R(z/w):
    //   corners   w - z q^2
    //   middle    q (w - z)
    //   upper     z (1 - q^2)   [printed row 2, col 3]
    //   lower     w (1 - q^2)   [printed row 3, col 2]
    MDist corner = fin({{{0, 1}, one}, {{1, 0}, ScalarPoly(0) - q2}});
    MDist middle = fin({{{0, 1}, q}, {{1, 0}, ScalarPoly(0) - q}});
    MDist upper = fin({{{1, 0}, one - q2}});
    MDist lower = fin({{{0, 1}, one - q2}});
    Mat<FormalDist<MatS>, 4> r;
    r(1, 1) = corner;
    r(4, 4) = corner;
    r(2, 2) = middle;
    r(3, 3) = middle;
    if (choice == FactorChoice::FirstLeg) {
        r(2, 3) = upper;
        r(3, 2) = lower;
    } else {
        r(2, 3) = lower;  // transposed pairing
        r(3, 2) = upper;
    }
    return r;
}

inline MDist to_w(const MDist& d) {
    MDist out;
    out.axis(Var::W) = d.axis(Var::Z);
    for (const auto& [e, c] : d.coeffs()) out.add_coeff(0, e[0], c);
    return out;
}

// L acting on aux slot 1 or 2 of the 4-dim aux pair
inline Mat<FormalDist<MatS>, 4> aux_place(const Mat2<MatS>& l, int slot) {
    Mat<FormalDist<MatS>, 4> out;
    for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k)
            for (int j = 1; j <= 2; ++j)
                for (int l2 = 1; l2 <= 2; ++l2) {
                    int row = 2 * (i - 1) + k, col = 2 * (j - 1) + l2;
                    if (slot == 1 && k == l2) out(row, col) = l(i, j);
                    if (slot == 2 && i == j) out(row, col) = l(k, l2);
                }
    return out;
}

}  // namespace evaldetail

struct RelationCheck {
    std::string name;
    std::vector<Mismatch> mismatches;
    bool inconclusive = false;
    std::string note;
};

// all four sign families of the cleared exchange relation on |exp| <= extent
inline std::vector<RelationCheck> check_rll(const EvalRep& rep, int extent) {
    using namespace evaldetail;
    std::vector<RelationCheck> out;
    auto cleared = cleared_r_zw(rep.choice);
    for (auto [s1, s2] : {std::pair{Sign::Plus, Sign::Plus},
                          std::pair{Sign::Minus, Sign::Minus},
                          std::pair{Sign::Plus, Sign::Minus},
                          std::pair{Sign::Minus, Sign::Plus}}) {
        const Mat2<MatS>& a = s1 == Sign::Plus ? rep.lp : rep.lm;
        const Mat2<MatS>& b = s2 == Sign::Plus ? rep.lp : rep.lm;
        Mat2<MatS> bw, aw;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) bw(i, j) = to_w(b(i, j));
        auto l1 = aux_place(a, 1);
        auto l2 = aux_place(bw, 2);
        auto lhs = cleared * l1 * l2;
        auto rhs = l2 * l1 * cleared;
        RelationCheck chk;
        chk.name = std::string("rll ") + (s1 == Sign::Plus ? "+" : "-") +
                   (s2 == Sign::Plus ? "+" : "-");
        int zlo = s1 == Sign::Plus ? 0 : -extent;
        int zhi = s1 == Sign::Plus ? extent : 0;
        int wlo = s2 == Sign::Plus ? 0 : -extent;
        int whi = s2 == Sign::Plus ? extent : 0;
        try {
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= 4; ++j) {
                    auto mm = dist_compare(lhs(i, j), rhs(i, j), zlo, zhi, wlo, whi);
                    for (auto& m : mm) {
                        m.location = "entry(" + std::to_string(i) + "," + std::to_string(j) +
                                     ") " + m.location;
                        chk.mismatches.push_back(m);
                    }
                }
        } catch (const Inconclusive& e) {
            chk.inconclusive = true;
            chk.note = e.what();
        }
        out.push_back(std::move(chk));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Drinfeld relations at level zero
// ---------------------------------------------------------------------------

namespace evaldetail {

// finite polynomial in z and w with matrix-unit coefficients
inline MDist poly_zw(std::initializer_list<std::pair<std::array<int, 2>, ScalarPoly>> terms) {
    int zlo = 0, zhi = 0, wlo = 0, whi = 0;
    for (auto& [e, c] : terms) {
        zlo = std::min(zlo, e[0]);
        zhi = std::max(zhi, e[0]);
        wlo = std::min(wlo, e[1]);
        whi = std::max(whi, e[1]);
    }
    MDist d = MDist::make(Var::Z, Support::Finite, zlo, zhi);
    d.axis(Var::W) = Axis{true, Support::Finite, wlo, whi};
    for (auto& [e, c] : terms)
        if (!c.is_zero()) d.add_coeff(e[0], e[1], c * MatS(1));
    return d;
}

inline MDist z_minus_w() {
    return poly_zw({{{1, 0}, ScalarPoly(1)}, {{0, 1}, ScalarPoly(-1)}});
}
inline MDist zq_minus_wqinv() {
    return poly_zw({{{1, 0}, ScalarPoly::q(1)}, {{0, 1}, ScalarPoly(0) - ScalarPoly::q(-1)}});
}
inline MDist zqinv_minus_wq() {
    return poly_zw({{{1, 0}, ScalarPoly::q(-1)}, {{0, 1}, ScalarPoly(0) - ScalarPoly::q(1)}});
}

inline void collect(RelationCheck& chk, const MDist& lhs, const MDist& rhs, int zlo, int zhi,
                    int wlo, int whi) {
    try {
        auto mm = dist_compare(lhs, rhs, zlo, zhi, wlo, whi);
        chk.mismatches.insert(chk.mismatches.end(), mm.begin(), mm.end());
    } catch (const Inconclusive& e) {
        chk.inconclusive = true;
        chk.note = e.what();
    }
}

}  // namespace evaldetail

// every defining relation of the current realization, checked exactly on
// symmetric windows |exp| <= extent; the delta-bearing bracket uses enlarged
// internal windows so the compared band is exact. The optional hook mutates
// the representation before checking (fault injection).
inline std::vector<RelationCheck> check_drinfeld(
    int extent, const std::function<void(EvalRep&)>& hook = {}) {
    using namespace evaldetail;
    std::vector<RelationCheck> out;
    const int N = extent;

    EvalRep rep = build_eval_rep(N + 2);
    if (hook) hook(rep);
    auto wk = [&](const MDist& d) { return to_w(d); };

    // 1. diagonal zero modes are mutually inverse
    {
        RelationCheck chk;
        chk.name = "zero-mode inverses";
        auto check_pair = [&](const MDist& p, const MDist& m, const std::string& which) {
            MatS ab = p.coeff(0) * m.coeff(0);
            MatS ba = m.coeff(0) * p.coeff(0);
            if (!(ab == MatS(1)))
                chk.mismatches.push_back(Mismatch{{0, 0}, which, ab.to_string(), MatS(1).to_string()});
            if (!(ba == MatS(1)))
                chk.mismatches.push_back(
                    Mismatch{{0, 0}, which + " (reversed)", ba.to_string(), MatS(1).to_string()});
        };
        check_pair(rep.gp.k1, rep.gm.k1, "k1+[0] k1-[0]");
        check_pair(rep.gp.k2, rep.gm.k2, "k2+[0] k2-[0]");
        out.push_back(std::move(chk));
    }

    auto kcur = [&](int which, Sign s) -> const MDist& {
        return which == 1 ? (s == Sign::Plus ? rep.gp.k1 : rep.gm.k1)
                          : (s == Sign::Plus ? rep.gp.k2 : rep.gm.k2);
    };
    auto sign_window = [&](Sign s, int& lo, int& hi) {
        lo = s == Sign::Plus ? 0 : -N;
        hi = s == Sign::Plus ? N : 0;
    };

    // 2. diagonal currents of the same index commute, all sign pairs
    for (int i : {1, 2}) {
        RelationCheck chk;
        chk.name = "k" + std::to_string(i) + " commutes with k" + std::to_string(i);
        for (Sign s : {Sign::Plus, Sign::Minus})
            for (Sign t : {Sign::Plus, Sign::Minus}) {
                MDist a = kcur(i, s), b = wk(kcur(i, t));
                int zlo, zhi, wlo, whi;
                sign_window(s, zlo, zhi);
                sign_window(t, wlo, whi);
                collect(chk, a * b, b * a, zlo, zhi, wlo, whi);
            }
        out.push_back(std::move(chk));
    }

    // 3. the mixed k1 k2 exchange collapses at level zero to commutation
    {
        RelationCheck chk;
        chk.name = "k1 k2 mixed exchange";
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            MDist a = kcur(1, opposite(s)), b = wk(kcur(2, s));
            int zlo, zhi, wlo, whi;
            sign_window(opposite(s), zlo, zhi);
            sign_window(s, wlo, whi);
            collect(chk, a * b, b * a, zlo, zhi, wlo, whi);
        }
        out.push_back(std::move(chk));
    }

    // X currents in w for the conjugation relations
    MDist xp_w = wk(rep.x_plus), xm_w = wk(rep.x_minus);

    // 4-5. (z-w) k_i(z) X+(w) = (prefactor) X+(w) k_i(z)
    for (int i : {1, 2}) {
        RelationCheck chk;
        chk.name = "k" + std::to_string(i) + " vs X+";
        MDist pref = i == 1 ? zq_minus_wqinv() : zqinv_minus_wq();
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const MDist& k = kcur(i, s);
            MDist lhs = z_minus_w() * k * xp_w;
            MDist rhs = pref * xp_w * k;
            int zlo, zhi;
            sign_window(s, zlo, zhi);
            collect(chk, lhs, rhs, zlo, zhi, -N, N);
        }
        out.push_back(std::move(chk));
    }

    // 6-7. (z-w) X-(w) k_i(z) = (prefactor) k_i(z) X-(w)
    for (int i : {1, 2}) {
        RelationCheck chk;
        chk.name = "k" + std::to_string(i) + " vs X-";
        MDist pref = i == 1 ? zq_minus_wqinv() : zqinv_minus_wq();
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const MDist& k = kcur(i, s);
            MDist lhs = z_minus_w() * xm_w * k;
            MDist rhs = pref * k * xm_w;
            int zlo, zhi;
            sign_window(s, zlo, zhi);
            collect(chk, lhs, rhs, zlo, zhi, -N, N);
        }
        out.push_back(std::move(chk));
    }

    // 8. same-sign X exchange
    {
        RelationCheck chk;
        chk.name = "X same-sign exchange";
        MDist xp_z = rep.x_plus, xm_z = rep.x_minus;
        collect(chk, zq_minus_wqinv() * xp_z * xp_w, xp_w * xp_z * zqinv_minus_wq(), -N, N, -N, N);
        collect(chk, zqinv_minus_wq() * xm_z * xm_w, xm_w * xm_z * zq_minus_wqinv(), -N, N, -N, N);
        out.push_back(std::move(chk));
    }

    // 9. the bracket [X+(z), X-(w)]: delta terms with the diagonal-current
    // combinations k2 k1^{-1} of each sign
    {
        RelationCheck chk;
        chk.name = "X+ X- bracket";
        try {
            EvalRep big = build_eval_rep(3 * N + 2);
            if (hook) hook(big);
            MDist kplus = (big.gp.k2 * dist_inverse(big.gp.k1, kExpInf));
            MDist kminus = wk(big.gm.k2 * dist_inverse(big.gm.k1, kExpInf));
            auto delta = delta_dist<MatS>(2 * N + 1);
            ScalarPoly coeff = ScalarPoly::q(1) - ScalarPoly::q(-1);
            MDist rhs = coeff * (mul_delta(delta, kplus) - mul_delta(delta, kminus));
            MDist lhs = rep.x_plus * xm_w - xm_w * rep.x_plus;
            collect(chk, lhs, rhs, -N, N, -N, N);
        } catch (const Inconclusive& e) {
            chk.inconclusive = true;
            chk.note = e.what();
        }
        out.push_back(std::move(chk));
    }

    return out;
}

struct EvalWitness {
    bool nonzero = false;
    bool stable = false;
    int exponent = 0;
    std::string value;
};

// the antipode correction term f+(z) k2+(z)^{-1} e+(z) in the representation:
// its lowest nonzero coefficient certifies the counterexample
inline EvalWitness counterexample_eval(int win) {
    auto correction = [&](int n) {
        EvalRep rep = build_eval_rep(n);
        return (rep.gp.f * dist_inverse(rep.gp.k2, kExpInf) * rep.gp.e);
    };
    MDist c = correction(win);
    EvalWitness wit;
    for (int n = 0; n <= win && !wit.nonzero; ++n) {
        if (!c.coeff(n).is_zero()) {
            wit.nonzero = true;
            wit.exponent = n;
            wit.value = c.coeff(n).to_string();
        }
    }
    if (wit.nonzero) {
        MDist big = correction(win + 2);
        wit.stable = big.coeff(wit.exponent) == c.coeff(wit.exponent);
        for (int n = 0; n < wit.exponent; ++n)
            if (!big.coeff(n).is_zero()) wit.stable = false;
    }
    return wit;
}

}  // namespace qav
