#pragma once

// Constructors for both realizations and their Hopf operations:
//   - the 4x4 R matrix and its Yang-Baxter sides,
//   - the symbolic 2x2 L matrices over free current modes,
//   - the matrix coproduct Delta(L) = L(z g2^{+-1}) (x). L(z g1^{-+1}),
//   - the closed coproduct / antipode formulas for the currents k1, k2, e, f,
//   - the plain-inverse antipode used by the counterexample,
//   - the X currents and their coproducts by linearity.
//
// Central-element bookkeeping: g1 and g2 are the group-like central scalars
// of tensor legs 1 and 2 (g3 for three-leg checks). In the matrix coproduct
// the argument of a leg is rescaled by the central unit of the opposite leg;
// the closed formulas below use the same assignment, which is the one that
// makes the coproduct coassociative (leg arguments z*g2^s on leg 1 and
// z*g1^{-s} on leg 2 for sign s).

#include <qav/gauss.hpp>

#include <map>

namespace qav {

using SDist = FormalDist<ScalarPoly>;
using NCDist = FormalDist<NCPoly>;
using T2Dist = FormalDist<TensorPoly<2>>;
using T3Dist = FormalDist<TensorPoly<3>>;

inline int min_mode(Family f, Sign s) { return Gen::valid(f, s, 0) ? 0 : 1; }

// the current as a windowed series of its own modes: sign + ascends in z,
// sign - descends
inline NCDist current_dist(Family fam, Sign s, int weight_cutoff, int win) {
    NCDist d = s == Sign::Plus ? NCDist::make(Var::Z, Support::LowerBounded, 0, win)
                               : NCDist::make(Var::Z, Support::UpperBounded, -win, 0);
    int top = std::min(win, weight_cutoff);
    for (int n = min_mode(fam, s); n <= top; ++n)
        d.set_coeff(sign_factor(s) * n, 0, NCPoly::generator(fam, s, n));
    return d;
}

inline NCDist nc_one(Sign s, int win) {
    NCDist d = s == Sign::Plus ? NCDist::make(Var::Z, Support::LowerBounded, 0, win)
                               : NCDist::make(Var::Z, Support::UpperBounded, -win, 0);
    d.set_coeff(0, 0, NCPoly(1));
    return d;
}

// ---------------------------------------------------------------------------
// R matrix
// ---------------------------------------------------------------------------

enum class RArg { Z, W, ZW };

namespace detail {
// remap a series in a single formal variable onto the requested argument
inline SDist remap_arg(const SDist& in, RArg arg) {
    if (arg == RArg::Z) return in;
    SDist out;
    if (arg == RArg::W) {
        out.axis(Var::W) = in.axis(Var::Z);
        for (const auto& [e, c] : in.coeffs()) out.add_coeff(0, e[0], c);
    } else {
        out.axis(Var::Z) = in.axis(Var::Z);
        out.axis(Var::W) = in.axis(Var::Z);
        for (const auto& [e, c] : in.coeffs()) out.add_coeff(e[0], e[0], c);
    }
    return out;
}

inline SDist finite_poly(std::initializer_list<std::pair<int, ScalarPoly>> terms) {
    int lo = 0, hi = 0;
    for (const auto& [n, c] : terms) {
        lo = std::min(lo, n);
        hi = std::max(hi, n);
    }
    SDist d = SDist::make(Var::Z, Support::Finite, lo, hi);
    for (const auto& [n, c] : terms)
        if (!c.is_zero()) d.add_coeff(n, 0, c);
    return d;
}
}  // namespace detail

// R(t) expanded ascending in t on [0..win], with t = z, w or zw.
// Row/column order (11), (12), (21), (22).
inline Mat<SDist, 4> r_matrix(int win, RArg arg = RArg::Z) {
    using detail::finite_poly;
    const ScalarPoly one(1), q = ScalarPoly::q(1), q2 = ScalarPoly::q(2);
    SDist den = finite_poly({{0, one}, {1, ScalarPoly(0) - q2}});          // 1 - t q^2
    SDist num_mid = finite_poly({{0, q}, {1, ScalarPoly(0) - q}});         // (1 - t) q
    SDist num_23 = finite_poly({{1, one - q2}});                           // t (1 - q^2)
    SDist num_32 = finite_poly({{0, one - q2}});                           // 1 - q^2

    SDist mid = expand_rational(num_mid, den, Var::Z, true, 0, win);
    SDist upper = expand_rational(num_23, den, Var::Z, true, 0, win);
    SDist lower = expand_rational(num_32, den, Var::Z, true, 0, win);

    SDist unit = SDist::make(Var::Z, Support::LowerBounded, 0, win);
    unit.set_coeff(0, 0, ScalarPoly(1));

    Mat<SDist, 4> r;
    r(1, 1) = detail::remap_arg(unit, arg);
    r(4, 4) = detail::remap_arg(unit, arg);
    r(2, 2) = detail::remap_arg(mid, arg);
    r(3, 3) = detail::remap_arg(mid, arg);
    r(2, 3) = detail::remap_arg(upper, arg);
    r(3, 2) = detail::remap_arg(lower, arg);
    return r;
}

// place a 4x4 two-leg matrix onto legs (a, b) of a three-fold tensor space
inline Mat<SDist, 8> place_r(const Mat<SDist, 4>& r, int leg_a, int leg_b) {
    auto digit = [](int idx, int leg) { return (idx >> (2 - leg)) & 1; };
    Mat<SDist, 8> out;
    for (int row = 0; row < 8; ++row)
        for (int col = 0; col < 8; ++col) {
            bool ok = true;
            for (int leg = 0; leg < 3; ++leg)
                if (leg != leg_a && leg != leg_b && digit(row, leg) != digit(col, leg)) ok = false;
            if (!ok) continue;
            int r_row = 2 * digit(row, leg_a) + digit(row, leg_b);
            int r_col = 2 * digit(col, leg_a) + digit(col, leg_b);
            out(row + 1, col + 1) = r(r_row + 1, r_col + 1);
        }
    return out;
}

// both sides of R12(z) R13(zw) R23(w) = R23(w) R13(zw) R12(z)
inline std::pair<Mat<SDist, 8>, Mat<SDist, 8>> ybe_sides(int win,
                                                         const Mat<SDist, 4>* replace_r12 = nullptr) {
    Mat<SDist, 4> rz = replace_r12 ? *replace_r12 : r_matrix(win, RArg::Z);
    Mat<SDist, 4> rzw = r_matrix(win, RArg::ZW);
    Mat<SDist, 4> rw = r_matrix(win, RArg::W);
    Mat<SDist, 8> a = place_r(rz, 0, 1), b = place_r(rzw, 0, 2), c = place_r(rw, 1, 2);
    return {a * b * c, c * b * a};
}

// ---------------------------------------------------------------------------
// symbolic L and the matrix Hopf operations
// ---------------------------------------------------------------------------

inline Mat2<NCPoly> build_L_symbolic(Sign s, int weight_cutoff, int win) {
    GaussFactors<NCPoly> g;
    g.e = current_dist(Family::E, s, weight_cutoff, win);
    g.f = current_dist(Family::F, s, weight_cutoff, win);
    g.k1 = current_dist(Family::K1, s, weight_cutoff, win);
    g.k2 = current_dist(Family::K2, s, weight_cutoff, win);
    Mat2<NCPoly> m = gauss_recompose(g);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) m(i, j) = m(i, j).truncate_weight(weight_cutoff);
    return m;
}

template <class Out, class C, class F>
FormalDist<Out> map_coeffs_to(const FormalDist<C>& d, F&& f) {
    FormalDist<Out> r;
    r.axis(Var::Z) = d.axis(Var::Z);
    r.axis(Var::W) = d.axis(Var::W);
    for (const auto& [e, c] : d.coeffs()) {
        Out v = f(c);
        if (!v.is_zero()) r.add_coeff(e[0], e[1], v);
    }
    return r;
}

inline T2Dist embed_leg(const NCDist& d, int leg) {
    return map_coeffs_to<TensorPoly<2>>(d,
                                        [&](const NCPoly& c) { return TensorPoly<2>::embed(c, leg); });
}

// leg argument units for coproduct sign s: leg 1 sees z*g2^s, leg 2 sees
// z*g1^{-s}
inline UnitExp leg1_unit(Sign s) { return UnitExp::of(Unit::G2, sign_factor(s)); }
inline UnitExp leg2_unit(Sign s) { return UnitExp::of(Unit::G1, -sign_factor(s)); }

// Delta(l_ij) = sum_k l_ik(z g2^s) (x) l_kj(z g1^{-s})
inline Mat2<TensorPoly<2>> rs_coproduct(const Mat2<NCPoly>& l, Sign s, int weight_cutoff) {
    Mat2<TensorPoly<2>> out;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            T2Dist acc;
            bool first = true;
            for (int k = 1; k <= 2; ++k) {
                T2Dist a = embed_leg(l(i, k).shifted(Var::Z, leg1_unit(s)), 0);
                T2Dist b = embed_leg(l(k, j).shifted(Var::Z, leg2_unit(s)), 1);
                T2Dist prod = (a * b).truncate_weight(weight_cutoff);
                acc = first ? prod : acc + prod;
                first = false;
            }
            out(i, j) = acc;
        }
    return out;
}

// counit on the matrix realization: the identity matrix of constant series
inline Mat2<ScalarPoly> rs_counit(int win, Sign s) {
    Mat2<ScalarPoly> m;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            SDist d = s == Sign::Plus ? SDist::make(Var::Z, Support::LowerBounded, 0, win)
                                      : SDist::make(Var::Z, Support::UpperBounded, -win, 0);
            if (i == j) d.set_coeff(0, 0, ScalarPoly(1));
            m(i, j) = d;
        }
    return m;
}

// ---------------------------------------------------------------------------
// closed formulas for the transported Hopf structure on the currents
// ---------------------------------------------------------------------------

struct CurrentSet {
    NCDist e, f, k1, k2;
    NCDist ik1, ik2;  // graded inverses of k1, k2
};

inline CurrentSet make_currents(Sign s, int weight_cutoff, int win) {
    CurrentSet c;
    c.e = current_dist(Family::E, s, weight_cutoff, win);
    c.f = current_dist(Family::F, s, weight_cutoff, win);
    c.k1 = current_dist(Family::K1, s, weight_cutoff, win);
    c.k2 = current_dist(Family::K2, s, weight_cutoff, win);
    c.ik1 = dist_inverse(c.k1, weight_cutoff);
    c.ik2 = dist_inverse(c.k2, weight_cutoff);
    return c;
}

// Delta(k1) = k1 (x) k1 + k1 f (x) e k1
// Delta(k2) = sum_n (-1)^n k2 f^n (x) e^n k2
// Delta(e)  = e (x) 1 + sum_n (-1)^n k2 f^n k1^{-1} (x) e^{n+1}
// Delta(f)  = 1 (x) f + sum_n (-1)^n f^{n+1} (x) k1^{-1} e^n k2
// with leg arguments z g2^s and z g1^{-s} folded into the scalars.
inline T2Dist closed_coproduct(Family fam, Sign s, int weight_cutoff, int win) {
    CurrentSet c = make_currents(s, weight_cutoff, win);
    auto L1 = [&](const NCDist& d) { return embed_leg(d.shifted(Var::Z, leg1_unit(s)), 0); };
    auto L2 = [&](const NCDist& d) { return embed_leg(d.shifted(Var::Z, leg2_unit(s)), 1); };
    const int W = weight_cutoff;

    T2Dist e1 = L1(c.e), f1 = L1(c.f), k11 = L1(c.k1), k21 = L1(c.k2), ik11 = L1(c.ik1);
    T2Dist e2 = L2(c.e), f2 = L2(c.f), k12 = L2(c.k1), k22 = L2(c.k2), ik12 = L2(c.ik1);
    T2Dist one1 = L1(nc_one(s, win)), one2 = L2(nc_one(s, win));

    auto mul = [&](const T2Dist& a, const T2Dist& b) { return (a * b).truncate_weight(W); };

    switch (fam) {
        case Family::K1:
            return mul(k11, k12) + mul(mul(k11, f1), mul(e2, k12));
        case Family::K2: {
            T2Dist acc;
            T2Dist left = k21, right = k22;
            bool neg = false;
            for (int n = 0;; ++n) {
                T2Dist term = mul(left, right);
                if (term.is_zero() && n > 0) break;
                acc = n == 0 ? term : (neg ? acc - term : acc + term);
                if (n > W) break;
                left = mul(left, f1);
                right = mul(e2, right);
                neg = !neg;
            }
            return acc;
        }
        case Family::E: {
            T2Dist acc = mul(e1, one2);
            T2Dist mid = k21;  // k2 f^n on leg 1
            T2Dist epow = e2;  // e^{n+1} on leg 2
            bool neg = false;
            for (int n = 0; n <= W + 1; ++n) {
                T2Dist term = mul(mul(mid, ik11), epow);
                if (term.is_zero() && n > 0) break;
                acc = neg ? acc - term : acc + term;
                mid = mul(mid, f1);
                epow = mul(epow, e2);
                neg = !neg;
            }
            return acc;
        }
        case Family::F: {
            T2Dist acc = mul(one1, f2);
            T2Dist fpow = f1;   // f^{n+1} on leg 1
            T2Dist mid = ik12;  // k1^{-1} e^n on leg 2
            bool neg = false;
            for (int n = 0; n <= W + 1; ++n) {
                T2Dist term = mul(fpow, mul(mid, k22));
                if (term.is_zero() && n > 0) break;
                acc = neg ? acc - term : acc + term;
                fpow = mul(fpow, f1);
                mid = mul(mid, e2);
                neg = !neg;
            }
            return acc;
        }
    }
    throw Error("unreachable");
}

// S(k1) = k1^{-1} + f k2^{-1} e
// S(k2) = k2^{-1} - f k2^{-1} {sum_n (-1)^n (k1 f k2^{-1} e)^n} k1 k2^{-1} e
// S(e)  = -{sum_n (-1)^n (k1 f k2^{-1} e)^n} k1 k2^{-1} e
// S(f)  = -f k2^{-1} {sum_n (-1)^n (k1 f k2^{-1} e)^n} k1
inline NCDist closed_antipode(Family fam, Sign s, int weight_cutoff, int win) {
    CurrentSet c = make_currents(s, weight_cutoff, win);
    const int W = weight_cutoff;
    auto mul = [&](const NCDist& a, const NCDist& b) { return (a * b).truncate_weight(W); };

    // geometric series sum_n (-1)^n (k1 f k2^{-1} e)^n
    NCDist loop = mul(mul(c.k1, c.f), mul(c.ik2, c.e));
    NCDist series = nc_one(s, win);
    NCDist power = series;
    for (int n = 1; n <= W + 1; ++n) {
        power = mul(power, loop);
        if (power.is_zero()) break;
        series = (n % 2) ? series - power : series + power;
    }

    switch (fam) {
        case Family::K1:
            return c.ik1 + mul(mul(c.f, c.ik2), c.e);
        case Family::K2:
            return c.ik2 -
                   mul(mul(mul(c.f, c.ik2), series), mul(mul(c.k1, c.ik2), c.e));
        case Family::E:
            return -mul(series, mul(mul(c.k1, c.ik2), c.e));
        case Family::F:
            return -mul(mul(mul(c.f, c.ik2), series), c.k1);
    }
    throw Error("unreachable");
}

// the antipode of the realization in which the diagonal currents simply invert
inline NCDist drinfeld_antipode(Family fam, Sign s, int weight_cutoff, int win) {
    if (fam != Family::K1 && fam != Family::K2)
        throw Error("old antipode: only the diagonal currents are needed here");
    return dist_inverse(current_dist(fam, s, weight_cutoff, win), weight_cutoff);
}

inline ScalarPoly counit_value(Family fam) {
    return (fam == Family::K1 || fam == Family::K2) ? ScalarPoly(1) : ScalarPoly(0);
}

// ---------------------------------------------------------------------------
// the X currents: X+ = e+(z g1^{-1}) - e-(z g1), X- = f+(z g1) - f-(z g1^{-1})
// ---------------------------------------------------------------------------

struct PhiImage {
    NCDist x_plus, x_minus;
    T2Dist dx_plus, dx_minus;  // coproducts derived by linearity, g1 -> g1 g2
};

inline PhiImage phi_map(int weight_cutoff, int win) {
    PhiImage r;
    const UnitExp g = UnitExp::of(Unit::G1, 1);
    const UnitExp ginv = UnitExp::of(Unit::G1, -1);
    r.x_plus = current_dist(Family::E, Sign::Plus, weight_cutoff, win).shifted(Var::Z, ginv) -
               current_dist(Family::E, Sign::Minus, weight_cutoff, win).shifted(Var::Z, g);
    r.x_minus = current_dist(Family::F, Sign::Plus, weight_cutoff, win).shifted(Var::Z, g) -
                current_dist(Family::F, Sign::Minus, weight_cutoff, win).shifted(Var::Z, ginv);
    UnitExp g12;
    g12[Unit::G1] = 1;
    g12[Unit::G2] = 1;
    UnitExp g12inv;
    g12inv[Unit::G1] = -1;
    g12inv[Unit::G2] = -1;
    r.dx_plus = closed_coproduct(Family::E, Sign::Plus, weight_cutoff, win).shifted(Var::Z, g12inv) -
                closed_coproduct(Family::E, Sign::Minus, weight_cutoff, win).shifted(Var::Z, g12);
    r.dx_minus = closed_coproduct(Family::F, Sign::Plus, weight_cutoff, win).shifted(Var::Z, g12) -
                 closed_coproduct(Family::F, Sign::Minus, weight_cutoff, win).shifted(Var::Z, g12inv);
    return r;
}

// ---------------------------------------------------------------------------
// mode-level coalgebra tables and the Hopf-axiom maps
// ---------------------------------------------------------------------------

// Delta and S on individual modes, read off from the current formulas. The
// coefficient of z^{sn} in Delta(g(z)) is Delta(g_n) because every term is
// weight-homogeneous of weight |n|.
struct HopfTables {
    std::map<uint32_t, TensorPoly<2>> cop;
    std::map<uint32_t, NCPoly> anti;
    int weight_cutoff = 0;

    const TensorPoly<2>& cop_of(uint32_t g) const {
        auto it = cop.find(g);
        if (it == cop.end())
            throw Error("no coproduct table entry for " + Gen::unpack(g).to_string());
        return it->second;
    }
    const NCPoly& anti_of(uint32_t g) const {
        auto it = anti.find(g);
        if (it == anti.end())
            throw Error("no antipode table entry for " + Gen::unpack(g).to_string());
        return it->second;
    }
};

inline HopfTables build_hopf_tables(int weight_cutoff) {
    HopfTables t;
    t.weight_cutoff = weight_cutoff;
    for (Sign s : {Sign::Plus, Sign::Minus})
        for (Family fam : {Family::E, Family::F, Family::K1, Family::K2}) {
            T2Dist d = closed_coproduct(fam, s, weight_cutoff, weight_cutoff);
            NCDist a = closed_antipode(fam, s, weight_cutoff, weight_cutoff);
            for (int n = min_mode(fam, s); n <= weight_cutoff; ++n) {
                uint32_t g = pack_gen(fam, s, n);
                t.cop[g] = d.coeff(sign_factor(s) * n, 0);
                t.anti[g] = a.coeff(sign_factor(s) * n, 0);
            }
        }
    return t;
}

namespace detail {
inline std::array<UnitExp, kNumUnits> subst_map(std::initializer_list<std::pair<Unit, UnitExp>> xs) {
    auto m = unit_identity_map();
    for (const auto& [u, img] : xs) m[static_cast<int>(u)] = img;
    return m;
}
inline UnitExp g1g2() {
    UnitExp u;
    u[Unit::G1] = 1;
    u[Unit::G2] = 1;
    return u;
}
}  // namespace detail

// Delta extended multiplicatively to a word
inline TensorPoly<2> delta_word(const Word& w, const HopfTables& t) {
    TensorPoly<2> acc{1};
    for (uint32_t g : w) acc = (acc * t.cop_of(g)).truncate_weight(t.weight_cutoff);
    return acc;
}

// S extended antimultiplicatively to a word
inline NCPoly antipode_word(const Word& w, const HopfTables& t) {
    NCPoly acc{1};
    for (size_t i = w.size(); i-- > 0;) acc = (acc * t.anti_of(w[i])).truncate_weight(t.weight_cutoff);
    return acc;
}

inline ScalarPoly counit_word(const Word& w) {
    for (uint32_t g : w)
        if (!Gen::unpack(g).is_diagonal_zero_mode()) return ScalarPoly(0);
    return ScalarPoly(1);
}

// (Delta (x) id): leg 1 splits into legs 1,2; old leg 2 becomes leg 3;
// central units g1 -> g1 g2, g2 -> g3
inline TensorPoly<3> delta_leg1(const TensorPoly<2>& x, const HopfTables& t) {
    using detail::subst_map;
    static const auto amb = subst_map({{Unit::G1, detail::g1g2()}, {Unit::G2, UnitExp::of(Unit::G3, 1)}});
    TensorPoly<3> out;
    for (const auto& [key, c] : x.terms()) {
        TensorPoly<2> d = delta_word(key[0], t);
        ScalarPoly cs = c.substitute_units(amb);
        for (const auto& [dk, dc] : d.terms()) {
            std::array<Word, 3> k3{dk[0], dk[1], key[1]};
            out.add_term(k3, cs * dc);
        }
    }
    return out.truncate_weight(t.weight_cutoff);
}

// (id (x) Delta): old leg 2 splits into legs 2,3; g2 -> g2 g3; the table
// values are relabeled from legs (1,2) to (2,3)
inline TensorPoly<3> delta_leg2(const TensorPoly<2>& x, const HopfTables& t) {
    using detail::subst_map;
    static const auto amb = subst_map({{Unit::G2, [] {
                                            UnitExp u;
                                            u[Unit::G2] = 1;
                                            u[Unit::G3] = 1;
                                            return u;
                                        }()}});
    static const auto tab = subst_map(
        {{Unit::G1, UnitExp::of(Unit::G2, 1)}, {Unit::G2, UnitExp::of(Unit::G3, 1)}});
    TensorPoly<3> out;
    for (const auto& [key, c] : x.terms()) {
        TensorPoly<2> d = delta_word(key[1], t);
        ScalarPoly cs = c.substitute_units(amb);
        for (const auto& [dk, dc] : d.terms()) {
            std::array<Word, 3> k3{key[0], dk[0], dk[1]};
            out.add_term(k3, cs * dc.substitute_units(tab));
        }
    }
    return out.truncate_weight(t.weight_cutoff);
}

// (eps (x) id): surviving leg keeps its content, g2 -> g1, g1 -> 1
inline NCPoly eps_leg1(const TensorPoly<2>& x) {
    static const auto amb = detail::subst_map({{Unit::G1, UnitExp{}}, {Unit::G2, UnitExp::of(Unit::G1, 1)}});
    NCPoly out;
    for (const auto& [key, c] : x.terms()) {
        ScalarPoly e = counit_word(key[0]);
        if (e.is_zero()) continue;
        out.add_term(key[1], (e * c).substitute_units(amb));
    }
    return out;
}

// (id (x) eps): g1 -> g1, g2 -> 1
inline NCPoly eps_leg2(const TensorPoly<2>& x) {
    static const auto amb = detail::subst_map({{Unit::G2, UnitExp{}}});
    NCPoly out;
    for (const auto& [key, c] : x.terms()) {
        ScalarPoly e = counit_word(key[1]);
        if (e.is_zero()) continue;
        out.add_term(key[0], (e * c).substitute_units(amb));
    }
    return out;
}

// m (S (x) id): S inverts the leg-1 central charge, then both legs multiply
// in the single algebra whose unit is g1
inline NCPoly mult_antipode_left(const TensorPoly<2>& x, const HopfTables& t) {
    static const auto amb = detail::subst_map(
        {{Unit::G1, UnitExp::of(Unit::G1, -1)}, {Unit::G2, UnitExp::of(Unit::G1, 1)}});
    NCPoly out;
    for (const auto& [key, c] : x.terms()) {
        NCPoly s = antipode_word(key[0], t);
        NCPoly prod = (s * NCPoly::term(key[1], ScalarPoly(1))).truncate_weight(t.weight_cutoff);
        out = out + c.substitute_units(amb) * prod;
    }
    return out;
}

// m (id (x) S)
inline NCPoly mult_antipode_right(const TensorPoly<2>& x, const HopfTables& t) {
    static const auto amb = detail::subst_map(
        {{Unit::G1, UnitExp::of(Unit::G1, 1)}, {Unit::G2, UnitExp::of(Unit::G1, -1)}});
    NCPoly out;
    for (const auto& [key, c] : x.terms()) {
        NCPoly s = antipode_word(key[1], t);
        NCPoly prod = (NCPoly::term(key[0], ScalarPoly(1)) * s).truncate_weight(t.weight_cutoff);
        out = out + c.substitute_units(amb) * prod;
    }
    return out;
}

// coefficient-wise lifts of the coalgebra maps to whole distributions
inline T3Dist coassoc_left(const T2Dist& d, const HopfTables& t) {
    return map_coeffs_to<TensorPoly<3>>(d, [&](const TensorPoly<2>& c) { return delta_leg1(c, t); });
}
inline T3Dist coassoc_right(const T2Dist& d, const HopfTables& t) {
    return map_coeffs_to<TensorPoly<3>>(d, [&](const TensorPoly<2>& c) { return delta_leg2(c, t); });
}
inline NCDist counit_left(const T2Dist& d) {
    return map_coeffs_to<NCPoly>(d, [](const TensorPoly<2>& c) { return eps_leg1(c); });
}
inline NCDist counit_right(const T2Dist& d) {
    return map_coeffs_to<NCPoly>(d, [](const TensorPoly<2>& c) { return eps_leg2(c); });
}
inline NCDist antipode_convolve_left(const T2Dist& d, const HopfTables& t) {
    return map_coeffs_to<NCPoly>(d, [&](const TensorPoly<2>& c) { return mult_antipode_left(c, t); });
}
inline NCDist antipode_convolve_right(const T2Dist& d, const HopfTables& t) {
    return map_coeffs_to<NCPoly>(d,
                                 [&](const TensorPoly<2>& c) { return mult_antipode_right(c, t); });
}

// The transported antipode images read off L^{-1}. The antipode is an
// antihomomorphism, so the e and f reads mirror the plain decomposition:
//   S(k1) = M11, S(e) = M11^{-1} M21, S(f) = M12 M11^{-1},
//   S(k2) = M22 - M12 M11^{-1} M21,  where M = L^{-1}.
template <class C>
GaussFactors<C> antipode_reads(const Mat2<C>& m, int weight_cutoff) {
    GaussFactors<C> g;
    g.k1 = m(1, 1);
    FormalDist<C> inv11 = dist_inverse(m(1, 1), weight_cutoff);
    g.e = (inv11 * m(2, 1)).truncate_weight(weight_cutoff);
    g.f = (m(1, 2) * inv11).truncate_weight(weight_cutoff);
    g.k2 = m(2, 2) - (m(1, 2) * inv11 * m(2, 1)).truncate_weight(weight_cutoff);
    return g;
}

}  // namespace qav
