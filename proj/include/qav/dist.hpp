#pragma once

// Windowed formal distributions in the spectral variables z, w with exact
// coefficients from an arbitrary ring (ScalarPoly, NCPoly, TensorPoly, or a
// scalar matrix). Every value carries, per variable, a support class and the
// window of exponents on which its coefficients are exact. Products are only
// formed when the support classes guarantee each output coefficient is a
// finite sum, and the output window is the region where all contributing
// terms were in-window.
//
// Support semantics per variable, window [lo, hi]:
//   LowerBounded : coefficients below lo are identically zero; exact for all
//                  exponents <= hi; unknown above hi (truncated tail).
//   UpperBounded : mirror image (zero above hi, exact >= lo).
//   Finite       : zero outside [lo, hi]; exact everywhere.
//   TwoSidedDelta: the formal delta(z/w); exact inside the window only, with
//                  the diagonal structure used by mul_delta.
//   Banded       : exact inside the window only, nothing known outside.

#include <qav/freealg.hpp>

#include <array>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace qav {

enum class Var : int { Z = 0, W = 1 };
inline const char* var_name(Var v) { return v == Var::Z ? "z" : "w"; }

enum class Support { LowerBounded, UpperBounded, Finite, TwoSidedDelta, Banded };

inline const char* support_name(Support s) {
    switch (s) {
        case Support::LowerBounded: return "lower-bounded";
        case Support::UpperBounded: return "upper-bounded";
        case Support::Finite: return "finite";
        case Support::TwoSidedDelta: return "two-sided-delta";
        default: return "banded";
    }
}

inline constexpr int kExpInf = std::numeric_limits<int>::max() / 4;

struct Axis {
    bool present = false;
    Support support = Support::Finite;
    int lo = 0;
    int hi = 0;

    // interval of exponents whose coefficients are exact
    int exact_lo() const {
        switch (support) {
            case Support::LowerBounded:
            case Support::Finite: return -kExpInf;
            default: return lo;
        }
    }
    int exact_hi() const {
        switch (support) {
            case Support::UpperBounded:
            case Support::Finite: return kExpInf;
            default: return hi;
        }
    }
    // true if coefficients outside [lo,hi] on the low / high side are known zero
    bool zero_below() const {
        return support == Support::LowerBounded || support == Support::Finite;
    }
    bool zero_above() const {
        return support == Support::UpperBounded || support == Support::Finite;
    }
};

// weight truncation and unit substitution fall through for coefficient rings
// without a grading (ScalarPoly, scalar matrices)
template <class C>
C coeff_truncate_weight(const C& c, int cutoff) {
    if constexpr (requires { c.truncate_weight(cutoff); })
        return c.truncate_weight(cutoff);
    else
        return c;
}

template <class C>
C coeff_substitute_units(const C& c, const std::array<UnitExp, kNumUnits>& image) {
    return c.substitute_units(image);
}

template <>
inline ScalarPoly coeff_substitute_units<ScalarPoly>(const ScalarPoly& c,
                                                     const std::array<UnitExp, kNumUnits>& image) {
    return c.substitute_units(image);
}

template <class C>
class FormalDist {
  public:
    using Exps = std::array<int, 2>;  // (z exponent, w exponent)

    FormalDist() = default;

    static FormalDist constant(const C& c) {
        FormalDist d;
        if (!c.is_zero()) d.coeffs_[Exps{0, 0}] = c;
        return d;
    }

    // a fresh value exact on [lo,hi] with the given class; coefficients are
    // filled by the caller through set_coeff
    static FormalDist make(Var v, Support s, int lo, int hi) {
        FormalDist d;
        d.axis(v) = Axis{true, s, lo, hi};
        return d;
    }

    Axis& axis(Var v) { return axes_[static_cast<int>(v)]; }
    const Axis& axis(Var v) const { return axes_[static_cast<int>(v)]; }

    const std::map<Exps, C>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    C coeff(int ez, int ew = 0) const {
        auto it = coeffs_.find(Exps{ez, ew});
        return it == coeffs_.end() ? C{} : it->second;
    }

    void set_coeff(int ez, int ew, const C& c) {
        if (!in_window(ez, ew)) throw Error("FormalDist: coefficient outside window");
        if (c.is_zero())
            coeffs_.erase(Exps{ez, ew});
        else
            coeffs_[Exps{ez, ew}] = c;
    }
    void add_coeff(int ez, int ew, const C& c) {
        if (c.is_zero()) return;
        if (!in_window(ez, ew)) throw Error("FormalDist: coefficient outside window");
        auto it = coeffs_.find(Exps{ez, ew});
        if (it == coeffs_.end()) {
            coeffs_.emplace(Exps{ez, ew}, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    bool in_window(int ez, int ew) const {
        return within(axes_[0], ez) && within(axes_[1], ew);
    }
    bool exact_at(int ez, int ew) const {
        return exact_within(axes_[0], ez) && exact_within(axes_[1], ew);
    }

    friend FormalDist operator+(const FormalDist& a, const FormalDist& b) {
        return combine(a, b, false);
    }
    friend FormalDist operator-(const FormalDist& a, const FormalDist& b) {
        return combine(a, b, true);
    }
    friend FormalDist operator-(const FormalDist& a) {
        FormalDist r = a;
        for (auto& [e, c] : r.coeffs_) c = -c;
        return r;
    }
    friend FormalDist operator*(const ScalarPoly& s, const FormalDist& a) {
        FormalDist r = a;
        if (s.is_zero()) {
            r.coeffs_.clear();
            return r;
        }
        for (auto& [e, c] : r.coeffs_) c = s * c;
        r.prune();
        return r;
    }

    // exact windowed product; throws Inconclusive on incompatible supports
    friend FormalDist operator*(const FormalDist& a, const FormalDist& b) {
        FormalDist r;
        for (int i = 0; i < 2; ++i) r.axes_[i] = mul_axis(a.axes_[i], b.axes_[i]);
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) {
                int ez = ea[0] + eb[0], ew = ea[1] + eb[1];
                if (!r.in_window(ez, ew)) continue;
                r.add_coeff(ez, ew, ca * cb);
            }
        return r;
    }

    // argument rescaling z -> z * unit: the coefficient at exponent n picks up
    // unit^n; windows unchanged
    FormalDist shifted(Var v, const UnitExp& unit) const {
        FormalDist r = *this;
        r.coeffs_.clear();
        for (const auto& [e, c] : coeffs_) {
            int n = e[static_cast<int>(v)];
            UnitExp u;
            for (int i = 0; i < kNumUnits; ++i) u.e[i] = static_cast<int16_t>(unit.e[i] * n);
            r.coeffs_[e] = ScalarPoly::monomial(BigRat(1), u) * c;
        }
        return r;
    }

    FormalDist truncate_weight(int cutoff) const {
        FormalDist r = *this;
        r.coeffs_.clear();
        for (const auto& [e, c] : coeffs_) {
            C t = coeff_truncate_weight(c, cutoff);
            if (!t.is_zero()) r.coeffs_[e] = t;
        }
        return r;
    }

    FormalDist substitute_units(const std::array<UnitExp, kNumUnits>& image) const {
        FormalDist r = *this;
        r.coeffs_.clear();
        for (const auto& [e, c] : coeffs_) {
            C t = coeff_substitute_units(c, image);
            if (!t.is_zero()) r.coeffs_[e] = t;
        }
        return r;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (const auto& [e, c] : coeffs_) {
            if (!s.empty()) s += "  +  ";
            s += "[" + location_string(e[0], e[1]) + "] (" + c.to_string() + ")";
        }
        return s;
    }

    std::string location_string(int ez, int ew) const {
        std::string s;
        if (axes_[0].present) s += "z^" + std::to_string(ez);
        if (axes_[1].present) s += (s.empty() ? "" : " ") + std::string("w^") + std::to_string(ew);
        if (s.empty()) s = "1";
        return s;
    }

  private:
    static bool within(const Axis& ax, int e) {
        if (!ax.present) return e == 0;
        return ax.lo <= e && e <= ax.hi;
    }
    static bool exact_within(const Axis& ax, int e) {
        if (!ax.present) return e == 0;
        return ax.exact_lo() <= e && e <= ax.exact_hi();
    }

    static FormalDist combine(const FormalDist& a, const FormalDist& b, bool subtract) {
        FormalDist r;
        for (int i = 0; i < 2; ++i) r.axes_[i] = add_axis(a.axes_[i], b.axes_[i]);
        for (const auto& [e, c] : a.coeffs_)
            if (r.in_window(e[0], e[1])) r.add_coeff(e[0], e[1], c);
        for (const auto& [e, c] : b.coeffs_)
            if (r.in_window(e[0], e[1])) r.add_coeff(e[0], e[1], subtract ? -c : c);
        return r;
    }

    // exactness interval of a sum is the intersection; the class is read off
    // from which sides stay known-zero
    static Axis add_axis(const Axis& a, const Axis& b) {
        if (!a.present && !b.present) return a;
        Axis ea = a.present ? a : absent_axis();
        Axis eb = b.present ? b : absent_axis();
        long elo = std::max<long>(ea.exact_lo(), eb.exact_lo());
        long ehi = std::min<long>(ea.exact_hi(), eb.exact_hi());
        bool zb = ea.zero_below() && eb.zero_below();
        bool za = ea.zero_above() && eb.zero_above();
        Axis r;
        r.present = true;
        int span_lo = std::min(ea.lo, eb.lo), span_hi = std::max(ea.hi, eb.hi);
        if (zb && za) {
            r.support = Support::Finite;
            r.lo = span_lo;
            r.hi = span_hi;
        } else if (zb) {
            r.support = Support::LowerBounded;
            r.lo = span_lo;
            r.hi = static_cast<int>(std::min<long>(ehi, kExpInf));
        } else if (za) {
            r.support = Support::UpperBounded;
            r.lo = static_cast<int>(std::max<long>(elo, -kExpInf));
            r.hi = span_hi;
        } else {
            r.support = Support::Banded;
            r.lo = static_cast<int>(std::max<long>(elo, -kExpInf));
            r.hi = static_cast<int>(std::min<long>(ehi, kExpInf));
        }
        if (r.lo > r.hi && !(zb && za)) throw Inconclusive("sum has an empty exact window");
        return r;
    }

    static Axis absent_axis() { return Axis{true, Support::Finite, 0, 0}; }

    static Axis mul_axis(const Axis& a0, const Axis& b0) {
        if (!a0.present && !b0.present) return a0;
        Axis a = a0.present ? a0 : absent_axis();
        Axis b = b0.present ? b0 : absent_axis();
        if (a.support == Support::TwoSidedDelta || b.support == Support::TwoSidedDelta)
            throw Inconclusive("delta products must go through mul_delta");
        Axis r;
        r.present = true;
        auto lower = [&](const Axis& x, const Axis& y) {  // x lower-bounded, y lower-bounded
            r.support = Support::LowerBounded;
            r.lo = x.lo + y.lo;
            r.hi = std::min(x.hi + y.lo, y.hi + x.lo);
        };
        auto upper = [&](const Axis& x, const Axis& y) {
            r.support = Support::UpperBounded;
            r.hi = x.hi + y.hi;
            r.lo = std::max(x.lo + y.hi, y.lo + x.hi);
        };
        const Support sa = a.support, sb = b.support;
        if (sa == Support::Finite && sb == Support::Finite) {
            r.support = Support::Finite;
            r.lo = a.lo + b.lo;
            r.hi = a.hi + b.hi;
        } else if (sa == Support::LowerBounded && sb == Support::LowerBounded) {
            lower(a, b);
        } else if (sa == Support::UpperBounded && sb == Support::UpperBounded) {
            upper(a, b);
        } else if (sa == Support::Finite && sb == Support::LowerBounded) {
            r.support = Support::LowerBounded;
            r.lo = a.lo + b.lo;
            r.hi = a.lo + b.hi;
        } else if (sa == Support::LowerBounded && sb == Support::Finite) {
            r.support = Support::LowerBounded;
            r.lo = a.lo + b.lo;
            r.hi = b.lo + a.hi;
        } else if (sa == Support::Finite && sb == Support::UpperBounded) {
            r.support = Support::UpperBounded;
            r.hi = a.hi + b.hi;
            r.lo = a.hi + b.lo;
        } else if (sa == Support::UpperBounded && sb == Support::Finite) {
            r.support = Support::UpperBounded;
            r.hi = a.hi + b.hi;
            r.lo = b.hi + a.lo;
        } else if (sa == Support::Finite && sb == Support::Banded) {
            r.support = Support::Banded;
            r.lo = a.hi + b.lo;
            r.hi = a.lo + b.hi;
        } else if (sa == Support::Banded && sb == Support::Finite) {
            r.support = Support::Banded;
            r.lo = b.hi + a.lo;
            r.hi = b.lo + a.hi;
        } else {
            throw Inconclusive(std::string("incompatible support classes in product: ") +
                               support_name(sa) + " x " + support_name(sb));
        }
        return r;
    }

    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
    }

    std::array<Axis, 2> axes_;
    std::map<Exps, C> coeffs_;
};

// delta(z/w) on the symmetric window |m| <= extent: coefficient 1 at every
// (m, -m)
template <class C>
FormalDist<C> delta_dist(int extent) {
    auto d = FormalDist<C>::make(Var::Z, Support::TwoSidedDelta, -extent, extent);
    d.axis(Var::W) = Axis{true, Support::TwoSidedDelta, -extent, extent};
    for (int m = -extent; m <= extent; ++m) d.set_coeff(m, -m, C{1});
    return d;
}

// delta(z/w) * B where B is one-sided or finite in a single variable; the
// output coefficient at (m, n) is B_{m+n}
template <class C>
FormalDist<C> mul_delta(const FormalDist<C>& delta, const FormalDist<C>& b) {
    if (delta.axis(Var::Z).support != Support::TwoSidedDelta)
        throw Error("mul_delta: first operand must be a delta distribution");
    const bool b_in_w = b.axis(Var::W).present;
    if (b_in_w && b.axis(Var::Z).present)
        throw Inconclusive("mul_delta: factor must depend on one variable");
    const Axis& bax = b.axis(b_in_w ? Var::W : Var::Z);
    if (bax.support == Support::TwoSidedDelta || bax.support == Support::Banded)
        throw Inconclusive("mul_delta: factor must be one-sided or finite");

    // the delta window constrains the variable B does not use
    const Axis& dwin = delta.axis(b_in_w ? Var::Z : Var::W);
    FormalDist<C> r;
    Axis free_ax;  // axis of the delta-controlled variable
    free_ax.present = true;
    free_ax.support = Support::Banded;
    free_ax.lo = dwin.lo;
    free_ax.hi = dwin.hi;

    Axis dep_ax;  // axis of B's variable, band-shifted by the delta window
    dep_ax.present = true;
    dep_ax.support = bax.support;
    dep_ax.lo = bax.lo - dwin.hi;
    dep_ax.hi = bax.hi - dwin.hi;
    if (bax.support == Support::UpperBounded) {
        dep_ax.lo = bax.lo - dwin.lo;
        dep_ax.hi = bax.hi - dwin.lo;
    } else if (bax.support == Support::Finite) {
        dep_ax.support = Support::Finite;
        dep_ax.lo = bax.lo - dwin.hi;
        dep_ax.hi = bax.hi - dwin.lo;
    }

    r.axis(b_in_w ? Var::Z : Var::W) = free_ax;
    r.axis(b_in_w ? Var::W : Var::Z) = dep_ax;

    for (const auto& [eb, cb] : b.coeffs()) {
        int s = eb[b_in_w ? 1 : 0];
        for (int m = dwin.lo; m <= dwin.hi; ++m) {
            int ez = b_in_w ? m : s - m;
            int ew = b_in_w ? s - m : m;
            if (r.in_window(ez, ew)) r.add_coeff(ez, ew, cb);
        }
    }
    return r;
}

struct Mismatch {
    std::array<int, 2> exps;
    std::string location;
    std::string lhs;
    std::string rhs;
};

// coefficient-wise equality on an explicit rectangle; both operands must be
// exact there
template <class C>
std::vector<Mismatch> dist_compare(const FormalDist<C>& a, const FormalDist<C>& b, int zlo,
                                   int zhi, int wlo = 0, int whi = 0) {
    for (int ez : {zlo, zhi})
        for (int ew : {wlo, whi})
            if (!a.exact_at(ez, ew) || !b.exact_at(ez, ew))
                throw Inconclusive("compare window exceeds validity region: (" +
                                   std::to_string(ez) + "," + std::to_string(ew) + ")");
    std::vector<Mismatch> out;
    for (int ez = zlo; ez <= zhi; ++ez)
        for (int ew = wlo; ew <= whi; ++ew) {
            C ca = a.coeff(ez, ew), cb = b.coeff(ez, ew);
            if (!(ca == cb))
                out.push_back(
                    Mismatch{{ez, ew}, a.location_string(ez, ew), ca.to_string(), cb.to_string()});
        }
    return out;
}

// Directional expansion of num/den into a windowed series: den = L(1 + M)
// with L its extreme term in v (lowest if ascending, highest if descending),
// then num/den = sum_k (-M)^k * num * L^{-1}. Termination comes from M moving
// strictly in the expansion direction.
template <class C>
FormalDist<C> expand_rational(const FormalDist<C>& num, const FormalDist<ScalarPoly>& den, Var v,
                              bool ascending, int lo, int hi) {
    const int vi = static_cast<int>(v);
    if (den.is_zero()) throw Error("expand_rational: zero denominator");
    for (auto var : {Var::Z, Var::W}) {
        if (den.axis(var).present && den.axis(var).support != Support::Finite)
            throw Error("expand_rational: denominator must be polynomial");
    }

    // find the extreme exponent in v and require a single invertible term there
    int extreme = 0;
    bool first = true;
    for (const auto& [e, c] : den.coeffs()) {
        if (first || (ascending ? e[vi] < extreme : e[vi] > extreme)) extreme = e[vi];
        first = false;
    }
    int nlead = 0;
    std::array<int, 2> lead_e{};
    ScalarPoly lead_c;
    for (const auto& [e, c] : den.coeffs())
        if (e[vi] == extreme) {
            ++nlead;
            lead_e = e;
            lead_c = c;
        }
    if (nlead != 1) throw Error("expand_rational: leading term in the chosen direction not unique");
    if (!lead_c.is_monomial())
        throw Error("expand_rational: leading coefficient not invertible");

    ScalarPoly lead_inv = lead_c.monomial_inverse();

    // rest = den - lead; M = L^{-1} * rest must move strictly in direction
    std::vector<std::pair<std::array<int, 2>, ScalarPoly>> mterms;
    for (const auto& [e, c] : den.coeffs()) {
        if (e == lead_e) continue;
        std::array<int, 2> me{e[0] - lead_e[0], e[1] - lead_e[1]};
        if (ascending ? me[vi] <= 0 : me[vi] >= 0)
            throw Error("expand_rational: denominator not invertible in this direction");
        mterms.push_back({me, lead_inv * c});
    }

    // current = num * L^{-1}
    std::map<std::array<int, 2>, C> current;
    for (const auto& [e, c] : num.coeffs())
        current[{e[0] - lead_e[0], e[1] - lead_e[1]}] = lead_inv * c;

    std::map<std::array<int, 2>, C> acc;
    auto in_v_window = [&](int e) { return lo <= e && e <= hi; };
    while (!current.empty()) {
        bool alive = false;
        for (const auto& [e, c] : current) {
            if (ascending ? e[vi] <= hi : e[vi] >= lo) alive = true;
            if (in_v_window(e[vi])) {
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(e, c);
                else {
                    it->second = it->second + c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        if (!alive) break;
        // current = -M * current
        std::map<std::array<int, 2>, C> next;
        for (const auto& [me, mc] : mterms)
            for (const auto& [e, c] : current) {
                std::array<int, 2> ne{e[0] + me[0], e[1] + me[1]};
                if (ascending ? ne[vi] > hi + 0 : ne[vi] < lo - 0) {
                    // moved past the window for good in v; other terms of M move
                    // the same way, safe to drop
                    continue;
                }
                auto it = next.find(ne);
                C add = -(mc * c);
                if (it == next.end())
                    next.emplace(ne, add);
                else {
                    it->second = it->second + add;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        current = std::move(next);
    }

    FormalDist<C> out;
    Axis vax;
    vax.present = true;
    vax.support = ascending ? Support::LowerBounded : Support::UpperBounded;
    vax.lo = lo;
    vax.hi = hi;
    out.axis(v) = vax;

    // the other variable stays polynomial inside the v-window stripe
    const int oi = 1 - vi;
    bool other_present = num.axis(static_cast<Var>(oi)).present ||
                         den.axis(static_cast<Var>(oi)).present;
    if (other_present) {
        int olo = 0, ohi = 0;
        bool firsto = true;
        for (const auto& [e, c] : acc) {
            if (firsto || e[oi] < olo) olo = e[oi];
            if (firsto || e[oi] > ohi) ohi = e[oi];
            firsto = false;
        }
        Axis oax;
        oax.present = true;
        oax.support = Support::Finite;
        oax.lo = olo;
        oax.hi = ohi;
        out.axis(static_cast<Var>(oi)) = oax;
    }
    for (const auto& [e, c] : acc)
        if (!c.is_zero()) out.add_coeff(e[0], e[1], c);
    return out;
}

}  // namespace qav
