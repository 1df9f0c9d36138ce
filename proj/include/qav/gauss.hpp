#pragma once

// 2x2 matrices over FormalDist: multiplication, Gauss decomposition
// L = [[1,0],[e,1]] diag(k1,k2) [[1,f],[0,1]], recomposition, and inverse.
// Every inverse in this file is the terminating geometric series
//   x^{-1} = (sum_m (-u)^m) x0^{-1},   x = x0 (1 + u),
// where x0 is the zero-weight part of the exponent-0 coefficient and u has
// strictly positive weight or strictly one-sided exponents, so truncation by
// weight and window makes the series finite. Inverses in a ring are unique,
// which is why the decomposition does not depend on expansion order.

#include <qav/matrix.hpp>

namespace qav {

// ----- invertible zero-weight leading coefficients ------------------------

inline ScalarPoly invert_weight0(const ScalarPoly& c) { return c.monomial_inverse(); }

// a single word of diagonal zero modes inverts by reversing and flipping signs
inline Word invert_zero_mode_word(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (size_t i = w.size(); i-- > 0;) {
        Gen g = Gen::unpack(w[i]);
        if (!g.is_diagonal_zero_mode())
            throw Error("leading term not invertible: word has a non-diagonal letter " +
                        g.to_string());
        g.sign = opposite(g.sign);
        r.push_back(g.pack());
    }
    return r;
}

inline NCPoly invert_weight0(const NCPoly& c) {
    if (c.term_count() != 1) throw Error("leading term not invertible: not a single term");
    const auto& [w, s] = *c.terms().begin();
    return NCPoly::term(invert_zero_mode_word(w), s.monomial_inverse());
}

template <int L>
TensorPoly<L> invert_weight0(const TensorPoly<L>& c) {
    if (c.term_count() != 1) throw Error("leading term not invertible: not a single term");
    const auto& [k, s] = *c.terms().begin();
    typename TensorPoly<L>::Key ik;
    for (int i = 0; i < L; ++i) ik[i] = invert_zero_mode_word(k[i]);
    return TensorPoly<L>::term(ik, s.monomial_inverse());
}

inline MatS invert_weight0(const MatS& c) {
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            if (i != j && !c(i, j).is_zero())
                throw Error("leading matrix not diagonal, cannot invert");
    MatS r;
    r(1, 1) = c(1, 1).monomial_inverse();
    r(2, 2) = c(2, 2).monomial_inverse();
    return r;
}

// ----- coefficient-side multiplication of a whole distribution -------------

template <class C, class F>
FormalDist<C> map_coeffs(const FormalDist<C>& d, F&& f) {
    FormalDist<C> fresh;
    fresh.axis(Var::Z) = d.axis(Var::Z);
    fresh.axis(Var::W) = d.axis(Var::W);
    for (const auto& [e, c] : d.coeffs()) {
        C v = f(c);
        if (!v.is_zero()) fresh.add_coeff(e[0], e[1], v);
    }
    return fresh;
}

template <class C>
FormalDist<C> left_mul(const C& c, const FormalDist<C>& d) {
    return map_coeffs(d, [&](const C& v) { return c * v; });
}

template <class C>
FormalDist<C> right_mul(const FormalDist<C>& d, const C& c) {
    return map_coeffs(d, [&](const C& v) { return v * c; });
}

// ----- the graded inverse ---------------------------------------------------

// inverse of a series whose exponent-0 coefficient is an invertible
// zero-weight element; weight_cutoff bounds the grading, the window bounds
// the exponents
template <class C>
FormalDist<C> dist_inverse(const FormalDist<C>& x, int weight_cutoff) {
    C x0 = x.coeff(0, 0);
    if (x0.is_zero()) throw Error("dist_inverse: zero leading term");
    if (!(coeff_truncate_weight(x0, 0) == x0))
        throw Error("dist_inverse: exponent-0 coefficient has positive-weight terms");
    C x0inv = invert_weight0(x0);

    FormalDist<C> u = left_mul(x0inv, x) - FormalDist<C>::constant(C{1});
    u = u.truncate_weight(weight_cutoff);

    // unit element carried on the same windows as x
    FormalDist<C> acc;
    acc.axis(Var::Z) = x.axis(Var::Z);
    acc.axis(Var::W) = x.axis(Var::W);
    if (!acc.in_window(0, 0)) throw Error("dist_inverse: window must contain exponent 0");
    acc.add_coeff(0, 0, C{1});

    FormalDist<C> power = acc;  // (-u)^m, starting at m = 0
    int span = 2;
    for (auto v : {Var::Z, Var::W})
        if (x.axis(v).present) span += x.axis(v).hi - x.axis(v).lo;
    if (weight_cutoff < kExpInf) span += weight_cutoff;
    for (int m = 1; m <= span; ++m) {
        power = (power * (-u)).truncate_weight(weight_cutoff);
        if (power.is_zero()) break;
        acc = acc + power;
    }
    return right_mul(acc, x0inv);
}

// ----- 2x2 machinery --------------------------------------------------------

template <class C>
using Mat2 = Mat<FormalDist<C>, 2>;

template <class C>
struct GaussFactors {
    FormalDist<C> e, k1, k2, f;
};

template <class C>
Mat2<C> gauss_recompose(const GaussFactors<C>& g) {
    Mat2<C> m;
    m(1, 1) = g.k1;
    m(1, 2) = g.k1 * g.f;
    m(2, 1) = g.e * g.k1;
    m(2, 2) = g.e * g.k1 * g.f + g.k2;
    return m;
}

// k1 = l11, e = l21 l11^{-1}, f = l11^{-1} l12, k2 = l22 - l21 l11^{-1} l12
template <class C>
GaussFactors<C> gauss_decompose(const Mat2<C>& m, int weight_cutoff) {
    GaussFactors<C> g;
    g.k1 = m(1, 1);
    FormalDist<C> inv11 = dist_inverse(m(1, 1), weight_cutoff);
    g.e = (m(2, 1) * inv11).truncate_weight(weight_cutoff);
    g.f = (inv11 * m(1, 2)).truncate_weight(weight_cutoff);
    g.k2 = (m(2, 2) - (m(2, 1) * inv11 * m(1, 2)).truncate_weight(weight_cutoff));
    return g;
}

// L^{-1} = [[1,f],[0,1]]^{-1} diag(k1,k2)^{-1} [[1,0],[e,1]]^{-1}, written out:
// [[k1^{-1} + f k2^{-1} e, -f k2^{-1}], [-k2^{-1} e, k2^{-1}]]
template <class C>
Mat2<C> mat_inverse(const Mat2<C>& m, int weight_cutoff) {
    GaussFactors<C> g = gauss_decompose(m, weight_cutoff);
    FormalDist<C> ik1 = dist_inverse(g.k1, weight_cutoff);
    FormalDist<C> ik2 = dist_inverse(g.k2, weight_cutoff);
    Mat2<C> r;
    r(1, 1) = (ik1 + (g.f * ik2 * g.e).truncate_weight(weight_cutoff));
    r(1, 2) = -((g.f * ik2).truncate_weight(weight_cutoff));
    r(2, 1) = -((ik2 * g.e).truncate_weight(weight_cutoff));
    r(2, 2) = ik2;
    return r;
}

}  // namespace qav
