#include <doctest.h>
#include <qav/dist.hpp>

#include "test_support.hpp"

using namespace qav;

namespace {
using SDist = FormalDist<ScalarPoly>;

SDist poly(std::initializer_list<std::pair<int, ScalarPoly>> terms) {
    int lo = 0, hi = 0;
    for (auto& [n, c] : terms) {
        lo = std::min(lo, n);
        hi = std::max(hi, n);
    }
    auto d = SDist::make(Var::Z, Support::Finite, lo, hi);
    for (auto& [n, c] : terms) d.add_coeff(n, 0, c);
    return d;
}
}  // namespace

TEST_CASE("geometric expansion ascending") {
    SDist one = poly({{0, ScalarPoly(1)}});
    SDist den = poly({{0, ScalarPoly(1)}, {1, ScalarPoly(0) - ScalarPoly::q(2)}});
    SDist s = expand_rational(one, den, Var::Z, true, 0, 3);
    CHECK(s.coeff(0) == ScalarPoly(1));
    CHECK(s.coeff(1) == ScalarPoly::q(2));
    CHECK(s.coeff(2) == ScalarPoly::q(4));
    CHECK(s.coeff(3) == ScalarPoly::q(6));
    // defining property: den * s = num on the window
    SDist back = den * s;
    CHECK(dist_compare(back, one, 0, 3).empty());
}

TEST_CASE("expansion with polynomial numerator") {
    SDist num = poly({{0, ScalarPoly::q(1)}, {1, ScalarPoly(0) - ScalarPoly::q(1)}});  // (1-z)q
    SDist den = poly({{0, ScalarPoly(1)}, {1, ScalarPoly(0) - ScalarPoly::q(2)}});
    SDist s = expand_rational(num, den, Var::Z, true, 0, 1);
    CHECK(s.coeff(0) == ScalarPoly::q(1));
    CHECK(s.coeff(1) == ScalarPoly::q(3) - ScalarPoly::q(1));
    SDist back = den * s;
    CHECK(dist_compare(back, num, 0, 1).empty());
}

TEST_CASE("geometric expansion descending") {
    SDist one = poly({{0, ScalarPoly(1)}});
    SDist den = poly({{0, ScalarPoly(1)}, {1, ScalarPoly(0) - ScalarPoly::q(2)}});
    SDist s = expand_rational(one, den, Var::Z, false, -3, -1);
    CHECK(s.coeff(-1) == ScalarPoly(0) - ScalarPoly::q(-2));
    CHECK(s.coeff(-2) == ScalarPoly(0) - ScalarPoly::q(-4));
    CHECK(s.coeff(-3) == ScalarPoly(0) - ScalarPoly::q(-6));
    // multiply back: exact unit on the product's window
    SDist back = den * s;
    SDist unit = SDist::make(Var::Z, Support::UpperBounded, -2, 0);
    unit.set_coeff(0, 0, ScalarPoly(1));
    CHECK(dist_compare(back, unit, -2, 0).empty());
}

TEST_CASE("expansion rejects a non-invertible leading coefficient") {
    SDist one = poly({{0, ScalarPoly(1)}});
    SDist den2 = poly({{0, ScalarPoly(1) - ScalarPoly::q(2)}, {1, ScalarPoly(1)}});
    CHECK_THROWS_AS(expand_rational(one, den2, Var::Z, true, 0, 2), Error);  // 1-q^2 not a unit

    // a monomial-led Laurent case is legitimate: 1/(z + z^2) starts at z^{-1}
    SDist den = poly({{1, ScalarPoly(1)}, {2, ScalarPoly(1)}});
    SDist s = expand_rational(one, den, Var::Z, true, -1, 2);
    CHECK(s.coeff(-1) == ScalarPoly(1));
    CHECK(s.coeff(0) == ScalarPoly(-1));
    CHECK(dist_compare(den * s, one, -1, 2).empty());
}

TEST_CASE("cauchy product of ascending series") {
    auto geo = SDist::make(Var::Z, Support::LowerBounded, 0, 4);
    for (int n = 0; n <= 4; ++n) geo.set_coeff(n, 0, ScalarPoly(1));
    SDist sq = geo * geo;
    CHECK(sq.coeff(2) == ScalarPoly(3));
    CHECK(sq.axis(Var::Z).hi == 4);  // window preserved for lo = 0
}

TEST_CASE("incompatible support classes are rejected") {
    auto lower = SDist::make(Var::Z, Support::LowerBounded, 0, 4);
    lower.set_coeff(0, 0, ScalarPoly(1));
    auto upper = SDist::make(Var::Z, Support::UpperBounded, -4, 0);
    upper.set_coeff(0, 0, ScalarPoly(1));
    CHECK_THROWS_AS(lower * upper, Inconclusive);
}

TEST_CASE("delta distribution and delta products") {
    auto d = delta_dist<ScalarPoly>(4);
    CHECK(d.coeff(3, -3) == ScalarPoly(1));
    CHECK(d.coeff(2, -3).is_zero());
    CHECK(d.coeff(-3, 3) == ScalarPoly(1));

    // k(w) lower bounded on [0..6]
    auto k = SDist::make(Var::W, Support::LowerBounded, 0, 6);
    for (int n = 0; n <= 6; ++n) k.set_coeff(0, n, ScalarPoly::q(n));
    SDist prod = mul_delta(d, k);
    // oracle: direct double sum over the window
    for (int m = -4; m <= 4; ++m)
        for (int n = prod.axis(Var::W).lo; n <= prod.axis(Var::W).hi; ++n) {
            ScalarPoly direct;
            for (int j = -4; j <= 4; ++j) {
                // delta has (j,-j); k contributes (0, n + j) when m == j
                if (j == m && n + j >= 0 && n + j <= 6) direct = direct + ScalarPoly::q(n + j);
            }
            CHECK(prod.coeff(m, n) == direct);
        }
    // exactness band: w window shifted down by the delta extent
    CHECK(prod.axis(Var::W).hi == 6 - 4);
    CHECK_THROWS_AS(d * k, Inconclusive);
}

TEST_CASE("argument shifts") {
    auto e = SDist::make(Var::Z, Support::LowerBounded, 0, 3);
    for (int n = 1; n <= 3; ++n) e.set_coeff(n, 0, ScalarPoly(n));
    UnitExp g1 = UnitExp::of(Unit::G1, 1);
    SDist s = e.shifted(Var::Z, g1);
    CHECK(s.coeff(1) == ScalarPoly::unit(Unit::G1, 1) * ScalarPoly(1));
    CHECK(s.coeff(3) == ScalarPoly::unit(Unit::G1, 3) * ScalarPoly(3));
    // inverse shift restores
    CHECK(dist_compare(s.shifted(Var::Z, UnitExp::of(Unit::G1, -1)), e, 0, 3).empty());
    // descending current picks up negative powers
    auto km = SDist::make(Var::Z, Support::UpperBounded, -3, 0);
    for (int n = 0; n <= 3; ++n) km.set_coeff(-n, 0, ScalarPoly(1));
    SDist t = km.shifted(Var::Z, UnitExp::of(Unit::G2, -1));
    CHECK(t.coeff(-2) == ScalarPoly::unit(Unit::G2, 2));
}

TEST_CASE("compare finds planted discrepancies and nothing else") {
    auto a = SDist::make(Var::Z, Support::LowerBounded, 0, 6);
    for (int n = 0; n <= 6; ++n) a.set_coeff(n, 0, ScalarPoly::q(n));
    CHECK(dist_compare(a, a, 0, 6).empty());
    SDist b = a;
    b.add_coeff(5, 0, ScalarPoly(1));
    auto mm = dist_compare(a, b, 0, 6);
    REQUIRE(mm.size() == 1);
    CHECK(mm[0].exps[0] == 5);
    CHECK_THROWS_AS(dist_compare(a, b, 0, 7), Inconclusive);  // beyond validity
}

TEST_CASE("window soundness: larger windows agree on the smaller region") {
    SDist one = poly({{0, ScalarPoly(1)}});
    SDist den = poly({{0, ScalarPoly(1)}, {1, ScalarPoly(0) - ScalarPoly::q(2)}});
    SDist small = expand_rational(one, den, Var::Z, true, 0, 3);
    SDist large = expand_rational(one, den, Var::Z, true, 0, 9);
    CHECK(dist_compare(small, large, 0, 3).empty());

    auto s1 = small * small;
    auto s2 = large * large;
    CHECK(dist_compare(s1, s2, 0, 3).empty());
}

TEST_CASE("product associativity on compatible random series") {
    qavtest::Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        auto mk = [&] {
            auto d = SDist::make(Var::Z, Support::LowerBounded, 0, 5);
            for (int n = 0; n <= 5; ++n) d.set_coeff(n, 0, qavtest::random_scalar(rng));
            return d;
        };
        SDist a = mk(), b = mk(), c = mk();
        SDist l = (a * b) * c, r = a * (b * c);
        CHECK(dist_compare(l, r, 0, 5).empty());
    }
    // mixed classes: finite x upper x upper
    for (int t = 0; t < 60; ++t) {
        auto up = [&] {
            auto d = SDist::make(Var::Z, Support::UpperBounded, -5, 0);
            for (int n = -5; n <= 0; ++n) d.set_coeff(n, 0, qavtest::random_scalar(rng));
            return d;
        };
        auto fin = [&] {
            auto d = SDist::make(Var::Z, Support::Finite, 0, 2);
            for (int n = 0; n <= 2; ++n) d.set_coeff(n, 0, qavtest::random_scalar(rng));
            return d;
        };
        SDist a = fin(), b = up(), c = up();
        SDist l = (a * b) * c, r = a * (b * c);
        CHECK(dist_compare(l, r, -3, 0).empty());
    }
}
