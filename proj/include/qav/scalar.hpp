#pragma once

// Commutative coefficient ring: exact Laurent polynomials in the named formal
// units q, a, g1, g2, g3 over big rationals. The g-units are the invertible
// group-like central scalars, one per tensor leg; a is the evaluation
// parameter. Units are never substituted numerically in the exact suites.

#include <qav/rational.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

namespace qav {

enum class Unit : int { Q = 0, A = 1, G1 = 2, G2 = 3, G3 = 4 };
inline constexpr int kNumUnits = 5;
inline constexpr std::array<const char*, kNumUnits> kUnitNames = {"q", "a", "g1", "g2", "g3"};

struct UnitExp {
    std::array<int16_t, kNumUnits> e{};

    int16_t& operator[](Unit u) { return e[static_cast<int>(u)]; }
    int16_t operator[](Unit u) const { return e[static_cast<int>(u)]; }

    friend UnitExp operator+(const UnitExp& x, const UnitExp& y) {
        UnitExp r;
        for (int i = 0; i < kNumUnits; ++i) r.e[i] = static_cast<int16_t>(x.e[i] + y.e[i]);
        return r;
    }
    friend UnitExp operator-(const UnitExp& x) {
        UnitExp r;
        for (int i = 0; i < kNumUnits; ++i) r.e[i] = static_cast<int16_t>(-x.e[i]);
        return r;
    }
    friend auto operator<=>(const UnitExp&, const UnitExp&) = default;

    static UnitExp of(Unit u, int p) {
        UnitExp r;
        r[u] = static_cast<int16_t>(p);
        return r;
    }
    bool is_trivial() const {
        for (int v : e)
            if (v) return false;
        return true;
    }
};

class ScalarPoly {
  public:
    ScalarPoly() = default;
    ScalarPoly(long long c) {
        if (c) terms_[UnitExp{}] = BigRat(c);
    }
    ScalarPoly(const BigRat& c) {
        if (!c.is_zero()) terms_[UnitExp{}] = c;
    }

    static ScalarPoly monomial(const BigRat& c, const UnitExp& u) {
        ScalarPoly p;
        if (!c.is_zero()) p.terms_[u] = c;
        return p;
    }
    static ScalarPoly unit(Unit u, int power = 1) {
        return monomial(BigRat(1), UnitExp::of(u, power));
    }
    // q^p
    static ScalarPoly q(int p = 1) { return unit(Unit::Q, p); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_trivial() &&
               terms_.begin()->second.is_one();
    }
    size_t term_count() const { return terms_.size(); }
    const std::map<UnitExp, BigRat>& terms() const { return terms_; }

    // single term c * units^u, the invertible elements of this ring
    bool is_monomial() const { return terms_.size() == 1; }
    ScalarPoly monomial_inverse() const {
        if (!is_monomial()) throw Error("ScalarPoly: inverse requires a single term");
        const auto& [u, c] = *terms_.begin();
        return monomial(c.inverse(), -u);
    }

    friend ScalarPoly operator+(const ScalarPoly& x, const ScalarPoly& y) {
        ScalarPoly r = x;
        for (const auto& [u, c] : y.terms_) r.add_term(u, c);
        return r;
    }
    friend ScalarPoly operator-(const ScalarPoly& x, const ScalarPoly& y) {
        ScalarPoly r = x;
        for (const auto& [u, c] : y.terms_) r.add_term(u, -c);
        return r;
    }
    friend ScalarPoly operator-(const ScalarPoly& x) {
        ScalarPoly r;
        for (const auto& [u, c] : x.terms_) r.terms_[u] = -c;
        return r;
    }
    friend ScalarPoly operator*(const ScalarPoly& x, const ScalarPoly& y) {
        ScalarPoly r;
        for (const auto& [ux, cx] : x.terms_)
            for (const auto& [uy, cy] : y.terms_) r.add_term(ux + uy, cx * cy);
        return r;
    }
    friend bool operator==(const ScalarPoly& x, const ScalarPoly& y) {
        return x.terms_ == y.terms_;
    }

    // simultaneous unit substitution g -> monomial in units (group-like images)
    ScalarPoly substitute_units(const std::array<UnitExp, kNumUnits>& image) const {
        ScalarPoly r;
        for (const auto& [u, c] : terms_) {
            UnitExp nu;
            for (int i = 0; i < kNumUnits; ++i)
                for (int j = 0; j < kNumUnits; ++j)
                    nu.e[j] = static_cast<int16_t>(nu.e[j] + u.e[i] * image[i].e[j]);
            r.add_term(nu, c);
        }
        return r;
    }

    // numeric evaluation for the spot-check mode
    BigRat evaluate(const std::array<BigRat, kNumUnits>& values) const {
        BigRat total;
        for (const auto& [u, c] : terms_) {
            BigRat t = c;
            for (int i = 0; i < kNumUnits; ++i) {
                int p = u.e[i];
                const BigRat base = p < 0 ? values[i].inverse() : values[i];
                for (int k = 0; k < (p < 0 ? -p : p); ++k) t = t * base;
            }
            total = total + t;
        }
        return total;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [u, c] : terms_) {
            std::string mono;
            for (int i = 0; i < kNumUnits; ++i) {
                if (u.e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += kUnitNames[i];
                if (u.e[i] != 1) mono += "^" + std::to_string(u.e[i]);
            }
            std::string coeff = c.to_string();
            std::string term;
            if (mono.empty())
                term = coeff;
            else if (coeff == "1")
                term = mono;
            else if (coeff == "-1")
                term = "-" + mono;
            else
                term = coeff + "*" + mono;
            if (first) {
                s = term;
                first = false;
            } else if (!term.empty() && term[0] == '-') {
                s += " - " + term.substr(1);
            } else {
                s += " + " + term;
            }
        }
        return s;
    }

  private:
    void add_term(const UnitExp& u, const BigRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(u);
        if (it == terms_.end()) {
            terms_.emplace(u, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<UnitExp, BigRat> terms_;  // no zero coefficients stored
};

}  // namespace qav
