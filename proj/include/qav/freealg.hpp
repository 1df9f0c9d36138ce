#pragma once

// Free noncommutative algebra over ScalarPoly on the mode generators of the
// currents e, f, k1, k2 (both signs). The only rewrite is the cancellation of
// adjacent zero-mode pairs k{i}+[0] k{i}-[0] = k{i}-[0] k{i}+[0] = 1: the
// inverse of a diagonal zero mode is the opposite-sign zero mode, not a fresh
// symbol. Everything else is free. Words are graded by weight = sum of |mode|.

#include <qav/scalar.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qav {

enum class Family : uint8_t { E = 0, F = 1, K1 = 2, K2 = 3 };
enum class Sign : uint8_t { Plus = 0, Minus = 1 };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline int sign_factor(Sign s) { return s == Sign::Plus ? 1 : -1; }

struct Gen {
    Family fam;
    Sign sign;
    uint16_t mode;

    // mode supports: e+ and f- have no zero mode, everything else does
    static bool valid(Family f, Sign s, int mode) {
        if (mode < 0) return false;
        if (f == Family::E && s == Sign::Plus && mode == 0) return false;
        if (f == Family::F && s == Sign::Minus && mode == 0) return false;
        return true;
    }

    uint32_t pack() const {
        return (static_cast<uint32_t>(fam) << 24) | (static_cast<uint32_t>(sign) << 16) | mode;
    }
    static Gen unpack(uint32_t v) {
        return Gen{static_cast<Family>((v >> 24) & 0xFF), static_cast<Sign>((v >> 16) & 0xFF),
                   static_cast<uint16_t>(v & 0xFFFF)};
    }

    int weight() const { return mode; }
    // z-exponent carried by this mode in its current's expansion
    int z_exponent() const { return sign_factor(sign) * static_cast<int>(mode); }

    bool is_diagonal_zero_mode() const {
        return (fam == Family::K1 || fam == Family::K2) && mode == 0;
    }

    std::string to_string() const {
        static const char* fams[] = {"e", "f", "k1", "k2"};
        return std::string(fams[static_cast<int>(fam)]) + (sign == Sign::Plus ? "+" : "-") + "[" +
               std::to_string(mode) + "]";
    }
};

inline uint32_t pack_gen(Family f, Sign s, int mode) {
    if (!Gen::valid(f, s, mode)) throw Error("generator outside its mode support");
    return Gen{f, s, static_cast<uint16_t>(mode)}.pack();
}

using Word = std::vector<uint32_t>;

inline int word_weight(const Word& w) {
    int t = 0;
    for (uint32_t g : w) t += Gen::unpack(g).weight();
    return t;
}

inline int word_z_exponent(const Word& w) {
    int t = 0;
    for (uint32_t g : w) t += Gen::unpack(g).z_exponent();
    return t;
}

// cancel adjacent opposite-sign diagonal zero modes until none remain
inline Word reduce_word(Word w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            Gen a = Gen::unpack(w[i]), b = Gen::unpack(w[i + 1]);
            if (a.is_diagonal_zero_mode() && b.is_diagonal_zero_mode() && a.fam == b.fam &&
                a.sign == opposite(b.sign)) {
                w.erase(w.begin() + i, w.begin() + i + 2);
                changed = true;
                break;
            }
        }
    }
    return w;
}

inline std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ".";
        s += Gen::unpack(w[i]).to_string();
    }
    return s;
}

class NCPoly {
  public:
    NCPoly() = default;
    NCPoly(long long c) {
        if (c) terms_[Word{}] = ScalarPoly(c);
    }
    NCPoly(const ScalarPoly& c) {
        if (!c.is_zero()) terms_[Word{}] = c;
    }

    static NCPoly generator(Family f, Sign s, int mode) {
        NCPoly p;
        p.terms_[Word{pack_gen(f, s, mode)}] = ScalarPoly(1);
        return p;
    }
    static NCPoly term(const Word& w, const ScalarPoly& c) {
        NCPoly p;
        if (!c.is_zero()) p.terms_[reduce_word(w)] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, ScalarPoly>& terms() const { return terms_; }

    void add_term(const Word& w, const ScalarPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend NCPoly operator+(const NCPoly& x, const NCPoly& y) {
        NCPoly r = x;
        for (const auto& [w, c] : y.terms_) r.add_term(w, c);
        return r;
    }
    friend NCPoly operator-(const NCPoly& x, const NCPoly& y) {
        NCPoly r = x;
        for (const auto& [w, c] : y.terms_) r.add_term(w, -c);
        return r;
    }
    friend NCPoly operator-(const NCPoly& x) {
        NCPoly r;
        for (const auto& [w, c] : x.terms_) r.terms_[w] = -c;
        return r;
    }
    friend NCPoly operator*(const NCPoly& x, const NCPoly& y) {
        NCPoly r;
        for (const auto& [wx, cx] : x.terms_)
            for (const auto& [wy, cy] : y.terms_) {
                Word w = wx;
                w.insert(w.end(), wy.begin(), wy.end());
                r.add_term(reduce_word(std::move(w)), cx * cy);
            }
        return r;
    }
    friend NCPoly operator*(const ScalarPoly& s, const NCPoly& x) {
        NCPoly r;
        for (const auto& [w, c] : x.terms_) r.add_term(w, s * c);
        return r;
    }
    friend bool operator==(const NCPoly& x, const NCPoly& y) { return x.terms_ == y.terms_; }

    int max_weight() const {
        int m = 0;
        for (const auto& [w, c] : terms_) m = std::max(m, word_weight(w));
        return m;
    }

    NCPoly truncate_weight(int cutoff) const {
        NCPoly r;
        for (const auto& [w, c] : terms_)
            if (word_weight(w) <= cutoff) r.terms_.emplace(w, c);
        return r;
    }

    NCPoly substitute_units(const std::array<UnitExp, kNumUnits>& image) const {
        NCPoly r;
        for (const auto& [w, c] : terms_) r.add_term(w, c.substitute_units(image));
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string cs = c.to_string();
            if (cs == "1" && !w.empty())
                s += word_to_string(w);
            else if (w.empty())
                s += "(" + cs + ")";
            else
                s += "(" + cs + ")*" + word_to_string(w);
        }
        return s;
    }

  private:
    std::map<Word, ScalarPoly> terms_;  // words reduced, no zero coefficients
};

// Tensor product with a fixed number of legs. Scalars (including the g-units)
// are global: they live in the shared ScalarPoly coefficient.
template <int Legs>
class TensorPoly {
    static_assert(Legs == 2 || Legs == 3);

  public:
    using Key = std::array<Word, Legs>;

    TensorPoly() = default;
    TensorPoly(long long c) {
        if (c) terms_[Key{}] = ScalarPoly(c);
    }
    TensorPoly(const ScalarPoly& c) {
        if (!c.is_zero()) terms_[Key{}] = c;
    }

    static TensorPoly term(const Key& k, const ScalarPoly& c) {
        TensorPoly p;
        if (c.is_zero()) return p;
        Key rk;
        for (int i = 0; i < Legs; ++i) rk[i] = reduce_word(k[i]);
        p.terms_[rk] = c;
        return p;
    }
    // place a single-leg polynomial on leg `leg`, identity elsewhere
    static TensorPoly embed(const NCPoly& x, int leg) {
        TensorPoly p;
        for (const auto& [w, c] : x.terms()) {
            Key k{};
            k[leg] = w;
            p.terms_[k] = c;
        }
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Key, ScalarPoly>& terms() const { return terms_; }

    void add_term(const Key& k, const ScalarPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TensorPoly operator+(const TensorPoly& x, const TensorPoly& y) {
        TensorPoly r = x;
        for (const auto& [k, c] : y.terms_) r.add_term(k, c);
        return r;
    }
    friend TensorPoly operator-(const TensorPoly& x, const TensorPoly& y) {
        TensorPoly r = x;
        for (const auto& [k, c] : y.terms_) r.add_term(k, -c);
        return r;
    }
    friend TensorPoly operator-(const TensorPoly& x) {
        TensorPoly r;
        for (const auto& [k, c] : x.terms_) r.terms_[k] = -c;
        return r;
    }
    // leg-wise multiplication: (a (x) b)(c (x) d) = ac (x) bd
    friend TensorPoly operator*(const TensorPoly& x, const TensorPoly& y) {
        TensorPoly r;
        for (const auto& [kx, cx] : x.terms_)
            for (const auto& [ky, cy] : y.terms_) {
                Key k;
                for (int i = 0; i < Legs; ++i) {
                    Word w = kx[i];
                    w.insert(w.end(), ky[i].begin(), ky[i].end());
                    k[i] = reduce_word(std::move(w));
                }
                r.add_term(k, cx * cy);
            }
        return r;
    }
    friend TensorPoly operator*(const ScalarPoly& s, const TensorPoly& x) {
        TensorPoly r;
        for (const auto& [k, c] : x.terms_) r.add_term(k, s * c);
        return r;
    }
    friend bool operator==(const TensorPoly& x, const TensorPoly& y) {
        return x.terms_ == y.terms_;
    }

    static int key_weight(const Key& k) {
        int t = 0;
        for (const Word& w : k) t += word_weight(w);
        return t;
    }
    int max_weight() const {
        int m = 0;
        for (const auto& [k, c] : terms_) m = std::max(m, key_weight(k));
        return m;
    }
    TensorPoly truncate_weight(int cutoff) const {
        TensorPoly r;
        for (const auto& [k, c] : terms_)
            if (key_weight(k) <= cutoff) r.terms_.emplace(k, c);
        return r;
    }
    TensorPoly substitute_units(const std::array<UnitExp, kNumUnits>& image) const {
        TensorPoly r;
        for (const auto& [k, c] : terms_) r.add_term(k, c.substitute_units(image));
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            std::string ws;
            for (int i = 0; i < Legs; ++i) {
                if (i) ws += " (x) ";
                ws += word_to_string(k[i]);
            }
            std::string cs = c.to_string();
            if (cs == "1")
                s += ws;
            else
                s += "(" + cs + ")*" + ws;
        }
        return s;
    }

  private:
    std::map<Key, ScalarPoly> terms_;
};

// identity substitution and the common relabelings used by the coalgebra maps
inline std::array<UnitExp, kNumUnits> unit_identity_map() {
    std::array<UnitExp, kNumUnits> m;
    for (int i = 0; i < kNumUnits; ++i) m[i] = UnitExp::of(static_cast<Unit>(i), 1);
    return m;
}

}  // namespace qav
