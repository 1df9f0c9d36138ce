#pragma once

// Exact arbitrary-precision integers and rationals. Coefficients in this
// project stay small (desk-scale windows), so schoolbook arithmetic is fine.

#include <qav/common.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qav {

class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v) {
        if (v < 0) {
            neg_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long m = static_cast<unsigned long long>(-(v + 1)) + 1ull;
            set_magnitude(m);
        } else {
            set_magnitude(static_cast<unsigned long long>(v));
        }
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
            r.normalize();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        BigInt r;
        if (c == 0) return r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.neg_ = b.neg_;
        }
        r.normalize();
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                               r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
        }
        r.neg_ = a.neg_ != b.neg_;
        r.normalize();
        return r;
    }

    // Truncated quotient and remainder, remainder has the sign of *this.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw Error("BigInt: division by zero");
        q = BigInt();
        r = BigInt();
        if (cmp_mag(a.limbs_, b.limbs_) < 0) {
            r = a;
            return;
        }
        divmod_mag(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
        q.neg_ = a.neg_ != b.neg_;
        r.neg_ = a.neg_;
        q.normalize();
        r.normalize();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
            b.neg_ = false;
        }
        return a;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.neg_) c = -c;
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> mag = limbs_;
        std::string digits;
        while (!mag.empty()) {
            uint64_t rem = 0;
            for (size_t i = mag.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | mag[i];
                mag[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!mag.empty() && mag.back() == 0) mag.pop_back();
            std::string chunk = std::to_string(rem);
            if (!mag.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return neg_ ? "-" + digits : digits;
    }

  private:
    void set_magnitude(unsigned long long m) {
        limbs_.clear();
        while (m) {
            limbs_.push_back(static_cast<uint32_t>(m));
            m >>= 32;
        }
    }
    void normalize() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) neg_ = false;
    }
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r;
        r.reserve(std::max(a.size(), b.size()) + 1);
        uint64_t carry = 0;
        for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
            uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r.push_back(static_cast<uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += (1ll << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // schoolbook long division on magnitudes, b nonzero; quotient digits found
    // by binary search, which is plenty fast at the sizes this project sees
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        q.assign(a.size(), 0);
        std::vector<uint32_t> rem;
        for (size_t i = a.size(); i-- > 0;) {
            rem.insert(rem.begin(), a[i]);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (cmp_mag(rem, b) < 0) continue;
            uint64_t lo = 1, hi = 0xFFFFFFFFull;
            while (lo < hi) {
                uint64_t mid = (lo + hi + 1) >> 1;
                if (cmp_mag(mul_small(b, static_cast<uint32_t>(mid)), rem) <= 0)
                    lo = mid;
                else
                    hi = mid - 1;
            }
            q[i] = static_cast<uint32_t>(lo);
            rem = sub_mag(rem, mul_small(b, static_cast<uint32_t>(lo)));
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r = rem;
    }
    static std::vector<uint32_t> mul_small(const std::vector<uint32_t>& a, uint32_t d) {
        std::vector<uint32_t> r;
        r.reserve(a.size() + 1);
        uint64_t carry = 0;
        for (uint32_t limb : a) {
            uint64_t cur = static_cast<uint64_t>(limb) * d + carry;
            r.push_back(static_cast<uint32_t>(cur));
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    bool neg_ = false;
    std::vector<uint32_t> limbs_;  // little endian, no trailing zeros
};

// Reduced fraction, denominator always positive.
class BigRat {
  public:
    BigRat() : num_(0), den_(1) {}
    BigRat(long long v) : num_(v), den_(1) {}
    BigRat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static BigRat fraction(long long n, long long d) { return BigRat(BigInt(n), BigInt(d)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRat operator-(const BigRat& a) {
        BigRat r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        return BigRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.is_zero()) throw Error("BigRat: division by zero");
        return BigRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    BigRat inverse() const {
        if (is_zero()) throw Error("BigRat: inverse of zero");
        return BigRat(den_, num_);
    }

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

  private:
    void reduce() {
        if (den_.is_zero()) throw Error("BigRat: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace qav
