#pragma once

// Fixed-size square matrices, used two ways: Mat<ScalarPoly, 2> as the
// coefficient ring of evaluation-representation distributions, and
// Mat<FormalDist<C>, N> as matrices of series (the L operators, R blocks).
// Entry order is preserved everywhere: entries do not commute.

#include <qav/dist.hpp>

#include <array>
#include <string>

namespace qav {

template <class T, int N>
class Mat {
  public:
    Mat() = default;
    Mat(long long c) {
        for (int i = 0; i < N; ++i) m_[i][i] = T{c};
    }

    static Mat identity() { return Mat(1); }

    T& operator()(int i, int j) { return m_[i - 1][j - 1]; }  // 1-based like the displays
    const T& operator()(int i, int j) const { return m_[i - 1][j - 1]; }

    bool is_zero() const {
        for (const auto& row : m_)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r.m_[i][j] = a.m_[i][j] + b.m_[i][j];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r.m_[i][j] = a.m_[i][j] - b.m_[i][j];
        return r;
    }
    friend Mat operator-(const Mat& a) {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r.m_[i][j] = -a.m_[i][j];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                // zero entries still participate: their windows carry the
                // exactness bookkeeping of the sum
                T acc = a.m_[i][0] * b.m_[0][j];
                for (int k = 1; k < N; ++k) acc = acc + a.m_[i][k] * b.m_[k][j];
                r.m_[i][j] = acc;
            }
        return r;
    }
    friend Mat operator*(const ScalarPoly& s, const Mat& a) {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r.m_[i][j] = s * a.m_[i][j];
        return r;
    }
    friend bool operator==(const Mat& a, const Mat& b) { return a.m_ == b.m_; }

    Mat substitute_units(const std::array<UnitExp, kNumUnits>& image) const {
        Mat r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r.m_[i][j] = coeff_substitute_units(m_[i][j], image);
        return r;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < N; ++i) {
            s += i ? "; " : "";
            for (int j = 0; j < N; ++j) s += (j ? ", " : "") + m_[i][j].to_string();
        }
        return s + "]";
    }

  private:
    std::array<std::array<T, N>, N> m_;
};

using MatS = Mat<ScalarPoly, 2>;  // module operators of the 2-dim representation

inline MatS unit_matrix(int i, int j, const ScalarPoly& c = ScalarPoly(1)) {
    MatS m;
    m(i, j) = c;
    return m;
}

}  // namespace qav
