#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "quasipack/errors.hpp"

namespace quasipack {

using Vector = std::vector<double>;
using LatticeVector = std::vector<std::int32_t>;

inline double dot(const Vector& a, const Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_squared(const Vector& a) { return dot(a, a); }

inline double norm(const Vector& a) { return std::sqrt(norm_squared(a)); }

/// Small square matrix, row-major, dimension 1..3.
struct Matrix {
    int n = 0;
    std::array<double, 9> a{};

    static Matrix identity(int n) {
        Matrix m;
        m.n = n;
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    double& at(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

    Vector apply(const Vector& x) const {
        Vector y(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += at(i, j) * x[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = s;
        }
        return y;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix r;
        r.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int l = 0; l < n; ++l) s += at(i, l) * o.at(l, j);
                r.at(i, j) = s;
            }
        return r;
    }

    Matrix transposed() const {
        Matrix r;
        r.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(i, j) = at(j, i);
        return r;
    }
};

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    double d = 0.0;
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) d = std::max(d, std::abs(a.at(i, j) - b.at(i, j)));
    return d;
}

inline Matrix matrix_power(Matrix m, int p) {
    Matrix r = Matrix::identity(m.n);
    for (int i = 0; i < p; ++i) r = r * m;
    return r;
}

template <class T>
inline T det2(T a, T b, T c, T d) {
    return a * d - b * c;
}

template <class T>
inline T det3(T a11, T a12, T a13, T a21, T a22, T a23, T a31, T a32, T a33) {
    return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
           a13 * (a21 * a32 - a22 * a31);
}

}  // namespace quasipack
