#ifndef SPR3_LINALG_HPP
#define SPR3_LINALG_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "spr3/errors.hpp"

namespace spr3 {

template <int N>
struct Vec {
    std::array<double, N> d{};

    double& operator[](int i) { return d[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return d[static_cast<std::size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < N; ++i) d[i] += o.d[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < N; ++i) d[i] -= o.d[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (auto& x : d) x *= s;
        return *this;
    }
};

template <int N>
inline Vec<N> operator+(Vec<N> a, const Vec<N>& b) { return a += b; }
template <int N>
inline Vec<N> operator-(Vec<N> a, const Vec<N>& b) { return a -= b; }
template <int N>
inline Vec<N> operator*(double s, Vec<N> a) { return a *= s; }
template <int N>
inline Vec<N> operator*(Vec<N> a, double s) { return a *= s; }
template <int N>
inline Vec<N> operator/(Vec<N> a, double s) { return a *= (1.0 / s); }
template <int N>
inline Vec<N> operator-(Vec<N> a) { return a *= -1.0; }

template <int N>
inline double dot(const Vec<N>& a, const Vec<N>& b) {
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += a[i] * b[i];
    return s;
}

template <int N>
inline double norm(const Vec<N>& a) { return std::sqrt(dot(a, a)); }

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;
using Vec6 = Vec<6>;

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// 2D cross product (determinant form): a x b = ax*by - ay*bx.
inline double cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

// Row-major dense matrix of fixed shape.
template <int R, int C>
struct Mat {
    std::array<double, static_cast<std::size_t>(R) * C> d{};

    double& operator()(int i, int j) { return d[static_cast<std::size_t>(i) * C + j]; }
    double operator()(int i, int j) const { return d[static_cast<std::size_t>(i) * C + j]; }

    static Mat identity() {
        static_assert(R == C);
        Mat m;
        for (int i = 0; i < R; ++i) m(i, i) = 1.0;
        return m;
    }

    Mat& operator+=(const Mat& o) {
        for (std::size_t k = 0; k < d.size(); ++k) d[k] += o.d[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (std::size_t k = 0; k < d.size(); ++k) d[k] -= o.d[k];
        return *this;
    }
    Mat& operator*=(double s) {
        for (auto& x : d) x *= s;
        return *this;
    }
};

template <int R, int C>
inline Mat<R, C> operator+(Mat<R, C> a, const Mat<R, C>& b) { return a += b; }
template <int R, int C>
inline Mat<R, C> operator-(Mat<R, C> a, const Mat<R, C>& b) { return a -= b; }
template <int R, int C>
inline Mat<R, C> operator*(double s, Mat<R, C> a) { return a *= s; }
template <int R, int C>
inline Mat<R, C> operator*(Mat<R, C> a, double s) { return a *= s; }

template <int R, int K, int C>
inline Mat<R, C> operator*(const Mat<R, K>& a, const Mat<K, C>& b) {
    Mat<R, C> c;
    for (int i = 0; i < R; ++i)
        for (int k = 0; k < K; ++k) {
            const double aik = a(i, k);
            for (int j = 0; j < C; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <int R, int C>
inline Vec<R> operator*(const Mat<R, C>& a, const Vec<C>& x) {
    Vec<R> y;
    for (int i = 0; i < R; ++i) {
        double s = 0.0;
        for (int j = 0; j < C; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

template <int R, int C>
inline Mat<C, R> transpose(const Mat<R, C>& a) {
    Mat<C, R> t;
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) t(j, i) = a(i, j);
    return t;
}

template <int R, int C>
inline double frobenius_norm(const Mat<R, C>& a) {
    double s = 0.0;
    for (double x : a.d) s += x * x;
    return std::sqrt(s);
}

using Mat2 = Mat<2, 2>;
using Mat3 = Mat<3, 3>;
using Mat6 = Mat<6, 6>;

// Solves A X = B by Gaussian elimination with partial pivoting.
// Throws numerical_error when a pivot collapses to zero.
template <int N, int M>
Mat<N, M> solve(Mat<N, N> a, Mat<N, M> b) {
    double pivot_max = 0.0, pivot_min = 0.0;
    for (int k = 0; k < N; ++k) {
        int p = k;
        for (int i = k + 1; i < N; ++i)
            if (std::fabs(a(i, k)) > std::fabs(a(p, k))) p = i;
        if (p != k) {
            for (int j = k; j < N; ++j) std::swap(a(k, j), a(p, j));
            for (int j = 0; j < M; ++j) std::swap(b(k, j), b(p, j));
        }
        const double piv = a(k, k);
        const double apiv = std::fabs(piv);
        if (k == 0) pivot_max = pivot_min = apiv;
        pivot_max = std::fmax(pivot_max, apiv);
        pivot_min = std::fmin(pivot_min, apiv);
        if (apiv == 0.0 || pivot_max / apiv > 1e15)
            throw numerical_error("singular linear system (pivot ratio " +
                                  std::to_string(apiv > 0 ? pivot_max / apiv : 0.0) + ")");
        for (int i = k + 1; i < N; ++i) {
            const double w = a(i, k) / piv;
            a(i, k) = 0.0;
            for (int j = k + 1; j < N; ++j) a(i, j) -= w * a(k, j);
            for (int j = 0; j < M; ++j) b(i, j) -= w * b(k, j);
        }
    }
    Mat<N, M> x;
    for (int i = N - 1; i >= 0; --i)
        for (int j = 0; j < M; ++j) {
            double s = b(i, j);
            for (int k = i + 1; k < N; ++k) s -= a(i, k) * x(k, j);
            x(i, j) = s / a(i, i);
        }
    return x;
}

template <int N>
Vec<N> solve(const Mat<N, N>& a, const Vec<N>& rhs) {
    Mat<N, 1> b;
    for (int i = 0; i < N; ++i) b(i, 0) = rhs[i];
    const Mat<N, 1> x = solve<N, 1>(a, b);
    Vec<N> out;
    for (int i = 0; i < N; ++i) out[i] = x(i, 0);
    return out;
}

// Eigenvalues (ascending) of a symmetric matrix by cyclic Jacobi rotations.
// Optionally accumulates eigenvectors as columns of *vectors.
template <int N>
Vec<N> symmetric_eigenvalues(Mat<N, N> a, Mat<N, N>* vectors = nullptr) {
    Mat<N, N> v = Mat<N, N>::identity();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-300) break;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < N; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < N; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < N; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }
    Vec<N> eig;
    for (int i = 0; i < N; ++i) eig[i] = a(i, i);
    // insertion sort, carrying eigenvector columns along
    for (int i = 1; i < N; ++i)
        for (int j = i; j > 0 && eig[j - 1] > eig[j]; --j) {
            std::swap(eig[j - 1], eig[j]);
            for (int k = 0; k < N; ++k) std::swap(v(k, j - 1), v(k, j));
        }
    if (vectors) *vectors = v;
    return eig;
}

// Singular values (ascending) of a wide matrix via the Gram matrix.
template <int R, int C>
Vec<R> singular_values(const Mat<R, C>& a) {
    static_assert(R <= C);
    const Mat<R, R> g = a * transpose(a);
    Vec<R> eig = symmetric_eigenvalues(g);
    for (int i = 0; i < R; ++i) eig[i] = std::sqrt(std::fmax(eig[i], 0.0));
    return eig;
}

// 2-norm condition number estimate from singular values.
template <int N>
inline double condition_number(const Mat<N, N>& a) {
    const Vec<N> sv = singular_values(a);
    return sv[0] > 0.0 ? sv[N - 1] / sv[0] : std::numeric_limits<double>::infinity();
}

}  // namespace spr3

#endif
