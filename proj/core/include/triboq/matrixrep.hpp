#pragma once

#include "triboq/poly.hpp"
#include "triboq/quaternion.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace triboq {

/// Dense 3x3 matrix over a ring R (Poly or QPoly). Multiplication keeps
/// factor order, so quaternion entries are handled correctly.
template <typename R>
struct Mat3 {
    std::array<R, 9> e{};

    static Mat3 identity()
    {
        Mat3 m;
        m.at(0, 0) = RingTraits<R>::one();
        m.at(1, 1) = RingTraits<R>::one();
        m.at(2, 2) = RingTraits<R>::one();
        return m;
    }

    R& at(int row, int col) { return e[static_cast<std::size_t>(row * 3 + col)]; }
    const R& at(int row, int col) const
    {
        return e[static_cast<std::size_t>(row * 3 + col)];
    }

    bool operator==(const Mat3&) const = default;

    friend Mat3 operator*(const Mat3& a, const Mat3& b)
    {
        Mat3 out;
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                R acc = a.at(r, 0) * b.at(0, c);
                acc += a.at(r, 1) * b.at(1, c);
                acc += a.at(r, 2) * b.at(2, c);
                out.at(r, c) = std::move(acc);
            }
        }
        return out;
    }
};

/// Binary exponentiation; m^0 is the identity.
template <typename R>
Mat3<R> mat_pow(Mat3<R> m, std::int64_t n)
{
    if (n < 0) {
        throw std::domain_error("mat_pow needs n >= 0");
    }
    Mat3<R> acc = Mat3<R>::identity();
    while (n > 0) {
        if (n & 1) {
            acc = acc * m;
        }
        m = m * m;
        n >>= 1;
    }
    return acc;
}

/// Determinant by cofactor expansion; meaningful for commutative R.
template <typename R>
R det(const Mat3<R>& m)
{
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

/// Embeds a polynomial matrix into the quaternion ring (scalar parts).
Mat3<QPoly> lift(const Mat3<Poly>& m);

/// Mixed product: quaternion-entry matrix times polynomial-entry matrix.
/// Polynomial scalars are central, so lifting the right factor is exact.
inline Mat3<QPoly> operator*(const Mat3<QPoly>& a, const Mat3<Poly>& b)
{
    return a * lift(b);
}

/// The companion matrix of the Tribonacci recurrence:
///   [x^2 x 1; 1 0 0; 0 1 0].
/// Applied to a column (T_{n+2}, T_{n+1}, T_n) it advances the window.
Mat3<Poly> s_matrix();

/// Closed form of the n-th companion-matrix power, assembled from sequence
/// terms (indices reach down to n-3, using the backward extension); n >= 1.
Mat3<Poly> s_power_closed(std::int64_t n);

/// The Tribonacci quaternion polynomial matrix
///   [Q_4  xQ_3+Q_2  Q_3; Q_3  xQ_2+Q_1  Q_2; Q_2  xQ_1+Q_0  Q_1].
Mat3<QPoly> qs_matrix();

/// Both sides of the product identity for qs_matrix() * S^n: the computed
/// product on the left, the matrix assembled from sequence terms
/// (with middle column x Q_m + Q_{m-1}) on the right. Equal for all n >= 0.
std::pair<Mat3<QPoly>, Mat3<QPoly>> qs_product_sides(std::int64_t n);

/// Both sides of the scalar-coefficient decomposition
///   Q_{n+2} = Q_2 T_{n+1} + (x Q_1 + Q_0) T_n + Q_1 T_{n-1},  n >= 0.
std::pair<QPoly, QPoly> decomposition_sides(std::int64_t n);

} // namespace triboq
