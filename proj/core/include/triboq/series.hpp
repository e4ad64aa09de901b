#pragma once

#include "triboq/poly.hpp"
#include "triboq/quaternion.hpp"
#include "triboq/sequences.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace triboq {

/// Truncated formal power series in y with coefficients in a ring R
/// (Poly or QPoly here). Unlike Poly, zero coefficients are stored
/// explicitly: a series of order N always holds N+1 coefficients, since
/// the truncation order is structural information.
template <typename R>
class TruncSeries {
public:
    explicit TruncSeries(std::int64_t order)
    {
        if (order < 0) {
            throw std::invalid_argument("series order must be >= 0");
        }
        coeffs_.assign(static_cast<std::size_t>(order) + 1, R{});
    }

    /// Low-order coefficients, padded with zeros (or truncated) to the order.
    static TruncSeries from_coeffs(std::int64_t order, std::vector<R> low)
    {
        TruncSeries s(order);
        const std::size_t n = std::min(low.size(), s.coeffs_.size());
        for (std::size_t m = 0; m < n; ++m) {
            s.coeffs_[m] = std::move(low[m]);
        }
        return s;
    }

    std::int64_t order() const
    {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }

    const R& coeff(std::int64_t m) const { return coeffs_.at(index(m)); }

    void set_coeff(std::int64_t m, R value)
    {
        coeffs_.at(index(m)) = std::move(value);
    }

    const std::vector<R>& coeffs() const { return coeffs_; }

    bool operator==(const TruncSeries&) const = default;

    /// Sum, truncated to the smaller order.
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b)
    {
        TruncSeries out(std::min(a.order(), b.order()));
        for (std::int64_t m = 0; m <= out.order(); ++m) {
            out.coeffs_[static_cast<std::size_t>(m)] = a.coeff(m) + b.coeff(m);
        }
        return out;
    }

    /// Cauchy product truncated to the smaller order. Factor order is
    /// preserved, so this is sound for non-commutative coefficients.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        TruncSeries out(std::min(a.order(), b.order()));
        for (std::int64_t m = 0; m <= out.order(); ++m) {
            R acc{};
            for (std::int64_t p = 0; p <= m; ++p) {
                acc += a.coeff(p) * b.coeff(m - p);
            }
            out.coeffs_[static_cast<std::size_t>(m)] = std::move(acc);
        }
        return out;
    }

    /// Truncate (or zero-pad) to a new order.
    TruncSeries truncated(std::int64_t new_order) const
    {
        TruncSeries out(new_order);
        const std::int64_t n = std::min(new_order, order());
        for (std::int64_t m = 0; m <= n; ++m) {
            out.coeffs_[static_cast<std::size_t>(m)] = coeff(m);
        }
        return out;
    }

private:
    std::vector<R> coeffs_;

    std::size_t index(std::int64_t m) const
    {
        if (m < 0 || m > order()) {
            throw std::out_of_range("series coefficient index out of range");
        }
        return static_cast<std::size_t>(m);
    }
};

/// The unique series s with s * denom == numer (mod y^{order+1}), by long
/// division:
///   s[m] = numer[m] - sum_{p=1..m} s[m-p] * denom[p].
/// Requires denom's constant term to be the ring unit; coefficients of
/// either series beyond their stored order count as zero.
template <typename R>
TruncSeries<R> series_from_rational(const TruncSeries<R>& numer,
                                    const TruncSeries<R>& denom,
                                    std::int64_t order)
{
    if (!(denom.coeff(0) == RingTraits<R>::one())) {
        throw std::domain_error(
            "series division requires a unit constant term in the denominator");
    }
    TruncSeries<R> out(order);
    for (std::int64_t m = 0; m <= order; ++m) {
        R acc = m <= numer.order() ? numer.coeff(m) : R{};
        const std::int64_t pmax = std::min(m, denom.order());
        for (std::int64_t p = 1; p <= pmax; ++p) {
            acc -= out.coeff(m - p) * denom.coeff(p);
        }
        out.set_coeff(m, std::move(acc));
    }
    return out;
}

/// 1 - x^2 y - x y^2 - y^3, the common denominator of all four closed-form
/// generating functions.
TruncSeries<Poly> trib_denominator(std::int64_t order);
TruncSeries<QPoly> trib_denominator_quat(std::int64_t order);

/// Expansion of y / (1 - x^2 y - x y^2 - y^3): coefficients T_0(x), T_1(x), ...
TruncSeries<Poly> gf_trib(std::int64_t order);

/// Expansion of (3 - 2x^2 y - x y^2) / (1 - x^2 y - x y^2 - y^3):
/// coefficients t_0(x), t_1(x), ...
TruncSeries<Poly> gf_trib_lucas(std::int64_t order);

/// Closed-form generating function of the Tribonacci quaternion polynomials,
/// expanded to the given order.
TruncSeries<QPoly> gf_trib_quat(std::int64_t order);

/// Closed-form generating function of the Tribonacci-Lucas quaternion
/// polynomials, expanded to the given order.
TruncSeries<QPoly> gf_trib_lucas_quat(std::int64_t order);

/// Closed-form generating function of the index-shifted sequence
/// {Q_{n+m}}_{n>=0}; numerator built from terms m-2..m, so m >= 2.
TruncSeries<QPoly> gf_shifted(QuatKind kind, std::int64_t m, std::int64_t order);

} // namespace triboq
