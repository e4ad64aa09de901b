#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace triboq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial in x over arbitrary-precision integers.
///
/// Canonical form: the coefficient vector stores ascending powers and never
/// ends in a zero; the zero polynomial is the empty vector. Every operation
/// preserves this. Values are immutable in practice (all operations return
/// new polynomials), so they can be shared freely across threads.
class Poly {
public:
    /// degree() of the zero polynomial; stands in for "minus infinity".
    static constexpr std::int64_t kZeroDegree = -1;

    Poly() = default;
    explicit Poly(Int constant);
    explicit Poly(long long constant) : Poly(Int(constant)) {}

    /// Builds from ascending-power coefficients, trimming trailing zeros.
    static Poly from_coeffs(std::vector<Int> coeffs);
    /// scale * x^power
    static Poly x_pow(std::size_t power, Int scale = Int(1));

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const
    {
        return is_zero() ? kZeroDegree : static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    /// Coefficient of x^k; zero above the degree.
    const Int& coeff(std::size_t k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(const Int& c, const Poly& p);
    friend Poly operator*(const Poly& p, const Int& c) { return c * p; }

    bool operator==(const Poly&) const = default;

    /// Horner evaluation in exact rational arithmetic.
    Rat eval_exact(const Rat& x0) const;
    /// Horner evaluation in complex floating point.
    std::complex<double> eval(std::complex<double> z) const;
    double eval(double x0) const;

    std::string to_string() const;

private:
    std::vector<Int> coeffs_;

    void trim();
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Parses "p/q", plain integers, or exact decimal strings ("1.5" -> 3/2).
/// Throws std::invalid_argument on anything else.
Rat parse_rational(const std::string& text);

/// Renders a rational as a plain integer when the denominator is 1,
/// otherwise as "p/q".
std::string rat_to_string(const Rat& value);

/// Unit and zero of a coefficient ring, for code generic over Poly,
/// quaternions and floating-point scalars.
template <typename R>
struct RingTraits {
    static R zero() { return R(0); }
    static R one() { return R(1); }
};

template <>
struct RingTraits<Poly> {
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
};

} // namespace triboq
