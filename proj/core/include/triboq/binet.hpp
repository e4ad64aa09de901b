#pragma once

#include "triboq/quaternion.hpp"
#include "triboq/sequences.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace triboq {

/// Thrown when root polishing cannot reach the requested tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Roots of the characteristic cubic
///   s^3 - x0^2 s^2 - x0 s - 1 = 0,
/// canonically ordered: alpha is the root with the largest real part (real,
/// stored complex), omega1 the root with positive imaginary part, omega2 its
/// conjugate. Validated at construction: each root satisfies the cubic to
/// within tol, the root sum equals x0^2 and the root product equals 1 to
/// within tol, and |Im(alpha)| < tol.
struct CubicRoots {
    double x0 = 0.0;
    std::complex<double> alpha;
    std::complex<double> omega1;
    std::complex<double> omega2;
    double tol = 0.0;
};

/// Solves the characteristic cubic for a parameter x0 > 0 (Cardano on the
/// depressed cubic, then Newton polishing). Throws std::domain_error for
/// x0 <= 0 and ConvergenceError when the validated invariants cannot be met
/// at tol.
CubicRoots solve_cubic(double x0, double tol = 1e-12);

/// The three quaternion constants (1, r, r^2, r^3) for r = alpha, omega1,
/// omega2 that carry the per-root weights of the quaternion Binet forms.
std::array<NumQuat, 3> quat_constants(const CubicRoots& roots);

/// Scalar Binet value of the Tribonacci polynomial at the roots' parameter.
/// Throws std::domain_error when the roots are too close to repeated (the
/// partial-fraction denominators vanish).
std::complex<double> binet_trib(std::int64_t n, const CubicRoots& roots);

/// Scalar Binet value of the Tribonacci-Lucas polynomial: the power sum
/// alpha^n + omega1^n + omega2^n.
std::complex<double> binet_trib_lucas(std::int64_t n, const CubicRoots& roots);

/// Quaternion Binet value of Q_{T,n} or Q_{t,n} at the roots' parameter.
NumQuat binet_quat(QuatKind kind, std::int64_t n, const CubicRoots& roots);

/// Exponential generating function evaluated at y0, both ways:
///   first  = truncated sum_{n<=order} eval(sequence(n), x0) y0^n / n!
///   second = closed form in exp(root * y0) with the Binet weights.
/// Requires order large enough that the leading tail bound
/// (max|root| |y0|)^{order+1} / (order+1)! is below tail_tol.
std::pair<NumQuat, NumQuat> egf_eval(QuatKind kind, const CubicRoots& roots,
                                     double y0, std::int64_t order,
                                     double tail_tol = 1e-10);

} // namespace triboq
