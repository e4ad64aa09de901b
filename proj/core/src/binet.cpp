#include "triboq/binet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace triboq {

namespace {

using Cplx = std::complex<double>;

Cplx cubic_value(double x0, Cplx s)
{
    return ((s - x0 * x0) * s - x0) * s - 1.0;
}

Cplx cubic_deriv(double x0, Cplx s)
{
    return (3.0 * s - 2.0 * x0 * x0) * s - x0;
}

Cplx newton_polish(double x0, Cplx s)
{
    Cplx best = s;
    double best_res = std::abs(cubic_value(x0, s));
    for (int it = 0; it < 50 && best_res > 0.0; ++it) {
        const Cplx d = cubic_deriv(x0, s);
        if (std::abs(d) == 0.0) {
            break;
        }
        s -= cubic_value(x0, s) / d;
        const double res = std::abs(cubic_value(x0, s));
        if (res < best_res) {
            best_res = res;
            best = s;
        }
    }
    return best;
}

Cplx pow_int(Cplx base, std::int64_t n)
{
    Cplx acc(1.0, 0.0);
    while (n > 0) {
        if (n & 1) {
            acc *= base;
        }
        base *= base;
        n >>= 1;
    }
    return acc;
}

struct Denoms {
    Cplx a1; // alpha - omega1
    Cplx a2; // alpha - omega2
    Cplx w12; // omega1 - omega2
};

Denoms binet_denoms(const CubicRoots& r)
{
    Denoms d{r.alpha - r.omega1, r.alpha - r.omega2, r.omega1 - r.omega2};
    const double floor = 1e-9 * (1.0 + std::abs(r.alpha));
    if (std::abs(d.a1) < floor || std::abs(d.a2) < floor ||
        std::abs(d.w12) < floor) {
        throw std::domain_error(
            "repeated characteristic roots: Binet denominators vanish");
    }
    return d;
}

} // namespace

CubicRoots solve_cubic(double x0, double tol)
{
    if (!(x0 > 0.0)) {
        throw std::domain_error("solve_cubic requires x0 > 0");
    }

    // Depressed form: s = t + x0^2/3 turns the cubic s^3 + b s^2 + c s + d
    // (b = -x0^2, c = -x0, d = -1) into t^3 + p t + q.
    const double b = -x0 * x0;
    const double c = -x0;
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 - 1.0;

    const double shift = x0 * x0 / 3.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;

    Cplx root_real;
    Cplx root_pair;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        const double u = std::cbrt(-q / 2.0 + sq);
        const double v = std::cbrt(-q / 2.0 - sq);
        root_real = Cplx(u + v + shift, 0.0);
        root_pair =
            Cplx(-(u + v) / 2.0 + shift, std::sqrt(3.0) / 2.0 * (u - v));
    } else {
        // Three real roots; take the largest as "alpha" and the next one as
        // the pair seed. Not reachable for x0 > 0 but kept for robustness.
        const double r = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(
            3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0);
        const double theta = std::acos(arg);
        double t0 = r * std::cos(theta / 3.0);
        double t1 = r * std::cos(theta / 3.0 - 2.0 * M_PI / 3.0);
        double t2 = r * std::cos(theta / 3.0 - 4.0 * M_PI / 3.0);
        if (t1 > t0) std::swap(t0, t1);
        if (t2 > t0) std::swap(t0, t2);
        root_real = Cplx(t0 + shift, 0.0);
        root_pair = Cplx(t1 + shift, 0.0);
    }

    // Polish; keep alpha exactly real (real Newton stays on the real line).
    root_real = newton_polish(x0, Cplx(root_real.real(), 0.0));
    root_real = Cplx(root_real.real(), 0.0);
    root_pair = newton_polish(x0, root_pair);
    if (root_pair.imag() < 0.0) {
        root_pair = std::conj(root_pair);
    }

    CubicRoots roots{x0, root_real, root_pair, std::conj(root_pair), tol};

    std::ostringstream problems;
    const auto check = [&](bool ok, const char* what) {
        if (!ok) {
            problems << (problems.tellp() > 0 ? "; " : "") << what;
        }
    };
    check(std::abs(cubic_value(x0, roots.alpha)) < tol, "alpha residual");
    check(std::abs(cubic_value(x0, roots.omega1)) < tol, "omega1 residual");
    check(std::abs(cubic_value(x0, roots.omega2)) < tol, "omega2 residual");
    check(std::abs(roots.alpha + roots.omega1 + roots.omega2 -
                   Cplx(x0 * x0, 0.0)) < tol,
          "root sum");
    check(std::abs(roots.alpha * roots.omega1 * roots.omega2 - 1.0) < tol,
          "root product");
    check(std::abs(roots.alpha.imag()) < tol, "alpha imaginary part");
    check(roots.alpha.real() > 0.0, "alpha sign");
    if (problems.tellp() > 0) {
        std::ostringstream msg;
        msg << "cubic solve failed tolerance " << tol << " at x0=" << x0 << ": "
            << problems.str();
        throw ConvergenceError(msg.str());
    }
    return roots;
}

std::array<NumQuat, 3> quat_constants(const CubicRoots& roots)
{
    const auto weight = [](Cplx r) {
        return NumQuat{Cplx(1.0, 0.0), r, r * r, r * r * r};
    };
    return {weight(roots.alpha), weight(roots.omega1), weight(roots.omega2)};
}

std::complex<double> binet_trib(std::int64_t n, const CubicRoots& roots)
{
    if (n < 0) {
        throw std::out_of_range("binet_trib defined for n >= 0");
    }
    const Denoms d = binet_denoms(roots);
    return pow_int(roots.alpha, n + 1) / (d.a1 * d.a2) -
           pow_int(roots.omega1, n + 1) / (d.a1 * d.w12) +
           pow_int(roots.omega2, n + 1) / (d.a2 * d.w12);
}

std::complex<double> binet_trib_lucas(std::int64_t n, const CubicRoots& roots)
{
    if (n < 0) {
        throw std::out_of_range("binet_trib_lucas defined for n >= 0");
    }
    return pow_int(roots.alpha, n) + pow_int(roots.omega1, n) +
           pow_int(roots.omega2, n);
}

NumQuat binet_quat(QuatKind kind, std::int64_t n, const CubicRoots& roots)
{
    if (n < 0) {
        throw std::out_of_range("binet_quat defined for n >= 0");
    }
    const auto [ua, u1, u2] = quat_constants(roots);
    if (kind == QuatKind::TribLucas) {
        return ua * pow_int(roots.alpha, n) + u1 * pow_int(roots.omega1, n) +
               u2 * pow_int(roots.omega2, n);
    }
    const Denoms d = binet_denoms(roots);
    return ua * (pow_int(roots.alpha, n + 1) / (d.a1 * d.a2)) -
           u1 * (pow_int(roots.omega1, n + 1) / (d.a1 * d.w12)) +
           u2 * (pow_int(roots.omega2, n + 1) / (d.a2 * d.w12));
}

std::pair<NumQuat, NumQuat> egf_eval(QuatKind kind, const CubicRoots& roots,
                                     double y0, std::int64_t order,
                                     double tail_tol)
{
    if (order < 0) {
        throw std::invalid_argument("egf_eval needs order >= 0");
    }
    const double rmax =
        std::max({std::abs(roots.alpha), std::abs(roots.omega1),
                  std::abs(roots.omega2)});
    const double a = rmax * std::abs(y0);
    if (a > 0.0) {
        const double log_tail =
            static_cast<double>(order + 1) * std::log(a) -
            std::lgamma(static_cast<double>(order) + 2.0);
        if (log_tail > std::log(tail_tol)) {
            throw std::domain_error(
                "egf_eval truncation order too small for requested tolerance");
        }
    }

    const auto seq = kind == QuatKind::Trib ? trib_quat : trib_lucas_quat;
    const Cplx x0(roots.x0, 0.0);
    NumQuat truncated{};
    double factor = 1.0; // y0^n / n!
    for (std::int64_t n = 0; n <= order; ++n) {
        truncated += eval(seq(n), x0) * Cplx(factor, 0.0);
        factor *= y0 / static_cast<double>(n + 1);
    }

    const auto [ua, u1, u2] = quat_constants(roots);
    const Cplx ea = std::exp(roots.alpha * y0);
    const Cplx e1 = std::exp(roots.omega1 * y0);
    const Cplx e2 = std::exp(roots.omega2 * y0);
    NumQuat closed{};
    if (kind == QuatKind::TribLucas) {
        closed = ua * ea + u1 * e1 + u2 * e2;
    } else {
        const Denoms d = binet_denoms(roots);
        closed = ua * (roots.alpha * ea / (d.a1 * d.a2)) -
                 u1 * (roots.omega1 * e1 / (d.a1 * d.w12)) +
                 u2 * (roots.omega2 * e2 / (d.a2 * d.w12));
    }
    return {truncated, closed};
}

} // namespace triboq
