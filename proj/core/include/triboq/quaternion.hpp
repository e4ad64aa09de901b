#pragma once

#include "triboq/poly.hpp"

#include <complex>
#include <ostream>
#include <sstream>
#include <string>

namespace triboq {

/// Quaternion over a commutative coefficient ring R, components on the
/// basis 1, i, j, k with i^2 = j^2 = k^2 = ijk = -1. Coefficients are
/// central: scalar multiplication is two-sided and equal. With R a complex
/// scalar type this is the biquaternion convention (the complex unit
/// commutes with i, j, k).
template <typename R>
struct Quat {
    R r{};
    R i{};
    R j{};
    R k{};

    Quat() = default;
    explicit Quat(R scalar) : r(std::move(scalar)) {}
    Quat(R r_, R i_, R j_, R k_)
        : r(std::move(r_)), i(std::move(i_)), j(std::move(j_)), k(std::move(k_))
    {
    }

    bool operator==(const Quat&) const = default;

    Quat operator-() const { return {R(-r), R(-i), R(-j), R(-k)}; }

    friend Quat operator+(const Quat& a, const Quat& b)
    {
        return {a.r + b.r, a.i + b.i, a.j + b.j, a.k + b.k};
    }

    friend Quat operator-(const Quat& a, const Quat& b)
    {
        return {a.r - b.r, a.i - b.i, a.j - b.j, a.k - b.k};
    }

    /// Hamilton product. Associative, non-commutative in general.
    friend Quat operator*(const Quat& a, const Quat& b)
    {
        return {
            a.r * b.r - a.i * b.i - a.j * b.j - a.k * b.k,
            a.r * b.i + a.i * b.r + a.j * b.k - a.k * b.j,
            a.r * b.j - a.i * b.k + a.j * b.r + a.k * b.i,
            a.r * b.k + a.i * b.j - a.j * b.i + a.k * b.r,
        };
    }

    friend Quat operator*(const R& c, const Quat& q)
    {
        return {c * q.r, c * q.i, c * q.j, c * q.k};
    }

    friend Quat operator*(const Quat& q, const R& c) { return c * q; }

    Quat& operator+=(const Quat& rhs) { return *this = *this + rhs; }
    Quat& operator-=(const Quat& rhs) { return *this = *this - rhs; }
};

using QPoly = Quat<Poly>;
using NumQuat = Quat<std::complex<double>>;
using RatQuat = Quat<Rat>;

/// Negates the i, j, k components.
template <typename R>
Quat<R> conj(const Quat<R>& q)
{
    return {q.r, R(-q.i), R(-q.j), R(-q.k)};
}

/// True when the i, j, k components are all zero.
template <typename R>
bool is_scalar(const Quat<R>& q)
{
    const R zero = RingTraits<R>::zero();
    return q.i == zero && q.j == zero && q.k == zero;
}

/// Component-wise complex evaluation of a polynomial quaternion.
inline NumQuat eval(const QPoly& q, std::complex<double> z)
{
    return {q.r.eval(z), q.i.eval(z), q.j.eval(z), q.k.eval(z)};
}

/// Component-wise exact rational evaluation.
inline RatQuat eval_exact(const QPoly& q, const Rat& x0)
{
    return {q.r.eval_exact(x0), q.i.eval_exact(x0), q.j.eval_exact(x0),
            q.k.eval_exact(x0)};
}

template <typename R>
struct RingTraits<Quat<R>> {
    static Quat<R> zero() { return Quat<R>{}; }
    static Quat<R> one() { return Quat<R>(RingTraits<R>::one()); }
};

template <typename R>
std::string to_string(const Quat<R>& q)
{
    std::ostringstream os;
    os << "(" << q.r << ") + (" << q.i << ")i + (" << q.j << ")j + (" << q.k
       << ")k";
    return os.str();
}

template <typename R>
std::ostream& operator<<(std::ostream& os, const Quat<R>& q)
{
    return os << to_string(q);
}

} // namespace triboq
