#include "triboq/series.hpp"

#include <stdexcept>
#include <string>

namespace triboq {

namespace {

Poly mono(std::size_t power, long long scale = 1)
{
    return Poly::x_pow(power, Int(scale));
}

QPoly qscalar(Poly p)
{
    return QPoly(std::move(p));
}

} // namespace

TruncSeries<Poly> trib_denominator(std::int64_t order)
{
    return TruncSeries<Poly>::from_coeffs(
        order, {Poly(1), mono(2, -1), mono(1, -1), Poly(-1)});
}

TruncSeries<QPoly> trib_denominator_quat(std::int64_t order)
{
    return TruncSeries<QPoly>::from_coeffs(
        order, {qscalar(Poly(1)), qscalar(mono(2, -1)), qscalar(mono(1, -1)),
                qscalar(Poly(-1))});
}

TruncSeries<Poly> gf_trib(std::int64_t order)
{
    auto numer = TruncSeries<Poly>::from_coeffs(order, {Poly(0), Poly(1)});
    return series_from_rational(numer, trib_denominator(order), order);
}

TruncSeries<Poly> gf_trib_lucas(std::int64_t order)
{
    auto numer = TruncSeries<Poly>::from_coeffs(
        order, {Poly(3), mono(2, -2), mono(1, -1)});
    return series_from_rational(numer, trib_denominator(order), order);
}

TruncSeries<QPoly> gf_trib_quat(std::int64_t order)
{
    // Numerator spelled out from the closed form:
    //   y + i + (x^2 + x y + y^2) j + (x^4 + x + x^3 y + y + x^2 y^2) k
    QPoly c0{Poly(0), Poly(1), mono(2), mono(4) + mono(1)};
    QPoly c1{Poly(1), Poly(0), mono(1), mono(3) + Poly(1)};
    QPoly c2{Poly(0), Poly(0), Poly(1), mono(2)};
    auto numer = TruncSeries<QPoly>::from_coeffs(
        order, {std::move(c0), std::move(c1), std::move(c2)});
    return series_from_rational(numer, trib_denominator_quat(order), order);
}

TruncSeries<QPoly> gf_trib_lucas_quat(std::int64_t order)
{
    // Numerator spelled out from the closed form:
    //   3 - 2x^2 y - x y^2
    //   + (x^2 + 2x y + 3 y^2) i
    //   + (x^4 + 2x + x^3 y + 3 y + x^2 y^2) j
    //   + (x^6 + 3x^3 + 3 + x^5 y + 3x^2 y + x^4 y^2 + 2x y^2) k
    QPoly c0{Poly(3), mono(2), mono(4) + mono(1, 2),
             mono(6) + mono(3, 3) + Poly(3)};
    QPoly c1{mono(2, -2), mono(1, 2), mono(3) + Poly(3),
             mono(5) + mono(2, 3)};
    QPoly c2{mono(1, -1), Poly(3), mono(2), mono(4) + mono(1, 2)};
    auto numer = TruncSeries<QPoly>::from_coeffs(
        order, {std::move(c0), std::move(c1), std::move(c2)});
    return series_from_rational(numer, trib_denominator_quat(order), order);
}

TruncSeries<QPoly> gf_shifted(QuatKind kind, std::int64_t m, std::int64_t order)
{
    if (m < 2) {
        throw std::domain_error("shifted generating function needs m >= 2, got " +
                                std::to_string(m));
    }
    const auto seq = kind == QuatKind::Trib ? trib_quat : trib_lucas_quat;
    // Numerator Q_m + (x Q_{m-1} + Q_{m-2}) y + Q_{m-1} y^2.
    QPoly qm = seq(m);
    QPoly qm1 = seq(m - 1);
    QPoly qm2 = seq(m - 2);
    auto numer = TruncSeries<QPoly>::from_coeffs(
        order, {std::move(qm), mono(1) * qm1 + qm2, std::move(qm1)});
    return series_from_rational(numer, trib_denominator_quat(order), order);
}

} // namespace triboq
