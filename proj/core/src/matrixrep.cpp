#include "triboq/matrixrep.hpp"

#include "triboq/sequences.hpp"

#include <stdexcept>
#include <string>

namespace triboq {

namespace {

const Poly& x1()
{
    static const Poly p = Poly::x_pow(1);
    return p;
}

} // namespace

Mat3<QPoly> lift(const Mat3<Poly>& m)
{
    Mat3<QPoly> out;
    for (std::size_t idx = 0; idx < 9; ++idx) {
        out.e[idx] = QPoly(m.e[idx]);
    }
    return out;
}

Mat3<Poly> s_matrix()
{
    Mat3<Poly> s;
    s.at(0, 0) = Poly::x_pow(2);
    s.at(0, 1) = Poly::x_pow(1);
    s.at(0, 2) = Poly(1);
    s.at(1, 0) = Poly(1);
    s.at(2, 1) = Poly(1);
    return s;
}

Mat3<Poly> s_power_closed(std::int64_t n)
{
    if (n < 1) {
        throw std::domain_error("s_power_closed needs n >= 1, got " +
                                std::to_string(n));
    }
    Mat3<Poly> out;
    for (int row = 0; row < 3; ++row) {
        const std::int64_t top = n + 1 - row;
        out.at(row, 0) = trib_poly(top);
        out.at(row, 1) = x1() * trib_poly(top - 1) + trib_poly(top - 2);
        out.at(row, 2) = trib_poly(top - 1);
    }
    return out;
}

Mat3<QPoly> qs_matrix()
{
    Mat3<QPoly> out;
    for (int row = 0; row < 3; ++row) {
        const std::int64_t top = 4 - row;
        out.at(row, 0) = trib_quat(top);
        out.at(row, 1) = x1() * trib_quat(top - 1) + trib_quat(top - 2);
        out.at(row, 2) = trib_quat(top - 1);
    }
    return out;
}

std::pair<Mat3<QPoly>, Mat3<QPoly>> qs_product_sides(std::int64_t n)
{
    if (n < 0) {
        throw std::domain_error("qs_product_sides needs n >= 0, got " +
                                std::to_string(n));
    }
    Mat3<QPoly> left = qs_matrix() * mat_pow(s_matrix(), n);

    Mat3<QPoly> right;
    for (int row = 0; row < 3; ++row) {
        const std::int64_t top = n + 4 - row;
        right.at(row, 0) = trib_quat(top);
        right.at(row, 1) = x1() * trib_quat(top - 1) + trib_quat(top - 2);
        right.at(row, 2) = trib_quat(top - 1);
    }
    return {std::move(left), std::move(right)};
}

std::pair<QPoly, QPoly> decomposition_sides(std::int64_t n)
{
    if (n < 0) {
        throw std::domain_error("decomposition_sides needs n >= 0, got " +
                                std::to_string(n));
    }
    QPoly left = trib_quat(n + 2);
    QPoly right = trib_quat(2) * trib_poly(n + 1) +
                  (x1() * trib_quat(1) + trib_quat(0)) * trib_poly(n) +
                  trib_quat(1) * trib_poly(n - 1);
    return {std::move(left), std::move(right)};
}

} // namespace triboq
