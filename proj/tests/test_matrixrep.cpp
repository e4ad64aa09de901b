#include "triboq/matrixrep.hpp"

#include "triboq/sequences.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <array>
#include <random>
#include <stdexcept>

using namespace triboq;
using test::poly_of;

namespace {

// matrix * column vector over Poly
std::array<Poly, 3> apply(const Mat3<Poly>& m, const std::array<Poly, 3>& v)
{
    std::array<Poly, 3> out;
    for (int r = 0; r < 3; ++r) {
        out[static_cast<std::size_t>(r)] =
            m.at(r, 0) * v[0] + m.at(r, 1) * v[1] + m.at(r, 2) * v[2];
    }
    return out;
}

} // namespace

TEST_CASE("companion matrix layout")
{
    const Mat3<Poly> s = s_matrix();
    CHECK(s.at(0, 0) == Poly::x_pow(2));
    CHECK(s.at(0, 1) == Poly::x_pow(1));
    CHECK(s.at(0, 2) == Poly(1));
    CHECK(s.at(1, 0) == Poly(1));
    CHECK(s.at(1, 1) == Poly());
    CHECK(s.at(2, 1) == Poly(1));
    CHECK(s.at(2, 2) == Poly());
}

TEST_CASE("companion matrix advances a sequence window")
{
    const auto advanced = apply(
        s_matrix(), {trib_poly(2), trib_poly(1), trib_poly(0)});
    CHECK(advanced[0] == trib_poly(3));
    CHECK(advanced[1] == trib_poly(2));
    CHECK(advanced[2] == trib_poly(1));
}

TEST_CASE("matrix multiplication basics")
{
    const Mat3<Poly> s = s_matrix();
    CHECK(Mat3<Poly>::identity() * s == s);
    CHECK(s * Mat3<Poly>::identity() == s);

    // square once by hand and compare against the closed form
    const Mat3<Poly> s2 = s * s;
    CHECK(s2 == s_power_closed(2));
    CHECK(s2.at(0, 0) == trib_poly(3));
    CHECK(s2.at(0, 1) == Poly::x_pow(1) * trib_poly(2) + trib_poly(1));
    CHECK(s2.at(0, 2) == trib_poly(2));
}

TEST_CASE("binary exponentiation against sequential multiplication")
{
    const Mat3<Poly> s = s_matrix();
    CHECK(mat_pow(s, 0) == Mat3<Poly>::identity());
    CHECK(mat_pow(s, 1) == s);

    Mat3<Poly> naive = s;
    for (int step = 1; step < 5; ++step) {
        naive = naive * s;
    }
    CHECK(mat_pow(s, 5) == naive);
    CHECK_THROWS_AS(mat_pow(s, -1), std::domain_error);
}

TEST_CASE("power additivity")
{
    std::mt19937 rng(60321);
    std::uniform_int_distribution<std::int64_t> dist(0, 12);
    const Mat3<Poly> s = s_matrix();
    for (int trial = 0; trial < 8; ++trial) {
        const std::int64_t a = dist(rng);
        const std::int64_t b = dist(rng);
        CHECK(mat_pow(s, a + b) == mat_pow(s, a) * mat_pow(s, b));
    }
}

TEST_CASE("closed form of companion powers")
{
    CHECK(s_power_closed(1) == s_matrix());
    CHECK(s_power_closed(1).at(0, 0) == Poly::x_pow(2));
    CHECK(s_power_closed(1).at(0, 1) == Poly::x_pow(1));
    CHECK(s_power_closed(2).at(2, 1) == Poly()); // x T_0 + T_{-1} = 0

    const Mat3<Poly> s = s_matrix();
    for (std::int64_t n = 1; n <= 20; ++n) {
        CHECK(s_power_closed(n) == mat_pow(s, n));
    }
    CHECK_THROWS_AS(s_power_closed(0), std::domain_error);
}

TEST_CASE("unimodularity")
{
    CHECK(det(s_matrix()) == Poly(1));
}

TEST_CASE("quaternion matrix layout")
{
    const Mat3<QPoly> qs = qs_matrix();
    CHECK(qs.at(2, 2) == trib_quat(1));
    CHECK(qs.at(1, 1) == Poly::x_pow(1) * trib_quat(2) + trib_quat(1));
    CHECK(qs.at(0, 0) == trib_quat(4));
    const RatQuat corner = eval_exact(qs.at(0, 0), Rat(1));
    CHECK(corner == RatQuat{Rat(4), Rat(7), Rat(13), Rat(24)});
}

TEST_CASE("product identity for the quaternion matrix")
{
    {
        const auto [left, right] = qs_product_sides(0);
        CHECK(left == qs_matrix());
        CHECK(right == qs_matrix());
    }
    for (std::int64_t n : {1, 10}) {
        const auto [left, right] = qs_product_sides(n);
        CHECK(left == right);
    }
    for (std::int64_t n = 0; n <= 20; ++n) {
        const auto [left, right] = qs_product_sides(n);
        CHECK(left == right);
    }
}

TEST_CASE("scalar factors are central in mixed products")
{
    std::mt19937 rng(444);
    for (int trial = 0; trial < 10; ++trial) {
        const QPoly q = test::random_qpoly(rng, 4, 12);
        const Poly p = test::random_poly(rng, 4, 12);
        CHECK(p * q == q * p);
    }
    // mixed-ring matrix product associates with the lifted form
    const Mat3<Poly> s = s_matrix();
    const Mat3<QPoly> qs = qs_matrix();
    CHECK(qs * s == qs * lift(s));
    CHECK((qs * s) * s == qs * (s * s));
}

TEST_CASE("decomposition into scalar-weighted low-order terms")
{
    {
        const auto [left, right] = decomposition_sides(0);
        CHECK(left == trib_quat(2));
        CHECK(right == trib_quat(2)); // T_1 = 1, T_0 = 0, T_{-1} = 0
    }
    for (std::int64_t n : {1, 15}) {
        const auto [left, right] = decomposition_sides(n);
        CHECK(left == right);
    }
    for (std::int64_t n = 0; n <= 30; ++n) {
        const auto [left, right] = decomposition_sides(n);
        CHECK(left == right);
    }
    CHECK_THROWS_AS(decomposition_sides(-1), std::domain_error);
}
