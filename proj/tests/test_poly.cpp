#include "triboq/poly.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

using namespace triboq;
using test::mul_oracle;
using test::poly_of;
using test::random_poly;

TEST_CASE("addition reaches canonical form")
{
    // (x^2 + 1) + (-1) cancels down to x^2
    const Poly a = poly_of({1, 0, 1});
    const Poly b = Poly(-1);
    CHECK(a + b == Poly::x_pow(2));

    // additive identity
    const Poly p = poly_of({4, 0, -2, 7});
    CHECK(Poly() + p == p);

    // hand sum: (x^4 + x) + (x^4 + 2x) = 2x^4 + 3x
    CHECK(poly_of({0, 1, 0, 0, 1}) + poly_of({0, 2, 0, 0, 1}) ==
          poly_of({0, 3, 0, 0, 2}));
}

TEST_CASE("multiplication basics")
{
    CHECK(Poly::x_pow(1) * Poly::x_pow(1) == Poly::x_pow(2));

    const Poly p = poly_of({3, -1, 2});
    CHECK(p * Poly() == Poly());
    CHECK(Poly() * p == Poly());

    // (x^2 + x)(x^2 - x) = x^4 - x^2, against the schoolbook oracle
    const Poly a = poly_of({0, 1, 1});
    const Poly b = poly_of({0, -1, 1});
    CHECK(a * b == poly_of({0, 0, -1, 0, 1}));
    CHECK(a * b == mul_oracle(a, b));
}

TEST_CASE("multiplication matches the schoolbook oracle on random inputs")
{
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const Poly a = random_poly(rng);
        const Poly b = random_poly(rng);
        CHECK(a * b == mul_oracle(a, b));
    }
}

TEST_CASE("exact evaluation")
{
    CHECK(poly_of({0, 1, 0, 0, 1}).eval_exact(Rat(1)) == Rat(2));
    CHECK(Poly().eval_exact(Rat(123, 7)) == Rat(0));
    // t_3-shaped value: x^6 + 3x^3 + 3 at 1
    CHECK(poly_of({3, 0, 0, 3, 0, 0, 1}).eval_exact(Rat(1)) == Rat(7));
    CHECK(poly_of({1, 2}).eval_exact(Rat(1, 2)) == Rat(2));
}

TEST_CASE("complex evaluation")
{
    using C = std::complex<double>;
    CHECK(Poly::x_pow(2).eval(C(0.0, 1.0)) == C(-1.0, 0.0));
    CHECK(poly_of({1, 1, 1}).eval(C(1.0, 0.0)) == C(3.0, 0.0));

    // Newton oracle for the positive root of x^3 - x^2 - x - 1
    double root = 2.0;
    for (int it = 0; it < 60; ++it) {
        const double f = ((root - 1.0) * root - 1.0) * root - 1.0;
        const double df = (3.0 * root - 2.0) * root - 1.0;
        root -= f / df;
    }
    CHECK(root == doctest::Approx(1.839286755214161).epsilon(1e-12));
    const Poly cubic = poly_of({-1, -1, -1, 1});
    CHECK(std::abs(cubic.eval(C(1.839286755214161, 0.0))) < 1e-9);
    CHECK(std::abs(cubic.eval(C(root, 0.0))) < 1e-12);
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 40; ++trial) {
        const Poly a = random_poly(rng);
        const Poly b = random_poly(rng);
        const Poly c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Poly());
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    std::mt19937 rng(13579);
    const Rat x0(3, 7);
    const std::complex<double> z(0.83, -0.41);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly a = random_poly(rng, 10, 40);
        const Poly b = random_poly(rng, 10, 40);
        CHECK((a * b).eval_exact(x0) == a.eval_exact(x0) * b.eval_exact(x0));
        const auto lhs = (a * b).eval(z);
        const auto rhs = a.eval(z) * b.eval(z);
        CHECK(std::abs(lhs - rhs) <=
              1e-9 * std::max(1.0, std::max(std::abs(lhs), std::abs(rhs))));
    }
}

TEST_CASE("canonical form is preserved")
{
    std::mt19937 rng(2468);
    const auto canonical = [](const Poly& p) {
        return p.coeffs().empty() || p.coeffs().back() != 0;
    };
    for (int trial = 0; trial < 40; ++trial) {
        const Poly a = random_poly(rng, 6, 5);
        const Poly b = random_poly(rng, 6, 5);
        CHECK(canonical(a + b));
        CHECK(canonical(a - b));
        CHECK(canonical(a * b));
        CHECK(canonical(-a));
    }
    CHECK(poly_of({1, 1}) - poly_of({0, 1}) == Poly(1));
}

TEST_CASE("degree bookkeeping")
{
    CHECK(Poly().degree() == Poly::kZeroDegree);
    CHECK(Poly(5).degree() == 0);
    CHECK(Poly::x_pow(7).degree() == 7);
    const Poly a = poly_of({1, 2, 3});
    const Poly b = poly_of({0, 0, 0, 4});
    CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK(Poly::from_coeffs({Int(0), Int(0)}) == Poly());
}

TEST_CASE("scalar multiplication")
{
    const Poly p = poly_of({1, -2, 3});
    CHECK(Int(2) * p == poly_of({2, -4, 6}));
    CHECK(p * Int(2) == Int(2) * p);
    CHECK(Int(0) * p == Poly());
}

TEST_CASE("to_string renders descending powers")
{
    CHECK(Poly().to_string() == "0");
    CHECK(poly_of({3, 0, 0, 3, 0, 0, 1}).to_string() == "x^6 + 3*x^3 + 3");
    CHECK(poly_of({0, -1}).to_string() == "-x");
    CHECK(poly_of({-7}).to_string() == "-7");
}

TEST_CASE("parse_rational accepts p/q, integers and exact decimals")
{
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-2") == Rat(-2));
    CHECK(parse_rational("1.5") == Rat(3, 2));
    CHECK(parse_rational("0.25") == Rat(1, 4));
    CHECK(parse_rational("-0.5") == Rat(-1, 2));
    CHECK(parse_rational(" 10/4 ") == Rat(5, 2));

    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1."), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
}

TEST_CASE("rat_to_string")
{
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
    CHECK(rat_to_string(Rat(0)) == "0");
}
