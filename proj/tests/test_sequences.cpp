#include "triboq/sequences.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

using namespace triboq;
using test::int_recurrence_oracle;
using test::poly_of;

TEST_CASE("Tribonacci polynomial initial terms and low indices")
{
    CHECK(trib_poly(0) == Poly());
    CHECK(trib_poly(1) == Poly(1));
    CHECK(trib_poly(2) == Poly::x_pow(2));
    CHECK(trib_poly(3) == poly_of({0, 1, 0, 0, 1}));          // x^4 + x
    CHECK(trib_poly(4) == poly_of({1, 0, 0, 2, 0, 0, 1}));    // x^6 + 2x^3 + 1
    // three applications of the recurrence; value 7 at x = 1
    CHECK(trib_poly(5) == poly_of({0, 0, 3, 0, 0, 3, 0, 0, 1}));
    CHECK(trib_poly(5).eval_exact(Rat(1)) == Rat(7));
}

TEST_CASE("backward extension")
{
    CHECK(trib_poly(-1) == Poly());
    CHECK(trib_poly(-2) == Poly(1));
    CHECK(trib_poly(-3) == poly_of({0, -1}));
    CHECK_THROWS_AS(trib_poly(-4), std::out_of_range);

    // running the recurrence forward from the backward terms reproduces
    // the seeds
    const Poly x2 = Poly::x_pow(2);
    const Poly x1 = Poly::x_pow(1);
    CHECK(x2 * trib_poly(-1) + x1 * trib_poly(-2) + trib_poly(-3) ==
          trib_poly(0));
    CHECK(x2 * trib_poly(0) + x1 * trib_poly(-1) + trib_poly(-2) ==
          trib_poly(1));
    CHECK(x2 * trib_poly(1) + x1 * trib_poly(0) + trib_poly(-1) ==
          trib_poly(2));
}

TEST_CASE("Tribonacci-Lucas polynomial initial terms")
{
    CHECK(trib_lucas_poly(0) == Poly(3));
    CHECK(trib_lucas_poly(1) == Poly::x_pow(2));
    CHECK(trib_lucas_poly(2) == poly_of({0, 2, 0, 0, 1}));    // x^4 + 2x
    CHECK(trib_lucas_poly(3) == poly_of({3, 0, 0, 3, 0, 0, 1}));
    CHECK(trib_lucas_poly(4) == poly_of({0, 0, 6, 0, 0, 4, 0, 0, 1}));
    CHECK_THROWS_AS(trib_lucas_poly(-1), std::out_of_range);
}

TEST_CASE("quaternion terms")
{
    CHECK(trib_quat(0) ==
          QPoly{Poly(), Poly(1), Poly::x_pow(2), poly_of({0, 1, 0, 0, 1})});
    CHECK(trib_quat(1) == QPoly{Poly(1), Poly::x_pow(2), poly_of({0, 1, 0, 0, 1}),
                                poly_of({1, 0, 0, 2, 0, 0, 1})});
    CHECK_THROWS_AS(trib_quat(-1), std::out_of_range);

    CHECK(trib_lucas_quat(0) ==
          QPoly{Poly(3), Poly::x_pow(2), poly_of({0, 2, 0, 0, 1}),
                poly_of({3, 0, 0, 3, 0, 0, 1})});
    CHECK(trib_lucas_quat(1) ==
          QPoly{Poly::x_pow(2), poly_of({0, 2, 0, 0, 1}),
                poly_of({3, 0, 0, 3, 0, 0, 1}),
                poly_of({0, 0, 6, 0, 0, 4, 0, 0, 1})});
    CHECK_THROWS_AS(trib_lucas_quat(-2), std::out_of_range);
}

TEST_CASE("quaternion windows evaluated at x = 1")
{
    const RatQuat qt2 = eval_exact(trib_quat(2), Rat(1));
    CHECK(qt2 == RatQuat{Rat(1), Rat(2), Rat(4), Rat(7)});
    const RatQuat ql0 = eval_exact(trib_lucas_quat(0), Rat(1));
    CHECK(ql0 == RatQuat{Rat(3), Rat(1), Rat(3), Rat(7)});
}

TEST_CASE("quaternion sequences satisfy the recurrence exactly, n <= 50")
{
    const Poly x2 = Poly::x_pow(2);
    const Poly x1 = Poly::x_pow(1);
    for (std::int64_t n = 0; n <= 50; ++n) {
        CHECK(trib_quat(n + 3) ==
              x2 * trib_quat(n + 2) + x1 * trib_quat(n + 1) + trib_quat(n));
        CHECK(trib_lucas_quat(n + 3) == x2 * trib_lucas_quat(n + 2) +
                                            x1 * trib_lucas_quat(n + 1) +
                                            trib_lucas_quat(n));
    }
}

TEST_CASE("window sums behave like quaternion addition")
{
    // hand-expanded sum of the first two quaternion terms
    const QPoly expected{Poly(1), poly_of({1, 0, 1}),
                         poly_of({0, 1, 1, 0, 1}),
                         poly_of({1, 1, 0, 2, 1, 0, 1})};
    CHECK(trib_quat(0) + trib_quat(1) == expected);
}

TEST_CASE("degree law")
{
    for (std::int64_t n = 1; n <= 30; ++n) {
        CHECK(trib_poly(n).degree() == 2 * (n - 1));
        CHECK(trib_lucas_poly(n).degree() == 2 * n);
    }
    CHECK(trib_poly(0).degree() == Poly::kZeroDegree);
}

TEST_CASE("x = 1 specialization matches the integer recurrence oracle")
{
    const auto trib_ints = int_recurrence_oracle(0, 1, 1, 31);
    const auto lucas_ints = int_recurrence_oracle(3, 1, 3, 31);
    CHECK(trib_ints[10] == 149);
    CHECK(lucas_ints[7] == 71);
    for (std::int64_t n = 0; n <= 30; ++n) {
        CHECK(trib_poly(n).eval_exact(Rat(1)) ==
              Rat(trib_ints[static_cast<std::size_t>(n)]));
        CHECK(trib_lucas_poly(n).eval_exact(Rat(1)) ==
              Rat(lucas_ints[static_cast<std::size_t>(n)]));
    }
}

TEST_CASE("seq_range slices")
{
    const auto t_slice = std::get<std::vector<Poly>>(
        seq_range(SeqKind::Trib, 0, 2));
    REQUIRE(t_slice.size() == 3);
    CHECK(t_slice[0] == Poly());
    CHECK(t_slice[1] == Poly(1));
    CHECK(t_slice[2] == Poly::x_pow(2));

    const auto qt_single = std::get<std::vector<QPoly>>(
        seq_range(SeqKind::QuatTrib, 3, 3));
    REQUIRE(qt_single.size() == 1);
    CHECK(qt_single[0] == trib_quat(3));

    const auto lucas_slice = std::get<std::vector<Poly>>(
        seq_range(SeqKind::TribLucas, 0, 3));
    std::vector<Rat> at_one;
    for (const Poly& p : lucas_slice) {
        at_one.push_back(p.eval_exact(Rat(1)));
    }
    CHECK(at_one == std::vector<Rat>{Rat(3), Rat(1), Rat(3), Rat(7)});

    CHECK_THROWS_AS(seq_range(SeqKind::Trib, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(seq_range(SeqKind::QuatTribLucas, -1, 3),
                    std::out_of_range);
    CHECK_THROWS_AS(seq_range(SeqKind::Trib, -4, 0), std::out_of_range);
}

TEST_CASE("custom seeds drive a mutated sequence")
{
    const TriSequence mutated(Poly(2), Poly::x_pow(2),
                              poly_of({0, 2, 0, 0, 1}));
    CHECK(mutated.at(0) == Poly(2));
    // the recurrence still holds for any seeds
    const Poly x2 = Poly::x_pow(2);
    const Poly x1 = Poly::x_pow(1);
    for (std::int64_t n = 0; n <= 10; ++n) {
        CHECK(mutated.at(n + 3) ==
              x2 * mutated.at(n + 2) + x1 * mutated.at(n + 1) + mutated.at(n));
    }
    CHECK(mutated.quat_at(0).r == Poly(2));
}

TEST_CASE("concurrent readers after warm-up")
{
    const TriSequence seq(Poly(0), Poly(1), Poly::x_pow(2));
    std::vector<std::thread> workers;
    std::vector<Poly> results(8);
    for (int w = 0; w < 8; ++w) {
        workers.emplace_back([&, w] { results[static_cast<std::size_t>(w)] = seq.at(40); });
    }
    for (auto& t : workers) {
        t.join();
    }
    for (const Poly& p : results) {
        CHECK(p == trib_poly(40));
    }
}
