#pragma once

#include "triboq/poly.hpp"
#include "triboq/quaternion.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace triboq::test {

inline Poly poly_of(std::initializer_list<long long> ascending)
{
    std::vector<Int> coeffs;
    for (long long c : ascending) {
        coeffs.emplace_back(c);
    }
    return Poly::from_coeffs(std::move(coeffs));
}

/// Random polynomial with degree <= max_degree and coefficients in
/// [-coeff_bound, coeff_bound].
inline Poly random_poly(std::mt19937& rng, int max_degree = 16,
                        int coeff_bound = 100)
{
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<int> coeff_dist(-coeff_bound, coeff_bound);
    const int terms = deg_dist(rng) + 1;
    std::vector<Int> coeffs;
    coeffs.reserve(static_cast<std::size_t>(terms));
    for (int k = 0; k < terms; ++k) {
        coeffs.emplace_back(coeff_dist(rng));
    }
    return Poly::from_coeffs(std::move(coeffs));
}

inline QPoly random_qpoly(std::mt19937& rng, int max_degree = 8,
                          int coeff_bound = 50)
{
    return {random_poly(rng, max_degree, coeff_bound),
            random_poly(rng, max_degree, coeff_bound),
            random_poly(rng, max_degree, coeff_bound),
            random_poly(rng, max_degree, coeff_bound)};
}

/// Independent schoolbook multiplication: distributes one monomial of `a`
/// at a time using only addition and monomial construction.
inline Poly mul_oracle(const Poly& a, const Poly& b)
{
    Poly acc;
    for (std::size_t d = 0; d < a.coeffs().size(); ++d) {
        if (a.coeff(d) == 0) {
            continue;
        }
        // a_d x^d * b, term by term
        for (std::size_t e = 0; e < b.coeffs().size(); ++e) {
            acc += Poly::x_pow(d + e, a.coeff(d) * b.coeff(e));
        }
    }
    return acc;
}

/// 64-bit three-term integer recurrence oracle, seeds (s0, s1, s2), all
/// coefficients 1 (the x = 1 specialization of the polynomial recurrence).
inline std::vector<std::int64_t> int_recurrence_oracle(std::int64_t s0,
                                                       std::int64_t s1,
                                                       std::int64_t s2,
                                                       std::size_t count)
{
    std::vector<std::int64_t> out{s0, s1, s2};
    while (out.size() < count) {
        const std::size_t n = out.size();
        out.push_back(out[n - 1] + out[n - 2] + out[n - 3]);
    }
    out.resize(count);
    return out;
}

} // namespace triboq::test
