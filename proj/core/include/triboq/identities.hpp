#pragma once

#include "triboq/binet.hpp"
#include "triboq/matrixrep.hpp"
#include "triboq/poly.hpp"
#include "triboq/quaternion.hpp"
#include "triboq/sequences.hpp"
#include "triboq/series.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace triboq {

/// First failing index of a verified identity. `difference` carries the
/// symbolic mismatch for exact checks; numeric checks set `residual` and
/// leave the difference zero. `note` pins down grid point / component.
struct VerifyFailure {
    std::int64_t index = 0;
    QPoly difference;
    double residual = 0.0;
    std::string note;
};

struct VerifyReport {
    std::string identity_id;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool passed = true;
    std::optional<VerifyFailure> first_failure;
};

using QuatSeqFn = std::function<QPoly(std::int64_t)>;

/// Checks seq(n+3) == c2 seq(n+2) + c1 seq(n+1) + c0 seq(n) for
/// 0 <= n <= n_max, exactly. The canonical verifiers wrap this; tests also
/// drive it with mutated coefficients or sequences as negative controls.
VerifyReport verify_recurrence_with(std::string id, const QuatSeqFn& seq,
                                    const Poly& c2, const Poly& c1,
                                    const Poly& c0, std::int64_t n_max);

/// Checks series.coeff(n) == seq(n + shift) for every stored coefficient.
VerifyReport verify_series_with(std::string id,
                                const TruncSeries<QPoly>& series,
                                const QuatSeqFn& seq, std::int64_t shift = 0);

/// Quaternion recurrence, exact, 0 <= n <= n_max.
VerifyReport verify_recurrence(QuatKind kind, std::int64_t n_max);

/// Generating-function expansion against the recurrence-generated terms,
/// exact through the given order (all four closed forms).
VerifyReport verify_gf(SeqKind kind, std::int64_t order);

/// Shifted generating functions for m in [m_lo, m_hi] (m_lo >= 2), each
/// expanded to order n_max and compared against sequence terms n + m.
VerifyReport verify_gf_shifted(QuatKind kind, std::int64_t m_lo,
                               std::int64_t m_hi, std::int64_t n_max);

/// Binomial double sum
///   sum_{r<=n} sum_{s<=r} C(n,r) C(r,s) x^{r+s} Q_{r+s}(x) == Q_{3n}(x),
/// exact big-integer binomials, 0 <= n <= n_max.
VerifyReport verify_binomial_sum(QuatKind kind, std::int64_t n_max);

/// The constant correction quaternion of the partial-sum formula:
///   1 + i + (x^2+x+1) j + (x^4+x^3+x^2+x+1) k.
QPoly summation_correction();

/// delta(x) = x^2 + x, the partial-sum divisor.
Poly summation_divisor();

/// Resolves the sign in front of the correction term by an exact rational
/// probe at x = probe_x (which must avoid the zeros of delta, i.e. 0 and -1):
/// compares sum_{l<=probe_n} Q_{T,l}(probe_x) against both sign variants and
/// returns the matching one (+1 or -1). Throws std::runtime_error when both
/// or neither match.
int resolve_summation_sign(std::int64_t probe_n, const Rat& probe_x);

/// Same resolution done symbolically on the delta-multiplied identity at
/// n = 0 (a polynomial identity in x, so it settles the sign for every
/// admissible x at once).
int resolve_summation_sign_symbolic();

/// Partial-sum identity in delta-multiplied form,
///   delta(x) sum_{l<=n} Q_{T,l}(x) == Q_{T,n+2} + (1-x^2) Q_{T,n+1}
///                                     + Q_{T,n} + sign * correction,
/// with the symbolically resolved sign, exact for 0 <= n <= n_max.
VerifyReport verify_summation(std::int64_t n_max);

/// Root invariants (each root solves the cubic; sum = x0^2; product = 1)
/// on a grid of parameters, to absolute tolerance tol.
VerifyReport verify_roots(const std::vector<double>& x_grid,
                          double tol = 1e-12);

struct BinetTolerance {
    double abs = 1e-10;
    double rel = 1e-8;
    /// Looser relative bound applied above `large_cutoff`, where powers of
    /// the dominant root exhaust double precision.
    double rel_large = 1e-6;
    double large_cutoff = 1e10;
};

/// Quaternion Binet values against exact sequence evaluation on a grid,
/// 0 <= n <= n_max.
VerifyReport verify_binet(QuatKind kind, std::int64_t n_max,
                          const std::vector<double>& x_grid,
                          const BinetTolerance& tol = {});

/// Exponential generating function: closed form against the truncated
/// exponential sum on a grid of (x0, y0), relative tolerance rel_tol.
VerifyReport verify_egf(QuatKind kind, const std::vector<double>& x_grid,
                        const std::vector<double>& y_grid,
                        std::int64_t order = 40, double rel_tol = 1e-8);

/// Companion-power closed form against binary exponentiation for
/// 1 <= n <= n_max, plus det S = 1.
VerifyReport verify_matrix_power(std::int64_t n_max);

/// Product identity for the quaternion matrix times companion powers,
/// exact for 0 <= n <= n_max.
VerifyReport verify_qs_product(std::int64_t n_max);

/// Scalar-coefficient decomposition of Q_{T,n+2}, exact for 0 <= n <= n_max.
VerifyReport verify_decomposition(std::int64_t n_max);

/// x = 1 specialization against an independent integer-recurrence oracle
/// (plain machine integers, no polynomial arithmetic); n_max <= 60.
VerifyReport verify_integer_specialization(std::int64_t n_max);

/// Optional replacement sequences, used to demonstrate that the verifiers
/// catch mutated inputs. Empty members fall back to the canonical
/// generators.
struct SequenceOverrides {
    QuatSeqFn trib;
    QuatSeqFn trib_lucas;
};

/// Runs every verifier: recurrences and generating functions (exact),
/// shifted series, binomial sums, the partial-sum identity, matrix
/// identities, plus roots, Binet and EGF checks when x_grid is non-empty.
/// Reports are independent; order is stable.
std::vector<VerifyReport> verify_all(std::int64_t n_max,
                                     const std::vector<double>& x_grid,
                                     const SequenceOverrides& overrides = {});

} // namespace triboq
