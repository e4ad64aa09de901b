#include "triboq/identities.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace triboq {

namespace {

const Poly& x1()
{
    static const Poly p = Poly::x_pow(1);
    return p;
}

const Poly& x2()
{
    static const Poly p = Poly::x_pow(2);
    return p;
}

QuatSeqFn canonical(QuatKind kind)
{
    return kind == QuatKind::Trib ? QuatSeqFn(trib_quat)
                                  : QuatSeqFn(trib_lucas_quat);
}

VerifyReport fail_at(VerifyReport report, VerifyFailure failure)
{
    report.passed = false;
    report.first_failure = std::move(failure);
    return report;
}

// Pascal triangle rows 0..n_max with exact integers.
std::vector<std::vector<Int>> binomial_rows(std::int64_t n_max)
{
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        std::vector<Int> row(static_cast<std::size_t>(n) + 1, Int(1));
        for (std::size_t k = 1; k < row.size() - 1; ++k) {
            row[k] = rows.back()[k - 1] + rows.back()[k];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double quat_abs_max(const NumQuat& q)
{
    return std::max({std::abs(q.r), std::abs(q.i), std::abs(q.j),
                     std::abs(q.k)});
}

NumQuat eval_exact_to_double(const QPoly& q, const Rat& x0)
{
    const RatQuat exact = eval_exact(q, x0);
    const auto cv = [](const Rat& v) {
        return std::complex<double>(v.convert_to<double>(), 0.0);
    };
    return {cv(exact.r), cv(exact.i), cv(exact.j), cv(exact.k)};
}

} // namespace

VerifyReport verify_recurrence_with(std::string id, const QuatSeqFn& seq,
                                    const Poly& c2, const Poly& c1,
                                    const Poly& c0, std::int64_t n_max)
{
    VerifyReport report{std::move(id), 0, n_max, true, std::nullopt};
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const QPoly expected =
            c2 * seq(n + 2) + c1 * seq(n + 1) + c0 * seq(n);
        const QPoly actual = seq(n + 3);
        if (!(actual == expected)) {
            return fail_at(std::move(report),
                           {n, actual - expected, 0.0, ""});
        }
    }
    return report;
}

VerifyReport verify_series_with(std::string id,
                                const TruncSeries<QPoly>& series,
                                const QuatSeqFn& seq, std::int64_t shift)
{
    VerifyReport report{std::move(id), 0, series.order(), true, std::nullopt};
    for (std::int64_t m = 0; m <= series.order(); ++m) {
        const QPoly expected = seq(m + shift);
        if (!(series.coeff(m) == expected)) {
            return fail_at(std::move(report),
                           {m, series.coeff(m) - expected, 0.0, ""});
        }
    }
    return report;
}

VerifyReport verify_recurrence(QuatKind kind, std::int64_t n_max)
{
    const char* id = kind == QuatKind::Trib ? "recurrence-trib"
                                            : "recurrence-trib-lucas";
    return verify_recurrence_with(id, canonical(kind), x2(), x1(), Poly(1),
                                  n_max);
}

VerifyReport verify_gf(SeqKind kind, std::int64_t order)
{
    switch (kind) {
    case SeqKind::QuatTrib:
        return verify_series_with("gf-quat-trib", gf_trib_quat(order),
                                  canonical(QuatKind::Trib));
    case SeqKind::QuatTribLucas:
        return verify_series_with("gf-quat-trib-lucas",
                                  gf_trib_lucas_quat(order),
                                  canonical(QuatKind::TribLucas));
    case SeqKind::Trib:
    case SeqKind::TribLucas:
        break;
    }

    const bool lucas = kind == SeqKind::TribLucas;
    const auto series = lucas ? gf_trib_lucas(order) : gf_trib(order);
    VerifyReport report{lucas ? "gf-trib-lucas" : "gf-trib", 0, order, true,
                        std::nullopt};
    for (std::int64_t m = 0; m <= order; ++m) {
        const Poly& expected = lucas ? trib_lucas_poly(m) : trib_poly(m);
        if (!(series.coeff(m) == expected)) {
            return fail_at(std::move(report),
                           {m, QPoly(series.coeff(m) - expected), 0.0, ""});
        }
    }
    return report;
}

VerifyReport verify_gf_shifted(QuatKind kind, std::int64_t m_lo,
                               std::int64_t m_hi, std::int64_t n_max)
{
    const char* id = kind == QuatKind::Trib ? "gf-shifted-trib"
                                            : "gf-shifted-trib-lucas";
    VerifyReport report{id, m_lo, m_hi, true, std::nullopt};
    const auto seq = canonical(kind);
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
        const auto series = gf_shifted(kind, m, n_max);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            const QPoly expected = seq(n + m);
            if (!(series.coeff(n) == expected)) {
                std::ostringstream note;
                note << "m=" << m;
                return fail_at(std::move(report),
                               {n, series.coeff(n) - expected, 0.0,
                                note.str()});
            }
        }
    }
    return report;
}

VerifyReport verify_binomial_sum(QuatKind kind, std::int64_t n_max)
{
    const char* id = kind == QuatKind::Trib ? "binomial-trib"
                                            : "binomial-trib-lucas";
    VerifyReport report{id, 0, n_max, true, std::nullopt};
    const auto seq = canonical(kind);
    const auto binom = binomial_rows(n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        QPoly sum;
        for (std::int64_t r = 0; r <= n; ++r) {
            for (std::int64_t s = 0; s <= r; ++s) {
                const Int coeff = binom[static_cast<std::size_t>(n)]
                                       [static_cast<std::size_t>(r)] *
                                  binom[static_cast<std::size_t>(r)]
                                       [static_cast<std::size_t>(s)];
                sum += Poly::x_pow(static_cast<std::size_t>(r + s), coeff) *
                       seq(r + s);
            }
        }
        const QPoly expected = seq(3 * n);
        if (!(sum == expected)) {
            return fail_at(std::move(report), {n, sum - expected, 0.0, ""});
        }
    }
    return report;
}

QPoly summation_correction()
{
    return {Poly(1), Poly(1),
            Poly::from_coeffs({Int(1), Int(1), Int(1)}),
            Poly::from_coeffs({Int(1), Int(1), Int(1), Int(1), Int(1)})};
}

Poly summation_divisor()
{
    return Poly::from_coeffs({Int(0), Int(1), Int(1)});
}

int resolve_summation_sign(std::int64_t probe_n, const Rat& probe_x)
{
    if (probe_n < 0) {
        throw std::out_of_range("resolve_summation_sign needs probe_n >= 0");
    }
    if (probe_x == 0 || probe_x == -1) {
        throw std::domain_error(
            "probe_x must avoid the zeros of x^2 + x (0 and -1)");
    }

    RatQuat sum{};
    for (std::int64_t l = 0; l <= probe_n; ++l) {
        sum += eval_exact(trib_quat(l), probe_x);
    }

    const Rat delta = probe_x * probe_x + probe_x;
    const Rat one_minus_sq = Rat(1) - probe_x * probe_x;
    const RatQuat base = eval_exact(trib_quat(probe_n + 2), probe_x) +
                         one_minus_sq * eval_exact(trib_quat(probe_n + 1),
                                                   probe_x) +
                         eval_exact(trib_quat(probe_n), probe_x);
    const RatQuat omega = eval_exact(summation_correction(), probe_x);

    const Rat inv = Rat(1) / delta;
    const RatQuat minus_variant = inv * (base - omega);
    const RatQuat plus_variant = inv * (base + omega);

    const bool matches_minus = sum == minus_variant;
    const bool matches_plus = sum == plus_variant;
    if (matches_minus == matches_plus) {
        throw std::runtime_error(
            "summation sign probe inconsistent: both variants " +
            std::string(matches_minus ? "matched" : "failed"));
    }
    return matches_minus ? -1 : +1;
}

int resolve_summation_sign_symbolic()
{
    // n = 0 instance of the delta-multiplied identity: the residue
    // delta * Q_0 - (Q_2 + (1-x^2) Q_1 + Q_0) must be one of the two sign
    // variants of the correction term.
    const Poly one_minus_sq = Poly(1) - x2();
    const QPoly residue = summation_divisor() * trib_quat(0) -
                          (trib_quat(2) + one_minus_sq * trib_quat(1) +
                           trib_quat(0));
    const QPoly omega = summation_correction();
    const bool matches_minus = residue == -omega;
    const bool matches_plus = residue == omega;
    if (matches_minus == matches_plus) {
        throw std::runtime_error(
            "symbolic summation sign resolution inconsistent");
    }
    return matches_minus ? -1 : +1;
}

VerifyReport verify_summation(std::int64_t n_max)
{
    VerifyReport report{"summation", 0, n_max, true, std::nullopt};
    const int sign = resolve_summation_sign_symbolic();
    const Poly delta = summation_divisor();
    const Poly one_minus_sq = Poly(1) - x2();
    const QPoly omega = summation_correction();

    QPoly sum;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        sum += trib_quat(n);
        QPoly rhs = trib_quat(n + 2) + one_minus_sq * trib_quat(n + 1) +
                    trib_quat(n);
        rhs = sign < 0 ? rhs - omega : rhs + omega;
        const QPoly lhs = delta * sum;
        if (!(lhs == rhs)) {
            return fail_at(std::move(report), {n, lhs - rhs, 0.0, ""});
        }
    }
    return report;
}

VerifyReport verify_roots(const std::vector<double>& x_grid, double tol)
{
    VerifyReport report{"roots", 0,
                        static_cast<std::int64_t>(x_grid.size()) - 1, true,
                        std::nullopt};
    for (std::size_t g = 0; g < x_grid.size(); ++g) {
        std::ostringstream note;
        note << "x0=" << x_grid[g];
        try {
            const CubicRoots roots = solve_cubic(x_grid[g], tol);
            const auto sum = roots.alpha + roots.omega1 + roots.omega2;
            const auto prod = roots.alpha * roots.omega1 * roots.omega2;
            const double residual =
                std::max(std::abs(sum - std::complex<double>(
                                            x_grid[g] * x_grid[g], 0.0)),
                         std::abs(prod - 1.0));
            if (!(residual < tol)) {
                return fail_at(std::move(report),
                               {static_cast<std::int64_t>(g), QPoly{},
                                residual, note.str()});
            }
        } catch (const ConvergenceError& err) {
            note << ": " << err.what();
            return fail_at(std::move(report),
                           {static_cast<std::int64_t>(g), QPoly{}, 0.0,
                            note.str()});
        }
    }
    return report;
}

VerifyReport verify_binet(QuatKind kind, std::int64_t n_max,
                          const std::vector<double>& x_grid,
                          const BinetTolerance& tol)
{
    const char* id =
        kind == QuatKind::Trib ? "binet-trib" : "binet-trib-lucas";
    VerifyReport report{id, 0, n_max, true, std::nullopt};
    const auto seq = canonical(kind);
    for (double x0 : x_grid) {
        const CubicRoots roots = solve_cubic(x0);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            const NumQuat expected = eval_exact_to_double(seq(n), Rat(x0));
            const NumQuat actual = binet_quat(kind, n, roots);
            const NumQuat diff = actual - expected;
            const double scale = quat_abs_max(expected);
            const double rel = scale > tol.large_cutoff ? tol.rel_large
                                                        : tol.rel;
            const double bound = tol.abs + rel * scale;
            const double residual = quat_abs_max(diff);
            if (!(residual <= bound)) {
                std::ostringstream note;
                note << "x0=" << x0;
                return fail_at(std::move(report),
                               {n, QPoly{}, residual, note.str()});
            }
        }
    }
    return report;
}

VerifyReport verify_egf(QuatKind kind, const std::vector<double>& x_grid,
                        const std::vector<double>& y_grid, std::int64_t order,
                        double rel_tol)
{
    const char* id = kind == QuatKind::Trib ? "egf-trib" : "egf-trib-lucas";
    VerifyReport report{id, 0, order, true, std::nullopt};
    std::int64_t point = 0;
    for (double x0 : x_grid) {
        const CubicRoots roots = solve_cubic(x0);
        for (double y0 : y_grid) {
            const auto [truncated, closed] = egf_eval(kind, roots, y0, order);
            const double scale =
                std::max(quat_abs_max(truncated), quat_abs_max(closed));
            const double residual = quat_abs_max(truncated - closed);
            if (!(residual <= rel_tol * std::max(1.0, scale))) {
                std::ostringstream note;
                note << "x0=" << x0 << " y0=" << y0;
                return fail_at(std::move(report),
                               {point, QPoly{}, residual, note.str()});
            }
            ++point;
        }
    }
    return report;
}

VerifyReport verify_matrix_power(std::int64_t n_max)
{
    VerifyReport report{"matrix-power", 1, n_max, true, std::nullopt};
    const Poly determinant = det(s_matrix());
    if (!(determinant == Poly(1))) {
        return fail_at(std::move(report),
                       {0, QPoly(determinant - Poly(1)), 0.0, "det"});
    }
    const Mat3<Poly> s = s_matrix();
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const Mat3<Poly> closed = s_power_closed(n);
        const Mat3<Poly> powered = mat_pow(s, n);
        if (!(closed == powered)) {
            for (int row = 0; row < 3; ++row) {
                for (int col = 0; col < 3; ++col) {
                    if (!(closed.at(row, col) == powered.at(row, col))) {
                        std::ostringstream note;
                        note << "entry (" << row << "," << col << ")";
                        return fail_at(
                            std::move(report),
                            {n,
                             QPoly(closed.at(row, col) - powered.at(row, col)),
                             0.0, note.str()});
                    }
                }
            }
        }
    }
    return report;
}

VerifyReport verify_qs_product(std::int64_t n_max)
{
    VerifyReport report{"matrix-product", 0, n_max, true, std::nullopt};
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto [left, right] = qs_product_sides(n);
        if (!(left == right)) {
            for (int row = 0; row < 3; ++row) {
                for (int col = 0; col < 3; ++col) {
                    if (!(left.at(row, col) == right.at(row, col))) {
                        std::ostringstream note;
                        note << "entry (" << row << "," << col << ")";
                        return fail_at(std::move(report),
                                       {n,
                                        left.at(row, col) - right.at(row, col),
                                        0.0, note.str()});
                    }
                }
            }
        }
    }
    return report;
}

VerifyReport verify_decomposition(std::int64_t n_max)
{
    VerifyReport report{"matrix-decomposition", 0, n_max, true, std::nullopt};
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto [left, right] = decomposition_sides(n);
        if (!(left == right)) {
            return fail_at(std::move(report), {n, left - right, 0.0, ""});
        }
    }
    return report;
}

VerifyReport verify_integer_specialization(std::int64_t n_max)
{
    VerifyReport report{"integer-specialization", 0, n_max, true,
                        std::nullopt};
    if (n_max > 60) {
        throw std::invalid_argument(
            "integer specialization oracle uses machine integers; n_max <= 60");
    }
    // Independent oracle: plain 64-bit recurrences, no polynomial arithmetic.
    std::int64_t ta = 0, tb = 1, tc = 1;  // T_0, T_1, T_2 at x = 1
    std::int64_t la = 3, lb = 1, lc = 3;  // t_0, t_1, t_2 at x = 1
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const Rat t_exact = trib_poly(n).eval_exact(Rat(1));
        const Rat l_exact = trib_lucas_poly(n).eval_exact(Rat(1));
        if (t_exact != Rat(ta) || l_exact != Rat(la)) {
            std::ostringstream note;
            note << "expected T=" << ta << " t=" << la << ", got T="
                 << rat_to_string(t_exact) << " t=" << rat_to_string(l_exact);
            return fail_at(std::move(report), {n, QPoly{}, 0.0, note.str()});
        }
        const std::int64_t tn = ta + tb + tc;
        ta = tb;
        tb = tc;
        tc = tn;
        const std::int64_t ln = la + lb + lc;
        la = lb;
        lb = lc;
        lc = ln;
    }
    return report;
}

std::vector<VerifyReport> verify_all(std::int64_t n_max,
                                     const std::vector<double>& x_grid,
                                     const SequenceOverrides& overrides)
{
    const QuatSeqFn trib_seq =
        overrides.trib ? overrides.trib : canonical(QuatKind::Trib);
    const QuatSeqFn lucas_seq = overrides.trib_lucas
                                    ? overrides.trib_lucas
                                    : canonical(QuatKind::TribLucas);

    std::vector<VerifyReport> reports;
    reports.push_back(verify_recurrence_with("recurrence-trib", trib_seq,
                                             x2(), x1(), Poly(1), n_max));
    reports.push_back(verify_recurrence_with("recurrence-trib-lucas",
                                             lucas_seq, x2(), x1(), Poly(1),
                                             n_max));
    reports.push_back(verify_gf(SeqKind::Trib, n_max));
    reports.push_back(verify_gf(SeqKind::TribLucas, n_max));
    reports.push_back(verify_series_with("gf-quat-trib", gf_trib_quat(n_max),
                                         trib_seq));
    reports.push_back(verify_series_with("gf-quat-trib-lucas",
                                         gf_trib_lucas_quat(n_max),
                                         lucas_seq));
    reports.push_back(
        verify_gf_shifted(QuatKind::Trib, 2, 8, std::min<std::int64_t>(n_max, 20)));
    reports.push_back(verify_gf_shifted(QuatKind::TribLucas, 2, 8,
                                        std::min<std::int64_t>(n_max, 20)));
    reports.push_back(verify_binomial_sum(QuatKind::Trib,
                                          std::min<std::int64_t>(n_max, 12)));
    reports.push_back(verify_binomial_sum(QuatKind::TribLucas,
                                          std::min<std::int64_t>(n_max, 12)));
    reports.push_back(verify_summation(n_max));
    reports.push_back(verify_matrix_power(std::max<std::int64_t>(n_max, 1)));
    reports.push_back(verify_qs_product(n_max));
    reports.push_back(verify_decomposition(n_max));
    reports.push_back(
        verify_integer_specialization(std::min<std::int64_t>(n_max, 60)));

    if (!x_grid.empty()) {
        reports.push_back(verify_roots(x_grid));
        reports.push_back(verify_binet(QuatKind::Trib, n_max, x_grid));
        reports.push_back(verify_binet(QuatKind::TribLucas, n_max, x_grid));
        const std::vector<double> y_grid{0.1, 0.3};
        reports.push_back(verify_egf(QuatKind::Trib, x_grid, y_grid));
        reports.push_back(verify_egf(QuatKind::TribLucas, x_grid, y_grid));
    }
    return reports;
}

} // namespace triboq
