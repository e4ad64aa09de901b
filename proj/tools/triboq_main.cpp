// triboq: generate Tribonacci / Tribonacci-Lucas quaternion polynomials,
// expand their generating functions, tabulate Binet values, compare matrix
// forms, and verify the whole identity catalogue.
//
// Exit codes: 0 success, 1 identity verification failure, 2 usage or
// domain error.

#include "triboq/binet.hpp"
#include "triboq/identities.hpp"
#include "triboq/json_io.hpp"
#include "triboq/matrixrep.hpp"
#include "triboq/poly.hpp"
#include "triboq/quaternion.hpp"
#include "triboq/sequences.hpp"
#include "triboq/series.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using namespace triboq;

constexpr const char* kSchemaVersion = "1.0";
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::string format = "json";
    double tol = 1e-8;
};

void emit(const GlobalOpts& opts, const std::string& command,
          Json payload, const std::string& text)
{
    if (opts.format == "json") {
        Json doc{{"schema_version", kSchemaVersion},
                 {"command", command},
                 {"payload", std::move(payload)}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << text;
    }
}

int emit_error(const GlobalOpts& opts, const std::string& command,
               const std::string& type, const std::string& message)
{
    if (opts.format == "json") {
        Json doc{{"schema_version", kSchemaVersion},
                 {"command", command},
                 {"error", Json{{"type", type}, {"message", message}}}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cerr << "error (" << type << "): " << message << "\n";
    }
    return kExitUsage;
}

SeqKind parse_kind(const std::string& token)
{
    if (token == "T") return SeqKind::Trib;
    if (token == "t") return SeqKind::TribLucas;
    if (token == "QT") return SeqKind::QuatTrib;
    if (token == "Qt") return SeqKind::QuatTribLucas;
    throw std::invalid_argument("unknown sequence kind '" + token +
                                "' (expected T, t, QT or Qt)");
}

std::string kind_label(SeqKind kind)
{
    switch (kind) {
    case SeqKind::Trib: return "T";
    case SeqKind::TribLucas: return "t";
    case SeqKind::QuatTrib: return "QT";
    case SeqKind::QuatTribLucas: return "Qt";
    }
    return "?";
}

std::vector<double> parse_grid(const std::string& csv)
{
    std::vector<double> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        const double value = std::stod(item, &used);
        if (used != item.size()) {
            throw std::invalid_argument("bad grid entry '" + item + "'");
        }
        grid.push_back(value);
    }
    return grid;
}

double quat_abs_max(const NumQuat& q)
{
    return std::max({std::abs(q.r), std::abs(q.i), std::abs(q.j),
                     std::abs(q.k)});
}

// ---------------------------------------------------------------- gen ----

struct GenArgs {
    std::string kind;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::string at;
};

int run_gen(const GlobalOpts& opts, const GenArgs& args)
{
    const SeqKind kind = parse_kind(args.kind);
    const SeqSlice slice = seq_range(kind, args.lo, args.hi);
    std::optional<Rat> at;
    if (!args.at.empty()) {
        at = parse_rational(args.at);
    }

    Json terms = Json::array();
    std::ostringstream text;
    const std::string label = kind_label(kind);
    std::int64_t index = args.lo;

    if (const auto* polys = std::get_if<std::vector<Poly>>(&slice)) {
        for (const Poly& p : *polys) {
            if (at) {
                const Rat value = p.eval_exact(*at);
                terms.push_back(rat_to_string(value));
                text << label << "[" << index << "] = " << rat_to_string(value)
                     << "\n";
            } else {
                terms.push_back(encode(p));
                text << label << "[" << index << "] = " << p.to_string()
                     << "\n";
            }
            ++index;
        }
    } else {
        for (const QPoly& q : std::get<std::vector<QPoly>>(slice)) {
            if (at) {
                const RatQuat value = eval_exact(q, *at);
                terms.push_back(encode(value));
                text << label << "[" << index << "] = (" << rat_to_string(value.r)
                     << ", " << rat_to_string(value.i) << ", "
                     << rat_to_string(value.j) << ", " << rat_to_string(value.k)
                     << ")\n";
            } else {
                terms.push_back(encode(q));
                text << label << "[" << index << "] = " << to_string(q) << "\n";
            }
            ++index;
        }
    }

    Json payload{{"kind", args.kind}, {"lo", args.lo}, {"hi", args.hi}};
    if (at) {
        payload["at"] = rat_to_string(*at);
    }
    payload["terms"] = std::move(terms);
    emit(opts, "gen", std::move(payload), text.str());
    return kExitOk;
}

// ------------------------------------------------------------- series ----

struct SeriesArgs {
    std::string gf;
    std::int64_t order = 20;
    std::int64_t shift = 0;
};

int run_series(const GlobalOpts& opts, const SeriesArgs& args)
{
    const SeqKind kind = parse_kind(args.gf);
    Json coefficients = Json::array();
    std::ostringstream text;

    const auto render_poly = [&](const TruncSeries<Poly>& s) {
        for (std::int64_t m = 0; m <= s.order(); ++m) {
            coefficients.push_back(encode(s.coeff(m)));
            text << "y^" << m << ": " << s.coeff(m).to_string() << "\n";
        }
    };
    const auto render_quat = [&](const TruncSeries<QPoly>& s) {
        for (std::int64_t m = 0; m <= s.order(); ++m) {
            coefficients.push_back(encode(s.coeff(m)));
            text << "y^" << m << ": " << to_string(s.coeff(m)) << "\n";
        }
    };

    if (args.shift != 0 &&
        (kind == SeqKind::Trib || kind == SeqKind::TribLucas)) {
        throw std::invalid_argument(
            "--shift applies to the quaternion kinds QT and Qt only");
    }

    switch (kind) {
    case SeqKind::Trib:
        render_poly(gf_trib(args.order));
        break;
    case SeqKind::TribLucas:
        render_poly(gf_trib_lucas(args.order));
        break;
    case SeqKind::QuatTrib:
        render_quat(args.shift != 0
                        ? gf_shifted(QuatKind::Trib, args.shift, args.order)
                        : gf_trib_quat(args.order));
        break;
    case SeqKind::QuatTribLucas:
        render_quat(args.shift != 0
                        ? gf_shifted(QuatKind::TribLucas, args.shift,
                                     args.order)
                        : gf_trib_lucas_quat(args.order));
        break;
    }

    Json payload{{"gf", args.gf}, {"order", args.order}};
    if (args.shift != 0) {
        payload["shift"] = args.shift;
    }
    payload["coefficients"] = std::move(coefficients);
    emit(opts, "series", std::move(payload), text.str());
    return kExitOk;
}

// -------------------------------------------------------------- binet ----

struct BinetArgs {
    double x0 = 1.0;
    std::int64_t n = 10;
};

int run_binet(const GlobalOpts& opts, const BinetArgs& args)
{
    const CubicRoots roots = solve_cubic(args.x0, opts.tol);
    const Rat x_exact(args.x0);

    Json rows = Json::array();
    std::ostringstream text;
    text << "roots at x0 = " << args.x0 << ": alpha = " << roots.alpha.real()
         << ", omega1 = " << roots.omega1.real() << " + "
         << roots.omega1.imag() << "i\n";
    text << "n | exact T_n | Binet T_n | exact t_n | Binet t_n\n";

    for (std::int64_t n = 0; n <= args.n; ++n) {
        const Rat t_exact = trib_poly(n).eval_exact(x_exact);
        const Rat l_exact = trib_lucas_poly(n).eval_exact(x_exact);
        const auto t_binet = binet_trib(n, roots);
        const auto l_binet = binet_trib_lucas(n, roots);
        const NumQuat qt_diff =
            binet_quat(QuatKind::Trib, n, roots) -
            eval(trib_quat(n), {args.x0, 0.0});
        const NumQuat ql_diff =
            binet_quat(QuatKind::TribLucas, n, roots) -
            eval(trib_lucas_quat(n), {args.x0, 0.0});

        rows.push_back(Json{
            {"n", n},
            {"trib_exact", rat_to_string(t_exact)},
            {"trib_binet", t_binet.real()},
            {"trib_lucas_exact", rat_to_string(l_exact)},
            {"trib_lucas_binet", l_binet.real()},
            {"quat_trib_max_err", quat_abs_max(qt_diff)},
            {"quat_trib_lucas_max_err", quat_abs_max(ql_diff)},
        });
        text << n << " | " << rat_to_string(t_exact) << " | "
             << t_binet.real() << " | " << rat_to_string(l_exact) << " | "
             << l_binet.real() << "\n";
    }

    Json payload{{"x0", args.x0},
                 {"tol", opts.tol},
                 {"roots", encode(roots)},
                 {"rows", std::move(rows)}};
    emit(opts, "binet", std::move(payload), text.str());
    return kExitOk;
}

// ------------------------------------------------------------- matrix ----

struct MatrixArgs {
    std::int64_t n = 5;
};

int run_matrix(const GlobalOpts& opts, const MatrixArgs& args)
{
    if (args.n < 1) {
        throw std::invalid_argument("matrix comparison needs --n >= 1");
    }
    const Mat3<Poly> closed = s_power_closed(args.n);
    const Mat3<Poly> powered = mat_pow(s_matrix(), args.n);
    const auto [left, right] = qs_product_sides(args.n);
    const Poly determinant = det(s_matrix());

    const bool power_match = closed == powered;
    const bool product_match = left == right;

    Json payload{{"n", args.n},
                 {"s_power_closed", encode(closed)},
                 {"s_power_binary", encode(powered)},
                 {"power_match", power_match},
                 {"qs_product_left", encode(left)},
                 {"qs_product_right", encode(right)},
                 {"product_match", product_match},
                 {"det_s", encode(determinant)},
                 {"det_is_one", determinant == Poly(1)}};

    std::ostringstream text;
    text << "S^" << args.n << " closed form "
         << (power_match ? "matches" : "DIFFERS FROM")
         << " binary exponentiation\n";
    text << "quaternion matrix product identity "
         << (product_match ? "holds" : "FAILS") << " at n = " << args.n << "\n";
    text << "det S = " << determinant.to_string() << "\n";

    emit(opts, "matrix", std::move(payload), text.str());
    return power_match && product_match && determinant == Poly(1)
               ? kExitOk
               : kExitVerifyFailure;
}

// ------------------------------------------------------------- verify ----

struct VerifyArgs {
    std::string identity = "all";
    std::int64_t n_max = 20;
    std::string x_grid = "0.5,1,2";
    std::int64_t egf_order = 40;
};

int run_verify(const GlobalOpts& opts, const VerifyArgs& args)
{
    const std::vector<double> grid = parse_grid(args.x_grid);
    const std::vector<double> y_grid{0.1, 0.3};
    const std::int64_t n_max = args.n_max;

    std::vector<VerifyReport> reports;
    const auto single = [&](const std::string& id) -> std::optional<VerifyReport> {
        if (id == "recurrence-trib")
            return verify_recurrence(QuatKind::Trib, n_max);
        if (id == "recurrence-trib-lucas")
            return verify_recurrence(QuatKind::TribLucas, n_max);
        if (id == "gf-trib") return verify_gf(SeqKind::Trib, n_max);
        if (id == "gf-trib-lucas") return verify_gf(SeqKind::TribLucas, n_max);
        if (id == "gf-quat-trib") return verify_gf(SeqKind::QuatTrib, n_max);
        if (id == "gf-quat-trib-lucas")
            return verify_gf(SeqKind::QuatTribLucas, n_max);
        if (id == "gf-shifted-trib")
            return verify_gf_shifted(QuatKind::Trib, 2, 8,
                                     std::min<std::int64_t>(n_max, 20));
        if (id == "gf-shifted-trib-lucas")
            return verify_gf_shifted(QuatKind::TribLucas, 2, 8,
                                     std::min<std::int64_t>(n_max, 20));
        if (id == "binomial-trib")
            return verify_binomial_sum(QuatKind::Trib,
                                       std::min<std::int64_t>(n_max, 12));
        if (id == "binomial-trib-lucas")
            return verify_binomial_sum(QuatKind::TribLucas,
                                       std::min<std::int64_t>(n_max, 12));
        if (id == "summation") return verify_summation(n_max);
        if (id == "roots") return verify_roots(grid);
        if (id == "binet-trib")
            return verify_binet(QuatKind::Trib, n_max, grid);
        if (id == "binet-trib-lucas")
            return verify_binet(QuatKind::TribLucas, n_max, grid);
        if (id == "egf-trib")
            return verify_egf(QuatKind::Trib, grid, y_grid, args.egf_order);
        if (id == "egf-trib-lucas")
            return verify_egf(QuatKind::TribLucas, grid, y_grid,
                              args.egf_order);
        if (id == "matrix-power")
            return verify_matrix_power(std::max<std::int64_t>(n_max, 1));
        if (id == "matrix-product") return verify_qs_product(n_max);
        if (id == "matrix-decomposition") return verify_decomposition(n_max);
        if (id == "integer-specialization")
            return verify_integer_specialization(
                std::min<std::int64_t>(n_max, 60));
        return std::nullopt;
    };

    if (args.identity == "all") {
        reports = verify_all(n_max, grid);
    } else if (auto report = single(args.identity)) {
        reports.push_back(std::move(*report));
    } else {
        throw std::invalid_argument("unknown identity '" + args.identity +
                                    "' (use --identity all to list everything)");
    }

    bool all_passed = true;
    Json encoded = Json::array();
    std::ostringstream text;
    for (const VerifyReport& r : reports) {
        all_passed = all_passed && r.passed;
        encoded.push_back(encode(r));
        text << (r.passed ? "[PASS] " : "[FAIL] ") << r.identity_id
             << " range=[" << r.lo << "," << r.hi << "]";
        if (r.first_failure) {
            text << " first failure at index " << r.first_failure->index;
            if (!r.first_failure->note.empty()) {
                text << " (" << r.first_failure->note << ")";
            }
        }
        text << "\n";
    }
    text << (all_passed ? "all identities verified\n"
                        : "VERIFICATION FAILURES PRESENT\n");

    Json payload{{"identity", args.identity},
                 {"n_max", n_max},
                 {"x_grid", grid},
                 {"reports", std::move(encoded)},
                 {"all_passed", all_passed}};
    emit(opts, "verify", std::move(payload), text.str());
    return all_passed ? kExitOk : kExitVerifyFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tribonacci and Tribonacci-Lucas quaternion polynomials: "
                 "exact generators, series expansions, Binet tables and "
                 "identity verification"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--tol", opts.tol,
                   "Numeric tolerance for root solving and Binet tables")
        ->capture_default_str();

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand(
        "gen", "Generate sequence terms (polynomials or quaternions)");
    gen_cmd->add_option("kind", gen_args.kind, "Sequence kind: T, t, QT, Qt")
        ->required();
    gen_cmd->add_option("lo", gen_args.lo, "First index")->required();
    gen_cmd->add_option("hi", gen_args.hi, "Last index")->required();
    gen_cmd->add_option("--at", gen_args.at,
                        "Evaluate exactly at a rational point (p/q or decimal)");

    SeriesArgs series_args;
    auto* series_cmd = app.add_subcommand(
        "series", "Expand a closed-form generating function");
    series_cmd->add_option("--gf", series_args.gf, "Which series: T, t, QT, Qt")
        ->required();
    series_cmd->add_option("--order", series_args.order, "Truncation order")
        ->capture_default_str();
    series_cmd->add_option("--shift", series_args.shift,
                           "Index shift m >= 2 (QT/Qt only)");

    BinetArgs binet_args;
    auto* binet_cmd = app.add_subcommand(
        "binet", "Cubic roots and exact-vs-Binet comparison tables");
    binet_cmd->add_option("--x", binet_args.x0, "Parameter x0 > 0")->required();
    binet_cmd->add_option("--n", binet_args.n, "Table rows 0..n")
        ->capture_default_str();

    MatrixArgs matrix_args;
    auto* matrix_cmd = app.add_subcommand(
        "matrix", "Companion-matrix powers and the quaternion product identity");
    matrix_cmd->add_option("--n", matrix_args.n, "Power to compare")
        ->capture_default_str();

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "Verify identities; exit 1 on failure");
    verify_cmd->add_option("--identity", verify_args.identity,
                           "Identity id or 'all'")
        ->capture_default_str();
    verify_cmd->add_option("--n-max", verify_args.n_max, "Index range bound")
        ->capture_default_str();
    verify_cmd->add_option("--x-grid", verify_args.x_grid,
                           "Comma-separated numeric grid (empty: symbolic only)")
        ->capture_default_str();
    verify_cmd->add_option("--egf-order", verify_args.egf_order,
                           "Truncation order for the exponential series")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (gen_cmd->parsed()) return run_gen(opts, gen_args);
        if (series_cmd->parsed()) return run_series(opts, series_args);
        if (binet_cmd->parsed()) return run_binet(opts, binet_args);
        if (matrix_cmd->parsed()) return run_matrix(opts, matrix_args);
        if (verify_cmd->parsed()) return run_verify(opts, verify_args);
    } catch (const std::invalid_argument& e) {
        return emit_error(opts, command, "invalid_argument", e.what());
    } catch (const std::out_of_range& e) {
        return emit_error(opts, command, "out_of_range", e.what());
    } catch (const std::domain_error& e) {
        return emit_error(opts, command, "domain_error", e.what());
    } catch (const ConvergenceError& e) {
        return emit_error(opts, command, "convergence_error", e.what());
    } catch (const std::exception& e) {
        return emit_error(opts, command, "internal_error", e.what());
    }
    return kExitUsage;
}
