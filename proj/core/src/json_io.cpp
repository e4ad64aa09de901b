#include "triboq/json_io.hpp"

#include <stdexcept>

namespace triboq {

Json encode(const Poly& p)
{
    Json arr = Json::array();
    for (const Int& c : p.coeffs()) {
        arr.push_back(c.str());
    }
    return arr;
}

Poly decode_poly(const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("polynomial JSON must be an array");
    }
    std::vector<Int> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (c.is_string()) {
            coeffs.emplace_back(c.get<std::string>());
        } else if (c.is_number_integer()) {
            coeffs.emplace_back(c.get<long long>());
        } else {
            throw std::invalid_argument(
                "polynomial coefficients must be integer strings");
        }
    }
    return Poly::from_coeffs(std::move(coeffs));
}

Json encode(const QPoly& q)
{
    return Json{{"r", encode(q.r)},
                {"i", encode(q.i)},
                {"j", encode(q.j)},
                {"k", encode(q.k)}};
}

QPoly decode_qpoly(const Json& j)
{
    if (!j.is_object()) {
        throw std::invalid_argument("quaternion JSON must be an object");
    }
    return {decode_poly(j.at("r")), decode_poly(j.at("i")),
            decode_poly(j.at("j")), decode_poly(j.at("k"))};
}

Json encode(const std::complex<double>& z)
{
    return Json::array({z.real(), z.imag()});
}

Json encode(const NumQuat& q)
{
    return Json{{"r", encode(q.r)},
                {"i", encode(q.i)},
                {"j", encode(q.j)},
                {"k", encode(q.k)}};
}

Json encode(const RatQuat& q)
{
    return Json{{"r", rat_to_string(q.r)},
                {"i", rat_to_string(q.i)},
                {"j", rat_to_string(q.j)},
                {"k", rat_to_string(q.k)}};
}

Json encode(const CubicRoots& roots)
{
    return Json{{"x0", roots.x0},
                {"alpha", encode(roots.alpha)},
                {"omega1", encode(roots.omega1)},
                {"omega2", encode(roots.omega2)},
                {"tol", roots.tol}};
}

namespace {

template <typename R>
Json encode_series(const TruncSeries<R>& series)
{
    Json coeffs = Json::array();
    for (const R& c : series.coeffs()) {
        coeffs.push_back(encode(c));
    }
    return Json{{"order", series.order()}, {"coefficients", coeffs}};
}

template <typename R>
Json encode_mat3(const Mat3<R>& m)
{
    Json rows = Json::array();
    for (int row = 0; row < 3; ++row) {
        Json cols = Json::array();
        for (int col = 0; col < 3; ++col) {
            cols.push_back(encode(m.at(row, col)));
        }
        rows.push_back(std::move(cols));
    }
    return rows;
}

} // namespace

Json encode(const TruncSeries<Poly>& series) { return encode_series(series); }
Json encode(const TruncSeries<QPoly>& series) { return encode_series(series); }

Json encode(const Mat3<Poly>& m) { return encode_mat3(m); }
Json encode(const Mat3<QPoly>& m) { return encode_mat3(m); }

Json encode(const VerifyReport& report)
{
    Json j{{"identity", report.identity_id},
           {"range", Json::array({report.lo, report.hi})},
           {"passed", report.passed}};
    if (report.first_failure) {
        const VerifyFailure& f = *report.first_failure;
        Json fj{{"index", f.index}, {"difference", encode(f.difference)}};
        if (f.residual != 0.0) {
            fj["residual"] = f.residual;
        }
        if (!f.note.empty()) {
            fj["note"] = f.note;
        }
        j["first_failure"] = std::move(fj);
    }
    return j;
}

} // namespace triboq
