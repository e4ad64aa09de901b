#pragma once

#include "triboq/binet.hpp"
#include "triboq/identities.hpp"
#include "triboq/matrixrep.hpp"
#include "triboq/poly.hpp"
#include "triboq/quaternion.hpp"
#include "triboq/series.hpp"

#include <nlohmann/json.hpp>

namespace triboq {

using Json = nlohmann::ordered_json;

/// Wire format for a polynomial: array of decimal integer strings,
/// ascending powers; the zero polynomial is [].
Json encode(const Poly& p);
Poly decode_poly(const Json& j);

/// Wire format for a polynomial quaternion: object with keys
/// "r", "i", "j", "k", each a polynomial array.
Json encode(const QPoly& q);
QPoly decode_qpoly(const Json& j);

/// Complex numbers encode as [re, im]; numeric quaternions as the same
/// r/i/j/k object with complex pairs.
Json encode(const std::complex<double>& z);
Json encode(const NumQuat& q);

/// Exact rational quaternion; components rendered with rat_to_string.
Json encode(const RatQuat& q);

Json encode(const CubicRoots& roots);

Json encode(const TruncSeries<Poly>& series);
Json encode(const TruncSeries<QPoly>& series);

Json encode(const Mat3<Poly>& m);
Json encode(const Mat3<QPoly>& m);

Json encode(const VerifyReport& report);

} // namespace triboq
