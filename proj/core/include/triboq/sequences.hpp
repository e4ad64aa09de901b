#pragma once

#include "triboq/poly.hpp"
#include "triboq/quaternion.hpp"

#include <cstdint>
#include <deque>
#include <mutex>
#include <variant>
#include <vector>

namespace triboq {

enum class SeqKind { Trib, TribLucas, QuatTrib, QuatTribLucas };

/// The two quaternion-valued sequence families.
enum class QuatKind { Trib, TribLucas };

/// Memoized third-order polynomial recurrence
///   s(n) = x^2 s(n-1) + x s(n-2) + s(n-3),  n >= 3,
/// from three seed polynomials. Extension of the memo table is serialized
/// with a mutex; returned references stay valid (deque storage), so
/// concurrent readers are safe once a prefix is computed.
class TriSequence {
public:
    TriSequence(Poly s0, Poly s1, Poly s2);

    /// n-th term, n >= 0. Repeated calls are O(1) after first computation.
    const Poly& at(std::int64_t n) const;

    /// Window (s_n, s_{n+1}, s_{n+2}, s_{n+3}) as a quaternion.
    QPoly quat_at(std::int64_t n) const;

private:
    mutable std::mutex mu_;
    mutable std::deque<Poly> memo_;
};

/// Tribonacci polynomial T_n(x), defined for n >= -3. The three backward
/// terms come from running the recurrence in reverse from the seeds.
const Poly& trib_poly(std::int64_t n);

/// Tribonacci-Lucas polynomial t_n(x), n >= 0 only (no backward extension).
const Poly& trib_lucas_poly(std::int64_t n);

/// Tribonacci quaternion polynomial: components T_n(x) .. T_{n+3}(x), n >= 0.
QPoly trib_quat(std::int64_t n);

/// Tribonacci-Lucas quaternion polynomial: components t_n(x) .. t_{n+3}(x).
QPoly trib_lucas_quat(std::int64_t n);

using SeqSlice = std::variant<std::vector<Poly>, std::vector<QPoly>>;

/// Contiguous slice [lo, hi] of the chosen sequence. Throws
/// std::invalid_argument when lo > hi and std::out_of_range when an index
/// is outside the kind's domain.
SeqSlice seq_range(SeqKind kind, std::int64_t lo, std::int64_t hi);

} // namespace triboq
