#include "triboq/sequences.hpp"

#include <array>
#include <stdexcept>
#include <string>
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

} // namespace

TriSequence::TriSequence(Poly s0, Poly s1, Poly s2)
{
    memo_.push_back(std::move(s0));
    memo_.push_back(std::move(s1));
    memo_.push_back(std::move(s2));
}

const Poly& TriSequence::at(std::int64_t n) const
{
    if (n < 0) {
        throw std::out_of_range("TriSequence index must be >= 0, got " +
                                std::to_string(n));
    }
    const auto want = static_cast<std::size_t>(n);
    std::lock_guard<std::mutex> lock(mu_);
    while (memo_.size() <= want) {
        const std::size_t s = memo_.size();
        memo_.push_back(x2() * memo_[s - 1] + x1() * memo_[s - 2] + memo_[s - 3]);
    }
    return memo_[want];
}

QPoly TriSequence::quat_at(std::int64_t n) const
{
    at(n + 3); // extend once; the window reads are then lock-cheap
    return {at(n), at(n + 1), at(n + 2), at(n + 3)};
}

namespace {

const TriSequence& trib_table()
{
    static const TriSequence seq(Poly(0), Poly(1), Poly::x_pow(2));
    return seq;
}

const TriSequence& trib_lucas_table()
{
    static const TriSequence seq(
        Poly(3), Poly::x_pow(2),
        Poly::from_coeffs({Int(0), Int(2), Int(0), Int(0), Int(1)}));
    return seq;
}

// T_{-1}, T_{-2}, T_{-3}: the recurrence run in reverse,
// s(n-3) = s(n) - x^2 s(n-1) - x s(n-2), starting from the seeds.
const std::array<Poly, 3>& trib_backward()
{
    static const std::array<Poly, 3> terms = [] {
        const Poly& t0 = trib_table().at(0);
        const Poly& t1 = trib_table().at(1);
        const Poly& t2 = trib_table().at(2);
        Poly m1 = t2 - x2() * t1 - x1() * t0;
        Poly m2 = t1 - x2() * t0 - x1() * m1;
        Poly m3 = t0 - x2() * m1 - x1() * m2;
        return std::array<Poly, 3>{std::move(m1), std::move(m2), std::move(m3)};
    }();
    return terms;
}

} // namespace

const Poly& trib_poly(std::int64_t n)
{
    if (n < -3) {
        throw std::out_of_range("trib_poly defined for n >= -3, got " +
                                std::to_string(n));
    }
    if (n < 0) {
        return trib_backward()[static_cast<std::size_t>(-n - 1)];
    }
    return trib_table().at(n);
}

const Poly& trib_lucas_poly(std::int64_t n)
{
    if (n < 0) {
        throw std::out_of_range("trib_lucas_poly defined for n >= 0, got " +
                                std::to_string(n));
    }
    return trib_lucas_table().at(n);
}

QPoly trib_quat(std::int64_t n)
{
    if (n < 0) {
        throw std::out_of_range("trib_quat defined for n >= 0, got " +
                                std::to_string(n));
    }
    return trib_table().quat_at(n);
}

QPoly trib_lucas_quat(std::int64_t n)
{
    if (n < 0) {
        throw std::out_of_range("trib_lucas_quat defined for n >= 0, got " +
                                std::to_string(n));
    }
    return trib_lucas_table().quat_at(n);
}

SeqSlice seq_range(SeqKind kind, std::int64_t lo, std::int64_t hi)
{
    if (lo > hi) {
        throw std::invalid_argument("seq_range needs lo <= hi");
    }
    switch (kind) {
    case SeqKind::Trib: {
        std::vector<Poly> out;
        out.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (std::int64_t n = lo; n <= hi; ++n) {
            out.push_back(trib_poly(n));
        }
        return out;
    }
    case SeqKind::TribLucas: {
        std::vector<Poly> out;
        out.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (std::int64_t n = lo; n <= hi; ++n) {
            out.push_back(trib_lucas_poly(n));
        }
        return out;
    }
    case SeqKind::QuatTrib: {
        std::vector<QPoly> out;
        out.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (std::int64_t n = lo; n <= hi; ++n) {
            out.push_back(trib_quat(n));
        }
        return out;
    }
    case SeqKind::QuatTribLucas: {
        std::vector<QPoly> out;
        out.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (std::int64_t n = lo; n <= hi; ++n) {
            out.push_back(trib_lucas_quat(n));
        }
        return out;
    }
    }
    throw std::invalid_argument("unknown sequence kind");
}

} // namespace triboq
