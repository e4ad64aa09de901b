#include "triboq/poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace triboq {

Poly::Poly(Int constant)
{
    if (constant != 0) {
        coeffs_.push_back(std::move(constant));
    }
}

Poly Poly::from_coeffs(std::vector<Int> coeffs)
{
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::x_pow(std::size_t power, Int scale)
{
    Poly p;
    if (scale != 0) {
        p.coeffs_.assign(power + 1, Int(0));
        p.coeffs_.back() = std::move(scale);
    }
    return p;
}

const Int& Poly::coeff(std::size_t k) const
{
    static const Int zero(0);
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Poly Poly::operator-() const
{
    Poly out;
    out.coeffs_.reserve(coeffs_.size());
    for (const Int& c : coeffs_) {
        out.coeffs_.push_back(-c);
    }
    return out;
}

Poly& Poly::operator+=(const Poly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Int(0));
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Int(0));
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) {
        return Poly();
    }
    Poly out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t a = 0; a < lhs.coeffs_.size(); ++a) {
        if (lhs.coeffs_[a] == 0) {
            continue;
        }
        for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) {
            out.coeffs_[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
        }
    }
    // leading coefficients are nonzero over an integral domain, no trim needed,
    // but keep the invariant enforced in one place
    out.trim();
    return out;
}

Poly operator*(const Int& c, const Poly& p)
{
    if (c == 0) {
        return Poly();
    }
    Poly out;
    out.coeffs_.reserve(p.coeffs_.size());
    for (const Int& pc : p.coeffs_) {
        out.coeffs_.push_back(c * pc);
    }
    return out;
}

Rat Poly::eval_exact(const Rat& x0) const
{
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x0 + Rat(*it);
    }
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> z) const
{
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + std::complex<double>(it->convert_to<double>(), 0.0);
    }
    return acc;
}

double Poly::eval(double x0) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x0 + it->convert_to<double>();
    }
    return acc;
}

std::string Poly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Int& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) {
                os << "-";
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) {
            os << mag;
            if (k > 0) {
                os << "*";
            }
        }
        if (k == 1) {
            os << "x";
        } else if (k > 1) {
            os << "x^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p)
{
    return os << p.to_string();
}

namespace {

Int parse_int(const std::string& text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) {
        throw std::invalid_argument("sign without digits: '" + text + "'");
    }
    for (std::size_t k = start; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
            throw std::invalid_argument("not an integer literal: '" + text + "'");
        }
    }
    return Int(text);
}

} // namespace

Rat parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Int num = parse_int(s.substr(0, slash));
        Int den = parse_int(s.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator: '" + text + "'");
        }
        return Rat(num, den);
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (frac.empty()) {
            throw std::invalid_argument("trailing decimal point: '" + text + "'");
        }
        bool negative = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
            head.erase(0, 1);
        }
        if (head.empty()) {
            head = "0";
        }
        Int scale(1);
        for (std::size_t k = 0; k < frac.size(); ++k) {
            scale *= 10;
        }
        Int num = parse_int(head) * scale + parse_int(frac);
        if (negative) {
            num = -num;
        }
        return Rat(num, scale);
    }

    return Rat(parse_int(s));
}

std::string rat_to_string(const Rat& value)
{
    const Int num = boost::multiprecision::numerator(value);
    const Int den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

} // namespace triboq
