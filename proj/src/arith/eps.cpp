#include "macjt/arith/eps.hpp"

#include <algorithm>
#include <sstream>

#include "macjt/error.hpp"

namespace macjt::arith {

namespace {
const QTRational kZero;
}

EpsPolynomial::EpsPolynomial(std::vector<QTRational> coeffs) : c_(std::move(coeffs)) { trim(); }

EpsPolynomial EpsPolynomial::linear(const QTRational &c0, const QTRational &c1)
{
    return EpsPolynomial(std::vector<QTRational>{c0, c1});
}

void EpsPolynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const QTRational &EpsPolynomial::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

int EpsPolynomial::order() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

EpsPolynomial EpsPolynomial::operator+(const EpsPolynomial &o) const
{
    std::vector<QTRational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
    return EpsPolynomial(std::move(r));
}

EpsPolynomial EpsPolynomial::operator-() const
{
    std::vector<QTRational> r;
    r.reserve(c_.size());
    for (const auto &c : c_) r.push_back(-c);
    return EpsPolynomial(std::move(r));
}

EpsPolynomial EpsPolynomial::operator-(const EpsPolynomial &o) const { return *this + (-o); }

EpsPolynomial EpsPolynomial::mul(const EpsPolynomial &o, int max_power) const
{
    if (is_zero() || o.is_zero()) return {};
    std::size_t n = c_.size() + o.c_.size() - 1;
    if (max_power >= 0) n = std::min(n, static_cast<std::size_t>(max_power) + 1);
    std::vector<QTRational> r(n);
    for (std::size_t i = 0; i < c_.size() && i < n; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size() && i + j < n; ++j) {
            if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
        }
    }
    return EpsPolynomial(std::move(r));
}

EpsPolynomial EpsPolynomial::truncated(int max_power) const
{
    if (max_power < 0 || static_cast<std::size_t>(max_power) + 1 >= c_.size()) return *this;
    return EpsPolynomial(std::vector<QTRational>(c_.begin(), c_.begin() + max_power + 1));
}

std::string EpsPolynomial::to_string() const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].to_string() << ")";
        if (i > 0) os << "*eps^" << i;
    }
    return os.str();
}

QTRational eps_limit(const EpsPolynomial &num, const EpsPolynomial &den)
{
    const int md = den.order();
    if (md < 0) throw MathError(ErrorCode::DivisionByZero, "eps_limit with zero denominator");
    const int mn = num.order();
    if (mn < 0) return {};
    if (mn < md) throw MathError(ErrorCode::GenuinePole, "numerator vanishes to lower order than denominator");
    if (mn > md) return {};
    return num[mn] / den[md];
}

} // namespace macjt::arith
