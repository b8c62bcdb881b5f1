#pragma once

#include <string>

#include <gmpxx.h>

#include "macjt/arith/qtrational.hpp"

namespace macjt::arith {

// c * q^a * t^b with integer (possibly negative) exponents.
struct LaurentMonomial {
    mpq_class coeff = 1;
    int q_exp = 0;
    int t_exp = 0;

    LaurentMonomial() = default;
    LaurentMonomial(const mpq_class &c, int a, int b) : coeff(c), q_exp(a), t_exp(b) {}

    bool is_zero() const { return coeff == 0; }
    QTRational value() const { return QTRational::monomial(coeff, q_exp, t_exp); }
    mpq_class evaluate(const mpq_class &q, const mpq_class &t) const;

    LaurentMonomial operator*(const LaurentMonomial &o) const
    {
        return {coeff * o.coeff, q_exp + o.q_exp, t_exp + o.t_exp};
    }
    LaurentMonomial operator/(const LaurentMonomial &o) const
    {
        return {coeff / o.coeff, q_exp - o.q_exp, t_exp - o.t_exp};
    }
    bool operator==(const LaurentMonomial &o) const
    {
        return coeff == o.coeff && q_exp == o.q_exp && t_exp == o.t_exp;
    }

    std::string to_string() const;
};

// (x; q)_k = prod_{l<k} (1 - q^l x).
QTRational pochhammer(const LaurentMonomial &x, int k);

} // namespace macjt::arith
