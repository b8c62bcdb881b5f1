#pragma once
// Polynomials in q,t over Q, stored as rational scale * primitive integer part.

#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "macjt/arith/zpoly.hpp"

namespace macjt::arith {

class QTPolynomial {
public:
    struct Term {
        int q;
        int t;
        mpq_class coeff;
    };

    QTPolynomial() = default;
    QTPolynomial(long c) : QTPolynomial(mpq_class(c)) {}
    QTPolynomial(const mpq_class &c);
    // scale * prim, renormalised so that the stored integer part is primitive
    // with a positive leading coefficient.
    QTPolynomial(const mpq_class &scale, ZPoly prim);

    static QTPolynomial monomial(const mpq_class &c, int q, int t);
    static QTPolynomial from_terms(const std::vector<Term> &terms);
    static QTPolynomial q() { return monomial(1, 1, 0); }
    static QTPolynomial t() { return monomial(1, 0, 1); }

    bool is_zero() const noexcept { return scale_ == 0; }
    const mpq_class &scale() const noexcept { return scale_; }
    const ZPoly &primitive() const noexcept { return prim_; }
    mpq_class coeff(int q, int t) const;
    // Ascending grlex order.
    std::vector<Term> terms() const;

    QTPolynomial operator-() const;
    QTPolynomial operator+(const QTPolynomial &o) const;
    QTPolynomial operator-(const QTPolynomial &o) const;
    QTPolynomial operator*(const QTPolynomial &o) const;
    QTPolynomial &operator+=(const QTPolynomial &o) { return *this = *this + o; }
    QTPolynomial &operator-=(const QTPolynomial &o) { return *this = *this - o; }
    QTPolynomial &operator*=(const QTPolynomial &o) { return *this = *this * o; }

    // Throws MathError(NotDivisible) when no exact quotient exists and
    // MathError(DivisionByZero) for o == 0.
    QTPolynomial exact_div(const QTPolynomial &o) const;

    mpq_class evaluate(const mpq_class &q, const mpq_class &t) const;

    bool operator==(const QTPolynomial &o) const { return scale_ == o.scale_ && prim_ == o.prim_; }
    bool operator!=(const QTPolynomial &o) const { return !(*this == o); }

    std::string to_string() const;

private:
    mpq_class scale_ = 0;
    ZPoly prim_;
};

} // namespace macjt::arith
