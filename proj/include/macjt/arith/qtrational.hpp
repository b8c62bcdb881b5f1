#pragma once
// Elements of the field Q(q,t).
//
// The value is num / (q^a t^b * prod F_i^{e_i}) where the F_i are interned
// irreducible factors (see factor.hpp). After every operation the numerator
// is divided by each denominator factor as often as possible, so for
// denominators built from binomials the representation is canonical.
// Equality never relies on that: unequal representations are compared by
// subtracting.

#include <string>

#include <gmpxx.h>

#include "macjt/arith/factor.hpp"
#include "macjt/arith/qtpoly.hpp"

namespace macjt::arith {

class QTRational {
public:
    QTRational() = default;
    QTRational(long c) : num_(mpq_class(c)) {}
    QTRational(const mpq_class &c) : num_(c) {}
    QTRational(const QTPolynomial &p) : num_(p) {}

    // n / d with d factored on the way in.
    static QTRational from_fraction(const QTPolynomial &n, const QTPolynomial &d);
    // c q^a t^b with arbitrary integer exponents.
    static QTRational monomial(const mpq_class &c, int q_exp, int t_exp);
    static QTRational q() { return monomial(1, 1, 0); }
    static QTRational t() { return monomial(1, 0, 1); }
    // Rebuilds a value from its stored parts (num / (q^dq t^dt prod den)),
    // cancelling whatever the parts allow.
    static QTRational from_parts(const QTPolynomial &num, int dq, int dt, FactorList den);

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const;
    // True when the value is a rational number (no q, t dependence).
    bool is_constant() const noexcept;
    mpq_class constant_value() const; // requires is_constant()

    const QTPolynomial &numerator() const noexcept { return num_; }
    int den_q() const noexcept { return den_q_; }
    int den_t() const noexcept { return den_t_; }
    const FactorList &den_factors() const noexcept { return den_; }
    // Expanded denominator: primitive, positive leading coefficient.
    ZPoly denominator() const;

    QTRational operator-() const;
    QTRational operator+(const QTRational &o) const;
    QTRational operator-(const QTRational &o) const;
    QTRational operator*(const QTRational &o) const;
    QTRational operator/(const QTRational &o) const;
    QTRational &operator+=(const QTRational &o) { return *this = *this + o; }
    QTRational &operator-=(const QTRational &o) { return *this = *this - o; }
    QTRational &operator*=(const QTRational &o) { return *this = *this * o; }
    QTRational &operator/=(const QTRational &o) { return *this = *this / o; }

    QTRational inverse() const;
    QTRational pow(int k) const;

    bool operator==(const QTRational &o) const;
    bool operator!=(const QTRational &o) const { return !(*this == o); }
    // Same stored representation (cheaper than ==, may give false negatives).
    bool same_representation(const QTRational &o) const;

    // Exact value at a rational point; MathError(PoleAtPoint) on a pole.
    mpq_class evaluate(const mpq_class &q, const mpq_class &t) const;

    // Exchange the roles of q and t.
    QTRational swapped() const;
    // Substitute q := t; MathError(GenuinePole) if q - t stays in the denominator.
    QTRational q_equals_t() const;

    std::string to_string() const;

private:
    void cancel_monomial();
    void cancel_factors();

    QTPolynomial num_;
    int den_q_ = 0;
    int den_t_ = 0;
    FactorList den_;
};

inline QTRational operator+(long a, const QTRational &b) { return QTRational(a) + b; }
inline QTRational operator-(long a, const QTRational &b) { return QTRational(a) - b; }
inline QTRational operator*(long a, const QTRational &b) { return QTRational(a) * b; }
inline QTRational operator/(long a, const QTRational &b) { return QTRational(a) / b; }

} // namespace macjt::arith
