#pragma once
// Polynomials in an auxiliary perturbation variable eps over Q(q,t).

#include <cstddef>
#include <string>
#include <vector>

#include "macjt/arith/qtrational.hpp"

namespace macjt::arith {

class EpsPolynomial {
public:
    EpsPolynomial() = default;
    EpsPolynomial(const QTRational &c) { if (!c.is_zero()) c_.push_back(c); }
    explicit EpsPolynomial(std::vector<QTRational> coeffs);

    // c0 + c1 * eps
    static EpsPolynomial linear(const QTRational &c0, const QTRational &c1);

    bool is_zero() const noexcept { return c_.empty(); }
    // Index of the highest stored power plus one.
    std::size_t size() const noexcept { return c_.size(); }
    const QTRational &operator[](std::size_t i) const;
    // Lowest power with a nonzero coefficient; -1 for zero.
    int order() const;

    EpsPolynomial operator+(const EpsPolynomial &o) const;
    EpsPolynomial operator-(const EpsPolynomial &o) const;
    EpsPolynomial operator*(const EpsPolynomial &o) const { return mul(o, -1); }
    EpsPolynomial operator-() const;
    // Product with all powers above max_power dropped (max_power < 0: exact).
    EpsPolynomial mul(const EpsPolynomial &o, int max_power) const;
    EpsPolynomial truncated(int max_power) const;

    std::string to_string() const;

private:
    void trim();

    std::vector<QTRational> c_;
};

// Value at eps = 0 of num/den; GenuinePole if the quotient has a pole there.
QTRational eps_limit(const EpsPolynomial &num, const EpsPolynomial &den);

} // namespace macjt::arith
