#pragma once
// Difference operators acting on symmetric polynomials in finitely many variables.

#include <vector>

#include "macjt/symfunc/poly_in_vars.hpp"

namespace macjt::ops {

using arith::QTRational;
using sym::PolyInVars;

// Polynomial in the indeterminate a; entry k is the coefficient of a^k.
template <typename F>
struct APoly {
    std::vector<F> coeffs;

    std::size_t size() const { return coeffs.size(); }
    F at(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : F(0); }
    F operator()(const F &a) const
    {
        F s(0);
        for (std::size_t k = coeffs.size(); k-- > 0;) s = s * a + coeffs[k];
        return s;
    }
};
using APolynomial = APoly<QTRational>;

// f(x_1, .., q x_i, .., x_n)
PolyInVars shift_q(const PolyInVars &f, int i);

// Vandermonde prod_{a<b} (x_a - x_b) in n variables, with x_i scaled by t
// for the indices flagged in `t_scaled`.
PolyInVars vandermonde(int n, const std::vector<bool> &t_scaled = {});

// Exact quotient by the Vandermonde determinant; NotSymmetric if it fails.
PolyInVars divide_by_vandermonde(const PolyInVars &p);

// sum_i prod_{k != i} (t x_i - x_k)/(x_i - x_k) f(.., q x_i, ..)
PolyInVars apply_E(const PolyInVars &f);

// Delta(X)^{-1} det[x_i^{n-j} (1 + a t^{n-j} T_{q,x_i})] f; entry k of the
// result is the coefficient of a^k.
std::vector<PolyInVars> apply_D(const PolyInVars &f);
// The same operator at a fixed value of a.
PolyInVars apply_D_at(const PolyInVars &f, const QTRational &a);

// sum_i q^{lambda_i} t^{n-i} and prod_i (1 + a q^{lambda_i} t^{n-i}).
QTRational E_eigenvalue(const Partition &lambda, int n);
APolynomial D_eigenvalue(const Partition &lambda, int n);

} // namespace macjt::ops
