#pragma once
// Irreducible factors used by factored denominators.
//
// Denominators arising in q,t-deformed symmetric function theory are
// products of binomials 1 - c q^a t^b. Over Q each such binomial (c = +-1)
// splits into cyclotomic pieces Phi_d(q^alpha t^beta) with gcd(alpha,beta) = 1,
// and every such piece is irreducible. Factors of that shape are recognised
// exactly; anything else survives as a single opaque residual factor.

#include <memory>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "macjt/arith/zpoly.hpp"

namespace macjt::arith {

struct FactorData {
    ZPoly poly;          // primitive, positive grlex lead, no monomial content
    int cyclo_index = 0; // d for Phi_d(q^alpha t^beta); 0 for opaque residuals
    int alpha = 0;       // direction of a cyclotomic factor, alpha >= 0
    int beta = 0;
};

using Factor = std::shared_ptr<const FactorData>;
using FactorList = std::vector<std::pair<Factor, int>>; // sorted, multiplicities > 0

// Canonical order on factors (degree first, then coefficients).
bool factor_less(const Factor &a, const Factor &b);

// Canonical (interned) instance of a normalised polynomial.
Factor intern_factor(const ZPoly &normalized);

// Phi_d(q^alpha t^beta) cleared of its monomial denominator and normalised.
// Requires gcd(alpha, |beta|) == 1 and (alpha > 0 or (alpha == 0 and beta == 1)).
Factor cyclotomic_factor(int d, int alpha, int beta);

// Coefficients of the d-th cyclotomic polynomial, lowest degree first.
const std::vector<long long> &cyclotomic_coefficients(int d);

int euler_phi(int d);

struct Factorization {
    mpz_class unit;   // signed integer content
    int q_exp = 0;    // monomial content
    int t_exp = 0;
    FactorList factors;
};

// Split p into unit * monomial * (cyclotomic-binomial factors) * residual.
Factorization factor_poly(const ZPoly &p);

// Cheap necessary test for f | p (never rejects a true divisor).
bool may_divide(const FactorData &f, const ZPoly &p);

// Divide p by f as many times as possible, at most max_times. Returns the count.
int divide_out(ZPoly &p, const FactorData &f, int max_times);

ZPoly expand(const FactorList &factors);

// Merge helpers on sorted factor lists.
FactorList merge_add(const FactorList &a, const FactorList &b);
FactorList merge_max(const FactorList &a, const FactorList &b);
// a - b for multiplicities; requires b <= a pointwise.
FactorList merge_sub(const FactorList &a, const FactorList &b);

} // namespace macjt::arith
