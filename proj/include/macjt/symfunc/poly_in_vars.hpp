#pragma once
// Polynomials in finitely many variables x_1..x_n with Q(q,t) coefficients.

#include <map>
#include <string>
#include <vector>

#include "macjt/arith/qtrational.hpp"
#include "macjt/symfunc/symfunc.hpp"

namespace macjt::sym {

using Exponents = std::vector<int>;

class PolyInVars {
public:
    using Terms = std::map<Exponents, QTRational>;

    explicit PolyInVars(int n_vars = 0) : n_(n_vars) {}
    PolyInVars(int n_vars, const QTRational &c);
    static PolyInVars variable(int n_vars, int i); // x_i, 0-based
    static PolyInVars monomial(const Exponents &exps, const QTRational &c);

    int n_vars() const noexcept { return n_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    QTRational coeff(const Exponents &exps) const;
    int total_degree() const;

    void add_term(const Exponents &exps, const QTRational &c);

    PolyInVars operator-() const;
    PolyInVars operator+(const PolyInVars &o) const;
    PolyInVars operator-(const PolyInVars &o) const;
    PolyInVars operator*(const PolyInVars &o) const;
    PolyInVars operator*(const QTRational &c) const;
    PolyInVars &operator+=(const PolyInVars &o);

    bool operator==(const PolyInVars &o) const;
    bool operator!=(const PolyInVars &o) const { return !(*this == o); }

    bool is_symmetric() const;
    std::string to_string() const;

private:
    int n_;
    Terms terms_;
};

PolyInVars expand_in_variables(const SymFunc &f, int n);

// Coefficient of x_n^power, as a polynomial in x_1..x_{n-1}.
PolyInVars coeff_of_last_var(const PolyInVars &p, int power);

} // namespace macjt::sym
