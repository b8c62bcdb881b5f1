#pragma once
// Symmetric functions over Q(q,t), stored in the power-sum basis.

#include <map>
#include <string>
#include <vector>

#include "macjt/arith/qtrational.hpp"
#include "macjt/partitions/partition.hpp"

namespace macjt::sym {

using arith::QTRational;

inline constexpr int kDefaultDegreeCap = 12;

class SymFunc {
public:
    using Terms = std::map<Partition, QTRational>;

    explicit SymFunc(int degree_cap = kDefaultDegreeCap) : cap_(degree_cap) {}
    SymFunc(const QTRational &c, int degree_cap = kDefaultDegreeCap);

    // p_lambda; DegreeCapExceeded if |lambda| > degree_cap.
    static SymFunc p(const Partition &lambda, int degree_cap = kDefaultDegreeCap);

    int degree_cap() const noexcept { return cap_; }
    SymFunc with_cap(int cap) const;
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    QTRational coeff(const Partition &lambda) const;
    // Component of weight n.
    SymFunc homogeneous(int n) const;
    int max_weight() const;

    void add_term(const Partition &lambda, const QTRational &c);

    SymFunc operator-() const;
    SymFunc operator+(const SymFunc &o) const;
    SymFunc operator-(const SymFunc &o) const;
    SymFunc operator*(const SymFunc &o) const;
    SymFunc operator*(const QTRational &c) const;
    SymFunc &operator+=(const SymFunc &o);
    SymFunc &operator-=(const SymFunc &o);

    bool operator==(const SymFunc &o) const;
    bool operator!=(const SymFunc &o) const { return !(*this == o); }

    // Coefficientwise q <-> t.
    SymFunc swapped() const;
    // Coefficientwise q := t.
    SymFunc q_equals_t() const;

    std::string to_string() const;

private:
    int cap_;
    Terms terms_;
};

SymFunc multiply(const SymFunc &f, const SymFunc &g);

SymFunc e(int k, int degree_cap = kDefaultDegreeCap);
SymFunc h(int k, int degree_cap = kDefaultDegreeCap);
SymFunc g(int k, int degree_cap = kDefaultDegreeCap);
SymFunc m(const Partition &lambda, int degree_cap = kDefaultDegreeCap);
// Products over the parts of mu; empty mu gives 1.
SymFunc e_product(const std::vector<int> &mu, int degree_cap = kDefaultDegreeCap);
SymFunc h_product(const std::vector<int> &mu, int degree_cap = kDefaultDegreeCap);
SymFunc g_product(const std::vector<int> &mu, int degree_cap = kDefaultDegreeCap);

// Coefficient of x^mu in p_lambda (same weight).
const std::vector<std::vector<mpz_class>> &p_to_m_matrix(int n);
// Monomial-basis coefficients of f.
std::map<Partition, QTRational> to_m_basis(const SymFunc &f);

QTRational scalar_product(const SymFunc &f, const SymFunc &g);
// <p_lambda, p_lambda>_{q,t}
QTRational p_norm(const Partition &lambda);

// omega_{q,t}: p_r -> (-1)^{r-1} (1-q^r)/(1-t^r) p_r. With swapped_params,
// omega_{t,q}.
SymFunc omega(const SymFunc &f, bool swapped_params = false);

} // namespace macjt::sym
