#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "macjt/arith/laurent.hpp"
#include "macjt/arith/qtrational.hpp"
#include "macjt/partitions/partition.hpp"
#include "macjt/symfunc/symfunc.hpp"

namespace macjt::coef {

using arith::QTRational;
using ThetaVector = std::vector<int>;

// u_k = q^{a_k} t^{b_k}, k = 1..n. The extra variable u_{n+1} = 1/t is implicit.
struct USpec {
    std::vector<std::pair<int, int>> exps;

    std::size_t size() const { return exps.size(); }
    // u_k = q^{lambda_k - lambda_{n+1}} t^{n-k} for lambda padded to length n+1.
    static USpec from_partition(const std::vector<int> &lambda_padded);
    USpec shifted_q(int k, int dq) const;  // u_k -> q^dq u_k (k 0-based)
    USpec scaled_q(int dq) const;          // u -> q^dq u
    auto operator<=>(const USpec &) const = default;
    std::string to_string() const;
};

struct CValue {
    QTRational value;
    bool regularized = false;

    nlohmann::json to_json() const;
};

struct CStats {
    long evaluations = 0;
    long regularized = 0;
    long direction_checks = 0;
    long direction_mismatches = 0;
};

// C_theta(u) from the u_{n+1} = 1/t product form, evaluated at exact
// monomials. Zero constant terms are resolved by a perturbation
// u_k -> u_k (1 + w_k eps); regularized values are recomputed along a second
// direction and must agree (IdentityViolated otherwise). Entries of theta
// below zero give 0.
CValue C_coefficient(const ThetaVector &theta, const USpec &u);
// Same, along an explicit perturbation direction and without the second run.
CValue C_coefficient_along(const ThetaVector &theta, const USpec &u, const std::vector<long> &weights);
// C at q = t; GenuinePole if the generic value has a pole there.
QTRational C_at_q_equals_t(const ThetaVector &theta, const USpec &u);

CStats c_stats();
void reset_c_stats();
void clear_c_memo();
// Test hook: C_coefficient returns -C at this one (theta, u) until cleared.
void inject_sign_fault(const ThetaVector &theta, const USpec &u);
void clear_fault();

// Both displayed product forms at a point of an arbitrary field; the first
// uses no u_{n+1}, the second sets u_{n+1} = 1/t.
template <typename F>
F C_first_form(const ThetaVector &theta, const std::vector<F> &u, const F &q, const F &t);
template <typename F>
F C_second_form(const ThetaVector &theta, const std::vector<F> &u, const F &q, const F &t);
extern template mpq_class C_first_form(const ThetaVector &, const std::vector<mpq_class> &, const mpq_class &,
                                       const mpq_class &);
extern template mpq_class C_second_form(const ThetaVector &, const std::vector<mpq_class> &, const mpq_class &,
                                        const mpq_class &);
extern template QTRational C_second_form(const ThetaVector &, const std::vector<QTRational> &, const QTRational &,
                                         const QTRational &);

// Number of random rational points (out of `samples`) where the two forms differ.
int compare_C_forms(int n, int max_theta, int samples, std::uint64_t seed);

// Pieri-type coefficient of the one-box removal, evaluated as a product for
// any integer sequence; 0 when lambda is a partition and lambda_(k) is not.
QTRational c_k(const Composition &lambda, int k);

// Q_(r) Q_mu = sum_theta psi_theta Q_(mu + theta, r - |theta|), mu read with
// n = max(length, n_ambient) entries.
std::map<ThetaVector, QTRational> pieri_psi(int r, const Partition &mu, int n_ambient = 0);

// Coefficients F plugged into the recurrences; defaults to C_coefficient.
using CFunction = std::function<QTRational(const ThetaVector &, const USpec &)>;
CFunction default_C();

// Recurrence obtained by comparing coefficients of z after adding a variable.
bool check_recurrence_5(const ThetaVector &theta, const USpec &u, const CFunction &F = default_C());
// Companion recurrence lowering one index of theta.
bool check_remark_recurrence(const ThetaVector &theta, const USpec &u, const CFunction &F = default_C());

// coeff of z in Q_lambda(X, z) against (1-t)/(1-q) sum_k c_k Q_{lambda_(k)}(X), |X| = N.
bool check_lemma2(const Partition &lambda, int N);

} // namespace macjt::coef
