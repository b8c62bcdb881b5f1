#pragma once
// Expansions of Q_lambda in products Q_(r) Q_mu and g's, and of P_lambda in
// e's, with the linear-algebra oracles they are checked against.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "macjt/coefficients/coefficients.hpp"
#include "macjt/symfunc/symfunc.hpp"

namespace macjt::expansion {

using arith::QTRational;
using coef::ThetaVector;
using sym::SymFunc;

struct ExpansionTerm {
    ThetaVector theta;
    QTRational coefficient;
    int row = 0;
    // Theorem 1: lambda + theta. Theorem 2: the parts of the P index, or the
    // multiplicity vector when some multiplicity is negative.
    Composition target;
    bool in_basis = true;
};

struct Expansion {
    int theorem = 1;
    Composition lambda; // padded to the ambient length (theorem 1) or multiplicities (theorem 2)
    Partition source;
    bool q_equals_t = false;
    std::vector<ExpansionTerm> terms;    // reconstructing terms
    std::vector<ExpansionTerm> off_basis; // non-partition targets with nonzero coefficient
};

using ThetaMatrix = std::vector<std::vector<int>>;
using GExpansion = std::map<Partition, QTRational>;

struct MatrixTerm {
    ThetaMatrix theta;
    QTRational coefficient;
    Composition index; // g (theorem 3) or e (theorem 4) indices
};

struct GResult {
    int theorem = 3;
    Composition lambda;
    Partition source;
    bool q_equals_t = false;
    std::vector<MatrixTerm> terms;
    GExpansion aggregate;
};

// ambient = n + 1 >= l(lambda); 0 means l(lambda) (at least 1).
Expansion theorem1_expand(const Partition &lambda, int ambient = 0, bool q_equals_t = false);
// Same expansion for an arbitrary nonnegative sequence; every term is kept.
Expansion theorem1_expand_composition(const Composition &lambda, bool q_equals_t = false);
// ambient = n + 1 >= lambda_1; 0 means lambda_1 (at least 1).
Expansion theorem2_expand(const Partition &lambda, int ambient = 0, bool q_equals_t = false);
GResult theorem3_expand(const Partition &lambda, int ambient = 0, bool q_equals_t = false);
GResult theorem4_expand(const Partition &lambda, int ambient = 0, bool q_equals_t = false);

// Theorem 1: sum coef Q_(row) Q_target. Theorem 2: sum coef e_row P_target.
// At q = t both sides are taken at q = t.
SymFunc reconstruct(const Expansion &x, int degree_cap = sym::kDefaultDegreeCap);
// Theorem 3: sum coef prod g. Theorem 4: sum coef prod e.
SymFunc reconstruct(const GResult &x, int degree_cap = sym::kDefaultDegreeCap);

// F_theta with Q_lambda = sum F_theta Q_(lambda_{n+1} - |theta|) Q_(lambda + theta),
// over theta with partition targets, by an exact linear solve in Q coordinates.
std::map<ThetaVector, QTRational> inverse_pieri_oracle(const Partition &lambda, int ambient = 0);
// Unique expansion of a homogeneous f of the given weight in the basis g_mu.
GExpansion g_basis_expansion(const SymFunc &f, int weight);
// Theorem 1 expansion re-expanded through pieri_psi, in Q coordinates.
std::map<Partition, QTRational> pieri_round_trip(const Expansion &x);

// Theorem 2 terms predicted from a theorem 1 expansion of lambda' (q, t swapped).
Expansion omega_image(const Expansion &thm1_of_conjugate);
// Theorem 4 aggregate predicted from a theorem 3 aggregate of lambda'.
GExpansion omega_image(const GExpansion &thm3_of_conjugate);
bool same_terms(const Expansion &a, const Expansion &b);
bool same_aggregate(const GExpansion &a, const GExpansion &b);

// Integer expansions of det[h_{a_i - i + j}] and det[e_{a_i - i + j}] as
// sorted index multisets.
using IntExpansion = std::map<Partition, mpz_class>;
IntExpansion jacobi_trudi(const Composition &alpha);
IntExpansion nagelsbach_kotska(const Composition &alpha);
// Theorem 1 at q = t multiplied out against Jacobi-Trudi of lambda, and
// Jacobi-Trudi against P_lambda(t,t).
bool schur_check(const Partition &lambda);
// Theorem 2 at q = t against det[e_{lambda'_i - i + j}] and P_lambda(t,t).
bool nk_check(const Partition &lambda);

// Renderers; output depends only on the expansion.
nlohmann::json to_json(const Expansion &x);
nlohmann::json to_json(const GResult &x);
std::string render_text(const Expansion &x);
std::string render_text(const GResult &x);
std::string render_latex(const Expansion &x);
std::string render_latex(const GResult &x);
std::string latex(const QTRational &r);

} // namespace macjt::expansion
