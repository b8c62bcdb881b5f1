#include "macjt/expansion/expansion.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "macjt/error.hpp"
#include "macjt/expansion/linsolve.hpp"
#include "macjt/symfunc/macdonald.hpp"

namespace macjt::expansion {

using coef::USpec;

namespace {

bool weakly_decreasing(const Composition &a)
{
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] > a[i - 1]) return false;
    return true;
}

Composition padded(const Partition &lambda, int ambient, int fallback)
{
    int len = ambient > 0 ? ambient : std::max(fallback, 1);
    if (len < fallback)
        throw MathError(ErrorCode::IndexOutOfRange,
                        "ambient length " + std::to_string(ambient) + " too small for " + lambda.to_string());
    Composition out(len, 0);
    for (int i = 0; i < len; ++i) out[i] = lambda[i];
    return out;
}

// All theta in N^n with |theta| <= bound.
void for_each_theta(std::size_t n, int bound, const std::function<void(const ThetaVector &)> &fn)
{
    ThetaVector th(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            fn(th);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            th[i] = x;
            rec(i + 1, left - x);
        }
        th[i] = 0;
    };
    rec(0, bound);
}

QTRational coefficient(const ThetaVector &theta, const USpec &u, bool swap, bool q_equals_t)
{
    USpec v = u;
    if (swap)
        for (auto &[a, b] : v.exps) std::swap(a, b);
    if (q_equals_t) return coef::C_at_q_equals_t(theta, v);
    QTRational c = coef::C_coefficient(theta, v).value;
    return swap ? c.swapped() : c;
}

Partition sorted(Composition idx)
{
    std::sort(idx.begin(), idx.end(), std::greater<>());
    while (!idx.empty() && idx.back() == 0) idx.pop_back();
    return Partition(idx);
}

int sum(const std::vector<int> &v) { return std::accumulate(v.begin(), v.end(), 0); }

Composition parts_from_multiplicities(const Composition &m)
{
    Composition parts;
    for (int i = static_cast<int>(m.size()); i >= 1; --i) parts.insert(parts.end(), m[i - 1], i);
    return parts;
}

// Shared enumeration for theorems 3 and 4. base[k] is lambda_k (theorem 3)
// or sum_{j >= k} m_j (theorem 4); u_exps(theta, k) gives the exponent
// pairs of the k-th factor's specialization.
using UBuilder = std::function<USpec(const ThetaMatrix &, std::size_t)>;

GResult matrix_expand(int theorem, const Composition &lambda, const Composition &base, const Partition &source,
                      bool q_equals_t, bool swap, const UBuilder &build_u)
{
    GResult out;
    out.theorem = theorem;
    out.lambda = lambda;
    out.source = source;
    out.q_equals_t = q_equals_t;
    const std::size_t L = base.size();
    ThetaMatrix th(L, std::vector<int>(L, 0));

    auto index = [&](std::size_t k) {
        int v = base[k];
        for (std::size_t j = k + 1; j < L; ++j) v += th[k][j];
        for (std::size_t j = 0; j < k; ++j) v -= th[j][k];
        return v;
    };

    auto emit = [&] {
        QTRational c(1);
        for (std::size_t k = 1; k < L && !c.is_zero(); ++k) {
            ThetaVector col(k);
            for (std::size_t i = 0; i < k; ++i) col[i] = th[i][k];
            c *= coefficient(col, build_u(th, k), swap, q_equals_t);
        }
        if (c.is_zero()) return;
        Composition idx(L);
        for (std::size_t k = 0; k < L; ++k) idx[k] = index(k);
        out.terms.push_back({th, c, idx});
        auto [it, fresh] = out.aggregate.emplace(sorted(idx), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.aggregate.erase(it);
        }
    };

    // Columns from the last one backwards; column j may lower index j by at
    // most its current value.
    std::function<void(std::size_t)> column = [&](std::size_t j) {
        if (j == 0) {
            emit();
            return;
        }
        const int bound = index(j);
        if (bound < 0) return;
        for_each_theta(j, bound, [&](const ThetaVector &col) {
            for (std::size_t i = 0; i < j; ++i) th[i][j] = col[i];
            column(j - 1);
        });
        for (std::size_t i = 0; i < j; ++i) th[i][j] = 0;
    };
    column(L - 1);
    return out;
}

SymFunc schur(const Composition &target, int cap)
{
    return sym::macdonald_P(to_partition(target), cap).q_equals_t();
}

IntExpansion determinant_expansion(const Composition &alpha)
{
    const std::size_t l = alpha.size();
    IntExpansion out;
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Composition idx(l);
        bool zero = false;
        for (std::size_t i = 0; i < l; ++i) {
            idx[i] = alpha[i] - static_cast<int>(i) + perm[i];
            if (idx[i] < 0) zero = true;
        }
        if (zero) continue;
        int inversions = 0;
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inversions;
        auto &c = out[sorted(idx)];
        c += inversions % 2 ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
    return out;
}

void add_product(IntExpansion &acc, const mpz_class &c, int row, const IntExpansion &rest)
{
    for (const auto &[mu, d] : rest) {
        Composition idx = mu.parts();
        idx.push_back(row);
        acc[sorted(idx)] += c * d;
    }
}

bool integer_coefficient(const QTRational &c, mpz_class &out)
{
    if (!c.is_constant()) return false;
    const mpq_class v = c.constant_value();
    if (v.get_den() != 1) return false;
    out = v.get_num();
    return true;
}

} // namespace

Expansion theorem1_expand_composition(const Composition &lambda, bool q_equals_t)
{
    Expansion out;
    out.lambda = lambda;
    out.q_equals_t = q_equals_t;
    if (lambda.empty()) throw MathError(ErrorCode::IndexOutOfRange, "empty index");
    for (int x : lambda)
        if (x < 0) throw MathError(ErrorCode::IndexOutOfRange, "negative entry in index");
    if (weakly_decreasing(lambda)) out.source = to_partition(lambda);
    const std::size_t n = lambda.size() - 1;
    const USpec u = USpec::from_partition(lambda);
    for_each_theta(n, lambda[n], [&](const ThetaVector &th) {
        QTRational c = coefficient(th, u, false, q_equals_t);
        if (c.is_zero()) return;
        Composition target(lambda.begin(), lambda.end() - 1);
        for (std::size_t i = 0; i < n; ++i) target[i] += th[i];
        const bool ok = weakly_decreasing(target);
        ExpansionTerm term{th, std::move(c), lambda[n] - sum(th), target, ok};
        (ok ? out.terms : out.off_basis).push_back(std::move(term));
    });
    return out;
}

Expansion theorem1_expand(const Partition &lambda, int ambient, bool q_equals_t)
{
    return theorem1_expand_composition(padded(lambda, ambient, static_cast<int>(lambda.length())), q_equals_t);
}

Expansion theorem2_expand(const Partition &lambda, int ambient, bool q_equals_t)
{
    const int L = ambient > 0 ? ambient : std::max(lambda[0], 1);
    if (L < lambda[0])
        throw MathError(ErrorCode::IndexOutOfRange,
                        "ambient " + std::to_string(L) + " below the largest part of " + lambda.to_string());
    const std::size_t n = L - 1;
    Composition m(L);
    for (int i = 1; i <= L; ++i) m[i - 1] = static_cast<int>(lambda.multiplicity(i));
    Expansion out;
    out.theorem = 2;
    out.lambda = m;
    out.source = lambda;
    out.q_equals_t = q_equals_t;
    // C^{(t,q)} at u_k = q^{n-k} t^{m_k + ... + m_n}
    USpec u;
    for (std::size_t k = 1; k <= n; ++k) {
        int tail = 0;
        for (std::size_t j = k; j <= n; ++j) tail += m[j - 1];
        u.exps.emplace_back(static_cast<int>(n - k), tail);
    }
    for_each_theta(n, m[n], [&](const ThetaVector &th) {
        QTRational c = coefficient(th, u, true, q_equals_t);
        if (c.is_zero()) return;
        Composition mult(n);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            mult[i] = m[i] + th[i] - (i + 1 < n ? th[i + 1] : 0);
            if (i + 1 == n) mult[i] += m[n];
            if (mult[i] < 0) ok = false;
        }
        ExpansionTerm term{th, std::move(c), m[n] - sum(th), ok ? parts_from_multiplicities(mult) : mult, ok};
        (ok ? out.terms : out.off_basis).push_back(std::move(term));
    });
    return out;
}

GResult theorem3_expand(const Partition &lambda, int ambient, bool q_equals_t)
{
    const Composition lam = padded(lambda, ambient, static_cast<int>(lambda.length()));
    // u_i = q^{lambda_i - lambda_{k+1} + sum_{j >= k+2} (theta_ij - theta_{k+1,j})} t^{k-i}, i = 1..k
    UBuilder build = [&lam](const ThetaMatrix &th, std::size_t k) {
        const std::size_t L = lam.size();
        USpec u;
        for (std::size_t i = 0; i < k; ++i) {
            int a = lam[i] - lam[k];
            for (std::size_t j = k + 1; j < L; ++j) a += th[i][j] - th[k][j];
            u.exps.emplace_back(a, static_cast<int>(k - 1 - i));
        }
        return u;
    };
    return matrix_expand(3, lam, lam, lambda, q_equals_t, false, build);
}

GResult theorem4_expand(const Partition &lambda, int ambient, bool q_equals_t)
{
    const int L = ambient > 0 ? ambient : std::max(lambda[0], 1);
    if (L < lambda[0])
        throw MathError(ErrorCode::IndexOutOfRange,
                        "ambient " + std::to_string(L) + " below the largest part of " + lambda.to_string());
    Composition m(L);
    for (int i = 1; i <= L; ++i) m[i - 1] = static_cast<int>(lambda.multiplicity(i));
    Composition base(L, 0);
    for (int k = 0; k < L; ++k)
        for (int j = k; j < L; ++j) base[k] += m[j];
    // C^{(t,q)} at u_i = q^{k-i} t^{m_i + ... + m_k + sum_{j >= k+2} (theta_ij - theta_{k+1,j})}
    UBuilder build = [m](const ThetaMatrix &th, std::size_t k) {
        const std::size_t L = m.size();
        USpec u;
        for (std::size_t i = 0; i < k; ++i) {
            int b = 0;
            for (std::size_t j = i; j < k; ++j) b += m[j];
            for (std::size_t j = k + 1; j < L; ++j) b += th[i][j] - th[k][j];
            u.exps.emplace_back(static_cast<int>(k - 1 - i), b);
        }
        return u;
    };
    GResult out = matrix_expand(4, m, base, lambda, q_equals_t, true, build);
    return out;
}

SymFunc reconstruct(const Expansion &x, int cap)
{
    SymFunc out(cap);
    for (const auto &term : x.terms) {
        const Partition target = to_partition(term.target);
        SymFunc left = x.theorem == 1 ? sym::g(term.row, cap) : sym::e(term.row, cap);
        SymFunc right = x.theorem == 1 ? sym::macdonald_Q(target, cap) : sym::macdonald_P(target, cap);
        if (x.q_equals_t) {
            left = left.q_equals_t();
            right = right.q_equals_t();
        }
        out += left * right * term.coefficient;
    }
    return out;
}

SymFunc reconstruct(const GResult &x, int cap)
{
    SymFunc out(cap);
    for (const auto &[mu, c] : x.aggregate) {
        SymFunc prod = x.theorem == 3 ? sym::g_product(mu.parts(), cap) : sym::e_product(mu.parts(), cap);
        if (x.q_equals_t) prod = prod.q_equals_t();
        out += prod * c;
    }
    return out;
}

std::map<ThetaVector, QTRational> inverse_pieri_oracle(const Partition &lambda, int ambient)
{
    const Composition lam = padded(lambda, ambient, static_cast<int>(lambda.length()));
    const std::size_t n = lam.size() - 1;
    const int w = lambda.weight();
    std::vector<ThetaVector> cand;
    std::vector<std::map<Partition, QTRational>> cols;
    for_each_theta(n, lam[n], [&](const ThetaVector &th) {
        Composition target(lam.begin(), lam.end() - 1);
        for (std::size_t i = 0; i < n; ++i) target[i] += th[i];
        if (!weakly_decreasing(target)) return;
        cand.push_back(th);
        const SymFunc prod = sym::macdonald_Q({lam[n] - sum(th)}, w) * sym::macdonald_Q(to_partition(target), w);
        cols.push_back(sym::expand_in_Q_basis(prod));
    });
    const auto kappas = partitions_of(w);
    std::vector<std::vector<QTRational>> A(kappas.size(), std::vector<QTRational>(cand.size()));
    std::vector<QTRational> b(kappas.size());
    for (std::size_t r = 0; r < kappas.size(); ++r) {
        if (kappas[r] == lambda) b[r] = 1;
        for (std::size_t c = 0; c < cand.size(); ++c)
            if (auto it = cols[c].find(kappas[r]); it != cols[c].end()) A[r][c] = it->second;
    }
    const auto x = solve_exact(std::move(A), std::move(b));
    std::map<ThetaVector, QTRational> out;
    for (std::size_t c = 0; c < cand.size(); ++c) out.emplace(cand[c], x[c]);
    return out;
}

GExpansion g_basis_expansion(const SymFunc &f, int weight)
{
    static std::mutex mu;
    static std::map<int, std::vector<std::map<Partition, QTRational>>> cols_by_weight;
    const auto basis = partitions_of(weight);
    std::vector<std::map<Partition, QTRational>> cols;
    {
        std::lock_guard lock(mu);
        auto it = cols_by_weight.find(weight);
        if (it == cols_by_weight.end()) {
            std::vector<std::map<Partition, QTRational>> fresh;
            for (const auto &mu_ : basis) fresh.push_back(sym::expand_in_Q_basis(sym::g_product(mu_.parts(), weight)));
            it = cols_by_weight.emplace(weight, std::move(fresh)).first;
        }
        cols = it->second;
    }
    const auto rhs = sym::expand_in_Q_basis(f.homogeneous(weight));
    std::vector<std::vector<QTRational>> A(basis.size(), std::vector<QTRational>(basis.size()));
    std::vector<QTRational> b(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        if (auto it = rhs.find(basis[r]); it != rhs.end()) b[r] = it->second;
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (auto it = cols[c].find(basis[r]); it != cols[c].end()) A[r][c] = it->second;
    }
    const auto x = solve_exact(std::move(A), std::move(b));
    GExpansion out;
    for (std::size_t c = 0; c < basis.size(); ++c)
        if (!x[c].is_zero()) out.emplace(basis[c], x[c]);
    return out;
}

std::map<Partition, QTRational> pieri_round_trip(const Expansion &x)
{
    if (x.theorem != 1) throw MathError(ErrorCode::IndexOutOfRange, "round trip needs a theorem 1 expansion");
    std::map<Partition, QTRational> out;
    for (const auto &term : x.terms) {
        const int n = static_cast<int>(term.target.size());
        for (const auto &[th, psi] : coef::pieri_psi(term.row, to_partition(term.target), n)) {
            Composition kappa = term.target;
            for (int i = 0; i < n; ++i) kappa[i] += th[i];
            kappa.push_back(term.row - sum(th));
            auto [it, fresh] = out.emplace(to_partition(kappa), term.coefficient * psi);
            if (!fresh) it->second += term.coefficient * psi;
        }
    }
    std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
    return out;
}

Expansion omega_image(const Expansion &thm1)
{
    Expansion out;
    out.theorem = 2;
    out.q_equals_t = thm1.q_equals_t;
    out.source = thm1.source.conjugate();
    const int L = static_cast<int>(thm1.lambda.size());
    out.lambda.assign(L, 0);
    for (int i = 1; i <= L; ++i) out.lambda[i - 1] = static_cast<int>(out.source.multiplicity(i));
    auto map_term = [&](const ExpansionTerm &t) {
        ExpansionTerm r{t.theta, out.q_equals_t ? t.coefficient : t.coefficient.swapped(), t.row, {}, t.in_basis};
        if (t.in_basis) {
            r.target = to_partition(t.target).conjugate().parts();
        } else {
            r.target.resize(t.target.size());
            for (std::size_t i = 0; i < t.target.size(); ++i)
                r.target[i] = t.target[i] - (i + 1 < t.target.size() ? t.target[i + 1] : 0);
        }
        return r;
    };
    for (const auto &t : thm1.terms) out.terms.push_back(map_term(t));
    for (const auto &t : thm1.off_basis) out.off_basis.push_back(map_term(t));
    return out;
}

GExpansion omega_image(const GExpansion &thm3)
{
    GExpansion out;
    for (const auto &[mu, c] : thm3) out.emplace(mu, c.swapped());
    return out;
}

bool same_terms(const Expansion &a, const Expansion &b)
{
    auto eq = [](const std::vector<ExpansionTerm> &x, const std::vector<ExpansionTerm> &y) {
        if (x.size() != y.size()) return false;
        for (const auto &s : x) {
            auto it = std::find_if(y.begin(), y.end(), [&](const ExpansionTerm &t) { return t.theta == s.theta; });
            if (it == y.end() || it->row != s.row || it->target != s.target || it->coefficient != s.coefficient)
                return false;
        }
        return true;
    };
    return eq(a.terms, b.terms) && eq(a.off_basis, b.off_basis);
}

bool same_aggregate(const GExpansion &a, const GExpansion &b)
{
    if (a.size() != b.size()) return false;
    for (const auto &[mu, c] : a) {
        auto it = b.find(mu);
        if (it == b.end() || it->second != c) return false;
    }
    return true;
}

IntExpansion jacobi_trudi(const Composition &alpha) { return determinant_expansion(alpha); }

IntExpansion nagelsbach_kotska(const Composition &alpha) { return determinant_expansion(alpha); }

bool schur_check(const Partition &lambda)
{
    const Expansion x = theorem1_expand(lambda, 0, true);
    IntExpansion lhs;
    for (const auto *list : {&x.terms, &x.off_basis})
        for (const auto &term : *list) {
            mpz_class c;
            if (!integer_coefficient(term.coefficient, c)) return false;
            add_product(lhs, c, term.row, jacobi_trudi(term.target));
        }
    std::erase_if(lhs, [](const auto &kv) { return kv.second == 0; });
    const IntExpansion jt = jacobi_trudi(lambda.parts());
    if (lhs != jt) return false;
    const int w = std::max(lambda.weight(), 1);
    SymFunc s(w);
    for (const auto &[mu, c] : jt) s += sym::h_product(mu.parts(), w) * QTRational(mpq_class(c));
    return s == schur(lambda.parts(), w);
}

bool nk_check(const Partition &lambda)
{
    const Expansion x = theorem2_expand(lambda, 0, true);
    IntExpansion lhs;
    for (const auto *list : {&x.terms, &x.off_basis})
        for (const auto &term : *list) {
            mpz_class c;
            if (!integer_coefficient(term.coefficient, c)) return false;
            // conjugate of the P index, read from parts or multiplicities
            Composition conj;
            if (term.in_basis) {
                conj = to_partition(term.target).conjugate().parts();
            } else {
                conj.assign(term.target.size(), 0);
                for (std::size_t i = 0; i < term.target.size(); ++i)
                    for (std::size_t j = i; j < term.target.size(); ++j) conj[i] += term.target[j];
            }
            add_product(lhs, c, term.row, nagelsbach_kotska(conj));
        }
    std::erase_if(lhs, [](const auto &kv) { return kv.second == 0; });
    const IntExpansion nk = nagelsbach_kotska(lambda.conjugate().parts());
    if (lhs != nk) return false;
    const int w = std::max(lambda.weight(), 1);
    SymFunc s(w);
    for (const auto &[mu, c] : nk) s += sym::e_product(mu.parts(), w) * QTRational(mpq_class(c));
    return s == schur(lambda.parts(), w);
}

} // namespace macjt::expansion
