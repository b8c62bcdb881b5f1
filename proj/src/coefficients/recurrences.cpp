#include "macjt/coefficients/coefficients.hpp"
#include "macjt/error.hpp"
#include "macjt/io/json.hpp"
#include "macjt/symfunc/macdonald.hpp"
#include "macjt/symfunc/poly_in_vars.hpp"

namespace macjt::coef {

namespace {

QTRational mono(int a, int b) { return QTRational::monomial(1, a, b); }

// (1 - x) / (1 - y)
QTRational ratio(const QTRational &x, const QTRational &y)
{
    const QTRational d = QTRational(1) - y;
    if (d.is_zero()) throw MathError(ErrorCode::DegenerateConfig, "vanishing denominator in a recurrence coefficient");
    return (QTRational(1) - x) / d;
}

ThetaVector bump(ThetaVector th, std::size_t i, int d)
{
    th[i] += d;
    return th;
}

} // namespace

nlohmann::json CValue::to_json() const { return {{"value", io::rational_to_json(value)}, {"regularized", regularized}}; }

CFunction default_C()
{
    return [](const ThetaVector &th, const USpec &u) { return C_coefficient(th, u).value; };
}

QTRational c_k(const Composition &lambda, int k)
{
    if (k < 1 || k > static_cast<int>(lambda.size()))
        throw MathError(ErrorCode::IndexOutOfRange, "c_k index " + std::to_string(k));
    if (is_partition(lambda)) {
        Composition r = lambda;
        --r[static_cast<std::size_t>(k - 1)];
        if (!is_partition(r)) return {};
    }
    const int lk = lambda[static_cast<std::size_t>(k - 1)];
    QTRational c(1);
    for (int i = 1; i < k; ++i) {
        const int d = lambda[static_cast<std::size_t>(i - 1)] - lk;
        c *= ratio(mono(d + 1, k - i - 1), mono(d + 1, k - i));
        c *= ratio(mono(d, k - i + 1), mono(d, k - i));
    }
    return c;
}

std::map<ThetaVector, QTRational> pieri_psi(int r, const Partition &mu, int n_ambient)
{
    const std::size_t n = std::max(mu.length(), static_cast<std::size_t>(std::max(n_ambient, 0)));
    const int cap = mu.weight() + r;
    const auto prod = sym::macdonald_Q({r}, cap) * sym::macdonald_Q(mu, cap);
    std::map<ThetaVector, QTRational> out;
    for (const auto &[kappa, c] : sym::expand_in_Q_basis(prod)) {
        if (kappa.length() > n + 1)
            throw MathError(ErrorCode::IdentityViolated, "Pieri product reaches " + kappa.to_string());
        ThetaVector th(n);
        int total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            th[i] = kappa[i] - mu[i];
            total += th[i];
        }
        if (kappa[n] != r - total)
            throw MathError(ErrorCode::IdentityViolated, "Pieri product term " + kappa.to_string() + " not indexed");
        out.emplace(th, c);
    }
    return out;
}

bool check_recurrence_5(const ThetaVector &theta, const USpec &u, const CFunction &F)
{
    const std::size_t n = u.size();
    auto U = [&](std::size_t k) { return mono(u.exps[k].first, u.exps[k].second); };
    auto V = [&](std::size_t k) { return mono(u.exps[k].first + theta[k], u.exps[k].second); };
    const QTRational t = QTRational::t(), q = QTRational::q();
    QTRational lhs, rhs = F(theta, u);
    for (std::size_t i = 0; i < n; ++i) {
        QTRational a(1), b(1);
        for (std::size_t k = 0; k < i; ++k) {
            a *= ratio(q * U(k) / (t * U(i)), q * U(k) / U(i)) * ratio(t * U(k) / U(i), U(k) / U(i));
            b *= ratio(V(k) / (t * V(i)), V(k) / V(i)) * ratio(t * V(k) / (q * V(i)), V(k) / (q * V(i)));
        }
        const ThetaVector up = bump(theta, i, 1);
        lhs += a * F(up, u.shifted_q(static_cast<int>(i), -1));
        rhs += b * F(up, u);
    }
    QTRational c(1);
    for (std::size_t k = 0; k < n; ++k) c *= ratio(q * U(k), q * t * U(k)) * ratio(t * t * U(k), t * U(k));
    lhs += c * F(theta, u.scaled_q(1));
    return lhs == rhs;
}

bool check_remark_recurrence(const ThetaVector &theta, const USpec &u, const CFunction &F)
{
    const std::size_t n = u.size();
    auto U = [&](std::size_t k) { return mono(u.exps[k].first, u.exps[k].second); };
    auto V = [&](std::size_t k) { return mono(u.exps[k].first + theta[k], u.exps[k].second); };
    const QTRational t = QTRational::t(), q = QTRational::q();
    QTRational lhs = F(theta, u), rhs = F(theta, u.scaled_q(-1));
    for (std::size_t k = 0; k < n; ++k) {
        const ThetaVector down = bump(theta, k, -1);
        QTRational a(1), b = ratio(q * U(k), q * t * U(k)) * ratio(t * t * U(k), t * U(k));
        for (std::size_t i = k + 1; i < n; ++i) {
            a *= ratio(V(k) / (t * V(i)), V(k) / V(i)) * ratio(t * V(k) / (q * V(i)), V(k) / (q * V(i)));
            b *= ratio(q * U(k) / (t * U(i)), q * U(k) / U(i)) * ratio(t * U(k) / U(i), U(k) / U(i));
        }
        lhs += a * F(down, u);
        rhs += b * F(down, u.shifted_q(static_cast<int>(k), 1));
    }
    return lhs == rhs;
}

bool check_lemma2(const Partition &lambda, int N)
{
    const int cap = std::max(lambda.weight(), 1);
    const auto lhs = sym::coeff_of_last_var(sym::expand_in_variables(sym::macdonald_Q(lambda, cap), N + 1), 1);
    sym::PolyInVars rhs(N);
    const Composition lam = lambda.parts();
    for (int k = 1; k <= static_cast<int>(lam.size()); ++k) {
        const QTRational c = c_k(lam, k);
        if (c.is_zero()) continue;
        const Partition smaller = to_partition(remove_one(lambda, k));
        rhs += sym::expand_in_variables(sym::macdonald_Q(smaller, cap), N) * c;
    }
    rhs = rhs * ((QTRational(1) - QTRational::t()) / (QTRational(1) - QTRational::q()));
    return lhs == rhs;
}

} // namespace macjt::coef
