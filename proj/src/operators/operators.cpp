#include "macjt/operators/operators.hpp"

#include <map>

#include "macjt/error.hpp"

namespace macjt::ops {

namespace {

// p / (x_a - x_b), or NotSymmetric.
PolyInVars divide_binomial(const PolyInVars &p, int a, int b)
{
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    // Group by the exponent of x_a; keys are the remaining exponents.
    std::map<int, std::map<sym::Exponents, QTRational>> by_deg;
    for (const auto &[e, c] : p.terms()) {
        sym::Exponents rest = e;
        rest[ua] = 0;
        by_deg[e[ua]][rest] = c;
    }
    PolyInVars quotient(p.n_vars());
    if (by_deg.empty()) return quotient;
    // P_d = Q_{d-1} - x_b Q_d, solved from the top degree down.
    std::map<sym::Exponents, QTRational> carry; // x_b * Q_d
    const int top = by_deg.rbegin()->first;
    for (int d = top; d >= 1; --d) {
        std::map<sym::Exponents, QTRational> qd = carry;
        if (auto it = by_deg.find(d); it != by_deg.end())
            for (const auto &[e, c] : it->second) {
                auto [pos, ins] = qd.emplace(e, c);
                if (!ins) pos->second += c;
            }
        carry.clear();
        for (const auto &[e, c] : qd) {
            if (c.is_zero()) continue;
            sym::Exponents full = e;
            full[ua] = d - 1;
            quotient.add_term(full, c);
            sym::Exponents shifted = e;
            ++shifted[ub];
            carry[shifted] += c;
        }
    }
    // Constant part in x_a must cancel: P_0 + x_b Q_0 = 0.
    std::map<sym::Exponents, QTRational> rem = carry;
    if (auto it = by_deg.find(0); it != by_deg.end())
        for (const auto &[e, c] : it->second) rem[e] += c;
    for (const auto &[e, c] : rem)
        if (!c.is_zero()) throw MathError(ErrorCode::NotSymmetric, "division by a Vandermonde factor is not exact");
    return quotient;
}

} // namespace

PolyInVars shift_q(const PolyInVars &f, int i)
{
    PolyInVars out(f.n_vars());
    for (const auto &[e, c] : f.terms()) out.add_term(e, c * QTRational::monomial(1, e[static_cast<std::size_t>(i)], 0));
    return out;
}

PolyInVars vandermonde(int n, const std::vector<bool> &t_scaled)
{
    auto var = [&](int i) {
        PolyInVars x = PolyInVars::variable(n, i);
        if (!t_scaled.empty() && t_scaled[static_cast<std::size_t>(i)]) x = x * QTRational::t();
        return x;
    };
    PolyInVars d(n, QTRational(1));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) d = d * (var(a) - var(b));
    return d;
}

PolyInVars divide_by_vandermonde(const PolyInVars &p)
{
    PolyInVars r = p;
    const int n = p.n_vars();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) r = divide_binomial(r, a, b);
    return r;
}

PolyInVars apply_E(const PolyInVars &f)
{
    const int n = f.n_vars();
    PolyInVars num(n);
    for (int i = 0; i < n; ++i) {
        // 1/prod_{k != i}(x_i - x_k) = (-1)^i Delta_{[n]\i} / Delta
        PolyInVars term = shift_q(f, i);
        const PolyInVars xi = PolyInVars::variable(n, i);
        for (int k = 0; k < n; ++k)
            if (k != i) term = term * (xi * QTRational::t() - PolyInVars::variable(n, k));
        PolyInVars other(n, QTRational(1));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (a != i && b != i) other = other * (PolyInVars::variable(n, a) - PolyInVars::variable(n, b));
        term = term * other;
        num += (i % 2) ? -term : term;
    }
    return divide_by_vandermonde(num);
}

std::vector<PolyInVars> apply_D(const PolyInVars &f)
{
    // Rows only involve their own variable, so the operator determinant
    // splits over the set S of rows taking the shift: a^{|S|} Delta(y_S) T_S f
    // with y_i = t x_i on S.
    const int n = f.n_vars();
    std::vector<PolyInVars> out(static_cast<std::size_t>(n) + 1, PolyInVars(n));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> in_s(static_cast<std::size_t>(n));
        PolyInVars shifted = f;
        int size = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                in_s[static_cast<std::size_t>(i)] = true;
                shifted = shift_q(shifted, i);
                ++size;
            }
        out[static_cast<std::size_t>(size)] += vandermonde(n, in_s) * shifted;
    }
    for (auto &p : out) p = divide_by_vandermonde(p);
    return out;
}

PolyInVars apply_D_at(const PolyInVars &f, const QTRational &a)
{
    const auto parts = apply_D(f);
    PolyInVars s(f.n_vars());
    QTRational ak(1);
    for (const auto &p : parts) {
        s += p * ak;
        ak *= a;
    }
    return s;
}

QTRational E_eigenvalue(const Partition &lambda, int n)
{
    QTRational s;
    for (int i = 1; i <= n; ++i) s += QTRational::monomial(1, lambda.part(static_cast<std::size_t>(i)), n - i);
    return s;
}

APolynomial D_eigenvalue(const Partition &lambda, int n)
{
    APolynomial r{{QTRational(1)}};
    for (int i = 1; i <= n; ++i) {
        const QTRational x = QTRational::monomial(1, lambda.part(static_cast<std::size_t>(i)), n - i);
        std::vector<QTRational> next(r.coeffs.size() + 1);
        for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
            next[k] += r.coeffs[k];
            next[k + 1] += r.coeffs[k] * x;
        }
        r.coeffs = std::move(next);
    }
    return r;
}

} // namespace macjt::ops
