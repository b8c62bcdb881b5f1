#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>

#include "macjt/arith/eps.hpp"
#include "macjt/coefficients/coefficients.hpp"
#include "macjt/error.hpp"
#include "macjt/operators/hfunction.hpp"

namespace macjt::coef {

using arith::EpsPolynomial;

namespace {

// c * (1 + w eps)
struct Perturbed {
    QTRational base;
    long w = 0;

    EpsPolynomial series() const { return EpsPolynomial::linear(base, base * QTRational(w)); }
    Perturbed times(const QTRational &c) const { return {base * c, w}; }
};

EpsPolynomial diff(const Perturbed &x, const Perturbed &y)
{
    return EpsPolynomial::linear(x.base - y.base, x.base * QTRational(x.w) - y.base * QTRational(y.w));
}

EpsPolynomial power(const Perturbed &x, int e, int order)
{
    EpsPolynomial r(QTRational(1));
    const EpsPolynomial s = x.series();
    for (int i = 0; i < e; ++i) r = r.mul(s, order);
    return r;
}

QTRational mono(int a, int b) { return QTRational::monomial(1, a, b); }

std::vector<long> default_weights(std::size_t n, int which)
{
    std::vector<long> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        const long K = static_cast<long>(k);
        w[k] = which == 0 ? 1 + K + K * K * K : 2 + 3 * K + 2 * K * K;
    }
    return w;
}

std::mutex stats_mu;
CStats stats;

std::mutex memo_mu;
std::map<std::pair<ThetaVector, USpec>, CValue> memo;
std::optional<std::pair<ThetaVector, USpec>> fault;

CValue compute(const ThetaVector &theta, const USpec &spec, const std::vector<long> &weights)
{
    const std::size_t n = spec.size();
    if (theta.size() != n) throw MathError(ErrorCode::DegenerateConfig, "theta and u lengths differ");
    for (int x : theta)
        if (x < 0) return {};
    if (n == 0) return {QTRational(1), false};

    std::vector<Perturbed> u(n + 1), v(n);
    for (std::size_t k = 0; k < n; ++k) {
        u[k] = {mono(spec.exps[k].first, spec.exps[k].second), weights[k]};
        v[k] = u[k].times(mono(theta[k], 0));
    }
    u[n] = {mono(0, -1), 0};
    const QTRational t = QTRational::t();

    std::vector<EpsPolynomial> num_f, den_f;
    for (std::size_t i = 0; i < n; ++i) {
        for (int l = 0; l < theta[i]; ++l) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                num_f.push_back(diff(u[j], u[i].times(mono(l + 1, -1))));
                den_f.push_back(diff(u[j], u[i].times(mono(l + 1, 0))));
            }
            for (std::size_t j = i; j < n; ++j) {
                num_f.push_back(diff(v[j], u[i].times(mono(l, 1))));
                den_f.push_back(diff(v[j], u[i].times(mono(l, 0))));
            }
        }
    }
    // Row i of the determinant is cleared by D_i = prod_k (t u_k - v_i).
    std::vector<std::vector<EpsPolynomial>> row_d(n), row_n(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= n; ++k) {
            row_d[i].push_back(diff(u[k].times(t), v[i]));
            row_n[i].push_back(diff(u[k], v[i]));
            den_f.push_back(row_d[i].back());
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) den_f.push_back(diff(v[i], v[j]));

    int order = 0;
    for (const auto &f : den_f) {
        const int o = f.order();
        if (o < 0) throw MathError(ErrorCode::DegenerateConfig, "a denominator factor vanishes identically");
        order += o;
    }

    auto product = [order](const std::vector<EpsPolynomial> &fs) {
        EpsPolynomial r(QTRational(1));
        for (const auto &f : fs) r = r.mul(f, order);
        return r;
    };
    std::vector<std::vector<EpsPolynomial>> m(n, std::vector<EpsPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const EpsPolynomial D = product(row_d[i]), N = product(row_n[i]);
        for (std::size_t j = 1; j <= n; ++j) {
            const EpsPolynomial inner = D - N * EpsPolynomial(mono(0, static_cast<int>(j)));
            m[i][j - 1] = power(v[i], static_cast<int>(n - j), order).mul(inner, order);
        }
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    EpsPolynomial det;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inversions;
        EpsPolynomial term(QTRational(1));
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term.mul(m[i][perm[i]], order);
        det = inversions % 2 ? det - term : det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    const EpsPolynomial num = product(num_f).mul(det, order);
    const EpsPolynomial den = product(den_f);
    try {
        return {arith::eps_limit(num, den), order > 0};
    } catch (const MathError &e) {
        if (e.code() != ErrorCode::GenuinePole) throw;
        throw MathError(ErrorCode::GenuinePole, "C at theta=" + nlohmann::json(theta).dump() + ", u=" +
                                                    spec.to_string() + " has no limit");
    }
}

} // namespace

USpec USpec::from_partition(const std::vector<int> &lam)
{
    USpec s;
    if (lam.empty()) return s;
    const std::size_t n = lam.size() - 1;
    for (std::size_t k = 0; k < n; ++k) s.exps.emplace_back(lam[k] - lam[n], static_cast<int>(n - 1 - k));
    return s;
}

USpec USpec::shifted_q(int k, int dq) const
{
    USpec s = *this;
    s.exps.at(static_cast<std::size_t>(k)).first += dq;
    return s;
}

USpec USpec::scaled_q(int dq) const
{
    USpec s = *this;
    for (auto &e : s.exps) e.first += dq;
    return s;
}

std::string USpec::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < exps.size(); ++k) {
        if (k) os << ", ";
        os << mono(exps[k].first, exps[k].second).to_string();
    }
    os << ")";
    return os.str();
}


CValue C_coefficient_along(const ThetaVector &theta, const USpec &u, const std::vector<long> &weights)
{
    if (weights.size() < u.size()) throw MathError(ErrorCode::DegenerateConfig, "too few perturbation weights");
    return compute(theta, u, weights);
}

namespace {

CValue with_fault(const std::pair<ThetaVector, USpec> &key, CValue c)
{
    if (fault && *fault == key) c.value = -c.value;
    return c;
}

} // namespace

CValue C_coefficient(const ThetaVector &theta, const USpec &u)
{
    for (int x : theta)
        if (x < 0) return {};
    const auto key = std::make_pair(theta, u);
    {
        std::lock_guard lock(memo_mu);
        if (auto it = memo.find(key); it != memo.end()) return with_fault(key, it->second);
    }
    CValue c = compute(theta, u, default_weights(u.size(), 0));
    bool mismatch = false;
    if (c.regularized) {
        const CValue c2 = compute(theta, u, default_weights(u.size(), 1));
        mismatch = c2.value != c.value;
    }
    {
        std::lock_guard lock(stats_mu);
        ++stats.evaluations;
        if (c.regularized) {
            ++stats.regularized;
            ++stats.direction_checks;
            if (mismatch) ++stats.direction_mismatches;
        }
    }
    if (mismatch)
        throw MathError(ErrorCode::IdentityViolated, "regularized C depends on the perturbation direction at theta=" +
                                                         nlohmann::json(theta).dump() + ", u=" + u.to_string());
    std::lock_guard lock(memo_mu);
    memo.emplace(key, c);
    return with_fault(key, c);
}

void inject_sign_fault(const ThetaVector &theta, const USpec &u)
{
    std::lock_guard lock(memo_mu);
    fault = std::make_pair(theta, u);
}

void clear_fault()
{
    std::lock_guard lock(memo_mu);
    fault.reset();
}

QTRational C_at_q_equals_t(const ThetaVector &theta, const USpec &u) { return C_coefficient(theta, u).value.q_equals_t(); }

CStats c_stats()
{
    std::lock_guard lock(stats_mu);
    return stats;
}

void reset_c_stats()
{
    std::lock_guard lock(stats_mu);
    stats = {};
}

void clear_c_memo()
{
    std::lock_guard lock(memo_mu);
    memo.clear();
}

namespace {

template <typename F>
F checked_div(const F &a, const F &b)
{
    if (ops::field_is_zero(b)) throw MathError(ErrorCode::DegenerateConfig, "division by zero in a C form");
    return a / b;
}

template <typename F>
F poch(const F &x, const F &q, int k)
{
    F r(1), ql(1);
    for (int l = 0; l < k; ++l) {
        r = r * (F(1) - ql * x);
        ql = ql * q;
    }
    return r;
}

template <typename F>
F det_factor(const ThetaVector &theta, const std::vector<F> &u, const std::vector<F> &v, const F &t, bool first)
{
    const std::size_t n = theta.size();
    std::vector<std::vector<F>> m(n, std::vector<F>(n));
    for (std::size_t i = 0; i < n; ++i) {
        F prod(1);
        const std::size_t kmax = first ? n : n + 1;
        for (std::size_t k = 0; k < kmax; ++k) prod = prod * checked_div(F(u[k] - v[i]), F(t * u[k] - v[i]));
        if (first) prod = prod * checked_div(F(F(1) - t * v[i]), F(F(1) - v[i]));
        for (std::size_t j = 1; j <= n; ++j) {
            const F tj = ops::field_pow(t, first ? static_cast<int>(j) - 1 : static_cast<int>(j));
            m[i][j - 1] = ops::field_pow(v[i], static_cast<int>(n - j)) * (F(1) - tj * prod);
        }
    }
    F delta(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) delta = delta * (v[i] - v[j]);
    return checked_div(ops::determinant(m), delta);
}

} // namespace

template <typename F>
F C_first_form(const ThetaVector &theta, const std::vector<F> &u, const F &q, const F &t)
{
    const std::size_t n = theta.size();
    std::vector<F> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = ops::field_pow(q, theta[k]) * u[k];
    F c(1);
    for (std::size_t k = 0; k < n; ++k) {
        c = c * ops::field_pow(t, theta[k]);
        c = c * checked_div(poch(F(q / t), q, theta[k]), poch(q, q, theta[k]));
        c = c * checked_div(poch(F(q * u[k]), q, theta[k]), poch(F(q * t * u[k]), q, theta[k]));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            c = c * checked_div(poch(F(q * u[i] / (t * u[j])), q, theta[i]), poch(F(q * u[i] / u[j]), q, theta[i]));
            c = c * checked_div(poch(F(t * u[i] / v[j]), q, theta[i]), poch(F(u[i] / v[j]), q, theta[i]));
        }
    return c * det_factor(theta, u, v, t, true);
}

template <typename F>
F C_second_form(const ThetaVector &theta, const std::vector<F> &u_in, const F &q, const F &t)
{
    const std::size_t n = theta.size();
    std::vector<F> u = u_in;
    u.resize(n);
    u.push_back(F(1) / t);
    std::vector<F> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = ops::field_pow(q, theta[k]) * u[k];
    F c(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j)
            c = c * checked_div(poch(F(q * u[i] / (t * u[j])), q, theta[i]), poch(F(q * u[i] / u[j]), q, theta[i]));
        for (std::size_t j = i; j < n; ++j)
            c = c * checked_div(poch(F(t * u[i] / v[j]), q, theta[i]), poch(F(u[i] / v[j]), q, theta[i]));
    }
    return c * det_factor(theta, u, v, t, false);
}

template mpq_class C_first_form(const ThetaVector &, const std::vector<mpq_class> &, const mpq_class &,
                                const mpq_class &);
template mpq_class C_second_form(const ThetaVector &, const std::vector<mpq_class> &, const mpq_class &,
                                 const mpq_class &);
template QTRational C_second_form(const ThetaVector &, const std::vector<QTRational> &, const QTRational &,
                                  const QTRational &);

int compare_C_forms(int n, int max_theta, int samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 13), th(0, max_theta);
    auto draw = [&] {
        mpq_class x;
        do {
            x = mpq_class(num(rng), den(rng));
            x.canonicalize();
        } while (x == 0 || x == 1 || x == -1);
        return x;
    };
    int bad = 0, done = 0;
    while (done < samples) {
        ThetaVector theta(static_cast<std::size_t>(n));
        for (auto &x : theta) x = th(rng);
        const mpq_class q = draw(), t = draw();
        std::vector<mpq_class> u(static_cast<std::size_t>(n));
        for (auto &x : u) x = draw();
        try {
            if (C_first_form(theta, u, q, t) != C_second_form(theta, u, q, t)) ++bad;
            ++done;
        } catch (const MathError &e) {
            if (e.code() != ErrorCode::DegenerateConfig) throw;
        }
    }
    return bad;
}


} // namespace macjt::coef
