#pragma once
// The determinant function H(u;v) and the two functional equations it obeys.
//
// Everything is templated over the coefficient field so the same code runs
// symbolically (QTRational) and at exact rational points (mpq_class).

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "macjt/arith/qtrational.hpp"
#include "macjt/error.hpp"
#include "macjt/operators/operators.hpp"

namespace macjt::ops {

inline bool field_is_zero(const mpq_class &x) { return x == 0; }
inline bool field_is_zero(const QTRational &x) { return x.is_zero(); }

// Determinant by elimination with a nonzero pivot search.
template <typename F>
F determinant(std::vector<std::vector<F>> m)
{
    const std::size_t n = m.size();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && field_is_zero(m[piv][c])) ++piv;
        if (piv == n) return F(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        const F inv = F(1) / m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (field_is_zero(m[r][c])) continue;
            const F f = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
        }
    }
    return det;
}

template <typename F>
F field_pow(const F &x, int e)
{
    F r(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

// H(u;v) = Delta(v)^{-1} det[v_i^{N-j} (1 + a t^j prod_k (u_k - v_i)/(t u_k - v_i))]
// for N = u.size() = v.size(). DegenerateConfig on a vanishing denominator.
template <typename F>
APoly<F> H_det(const std::vector<F> &u, const std::vector<F> &v, const F &t)
{
    const std::size_t N = v.size();
    if (u.size() != N) throw MathError(ErrorCode::DegenerateConfig, "u and v must have the same length");
    F delta(1);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) delta = delta * (v[i] - v[j]);
    if (field_is_zero(delta)) throw MathError(ErrorCode::DegenerateConfig, "v entries are not distinct");
    std::vector<F> ratio(N, F(1));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            const F den = t * u[k] - v[i];
            if (field_is_zero(den)) throw MathError(ErrorCode::DegenerateConfig, "t u_k = v_i");
            ratio[i] = ratio[i] * (u[k] - v[i]) / den;
        }
    std::vector<F> tpow(N + 1, F(1));
    for (std::size_t j = 1; j <= N; ++j) tpow[j] = tpow[j - 1] * t;
    APoly<F> out{std::vector<F>(N + 1, F(0))};
    // Multilinearity in the rows: choose the rows S carrying the a-part.
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        std::vector<std::vector<F>> m(N, std::vector<F>(N));
        F scale(1);
        int size = 0;
        for (std::size_t i = 0; i < N; ++i) {
            const bool in_s = mask & (1u << i);
            if (in_s) {
                scale = scale * ratio[i];
                ++size;
            }
            for (std::size_t j = 1; j <= N; ++j) {
                F x = field_pow(v[i], static_cast<int>(N - j));
                m[i][j - 1] = in_s ? x * tpow[j] : x;
            }
        }
        if (field_is_zero(scale)) continue;
        out.coeffs[static_cast<std::size_t>(size)] = out.coeffs[static_cast<std::size_t>(size)] + scale * determinant(m);
    }
    for (auto &c : out.coeffs) c = c / delta;
    return out;
}

template <typename F>
bool apoly_equal(const APoly<F> &a, const APoly<F> &b)
{
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k)
        if (!(a.at(k) == b.at(k))) return false;
    return true;
}

template <typename F>
APoly<F> apoly_axpy(const APoly<F> &acc, const F &c, const APoly<F> &x)
{
    APoly<F> r = acc;
    if (r.coeffs.size() < x.coeffs.size()) r.coeffs.resize(x.coeffs.size(), F(0));
    for (std::size_t k = 0; k < x.coeffs.size(); ++k) r.coeffs[k] = r.coeffs[k] + c * x.coeffs[k];
    return r;
}

// Both sides of the functional equations at one configuration.
template <typename F>
std::pair<APoly<F>, APoly<F>> lemma1_sides(int which, const std::vector<F> &u, const std::vector<F> &v, const F &q,
                                           const F &t)
{
    const std::size_t N = u.size();
    APoly<F> lhs{std::vector<F>(N + 1, F(0))}, rhs = lhs;
    auto safe_div = [](const F &a, const F &b) {
        if (field_is_zero(b)) throw MathError(ErrorCode::DegenerateConfig, "vanishing coefficient denominator");
        return a / b;
    };
    for (std::size_t i = 0; i < N; ++i) {
        F cl(1), cr(1);
        for (std::size_t k = 0; k < N; ++k) {
            if (k != i) {
                if (which == 1) {
                    cl = cl * safe_div(v[i] / t - v[k], v[i] - v[k]);
                    cr = cr * safe_div(u[k] / t - u[i], u[k] - u[i]);
                } else {
                    cl = cl * safe_div(t * v[i] - v[k], v[i] - v[k]);
                    cr = cr * safe_div(t * u[k] - u[i], u[k] - u[i]);
                }
            }
            if (which == 1) {
                cl = cl * safe_div(F(1) - v[i] / u[k], F(1) - v[i] / (t * u[k]));
                cr = cr * safe_div(F(1) - v[k] / u[i], F(1) - v[k] / (t * u[i]));
            } else {
                cl = cl * safe_div(F(1) - q * v[i] / (t * u[k]), F(1) - q * v[i] / u[k]);
                cr = cr * safe_div(F(1) - q * v[k] / (t * u[i]), F(1) - q * v[k] / u[i]);
            }
        }
        std::vector<F> vs = v, us = u;
        if (which == 1) {
            vs[i] = v[i] / q;
            us[i] = q * u[i];
        } else {
            vs[i] = q * v[i];
            us[i] = u[i] / q;
        }
        lhs = apoly_axpy(lhs, cl, H_det(u, vs, t));
        rhs = apoly_axpy(rhs, cr, H_det(us, v, t));
    }
    return {lhs, rhs};
}

struct Lemma1Report {
    std::string lemma; // "1i" or "1ii"
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    int rejected = 0;
    std::vector<nlohmann::json> failures;

    bool passed() const { return failures.empty() && samples > 0; }
    nlohmann::json to_json() const;
};

// Random exact-rational checks of the first (which = 1) or second (which = 2) equation
// for H of size n+1. Degenerate draws are rejected and redrawn.
Lemma1Report check_lemma1(int which, int n, int samples, std::uint64_t seed);

// H(u,1/t;v,0) at a = -1 for random admissible points; returns the number of
// nonzero values seen.
int check_H_vanishing(int n, int samples, std::uint64_t seed);
// H(u,u_{n+1}/q;v,0) = H(qu,u_{n+1};qv,0) at random points; returns failures.
int check_H_substitution(int n, int samples, std::uint64_t seed);

} // namespace macjt::ops
