#include "macjt/arith/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "macjt/error.hpp"

namespace macjt::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m)
{
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n)
{
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<int> prime_divisors(int n)
{
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// A prime p = 1 (mod d) and the powers of a primitive d-th root of unity mod p.
struct RootTable {
    u64 p = 0;
    std::vector<u64> powers;
};

const RootTable &root_table(int d)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<RootTable>> cache;
    std::lock_guard lock(mu);
    auto &slot = cache[d];
    if (slot) return *slot;
    auto table = std::make_unique<RootTable>();
    const u64 ud = static_cast<u64>(d);
    u64 m = (1ull << 61) / ud;
    while (!is_prime_u64(ud * m + 1)) ++m;
    const u64 p = ud * m + 1;
    const auto primes = prime_divisors(d);
    u64 zeta = 1;
    for (u64 h = 2;; ++h) {
        zeta = powmod(h, (p - 1) / ud, p);
        bool primitive = (d == 1) || zeta != 1;
        for (int r : primes) {
            if (powmod(zeta, ud / static_cast<u64>(r), p) == 1) primitive = false;
        }
        if (primitive) break;
    }
    table->p = p;
    table->powers.resize(static_cast<std::size_t>(d));
    u64 z = 1;
    for (int k = 0; k < d; ++k) {
        table->powers[k] = z;
        z = mulmod(z, zeta, p);
    }
    slot = std::move(table);
    return *slot;
}

long long floor_mod(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// alpha*x + beta*y == 1
void bezout(long long alpha, long long beta, long long &x, long long &y)
{
    long long old_r = alpha, r = beta, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const long long qq = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - qq * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - qq * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - qq * t);
    }
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
}

// Evaluate every y-slice of p at x = zeta_d after the unimodular change of
// variables x = q^alpha t^beta; all slices vanish when Phi_d(x) | p.
bool slices_vanish(const ZPoly &p, int d, int alpha, int beta)
{
    long long bx = 0, by = 0;
    bezout(alpha, beta, bx, by);
    const long long delta = bx, gamma = -by;
    const RootTable &rt = root_table(d);
    std::unordered_map<long long, u64> slice;
    slice.reserve(p.size());
    for (const auto &term : p.terms()) {
        const long long i = term.q(), j = term.t();
        const long long e = delta * i - gamma * j;
        const long long f = -static_cast<long long>(beta) * i + alpha * j;
        const u64 c = mpz_fdiv_ui(term.coeff.get_mpz_t(), rt.p);
        u64 &acc = slice[f];
        acc = (acc + mulmod(c, rt.powers[static_cast<std::size_t>(floor_mod(e, d))], rt.p)) % rt.p;
    }
    for (const auto &[f, v] : slice) {
        if (v != 0) return false;
    }
    return true;
}

struct HullEdge {
    int alpha;
    int beta;
    int pos_len;
    int neg_len;
};

long long cross(std::pair<long long, long long> o, std::pair<long long, long long> a, std::pair<long long, long long> b)
{
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Edge directions of the Newton polygon, with lattice lengths per orientation.
std::vector<HullEdge> newton_edges(const ZPoly &p)
{
    std::vector<std::pair<long long, long long>> pts;
    pts.reserve(p.size());
    for (const auto &t : p.terms()) pts.emplace_back(t.q(), t.t());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<HullEdge> out;
    if (pts.size() < 2) return out;
    std::vector<std::pair<long long, long long>> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto &pt : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
        hull[k++] = pt;
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i > 0; --i) {
        while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    std::map<std::pair<int, int>, HullEdge> dirs;
    auto add_edge = [&](std::pair<long long, long long> a, std::pair<long long, long long> b) {
        long long dx = b.first - a.first, dy = b.second - a.second;
        const long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
        dx /= g;
        dy /= g;
        bool neg = false;
        if (dx < 0 || (dx == 0 && dy < 0)) {
            dx = -dx;
            dy = -dy;
            neg = true;
        }
        auto &e = dirs[{static_cast<int>(dx), static_cast<int>(dy)}];
        e.alpha = static_cast<int>(dx);
        e.beta = static_cast<int>(dy);
        (neg ? e.neg_len : e.pos_len) += static_cast<int>(g);
    };
    if (hull.size() == 2) {
        add_edge(hull[0], hull[1]);
        add_edge(hull[1], hull[0]);
    } else {
        for (std::size_t i = 0; i < hull.size(); ++i) add_edge(hull[i], hull[(i + 1) % hull.size()]);
    }
    for (auto &[key, e] : dirs) out.push_back(e);
    return out;
}

// Indices d sorted ascending, restricted to euler_phi(d) <= bound.
std::vector<int> indices_with_phi_at_most(int bound)
{
    constexpr int kMaxIndex = 2048;
    std::vector<int> out;
    const long long lim = std::min<long long>(kMaxIndex, 2LL * bound * bound + 2);
    for (int d = 1; d <= lim; ++d) {
        if (euler_phi(d) <= bound) out.push_back(d);
    }
    return out;
}

} // namespace

int euler_phi(int d)
{
    int result = d;
    for (int p : prime_divisors(d)) result = result / p * (p - 1);
    return result;
}

const std::vector<long long> &cyclotomic_coefficients(int d)
{
    static std::mutex mu;
    static std::map<int, std::vector<long long>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    if (d < 1) throw MathError(ErrorCode::IndexOutOfRange, "cyclotomic index must be >= 1");
    // x^d - 1 divided by Phi_e for every proper divisor e.
    std::vector<long long> num(static_cast<std::size_t>(d) + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        const auto &den = cyclotomic_coefficients(e);
        const std::size_t dn = den.size() - 1;
        std::vector<long long> quot(num.size() - dn, 0);
        for (std::size_t i = num.size(); i-- > dn;) {
            const long long c = num[i]; // den is monic
            quot[i - dn] = c;
            for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
        }
        num = std::move(quot);
    }
    std::lock_guard lock(mu);
    return cache.emplace(d, std::move(num)).first->second;
}

bool factor_less(const Factor &a, const Factor &b)
{
    if (a.get() == b.get()) return false;
    const int da = a->poly.degree(), db = b->poly.degree();
    if (da != db) return da < db;
    return a->poly.compare(b->poly) < 0;
}

namespace {

struct Registry {
    std::mutex mu;
    std::unordered_map<std::size_t, std::vector<std::shared_ptr<FactorData>>> table;
};

Registry &registry()
{
    static Registry r;
    return r;
}

Factor intern(ZPoly poly, int d, int alpha, int beta)
{
    auto &reg = registry();
    const std::size_t h = poly.hash();
    std::lock_guard lock(reg.mu);
    auto &bucket = reg.table[h];
    for (auto &f : bucket) {
        if (f->poly == poly) {
            if (f->cyclo_index == 0 && d != 0) {
                f->cyclo_index = d;
                f->alpha = alpha;
                f->beta = beta;
            }
            return f;
        }
    }
    auto f = std::make_shared<FactorData>();
    f->poly = std::move(poly);
    f->cyclo_index = d;
    f->alpha = alpha;
    f->beta = beta;
    bucket.push_back(f);
    return f;
}

} // namespace

Factor intern_factor(const ZPoly &normalized) { return intern(normalized, 0, 0, 0); }

Factor cyclotomic_factor(int d, int alpha, int beta)
{
    const auto &coeffs = cyclotomic_coefficients(d);
    const int phi = static_cast<int>(coeffs.size()) - 1;
    std::vector<ZPoly::Term> terms;
    for (int k = 0; k <= phi; ++k) {
        if (coeffs[k] == 0) continue;
        const int q = alpha * k;
        const int t = beta >= 0 ? beta * k : (-beta) * (phi - k);
        terms.push_back({ZPoly::make_key(q, t), mpz_class(static_cast<long>(coeffs[k]))});
    }
    ZPoly p = ZPoly::from_terms(std::move(terms));
    p = p.shifted(-p.min_q(), -p.min_t());
    p.make_primitive();
    return intern(std::move(p), d, alpha, beta);
}

bool may_divide(const FactorData &f, const ZPoly &p)
{
    if (p.is_zero()) return true;
    if (f.poly.max_q() - f.poly.min_q() > p.max_q() - p.min_q()) return false;
    if (f.poly.max_t() - f.poly.min_t() > p.max_t() - p.min_t()) return false;
    if (f.cyclo_index > 0) return slices_vanish(p, f.cyclo_index, f.alpha, f.beta);
    return true;
}

int divide_out(ZPoly &p, const FactorData &f, int max_times)
{
    int count = 0;
    while (count < max_times && !p.is_zero() && may_divide(f, p)) {
        auto quot = p.divide_exact(f.poly);
        if (!quot) break;
        p = std::move(*quot);
        ++count;
    }
    return count;
}

Factorization factor_poly(const ZPoly &input)
{
    if (input.is_zero()) throw MathError(ErrorCode::DivisionByZero, "cannot factor the zero polynomial");
    Factorization out;
    ZPoly p = input;
    out.unit = p.make_primitive();
    out.q_exp = p.min_q();
    out.t_exp = p.min_t();
    p = p.shifted(-out.q_exp, -out.t_exp);
    if (p.is_constant()) return out;

    std::map<Factor, int, decltype(&factor_less)> found(&factor_less);
    for (const HullEdge &e : newton_edges(p)) {
        const int len = std::min(e.pos_len, e.neg_len);
        if (len < 1) continue;
        int budget = len;
        for (int d : indices_with_phi_at_most(len)) {
            if (euler_phi(d) > budget) continue;
            if (!slices_vanish(p, d, e.alpha, e.beta)) continue;
            Factor f = cyclotomic_factor(d, e.alpha, e.beta);
            const int k = divide_out(p, *f, budget / euler_phi(d));
            if (k > 0) {
                found[f] += k;
                budget -= k * euler_phi(d);
            }
            if (budget <= 0) break;
        }
    }
    if (!p.is_constant()) found[intern_factor(p)] += 1;
    out.factors.assign(found.begin(), found.end());
    return out;
}

ZPoly expand(const FactorList &factors)
{
    ZPoly r(mpz_class(1));
    for (const auto &[f, m] : factors) r *= f->poly.pow(static_cast<unsigned>(m));
    return r;
}

namespace {

template <typename Combine>
FactorList merge_with(const FactorList &a, const FactorList &b, Combine &&combine)
{
    FactorList out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int ma = 0, mb = 0;
        Factor f;
        if (j == b.size() || (i < a.size() && factor_less(a[i].first, b[j].first))) {
            f = a[i].first;
            ma = a[i++].second;
        } else if (i == a.size() || factor_less(b[j].first, a[i].first)) {
            f = b[j].first;
            mb = b[j++].second;
        } else {
            f = a[i].first;
            ma = a[i++].second;
            mb = b[j++].second;
        }
        const int m = combine(ma, mb);
        if (m > 0) out.emplace_back(std::move(f), m);
        if (m < 0) throw MathError(ErrorCode::NotDivisible, "factor multiplicity became negative");
    }
    return out;
}

} // namespace

FactorList merge_add(const FactorList &a, const FactorList &b)
{
    return merge_with(a, b, [](int x, int y) { return x + y; });
}

FactorList merge_max(const FactorList &a, const FactorList &b)
{
    return merge_with(a, b, [](int x, int y) { return std::max(x, y); });
}

FactorList merge_sub(const FactorList &a, const FactorList &b)
{
    return merge_with(a, b, [](int x, int y) { return x - y; });
}

} // namespace macjt::arith
