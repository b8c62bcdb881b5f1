#include "macjt/symfunc/symfunc.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "macjt/error.hpp"

namespace macjt::sym {

namespace {

void check_cap(int weight, int cap)
{
    if (weight > cap)
        throw MathError(ErrorCode::DegreeCapExceeded,
                        "weight " + std::to_string(weight) + " exceeds degree cap " + std::to_string(cap));
}

Partition concat(const Partition &a, const Partition &b)
{
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

// Number of maps from the parts of lambda onto the positions of mu with
// the parts landing on position j summing to mu_j.
mpz_class count_fillings(const std::vector<int> &lambda, std::size_t i, std::vector<int> &room,
                         std::map<std::pair<std::size_t, std::vector<int>>, mpz_class> &memo)
{
    if (i == lambda.size()) {
        for (int r : room)
            if (r) return 0;
        return 1;
    }
    auto key = std::make_pair(i, room);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    mpz_class total = 0;
    for (std::size_t j = 0; j < room.size(); ++j) {
        if (room[j] < lambda[i]) continue;
        room[j] -= lambda[i];
        total += count_fillings(lambda, i + 1, room, memo);
        room[j] += lambda[i];
    }
    memo.emplace(std::move(key), total);
    return total;
}

struct WeightTables {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<mpz_class>> p_to_m;
    std::vector<std::vector<mpq_class>> m_to_p;
};

const WeightTables &tables(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<WeightTables>> cache;
    std::lock_guard lock(mu);
    auto &slot = cache[n];
    if (slot) return *slot;
    auto tb = std::make_unique<WeightTables>();
    tb->parts = partitions_of(n);
    const std::size_t N = tb->parts.size();
    for (std::size_t i = 0; i < N; ++i) tb->index[tb->parts[i]] = i;
    tb->p_to_m.assign(N, std::vector<mpz_class>(N, 0));
    for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            std::vector<int> room = tb->parts[b].parts();
            std::map<std::pair<std::size_t, std::vector<int>>, mpz_class> memo;
            tb->p_to_m[a][b] = count_fillings(tb->parts[a].parts(), 0, room, memo);
        }
    }
    // p = R m with R lower triangular; m = R^{-1} p.
    auto &inv = tb->m_to_p;
    inv.assign(N, std::vector<mpq_class>(N, 0));
    const auto &R = tb->p_to_m;
    for (std::size_t col = 0; col < N; ++col) {
        for (std::size_t row = col; row < N; ++row) {
            mpq_class s = row == col ? 1 : 0;
            for (std::size_t k = col; k < row; ++k) s -= mpq_class(R[row][k]) * inv[k][col];
            inv[row][col] = s / mpq_class(R[row][row]);
        }
    }
    slot = std::move(tb);
    return *slot;
}

QTRational one_minus_pow(bool use_q, int r)
{
    return QTRational(1) - (use_q ? QTRational::monomial(1, r, 0) : QTRational::monomial(1, 0, r));
}

} // namespace

SymFunc::SymFunc(const QTRational &c, int degree_cap) : cap_(degree_cap)
{
    if (!c.is_zero()) terms_.emplace(Partition(), c);
}

SymFunc SymFunc::p(const Partition &lambda, int degree_cap)
{
    check_cap(lambda.weight(), degree_cap);
    SymFunc f(degree_cap);
    f.terms_.emplace(lambda, QTRational(1));
    return f;
}

SymFunc SymFunc::with_cap(int cap) const
{
    SymFunc f(cap);
    for (const auto &[k, v] : terms_)
        if (k.weight() <= cap) f.terms_.emplace(k, v);
    return f;
}

QTRational SymFunc::coeff(const Partition &lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QTRational() : it->second;
}

SymFunc SymFunc::homogeneous(int n) const
{
    SymFunc f(cap_);
    for (const auto &[k, v] : terms_)
        if (k.weight() == n) f.terms_.emplace(k, v);
    return f;
}

int SymFunc::max_weight() const
{
    int w = -1;
    for (const auto &[k, v] : terms_) w = std::max(w, k.weight());
    return w;
}

void SymFunc::add_term(const Partition &lambda, const QTRational &c)
{
    if (c.is_zero() || lambda.weight() > cap_) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc SymFunc::operator-() const
{
    SymFunc f(cap_);
    for (const auto &[k, v] : terms_) f.terms_.emplace(k, -v);
    return f;
}

SymFunc &SymFunc::operator+=(const SymFunc &o)
{
    if (o.cap_ < cap_) {
        cap_ = o.cap_;
        for (auto it = terms_.begin(); it != terms_.end();) it = it->first.weight() > cap_ ? terms_.erase(it) : std::next(it);
    }
    for (const auto &[k, v] : o.terms_) add_term(k, v);
    return *this;
}

SymFunc &SymFunc::operator-=(const SymFunc &o) { return *this += -o; }

SymFunc SymFunc::operator+(const SymFunc &o) const
{
    SymFunc f = *this;
    f += o;
    return f;
}

SymFunc SymFunc::operator-(const SymFunc &o) const { return *this + (-o); }

SymFunc SymFunc::operator*(const SymFunc &o) const
{
    SymFunc f(std::min(cap_, o.cap_));
    for (const auto &[a, x] : terms_)
        for (const auto &[b, y] : o.terms_)
            if (a.weight() + b.weight() <= f.cap_) f.add_term(concat(a, b), x * y);
    return f;
}

SymFunc SymFunc::operator*(const QTRational &c) const
{
    SymFunc f(cap_);
    if (c.is_zero()) return f;
    for (const auto &[k, v] : terms_) f.terms_.emplace(k, v * c);
    return f;
}

bool SymFunc::operator==(const SymFunc &o) const
{
    if (terms_.size() != o.terms_.size()) return false;
    for (auto a = terms_.begin(), b = o.terms_.begin(); a != terms_.end(); ++a, ++b)
        if (!(a->first == b->first) || a->second != b->second) return false;
    return true;
}

SymFunc SymFunc::swapped() const
{
    SymFunc f(cap_);
    for (const auto &[k, v] : terms_) f.terms_.emplace(k, v.swapped());
    return f;
}

SymFunc SymFunc::q_equals_t() const
{
    SymFunc f(cap_);
    for (const auto &[k, v] : terms_) f.add_term(k, v.q_equals_t());
    return f;
}

std::string SymFunc::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.to_string() << ")*p[" << k.to_string() << "]";
    }
    return os.str();
}

SymFunc multiply(const SymFunc &f, const SymFunc &g) { return f * g; }

SymFunc e(int k, int degree_cap)
{
    check_cap(k, degree_cap);
    SymFunc f(degree_cap);
    for (const auto &lam : partitions_of(k)) {
        const int sign = (k - static_cast<int>(lam.length())) % 2 ? -1 : 1;
        f.add_term(lam, QTRational(mpq_class(sign, 1) / mpq_class(z_lambda(lam))));
    }
    return f;
}

SymFunc h(int k, int degree_cap)
{
    check_cap(k, degree_cap);
    SymFunc f(degree_cap);
    for (const auto &lam : partitions_of(k)) f.add_term(lam, QTRational(mpq_class(1) / mpq_class(z_lambda(lam))));
    return f;
}

SymFunc g(int k, int degree_cap)
{
    check_cap(k, degree_cap);
    SymFunc f(degree_cap);
    for (const auto &lam : partitions_of(k)) {
        QTRational c(mpq_class(1) / mpq_class(z_lambda(lam)));
        for (int r : lam.parts()) c *= one_minus_pow(false, r) / one_minus_pow(true, r);
        f.add_term(lam, c);
    }
    return f;
}

SymFunc m(const Partition &lambda, int degree_cap)
{
    check_cap(lambda.weight(), degree_cap);
    const WeightTables &tb = tables(lambda.weight());
    const std::size_t row = tb.index.at(lambda);
    SymFunc f(degree_cap);
    for (std::size_t j = 0; j <= row; ++j)
        if (tb.m_to_p[row][j] != 0) f.add_term(tb.parts[j], QTRational(tb.m_to_p[row][j]));
    return f;
}

namespace {
SymFunc product_of(const std::vector<int> &mu, int cap, SymFunc (*gen)(int, int))
{
    SymFunc f(QTRational(1), cap);
    for (int k : mu) {
        if (k < 0) return SymFunc(cap);
        f = f * gen(k, cap);
    }
    return f;
}
} // namespace

SymFunc e_product(const std::vector<int> &mu, int cap) { return product_of(mu, cap, &e); }
SymFunc h_product(const std::vector<int> &mu, int cap) { return product_of(mu, cap, &h); }
SymFunc g_product(const std::vector<int> &mu, int cap) { return product_of(mu, cap, &g); }

const std::vector<std::vector<mpz_class>> &p_to_m_matrix(int n) { return tables(n).p_to_m; }

std::map<Partition, QTRational> to_m_basis(const SymFunc &f)
{
    std::map<Partition, QTRational> out;
    for (const auto &[lam, c] : f.terms()) {
        const WeightTables &tb = tables(lam.weight());
        const std::size_t row = tb.index.at(lam);
        for (std::size_t j = 0; j <= row; ++j) {
            if (tb.p_to_m[row][j] == 0) continue;
            QTRational &slot = out[tb.parts[j]];
            slot += c * QTRational(mpq_class(tb.p_to_m[row][j]));
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

QTRational p_norm(const Partition &lambda)
{
    QTRational c{mpq_class(z_lambda(lambda))};
    for (int r : lambda.parts()) c *= one_minus_pow(true, r) / one_minus_pow(false, r);
    return c;
}

QTRational scalar_product(const SymFunc &f, const SymFunc &g)
{
    QTRational s;
    const SymFunc &small = f.terms().size() <= g.terms().size() ? f : g;
    const SymFunc &large = &small == &f ? g : f;
    for (const auto &[lam, c] : small.terms()) {
        auto it = large.terms().find(lam);
        if (it == large.terms().end()) continue;
        s += c * it->second * p_norm(lam);
    }
    return s;
}

SymFunc omega(const SymFunc &f, bool swapped_params)
{
    SymFunc out(f.degree_cap());
    std::map<int, QTRational> factor;
    for (const auto &[lam, c] : f.terms()) {
        QTRational x = c;
        for (int r : lam.parts()) {
            auto it = factor.find(r);
            if (it == factor.end()) {
                QTRational v = one_minus_pow(!swapped_params, r) / one_minus_pow(swapped_params, r);
                if (r % 2 == 0) v = -v;
                it = factor.emplace(r, v).first;
            }
            x *= it->second;
        }
        out.add_term(lam, x);
    }
    return out;
}

} // namespace macjt::sym
