#include "macjt/arith/zpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "macjt/arith/kernels.hpp"
#include "macjt/error.hpp"

namespace macjt::arith {

namespace {

constexpr std::uint64_t kMask = ZPoly::kMaxExp;

bool key_less(const ZPoly::Term &a, const ZPoly::Term &b) { return a.key < b.key; }

std::vector<ZPoly::Term> merge_sorted(std::vector<ZPoly::Term> v)
{
    std::sort(v.begin(), v.end(), key_less);
    std::vector<ZPoly::Term> out;
    out.reserve(v.size());
    for (auto &t : v) {
        if (!out.empty() && out.back().key == t.key) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return out;
}

std::size_t bit_length(std::size_t n)
{
    std::size_t b = 0;
    while (n) {
        ++b;
        n >>= 1;
    }
    return b;
}

std::size_t max_bits(const ZPoly &p)
{
    std::size_t b = 0;
    for (const auto &t : p.terms()) b = std::max(b, mpz_sizeinbase(t.coeff.get_mpz_t(), 2));
    return b;
}

// Emit the nonzero entries of a dense box in ascending grlex order.
template <typename Get>
std::vector<ZPoly::Term> collect_box(int q0, int t0, int rows, int cols, Get &&get)
{
    std::vector<ZPoly::Term> out;
    const int dmin = q0 + t0;
    const int dmax = q0 + rows - 1 + t0 + cols - 1;
    for (int d = dmin; d <= dmax; ++d) {
        const int qlo = std::max(q0, d - (t0 + cols - 1));
        const int qhi = std::min(q0 + rows - 1, d - t0);
        for (int q = qlo; q <= qhi; ++q) {
            const int t = d - q;
            mpz_class c;
            if (get(q - q0, t - t0, c)) out.push_back({ZPoly::make_key(q, t), std::move(c)});
        }
    }
    return out;
}

} // namespace

std::uint64_t ZPoly::make_key(int q, int t)
{
    if (q < 0 || t < 0 || q > kMaxExp || t > kMaxExp)
        throw MathError(ErrorCode::IndexOutOfRange, "exponent out of range for ZPoly");
    const auto uq = static_cast<std::uint64_t>(q);
    const auto ut = static_cast<std::uint64_t>(t);
    return ((uq + ut) << (2 * kExpBits)) | (uq << kExpBits) | ut;
}

ZPoly::ZPoly(const mpz_class &c)
{
    if (c != 0) terms_.push_back({0, c});
}

ZPoly ZPoly::monomial(const mpz_class &c, int q, int t)
{
    ZPoly p;
    if (c != 0) p.terms_.push_back({make_key(q, t), c});
    return p;
}

ZPoly ZPoly::from_terms(std::vector<Term> terms) { return ZPoly(merge_sorted(std::move(terms))); }

mpz_class ZPoly::coeff(int q, int t) const
{
    const auto k = make_key(q, t);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term &a, std::uint64_t key) { return a.key < key; });
    if (it != terms_.end() && it->key == k) return it->coeff;
    return 0;
}

int ZPoly::max_q() const noexcept
{
    int m = -1;
    for (const auto &t : terms_) m = std::max(m, t.q());
    return m;
}
int ZPoly::min_q() const noexcept
{
    int m = kMaxExp;
    for (const auto &t : terms_) m = std::min(m, t.q());
    return terms_.empty() ? -1 : m;
}
int ZPoly::max_t() const noexcept
{
    int m = -1;
    for (const auto &t : terms_) m = std::max(m, t.t());
    return m;
}
int ZPoly::min_t() const noexcept
{
    int m = kMaxExp;
    for (const auto &t : terms_) m = std::min(m, t.t());
    return terms_.empty() ? -1 : m;
}

ZPoly ZPoly::operator-() const
{
    ZPoly r(*this);
    for (auto &t : r.terms_) t.coeff = -t.coeff;
    return r;
}

ZPoly ZPoly::operator+(const ZPoly &o) const
{
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key < o.terms_[j].key)) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].key < terms_[i].key) {
            out.push_back(o.terms_[j++]);
        } else {
            mpz_class c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.push_back({terms_[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    return ZPoly(std::move(out));
}

ZPoly ZPoly::operator-(const ZPoly &o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly &o) const
{
    if (is_zero() || o.is_zero()) return {};
    const ZPoly *a = this;
    const ZPoly *b = &o;
    if (a->size() > b->size()) std::swap(a, b);

    if (a->size() == 1) {
        const Term &s = a->terms_[0];
        std::vector<Term> out;
        out.reserve(b->size());
        for (const auto &t : b->terms_) out.push_back({t.key + s.key, t.coeff * s.coeff});
        return ZPoly(std::move(out));
    }

    const int aq0 = a->min_q(), at0 = a->min_t();
    const int bq0 = b->min_q(), bt0 = b->min_t();
    const int ar = a->max_q() - aq0 + 1, ac = a->max_t() - at0 + 1;
    const int br = b->max_q() - bq0 + 1, bc = b->max_t() - bt0 + 1;
    const int cr = ar + br - 1, cc = ac + bc - 1;
    const std::size_t box = static_cast<std::size_t>(cr) * cc + static_cast<std::size_t>(ar) * ac +
                            static_cast<std::size_t>(br) * bc;
    const std::size_t work = a->size() * b->size();
    const bool dense_ok = box <= 16 * work + 256;

    if (dense_ok && max_bits(*a) + max_bits(*b) + bit_length(a->size()) <= 53) {
        std::vector<double> da(static_cast<std::size_t>(ar) * ac, 0.0);
        std::vector<double> db(static_cast<std::size_t>(br) * bc, 0.0);
        std::vector<double> dc(static_cast<std::size_t>(cr) * cc, 0.0);
        for (const auto &t : a->terms_) da[(t.q() - aq0) * ac + (t.t() - at0)] = t.coeff.get_d();
        for (const auto &t : b->terms_) db[(t.q() - bq0) * bc + (t.t() - bt0)] = t.coeff.get_d();
        kernels::conv2d(da.data(), ar, ac, db.data(), br, bc, dc.data());
        return ZPoly(collect_box(aq0 + bq0, at0 + bt0, cr, cc, [&](int i, int j, mpz_class &c) {
            const double v = dc[static_cast<std::size_t>(i) * cc + j];
            if (v == 0.0) return false;
            c = v;
            return true;
        }));
    }

    if (dense_ok) {
        std::vector<mpz_class> buf(static_cast<std::size_t>(cr) * cc);
        for (const auto &s : a->terms_) {
            const int i0 = s.q() - aq0, j0 = s.t() - at0;
            for (const auto &t : b->terms_) {
                auto &cell = buf[static_cast<std::size_t>(i0 + t.q() - bq0) * cc + (j0 + t.t() - bt0)];
                mpz_addmul(cell.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
            }
        }
        return ZPoly(collect_box(aq0 + bq0, at0 + bt0, cr, cc, [&](int i, int j, mpz_class &c) {
            auto &v = buf[static_cast<std::size_t>(i) * cc + j];
            if (v == 0) return false;
            c = std::move(v);
            return true;
        }));
    }

    std::vector<Term> prods;
    prods.reserve(work);
    for (const auto &s : a->terms_)
        for (const auto &t : b->terms_) prods.push_back({s.key + t.key, s.coeff * t.coeff});
    return ZPoly(merge_sorted(std::move(prods)));
}

ZPoly ZPoly::scaled(const mpz_class &c) const
{
    if (c == 0) return {};
    ZPoly r(*this);
    for (auto &t : r.terms_) t.coeff *= c;
    return r;
}

ZPoly ZPoly::divexact(const mpz_class &c) const
{
    ZPoly r(*this);
    for (auto &t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    return r;
}

ZPoly ZPoly::shifted(int dq, int dt) const
{
    if (dq == 0 && dt == 0) return *this;
    ZPoly r(*this);
    for (auto &t : r.terms_) t.key = make_key(t.q() + dq, t.t() + dt);
    return r;
}

ZPoly ZPoly::pow(unsigned k) const
{
    ZPoly result(mpz_class(1));
    ZPoly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

mpz_class ZPoly::content() const
{
    mpz_class g = 0;
    for (const auto &t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

mpz_class ZPoly::make_primitive()
{
    if (is_zero()) return 0;
    mpz_class g = content();
    if (lead().coeff < 0) g = -g;
    if (g != 1) {
        for (auto &t : terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
    }
    return g;
}

std::optional<ZPoly> ZPoly::divide_exact(const ZPoly &d) const
{
    if (d.is_zero()) throw MathError(ErrorCode::DivisionByZero, "ZPoly::divide_exact by zero");
    if (is_zero()) return ZPoly{};
    if (d.size() == 1) {
        const Term &s = d.terms_[0];
        if (s.q() > min_q() || s.t() > min_t()) return std::nullopt;
        std::vector<Term> out;
        out.reserve(size());
        for (const auto &t : terms_) {
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), s.coeff.get_mpz_t())) return std::nullopt;
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), s.coeff.get_mpz_t());
            out.push_back({t.key - s.key, std::move(c)});
        }
        return ZPoly(std::move(out));
    }
    const int q0 = min_q(), t0 = min_t(), q1 = max_q(), t1 = max_t();
    if (d.max_q() > q1 || d.max_t() > t1) return std::nullopt;
    // Exponent ranges must nest: quotient exponents are nonnegative.
    if (q1 - d.max_q() < q0 - d.min_q() || t1 - d.max_t() < t0 - d.min_t()) return std::nullopt;
    if (d.min_q() > q0 || d.min_t() > t0) return std::nullopt;
    const Term &ld = d.lead();
    const Term &la = lead();
    if (la.q() < ld.q() || la.t() < ld.t()) return std::nullopt;
    if (!mpz_divisible_p(la.coeff.get_mpz_t(), ld.coeff.get_mpz_t())) return std::nullopt;
    const Term &td = d.trail();
    const Term &ta = trail();
    if (ta.q() < td.q() || ta.t() < td.t()) return std::nullopt;
    if (!mpz_divisible_p(ta.coeff.get_mpz_t(), td.coeff.get_mpz_t())) return std::nullopt;

    const int rows = q1 - q0 + 1, cols = t1 - t0 + 1;
    std::vector<mpz_class> buf(static_cast<std::size_t>(rows) * cols);
    for (const auto &t : terms_) buf[static_cast<std::size_t>(t.q() - q0) * cols + (t.t() - t0)] = t.coeff;

    std::vector<Term> quot;
    const int lq = ld.q(), lt = ld.t();
    mpz_class c;
    for (int deg = q1 + t1; deg >= q0 + t0; --deg) {
        const int qhi = std::min(q1, deg - t0);
        const int qlo = std::max(q0, deg - t1);
        for (int q = qhi; q >= qlo; --q) {
            const int t = deg - q;
            auto &cell = buf[static_cast<std::size_t>(q - q0) * cols + (t - t0)];
            if (cell == 0) continue;
            const int sq = q - lq, st = t - lt;
            if (sq < 0 || st < 0) return std::nullopt;
            if (!mpz_divisible_p(cell.get_mpz_t(), ld.coeff.get_mpz_t())) return std::nullopt;
            mpz_divexact(c.get_mpz_t(), cell.get_mpz_t(), ld.coeff.get_mpz_t());
            for (const auto &dt : d.terms_) {
                const int rq = dt.q() + sq - q0, rt = dt.t() + st - t0;
                if (rq < 0 || rt < 0 || rq >= rows || rt >= cols) return std::nullopt;
                auto &target = buf[static_cast<std::size_t>(rq) * cols + rt];
                mpz_submul(target.get_mpz_t(), c.get_mpz_t(), dt.coeff.get_mpz_t());
            }
            quot.push_back({make_key(sq, st), c});
        }
    }
    std::reverse(quot.begin(), quot.end());
    return ZPoly(std::move(quot));
}

ZPoly ZPoly::swapped() const
{
    std::vector<Term> out;
    out.reserve(size());
    for (const auto &t : terms_) out.push_back({make_key(t.t(), t.q()), t.coeff});
    std::sort(out.begin(), out.end(), key_less);
    return ZPoly(std::move(out));
}

ZPoly ZPoly::q_equals_t() const
{
    std::vector<Term> out;
    out.reserve(size());
    for (const auto &t : terms_) out.push_back({make_key(0, t.q() + t.t()), t.coeff});
    return ZPoly(merge_sorted(std::move(out)));
}

mpq_class ZPoly::evaluate(const mpq_class &q_in, const mpq_class &t_in) const
{
    if (is_zero()) return 0;
    mpq_class q = q_in, t = t_in;
    q.canonicalize();
    t.canonicalize();
    std::vector<mpq_class> qp(static_cast<std::size_t>(max_q()) + 1), tp(static_cast<std::size_t>(max_t()) + 1);
    qp[0] = 1;
    for (std::size_t i = 1; i < qp.size(); ++i) qp[i] = qp[i - 1] * q;
    tp[0] = 1;
    for (std::size_t i = 1; i < tp.size(); ++i) tp[i] = tp[i - 1] * t;
    mpq_class s = 0;
    for (const auto &term : terms_) s += mpq_class(term.coeff) * qp[term.q()] * tp[term.t()];
    return s;
}

int ZPoly::compare(const ZPoly &o) const
{
    const std::size_t n = std::min(size(), o.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto &a = terms_[terms_.size() - 1 - i];
        const auto &b = o.terms_[o.terms_.size() - 1 - i];
        if (a.key != b.key) return a.key < b.key ? -1 : 1;
        const int c = cmp(a.coeff, b.coeff);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (size() != o.size()) return size() < o.size() ? -1 : 1;
    return 0;
}

std::size_t ZPoly::hash() const
{
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto &t : terms_) {
        h ^= std::hash<std::uint64_t>{}(t.key) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        const unsigned long low = mpz_get_ui(t.coeff.get_mpz_t());
        h ^= std::hash<unsigned long>{}(low) + static_cast<std::size_t>(sgn(t.coeff) + 1) + (h << 6) + (h >> 2);
    }
    return h;
}

std::string ZPoly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        mpz_class c = it->coeff;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const int q = it->q(), t = it->t();
        const bool unit = (c == 1);
        if (!unit || (q == 0 && t == 0)) os << c.get_str();
        bool need_star = !unit;
        auto var = [&](const char *name, int e) {
            if (e == 0) return;
            if (need_star) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            need_star = true;
        };
        var("q", q);
        var("t", t);
    }
    return os.str();
}

} // namespace macjt::arith
