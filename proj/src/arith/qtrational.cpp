#include "macjt/arith/qtrational.hpp"

#include <algorithm>
#include <sstream>

#include "macjt/error.hpp"

namespace macjt::arith {

namespace {

bool same_factors(const FactorList &a, const FactorList &b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].first.get() != b[i].first.get() || a[i].second != b[i].second) return false;
    }
    return true;
}

// Divide p by the factors of `den` where possible, lowering multiplicities.
void cancel_against(ZPoly &p, FactorList &den)
{
    if (p.is_zero() || den.empty()) return;
    FactorList kept;
    kept.reserve(den.size());
    for (auto &[f, m] : den) {
        const int k = divide_out(p, *f, m);
        if (m - k > 0) kept.emplace_back(f, m - k);
    }
    den = std::move(kept);
}

} // namespace

QTRational QTRational::from_fraction(const QTPolynomial &n, const QTPolynomial &d)
{
    if (d.is_zero()) throw MathError(ErrorCode::DivisionByZero, "zero denominator");
    QTRational r;
    if (n.is_zero()) return r;
    Factorization fz = factor_poly(d.primitive());
    r.num_ = QTPolynomial(mpq_class(1) / (d.scale() * mpq_class(fz.unit)), n.primitive()) * QTPolynomial(n.scale());
    r.den_q_ = fz.q_exp;
    r.den_t_ = fz.t_exp;
    r.den_ = std::move(fz.factors);
    r.cancel_monomial();
    r.cancel_factors();
    return r;
}

QTRational QTRational::from_parts(const QTPolynomial &num, int dq, int dt, FactorList den)
{
    QTRational r;
    if (num.is_zero()) return r;
    if (dq < 0 || dt < 0) throw MathError(ErrorCode::ParseError, "negative denominator exponent");
    r.num_ = num;
    r.den_q_ = dq;
    r.den_t_ = dt;
    std::sort(den.begin(), den.end(), [](const auto &x, const auto &y) { return factor_less(x.first, y.first); });
    for (auto &[f, m] : den) {
        if (m < 0) throw MathError(ErrorCode::ParseError, "negative factor multiplicity");
        if (m == 0) continue;
        if (!r.den_.empty() && r.den_.back().first == f)
            r.den_.back().second += m;
        else
            r.den_.emplace_back(f, m);
    }
    r.cancel_monomial();
    r.cancel_factors();
    return r;
}

QTRational QTRational::monomial(const mpq_class &c, int q_exp, int t_exp)
{
    QTRational r;
    if (c == 0) return r;
    r.num_ = QTPolynomial::monomial(c, std::max(q_exp, 0), std::max(t_exp, 0));
    r.den_q_ = std::max(-q_exp, 0);
    r.den_t_ = std::max(-t_exp, 0);
    return r;
}

bool QTRational::is_one() const
{
    return is_constant() && num_.scale() == 1;
}

bool QTRational::is_constant() const noexcept
{
    return num_.is_zero() || (den_.empty() && den_q_ == 0 && den_t_ == 0 && num_.primitive().is_constant());
}

mpq_class QTRational::constant_value() const
{
    if (!is_constant()) throw MathError(ErrorCode::DegenerateConfig, "value is not constant: " + to_string());
    return num_.is_zero() ? mpq_class(0) : num_.scale() * mpq_class(num_.primitive().trail().coeff);
}

ZPoly QTRational::denominator() const { return expand(den_).shifted(den_q_, den_t_); }

void QTRational::cancel_monomial()
{
    if (num_.is_zero()) {
        den_q_ = den_t_ = 0;
        den_.clear();
        return;
    }
    const int cq = std::min(num_.primitive().min_q(), den_q_);
    const int ct = std::min(num_.primitive().min_t(), den_t_);
    if (cq > 0 || ct > 0) {
        num_ = QTPolynomial(num_.scale(), num_.primitive().shifted(-cq, -ct));
        den_q_ -= cq;
        den_t_ -= ct;
    }
}

void QTRational::cancel_factors()
{
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    ZPoly p = num_.primitive();
    cancel_against(p, den_);
    num_ = QTPolynomial(num_.scale(), std::move(p));
}

QTRational QTRational::operator-() const
{
    QTRational r(*this);
    r.num_ = -r.num_;
    return r;
}

QTRational QTRational::operator+(const QTRational &o) const
{
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    QTRational r;
    if (den_q_ == o.den_q_ && den_t_ == o.den_t_ && same_factors(den_, o.den_)) {
        r.num_ = num_ + o.num_;
        r.den_q_ = den_q_;
        r.den_t_ = den_t_;
        r.den_ = den_;
    } else {
        r.den_ = merge_max(den_, o.den_);
        r.den_q_ = std::max(den_q_, o.den_q_);
        r.den_t_ = std::max(den_t_, o.den_t_);
        const ZPoly ca = expand(merge_sub(r.den_, den_)).shifted(r.den_q_ - den_q_, r.den_t_ - den_t_);
        const ZPoly cb = expand(merge_sub(r.den_, o.den_)).shifted(r.den_q_ - o.den_q_, r.den_t_ - o.den_t_);
        r.num_ = num_ * QTPolynomial(1, ca) + o.num_ * QTPolynomial(1, cb);
    }
    r.cancel_monomial();
    r.cancel_factors();
    return r;
}

QTRational QTRational::operator-(const QTRational &o) const { return *this + (-o); }

QTRational QTRational::operator*(const QTRational &o) const
{
    if (is_zero() || o.is_zero()) return {};
    ZPoly a = num_.primitive();
    ZPoly b = o.num_.primitive();
    FactorList da = den_;
    FactorList db = o.den_;
    cancel_against(a, db);
    cancel_against(b, da);
    QTRational r;
    r.num_ = QTPolynomial(num_.scale() * o.num_.scale(), a * b);
    r.den_ = merge_add(da, db);
    r.den_q_ = den_q_ + o.den_q_;
    r.den_t_ = den_t_ + o.den_t_;
    r.cancel_monomial();
    return r;
}

QTRational QTRational::inverse() const
{
    if (is_zero()) throw MathError(ErrorCode::DivisionByZero, "inverse of zero");
    Factorization fz = factor_poly(num_.primitive());
    QTRational r;
    const ZPoly old_den = expand(den_).shifted(den_q_, den_t_);
    r.num_ = QTPolynomial(mpq_class(1) / (num_.scale() * mpq_class(fz.unit)), old_den);
    r.den_q_ = fz.q_exp;
    r.den_t_ = fz.t_exp;
    r.den_ = std::move(fz.factors);
    r.cancel_monomial();
    return r;
}

QTRational QTRational::operator/(const QTRational &o) const
{
    if (o.is_zero()) throw MathError(ErrorCode::DivisionByZero, "division by zero in Q(q,t)");
    if (is_zero()) return {};
    return *this * o.inverse();
}

QTRational QTRational::pow(int k) const
{
    if (k < 0) return inverse().pow(-k);
    QTRational result(1);
    QTRational base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

bool QTRational::same_representation(const QTRational &o) const
{
    return num_ == o.num_ && den_q_ == o.den_q_ && den_t_ == o.den_t_ && same_factors(den_, o.den_);
}

bool QTRational::operator==(const QTRational &o) const
{
    if (same_representation(o)) return true;
    return (*this - o).is_zero();
}

mpq_class QTRational::evaluate(const mpq_class &q_in, const mpq_class &t_in) const
{
    if (is_zero()) return 0;
    mpq_class q = q_in, t = t_in;
    q.canonicalize();
    t.canonicalize();
    mpq_class den = 1;
    for (int i = 0; i < den_q_; ++i) den *= q;
    for (int i = 0; i < den_t_; ++i) den *= t;
    for (const auto &[f, m] : den_) {
        const mpq_class v = f->poly.evaluate(q, t);
        for (int i = 0; i < m; ++i) den *= v;
    }
    if (den == 0) throw MathError(ErrorCode::PoleAtPoint, to_string() + " at q=" + q.get_str() + ", t=" + t.get_str());
    return num_.evaluate(q, t) / den;
}

QTRational QTRational::swapped() const
{
    QTRational r;
    if (is_zero()) return r;
    mpq_class scale = num_.scale();
    FactorList den;
    for (const auto &[f, m] : den_) {
        ZPoly p = f->poly.swapped();
        const mpz_class u = p.make_primitive();
        if (u < 0 && (m % 2 == 1)) scale = -scale;
        Factor g;
        if (f->cyclo_index > 0) {
            int a = f->beta, b = f->alpha;
            if (a < 0) {
                a = -a;
                b = -b;
            }
            g = cyclotomic_factor(f->cyclo_index, a, b);
        } else {
            g = intern_factor(p);
        }
        den.emplace_back(g, m);
    }
    std::sort(den.begin(), den.end(), [](const auto &x, const auto &y) { return factor_less(x.first, y.first); });
    r.num_ = QTPolynomial(scale, num_.primitive().swapped());
    r.den_q_ = den_t_;
    r.den_t_ = den_q_;
    r.den_ = std::move(den);
    return r;
}

QTRational QTRational::q_equals_t() const
{
    QTRational r;
    if (is_zero()) return r;
    ZPoly num = num_.primitive().q_equals_t();
    if (num.is_zero()) return r;
    mpq_class scale = num_.scale();
    FactorList den;
    int mono_t = den_q_ + den_t_;
    for (const auto &[f, m] : den_) {
        ZPoly img = f->poly.q_equals_t();
        if (img.is_zero())
            throw MathError(ErrorCode::GenuinePole, "q - t divides the denominator of " + to_string());
        Factorization fz = factor_poly(img);
        for (int i = 0; i < m; ++i) scale /= mpq_class(fz.unit);
        mono_t += m * (fz.q_exp + fz.t_exp);
        FactorList powered;
        for (auto &[g, k] : fz.factors) powered.emplace_back(g, k * m);
        den = merge_add(den, powered);
    }
    r.num_ = QTPolynomial(scale, std::move(num));
    r.den_q_ = 0;
    r.den_t_ = mono_t;
    r.den_ = std::move(den);
    r.cancel_monomial();
    r.cancel_factors();
    return r;
}

std::string QTRational::to_string() const
{
    if (is_zero()) return "0";
    const ZPoly den = denominator();
    if (den.is_constant()) return num_.to_string();
    std::ostringstream os;
    const bool simple_num = num_.primitive().size() == 1 && num_.scale() == 1;
    os << (simple_num ? num_.to_string() : "(" + num_.to_string() + ")");
    os << "/";
    os << (den.size() == 1 && den.lead().coeff == 1 ? den.to_string() : "(" + den.to_string() + ")");
    return os.str();
}

} // namespace macjt::arith
