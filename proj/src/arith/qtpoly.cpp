#include "macjt/arith/qtpoly.hpp"

#include <sstream>

#include "macjt/error.hpp"

namespace macjt::arith {

QTPolynomial::QTPolynomial(const mpq_class &c)
{
    if (c != 0) {
        scale_ = c;
        prim_ = ZPoly(mpz_class(1));
    }
}

QTPolynomial::QTPolynomial(const mpq_class &scale, ZPoly prim)
{
    if (scale == 0 || prim.is_zero()) return;
    const mpz_class g = prim.make_primitive();
    scale_ = scale * g;
    prim_ = std::move(prim);
}

QTPolynomial QTPolynomial::monomial(const mpq_class &c, int q, int t)
{
    return QTPolynomial(c, ZPoly::monomial(1, q, t));
}

QTPolynomial QTPolynomial::from_terms(const std::vector<Term> &terms)
{
    mpz_class den = 1;
    for (const auto &t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    std::vector<ZPoly::Term> zt;
    zt.reserve(terms.size());
    for (const auto &t : terms) {
        mpz_class c = t.coeff.get_num() * (den / t.coeff.get_den());
        zt.push_back({ZPoly::make_key(t.q, t.t), std::move(c)});
    }
    return QTPolynomial(mpq_class(1, 1) / mpq_class(den), ZPoly::from_terms(std::move(zt)));
}

mpq_class QTPolynomial::coeff(int q, int t) const
{
    if (is_zero()) return 0;
    return scale_ * mpq_class(prim_.coeff(q, t));
}

std::vector<QTPolynomial::Term> QTPolynomial::terms() const
{
    std::vector<Term> out;
    if (is_zero()) return out;
    out.reserve(prim_.size());
    for (const auto &t : prim_.terms()) out.push_back({t.q(), t.t(), scale_ * mpq_class(t.coeff)});
    return out;
}

QTPolynomial QTPolynomial::operator-() const
{
    QTPolynomial r(*this);
    r.scale_ = -r.scale_;
    return r;
}

QTPolynomial QTPolynomial::operator+(const QTPolynomial &o) const
{
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (prim_ == o.prim_) {
        QTPolynomial r(*this);
        r.scale_ += o.scale_;
        if (r.scale_ == 0) return {};
        return r;
    }
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), scale_.get_den_mpz_t(), o.scale_.get_den_mpz_t());
    const mpz_class ca = scale_.get_num() * (l / scale_.get_den());
    const mpz_class cb = o.scale_.get_num() * (l / o.scale_.get_den());
    ZPoly sum = prim_.scaled(ca) + o.prim_.scaled(cb);
    return QTPolynomial(mpq_class(1) / mpq_class(l), std::move(sum));
}

QTPolynomial QTPolynomial::operator-(const QTPolynomial &o) const { return *this + (-o); }

QTPolynomial QTPolynomial::operator*(const QTPolynomial &o) const
{
    if (is_zero() || o.is_zero()) return {};
    QTPolynomial r;
    r.scale_ = scale_ * o.scale_;
    r.prim_ = prim_ * o.prim_; // Gauss: product of primitives is primitive
    return r;
}

QTPolynomial QTPolynomial::exact_div(const QTPolynomial &o) const
{
    if (o.is_zero()) throw MathError(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (is_zero()) return {};
    auto quot = prim_.divide_exact(o.prim_);
    if (!quot) throw MathError(ErrorCode::NotDivisible, "(" + to_string() + ") / (" + o.to_string() + ")");
    return QTPolynomial(scale_ / o.scale_, std::move(*quot));
}

mpq_class QTPolynomial::evaluate(const mpq_class &q, const mpq_class &t) const
{
    if (is_zero()) return 0;
    return scale_ * prim_.evaluate(q, t);
}

std::string QTPolynomial::to_string() const
{
    if (is_zero()) return "0";
    if (scale_ == 1) return prim_.to_string();
    if (scale_ == -1) return (-prim_).to_string();
    if (prim_.is_constant()) return mpq_class(scale_ * mpq_class(prim_.trail().coeff)).get_str();
    std::ostringstream os;
    os << scale_.get_str() << "*(" << prim_.to_string() << ")";
    return os.str();
}

} // namespace macjt::arith
