#include "macjt/arith/laurent.hpp"

#include "macjt/error.hpp"

namespace macjt::arith {

namespace {

mpq_class ipow(const mpq_class &x, int e)
{
    if (e < 0) {
        if (x == 0) throw MathError(ErrorCode::PoleAtPoint, "negative power of zero");
        return ipow(mpq_class(1) / x, -e);
    }
    mpq_class r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

} // namespace

mpq_class LaurentMonomial::evaluate(const mpq_class &q, const mpq_class &t) const
{
    return coeff * ipow(q, q_exp) * ipow(t, t_exp);
}

std::string LaurentMonomial::to_string() const { return value().to_string(); }

QTRational pochhammer(const LaurentMonomial &x, int k)
{
    if (k < 0) throw MathError(ErrorCode::IndexOutOfRange, "negative Pochhammer length");
    QTRational r(1);
    for (int l = 0; l < k; ++l) r *= QTRational(1) - LaurentMonomial(x.coeff, x.q_exp + l, x.t_exp).value();
    return r;
}

} // namespace macjt::arith
