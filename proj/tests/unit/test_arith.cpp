#include <gtest/gtest.h>

#include <random>

#include "macjt/arith/eps.hpp"
#include "macjt/arith/laurent.hpp"
#include "macjt/arith/qtpoly.hpp"
#include "macjt/arith/qtrational.hpp"
#include "macjt/error.hpp"

using namespace macjt;
using namespace macjt::arith;

namespace {

const QTPolynomial q = QTPolynomial::q();
const QTPolynomial t = QTPolynomial::t();
const QTPolynomial one(1);

QTRational R(const QTPolynomial &p) { return QTRational(p); }

QTPolynomial random_poly(std::mt19937_64 &rng, int terms = 4, int maxexp = 3)
{
    std::uniform_int_distribution<int> e(0, maxexp);
    std::uniform_int_distribution<int> c(-5, 5);
    std::vector<QTPolynomial::Term> v;
    for (int i = 0; i < terms; ++i) v.push_back({e(rng), e(rng), mpq_class(c(rng), 1 + (i % 2))});
    return QTPolynomial::from_terms(v);
}

QTRational random_rational(std::mt19937_64 &rng)
{
    QTPolynomial d;
    while (d.is_zero()) d = random_poly(rng, 3, 2);
    return QTRational::from_fraction(random_poly(rng), d);
}

void expect_throws(ErrorCode code, auto &&fn)
{
    try {
        fn();
        ADD_FAILURE() << "no exception";
    } catch (const MathError &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

} // namespace

TEST(Polynomial, Examples)
{
    EXPECT_EQ((one - q) + (q - t), one - t);
    EXPECT_TRUE(((one - q) * QTPolynomial(0)).is_zero());
    EXPECT_EQ((one - q) * (one + q), one - q * q);
    EXPECT_EQ((one - q * q).exact_div(one - q), one + q);
    expect_throws(ErrorCode::NotDivisible, [&] { (one - q * t).exact_div(one - q); });
    EXPECT_EQ((q * q * t - q * t).exact_div(q), q * t - t);
    expect_throws(ErrorCode::DivisionByZero, [&] { one.exact_div(QTPolynomial(0)); });
}

TEST(Polynomial, RingAxioms)
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(Polynomial, ExactDivisionRoundTrip)
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(rng, 5, 4);
        auto b = random_poly(rng, 3, 3);
        if (b.is_zero()) continue;
        EXPECT_EQ((a * b).exact_div(b), a);
    }
}

TEST(Rational, Examples)
{
    const QTRational a = QTRational::from_fraction(one - q, one - t);
    const QTRational b = QTRational::from_fraction(one - t, one - q);
    EXPECT_TRUE((a * b).is_one());
    EXPECT_TRUE((QTRational::from_fraction(one, one - q) + QTRational::from_fraction(QTPolynomial(-1), one - q)).is_zero());
    EXPECT_EQ(b * b, QTRational::from_fraction((one - t) * (one - t), (one - q) * (one - q)));
    expect_throws(ErrorCode::DivisionByZero, [&] { (void)(a / QTRational(0)); });
}

TEST(Rational, CanonicalAfterCancellation)
{
    const QTRational x = QTRational::from_fraction(one - q * q, one - q);
    EXPECT_TRUE(x.den_factors().empty());
    EXPECT_TRUE(x.same_representation(R(one + q)));
    const QTRational y = QTRational::from_fraction(one - q * q * t * t, (one - q * t) * (one + t));
    EXPECT_EQ(y, QTRational::from_fraction(one + q * t, one + t));
    EXPECT_EQ(y.denominator(), (one + t).primitive());
}

TEST(Rational, FieldAxioms)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
        if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
}

TEST(Rational, EvaluationIsHomomorphism)
{
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    int checked = 0;
    while (checked < 100) {
        const auto a = random_rational(rng), b = random_rational(rng);
        mpq_class q0(num(rng), den(rng)), t0(num(rng), den(rng));
        q0.canonicalize();
        t0.canonicalize();
        try {
            const mpq_class va = a.evaluate(q0, t0), vb = b.evaluate(q0, t0);
            EXPECT_EQ((a + b).evaluate(q0, t0), va + vb);
            EXPECT_EQ((a - b).evaluate(q0, t0), va - vb);
            EXPECT_EQ((a * b).evaluate(q0, t0), va * vb);
            ++checked;
        } catch (const MathError &e) {
            EXPECT_EQ(e.code(), ErrorCode::PoleAtPoint);
        }
    }
}

TEST(Rational, EvaluateExamples)
{
    const QTRational f = QTRational::from_fraction(one - q, one - t);
    EXPECT_EQ(f.evaluate(mpq_class(1, 2), mpq_class(1, 3)), mpq_class(3, 4));
    EXPECT_EQ(QTRational(1).evaluate(mpq_class(7, 3), mpq_class(-2)), 1);
    expect_throws(ErrorCode::PoleAtPoint, [&] { QTRational::from_fraction(one, one - q).evaluate(1, 2); });
}

TEST(Rational, SwapAndDiagonal)
{
    std::mt19937_64 rng(6);
    for (int i = 0; i < 50; ++i) {
        const auto a = random_rational(rng), b = random_rational(rng);
        EXPECT_EQ((a * b).swapped(), a.swapped() * b.swapped());
        EXPECT_EQ(a.swapped().swapped(), a);
        const mpq_class q0(3, 7), t0(-5, 11);
        try {
            EXPECT_EQ(a.swapped().evaluate(q0, t0), a.evaluate(t0, q0));
        } catch (const MathError &) {
        }
    }
    const QTRational x = QTRational::from_fraction(one - q * t, one - t * t) * QTRational::from_fraction(one - q, one - q * t * t);
    EXPECT_EQ(x.q_equals_t(), QTRational::from_fraction(one - t * t, one - t * t * t) * QTRational::from_fraction(one - t, one - t * t));
    expect_throws(ErrorCode::GenuinePole, [&] { QTRational::from_fraction(one, q - t).q_equals_t(); });
    EXPECT_TRUE(QTRational::from_fraction(q - t, one - q).q_equals_t().is_zero());
}

TEST(Rational, LaurentContent)
{
    const QTRational x = QTRational::monomial(2, -1, 3);
    EXPECT_EQ(x * QTRational::q(), QTRational::monomial(2, 0, 3));
    EXPECT_EQ(x.den_q(), 1);
    EXPECT_EQ(x.numerator().primitive().min_t(), 3);
}

TEST(Pochhammer, Examples)
{
    EXPECT_TRUE(pochhammer({1, 1, 1}, 0).is_one());
    EXPECT_EQ(pochhammer({1, 0, 1}, 2), R((one - t) * (one - q * t)));
    EXPECT_EQ(pochhammer({1, -1, 0}, 1), QTRational::from_fraction(q - one, q));
}

TEST(Pochhammer, StepProperty)
{
    for (int a = -5; a <= 5; a += 2)
        for (int b = -5; b <= 5; b += 3)
            for (int k = 0; k <= 10; ++k) {
                const LaurentMonomial x(1, a, b);
                EXPECT_EQ(pochhammer(x, k + 1),
                          pochhammer(x, k) * (QTRational(1) - LaurentMonomial(1, a + k, b).value()));
            }
}

TEST(Eps, LimitExamples)
{
    const QTRational c = R(one - q);
    const EpsPolynomial eps = EpsPolynomial::linear(0, 1);
    EXPECT_EQ(eps_limit(eps * EpsPolynomial(c), eps), c);
    EXPECT_TRUE(eps_limit(eps * eps, eps).is_zero());
    expect_throws(ErrorCode::GenuinePole, [&] { eps_limit(EpsPolynomial(QTRational(1)), eps); });
}

TEST(Eps, LimitRepresentationIndependent)
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 40; ++i) {
        std::vector<QTRational> n(3), d(3), g(3);
        for (auto &x : n) x = random_rational(rng);
        for (auto &x : d) x = random_rational(rng);
        for (auto &x : g) x = random_rational(rng);
        n[0] = 0;
        d[0] = 0;
        if (i % 2) g[0] = 0;
        const EpsPolynomial N(n), D(d), G(g);
        if (D.is_zero() || G.is_zero()) continue;
        try {
            const QTRational l = eps_limit(N, D);
            EXPECT_EQ(eps_limit(N * G, D * G), l);
        } catch (const MathError &e) {
            EXPECT_EQ(e.code(), ErrorCode::GenuinePole);
            expect_throws(ErrorCode::GenuinePole, [&] { eps_limit(N * G, D * G); });
        }
    }
}
