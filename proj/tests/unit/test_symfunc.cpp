#include <gtest/gtest.h>

#include <random>

#include "macjt/arith/laurent.hpp"
#include "macjt/error.hpp"
#include "macjt/symfunc/macdonald.hpp"
#include "macjt/symfunc/poly_in_vars.hpp"

using namespace macjt;
using namespace macjt::sym;
using arith::QTRational;

namespace {

QTRational qt(int a, int b) { return QTRational::monomial(1, a, b); }
QTRational frac(const QTRational &a, const QTRational &b) { return a / b; }
const QTRational one(1);

PolyInVars x(int n, int i) { return PolyInVars::variable(n, i); }

} // namespace

TEST(SymFunc, PowerSums)
{
    EXPECT_EQ(SymFunc::p({}), SymFunc(one));
    EXPECT_EQ(SymFunc::p({1}) * SymFunc::p({1}), SymFunc::p({1, 1}));
    EXPECT_EQ(SymFunc::p({2}) * SymFunc::p({1}), SymFunc::p({2, 1}));
    try {
        SymFunc::p({3}, 2);
        ADD_FAILURE();
    } catch (const MathError &e) {
        EXPECT_EQ(e.code(), ErrorCode::DegreeCapExceeded);
    }
    EXPECT_TRUE((SymFunc::p({2}, 3) * SymFunc::p({2}, 3)).is_zero());
}

TEST(SymFunc, ClassicalBases)
{
    EXPECT_EQ(e(1), SymFunc::p({1}));
    const QTRational half(mpq_class(1, 2));
    EXPECT_EQ(e(2), (SymFunc::p({1, 1}) - SymFunc::p({2})) * half);
    EXPECT_EQ(h(2), (SymFunc::p({1, 1}) + SymFunc::p({2})) * half);
    const int n = 3;
    EXPECT_EQ(expand_in_variables(e(2), n), x(n, 0) * x(n, 1) + x(n, 0) * x(n, 2) + x(n, 1) * x(n, 2));
    PolyInVars h2(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) h2 += x(n, i) * x(n, j);
    EXPECT_EQ(expand_in_variables(h(2), n), h2);
    const auto m11 = to_m_basis(e(1) * e(1));
    EXPECT_EQ(m11.size(), 2u);
    EXPECT_EQ(m11.at({2}), one);
    EXPECT_EQ(m11.at({1, 1}), QTRational(2));
    for (int k = 1; k <= 5; ++k) {
        const auto em = to_m_basis(e(k));
        ASSERT_EQ(em.size(), 1u);
        EXPECT_EQ(em.begin()->first, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
    }
}

TEST(SymFunc, MonomialRoundTrip)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto &lam : partitions_of(n)) {
            const auto mm = to_m_basis(m(lam));
            ASSERT_EQ(mm.size(), 1u);
            EXPECT_EQ(mm.begin()->first, lam);
            EXPECT_TRUE(mm.begin()->second.is_one());
        }
}

TEST(SymFunc, GFunctions)
{
    EXPECT_EQ(g(0), SymFunc(one));
    EXPECT_EQ(g(1), SymFunc::p({1}) * frac(one - qt(0, 1), one - qt(1, 0)));
    const QTRational c2 = frac(one - qt(0, 2), QTRational(2) * (one - qt(2, 0)));
    const QTRational c11 = frac((one - qt(0, 1)) * (one - qt(0, 1)), QTRational(2) * (one - qt(1, 0)) * (one - qt(1, 0)));
    EXPECT_EQ(g(2), SymFunc::p({2}) * c2 + SymFunc::p({1, 1}) * c11);
}

TEST(SymFunc, GGeneratingSeries)
{
    // prod_i (t u x_i;q)_inf / (u x_i;q)_inf = prod_i sum_k (t;q)_k/(q;q)_k (u x_i)^k
    const int n = 3;
    for (int k = 0; k <= 4; ++k) {
        PolyInVars expected(n);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b) {
                const int c = k - a - b;
                QTRational coef(1);
                for (int d : {a, b, c})
                    coef *= arith::pochhammer({1, 0, 1}, d) / arith::pochhammer({1, 1, 0}, d);
                expected.add_term({a, b, c}, coef);
            }
        EXPECT_EQ(expand_in_variables(g(k), n), expected) << "k=" << k;
    }
}

TEST(SymFunc, ScalarProduct)
{
    EXPECT_EQ(scalar_product(SymFunc::p({1}), SymFunc::p({1})), frac(one - qt(1, 0), one - qt(0, 1)));
    EXPECT_TRUE(scalar_product(SymFunc::p({2}), SymFunc::p({1, 1})).is_zero());
    EXPECT_EQ(scalar_product(SymFunc::p({1, 1}), SymFunc::p({1, 1})),
              QTRational(2) * (one - qt(1, 0)) * (one - qt(1, 0)) / ((one - qt(0, 1)) * (one - qt(0, 1))));
}

TEST(Macdonald, SmallCases)
{
    EXPECT_EQ(macdonald_P({1}), SymFunc::p({1}));
    for (int k = 1; k <= 5; ++k)
        EXPECT_EQ(macdonald_P(Partition(std::vector<int>(static_cast<std::size_t>(k), 1))), e(k)) << k;
    const auto p2 = to_m_basis(macdonald_P({2}));
    EXPECT_TRUE(p2.at({2}).is_one());
    EXPECT_EQ(p2.at({1, 1}), (one - qt(0, 1)) * (one + qt(1, 0)) / (one - qt(1, 1)));
    for (int k = 0; k <= 5; ++k) EXPECT_EQ(macdonald_Q({k}), g(k)) << k;
    EXPECT_EQ(macdonald_Q({}), SymFunc(one));
    EXPECT_TRUE(scalar_product(macdonald_P({1, 1}), macdonald_Q({1, 1})).is_one());
}

TEST(Macdonald, OrthogonalAndUnitriangular)
{
    for (int n = 1; n <= 6; ++n) {
        const auto ps = partitions_of(n);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const auto mm = to_m_basis(macdonald_P(ps[i]));
            EXPECT_TRUE(mm.at(ps[i]).is_one());
            for (const auto &[mu, c] : mm) EXPECT_TRUE(dominance_leq(mu, ps[i]));
            for (std::size_t j = 0; j < i; ++j)
                EXPECT_TRUE(scalar_product(macdonald_P(ps[i]), macdonald_P(ps[j])).is_zero())
                    << ps[i].to_string() << " vs " << ps[j].to_string();
        }
    }
}

TEST(Macdonald, QBasisDuality)
{
    for (int n = 0; n <= 6; ++n)
        for (const auto &lam : partitions_of(n)) {
            const auto coeffs = expand_in_Q_basis(macdonald_Q(lam));
            ASSERT_EQ(coeffs.size(), 1u) << lam.to_string();
            EXPECT_EQ(coeffs.begin()->first, lam);
            EXPECT_TRUE(coeffs.begin()->second.is_one());
        }
}

TEST(Omega, Identities)
{
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(omega(g(k)), e(k)) << k;
    for (int n = 0; n <= 8; ++n)
        for (const auto &lam : partitions_of(n)) {
            EXPECT_EQ(omega(omega(SymFunc::p(lam)), true), SymFunc::p(lam));
            EXPECT_EQ(omega(omega(SymFunc::p(lam), true)), SymFunc::p(lam));
        }
    EXPECT_EQ(omega(g(3).swapped(), true), e(3));
}

TEST(Omega, MapsQToConjugateP)
{
    for (int n = 0; n <= 5; ++n)
        for (const auto &lam : partitions_of(n))
            EXPECT_EQ(omega(macdonald_Q(lam)), macdonald_P(lam.conjugate()).swapped()) << lam.to_string();
}

TEST(Variables, Expansion)
{
    EXPECT_EQ(expand_in_variables(SymFunc::p({1}), 2), x(2, 0) + x(2, 1));
    EXPECT_TRUE(expand_in_variables(e(3), 2).is_zero());
    EXPECT_EQ(expand_in_variables(macdonald_P({1, 1}), 3), x(3, 0) * x(3, 1) + x(3, 0) * x(3, 2) + x(3, 1) * x(3, 2));
    EXPECT_TRUE(expand_in_variables(macdonald_P({2, 1}), 3).is_symmetric());
}

TEST(Variables, CoefficientOfLastVariable)
{
    EXPECT_EQ(coeff_of_last_var(x(2, 0) + x(2, 1), 1), PolyInVars(1, one));
    EXPECT_EQ(coeff_of_last_var(x(2, 0) * x(2, 1), 1), x(1, 0));
    EXPECT_EQ(coeff_of_last_var(expand_in_variables(macdonald_Q({1}), 2), 0), expand_in_variables(macdonald_Q({1}), 1));
}

TEST(Variables, ExpansionIsHomomorphism)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> weight(0, 5), coin(-3, 3);
    auto random_f = [&] {
        SymFunc f;
        for (int i = 0; i < 3; ++i) {
            const auto ps = partitions_of(weight(rng));
            const auto &lam = ps[static_cast<std::size_t>(coin(rng) + 3) % ps.size()];
            f.add_term(lam, QTRational(coin(rng)) + qt(coin(rng) + 3, 1) / (one - qt(1, coin(rng) + 3)));
        }
        return f;
    };
    for (int i = 0; i < 20; ++i) {
        const SymFunc a = random_f(), b = random_f();
        EXPECT_EQ(expand_in_variables(a * b, 3), expand_in_variables(a, 3) * expand_in_variables(b, 3));
        EXPECT_EQ(expand_in_variables(a + b, 3), expand_in_variables(a, 3) + expand_in_variables(b, 3));
    }
}
