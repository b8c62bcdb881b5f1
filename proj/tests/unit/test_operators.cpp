#include <gtest/gtest.h>

#include "macjt/operators/hfunction.hpp"
#include "macjt/operators/operators.hpp"
#include "macjt/symfunc/macdonald.hpp"

using namespace macjt;
using namespace macjt::ops;
using sym::expand_in_variables;
using sym::macdonald_P;

namespace {
QTRational qt(int a, int b) { return QTRational::monomial(1, a, b); }
const QTRational one(1);
} // namespace

TEST(OperatorE, Examples)
{
    EXPECT_EQ(apply_E(PolyInVars(3, one)), PolyInVars(3, one + qt(0, 1) + qt(0, 2)));
    const PolyInVars f = PolyInVars::variable(2, 0) + PolyInVars::variable(2, 1);
    EXPECT_EQ(apply_E(f), f * (qt(1, 1) + one));
    const PolyInVars p21 = expand_in_variables(macdonald_P({2, 1}), 3);
    EXPECT_EQ(apply_E(p21), p21 * (qt(2, 2) + qt(1, 1) + one));
}

TEST(OperatorE, RejectsNonSymmetric)
{
    try {
        apply_E(PolyInVars::variable(2, 0));
        ADD_FAILURE();
    } catch (const MathError &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
    }
}

TEST(OperatorD, Examples)
{
    const auto d1 = apply_D(PolyInVars(2, one));
    const auto ev = D_eigenvalue({}, 2);
    ASSERT_EQ(d1.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(d1[k], PolyInVars(2, ev.at(k)));
    EXPECT_EQ(ev.at(1), qt(0, 1) + one);
    const PolyInVars f = PolyInVars::variable(2, 0) + PolyInVars::variable(2, 1);
    const auto d2 = apply_D(f);
    const auto ev2 = D_eigenvalue({1}, 2);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(d2[k], f * ev2.at(k));
    EXPECT_EQ(ev2.at(1), qt(1, 1) + one);
    EXPECT_EQ(ev2.at(2), qt(1, 1));
    const PolyInVars p2 = expand_in_variables(macdonald_P({2}), 2);
    const auto d3 = apply_D(p2);
    const auto ev3 = D_eigenvalue({2}, 2);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(d3[k], p2 * ev3.at(k));
    EXPECT_EQ(apply_D_at(p2, QTRational(3)), p2 * ev3(QTRational(3)));
}

TEST(OperatorD, GenuinePolynomialOutput)
{
    for (int n = 1; n <= 3; ++n)
        for (int w = 0; w <= 6; ++w)
            for (const auto &lam : partitions_of(w)) {
                const PolyInVars f = expand_in_variables(sym::m(lam, 12), n);
                EXPECT_NO_THROW(apply_E(f));
                EXPECT_NO_THROW(apply_D(f));
            }
}

TEST(HFunction, ValueAtZeroIsOne)
{
    const std::vector<mpq_class> u{mpq_class(2, 3), mpq_class(5), mpq_class(-7, 2)};
    const std::vector<mpq_class> v{mpq_class(1, 9), mpq_class(-3), mpq_class(4, 5)};
    const auto h = H_det(u, v, mpq_class(3, 11));
    EXPECT_EQ(h.at(0), 1);
    EXPECT_LE(h.size(), 4u);
}

TEST(HFunction, SingleEntry)
{
    const QTRational u = qt(2, 1), v = qt(1, 0), t = QTRational::t();
    const auto h = H_det<QTRational>({u}, {v}, t);
    EXPECT_TRUE(h.at(0).is_one());
    EXPECT_EQ(h.at(1), t * (u - v) / (t * u - v));
}

TEST(HFunction, SymbolicVanishingAtMinusOne)
{
    const QTRational t = QTRational::t();
    const std::vector<QTRational> u{qt(2, 1), qt(0, 0), t.inverse()};
    const std::vector<QTRational> v{qt(3, 1), qt(1, 0), QTRational(0)};
    EXPECT_TRUE(H_det(u, v, t)(QTRational(-1)).is_zero());
}

TEST(HFunction, RandomChecks)
{
    for (int n = 1; n <= 3; ++n) {
        EXPECT_EQ(check_H_vanishing(n, 10, 100 + n), 0);
        EXPECT_EQ(check_H_substitution(n, 5, 200 + n), 0);
    }
}

TEST(Lemma1, BothEquationsSmall)
{
    for (int which : {1, 2})
        for (int n : {1, 2}) {
            const auto rep = check_lemma1(which, n, 5, 7);
            EXPECT_TRUE(rep.passed()) << rep.to_json().dump();
        }
}

TEST(Lemma1, DetectsCorruption)
{
    const std::vector<mpq_class> u{mpq_class(2, 3), mpq_class(5, 2)}, v{mpq_class(-1, 7), mpq_class(4, 3)};
    const mpq_class q(3, 5), t(-2, 7);
    const auto [l1, r1] = lemma1_sides(1, u, v, q, t);
    EXPECT_TRUE(apoly_equal(l1, r1));
    auto w = v;
    w[1] += 1;
    const auto [l2, r2] = lemma1_sides(1, u, w, q, t);
    EXPECT_FALSE(apoly_equal(l1, r2));
    EXPECT_FALSE(apoly_equal(l2, r1));
}
