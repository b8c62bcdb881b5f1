#include <gtest/gtest.h>

#include "macjt/coefficients/coefficients.hpp"
#include "macjt/error.hpp"

using namespace macjt;
using namespace macjt::coef;

namespace {
QTRational qt(int a, int b) { return QTRational::monomial(1, a, b); }
const QTRational one(1);
const QTRational q = QTRational::q(), t = QTRational::t();

QTRational C(const std::vector<int> &lam, const ThetaVector &th) { return C_coefficient(th, USpec::from_partition(lam)).value; }
} // namespace

TEST(Ck, Examples)
{
    EXPECT_EQ(c_k({2, 1}, 1), one);
    EXPECT_TRUE(c_k({1, 1}, 1).is_zero());
    EXPECT_EQ(c_k({1, 1}, 2), (one - q) * (one - t * t) / ((one - q * t) * (one - t)));
}

TEST(USpec, FromPartition)
{
    const USpec u = USpec::from_partition({3, 1, 0});
    ASSERT_EQ(u.size(), 2u);
    EXPECT_EQ(u.exps[0], std::make_pair(3, 1));
    EXPECT_EQ(u.exps[1], std::make_pair(1, 0));
    EXPECT_EQ(USpec::from_partition({5, 3, 2}), USpec::from_partition({3, 1, 0}));
}

TEST(CCoefficient, ThetaZeroIsOne)
{
    for (const auto &lam : std::vector<std::vector<int>>{{1, 0}, {2, 1}, {1, 1}, {2, 2, 1}, {3, 1, 0}, {2, 2, 2}})
        EXPECT_EQ(C(lam, ThetaVector(lam.size() - 1, 0)), one);
}

TEST(CCoefficient, NegativeEntryIsZero) { EXPECT_TRUE(C({2, 1, 1}, {-1, 1}).is_zero()); }

TEST(CCoefficient, TwoOne)
{
    const QTRational c = C({2, 1}, {1});
    EXPECT_EQ(c.q_equals_t(), QTRational(-1));
    EXPECT_FALSE(c.is_constant());
}

TEST(CCoefficient, OneOneNeedsRegularization)
{
    const CValue c = C_coefficient({0}, USpec::from_partition({1, 1}));
    EXPECT_TRUE(c.regularized);
    EXPECT_EQ(c.value, one);
    EXPECT_EQ(C({1, 1}, {1}), (q * t - q + t - one) / (one - q * t));
}

TEST(CCoefficient, QEqualsTCollapse)
{
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; c <= b; ++c) {
                const USpec u = USpec::from_partition({a, b, c});
                for (int x = 0; x <= 2; ++x)
                    for (int y = 0; y <= 2; ++y) {
                        const QTRational v = C_at_q_equals_t({x, y}, u);
                        const bool binary = x <= 1 && y <= 1;
                        EXPECT_EQ(v, binary ? QTRational((x + y) % 2 ? -1 : 1) : QTRational(0))
                            << a << b << c << " theta " << x << y;
                    }
            }
}

TEST(CCoefficient, DirectionIndependent)
{
    const USpec u = USpec::from_partition({2, 2, 1});
    const QTRational a = C_coefficient_along({0, 1}, u, {1, 3, 11}).value;
    const QTRational b = C_coefficient_along({0, 1}, u, {7, 2, 5}).value;
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, C_coefficient({0, 1}, u).value);
    EXPECT_EQ(c_stats().direction_mismatches, 0);
}

TEST(CCoefficient, MatchesNumericForm)
{
    const mpq_class q0(2, 3), t0(5, 7);
    const USpec u = USpec::from_partition({3, 1, 0});
    for (const ThetaVector &th : {ThetaVector{0, 0}, ThetaVector{1, 0}, ThetaVector{0, 1}, ThetaVector{2, 1}}) {
        std::vector<mpq_class> uv;
        for (auto [a, b] : u.exps) uv.push_back(QTRational::monomial(1, a, b).evaluate(q0, t0));
        EXPECT_EQ(C_coefficient(th, u).value.evaluate(q0, t0), C_second_form<mpq_class>(th, uv, q0, t0));
    }
}

TEST(CCoefficient, FormsAgree)
{
    EXPECT_EQ(compare_C_forms(1, 3, 20, 11), 0);
    EXPECT_EQ(compare_C_forms(2, 2, 20, 12), 0);
    EXPECT_EQ(compare_C_forms(3, 2, 20, 13), 0);
}

TEST(Recurrences, HoldForC)
{
    for (const auto &lam : std::vector<std::vector<int>>{{2, 1, 1}, {3, 1, 0}}) {
        const USpec u = USpec::from_partition(lam);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; a + b <= 2; ++b) {
                EXPECT_TRUE(check_recurrence_5({a, b}, u));
                EXPECT_TRUE(check_remark_recurrence({a, b}, u));
            }
    }
}

TEST(Recurrences, DetectCorruption)
{
    CFunction bad = [](const ThetaVector &th, const USpec &u) {
        QTRational v = C_coefficient(th, u).value;
        return th == ThetaVector{1, 0} ? v * QTRational(2) : v;
    };
    const USpec u = USpec::from_partition({2, 2, 1});
    bool caught5 = false, caughtr = false;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) {
            caught5 |= !check_recurrence_5({a, b}, u, bad);
            caughtr |= !check_remark_recurrence({a, b}, u, bad);
        }
    EXPECT_TRUE(caught5);
    EXPECT_TRUE(caughtr);
}

TEST(Pieri, OneTimesOneOne)
{
    const auto psi = pieri_psi(1, Partition({1, 1}));
    ASSERT_EQ(psi.size(), 2u);
    EXPECT_EQ(psi.at({0, 0}), one);
    EXPECT_TRUE(psi.count({1, 0}));
}

TEST(Pieri, ThetaZeroIsOne)
{
    for (const auto &[r, mu] : std::vector<std::pair<int, Partition>>{{1, Partition({2, 1})}, {1, Partition({3})}, {2, Partition({2, 2})}})
        EXPECT_EQ(pieri_psi(r, mu).at(ThetaVector(mu.length(), 0)), one);
}

TEST(Lemma2, Identity)
{
    for (const auto &lam : {Partition({1}), Partition({2, 1}), Partition({1, 1, 1}), Partition({3, 1}), Partition({2, 2, 1})})
        EXPECT_TRUE(check_lemma2(lam, 3)) << lam.to_string();
}
