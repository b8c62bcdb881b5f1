#include <gtest/gtest.h>

#include "macjt/error.hpp"
#include "macjt/partitions/partition.hpp"

using namespace macjt;

TEST(Partition, Conjugate)
{
    EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
    EXPECT_EQ(Partition().conjugate(), Partition());
    EXPECT_EQ(Partition({2, 2, 1}).conjugate(), Partition({3, 2}));
}

TEST(Partition, ConjugationProperties)
{
    for (int n = 0; n <= 12; ++n)
        for (const auto &lam : partitions_of(n)) {
            EXPECT_EQ(lam.conjugate().conjugate(), lam);
            const Partition c = lam.conjugate();
            for (std::size_t i = 1; i <= lam.length(); ++i)
                EXPECT_EQ(c.multiplicity(static_cast<int>(i)), lam.part(i) - lam.part(i + 1));
        }
}

TEST(Partition, ZLambda)
{
    EXPECT_EQ(z_lambda({2, 1}), 2);
    EXPECT_EQ(z_lambda({1, 1, 1}), 6);
    EXPECT_EQ(z_lambda({}), 1);
    EXPECT_EQ(z_lambda({2, 2, 1}), 8);
}

TEST(Partition, RemoveOne)
{
    EXPECT_EQ(remove_one({2, 1}, 1), Composition({1, 1}));
    EXPECT_EQ(remove_one({1, 1}, 1), Composition({0, 1}));
    EXPECT_FALSE(is_partition(remove_one({1, 1}, 1)));
    EXPECT_EQ(remove_one({3, 2, 2}, 3), Composition({3, 2, 1}));
    EXPECT_THROW(remove_one({1}, 0), MathError);
}

TEST(Partition, Enumeration)
{
    EXPECT_EQ(partitions_of(2, 2), (std::vector<Partition>{{2}, {1, 1}}));
    EXPECT_EQ(partitions_of(0, 5), (std::vector<Partition>{Partition()}));
    EXPECT_EQ(partitions_of(4, 2), (std::vector<Partition>{{4}, {3, 1}, {2, 2}}));
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n < 10; ++n) EXPECT_EQ(partitions_of(n, n).size(), counts[static_cast<std::size_t>(n)]);
}

TEST(Partition, EnumerationRefinesDominance)
{
    for (int n = 1; n <= 9; ++n) {
        const auto ps = partitions_of(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j) EXPECT_FALSE(dominance_leq(ps[i], ps[j]));
    }
}

TEST(Partition, Dominance)
{
    EXPECT_TRUE(dominance_leq({1, 1, 1}, {3}));
    EXPECT_FALSE(dominance_leq({3}, {1, 1, 1}));
    EXPECT_TRUE(dominance_leq({2, 2}, {3, 1}));
    try {
        dominance_leq({2}, {1});
        ADD_FAILURE();
    } catch (const MathError &e) {
        EXPECT_EQ(e.code(), ErrorCode::WeightMismatch);
    }
}

TEST(Partition, TextForm)
{
    EXPECT_EQ(Partition::parse("3,2,1"), Partition({3, 2, 1}));
    EXPECT_EQ(Partition::parse("2,1,0"), Partition({2, 1}));
    EXPECT_EQ(Partition({3, 2, 1}).to_string(), "3,2,1");
    EXPECT_THROW(Partition::parse("1,2"), MathError);
    EXPECT_THROW(Partition::parse("a"), MathError);
}
