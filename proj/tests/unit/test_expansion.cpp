#include <gtest/gtest.h>

#include "macjt/error.hpp"
#include "macjt/expansion/expansion.hpp"
#include "macjt/expansion/linsolve.hpp"
#include "macjt/io/json.hpp"
#include "macjt/symfunc/macdonald.hpp"

using namespace macjt;
using namespace macjt::expansion;

namespace {
const QTRational one(1);
const QTRational q = QTRational::q(), t = QTRational::t();
} // namespace

TEST(LinSolve, SolvesAndRejects)
{
    std::vector<std::vector<QTRational>> A{{one, q}, {t, one}, {one + t, one + q}};
    const auto x = solve_exact(A, {one + q, one + t, QTRational(2) + q + t});
    EXPECT_EQ(x[0], one);
    EXPECT_EQ(x[1], one);
    try {
        solve_exact({{one, q}, {one, q}}, {one, one});
        ADD_FAILURE();
    } catch (const MathError &e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularSystem);
    }
    try {
        solve_exact(A, {one, one, one});
        ADD_FAILURE();
    } catch (const MathError &e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularSystem);
    }
}

TEST(Theorem1, SchurTwoOne)
{
    const Expansion x = theorem1_expand({2, 1}, 0, true);
    ASSERT_EQ(x.terms.size(), 2u);
    EXPECT_EQ(x.terms[0].theta, ThetaVector{0});
    EXPECT_EQ(x.terms[0].coefficient, one);
    EXPECT_EQ(x.terms[0].row, 1);
    EXPECT_EQ(x.terms[0].target, (Composition{2}));
    EXPECT_EQ(x.terms[1].coefficient, QTRational(-1));
    EXPECT_EQ(x.terms[1].row, 0);
    EXPECT_EQ(x.terms[1].target, (Composition{3}));
}

TEST(Theorem1, SingleRow)
{
    const Expansion x = theorem1_expand({3, 0}, 2);
    ASSERT_EQ(x.terms.size(), 1u);
    EXPECT_EQ(x.terms[0].coefficient, one);
    EXPECT_EQ(x.terms[0].row, 0);
    EXPECT_EQ(reconstruct(x, 3), sym::g(3, 3));
}

TEST(Theorem1, OneOneAgainstOracle)
{
    const Expansion x = theorem1_expand({1, 1});
    const auto F = inverse_pieri_oracle({1, 1});
    ASSERT_EQ(F.size(), 2u);
    EXPECT_EQ(F.at({0}), one);
    ASSERT_EQ(x.terms.size(), 2u);
    for (const auto &term : x.terms) EXPECT_EQ(term.coefficient, F.at(term.theta));
}

TEST(Theorem1, ReconstructsSmallWeights)
{
    for (int w = 1; w <= 5; ++w)
        for (const auto &lam : partitions_of(w, 3)) {
            const Expansion x = theorem1_expand(lam);
            EXPECT_EQ(reconstruct(x, w), sym::macdonald_Q(lam, w)) << lam.to_string();
            for (const auto &term : x.terms) EXPECT_EQ(term.row, lam[x.lambda.size() - 1] - std::accumulate(term.theta.begin(), term.theta.end(), 0));
        }
}

TEST(Theorem1, PaddedAmbient)
{
    const Expansion x = theorem1_expand({2, 1}, 3);
    EXPECT_EQ(x.lambda, (Composition{2, 1, 0}));
    EXPECT_EQ(reconstruct(x, 3), sym::macdonald_Q({2, 1}, 3));
}

TEST(Theorem1, OffBasisReported)
{
    const Expansion x = theorem1_expand({1, 1, 1});
    ASSERT_EQ(x.off_basis.size(), 1u);
    EXPECT_EQ(x.off_basis[0].theta, (ThetaVector{0, 1}));
    EXPECT_FALSE(x.off_basis[0].coefficient.is_zero());
}

TEST(Theorem1, PieriRoundTrip)
{
    for (const auto &lam : {Partition({2, 1}), Partition({2, 2, 1}), Partition({1, 1, 1})}) {
        const auto back = pieri_round_trip(theorem1_expand(lam));
        ASSERT_EQ(back.size(), 1u) << lam.to_string();
        EXPECT_EQ(back.begin()->first, lam);
        EXPECT_EQ(back.begin()->second, one);
    }
}

TEST(InversePieri, SingleRow) { EXPECT_EQ(inverse_pieri_oracle({4}), (std::map<ThetaVector, QTRational>{{{}, one}})); }

TEST(Theorem3, Examples)
{
    const GResult s = theorem3_expand({2, 1}, 0, true);
    EXPECT_EQ(s.aggregate, (GExpansion{{Partition({2, 1}), one}, {Partition({3}), QTRational(-1)}}));
    EXPECT_EQ(theorem3_expand({3}).aggregate, (GExpansion{{Partition({3}), one}}));
    const GResult x = theorem3_expand({2, 1, 1});
    EXPECT_TRUE(same_aggregate(x.aggregate, g_basis_expansion(sym::macdonald_Q({2, 1, 1}, 4), 4)));
    EXPECT_EQ(reconstruct(x, 4), sym::macdonald_Q({2, 1, 1}, 4));
}

namespace {
void iterate(const Composition &lam, const QTRational &c, Composition acc, GExpansion &out)
{
    if (lam.size() == 1) {
        acc.push_back(lam[0]);
        std::sort(acc.begin(), acc.end(), std::greater<>());
        out[to_partition(acc)] += c;
        return;
    }
    const Expansion x = theorem1_expand_composition(lam);
    for (const auto *list : {&x.terms, &x.off_basis})
        for (const auto &term : *list) {
            Composition a = acc;
            a.push_back(term.row);
            iterate(term.target, c * term.coefficient, a, out);
        }
}
} // namespace

TEST(Theorem3, MatchesLiteralIteration)
{
    for (const auto &lam : {Partition({2, 1, 1}), Partition({2, 2, 1}), Partition({3, 2, 1}), Partition({2, 2, 2})}) {
        GExpansion it;
        iterate(lam.parts(), one, {}, it);
        std::erase_if(it, [](const auto &kv) { return kv.second.is_zero(); });
        EXPECT_TRUE(same_aggregate(it, theorem3_expand(lam).aggregate)) << lam.to_string();
    }
}

TEST(Theorem2, Columns)
{
    const Expansion x = theorem2_expand({1, 1, 1});
    ASSERT_EQ(x.terms.size(), 1u);
    EXPECT_EQ(x.terms[0].row, 3);
    EXPECT_EQ(reconstruct(x, 3), sym::e(3, 3));
}

TEST(Theorem2, OmegaImage)
{
    const Partition lam({2, 2, 1});
    const Expansion x = theorem2_expand(lam);
    EXPECT_EQ(x.lambda, (Composition{1, 2}));
    EXPECT_TRUE(same_terms(x, omega_image(theorem1_expand(lam.conjugate()))));
    EXPECT_EQ(reconstruct(x, 5), sym::macdonald_P(lam, 5));
    const sym::SymFunc q_conj = reconstruct(theorem1_expand(lam.conjugate()), 5).swapped();
    EXPECT_EQ(sym::omega(q_conj, true), reconstruct(x, 5));
}

TEST(Theorem4, OmegaImage)
{
    const Partition lam({2, 1, 1});
    const GResult x = theorem4_expand(lam);
    EXPECT_TRUE(same_aggregate(x.aggregate, omega_image(theorem3_expand(lam.conjugate()).aggregate)));
    EXPECT_EQ(reconstruct(x, 4), sym::macdonald_P(lam, 4));
}

TEST(Schur, Checks)
{
    for (const auto &lam : {Partition({}), Partition({1}), Partition({2, 1}), Partition({3, 2, 1}), Partition({2, 2})}) {
        EXPECT_TRUE(schur_check(lam)) << lam.to_string();
        EXPECT_TRUE(nk_check(lam)) << lam.to_string();
    }
    EXPECT_EQ(jacobi_trudi({2, 1}), (IntExpansion{{Partition({2, 1}), 1}, {Partition({3}), -1}}));
    EXPECT_TRUE(jacobi_trudi({1, 2}).empty());
}

TEST(Render, Text)
{
    EXPECT_EQ(render_text(theorem1_expand({2, 1}, 0, true)), "s(2,1) = h1*s(2) - s(3)\n       = h2*h1 - h3\n");
    EXPECT_EQ(render_text(theorem1_expand({3})), "Q(3) = Q(3)\n");
    EXPECT_EQ(render_text(theorem3_expand({2, 1}, 0, true)), "s(2,1) = h2*h1 - h3\n");
}

TEST(Render, JsonAndLatexStable)
{
    const Expansion x = theorem1_expand({1, 1});
    const auto j = to_json(x);
    EXPECT_EQ(j["theorem"], 1);
    EXPECT_EQ(j["parameters"], "q,t");
    EXPECT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(j.dump(), to_json(theorem1_expand({1, 1})).dump());
    EXPECT_EQ(render_latex(x), render_latex(theorem1_expand({1, 1})));
    EXPECT_EQ(latex(QTRational(1) / (QTRational(1) - q * t)), "\\frac{-1}{qt - 1}");
    const auto g = to_json(theorem4_expand({2, 1}));
    EXPECT_EQ(g["parameters"], "t,q");
    EXPECT_EQ(g["multiplicities"], (Composition{1, 1}));
}

TEST(Render, JsonRoundTrip)
{
    const Expansion x = theorem1_expand({2, 2, 1});
    const auto j = nlohmann::json::parse(to_json(x).dump());
    ASSERT_EQ(j["terms"].size(), x.terms.size());
    for (std::size_t i = 0; i < x.terms.size(); ++i) {
        EXPECT_EQ(io::rational_from_json(j["terms"][i]["coefficient"]), x.terms[i].coefficient);
        EXPECT_EQ(j["terms"][i]["theta"].get<ThetaVector>(), x.terms[i].theta);
        EXPECT_EQ(j["terms"][i]["target"].get<Composition>(), x.terms[i].target);
        EXPECT_EQ(j["terms"][i]["row"].get<int>(), x.terms[i].row);
    }
    const GResult g = theorem3_expand({2, 2, 1});
    const auto k = nlohmann::json::parse(to_json(g).dump());
    GExpansion back;
    for (const auto &e : k["aggregate"]) back.emplace(Partition(e["index"].get<Composition>()), io::rational_from_json(e["coefficient"]));
    EXPECT_TRUE(same_aggregate(back, g.aggregate));
}
