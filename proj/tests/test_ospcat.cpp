#include <mackey/oracle.hpp>
#include <mackey/ospcat.hpp>

#include <gtest/gtest.h>

using namespace mackey;

namespace {

PartitionDecomposition ofPartitions(std::initializer_list<Partition> ps)
{
    PartitionDecomposition d;
    for (const auto& p : ps)
        d.add(p, 1);
    return d;
}

BigInt dimension(const PartitionDecomposition& d, unsigned n)
{
    BigInt s = 0;
    for (const auto& [p, c] : d)
        s += c * glDimension(p, n);
    return s;
}

} // namespace

TEST(Ospcat, OrderExamples)
{
    EXPECT_TRUE(ospLeq({1, 0}, {0, 1}));
    EXPECT_EQ(ospDefect({1, 0}, {0, 1}), 1u);
    EXPECT_FALSE(ospLeq({0, 1}, {1, 0}));
    EXPECT_FALSE(ospDefect({0, 1}, {1, 0}).has_value());
    for (unsigned l = 0; l <= 3; ++l)
        for (unsigned m = 0; m <= 3; ++m)
            EXPECT_EQ(ospDefect({l, m}, {l, m}), 0u);
}

TEST(Ospcat, DefectIsLongestChain)
{
    for (unsigned l = 0; l <= 4; ++l)
        for (unsigned m = 0; m <= 4; ++m)
            for (unsigned l2 = 0; l2 <= 4; ++l2)
                for (unsigned m2 = 0; m2 <= 4; ++m2) {
                    const OspPair a{l, m}, b{l2, m2};
                    EXPECT_EQ(ospDefect(a, b), ospLongestChainLength(a, b)) << a.str() << " " << b.str();
                }
}

TEST(Ospcat, OrderIsPartialOrder)
{
    std::vector<OspPair> all;
    for (unsigned l = 0; l <= 3; ++l)
        for (unsigned m = 0; m <= 3; ++m)
            all.push_back({l, m});
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a != b && ospLeq(a, b)) {
                EXPECT_FALSE(ospLeq(b, a));
            }
            for (const auto& c : all)
                if (ospLeq(a, b) && ospLeq(b, c)) {
                    EXPECT_TRUE(ospLeq(a, c));
                }
        }
}

TEST(Ospcat, LayerExamples)
{
    const auto o = ospLayersOfI(OspKind::orthogonal, 2);
    const auto sp = ospLayersOfI(OspKind::symplectic, 1);
    EXPECT_EQ(o[0], ofPartitions({Partition{}}));
    EXPECT_EQ(o[1], ofPartitions({Partition{2}}));
    EXPECT_EQ(sp[1], ofPartitions({Partition{1, 1}}));
    EXPECT_EQ(o[2], ofPartitions({Partition{4}, Partition{2, 2}}));
}

TEST(Ospcat, LayerDimensions)
{
    for (unsigned n = 2; n <= 5; ++n) {
        const auto o = ospLayersOfI(OspKind::orthogonal, 3);
        const auto sp = ospLayersOfI(OspKind::symplectic, 3);
        for (unsigned k = 0; k <= 3; ++k) {
            EXPECT_EQ(dimension(o[k], n), binomial(n * (n + 1) / 2 + k - 1, k));
            const unsigned e2 = n * (n - 1) / 2;
            EXPECT_EQ(dimension(sp[k], n), e2 == 0 ? BigInt(k == 0 ? 1 : 0) : binomial(e2 + k - 1, k));
        }
    }
}

TEST(Ospcat, SocleMatchesOracle)
{
    for (unsigned j = 0; j <= 2; ++j)
        for (unsigned n = 4; n <= 5; ++n) {
            auto truncate = [n](const PartitionDecomposition& d) {
                return d.filter([n](const Partition& p) { return p.length() <= n; });
            };
            if (j == 0)
                continue;
            EXPECT_EQ(truncate(ospResolutionSocle(OspKind::orthogonal, j)),
                      oracle::bruteForcePlethysm(PowerKind::exterior, j, oracle::InnerSpace::sym2, n));
            EXPECT_EQ(truncate(ospResolutionSocle(OspKind::symplectic, j)),
                      oracle::bruteForcePlethysm(PowerKind::exterior, j, oracle::InnerSpace::ext2, n));
        }
}

TEST(Ospcat, ExtToTrivialExamples)
{
    // Lambda^2 S^2 = S_(3,1) and Lambda^2 Lambda^2 = S_(2,1,1)
    EXPECT_EQ(ospExtToTrivial({OspKind::orthogonal, Partition{3, 1}, {}}, 2), 1u);
    EXPECT_EQ(ospExtToTrivial({OspKind::symplectic, Partition{2, 1, 1}, {}}, 2), 1u);
    EXPECT_EQ(ospExtToTrivial({OspKind::orthogonal, Partition{2, 1, 1}, {}}, 2), 0u);
    EXPECT_EQ(ospExtToTrivial({OspKind::orthogonal, {}, Partition{1}}, 0), 0u);
    EXPECT_EQ(ospExtToTrivial({OspKind::symplectic, {}, Partition{1}}, 0), 0u);
    EXPECT_EQ(ospExtToTrivial({OspKind::symplectic, {}, {}}, 0), 1u);
}

TEST(Ospcat, ExtToTrivialMatchesSocle)
{
    for (auto kind : {OspKind::orthogonal, OspKind::symplectic})
        for (unsigned j = 0; j <= 3; ++j) {
            const auto soc = ospResolutionSocle(kind, j);
            for (unsigned d = 0; d <= 6; ++d)
                for (const auto& lam : partitionsOf(d))
                    EXPECT_EQ(BigInt(ospExtToTrivial({kind, lam, {}}, j)), soc.coefficient(lam)) << lam;
        }
}

TEST(Ospcat, ConjugationIntertwinesExt)
{
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; a + b <= 6; ++b)
            for (const auto& lam : partitionsOf(a))
                for (const auto& mu : partitionsOf(b))
                    for (unsigned j = 0; j <= 3; ++j) {
                        const OspIndex x{OspKind::orthogonal, lam, mu};
                        EXPECT_EQ(ospExtToTrivial(x, j), ospExtToTrivial(ospConjugate(x), j)) << x;
                    }
}

TEST(Ospcat, ConjugateExamples)
{
    const OspIndex x{OspKind::orthogonal, Partition{2}, {}};
    EXPECT_EQ(ospConjugate(x), (OspIndex{OspKind::symplectic, Partition{1, 1}, {}}));
    EXPECT_EQ(ospConjugate(ospConjugate(x)), x);
    const OspIndex y{OspKind::orthogonal, {}, Partition{2, 1}};
    EXPECT_EQ(ospConjugate(y), (OspIndex{OspKind::symplectic, {}, Partition{2, 1}}));
    EXPECT_EQ(ospConjugate(x).str(), "sp:([1,1],[])");
}

TEST(Ospcat, Parsing)
{
    EXPECT_EQ(parseOspKind("o"), OspKind::orthogonal);
    EXPECT_EQ(parseOspKind("sp"), OspKind::symplectic);
    EXPECT_THROW(parseOspKind("gl"), ParseError);
    EXPECT_EQ(parseOspPair("3,1"), (OspPair{3, 1}));
    try {
        parseOspPair("3,x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
}
