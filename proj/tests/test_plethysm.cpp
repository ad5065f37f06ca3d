#include <mackey/oracle.hpp>
#include <mackey/plethysm.hpp>

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

BigInt multiset(unsigned n, unsigned k) { return n == 0 ? BigInt(k == 0 ? 1 : 0) : binomial(n + k - 1, k); }

} // namespace

TEST(Plethysm, CauchyExamples)
{
    PairDecomposition sym3;
    for (const auto& p : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}})
        sym3.add({p, p}, 1);
    EXPECT_EQ(cauchySym(3), sym3);

    PairDecomposition ext2;
    ext2.add({Partition{2}, Partition{1, 1}}, 1);
    ext2.add({Partition{1, 1}, Partition{2}}, 1);
    EXPECT_EQ(cauchyExt(2), ext2);

    EXPECT_EQ(cauchySym(0), PairDecomposition::single({Partition{}, Partition{}}));
}

TEST(Plethysm, PowerExamples)
{
    EXPECT_EQ(powerOfSym2(2, PowerKind::symmetric), ofPartitions({Partition{4}, Partition{2, 2}}));
    EXPECT_EQ(powerOfExt2(2, PowerKind::exterior), ofPartitions({Partition{2, 1, 1}}));
    EXPECT_EQ(powerOfSym2(0, PowerKind::exterior), ofPartitions({Partition{}}));
    EXPECT_EQ(powerOfSym2(2, PowerKind::exterior), ofPartitions({Partition{3, 1}}));
    EXPECT_EQ(powerOfExt2(2, PowerKind::symmetric), ofPartitions({Partition{1, 1, 1, 1}, Partition{2, 2}}));
}

TEST(Plethysm, CauchyDimensionIdentities)
{
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned a = 1; a <= 5; ++a)
            for (unsigned b = 1; b <= 5; ++b) {
                BigInt sym = 0, ext = 0;
                for (const auto& [pp, c] : cauchySym(k))
                    sym += c * glDimension(pp.first, a) * glDimension(pp.second, b);
                for (const auto& [pp, c] : cauchyExt(k))
                    ext += c * glDimension(pp.first, a) * glDimension(pp.second, b);
                EXPECT_EQ(sym, binomial(a * b + k - 1, k));
                EXPECT_EQ(ext, binomial(a * b, k));
            }
}

TEST(Plethysm, PowerDimensionIdentities)
{
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned n = 2; n <= 5; ++n) {
            const unsigned s2 = n * (n + 1) / 2, e2 = n * (n - 1) / 2;
            EXPECT_EQ(dimension(powerOfSym2(k, PowerKind::symmetric), n), multiset(s2, k));
            EXPECT_EQ(dimension(powerOfSym2(k, PowerKind::exterior), n), binomial(s2, k));
            EXPECT_EQ(dimension(powerOfExt2(k, PowerKind::symmetric), n), multiset(e2, k));
            EXPECT_EQ(dimension(powerOfExt2(k, PowerKind::exterior), n), binomial(e2, k));
        }
}

TEST(Plethysm, ExteriorOfExteriorIsSpecialSet)
{
    for (unsigned k = 0; k <= 5; ++k) {
        PartitionDecomposition special;
        for (const auto& p : partitionsOf(2 * k))
            if (isSpecial(p))
                special.add(p, 1);
        EXPECT_EQ(powerOfExt2(k, PowerKind::exterior), special) << k;
    }
}

TEST(Plethysm, TermsHaveTwiceTheDegree)
{
    for (unsigned k = 0; k <= 5; ++k)
        for (auto kind : {PowerKind::symmetric, PowerKind::exterior})
            for (const auto& d : {powerOfSym2(k, kind), powerOfExt2(k, kind)})
                for (const auto& [p, c] : d) {
                    EXPECT_EQ(p.degree(), 2 * k);
                    EXPECT_EQ(c, 1);
                }
}

TEST(Plethysm, MatchesBruteForceOracle)
{
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned n = 2; n <= 5; ++n)
            for (auto outer : {PowerKind::symmetric, PowerKind::exterior}) {
                auto truncate = [n](const PartitionDecomposition& d) {
                    return d.filter([n](const Partition& p) { return p.length() <= n; });
                };
                EXPECT_EQ(truncate(powerOfSym2(k, outer)),
                          oracle::bruteForcePlethysm(outer, k, oracle::InnerSpace::sym2, n))
                    << "sym2 k=" << k << " N=" << n;
                EXPECT_EQ(truncate(powerOfExt2(k, outer)),
                          oracle::bruteForcePlethysm(outer, k, oracle::InnerSpace::ext2, n))
                    << "ext2 k=" << k << " N=" << n;
            }
}

TEST(Plethysm, CauchyMatchesBruteForceOracle)
{
    for (unsigned k = 1; k <= 4; ++k)
        for (auto outer : {PowerKind::symmetric, PowerKind::exterior})
            EXPECT_EQ(cauchy(outer, k), oracle::bruteForceCauchy(outer, k, k, k)) << k;
}

TEST(Plethysm, DegreeCapRefuses)
{
    ScopedDegreeCap cap(6);
    EXPECT_THROW(powerOfSym2(4, PowerKind::symmetric), CapExceeded);
    EXPECT_THROW(cauchySym(7), CapExceeded);
}
