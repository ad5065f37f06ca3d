#include <mackey/ext.hpp>
#include <mackey/oracle.hpp>

#include <gtest/gtest.h>

using namespace mackey;

namespace {

SimpleIndex idx(const char* text) { return parseSimpleIndex(text); }

Decomposition ofIndices(std::initializer_list<const char*> xs)
{
    Decomposition d;
    for (const char* x : xs)
        d.add(idx(x), 1);
    return d;
}

std::vector<SimpleIndex> thickUpTo(unsigned degree)
{
    std::vector<SimpleIndex> out;
    for (unsigned a = 0; a <= degree; ++a)
        for (unsigned b = 0; a + b <= degree; ++b)
            for (const auto& lam : partitionsOf(a))
                for (const auto& pi : partitionsOf(b))
                    out.push_back({lam, {}, {}, pi});
    return out;
}

std::vector<SimpleIndex> simpleUpTo(unsigned degree)
{
    std::vector<SimpleIndex> out;
    for (unsigned total = 0; total <= degree; ++total)
        for (unsigned a = 0; a <= total; ++a)
            for (unsigned b = 0; a + b <= total; ++b)
                for (unsigned c = 0; a + b + c <= total; ++c) {
                    const unsigned d = total - a - b - c;
                    for (const auto& lam : partitionsOf(a))
                        for (const auto& mu : partitionsOf(b))
                            for (const auto& nu : partitionsOf(c))
                                for (const auto& pi : partitionsOf(d))
                                    out.push_back({lam, mu, nu, pi});
                }
    return out;
}

} // namespace

TEST(Ext, ResolutionTermExamples)
{
    EXPECT_EQ(resolutionTerm(0).socle, ofIndices({"[],[],[],[]"}));
    EXPECT_EQ(resolutionTerm(1).socle, ofIndices({"[1],[],[],[1]"}));
    EXPECT_EQ(resolutionTerm(2).socle, ofIndices({"[2],[],[],[1,1]", "[1,1],[],[],[2]"}));
    EXPECT_EQ(resolutionTerm(2).body, "L2F (x) I");
}

TEST(Ext, KernelLayerExamples)
{
    EXPECT_EQ(kernelLayer(0, 0), ofIndices({"[],[],[],[]"}));
    for (unsigned k = 1; k <= 4; ++k)
        EXPECT_TRUE(kernelLayer(0, k).isZero());
    // ker(F (x) F -> Lambda^2 F) is S^2 F
    EXPECT_EQ(kernelLayer(1, 1), ofIndices({"[2],[],[],[2]", "[1,1],[],[],[1,1]"}));
    EXPECT_EQ(kernelLayer(1, 0), ofIndices({"[1],[],[],[1]"}));
    EXPECT_EQ(kernelLayer(2, 0), resolutionTerm(2).socle);
}

TEST(Ext, KernelLayerIsHookSchurFunctorOfF)
{
    for (unsigned j = 1; j <= 4; ++j)
        for (unsigned k = 0; j + k + 1 <= 5; ++k)
            EXPECT_EQ(kernelLayer(j, k), thickIndices(oracle::bivariateSchur(kernelHook(j, k))))
                << "j=" << j << " k=" << k;
}

TEST(Ext, KernelIsImageOfPreviousDegree)
{
    // [K_j] = [I_(j-1)] - [K_(j-1)], compared F-degree by F-degree
    ScopedDegreeCap cap(16);
    for (unsigned j = 1; j <= 3; ++j)
        for (unsigned k = 0; k <= 4; ++k) {
            Decomposition image = thickIndices(extSymProduct(j - 1, k + 1));
            image -= kernelLayer(j - 1, k + 1);
            EXPECT_EQ(kernelLayer(j, k), image) << "j=" << j << " k=" << k;
            EXPECT_TRUE(kernelLayer(j, k).isNonNegative());
        }
}

TEST(Ext, KoszulAlternatingSumVanishes)
{
    EXPECT_EQ(koszulAlternatingSum(0), PairDecomposition::single({Partition{}, Partition{}}));
    for (unsigned d = 1; d <= 6; ++d)
        EXPECT_TRUE(koszulAlternatingSum(d).isZero()) << d;
}

TEST(Ext, ExtToTrivialExamples)
{
    EXPECT_EQ(extToTrivial(idx("[1],[],[],[1]"), 1), 1u);
    EXPECT_EQ(extToTrivial(idx("[2],[],[],[2]"), 2), 0u);
    EXPECT_EQ(extToTrivial(kUnitIndex, 0), 1u);
    EXPECT_EQ(extToTrivial(idx("[1],[],[],[1]"), 2), 0u);
}

TEST(Ext, ExtToTrivialMatchesResolutionSocle)
{
    for (const auto& x : simpleUpTo(6))
        for (unsigned j = 0; j <= 6; ++j) {
            const unsigned v = extToTrivial(x, j);
            EXPECT_EQ(BigInt(v), resolutionTerm(j).socle.coefficient(x)) << x << " j=" << j;
            if (x.isThick()) {
                EXPECT_EQ(BigInt(v), extToThick(x, {}, {}, j)) << x << " j=" << j;
            }
            if (v == 1) {
                EXPECT_EQ(defect(x.quad(), {0, 0, 0, 0}), j) << x;
            }
        }
}

TEST(Ext, ExtToThickExamples)
{
    EXPECT_EQ(extToThick(idx("[1],[],[],[1]"), {}, {}, 1), 1);
    for (const char* s : {"[2,1],[],[],[1]", "[],[],[],[3]", "[1],[],[],[]"}) {
        const auto x = idx(s);
        EXPECT_EQ(extToThick(x, x.lam, x.pi, 0), 1) << s;
    }
    EXPECT_EQ(extToThick(idx("[2],[],[],[1,1]"), Partition{1}, Partition{1}, 1), 1);
    EXPECT_EQ(extToThick(idx("[1],[1],[],[1]"), {}, {}, 1), 0);
}

TEST(Ext, ExtToThickMatchesSocleOfResolutionTerm)
{
    // socle of Lambda^q F (x) T computed by tensoring T with the generator Lambda^q F
    for (const auto& t : thickUpTo(3))
        for (unsigned q = 0; q <= 2; ++q) {
            const Decomposition soc = tensorSimple(t, Generator::extF(q));
            for (const auto& x : thickUpTo(t.degree() + 2 * q))
                EXPECT_EQ(extToThick(x, t.lam, t.pi, q), soc.coefficient(x)) << x << " " << t << " q=" << q;
        }
}

TEST(Ext, VanishingExamples)
{
    EXPECT_TRUE(extVanishes(idx("[],[1],[1],[]"), idx("[1],[],[],[1]"), 0));
    EXPECT_TRUE(extVanishes(idx("[1],[],[],[1]"), kUnitIndex, 2));
    EXPECT_FALSE(extVanishes(kUnitIndex, kUnitIndex, 0));
}

TEST(Ext, VanishingIsSharpForThickTargets)
{
    // a nonzero thick Ext forces the defect to equal the degree
    for (const auto& x : thickUpTo(4))
        for (const auto& t : thickUpTo(2))
            for (unsigned q = 0; q <= 2; ++q)
                if (extToThick(x, t.lam, t.pi, q) != 0) {
                    EXPECT_FALSE(extVanishes(x, t, q)) << x << " " << t << " q=" << q;
                }
}

TEST(Ext, ExtDimensionIsThreeValued)
{
    EXPECT_EQ(extDimension(idx("[1],[],[],[1]"), kUnitIndex, 1).kind, ExtAnswer::Kind::dimension);
    EXPECT_EQ(extDimension(idx("[1],[],[],[1]"), kUnitIndex, 1).value, 1);
    EXPECT_EQ(extDimension(kUnitIndex, idx("[1],[],[],[1]"), 1).kind, ExtAnswer::Kind::zero);
    EXPECT_EQ(extDimension(idx("[1],[1],[],[]"), idx("[],[1],[],[]"), 0).kind, ExtAnswer::Kind::zero);
    const auto mixed = extDimension(idx("[1],[1],[],[1]"), idx("[],[1],[],[]"), 1);
    EXPECT_EQ(mixed.kind, ExtAnswer::Kind::unknown);
    EXPECT_EQ(mixed.str(), "unknown");
}
