#pragma once

// Cross-checks of the engine against the brute-force oracles. Each check covers one
// acceptance criterion and reports what it compared.

#include "ext.hpp"
#include "grothendieck.hpp"
#include "oracle.hpp"
#include "ospcat.hpp"
#include "plethysm.hpp"
#include "poset.hpp"
#include "symalg.hpp"
#include "symfunc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace mackey::verify {

struct CheckResult
{
    unsigned id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// All simple indices (lam, mu, nu, pi) of total degree at most `d`.
inline std::vector<SimpleIndex> simpleIndicesUpTo(unsigned d)
{
    std::vector<SimpleIndex> out;
    for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b)
            for (unsigned c = 0; a + b + c <= d; ++c)
                for (unsigned e = 0; a + b + c + e <= d; ++e)
                    for (const auto& lam : partitionsOf(a))
                        for (const auto& mu : partitionsOf(b))
                            for (const auto& nu : partitionsOf(c))
                                for (const auto& pi : partitionsOf(e))
                                    out.push_back({lam, mu, nu, pi});
    return out;
}

inline std::vector<QuadIndex> quadsUpTo(unsigned total)
{
    std::vector<QuadIndex> out;
    for (unsigned l = 0; l <= total; ++l)
        for (unsigned m = 0; l + m <= total; ++m)
            for (unsigned n = 0; l + m + n <= total; ++n)
                for (unsigned p = 0; l + m + n + p <= total; ++p)
                    out.push_back({l, m, n, p});
    return out;
}

/// Number of k-element multisets from an n-element set: dim S^k C^n.
inline BigInt multisetCount(const BigInt& n, unsigned k) { return k == 0 ? BigInt(1) : binomial(n + k - 1, k); }

/// Terms of `d` whose diagrams fit in `rows` rows.
inline PartitionDecomposition truncateRows(const PartitionDecomposition& d, unsigned rows)
{
    return d.filter([&](const Partition& p) { return p.length() <= rows; });
}

namespace detail {

class Failures
{
public:
    void note(bool ok, const std::string& what)
    {
        ++checked_;
        if (!ok && failed_++ < 5)
            first_ += (first_.empty() ? "" : "; ") + what;
    }
    bool ok() const { return failed_ == 0; }
    std::string summary(const std::string& subject) const
    {
        std::ostringstream os;
        os << checked_ << " " << subject;
        if (failed_)
            os << ", " << failed_ << " failed: " << first_;
        return os.str();
    }

private:
    std::size_t checked_ = 0, failed_ = 0;
    std::string first_;
};

inline CheckResult result(unsigned id, std::string name, const Failures& f, const std::string& subject)
{
    return {id, std::move(name), f.ok(), f.summary(subject)};
}

} // namespace detail

/// 1. Dimension forms of S^k(A (x) B) and Lambda^k(A (x) B).
inline CheckResult cauchyIdentities()
{
    detail::Failures f;
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned a = 1; a <= 5; ++a)
            for (unsigned b = 1; b <= 5; ++b) {
                BigInt sym = 0, ext = 0;
                for (const auto& [pp, c] : cauchySym(k))
                    sym += c * glDimension(pp.first, a) * glDimension(pp.second, b);
                for (const auto& [pp, c] : cauchyExt(k))
                    ext += c * glDimension(pp.first, a) * glDimension(pp.second, b);
                const std::string at = "k=" + std::to_string(k) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
                f.note(sym == binomial(a * b + k - 1, k), "S^k " + at);
                f.note(ext == binomial(a * b, k), "L^k " + at);
            }
    return detail::result(1, "Cauchy dimension identities", f, "identities");
}

/// 2. S^k / Lambda^k of S^2 and Lambda^2 against the brute-force plethysm.
inline CheckResult plethysmFamilies()
{
    using oracle::InnerSpace;
    detail::Failures f;
    for (unsigned k = 0; k <= 4; ++k)
        for (unsigned n = 1; n <= 5; ++n)
            for (PowerKind outer : {PowerKind::symmetric, PowerKind::exterior}) {
                const std::string at = std::string(toString(outer)) + " k=" + std::to_string(k) + " N=" + std::to_string(n);
                f.note(truncateRows(powerOfSym2(k, outer), n) ==
                           oracle::bruteForcePlethysm(outer, k, InnerSpace::sym2, n),
                       "of S^2 " + at);
                f.note(truncateRows(powerOfExt2(k, outer), n) ==
                           oracle::bruteForcePlethysm(outer, k, InnerSpace::ext2, n),
                       "of L^2 " + at);
            }
    f.note(powerOfExt2(2, PowerKind::exterior) == PartitionDecomposition::single(Partition{2, 1, 1}),
           "L^2 L^2 = {(2,1,1)}");
    PartitionDecomposition s2s2;
    s2s2.add(Partition{4}, 1);
    s2s2.add(Partition{2, 2}, 1);
    f.note(powerOfSym2(2, PowerKind::symmetric) == s2s2, "S^2 S^2 = {(4),(2,2)}");
    return detail::result(2, "Plethysm families vs brute force", f, "comparisons");
}

/// 3. Closed-form defect against the longest chain, both closed forms.
inline CheckResult defectCalculus()
{
    detail::Failures f;
    std::vector<QuadIndex> all;
    for (unsigned l = 0; l <= 3; ++l)
        for (unsigned m = 0; m <= 3; ++m)
            for (unsigned n = 0; n <= 3; ++n)
                for (unsigned p = 0; p <= 3; ++p)
                    all.push_back({l, m, n, p});
    for (const auto& a : all)
        for (const auto& b : all) {
            if (!leq(a, b))
                continue;
            const std::string at = "(" + a.str() + ")<=(" + b.str() + ")";
            f.note(defect(a, b) == longestChainLength(a, b), "chain " + at);
            f.note(defect(a, b) == defectMirrored(a, b), "mirror " + at);
        }
    return detail::result(3, "Defect equals longest chain", f, "checks over comparable pairs");
}

/// 4. Ext^j(x, C) against resolution socles and the thick-target formula.
inline CheckResult extToTrivialCheck()
{
    detail::Failures f;
    const auto indices = simpleIndicesUpTo(6);
    for (unsigned j = 0; j <= 6; ++j) {
        const Decomposition socle = resolutionTerm(j).socle;
        for (const auto& x : indices) {
            const unsigned e = extToTrivial(x, j);
            const bool expected = x.mu.empty() && x.nu.empty() && x.lam.degree() == j && x.pi == conjugate(x.lam);
            const std::string at = x.str() + " j=" + std::to_string(j);
            f.note(e == (expected ? 1u : 0u), "set " + at);
            f.note(BigInt(e) == socle.coefficient(x), "socle " + at);
            f.note(BigInt(e) == extToThick(x, {}, {}, j), "thick " + at);
            if (e)
                f.note(defect(x.quad(), QuadIndex{}) == j, "defect " + at);
        }
    }
    return detail::result(4, "Ext to the unit object", f, "checks");
}

/// 5. Signed sum of [Lambda^i F (x) S^j F] over i + j = d vanishes.
inline CheckResult resolutionExactness()
{
    detail::Failures f;
    for (unsigned d = 1; d <= 6; ++d) {
        f.note(koszulAlternatingSum(d).isZero(), "pairs d=" + std::to_string(d));
        SymFunc sum;
        for (unsigned i = 0; i <= d; ++i) {
            SymFunc term = schurProduct(elementaryHomogeneous(i).first, elementaryHomogeneous(d - i).second);
            if (i % 2)
                sum -= term;
            else
                sum += term;
        }
        f.note(sum.isZero(), "e/h d=" + std::to_string(d));
    }
    return detail::result(5, "Koszul alternating sums vanish", f, "sums");
}

/// 6. decomposeJ against the character reconstruction, and order independence.
inline CheckResult mixedTensorEngine()
{
    detail::Failures f;
    std::size_t orderings = 0;
    for (const auto& q : quadsUpTo(4)) {
        const Decomposition engine = decomposeJ(q);
        f.note(engine == oracle::reconstructJ(q), "reconstruct (" + q.str() + ")");
        f.note(oracle::stableDimension(engine, 2, std::max(1u, 2 * (q.m + q.n)), 3) ==
                   oracle::productDimension(q, 2, std::max(1u, 2 * (q.m + q.n)), 3),
               "dimension (" + q.str() + ")");
        auto seq = canonicalSequence(q);
        std::vector<unsigned> order(seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i)
            order[i] = static_cast<unsigned>(seq[i].tag);
        std::sort(order.begin(), order.end());
        do {
            std::vector<Generator> s;
            for (unsigned t : order)
                s.push_back({static_cast<Generator::Tag>(t)});
            ++orderings;
            f.note(decomposeSequence(s) == engine, "order (" + q.str() + ")");
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return detail::result(6, "Mixed tensor decompositions", f,
                          "checks (" + std::to_string(orderings) + " generator orderings)");
}

/// 7. Hom dimensions against explicit diagram spaces and generator orbits.
inline CheckResult homDimensions()
{
    detail::Failures f;
    for (const auto& q : quadsUpTo(5)) {
        const std::string at = "(" + q.str() + ")";
        const BigInt end = endDimension(q);
        f.note(end == BigInt(BlockGroup::of(q).elements().size()), "group " + at);
        f.note(end == BigInt(enumerateDiagrams(q, q).size()), "end " + at);
        for (HomFlavor fl : {HomFlavor::contract, HomFlavor::shiftLeft, HomFlavor::shiftRight}) {
            QuadIndex t;
            try {
                t = homTarget(q, fl);
            } catch (const DomainError&) {
                continue;
            }
            const BigInt h = homDimensionDeg1(q, fl);
            f.note(h == BigInt(generatorOrbitSize(q, fl)), std::string("orbit ") + toString(fl) + " " + at);
            f.note(h == BigInt(enumerateDiagrams(q, t).size()), std::string("diagrams ") + toString(fl) + " " + at);
        }
    }
    return detail::result(7, "Endomorphism and degree-one Hom dimensions", f, "checks");
}

/// 8. Kernel of the composite of two contractions.
inline CheckResult quadraticKernel()
{
    detail::Failures f;
    for (const QuadIndex& q : {QuadIndex{0, 2, 2, 0}, QuadIndex{1, 2, 2, 0}, QuadIndex{0, 2, 2, 1}, QuadIndex{0, 3, 2, 0}}) {
        const auto r = quadraticKernelReport(q);
        std::ostringstream os;
        os << "(" << q.str() << ") closed " << r.closedForm << " ideal " << r.rightIdeal << " bimodule " << r.bimodule
           << " diagram " << r.diagramKernel;
        f.note(r.ok(), os.str());
    }
    return detail::result(8, "Quadratic kernel dimension", f, "indices");
}

/// 9. Young symmetrizer quasi-idempotency and one-dimensional corners.
inline CheckResult youngSymmetrizers()
{
    detail::Failures f;
    for (unsigned d = 1; d <= 5; ++d)
        for (const auto& lam : partitionsOf(d)) {
            const auto c = youngSymmetrizer(lam);
            f.note(c * c == c * Rational(symmetrizerScalar(lam)), "square " + lam.str());
        }
    for (const auto& lam : partitionsUpTo(3))
        for (const auto& pi : partitionsUpTo(3))
            f.note(cornerAlgebraDimension(lam, pi) == 1, "corner " + lam.str() + pi.str());
    return detail::result(9, "Young symmetrizers", f, "checks");
}

/// 10. Orthogonal / symplectic variant.
inline CheckResult ospVariant()
{
    detail::Failures f;
    for (unsigned l = 0; l <= 4; ++l)
        for (unsigned m = 0; m <= 4; ++m)
            for (unsigned l2 = 0; l2 <= 4; ++l2)
                for (unsigned m2 = 0; m2 <= 4; ++m2) {
                    const OspPair a{l, m}, b{l2, m2};
                    f.note(ospDefect(a, b) == ospLongestChainLength(a, b), "chain " + a.str() + " " + b.str());
                }
    for (unsigned a = 0; a <= 6; ++a)
        for (unsigned b = 0; a + b <= 6; ++b)
            for (const auto& lam : partitionsOf(a))
                for (const auto& mu : partitionsOf(b)) {
                    const OspIndex x{OspKind::orthogonal, lam, mu};
                    f.note(ospConjugate(ospConjugate(x)) == x, "involution " + x.str());
                    for (unsigned j = 0; j <= 6; ++j)
                        f.note(ospExtToTrivial(x, j) == ospExtToTrivial(ospConjugate(x), j),
                               "intertwine " + x.str() + " j=" + std::to_string(j));
                }
    for (unsigned w = 1; w <= 5; ++w) {
        const BigInt symDim = w * (w + 1) / 2, extDim = w * (w - 1) / 2;
        for (unsigned k = 0; k <= 3; ++k) {
            const auto o = ospLayersOfI(OspKind::orthogonal, k)[k];
            const auto sp = ospLayersOfI(OspKind::symplectic, k)[k];
            BigInt so = 0, ssp = 0, lo = 0, lsp = 0;
            for (const auto& [p, c] : o)
                so += c * glDimension(p, w);
            for (const auto& [p, c] : sp)
                ssp += c * glDimension(p, w);
            for (const auto& [p, c] : ospResolutionSocle(OspKind::orthogonal, k))
                lo += c * glDimension(p, w);
            for (const auto& [p, c] : ospResolutionSocle(OspKind::symplectic, k))
                lsp += c * glDimension(p, w);
            const std::string at = " dimW=" + std::to_string(w) + " k=" + std::to_string(k);
            f.note(so == multisetCount(symDim, k), "o layer" + at);
            f.note(ssp == multisetCount(extDim, k), "sp layer" + at);
            f.note(lo == binomial(symDim, k), "o socle" + at);
            f.note(lsp == binomial(extDim, k), "sp socle" + at);
        }
    }
    return detail::result(10, "Orthogonal and symplectic variant", f, "checks");
}

inline std::vector<std::function<CheckResult()>> acceptanceChecks()
{
    return {cauchyIdentities, plethysmFamilies, defectCalculus, extToTrivialCheck, resolutionExactness,
            mixedTensorEngine, homDimensions, quadraticKernel, youngSymmetrizers, ospVariant};
}

} // namespace mackey::verify
