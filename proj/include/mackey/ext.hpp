#pragma once

#include "grothendieck.hpp"
#include "plethysm.hpp"
#include "poset.hpp"
#include "symfunc.hpp"

#include <optional>
#include <string>

namespace mackey {

/// Degree j of the injective resolution 0 -> C -> I_0 -> I_1 -> ... of the unit,
/// with I_j = Lambda^j F (x) I.
struct ResolutionTerm
{
    unsigned j = 0;
    std::string body;
    Decomposition socle;
};

inline ResolutionTerm resolutionTerm(unsigned j)
{
    requireDegree(2 * j, "resolutionTerm");
    return {j, "L" + std::to_string(j) + "F (x) I", thickIndices(cauchyExt(j))};
}

/// Pairwise product of two pair decompositions: LR in the first slots and in the second slots.
inline PairDecomposition pairProduct(const PairDecomposition& a, const PairDecomposition& b)
{
    PairDecomposition out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            const SymFunc left = schurProductOfPartitions(x.first, y.first);
            const SymFunc right = schurProductOfPartitions(x.second, y.second);
            for (const auto& [l, cl] : left)
                for (const auto& [r, cr] : right)
                    out.add({l, r}, cx * cy * cl * cr);
        }
    return out;
}

/// [Lambda^i F (x) S^j F] as a pair decomposition over (W_* slot, W slot).
inline PairDecomposition extSymProduct(unsigned i, unsigned j)
{
    requireDegree(2 * (i + j), "extSymProduct");
    return pairProduct(cauchyExt(i), cauchySym(j));
}

/// Signed sum over i + j = d of (-1)^i [Lambda^i F (x) S^j F]; zero for d >= 1.
inline PairDecomposition koszulAlternatingSum(unsigned d)
{
    PairDecomposition out;
    for (unsigned i = 0; i <= d; ++i) {
        PairDecomposition term = extSymProduct(i, d - i);
        if (i % 2)
            out -= term;
        else
            out += term;
    }
    return out;
}

/// The hook diagram (k+1, 1^(j-1)) indexing the kernel layer K_j^k / K_j^(k-1) for j >= 1.
inline Partition kernelHook(unsigned j, unsigned k) { return Partition::hook(k + 1, j - 1); }

/// Subquotient K_j^k / K_j^(k-1) of K_j = ker(I_j -> I_(j+1)): the Schur functor of the
/// hook (k+1, 1^(j-1)) applied to F, as thick indices. K_0 = C sits in k = 0 only.
///
/// The hook functor is expanded through sum over i of (-1)^i [Lambda^(j+i) F (x) S^(k-i) F].
inline Decomposition kernelLayer(unsigned j, unsigned k)
{
    if (j == 0)
        return k == 0 ? Decomposition::single(kUnitIndex) : Decomposition{};
    requireDegree(2 * (j + k), "kernelLayer");
    PairDecomposition hook;
    for (unsigned i = 0; i <= k; ++i) {
        PairDecomposition term = extSymProduct(j + i, k - i);
        if (i % 2)
            hook -= term;
        else
            hook += term;
    }
    return thickIndices(hook);
}

/// dim Ext^j(L_x, C): 1 exactly when x = (lam, 0, 0, lam^T) with |lam| = j.
inline unsigned extToTrivial(const SimpleIndex& x, unsigned j)
{
    return x.isThick() && x.lam.degree() == j && x.pi == conjugate(x.lam) ? 1u : 0u;
}

/// dim Ext^q(L_x, T) for the thick simple T = W_{*alpha} (x) W_beta:
/// the multiplicity of x in the socle Lambda^q F (x) T of the q-th resolution term,
/// i.e. sum over |gamma| = q of c^lam_{alpha,gamma} c^pi_{beta,gamma^T}.
/// Zero for non-thick x, which is never below a thick index.
inline BigInt extToThick(const SimpleIndex& x, const Partition& alpha, const Partition& beta, unsigned q)
{
    if (!x.isThick())
        return 0;
    if (x.lam.degree() != alpha.degree() + q || x.pi.degree() != beta.degree() + q)
        return 0;
    BigInt total = 0;
    for (const Partition& gamma : partitionsOf(q)) {
        const std::uint64_t a = lrCoefficient(x.lam, alpha, gamma);
        if (a == 0)
            continue;
        total += BigInt(a) * lrCoefficient(x.pi, beta, conjugate(gamma));
    }
    return total;
}

/// Sharpness: Ext^q(L_s, L_t) = 0 unless s <= t with defect exactly q.
/// Returns true when vanishing is guaranteed.
inline bool extVanishes(const SimpleIndex& s, const SimpleIndex& t, unsigned q)
{
    const auto d = defect(s.quad(), t.quad());
    return !d || *d != q;
}

/// Three-valued Ext answer: guaranteed zero, a known dimension, or not determined.
struct ExtAnswer
{
    enum class Kind { zero, dimension, unknown };
    Kind kind = Kind::zero;
    BigInt value = 0;

    static ExtAnswer zero() { return {Kind::zero, 0}; }
    static ExtAnswer unknown() { return {Kind::unknown, 0}; }
    static ExtAnswer dimension(BigInt v) { return v == 0 ? zero() : ExtAnswer{Kind::dimension, std::move(v)}; }

    std::string str() const
    {
        switch (kind) {
        case Kind::zero: return "0";
        case Kind::dimension: return toString(value);
        case Kind::unknown: return "unknown";
        }
        return "unknown";
    }
};

/// dim Ext^q(L_s, L_t) where it is determined: vanishing by sharpness, Hom between
/// simples, and purely thick targets (which include C). Everything else is unknown.
inline ExtAnswer extDimension(const SimpleIndex& s, const SimpleIndex& t, unsigned q)
{
    if (extVanishes(s, t, q))
        return ExtAnswer::zero();
    if (q == 0)
        return ExtAnswer::dimension(s == t ? 1 : 0);
    if (t.isThick())
        return ExtAnswer::dimension(extToThick(s, t.lam, t.pi, q));
    return ExtAnswer::unknown();
}

} // namespace mackey
