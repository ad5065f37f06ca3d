#pragma once

#include "combination.hpp"
#include "config.hpp"
#include "partition.hpp"

#include <ostream>
#include <utility>

namespace mackey {

/// A pair of diagrams (alpha, beta) naming S_alpha x (x) S_beta y.
struct PartitionPair
{
    Partition first;
    Partition second;

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
    friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;

    std::string str() const { return "(" + first.str() + "," + second.str() + ")"; }
    friend std::ostream& operator<<(std::ostream& os, const PartitionPair& p) { return os << p.str(); }
};

using PairDecomposition = LinearCombination<PartitionPair>;
using PartitionDecomposition = LinearCombination<Partition>;

enum class PowerKind { symmetric, exterior };

inline const char* toString(PowerKind k) { return k == PowerKind::symmetric ? "symmetric" : "exterior"; }

/// S^k(x (x) y) = sum over |lam| = k of S_lam x (x) S_lam y.
inline PairDecomposition cauchySym(unsigned k)
{
    requireDegree(k, "cauchySym");
    PairDecomposition out;
    for (const Partition& lam : partitionsOf(k))
        out.add({lam, lam}, 1);
    return out;
}

/// Lambda^k(x (x) y) = sum over |lam| = k of S_lam x (x) S_{lam^T} y.
inline PairDecomposition cauchyExt(unsigned k)
{
    requireDegree(k, "cauchyExt");
    PairDecomposition out;
    for (const Partition& lam : partitionsOf(k))
        out.add({lam, conjugate(lam)}, 1);
    return out;
}

inline PairDecomposition cauchy(PowerKind kind, unsigned k)
{
    return kind == PowerKind::symmetric ? cauchySym(k) : cauchyExt(k);
}

/// Outer power (S^k or Lambda^k) of S^2 x. Terms have 2k boxes.
///
/// S^k S^2 -> even partitions, Lambda^k S^2 -> conjugates of special partitions.
inline PartitionDecomposition powerOfSym2(unsigned k, PowerKind outer)
{
    requireDegree(2 * k, "powerOfSym2");
    PartitionDecomposition out;
    for (const Partition& lam : partitionsOf(2 * k)) {
        if (outer == PowerKind::symmetric && isEven(lam))
            out.add(lam, 1);
        if (outer == PowerKind::exterior && isSpecial(lam))
            out.add(conjugate(lam), 1);
    }
    return out;
}

/// Outer power (S^k or Lambda^k) of Lambda^2 x. Terms have 2k boxes.
///
/// S^k Lambda^2 -> conjugates of even partitions, Lambda^k Lambda^2 -> special partitions.
inline PartitionDecomposition powerOfExt2(unsigned k, PowerKind outer)
{
    requireDegree(2 * k, "powerOfExt2");
    PartitionDecomposition out;
    for (const Partition& lam : partitionsOf(2 * k)) {
        if (outer == PowerKind::symmetric && isEven(lam))
            out.add(conjugate(lam), 1);
        if (outer == PowerKind::exterior && isSpecial(lam))
            out.add(lam, 1);
    }
    return out;
}

} // namespace mackey
