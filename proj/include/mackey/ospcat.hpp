#pragma once

#include "errors.hpp"
#include "partition.hpp"
#include "plethysm.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mackey {

enum class OspKind { orthogonal, symplectic };

inline const char* toString(OspKind k) { return k == OspKind::orthogonal ? "o" : "sp"; }

inline OspKind parseOspKind(std::string_view text)
{
    if (text == "o")
        return OspKind::orthogonal;
    if (text == "sp")
        return OspKind::symplectic;
    throw ParseError("expected 'o' or 'sp'", std::string(text), 0);
}

/// Simple object W_lam (x) V_[mu] (orthogonal) or W_lam (x) V_<mu> (symplectic).
struct OspIndex
{
    OspKind kind = OspKind::orthogonal;
    Partition lam;
    Partition mu;

    friend bool operator==(const OspIndex&, const OspIndex&) = default;

    std::string str() const { return std::string(toString(kind)) + ":(" + lam.str() + "," + mu.str() + ")"; }
    friend std::ostream& operator<<(std::ostream& os, const OspIndex& x) { return os << x.str(); }
};

/// Pair (l, m): l copies of W, m copies of V^*.
struct OspPair
{
    unsigned l = 0, m = 0;

    friend bool operator==(const OspPair&, const OspPair&) = default;
    friend auto operator<=>(const OspPair&, const OspPair&) = default;

    std::string str() const { return std::to_string(l) + "," + std::to_string(m); }
};

/// Order generated by the composition-factor moves V^* -> W (l+1, m-1), contraction
/// (l, m-2) and the F layer (l+2, m): l >= l', m <= m' and l+m = l'+m' mod 2.
inline bool ospLeq(const OspPair& a, const OspPair& b)
{
    return a.l >= b.l && a.m <= b.m && (a.l + a.m) % 2 == (b.l + b.m) % 2;
}

/// (l - l' + m' - m) / 2 for comparable pairs. Every move shifts this by one.
inline std::optional<unsigned> ospDefect(const OspPair& a, const OspPair& b)
{
    if (!ospLeq(a, b))
        return std::nullopt;
    return ((a.l - b.l) + (b.m - a.m)) / 2;
}

/// Longest chain from a to b by exhaustive search over the interval.
inline std::optional<unsigned> ospLongestChainLength(const OspPair& a, const OspPair& b)
{
    if (!ospLeq(a, b))
        return std::nullopt;
    std::vector<OspPair> elems;
    for (unsigned l = b.l; l <= a.l; ++l)
        for (unsigned m = a.m; m <= b.m; ++m) {
            OspPair c{l, m};
            if (ospLeq(a, c) && ospLeq(c, b))
                elems.push_back(c);
        }
    std::map<OspPair, unsigned> best;
    auto longest = [&](auto&& self, const OspPair& x) -> unsigned {
        if (x == b)
            return 0;
        if (auto it = best.find(x); it != best.end())
            return it->second;
        unsigned r = 0;
        for (const auto& y : elems)
            if (y != x && ospLeq(x, y))
                r = std::max(r, 1 + self(self, y));
        best[x] = r;
        return r;
    };
    return longest(longest, a);
}

/// Layers S^k F_g of the filtration of I_g for k = 0..kmax as W-slot decompositions:
/// even partitions of 2k (F_o = S^2 W) or their conjugates (F_sp = Lambda^2 W).
inline std::vector<PartitionDecomposition> ospLayersOfI(OspKind kind, unsigned kmax)
{
    std::vector<PartitionDecomposition> out;
    for (unsigned k = 0; k <= kmax; ++k)
        out.push_back(kind == OspKind::orthogonal ? powerOfSym2(k, PowerKind::symmetric)
                                                  : powerOfExt2(k, PowerKind::symmetric));
    return out;
}

/// Socle Lambda^j F_g of the j-th resolution term of C: conjugates of special partitions
/// of 2j for o (Lambda^j S^2 W), special partitions of 2j for sp (Lambda^j Lambda^2 W).
inline PartitionDecomposition ospResolutionSocle(OspKind kind, unsigned j)
{
    return kind == OspKind::orthogonal ? powerOfSym2(j, PowerKind::exterior) : powerOfExt2(j, PowerKind::exterior);
}

/// dim Ext^j(L_x, C) in the category of the given kind: 0 or 1.
inline unsigned ospExtToTrivial(const OspIndex& x, unsigned j)
{
    if (!x.mu.empty() || x.lam.degree() != 2 * j)
        return 0;
    if (x.kind == OspKind::orthogonal)
        return isSpecial(conjugate(x.lam)) ? 1u : 0u;
    return isSpecial(x.lam) ? 1u : 0u;
}

/// The o <-> sp correspondence: swap the kind and conjugate the W slot.
inline OspIndex ospConjugate(const OspIndex& x)
{
    return {x.kind == OspKind::orthogonal ? OspKind::symplectic : OspKind::orthogonal, conjugate(x.lam), x.mu};
}

inline OspPair parseOspPair(std::string_view text)
{
    const std::string token(text);
    const auto comma = token.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected 'l,m'", token, token.size());
    auto number = [&](std::size_t from, std::size_t to) {
        if (from == to)
            throw ParseError("expected a non-negative integer", token, from);
        unsigned long v = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (token[i] < '0' || token[i] > '9')
                throw ParseError("expected a digit", token, i);
            v = v * 10 + static_cast<unsigned>(token[i] - '0');
            if (v > 1000000)
                throw ParseError("entry too large", token, from);
        }
        return static_cast<unsigned>(v);
    };
    return {number(0, comma), number(comma + 1, token.size())};
}

} // namespace mackey
