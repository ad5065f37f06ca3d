#pragma once

#include "combination.hpp"
#include "config.hpp"
#include "partition.hpp"
#include "plethysm.hpp"
#include "poset.hpp"
#include "symfunc.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace mackey {

/// Index (lam, mu, nu, pi) of the simple object W_{*lam} (x) V_{mu,nu} (x) W_pi.
///
/// mu is carried by the V^* / V_* tensorands, nu by V_*^* / V.
struct SimpleIndex
{
    Partition lam, mu, nu, pi;

    friend bool operator==(const SimpleIndex&, const SimpleIndex&) = default;
    friend auto operator<=>(const SimpleIndex&, const SimpleIndex&) = default;

    QuadIndex quad() const { return {lam.degree(), mu.degree(), nu.degree(), pi.degree()}; }
    unsigned degree() const { return quad().total(); }

    /// Only the outer diagrams are non-empty.
    bool isThick() const { return mu.empty() && nu.empty(); }

    std::string str() const { return "(" + lam.str() + "," + mu.str() + "," + nu.str() + "," + pi.str() + ")"; }
    friend std::ostream& operator<<(std::ostream& os, const SimpleIndex& s) { return os << s.str(); }
};

inline const SimpleIndex kUnitIndex{};

using Decomposition = LinearCombination<SimpleIndex>;

/// Parses `[a,..],[..],[..],[..]`, optionally wrapped in parentheses.
inline SimpleIndex parseSimpleIndex(std::string_view text)
{
    const std::string token(text);
    std::size_t pos = 0;
    detail::skipSpaces(text, pos);
    const bool paren = pos < text.size() && text[pos] == '(';
    if (paren)
        ++pos;
    std::array<Partition, 4> parts;
    for (int i = 0; i < 4; ++i) {
        parts[static_cast<std::size_t>(i)] = parsePartitionAt(text, pos);
        detail::skipSpaces(text, pos);
        if (i < 3) {
            if (pos >= text.size() || text[pos] != ',')
                throw ParseError("expected ',' between diagrams", token, pos);
            ++pos;
        }
    }
    if (paren) {
        if (pos >= text.size() || text[pos] != ')')
            throw ParseError("expected ')'", token, pos);
        ++pos;
    }
    detail::skipSpaces(text, pos);
    if (pos != text.size())
        throw ParseError("trailing characters", token, pos);
    return {parts[0], parts[1], parts[2], parts[3]};
}

/// Generators of the category that a simple object can be tensored with.
struct Generator
{
    enum class Tag { VDual, VDualDual, V, VLowerStar, W, WLowerStar, Q, F, SymF, SymQ, ExtF };

    Tag tag;
    unsigned k = 0;

    static Generator vDual() { return {Tag::VDual}; }
    static Generator vDualDual() { return {Tag::VDualDual}; }
    static Generator v() { return {Tag::V}; }
    static Generator vLowerStar() { return {Tag::VLowerStar}; }
    static Generator w() { return {Tag::W}; }
    static Generator wLowerStar() { return {Tag::WLowerStar}; }
    static Generator q() { return {Tag::Q}; }
    static Generator f() { return {Tag::F}; }
    static Generator symF(unsigned k) { return {Tag::SymF, k}; }
    static Generator symQ(unsigned k) { return {Tag::SymQ, k}; }
    static Generator extF(unsigned k) { return {Tag::ExtF, k}; }

    /// Maximal number of boxes one tensoring step can add.
    unsigned degree() const
    {
        switch (tag) {
        case Tag::Q:
        case Tag::F: return 2;
        case Tag::SymF:
        case Tag::SymQ:
        case Tag::ExtF: return 2 * k;
        default: return 1;
        }
    }

    std::string str() const
    {
        switch (tag) {
        case Tag::VDual: return "V*";
        case Tag::VDualDual: return "V**";
        case Tag::V: return "V";
        case Tag::VLowerStar: return "V_*";
        case Tag::W: return "W";
        case Tag::WLowerStar: return "W_*";
        case Tag::Q: return "Q";
        case Tag::F: return "F";
        case Tag::SymF: return "S" + std::to_string(k) + "F";
        case Tag::SymQ: return "S" + std::to_string(k) + "Q";
        case Tag::ExtF: return "L" + std::to_string(k) + "F";
        }
        return "?";
    }

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Accepts V*, V**, V, V_*, W, W_*, Q, F, S<k>F, S<k>Q, L<k>F.
inline Generator parseGenerator(std::string_view text)
{
    const std::string t(text);
    if (t == "V*") return Generator::vDual();
    if (t == "V**") return Generator::vDualDual();
    if (t == "V") return Generator::v();
    if (t == "V_*") return Generator::vLowerStar();
    if (t == "W") return Generator::w();
    if (t == "W_*") return Generator::wLowerStar();
    if (t == "Q") return Generator::q();
    if (t == "F") return Generator::f();
    if (t.size() >= 3 && (t[0] == 'S' || t[0] == 'L') && (t.back() == 'F' || t.back() == 'Q')) {
        const std::string digits = t.substr(1, t.size() - 2);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 4) {
            const unsigned k = static_cast<unsigned>(std::stoul(digits));
            if (t[0] == 'S' && t.back() == 'F') return Generator::symF(k);
            if (t[0] == 'S' && t.back() == 'Q') return Generator::symQ(k);
            if (t[0] == 'L' && t.back() == 'F') return Generator::extF(k);
        }
    }
    throw ParseError("unknown generator", t, 0);
}

namespace detail {

inline void addBoxMoves(Decomposition& out, const SimpleIndex& s, Partition SimpleIndex::*slot, bool add,
                        const BigInt& mult)
{
    for (Partition& q : add ? mackey::addBox(s.*slot) : mackey::removeBox(s.*slot)) {
        SimpleIndex t = s;
        t.*slot = std::move(q);
        out.add(t, mult);
    }
}

/// Tensors the thick part of `s` with sum of S_alpha W_* (x) S_beta W over `layer`,
/// using LR products on the lam and pi slots.
inline void addThickLayer(Decomposition& out, const SimpleIndex& s, const PairDecomposition& layer,
                          const BigInt& mult)
{
    for (const auto& [pair, c] : layer) {
        const SymFunc left = schurProductOfPartitions(s.lam, pair.first);
        const SymFunc right = schurProductOfPartitions(s.pi, pair.second);
        for (const auto& [lam, a] : left)
            for (const auto& [pi, b] : right)
                out.add(SimpleIndex{lam, s.mu, s.nu, pi}, mult * c * a * b);
    }
}

} // namespace detail

/// Composition factors, with multiplicity, of g (x) L_s.
///
/// Each box move contributes multiplicity one:
///   W_*: lam + box;  W: pi + box;
///   V_*: mu + box, plus nu - box;  V: nu + box, plus mu - box;
///   V^* = V_* + W_*;  V_*^* = V + W;  Q = 1 + F;
///   S^kF, Lambda^kF: Cauchy pair decomposition then LR on lam and pi;
///   S^kQ = sum over j <= k of S^jF.
inline Decomposition tensorSimple(const SimpleIndex& s, const Generator& g, const BigInt& mult = 1)
{
    requireDegree(s.degree() + g.degree(), "tensorSimple");
    using Tag = Generator::Tag;
    Decomposition out;
    switch (g.tag) {
    case Tag::WLowerStar: detail::addBoxMoves(out, s, &SimpleIndex::lam, true, mult); break;
    case Tag::W: detail::addBoxMoves(out, s, &SimpleIndex::pi, true, mult); break;
    case Tag::VLowerStar:
        detail::addBoxMoves(out, s, &SimpleIndex::mu, true, mult);
        detail::addBoxMoves(out, s, &SimpleIndex::nu, false, mult);
        break;
    case Tag::V:
        detail::addBoxMoves(out, s, &SimpleIndex::nu, true, mult);
        detail::addBoxMoves(out, s, &SimpleIndex::mu, false, mult);
        break;
    case Tag::VDual:
        out += tensorSimple(s, Generator::vLowerStar(), mult);
        out += tensorSimple(s, Generator::wLowerStar(), mult);
        break;
    case Tag::VDualDual:
        out += tensorSimple(s, Generator::v(), mult);
        out += tensorSimple(s, Generator::w(), mult);
        break;
    case Tag::F: detail::addThickLayer(out, s, cauchySym(1), mult); break;
    case Tag::Q:
        out.add(s, mult);
        detail::addThickLayer(out, s, cauchySym(1), mult);
        break;
    case Tag::SymF: detail::addThickLayer(out, s, cauchySym(g.k), mult); break;
    case Tag::ExtF: detail::addThickLayer(out, s, cauchyExt(g.k), mult); break;
    case Tag::SymQ:
        for (unsigned j = 0; j <= g.k; ++j)
            detail::addThickLayer(out, s, cauchySym(j), mult);
        break;
    }
    return out;
}

/// Extends tensorSimple linearly over a decomposition.
inline Decomposition tensor(const Decomposition& d, const Generator& g)
{
    Decomposition out;
    for (const auto& [s, c] : d)
        out += tensorSimple(s, g, c);
    return out;
}

/// Composition factors of the tensor product of the generators in `sequence`, in that order.
inline Decomposition decomposeSequence(const std::vector<Generator>& sequence)
{
    Decomposition d = Decomposition::single(kUnitIndex);
    for (const auto& g : sequence)
        d = tensor(d, g);
    return d;
}

/// Canonical generator sequence of J_{l,m,n,p}: W_*^l, then V^*^m, then V_*^*^n, then W^p.
inline std::vector<Generator> canonicalSequence(const QuadIndex& q)
{
    std::vector<Generator> seq;
    seq.insert(seq.end(), q.l, Generator::wLowerStar());
    seq.insert(seq.end(), q.m, Generator::vDual());
    seq.insert(seq.end(), q.n, Generator::vDualDual());
    seq.insert(seq.end(), q.p, Generator::w());
    return seq;
}

namespace detail {

class DecompositionMemo
{
public:
    std::optional<Decomposition> find(const QuadIndex& q) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(q);
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }
    void insert(const QuadIndex& q, const Decomposition& d)
    {
        std::unique_lock lock(mutex_);
        table_.emplace(q, d);
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<QuadIndex, Decomposition> table_;
};

inline DecompositionMemo& decompositionMemo()
{
    static DecompositionMemo memo;
    return memo;
}

} // namespace detail

/// Full composition-factor multiset of J_{l,m,n,p}.
inline Decomposition decomposeJ(const QuadIndex& q)
{
    requireDegree(q.total(), "decomposeJ");
    if (auto hit = detail::decompositionMemo().find(q))
        return *hit;
    Decomposition d = decomposeSequence(canonicalSequence(q));
    detail::decompositionMemo().insert(q, d);
    return d;
}

/// The socle L_{l,m,n,p} of J_{l,m,n,p} (equivalently of I_{l,m,n,p}): the stratum of
/// composition factors whose quadruple degree equals q.
inline Decomposition socleOf(const QuadIndex& q)
{
    return decomposeJ(q).filter([&](const SimpleIndex& s) { return s.quad() == q; });
}

/// Layers S^kF of the filtration of I for k = 0..kmax, as thick indices (lam, 0, 0, lam).
inline std::vector<Decomposition> layersOfI(unsigned kmax)
{
    requireDegree(2 * kmax, "layersOfI");
    std::vector<Decomposition> out;
    for (unsigned k = 0; k <= kmax; ++k)
        out.push_back(cauchySym(k).mapKeys(
            [](const PartitionPair& pp) { return SimpleIndex{pp.first, {}, {}, pp.second}; }));
    return out;
}

/// Renders a pair decomposition S_alpha W_* (x) S_beta W as thick simple indices.
inline Decomposition thickIndices(const PairDecomposition& d)
{
    return d.mapKeys([](const PartitionPair& pp) { return SimpleIndex{pp.first, {}, {}, pp.second}; });
}

} // namespace mackey
