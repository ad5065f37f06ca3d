#pragma once

#include "config.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "partition.hpp"
#include "poset.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace mackey {

/// Permutation of {0..n-1} in one-line notation.
class Permutation
{
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {}

    static Permutation identity(unsigned n)
    {
        std::vector<std::uint8_t> v(n);
        std::iota(v.begin(), v.end(), std::uint8_t{0});
        return Permutation(std::move(v));
    }

    static Permutation transposition(unsigned n, unsigned i, unsigned j)
    {
        Permutation p = identity(n);
        std::swap(p.img_[i], p.img_[j]);
        return p;
    }

    unsigned size() const noexcept { return static_cast<unsigned>(img_.size()); }
    unsigned operator[](unsigned i) const noexcept { return img_[i]; }

    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b)
    {
        std::vector<std::uint8_t> v(b.img_.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.img_[b.img_[i]];
        return Permutation(std::move(v));
    }

    Permutation inverse() const
    {
        std::vector<std::uint8_t> v(img_.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[img_[i]] = static_cast<std::uint8_t>(i);
        return Permutation(std::move(v));
    }

    int sign() const
    {
        int s = 1;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i])
                continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0)
                s = -s;
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < img_.size(); ++i)
            s += (i ? " " : "") + std::to_string(img_[i] + 1);
        return s + "]";
    }

private:
    std::vector<std::uint8_t> img_;
};

/// All permutations of the points [offset, offset + k) inside S_n, fixing the rest.
inline std::vector<Permutation> permutationsOfBlock(unsigned n, unsigned offset, unsigned k)
{
    std::vector<unsigned> part(k);
    std::iota(part.begin(), part.end(), 0u);
    std::vector<Permutation> out;
    do {
        std::vector<std::uint8_t> v(n);
        std::iota(v.begin(), v.end(), std::uint8_t{0});
        for (unsigned i = 0; i < k; ++i)
            v[offset + i] = static_cast<std::uint8_t>(offset + part[i]);
        out.emplace_back(std::move(v));
    } while (std::next_permutation(part.begin(), part.end()));
    return out;
}

/// Product S_{b_1} x ... x S_{b_r} of symmetric groups, realized as the
/// block-preserving permutations of b_1 + ... + b_r points.
class BlockGroup
{
public:
    explicit BlockGroup(std::vector<unsigned> blocks) : blocks_(std::move(blocks))
    {
        const unsigned n = degree();
        const unsigned guard = limits().groupGuard.load();
        if (n > guard)
            throw GuardExceeded("group algebra on " + std::to_string(n) + " points exceeds guard " +
                                std::to_string(guard));
    }

    static BlockGroup of(const QuadIndex& q) { return BlockGroup({q.l, q.m, q.n, q.p}); }

    const std::vector<unsigned>& blocks() const noexcept { return blocks_; }
    unsigned degree() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0u); }

    unsigned offset(std::size_t block) const
    {
        return std::accumulate(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(block), 0u);
    }

    BigInt order() const
    {
        BigInt r = 1;
        for (unsigned b : blocks_)
            r *= factorial(b);
        return r;
    }

    /// Every element, as products of per-block permutations, in sorted order.
    std::vector<Permutation> elements() const
    {
        std::vector<Permutation> out{Permutation::identity(degree())};
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            const auto local = permutationsOfBlock(degree(), offset(b), blocks_[b]);
            std::vector<Permutation> next;
            next.reserve(out.size() * local.size());
            for (const auto& g : out)
                for (const auto& h : local)
                    next.push_back(g * h);
            out = std::move(next);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Adjacent transpositions inside each block.
    std::vector<Permutation> generators() const
    {
        std::vector<Permutation> out;
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            for (unsigned i = 0; i + 1 < blocks_[b]; ++i)
                out.push_back(Permutation::transposition(degree(), offset(b) + i, offset(b) + i + 1));
        return out;
    }

private:
    std::vector<unsigned> blocks_;
};

/// Element of the rational group algebra of a BlockGroup.
class GroupAlgebraElement
{
public:
    using Map = std::map<Permutation, Rational>;

    explicit GroupAlgebraElement(std::vector<unsigned> blocks) : blocks_(std::move(blocks)) {}

    static GroupAlgebraElement unit(std::vector<unsigned> blocks)
    {
        GroupAlgebraElement e(std::move(blocks));
        e.add(Permutation::identity(e.degree()), 1);
        return e;
    }

    static GroupAlgebraElement basis(std::vector<unsigned> blocks, const Permutation& g)
    {
        GroupAlgebraElement e(std::move(blocks));
        e.add(g, 1);
        return e;
    }

    const std::vector<unsigned>& blocks() const noexcept { return blocks_; }
    unsigned degree() const { return std::accumulate(blocks_.begin(), blocks_.end(), 0u); }
    const Map& terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }

    void add(const Permutation& g, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Rational coefficient(const Permutation& g) const
    {
        auto it = terms_.find(g);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o)
    {
        checkSame(o);
        for (const auto& [g, c] : o.terms_)
            add(g, c);
        return *this;
    }

    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o)
    {
        checkSame(o);
        for (const auto& [g, c] : o.terms_)
            add(g, -c);
        return *this;
    }

    GroupAlgebraElement& operator*=(const Rational& s)
    {
        if (s == 0)
            terms_.clear();
        for (auto& [g, c] : terms_)
            c *= s;
        return *this;
    }

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s) { return a *= s; }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
    {
        a.checkSame(b);
        GroupAlgebraElement out(a.blocks_);
        for (const auto& [g, cg] : a.terms_)
            for (const auto& [h, ch] : b.terms_)
                out.add(g * h, cg * ch);
        return out;
    }

    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    void checkSame(const GroupAlgebraElement& o) const
    {
        if (blocks_ != o.blocks_)
            throw DomainError("group algebra elements over different groups");
    }

    std::vector<unsigned> blocks_;
    Map terms_;
};

inline constexpr unsigned kSymmetrizerLimit = 6;

/// Young symmetrizer (row symmetrizer) * (column antisymmetrizer) of the row-major
/// canonical filling of lam, placed on block `block` of the group with the given blocks.
inline GroupAlgebraElement youngSymmetrizer(const Partition& lam, const std::vector<unsigned>& blocks,
                                            std::size_t block)
{
    if (lam.degree() > kSymmetrizerLimit)
        throw GuardExceeded("Young symmetrizer of degree " + std::to_string(lam.degree()) + " exceeds limit " +
                            std::to_string(kSymmetrizerLimit));
    if (block >= blocks.size() || blocks[block] != lam.degree())
        throw DomainError("block size does not match the diagram " + lam.str());
    const BlockGroup group(blocks);
    const unsigned n = group.degree();
    const unsigned offset = group.offset(block);

    // cell (r, c) holds offset + (number of cells before it in row-major order)
    std::vector<std::vector<unsigned>> cell(lam.length());
    unsigned next = offset;
    for (unsigned r = 0; r < lam.length(); ++r)
        for (unsigned c = 0; c < lam[r]; ++c)
            cell[r].push_back(next++);

    auto lineGroup = [&](const std::vector<std::vector<unsigned>>& lines, bool signedSum) {
        GroupAlgebraElement sum = GroupAlgebraElement::unit(blocks);
        for (const auto& line : lines) {
            GroupAlgebraElement part(blocks);
            std::vector<unsigned> perm(line.size());
            std::iota(perm.begin(), perm.end(), 0u);
            do {
                std::vector<std::uint8_t> v(n);
                std::iota(v.begin(), v.end(), std::uint8_t{0});
                for (std::size_t i = 0; i < line.size(); ++i)
                    v[line[i]] = static_cast<std::uint8_t>(line[perm[i]]);
                Permutation g(std::move(v));
                part.add(g, signedSum ? g.sign() : 1);
            } while (std::next_permutation(perm.begin(), perm.end()));
            sum = sum * part;
        }
        return sum;
    };

    std::vector<std::vector<unsigned>> columns(lam.empty() ? 0 : lam[0]);
    for (unsigned r = 0; r < lam.length(); ++r)
        for (unsigned c = 0; c < lam[r]; ++c)
            columns[c].push_back(cell[r][c]);
    return lineGroup(cell, false) * lineGroup(columns, true);
}

inline GroupAlgebraElement youngSymmetrizer(const Partition& lam)
{
    return youngSymmetrizer(lam, {lam.degree()}, 0);
}

/// Rank of a family of rational vectors indexed by Key, by sparse Gaussian elimination.
template <class Key>
class RowReducer
{
public:
    using Row = std::map<Key, Rational>;

    /// Adds a row; returns true if it increased the rank.
    bool add(Row row)
    {
        for (;;) {
            if (row.empty())
                return false;
            const auto& [lead, coeff] = *row.begin();
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                const Rational inv = 1 / Rational(coeff);
                for (auto& [k, c] : row)
                    c *= inv;
                pivots_.emplace(row.begin()->first, std::move(row));
                return true;
            }
            const Rational factor = coeff;
            for (const auto& [k, c] : it->second) {
                Rational& slot = row[k];
                slot -= factor * c;
                if (slot == 0)
                    row.erase(k);
            }
        }
    }

    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    std::map<Key, Row> pivots_;
};

inline std::size_t rankOf(const std::vector<GroupAlgebraElement>& elems)
{
    RowReducer<Permutation> reducer;
    for (const auto& e : elems)
        reducer.add(RowReducer<Permutation>::Row(e.terms().begin(), e.terms().end()));
    return reducer.rank();
}

/// h_lam = |lam|! / f^lam, the scalar with c_lam^2 = h_lam c_lam.
inline BigInt symmetrizerScalar(const Partition& lam) { return factorial(lam.degree()) / standardTableauxCount(lam); }

/// dim of the corner (c_lam (x) c_pi) C[S_l x S_p] (c_lam (x) c_pi), as the rank of its spanning set.
inline std::size_t cornerAlgebraDimension(const Partition& lam, const Partition& pi)
{
    const std::vector<unsigned> blocks{lam.degree(), pi.degree()};
    const GroupAlgebraElement e = youngSymmetrizer(lam, blocks, 0) * youngSymmetrizer(pi, blocks, 1);
    std::vector<GroupAlgebraElement> span;
    for (const auto& g : BlockGroup(blocks).elements())
        span.push_back(e * GroupAlgebraElement::basis(blocks, g) * e);
    return rankOf(span);
}

/// dim End I_{l,m,n,p} = |S_l x S_m x S_n x S_p|.
inline BigInt endDimension(const QuadIndex& q)
{
    return factorial(q.l) * factorial(q.m) * factorial(q.n) * factorial(q.p);
}

enum class HomFlavor { contract, shiftLeft, shiftRight };

inline const char* toString(HomFlavor f)
{
    switch (f) {
    case HomFlavor::contract: return "contract";
    case HomFlavor::shiftLeft: return "shiftLeft";
    case HomFlavor::shiftRight: return "shiftRight";
    }
    return "?";
}

inline HomFlavor parseHomFlavor(std::string_view text)
{
    if (text == "contract")
        return HomFlavor::contract;
    if (text == "shiftLeft" || text == "shift-left")
        return HomFlavor::shiftLeft;
    if (text == "shiftRight" || text == "shift-right")
        return HomFlavor::shiftRight;
    throw ParseError("expected contract, shiftLeft or shiftRight", std::string(text), 0);
}

/// Target of a degree-one morphism of the given flavor out of I_q.
inline QuadIndex homTarget(const QuadIndex& q, HomFlavor flavor)
{
    switch (flavor) {
    case HomFlavor::contract:
        if (q.m < 1 || q.n < 1)
            throw DomainError("contract needs m >= 1 and n >= 1, got (" + q.str() + ")");
        return {q.l, q.m - 1, q.n - 1, q.p};
    case HomFlavor::shiftLeft:
        if (q.m < 1)
            throw DomainError("shiftLeft needs m >= 1, got (" + q.str() + ")");
        return {q.l + 1, q.m - 1, q.n, q.p};
    case HomFlavor::shiftRight:
        if (q.n < 1)
            throw DomainError("shiftRight needs n >= 1, got (" + q.str() + ")");
        return {q.l, q.m, q.n - 1, q.p + 1};
    }
    return q;
}

/// dim Hom(I_q, I_target) in degree one: l!m!n!p!, (l+1)!m!n!p! or l!m!n!(p+1)!.
inline BigInt homDimensionDeg1(const QuadIndex& q, HomFlavor flavor)
{
    const QuadIndex t = homTarget(q, flavor);
    switch (flavor) {
    case HomFlavor::contract: return endDimension(q);
    case HomFlavor::shiftLeft: return factorial(t.l) * factorial(q.m) * factorial(q.n) * factorial(q.p);
    case HomFlavor::shiftRight: return factorial(q.l) * factorial(q.m) * factorial(q.n) * factorial(t.p);
    }
    return 0;
}

/// Closed form 1/2 l!m!n!p! for the kernel of the composite of two contractions.
inline BigInt quadraticKernelDim(const QuadIndex& q)
{
    if (q.m < 2 || q.n < 2)
        throw DomainError("the contraction composite needs m >= 2 and n >= 2, got (" + q.str() + ")");
    return endDimension(q) / 2;
}

// ---------------------------------------------------------------------------
// Morphism diagrams.
//
// Points of I_{l,m,n,p} are numbered block by block: W_* (l), V^* (m), V_*^* (n), W (p).
// A diagram sends every source point either to a target point (bijectively onto the
// target) or pairs it with a source point of the opposite V-type (a contraction).
// Allowed moves: same block, V^* -> W_* and V_*^* -> W. The degree is the number of
// contractions plus the number of block changes.

enum class PointType : std::uint8_t { wLowerStar, vDual, vDualDual, w };

inline PointType pointType(const QuadIndex& q, unsigned i)
{
    if (i < q.l)
        return PointType::wLowerStar;
    if (i < q.l + q.m)
        return PointType::vDual;
    if (i < q.l + q.m + q.n)
        return PointType::vDualDual;
    return PointType::w;
}

inline bool mayMap(PointType from, PointType to)
{
    return from == to || (from == PointType::vDual && to == PointType::wLowerStar) ||
           (from == PointType::vDualDual && to == PointType::w);
}

/// img[i] >= 0: target point; img[i] = -1 - j: contracted with source point j.
using Diagram = std::vector<int>;

/// All diagrams from I_s to I_t.
inline std::vector<Diagram> enumerateDiagrams(const QuadIndex& s, const QuadIndex& t)
{
    const unsigned ns = s.total(), nt = t.total();
    std::vector<Diagram> out;
    Diagram img(ns, 0);
    std::vector<bool> assigned(ns, false), used(nt, false);
    auto rec = [&](auto&& self, unsigned i) -> void {
        while (i < ns && assigned[i])
            ++i;
        if (i == ns) {
            if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
                out.push_back(img);
            return;
        }
        const PointType ti = pointType(s, i);
        assigned[i] = true;
        for (unsigned j = 0; j < nt; ++j) {
            if (used[j] || !mayMap(ti, pointType(t, j)))
                continue;
            used[j] = true;
            img[i] = static_cast<int>(j);
            self(self, i + 1);
            used[j] = false;
        }
        if (ti == PointType::vDual)
            for (unsigned k = i + 1; k < ns; ++k) {
                if (assigned[k] || pointType(s, k) != PointType::vDualDual)
                    continue;
                assigned[k] = true;
                img[i] = -1 - static_cast<int>(k);
                img[k] = -1 - static_cast<int>(i);
                self(self, i + 1);
                assigned[k] = false;
            }
        assigned[i] = false;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// d2 o d1 for d1: s -> t and d2: t -> u.
inline Diagram composeDiagrams(const Diagram& d2, const Diagram& d1)
{
    std::vector<int> preimage(d2.size(), -1);
    for (std::size_t i = 0; i < d1.size(); ++i)
        if (d1[i] >= 0)
            preimage[static_cast<std::size_t>(d1[i])] = static_cast<int>(i);
    Diagram out(d1.size());
    for (std::size_t i = 0; i < d1.size(); ++i) {
        if (d1[i] < 0) {
            out[i] = d1[i];
            continue;
        }
        const int j = d2[static_cast<std::size_t>(d1[i])];
        if (j >= 0)
            out[i] = j;
        else
            out[i] = -1 - preimage[static_cast<std::size_t>(-1 - j)];
    }
    return out;
}

/// d o g for g in the source group (acting on source points).
inline Diagram actRight(const Diagram& d, const Permutation& g)
{
    const Permutation gi = g.inverse();
    Diagram out(d.size());
    for (unsigned i = 0; i < d.size(); ++i) {
        const int v = d[g[i]];
        out[i] = v >= 0 ? v : -1 - static_cast<int>(gi[static_cast<unsigned>(-1 - v)]);
    }
    return out;
}

/// h o d for h in the target group.
inline Diagram actLeft(const Permutation& h, const Diagram& d)
{
    Diagram out(d);
    for (auto& v : out)
        if (v >= 0)
            v = static_cast<int>(h[static_cast<unsigned>(v)]);
    return out;
}

/// The standard generator of each flavor: the last V^* point contracted with the last
/// V_*^* point, or the last V^* (resp. first V_*^*) point sent to the new W_* (resp. W)
/// point, everything else in place.
inline Diagram generatorDiagram(const QuadIndex& q, HomFlavor flavor)
{
    const QuadIndex t = homTarget(q, flavor);
    Diagram d(q.total());
    switch (flavor) {
    case HomFlavor::contract: {
        const unsigned a = q.l + q.m - 1, b = q.l + q.m + q.n - 1;
        for (unsigned i = 0, j = 0; i < q.total(); ++i) {
            if (i == a)
                d[i] = -1 - static_cast<int>(b);
            else if (i == b)
                d[i] = -1 - static_cast<int>(a);
            else
                d[i] = static_cast<int>(j++);
        }
        break;
    }
    case HomFlavor::shiftLeft: {
        // the last V^* lands on the new last W_* point
        const unsigned a = q.l + q.m - 1;
        for (unsigned i = 0; i < q.total(); ++i) {
            if (i < q.l)
                d[i] = static_cast<int>(i);
            else if (i == a)
                d[i] = static_cast<int>(q.l);
            else if (i < a)
                d[i] = static_cast<int>(i + 1);
            else
                d[i] = static_cast<int>(i);
        }
        break;
    }
    case HomFlavor::shiftRight: {
        // the first V_*^* lands on the new first W point
        const unsigned b = q.l + q.m;
        for (unsigned i = 0; i < q.total(); ++i) {
            if (i < b)
                d[i] = static_cast<int>(i);
            else if (i == b)
                d[i] = static_cast<int>(t.l + t.m + t.n);
            else if (i < q.l + q.m + q.n)
                d[i] = static_cast<int>(i - 1);
            else
                d[i] = static_cast<int>(i);
        }
        break;
    }
    }
    return d;
}

/// Size of the orbit of the flavor's generator under both group actions: the dimension
/// of the bimodule it generates (distinct diagrams are linearly independent).
inline std::size_t generatorOrbitSize(const QuadIndex& q, HomFlavor flavor)
{
    const QuadIndex t = homTarget(q, flavor);
    const auto right = BlockGroup::of(q).generators();
    const auto left = BlockGroup::of(t).generators();
    std::set<Diagram> seen{generatorDiagram(q, flavor)};
    std::vector<Diagram> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<Diagram> next;
        for (const auto& d : frontier) {
            for (const auto& g : right)
                if (auto e = actRight(d, g); seen.insert(e).second)
                    next.push_back(std::move(e));
            for (const auto& h : left)
                if (auto e = actLeft(h, d); seen.insert(e).second)
                    next.push_back(std::move(e));
        }
        frontier = std::move(next);
    }
    return seen.size();
}

/// Size of the orbit of the generator under the right (source) action only.
inline std::size_t generatorRightOrbitSize(const QuadIndex& q, HomFlavor flavor)
{
    std::set<Diagram> seen;
    for (const auto& g : BlockGroup::of(q).elements())
        seen.insert(actRight(generatorDiagram(q, flavor), g));
    return seen.size();
}

/// Dimension count of a composition of degree-one morphisms I_s -> I_mid -> I_u,
/// summed over the listed middle objects.
struct CompositionReport
{
    std::string name;
    QuadIndex source, target;
    BigInt domain;    // sum over paths of dim Hom(mid,u) (x)_{End mid} Hom(s,mid)
    BigInt codomain;  // dim Hom(I_s, I_u) in the diagram model
    BigInt rank;      // dimension of the image of the composition map
    BigInt kernel;    // domain - rank
    bool free = true; // every Hom(mid,u) is free over End I_mid
};

inline CompositionReport compositionAccounting(std::string name, const QuadIndex& s,
                                               const std::vector<std::pair<HomFlavor, HomFlavor>>& paths)
{
    CompositionReport r;
    r.name = std::move(name);
    r.source = s;
    std::set<Diagram> image;
    for (const auto& [first, second] : paths) {
        const QuadIndex mid = homTarget(s, first);
        const QuadIndex u = homTarget(mid, second);
        r.target = u;
        const auto d1 = enumerateDiagrams(s, mid);
        const auto d2 = enumerateDiagrams(mid, u);
        const auto gmid = BlockGroup::of(mid).elements();
        const Permutation one = Permutation::identity(mid.total());
        // freeness: the source group of the second factor acts without fixed points
        for (const auto& d : d2)
            for (const auto& g : gmid)
                if (g != one && actRight(d, g) == d)
                    r.free = false;
        r.domain += BigInt(d1.size()) * d2.size() / BlockGroup::of(mid).order();
        for (const auto& a : d1)
            for (const auto& b : d2)
                image.insert(composeDiagrams(b, a));
    }
    r.codomain = enumerateDiagrams(s, r.target).size();
    r.rank = image.size();
    r.kernel = r.domain - r.rank;
    return r;
}

/// The six composites of two degree-one morphisms out of I_q that apply to q.
inline std::vector<CompositionReport> allCompositionReports(const QuadIndex& q)
{
    using F = HomFlavor;
    std::vector<CompositionReport> out;
    if (q.m >= 2 && q.n >= 2)
        out.push_back(compositionAccounting("contract.contract", q, {{F::contract, F::contract}}));
    if (q.m >= 2)
        out.push_back(compositionAccounting("shiftLeft.shiftLeft", q, {{F::shiftLeft, F::shiftLeft}}));
    if (q.n >= 2)
        out.push_back(compositionAccounting("shiftRight.shiftRight", q, {{F::shiftRight, F::shiftRight}}));
    if (q.m >= 2 && q.n >= 1)
        out.push_back(compositionAccounting("contract+shiftLeft", q,
                                            {{F::contract, F::shiftLeft}, {F::shiftLeft, F::contract}}));
    if (q.m >= 1 && q.n >= 2)
        out.push_back(compositionAccounting("contract+shiftRight", q,
                                            {{F::contract, F::shiftRight}, {F::shiftRight, F::contract}}));
    if (q.m >= 1 && q.n >= 1)
        out.push_back(compositionAccounting("shiftLeft+shiftRight", q,
                                            {{F::shiftLeft, F::shiftRight}, {F::shiftRight, F::shiftLeft}}));
    return out;
}

/// Explicit linear algebra behind the kernel of the contraction composite.
struct QuadraticKernelReport
{
    BigInt closedForm;      // 1/2 l!m!n!p!
    std::size_t rightIdeal; // dim (1 - tau) C[G]
    std::size_t bimodule;   // dim C[G'] (1 - tau) C[G], G' fixing the contracted points
    BigInt diagramKernel;   // kernel of the composite in the diagram model

    bool ok() const { return closedForm == rightIdeal && closedForm == bimodule && closedForm == diagramKernel; }
};

/// tau = (m, m-1)(n, n-1): swaps the last two V^* points and the last two V_*^* points.
inline Permutation quadraticTau(const QuadIndex& q)
{
    const unsigned a = q.l + q.m - 1, b = q.l + q.m + q.n - 1;
    return Permutation::transposition(q.total(), a, a - 1) * Permutation::transposition(q.total(), b, b - 1);
}

inline QuadraticKernelReport quadraticKernelReport(const QuadIndex& q)
{
    QuadraticKernelReport r;
    r.closedForm = quadraticKernelDim(q);
    const BlockGroup group = BlockGroup::of(q);
    const std::vector<unsigned> blocks = group.blocks();
    const auto elems = group.elements();
    GroupAlgebraElement x = GroupAlgebraElement::unit(blocks);
    x -= GroupAlgebraElement::basis(blocks, quadraticTau(q));

    std::vector<GroupAlgebraElement> ideal;
    for (const auto& g : elems)
        ideal.push_back(x * GroupAlgebraElement::basis(blocks, g));
    r.rightIdeal = rankOf(ideal);

    const unsigned a = q.l + q.m, b = q.l + q.m + q.n;
    std::vector<GroupAlgebraElement> bimod;
    for (const auto& h : elems) {
        if (h[a - 1] != a - 1 || h[a - 2] != a - 2 || h[b - 1] != b - 1 || h[b - 2] != b - 2)
            continue;
        const auto hx = GroupAlgebraElement::basis(blocks, h) * x;
        for (const auto& g : elems)
            bimod.push_back(hx * GroupAlgebraElement::basis(blocks, g));
    }
    r.bimodule = rankOf(bimod);

    r.diagramKernel = compositionAccounting("contract.contract", q, {{HomFlavor::contract, HomFlavor::contract}}).kernel;
    return r;
}

inline bool quadraticKernelCheck(const QuadIndex& q) { return quadraticKernelReport(q).ok(); }

} // namespace mackey
