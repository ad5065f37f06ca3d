#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace mackey {

/// Quadruple (l, m, n, p) of tensor-power counts: W_* , V^*, V_*^*, W.
struct QuadIndex
{
    unsigned l = 0, m = 0, n = 0, p = 0;

    friend bool operator==(const QuadIndex&, const QuadIndex&) = default;
    friend auto operator<=>(const QuadIndex&, const QuadIndex&) = default;

    unsigned total() const noexcept { return l + m + n + p; }
    unsigned maxEntry() const noexcept { return std::max({l, m, n, p}); }

    /// Interchange V <-> V_*: (l, m, n, p) -> (p, n, m, l).
    QuadIndex mirrored() const noexcept { return {p, n, m, l}; }

    std::string str() const
    {
        return std::to_string(l) + "," + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p);
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadIndex& q) { return os << q.str(); }
};

inline int charge(const QuadIndex& q)
{
    return static_cast<int>(q.l + q.m) - static_cast<int>(q.n + q.p);
}

/// The order a <= b of the category: b is reachable from a by the moves that
/// produce composition factors of injective objects (projecting V^* onto W_*,
/// V_*^* onto W, contracting V^* against V_*^*, and twisting by layers of I).
///
/// Equivalent to l >= l', m <= m', p >= p', n <= n' with l+m-n-p conserved.
inline bool leq(const QuadIndex& a, const QuadIndex& b)
{
    return a.l >= b.l && a.m <= b.m && a.p >= b.p && a.n <= b.n && charge(a) == charge(b);
}

/// The seven-condition order generated by the moves inside J_s alone (no I
/// layers): leq plus l+m <= l'+m' and p+n <= p'+n'.
inline bool leqWithinJ(const QuadIndex& a, const QuadIndex& b)
{
    return leq(a, b) && a.l + a.m <= b.l + b.m && a.p + a.n <= b.p + b.n;
}

/// Closed-form defect l - l' + n' - n for a <= b; nullopt when incomparable.
inline std::optional<unsigned> defect(const QuadIndex& a, const QuadIndex& b)
{
    if (!leq(a, b))
        return std::nullopt;
    return (a.l - b.l) + (b.n - a.n);
}

/// The mirrored closed form p - p' + m' - m (equal to defect() on comparable pairs).
inline std::optional<unsigned> defectMirrored(const QuadIndex& a, const QuadIndex& b)
{
    if (!leq(a, b))
        return std::nullopt;
    return (a.p - b.p) + (b.m - a.m);
}

namespace detail {

/// Elements c of the interval [a, b] (a <= c <= b). The interval is finite: every
/// coordinate of c lies between those of a and b.
inline std::vector<QuadIndex> intervalElements(const QuadIndex& a, const QuadIndex& b)
{
    std::vector<QuadIndex> out;
    if (!leq(a, b))
        return out;
    for (unsigned l = b.l; l <= a.l; ++l)
        for (unsigned m = a.m; m <= b.m; ++m)
            for (unsigned n = a.n; n <= b.n; ++n)
                for (unsigned p = b.p; p <= a.p; ++p) {
                    QuadIndex c{l, m, n, p};
                    if (leq(a, c) && leq(c, b))
                        out.push_back(c);
                }
    return out;
}

} // namespace detail

/// Immediate successors c of a (a < c, nothing strictly between) with all entries <= bound.
inline std::vector<QuadIndex> covers(const QuadIndex& a, unsigned bound)
{
    std::vector<QuadIndex> up;
    for (unsigned l = 0; l <= bound; ++l)
        for (unsigned m = 0; m <= bound; ++m)
            for (unsigned n = 0; n <= bound; ++n)
                for (unsigned p = 0; p <= bound; ++p) {
                    QuadIndex c{l, m, n, p};
                    if (c != a && leq(a, c))
                        up.push_back(c);
                }
    std::vector<QuadIndex> out;
    for (const auto& c : up) {
        bool cover = true;
        for (const auto& d : detail::intervalElements(a, c))
            if (d != a && d != c) {
                cover = false;
                break;
            }
        if (cover)
            out.push_back(c);
    }
    return out;
}

/// All saturated chains a = c_0 < c_1 < ... < c_q = b, found depth-first over the
/// (finite) interval with memoized reachability. Empty when a is not <= b.
inline std::vector<std::vector<QuadIndex>> chains(const QuadIndex& a, const QuadIndex& b)
{
    std::vector<std::vector<QuadIndex>> out;
    if (!leq(a, b))
        return out;
    const auto elems = detail::intervalElements(a, b);
    std::map<QuadIndex, std::vector<QuadIndex>> coverMap;
    for (const auto& x : elems)
        for (const auto& y : elems) {
            if (x == y || !leq(x, y))
                continue;
            bool cover = true;
            for (const auto& z : elems)
                if (z != x && z != y && leq(x, z) && leq(z, y)) {
                    cover = false;
                    break;
                }
            if (cover)
                coverMap[x].push_back(y);
        }
    std::vector<QuadIndex> path{a};
    auto dfs = [&](auto&& self, const QuadIndex& x) -> void {
        if (x == b) {
            out.push_back(path);
            return;
        }
        for (const auto& y : coverMap[x]) {
            path.push_back(y);
            self(self, y);
            path.pop_back();
        }
    };
    dfs(dfs, a);
    return out;
}

/// Length of the longest chain from a to b by exhaustive search; nullopt when incomparable.
inline std::optional<unsigned> longestChainLength(const QuadIndex& a, const QuadIndex& b)
{
    if (!leq(a, b))
        return std::nullopt;
    const auto elems = detail::intervalElements(a, b);
    // longest path in the DAG of strict relations, memoized on the target
    std::map<QuadIndex, unsigned> best;
    auto longest = [&](auto&& self, const QuadIndex& x) -> unsigned {
        if (x == b)
            return 0;
        if (auto it = best.find(x); it != best.end())
            return it->second;
        unsigned r = 0;
        for (const auto& y : elems)
            if (y != x && leq(x, y))
                r = std::max(r, 1 + self(self, y));
        best[x] = r;
        return r;
    };
    return longest(longest, a);
}

inline QuadIndex parseQuadIndex(std::string_view text)
{
    const std::string token(text);
    std::array<unsigned, 4> v{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t start = pos;
        unsigned long x = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            x = x * 10 + static_cast<unsigned>(text[pos] - '0');
            if (x > 1000000)
                throw ParseError("entry too large", token, start);
            ++pos;
        }
        if (pos == start)
            throw ParseError("expected a non-negative integer", token, pos);
        v[static_cast<std::size_t>(i)] = static_cast<unsigned>(x);
        if (i < 3) {
            if (pos >= text.size() || text[pos] != ',')
                throw ParseError("expected ','", token, pos);
            ++pos;
        }
    }
    if (pos != text.size())
        throw ParseError("trailing characters", token, pos);
    return {v[0], v[1], v[2], v[3]};
}

} // namespace mackey
