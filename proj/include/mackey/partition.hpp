#pragma once

#include "errors.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mackey {

/// Young diagram stored as its weakly decreasing positive row lengths.
///
/// Trailing zeros are stripped on construction so that equal diagrams
/// compare and hash equal. The total order is by degree first, then
/// lexicographic on the parts; every ordered output in the library uses it.
class Partition
{
public:
    Partition() = default;

    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) { normalize(); }

    Partition(std::initializer_list<unsigned> parts) : parts_(parts) { normalize(); }

    /// Column of `k` single boxes, i.e. the diagram (1^k).
    static Partition column(unsigned k) { return Partition(std::vector<unsigned>(k, 1u)); }

    /// Single row of `k` boxes.
    static Partition row(unsigned k) { return k == 0 ? Partition() : Partition({k}); }

    /// The diagram (rowLength, 1^legs): one row with `legs` single boxes below it.
    static Partition hook(unsigned rowLength, unsigned legs)
    {
        std::vector<unsigned> p;
        if (rowLength > 0)
            p.push_back(rowLength);
        p.insert(p.end(), legs, 1u);
        return Partition(std::move(p));
    }

    std::span<const unsigned> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    unsigned degree() const noexcept { return degree_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Row length, zero past the last row.
    unsigned operator[](std::size_t row) const noexcept { return row < parts_.size() ? parts_[row] : 0u; }

    friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept
    {
        if (auto c = a.degree_ <=> b.degree_; c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                      b.parts_.end());
    }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

private:
    void normalize()
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
            throw std::invalid_argument("partition has an interior zero part");
        degree_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
    }

    std::vector<unsigned> parts_;
    unsigned degree_ = 0;
};

struct PartitionHash
{
    std::size_t operator()(const Partition& p) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ull;
        for (unsigned v : p.parts()) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline Partition conjugate(const Partition& p)
{
    std::vector<unsigned> c(p.empty() ? 0 : p[0], 0u);
    for (unsigned row : p.parts())
        for (unsigned j = 0; j < row; ++j)
            ++c[j];
    return Partition(std::move(c));
}

/// Does `outer` contain `inner` as a diagram?
inline bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length())
        return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i])
            return false;
    return true;
}

/// All diagrams obtained by adding one box, in canonical order.
inline std::vector<Partition> addBox(const Partition& p)
{
    std::vector<Partition> out;
    const auto parts = p.parts();
    for (std::size_t i = 0; i <= parts.size(); ++i) {
        if (i == 0 || p[i] < p[i - 1]) {
            std::vector<unsigned> q(parts.begin(), parts.end());
            if (i == q.size())
                q.push_back(1);
            else
                ++q[i];
            out.emplace_back(std::move(q));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All diagrams obtained by removing one box, in canonical order.
inline std::vector<Partition> removeBox(const Partition& p)
{
    std::vector<Partition> out;
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 == parts.size() || p[i] > p[i + 1]) {
            std::vector<unsigned> q(parts.begin(), parts.end());
            --q[i];
            out.emplace_back(std::move(q));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Frobenius coordinates (a_i | b_i): arm and leg lengths of the diagonal hooks.
inline std::vector<std::pair<unsigned, unsigned>> frobenius(const Partition& p)
{
    const Partition c = conjugate(p);
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i < p.length() && p[i] > i; ++i)
        out.emplace_back(p[i] - i - 1, c[i] - i - 1);
    return out;
}

inline bool isEven(const Partition& p)
{
    return std::all_of(p.parts().begin(), p.parts().end(), [](unsigned v) { return v % 2 == 0; });
}

/// Every diagonal hook has leg one longer than its arm: Frobenius form (a_1, a_2, ... | a_1+1, a_2+1, ...).
inline bool isSpecial(const Partition& p)
{
    for (auto [arm, leg] : frobenius(p))
        if (leg != arm + 1)
            return false;
    return true;
}

inline unsigned hookLength(const Partition& p, const Partition& conj, unsigned row, unsigned col)
{
    return (p[row] - col - 1) + (conj[col] - row - 1) + 1;
}

/// f^lambda, the number of standard Young tableaux, by the hook length formula.
inline BigInt standardTableauxCount(const Partition& p)
{
    const Partition c = conjugate(p);
    BigInt hooks = 1;
    for (unsigned r = 0; r < p.length(); ++r)
        for (unsigned col = 0; col < p[r]; ++col)
            hooks *= hookLength(p, c, r, col);
    return factorial(p.degree()) / hooks;
}

/// Dimension of the Schur functor S_lambda applied to an N-dimensional space (hook-content formula).
inline BigInt glDimension(const Partition& p, unsigned n)
{
    if (p.length() > n)
        return 0;
    const Partition c = conjugate(p);
    BigInt num = 1, den = 1;
    for (unsigned r = 0; r < p.length(); ++r) {
        for (unsigned col = 0; col < p[r]; ++col) {
            num *= static_cast<long>(n) + static_cast<long>(col) - static_cast<long>(r);
            den *= hookLength(p, c, r, col);
        }
    }
    return num / den;
}

/// All partitions of `n` (optionally with at most `maxParts` rows), in canonical order.
inline std::vector<Partition> partitionsOf(unsigned n, unsigned maxParts = ~0u)
{
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned maxPart) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (cur.size() >= maxParts)
            return;
        for (unsigned v = std::min(remaining, maxPart); v >= 1; --v) {
            cur.push_back(v);
            rec(remaining - v, v);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// All partitions of degree at most `n`, in canonical order.
inline std::vector<Partition> partitionsUpTo(unsigned n)
{
    std::vector<Partition> out;
    for (unsigned d = 0; d <= n; ++d) {
        auto ps = partitionsOf(d);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

namespace detail {

inline void skipSpaces(std::string_view s, std::size_t& i)
{
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
        ++i;
}

} // namespace detail

/// Parses `[a,b,c]` starting at `pos`; advances `pos` past the closing bracket.
inline Partition parsePartitionAt(std::string_view text, std::size_t& pos)
{
    const std::string token(text);
    detail::skipSpaces(text, pos);
    if (pos >= text.size() || text[pos] != '[')
        throw ParseError("expected '['", token, pos);
    ++pos;
    std::vector<unsigned> parts;
    detail::skipSpaces(text, pos);
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
        return Partition();
    }
    for (;;) {
        detail::skipSpaces(text, pos);
        const std::size_t start = pos;
        unsigned long v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + static_cast<unsigned>(text[pos] - '0');
            if (v > 1000000)
                throw ParseError("part too large", token, start);
            ++pos;
        }
        if (pos == start)
            throw ParseError("expected a non-negative integer", token, pos);
        parts.push_back(static_cast<unsigned>(v));
        detail::skipSpaces(text, pos);
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
            break;
        }
        throw ParseError("expected ',' or ']'", token, pos);
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw ParseError("parts must be weakly decreasing", token, 0);
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

inline Partition parsePartition(std::string_view text)
{
    std::size_t pos = 0;
    Partition p = parsePartitionAt(text, pos);
    detail::skipSpaces(text, pos);
    if (pos != text.size())
        throw ParseError("trailing characters", std::string(text), pos);
    return p;
}

} // namespace mackey

template <>
struct std::hash<mackey::Partition> : mackey::PartitionHash
{};
