#pragma once

#include "numeric.hpp"

#include <map>
#include <utility>

namespace mackey {

/// Finitely supported integer combination of keys. Zero coefficients are never stored.
///
/// Used for Grothendieck-group elements (non-negative) as well as virtual
/// characters and alternating sums (signed). Iteration follows the key order.
template <class Key>
class LinearCombination
{
public:
    using Map = std::map<Key, BigInt>;
    using const_iterator = typename Map::const_iterator;

    LinearCombination() = default;

    static LinearCombination single(Key key, BigInt coeff = 1)
    {
        LinearCombination c;
        c.add(std::move(key), std::move(coeff));
        return c;
    }

    void add(const Key& key, const BigInt& coeff)
    {
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    BigInt coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    bool isZero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Map& terms() const noexcept { return terms_; }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }

    bool isNonNegative() const
    {
        for (const auto& [k, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    BigInt totalMultiplicity() const
    {
        BigInt t = 0;
        for (const auto& [k, c] : terms_)
            t += c;
        return t;
    }

    LinearCombination& operator+=(const LinearCombination& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, c);
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& o)
    {
        for (const auto& [k, c] : o.terms_)
            add(k, -c);
        return *this;
    }

    LinearCombination& operator*=(const BigInt& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(LinearCombination a, const BigInt& s) { return a *= s; }

    /// Keeps only the terms satisfying `pred(key)`.
    template <class Pred>
    LinearCombination filter(Pred pred) const
    {
        LinearCombination out;
        for (const auto& [k, c] : terms_)
            if (pred(k))
                out.terms_.emplace(k, c);
        return out;
    }

    /// Re-keys every term through `f`, merging collisions.
    template <class F>
    auto mapKeys(F f) const
    {
        LinearCombination<std::decay_t<decltype(f(std::declval<const Key&>()))>> out;
        for (const auto& [k, c] : terms_)
            out.add(f(k), c);
        return out;
    }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    Map terms_;
};

} // namespace mackey
