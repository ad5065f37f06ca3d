#pragma once

// Brute-force verifiers. Nothing here calls the LR rule, the Cauchy tables or
// the tensoring rules: only monomial arithmetic and tableau enumeration.

#include "combination.hpp"
#include "errors.hpp"
#include "grothendieck.hpp"
#include "numeric.hpp"
#include "partition.hpp"
#include "plethysm.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace mackey::oracle {

inline constexpr unsigned kSchurDegreeLimit = 8;
inline constexpr unsigned kPlethysmPowerLimit = 4;
inline constexpr unsigned kPlethysmVariableLimit = 6;
inline constexpr unsigned kMixedDegreeLimit = 4;

/// Laurent polynomial in a fixed number of variables with integer coefficients.
class MonomialPoly
{
public:
    using Exponent = std::vector<int>;
    using Map = std::map<Exponent, BigInt>;

    explicit MonomialPoly(unsigned variables) : n_(variables) {}

    static MonomialPoly constant(unsigned variables, const BigInt& c)
    {
        MonomialPoly p(variables);
        p.add(Exponent(variables, 0), c);
        return p;
    }

    /// x_i^power.
    static MonomialPoly monomial(unsigned variables, unsigned i, int power = 1)
    {
        MonomialPoly p(variables);
        Exponent e(variables, 0);
        e[i] = power;
        p.add(e, 1);
        return p;
    }

    /// x_1^power + ... + x_N^power.
    static MonomialPoly powerSum(unsigned variables, int power = 1)
    {
        MonomialPoly p(variables);
        for (unsigned i = 0; i < variables; ++i)
            p += monomial(variables, i, power);
        return p;
    }

    unsigned variables() const noexcept { return n_; }
    const Map& terms() const noexcept { return terms_; }
    bool isZero() const noexcept { return terms_.empty(); }

    void add(const Exponent& e, const BigInt& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    BigInt coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    BigInt coefficientSum() const
    {
        BigInt s = 0;
        for (const auto& [e, c] : terms_)
            s += c;
        return s;
    }

    MonomialPoly& operator+=(const MonomialPoly& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_)
            add(e, c);
        return *this;
    }

    MonomialPoly& operator-=(const MonomialPoly& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_)
            add(e, -c);
        return *this;
    }

    friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }
    friend MonomialPoly operator-(MonomialPoly a, const MonomialPoly& b) { return a -= b; }

    friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b)
    {
        a.check(b);
        MonomialPoly out(a.n_);
        Exponent e(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (unsigned i = 0; i < a.n_; ++i)
                    e[i] = ea[i] + eb[i];
                out.add(e, ca * cb);
            }
        return out;
    }

    friend MonomialPoly operator*(MonomialPoly a, const BigInt& s)
    {
        if (s == 0)
            return MonomialPoly(a.n_);
        for (auto& [e, c] : a.terms_)
            c *= s;
        return a;
    }

    /// Invariant under permutations of the variables in [from, to).
    bool isSymmetric(unsigned from, unsigned to) const
    {
        for (const auto& [e, c] : terms_)
            for (unsigned i = from; i + 1 < to; ++i) {
                Exponent f = e;
                std::swap(f[i], f[i + 1]);
                if (coefficient(f) != c)
                    return false;
            }
        return true;
    }

    bool isSymmetric() const { return isSymmetric(0, n_); }

    /// Places this polynomial on variables [offset, offset + n) of a ring with `total` variables.
    MonomialPoly embedded(unsigned total, unsigned offset) const
    {
        MonomialPoly out(total);
        for (const auto& [e, c] : terms_) {
            Exponent f(total, 0);
            std::copy(e.begin(), e.end(), f.begin() + offset);
            out.add(f, c);
        }
        return out;
    }

    friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

private:
    void check(const MonomialPoly& o) const
    {
        if (n_ != o.n_)
            throw DomainError("polynomials in different numbers of variables");
    }

    unsigned n_;
    Map terms_;
};

namespace detail {

/// Sum over semistandard tableaux of `shape` with entries 1..N of x^content.
/// Entries are bounded below by the row index and above by N minus the rows still
/// needed in that column, so every partial filling extends.
inline MonomialPoly semistandardSum(const Partition& shape, unsigned n)
{
    MonomialPoly out(n);
    if (shape.length() > n)
        return out;
    const Partition conj = conjugate(shape);
    std::vector<std::vector<int>> t(shape.length());
    for (unsigned r = 0; r < shape.length(); ++r)
        t[r].assign(shape[r], 0);
    MonomialPoly::Exponent content(n, 0);
    auto rec = [&](auto&& self, unsigned r, unsigned c) -> void {
        if (r == shape.length()) {
            out.add(content, 1);
            return;
        }
        if (c == shape[r]) {
            self(self, r + 1, 0);
            return;
        }
        int lo = static_cast<int>(r) + 1;
        if (c > 0)
            lo = std::max(lo, t[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, t[r - 1][c] + 1);
        const int hi = static_cast<int>(n) - static_cast<int>(conj[c] - 1 - r);
        for (int v = lo; v <= hi; ++v) {
            t[r][c] = v;
            ++content[static_cast<unsigned>(v - 1)];
            self(self, r, c + 1);
            --content[static_cast<unsigned>(v - 1)];
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace detail

/// The Schur polynomial s_lam(x_1..x_N) from its semistandard tableaux.
inline MonomialPoly expandSchur(const Partition& lam, unsigned n)
{
    if (n == 0)
        throw DomainError("expandSchur needs at least one variable");
    if (lam.degree() > kSchurDegreeLimit)
        throw GuardExceeded("expandSchur: degree " + std::to_string(lam.degree()) + " exceeds oracle limit " +
                            std::to_string(kSchurDegreeLimit));
    return detail::semistandardSum(lam, n);
}

/// Number of semistandard tableaux of shape lam with entries <= N.
inline BigInt semistandardCount(const Partition& lam, unsigned n) { return expandSchur(lam, n).coefficientSum(); }

namespace detail {

/// Lex-largest exponent among the terms of highest total degree.
inline const MonomialPoly::Exponent& leadingExponent(const MonomialPoly& p)
{
    const MonomialPoly::Exponent* best = nullptr;
    long bestDegree = 0;
    for (const auto& [e, c] : p.terms()) {
        long d = 0;
        for (int v : e)
            d += v;
        if (!best || d > bestDegree || (d == bestDegree && e > *best)) {
            best = &e;
            bestDegree = d;
        }
    }
    return *best;
}

inline Partition partitionFromExponent(MonomialPoly::Exponent::const_iterator first,
                                       MonomialPoly::Exponent::const_iterator last)
{
    std::vector<unsigned> parts;
    for (auto it = first; it != last; ++it) {
        if (*it < 0)
            throw DomainError("negative exponent in a polynomial character");
        parts.push_back(static_cast<unsigned>(*it));
    }
    return Partition(std::move(parts));
}

} // namespace detail

/// Schur expansion of a symmetric polynomial by greedy leading-term subtraction.
/// Virtual characters come back with negative coefficients.
inline SymFunc decomposeIntoSchur(MonomialPoly p)
{
    if (!p.isSymmetric())
        throw DomainError("decomposeIntoSchur: polynomial is not symmetric");
    SymFunc out;
    while (!p.isZero()) {
        const auto e = detail::leadingExponent(p);
        const BigInt c = p.coefficient(e);
        const Partition lam = detail::partitionFromExponent(e.begin(), e.end());
        p -= detail::semistandardSum(lam, p.variables()) * c;
        out.add(lam, c);
    }
    return out;
}

/// Expansion of a polynomial in x_1..x_a, y_1..y_b, symmetric in each set separately,
/// into products s_alpha(x) s_beta(y).
inline PairDecomposition decomposeBivariate(MonomialPoly p, unsigned a)
{
    const unsigned b = p.variables() - a;
    if (!p.isSymmetric(0, a) || !p.isSymmetric(a, a + b))
        throw DomainError("decomposeBivariate: polynomial is not symmetric in both variable sets");
    PairDecomposition out;
    while (!p.isZero()) {
        const auto e = detail::leadingExponent(p);
        const BigInt c = p.coefficient(e);
        const Partition alpha = detail::partitionFromExponent(e.begin(), e.begin() + a);
        const Partition beta = detail::partitionFromExponent(e.begin() + a, e.end());
        const MonomialPoly term = detail::semistandardSum(alpha, a).embedded(a + b, 0) *
                                  detail::semistandardSum(beta, b).embedded(a + b, a);
        p -= term * c;
        out.add({alpha, beta}, c);
    }
    return out;
}

/// s_mu * s_nu computed in |mu|+|nu| variables and decomposed greedily.
inline SymFunc schurProductByMonomials(const Partition& mu, const Partition& nu)
{
    const unsigned n = std::max(1u, mu.degree() + nu.degree());
    return decomposeIntoSchur(expandSchur(mu, n) * expandSchur(nu, n));
}

enum class InnerSpace { sym2, ext2 };

namespace detail {

/// Character of S^k or Lambda^k of the space whose weight basis is `weights`:
/// sum over multisets (resp. subsets) of k basis vectors of the product of weights.
inline MonomialPoly powerCharacter(const std::vector<MonomialPoly::Exponent>& weights, unsigned variables,
                                   PowerKind outer, unsigned k)
{
    MonomialPoly out(variables);
    MonomialPoly::Exponent acc(variables, 0);
    auto rec = [&](auto&& self, std::size_t start, unsigned left) -> void {
        if (left == 0) {
            out.add(acc, 1);
            return;
        }
        for (std::size_t i = start; i < weights.size(); ++i) {
            for (unsigned v = 0; v < variables; ++v)
                acc[v] += weights[i][v];
            self(self, outer == PowerKind::symmetric ? i : i + 1, left - 1);
            for (unsigned v = 0; v < variables; ++v)
                acc[v] -= weights[i][v];
        }
    };
    rec(rec, 0, k);
    return out;
}

} // namespace detail

/// S^k or Lambda^k of S^2 C^N or Lambda^2 C^N, from the weights of the inner space.
inline SymFunc bruteForcePlethysm(PowerKind outer, unsigned k, InnerSpace inner, unsigned n)
{
    if (k > kPlethysmPowerLimit || n > kPlethysmVariableLimit || n == 0)
        throw GuardExceeded("bruteForcePlethysm: k <= " + std::to_string(kPlethysmPowerLimit) + " and 1 <= N <= " +
                            std::to_string(kPlethysmVariableLimit) + " required");
    std::vector<MonomialPoly::Exponent> weights;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) {
            if (inner == InnerSpace::ext2 && i == j)
                continue;
            MonomialPoly::Exponent w(n, 0);
            ++w[i];
            ++w[j];
            weights.push_back(std::move(w));
        }
    return decomposeIntoSchur(detail::powerCharacter(weights, n, outer, k));
}

/// S^k or Lambda^k of C^a (x) C^b, from the weights x_i y_j, as pairs (alpha, beta).
inline PairDecomposition bruteForceCauchy(PowerKind outer, unsigned k, unsigned a, unsigned b)
{
    if (k > kPlethysmPowerLimit || a * b > 36 || a == 0 || b == 0)
        throw GuardExceeded("bruteForceCauchy: k <= 4 and a*b <= 36 required");
    std::vector<MonomialPoly::Exponent> weights;
    for (unsigned i = 0; i < a; ++i)
        for (unsigned j = 0; j < b; ++j) {
            MonomialPoly::Exponent w(a + b, 0);
            ++w[i];
            ++w[a + j];
            weights.push_back(std::move(w));
        }
    return decomposeBivariate(detail::powerCharacter(weights, a + b, outer, k), a);
}

/// S_delta(C^d (x) C^d) with d = |delta| as pairs (alpha, beta): expand s_delta in the
/// d^2 variables z_ij, substitute z_ij = x_i y_j and split greedily.
inline PairDecomposition bivariateSchur(const Partition& delta)
{
    const unsigned d = std::max(1u, delta.degree());
    if (delta.degree() > 5)
        throw GuardExceeded("bivariateSchur: degree " + std::to_string(delta.degree()) + " exceeds 5");
    const MonomialPoly z = detail::semistandardSum(delta, d * d);
    MonomialPoly xy(2 * d);
    MonomialPoly::Exponent f(2 * d);
    for (const auto& [e, c] : z.terms()) {
        std::fill(f.begin(), f.end(), 0);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j) {
                f[i] += e[i * d + j];
                f[d + j] += e[i * d + j];
            }
        xy.add(f, c);
    }
    return decomposeBivariate(std::move(xy), d);
}

/// Character of the rational GL(N) irreducible with highest weight
/// (nu_1, .., nu_r, 0, .., 0, -mu_s, .., -mu_1).
inline MonomialPoly rationalCharacter(const Partition& mu, const Partition& nu, unsigned n)
{
    if (mu.length() + nu.length() > n)
        return MonomialPoly(n);
    const int shift = static_cast<int>(mu[0]);
    std::vector<unsigned> shifted(n);
    for (unsigned i = 0; i < n; ++i) {
        int w = shift;
        if (i < nu.length())
            w += static_cast<int>(nu[i]);
        if (n - 1 - i < mu.length())
            w -= static_cast<int>(mu[n - 1 - i]);
        shifted[i] = static_cast<unsigned>(w);
    }
    const MonomialPoly s = detail::semistandardSum(Partition(std::move(shifted)), n);
    MonomialPoly out(n);
    for (const auto& [e, c] : s.terms()) {
        MonomialPoly::Exponent f(e);
        for (auto& v : f)
            v -= shift;
        out.add(f, c);
    }
    return out;
}

/// Weyl dimension of the rational irreducible labeled (mu, nu).
inline BigInt rationalDimension(const Partition& mu, const Partition& nu, unsigned n)
{
    if (mu.length() + nu.length() > n)
        return 0;
    std::vector<long> w(n, 0);
    for (unsigned i = 0; i < nu.length(); ++i)
        w[i] += nu[i];
    for (unsigned i = 0; i < mu.length(); ++i)
        w[n - 1 - i] -= mu[i];
    Rational r = 1;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            r *= Rational(w[i] - w[j] + static_cast<long>(j - i), static_cast<long>(j - i));
    return boost::multiprecision::numerator(r);
}

/// V^(x)n (x) (V^*)^(x)m for V = C^N, decomposed into rational irreducibles (mu, nu):
/// mu from the dual factors, nu from the natural ones.
inline PairDecomposition stableMixedTensor(unsigned m, unsigned n, unsigned dim)
{
    if (m + n > kMixedDegreeLimit)
        throw GuardExceeded("stableMixedTensor: m + n <= " + std::to_string(kMixedDegreeLimit) + " required");
    if (dim < 2 * (m + n) || dim == 0)
        throw DomainError("stableMixedTensor: N = " + std::to_string(dim) + " is below the stable range 2(m+n) = " +
                          std::to_string(2 * (m + n)));
    MonomialPoly p = MonomialPoly::constant(dim, 1);
    const MonomialPoly natural = MonomialPoly::powerSum(dim, 1);
    const MonomialPoly dual = MonomialPoly::powerSum(dim, -1);
    for (unsigned i = 0; i < n; ++i)
        p = p * natural;
    for (unsigned i = 0; i < m; ++i)
        p = p * dual;
    PairDecomposition out;
    while (!p.isZero()) {
        const auto e = detail::leadingExponent(p);
        const BigInt c = p.coefficient(e);
        std::vector<unsigned> nuParts, muParts;
        for (int v : e)
            if (v > 0)
                nuParts.push_back(static_cast<unsigned>(v));
        for (auto it = e.rbegin(); it != e.rend(); ++it)
            if (*it < 0)
                muParts.push_back(static_cast<unsigned>(-*it));
        const Partition mu(std::move(muParts)), nu(std::move(nuParts));
        p -= rationalCharacter(mu, nu, dim) * c;
        out.add({mu, nu}, c);
    }
    return out;
}

/// Composition factors of J_q rebuilt independently of the tensoring rules:
/// V^* = V_* + W_*, V_*^* = V + W in the Grothendieck group, tensor powers of
/// W_*, W split by characters, and the V_*/V part by stableMixedTensor.
inline Decomposition reconstructJ(const QuadIndex& q)
{
    const unsigned dim = std::max(1u, 2 * (q.m + q.n));
    std::map<unsigned, SymFunc> powerMemo;
    auto powerOfNatural = [&](unsigned k) -> const SymFunc& {
        auto it = powerMemo.find(k);
        if (it == powerMemo.end()) {
            const unsigned vars = std::max(1u, k);
            MonomialPoly p = MonomialPoly::constant(vars, 1);
            for (unsigned i = 0; i < k; ++i)
                p = p * MonomialPoly::powerSum(vars, 1);
            it = powerMemo.emplace(k, decomposeIntoSchur(p)).first;
        }
        return it->second;
    };
    Decomposition out;
    for (unsigned a = 0; a <= q.m; ++a)
        for (unsigned b = 0; b <= q.n; ++b) {
            const BigInt weight = binomial(q.m, a) * binomial(q.n, b);
            const SymFunc& left = powerOfNatural(q.l + q.m - a);
            const SymFunc& right = powerOfNatural(q.p + q.n - b);
            const PairDecomposition middle = stableMixedTensor(a, b, std::max(dim, 2 * (a + b)));
            for (const auto& [lam, cl] : left)
                for (const auto& [mn, cm] : middle)
                    for (const auto& [pi, cr] : right)
                        out.add(SimpleIndex{lam, mn.first, mn.second, pi}, weight * cl * cm * cr);
        }
    return out;
}

/// Total dimension of a decomposition with dim W_* = d, dim V = N, dim W = c.
inline BigInt stableDimension(const Decomposition& d, unsigned dimWLowerStar, unsigned dimV, unsigned dimW)
{
    BigInt total = 0;
    for (const auto& [s, mult] : d)
        total += mult * glDimension(s.lam, dimWLowerStar) * rationalDimension(s.mu, s.nu, dimV) *
                 glDimension(s.pi, dimW);
    return total;
}

/// d^l (N+d)^m (N+c)^n c^p: the dimension of J_q under the same substitution.
inline BigInt productDimension(const QuadIndex& q, unsigned dimWLowerStar, unsigned dimV, unsigned dimW)
{
    return boost::multiprecision::pow(BigInt(dimWLowerStar), q.l) *
           boost::multiprecision::pow(BigInt(dimV + dimWLowerStar), q.m) *
           boost::multiprecision::pow(BigInt(dimV + dimW), q.n) * boost::multiprecision::pow(BigInt(dimW), q.p);
}

} // namespace mackey::oracle
