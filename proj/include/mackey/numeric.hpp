#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mackey {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline BigInt binomial(const BigInt& n, unsigned k)
{
    if (n < k)
        return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline std::string toString(const BigInt& v) { return v.str(); }

inline std::string toString(const Rational& v)
{
    const auto num = boost::multiprecision::numerator(v);
    const auto den = boost::multiprecision::denominator(v);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

/// Narrowing conversion that refuses to truncate.
inline std::int64_t toInt64(const BigInt& v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return static_cast<std::int64_t>(v);
}

} // namespace mackey
