#pragma once

#include "errors.hpp"

#include <atomic>
#include <string>

namespace mackey {

inline constexpr unsigned kDefaultDegreeCap = 12;
inline constexpr unsigned kDefaultGroupGuard = 8;

/// Process-wide limits. Set once by the front end, read everywhere.
struct Limits
{
    std::atomic<unsigned> degreeCap{kDefaultDegreeCap};
    std::atomic<unsigned> groupGuard{kDefaultGroupGuard};
};

inline Limits& limits()
{
    static Limits instance;
    return instance;
}

inline void requireDegree(unsigned degree, const char* what)
{
    const unsigned cap = limits().degreeCap.load();
    if (degree > cap)
        throw CapExceeded(what, degree, cap);
}

/// Restores the previous degree cap on scope exit.
class ScopedDegreeCap
{
public:
    explicit ScopedDegreeCap(unsigned cap) : saved_(limits().degreeCap.exchange(cap)) {}
    ~ScopedDegreeCap() { limits().degreeCap.store(saved_); }
    ScopedDegreeCap(const ScopedDegreeCap&) = delete;
    ScopedDegreeCap& operator=(const ScopedDegreeCap&) = delete;

private:
    unsigned saved_;
};

} // namespace mackey
