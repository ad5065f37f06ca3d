// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
#include <mackey/verify.hpp>

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>

int main()
{
    unsigned failed = 0;
    unsigned id = 0;
    for (const auto& check : mackey::verify::acceptanceChecks()) {
        ++id;
        const auto start = std::chrono::steady_clock::now();
        mackey::verify::CheckResult r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r = {id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %2d  %-40s %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str(), secs);
        if (!r.passed)
            ++failed;
    }
    std::printf("%u/%u criteria passed\n", id - failed, id);
    return failed == 0 ? 0 : 1;
}
