#pragma once

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>

namespace testing {

inline int failures = 0;
inline int checks = 0;

#define CHECK(cond, msg)                                                          \
    do {                                                                          \
        ++testing::checks;                                                        \
        if (!(cond)) {                                                            \
            ++testing::failures;                                                  \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (msg) \
                      << "\n";                                                    \
        }                                                                         \
    } while (0)

#define CHECK_THROWS(expr, extype, msg)                              \
    do {                                                             \
        ++testing::checks;                                           \
        bool thrown_ = false;                                        \
        try {                                                        \
            (void)(expr);                                            \
        } catch (const extype&) {                                    \
            thrown_ = true;                                          \
        } catch (...) {                                              \
        }                                                            \
        if (!thrown_) {                                              \
            ++testing::failures;                                     \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__    \
                      << " expected " #extype ": " << (msg) << "\n"; \
        }                                                            \
    } while (0)

inline void check_close(const char* name, double got, double want, double tol) {
    ++checks;
    if (!(std::abs(got - want) <= tol)) {
        ++failures;
        std::cerr << "[FAIL] " << name << ": got " << got << " want " << want << " (tol " << tol
                  << ", diff " << std::abs(got - want) << ")\n";
    }
}

inline void check_rel(const char* name, double got, double want, double rel_tol) {
    ++checks;
    const double denom = std::max(std::abs(want), 1e-300);
    if (!(std::abs(got - want) / denom <= rel_tol)) {
        ++failures;
        std::cerr << "[FAIL] " << name << ": got " << got << " want " << want << " (rel tol "
                  << rel_tol << ", rel " << std::abs(got - want) / denom << ")\n";
    }
}

inline int finish(const char* suite) {
    if (failures == 0) {
        std::cout << "[PASS] " << suite << " (" << checks << " checks)\n";
        return 0;
    }
    std::cerr << "[FAIL] " << suite << ": " << failures << "/" << checks << " checks failed\n";
    return 1;
}

} // namespace testing
