#include "mcac/potential.hpp"

#include "test_support.hpp"

#include <cmath>

using namespace mcac;

int main() {
    using testing::check_close;

    // f(u) = u(1-u^2)
    check_close("f(0)", potential::f(0.0), 0.0, 0.0);
    check_close("f(1)", potential::f(1.0), 0.0, 0.0);
    check_close("f(-1)", potential::f(-1.0), 0.0, 0.0);
    check_close("f(0.5)", potential::f(0.5), 0.375, 1e-16);

    // W(u) = (1-u^2)^2/4
    check_close("W(1)", potential::W(1.0), 0.0, 0.0);
    check_close("W(0)", potential::W(0.0), 0.25, 0.0);
    check_close("W(0.5)", potential::W(0.5), 0.140625, 1e-16);

    // sqrt(4W) = |1-u^2|, defined through overshoot
    check_close("sqrt4W(0)", potential::sqrt4W(0.0), 1.0, 0.0);
    check_close("sqrt4W(1)", potential::sqrt4W(1.0), 0.0, 0.0);
    check_close("sqrt4W(-1)", potential::sqrt4W(-1.0), 0.0, 0.0);
    check_close("sqrt4W(2)", potential::sqrt4W(2.0), 3.0, 0.0);

    // bistable signs of f'
    CHECK(potential::fprime(0.0) > 0.0, "f'(0) > 0");
    CHECK(potential::fprime(1.0) < 0.0, "f'(1) < 0");
    CHECK(potential::fprime(-1.0) < 0.0, "f'(-1) < 0");
    check_close("f'(0)", potential::fprime(0.0), 1.0, 0.0);
    check_close("f'(1)", potential::fprime(1.0), -2.0, 0.0);
    check_close("f'(0.5)", potential::fprime(0.5), 0.25, 1e-16);

    // f odd; W' = -f by finite differences; sqrt4W^2 = 4W
    for (double u = -1.5; u <= 1.5; u += 0.05) {
        CHECK(potential::f(-u) == -potential::f(u), "f odd");
        const double h = 1e-6;
        const double wp = (potential::W(u + h) - potential::W(u - h)) / (2.0 * h);
        const double scale = std::max(1.0, std::abs(potential::f(u)));
        CHECK(std::abs(wp + potential::f(u)) <= 1e-8 * scale, "W' = -f");
        const double s = potential::sqrt4W(u);
        CHECK(std::abs(s * s - 4.0 * potential::W(u)) <= 1e-14 * std::max(1.0, s * s),
              "sqrt4W^2 = 4W");
    }

    return testing::finish("test_potential");
}
