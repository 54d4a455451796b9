#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "mcboltz/kernel.hpp"
#include "test_support.hpp"

using namespace mcboltz;
using doctest::Approx;

TEST_CASE("Maxwell constants") {
    const double v[3] = {0.3, -1.0, 2.0}, w[3] = {4.0, 0.5, -0.1}, s[3] = {0.0, 0.0, 1.0};
    CHECK(Kernel::maxwell(2).eval(std::span(v, 2), std::span(w, 2), std::span(s + 1, 2)) ==
          Approx(1.0 / (2 * std::numbers::pi)));
    CHECK(Kernel::maxwell(3).eval(v, w, s) == Approx(1.0 / (4 * std::numbers::pi)));
    CHECK(Kernel::maxwell(2).is_constant());
    CHECK_THROWS((void)Kernel::maxwell(4));
}

TEST_CASE("hard-sphere style power law") {
    const Kernel k(1.0, 1.0);
    const double v[2] = {1.0, 1.0}, w[2] = {1.0, -1.0}, s[2] = {1.0, 0.0};
    CHECK(k.eval(v, w, s) == Approx(2.0));
    CHECK(k.eval(v, v, s) == 0.0);
    CHECK(Kernel(2.0, 0.5).eval(v, v, s) == 0.0);
    CHECK(Kernel(2.0, 0.5).of_speed(4.0) == Approx(4.0));
    CHECK_FALSE(k.is_constant());
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Kernel(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Kernel(1.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(Kernel(1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(Kernel(NAN, 0.0), std::invalid_argument);
}

TEST_CASE("descriptor grammar") {
    CHECK(Kernel::parse("maxwell2d") == Kernel::maxwell(2));
    CHECK(Kernel::parse("maxwell3d") == Kernel::maxwell(3));
    const Kernel k = Kernel::parse("vhs:1.5:0.25");
    CHECK(k.constant() == 1.5);
    CHECK(k.exponent() == 0.25);
    CHECK(Kernel::parse(k.describe()) == k);
    CHECK(Kernel::parse(Kernel::maxwell(2).describe()) == Kernel::maxwell(2));
    for (const char* bad : {"", "maxwell", "vhs", "vhs:1", "vhs:1:2", "vhs:-1:0", "vhs:a:b", "vhs:1:0.5:3"}) {
        CHECK_THROWS_AS((void)Kernel::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("exchange symmetry") {
    testing::Gen gen(41);
    for (const Kernel& k : {Kernel::maxwell(3), Kernel(1.0, 1.0), Kernel(0.7, 0.4)}) {
        for (int i = 0; i < 200; ++i) {
            double v[3], w[3], s[3], ms[3];
            for (int l = 0; l < 3; ++l) {
                v[l] = gen.uniform(-5, 5);
                w[l] = gen.uniform(-5, 5);
                s[l] = gen.normal();
            }
            const double n = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
            for (int l = 0; l < 3; ++l) {
                s[l] /= n;
                ms[l] = -s[l];
            }
            CHECK(k.eval(v, w, s) == k.eval(w, v, ms));
            CHECK(k.eval(v, w, s) >= 0.0);
        }
    }
}
