#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "mcboltz/chebyshev.hpp"
#include "mcboltz/mapping.hpp"
#include "test_support.hpp"

using namespace mcboltz;
using doctest::Approx;

TEST_CASE("forward examples") {
    CHECK(Mapping(MappingKind::Algebraic, 1.0).forward(0.6) == Approx(0.75).epsilon(1e-15));
    CHECK(Mapping(MappingKind::Logarithmic, 2.0).forward(std::tanh(1.0)) == Approx(2.0).epsilon(1e-14));
    for (auto kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        const Mapping m(kind, 3.0);
        CHECK(m.forward(0.0) == 0.0);
        CHECK(m.forward(1.0) == INFINITY);
        CHECK(m.forward(-1.0) == -INFINITY);
        CHECK_THROWS_AS((void)m.forward(1.0 + 1e-9), std::domain_error);
        CHECK_THROWS_AS((void)m.mu(-1.5), std::domain_error);
    }
}

TEST_CASE("inverse examples") {
    CHECK(Mapping(MappingKind::Algebraic, 1.0).inverse(1.0) == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(Mapping(MappingKind::Logarithmic, 1.0).inverse(0.0) == 0.0);

    // approaches +-1 monotonically; strictly below 1 while the gap is representable
    const Mapping m(MappingKind::Algebraic, 2.0);
    double prev = 0.0;
    for (double v = 1.0; v <= 1e9; v *= 10.0) {
        const double xi = m.inverse(v);
        if (v <= 1e7) {
            CHECK(xi > prev);
            CHECK(xi < 1.0);
        }
        CHECK(xi <= 1.0);
        CHECK(m.inverse(-v) == -xi);
        prev = xi;
    }
    CHECK(1.0 - m.inverse(1e9) < 1e-16 * 10);
}

TEST_CASE("mu examples") {
    CHECK(Mapping(MappingKind::Algebraic, 1.0).mu(0.0) == Approx(1.0));
    CHECK(Mapping(MappingKind::Logarithmic, 4.0).mu(0.0) == Approx(0.5));
    for (auto kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        const Mapping m(kind, 2.5);
        CHECK(m.mu(1.0) == 0.0);
        CHECK(m.mu(-1.0) == 0.0);
        CHECK(m.mu(0.3) == m.mu(-0.3));
        // within 1e-14 of an endpoint counts as the endpoint
        CHECK(m.mu(1.0 - 1e-15) == 0.0);
    }
}

TEST_CASE("scale must be positive") {
    CHECK_THROWS_AS(Mapping(MappingKind::Algebraic, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Mapping(MappingKind::Logarithmic, -1.0), std::invalid_argument);
}

TEST_CASE("mapping kind names") {
    CHECK(parse_mapping_kind("log") == MappingKind::Logarithmic);
    CHECK(parse_mapping_kind("algebraic") == MappingKind::Algebraic);
    CHECK(parse_mapping_kind(to_string(MappingKind::Algebraic)) == MappingKind::Algebraic);
    CHECK_THROWS((void)parse_mapping_kind("cubic"));
}

TEST_CASE("adaptive scale") {
    CHECK(adaptive_scale(MappingKind::Algebraic, 1.0, 5) == Approx(1.0).epsilon(1e-14));
    // 40-digit value of 2 / ln((1 + r) / (1 - r)), r = sqrt(2)/2
    CHECK(adaptive_scale(MappingKind::Logarithmic, 1.0, 5) == Approx(1.134592657106510984).epsilon(1e-14));

    const double S = adaptive_scale(MappingKind::Algebraic, 8.83, 34);
    const double xi_star = std::cos(M_PI / 33.0);
    CHECK(std::abs(Mapping(MappingKind::Algebraic, S).forward(xi_star) - 8.83) <= 1e-12);

    // the defining equation on the ascending grid: node M-2 maps to L
    for (auto kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        for (int M : {4, 10, 34, 66}) {
            const CglRule rule = cgl_rule(M);
            const Mapping m(kind, adaptive_scale(kind, 6.62, M));
            CHECK(m.forward(rule.nodes[M - 2]) == Approx(6.62).epsilon(1e-12));
        }
    }
    CHECK_THROWS((void)adaptive_scale(MappingKind::Algebraic, 1.0, 3));
    CHECK_THROWS((void)adaptive_scale(MappingKind::Logarithmic, 0.0, 8));
}

TEST_CASE("round trip forward of inverse") {
    testing::Gen gen(11);
    const double ulp = std::ldexp(1.0, -52);
    for (auto kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        for (double S : {0.5, 1.0, 4.0}) {
            const Mapping m(kind, S);
            double worst = 0.0, worst_conditioned = 0.0;
            int used = 0;
            const double vmax = std::min(50.0, m.forward(1.0 - 1e-8));
            for (int i = 0; i < 10000; ++i) {
                const double v = gen.uniform(-vmax, vmax);
                const double xi = m.inverse(v);
                REQUIRE(std::abs(xi) <= 1.0);
                if (std::abs(xi) > 1.0 - 1e-8) continue;
                ++used;
                const double err = std::abs(m.forward(xi) - v);
                worst = std::max(worst, err / std::max(1.0, std::abs(v)));
                // one rounding of xi moves v by jacobian * ulp(xi)
                const double bound = 4.0 * (m.jacobian(xi) * std::abs(xi) + std::abs(v)) * ulp;
                worst_conditioned = std::max(worst_conditioned, err / bound);
                CHECK(std::abs(m.inverse(m.forward(xi)) - xi) <= 1e-12 * std::max(1.0, std::abs(xi)));
            }
            CHECK(used > 9000);
            CHECK(worst_conditioned <= 1.0);
            // stated tolerance; near |xi| = 1 - 1e-8 a single rounding of xi exceeds it
            INFO(to_string(kind) << " S=" << S);
            CHECK(worst <= 1e-12);
        }
    }
}

TEST_CASE("forward is odd and strictly increasing") {
    testing::Gen gen(12);
    for (auto kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        const Mapping m(kind, 1.9);
        double prev = -INFINITY;
        for (int j = -999; j <= 999; ++j) {
            const double xi = j / 1000.0;
            const double v = m.forward(xi);
            CHECK(v > prev);
            CHECK(m.forward(-xi) == -v);
            prev = v;
        }
    }
}

TEST_CASE("jacobian matches a centred difference of forward") {
    for (auto kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        for (double S : {0.5, 2.0}) {
            const Mapping m(kind, S);
            const CglRule rule = cgl_rule(33);
            for (int j = 1; j < 32; ++j) {
                const double xi = rule.nodes[j];
                const double h = 1e-6 * (1.0 - std::abs(xi));
                const double fd = (m.forward(xi + h) - m.forward(xi - h)) / (2 * h);
                const double omega = 1.0 / std::sqrt(1.0 - xi * xi);
                CHECK(fd == Approx(m.jacobian(xi)).epsilon(1e-6));
                CHECK(m.jacobian(xi) == Approx(omega / m.mu_sq(xi)).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("direct inverse-weight and angle evaluations agree with the reference coordinate") {
    testing::Gen gen(13);
    for (auto kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        const Mapping m(kind, 2.2);
        for (int i = 0; i < 1000; ++i) {
            const double v = gen.uniform(-15.0, 15.0);
            const double xi = m.inverse(v);
            CHECK(m.inv_mu_sq_at(v) == Approx(1.0 / m.mu_sq(xi)).epsilon(1e-10));
            CHECK(m.angle_at(v) == Approx(std::acos(xi)).epsilon(1e-12));
        }
    }
}
