#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "mcboltz/chebyshev.hpp"
#include "test_support.hpp"

using namespace mcboltz;
using doctest::Approx;

namespace {

// naive O(M^2) interpolation coefficients along one axis
std::vector<double> naive_forward_1d(const std::vector<double>& vals, int order) {
    const int M = static_cast<int>(vals.size());
    const int n = M - 1;
    std::vector<double> c(order + 1, 0.0);
    for (int k = 0; k <= order; ++k) {
        double s = 0.0;
        for (int j = 0; j < M; ++j) {
            const double x = -std::cos(j * std::numbers::pi / n);
            const double w = (j == 0 || j == n) ? 0.5 : 1.0;
            s += w * vals[j] * std::cos(k * std::acos(x));
        }
        c[k] = s * ((k == 0 || k == n) ? 1.0 : 2.0) / n;
    }
    return c;
}

double recurrence_sum(const std::vector<double>& c, double x) {
    double s = 0.0, prev = 0.0, cur = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        s += c[k] * cur;
        const double next = k == 0 ? x : 2 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return s;
}

} // namespace

TEST_CASE("cheb_eval examples") {
    CHECK(cheb_eval(3, 0.5) == Approx(-1.0).epsilon(1e-15));
    CHECK(cheb_eval(0, 0.77) == 1.0);
    CHECK(cheb_eval(7, std::cos(std::numbers::pi / 7)) == Approx(-1.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)cheb_eval(2, 1.0001), std::domain_error);
    for (int k = 0; k < 30; ++k) {
        for (double x : {-1.0, -0.3, 0.0, 0.71, 1.0}) CHECK(cheb_eval(k, x) == Approx(std::cos(k * std::acos(x))).epsilon(1e-12));
    }
}

TEST_CASE("cheb_values fills the recurrence") {
    std::vector<double> t(12);
    cheb_values(0.37, t);
    for (int k = 0; k < 12; ++k) CHECK(t[k] == Approx(cheb_eval(k, 0.37)).epsilon(1e-14));
}

TEST_CASE("cgl rule") {
    const CglRule r3 = cgl_rule(3);
    REQUIRE(r3.nodes.size() == 3);
    CHECK(r3.nodes[0] == -1.0);
    CHECK(std::abs(r3.nodes[1]) <= 1e-16);
    CHECK(r3.nodes[2] == 1.0);
    CHECK(r3.weights[0] == Approx(std::numbers::pi / 4));
    CHECK(r3.weights[1] == Approx(std::numbers::pi / 2));
    CHECK(r3.weights[2] == Approx(std::numbers::pi / 4));

    const CglRule r2 = cgl_rule(2);
    CHECK(r2.nodes == std::vector<double>{-1.0, 1.0});

    for (int M : {9, 10, 33, 64}) {
        const CglRule r = cgl_rule(M);
        double s = 0.0;
        for (double w : r.weights) s += w;
        CHECK(std::abs(s - std::numbers::pi) <= 1e-14);
        for (int j = 0; j + 1 < M; ++j) CHECK(r.nodes[j] < r.nodes[j + 1]);
        for (int j = 0; j < M; ++j) CHECK(r.nodes[j] == -r.nodes[M - 1 - j]);
    }
    CHECK_THROWS_AS((void)cgl_rule(1), std::invalid_argument);
}

TEST_CASE("forward transform examples") {
    {
        const CglRule r = cgl_rule(5);
        std::vector<double> v;
        for (double x : r.nodes) v.push_back(x * x);
        const CubeArray c = cheb_forward(v, 1, 5, 4);
        const double want[5] = {0.5, 0.0, 0.5, 0.0, 0.0};
        for (int k = 0; k < 5; ++k) CHECK(std::abs(c[k] - want[k]) <= 1e-15);
    }
    {
        const CglRule r = cgl_rule(7);
        std::vector<double> v;
        for (double x : r.nodes) v.push_back(cheb_eval(3, x));
        const CubeArray c = cheb_forward(v, 1, 7, 4);
        for (int k = 0; k < 5; ++k) CHECK(std::abs(c[k] - (k == 3 ? 1.0 : 0.0)) <= 1e-13);
    }
    {
        const CglRule r = cgl_rule(6);
        std::vector<double> v;
        for (double x : r.nodes)
            for (double y : r.nodes) v.push_back(x * y);
        const CubeArray c = cheb_forward(v, 2, 6, 4);
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(c[i] - (i == 1 * 5 + 1 ? 1.0 : 0.0)) <= 1e-14);
    }
    CHECK_THROWS_AS((void)cheb_forward(std::vector<double>(4, 0.0), 1, 4, 4), std::invalid_argument);
    CHECK_THROWS((void)cheb_forward(std::vector<double>(5, 0.0), 2, 5, 3));
}

TEST_CASE("inverse transform examples") {
    CubeArray c(1, 2);
    c[1] = 1.0;
    const double x[1] = {0.3};
    CHECK(cheb_inverse_at(c, x) == Approx(0.3));

    const CubeArray zero(2, 5);
    const CubeArray vals = cheb_inverse(zero, 9);
    for (double v : vals.values()) CHECK(v == 0.0);
}

TEST_CASE("round trip on random polynomial data") {
    testing::Gen gen(21);
    for (int dim : {1, 2, 3}) {
        for (int N : {0, 3, 8}) {
            for (int M : {N + 1, N + 2, N + 5}) {
                if (M < 2) continue;
                CubeArray c(dim, N + 1);
                for (double& x : c.storage()) x = gen.uniform(-1.0, 1.0);
                const CubeArray vals = cheb_inverse(c, M);
                // values against a direct recurrence evaluation
                const CglRule rule = cgl_rule(M);
                std::vector<int> idx(dim);
                double worst = 0.0;
                for (std::size_t f = 0; f < vals.size(); ++f) {
                    vals.unflat(f, idx);
                    std::vector<double> xi(dim);
                    for (int l = 0; l < dim; ++l) xi[l] = rule.nodes[idx[l]];
                    worst = std::max(worst, std::abs(vals[f] - cheb_inverse_at(c, xi)));
                }
                CHECK(worst <= 1e-12);
                const CubeArray back = cheb_forward(vals.values(), dim, M, N);
                CHECK(testing::max_abs_diff(back, c) <= 1e-12);
            }
        }
    }
}

TEST_CASE("inverse at arbitrary points matches the recurrence") {
    testing::Gen gen(22);
    std::vector<double> c = gen.uniform_vec(17, -1.0, 1.0);
    CubeArray cube(1, 17);
    std::copy(c.begin(), c.end(), cube.storage().begin());
    for (int i = 0; i < 100; ++i) {
        const double x[1] = {gen.uniform(-1.0, 1.0)};
        CHECK(cheb_inverse_at(cube, x) == Approx(recurrence_sum(c, x[0])).epsilon(1e-12));
    }
    const std::vector<double> axis = {-1.0, -0.2, 0.5, 1.0};
    const CubeArray t = cheb_inverse_tensor(cube, axis);
    for (int i = 0; i < 4; ++i) CHECK(t[i] == Approx(recurrence_sum(c, axis[i])).epsilon(1e-12));
}

TEST_CASE("discrete orthogonality") {
    for (int M : {2, 5, 16, 33}) {
        const CglRule r = cgl_rule(M);
        for (int N = 0; N <= M - 1; N += std::max(1, (M - 1) / 4)) {
            for (int j = 0; j <= N; ++j) {
                std::vector<double> v;
                for (double x : r.nodes) v.push_back(cheb_eval(j, x));
                const CubeArray c = cheb_forward(v, 1, M, N);
                for (int k = 0; k <= N; ++k) CHECK(std::abs(c[k] - (k == j ? 1.0 : 0.0)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("fast transforms match naive matrix transforms") {
    testing::Gen gen(23);
    for (int M : {2, 3, 7, 16, 33, 64}) {
        const int N = M - 1;
        // 1D
        std::vector<double> v = gen.uniform_vec(M, -1.0, 1.0);
        const CubeArray fast = cheb_forward(v, 1, M, N);
        const std::vector<double> slow = naive_forward_1d(v, N);
        for (int k = 0; k <= N; ++k) CHECK(std::abs(fast[k] - slow[k]) <= 1e-12);

        // 2D: naive transform along rows then columns
        std::vector<double> v2 = gen.uniform_vec(static_cast<std::size_t>(M) * M, -1.0, 1.0);
        const CubeArray fast2 = cheb_forward(v2, 2, M, N);
        std::vector<double> rows(static_cast<std::size_t>(M) * (N + 1));
        for (int a = 0; a < M; ++a) {
            const std::vector<double> line(v2.begin() + a * M, v2.begin() + (a + 1) * M);
            const auto c = naive_forward_1d(line, N);
            for (int k = 0; k <= N; ++k) rows[a * (N + 1) + k] = c[k];
        }
        double worst = 0.0;
        for (int k2 = 0; k2 <= N; ++k2) {
            std::vector<double> col(M);
            for (int a = 0; a < M; ++a) col[a] = rows[a * (N + 1) + k2];
            const auto c = naive_forward_1d(col, N);
            for (int k1 = 0; k1 <= N; ++k1) worst = std::max(worst, std::abs(fast2[k1 * (N + 1) + k2] - c[k1]));
        }
        CHECK(worst <= 1e-12);

        // weighted sums against the literal quadrature
        const CglRule r = cgl_rule(M);
        const CubeArray sums = cheb_weighted_sums(v, 1, M, N);
        for (int k = 0; k <= N; ++k) {
            double s = 0.0;
            for (int j = 0; j < M; ++j) s += r.weights[j] * v[j] * std::cos(k * std::acos(r.nodes[j]));
            CHECK(std::abs(sums[k] - s) <= 1e-12);
        }
    }
}

TEST_CASE("quadrature exactness") {
    for (int M : {2, 3, 8, 21, 40}) {
        const CglRule r = cgl_rule(M);
        for (int k = 0; k <= 2 * M - 3; ++k) {
            double s = 0.0;
            for (int j = 0; j < M; ++j) s += r.weights[j] * cheb_eval(k, r.nodes[j]);
            CHECK(std::abs(s - (k == 0 ? std::numbers::pi : 0.0)) <= 1e-12);
        }
    }
}

TEST_CASE("apply along axes") {
    // identity matrix leaves the array unchanged; a row selector picks a slice
    CubeArray a(2, 3);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<double>(i);
    const std::vector<double> eye = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(testing::max_abs_diff(apply_along_axes(a, eye, 3), a) == 0.0);
    const std::vector<double> first = {1, 0, 0};
    const CubeArray s = apply_along_axes(a, first, 1);
    CHECK(s.size() == 1);
    CHECK(s[0] == 0.0);
}
