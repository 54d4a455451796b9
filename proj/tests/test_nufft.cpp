#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "mcboltz/nufft.hpp"
#include "test_support.hpp"

using namespace mcboltz;
using cplx = std::complex<double>;

namespace {

const double pi = std::numbers::pi;

struct Instance {
    std::vector<double> points;
    std::vector<cplx> strengths;
    double total = 0.0;  // sum |q|
};

Instance random_instance(testing::Gen& gen, int dim, int count) {
    Instance in;
    in.points = gen.uniform_vec(static_cast<std::size_t>(count) * dim, 0.0, pi);
    for (int j = 0; j < count; ++j) {
        in.strengths.emplace_back(gen.uniform(-1, 1), gen.uniform(-1, 1));
        in.total += std::abs(in.strengths.back());
    }
    return in;
}

double max_dev(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

std::vector<cplx> run(NufftPlan& plan, const Instance& in) {
    std::vector<cplx> out(plan.full_size());
    plan.execute(in.points, in.strengths, out);
    return out;
}

} // namespace

TEST_CASE("single point at the origin") {
    for (int dim : {1, 2, 3}) {
        NufftPlan plan(dim, 5, 1e-14);
        const std::vector<double> z(dim, 0.0);
        const std::vector<cplx> q = {1.0};
        std::vector<cplx> out(plan.full_size());
        plan.execute(z, q, out);
        for (const cplx& c : out) CHECK(std::abs(c - 1.0) <= 1e-12);
    }
}

TEST_CASE("two points at the ends of the interval") {
    NufftPlan plan(1, 6, 1e-13);
    const std::vector<double> z = {0.0, pi};
    const std::vector<cplx> q = {1.0, 1.0};
    std::vector<cplx> out(plan.full_size());
    plan.execute(z, q, out);
    for (int K = -6; K <= 6; ++K) {
        const double want = (K % 2 == 0) ? 2.0 : 0.0;
        CHECK(std::abs(out[K + 6] - want) <= 1e-12);
    }
}

TEST_CASE("direct sum basics") {
    const std::vector<double> none;
    const std::vector<cplx> nq;
    for (const cplx& c : nufft_direct_sum(2, 4, none, nq)) CHECK(c == cplx(0.0));

    testing::Gen gen(51);
    const Instance in = random_instance(gen, 2, 40);
    const auto out = nufft_direct_sum(2, 3, in.points, in.strengths);
    cplx s = 0.0;
    for (const cplx& q : in.strengths) s += q;
    CHECK(out[3 * 7 + 3] == s);

    NufftPlan plan(2, 3, 1e-10);
    std::vector<cplx> empty(plan.full_size(), 7.0);
    plan.execute(none, nq, empty);
    for (const cplx& c : empty) CHECK(c == cplx(0.0));
}

TEST_CASE("precision contract against the direct sum") {
    testing::Gen gen(52);
    NufftPlan plan(2, 32, 1e-14);
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        const Instance in = random_instance(gen, 2, 500);
        const double dev = max_dev(run(plan, in), nufft_direct_sum(2, 32, in.points, in.strengths));
        worst = std::max(worst, dev / in.total);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("3D precision against the direct sum") {
    testing::Gen gen(53);
    for (double eps : {1e-8, 1e-14}) {
        NufftPlan plan(3, 6, eps);
        const Instance in = random_instance(gen, 3, 300);
        const double dev = max_dev(run(plan, in), nufft_direct_sum(3, 6, in.points, in.strengths));
        CHECK(dev <= 10 * eps * in.total);
    }
}

TEST_CASE("deviation decreases with the requested precision") {
    testing::Gen gen(54);
    for (int rep = 0; rep < 5; ++rep) {
        const Instance in = random_instance(gen, 2, 500);
        const auto exact = nufft_direct_sum(2, 32, in.points, in.strengths);
        double prev = INFINITY;
        for (double eps : {1e-6, 1e-10, 1e-14}) {
            NufftPlan plan(2, 32, eps);
            const double dev = max_dev(run(plan, in), exact);
            CHECK(dev < prev);
            CHECK(dev <= 10 * eps * in.total);
            prev = dev;
        }
    }
}

TEST_CASE("linearity in the strengths") {
    testing::Gen gen(55);
    NufftPlan plan(2, 16, 1e-14);
    Instance a = random_instance(gen, 2, 200);
    Instance b = a;
    for (auto& q : b.strengths) q = cplx(gen.uniform(-1, 1), gen.uniform(-1, 1));
    Instance sum = a;
    for (std::size_t j = 0; j < sum.strengths.size(); ++j) sum.strengths[j] += b.strengths[j];
    const auto fa = run(plan, a), fb = run(plan, b), fs = run(plan, sum);
    double scale = 0.0, dev = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        scale = std::max(scale, std::abs(fs[i]));
        dev = std::max(dev, std::abs(fs[i] - fa[i] - fb[i]));
    }
    CHECK(dev <= 1e-13 * scale);
}

TEST_CASE("conjugate symmetry for real strengths and the half spectrum") {
    testing::Gen gen(56);
    for (int dim : {2, 3}) {
        const int N = dim == 2 ? 12 : 5;
        NufftPlan plan(dim, N, 1e-14);
        Instance in = random_instance(gen, dim, 150);
        std::vector<double> real(in.strengths.size());
        for (std::size_t j = 0; j < real.size(); ++j) {
            real[j] = in.strengths[j].real();
            in.strengths[j] = real[j];
        }
        const auto full = run(plan, in);
        const std::size_t e = 2 * N + 1;
        double scale = 0.0;
        for (const cplx& c : full) scale = std::max(scale, std::abs(c));
        for (std::size_t f = 0; f < full.size(); ++f) {
            CHECK(std::abs(full[f] - std::conj(full[full.size() - 1 - f])) <= 1e-13 * scale);
        }
        std::vector<cplx> half(plan.half_size());
        plan.execute_real(in.points, real, half);
        const std::size_t rows = plan.half_size() / (N + 1);
        for (std::size_t r = 0; r < rows; ++r)
            for (int k = 0; k <= N; ++k) {
                CHECK(std::abs(half[r * (N + 1) + k] - full[r * e + N + k]) <= 1e-13 * scale);
            }
    }
}

TEST_CASE("invalid input") {
    NufftPlan plan(2, 4, 1e-10);
    std::vector<cplx> out(plan.full_size());
    const std::vector<cplx> q = {1.0};
    CHECK_THROWS_AS(plan.execute(std::vector<double>{0.1, 3.5}, q, out), std::invalid_argument);
    CHECK_THROWS_AS(plan.execute(std::vector<double>{0.1, NAN}, q, out), std::invalid_argument);
    CHECK_THROWS_AS(plan.execute(std::vector<double>{0.1, 0.2}, std::vector<cplx>{cplx(NAN, 0)}, out),
                    std::invalid_argument);
    CHECK_THROWS_AS(plan.execute(std::vector<double>{0.1}, q, out), std::invalid_argument);
    CHECK_THROWS_AS(NufftPlan(4, 4, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(NufftPlan(2, 4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(NufftPlan(2, -1, 1e-6), std::invalid_argument);
}

TEST_CASE("plan geometry") {
    NufftPlan plan(2, 32, 1e-14);
    CHECK(plan.width() == 15);
    CHECK(plan.beta() == doctest::Approx(2.30 * 15));
    CHECK(plan.fine_size() >= 2 * 65);
    CHECK(plan.fine_size() % 2 == 0);
    CHECK(plan.full_size() == 65u * 65u);
    CHECK(plan.half_size() == 65u * 33u);
    CHECK(NufftPlan(2, 8, 1e-6).width() == 7);

    // kernel: 1 at the centre, 0 outside, the fast rows track the closed form
    CHECK(plan.kernel(0.0) == 1.0);
    CHECK(plan.kernel(1.5) == 0.0);
    std::vector<double> row(plan.width());
    const int w = plan.width();
    for (double s : {0.0, 0.25, 0.5, 0.999}) {
        plan.kernel_row(s, row);
        for (int i = 0; i < w; ++i) {
            const double t = (2.0 / w) * (i + s - w / 2.0);
            CHECK(std::abs(row[i] - plan.kernel(t)) <= 1e-13);
        }
    }
}
