#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <iterator>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mcboltz/collision_direct.hpp"
#include "mcboltz/collision_fast.hpp"
#include "test_support.hpp"

using namespace mcboltz;
namespace fs = std::filesystem;

namespace {

const double pi = std::numbers::pi;

DirectSetup setup2(int N, MappingKind kind, const Kernel& k, double S = 1.3) {
    return {2, N, N + 2, Mapping(kind, S), k, circle_rule(N)};
}

double tcos(int k, double x) { return std::cos(k * std::acos(std::clamp(x, -1.0, 1.0))); }
double cnorm(int k) { return k == 0 ? pi : pi / 2; }

// CGL node j of M, ascending
double node(int j, int M) { return -std::cos(pi * j / (M - 1)); }
double weight(int j, int M) { return (j == 0 || j == M - 1 ? 0.5 : 1.0) * pi / (M - 1); }

fs::path temp_file(const char* tag) {
    return fs::temp_directory_path() / (std::string("mcboltz_") + tag + "_" + std::to_string(::getpid()) + ".bin");
}

std::vector<char> slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::vector<char>& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

} // namespace

TEST_CASE("Maxwell loss tensor factors into an outer and an inner part") {
    const int N = 4, M = N + 2;
    for (MappingKind kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        const DirectSetup s = setup2(N, kind, Kernel::maxwell(2));
        const CollisionTensors t = CollisionTensors::precompute(s);
        const Mapping& m = s.mapping;

        // per-axis factors over interior nodes
        std::vector<double> a(static_cast<std::size_t>(N + 1) * (N + 1), 0.0), b(N + 1, 0.0);
        for (int i = 0; i <= N; ++i) {
            for (int j = 1; j < M - 1; ++j) {
                const double x = node(j, M), w = weight(j, M);
                b[i] += w * m.mu_sq(x) * tcos(i, x) / std::sqrt(cnorm(i));
                for (int k = 0; k <= N; ++k) a[i * (N + 1) + k] += w * tcos(i, x) * tcos(k, x) / std::sqrt(cnorm(i) * cnorm(k));
            }
        }
        const double rate = s.kernel.constant() * 2 * pi;
        const std::size_t n = t.modes();
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const std::size_t k1 = k / (N + 1), k2 = k % (N + 1), i1 = i / (N + 1), i2 = i % (N + 1);
                    const std::size_t j1 = j / (N + 1), j2 = j % (N + 1);
                    const double want = rate * a[i1 * (N + 1) + k1] * a[i2 * (N + 1) + k2] * b[j1] * b[j2];
                    worst = std::max(worst, std::abs(t.loss_tensor()[(k * n + i) * n + j] - want));
                }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("entries with odd total parity vanish on the symmetric grid") {
    for (const Kernel& kernel : {Kernel::maxwell(2), Kernel(1.0, 1.0)}) {
        const int N = 4;
        const CollisionTensors t = CollisionTensors::precompute(setup2(N, MappingKind::Logarithmic, kernel));
        const std::size_t n = t.modes();
        double worst = 0.0, largest = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const std::size_t e = (k * n + i) * n + j;
                    largest = std::max(largest, std::abs(t.gain_tensor()[e]));
                    const bool odd1 = (k / (N + 1) + i / (N + 1) + j / (N + 1)) % 2 == 1;
                    const bool odd2 = (k % (N + 1) + i % (N + 1) + j % (N + 1)) % 2 == 1;
                    if (odd1 || odd2) {
                        worst = std::max(worst, std::abs(t.gain_tensor()[e]));
                        worst = std::max(worst, std::abs(t.loss_tensor()[e]));
                    }
                }
        CHECK(largest > 1e-3);
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("tensors are finite for both mappings and kernels") {
    for (MappingKind kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        for (const Kernel& kernel : {Kernel::maxwell(2), Kernel(1.0, 1.0)}) {
            const CollisionTensors t = CollisionTensors::precompute(setup2(8, kind, kernel, 2.0));
            bool finite = true;
            for (double x : t.gain_tensor()) finite = finite && std::isfinite(x);
            for (double x : t.loss_tensor()) finite = finite && std::isfinite(x);
            CHECK(finite);
        }
    }
}

TEST_CASE("application is quadratic and splits into gain and loss") {
    const DirectSetup s = setup2(5, MappingKind::Algebraic, Kernel(1.0, 0.5));
    const CollisionTensors t = CollisionTensors::precompute(s);
    testing::Gen gen(61);
    const SpectralField f = gen.field(2, 5, s.mapping);

    const CubeArray zero = t.apply(SpectralField::zeros(2, 5, s.mapping));
    CHECK(testing::max_abs(zero) == 0.0);

    SpectralField twice = f;
    for (double& c : twice.coeffs.storage()) c *= 2.0;
    const CubeArray q = t.apply(f), q2 = t.apply(twice);
    for (std::size_t k = 0; k < q.size(); ++k) CHECK(q2[k] == 4.0 * q[k]);

    CubeArray split = t.apply_gain(f);
    split -= t.apply_loss(f);
    CHECK(testing::max_abs_diff(split, q) <= 1e-12 * (1.0 + testing::max_abs(q)));

    SpectralField wrong = gen.field(2, 4, s.mapping);
    CHECK_THROWS_AS((void)t.apply(wrong), std::invalid_argument);
    SpectralField other = f;
    other.mapping = Mapping(MappingKind::Algebraic, 1.4);
    CHECK_THROWS_AS((void)t.apply(other), std::invalid_argument);
}

TEST_CASE("the tensors conserve mass and energy entrywise under the algebraic mapping") {
    const int N = 6;
    for (const Kernel& kernel : {Kernel::maxwell(2), Kernel(1.0, 1.0)}) {
        const DirectSetup s = setup2(N, MappingKind::Algebraic, kernel, 2.0);
        const CollisionTensors t = CollisionTensors::precompute(s);
        const CubeArray mw = mass_weights(2, N, s.mapping), ew = energy_weights(2, N, s.mapping);
        const std::size_t n = t.modes();
        for (const CubeArray* w : {&mw, &ew}) {
            double worst = 0.0, scale = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    double net = 0.0, gain = 0.0;
                    for (std::size_t k = 0; k < n; ++k) {
                        const auto at = [&](std::span<const double> x, std::size_t a, std::size_t b) {
                            return x[(k * n + a) * n + b];
                        };
                        const double g = at(t.gain_tensor(), i, j) + at(t.gain_tensor(), j, i);
                        net += (*w)[k] * (g - at(t.loss_tensor(), i, j) - at(t.loss_tensor(), j, i));
                        gain += std::abs((*w)[k] * g);
                    }
                    worst = std::max(worst, std::abs(net));
                    scale = std::max(scale, gain);
                }
            CHECK(worst <= 1e-10 * scale);
        }
    }
}

TEST_CASE("packed operator agrees with the dense tensors") {
    testing::Gen gen(62);
    for (MappingKind kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        const DirectSetup s = setup2(6, kind, Kernel(1.0, 1.0), 1.8);
        const CollisionTensors dense = CollisionTensors::precompute(s);
        const PackedCollisionOperator packed = PackedCollisionOperator::precompute(s);
        for (int rep = 0; rep < 5; ++rep) {
            const SpectralField f = gen.field(2, 6, s.mapping);
            const CubeArray a = dense.apply(f), b = packed.apply(f);
            CHECK(testing::max_abs_diff(a, b) <= 1e-12 * testing::max_abs(a));
        }
    }
    CHECK(PackedCollisionOperator::memory_bytes(2, 24) < direct_memory_bytes(2, 24) / 3);
}

TEST_CASE("dense gain and loss match the fast evaluator in 3D") {
    const int N = 3, M = N + 2;
    const Mapping m(MappingKind::Logarithmic, 1.5);
    const DirectSetup s{3, N, M, m, Kernel::maxwell(3), lebedev_rule(14)};
    const CollisionTensors t = CollisionTensors::precompute(s);
    FastWorkspace fast(3, N, M, m, s.kernel, s.sphere);
    testing::Gen gen(63);
    const SpectralField f = gen.field(3, N, m);
    const CollisionParts p = fast.parts(f);
    const CubeArray g = t.apply_gain(f), l = t.apply_loss(f);
    CHECK(testing::max_abs_diff(g, p.gain) <= 1e-10 * testing::max_abs(g));
    CHECK(testing::max_abs_diff(l, p.loss) <= 1e-10 * testing::max_abs(l));
}

TEST_CASE("memory estimate and cap") {
    CHECK(direct_memory_bytes(2, 32) == doctest::Approx(2.0 * std::pow(33.0, 6) * 8));
    CHECK(direct_memory_bytes(2, 32) > static_cast<double>(default_memory_cap));
    CHECK(direct_memory_bytes(3, 4) == doctest::Approx(2.0 * std::pow(5.0, 9) * 8));

    const DirectSetup big = setup2(32, MappingKind::Logarithmic, Kernel::maxwell(2));
    try {
        (void)CollisionTensors::precompute(big);
        FAIL("N = 32 precompute accepted");
    } catch (const MemoryCapExceeded& e) {
        CHECK(e.needed() > e.cap());
        CHECK(e.cap() == static_cast<double>(default_memory_cap));
    }
    CHECK_THROWS_AS((void)CollisionTensors::precompute(setup2(4, MappingKind::Logarithmic, Kernel::maxwell(2)), 1000),
                    MemoryCapExceeded);
}

TEST_CASE("invalid setups") {
    DirectSetup s = setup2(4, MappingKind::Logarithmic, Kernel::maxwell(2));
    s.grid_points = 5;
    CHECK_THROWS_AS((void)CollisionTensors::precompute(s), std::invalid_argument);
    s = setup2(4, MappingKind::Logarithmic, Kernel::maxwell(2));
    s.dim = 1;
    CHECK_THROWS_AS((void)CollisionTensors::precompute(s), std::invalid_argument);
    s = setup2(4, MappingKind::Logarithmic, Kernel::maxwell(2));
    s.sphere = lebedev_rule(6);
    CHECK_THROWS_AS((void)CollisionTensors::precompute(s), std::invalid_argument);
}

TEST_CASE("tensor cache round trip and rejection") {
    const DirectSetup s = setup2(4, MappingKind::Algebraic, Kernel(1.0, 0.5), 1.7);
    const CollisionTensors t = CollisionTensors::precompute(s);
    const fs::path path = temp_file("cache");
    t.save(path);

    const CollisionTensors back = CollisionTensors::load(path, s);
    REQUIRE(back.modes() == t.modes());
    CHECK(std::equal(back.gain_tensor().begin(), back.gain_tensor().end(), t.gain_tensor().begin()));
    CHECK(std::equal(back.loss_tensor().begin(), back.loss_tensor().end(), t.loss_tensor().begin()));

    // header mismatches
    DirectSetup other = s;
    other.order = 5;
    other.grid_points = 7;
    CHECK_THROWS_AS((void)CollisionTensors::load(path, other), std::runtime_error);
    other = s;
    other.mapping = Mapping(MappingKind::Algebraic, 1.70001);
    CHECK_THROWS_AS((void)CollisionTensors::load(path, other), std::runtime_error);
    other = s;
    other.mapping = Mapping(MappingKind::Logarithmic, 1.7);
    CHECK_THROWS_AS((void)CollisionTensors::load(path, other), std::runtime_error);
    other = s;
    other.kernel = Kernel(1.0, 0.6);
    CHECK_THROWS_AS((void)CollisionTensors::load(path, other), std::runtime_error);
    other = s;
    other.sphere = circle_rule(6);
    CHECK_THROWS_AS((void)CollisionTensors::load(path, other), std::runtime_error);
    other = s;
    other.grid_points = 7;
    CHECK_THROWS_AS((void)CollisionTensors::load(path, other), std::runtime_error);

    // damaged files
    const std::vector<char> good = slurp(path);
    std::vector<char> bad(good.begin(), good.begin() + static_cast<std::ptrdiff_t>(good.size() / 2));
    spit(path, bad);
    CHECK_THROWS_AS((void)CollisionTensors::load(path, s), std::runtime_error);
    bad = good;
    bad.push_back('\0');
    spit(path, bad);
    CHECK_THROWS_AS((void)CollisionTensors::load(path, s), std::runtime_error);
    bad = good;
    bad[0] = 'X';
    spit(path, bad);
    CHECK_THROWS_AS((void)CollisionTensors::load(path, s), std::runtime_error);
    fs::remove(path);
    CHECK_THROWS_AS((void)CollisionTensors::load(path, s), std::runtime_error);
}
