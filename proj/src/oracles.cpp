#include "mcboltz/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mcboltz {

namespace {

constexpr double pi = std::numbers::pi;

double squared_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

void check_params(const BkwParams& p) {
    if (p.dim != 2 && p.dim != 3) throw std::invalid_argument("bkw: dim must be 2 or 3");
    if (!(p.t >= 0.0) || !std::isfinite(p.t)) throw std::invalid_argument("bkw: t must be finite and nonnegative");
}

} // namespace

double BkwParams::K() const {
    check_params(*this);
    return dim == 2 ? 1.0 - 0.5 * std::exp(-t / 8.0) : 1.0 - std::exp(-t / 6.0);
}

double BkwParams::K_rate() const {
    check_params(*this);
    return dim == 2 ? std::exp(-t / 8.0) / 16.0 : std::exp(-t / 6.0) / 6.0;
}

double bkw_f(const BkwParams& p, std::span<const double> v) {
    const double K = p.K();
    const double v2 = squared_norm(v);
    if (p.dim == 2) {
        return std::exp(-v2 / (2.0 * K)) / (2.0 * pi * K * K) * (2.0 * K - 1.0 + (1.0 - K) / (2.0 * K) * v2);
    }
    return std::exp(-v2 / (2.0 * K)) / (2.0 * std::pow(2.0 * pi * K, 1.5)) *
           ((5.0 * K - 3.0) / K + (1.0 - K) / (K * K) * v2);
}

double bkw_q(const BkwParams& p, std::span<const double> v) {
    const double K = p.K();
    const double v2 = squared_norm(v);
    const double f = bkw_f(p, v);
    const double g = std::exp(-v2 / (2.0 * K));
    if (p.dim == 2) {
        return ((-2.0 / K + v2 / (2.0 * K * K)) * f + g / (2.0 * pi * K * K) * (2.0 - v2 / (2.0 * K * K))) *
               p.K_rate();
    }
    return ((-1.5 / K + v2 / (2.0 * K * K)) * f +
            g / (2.0 * std::pow(2.0 * pi * K, 1.5)) * (3.0 / (K * K) + (K - 2.0) / (K * K * K) * v2)) *
           p.K_rate();
}

double maxwellian(std::span<const double> v, double rho, std::span<const double> U, double T) {
    double s = 0.0;
    for (std::size_t l = 0; l < v.size(); ++l) {
        const double c = v[l] - U[l];
        s += c * c;
    }
    return rho / std::pow(2.0 * pi * T, 0.5 * static_cast<double>(v.size())) * std::exp(-s / (2.0 * T));
}

double two_gaussian_f0(std::span<const double> v) {
    if (v.size() != 2) throw std::invalid_argument("two_gaussian_f0: 2D only");
    const double a[2] = {-1.0, 2.0};
    const double b[2] = {3.0, -3.0};
    return maxwellian(v, 0.5, a, 1.0) + maxwellian(v, 0.5, b, 1.0);
}

TwoGaussianMoments two_gaussian_moments(double t) {
    const double e = std::exp(-t / 2.0);
    return {-9.0 / 8.0 * e + 57.0 / 8.0, -5.0 * e - 0.5, 9.0 / 8.0 * e + 51.0 / 8.0, 0.25 * (11.0 * e + 103.0),
            -0.125 * (89.0 * e + 103.0)};
}

std::vector<double> ErrorGrid::axis() const {
    if (count < 2) throw std::invalid_argument("ErrorGrid: need at least 2 nodes per axis");
    std::vector<double> a(count);
    for (int i = 0; i < count; ++i) a[i] = -half_width + 2.0 * half_width * i / (count - 1);
    return a;
}

FieldError field_error(const CubeArray& numeric, const PointFunction& exact, const ErrorGrid& grid) {
    const auto axis = grid.axis();
    if (numeric.extent() != grid.count) throw std::invalid_argument("field_error: grid size mismatch");
    const int d = numeric.dim();
    std::vector<int> idx(d);
    std::vector<double> v(d);
    double sum_sq = 0.0;
    FieldError e;
    for (std::size_t n = 0; n < numeric.size(); ++n) {
        numeric.unflat(n, idx);
        for (int l = 0; l < d; ++l) v[l] = axis[idx[l]];
        const double diff = numeric[n] - exact(v);
        sum_sq += diff * diff;
        e.linf = std::max(e.linf, std::abs(diff));
    }
    const double volume = std::pow(2.0 * grid.half_width, d);
    e.l2 = std::sqrt(sum_sq / static_cast<double>(numeric.size()) * volume);
    e.l2_plain = std::sqrt(sum_sq);
    return e;
}

FieldError expansion_error(const SpectralField& field, const PointFunction& exact, const ErrorGrid& grid) {
    const auto axis = grid.axis();
    return field_error(reconstruct_tensor(field, axis), exact, grid);
}

} // namespace mcboltz
