#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "mcboltz/chebyshev.hpp"
#include "mcboltz/kernel.hpp"
#include "mcboltz/mapping.hpp"
#include "mcboltz/sphere.hpp"

namespace mcboltz::detail {

/// Tensor CGL nodes with no endpoint coordinate, in ascending flat order of
/// the full M^d grid. Endpoint nodes carry f = 0 and are excluded from
/// every collision sum.
struct InteriorNodes {
    int dim = 0;
    int points = 0;                 // M per axis (full grid)
    CglRule rule;
    std::vector<std::size_t> flat;  // index into the full M^d grid
    std::vector<double> v;          // count * dim velocities
    std::vector<double> weight;     // product CGL weights
    std::vector<double> mu_sq;      // product mu^2

    [[nodiscard]] std::size_t count() const noexcept { return flat.size(); }
    [[nodiscard]] const double* velocity(std::size_t i) const noexcept { return v.data() + i * dim; }

    InteriorNodes(int dim_, int points_, const Mapping& m) : dim(dim_), points(points_), rule(cgl_rule(points_)) {
        std::size_t total = 1;
        for (int l = 0; l < dim; ++l) total *= static_cast<std::size_t>(points);
        std::vector<int> idx(dim);
        for (std::size_t f = 0; f < total; ++f) {
            std::size_t rem = f;
            bool interior = true;
            for (int l = dim - 1; l >= 0; --l) {
                idx[l] = static_cast<int>(rem % points);
                rem /= points;
                if (idx[l] == 0 || idx[l] == points - 1) interior = false;
            }
            if (!interior) continue;
            flat.push_back(f);
            double w = 1.0, mu2 = 1.0;
            for (int l = 0; l < dim; ++l) {
                const double xi = rule.nodes[idx[l]];
                v.push_back(m.forward(xi));
                w *= rule.weights[idx[l]];
                mu2 *= m.mu_sq(xi);
            }
            weight.push_back(w);
            mu_sq.push_back(mu2);
        }
    }
};

inline double distance(const double* a, const double* b, int dim) noexcept {
    double s = 0.0;
    for (int l = 0; l < dim; ++l) {
        const double g = a[l] - b[l];
        s += g * g;
    }
    return std::sqrt(s);
}

/// Post-collision velocity v' = (v + v*)/2 + |v - v*| sigma / 2.
inline void post_velocity(const double* v, const double* vs, const double* sigma, double speed, int dim,
                          double* out) noexcept {
    for (int l = 0; l < dim; ++l) out[l] = 0.5 * (v[l] + vs[l]) + 0.5 * speed * sigma[l];
}

inline double sphere_measure(const SphereRule& s) noexcept {
    double t = 0.0;
    for (double w : s.weights) t += w;
    return t;
}

} // namespace mcboltz::detail
