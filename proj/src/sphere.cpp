#include "mcboltz/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lebedev_tables.hpp"

namespace mcboltz {

SphereRule circle_rule(int count) {
    if (count < 1) throw std::invalid_argument("circle_rule: need at least one point");
    SphereRule rule;
    rule.dim = 2;
    rule.points.resize(2 * static_cast<std::size_t>(count));
    rule.weights.assign(count, 2.0 * std::numbers::pi / count);
    for (int m = 0; m < count; ++m) {
        const double theta = 2.0 * std::numbers::pi * m / count;
        rule.points[2 * m] = std::cos(theta);
        rule.points[2 * m + 1] = std::sin(theta);
    }
    return rule;
}

std::vector<std::array<int, 2>> lebedev_orders() {
    std::vector<std::array<int, 2>> out;
    for (const auto& t : detail::lebedev_tables()) out.push_back({t.points, t.degree});
    return out;
}

SphereRule lebedev_rule(int count) {
    for (const auto& t : detail::lebedev_tables()) {
        if (t.points != count) continue;
        SphereRule rule;
        rule.dim = 3;
        rule.points.resize(3 * static_cast<std::size_t>(count));
        rule.weights.resize(count);
        for (int m = 0; m < count; ++m) {
            for (int l = 0; l < 3; ++l) rule.points[3 * m + l] = t.data[4 * m + l];
            rule.weights[m] = t.data[4 * m + 3];
        }
        return rule;
    }
    std::string msg = "lebedev_rule: unsupported point count " + std::to_string(count) + "; supported:";
    for (const auto& t : detail::lebedev_tables()) msg += " " + std::to_string(t.points);
    throw std::invalid_argument(msg);
}

SphereRule sphere_rule(int dim, int count) {
    if (dim == 2) return circle_rule(count);
    if (dim == 3) return lebedev_rule(count);
    throw std::invalid_argument("sphere_rule: dim must be 2 or 3");
}

} // namespace mcboltz
