#include "mcboltz/mapping.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mcboltz {

namespace {

constexpr double endpoint_snap = 1e-14;

double clamp_reference(double xi) {
    if (!(std::abs(xi) <= 1.0)) {
        throw std::domain_error("mapping: reference coordinate outside [-1, 1]: " + std::to_string(xi));
    }
    if (1.0 - std::abs(xi) <= endpoint_snap) return std::copysign(1.0, xi);
    return xi;
}

} // namespace

std::string to_string(MappingKind kind) {
    return kind == MappingKind::Logarithmic ? "log" : "alg";
}

MappingKind parse_mapping_kind(std::string_view text) {
    if (text == "log" || text == "logarithmic") return MappingKind::Logarithmic;
    if (text == "alg" || text == "algebraic") return MappingKind::Algebraic;
    throw std::invalid_argument("unknown mapping '" + std::string(text) + "' (expected log or alg)");
}

Mapping::Mapping(MappingKind kind, double scale) : kind_(kind), scale_(scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::invalid_argument("mapping scale must be positive and finite");
    }
}

double Mapping::forward(double xi) const {
    xi = clamp_reference(xi);
    if (std::abs(xi) == 1.0) return std::copysign(std::numeric_limits<double>::infinity(), xi);
    if (kind_ == MappingKind::Logarithmic) return scale_ * std::atanh(xi);
    // (1 - xi)(1 + xi) keeps relative accuracy near the endpoints.
    return scale_ * xi / std::sqrt((1.0 - xi) * (1.0 + xi));
}

double Mapping::inverse(double v) const noexcept {
    if (kind_ == MappingKind::Logarithmic) return std::tanh(v / scale_);
    return v / std::hypot(scale_, v);
}

double Mapping::mu_sq(double xi) const {
    xi = clamp_reference(xi);
    const double one_minus = (1.0 - xi) * (1.0 + xi);
    if (kind_ == MappingKind::Logarithmic) return std::sqrt(one_minus) / scale_;
    return one_minus / scale_;
}

double Mapping::mu(double xi) const { return std::sqrt(mu_sq(xi)); }

double Mapping::jacobian(double xi) const {
    xi = clamp_reference(xi);
    const double one_minus = (1.0 - xi) * (1.0 + xi);
    if (one_minus == 0.0) return std::numeric_limits<double>::infinity();
    if (kind_ == MappingKind::Logarithmic) return scale_ / one_minus;
    return scale_ / (one_minus * std::sqrt(one_minus));
}

double Mapping::inv_mu_sq_at(double v) const noexcept {
    if (kind_ == MappingKind::Logarithmic) return scale_ * std::cosh(v / scale_);
    return (scale_ * scale_ + v * v) / scale_;
}

double Mapping::angle_at(double v) const noexcept {
    // cos(theta) = xi(v), sin(theta) = sqrt(1 - xi^2) > 0
    if (kind_ == MappingKind::Logarithmic) return std::atan2(1.0, std::sinh(v / scale_));
    return std::atan2(scale_, v);
}

double adaptive_scale(MappingKind kind, double half_width, int grid_points) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw std::invalid_argument("adaptive_scale: L must be positive");
    }
    if (grid_points < 4) {
        throw std::invalid_argument("adaptive_scale: need at least 4 grid points");
    }
    const double theta = std::numbers::pi / (grid_points - 1);
    const double xi = std::cos(theta);
    const double sin_theta = std::sin(theta);
    if (kind == MappingKind::Logarithmic) {
        // artanh(cos t) = ln(cot(t/2))
        return half_width / std::log(1.0 / std::tan(0.5 * theta));
    }
    return half_width * sin_theta / xi;
}

} // namespace mcboltz
