#include "mcboltz/basis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mcboltz {

namespace {

void check_order(int dim, int order, int grid_points) {
    if (dim < 1) throw std::invalid_argument("basis: dim must be positive");
    if (order < 0) throw std::invalid_argument("basis: order must be nonnegative");
    if (grid_points < order + 1) throw std::invalid_argument("basis: need grid_points >= order + 1");
}

std::string node_name(std::span<const int> idx) {
    std::ostringstream os;
    os << '(';
    for (std::size_t l = 0; l < idx.size(); ++l) os << (l ? "," : "") << idx[l];
    os << ')';
    return os.str();
}

SpectralField from_weighted_samples(CubeArray samples, int order, const Mapping& m) {
    const int dim = samples.dim();
    CubeArray a = cheb_forward(samples.values(), dim, samples.extent(), order);
    std::vector<double> root(order + 1);
    for (int k = 0; k <= order; ++k) root[k] = std::sqrt(norm_const(k));
    std::vector<int> idx(dim);
    for (std::size_t f = 0; f < a.size(); ++f) {
        a.unflat(f, idx);
        double s = 1.0;
        for (int l = 0; l < dim; ++l) s *= root[idx[l]];
        a[f] *= s;
    }
    return {m, std::move(a)};
}

/// coeffs / sqrt(norm) per axis, i.e. the plain Chebyshev coefficients of P.
CubeArray plain_coeffs(const SpectralField& field) {
    CubeArray c = field.coeffs;
    const int dim = c.dim();
    std::vector<double> inv(c.extent());
    for (int k = 0; k < c.extent(); ++k) inv[k] = 1.0 / std::sqrt(norm_const(k));
    std::vector<int> idx(dim);
    for (std::size_t f = 0; f < c.size(); ++f) {
        c.unflat(f, idx);
        double s = 1.0;
        for (int l = 0; l < dim; ++l) s *= inv[idx[l]];
        c[f] *= s;
    }
    return c;
}

/// mu^2(xi) v(xi)^a with its endpoint limit (0, or S for the algebraic a = 2).
/// Returns 0 at the endpoints when the limit does not exist.
double moment_factor(const Mapping& m, double xi, int a) {
    if (std::abs(xi) == 1.0) {
        if (m.kind() == MappingKind::Algebraic && a == 2) return m.scale();
        return 0.0;
    }
    return m.mu_sq(xi) * std::pow(m.forward(xi), a);
}

} // namespace

double norm_const(int k) noexcept { return k == 0 ? std::numbers::pi : 0.5 * std::numbers::pi; }

double trial_eval(std::span<const int> k, std::span<const double> v, const Mapping& m) {
    double out = 1.0;
    for (std::size_t l = 0; l < k.size(); ++l) {
        const double xi = m.inverse(v[l]);
        const double mu2 = m.mu_sq(xi);
        out *= mu2 * mu2 * cheb_eval(k[l], xi) / std::sqrt(norm_const(k[l]));
    }
    return out;
}

double test_eval(std::span<const int> k, std::span<const double> v, const Mapping& m) {
    double out = 1.0;
    for (std::size_t l = 0; l < k.size(); ++l) {
        const double xi = m.inverse(v[l]);
        out *= m.inv_mu_sq_at(v[l]) * cheb_eval(k[l], xi) / std::sqrt(norm_const(k[l]));
    }
    return out;
}

SpectralField project(const PointFunction& f, int dim, int order, int grid_points, const Mapping& m) {
    check_order(dim, order, grid_points);
    const CglRule rule = cgl_rule(grid_points);
    CubeArray samples(dim, grid_points);
    std::vector<int> idx(dim);
    std::vector<double> v(dim);
    for (std::size_t n = 0; n < samples.size(); ++n) {
        samples.unflat(n, idx);
        bool endpoint = false;
        double mu4 = 1.0;
        for (int l = 0; l < dim; ++l) {
            const double xi = rule.nodes[idx[l]];
            if (idx[l] == 0 || idx[l] == grid_points - 1) {
                endpoint = true;
                break;
            }
            v[l] = m.forward(xi);
            const double mu2 = m.mu_sq(xi);
            mu4 *= mu2 * mu2;
        }
        if (endpoint) continue;
        const double val = f(v) / mu4;
        if (!std::isfinite(val)) {
            throw std::domain_error("project: non-finite sample at node " + node_name(idx));
        }
        samples[n] = val;
    }
    return from_weighted_samples(std::move(samples), order, m);
}

SpectralField project_weighted(const PointFunction& weighted_f, int dim, int order, int grid_points,
                               const Mapping& m) {
    check_order(dim, order, grid_points);
    const CglRule rule = cgl_rule(grid_points);
    CubeArray samples(dim, grid_points);
    std::vector<int> idx(dim);
    std::vector<double> xi(dim);
    for (std::size_t n = 0; n < samples.size(); ++n) {
        samples.unflat(n, idx);
        for (int l = 0; l < dim; ++l) xi[l] = rule.nodes[idx[l]];
        const double val = weighted_f(xi);
        if (!std::isfinite(val)) {
            throw std::domain_error("project_weighted: non-finite sample at node " + node_name(idx));
        }
        samples[n] = val;
    }
    return from_weighted_samples(std::move(samples), order, m);
}

GridField reconstruct(const SpectralField& field, int grid_points) {
    const int dim = field.dim();
    const CglRule rule = cgl_rule(grid_points);
    GridField g{field.mapping, grid_points, cheb_inverse(plain_coeffs(field), grid_points), {}, {}};
    std::vector<double> mu2(grid_points);
    for (int j = 0; j < grid_points; ++j) mu2[j] = field.mapping.mu_sq(rule.nodes[j]);
    g.values = CubeArray(dim, grid_points);
    g.weighted = CubeArray(dim, grid_points);
    std::vector<int> idx(dim);
    for (std::size_t n = 0; n < g.poly.size(); ++n) {
        g.poly.unflat(n, idx);
        double w = 1.0;
        for (int l = 0; l < dim; ++l) w *= mu2[idx[l]];
        g.weighted[n] = w * g.poly[n];
        g.values[n] = w * w * g.poly[n];
    }
    return g;
}

double reconstruct_at(const SpectralField& field, std::span<const double> v) {
    const int dim = field.dim();
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("reconstruct_at: dimension mismatch");
    std::vector<double> xi(dim);
    double mu4 = 1.0;
    for (int l = 0; l < dim; ++l) {
        xi[l] = field.mapping.inverse(v[l]);
        const double mu2 = field.mapping.mu_sq(xi[l]);
        mu4 *= mu2 * mu2;
    }
    return mu4 * cheb_inverse_at(plain_coeffs(field), xi);
}

CubeArray reconstruct_tensor(const SpectralField& field, std::span<const double> v_axis) {
    const int dim = field.dim();
    const std::size_t n_axis = v_axis.size();
    std::vector<double> xi(n_axis), mu4(n_axis);
    for (std::size_t j = 0; j < n_axis; ++j) {
        xi[j] = field.mapping.inverse(v_axis[j]);
        const double mu2 = field.mapping.mu_sq(xi[j]);
        mu4[j] = mu2 * mu2;
    }
    CubeArray out = cheb_inverse_tensor(plain_coeffs(field), xi);
    std::vector<int> idx(dim);
    for (std::size_t n = 0; n < out.size(); ++n) {
        out.unflat(n, idx);
        double w = 1.0;
        for (int l = 0; l < dim; ++l) w *= mu4[idx[l]];
        out[n] *= w;
    }
    return out;
}

Moments moments(const GridField& grid, const CglRule& rule) {
    const int dim = grid.dim();
    const int M = grid.points;
    if (rule.points != M) throw std::invalid_argument("moments: grid and rule sizes differ");

    // h[a][j] = w_j mu^2(xi_j) v(xi_j)^a
    std::vector<std::vector<double>> h(4, std::vector<double>(M));
    for (int a = 0; a < 4; ++a) {
        for (int j = 0; j < M; ++j) h[a][j] = rule.weights[j] * moment_factor(grid.mapping, rule.nodes[j], a);
    }
    std::vector<int> idx(dim);
    auto integrate = [&](std::span<const int> exps) {
        double sum = 0.0;
        for (std::size_t n = 0; n < grid.poly.size(); ++n) {
            grid.poly.unflat(n, idx);
            double w = grid.poly[n];
            for (int l = 0; l < dim; ++l) w *= h[exps[l]][idx[l]];
            sum += w;
        }
        return sum;
    };

    Moments out;
    std::vector<int> e(dim, 0);
    out.rho = integrate(e);
    out.U.assign(dim, 0.0);
    out.P.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    out.q.assign(dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        std::fill(e.begin(), e.end(), 0);
        e[i] = 1;
        out.U[i] = integrate(e);
        for (int j = i; j < dim; ++j) {
            std::fill(e.begin(), e.end(), 0);
            e[i] += 1;
            e[j] += 1;
            const double p = integrate(e);
            out.P[i * dim + j] = p;
            out.P[j * dim + i] = p;
        }
    }
    for (int i = 0; i < dim; ++i) out.E += out.P[i * dim + i];
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            std::fill(e.begin(), e.end(), 0);
            e[i] += 1;
            e[j] += 2;
            out.q[i] += integrate(e);
        }
    }
    return out;
}

namespace {

void check_conservation_basis(int order, const Mapping& m) {
    if (m.kind() != MappingKind::Algebraic) {
        throw std::invalid_argument("conservation weights exist only for the algebraic mapping");
    }
    if (order < 2) throw std::invalid_argument("conservation weights need order >= 2");
}

// 1 = m0 T0 + m2 T2 and v^2 = e0 T0 + e2 T2 in the 1D test basis
std::vector<double> one_1d(int order, double S) {
    std::vector<double> c(order + 1, 0.0);
    c[0] = std::sqrt(norm_const(0)) / (2.0 * S);
    c[2] = -std::sqrt(norm_const(2)) / (2.0 * S);
    return c;
}

std::vector<double> square_1d(int order, double S) {
    std::vector<double> c(order + 1, 0.0);
    c[0] = std::sqrt(norm_const(0)) * S / 2.0;
    c[2] = std::sqrt(norm_const(2)) * S / 2.0;
    return c;
}

} // namespace

CubeArray mass_weights(int dim, int order, const Mapping& m) {
    check_conservation_basis(order, m);
    const auto one = one_1d(order, m.scale());
    CubeArray w(dim, order + 1);
    std::vector<int> idx(dim);
    for (std::size_t n = 0; n < w.size(); ++n) {
        w.unflat(n, idx);
        double p = 1.0;
        for (int l = 0; l < dim; ++l) p *= one[idx[l]];
        w[n] = p;
    }
    return w;
}

CubeArray energy_weights(int dim, int order, const Mapping& m) {
    check_conservation_basis(order, m);
    const auto one = one_1d(order, m.scale());
    const auto sq = square_1d(order, m.scale());
    CubeArray w(dim, order + 1);
    std::vector<int> idx(dim);
    for (std::size_t n = 0; n < w.size(); ++n) {
        w.unflat(n, idx);
        double total = 0.0;
        for (int l = 0; l < dim; ++l) {
            double p = sq[idx[l]];
            for (int o = 0; o < dim; ++o) {
                if (o != l) p *= one[idx[o]];
            }
            total += p;
        }
        w[n] = total;
    }
    return w;
}

} // namespace mcboltz
