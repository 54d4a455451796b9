#include "mcboltz/collision_fast.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "collision_common.hpp"
#include "mcboltz/nufft.hpp"

namespace mcboltz {

namespace {

/// arccos(xi(v)) and mu(xi(v))^{-2} for one velocity component.
inline void angle_and_weight(MappingKind kind, double S, double v, double& angle, double& inv_mu_sq) noexcept {
    if (kind == MappingKind::Logarithmic) {
        // arccos(tanh x) = 2 atan(e^{-x}), cosh x = (e^x + e^{-x}) / 2
        const double t = std::exp(-v / S);
        angle = 2.0 * std::atan(t);
        inv_mu_sq = 0.5 * S * (t + 1.0 / t);
    } else {
        angle = std::atan2(S, v);
        inv_mu_sq = (S * S + v * v) / S;
    }
}

std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

} // namespace

struct FastWorkspace::Impl {
    int dim;
    int order;
    int points;
    Mapping mapping;
    Kernel kernel;
    SphereRule sphere;
    FastOptions options;
    detail::InteriorNodes nodes;
    std::vector<NufftPlan> plans;
    std::vector<double> inv_root_norm;

    bool cache_enabled = false;
    bool cache_built = false;
    std::vector<double> cache_angle;  // [sigma][pair][l]
    std::vector<double> cache_geo;    // [sigma][pair]

    Impl(int d, int n, int m, const Mapping& map, const Kernel& k, SphereRule s, FastOptions o)
        : dim(d), order(n), points(m), mapping(map), kernel(k), sphere(std::move(s)), options(o),
          nodes(d, m, map) {
        if (dim != 2 && dim != 3) throw std::invalid_argument("FastWorkspace: dim must be 2 or 3");
        if (order < 0) throw std::invalid_argument("FastWorkspace: order must be nonnegative");
        if (points < order + 1 || points < 3) {
            throw std::invalid_argument("FastWorkspace: need grid_points >= order + 1 and >= 3");
        }
        if (sphere.dim != dim) throw std::invalid_argument("FastWorkspace: sphere rule dimension mismatch");
        if (options.threads < 1) throw std::invalid_argument("FastWorkspace: threads must be positive");
        const int workers = std::min(options.threads, sphere.size());
        for (int w = 0; w < workers; ++w) plans.emplace_back(dim, order, options.epsilon);
        inv_root_norm.resize(order + 1);
        for (int k = 0; k <= order; ++k) inv_root_norm[k] = 1.0 / std::sqrt(norm_const(k));

        const std::size_t pairs = pair_count(nodes.count());
        const std::size_t bytes = static_cast<std::size_t>(sphere.size()) * pairs * (dim + 1) * sizeof(double);
        cache_enabled = bytes <= options.geometry_cache_bytes;
    }

    std::size_t coeff_count() const {
        std::size_t c = 1;
        for (int l = 0; l < dim; ++l) c *= static_cast<std::size_t>(order + 1);
        return c;
    }

    /// Angles and geometric factor B prod mu(v'_l)^{-2} (doubled off the diagonal) for
    /// the pairs (p, q <= p) under direction m.
    void geometry_row(int m, std::size_t p, double* angle, double* geo) const {
        const double* sigma = sphere.point(m);
        const double* vp = nodes.velocity(p);
        const double S = mapping.scale();
        double vprime[3];
        for (std::size_t q = 0; q <= p; ++q) {
            const double* vq = nodes.velocity(q);
            const double speed = detail::distance(vp, vq, dim);
            detail::post_velocity(vp, vq, sigma, speed, dim, vprime);
            double factor = kernel.of_speed(speed) * (q < p ? 2.0 : 1.0);
            for (int l = 0; l < dim; ++l) {
                double inv_mu_sq = 0.0;
                angle_and_weight(mapping.kind(), S, vprime[l], angle[q * dim + l], inv_mu_sq);
                factor *= inv_mu_sq;
            }
            geo[q] = factor;
        }
    }

    void build_cache() {
        const std::size_t n = nodes.count();
        const std::size_t pairs = pair_count(n);
        cache_angle.resize(static_cast<std::size_t>(sphere.size()) * pairs * dim);
        cache_geo.resize(static_cast<std::size_t>(sphere.size()) * pairs);
        for (int m = 0; m < sphere.size(); ++m) {
            for (std::size_t p = 0; p < n; ++p) {
                const std::size_t off = static_cast<std::size_t>(m) * pairs + pair_count(p);
                geometry_row(m, p, cache_angle.data() + off * dim, cache_geo.data() + off);
            }
        }
        cache_built = true;
    }

    void check_grid(const GridField& grid) const {
        if (grid.dim() != dim || grid.points != points || !(grid.mapping == mapping)) {
            throw std::invalid_argument("FastWorkspace: grid field does not match the workspace");
        }
    }

    /// Cosine sums C_k = sum_j q_j prod cos(k_l z_l) from the half spectrum, accumulated with `scale`.
    void accumulate_cosines(const std::vector<std::complex<double>>& half, double scale, double* acc) const {
        const int N = order;
        const std::size_t e = 2 * N + 1;
        const std::size_t last = N + 1;
        if (dim == 2) {
            for (int k1 = 0; k1 <= N; ++k1) {
                const auto* plus = half.data() + static_cast<std::size_t>(N + k1) * last;
                const auto* minus = half.data() + static_cast<std::size_t>(N - k1) * last;
                double* out = acc + static_cast<std::size_t>(k1) * (N + 1);
                for (int k2 = 0; k2 <= N; ++k2) out[k2] += scale * 0.5 * (plus[k2].real() + minus[k2].real());
            }
        } else {
            for (int k1 = 0; k1 <= N; ++k1) {
                for (int k2 = 0; k2 <= N; ++k2) {
                    const auto* pp = half.data() + ((N + k1) * e + (N + k2)) * last;
                    const auto* mp = half.data() + ((N - k1) * e + (N + k2)) * last;
                    const auto* pm = half.data() + ((N + k1) * e + (N - k2)) * last;
                    const auto* mm = half.data() + ((N - k1) * e + (N - k2)) * last;
                    double* out = acc + (static_cast<std::size_t>(k1) * (N + 1) + k2) * (N + 1);
                    for (int k3 = 0; k3 <= N; ++k3) {
                        out[k3] += scale * 0.25 * (pp[k3].real() + mp[k3].real() + pm[k3].real() + mm[k3].real());
                    }
                }
            }
        }
    }

    /// Gain contribution of direction m, added into acc.
    void gain_direction(int m, NufftPlan& plan, const std::vector<double>& g, double* acc) const {
        const std::size_t n = nodes.count();
        const std::size_t pairs = pair_count(n);
        std::vector<double> angle_buf, geo_buf;
        if (!cache_built) {
            angle_buf.resize(n * dim);
            geo_buf.resize(n);
        }
        std::vector<double> strengths(n);
        std::vector<std::complex<double>> half(plan.half_size());
        const double wsig = sphere.weights[m];
        for (std::size_t p = 0; p < n; ++p) {
            const double outer = nodes.weight[p] * g[p];
            if (outer == 0.0) continue;
            const double* angle;
            const double* geo;
            if (cache_built) {
                const std::size_t off = static_cast<std::size_t>(m) * pairs + pair_count(p);
                angle = cache_angle.data() + off * dim;
                geo = cache_geo.data() + off;
            } else {
                geometry_row(m, p, angle_buf.data(), geo_buf.data());
                angle = angle_buf.data();
                geo = geo_buf.data();
            }
            for (std::size_t q = 0; q <= p; ++q) {
                const double s = nodes.weight[q] * g[q] * geo[q];
                if (!std::isfinite(s)) {
                    throw std::domain_error("gain: non-finite strength at sigma " + std::to_string(m) + ", xi node " +
                                            std::to_string(nodes.flat[p]) + ", eta node " +
                                            std::to_string(nodes.flat[q]));
                }
                strengths[q] = s;
            }
            plan.execute_real(std::span<const double>(angle, (p + 1) * dim),
                              std::span<const double>(strengths.data(), p + 1), half);
            accumulate_cosines(half, wsig * outer, acc);
        }
    }

    CubeArray gain(const GridField& grid) {
        check_grid(grid);
        if (cache_enabled && !cache_built) build_cache();
        const std::size_t n = nodes.count();
        std::vector<double> g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = grid.weighted[nodes.flat[i]];

        const int Msig = sphere.size();
        const int workers = static_cast<int>(plans.size());
        const std::size_t nc = coeff_count();
        // deterministic: one slot per direction; otherwise one per worker
        const int slots = options.deterministic ? Msig : workers;
        std::vector<std::vector<double>> partial(slots, std::vector<double>(nc, 0.0));
        std::vector<std::exception_ptr> errors(workers);

        auto run = [&](int w) {
            try {
                for (int m = w; m < Msig; m += workers) {
                    double* acc = partial[options.deterministic ? m : w].data();
                    gain_direction(m, plans[w], g, acc);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        if (workers == 1) {
            run(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
            for (auto& t : pool) t.join();
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }

        CubeArray out(dim, order + 1);
        for (const auto& part : partial) {
            for (std::size_t i = 0; i < nc; ++i) out[i] += part[i];
        }
        scale_by_norm(out);
        return out;
    }

    void scale_by_norm(CubeArray& a) const {
        std::vector<int> idx(dim);
        for (std::size_t f = 0; f < a.size(); ++f) {
            a.unflat(f, idx);
            double s = 1.0;
            for (int l = 0; l < dim; ++l) s *= inv_root_norm[idx[l]];
            a[f] *= s;
        }
    }

    CubeArray loss(const GridField& grid) const {
        check_grid(grid);
        const std::size_t n = nodes.count();
        const double measure = detail::sphere_measure(sphere);
        std::vector<double> wg(n);
        for (std::size_t i = 0; i < n; ++i) wg[i] = nodes.weight[i] * grid.weighted[nodes.flat[i]];

        std::vector<double> inner(n, 0.0);
        if (kernel.is_constant()) {
            double rho = 0.0;
            for (double x : wg) rho += x;
            std::fill(inner.begin(), inner.end(), kernel.constant() * measure * rho);
        } else {
            for (std::size_t p = 0; p < n; ++p) {
                double s = 0.0;
                for (std::size_t q = 0; q < n; ++q) {
                    s += wg[q] * kernel.of_speed(detail::distance(nodes.velocity(p), nodes.velocity(q), dim));
                }
                inner[p] = measure * s;
            }
        }
        CubeArray values(dim, points);
        for (std::size_t p = 0; p < n; ++p) values[nodes.flat[p]] = grid.poly[nodes.flat[p]] * inner[p];
        CubeArray out = cheb_weighted_sums(values.values(), dim, points, order);
        scale_by_norm(out);
        return out;
    }
};

FastWorkspace::FastWorkspace(int dim, int order, int grid_points, const Mapping& m, const Kernel& kernel,
                             SphereRule sphere, FastOptions options)
    : impl_(std::make_unique<Impl>(dim, order, grid_points, m, kernel, std::move(sphere), options)) {}

FastWorkspace::~FastWorkspace() = default;
FastWorkspace::FastWorkspace(FastWorkspace&&) noexcept = default;
FastWorkspace& FastWorkspace::operator=(FastWorkspace&&) noexcept = default;

int FastWorkspace::dim() const noexcept { return impl_->dim; }
int FastWorkspace::order() const noexcept { return impl_->order; }
int FastWorkspace::grid_points() const noexcept { return impl_->points; }
const Mapping& FastWorkspace::mapping() const noexcept { return impl_->mapping; }
const Kernel& FastWorkspace::kernel() const noexcept { return impl_->kernel; }
const SphereRule& FastWorkspace::sphere() const noexcept { return impl_->sphere; }
bool FastWorkspace::geometry_cached() const noexcept { return impl_->cache_enabled; }

CubeArray FastWorkspace::gain(const GridField& grid) { return impl_->gain(grid); }
CubeArray FastWorkspace::loss(const GridField& grid) const { return impl_->loss(grid); }

CollisionParts FastWorkspace::parts(const SpectralField& field) {
    if (field.dim() != impl_->dim || field.order() != impl_->order || !(field.mapping == impl_->mapping)) {
        throw std::invalid_argument("FastWorkspace: field does not match the workspace");
    }
    const GridField grid = reconstruct(field, impl_->points);
    return {impl_->gain(grid), impl_->loss(grid)};
}

CubeArray FastWorkspace::evaluate(const SpectralField& field) {
    CollisionParts p = parts(field);
    p.gain -= p.loss;
    return p.gain;
}

} // namespace mcboltz
