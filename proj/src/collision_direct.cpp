#include "mcboltz/collision_direct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "collision_common.hpp"

namespace mcboltz {

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

void check_setup(const DirectSetup& s) {
    if (s.dim != 2 && s.dim != 3) throw std::invalid_argument("direct: dim must be 2 or 3");
    if (s.order < 0) throw std::invalid_argument("direct: order must be nonnegative");
    if (s.grid_points < s.order + 2) throw std::invalid_argument("direct: need grid_points >= order + 2");
    if (s.sphere.dim != s.dim || s.sphere.size() < 1) throw std::invalid_argument("direct: bad sphere rule");
}

/// Multiplies plane(i, j) by prod inv_root_norm over the 2d axes of (i, j).
void scale_plane(std::vector<double>& plane, int dim2, int extent, const std::vector<double>& inv_root_norm,
                 double extra) {
    std::vector<int> idx(dim2, 0);
    for (double& x : plane) {
        double s = extra;
        for (int l = 0; l < dim2; ++l) s *= inv_root_norm[idx[l]];
        x *= s;
        for (int l = dim2 - 1; l >= 0; --l) {
            if (++idx[l] < extent) break;
            idx[l] = 0;
        }
    }
}

} // namespace

double direct_memory_bytes(int dim, int order) {
    return 2.0 * std::pow(static_cast<double>(order + 1), 3 * dim) * sizeof(double);
}

MemoryCapExceeded::MemoryCapExceeded(double needed, double cap)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "direct tensors need " << needed / (1 << 30) << " GiB, above the cap of " << cap / (1 << 30)
             << " GiB";
          return os.str();
      }()),
      needed_(needed), cap_(cap) {}

void compute_collision_planes(const DirectSetup& setup, const PlaneSink& sink) {
    check_setup(setup);
    const int d = setup.dim;
    const int N = setup.order;
    const int M = setup.grid_points;
    const Mapping& map = setup.mapping;
    const SphereRule& sphere = setup.sphere;
    const int Msig = sphere.size();
    const detail::InteriorNodes nodes(d, M, map);
    const std::size_t n = nodes.count();
    const std::size_t pairs = n * (n + 1) / 2;
    const std::size_t triples = pairs * Msig;
    const std::size_t grid_d = ipow(M, d);
    const std::size_t grid_2d = grid_d * grid_d;
    const std::size_t modes = ipow(N + 1, d);
    const double measure = detail::sphere_measure(sphere);

    std::vector<double> inv_root_norm(N + 1);
    for (int k = 0; k <= N; ++k) inv_root_norm[k] = 1.0 / std::sqrt(norm_const(k));

    // per (pair q <= p, direction): reference coordinates of v' and the weight
    //   w_sigma B mu_p^2 mu_q^2 prod mu(v'_l)^{-2}
    std::vector<double> zeta(triples * d);
    std::vector<double> weight(triples);
    {
        std::size_t t = 0;
        double vprime[3];
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q <= p; ++q) {
                const double speed = detail::distance(nodes.velocity(p), nodes.velocity(q), d);
                const double base = setup.kernel.of_speed(speed) * nodes.mu_sq[p] * nodes.mu_sq[q];
                for (int m = 0; m < Msig; ++m, ++t) {
                    detail::post_velocity(nodes.velocity(p), nodes.velocity(q), sphere.point(m), speed, d, vprime);
                    double w = sphere.weights[m] * base;
                    for (int l = 0; l < d; ++l) {
                        zeta[t * d + l] = std::clamp(map.inverse(vprime[l]), -1.0, 1.0);
                        w *= map.inv_mu_sq_at(vprime[l]);
                    }
                    if (!std::isfinite(w)) {
                        throw std::domain_error("direct: non-finite weight at xi node " + std::to_string(nodes.flat[p]) +
                                                ", eta node " + std::to_string(nodes.flat[q]) + ", sigma " +
                                                std::to_string(m));
                    }
                    weight[t] = w;
                }
            }
        }
    }

    // recurrence state for the leading d-1 axes
    std::vector<double> t_prev((d - 1) * triples), t_cur((d - 1) * triples);
    std::vector<double> outer(triples);
    std::vector<double> planes(static_cast<std::size_t>(N + 1) * grid_2d);
    std::vector<double> acc(N + 1), cheb(N + 1);
    std::vector<double> loss_plane(grid_2d);

    // advances T_{k}(zeta_l) for axis l from k-1 to k (k = 0 resets)
    auto step_axis = [&](int l, int k) {
        double* prev = t_prev.data() + l * triples;
        double* cur = t_cur.data() + l * triples;
        for (std::size_t t = 0; t < triples; ++t) {
            const double z = zeta[t * d + l];
            if (k == 0) {
                prev[t] = 0.0;
                cur[t] = 1.0;
            } else if (k == 1) {
                prev[t] = 1.0;
                cur[t] = z;
            } else {
                const double next = 2.0 * z * cur[t] - prev[t];
                prev[t] = cur[t];
                cur[t] = next;
            }
        }
    };

    auto emit_last_axis = [&](std::size_t k_outer_flat, std::span<const int> k_outer) {
        // gain planes for every k_last
        std::fill(planes.begin(), planes.end(), 0.0);
        for (std::size_t t = 0; t < triples; ++t) {
            double o = weight[t];
            for (int l = 0; l < d - 1; ++l) o *= t_cur[l * triples + t];
            outer[t] = o;
        }
        std::size_t t = 0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q <= p; ++q) {
                std::fill(acc.begin(), acc.end(), 0.0);
                for (int m = 0; m < Msig; ++m, ++t) {
                    cheb_values(zeta[t * d + d - 1], cheb);
                    const double o = outer[t];
                    for (int k = 0; k <= N; ++k) acc[k] += o * cheb[k];
                }
                const std::size_t pq = nodes.flat[p] * grid_d + nodes.flat[q];
                const std::size_t qp = nodes.flat[q] * grid_d + nodes.flat[p];
                for (int k = 0; k <= N; ++k) {
                    planes[k * grid_2d + pq] = acc[k];
                    planes[k * grid_2d + qp] = acc[k];
                }
            }
        }
        for (int k_last = 0; k_last <= N; ++k_last) {
            const std::size_t k_flat = k_outer_flat * (N + 1) + k_last;
            double inv_norm_k = inv_root_norm[k_last];
            for (int l = 0; l < d - 1; ++l) inv_norm_k *= inv_root_norm[k_outer[l]];

            auto gain_sums = cheb_weighted_sums(std::span<const double>(planes.data() + k_last * grid_2d, grid_2d),
                                                2 * d, M, N);
            scale_plane(gain_sums.storage(), 2 * d, N + 1, inv_root_norm, inv_norm_k);

            // loss: mu_q^2 T_k(xi_p) B(|v_p - v_q|) |S^{d-1}|
            std::fill(loss_plane.begin(), loss_plane.end(), 0.0);
            std::vector<int> pidx(d);
            for (std::size_t p = 0; p < n; ++p) {
                std::size_t rem = nodes.flat[p];
                for (int l = d - 1; l >= 0; --l) {
                    pidx[l] = static_cast<int>(rem % M);
                    rem /= M;
                }
                double tk = cheb_eval(k_last, nodes.rule.nodes[pidx[d - 1]]);
                for (int l = 0; l < d - 1; ++l) tk *= cheb_eval(k_outer[l], nodes.rule.nodes[pidx[l]]);
                for (std::size_t q = 0; q < n; ++q) {
                    const double speed = detail::distance(nodes.velocity(p), nodes.velocity(q), d);
                    loss_plane[nodes.flat[p] * grid_d + nodes.flat[q]] =
                        tk * nodes.mu_sq[q] * setup.kernel.of_speed(speed) * measure;
                }
            }
            auto loss_sums = cheb_weighted_sums(loss_plane, 2 * d, M, N);
            scale_plane(loss_sums.storage(), 2 * d, N + 1, inv_root_norm, inv_norm_k);
            sink(k_flat, gain_sums.values(), loss_sums.values());
        }
    };

    if (d == 2) {
        for (int k1 = 0; k1 <= N; ++k1) {
            step_axis(0, k1);
            const int ko[1] = {k1};
            emit_last_axis(static_cast<std::size_t>(k1), ko);
        }
    } else {
        for (int k1 = 0; k1 <= N; ++k1) {
            step_axis(0, k1);
            for (int k2 = 0; k2 <= N; ++k2) {
                step_axis(1, k2);
                const int ko[2] = {k1, k2};
                emit_last_axis(static_cast<std::size_t>(k1) * (N + 1) + k2, ko);
            }
        }
    }
    (void)modes;
}

CollisionTensors CollisionTensors::precompute(const DirectSetup& setup, std::size_t memory_cap) {
    check_setup(setup);
    const double needed = direct_memory_bytes(setup.dim, setup.order);
    if (needed > static_cast<double>(memory_cap)) throw MemoryCapExceeded(needed, static_cast<double>(memory_cap));
    CollisionTensors t;
    t.setup_ = setup;
    t.modes_ = ipow(setup.order + 1, setup.dim);
    const std::size_t plane = t.modes_ * t.modes_;
    t.gain_.assign(plane * t.modes_, 0.0);
    t.loss_.assign(plane * t.modes_, 0.0);
    compute_collision_planes(setup, [&](std::size_t k, std::span<const double> gain, std::span<const double> loss) {
        std::copy(gain.begin(), gain.end(), t.gain_.begin() + k * plane);
        std::copy(loss.begin(), loss.end(), t.loss_.begin() + k * plane);
    });
    return t;
}

CubeArray CollisionTensors::contract(const SpectralField& field, bool gain, bool loss) const {
    if (field.dim() != setup_.dim || field.order() != setup_.order || !(field.mapping == setup_.mapping)) {
        throw std::invalid_argument("CollisionTensors: field metadata does not match the tensors");
    }
    const auto& f = field.coeffs.storage();
    CubeArray out(setup_.dim, setup_.order + 1);
    std::vector<double> row(modes_);
    for (std::size_t k = 0; k < modes_; ++k) {
        const double* G = gain_.data() + k * modes_ * modes_;
        const double* L = loss_.data() + k * modes_ * modes_;
        double total = 0.0;
        for (std::size_t i = 0; i < modes_; ++i) {
            if (f[i] == 0.0) continue;
            double s = 0.0;
            const std::size_t off = i * modes_;
            for (std::size_t j = 0; j < modes_; ++j) {
                double a = 0.0;
                if (gain) a += G[off + j];
                if (loss) a -= L[off + j];
                s += a * f[j];
            }
            total += f[i] * s;
        }
        out[k] = total;
    }
    return out;
}

CubeArray CollisionTensors::apply(const SpectralField& field) const { return contract(field, true, true); }
CubeArray CollisionTensors::apply_gain(const SpectralField& field) const { return contract(field, true, false); }

CubeArray CollisionTensors::apply_loss(const SpectralField& field) const {
    CubeArray out = contract(field, false, true);
    out *= -1.0;
    return out;
}

namespace {

constexpr char cache_magic[4] = {'B', 'C', 'H', 'B'};
constexpr std::uint32_t cache_version = 1;

struct CacheHeader {
    std::int32_t dim, order, grid_points, sphere_points, mapping_kind;
    double scale, kernel_c, kernel_lambda;
};

CacheHeader header_of(const DirectSetup& s) {
    return {s.dim,
            s.order,
            s.grid_points,
            s.sphere.size(),
            s.mapping.kind() == MappingKind::Logarithmic ? 0 : 1,
            s.mapping.scale(),
            s.kernel.constant(),
            s.kernel.exponent()};
}

void require_little_endian() {
    if constexpr (std::endian::native != std::endian::little) {
        throw std::runtime_error("tensor cache: only little-endian hosts are supported");
    }
}

template <class T>
void put(std::ostream& os, T value) {
    os.write(reinterpret_cast<const char*>(&value), sizeof value);
}

template <class T>
T get(std::istream& is) {
    T value{};
    is.read(reinterpret_cast<char*>(&value), sizeof value);
    if (!is) throw std::runtime_error("tensor cache: truncated header");
    return value;
}

} // namespace

void CollisionTensors::save(const std::filesystem::path& path) const {
    require_little_endian();
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("tensor cache: cannot open " + path.string() + " for writing");
    const CacheHeader h = header_of(setup_);
    os.write(cache_magic, 4);
    put(os, cache_version);
    put(os, h.dim);
    put(os, h.order);
    put(os, h.grid_points);
    put(os, h.sphere_points);
    put(os, h.mapping_kind);
    put(os, h.scale);
    put(os, h.kernel_c);
    put(os, h.kernel_lambda);
    os.write(reinterpret_cast<const char*>(gain_.data()), static_cast<std::streamsize>(gain_.size() * sizeof(double)));
    os.write(reinterpret_cast<const char*>(loss_.data()), static_cast<std::streamsize>(loss_.size() * sizeof(double)));
    if (!os) throw std::runtime_error("tensor cache: write failed for " + path.string());
}

CollisionTensors CollisionTensors::load(const std::filesystem::path& path, const DirectSetup& expected) {
    require_little_endian();
    check_setup(expected);
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("tensor cache: cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, cache_magic, 4) != 0) throw std::runtime_error("tensor cache: bad magic");
    if (get<std::uint32_t>(is) != cache_version) throw std::runtime_error("tensor cache: unsupported version");
    CacheHeader h{};
    h.dim = get<std::int32_t>(is);
    h.order = get<std::int32_t>(is);
    h.grid_points = get<std::int32_t>(is);
    h.sphere_points = get<std::int32_t>(is);
    h.mapping_kind = get<std::int32_t>(is);
    h.scale = get<double>(is);
    h.kernel_c = get<double>(is);
    h.kernel_lambda = get<double>(is);
    const CacheHeader want = header_of(expected);
    auto mismatch = [](const char* what) {
        return std::runtime_error(std::string("tensor cache: header mismatch in ") + what);
    };
    if (h.dim != want.dim) throw mismatch("dim");
    if (h.order != want.order) throw mismatch("N");
    if (h.grid_points != want.grid_points) throw mismatch("M_v");
    if (h.sphere_points != want.sphere_points) throw mismatch("M_sigma");
    if (h.mapping_kind != want.mapping_kind) throw mismatch("mapping");
    if (h.scale != want.scale) throw mismatch("S");
    if (h.kernel_c != want.kernel_c || h.kernel_lambda != want.kernel_lambda) throw mismatch("kernel");

    CollisionTensors t;
    t.setup_ = expected;
    t.modes_ = ipow(expected.order + 1, expected.dim);
    const std::size_t total = t.modes_ * t.modes_ * t.modes_;
    t.gain_.resize(total);
    t.loss_.resize(total);
    is.read(reinterpret_cast<char*>(t.gain_.data()), static_cast<std::streamsize>(total * sizeof(double)));
    is.read(reinterpret_cast<char*>(t.loss_.data()), static_cast<std::streamsize>(total * sizeof(double)));
    if (!is) throw std::runtime_error("tensor cache: truncated payload");
    if (is.peek() != std::char_traits<char>::eof()) throw std::runtime_error("tensor cache: trailing bytes");
    return t;
}

double PackedCollisionOperator::memory_bytes(int dim, int order) {
    const double m = std::pow(static_cast<double>(order + 1), dim);
    return m * m * (m + 1) / 2 * sizeof(double);
}

PackedCollisionOperator PackedCollisionOperator::precompute(const DirectSetup& setup, std::size_t memory_cap) {
    check_setup(setup);
    const double needed = memory_bytes(setup.dim, setup.order);
    if (needed > static_cast<double>(memory_cap)) throw MemoryCapExceeded(needed, static_cast<double>(memory_cap));
    PackedCollisionOperator op;
    op.setup_ = setup;
    const std::size_t m = ipow(setup.order + 1, setup.dim);
    op.modes_ = m;
    const std::size_t tri = m * (m + 1) / 2;
    op.packed_.assign(m * tri, 0.0);
    compute_collision_planes(setup, [&](std::size_t k, std::span<const double> gain, std::span<const double> loss) {
        double* out = op.packed_.data() + k * tri;
        std::size_t c = 0;
        for (std::size_t i = 0; i < m; ++i) {
            out[c++] = gain[i * m + i] - loss[i * m + i];
            for (std::size_t j = i + 1; j < m; ++j) {
                out[c++] = (gain[i * m + j] - loss[i * m + j]) + (gain[j * m + i] - loss[j * m + i]);
            }
        }
    });
    return op;
}

CubeArray PackedCollisionOperator::apply(const SpectralField& field) const {
    if (field.dim() != setup_.dim || field.order() != setup_.order || !(field.mapping == setup_.mapping)) {
        throw std::invalid_argument("PackedCollisionOperator: field metadata does not match");
    }
    const auto& f = field.coeffs.storage();
    const std::size_t m = modes_;
    const std::size_t tri = m * (m + 1) / 2;
    std::vector<double> products(tri);
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) products[c++] = f[i] * f[j];
    }
    CubeArray out(setup_.dim, setup_.order + 1);
    for (std::size_t k = 0; k < m; ++k) {
        const double* row = packed_.data() + k * tri;
        double s = 0.0;
        for (std::size_t t = 0; t < tri; ++t) s += row[t] * products[t];
        out[k] = s;
    }
    return out;
}

} // namespace mcboltz
