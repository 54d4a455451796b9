#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mcboltz/basis.hpp"
#include "mcboltz/cube_array.hpp"
#include "mcboltz/kernel.hpp"
#include "mcboltz/mapping.hpp"
#include "mcboltz/sphere.hpp"

namespace mcboltz {

inline constexpr std::size_t default_memory_cap = std::size_t{8} << 30;

/// Bytes needed by the two dense tensors: 2 (N+1)^{3d} doubles.
[[nodiscard]] double direct_memory_bytes(int dim, int order);

/// Raised when a precomputation would exceed its memory cap.
class MemoryCapExceeded : public std::runtime_error {
public:
    MemoryCapExceeded(double needed, double cap);
    [[nodiscard]] double needed() const noexcept { return needed_; }
    [[nodiscard]] double cap() const noexcept { return cap_; }

private:
    double needed_;
    double cap_;
};

/// Geometry shared by every direct-algorithm object.
struct DirectSetup {
    int dim = 2;
    int order = 0;
    int grid_points = 0;
    Mapping mapping{MappingKind::Logarithmic, 1.0};
    Kernel kernel{1.0, 0.0};
    SphereRule sphere;
};

/// Called once per output index k (flat over (N+1)^d) with the gain and loss
/// planes, each (N+1)^d x (N+1)^d row-major in (i, j).
using PlaneSink = std::function<void(std::size_t k, std::span<const double> gain, std::span<const double> loss)>;

/// Computes every (gain, loss) plane of the collision tensors, k-outermost.
/// Requires grid_points >= order + 2 and dim in {2, 3}.
void compute_collision_planes(const DirectSetup& setup, const PlaneSink& sink);

/// Dense tensors  gain(k, i, j), loss(k, i, j)  with
///   Q_k = sum_{i,j} f_i f_j [gain(k,i,j) - loss(k,i,j)].
class CollisionTensors {
public:
    /// Throws MemoryCapExceeded before allocating when the estimate exceeds `memory_cap`.
    [[nodiscard]] static CollisionTensors precompute(const DirectSetup& setup,
                                                     std::size_t memory_cap = default_memory_cap);

    /// Binary cache: magic "BCHB", version, d, N, M_v, M_sigma, mapping kind,
    /// S, kernel (C, lambda), then little-endian doubles, gain then loss, k-major.
    void save(const std::filesystem::path& path) const;
    /// Throws std::runtime_error on a malformed file or when the header does not match `expected`.
    [[nodiscard]] static CollisionTensors load(const std::filesystem::path& path, const DirectSetup& expected);

    [[nodiscard]] const DirectSetup& setup() const noexcept { return setup_; }
    [[nodiscard]] std::span<const double> gain_tensor() const noexcept { return gain_; }
    [[nodiscard]] std::span<const double> loss_tensor() const noexcept { return loss_; }
    [[nodiscard]] std::size_t modes() const noexcept { return modes_; }

    /// Q coefficients; throws std::invalid_argument on a metadata mismatch.
    [[nodiscard]] CubeArray apply(const SpectralField& field) const;
    [[nodiscard]] CubeArray apply_gain(const SpectralField& field) const;
    [[nodiscard]] CubeArray apply_loss(const SpectralField& field) const;

private:
    CubeArray contract(const SpectralField& field, bool gain, bool loss) const;

    DirectSetup setup_;
    std::size_t modes_ = 0;  // (N+1)^d
    std::vector<double> gain_;
    std::vector<double> loss_;
};

/// Symmetric packed form of gain - loss: for each k only i <= j is kept, so
/// memory is about a quarter of the two dense tensors. Same results as
/// CollisionTensors::apply up to rounding.
class PackedCollisionOperator {
public:
    [[nodiscard]] static PackedCollisionOperator precompute(const DirectSetup& setup,
                                                            std::size_t memory_cap = default_memory_cap);
    [[nodiscard]] static double memory_bytes(int dim, int order);

    [[nodiscard]] const DirectSetup& setup() const noexcept { return setup_; }
    [[nodiscard]] CubeArray apply(const SpectralField& field) const;

private:
    DirectSetup setup_;
    std::size_t modes_ = 0;
    std::vector<double> packed_;  // [k][i <= j]
};

} // namespace mcboltz
