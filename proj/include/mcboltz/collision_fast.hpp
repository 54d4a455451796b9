#pragma once

#include <cstddef>
#include <memory>

#include "mcboltz/basis.hpp"
#include "mcboltz/cube_array.hpp"
#include "mcboltz/kernel.hpp"
#include "mcboltz/mapping.hpp"
#include "mcboltz/sphere.hpp"

namespace mcboltz {

struct FastOptions {
    double epsilon = 1e-14;
    int threads = 1;
    /// Sum per-direction partial results in direction order, independent of the thread count.
    bool deterministic = true;
    /// Post-collision angles and geometric factors are cached across
    /// evaluations when they fit in this many bytes; 0 disables the cache.
    std::size_t geometry_cache_bytes = std::size_t{1} << 30;
};

/// Gain and loss coefficients of the collision operator in the test basis.
struct CollisionParts {
    CubeArray gain;
    CubeArray loss;
};

/// NUFFT-based evaluator of Q_k = int Q(f, f) test_k dv for d = 2, 3.
///
/// The gain term issues one type-1 NUFFT per (direction, velocity node); the
/// quadrature runs over the interior CGL nodes (endpoint nodes carry f = 0).
/// Not safe for concurrent calls on one workspace; internal threads follow
/// FastOptions::threads.
class FastWorkspace {
public:
    FastWorkspace(int dim, int order, int grid_points, const Mapping& m, const Kernel& kernel, SphereRule sphere,
                  FastOptions options = {});
    ~FastWorkspace();
    FastWorkspace(FastWorkspace&&) noexcept;
    FastWorkspace& operator=(FastWorkspace&&) noexcept;

    [[nodiscard]] int dim() const noexcept;
    [[nodiscard]] int order() const noexcept;
    [[nodiscard]] int grid_points() const noexcept;
    [[nodiscard]] const Mapping& mapping() const noexcept;
    [[nodiscard]] const Kernel& kernel() const noexcept;
    [[nodiscard]] const SphereRule& sphere() const noexcept;
    [[nodiscard]] bool geometry_cached() const noexcept;

    /// Throws std::invalid_argument when the grid does not match the workspace.
    [[nodiscard]] CubeArray gain(const GridField& grid);
    [[nodiscard]] CubeArray loss(const GridField& grid) const;
    [[nodiscard]] CollisionParts parts(const SpectralField& field);
    /// gain - loss.
    [[nodiscard]] CubeArray evaluate(const SpectralField& field);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace mcboltz
