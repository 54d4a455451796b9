#pragma once

#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcboltz/basis.hpp"
#include "mcboltz/cube_array.hpp"

namespace mcboltz {

/// Right-hand side of the coefficient ODE d/dt f_k = Q_k(f).
using CollisionEvaluator = std::function<CubeArray(const SpectralField&)>;

enum class EvaluatorKind { Direct, Fast };

struct EvolutionConfig {
    double dt = 0.02;
    double t_end = 5.0;
    EvaluatorKind evaluator = EvaluatorKind::Fast;
    int cadence = 1;             // record every `cadence` steps (and always the last step)
    bool deterministic = true;
    bool keep_snapshots = false; // store the coefficients at each record

    /// Throws std::invalid_argument unless dt > 0, t_end >= 0 and cadence >= 1.
    void validate() const;
};

struct TraceRecord {
    double t = 0.0;
    Moments moments;
};

/// Moment history. Mass and energy are conserved by the scheme under the
/// algebraic mapping; momentum U is monitored, not conserved.
struct EvolutionTrace {
    int dim = 2;
    std::vector<TraceRecord> records;
    std::vector<SpectralField> snapshots;
    static constexpr bool momentum_conserved = false;
};

/// Any |f_k| above this bound counts as a blow-up.
inline constexpr double blow_up_bound = 1e12;

class BlowUp : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Initial coefficients: the projection of f0.
[[nodiscard]] SpectralField init(const PointFunction& f0, int dim, int order, int grid_points, const Mapping& m);

/// One classical RK4 step. Throws BlowUp naming the stage when a stage produces a non-finite state.
[[nodiscard]] SpectralField step_rk4(const SpectralField& field, const CollisionEvaluator& rhs, double dt);

/// Called after each recorded step; may be empty.
using EvolutionMonitor = std::function<void(const TraceRecord&, const SpectralField&)>;

/// Integrates from t = 0 to t_end with steps of dt (the last step is shortened when
/// t_end is not a multiple of dt). Moments use the CGL grid with `grid_points` nodes.
[[nodiscard]] EvolutionTrace evolve(SpectralField field, const CollisionEvaluator& rhs, const EvolutionConfig& config,
                                    int grid_points, const EvolutionMonitor& monitor = {});

/// Moments of a field on the CGL grid with `grid_points` nodes.
[[nodiscard]] Moments field_moments(const SpectralField& field, int grid_points);

/// CSV header t,rho,Ux,Uy[,Uz],E,P11,P12,...,q1,q2[,q3] (P upper triangle row by row).
[[nodiscard]] std::string trace_csv_header(int dim);
/// One row per record with 17 significant digits and LF endings, header first.
void write_trace_csv(std::ostream& os, const EvolutionTrace& trace);

} // namespace mcboltz
