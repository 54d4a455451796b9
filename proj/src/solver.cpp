#include "mcboltz/solver.hpp"

#include <cmath>
#include <cstdio>

namespace mcboltz {

namespace {

void check_state(const CubeArray& a, const char* stage) {
    for (double x : a.values()) {
        if (!std::isfinite(x)) throw BlowUp(std::string("non-finite state after RK4 stage ") + stage);
    }
}

SpectralField shifted(const SpectralField& f, double h, const CubeArray& k) {
    SpectralField out = f;
    out.coeffs.axpy(h, k);
    return out;
}

std::string format17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

void EvolutionConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("evolution: dt must be positive");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("evolution: t_end must be nonnegative");
    if (cadence < 1) throw std::invalid_argument("evolution: cadence must be at least 1");
}

SpectralField init(const PointFunction& f0, int dim, int order, int grid_points, const Mapping& m) {
    return project(f0, dim, order, grid_points, m);
}

SpectralField step_rk4(const SpectralField& field, const CollisionEvaluator& rhs, double dt) {
    const CubeArray k1 = rhs(field);
    check_state(k1, "1");
    const CubeArray k2 = rhs(shifted(field, 0.5 * dt, k1));
    check_state(k2, "2");
    const CubeArray k3 = rhs(shifted(field, 0.5 * dt, k2));
    check_state(k3, "3");
    const CubeArray k4 = rhs(shifted(field, dt, k3));
    check_state(k4, "4");
    SpectralField out = field;
    auto& c = out.coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    check_state(c, "update");
    return out;
}

Moments field_moments(const SpectralField& field, int grid_points) {
    return moments(reconstruct(field, grid_points), cgl_rule(grid_points));
}

EvolutionTrace evolve(SpectralField field, const CollisionEvaluator& rhs, const EvolutionConfig& config,
                      int grid_points, const EvolutionMonitor& monitor) {
    config.validate();
    EvolutionTrace trace;
    trace.dim = field.dim();
    auto record = [&](double t) {
        TraceRecord r{t, field_moments(field, grid_points)};
        trace.records.push_back(r);
        if (config.keep_snapshots) trace.snapshots.push_back(field);
        if (monitor) monitor(r, field);
    };
    record(0.0);
    const double ratio = config.t_end / config.dt;
    long steps = static_cast<long>(std::floor(ratio + 1e-9));
    const bool partial = config.t_end - steps * config.dt > 1e-12 * std::max(1.0, config.t_end);
    const long total = steps + (partial ? 1 : 0);
    for (long s = 1; s <= total; ++s) {
        const double t_prev = (s - 1) * config.dt;
        const double t_next = (s == total) ? config.t_end : s * config.dt;
        field = step_rk4(field, rhs, t_next - t_prev);
        for (double x : field.coeffs.values()) {
            if (std::abs(x) > blow_up_bound) {
                throw BlowUp("coefficient magnitude above 1e12 at t = " + format17(t_next));
            }
        }
        if (s % config.cadence == 0 || s == total) record(t_next);
    }
    return trace;
}

std::string trace_csv_header(int dim) {
    const char* axis = "xyz";
    std::string h = "t,rho";
    for (int i = 0; i < dim; ++i) h += std::string(",U") + axis[i];
    h += ",E";
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) h += ",P" + std::to_string(i + 1) + std::to_string(j + 1);
    }
    for (int i = 0; i < dim; ++i) h += ",q" + std::to_string(i + 1);
    return h;
}

void write_trace_csv(std::ostream& os, const EvolutionTrace& trace) {
    const int d = trace.dim;
    os << trace_csv_header(d) << '\n';
    for (const auto& r : trace.records) {
        const auto& m = r.moments;
        os << format17(r.t) << ',' << format17(m.rho);
        for (int i = 0; i < d; ++i) os << ',' << format17(m.U[i]);
        os << ',' << format17(m.E);
        for (int i = 0; i < d; ++i) {
            for (int j = i; j < d; ++j) os << ',' << format17(m.P[i * d + j]);
        }
        for (int i = 0; i < d; ++i) os << ',' << format17(m.q[i]);
        os << '\n';
    }
}

} // namespace mcboltz
