// mcboltz: batch driver for collision-operator accuracy runs, time evolution,
// timing benchmarks and a quick self test.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcboltz/basis.hpp"
#include "mcboltz/collision_direct.hpp"
#include "mcboltz/collision_fast.hpp"
#include "mcboltz/kernel.hpp"
#include "mcboltz/mapping.hpp"
#include "mcboltz/nufft.hpp"
#include "mcboltz/oracles.hpp"
#include "mcboltz/solver.hpp"
#include "mcboltz/sphere.hpp"

using namespace mcboltz;

namespace {

constexpr int exit_config = 2;
constexpr int exit_blow_up = 3;

/// Invalid combination of flags; reported with the usage text.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    int dim = 2;
    std::vector<int> orders;
    int grid_points = 0;   // 0: N + 2
    int sphere_points = 0; // 0: N in 2D, 38 in 3D
    std::string mapping;
    std::vector<double> scales;
    std::vector<double> widths;
    std::string kernel;
    double epsilon = 1e-14;
    double dt = 0.02;
    double t_end = 5.0;
    double t = 0.0;  // 0: 2 in 2D, 6.5 in 3D
    std::string evaluator = "fast";
    std::string out;
    std::uint64_t seed = 1;
    int threads = 1;
    bool deterministic = true;
    std::string tensor_cache;
    int reps = 3;
    std::string oracle = "none";
    std::string initial;
    int init_points = 0;
    bool quick = false;
};

std::string num(double x) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, r.ptr};
}

double bkw_time(const Options& o) { return o.t > 0.0 ? o.t : (o.dim == 2 ? 2.0 : 6.5); }

int grid_points_for(const Options& o, int N) {
    if (o.grid_points == 0) return N + 2;
    if (o.grid_points < N + 2) throw ConfigError("--Mv must be at least N + 2");
    return o.grid_points;
}

int sphere_points_for(const Options& o, int N) {
    if (o.sphere_points > 0) return o.sphere_points;
    return o.dim == 2 ? N : 38;
}

Kernel kernel_for(const Options& o) {
    if (o.kernel.empty()) return Kernel::maxwell(o.dim);
    return Kernel::parse(o.kernel);
}

FastOptions fast_options(const Options& o) {
    FastOptions f;
    f.epsilon = o.epsilon;
    f.threads = o.threads;
    f.deterministic = o.deterministic;
    return f;
}

struct ScaleChoice {
    double S;
    double L;  // image of the second-largest node
};

std::vector<ScaleChoice> scale_choices(const Options& o, MappingKind kind, int M, std::optional<double> default_L,
                                       double default_S) {
    std::vector<ScaleChoice> out;
    const double node = std::cos(std::numbers::pi / (M - 1));
    if (!o.scales.empty()) {
        for (double S : o.scales) out.push_back({S, Mapping(kind, S).forward(node)});
    } else if (!o.widths.empty()) {
        for (double L : o.widths) out.push_back({adaptive_scale(kind, L, M), L});
    } else if (default_L) {
        out.push_back({adaptive_scale(kind, *default_L, M), *default_L});
    } else {
        out.push_back({default_S, Mapping(kind, default_S).forward(node)});
    }
    return out;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw ConfigError("cannot open --out " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

/// Dense tensors, loaded from or saved to the cache path when one is given.
CollisionTensors direct_tensors(const DirectSetup& setup, const std::string& cache) {
    if (!cache.empty() && std::filesystem::exists(cache)) {
        try {
            return CollisionTensors::load(cache, setup);
        } catch (const std::runtime_error& e) {
            throw ConfigError(std::string("--tensor-cache: ") + e.what());
        }
    }
    CollisionTensors t = CollisionTensors::precompute(setup);
    if (!cache.empty()) t.save(cache);
    return t;
}

void check_common(const Options& o) {
    if (o.dim != 2 && o.dim != 3) throw ConfigError("--dim must be 2 or 3");
    for (int N : o.orders) {
        if (N < 1) throw ConfigError("--N entries must be positive");
    }
    if (o.grid_points < 0 || o.sphere_points < 0) throw ConfigError("--Mv and --Msigma must be positive");
    if (o.threads < 1) throw ConfigError("--threads must be positive");
    if (!(o.epsilon > 0.0 && o.epsilon < 1.0)) throw ConfigError("--epsilon must lie in (0, 1)");
    for (double S : o.scales) {
        if (!(S > 0.0)) throw ConfigError("--S entries must be positive");
    }
    for (double L : o.widths) {
        if (!(L > 0.0)) throw ConfigError("--L entries must be positive");
    }
}

// ---------------------------------------------------------------- eval-collision

int eval_collision(Options o) {
    if (o.orders.empty()) o.orders = {16};
    check_common(o);
    const MappingKind kind = parse_mapping_kind(o.mapping.empty() ? "log" : o.mapping);
    const Kernel kernel = kernel_for(o);
    if (!(kernel == Kernel::maxwell(o.dim))) {
        throw ConfigError("eval-collision compares against the BKW operator and needs --kernel maxwell" +
                          std::to_string(o.dim) + "d");
    }
    const std::size_t runs = o.orders.size() * std::max<std::size_t>(1, o.scales.size() + o.widths.size());
    if (!o.tensor_cache.empty() && runs != 1) throw ConfigError("--tensor-cache needs a single configuration");

    const BkwParams bp{o.dim, bkw_time(o)};
    const ErrorGrid grid{o.dim == 2 ? 200 : 30, 6.3};
    Output out(o.out);
    std::ostream& os = out.stream();
    os << "dim,N,Mv,Msigma,mapping,S,L,kernel,evaluator,epsilon,t,l2,l2_plain,linf\n";

    for (int N : o.orders) {
        const int M = grid_points_for(o, N);
        const int msig = sphere_points_for(o, N);
        const SphereRule sphere = sphere_rule(o.dim, msig);
        for (const ScaleChoice& sc : scale_choices(o, kind, M, o.dim == 2 ? 8.83 : 6.62, 1.0)) {
            const Mapping m(kind, sc.S);
            const SpectralField f =
                project([&](std::span<const double> v) { return bkw_f(bp, v); }, o.dim, N, M, m);
            CubeArray q;
            if (o.evaluator == "direct") {
                q = direct_tensors({o.dim, N, M, m, kernel, sphere}, o.tensor_cache).apply(f);
            } else {
                FastWorkspace ws(o.dim, N, M, m, kernel, sphere, fast_options(o));
                q = ws.evaluate(f);
            }
            for (double x : q.values()) {
                if (!std::isfinite(x)) throw BlowUp("non-finite collision coefficient");
            }
            const FieldError e = expansion_error({m, q}, [&](std::span<const double> v) { return bkw_q(bp, v); }, grid);
            os << o.dim << ',' << N << ',' << M << ',' << msig << ',' << to_string(kind) << ',' << num(sc.S) << ','
               << num(sc.L) << ',' << kernel.describe() << ',' << o.evaluator << ',' << num(o.epsilon) << ','
               << num(bp.t) << ',' << num(e.l2) << ',' << num(e.l2_plain) << ',' << num(e.linf) << '\n';
            os.flush();
        }
    }
    return 0;
}

// ---------------------------------------------------------------- evolve

int evolve_cmd(Options o) {
    if (o.orders.empty()) o.orders = {16};
    check_common(o);
    if (o.orders.size() != 1 || o.scales.size() > 1 || o.widths.size() > 1) {
        throw ConfigError("evolve takes a single N and a single S or L");
    }
    const int N = o.orders[0];
    const int M = grid_points_for(o, N);
    const MappingKind kind = parse_mapping_kind(o.mapping.empty() ? "alg" : o.mapping);
    const Mapping m(kind, scale_choices(o, kind, M, std::nullopt, 3.0).front().S);
    const Kernel kernel = kernel_for(o);
    const std::string initial = o.initial.empty() ? (o.dim == 2 ? "two-gaussian" : "bkw") : o.initial;
    if (initial != "two-gaussian" && initial != "bkw") throw ConfigError("--init must be two-gaussian or bkw");
    if (initial == "two-gaussian" && o.dim != 2) throw ConfigError("the two-Gaussian datum is 2D only");
    if (o.oracle != "none" && o.oracle != initial) throw ConfigError("--oracle must match --init");
    if (o.oracle != "none" && !(kernel == Kernel::maxwell(o.dim))) {
        throw ConfigError("the exact solutions assume --kernel maxwell" + std::to_string(o.dim) + "d");
    }
    const int init_points = o.init_points > 0 ? o.init_points : std::max(M, o.dim == 2 ? 128 : 64);
    if (init_points < N + 1) throw ConfigError("--Minit must be at least N + 1");

    EvolutionConfig cfg;
    cfg.dt = o.dt;
    cfg.t_end = o.t_end;
    cfg.deterministic = o.deterministic;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    const double t0 = bkw_time(o);
    const PointFunction f0 = initial == "two-gaussian"
                                 ? PointFunction(two_gaussian_f0)
                                 : PointFunction([&](std::span<const double> v) { return bkw_f({o.dim, t0}, v); });
    const SpectralField start = init(f0, o.dim, N, init_points, m);

    const SphereRule sphere = sphere_rule(o.dim, sphere_points_for(o, N));
    CollisionEvaluator rhs;
    std::unique_ptr<FastWorkspace> fast;
    std::unique_ptr<PackedCollisionOperator> packed;
    std::unique_ptr<CollisionTensors> dense;
    const DirectSetup setup{o.dim, N, M, m, kernel, sphere};
    if (o.evaluator == "fast") {
        fast = std::make_unique<FastWorkspace>(o.dim, N, M, m, kernel, sphere, fast_options(o));
        rhs = [&](const SpectralField& g) { return fast->evaluate(g); };
    } else if (!o.tensor_cache.empty()) {
        dense = std::make_unique<CollisionTensors>(direct_tensors(setup, o.tensor_cache));
        rhs = [&](const SpectralField& g) { return dense->apply(g); };
    } else {
        packed = std::make_unique<PackedCollisionOperator>(PackedCollisionOperator::precompute(setup));
        rhs = [&](const SpectralField& g) { return packed->apply(g); };
    }

    Output out(o.out);
    std::ostream& os = out.stream();
    os << trace_csv_header(o.dim);
    if (o.oracle == "two-gaussian") os << ",P11_err,P12_err,P22_err,q1_err,q2_err";
    if (o.oracle == "bkw") os << ",f_l2,f_linf";
    os << '\n';
    const ErrorGrid grid{o.dim == 2 ? 200 : 30, 6.3};
    const int d = o.dim;
    auto write_row = [&](const TraceRecord& r, const SpectralField& field) {
        const Moments& mo = r.moments;
        os << num(r.t) << ',' << num(mo.rho);
        for (int i = 0; i < d; ++i) os << ',' << num(mo.U[i]);
        os << ',' << num(mo.E);
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) os << ',' << num(mo.P[i * d + j]);
        for (int i = 0; i < d; ++i) os << ',' << num(mo.q[i]);
        if (o.oracle == "two-gaussian") {
            const TwoGaussianMoments ex = two_gaussian_moments(r.t);
            os << ',' << num(mo.P[0] - ex.P11) << ',' << num(mo.P[1] - ex.P12) << ',' << num(mo.P[3] - ex.P22)
               << ',' << num(mo.q[0] - ex.q1) << ',' << num(mo.q[1] - ex.q2);
        }
        if (o.oracle == "bkw") {
            const BkwParams bp{d, t0 + r.t};
            const FieldError e = expansion_error(field, [&](std::span<const double> v) { return bkw_f(bp, v); }, grid);
            os << ',' << num(e.l2) << ',' << num(e.linf);
        }
        os << '\n';
        os.flush();
    };
    (void)evolve(start, rhs, cfg, M, write_row);
    return 0;
}

// ---------------------------------------------------------------- bench

int bench(Options o) {
    if (o.orders.empty()) o.orders = {8, 16, 32};
    check_common(o);
    if (o.reps < 1) throw ConfigError("--reps must be positive");
    const MappingKind kind = parse_mapping_kind(o.mapping.empty() ? "log" : o.mapping);
    const Kernel kernel = kernel_for(o);
    using clock = std::chrono::steady_clock;
    const auto seconds = [](clock::time_point a) { return std::chrono::duration<double>(clock::now() - a).count(); };

    nlohmann::json results = nlohmann::json::array();
    std::vector<double> xs, ys;
    for (int N : o.orders) {
        const int M = grid_points_for(o, N);
        const int msig = sphere_points_for(o, N);
        const Mapping m(kind, scale_choices(o, kind, M, o.dim == 2 ? 8.83 : 6.62, 1.0).front().S);
        const SphereRule sphere = sphere_rule(o.dim, msig);
        nlohmann::json entry = {{"N", N}, {"Mv", M}, {"Msigma", msig}};

        std::mt19937_64 eng(o.seed);
        std::uniform_real_distribution<double> coef(-1.0, 1.0);
        SpectralField f = SpectralField::zeros(o.dim, N, m);
        for (double& c : f.coeffs.storage()) c = coef(eng);

        std::vector<double> times;
        if (o.evaluator == "direct") {
            const double need = direct_memory_bytes(o.dim, N);
            if (need > static_cast<double>(default_memory_cap)) {
                entry["error"] = "memory cap exceeded";
                entry["needed_bytes"] = need;
                entry["cap_bytes"] = static_cast<double>(default_memory_cap);
                results.push_back(entry);
                continue;
            }
            const auto t0 = clock::now();
            const CollisionTensors t = CollisionTensors::precompute({o.dim, N, M, m, kernel, sphere});
            entry["precompute_seconds"] = seconds(t0);
            for (int r = 0; r < o.reps; ++r) {
                const auto a = clock::now();
                (void)t.apply_gain(f);
                times.push_back(seconds(a));
            }
        } else {
            FastWorkspace ws(o.dim, N, M, m, kernel, sphere, fast_options(o));
            const GridField grid = reconstruct(f, M);
            (void)ws.gain(grid);  // warm-up, fills the geometry cache
            for (int r = 0; r < o.reps; ++r) {
                const auto a = clock::now();
                (void)ws.gain(grid);
                times.push_back(seconds(a));
            }
        }
        std::vector<double> sorted = times;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t h = sorted.size() / 2;
        const double median = sorted.size() % 2 ? sorted[h] : 0.5 * (sorted[h - 1] + sorted[h]);
        entry["seconds"] = times;
        entry["median_seconds"] = median;
        results.push_back(entry);
        xs.push_back(std::log(static_cast<double>(N)));
        ys.push_back(std::log(median));
    }

    nlohmann::json doc = {{"command", "bench"},
                          {"dim", o.dim},
                          {"evaluator", o.evaluator},
                          {"mapping", to_string(kind)},
                          {"kernel", kernel.describe()},
                          {"reps", o.reps},
                          {"results", results}};
    doc["slope"] = nullptr;
    if (xs.size() >= 2) {
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        if (sxx > 0.0) doc["slope"] = sxy / sxx;
    }
    Output out(o.out);
    out.stream() << doc.dump(2) << '\n';
    return 0;
}

// ---------------------------------------------------------------- selftest

struct CheckLine {
    std::string module;
    std::string invariant;
    double worst;
    double limit;
};

CheckLine nufft_check(int dim, std::mt19937_64& eng) {
    const int N = dim == 3 ? 6 : 16;
    std::uniform_real_distribution<double> pos(0.0, std::numbers::pi), val(-1.0, 1.0);
    NufftPlan plan(dim, N, 1e-14);
    double worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> pts(static_cast<std::size_t>(200) * dim);
        std::vector<std::complex<double>> q(200);
        double total = 0.0;
        for (double& x : pts) x = pos(eng);
        for (auto& c : q) {
            c = {val(eng), val(eng)};
            total += std::abs(c);
        }
        std::vector<std::complex<double>> fast(plan.full_size());
        plan.execute(pts, q, fast);
        const auto exact = nufft_direct_sum(dim, N, pts, q);
        for (std::size_t i = 0; i < fast.size(); ++i) worst = std::max(worst, std::abs(fast[i] - exact[i]) / total);
    }
    return {"nufft", "direct sum d=" + std::to_string(dim), worst, 1e-12};
}

// trial_j * test_k * dv/dxi / omega on one axis, with the analytic limit at the endpoints
double gram_factor(int j, int k, double xi, const Mapping& m) {
    if (std::abs(xi) == 1.0) return cheb_eval(j, xi) * cheb_eval(k, xi) / std::sqrt(norm_const(j) * norm_const(k));
    const double v = m.forward(xi);
    const int jj[1] = {j}, kk[1] = {k};
    const double vv[1] = {v};
    return trial_eval(jj, vv, m) * test_eval(kk, vv, m) * m.jacobian(xi) * std::sqrt(1.0 - xi * xi);
}

CheckLine biorthonormality_check(MappingKind kind) {
    const Mapping m(kind, 1.7);
    double worst = 0.0;
    for (int N : {4, 8, 16}) {
        const CglRule r = cgl_rule(N + 2);
        for (int j = 0; j <= N; ++j)
            for (int k = 0; k <= N; ++k) {
                double s = 0.0;
                for (std::size_t p = 0; p < r.nodes.size(); ++p) s += r.weights[p] * gram_factor(j, k, r.nodes[p], m);
                worst = std::max(worst, std::abs(s - (j == k ? 1.0 : 0.0)));
            }
    }
    return {"basis", "biorthonormality " + to_string(kind), worst, 1e-10};
}

CheckLine cross_check(int dim, MappingKind kind, const Kernel& kernel, std::mt19937_64& eng) {
    const int N = dim == 2 ? 4 : 3;
    const Mapping m(kind, 1.5);
    const DirectSetup s{dim, N, N + 2, m, kernel, dim == 2 ? circle_rule(N) : lebedev_rule(14)};
    const CollisionTensors t = CollisionTensors::precompute(s);
    FastWorkspace ws(dim, N, N + 2, m, kernel, s.sphere);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    double worst = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
        SpectralField f = SpectralField::zeros(dim, N, m);
        for (double& c : f.coeffs.storage()) c = val(eng);
        const CubeArray a = t.apply(f), b = ws.evaluate(f);
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return {"collision", "direct vs fast d=" + std::to_string(dim) + " " + to_string(kind) + " " + kernel.describe(),
            worst, 1e-8};
}

int selftest(const Options& o) {
    std::mt19937_64 eng(o.seed);
    std::vector<CheckLine> lines;
    for (int dim : {1, 2, 3}) {
        if (dim == 3 && o.quick) continue;
        lines.push_back(nufft_check(dim, eng));
    }
    for (MappingKind kind : {MappingKind::Logarithmic, MappingKind::Algebraic}) {
        lines.push_back(biorthonormality_check(kind));
        for (const Kernel& k : {Kernel::maxwell(2), Kernel(1.0, 1.0)}) lines.push_back(cross_check(2, kind, k, eng));
    }
    if (!o.quick) lines.push_back(cross_check(3, MappingKind::Logarithmic, Kernel::maxwell(3), eng));

    Output out(o.out);
    std::ostream& os = out.stream();
    int failed = 0;
    for (const CheckLine& c : lines) {
        const bool ok = c.worst <= c.limit;
        failed += ok ? 0 : 1;
        os << (ok ? "PASS " : "FAIL ") << c.module << ": " << c.invariant << ": worst " << num(c.worst) << " (limit "
           << num(c.limit) << ")\n";
    }
    os << (failed == 0 ? "selftest passed" : "selftest failed: " + std::to_string(failed) + " check(s)") << '\n';
    return failed == 0 ? 0 : 1;
}

void add_shared(CLI::App* sub, Options& o) {
    sub->add_option("--dim", o.dim, "velocity dimension (2 or 3)");
    sub->add_option("--N", o.orders, "truncation order(s), comma separated")->delimiter(',');
    sub->add_option("--Mv", o.grid_points, "CGL points per axis (default N + 2)");
    sub->add_option("--Msigma", o.sphere_points, "sphere points (default N in 2D, 38 in 3D)");
    sub->add_option("--mapping", o.mapping, "log or alg");
    auto* s = sub->add_option("--S", o.scales, "mapping scale(s), comma separated")->delimiter(',');
    auto* l = sub->add_option("--L", o.widths, "adaptive half width(s), comma separated")->delimiter(',');
    s->excludes(l);
    sub->add_option("--kernel", o.kernel, "maxwell2d, maxwell3d or vhs:<C>:<lambda>");
    sub->add_option("--epsilon", o.epsilon, "NUFFT precision");
    sub->add_option("--evaluator", o.evaluator, "direct or fast")->check(CLI::IsMember({"direct", "fast"}));
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--threads", o.threads, "evaluator threads");
    sub->add_flag("--deterministic,!--no-deterministic", o.deterministic,
                  "fixed reduction order (default on)");
    sub->add_option("--tensor-cache", o.tensor_cache, "direct evaluator tensor cache file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral solver for the homogeneous Boltzmann collision operator"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval-collision", "BKW collision operator error");
    add_shared(eval, o);
    eval->add_option("--t", o.t, "BKW time (default 2 in 2D, 6.5 in 3D)");

    auto* evo = app.add_subcommand("evolve", "RK4 time evolution, moment trace as CSV");
    add_shared(evo, o);
    evo->add_option("--dt", o.dt, "time step");
    evo->add_option("--t-end", o.t_end, "final time");
    evo->add_option("--t", o.t, "start time of the BKW datum");
    evo->add_option("--init", o.initial, "two-gaussian (2D default) or bkw (3D default)");
    evo->add_option("--oracle", o.oracle, "none, two-gaussian or bkw")
        ->check(CLI::IsMember({"none", "two-gaussian", "bkw"}));
    evo->add_option("--Minit", o.init_points, "CGL points for projecting the initial datum");

    auto* ben = app.add_subcommand("bench", "gain evaluation timings as JSON");
    add_shared(ben, o);
    ben->add_option("--reps", o.reps, "timed repetitions per N");

    auto* self = app.add_subcommand("selftest", "quick consistency checks");
    self->add_option("--seed", o.seed, "random seed");
    self->add_option("--out", o.out, "output path (default stdout)");
    self->add_flag("--quick", o.quick, "skip the 3D checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    CLI::App* active = app.get_subcommands().front();
    try {
        if (active == eval) return eval_collision(o);
        if (active == evo) return evolve_cmd(o);
        if (active == ben) return bench(o);
        return selftest(o);
    } catch (const BlowUp& e) {
        std::cerr << "blow-up: " << e.what() << '\n';
        return exit_blow_up;
    } catch (const MemoryCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n\n" << active->help();
        return exit_config;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n\n" << active->help();
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
