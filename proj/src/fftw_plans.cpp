#include "fftw_plans.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mcboltz::detail {

namespace {

struct PlanCache {
    std::mutex mutex;
    std::map<std::pair<int, int>, fftw_plan> plans;

    ~PlanCache() {
        std::lock_guard lock(fftw_planner_mutex());
        for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

} // namespace

std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

void dct1_inplace(std::span<double> data, int rank, int n) {
    if (n < 2) throw std::invalid_argument("dct1: need at least 2 points per axis");
    std::size_t total = 1;
    for (int l = 0; l < rank; ++l) total *= static_cast<std::size_t>(n);
    if (data.size() != total) throw std::invalid_argument("dct1: size mismatch");

    fftw_plan plan = nullptr;
    {
        auto& c = cache();
        std::lock_guard lock(c.mutex);
        auto it = c.plans.find({rank, n});
        if (it == c.plans.end()) {
            std::vector<double> scratch(total);
            std::vector<int> dims(rank, n);
            std::vector<fftw_r2r_kind> kinds(rank, FFTW_REDFT00);
            std::lock_guard planner(fftw_planner_mutex());
            plan = fftw_plan_r2r(rank, dims.data(), scratch.data(), scratch.data(), kinds.data(),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
            if (!plan) throw std::runtime_error("dct1: FFTW planning failed");
            c.plans.emplace(std::pair{rank, n}, plan);
        } else {
            plan = it->second;
        }
    }
    fftw_execute_r2r(plan, data.data(), data.data());
}

} // namespace mcboltz::detail
