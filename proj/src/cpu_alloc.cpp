#include "faiscc/cpu_alloc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace faiscc {

namespace {

std::string task_name(const CpuTask& t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "vehicle %d %s task", t.vehicle,
                t.is_comm ? "comm" : "sense");
  return buf;
}

}  // namespace

CpuSolution solve_cpu(const CpuSubproblem& sub) {
  const std::size_t n = sub.tasks.size();
  if (n == 0) throw DomainError("solve_cpu: empty subproblem");
  if (!(sub.budget_hz > 0)) throw DomainError("solve_cpu: budget must be positive");

  std::vector<double> lower(n), sqrt_load(n);
  double lower_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const CpuTask& t = sub.tasks[i];
    if (!(t.load_cycles > 0))
      throw DomainError("solve_cpu: load must be positive for " + task_name(t));
    const double slack = t.t_threshold_s - t.t_off_s;
    if (!(slack > 0))
      throw InfeasibleError("solve_cpu: offload latency already exceeds the "
                            "threshold for " + task_name(t));
    lower[i] = t.load_cycles / slack;
    sqrt_load[i] = std::sqrt(t.load_cycles);
    lower_sum += lower[i];
  }
  if (lower_sum > sub.budget_hz * (1.0 + 1e-12)) {
    throw InfeasibleError(
        "solve_cpu: threshold lower bounds exceed the CPU budget "
        "(sum f_min = " + std::to_string(lower_sum) + " Hz)");
  }

  // Active-set water-filling: free tasks get f_i = sqrt(a_i)/sqrt(nu);
  // clamped tasks sit at their threshold lower bound. Adding a task to the
  // clamped set only shrinks the free-share ratio, so one forward sweep
  // converges.
  std::vector<bool> clamped(n, false);
  double residual_budget = sub.budget_hz;
  double free_sqrt_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) free_sqrt_sum += sqrt_load[i];

  CpuSolution sol;
  sol.freq_hz.assign(n, 0.0);
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    const double ratio = residual_budget / free_sqrt_sum;
    for (std::size_t i = 0; i < n; ++i) {
      if (clamped[i]) continue;
      if (sqrt_load[i] * ratio < lower[i]) {
        clamped[i] = true;
        residual_budget -= lower[i];
        free_sqrt_sum -= sqrt_load[i];
        changed = true;
      }
    }
    if (!changed) break;
    if (free_sqrt_sum <= 0.0) break;  // everything clamped
  }

  double nu;
  if (free_sqrt_sum > 0.0) {
    const double ratio = residual_budget / free_sqrt_sum;
    for (std::size_t i = 0; i < n; ++i) {
      sol.freq_hz[i] = clamped[i] ? lower[i] : sqrt_load[i] * ratio;
    }
    nu = 1.0 / (ratio * ratio);  // stationarity: a_i / f_i^2 = nu on free tasks
  } else {
    for (std::size_t i = 0; i < n; ++i) sol.freq_hz[i] = lower[i];
    // budget slack possible; nu is the largest gradient among clamped tasks
    nu = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      nu = std::max(nu, sub.tasks[i].load_cycles / (lower[i] * lower[i]));
  }
  sol.multiplier = nu;

  double residual = 0.0;
  double objective = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    objective += sub.tasks[i].load_cycles / sol.freq_hz[i];
    if (!clamped[i]) {
      const double grad = sub.tasks[i].load_cycles / (sol.freq_hz[i] * sol.freq_hz[i]);
      residual = std::max(residual, std::abs(grad - nu) / nu);
    }
  }
  sol.kkt_residual = residual;
  sol.objective = objective;
  return sol;
}

CpuSubproblem make_cpu_subproblem(const std::vector<double>& comm_off_s,
                                  const std::vector<double>& sense_off_s,
                                  const SlotData& data, const ScenarioConfig& config,
                                  bool comm_enabled, bool sense_enabled,
                                  double budget_hz) {
  CpuSubproblem sub;
  sub.budget_hz = budget_hz;
  for (int n = 0; n < config.num_vehicles; ++n) {
    if (comm_enabled) {
      sub.tasks.push_back({load_cycles(data.comm_bits[n], config), comm_off_s[n],
                           config.latency_threshold_comm_s, n, true});
    }
    if (sense_enabled) {
      sub.tasks.push_back({load_cycles(data.sense_bits[n], config), sense_off_s[n],
                           config.latency_threshold_sense_s, n, false});
    }
  }
  return sub;
}

CpuAllocation to_allocation(const CpuSubproblem& sub, const CpuSolution& sol,
                            int num_vehicles) {
  CpuAllocation alloc;
  alloc.comm_hz.assign(num_vehicles, 0.0);
  alloc.sense_hz.assign(num_vehicles, 0.0);
  for (std::size_t i = 0; i < sub.tasks.size(); ++i) {
    const CpuTask& t = sub.tasks[i];
    (t.is_comm ? alloc.comm_hz : alloc.sense_hz)[t.vehicle] = sol.freq_hz[i];
  }
  return alloc;
}

}  // namespace faiscc
