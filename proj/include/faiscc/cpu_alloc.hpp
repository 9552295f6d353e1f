#pragma once

#include <string>
#include <vector>

#include "faiscc/latency.hpp"
#include "faiscc/types.hpp"

namespace faiscc {

/// Separable convex CPU split: minimize sum_i load_i / f_i subject to the
/// budget sum f_i <= f_th and per-task latency thresholds
/// t_off_i + load_i / f_i <= t_threshold_i (the offload term is fixed for
/// the current alternating iterate).
struct CpuTask {
  double load_cycles = 0.0;    // a_i > 0
  double t_off_s = 0.0;        // fixed offload latency
  double t_threshold_s = 0.0;  // T_th for this task type
  int vehicle = 0;
  bool is_comm = true;  // diagnostics only
};

struct CpuSubproblem {
  std::vector<CpuTask> tasks;
  double budget_hz = 0.0;  // f_th
};

struct CpuSolution {
  std::vector<double> freq_hz;  // same order as tasks
  double multiplier = 0.0;      // budget dual nu (> 0: budget binds)
  double kkt_residual = 0.0;    // max relative stationarity violation
  double objective = 0.0;       // sum load_i / f_i
};

/// Exact KKT point via the sqrt-load rule with an active-set loop on the
/// threshold lower bounds. Throws InfeasibleError naming the vehicle/task
/// when a threshold cannot be met or the bounds exceed the budget.
CpuSolution solve_cpu(const CpuSubproblem& subproblem);

/// Builds the subproblem for the enabled task types and maps the solution
/// back to a per-vehicle allocation (disabled entries stay zero).
CpuSubproblem make_cpu_subproblem(const std::vector<double>& comm_off_s,
                                  const std::vector<double>& sense_off_s,
                                  const SlotData& data, const ScenarioConfig& config,
                                  bool comm_enabled, bool sense_enabled,
                                  double budget_hz);

CpuAllocation to_allocation(const CpuSubproblem& subproblem,
                            const CpuSolution& solution, int num_vehicles);

}  // namespace faiscc
