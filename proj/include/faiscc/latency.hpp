#pragma once

#include <vector>

#include "faiscc/scenario.hpp"
#include "faiscc/types.hpp"

namespace faiscc {

/// Per-vehicle CPU frequencies on the MEC server. Entries of a disabled task
/// type (scheme 1/2 runs) are zero alongside zero data.
struct CpuAllocation {
  std::vector<double> comm_hz;   // f_{n,c}
  std::vector<double> sense_hz;  // f_{n,s}

  double total() const;
};

struct VehicleLatency {
  double off_c = 0.0, exe_c = 0.0, total_c = 0.0;
  double off_s = 0.0, exe_s = 0.0, total_s = 0.0;
  double total = 0.0;
  bool comm_within_threshold = true;   // C3
  bool sense_within_threshold = true;  // C4
};

struct LatencyReport {
  std::vector<VehicleLatency> vehicles;
  double system_total = 0.0;  // sum over vehicles
  int slot = 0;
};

/// D/R. R = 0 with D > 0 yields the infinite sentinel (not an error) so
/// infeasible PSO particles keep a totally ordered fitness.
double offload_latency(double data_bits, double rate_bps);

/// C_M * (D / sample_size) * varpi * iota / f. Throws on f <= 0 unless D = 0.
double exec_latency(double data_bits, double cpu_hz, const ScenarioConfig& config);

/// Task load in cycles: C_M * (D / sample_size) * varpi * iota.
double load_cycles(double data_bits, const ScenarioConfig& config);

LatencyReport assemble_report(const std::vector<double>& comm_rates_bps,
                              const std::vector<double>& sense_rates_bps,
                              const CpuAllocation& alloc, const SlotData& data,
                              const ScenarioConfig& config, int slot);

/// Baseline-1 report: no offloading, every task executes on the local CPU.
LatencyReport local_only_report(const SlotData& data, const ScenarioConfig& config,
                                int slot);

}  // namespace faiscc
