#include "faiscc/latency.hpp"

#include <cmath>
#include <limits>

namespace faiscc {

double CpuAllocation::total() const {
  double sum = 0.0;
  for (double f : comm_hz) sum += f;
  for (double f : sense_hz) sum += f;
  return sum;
}

double offload_latency(double data_bits, double rate_bps) {
  if (data_bits == 0.0) return 0.0;
  if (rate_bps <= 0.0) return std::numeric_limits<double>::infinity();
  return data_bits / rate_bps;
}

double load_cycles(double data_bits, const ScenarioConfig& config) {
  return config.cycles_per_sample * (data_bits / config.sample_size_bits) *
         config.minibatch_ratio * config.sgd_iterations;
}

double exec_latency(double data_bits, double cpu_hz, const ScenarioConfig& config) {
  if (data_bits == 0.0) return 0.0;
  if (cpu_hz <= 0.0) throw DomainError("exec_latency: cpu frequency must be positive");
  return load_cycles(data_bits, config) / cpu_hz;
}

LatencyReport assemble_report(const std::vector<double>& comm_rates_bps,
                              const std::vector<double>& sense_rates_bps,
                              const CpuAllocation& alloc, const SlotData& data,
                              const ScenarioConfig& config, int slot) {
  const int n_vehicles = config.num_vehicles;
  LatencyReport report;
  report.slot = slot;
  report.vehicles.resize(n_vehicles);
  double system_total = 0.0;
  for (int n = 0; n < n_vehicles; ++n) {
    VehicleLatency& v = report.vehicles[n];
    v.off_c = offload_latency(data.comm_bits[n], comm_rates_bps[n]);
    v.exe_c = exec_latency(data.comm_bits[n], alloc.comm_hz[n], config);
    v.total_c = v.off_c + v.exe_c;
    v.off_s = offload_latency(data.sense_bits[n], sense_rates_bps[n]);
    v.exe_s = exec_latency(data.sense_bits[n], alloc.sense_hz[n], config);
    v.total_s = v.off_s + v.exe_s;
    v.total = v.total_c + v.total_s;
    v.comm_within_threshold = v.total_c <= config.latency_threshold_comm_s;
    v.sense_within_threshold = v.total_s <= config.latency_threshold_sense_s;
    system_total += v.total;
  }
  report.system_total = system_total;
  return report;
}

LatencyReport local_only_report(const SlotData& data, const ScenarioConfig& config,
                                int slot) {
  LatencyReport report;
  report.slot = slot;
  report.vehicles.resize(config.num_vehicles);
  double system_total = 0.0;
  for (int n = 0; n < config.num_vehicles; ++n) {
    VehicleLatency& v = report.vehicles[n];
    v.exe_c = exec_latency(data.comm_bits[n], config.local_cpu_hz, config);
    v.exe_s = exec_latency(data.sense_bits[n], config.local_cpu_hz, config);
    v.total_c = v.exe_c;
    v.total_s = v.exe_s;
    v.total = v.total_c + v.total_s;
    v.comm_within_threshold = v.total_c <= config.latency_threshold_comm_s;
    v.sense_within_threshold = v.total_s <= config.latency_threshold_sense_s;
    system_total += v.total;
  }
  report.system_total = system_total;
  return report;
}

}  // namespace faiscc
