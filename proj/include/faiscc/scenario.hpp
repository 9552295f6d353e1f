#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "faiscc/types.hpp"

namespace faiscc {

enum class InterferenceForm { PaperLiteral, CrossChannel };
enum class CombinerStrategy { Mmse, BoundSdp };

struct PsoSettings {
  int swarm_size = 50;
  int max_iterations = 100;
  double inertia_start = 0.9;
  double inertia_end = 0.4;
  double cognitive = 2.0;  // c1
  double social = 2.0;     // c2
  double velocity_clamp_frac = 0.2;  // per axis, fraction of region side
  double penalty_factor = 1e3;       // mu = factor * objective scale
  int threads = 1;
};

/// Every physical/system parameter plus solver settings. Loaded from JSON
/// with all fields optional (defaults below mirror the standard scenario).
struct ScenarioConfig {
  int num_antennas = 4;                 // M
  int num_vehicles = 3;                 // N
  std::vector<int> paths_per_vehicle = {3, 3, 3};  // L_n
  double wavelength_m = 0.1;            // lambda
  double region_side_m = 0.15;          // A (square region, corner at origin)
  double min_spacing_m = 0.1;           // d_0
  std::vector<double> tx_power_w = {1.0, 1.0, 1.0};  // p_n (30 dBm)
  double noise_power_comm_w = 3.9810717055349696e-15;  // sigma_c^2 = -174 dBm/Hz * B
  double noise_power_sense_w = 3.9810717055349696e-15; // sigma_s^2
  double bandwidth_hz = 1e6;            // B
  double data_kb_min = 0.5;             // D_{n,c} = D_{n,s} drawn per slot [KB]
  double data_kb_max = 2.0;
  double reflection_coeff = 0.5;        // alpha_{n,l}
  double delay_max_s = 1e-6;            // tau_{n,l} ~ U[0, delay_max_s]
  double speed_mps_min = 10.0;          // v_n ~ U[min, max]
  double speed_mps_max = 30.0;
  double cycles_per_sample = 1e7;       // C_M
  double minibatch_ratio = 0.5;         // varpi_M in (0,1]
  double sgd_iterations = 10;           // iota_M
  double sample_size_bits = 8192.0;     // converts D [bits] to sample count
  double cpu_budget_hz = 100e9;         // f_th
  double latency_threshold_comm_s = 0.5;  // T_th^c
  double latency_threshold_sense_s = 0.5; // T_th^s
  int num_slots = 1;                    // T
  double slot_duration_s = 0.1;
  int inner_iterations = 10;            // I
  double local_cpu_hz = 1e9;            // f_local (baseline 1)
  double scheme_split_ratio = 0.5;      // budget share for schemes 1/2
  std::uint64_t rng_seed = 1;
  InterferenceForm interference_form = InterferenceForm::CrossChannel;
  CombinerStrategy combiner = CombinerStrategy::Mmse;
  std::string kernel_backend = "auto";
  PsoSettings pso;

  /// Throws ConfigError naming the violated invariant.
  void validate() const;

  std::size_t total_paths() const;
};

/// Per-vehicle multipath geometry and coefficients for one scenario draw.
struct VehiclePaths {
  std::vector<double> elevation;   // theta_{n,l} in [-pi/2, pi/2]
  std::vector<double> azimuth;     // phi_{n,l}  in [-pi/2, pi/2]
  std::vector<cplx> gain;          // g_{n,l}, sum_l E|g|^2 = 1
  std::vector<double> reflection;  // alpha_{n,l} in [0,1]
  std::vector<double> delay_s;     // tau_{n,l}
  double speed_mps = 0.0;          // v_n
  double heading_rad = 0.0;        // theta_{n,v}
};

struct PathSet {
  std::vector<VehiclePaths> vehicles;
};

/// Fluid-antenna positions at one time slot; SoA layout for the kernels.
struct AntennaLayout {
  std::vector<double> x;
  std::vector<double> y;
  int slot = 0;

  std::size_t size() const { return x.size(); }
};

/// Data sizes offloaded in one slot (bits). Table 1 sets D_c = D_s, so one
/// draw per vehicle feeds both.
struct SlotData {
  std::vector<double> comm_bits;
  std::vector<double> sense_bits;
};

PathSet generate_scenario(const ScenarioConfig& config);

/// Deterministic origin-anchored grid at spacing d_0 (region center for M=1).
/// Throws InfeasibleError when no grid packing fits the region.
AntennaLayout initial_layout(const ScenarioConfig& config);

SlotData draw_slot_data(const ScenarioConfig& config, int slot);

/// Smallest region side for which initial_layout can pack m antennas.
double min_region_side_for_grid(int m, double min_spacing);

bool layout_in_region(const AntennaLayout& layout, const ScenarioConfig& config);
bool layout_spacing_ok(const AntennaLayout& layout, double min_spacing, double tol);

// --- config file I/O (JSON; all fields optional) ---
ScenarioConfig load_config(const std::string& path);
ScenarioConfig parse_config_json(const std::string& text);
std::string config_to_json(const ScenarioConfig& config);

const char* to_string(InterferenceForm f);
const char* to_string(CombinerStrategy s);

}  // namespace faiscc
