#include "faiscc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "faiscc/rng.hpp"

namespace faiscc {

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& what) { throw ConfigError("config: " + what); };
  if (num_antennas < 1) fail("num_antennas must be positive");
  if (num_vehicles < 1) fail("num_vehicles must be positive");
  if (num_vehicles > num_antennas) fail("num_vehicles must not exceed num_antennas (N <= M)");
  if (static_cast<int>(paths_per_vehicle.size()) != num_vehicles)
    fail("paths_per_vehicle must have one entry per vehicle");
  for (int l : paths_per_vehicle)
    if (l < 1) fail("paths_per_vehicle entries must be positive");
  if (!(wavelength_m > 0)) fail("wavelength_m must be positive");
  if (!(region_side_m > 0)) fail("region_side_m must be positive");
  if (!(min_spacing_m > 0)) fail("min_spacing_m must be positive");
  if (min_spacing_m > region_side_m * std::sqrt(2.0) + 1e-12)
    fail("min_spacing_m must not exceed region diagonal (d_0 <= A*sqrt(2))");
  if (static_cast<int>(tx_power_w.size()) != num_vehicles)
    fail("tx_power_w must have one entry per vehicle");
  for (double p : tx_power_w)
    if (!(p > 0)) fail("tx_power_w entries must be positive");
  if (!(noise_power_comm_w > 0)) fail("noise_power_comm_w must be positive");
  if (!(noise_power_sense_w > 0)) fail("noise_power_sense_w must be positive");
  if (!(bandwidth_hz > 0)) fail("bandwidth_hz must be positive");
  if (!(data_kb_min > 0) || !(data_kb_max >= data_kb_min))
    fail("data size range must satisfy 0 < data_kb_min <= data_kb_max");
  if (reflection_coeff < 0 || reflection_coeff > 1)
    fail("reflection_coeff must be in [0,1]");
  if (delay_max_s < 0) fail("delay_max_s must be nonnegative");
  if (speed_mps_min < 0 || speed_mps_max < speed_mps_min)
    fail("speed range must satisfy 0 <= speed_mps_min <= speed_mps_max");
  if (!(cycles_per_sample > 0)) fail("cycles_per_sample must be positive");
  if (!(minibatch_ratio > 0) || minibatch_ratio > 1)
    fail("minibatch_ratio must be in (0,1]");
  if (!(sgd_iterations > 0)) fail("sgd_iterations must be positive");
  if (!(sample_size_bits > 0)) fail("sample_size_bits must be positive");
  if (!(cpu_budget_hz > 0)) fail("cpu_budget_hz must be positive");
  if (!(latency_threshold_comm_s > 0)) fail("latency_threshold_comm_s must be positive");
  if (!(latency_threshold_sense_s > 0)) fail("latency_threshold_sense_s must be positive");
  if (num_slots < 1) fail("num_slots must be positive");
  if (!(slot_duration_s > 0)) fail("slot_duration_s must be positive");
  if (inner_iterations < 0) fail("inner_iterations must be nonnegative");
  if (!(local_cpu_hz > 0)) fail("local_cpu_hz must be positive");
  if (!(scheme_split_ratio > 0) || scheme_split_ratio >= 1)
    fail("scheme_split_ratio must be in (0,1)");
  if (pso.swarm_size < 2) fail("pso.swarm_size must be at least 2");
  if (!(pso.cognitive > 0) || !(pso.social > 0))
    fail("pso.cognitive and pso.social must be positive");
  if (pso.max_iterations < 0) fail("pso.max_iterations must be nonnegative");
  if (!(pso.velocity_clamp_frac > 0)) fail("pso.velocity_clamp_frac must be positive");
  if (!(pso.penalty_factor > 0)) fail("pso.penalty_factor must be positive");
  if (!std::isfinite(pso.inertia_start) || !std::isfinite(pso.inertia_end))
    fail("pso inertia settings must be finite");
}

std::size_t ScenarioConfig::total_paths() const {
  std::size_t n = 0;
  for (int l : paths_per_vehicle) n += static_cast<std::size_t>(l);
  return n;
}

PathSet generate_scenario(const ScenarioConfig& config) {
  config.validate();
  Rng rng(derive_seed(config.rng_seed, stream::kScenario));
  PathSet paths;
  paths.vehicles.resize(config.num_vehicles);
  for (int n = 0; n < config.num_vehicles; ++n) {
    VehiclePaths& vp = paths.vehicles[n];
    const int ln = config.paths_per_vehicle[n];
    vp.elevation.resize(ln);
    vp.azimuth.resize(ln);
    vp.gain.resize(ln);
    vp.reflection.assign(ln, config.reflection_coeff);
    vp.delay_s.resize(ln);
    for (int l = 0; l < ln; ++l) {
      vp.elevation[l] = rng.uniform(-kPi / 2.0, kPi / 2.0);
      vp.azimuth[l] = rng.uniform(-kPi / 2.0, kPi / 2.0);
      // unit total variance per vehicle: sum_l E|g|^2 = 1
      vp.gain[l] = rng.cgaussian(1.0 / ln);
      vp.delay_s[l] = rng.uniform(0.0, config.delay_max_s);
    }
    vp.speed_mps = rng.uniform(config.speed_mps_min, config.speed_mps_max);
    vp.heading_rad = rng.uniform(-kPi, kPi);
  }
  return paths;
}

namespace {

// Smallest square-ish grid (rows x cols, rows*cols >= m) whose extent at
// spacing d_0 fits a side of `side`. Returns {rows, cols} or {0, 0}.
std::pair<int, int> grid_dims(int m, double spacing, double side) {
  if (m == 1) return {1, 1};
  for (int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m))));
       cols <= m; ++cols) {
    const int rows = (m + cols - 1) / cols;
    const double w = (cols - 1) * spacing;
    const double h = (rows - 1) * spacing;
    if (w <= side + 1e-12 && h <= side + 1e-12) return {rows, cols};
  }
  return {0, 0};
}

}  // namespace

double min_region_side_for_grid(int m, double min_spacing) {
  if (m <= 1) return 0.0;
  // extent is governed by the longer grid axis
  const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m))));
  const int rows = (m + cols - 1) / cols;
  return (std::max(rows, cols) - 1) * min_spacing;
}

AntennaLayout initial_layout(const ScenarioConfig& config) {
  config.validate();
  const int m = config.num_antennas;
  AntennaLayout layout;
  layout.slot = 0;
  if (m == 1) {
    layout.x = {config.region_side_m / 2.0};
    layout.y = {config.region_side_m / 2.0};
    return layout;
  }
  const auto [rows, cols] = grid_dims(m, config.min_spacing_m, config.region_side_m);
  if (rows == 0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "initial_layout: no %d-antenna grid at spacing %.6g m fits a "
                  "%.6g m region side",
                  m, config.min_spacing_m, config.region_side_m);
    throw InfeasibleError(buf);
  }
  layout.x.reserve(m);
  layout.y.reserve(m);
  for (int i = 0; i < m; ++i) {
    const int r = i / cols;
    const int c = i % cols;
    layout.x.push_back(c * config.min_spacing_m);
    layout.y.push_back(r * config.min_spacing_m);
  }
  return layout;
}

SlotData draw_slot_data(const ScenarioConfig& config, int slot) {
  Rng rng(derive_seed(config.rng_seed, stream::kSlotData,
                      static_cast<std::uint64_t>(slot)));
  SlotData data;
  data.comm_bits.resize(config.num_vehicles);
  data.sense_bits.resize(config.num_vehicles);
  for (int n = 0; n < config.num_vehicles; ++n) {
    const double kb = rng.uniform(config.data_kb_min, config.data_kb_max);
    data.comm_bits[n] = kb * kBitsPerKb;
    data.sense_bits[n] = kb * kBitsPerKb;  // Table 1: D_c = D_s
  }
  return data;
}

bool layout_in_region(const AntennaLayout& layout, const ScenarioConfig& config) {
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout.x[i] < 0.0 || layout.x[i] > config.region_side_m) return false;
    if (layout.y[i] < 0.0 || layout.y[i] > config.region_side_m) return false;
  }
  return true;
}

bool layout_spacing_ok(const AntennaLayout& layout, double min_spacing, double tol) {
  for (std::size_t i = 0; i < layout.size(); ++i) {
    for (std::size_t j = i + 1; j < layout.size(); ++j) {
      const double dx = layout.x[i] - layout.x[j];
      const double dy = layout.y[i] - layout.y[j];
      if (std::sqrt(dx * dx + dy * dy) < min_spacing - tol) return false;
    }
  }
  return true;
}

const char* to_string(InterferenceForm f) {
  return f == InterferenceForm::PaperLiteral ? "paper" : "cross";
}

const char* to_string(CombinerStrategy s) {
  return s == CombinerStrategy::BoundSdp ? "bound-sdp" : "mmse";
}

}  // namespace faiscc
