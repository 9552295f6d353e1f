#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "faiscc/scenario.hpp"

namespace faiscc {

using json = nlohmann::json;

namespace {

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (auto it = j.find(key); it != j.end()) out = it->get<T>();
}

std::vector<double> read_broadcast(const json& j, const char* key, int n,
                                   const std::vector<double>& fallback) {
  auto it = j.find(key);
  if (it == j.end()) {
    if (static_cast<int>(fallback.size()) == n) return fallback;
    return std::vector<double>(n, fallback.empty() ? 0.0 : fallback.front());
  }
  if (it->is_number()) return std::vector<double>(n, it->get<double>());
  auto v = it->get<std::vector<double>>();
  if (static_cast<int>(v.size()) != n)
    throw ConfigError(std::string("config: ") + key + " must be a scalar or a list of length N");
  return v;
}

}  // namespace

ScenarioConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");

  ScenarioConfig c;
  read(j, "num_antennas", c.num_antennas);
  read(j, "num_vehicles", c.num_vehicles);

  // L_n: scalar broadcast or per-vehicle list
  if (auto it = j.find("paths_per_vehicle"); it != j.end()) {
    if (it->is_number_integer()) {
      c.paths_per_vehicle.assign(c.num_vehicles, it->get<int>());
    } else {
      c.paths_per_vehicle = it->get<std::vector<int>>();
    }
  } else {
    c.paths_per_vehicle.assign(c.num_vehicles, 3);
  }

  read(j, "wavelength_m", c.wavelength_m);
  c.region_side_m = 1.5 * c.wavelength_m;
  read(j, "region_side_m", c.region_side_m);
  c.min_spacing_m = c.wavelength_m;
  read(j, "min_spacing_m", c.min_spacing_m);

  // transmit power: watts directly, or dBm (Table 1 quotes 30 dBm)
  if (j.contains("tx_power_dbm")) {
    auto dbm = read_broadcast(j, "tx_power_dbm", c.num_vehicles, {30.0});
    c.tx_power_w.resize(dbm.size());
    for (std::size_t i = 0; i < dbm.size(); ++i) c.tx_power_w[i] = dbm_to_watts(dbm[i]);
  } else {
    c.tx_power_w = read_broadcast(j, "tx_power_w", c.num_vehicles,
                                  {dbm_to_watts(30.0)});
  }

  read(j, "bandwidth_hz", c.bandwidth_hz);
  // noise: -174 dBm/Hz density times bandwidth unless watts given directly
  double density_dbm_hz = -174.0;
  read(j, "noise_dbm_per_hz", density_dbm_hz);
  c.noise_power_comm_w = dbm_to_watts(density_dbm_hz) * c.bandwidth_hz;
  c.noise_power_sense_w = c.noise_power_comm_w;
  read(j, "noise_power_comm_w", c.noise_power_comm_w);
  read(j, "noise_power_sense_w", c.noise_power_sense_w);

  read(j, "data_kb_min", c.data_kb_min);
  read(j, "data_kb_max", c.data_kb_max);
  read(j, "reflection_coeff", c.reflection_coeff);
  read(j, "delay_max_s", c.delay_max_s);
  read(j, "speed_mps_min", c.speed_mps_min);
  read(j, "speed_mps_max", c.speed_mps_max);
  read(j, "cycles_per_sample", c.cycles_per_sample);
  read(j, "minibatch_ratio", c.minibatch_ratio);
  read(j, "sgd_iterations", c.sgd_iterations);
  read(j, "sample_size_bits", c.sample_size_bits);
  read(j, "cpu_budget_hz", c.cpu_budget_hz);
  read(j, "latency_threshold_comm_s", c.latency_threshold_comm_s);
  read(j, "latency_threshold_sense_s", c.latency_threshold_sense_s);
  read(j, "num_slots", c.num_slots);
  read(j, "slot_duration_s", c.slot_duration_s);
  read(j, "inner_iterations", c.inner_iterations);
  read(j, "local_cpu_hz", c.local_cpu_hz);
  read(j, "scheme_split_ratio", c.scheme_split_ratio);
  read(j, "rng_seed", c.rng_seed);
  read(j, "kernel", c.kernel_backend);

  if (auto it = j.find("interference_form"); it != j.end()) {
    const auto v = it->get<std::string>();
    if (v == "cross")
      c.interference_form = InterferenceForm::CrossChannel;
    else if (v == "paper")
      c.interference_form = InterferenceForm::PaperLiteral;
    else
      throw ConfigError("config: interference_form must be 'cross' or 'paper'");
  }
  if (auto it = j.find("combiner"); it != j.end()) {
    const auto v = it->get<std::string>();
    if (v == "mmse")
      c.combiner = CombinerStrategy::Mmse;
    else if (v == "bound-sdp")
      c.combiner = CombinerStrategy::BoundSdp;
    else
      throw ConfigError("config: combiner must be 'mmse' or 'bound-sdp'");
  }
  if (auto it = j.find("pso"); it != j.end()) {
    const json& p = *it;
    read(p, "swarm_size", c.pso.swarm_size);
    read(p, "max_iterations", c.pso.max_iterations);
    read(p, "inertia_start", c.pso.inertia_start);
    read(p, "inertia_end", c.pso.inertia_end);
    read(p, "cognitive", c.pso.cognitive);
    read(p, "social", c.pso.social);
    read(p, "velocity_clamp_frac", c.pso.velocity_clamp_frac);
    read(p, "penalty_factor", c.pso.penalty_factor);
    read(p, "threads", c.pso.threads);
  }

  // fix up broadcast sizes if num_vehicles changed after defaults
  if (static_cast<int>(c.paths_per_vehicle.size()) == 1 && c.num_vehicles > 1)
    c.paths_per_vehicle.assign(c.num_vehicles, c.paths_per_vehicle.front());
  if (static_cast<int>(c.tx_power_w.size()) == 1 && c.num_vehicles > 1)
    c.tx_power_w.assign(c.num_vehicles, c.tx_power_w.front());

  c.validate();
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_json(ss.str());
}

std::string config_to_json(const ScenarioConfig& c) {
  json j;
  j["num_antennas"] = c.num_antennas;
  j["num_vehicles"] = c.num_vehicles;
  j["paths_per_vehicle"] = c.paths_per_vehicle;
  j["wavelength_m"] = c.wavelength_m;
  j["region_side_m"] = c.region_side_m;
  j["min_spacing_m"] = c.min_spacing_m;
  j["tx_power_w"] = c.tx_power_w;
  j["noise_power_comm_w"] = c.noise_power_comm_w;
  j["noise_power_sense_w"] = c.noise_power_sense_w;
  j["bandwidth_hz"] = c.bandwidth_hz;
  j["data_kb_min"] = c.data_kb_min;
  j["data_kb_max"] = c.data_kb_max;
  j["reflection_coeff"] = c.reflection_coeff;
  j["delay_max_s"] = c.delay_max_s;
  j["speed_mps_min"] = c.speed_mps_min;
  j["speed_mps_max"] = c.speed_mps_max;
  j["cycles_per_sample"] = c.cycles_per_sample;
  j["minibatch_ratio"] = c.minibatch_ratio;
  j["sgd_iterations"] = c.sgd_iterations;
  j["sample_size_bits"] = c.sample_size_bits;
  j["cpu_budget_hz"] = c.cpu_budget_hz;
  j["latency_threshold_comm_s"] = c.latency_threshold_comm_s;
  j["latency_threshold_sense_s"] = c.latency_threshold_sense_s;
  j["num_slots"] = c.num_slots;
  j["slot_duration_s"] = c.slot_duration_s;
  j["inner_iterations"] = c.inner_iterations;
  j["local_cpu_hz"] = c.local_cpu_hz;
  j["scheme_split_ratio"] = c.scheme_split_ratio;
  j["rng_seed"] = c.rng_seed;
  j["interference_form"] = to_string(c.interference_form);
  j["combiner"] = to_string(c.combiner);
  j["kernel"] = c.kernel_backend;
  j["pso"] = {{"swarm_size", c.pso.swarm_size},
              {"max_iterations", c.pso.max_iterations},
              {"inertia_start", c.pso.inertia_start},
              {"inertia_end", c.pso.inertia_end},
              {"cognitive", c.pso.cognitive},
              {"social", c.pso.social},
              {"velocity_clamp_frac", c.pso.velocity_clamp_frac},
              {"penalty_factor", c.pso.penalty_factor},
              {"threads", c.pso.threads}};
  return j.dump(2);
}

}  // namespace faiscc
