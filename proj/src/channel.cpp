#include "faiscc/channel.hpp"

#include <cmath>

#include "faiscc/kernels.hpp"

namespace faiscc {

double phase_offset(double theta, double phi, double speed, double heading,
                    double x, double y, double t_seconds) {
  return x * std::sin(theta) * std::cos(phi) + y * std::cos(theta) +
         speed * t_seconds * std::cos(theta - heading);
}

Eigen::VectorXcd comm_field_response(const PathSet& paths, int vehicle, double x,
                                     double y, double t_seconds,
                                     double wavelength) {
  const VehiclePaths& vp = paths.vehicles.at(vehicle);
  const double k = kTwoPi / wavelength;
  Eigen::VectorXcd f(vp.elevation.size());
  for (std::size_t l = 0; l < vp.elevation.size(); ++l) {
    const double rho = phase_offset(vp.elevation[l], vp.azimuth[l], vp.speed_mps,
                                    vp.heading_rad, x, y, t_seconds);
    f[static_cast<Eigen::Index>(l)] = std::polar(1.0, k * rho);
  }
  return f;
}

Eigen::VectorXcd sense_field_response(const PathSet& paths, int vehicle, double x,
                                      double y, double t_seconds,
                                      double wavelength) {
  const VehiclePaths& vp = paths.vehicles.at(vehicle);
  const double k = kTwoPi / wavelength;
  Eigen::VectorXcd f(vp.elevation.size());
  for (std::size_t l = 0; l < vp.elevation.size(); ++l) {
    const double rho = phase_offset(vp.elevation[l], vp.azimuth[l], vp.speed_mps,
                                    vp.heading_rad, x, y, t_seconds);
    const cplx gamma = std::polar(vp.reflection[l], k * vp.delay_s[l]);
    f[static_cast<Eigen::Index>(l)] = gamma * std::polar(1.0, k * rho);
  }
  return f;
}

ChannelGeometry make_geometry(const PathSet& paths, const ScenarioConfig& config) {
  ChannelGeometry g;
  g.wave_number = kTwoPi / config.wavelength_m;
  g.vehicles.resize(paths.vehicles.size());
  for (std::size_t n = 0; n < paths.vehicles.size(); ++n) {
    const VehiclePaths& vp = paths.vehicles[n];
    VehicleGeometry& vg = g.vehicles[n];
    const std::size_t ln = vp.elevation.size();
    vg.dir_x.resize(ln);
    vg.dir_y.resize(ln);
    vg.motion.resize(ln);
    vg.gain.resize(ln);
    vg.gain_sense.resize(ln);
    for (std::size_t l = 0; l < ln; ++l) {
      vg.dir_x[l] = std::sin(vp.elevation[l]) * std::cos(vp.azimuth[l]);
      vg.dir_y[l] = std::cos(vp.elevation[l]);
      vg.motion[l] = vp.speed_mps * std::cos(vp.elevation[l] - vp.heading_rad);
      vg.gain[l] = vp.gain[l];
      // conj(gamma) = alpha e^{-j k tau}; the channel applies F^H
      vg.gain_sense[l] =
          vp.gain[l] * std::polar(vp.reflection[l], -g.wave_number * vp.delay_s[l]);
    }
  }
  return g;
}

ChannelState build_channels(const ChannelGeometry& geometry,
                            const AntennaLayout& layout, double t_seconds) {
  const auto& k = kernels::ops();
  const int m = static_cast<int>(layout.size());
  const int n_vehicles = static_cast<int>(geometry.vehicles.size());

  ChannelState state;
  state.t_seconds = t_seconds;
  state.slot = layout.slot;
  state.H_c.setZero(m, n_vehicles);
  state.H_s.setZero(m, n_vehicles);

  constexpr int kMaxStack = 64;
  double rho[kMaxStack], sph[kMaxStack], cph[kMaxStack];
  double re_c[kMaxStack], im_c[kMaxStack], re_s[kMaxStack], im_s[kMaxStack];
  std::vector<double> heap;  // spill for very large M
  double* buf = nullptr;
  if (m > kMaxStack) {
    heap.resize(static_cast<std::size_t>(m) * 7);
    buf = heap.data();
  }
  double* p_rho = buf ? buf + 0 * m : rho;
  double* p_sph = buf ? buf + 1 * m : sph;
  double* p_cph = buf ? buf + 2 * m : cph;
  double* p_re_c = buf ? buf + 3 * m : re_c;
  double* p_im_c = buf ? buf + 4 * m : im_c;
  double* p_re_s = buf ? buf + 5 * m : re_s;
  double* p_im_s = buf ? buf + 6 * m : im_s;

  for (int n = 0; n < n_vehicles; ++n) {
    const VehicleGeometry& vg = geometry.vehicles[n];
    std::fill(p_re_c, p_re_c + m, 0.0);
    std::fill(p_im_c, p_im_c + m, 0.0);
    std::fill(p_re_s, p_re_s + m, 0.0);
    std::fill(p_im_s, p_im_s + m, 0.0);
    for (std::size_t l = 0; l < vg.gain.size(); ++l) {
      // phase = k * (x dir_x + y dir_y + v t cos(theta - theta_v))
      k.mixed_axpy(layout.x.data(), layout.y.data(), m,
                   geometry.wave_number * vg.dir_x[l],
                   geometry.wave_number * vg.dir_y[l],
                   geometry.wave_number * vg.motion[l] * t_seconds, p_rho);
      k.sincos(p_rho, m, p_sph, p_cph);
      k.phasor_accum(p_sph, p_cph, m, vg.gain[l].real(), vg.gain[l].imag(),
                     p_re_c, p_im_c);
      k.phasor_accum(p_sph, p_cph, m, vg.gain_sense[l].real(),
                     vg.gain_sense[l].imag(), p_re_s, p_im_s);
    }
    for (int i = 0; i < m; ++i) {
      state.H_c(i, n) = cplx(p_re_c[i], p_im_c[i]);
      state.H_s(i, n) = cplx(p_re_s[i], p_im_s[i]);
    }
  }
  return state;
}

ChannelState build_channels(const PathSet& paths, const AntennaLayout& layout,
                            const ScenarioConfig& config, double t_seconds) {
  return build_channels(make_geometry(paths, config), layout, t_seconds);
}

double sinr(const Eigen::MatrixXcd& channels, const Eigen::MatrixXcd& combiners,
            const std::vector<double>& powers_w, double noise_w, int vehicle,
            InterferenceForm form) {
  const auto& k = kernels::ops();
  const std::size_t m = static_cast<std::size_t>(channels.rows());
  const int n_vehicles = static_cast<int>(channels.cols());
  const cplx* w_n = combiners.col(vehicle).data();
  const double w_norm2 = k.sq_norm(w_n, m);
  if (w_norm2 == 0.0) throw DomainError("sinr: zero combiner column");

  const cplx s = k.cdot(w_n, channels.col(vehicle).data(), m);
  const double signal = std::norm(s) * powers_w[vehicle];

  double interference = 0.0;
  for (int j = 0; j < n_vehicles; ++j) {
    if (j == vehicle) continue;
    if (form == InterferenceForm::CrossChannel) {
      interference += std::norm(k.cdot(w_n, channels.col(j).data(), m)) * powers_w[j];
    } else {
      const cplx* w_j = combiners.col(j).data();
      if (k.sq_norm(w_j, m) == 0.0) throw DomainError("sinr: zero combiner column");
      interference += std::norm(k.cdot(w_j, channels.col(j).data(), m)) * powers_w[j];
    }
  }
  return signal / (interference + w_norm2 * noise_w);
}

double comm_sinr(const ChannelState& state, const CombinerSet& combiners,
                 const std::vector<double>& powers_w, double noise_w, int vehicle,
                 InterferenceForm form) {
  return sinr(state.H_c, combiners.W_c, powers_w, noise_w, vehicle, form);
}

double sense_sinr(const ChannelState& state, const CombinerSet& combiners,
                  const std::vector<double>& powers_w, double noise_w, int vehicle,
                  InterferenceForm form) {
  return sinr(state.H_s, combiners.W_s, powers_w, noise_w, vehicle, form);
}

double rate_bps(double sinr_value, double bandwidth_hz) {
  return bandwidth_hz * std::log1p(sinr_value) / std::log(2.0);
}

double comm_rate(const ChannelState& state, const CombinerSet& combiners,
                 const ScenarioConfig& config, int vehicle) {
  return rate_bps(comm_sinr(state, combiners, config.tx_power_w,
                            config.noise_power_comm_w, vehicle,
                            config.interference_form),
                  config.bandwidth_hz);
}

double sense_rate(const ChannelState& state, const CombinerSet& combiners,
                  const ScenarioConfig& config, int vehicle) {
  return rate_bps(sense_sinr(state, combiners, config.tx_power_w,
                             config.noise_power_sense_w, vehicle,
                             config.interference_form),
                  config.bandwidth_hz);
}

}  // namespace faiscc
