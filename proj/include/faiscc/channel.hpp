#pragma once

#include <Eigen/Dense>
#include <vector>

#include "faiscc/scenario.hpp"
#include "faiscc/types.hpp"

namespace faiscc {

/// Communication and sensing channel matrices at one time instant.
/// Column n of H_c is F_{n,c}^H G_n; column n of H_s uses the reflected
/// field response (reflection coefficient and delay folded in).
struct ChannelState {
  Eigen::MatrixXcd H_c;  // M x N
  Eigen::MatrixXcd H_s;  // M x N
  int slot = 0;
  double t_seconds = 0.0;
};

/// Receive combining matrices, one column per vehicle.
struct CombinerSet {
  Eigen::MatrixXcd W_c;  // M x N
  Eigen::MatrixXcd W_s;  // M x N
};

/// Scenario-level precomputation so PSO fitness evaluations do not redo
/// per-path trigonometry. dir_x/dir_y are the position projections of each
/// AoA pair; motion is v_n * cos(theta - theta_v); gain_sense folds
/// alpha * e^{-j k tau} into the path gain (the conjugated sensing factor).
struct VehicleGeometry {
  std::vector<double> dir_x;   // sin(theta) cos(phi)
  std::vector<double> dir_y;   // cos(theta)
  std::vector<double> motion;  // v * cos(theta - theta_v)
  std::vector<cplx> gain;
  std::vector<cplx> gain_sense;
};

struct ChannelGeometry {
  double wave_number = 0.0;  // 2*pi/lambda
  std::vector<VehicleGeometry> vehicles;
};

/// Phase difference of Eq.-style propagation for one path relative to the
/// region origin: x sin(theta) cos(phi) + y cos(theta) + v t cos(theta - theta_v).
double phase_offset(double theta, double phi, double speed, double heading,
                    double x, double y, double t_seconds);

/// Field-response vector of vehicle n at one antenna position (unit-modulus
/// entries, one per path).
Eigen::VectorXcd comm_field_response(const PathSet& paths, int vehicle, double x,
                                     double y, double t_seconds, double wavelength);

/// Reflected field response: entry modulus equals the path reflection coefficient.
Eigen::VectorXcd sense_field_response(const PathSet& paths, int vehicle, double x,
                                      double y, double t_seconds, double wavelength);

ChannelGeometry make_geometry(const PathSet& paths, const ScenarioConfig& config);

ChannelState build_channels(const ChannelGeometry& geometry,
                            const AntennaLayout& layout, double t_seconds);
ChannelState build_channels(const PathSet& paths, const AntennaLayout& layout,
                            const ScenarioConfig& config, double t_seconds);

/// Post-combining SINR of vehicle n. CrossChannel evaluates interference
/// through vehicle n's own combiner; PaperLiteral uses each interferer's
/// combiner against its own channel, matching the printed rate expression.
double sinr(const Eigen::MatrixXcd& channels, const Eigen::MatrixXcd& combiners,
            const std::vector<double>& powers_w, double noise_w, int vehicle,
            InterferenceForm form);

double comm_sinr(const ChannelState& state, const CombinerSet& combiners,
                 const std::vector<double>& powers_w, double noise_w, int vehicle,
                 InterferenceForm form);
double sense_sinr(const ChannelState& state, const CombinerSet& combiners,
                  const std::vector<double>& powers_w, double noise_w, int vehicle,
                  InterferenceForm form);

/// R = B log2(1 + SINR) in bits/s.
double rate_bps(double sinr_value, double bandwidth_hz);

double comm_rate(const ChannelState& state, const CombinerSet& combiners,
                 const ScenarioConfig& config, int vehicle);
double sense_rate(const ChannelState& state, const CombinerSet& combiners,
                  const ScenarioConfig& config, int vehicle);

}  // namespace faiscc
