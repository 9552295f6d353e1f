#include "faiscc/combining.hpp"

#include <cmath>

#include "faiscc/latency.hpp"

namespace faiscc {

namespace {

void check_hermitian_psd(const Eigen::MatrixXcd& m, const char* what) {
  if (m.rows() != m.cols()) throw DomainError(std::string(what) + ": not square");
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > 1e-9 * scale)
    throw DomainError(std::string(what) + ": not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9 * scale)
    throw DomainError(std::string(what) + ": not positive semidefinite");
}

}  // namespace

LiftedVariables lift(const Eigen::MatrixXcd& combiners,
                     const Eigen::MatrixXcd& channels) {
  LiftedVariables lv;
  const int n = static_cast<int>(combiners.cols());
  lv.W_tilde.reserve(n);
  lv.H_tilde.reserve(n);
  for (int i = 0; i < n; ++i) {
    lv.W_tilde.push_back(combiners.col(i) * combiners.col(i).adjoint());
    lv.H_tilde.push_back(channels.col(i) * channels.col(i).adjoint());
  }
  return lv;
}

double bound_offload_latency(const LiftedVariables& lifted,
                             const std::vector<double>& powers_w, double data_bits,
                             double noise_w, double bandwidth_hz, int vehicle) {
  const int n_vehicles = static_cast<int>(lifted.W_tilde.size());
  for (int k = 0; k < n_vehicles; ++k) {
    check_hermitian_psd(lifted.W_tilde[k], "bound_offload_latency: W~");
    check_hermitian_psd(lifted.H_tilde[k], "bound_offload_latency: H~");
  }
  const double tr_w_n = lifted.W_tilde[vehicle].trace().real();
  if (!(tr_w_n > 0))
    throw DomainError("bound_offload_latency: Tr(W~_n) must be positive");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_n(lifted.H_tilde[vehicle],
                                                       Eigen::EigenvaluesOnly);
  const double lmax = es_n.eigenvalues().maxCoeff();

  double interference = 0.0;
  for (int k = 0; k < n_vehicles; ++k) {
    if (k == vehicle) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_k(lifted.H_tilde[k],
                                                         Eigen::EigenvaluesOnly);
    const double lmin = std::max(0.0, es_k.eigenvalues().minCoeff());
    interference += lmin * lifted.W_tilde[k].trace().real() * powers_w[k];
  }
  const double sinr_ub =
      lmax * tr_w_n * powers_w[vehicle] / (interference + tr_w_n * noise_w);
  return offload_latency(data_bits, rate_bps(sinr_ub, bandwidth_hz));
}

Eigen::MatrixXcd matched_combiners(const Eigen::MatrixXcd& channels) {
  Eigen::MatrixXcd w = channels;
  for (int n = 0; n < w.cols(); ++n) {
    const double norm = w.col(n).norm();
    if (norm == 0.0) throw DomainError("matched_combiners: zero channel column");
    w.col(n) /= norm;
  }
  return w;
}

CombiningResult solve_combining_bound(const ChannelState& state,
                                      const ScenarioConfig& config,
                                      const SlotData& data,
                                      const std::vector<double>& exec_comm_s,
                                      const std::vector<double>& exec_sense_s) {
  CombiningResult result;
  result.set.W_c = matched_combiners(state.H_c);
  result.set.W_s = matched_combiners(state.H_s);

  const int n_vehicles = config.num_vehicles;
  result.comm_feasible.resize(n_vehicles);
  result.sense_feasible.resize(n_vehicles);
  const LiftedVariables lifted_c = lift(result.set.W_c, state.H_c);
  const LiftedVariables lifted_s = lift(result.set.W_s, state.H_s);
  for (int n = 0; n < n_vehicles; ++n) {
    const double off_c =
        bound_offload_latency(lifted_c, config.tx_power_w, data.comm_bits[n],
                              config.noise_power_comm_w, config.bandwidth_hz, n);
    const double off_s =
        bound_offload_latency(lifted_s, config.tx_power_w, data.sense_bits[n],
                              config.noise_power_sense_w, config.bandwidth_hz, n);
    result.comm_feasible[n] =
        off_c + exec_comm_s[n] <= config.latency_threshold_comm_s;
    result.sense_feasible[n] =
        off_s + exec_sense_s[n] <= config.latency_threshold_sense_s;
  }
  return result;
}

Eigen::MatrixXcd mmse_combiners(const Eigen::MatrixXcd& channels,
                                const std::vector<double>& powers_w,
                                double noise_w) {
  const int m = static_cast<int>(channels.rows());
  const int n_vehicles = static_cast<int>(channels.cols());
  Eigen::MatrixXcd w(m, n_vehicles);
  for (int n = 0; n < n_vehicles; ++n) {
    if (channels.col(n).norm() == 0.0)
      throw DomainError("mmse_combiners: zero channel column");
    Eigen::MatrixXcd cov = noise_w * Eigen::MatrixXcd::Identity(m, m);
    for (int k = 0; k < n_vehicles; ++k) {
      if (k == n) continue;
      cov.noalias() += powers_w[k] * channels.col(k) * channels.col(k).adjoint();
    }
    w.col(n) = cov.ldlt().solve(channels.col(n).eval());
    w.col(n) /= w.col(n).norm();
  }
  return w;
}

CombinerSet solve_combining_mmse(const ChannelState& state,
                                 const std::vector<double>& powers_w,
                                 double noise_comm_w, double noise_sense_w,
                                 InterferenceForm /*form*/) {
  CombinerSet set;
  set.W_c = mmse_combiners(state.H_c, powers_w, noise_comm_w);
  set.W_s = mmse_combiners(state.H_s, powers_w, noise_sense_w);
  return set;
}

}  // namespace faiscc
