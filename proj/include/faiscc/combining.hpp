#pragma once

#include <Eigen/Dense>
#include <vector>

#include "faiscc/channel.hpp"
#include "faiscc/scenario.hpp"
#include "faiscc/types.hpp"

namespace faiscc {

/// Lifted matrix variables of the semidefinite reformulation:
/// W~_n = w_n w_n^H and H~_n = h_n h_n^H, one pair per vehicle.
struct LiftedVariables {
  std::vector<Eigen::MatrixXcd> W_tilde;
  std::vector<Eigen::MatrixXcd> H_tilde;
};

LiftedVariables lift(const Eigen::MatrixXcd& combiners,
                     const Eigen::MatrixXcd& channels);

/// Trace/eigenvalue lower bound on the offload latency of vehicle n:
///   D / (B log2(1 + lmax(H~_n) Tr(W~_n) p_n /
///                 (sum_{k != n} lmin(H~_k) Tr(W~_k) p_k + Tr(W~_n) sigma^2))).
/// Pass bandwidth_hz = 1 for the spectral-efficiency form. Throws DomainError
/// on non-Hermitian or non-PSD input.
double bound_offload_latency(const LiftedVariables& lifted,
                             const std::vector<double>& powers_w, double data_bits,
                             double noise_w, double bandwidth_hz, int vehicle);

struct CombiningResult {
  CombinerSet set;
  // C3'/C4' checks of the bound-latency plus the frozen execution latency.
  std::vector<bool> comm_feasible;
  std::vector<bool> sense_feasible;
};

/// Bound-driven combining: with rank-1 H~ the interference term of the bound
/// vanishes and the objective is scale-invariant in W~_n, so any unit-trace
/// PSD matrix aligned with h_n is optimal; the principal eigenvector is
/// h_n / ||h_n||. Applied to both task types. exec_* are the frozen execution
/// latencies used for the C3'/C4' feasibility flags.
CombiningResult solve_combining_bound(const ChannelState& state,
                                      const ScenarioConfig& config,
                                      const SlotData& data,
                                      const std::vector<double>& exec_comm_s,
                                      const std::vector<double>& exec_sense_s);

/// Interference-aware combiner w_n = (sum_{k != n} p_k h_k h_k^H + sigma^2 I)^{-1} h_n,
/// normalized to unit norm; maximizes the cross-channel SINR and reduces to
/// the matched filter for N = 1.
Eigen::MatrixXcd mmse_combiners(const Eigen::MatrixXcd& channels,
                                const std::vector<double>& powers_w,
                                double noise_w);

CombinerSet solve_combining_mmse(const ChannelState& state,
                                 const std::vector<double>& powers_w,
                                 double noise_comm_w, double noise_sense_w,
                                 InterferenceForm form);

/// Matched-filter columns h_n / ||h_n|| (used for initialization).
Eigen::MatrixXcd matched_combiners(const Eigen::MatrixXcd& channels);

}  // namespace faiscc
