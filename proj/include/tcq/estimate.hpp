#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "tcq/labeling.hpp"

namespace tcq {

// Monte-Carlo second-moment estimate. p_tilde averages the per-sequence data
// points e_i (mean squared error per dimension of sequence i); sigma_bar is
// their unbiased sample standard deviation, so |p_tilde - P| <= delta_p with
// ~95% confidence. Gains are reported against a reference cubic-cell MSE with
// the dB confidence interval mapped through a first-order delta method.
struct GainEstimate {
  double p_tilde = 0.0;
  double sigma_bar = 0.0;
  double delta_p = 0.0;
  int n_v = 0;
  double ref_mse = 1.0 / 12.0;
  double gain_db = 0.0;
  double gain_delta_db = 0.0;
};

// MSE of a cubic cell whose per-dimension volume matches the trellis-coded
// set: the trellis passes 2 of the 4 labels per step, so the per-dimension
// cell edge is 2^(1/N) and the reference MSE is 2^(2/N)/12.
inline double trellis_code_ref_mse(const Partition& p) {
  return std::pow(2.0, 2.0 / p.dim) / 12.0;
}

// Unit-volume scalar-quantizer reference.
inline constexpr double kUnitCellRefMse = 1.0 / 12.0;

inline GainEstimate estimate_second_moment(std::span<const double> per_seq_energy,
                                           double ref_mse) {
  if (per_seq_energy.size() < 2)
    throw std::invalid_argument("need at least 2 sequences to estimate the spread");
  GainEstimate g;
  g.n_v = static_cast<int>(per_seq_energy.size());
  g.ref_mse = ref_mse;
  double sum = 0.0;
  for (double e : per_seq_energy) sum += e;
  g.p_tilde = sum / static_cast<double>(g.n_v);
  double ss = 0.0;
  for (double e : per_seq_energy) {
    const double d = e - g.p_tilde;
    ss += d * d;
  }
  g.sigma_bar = std::sqrt(ss / static_cast<double>(g.n_v - 1));
  g.delta_p = 2.0 * g.sigma_bar / std::sqrt(static_cast<double>(g.n_v));
  if (!(g.p_tilde > 0.0))
    throw std::domain_error("zero quantization error: gain undefined");
  g.gain_db = 10.0 * std::log10(ref_mse / g.p_tilde);
  g.gain_delta_db = (10.0 / std::log(10.0)) * g.delta_p / g.p_tilde;
  return g;
}

struct SqnrEstimate {
  double sqnr_db = 0.0;
  double ci_db = 0.0;
  double mse = 0.0;
  double delta_mse = 0.0;
  double signal_power = 0.0;
  int n_v = 0;
};

inline SqnrEstimate estimate_sqnr(std::span<const double> per_seq_mse,
                                  std::span<const double> per_seq_signal_power) {
  if (per_seq_mse.size() < 2)
    throw std::invalid_argument("need at least 2 sequences to estimate the spread");
  if (per_seq_mse.size() != per_seq_signal_power.size())
    throw std::invalid_argument("mse/power batch size mismatch");
  SqnrEstimate s;
  s.n_v = static_cast<int>(per_seq_mse.size());
  double mse_sum = 0.0, pow_sum = 0.0;
  for (std::size_t i = 0; i < per_seq_mse.size(); ++i) {
    mse_sum += per_seq_mse[i];
    pow_sum += per_seq_signal_power[i];
  }
  s.mse = mse_sum / static_cast<double>(s.n_v);
  s.signal_power = pow_sum / static_cast<double>(s.n_v);
  double ss = 0.0;
  for (double e : per_seq_mse) {
    const double d = e - s.mse;
    ss += d * d;
  }
  const double sigma = std::sqrt(ss / static_cast<double>(s.n_v - 1));
  s.delta_mse = 2.0 * sigma / std::sqrt(static_cast<double>(s.n_v));
  if (!(s.mse > 0.0)) throw std::domain_error("zero quantization error: SQNR undefined");
  s.sqnr_db = 10.0 * std::log10(s.signal_power / s.mse);
  s.ci_db = (10.0 / std::log(10.0)) * s.delta_mse / s.mse;
  return s;
}

}  // namespace tcq
