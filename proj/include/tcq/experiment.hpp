#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcq/alphabet_opt.hpp"
#include "tcq/codebook.hpp"
#include "tcq/conv_code.hpp"
#include "tcq/encoder.hpp"
#include "tcq/estimate.hpp"
#include "tcq/labeling.hpp"
#include "tcq/parallel.hpp"
#include "tcq/sources.hpp"

namespace tcq {

struct ExperimentConfig {
  std::string partition_id = "z4";
  int scale_exponent = 8;  // hypercube scale R
  int seq_len = 1000;      // L*N samples per sequence
  int n_sequences = 5000;  // N_v
  std::uint64_t seed = 1;
  int workers = 1;

  void validate(int dim) const {
    if (seq_len < dim || seq_len % dim != 0)
      throw std::invalid_argument("sequence length must be a positive multiple of the partition dimension");
    if (n_sequences < 2) throw std::invalid_argument("need at least 2 sequences");
  }
};

// The labeling each code family is paired with: classic systems use the
// natural / set-partitioning labelings they were designed for,
// maximum-free-distance systems the distance-preserving ones.
inline Labeling labeling_for(const Partition& partition, CodeFamily family) {
  if (partition.dim == 1)
    return family == CodeFamily::ungerboeck ? ungerboeck_labeling_z4()
                                            : distance_preserving_labeling_z4();
  return family == CodeFamily::ungerboeck ? ungerboeck_labeling_z2z2()
                                          : distance_preserving_labeling_z2z2();
}

struct GainRow {
  std::string partition;
  CodeFamily family = CodeFamily::ungerboeck;
  int states = 0;
  std::string code;
  int seq_len = 0;
  int n_sequences = 0;
  std::uint64_t seed = 0;
  GainEstimate estimate;
};

// Granular-gain measurement for one (family, states) system: encodes
// n_sequences hypercube-uniform sequences and estimates the per-dimension
// second moment with its confidence interval.
inline GainRow run_granular_gain(const ExperimentConfig& cfg, CodeFamily family,
                                 int n_states,
                                 std::uint64_t source_stream = kEvalStream) {
  const Partition partition = Partition::by_id(cfg.partition_id);
  cfg.validate(partition.dim);
  const ConvCode code = code_table(family, n_states);
  const Trellis trellis = build_trellis(code);
  const Labeling labeling = labeling_for(partition, family);
  const LatticeCodebook cb{partition, {0.0, 0.0}};

  std::vector<double> energy(static_cast<std::size_t>(cfg.n_sequences));
  parallel_for(energy.size(), cfg.workers, [&](std::size_t i) {
    std::vector<double> seq(static_cast<std::size_t>(cfg.seq_len));
    fill_sequence(SourceKind::hypercube_uniform, partition, cfg.scale_exponent,
                  cfg.seed, source_stream, i, seq);
    const EncodeResult res =
        encode(std::span<const double>(seq), trellis, labeling, cb, kFreeInitialState);
    energy[i] = res.total_sq_error / static_cast<double>(cfg.seq_len);
  });

  GainRow row;
  row.partition = partition.id;
  row.family = family;
  row.states = n_states;
  row.code = code.octal_string();
  row.seq_len = cfg.seq_len;
  row.n_sequences = cfg.n_sequences;
  row.seed = cfg.seed;
  row.estimate = estimate_second_moment(energy, trellis_code_ref_mse(partition));
  return row;
}

// One row per (family, states) pair, in the given order.
inline std::vector<GainRow> run_granular_gain_table(
    const ExperimentConfig& cfg, std::span<const CodeFamily> families,
    std::span<const int> states_list) {
  std::vector<GainRow> rows;
  for (int states : states_list)
    for (CodeFamily family : families)
      rows.push_back(run_granular_gain(cfg, family, states));
  return rows;
}

// Gain as a function of the sequence length. Fresh sequences are drawn for
// every length; the canonical length 1000 reuses the table stream so those
// rows coincide exactly with the length-1000 table entries at the same seed.
inline std::uint64_t length_stream(int seq_len) {
  return kEvalStream ^ (0x4c656eULL * (static_cast<std::uint64_t>(seq_len) ^ 1000ULL));
}

inline std::vector<GainRow> run_gain_vs_length(const ExperimentConfig& cfg,
                                               std::span<const CodeFamily> families,
                                               std::span<const int> states_list,
                                               std::span<const int> lengths) {
  std::vector<GainRow> rows;
  for (int states : states_list)
    for (CodeFamily family : families)
      for (int len : lengths) {
        ExperimentConfig c = cfg;
        c.seq_len = len;
        rows.push_back(run_granular_gain(c, family, states, length_stream(len)));
      }
  return rows;
}

struct SqnrRow {
  std::string partition = "z4";
  CodeFamily family = CodeFamily::ungerboeck;
  int states = 0;
  std::string code;
  int rate = 1;
  SourceKind source = SourceKind::iid_uniform;
  int seq_len = 0;
  int n_sequences = 0;
  std::uint64_t seed = 0;
  SqnrEstimate estimate;
  FiniteAlphabet alphabet;  // the optimized alphabet used for evaluation
};

// Initial uniform alphabet spacing: spans the uniform support exactly, or
// +/-4 standard deviations for the Gaussian source.
inline double initial_spacing(SourceKind source, int rate) {
  const int n = 1 << (rate + 1);
  const double span = source == SourceKind::iid_gaussian ? 8.0 : 2.0 * std::sqrt(3.0);
  return span / n;
}

// Finite-alphabet SQNR experiment (Z/4Z only): optimizes the alphabet on a
// training set drawn with a distinct stream, then evaluates on fresh data.
inline SqnrRow run_sqnr_experiment(const ExperimentConfig& cfg, int rate,
                                   int n_states, CodeFamily family,
                                   SourceKind source,
                                   double lloyd_tol = 1e-6, int lloyd_max_iter = 100) {
  if (cfg.partition_id != "z4")
    throw std::invalid_argument("finite-alphabet experiments cover the z4 partition only");
  if (source == SourceKind::hypercube_uniform)
    throw std::invalid_argument("SQNR experiments need a unit-variance source");
  const Partition partition = Partition::z4();
  cfg.validate(partition.dim);
  const ConvCode code = code_table(family, n_states);
  const Trellis trellis = build_trellis(code);
  const Labeling labeling = labeling_for(partition, family);

  std::vector<std::vector<double>> training(static_cast<std::size_t>(cfg.n_sequences));
  parallel_for(training.size(), cfg.workers, [&](std::size_t i) {
    training[i].resize(static_cast<std::size_t>(cfg.seq_len));
    fill_sequence(source, partition, cfg.scale_exponent, cfg.seed, kTrainStream, i,
                  training[i]);
  });
  FiniteAlphabet alphabet =
      optimize_alphabet(training, trellis, labeling, init_alphabet(rate, initial_spacing(source, rate)),
                        lloyd_tol, lloyd_max_iter, cfg.workers, nullptr, kFreeInitialState);
  training.clear();
  training.shrink_to_fit();

  std::vector<double> mse(static_cast<std::size_t>(cfg.n_sequences));
  std::vector<double> power(static_cast<std::size_t>(cfg.n_sequences));
  parallel_for(mse.size(), cfg.workers, [&](std::size_t i) {
    std::vector<double> seq(static_cast<std::size_t>(cfg.seq_len));
    fill_sequence(source, partition, cfg.scale_exponent, cfg.seed, kEvalStream, i, seq);
    const EncodeResult res =
        encode(std::span<const double>(seq), trellis, labeling, alphabet, kFreeInitialState);
    mse[i] = res.total_sq_error / static_cast<double>(cfg.seq_len);
    double p = 0.0;
    for (double v : seq) p += v * v;
    power[i] = p / static_cast<double>(cfg.seq_len);
  });

  SqnrRow row;
  row.partition = partition.id;
  row.family = family;
  row.states = n_states;
  row.code = code.octal_string();
  row.rate = rate;
  row.source = source;
  row.seq_len = cfg.seq_len;
  row.n_sequences = cfg.n_sequences;
  row.seed = cfg.seed;
  row.estimate = estimate_sqnr(mse, power);
  row.alphabet = std::move(alphabet);
  return row;
}

}  // namespace tcq
