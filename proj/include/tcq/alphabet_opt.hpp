#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include "tcq/codebook.hpp"
#include "tcq/encoder.hpp"
#include "tcq/parallel.hpp"

namespace tcq {

// Lloyd-style alphabet refinement: alternately trellis-encode the training
// set with the current alphabet and replace each level by the centroid of the
// samples mapped to it. Levels with no assigned samples keep their value for
// that iteration. Training distortion is non-increasing across iterations.
//
// Stops when the relative distortion decrease drops below tol or after
// max_iter iterations. If history is given it receives the per-iteration
// training distortion (measured with the alphabet in use that iteration).
inline FiniteAlphabet optimize_alphabet(const std::vector<std::vector<double>>& training,
                                        const Trellis& trellis, const Labeling& labeling,
                                        FiniteAlphabet alphabet, double tol = 1e-6,
                                        int max_iter = 100, int workers = 1,
                                        std::vector<double>* history = nullptr,
                                        int initial_state = 0) {
  if (training.empty()) throw std::invalid_argument("empty training set");
  std::size_t total_samples = 0;
  for (const auto& seq : training) total_samples += seq.size();
  if (total_samples == 0) throw std::invalid_argument("empty training set");

  const std::size_t n_seq = training.size();
  const std::size_t n_levels = alphabet.levels.size();
  // Per-sequence accumulation slots; reduced in sequence order so the result
  // is independent of the worker count.
  std::vector<double> level_sum(n_seq * n_levels);
  std::vector<std::int64_t> level_count(n_seq * n_levels);
  std::vector<double> seq_err(n_seq);

  double prev_distortion = -1.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    std::fill(level_sum.begin(), level_sum.end(), 0.0);
    std::fill(level_count.begin(), level_count.end(), 0);

    parallel_for(n_seq, workers, [&](std::size_t i) {
      const EncodeResult res = encode(std::span<const double>(training[i]), trellis,
                                      labeling, alphabet, initial_state);
      seq_err[i] = res.total_sq_error;
      double* sums = level_sum.data() + i * n_levels;
      std::int64_t* counts = level_count.data() + i * n_levels;
      // Selector of step t is the within-subset index; recover the level.
      int state = res.initial_state;
      for (std::size_t t = 0; t < res.path_bits.size(); ++t) {
        const int b = res.path_bits[t];
        const int coset = labeling.coset_of[static_cast<std::size_t>(trellis.out_label(state, b))];
        const int level_index =
            alphabet.subset_levels[static_cast<std::size_t>(coset)]
                                  [static_cast<std::size_t>(res.point_selectors[t])];
        sums[level_index] += training[i][t];
        counts[level_index] += 1;
        state = trellis.next_state(state, b);
      }
    });

    double distortion = 0.0;
    for (std::size_t i = 0; i < n_seq; ++i) distortion += seq_err[i];
    distortion /= static_cast<double>(total_samples);
    if (history) history->push_back(distortion);

    // Centroid update, empty cells unchanged.
    for (std::size_t l = 0; l < n_levels; ++l) {
      double sum = 0.0;
      std::int64_t count = 0;
      for (std::size_t i = 0; i < n_seq; ++i) {
        sum += level_sum[i * n_levels + l];
        count += level_count[i * n_levels + l];
      }
      if (count > 0) alphabet.levels[l] = sum / static_cast<double>(count);
    }

    if (prev_distortion >= 0.0) {
      const double rel = prev_distortion > 0.0
                             ? (prev_distortion - distortion) / prev_distortion
                             : 0.0;
      if (rel < tol) break;
    }
    if (distortion == 0.0) break;
    prev_distortion = distortion;
  }
  return alphabet;
}

}  // namespace tcq
