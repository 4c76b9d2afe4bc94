#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "tcq/codebook.hpp"
#include "tcq/conv_code.hpp"
#include "tcq/labeling.hpp"

namespace tcq {

// Branch-codebook adapters. Both codebook kinds expose the same three
// operations the Viterbi core needs: samples consumed per trellis step, the
// minimum squared error of a step against one coset, and the materialized
// choice (selectors + reproduction values).

inline int branch_dim(const LatticeCodebook& cb) { return cb.partition.dim; }

inline double branch_error(const LatticeCodebook& cb, std::span<const double> x,
                           int coset) {
  return nearest_in_coset_lattice(cb, x, coset).sq_error;
}

inline double branch_encode(const LatticeCodebook& cb, std::span<const double> x,
                            int coset, std::span<std::int64_t> sel,
                            std::span<double> recon) {
  const LatticePoint p = nearest_in_coset_lattice(cb, x, coset);
  for (int k = 0; k < cb.partition.dim; ++k) {
    sel[static_cast<std::size_t>(k)] = p.index[static_cast<std::size_t>(k)];
    recon[static_cast<std::size_t>(k)] = p.point[static_cast<std::size_t>(k)];
  }
  return p.sq_error;
}

inline void branch_reconstruct(const LatticeCodebook& cb, int coset,
                               std::span<const std::int64_t> sel,
                               std::span<double> recon) {
  const double step = cb.partition.sublattice_step;
  for (int k = 0; k < cb.partition.dim; ++k) {
    const double base =
        cb.partition.coset_reps[static_cast<std::size_t>(coset)][static_cast<std::size_t>(k)] +
        cb.offset[static_cast<std::size_t>(k)];
    recon[static_cast<std::size_t>(k)] =
        step * static_cast<double>(sel[static_cast<std::size_t>(k)]) + base;
  }
}

inline int branch_dim(const FiniteAlphabet&) { return 1; }

inline double branch_error(const FiniteAlphabet& ab, std::span<const double> x,
                           int coset) {
  return nearest_in_subset_finite(ab, x[0], coset).sq_error;
}

inline double branch_encode(const FiniteAlphabet& ab, std::span<const double> x,
                            int coset, std::span<std::int64_t> sel,
                            std::span<double> recon) {
  const FiniteLevel l = nearest_in_subset_finite(ab, x[0], coset);
  sel[0] = l.within_subset;
  recon[0] = l.value;
  return l.sq_error;
}

inline void branch_reconstruct(const FiniteAlphabet& ab, int coset,
                               std::span<const std::int64_t> sel,
                               std::span<double> recon) {
  const auto& idx = ab.subset_levels[static_cast<std::size_t>(coset)];
  if (sel[0] < 0 || sel[0] >= static_cast<std::int64_t>(idx.size()))
    throw std::out_of_range("point selector out of range for subset");
  recon[0] = ab.levels[static_cast<std::size_t>(idx[static_cast<std::size_t>(sel[0])])];
}

struct EncodeResult {
  std::vector<std::uint8_t> path_bits;        // one trellis input bit per step
  std::vector<std::int64_t> point_selectors;  // per-sample choice within the coset
  std::vector<double> reconstruction;
  double total_sq_error = 0.0;
  int initial_state = 0;  // the state the winning path starts from
};

// Where the Viterbi path may start. kFreeInitialState admits every state at
// zero metric, which removes the startup transient that otherwise depresses
// measured gains for large trellises.
inline constexpr int kFreeInitialState = -1;

// Minimum-squared-error path through the trellis with a free final state.
// Branch metric: squared error of the nearest codebook point in the coset
// selected by the branch label. Ties prefer the earlier candidate in
// (state, bit) scan order, i.e. the lower predecessor state.
template <class Codebook>
EncodeResult encode(std::span<const double> source, const Trellis& trellis,
                    const Labeling& labeling, const Codebook& cb,
                    int initial_state = 0) {
  const int dim = branch_dim(cb);
  if (source.empty()) throw std::invalid_argument("empty source");
  if (source.size() % static_cast<std::size_t>(dim) != 0)
    throw std::invalid_argument("source length not divisible by partition dimension");
  const std::size_t steps = source.size() / static_cast<std::size_t>(dim);
  const int n_states = trellis.n_states;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  if (initial_state != kFreeInitialState &&
      (initial_state < 0 || initial_state >= n_states))
    throw std::invalid_argument("initial state out of range");

  std::vector<double> cur(static_cast<std::size_t>(n_states), kInf);
  std::vector<double> nxt(static_cast<std::size_t>(n_states), kInf);
  if (initial_state == kFreeInitialState)
    std::fill(cur.begin(), cur.end(), 0.0);
  else
    cur[static_cast<std::size_t>(initial_state)] = 0.0;
  // Survivor per (step, state): predecessor state and the input bit taken,
  // packed as (pred << 1) | bit.
  std::vector<std::uint32_t> survivor(steps * static_cast<std::size_t>(n_states));

  std::array<double, 4> label_err{};
  for (std::size_t t = 0; t < steps; ++t) {
    const std::span<const double> x = source.subspan(t * static_cast<std::size_t>(dim),
                                                     static_cast<std::size_t>(dim));
    for (int l = 0; l < 4; ++l)
      label_err[static_cast<std::size_t>(l)] = branch_error(cb, x, labeling.coset_of[static_cast<std::size_t>(l)]);

    std::fill(nxt.begin(), nxt.end(), kInf);
    std::uint32_t* surv = survivor.data() + t * static_cast<std::size_t>(n_states);
    for (int s = 0; s < n_states; ++s) {
      const double base = cur[static_cast<std::size_t>(s)];
      if (base == kInf) continue;
      for (int b = 0; b < 2; ++b) {
        const int ns = trellis.next_state(s, b);
        const double m = base + label_err[static_cast<std::size_t>(trellis.out_label(s, b))];
        if (m < nxt[static_cast<std::size_t>(ns)]) {
          nxt[static_cast<std::size_t>(ns)] = m;
          surv[ns] = (static_cast<std::uint32_t>(s) << 1) | static_cast<std::uint32_t>(b);
        }
      }
    }
    cur.swap(nxt);
  }

  // Free final state: best metric, lowest state index on ties.
  int best_state = 0;
  double best_metric = cur[0];
  for (int s = 1; s < n_states; ++s) {
    if (cur[static_cast<std::size_t>(s)] < best_metric) {
      best_metric = cur[static_cast<std::size_t>(s)];
      best_state = s;
    }
  }

  EncodeResult res;
  res.path_bits.resize(steps);
  res.point_selectors.resize(source.size());
  res.reconstruction.resize(source.size());

  // Walk the survivors backwards to recover the path, then materialize the
  // per-step choices forward so the error sum accumulates in time order.
  std::vector<int> state_at(steps + 1);
  state_at[steps] = best_state;
  for (std::size_t t = steps; t-- > 0;) {
    const std::uint32_t packed = survivor[t * static_cast<std::size_t>(n_states) +
                                          static_cast<std::size_t>(state_at[t + 1])];
    res.path_bits[t] = static_cast<std::uint8_t>(packed & 1u);
    state_at[t] = static_cast<int>(packed >> 1);
  }

  res.initial_state = state_at[0];

  double total = 0.0;
  for (std::size_t t = 0; t < steps; ++t) {
    const int label = trellis.out_label(state_at[t], res.path_bits[t]);
    const int coset = labeling.coset_of[static_cast<std::size_t>(label)];
    const std::size_t off = t * static_cast<std::size_t>(dim);
    total += branch_encode(cb, source.subspan(off, static_cast<std::size_t>(dim)), coset,
                           std::span<std::int64_t>(res.point_selectors).subspan(off, static_cast<std::size_t>(dim)),
                           std::span<double>(res.reconstruction).subspan(off, static_cast<std::size_t>(dim)));
  }
  res.total_sq_error = total;
  return res;
}

// Deterministic replay of an encoder run: walks the trellis with the stored
// path bits and resolves the point selectors to reproduction values.
template <class Codebook>
std::vector<double> decode(std::span<const std::uint8_t> path_bits,
                           std::span<const std::int64_t> point_selectors,
                           const Trellis& trellis, const Labeling& labeling,
                           const Codebook& cb, int initial_state = 0) {
  const int dim = branch_dim(cb);
  if (point_selectors.size() != path_bits.size() * static_cast<std::size_t>(dim))
    throw std::invalid_argument("selector count does not match path length");
  std::vector<double> recon(point_selectors.size());
  int state = initial_state;
  for (std::size_t t = 0; t < path_bits.size(); ++t) {
    const int b = path_bits[t] & 1;
    const int label = trellis.out_label(state, b);
    const int coset = labeling.coset_of[static_cast<std::size_t>(label)];
    const std::size_t off = t * static_cast<std::size_t>(dim);
    branch_reconstruct(cb, coset, point_selectors.subspan(off, static_cast<std::size_t>(dim)),
                       std::span<double>(recon).subspan(off, static_cast<std::size_t>(dim)));
    state = trellis.next_state(state, b);
  }
  return recon;
}

}  // namespace tcq
