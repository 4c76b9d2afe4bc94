#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "tcq/labeling.hpp"

namespace tcq {

// Unbounded lattice quantizer: coset c of the partition contains the points
// step*m + rep_c + offset per coordinate, m in Z.
struct LatticeCodebook {
  Partition partition;
  std::array<double, 2> offset{0.0, 0.0};
};

struct LatticePoint {
  std::array<double, 2> point{};
  std::array<std::int64_t, 2> index{};  // the integer m per coordinate
  double sq_error = 0.0;
};

// Nearest point of the given coset, coordinate-wise rounding.
inline LatticePoint nearest_in_coset_lattice(const LatticeCodebook& cb,
                                             std::span<const double> x, int coset) {
  LatticePoint out;
  const double step = cb.partition.sublattice_step;
  for (int k = 0; k < cb.partition.dim; ++k) {
    const double base =
        cb.partition.coset_reps[static_cast<std::size_t>(coset)][static_cast<std::size_t>(k)] +
        cb.offset[static_cast<std::size_t>(k)];
    const double m = std::round((x[static_cast<std::size_t>(k)] - base) / step);
    const double p = step * m + base;
    const double d = x[static_cast<std::size_t>(k)] - p;
    out.point[static_cast<std::size_t>(k)] = p;
    out.index[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(m);
    out.sq_error += d * d;
  }
  return out;
}

// Finite reproduction alphabet: 2^(R+1) sorted levels split cyclically into
// the four sub-codebooks (level i belongs to subset i mod 4).
struct FiniteAlphabet {
  int rate = 1;                         // R, bits per sample
  std::vector<double> levels;           // sorted ascending
  std::vector<int> subset_of;           // level index -> coset
  std::array<std::vector<int>, 4> subset_levels;  // coset -> level indices, ascending

  int levels_per_subset() const { return static_cast<int>(levels.size()) / 4; }

  void rebuild_subsets() {
    for (auto& v : subset_levels) v.clear();
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const int c = subset_of[i];
      if (c < 0 || c > 3) throw std::invalid_argument("subset index out of range");
      subset_levels[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
    }
    for (const auto& v : subset_levels)
      if (v.size() * 4 != levels.size())
        throw std::invalid_argument("subsets must split the alphabet evenly");
  }
};

// Midrise uniform alphabet: 2^(R+1) levels at spacing*(0.5+Z), symmetric
// about zero, subsets assigned cyclically in sorted order.
inline FiniteAlphabet init_alphabet(int rate, double spacing) {
  if (rate < 1) throw std::invalid_argument("rate must be >= 1");
  if (!(spacing > 0.0)) throw std::invalid_argument("spacing must be positive");
  FiniteAlphabet ab;
  ab.rate = rate;
  const int n = 1 << (rate + 1);
  ab.levels.resize(static_cast<std::size_t>(n));
  ab.subset_of.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ab.levels[static_cast<std::size_t>(i)] = spacing * (static_cast<double>(i) - n / 2 + 0.5);
    ab.subset_of[static_cast<std::size_t>(i)] = i % 4;
  }
  ab.rebuild_subsets();
  return ab;
}

struct FiniteLevel {
  int within_subset = 0;  // index into the coset's level list
  int level_index = 0;    // index into levels
  double value = 0.0;
  double sq_error = 0.0;
};

// Nearest level restricted to one subset; ties go to the smaller level index.
inline FiniteLevel nearest_in_subset_finite(const FiniteAlphabet& ab, double x,
                                            int coset) {
  const auto& idx = ab.subset_levels[static_cast<std::size_t>(coset)];
  FiniteLevel best;
  double best_err = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const double v = ab.levels[static_cast<std::size_t>(idx[j])];
    const double d = x - v;
    const double e = d * d;
    if (e < best_err) {
      best_err = e;
      best = FiniteLevel{static_cast<int>(j), idx[j], v, e};
    }
  }
  return best;
}

// Plain-text serialization: one "level subset" pair per line, 17 significant
// digits so the decimal round-trip is bit exact.
inline void save_alphabet(const FiniteAlphabet& ab, std::ostream& os) {
  char buf[64];
  for (std::size_t i = 0; i < ab.levels.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g %d\n", ab.levels[i], ab.subset_of[i]);
    os << buf;
  }
}

inline FiniteAlphabet load_alphabet(std::istream& is) {
  FiniteAlphabet ab;
  double level = 0.0;
  int subset = 0;
  while (is >> level >> subset) {
    ab.levels.push_back(level);
    ab.subset_of.push_back(subset);
  }
  const std::size_t n = ab.levels.size();
  if (n < 4 || (n & (n - 1)) != 0)
    throw std::invalid_argument("alphabet size must be a power of two >= 4");
  ab.rate = std::countr_zero(n) - 1;  // |levels| = 2^(R+1)
  for (std::size_t i = 1; i < n; ++i)
    if (ab.levels[i] < ab.levels[i - 1])
      throw std::invalid_argument("alphabet levels must be sorted");
  for (std::size_t i = 0; i < n; ++i)
    if (ab.subset_of[i] != static_cast<int>(i % 4))
      throw std::invalid_argument("subsets must cycle 0,1,2,3 in sorted order");
  ab.rebuild_subsets();
  return ab;
}

}  // namespace tcq
