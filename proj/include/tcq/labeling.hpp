#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tcq {

// Four-way lattice partition: Z/4Z (dim 1, sublattice 4Z) or Z^2/2Z^2
// (dim 2, sublattice 2Z^2). Coset representatives are the canonical ones in
// one fundamental period; inter-coset distances are taken modulo the
// sublattice.
struct Partition {
  int dim = 1;
  double sublattice_step = 4.0;  // per coordinate
  std::array<std::array<double, 2>, 4> coset_reps{};
  std::string id;  // "z4" or "z2z2"

  static Partition z4() {
    Partition p;
    p.dim = 1;
    p.sublattice_step = 4.0;
    p.coset_reps = {{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}}};
    p.id = "z4";
    return p;
  }

  static Partition z2z2() {
    Partition p;
    p.dim = 2;
    p.sublattice_step = 2.0;
    p.coset_reps = {{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}};
    p.id = "z2z2";
    return p;
  }

  static Partition by_id(std::string_view id) {
    if (id == "z4") return z4();
    if (id == "z2z2") return z2z2();
    throw std::invalid_argument("unknown partition '" + std::string(id) + "'");
  }

  // Minimum squared Euclidean distance between two cosets, minimized over
  // sublattice translates.
  double min_sq_distance(int ci, int cj) const {
    double acc = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double d = coset_reps[static_cast<std::size_t>(ci)][static_cast<std::size_t>(k)] -
                       coset_reps[static_cast<std::size_t>(cj)][static_cast<std::size_t>(k)];
      const double m = d - sublattice_step * std::round(d / sublattice_step);
      acc += m * m;
    }
    return acc;
  }
};

// Bijection between the 4 cosets and the 2-bit branch labels.
struct Labeling {
  Partition partition;
  std::array<std::uint8_t, 4> label_of{};  // coset -> label
  std::array<std::uint8_t, 4> coset_of{};  // label -> coset
  std::string name;

  void rebuild_inverse() {
    coset_of = {0, 0, 0, 0};
    std::array<bool, 4> seen{false, false, false, false};
    for (int c = 0; c < 4; ++c) {
      const std::uint8_t l = label_of[static_cast<std::size_t>(c)];
      if (l > 3 || seen[l])
        throw std::invalid_argument("labeling is not a bijection onto 2-bit labels");
      seen[l] = true;
      coset_of[l] = static_cast<std::uint8_t>(c);
    }
  }
};

// Conventional natural labeling of Z/4Z: coset k gets label k. This is the
// assignment classic TCQ systems pair with Ungerboeck codes.
inline Labeling ungerboeck_labeling_z4() {
  Labeling lab;
  lab.partition = Partition::z4();
  lab.label_of = {0, 1, 2, 3};
  lab.name = "ungerboeck-z4";
  lab.rebuild_inverse();
  return lab;
}

// Gray labeling of Z/4Z: adjacent cosets (squared distance 1) differ in one
// label bit, antipodal cosets (squared distance 4) in two.
inline Labeling distance_preserving_labeling_z4() {
  Labeling lab;
  lab.partition = Partition::z4();
  for (int k = 0; k < 4; ++k)
    lab.label_of[static_cast<std::size_t>(k)] =
        static_cast<std::uint8_t>(k ^ (k >> 1));
  lab.name = "gray-z4";
  lab.rebuild_inverse();
  return lab;
}

// Z^2/2Z^2: coset (a,b) gets label bits (a,b). One differing bit per unit of
// squared distance, so the natural map is already distance preserving.
inline Labeling distance_preserving_labeling_z2z2() {
  Labeling lab;
  lab.partition = Partition::z2z2();
  for (int c = 0; c < 4; ++c) {
    const int a = static_cast<int>(lab.partition.coset_reps[static_cast<std::size_t>(c)][0]);
    const int b = static_cast<int>(lab.partition.coset_reps[static_cast<std::size_t>(c)][1]);
    lab.label_of[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>((a << 1) | b);
  }
  lab.name = "dp-z2z2";
  lab.rebuild_inverse();
  return lab;
}

// Set-partitioning labeling of Z^2/2Z^2 as used by the classic 2-D systems:
// the low label bit selects the checkerboard half, the high bit the coset
// within the half, so toggling the high bit moves between the two most
// distant cosets of a half.
inline Labeling ungerboeck_labeling_z2z2() {
  Labeling lab;
  lab.partition = Partition::z2z2();
  // reps order {(0,0),(1,0),(0,1),(1,1)} -> labels 00, 01, 11, 10
  lab.label_of = {0, 1, 3, 2};
  lab.name = "ungerboeck-z2z2";
  lab.rebuild_inverse();
  return lab;
}

inline Labeling labeling_by_name(std::string_view name) {
  if (name == "ungerboeck-z4" || name == "natural-z4") return ungerboeck_labeling_z4();
  if (name == "gray-z4" || name == "dp-z4") return distance_preserving_labeling_z4();
  if (name == "dp-z2z2" || name == "natural-z2z2") return distance_preserving_labeling_z2z2();
  if (name == "ungerboeck-z2z2" || name == "tcm-z2z2") return ungerboeck_labeling_z2z2();
  throw std::invalid_argument("unknown labeling '" + std::string(name) + "'");
}

inline Labeling xor_relabel(Labeling lab, std::uint8_t mask) {
  for (auto& l : lab.label_of) l = static_cast<std::uint8_t>(l ^ (mask & 3));
  lab.name += "+xor" + std::to_string(mask & 3);
  lab.rebuild_inverse();
  return lab;
}

// True iff label Hamming distances are a monotone function of inter-coset
// Euclidean distances: closer coset pairs never get larger Hamming distance,
// and equal Euclidean distances get equal Hamming distances. Checked
// exhaustively over all coset pairs.
inline bool is_distance_preserving(const Labeling& lab) {
  struct PairDist {
    double d2;
    int h;
  };
  std::array<PairDist, 6> pairs;
  int n = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const int h = std::popcount(static_cast<unsigned>(
          lab.label_of[static_cast<std::size_t>(i)] ^
          lab.label_of[static_cast<std::size_t>(j)]));
      pairs[static_cast<std::size_t>(n++)] = {lab.partition.min_sq_distance(i, j), h};
    }
  }
  constexpr double eps = 1e-9;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (pairs[static_cast<std::size_t>(a)].d2 < pairs[static_cast<std::size_t>(b)].d2 - eps &&
          pairs[static_cast<std::size_t>(a)].h > pairs[static_cast<std::size_t>(b)].h)
        return false;
      if (std::abs(pairs[static_cast<std::size_t>(a)].d2 - pairs[static_cast<std::size_t>(b)].d2) <= eps &&
          pairs[static_cast<std::size_t>(a)].h != pairs[static_cast<std::size_t>(b)].h)
        return false;
    }
  }
  return true;
}

}  // namespace tcq
