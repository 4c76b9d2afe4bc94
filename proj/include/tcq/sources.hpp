#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tcq/labeling.hpp"
#include "tcq/rng.hpp"

namespace tcq {

enum class SourceKind { hypercube_uniform, iid_uniform, iid_gaussian };

inline std::string_view source_name(SourceKind k) {
  switch (k) {
    case SourceKind::hypercube_uniform: return "hypercube-uniform";
    case SourceKind::iid_uniform: return "uniform";
    case SourceKind::iid_gaussian: return "gaussian";
  }
  return "?";
}

inline SourceKind source_from_name(std::string_view name) {
  if (name == "hypercube-uniform" || name == "hypercube") return SourceKind::hypercube_uniform;
  if (name == "uniform" || name == "iid-uniform") return SourceKind::iid_uniform;
  if (name == "gaussian" || name == "iid-gaussian") return SourceKind::iid_gaussian;
  throw std::invalid_argument("unknown source kind '" + std::string(name) + "'");
}

// Side of the evaluation hypercube: 2^R cells of per-dimension edge 2^(1/N),
// i.e. 2^R*2 for Z/4Z and 2^R*sqrt(2) for Z^2/2Z^2.
inline double hypercube_side(const Partition& p, int scale_exponent) {
  return std::pow(2.0, scale_exponent) * std::pow(2.0, 1.0 / p.dim);
}

// Distinct RNG streams so training and evaluation data never overlap.
inline constexpr std::uint64_t kEvalStream = 0x45564145ULL;   // "EVAL"
inline constexpr std::uint64_t kTrainStream = 0x5452414eULL;  // "TRAN"

// Fills one i.i.d. sequence; fully determined by (seed, stream, index).
inline void fill_sequence(SourceKind kind, const Partition& partition,
                          int scale_exponent, std::uint64_t master_seed,
                          std::uint64_t stream, std::uint64_t index,
                          std::span<double> out) {
  SeededRng rng(derive_seed(master_seed, stream, index));
  switch (kind) {
    case SourceKind::hypercube_uniform: {
      const double side = hypercube_side(partition, scale_exponent);
      for (double& v : out) v = side * rng.uniform01();
      break;
    }
    case SourceKind::iid_uniform: {
      // Unit variance: uniform on [-sqrt(3), sqrt(3)).
      const double half = std::sqrt(3.0);
      for (double& v : out) v = (2.0 * rng.uniform01() - 1.0) * half;
      break;
    }
    case SourceKind::iid_gaussian: {
      for (double& v : out) v = rng.gaussian();
      break;
    }
  }
}

}  // namespace tcq
