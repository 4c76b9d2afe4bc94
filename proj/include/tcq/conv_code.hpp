#pragma once

#include <bit>
#include <charconv>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tcq {

// Rate-1/2 feedforward convolutional code. Tap masks are (nu+1) bits wide:
// bit nu (the most significant octal digit) taps the current input bit,
// bit 0 taps the oldest register bit.
struct ConvCode {
  std::uint32_t g0 = 0;
  std::uint32_t g1 = 0;
  int nu = 0;
  int n_states = 0;

  std::string octal_string() const;
};

class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::uint32_t parse_octal_token(std::string_view tok) {
  if (tok.empty()) throw CodeError("empty generator");
  std::uint32_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto res = std::from_chars(first, last, value, 8);
  if (res.ec != std::errc{} || res.ptr != last)
    throw CodeError("malformed octal generator '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

inline ConvCode make_code(std::uint32_t g0, std::uint32_t g1) {
  if (g0 == 0 || g1 == 0) throw CodeError("generator must be nonzero");
  const int width = static_cast<int>(std::bit_width(std::max(g0, g1)));
  const int nu = width - 1;
  if (nu < 1) throw CodeError("degenerate memoryless code (nu = 0)");
  if (nu > 24) throw CodeError("constraint length too large");
  // Delay-free, non-catastrophic convention: some generator must tap both the
  // current input and the oldest register bit.
  const std::uint32_t hi = 1u << nu;
  const bool ok = ((g0 & hi) && (g0 & 1u)) || ((g1 & hi) && (g1 & 1u));
  if (!ok) throw CodeError("no generator taps both ends of the register");
  return ConvCode{g0, g1, nu, 1 << nu};
}

// Parses a pair of octal generators, e.g. "133 171" or "[133 171]".
inline ConvCode parse_code(std::string_view spec) {
  std::string cleaned;
  cleaned.reserve(spec.size());
  for (char c : spec) {
    if (c == '[' || c == ']' || c == ',') c = ' ';
    cleaned.push_back(c);
  }
  std::vector<std::string_view> tokens;
  std::string_view s = cleaned;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    if (end > pos) tokens.push_back(s.substr(pos, end - pos));
    pos = end;
  }
  if (tokens.size() != 2)
    throw CodeError("expected two octal generators, got " +
                    std::to_string(tokens.size()));
  return make_code(detail::parse_octal_token(tokens[0]),
                   detail::parse_octal_token(tokens[1]));
}

inline std::string ConvCode::octal_string() const {
  // Zero-pad to the register width, the way generator tables print them
  // ("13 04", "103 024").
  const int digits = (nu + 3) / 3;
  auto oct = [digits](std::uint32_t v) {
    std::string out;
    do {
      out.insert(out.begin(), static_cast<char>('0' + (v & 7u)));
      v >>= 3;
    } while (v != 0);
    while (static_cast<int>(out.size()) < digits) out.insert(out.begin(), '0');
    return out;
  };
  return oct(g0) + " " + oct(g1);
}

// State-transition table of a ConvCode. State = the last nu input bits with
// the newest at the MSB; on input b the register window is w = (b<<nu)|s,
// the branch label packs the two parities (g0 parity as the high bit), and
// the next state is w>>1.
struct Trellis {
  int n_states = 0;
  int nu = 0;
  std::vector<std::uint32_t> next;   // [s*2+b]
  std::vector<std::uint8_t> labels;  // [s*2+b], values 0..3

  int next_state(int s, int b) const { return static_cast<int>(next[2 * s + b]); }
  int out_label(int s, int b) const { return labels[2 * s + b]; }
};

inline Trellis build_trellis(const ConvCode& code) {
  Trellis t;
  t.n_states = code.n_states;
  t.nu = code.nu;
  t.next.resize(static_cast<std::size_t>(code.n_states) * 2);
  t.labels.resize(static_cast<std::size_t>(code.n_states) * 2);
  for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(code.n_states); ++s) {
    for (std::uint32_t b = 0; b < 2; ++b) {
      const std::uint32_t w = (b << code.nu) | s;
      const std::uint32_t p0 = std::popcount(w & code.g0) & 1u;
      const std::uint32_t p1 = std::popcount(w & code.g1) & 1u;
      t.next[2 * s + b] = w >> 1;
      t.labels[2 * s + b] = static_cast<std::uint8_t>((p0 << 1) | p1);
    }
  }
  return t;
}

class SearchBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimum Hamming weight over all detours that leave the zero state and
// re-merge with it. Best-first search over (weight, steps, state); paths are
// capped at 50*nu trellis steps, which exceeding signals a likely
// catastrophic code.
inline int free_distance(const ConvCode& code) {
  const Trellis t = build_trellis(code);
  const int step_cap = 50 * code.nu;
  struct Node {
    int weight;
    int steps;
    int state;
    bool operator>(const Node& o) const { return weight > o.weight; }
  };
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> pq;
  std::vector<bool> settled(static_cast<std::size_t>(t.n_states), false);
  // Departure: the input-1 branch out of state 0.
  {
    const int label = t.out_label(0, 1);
    pq.push(Node{std::popcount(static_cast<unsigned>(label)), 1,
                 t.next_state(0, 1)});
  }
  while (!pq.empty()) {
    const Node n = pq.top();
    pq.pop();
    if (n.state == 0) return n.weight;
    if (settled[static_cast<std::size_t>(n.state)]) continue;
    settled[static_cast<std::size_t>(n.state)] = true;
    if (n.steps >= step_cap) continue;
    for (int b = 0; b < 2; ++b) {
      const int label = t.out_label(n.state, b);
      pq.push(Node{n.weight + std::popcount(static_cast<unsigned>(label)),
                   n.steps + 1, t.next_state(n.state, b)});
    }
  }
  throw SearchBudgetError("free-distance search budget exceeded (catastrophic code?)");
}

enum class CodeFamily { ungerboeck, distance_optimal };

inline std::string_view family_name(CodeFamily f) {
  return f == CodeFamily::ungerboeck ? "ungerboeck" : "distance-optimal";
}

inline CodeFamily family_from_name(std::string_view name) {
  if (name == "ungerboeck" || name == "u") return CodeFamily::ungerboeck;
  if (name == "distance-optimal" || name == "distance_optimal" || name == "do")
    return CodeFamily::distance_optimal;
  throw CodeError("unknown code family '" + std::string(name) + "'");
}

class AbsentCodeError : public CodeError {
 public:
  using CodeError::CodeError;
};

// Tabulated generator pairs per state count. Missing combinations are
// reported as absent rather than substituted.
inline ConvCode code_table(CodeFamily family, int n_states) {
  struct Entry {
    int states;
    const char* spec;
  };
  static constexpr Entry kUngerboeck[] = {
      {4, "5 2"},    {8, "13 04"},    {16, "23 04"},  {32, "45 10"},
      {64, "103 024"}, {128, "235 126"}, {256, "515 362"},
  };
  static constexpr Entry kDistanceOptimal[] = {
      {4, "5 7"},    {8, "13 17"},    {16, "23 35"},  {32, "53 75"},
      {64, "133 171"}, {256, "561 753"}, {1024, "2335 3661"},
  };
  const auto* begin = family == CodeFamily::ungerboeck ? std::begin(kUngerboeck)
                                                       : std::begin(kDistanceOptimal);
  const auto* end = family == CodeFamily::ungerboeck ? std::end(kUngerboeck)
                                                     : std::end(kDistanceOptimal);
  for (const auto* e = begin; e != end; ++e)
    if (e->states == n_states) return parse_code(e->spec);
  throw AbsentCodeError("no " + std::string(family_name(family)) + " code with " +
                        std::to_string(n_states) + " states in the table");
}

inline std::vector<int> code_table_states(CodeFamily family) {
  if (family == CodeFamily::ungerboeck) return {4, 8, 16, 32, 64, 128, 256};
  return {4, 8, 16, 32, 64, 256, 1024};
}

}  // namespace tcq
