#pragma once

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcq/experiment.hpp"
#include "tcq/version.hpp"

namespace tcq {

// One table entry in the unified output schema shared by all experiment
// subcommands. rate is 0 and source empty where not applicable.
struct ResultRow {
  std::string partition;
  std::string family;
  int states = 0;
  std::string code;
  std::string metric_name;
  double metric = 0.0;
  double ci = 0.0;
  int seq_len = 0;
  int n_sequences = 0;
  int rate = 0;
  std::string source;
  std::uint64_t seed = 0;
};

inline std::string fmt_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline ResultRow to_result_row(const GainRow& r) {
  ResultRow row;
  row.partition = r.partition;
  row.family = std::string(family_name(r.family));
  row.states = r.states;
  row.code = r.code;
  row.metric_name = "gain_db";
  row.metric = r.estimate.gain_db;
  row.ci = r.estimate.gain_delta_db;
  row.seq_len = r.seq_len;
  row.n_sequences = r.n_sequences;
  row.seed = r.seed;
  return row;
}

inline ResultRow to_result_row(const SqnrRow& r) {
  ResultRow row;
  row.partition = r.partition;
  row.family = std::string(family_name(r.family));
  row.states = r.states;
  row.code = r.code;
  row.metric_name = "sqnr_db";
  row.metric = r.estimate.sqnr_db;
  row.ci = r.estimate.ci_db;
  row.seq_len = r.seq_len;
  row.n_sequences = r.n_sequences;
  row.rate = r.rate;
  row.source = std::string(source_name(r.source));
  row.seed = r.seed;
  return row;
}

inline constexpr const char* kCsvHeader =
    "partition,family,states,code,metric_name,metric,ci,ln,nv,rate,source,seed";

inline std::string to_csv(std::span<const ResultRow> rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += r.partition;
    out += ',';
    out += r.family;
    out += ',';
    out += std::to_string(r.states);
    out += ',';
    out += r.code;
    out += ',';
    out += r.metric_name;
    out += ',';
    out += fmt_g17(r.metric);
    out += ',';
    out += fmt_g17(r.ci);
    out += ',';
    out += std::to_string(r.seq_len);
    out += ',';
    out += std::to_string(r.n_sequences);
    out += ',';
    out += std::to_string(r.rate);
    out += ',';
    out += r.source;
    out += ',';
    out += std::to_string(r.seed);
    out += '\n';
  }
  return out;
}

inline nlohmann::json to_json(std::string_view subcommand, const nlohmann::json& config,
                              std::span<const ResultRow> rows) {
  nlohmann::json doc;
  doc["version"] = version_string;
  doc["subcommand"] = std::string(subcommand);
  doc["seed"] = config.contains("seed") ? config["seed"] : nlohmann::json(0);
  doc["config"] = config;
  doc["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["partition"] = r.partition;
    j["family"] = r.family;
    j["states"] = r.states;
    j["code"] = r.code;
    j["metric_name"] = r.metric_name;
    j["metric"] = r.metric;
    j["ci"] = r.ci;
    j["ln"] = r.seq_len;
    j["nv"] = r.n_sequences;
    j["rate"] = r.rate;
    j["source"] = r.source;
    j["seed"] = r.seed;
    doc["rows"].push_back(std::move(j));
  }
  return doc;
}

// Run manifest: every CSV/JSON/alphabet file a run emits is listed in exactly
// one of these.
struct Manifest {
  std::string subcommand;
  std::uint64_t seed = 0;
  double wall_time_seconds = 0.0;
  nlohmann::json config;
  std::vector<std::string> outputs;
};

inline nlohmann::json manifest_json(const Manifest& m) {
  nlohmann::json j;
  j["version"] = version_string;
  j["subcommand"] = m.subcommand;
  j["seed"] = m.seed;
  j["wall_time_seconds"] = m.wall_time_seconds;
  j["config"] = m.config;
  j["outputs"] = m.outputs;
  return j;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << content;
  if (!os) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace tcq
