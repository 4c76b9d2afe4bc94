// Experiment CLI: granular-gain and SQNR table reproductions plus a
// single-sequence encode/decode debug tool.
//
// Exit codes: 0 success, 1 usage/validation error, 2 experiment failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcq/tcq.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOpts {
  int nv = 5000;
  int ln = 1000;
  std::uint64_t seed = 1;
  int scale = 8;
  int workers = tcq::default_workers();
  bool quick = false;
  std::string out_dir;
  std::string config_file;
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_out) {
  o.out_dir = default_out;
  cmd->add_option("--nv", o.nv, "Number of Monte-Carlo sequences N_v")->capture_default_str();
  cmd->add_option("--ln", o.ln, "Samples per sequence L*N")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Master RNG seed; all randomness derives from it")
      ->capture_default_str();
  cmd->add_option("--scale", o.scale, "Hypercube scale exponent R")->capture_default_str();
  cmd->add_option("--workers", o.workers, "Worker threads (output is identical for any count)")
      ->capture_default_str();
  cmd->add_flag("--quick", o.quick, "Scale N_v down to 500 for a fast run");
  cmd->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--config", o.config_file,
                  "key=value file; values override the command line");
}

// Simple key=value overrides, one per line, '#' comments. Values in the file
// take precedence over flags.
using ConfigSetters = std::map<std::string, std::function<void(const std::string&)>>;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

void apply_config_file(const std::string& path, const ConfigSetters& setters) {
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("--config", "cannot open config file " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--config", "line " + std::to_string(line_no) +
                                                 ": expected key=value");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw CLI::ValidationError("--config", "line " + std::to_string(line_no) +
                                                 ": unknown key '" + key + "'");
    it->second(value);
  }
}

ConfigSetters common_setters(CommonOpts& o) {
  return {
      {"nv", [&](const std::string& v) { o.nv = std::stoi(v); }},
      {"ln", [&](const std::string& v) { o.ln = std::stoi(v); }},
      {"seed", [&](const std::string& v) { o.seed = std::stoull(v); }},
      {"scale", [&](const std::string& v) { o.scale = std::stoi(v); }},
      {"workers", [&](const std::string& v) { o.workers = std::stoi(v); }},
      {"quick", [&](const std::string& v) { o.quick = v == "1" || v == "true"; }},
      {"out", [&](const std::string& v) { o.out_dir = v; }},
  };
}

tcq::ExperimentConfig to_experiment_config(const CommonOpts& o, const std::string& partition) {
  tcq::ExperimentConfig cfg;
  cfg.partition_id = partition;
  cfg.scale_exponent = o.scale;
  cfg.seq_len = o.ln;
  cfg.n_sequences = o.quick ? 500 : o.nv;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  return cfg;
}

json common_config_json(const CommonOpts& o, const tcq::ExperimentConfig& cfg) {
  json j;
  j["nv"] = cfg.n_sequences;
  j["ln"] = cfg.seq_len;
  j["seed"] = cfg.seed;
  j["scale"] = cfg.scale_exponent;
  j["quick"] = o.quick;
  return j;
}

std::vector<tcq::CodeFamily> families_from_flag(const std::string& flag) {
  if (flag == "both") return {tcq::CodeFamily::ungerboeck, tcq::CodeFamily::distance_optimal};
  return {tcq::family_from_name(flag)};
}

// Writes results.csv/results.json/manifest.json (plus extras) under out_dir.
void write_outputs(const std::string& out_dir, const std::string& subcommand,
                   const json& config, const std::vector<tcq::ResultRow>& rows,
                   double wall_seconds,
                   const std::vector<std::pair<std::string, std::string>>& extra_files = {}) {
  fs::create_directories(out_dir);
  tcq::Manifest manifest;
  manifest.subcommand = subcommand;
  manifest.seed = config.contains("seed") ? config["seed"].get<std::uint64_t>() : 0;
  manifest.wall_time_seconds = wall_seconds;
  manifest.config = config;

  tcq::write_text_file(fs::path(out_dir) / "results.csv", tcq::to_csv(rows));
  manifest.outputs.push_back("results.csv");
  tcq::write_text_file(fs::path(out_dir) / "results.json",
                       tcq::to_json(subcommand, config, rows).dump(2) + "\n");
  manifest.outputs.push_back("results.json");
  for (const auto& [name, content] : extra_files) {
    tcq::write_text_file(fs::path(out_dir) / name, content);
    manifest.outputs.push_back(name);
  }
  tcq::write_text_file(fs::path(out_dir) / "manifest.json",
                       tcq::manifest_json(manifest).dump(2) + "\n");
  std::printf("wrote %s/{results.csv,results.json,manifest.json}\n", out_dir.c_str());
}

void print_gain_table(const std::vector<tcq::GainRow>& rows) {
  // Mirror the two-column layout: one line per state count.
  std::map<int, std::map<int, const tcq::GainRow*>> by_states;
  for (const auto& r : rows)
    by_states[r.states][r.family == tcq::CodeFamily::ungerboeck ? 0 : 1] = &r;
  std::printf("%6s | %-12s %-18s | %-12s %-18s\n", "states", "ungerboeck",
              "gain (dB)", "dist-optimal", "gain (dB)");
  for (const auto& [states, cols] : by_states) {
    std::string left = "--", left_g, right = "--", right_g;
    char buf[64];
    if (cols.count(0)) {
      left = "[" + cols.at(0)->code + "]";
      std::snprintf(buf, sizeof buf, "%.3f +- %.4f", cols.at(0)->estimate.gain_db,
                    cols.at(0)->estimate.gain_delta_db);
      left_g = buf;
    }
    if (cols.count(1)) {
      right = "[" + cols.at(1)->code + "]";
      std::snprintf(buf, sizeof buf, "%.3f +- %.4f", cols.at(1)->estimate.gain_db,
                    cols.at(1)->estimate.gain_delta_db);
      right_g = buf;
    }
    std::printf("%6d | %-12s %-18s | %-12s %-18s\n", states, left.c_str(), left_g.c_str(),
                right.c_str(), right_g.c_str());
  }
}

int cmd_table1(const CommonOpts& common, const std::string& partition,
               const std::string& families_flag, std::vector<int> states) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto families = families_from_flag(families_flag);
  const tcq::ExperimentConfig cfg = to_experiment_config(common, partition);

  if (states.empty()) {
    // All state counts available for the selected families.
    std::set<int> all;
    for (auto f : families)
      for (int s : tcq::code_table_states(f)) all.insert(s);
    states.assign(all.begin(), all.end());
  }

  std::vector<tcq::GainRow> rows;
  for (int s : states) {
    for (auto f : families) {
      // Absent (family, states) pairs are an error only when requested
      // explicitly via --states together with a single family.
      try {
        rows.push_back(run_granular_gain(cfg, f, s));
      } catch (const tcq::AbsentCodeError&) {
        if (families.size() == 1) throw;
      }
    }
  }
  if (rows.empty()) throw tcq::AbsentCodeError("no table entries match the selection");

  print_gain_table(rows);
  std::vector<tcq::ResultRow> out;
  for (const auto& r : rows) out.push_back(to_result_row(r));
  json config = common_config_json(common, cfg);
  config["partition"] = partition;
  config["families"] = families_flag;
  config["states"] = states;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_outputs(common.out_dir, "table1", config, out, secs);
  return 0;
}

int cmd_fig2(const CommonOpts& common, std::vector<int> states, std::vector<int> lengths) {
  const auto t0 = std::chrono::steady_clock::now();
  const tcq::ExperimentConfig cfg = to_experiment_config(common, "z2z2");
  if (states.empty()) states = {16, 32, 64, 256};
  if (lengths.empty()) lengths = {100, 200, 300, 500, 700, 1000};
  for (int len : lengths)
    if (len > 1000 || len < 2 || len % 2 != 0)
      throw CLI::ValidationError("--lengths", "lengths must be even and in [2, 1000]");
  const std::vector<tcq::CodeFamily> families{tcq::CodeFamily::ungerboeck,
                                              tcq::CodeFamily::distance_optimal};
  const auto rows = tcq::run_gain_vs_length(cfg, families, states, lengths);
  std::printf("%6s %-17s %6s  %s\n", "states", "family", "LN", "gain (dB)");
  for (const auto& r : rows)
    std::printf("%6d %-17s %6d  %.3f +- %.4f\n", r.states,
                std::string(tcq::family_name(r.family)).c_str(), r.seq_len,
                r.estimate.gain_db, r.estimate.gain_delta_db);

  std::vector<tcq::ResultRow> out;
  for (const auto& r : rows) out.push_back(to_result_row(r));
  json config = common_config_json(common, cfg);
  config["states"] = states;
  config["lengths"] = lengths;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_outputs(common.out_dir, "fig2", config, out, secs);
  return 0;
}

int cmd_table2(const CommonOpts& common, const std::string& families_flag,
               std::vector<int> rates, std::vector<int> states,
               const std::string& source_flag, bool allow_extra) {
  const auto t0 = std::chrono::steady_clock::now();
  const tcq::ExperimentConfig cfg = to_experiment_config(common, "z4");
  if (rates.empty()) rates = {1, 2, 3};
  if (states.empty()) states = {16, 64, 256};
  if (!allow_extra) {
    for (int r : rates)
      if (r < 1 || r > 3)
        throw CLI::ValidationError(
            "--rates", "rate " + std::to_string(r) +
                           " outside the {1,2,3} presets (pass --allow-extra to override)");
    for (int m : states)
      if (m != 16 && m != 64 && m != 256)
        throw CLI::ValidationError(
            "--states", std::to_string(m) +
                            " states outside the {16,64,256} presets (pass --allow-extra)");
  }
  const auto families = families_from_flag(families_flag);
  std::vector<tcq::SourceKind> sources;
  if (source_flag == "both")
    sources = {tcq::SourceKind::iid_uniform, tcq::SourceKind::iid_gaussian};
  else
    sources = {tcq::source_from_name(source_flag)};

  std::vector<tcq::ResultRow> out;
  std::vector<std::pair<std::string, std::string>> extra_files;
  std::printf("%4s %6s %-17s %-9s  %s\n", "R", "states", "family", "source", "SQNR (dB)");
  for (auto source : sources) {
    for (int rate : rates) {
      for (int m : states) {
        for (auto f : families) {
          const tcq::SqnrRow row = tcq::run_sqnr_experiment(cfg, rate, m, f, source);
          std::printf("%4d %6d %-17s %-9s  %.3f +- %.4f\n", rate, m,
                      std::string(tcq::family_name(f)).c_str(),
                      std::string(tcq::source_name(source)).c_str(),
                      row.estimate.sqnr_db, row.estimate.ci_db);
          std::fflush(stdout);
          out.push_back(to_result_row(row));
          std::ostringstream ab;
          tcq::save_alphabet(row.alphabet, ab);
          std::string fam_slug = f == tcq::CodeFamily::ungerboeck ? "ungerboeck" : "distance-optimal";
          extra_files.emplace_back("alphabet_" + fam_slug + "_M" + std::to_string(m) +
                                       "_R" + std::to_string(rate) + "_" +
                                       std::string(tcq::source_name(source)) + ".txt",
                                   ab.str());
        }
      }
    }
  }
  json config = common_config_json(common, cfg);
  config["families"] = families_flag;
  config["rates"] = rates;
  config["states"] = states;
  config["source"] = source_flag;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_outputs(common.out_dir, "table2", config, out, secs, extra_files);
  return 0;
}

// Reads whitespace-separated reals; reports the line/column of the first bad
// token.
std::vector<double> read_reals(std::istream& is, const std::string& origin) {
  std::vector<double> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      const std::string tok = line.substr(pos, end - pos);
      try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        out.push_back(v);
      } catch (const std::exception&) {
        throw CLI::ValidationError(
            origin, "parse error at line " + std::to_string(line_no) + ", column " +
                        std::to_string(pos + 1) + ": '" + tok + "' is not a real number");
      }
      pos = end;
    }
  }
  return out;
}

struct CodecSelection {
  std::string code_spec;
  std::string family;
  int states = 0;
  std::string labeling;
  std::string partition = "z4";
};

tcq::ConvCode resolve_code(const CodecSelection& sel) {
  if (!sel.code_spec.empty()) return tcq::parse_code(sel.code_spec);
  if (sel.states > 0)
    return tcq::code_table(tcq::family_from_name(sel.family.empty() ? "distance-optimal"
                                                                    : sel.family),
                           sel.states);
  throw CLI::ValidationError("--code", "need --code or --family/--states");
}

tcq::Labeling resolve_labeling(const CodecSelection& sel) {
  if (!sel.labeling.empty()) return tcq::labeling_by_name(sel.labeling);
  return sel.partition == "z4" ? tcq::ungerboeck_labeling_z4()
                               : tcq::distance_preserving_labeling_z2z2();
}

int cmd_encode(const CodecSelection& sel, const std::string& input,
               const std::string& out_file) {
  const tcq::ConvCode code = resolve_code(sel);
  const tcq::Trellis trellis = tcq::build_trellis(code);
  const tcq::Labeling labeling = resolve_labeling(sel);
  const tcq::Partition partition = tcq::Partition::by_id(sel.partition);
  if (labeling.partition.id != partition.id)
    throw CLI::ValidationError("--labeling", "labeling does not match partition");
  const tcq::LatticeCodebook cb{partition, {0.0, 0.0}};

  std::ifstream is(input);
  if (!is) throw CLI::ValidationError("input", "cannot open " + input);
  const std::vector<double> samples = read_reals(is, "input");
  if (samples.empty()) throw CLI::ValidationError("input", "no samples in " + input);

  const tcq::EncodeResult res =
      tcq::encode(std::span<const double>(samples), trellis, labeling, cb);

  std::ostringstream os;
  os << "bits ";
  for (auto b : res.path_bits) os << static_cast<int>(b);
  os << "\nselectors";
  for (auto s : res.point_selectors) os << ' ' << s;
  os << "\nreconstruction";
  for (double v : res.reconstruction) os << ' ' << tcq::fmt_g17(v);
  os << "\ntotal_sq_error " << tcq::fmt_g17(res.total_sq_error) << "\n";
  if (out_file.empty()) {
    std::cout << os.str();
  } else {
    tcq::write_text_file(out_file, os.str());
    std::printf("wrote %s\n", out_file.c_str());
  }
  return 0;
}

int cmd_decode(const CodecSelection& sel, const std::string& input,
               const std::string& out_file) {
  const tcq::ConvCode code = resolve_code(sel);
  const tcq::Trellis trellis = tcq::build_trellis(code);
  const tcq::Labeling labeling = resolve_labeling(sel);
  const tcq::Partition partition = tcq::Partition::by_id(sel.partition);
  if (labeling.partition.id != partition.id)
    throw CLI::ValidationError("--labeling", "labeling does not match partition");
  const tcq::LatticeCodebook cb{partition, {0.0, 0.0}};

  std::ifstream is(input);
  if (!is) throw CLI::ValidationError("input", "cannot open " + input);
  std::vector<std::uint8_t> bits;
  std::vector<std::int64_t> selectors;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "bits") {
      std::string bit_str;
      ls >> bit_str;
      for (std::size_t i = 0; i < bit_str.size(); ++i) {
        if (bit_str[i] != '0' && bit_str[i] != '1')
          throw CLI::ValidationError("input", "parse error at line " +
                                                  std::to_string(line_no) + ", column " +
                                                  std::to_string(i + 6) + ": bad bit");
        bits.push_back(static_cast<std::uint8_t>(bit_str[i] - '0'));
      }
    } else if (tag == "selectors") {
      std::int64_t v;
      while (ls >> v) selectors.push_back(v);
    }
  }
  if (bits.empty()) throw CLI::ValidationError("input", "no 'bits' line in " + input);
  const auto recon = tcq::decode(std::span<const std::uint8_t>(bits),
                                 std::span<const std::int64_t>(selectors), trellis,
                                 labeling, cb);
  std::ostringstream os;
  os << "reconstruction";
  for (double v : recon) os << ' ' << tcq::fmt_g17(v);
  os << "\n";
  if (out_file.empty()) {
    std::cout << os.str();
  } else {
    tcq::write_text_file(out_file, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trellis-coded quantization experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tcq::version_string));

  // table1
  CommonOpts t1_common;
  std::string t1_partition = "z4";
  std::string t1_families = "both";
  std::vector<int> t1_states;
  CLI::App* t1 = app.add_subcommand("table1", "Granular-gain table (both partitions)");
  add_common(t1, t1_common, "runs/table1");
  t1->add_option("--partition", t1_partition, "z4 or z2z2")
      ->check(CLI::IsMember({"z4", "z2z2"}))
      ->capture_default_str();
  t1->add_option("--families", t1_families, "ungerboeck, distance-optimal or both")
      ->check(CLI::IsMember({"ungerboeck", "distance-optimal", "both"}))
      ->capture_default_str();
  t1->add_option("--states", t1_states, "State counts (default: every table entry)")
      ->delimiter(',');

  // table2
  CommonOpts t2_common;
  std::string t2_families = "both";
  std::string t2_source = "both";
  std::vector<int> t2_rates;
  std::vector<int> t2_states;
  bool t2_allow_extra = false;
  CLI::App* t2 = app.add_subcommand("table2", "Finite-alphabet SQNR table (z4)");
  add_common(t2, t2_common, "runs/table2");
  t2->add_option("--families", t2_families)
      ->check(CLI::IsMember({"ungerboeck", "distance-optimal", "both"}))
      ->capture_default_str();
  t2->add_option("--rates", t2_rates, "Rates in bit/sample (default 1,2,3)")->delimiter(',');
  t2->add_option("--states", t2_states, "State counts (default 16,64,256)")->delimiter(',');
  t2->add_option("--source", t2_source, "uniform, gaussian or both")
      ->check(CLI::IsMember({"uniform", "gaussian", "both"}))
      ->capture_default_str();
  t2->add_flag("--allow-extra", t2_allow_extra, "Allow rates/states outside the presets");

  // fig2
  CommonOpts f2_common;
  std::vector<int> f2_states;
  std::vector<int> f2_lengths;
  CLI::App* f2 = app.add_subcommand("fig2", "Gain vs sequence length (z2z2)");
  add_common(f2, f2_common, "runs/fig2");
  f2->add_option("--states", f2_states, "State counts (default 16,32,64,256)")->delimiter(',');
  f2->add_option("--lengths", f2_lengths, "L*N grid (default 100,...,1000)")->delimiter(',');

  // encode / decode
  CodecSelection enc_sel;
  std::string enc_input, enc_out;
  CLI::App* enc = app.add_subcommand("encode", "Encode one sequence (debug tool)");
  enc->add_option("--code", enc_sel.code_spec, "Octal generator pair, e.g. \"5 7\"");
  enc->add_option("--family", enc_sel.family, "Code family for --states lookup");
  enc->add_option("--states", enc_sel.states, "Take the code from the table");
  enc->add_option("--labeling", enc_sel.labeling,
                  "ungerboeck-z4, gray-z4, dp-z2z2, natural-z2z2, ungerboeck-z2z2");
  enc->add_option("--partition", enc_sel.partition)->check(CLI::IsMember({"z4", "z2z2"}))
      ->capture_default_str();
  enc->add_option("input", enc_input, "File of whitespace-separated reals")->required();
  enc->add_option("--out", enc_out, "Write the result here instead of stdout");

  CodecSelection dec_sel;
  std::string dec_input, dec_out;
  CLI::App* dec = app.add_subcommand("decode", "Replay an encode result");
  dec->add_option("--code", dec_sel.code_spec);
  dec->add_option("--family", dec_sel.family);
  dec->add_option("--states", dec_sel.states);
  dec->add_option("--labeling", dec_sel.labeling);
  dec->add_option("--partition", dec_sel.partition)->check(CLI::IsMember({"z4", "z2z2"}))
      ->capture_default_str();
  dec->add_option("input", dec_input, "File with 'bits' and 'selectors' lines")->required();
  dec->add_option("--out", dec_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (t1->parsed()) {
      if (!t1_common.config_file.empty()) {
        auto setters = common_setters(t1_common);
        setters["partition"] = [&](const std::string& v) { t1_partition = v; };
        setters["families"] = [&](const std::string& v) { t1_families = v; };
        setters["states"] = [&](const std::string& v) { t1_states = parse_int_list(v); };
        apply_config_file(t1_common.config_file, setters);
      }
      return cmd_table1(t1_common, t1_partition, t1_families, t1_states);
    }
    if (t2->parsed()) {
      if (!t2_common.config_file.empty()) {
        auto setters = common_setters(t2_common);
        setters["families"] = [&](const std::string& v) { t2_families = v; };
        setters["rates"] = [&](const std::string& v) { t2_rates = parse_int_list(v); };
        setters["states"] = [&](const std::string& v) { t2_states = parse_int_list(v); };
        setters["source"] = [&](const std::string& v) { t2_source = v; };
        setters["allow-extra"] = [&](const std::string& v) {
          t2_allow_extra = v == "1" || v == "true";
        };
        apply_config_file(t2_common.config_file, setters);
      }
      return cmd_table2(t2_common, t2_families, t2_rates, t2_states, t2_source,
                        t2_allow_extra);
    }
    if (f2->parsed()) {
      if (!f2_common.config_file.empty()) {
        auto setters = common_setters(f2_common);
        setters["states"] = [&](const std::string& v) { f2_states = parse_int_list(v); };
        setters["lengths"] = [&](const std::string& v) { f2_lengths = parse_int_list(v); };
        apply_config_file(f2_common.config_file, setters);
      }
      return cmd_fig2(f2_common, f2_states, f2_lengths);
    }
    if (enc->parsed()) return cmd_encode(enc_sel, enc_input, enc_out);
    if (dec->parsed()) return cmd_decode(dec_sel, dec_input, dec_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tcq::CodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "experiment failed: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
