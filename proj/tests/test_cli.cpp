// Drives the actual CLI binary through a shell; covers exit codes, file
// outputs, config overrides, and the byte-identical-CSV guarantee.
#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support/json_schema.hpp"

#ifndef TCQ_CLI_PATH
#define TCQ_CLI_PATH "tcq"
#endif
#ifndef TCQ_SOURCE_DIR
#define TCQ_SOURCE_DIR "."
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string log = (fs::temp_directory_path() / "tcq_cli_test_out.txt").string();
  const std::string cmd = std::string(TCQ_CLI_PATH) + " " + args + " >" + log + " 2>&1";
  const int rc = std::system(cmd.c_str());
  std::ifstream is(log);
  std::stringstream ss;
  ss << is.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  REQUIRE(is.good());
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("table1 quick run writes csv/json/manifest") {
  const fs::path dir = fresh_dir("tcq_t1");
  const RunResult r = run_cli("table1 --partition z4 --states 4 --nv 40 --ln 200 --seed 5 --out " +
                              dir.string());
  INFO(r.output);
  REQUIRE(r.exit_code == 0);
  CHECK(fs::exists(dir / "results.csv"));
  CHECK(fs::exists(dir / "results.json"));
  CHECK(fs::exists(dir / "manifest.json"));
  const std::string csv = slurp(dir / "results.csv");
  CHECK(csv.find("z4,ungerboeck,4,5 2,gain_db,") != std::string::npos);
  CHECK(csv.find("z4,distance-optimal,4,5 7,gain_db,") != std::string::npos);
  // Human-readable table on stdout.
  CHECK(r.output.find("states") != std::string::npos);
  CHECK(r.output.find("[5 2]") != std::string::npos);

  const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest["outputs"].size() == 2);
  for (const auto& f : manifest["outputs"]) CHECK(fs::exists(dir / f.get<std::string>()));

  // The emitted JSON files validate against the shipped schemas.
  const auto result_schema = nlohmann::json::parse(
      slurp(fs::path(TCQ_SOURCE_DIR) / "schemas" / "tcq_result.schema.json"));
  const auto manifest_schema = nlohmann::json::parse(
      slurp(fs::path(TCQ_SOURCE_DIR) / "schemas" / "tcq_manifest.schema.json"));
  std::string error;
  const bool results_ok = tcq::test::validate_schema(
      nlohmann::json::parse(slurp(dir / "results.json")), result_schema, &error);
  INFO(error);
  CHECK(results_ok);
  const bool manifest_ok = tcq::test::validate_schema(manifest, manifest_schema, &error);
  INFO(error);
  CHECK(manifest_ok);
}

TEST_CASE("identical seeds and different worker counts give identical CSV bytes") {
  const fs::path dir1 = fresh_dir("tcq_det1");
  const fs::path dir2 = fresh_dir("tcq_det2");
  REQUIRE(run_cli("table1 --states 4,8 --nv 30 --ln 200 --seed 77 --workers 1 --out " +
                  dir1.string())
              .exit_code == 0);
  REQUIRE(run_cli("table1 --states 4,8 --nv 30 --ln 200 --seed 77 --workers 4 --out " +
                  dir2.string())
              .exit_code == 0);
  CHECK(slurp(dir1 / "results.csv") == slurp(dir2 / "results.csv"));
  CHECK(slurp(dir1 / "results.json") == slurp(dir2 / "results.json"));
}

TEST_CASE("absent table entries are reported as usage errors") {
  const RunResult r = run_cli("table1 --states 128 --families distance-optimal --nv 10 --ln 100");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("128") != std::string::npos);
}

TEST_CASE("table2 rejects rates outside the presets unless --allow-extra") {
  const RunResult r = run_cli("table2 --rates 4 --states 16 --nv 8 --ln 50");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("allow-extra") != std::string::npos);
}

TEST_CASE("table2 tiny run persists optimized alphabets") {
  const fs::path dir = fresh_dir("tcq_t2");
  const RunResult r =
      run_cli("table2 --rates 1 --states 16 --source uniform --families distance-optimal "
              "--nv 10 --ln 100 --seed 3 --out " +
              dir.string());
  INFO(r.output);
  REQUIRE(r.exit_code == 0);
  const fs::path ab = dir / "alphabet_distance-optimal_M16_R1_uniform.txt";
  REQUIRE(fs::exists(ab));
  // 4 levels, one per subset.
  const std::string text = slurp(ab);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  bool referenced = false;
  for (const auto& f : manifest["outputs"])
    if (f.get<std::string>() == "alphabet_distance-optimal_M16_R1_uniform.txt")
      referenced = true;
  CHECK(referenced);
}

TEST_CASE("fig2 rows at length 1000 match table1 rows with the same seed") {
  const fs::path d1 = fresh_dir("tcq_f2");
  const fs::path d2 = fresh_dir("tcq_f2_t1");
  REQUIRE(run_cli("fig2 --states 16 --lengths 200,1000 --nv 12 --seed 9 --out " + d1.string())
              .exit_code == 0);
  REQUIRE(run_cli("table1 --partition z2z2 --states 16 --nv 12 --ln 1000 --seed 9 --out " +
                  d2.string())
              .exit_code == 0);
  const auto fig_doc = nlohmann::json::parse(slurp(d1 / "results.json"));
  const auto tab_doc = nlohmann::json::parse(slurp(d2 / "results.json"));
  int matched = 0;
  for (const auto& fr : fig_doc["rows"]) {
    if (fr["ln"] != 1000) continue;
    for (const auto& tr : tab_doc["rows"]) {
      if (tr["family"] == fr["family"] && tr["states"] == fr["states"]) {
        CHECK(fr["metric"].get<double>() == tr["metric"].get<double>());
        ++matched;
      }
    }
  }
  CHECK(matched == 2);
}

TEST_CASE("config file values override flags") {
  const fs::path dir = fresh_dir("tcq_cfg");
  const fs::path cfg = fs::temp_directory_path() / "tcq_test.cfg";
  {
    std::ofstream os(cfg);
    os << "# test overrides\n";
    os << "nv = 20\n";
    os << "seed=123\n";
  }
  const RunResult r = run_cli("table1 --states 4 --nv 999 --ln 100 --seed 1 --config " +
                              cfg.string() + " --out " + dir.string());
  INFO(r.output);
  REQUIRE(r.exit_code == 0);
  const std::string csv = slurp(dir / "results.csv");
  CHECK(csv.find(",20,") != std::string::npos);   // nv from the config file
  CHECK(csv.find(",123\n") != std::string::npos); // seed from the config file
}

TEST_CASE("encode/decode round-trip via files") {
  const fs::path input = fs::temp_directory_path() / "tcq_encode_input.txt";
  {
    std::ofstream os(input);
    os << "0.3 1.7 -2.4 5.5\n8.25 3.125 0.0 -1.0\n";
  }
  const fs::path enc_out = fs::temp_directory_path() / "tcq_encode_out.txt";
  const RunResult enc = run_cli("encode --code \"5 7\" --labeling gray-z4 " + input.string() +
                                " --out " + enc_out.string());
  INFO(enc.output);
  REQUIRE(enc.exit_code == 0);
  const std::string enc_text = slurp(enc_out);
  CHECK(enc_text.find("bits ") != std::string::npos);
  CHECK(enc_text.find("total_sq_error") != std::string::npos);

  const RunResult dec = run_cli("decode --code \"5 7\" --labeling gray-z4 " + enc_out.string());
  REQUIRE(dec.exit_code == 0);
  // The decoder's reconstruction line must equal the encoder's.
  const auto pos = enc_text.find("reconstruction");
  const auto end = enc_text.find('\n', pos);
  const std::string recon_line = enc_text.substr(pos, end - pos);
  CHECK(dec.output.find(recon_line) != std::string::npos);
}

TEST_CASE("encode of all zeros has zero error") {
  const fs::path input = fs::temp_directory_path() / "tcq_zero_input.txt";
  {
    std::ofstream os(input);
    os << "0 0 0 0\n";
  }
  const RunResult r = run_cli("encode --code \"5 7\" " + input.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("bits 0000") != std::string::npos);
  CHECK(r.output.find("total_sq_error 0\n") != std::string::npos);
}

TEST_CASE("encode reports parse failures with line and column") {
  const fs::path input = fs::temp_directory_path() / "tcq_bad_input.txt";
  {
    std::ofstream os(input);
    os << "0.5 1.5\n2.5 oops 3.5\n";
  }
  const RunResult r = run_cli("encode --code \"5 7\" " + input.string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("line 2") != std::string::npos);
  CHECK(r.output.find("column 5") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("table1 --partition z9").exit_code == 1);
  CHECK(run_cli("bogus-subcommand").exit_code == 1);
  CHECK(run_cli("encode --code \"5 7\" /nonexistent/file.txt").exit_code == 1);
}
