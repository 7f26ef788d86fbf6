#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <string>

#include "edd/dataset.hpp"
#include "test_util.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the built binary, capturing stdout; stderr goes to /dev/null.
CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(EDD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string record_field(const std::string& record, const std::string& key) {
  auto pos = record.find(key + "=");
  REQUIRE(pos != std::string::npos);
  pos += key.size() + 1;
  auto end = record.find_first_of(" \n", pos);
  return record.substr(pos, end - pos);
}

}  // namespace

TEST_CASE("compute on a two-point file reports edd 0") {
  testutil::TempDir dir("cli_compute");
  testutil::write_file(dir.file("tiny.csv"), "0,0\n1,1\n");
  auto result = run_cli("compute " + dir.file("tiny.csv"));
  CHECK(result.exit_code == 0);
  CHECK(record_field(result.out, "edd") == "0");
  CHECK(record_field(result.out, "bins") == "100");
  CHECK(record_field(result.out, "metric") == "euclidean");
  CHECK(record_field(result.out, "zscore") == "on");
}

TEST_CASE("usage errors exit 1, data errors exit 2") {
  testutil::TempDir dir("cli_err");
  testutil::write_file(dir.file("tiny.csv"), "0,0\n1,1\n");

  CHECK(run_cli("gdv " + dir.file("tiny.csv")).exit_code == 1);  // missing --label-col
  CHECK(run_cli("definitely-not-a-command").exit_code == 1);
  CHECK(run_cli("compute " + dir.file("no_such.csv")).exit_code == 2);
  CHECK(run_cli("compute " + dir.file("tiny.csv") + " --metric cosine").exit_code == 2);

  testutil::write_file(dir.file("ragged.csv"), "1,2\n3\n");
  CHECK(run_cli("compute " + dir.file("ragged.csv")).exit_code == 2);
}

TEST_CASE("synth output feeds both metrics") {
  testutil::TempDir dir("cli_synth");
  auto csv = dir.file("blobs.csv");
  CHECK(run_cli("synth --out " + csv + " --width 0.2 --n 40 --seed 3").exit_code == 0);

  auto loaded = edd::load_csv(csv, "label");
  CHECK(loaded.dataset.n_points() == 160);
  REQUIRE(loaded.labels.has_value());
  CHECK(loaded.labels->n_classes() == 4);

  auto compute = run_cli("compute " + csv + " --label-col label");
  CHECK(compute.exit_code == 0);

  auto gdv = run_cli("gdv " + csv + " --label-col label --matrix-out " + dir.file("m.csv"));
  CHECK(gdv.exit_code == 0);
  CHECK(record_field(gdv.out, "n_classes") == "4");
  CHECK(!testutil::read_file(dir.file("m.csv")).empty());
}

TEST_CASE("distance cache round-trips through the cli") {
  testutil::TempDir dir("cli_cache");
  auto csv = dir.file("blobs.csv");
  REQUIRE(run_cli("synth --out " + csv + " --width 0.5 --n 30 --seed 1").exit_code == 0);

  auto direct = run_cli("compute " + csv + " --label-col label --save-distances " +
                        dir.file("d.bin"));
  CHECK(direct.exit_code == 0);
  auto cached = run_cli("compute --from-distances " + dir.file("d.bin"));
  CHECK(cached.exit_code == 0);
  CHECK(record_field(cached.out, "edd") == record_field(direct.out, "edd"));
  CHECK(record_field(cached.out, "n_points") == record_field(direct.out, "n_points"));
}

TEST_CASE("sweep honors config files with flag overrides") {
  testutil::TempDir dir("cli_sweep");
  auto out = dir.file("curve.csv");
  testutil::write_file(dir.file("sweep.cfg"),
                       "# tiny sweep\n"
                       "widths = 0.1,1.0\n"
                       "seeds = 0:3\n"
                       "n = 40\n"
                       "gdv = false\n"
                       "out = " + out + "\n");

  auto result = run_cli("sweep " + dir.file("sweep.cfg"));
  CHECK(result.exit_code == 0);
  auto text = testutil::read_file(out);
  CHECK(text.rfind("width,scenario,edd_mean,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);  // header + 2 rows
  CHECK(!testutil::read_file(out + ".cfg").empty());

  // Flags override the file.
  auto overridden = run_cli("sweep " + dir.file("sweep.cfg") + " --widths 0.2,0.4,0.8 --out " +
                            dir.file("curve2.csv"));
  CHECK(overridden.exit_code == 0);
  auto text2 = testutil::read_file(dir.file("curve2.csv"));
  CHECK(std::count(text2.begin(), text2.end(), '\n') == 4);
  CHECK(text2.find("0.2,") != std::string::npos);

  CHECK(run_cli("sweep " + dir.file("missing.cfg")).exit_code == 2);
  testutil::write_file(dir.file("bad.cfg"), "no_such_key = 1\n");
  CHECK(run_cli("sweep " + dir.file("bad.cfg")).exit_code == 2);
}

TEST_CASE("labeling emits three scenario rows per width") {
  testutil::TempDir dir("cli_labeling");
  auto out = dir.file("scen.csv");
  auto result = run_cli("labeling --widths 0.2,0.6 --seeds 0:2 --n 30 --out " + out);
  CHECK(result.exit_code == 0);
  auto text = testutil::read_file(out);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);  // header + 2x3 rows
  for (const char* scenario : {",correct,", ",merged,", ",random,"})
    CHECK(text.find(scenario) != std::string::npos);
}

TEST_CASE("identical invocations produce identical bytes") {
  testutil::TempDir dir("cli_det");
  auto a = dir.file("a.csv"), b = dir.file("b.csv");
  REQUIRE(run_cli("sweep --widths 0.3,0.9 --seeds 0:2 --n 30 --out " + a).exit_code == 0);
  REQUIRE(run_cli("sweep --widths 0.3,0.9 --seeds 0:2 --n 30 --out " + b).exit_code == 0);
  CHECK(testutil::read_file(a) == testutil::read_file(b));
}
