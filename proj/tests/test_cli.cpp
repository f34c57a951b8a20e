// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests of the command line binary: artifact layout, exit codes,
// determinism across reruns, and failure handling. The binary path and the
// data directory arrive via CUTMIT_CLI and CUTMIT_DATA.

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "support/subprocess.hpp"

using json = nlohmann::ordered_json;
using testutil::TempDir;
using testutil::run_cli;
using testutil::slurp;
namespace fs = std::filesystem;

namespace {

std::string circuit_file(const std::string& name) {
  return (testutil::data_path() / "circuits" / name).string();
}

std::string noise_file(const std::string& name) {
  return (testutil::data_path() / "noise" / name).string();
}

json parse_file(const fs::path& p) { return json::parse(slurp(p)); }

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

/// Manifests legitimately differ in measured wall time; everything else must
/// be reproducible.
json manifest_without_clock(const fs::path& p) {
  json j = parse_file(p);
  j.erase("wall_clock_seconds");
  return j;
}

}  // namespace

TEST_CASE("version and schema queries") {
  TempDir tmp;
  auto version = run_cli({"--version"}, tmp.path());
  CHECK(version.exit_code == 0);
  CHECK(version.out.find("cutmit 1.0.0") != std::string::npos);

  auto list = run_cli({"--schema", "list"}, tmp.path());
  CHECK(list.exit_code == 0);
  CHECK(list.out.find("distribution\n") != std::string::npos);
  CHECK(list.out.find("campaign\n") != std::string::npos);
  CHECK(list.out.find("run_manifest\n") != std::string::npos);

  auto one = run_cli({"--schema", "distribution"}, tmp.path());
  CHECK(one.exit_code == 0);
  json schema = json::parse(one.out);
  CHECK(schema.is_object());
  CHECK(!schema.empty());

  CHECK(run_cli({"--schema", "nonsense"}, tmp.path()).exit_code == 2);
  CHECK(run_cli({}, tmp.path()).exit_code == 2);
  CHECK(run_cli({"frobnicate"}, tmp.path()).exit_code == 2);
  CHECK(run_cli({"simulate", "--no-such-flag"}, tmp.path()).exit_code == 2);
}

TEST_CASE("simulate writes a distribution and a manifest") {
  TempDir tmp;
  fs::path out = tmp.path() / "run";
  auto r = run_cli({"simulate", "--circuit", circuit_file("bell.txt"), "--shots", "0", "--out",
                    out.string()},
                   tmp.path());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("wrote") != std::string::npos);

  json d = parse_file(out / "distribution.json");
  CHECK(d["format"] == "cutmit.distribution/v1");
  CHECK(d["kind"] == "exact");
  CHECK(d["table"]["00"].get<double>() == Catch::Approx(0.5).margin(1e-12));
  CHECK(d["table"]["11"].get<double>() == Catch::Approx(0.5).margin(1e-12));

  json m = parse_file(out / "manifest.json");
  CHECK(m["format"] == "cutmit.run_manifest/v1");
  CHECK(m["command"] == "simulate");
  CHECK(m["inputs"][0]["digest"].get<std::string>().substr(0, 2) == "0x");
  std::vector<std::string> outputs = m["outputs"].get<std::vector<std::string>>();
  CHECK(std::find(outputs.begin(), outputs.end(), "distribution.json") != outputs.end());
  CHECK(std::find(outputs.begin(), outputs.end(), "manifest.json") != outputs.end());
}

TEST_CASE("reruns are byte-identical apart from the clock") {
  TempDir tmp;
  fs::path a = tmp.path() / "a", b = tmp.path() / "b";
  std::vector<std::string> base = {"simulate",         "--circuit", circuit_file("bell.txt"),
                                   "--noise",          noise_file("mild.json"),
                                   "--shots",          "400",
                                   "--seed",           "9"};
  auto run_a = base;
  run_a.insert(run_a.end(), {"--out", a.string()});
  auto run_b = base;
  run_b.insert(run_b.end(), {"--out", b.string()});
  REQUIRE(run_cli(run_a, tmp.path()).exit_code == 0);
  REQUIRE(run_cli(run_b, tmp.path()).exit_code == 0);

  CHECK(slurp(a / "distribution.json") == slurp(b / "distribution.json"));
  json ma = manifest_without_clock(a / "manifest.json");
  json mb = manifest_without_clock(b / "manifest.json");
  // The configured --out differs by design; everything else must agree.
  ma["config"].erase("out");
  mb["config"].erase("out");
  CHECK(ma == mb);

  json d = parse_file(a / "distribution.json");
  CHECK(d["kind"] == "sampled");
  CHECK(d["shots"] == 400);
}

TEST_CASE("the output directory falls back to the environment") {
  TempDir tmp;
  fs::path envout = tmp.path() / "envout";
  auto r = run_cli({"simulate", "--circuit", circuit_file("bell.txt"), "--shots", "0"}, tmp.path(),
                   {"CUTMIT_OUT_DIR=" + envout.string()});
  REQUIRE(r.exit_code == 0);
  CHECK(fs::exists(envout / "distribution.json"));
  CHECK(fs::exists(envout / "manifest.json"));
}

TEST_CASE("cut reconstructs the joint distribution") {
  TempDir tmp;
  fs::path out = tmp.path() / "cut";
  auto r = run_cli({"cut", "--circuit", circuit_file("bell.txt"), "--cut", "q0@1", "--out",
                    out.string()},
                   tmp.path());
  REQUIRE(r.exit_code == 0);
  json rec = parse_file(out / "reconstruction.json");
  CHECK(rec["format"] == "cutmit.reconstruction/v1");
  CHECK(rec["executed_configurations"] == 9);
  CHECK(rec["negativity"].get<double>() < 1e-9);
  CHECK(rec["joint"]["kind"] == "reconstructed");
  CHECK(rec["joint"]["table"]["00"].get<double>() == Catch::Approx(0.5).margin(1e-9));
  CHECK(rec["joint"]["table"]["11"].get<double>() == Catch::Approx(0.5).margin(1e-9));
}

TEST_CASE("invalid inputs exit with code three") {
  TempDir tmp;
  const std::string bell = circuit_file("bell.txt");

  CHECK(run_cli({"cut", "--circuit", bell, "--cut", "q0@1", "--cut", "q0@1"}, tmp.path())
            .exit_code == 3);
  CHECK(run_cli({"cut", "--circuit", bell, "--cut", "q0@9"}, tmp.path()).exit_code == 3);
  CHECK(run_cli({"cut", "--circuit", bell, "--cut", "nonsense"}, tmp.path()).exit_code == 3);

  // Both halves of the cut wire touch q1, so no two-fragment split exists.
  fs::path loop = tmp.path() / "loop.txt";
  write_file(loop, "qubits 2\nCX q0,q1\nCX q0,q1\nmeasure all\n");
  CHECK(run_cli({"cut", "--circuit", loop.string(), "--cut", "q0@1"}, tmp.path()).exit_code == 3);

  fs::path garbage = tmp.path() / "garbage.txt";
  write_file(garbage, "qubits 2\nWOBBLE q0\nmeasure all\n");
  CHECK(run_cli({"simulate", "--circuit", garbage.string()}, tmp.path()).exit_code == 3);

  CHECK(run_cli({"sqem", "run", "--circuit", circuit_file("diag4.txt"), "--noise",
                 noise_file("mild.json"), "--qubits", "9"},
                tmp.path())
            .exit_code == 3);
}

TEST_CASE("missing files exit with code four") {
  TempDir tmp;
  CHECK(run_cli({"simulate", "--circuit", (tmp.path() / "absent.txt").string()}, tmp.path())
            .exit_code == 4);
}

TEST_CASE("pcs writes a readable sandwich and can execute it") {
  TempDir tmp;
  fs::path out = tmp.path() / "pcs";
  auto r = run_cli({"pcs", "--circuit", circuit_file("diag4.txt"), "--check-qubit", "1", "--run",
                    "--out", out.string()},
                   tmp.path());
  REQUIRE(r.exit_code == 0);

  std::string sandwich = slurp(out / "sandwich.txt");
  CHECK(sandwich.find("# check q1:") != std::string::npos);
  CHECK(sandwich.find("qubits 5") != std::string::npos);

  json ps = parse_file(out / "postselection.json");
  CHECK(ps["format"] == "cutmit.postselection/v1");
  CHECK(ps["retained_fraction"].get<double>() == Catch::Approx(1.0).margin(1e-9));
  CHECK(ps["distribution"]["kind"] == "mitigated");

  // The H on q0 blocks a Z-frame check there.
  CHECK(run_cli({"pcs", "--circuit", circuit_file("bell.txt"), "--check-qubit", "0"}, tmp.path())
            .exit_code == 3);
}

TEST_CASE("sqem campaigns write per-qubit artifacts deterministically") {
  TempDir tmp;
  fs::path a = tmp.path() / "a", b = tmp.path() / "b";
  std::vector<std::string> base = {"sqem",     "run",
                                   "--circuit", circuit_file("diag4.txt"),
                                   "--noise",   noise_file("mild.json"),
                                   "--qubits",  "1,2",
                                   "--shots",   "200",
                                   "--seed",    "3"};
  auto run_a = base;
  run_a.insert(run_a.end(), {"--out", a.string()});
  auto run_b = base;
  run_b.insert(run_b.end(), {"--out", b.string()});
  REQUIRE(run_cli(run_a, tmp.path()).exit_code == 0);
  REQUIRE(run_cli(run_b, tmp.path()).exit_code == 0);

  json c = parse_file(a / "campaign.json");
  CHECK(c["format"] == "cutmit.campaign/v1");
  CHECK(c["status"] == "complete");
  CHECK(c["executed_configurations"] == 73);
  CHECK(c["seed"] == 3);
  CHECK(c["unmitigated"] == "unmitigated.json");
  CHECK(c["mitigated"]["1"] == "mitigated_q1.json");
  CHECK(c["mitigated"]["2"] == "mitigated_q2.json");
  for (const char* key : {"retained_fraction", "clipped_mass", "negativity"}) {
    CHECK(c[key].contains("1"));
    CHECK(c[key].contains("2"));
  }
  CHECK(fs::exists(a / "unmitigated.json"));
  CHECK(fs::exists(a / "mitigated_q1.json"));
  CHECK(fs::exists(a / "mitigated_q2.json"));

  json unmit = parse_file(a / "unmitigated.json");
  CHECK(unmit["kind"] == "sampled");
  CHECK(unmit["shots"] == 200);

  CHECK(slurp(a / "campaign.json") == slurp(b / "campaign.json"));
  CHECK(slurp(a / "mitigated_q1.json") == slurp(b / "mitigated_q1.json"));
}

TEST_CASE("failed campaigns keep completed jobs and report the culprit") {
  TempDir tmp;
  fs::path out = tmp.path() / "partial";
  // q1 supports a Z check; q0 (behind an H) does not, so the second job fails.
  auto r = run_cli({"sqem", "run", "--circuit", circuit_file("diag4.txt"), "--noise",
                    noise_file("mild.json"), "--qubits", "1,0", "--shots", "100", "--out",
                    out.string()},
                   tmp.path());
  CHECK(r.exit_code == 3);

  json c = parse_file(out / "campaign.json");
  CHECK(c["status"] == "partial");
  CHECK(c["failed_qubit"] == 0);
  CHECK(!c["error"].get<std::string>().empty());
  CHECK(c["mitigated"].contains("1"));
  CHECK(!c["mitigated"].contains("0"));
  CHECK(c["executed_configurations"] == 37);
  CHECK(fs::exists(out / "unmitigated.json"));
  CHECK(fs::exists(out / "mitigated_q1.json"));
  CHECK(!fs::exists(out / "mitigated_q0.json"));
  CHECK(fs::exists(out / "manifest.json"));
}

TEST_CASE("recombine converges or exits five with artifacts intact") {
  TempDir tmp;
  fs::path unmit_dir = tmp.path() / "unmit";
  REQUIRE(run_cli({"simulate", "--circuit", circuit_file("bell.txt"), "--shots", "0", "--out",
                   unmit_dir.string()},
                  tmp.path())
              .exit_code == 0);
  const std::string unmit = (unmit_dir / "distribution.json").string();

  fs::path target = tmp.path() / "mitigated0.json";
  write_file(target,
             "{\"format\":\"cutmit.distribution/v1\",\"num_bits\":2,\"kind\":\"mitigated\","
             "\"shots\":0,\"table\":{\"00\":0.8,\"11\":0.2}}\n");

  fs::path good = tmp.path() / "good";
  auto ok = run_cli({"recombine", "--unmitigated", unmit, "--mitigated",
                     "0=" + target.string(), "--out", good.string()},
                    tmp.path());
  REQUIRE(ok.exit_code == 0);
  json rec = parse_file(good / "recombined.json");
  CHECK(rec["format"] == "cutmit.recombination/v1");
  CHECK(rec["converged"] == true);
  CHECK(rec["distribution"]["table"]["00"].get<double>() == Catch::Approx(0.8).margin(1e-3));
  std::string trace = slurp(good / "trace.csv");
  CHECK(trace.rfind("iteration,hellinger_step,max_marginal_delta\n", 0) == 0);

  fs::path capped = tmp.path() / "capped";
  auto bad = run_cli({"recombine", "--unmitigated", unmit, "--mitigated",
                      "0=" + target.string(), "--threshold", "1e-9", "--max-iterations", "2",
                      "--out", capped.string()},
                     tmp.path());
  CHECK(bad.exit_code == 5);
  CHECK(bad.err.find("converge") != std::string::npos);
  json failed = parse_file(capped / "recombined.json");
  CHECK(failed["converged"] == false);
  CHECK(failed["iterations"] == 2);
  CHECK(fs::exists(capped / "trace.csv"));
  CHECK(fs::exists(capped / "manifest.json"));

  CHECK(run_cli({"recombine", "--unmitigated", unmit, "--mitigated", "0=" + target.string(),
                 "--mitigated", "0=" + target.string()},
                tmp.path())
            .exit_code == 3);
  CHECK(run_cli({"recombine", "--unmitigated", unmit, "--mitigated", "0=" + target.string(),
                 "--threshold", "2.0"},
                tmp.path())
            .exit_code == 3);
}

TEST_CASE("vqe compare emits the full artifact family") {
  TempDir tmp;
  fs::path ham = tmp.path() / "ham3.txt";
  write_file(ham, "0.4 ZII\n0.3 IZI\n0.2 ZZI\n0.1 XXI\n");
  fs::path out = tmp.path() / "vqe";

  auto r = run_cli({"vqe", "compare",
                    "--ansatz", (testutil::data_path() / "ansatz" / "ansatz3.json").string(),
                    "--params", (testutil::data_path() / "params" / "params3.json").string(),
                    "--ham", ham.string(),
                    "--noise", noise_file("mild.json"),
                    "--shots", "0", "--seeds", "2", "--seed", "5",
                    "--out", out.string()},
                   tmp.path());
  REQUIRE(r.exit_code == 0);

  for (const char* name : {"noiseless.json", "unmitigated.json", "pcs_noisy.json", "sqem.json",
                           "recombined.json", "comparison.json", "manifest.json"})
    CHECK(fs::exists(out / name));

  json cmp = parse_file(out / "comparison.json");
  CHECK(cmp["format"] == "cutmit.comparison/v1");
  CHECK(cmp["num_seeds"] == 2);
  REQUIRE(cmp["per_seed"].size() == 2);
  const json& energies = cmp["per_seed"][0]["energies"];
  for (const char* method : {"noiseless", "unmitigated", "recombined", "pcs_noisy_q0", "sqem_q2"})
    CHECK(energies.contains(method));
  CHECK(cmp["summary"].contains("recombined"));
  CHECK(cmp["summary"]["recombined"].contains("mean"));
  CHECK(cmp["summary"]["recombined"].contains("stderr"));

  json noiseless = parse_file(out / "noiseless.json");
  CHECK(noiseless["format"] == "cutmit.energy_report/v1");
  CHECK(noiseless["method"] == "noiseless");
  CHECK(noiseless["num_seeds"] == 2);
  CHECK(!noiseless["per_term"].empty());

  json pcs = parse_file(out / "pcs_noisy.json");
  CHECK(pcs.contains("per_qubit_energy"));

  std::string csv = slurp(out / "comparison.csv");
  CHECK(csv.rfind("method,energy,stderr\n", 0) == 0);
  CHECK(csv.find("recombined,") != std::string::npos);
}

TEST_CASE("worker count does not change vqe results") {
  TempDir tmp;
  fs::path ham = tmp.path() / "ham3.txt";
  write_file(ham, "0.5 ZZI\n0.3 IZZ\n0.2 XII\n");
  fs::path a = tmp.path() / "a", b = tmp.path() / "b";

  std::vector<std::string> base = {"vqe", "compare",
                                   "--ansatz",
                                   (testutil::data_path() / "ansatz" / "ansatz3.json").string(),
                                   "--params",
                                   (testutil::data_path() / "params" / "params3.json").string(),
                                   "--ham", ham.string(),
                                   "--noise", noise_file("mild.json"),
                                   "--shots", "300", "--seeds", "3", "--seed", "17"};
  auto run_a = base;
  run_a.insert(run_a.end(), {"--jobs", "3", "--out", a.string()});
  auto run_b = base;
  run_b.insert(run_b.end(), {"--jobs", "1", "--out", b.string()});
  REQUIRE(run_cli(run_a, tmp.path()).exit_code == 0);
  REQUIRE(run_cli(run_b, tmp.path()).exit_code == 0);

  for (const char* name : {"noiseless.json", "unmitigated.json", "pcs_noisy.json", "sqem.json",
                           "recombined.json", "comparison.json", "comparison.csv"})
    CHECK(slurp(a / name) == slurp(b / name));
}
