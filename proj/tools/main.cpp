// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end: simulate | cut | pcs | sqem run | recombine |
// vqe compare, plus --version and --schema introspection. Artifacts are
// written atomically; every successful run also writes a manifest with
// input digests and the resolved configuration.
//
// Exit codes: 0 success, 2 usage, 3 invalid input, 4 execution failure,
// 5 non-convergence (artifacts are still written).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cutmit/ansatz.hpp"
#include "cutmit/artifacts.hpp"
#include "cutmit/checks.hpp"
#include "cutmit/circuit_io.hpp"
#include "cutmit/compare.hpp"
#include "cutmit/cutting.hpp"
#include "cutmit/errors.hpp"
#include "cutmit/execute.hpp"
#include "cutmit/parallel.hpp"
#include "cutmit/pipeline.hpp"
#include "cutmit/postselect.hpp"
#include "cutmit/recombine.hpp"
#include "cutmit/reconstruct.hpp"
#include "cutmit/sandwich.hpp"
#include "cutmit/schemas.hpp"
#include "cutmit/variants.hpp"
#include "cutmit/version.hpp"

namespace {

using namespace cutmit;
namespace fs = std::filesystem;

constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitExecution = 4;
constexpr int kExitNotConverged = 5;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

fs::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("CUTMIT_OUT_DIR"); env && *env) return env;
  return ".";
}

Circuit load_circuit(const fs::path& path) {
  return parse_circuit(read_file(path));
}

json load_json(const fs::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

NoiseModel load_noise(const fs::path& path) {
  NoiseModel m = noise_model_from_json(load_json(path));
  m.validate();
  return m;
}

void write_json_artifact(const fs::path& path, const json& j) {
  atomic_write_file(path, j.dump(2) + "\n");
  std::cout << "wrote " << path.string() << "\n";
}

void write_text_artifact(const fs::path& path, const std::string& text) {
  atomic_write_file(path, text);
  std::cout << "wrote " << path.string() << "\n";
}

void write_manifest(const fs::path& dir, RunManifest& m, const Timer& timer) {
  m.outputs.push_back("manifest.json");
  m.wall_clock_seconds = timer.seconds();
  write_json_artifact(dir / "manifest.json", manifest_to_json(m));
}

CutPoint parse_cut_token(const std::string& token) {
  // Grammar: q<qubit>@<position>, e.g. q1@3.
  auto fail = [&] {
    throw ValidationError("bad cut '" + token + "', expected q<k>@<pos>");
  };
  if (token.size() < 4 || token[0] != 'q') fail();
  size_t at = token.find('@');
  if (at == std::string::npos || at < 2 || at + 1 >= token.size()) fail();
  try {
    size_t used = 0;
    int qubit = std::stoi(token.substr(1, at - 1), &used);
    if (used != at - 1) fail();
    int pos = std::stoi(token.substr(at + 1), &used);
    if (used != token.size() - at - 1) fail();
    return CutPoint{qubit, pos};
  } catch (const std::exception&) {
    fail();
  }
  return {};
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string circuit_path;
  std::string noise_path;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_simulate(const SimulateArgs& a) {
  Timer timer;
  fs::path dir = resolve_out_dir(a.out);
  Circuit c = load_circuit(a.circuit_path);
  NoiseModel noise;
  if (!a.noise_path.empty()) noise = load_noise(a.noise_path);

  Distribution d;
  if (a.shots > 0) {
    Rng rng(derive_seed(a.seed, "simulate"));
    d = sample_distribution(c, noise, a.shots, rng);
  } else {
    d = noise.is_trivial() ? exact_distribution_pure(c) : exact_distribution(c, noise);
  }

  RunManifest m;
  m.command = "simulate";
  m.root_seed = a.seed;
  m.config = json{{"circuit", a.circuit_path},
                  {"noise", a.noise_path},
                  {"shots", a.shots},
                  {"seed", a.seed}};
  m.add_input("circuit", a.circuit_path);
  if (!a.noise_path.empty()) m.add_input("noise", a.noise_path);
  write_json_artifact(dir / "distribution.json", distribution_to_json(d));
  m.outputs.push_back("distribution.json");
  write_manifest(dir, m, timer);
  return 0;
}

// ---------------------------------------------------------------------------
// cut

struct CutArgs {
  std::string circuit_path;
  std::vector<std::string> cut_tokens;
  std::string noise_path;
  std::uint64_t shots_per_variant = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_cut(const CutArgs& a) {
  Timer timer;
  fs::path dir = resolve_out_dir(a.out);
  Circuit c = load_circuit(a.circuit_path);
  NoiseModel noise;
  if (!a.noise_path.empty()) noise = load_noise(a.noise_path);

  std::vector<CutPoint> cuts;
  for (const std::string& t : a.cut_tokens) cuts.push_back(parse_cut_token(t));
  FragmentSet fragments = cut_wires(c, cuts);
  // Exact noiseless backends unless sampling or a noise model asks for the
  // hardware emulation path.
  BackendTag tag = (a.shots_per_variant > 0 || !noise.is_trivial())
                       ? BackendTag::HardwareEmulated
                       : BackendTag::NoiselessExact;
  fragments.backend_tags = {tag, tag};
  std::array<BackendConfig, 2> backends{BackendConfig{tag, noise}, BackendConfig{tag, noise}};
  std::vector<VariantAssignment> variants = enumerate_variants(fragments);
  ReconstructionResult rec =
      execute_and_reconstruct(fragments, variants, backends, a.shots_per_variant, a.seed);

  RunManifest m;
  m.command = "cut";
  m.root_seed = a.seed;
  m.config = json{{"circuit", a.circuit_path},
                  {"cuts", a.cut_tokens},
                  {"noise", a.noise_path},
                  {"shots_per_variant", a.shots_per_variant},
                  {"seed", a.seed}};
  m.add_input("circuit", a.circuit_path);
  if (!a.noise_path.empty()) m.add_input("noise", a.noise_path);
  write_json_artifact(dir / "reconstruction.json", reconstruction_to_json(rec));
  m.outputs.push_back("reconstruction.json");
  write_manifest(dir, m, timer);
  return 0;
}

// ---------------------------------------------------------------------------
// pcs

struct PcsArgs {
  std::string circuit_path;
  std::vector<int> check_qubits;
  bool run = false;
  std::string noise_path;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_pcs(const PcsArgs& a) {
  Timer timer;
  fs::path dir = resolve_out_dir(a.out);
  Circuit c = load_circuit(a.circuit_path);
  NoiseModel noise;
  if (!a.noise_path.empty()) noise = load_noise(a.noise_path);

  std::vector<CheckPair> pairs;
  for (int k : a.check_qubits) pairs.push_back(build_z_check(c, k));
  SandwichCircuit s = wrap(c, pairs);

  std::ostringstream header;
  for (const CheckPair& p : s.pairs) {
    header << "# check q" << p.target_qubit << ": ancilla q" << p.ancilla << ", left [";
    for (size_t i = 0; i < p.left.size(); ++i)
      header << (i ? "; " : "") << serialize_gate(p.left[i]);
    header << "], right [";
    for (size_t i = 0; i < p.right.size(); ++i)
      header << (i ? "; " : "") << serialize_gate(p.right[i]);
    header << "]\n";
  }

  RunManifest m;
  m.command = "pcs";
  m.root_seed = a.seed;
  m.config = json{{"circuit", a.circuit_path}, {"check_qubits", a.check_qubits},
                  {"run", a.run},              {"noise", a.noise_path},
                  {"shots", a.shots},          {"seed", a.seed}};
  m.add_input("circuit", a.circuit_path);
  if (!a.noise_path.empty()) m.add_input("noise", a.noise_path);
  write_text_artifact(dir / "sandwich.txt", header.str() + serialize_circuit(s.circuit));
  m.outputs.push_back("sandwich.txt");

  if (a.run) {
    Distribution d;
    if (a.shots > 0) {
      Rng rng(derive_seed(a.seed, "pcs"));
      d = sample_distribution(s.circuit, noise, a.shots, rng);
    } else {
      d = exact_distribution(s.circuit, noise);
    }
    PostSelectionResult ps = post_select(d, s.ancilla_bits);
    write_json_artifact(dir / "postselection.json", postselection_to_json(ps));
    m.outputs.push_back("postselection.json");
  }
  write_manifest(dir, m, timer);
  return 0;
}

// ---------------------------------------------------------------------------
// sqem run

struct SqemArgs {
  std::string circuit_path;
  std::string noise_path;
  std::vector<int> qubits;
  std::uint64_t shots = 10000;
  std::uint64_t seed = 0;
  bool mitigation_spam = false;
  std::string out;
};

int run_sqem(const SqemArgs& a) {
  Timer timer;
  fs::path dir = resolve_out_dir(a.out);

  SqemCampaignConfig cfg;
  cfg.base_circuit = load_circuit(a.circuit_path);
  cfg.noise = load_noise(a.noise_path);
  cfg.qubits = a.qubits;
  cfg.shots = a.shots;
  cfg.seed = a.seed;
  cfg.mitigation_spam = a.mitigation_spam;

  RunManifest m;
  m.command = "sqem run";
  m.root_seed = a.seed;
  m.config = json{{"circuit", a.circuit_path},
                  {"noise", a.noise_path},
                  {"qubits", a.qubits},
                  {"shots", a.shots},
                  {"seed", a.seed},
                  {"mitigation_spam", a.mitigation_spam}};
  m.add_input("circuit", a.circuit_path);
  m.add_input("noise", a.noise_path);

  json campaign_json;
  campaign_json["format"] = "cutmit.campaign/v1";
  auto qubit_file = [](int k) { return "mitigated_q" + std::to_string(k) + ".json"; };

  std::vector<std::pair<int, SqemJobResult>> done;
  auto record = [&](int k, const SqemJobResult& r) { done.emplace_back(k, r); };
  try {
    SqemCampaign campaign = run_campaign(cfg, record);
    campaign_json["status"] = "complete";
    write_json_artifact(dir / "unmitigated.json", distribution_to_json(campaign.unmitigated));
    m.outputs.push_back("unmitigated.json");
    json mitigated = json::object(), retained = json::object(), clipped = json::object(),
         negativity = json::object();
    for (const auto& [k, d] : campaign.mitigated) {
      write_json_artifact(dir / qubit_file(k), distribution_to_json(d));
      m.outputs.push_back(qubit_file(k));
      mitigated[std::to_string(k)] = qubit_file(k);
      retained[std::to_string(k)] = campaign.retained_fraction.at(k);
      clipped[std::to_string(k)] = campaign.clipped_mass.at(k);
      negativity[std::to_string(k)] = campaign.negativity.at(k);
    }
    campaign_json["unmitigated"] = "unmitigated.json";
    campaign_json["mitigated"] = mitigated;
    campaign_json["retained_fraction"] = retained;
    campaign_json["clipped_mass"] = clipped;
    campaign_json["negativity"] = negativity;
    campaign_json["executed_configurations"] = campaign.executed_configurations;
    campaign_json["seed"] = campaign.seed;
    write_json_artifact(dir / "campaign.json", campaign_json);
    m.outputs.push_back("campaign.json");
    write_manifest(dir, m, timer);
    return 0;
  } catch (const Error& e) {
    // Keep whatever completed: the baseline is reproducible from the root
    // seed, per-job results were captured as the campaign progressed.
    campaign_json["status"] = "partial";
    Distribution baseline = campaign_baseline(cfg);
    write_json_artifact(dir / "unmitigated.json", distribution_to_json(baseline));
    m.outputs.push_back("unmitigated.json");
    json mitigated = json::object(), retained = json::object(), clipped = json::object(),
         negativity = json::object();
    std::int64_t configs = 1;
    // Jobs run in --qubits order, so the first incomplete entry names the
    // failed qubit.
    int failed = done.size() < a.qubits.size() ? a.qubits[done.size()] : -1;
    for (const auto& [k, r] : done) {
      write_json_artifact(dir / qubit_file(k), distribution_to_json(r.mitigated));
      m.outputs.push_back(qubit_file(k));
      mitigated[std::to_string(k)] = qubit_file(k);
      retained[std::to_string(k)] = r.retained_fraction;
      clipped[std::to_string(k)] = r.clipped_mass;
      negativity[std::to_string(k)] = r.negativity;
      configs += r.executed_configurations;
    }
    campaign_json["unmitigated"] = "unmitigated.json";
    campaign_json["mitigated"] = mitigated;
    campaign_json["retained_fraction"] = retained;
    campaign_json["clipped_mass"] = clipped;
    campaign_json["negativity"] = negativity;
    campaign_json["executed_configurations"] = configs;
    campaign_json["seed"] = a.seed;
    if (failed >= 0) campaign_json["failed_qubit"] = failed;
    campaign_json["error"] = e.what();
    write_json_artifact(dir / "campaign.json", campaign_json);
    m.outputs.push_back("campaign.json");
    write_manifest(dir, m, timer);
    throw;
  }
}

// ---------------------------------------------------------------------------
// recombine

struct RecombineArgs {
  std::string unmitigated_path;
  std::vector<std::string> mitigated_tokens;  // k=file
  double threshold = 1e-4;
  std::int64_t max_iterations = 10000;
  std::string out;
};

int run_recombine(const RecombineArgs& a) {
  Timer timer;
  fs::path dir = resolve_out_dir(a.out);
  Distribution unmitigated = distribution_from_json(load_json(a.unmitigated_path));

  RunManifest m;
  m.command = "recombine";
  m.config = json{{"unmitigated", a.unmitigated_path},
                  {"mitigated", a.mitigated_tokens},
                  {"threshold", a.threshold},
                  {"max_iterations", a.max_iterations}};
  m.add_input("unmitigated", a.unmitigated_path);

  std::map<int, Distribution> mitigated;
  for (const std::string& token : a.mitigated_tokens) {
    size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= token.size())
      throw ValidationError("bad --mitigated '" + token + "', expected k=file");
    int k;
    try {
      size_t used = 0;
      k = std::stoi(token.substr(0, eq), &used);
      if (used != eq) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError("bad --mitigated qubit in '" + token + "'");
    }
    if (mitigated.count(k)) throw ValidationError("duplicate --mitigated qubit " + std::to_string(k));
    std::string path = token.substr(eq + 1);
    mitigated[k] = distribution_from_json(load_json(path));
    m.add_input("mitigated_q" + std::to_string(k), path);
  }

  RecombinationConfig cfg;
  cfg.threshold = a.threshold;
  cfg.max_iterations = a.max_iterations;
  RecombinationResult r = recombine(unmitigated, mitigated, cfg);

  write_json_artifact(dir / "recombined.json", recombination_to_json(r));
  m.outputs.push_back("recombined.json");
  write_text_artifact(dir / "trace.csv", recombination_trace_csv(r));
  m.outputs.push_back("trace.csv");
  write_manifest(dir, m, timer);
  if (!r.converged) {
    std::cerr << "cutmit: recombination did not converge within " << a.max_iterations
              << " iterations (final step " << format_double(r.final_step) << ")\n";
    return kExitNotConverged;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// vqe compare

struct VqeArgs {
  std::string ansatz_path;
  std::string params_path;
  std::string ham_path;
  std::string noise_path;
  std::uint64_t shots = 10000;
  int num_seeds = 1;
  std::uint64_t seed = 0;
  std::vector<int> qubits;
  double threshold = 1e-4;
  std::int64_t max_iterations = 10000;
  int jobs = 1;
  std::string out;
};

struct MethodStats {
  double mean = 0.0;
  double stderr_ = 0.0;
};

MethodStats stats_of(const std::vector<double>& xs) {
  MethodStats s;
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double var = 0.0;
    for (double x : xs) var += (x - s.mean) * (x - s.mean);
    var /= static_cast<double>(xs.size() - 1);
    s.stderr_ = std::sqrt(var / static_cast<double>(xs.size()));
  }
  return s;
}

int run_vqe(const VqeArgs& a) {
  Timer timer;
  fs::path dir = resolve_out_dir(a.out);
  AnsatzSpec spec = ansatz_from_json(load_json(a.ansatz_path));
  std::vector<double> params = parameters_from_json(load_json(a.params_path));
  Hamiltonian ham = parse_hamiltonian(read_file(a.ham_path));
  NoiseModel noise = load_noise(a.noise_path);
  if (a.num_seeds < 1) throw ValidationError("--seeds must be at least 1");

  ComparisonConfig cfg;
  cfg.shots = a.shots;
  cfg.protected_qubits = a.qubits;
  cfg.recombination.threshold = a.threshold;
  cfg.recombination.max_iterations = a.max_iterations;

  std::vector<std::uint64_t> roots(static_cast<size_t>(a.num_seeds));
  for (int i = 0; i < a.num_seeds; ++i)
    roots[static_cast<size_t>(i)] = derive_seed(a.seed, "seed/" + std::to_string(i));
  std::vector<ComparisonResult> results(static_cast<size_t>(a.num_seeds));
  parallel_for_index(results.size(), a.jobs, [&](size_t i) {
    ComparisonConfig c = cfg;
    c.seed = roots[i];
    results[i] = run_comparison(spec, params, ham, noise, c);
  });

  // Per-method energy series across seeds; per-qubit methods also feed a
  // family aggregate averaged over qubits within each seed.
  std::map<std::string, std::vector<double>> series;
  std::map<std::string, std::map<std::string, std::vector<double>>> per_term_series;
  for (const ComparisonResult& r : results) {
    for (const EnergyReport* rep : r.all_reports()) {
      series[rep->method].push_back(rep->energy);
      for (const auto& [word, e] : rep->per_term) per_term_series[rep->method][word].push_back(e);
    }
    auto family_mean = [](const std::map<int, EnergyReport>& reps) {
      double s = 0.0;
      for (const auto& [k, rep] : reps) s += rep.energy;
      return s / static_cast<double>(reps.size());
    };
    if (!r.pcs_noisy.empty()) series["pcs_noisy"].push_back(family_mean(r.pcs_noisy));
    if (!r.sqem.empty()) series["sqem"].push_back(family_mean(r.sqem));
  }

  std::map<std::string, MethodStats> summary;
  for (const auto& [method, xs] : series) summary[method] = stats_of(xs);

  auto family_report = [&](const std::string& family,
                           const std::vector<std::string>& members) -> json {
    json j;
    j["format"] = "cutmit.energy_report/v1";
    j["method"] = family;
    j["energy"] = summary.at(family).mean;
    j["shots"] = family == "noiseless" ? std::uint64_t{0} : a.shots;
    std::map<std::string, std::vector<double>> terms;
    for (const std::string& member : members)
      for (const auto& [word, xs] : per_term_series[member])
        terms[word].insert(terms[word].end(), xs.begin(), xs.end());
    json per_term = json::object();
    for (const auto& [word, xs] : terms) per_term[word] = stats_of(xs).mean;
    j["per_term"] = per_term;
    j["stderr"] = summary.at(family).stderr_;
    j["num_seeds"] = a.num_seeds;
    if (members.size() > 1) {
      json pq = json::object();
      for (const std::string& member : members) {
        size_t q = member.rfind("_q");
        pq[member.substr(q + 2)] = summary.at(member).mean;
      }
      j["per_qubit_energy"] = pq;
    }
    return j;
  };

  std::vector<std::string> pcs_members, sqem_members;
  for (const auto& [k, rep] : results[0].pcs_noisy)
    pcs_members.push_back("pcs_noisy_q" + std::to_string(k));
  for (const auto& [k, rep] : results[0].sqem)
    sqem_members.push_back("sqem_q" + std::to_string(k));

  RunManifest m;
  m.command = "vqe compare";
  m.root_seed = a.seed;
  m.config = json{{"ansatz", a.ansatz_path},
                  {"params", a.params_path},
                  {"ham", a.ham_path},
                  {"noise", a.noise_path},
                  {"shots", a.shots},
                  {"seeds", a.num_seeds},
                  {"seed", a.seed},
                  {"qubits", a.qubits},
                  {"threshold", a.threshold},
                  {"max_iterations", a.max_iterations},
                  {"jobs", a.jobs}};
  m.add_input("ansatz", a.ansatz_path);
  m.add_input("params", a.params_path);
  m.add_input("ham", a.ham_path);
  m.add_input("noise", a.noise_path);

  write_json_artifact(dir / "noiseless.json", family_report("noiseless", {"noiseless"}));
  write_json_artifact(dir / "unmitigated.json", family_report("unmitigated", {"unmitigated"}));
  write_json_artifact(dir / "pcs_noisy.json", family_report("pcs_noisy", pcs_members));
  write_json_artifact(dir / "sqem.json", family_report("sqem", sqem_members));
  write_json_artifact(dir / "recombined.json", family_report("recombined", {"recombined"}));
  for (const char* f : {"noiseless.json", "unmitigated.json", "pcs_noisy.json", "sqem.json",
                        "recombined.json"})
    m.outputs.push_back(f);

  json comparison;
  comparison["format"] = "cutmit.comparison/v1";
  comparison["num_seeds"] = a.num_seeds;
  comparison["shots"] = a.shots;
  comparison["root_seed"] = a.seed;
  json per_seed = json::array();
  for (size_t i = 0; i < results.size(); ++i)
    per_seed.push_back(comparison_seed_to_json(results[i], roots[i]));
  comparison["per_seed"] = per_seed;
  json summary_json = json::object();
  for (const auto& [method, st] : summary)
    summary_json[method] = json{{"mean", st.mean}, {"stderr", st.stderr_}};
  comparison["summary"] = summary_json;
  write_json_artifact(dir / "comparison.json", comparison);
  m.outputs.push_back("comparison.json");

  std::ostringstream csv;
  csv << "method,energy,stderr\n";
  std::vector<std::string> order{"noiseless", "unmitigated", "pcs_noisy", "sqem", "recombined"};
  order.insert(order.end(), pcs_members.begin(), pcs_members.end());
  order.insert(order.end(), sqem_members.begin(), sqem_members.end());
  for (const std::string& method : order)
    csv << method << "," << format_double(summary.at(method).mean) << ","
        << format_double(summary.at(method).stderr_) << "\n";
  write_text_artifact(dir / "comparison.csv", csv.str());
  m.outputs.push_back("comparison.csv");
  write_manifest(dir, m, timer);

  bool all_converged = true;
  for (const ComparisonResult& r : results) all_converged = all_converged && r.recombination_converged;
  if (!all_converged) {
    std::cerr << "cutmit: recombination did not converge for at least one seed\n";
    return kExitNotConverged;
  }
  return 0;
}

int classify_error(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const UnsupportedSizeError*>(&e) ||
      dynamic_cast<const InfeasibleCutError*>(&e) ||
      dynamic_cast<const CombinatorialBudgetError*>(&e) ||
      dynamic_cast<const CheckInfeasibleError*>(&e) || dynamic_cast<const PlanningError*>(&e))
    return kExitInvalidInput;
  return kExitExecution;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wire-cut Pauli-check error mitigation pipeline"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  std::string schema_name;
  app.add_option("--schema", schema_name,
                 "Print an artifact schema to stdout and exit ('list' for names)");

  SimulateArgs sim;
  CLI::App* c_sim = app.add_subcommand("simulate", "Run one circuit and write its distribution");
  c_sim->add_option("--circuit", sim.circuit_path, "Circuit text file")->required();
  c_sim->add_option("--noise", sim.noise_path, "Noise model JSON");
  c_sim->add_option("--shots", sim.shots, "Samples to draw (0 = exact)");
  c_sim->add_option("--seed", sim.seed, "Root seed");
  c_sim->add_option("--out", sim.out, "Output directory (default $CUTMIT_OUT_DIR or .)");

  CutArgs cut;
  CLI::App* c_cut = app.add_subcommand("cut", "Cut wires and reconstruct the joint distribution");
  c_cut->add_option("--circuit", cut.circuit_path, "Circuit text file")->required();
  c_cut->add_option("--cut", cut.cut_tokens, "Cut point q<k>@<pos> (repeatable)")->required();
  c_cut->add_option("--noise", cut.noise_path, "Noise model JSON (hardware emulation)");
  c_cut->add_option("--shots-per-variant", cut.shots_per_variant,
                    "Samples per executed configuration (0 = exact)");
  c_cut->add_option("--seed", cut.seed, "Root seed");
  c_cut->add_option("--out", cut.out, "Output directory");

  PcsArgs pcs;
  CLI::App* c_pcs = app.add_subcommand("pcs", "Wrap a circuit with Pauli checks");
  c_pcs->add_option("--circuit", pcs.circuit_path, "Circuit text file")->required();
  c_pcs->add_option("--check-qubit", pcs.check_qubits, "Protected qubit (repeatable)")->required();
  c_pcs->add_flag("--run", pcs.run, "Also execute and post-select");
  c_pcs->add_option("--noise", pcs.noise_path, "Noise model JSON for --run");
  c_pcs->add_option("--shots", pcs.shots, "Samples for --run (0 = exact)");
  c_pcs->add_option("--seed", pcs.seed, "Root seed");
  c_pcs->add_option("--out", pcs.out, "Output directory");

  SqemArgs sqem;
  CLI::App* c_sqem = app.add_subcommand("sqem", "Cut-based mitigation campaigns");
  CLI::App* c_sqem_run = c_sqem->add_subcommand("run", "Run a mitigation campaign");
  c_sqem_run->add_option("--circuit", sqem.circuit_path, "Circuit text file")->required();
  c_sqem_run->add_option("--noise", sqem.noise_path, "Noise model JSON")->required();
  c_sqem_run->add_option("--qubits", sqem.qubits, "Protected qubits, comma separated")
      ->required()
      ->delimiter(',');
  c_sqem_run->add_option("--shots", sqem.shots, "Samples per configuration (0 = exact)");
  c_sqem_run->add_option("--seed", sqem.seed, "Root seed");
  c_sqem_run->add_flag("--mitigation-spam", sqem.mitigation_spam,
                       "Expose the mitigation fragment to SPAM and readout flips");
  c_sqem_run->add_option("--out", sqem.out, "Output directory");
  c_sqem->require_subcommand(1);

  RecombineArgs rec;
  CLI::App* c_rec = app.add_subcommand("recombine", "Merge per-qubit mitigated marginals");
  c_rec->add_option("--unmitigated", rec.unmitigated_path, "Unmitigated distribution JSON")
      ->required();
  c_rec->add_option("--mitigated", rec.mitigated_tokens, "k=distribution.json (repeatable)")
      ->required();
  c_rec->add_option("--threshold", rec.threshold, "Hellinger stopping threshold");
  c_rec->add_option("--max-iterations", rec.max_iterations, "Iteration cap");
  c_rec->add_option("--out", rec.out, "Output directory");

  VqeArgs vqe;
  CLI::App* c_vqe = app.add_subcommand("vqe", "Energy estimation pipelines");
  CLI::App* c_vqe_cmp = c_vqe->add_subcommand("compare", "Compare mitigation methods");
  c_vqe_cmp->add_option("--ansatz", vqe.ansatz_path, "Ansatz spec JSON")->required();
  c_vqe_cmp->add_option("--params", vqe.params_path, "Parameter set JSON")->required();
  c_vqe_cmp->add_option("--ham", vqe.ham_path, "Hamiltonian text file")->required();
  c_vqe_cmp->add_option("--noise", vqe.noise_path, "Noise model JSON")->required();
  c_vqe_cmp->add_option("--shots", vqe.shots, "Samples per group run (0 = exact)");
  c_vqe_cmp->add_option("--seeds", vqe.num_seeds, "Independent repetitions");
  c_vqe_cmp->add_option("--seed", vqe.seed, "Root seed");
  c_vqe_cmp->add_option("--qubits", vqe.qubits, "Protected qubits (default: all)")->delimiter(',');
  c_vqe_cmp->add_option("--threshold", vqe.threshold, "Recombination stopping threshold");
  c_vqe_cmp->add_option("--max-iterations", vqe.max_iterations, "Recombination iteration cap");
  c_vqe_cmp->add_option("--jobs", vqe.jobs, "Worker threads across seeds");
  c_vqe_cmp->add_option("--out", vqe.out, "Output directory");
  c_vqe->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (!schema_name.empty()) {
    if (schema_name == "list") {
      for (const std::string& name : schemas::names()) std::cout << name << "\n";
      return 0;
    }
    const auto& reg = schemas::registry();
    auto it = reg.find(schema_name);
    if (it == reg.end()) {
      std::cerr << "cutmit: unknown schema '" << schema_name << "' (try --schema list)\n";
      return kExitUsage;
    }
    std::cout << it->second;
    return 0;
  }

  try {
    if (c_sim->parsed()) return run_simulate(sim);
    if (c_cut->parsed()) return run_cut(cut);
    if (c_pcs->parsed()) return run_pcs(pcs);
    if (c_sqem->parsed()) return run_sqem(sqem);
    if (c_rec->parsed()) return run_recombine(rec);
    if (c_vqe->parsed()) return run_vqe(vqe);
  } catch (const std::exception& e) {
    std::cerr << "cutmit: error: " << e.what() << "\n";
    return classify_error(e);
  }

  std::cerr << app.help();
  return kExitUsage;
}
