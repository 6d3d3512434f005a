// Copyright 2026 The vqesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vqesim/error.hpp"
#include "vqesim/exact.hpp"
#include "vqesim/fermion.hpp"
#include "vqesim/geometry.hpp"
#include "vqesim/measurement.hpp"
#include "vqesim/noise.hpp"
#include "vqesim/statevector.hpp"
#include "vqesim/version.hpp"

namespace vqesim::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw RuntimeError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw RuntimeError("write failed for '" + path.string() + "'");
}

void require_file(const fs::path& path, std::string_view what) {
  if (!fs::is_regular_file(path)) {
    throw ValidationError(fmt::format("{} '{}' does not exist", what, path.string()));
  }
}

std::string hex64(std::uint64_t v) { return fmt::format("{:016x}", v); }

/// ISO-8601 UTC; SOURCE_DATE_EPOCH pins it for reproducible outputs.
std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Shortest round-trip text for finite values, "nan" otherwise.
std::string csv_number(double v) {
  if (!std::isfinite(v)) return "nan";
  return fmt::format("{}", v);
}

json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

fs::path resolve_sidecar(const ProblemSpec& spec) {
  if (!spec.sidecar.empty()) return spec.sidecar;
  fs::path guess = spec.fcidump;
  guess.replace_extension(".json");
  if (fs::is_regular_file(guess)) return guess;
  return {};
}

double reference_energy(const Problem& p) {
  if (p.n_qubits > ExactOptions{}.qubit_cap) return kNaN;
  return ground_state(p.hamiltonian, p.n_electrons, p.e_core).ground_energy;
}

json metadata_json(const std::string& canonical_spec) {
  json m;
  m["generated_at"] = utc_timestamp();
  m["tool"] = "vqesim";
  m["version"] = std::string(kVersion);
  m["spec_hash"] = hex64(fnv1a64(canonical_spec));
  return m;
}

json metadata_json(const CampaignSpec* spec) {
  json m = metadata_json(spec->canonical_json());
  m["base_seed"] = spec->vqe.rng_seed;
  return m;
}

json problem_json(const ProblemSpec& spec) {
  json j;
  j["fcidump"] = spec.fcidump.filename().string();
  j["fcidump_fnv1a"] = hex64(fnv1a64(read_file(spec.fcidump)));
  const fs::path side = resolve_sidecar(spec);
  j["sidecar_fnv1a"] = side.empty() ? json(nullptr) : json(hex64(fnv1a64(read_file(side))));
  j["eps1"] = spec.eps1 ? json(*spec.eps1) : json(nullptr);
  j["eps2"] = spec.eps2 ? json(*spec.eps2) : json(nullptr);
  j["active"] = spec.active;
  j["frozen"] = spec.frozen;
  return j;
}

InitialGuessKind resolve_init(const CampaignSpec& spec, const PreparedAnsatz& pa) {
  if (spec.init == "auto") {
    if (spec.ansatz.family == "qucc" && !pa.mp2_theta.empty()) return InitialGuessKind::mp2;
    return spec.ansatz.family == "qucc" ? InitialGuessKind::zeros
                                        : InitialGuessKind::random_uniform;
  }
  return initial_guess_from_name(spec.init);
}

std::optional<NoiseModel> base_noise(const CampaignSpec& spec) {
  std::optional<NoiseModel> nm;
  if (!spec.noise_file.empty()) nm = NoiseModel::load(spec.noise_file.string());
  if (spec.t1_us || spec.axis == SweepAxis::t1) {
    if (!nm) nm = NoiseModel{};
  }
  if (nm && spec.t1_us) nm->t1_us = *spec.t1_us;
  if (nm && spec.t2_us) nm->t2_us = *spec.t2_us;
  return nm;
}

/// One sweep point, fully specified.
struct PointPlan {
  double sweep_value = 0.0;
  ProblemSpec problem;
  std::optional<double> t1_us;
  std::optional<std::size_t> n_shots;
};

std::vector<PointPlan> plan_points(const CampaignSpec& spec) {
  std::vector<PointPlan> plan;
  switch (spec.axis) {
    case SweepAxis::none:
      plan.push_back({spec.params.empty() ? 0.0 : spec.params.front(), spec.problem, {}, {}});
      break;
    case SweepAxis::t1:
      for (double t1 : spec.t1_list) plan.push_back({t1, spec.problem, t1, {}});
      break;
    case SweepAxis::shots:
      for (std::size_t s : spec.shots_list) {
        plan.push_back({static_cast<double>(s), spec.problem, {}, s});
      }
      break;
    case SweepAxis::fcidump_list:
      for (std::size_t i = 0; i < spec.fcidump_list.size(); ++i) {
        PointPlan p{spec.params.empty() ? static_cast<double>(i) : spec.params[i],
                    spec.problem, {}, {}};
        p.problem.fcidump = spec.fcidump_list[i];
        p.problem.sidecar.clear();
        plan.push_back(std::move(p));
      }
      break;
  }
  return plan;
}

std::string point_filename(std::size_t k) { return fmt::format("point_{:03d}.json", k); }

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void ProblemSpec::validate() const {
  require_file(fcidump, "FCIDUMP");
  if (!sidecar.empty()) require_file(sidecar, "sidecar");
  if (eps1.has_value() != eps2.has_value()) {
    throw ValidationError("--eps1 and --eps2 must be given together");
  }
  if (!frozen.empty() && active.empty()) {
    throw ValidationError("--frozen needs an explicit --active list");
  }
  if (!active.empty() && eps1) {
    throw ValidationError("give either --active or --eps1/--eps2, not both");
  }
}

Problem prepare_problem(const ProblemSpec& spec) {
  spec.validate();
  Problem p;
  p.full = load_fcidump(spec.fcidump.string());
  if (const fs::path side = resolve_sidecar(spec); !side.empty()) {
    apply_sidecar(p.full, load_sidecar(side.string()));
  }
  if (!spec.active.empty()) {
    p.active_space = make_active_space(p.full, spec.active, spec.frozen);
  } else if (spec.eps1) {
    p.active_space = select_active_space(p.full, *spec.eps1, *spec.eps2);
  } else {
    std::vector<std::size_t> all(p.full.n_orbitals);
    std::iota(all.begin(), all.end(), std::size_t{0});
    p.active_space = make_active_space(p.full, all, {});
  }
  p.frozen = freeze_orbitals(p.full, p.active_space);
  p.hamiltonian = qubit_hamiltonian(p.frozen);
  p.e_core = p.frozen.e_core;
  p.n_qubits = 2 * p.frozen.n_orbitals;
  p.n_electrons = p.frozen.n_electrons;
  const std::uint64_t hf_index = (std::uint64_t{1} << p.n_electrons) - 1;
  p.hf_energy = p.e_core +
                expectation_exact(Statevector::basis(p.n_qubits, hf_index), p.hamiltonian);
  return p;
}

void AnsatzSpec::validate() const {
  if (family != "he" && family != "qucc") {
    throw ValidationError("--ansatz must be 'he' or 'qucc', got '" + family + "'");
  }
  if (family == "he") {
    (void)he_variant_from_name(variant);
    if (depth < 1) throw ValidationError("--depth must be >= 1");
  }
}

PreparedAnsatz prepare_ansatz(const Problem& p, const AnsatzSpec& spec) {
  spec.validate();
  PreparedAnsatz out;
  if (spec.family == "he") {
    out.ansatz.circuit = build_he(he_variant_from_name(spec.variant), p.n_qubits, spec.depth);
    return out;
  }
  const QuccGenerator gen = build_qucc_generator(p.frozen, QuccOptions{spec.spin_conserving});
  if (gen.n_parameters() == 0) {
    throw ValidationError("the active space admits no excitations");
  }
  out.ansatz.circuit = trotterize_qucc(gen);
  out.ansatz.fast_path = qucc_rotation_program(gen);
  if (p.frozen.orbital_energies) {
    out.mp2_theta = gen.theta_from(mp2_initial_amplitudes(p.frozen, gen));
  }
  return out;
}

std::string_view sweep_axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::none: return "none";
    case SweepAxis::t1: return "t1_us";
    case SweepAxis::shots: return "n_shots";
    case SweepAxis::fcidump_list: return "parameter";
  }
  return "none";
}

void CampaignSpec::validate() const {
  if (axis == SweepAxis::fcidump_list) {
    if (!problem.fcidump.empty()) {
      throw ValidationError("give either --fcidump or --fcidump-list, not both");
    }
    if (fcidump_list.empty()) throw ValidationError("--fcidump-list is empty");
    for (const auto& f : fcidump_list) require_file(f, "FCIDUMP");
    if (!params.empty() && params.size() != fcidump_list.size()) {
      throw ValidationError(fmt::format("--params has {} values for {} FCIDUMP files",
                                        params.size(), fcidump_list.size()));
    }
    ProblemSpec probe = problem;
    probe.fcidump = fcidump_list.front();
    probe.sidecar.clear();
    probe.validate();
  } else {
    problem.validate();
    if (!fcidump_list.empty()) throw ValidationError("--fcidump-list needs the vqe command");
  }
  const int axes = static_cast<int>(!t1_list.empty()) + static_cast<int>(!shots_list.empty()) +
                   static_cast<int>(!fcidump_list.empty());
  if (axes > 1) throw ValidationError("a campaign sweeps at most one axis");
  if (axis == SweepAxis::t1 && t1_list.empty()) throw ValidationError("--t1-list is empty");
  if (axis == SweepAxis::shots && shots_list.empty()) {
    throw ValidationError("--shots-list is empty");
  }
  for (double t1 : t1_list) {
    if (!(t1 > 0)) throw ValidationError(fmt::format("T1 must be positive, got {}", t1));
  }
  ansatz.validate();
  if (n_trials < 1) throw ValidationError("--trials must be >= 1");
  if (jobs < 1) throw ValidationError("--jobs must be >= 1");
  if (init != "auto") (void)initial_guess_from_name(init);
  if (init == "explicit" && explicit_theta.empty()) {
    throw ValidationError("--init explicit needs --theta values");
  }
  if (init == "mp2" && ansatz.family != "qucc") {
    throw ValidationError("the mp2 initial guess needs the qucc ansatz");
  }
  if (!noise_file.empty()) require_file(noise_file, "noise model");
  if (!std::isfinite(vqe.init_perturbation) || vqe.init_perturbation < 0) {
    throw ValidationError("--perturbation must be >= 0");
  }
  if (out_dir.empty()) {
    throw ValidationError(fmt::format("no output directory: pass --out or set {}", kOutDirEnv));
  }
}

std::string CampaignSpec::canonical_json() const {
  json j;
  if (axis == SweepAxis::fcidump_list) {
    auto files = json::array();
    for (const auto& f : fcidump_list) {
      files.push_back({{"fcidump", f.filename().string()},
                       {"fcidump_fnv1a", hex64(fnv1a64(read_file(f)))}});
    }
    j["problems"] = files;
    j["eps1"] = problem.eps1 ? json(*problem.eps1) : json(nullptr);
    j["eps2"] = problem.eps2 ? json(*problem.eps2) : json(nullptr);
    j["active"] = problem.active;
    j["frozen"] = problem.frozen;
  } else {
    j["problem"] = problem_json(problem);
  }
  j["ansatz"] = {{"family", ansatz.family},
                 {"variant", ansatz.family == "he" ? json(ansatz.variant) : json(nullptr)},
                 {"depth", ansatz.family == "he" ? json(ansatz.depth) : json(nullptr)},
                 {"spin_conserving", ansatz.spin_conserving}};
  j["optimizer"] = std::string(optimizer_name(vqe.optimizer));
  j["max_evaluations"] = vqe.max_iterations;
  j["n_shots"] = vqe.n_shots;
  j["group_qubitwise"] = vqe.sampling.group_qubitwise;
  j["init"] = init;
  j["explicit_theta"] = explicit_theta;
  j["init_perturbation"] = vqe.init_perturbation;
  j["rho_begin"] = vqe.rho_begin;
  j["rho_end"] = vqe.rho_end;
  j["rng_seed"] = vqe.rng_seed;
  j["n_trials"] = n_trials;
  if (const auto nm = base_noise(*this)) {
    j["noise"] = json::parse(nm->to_json());
  } else {
    j["noise"] = nullptr;
  }
  j["sweep_axis"] = std::string(sweep_axis_name(axis));
  j["t1_list"] = t1_list;
  j["shots_list"] = shots_list;
  j["params"] = params;
  j["include_traces"] = include_traces;
  return j.dump();
}

std::string campaign_csv_header() {
  return "sweep_value,mean,min,q1,median,q3,max,reference_energy,initial_energy,hf_energy\n";
}

std::vector<SweepPointOutcome> run_campaign(const CampaignSpec& spec, std::ostream& log) {
  spec.validate();
  fs::create_directories(spec.out_dir);
  const auto plan = plan_points(spec);
  const auto noise0 = base_noise(spec);
  const json spec_json = json::parse(spec.canonical_json());

  std::optional<Problem> shared_problem;
  if (spec.axis != SweepAxis::fcidump_list) shared_problem = prepare_problem(spec.problem);

  std::vector<SweepPointOutcome> outcomes;
  auto points = json::array();
  std::string csv = campaign_csv_header();
  for (std::size_t k = 0; k < plan.size(); ++k) {
    const PointPlan& pp = plan[k];
    SweepPointOutcome oc;
    oc.sweep_value = pp.sweep_value;
    oc.reference_energy = kNaN;
    oc.initial_energy = kNaN;
    oc.hf_energy = kNaN;
    json pj;
    pj["metadata"] = metadata_json(&spec);
    pj["sweep_axis"] = std::string(sweep_axis_name(spec.axis));
    pj["sweep_value"] = pp.sweep_value;
    pj["fcidump"] = pp.problem.fcidump.filename().string();
    try {
      const Problem problem =
          shared_problem ? *shared_problem : prepare_problem(pp.problem);
      const PreparedAnsatz pa = prepare_ansatz(problem, spec.ansatz);
      VqeConfig cfg = spec.vqe;
      cfg.initial_guess = resolve_init(spec, pa);
      if (cfg.initial_guess == InitialGuessKind::mp2) {
        if (pa.mp2_theta.empty()) {
          throw ValidationError("the mp2 initial guess needs orbital energies");
        }
        cfg.reference_theta = pa.mp2_theta;
      } else if (cfg.initial_guess == InitialGuessKind::explicit_vector) {
        cfg.reference_theta = spec.explicit_theta;
      }
      cfg.noise = noise0;
      if (pp.t1_us) {
        // T2 follows T1 along a T1 sweep unless pinned with --t2.
        cfg.noise->t1_us = *pp.t1_us;
        cfg.noise->t2_us = spec.t2_us.value_or(*pp.t1_us);
      }
      if (pp.n_shots) cfg.n_shots = *pp.n_shots;
      cfg.record_trace = true;
      cfg.validate(pa.ansatz.n_parameters());

      oc.hf_energy = problem.hf_energy;
      oc.reference_energy = reference_energy(problem);
      log << fmt::format("[{}/{}] {}={} qubits={} parameters={} trials={}\n", k + 1,
                         plan.size(), sweep_axis_name(spec.axis), pp.sweep_value,
                         problem.n_qubits, pa.ansatz.n_parameters(), spec.n_trials);
      const TrialEnsemble ens = run_trials(pa.ansatz, problem.hamiltonian, problem.e_core,
                                           cfg, spec.n_trials, spec.jobs);
      oc.summary = ens.summary;
      double init_sum = 0.0;
      std::size_t n_ok = 0;
      std::size_t n_failed = 0;
      for (const auto& t : ens.trials) {
        if (t.result) {
          init_sum += t.result->initial_energy;
          ++n_ok;
        } else {
          ++n_failed;
        }
      }
      if (n_ok > 0) oc.initial_energy = init_sum / static_cast<double>(n_ok);
      if (n_failed > 0) {
        oc.error = fmt::format("{} of {} trials failed", n_failed, ens.trials.size());
      }
      pj["n_qubits"] = problem.n_qubits;
      pj["n_electrons"] = problem.n_electrons;
      pj["n_parameters"] = pa.ansatz.n_parameters();
      pj["initial_guess"] = std::string(initial_guess_name(cfg.initial_guess));
      pj["noise"] = cfg.noise ? json::parse(cfg.noise->to_json()) : json(nullptr);
      pj["n_shots"] = cfg.n_shots;
      pj["reference_energy"] = number_or_null(oc.reference_energy);
      pj["hf_energy"] = oc.hf_energy;
      pj["ensemble"] = json::parse(ensemble_to_json(ens, spec.include_traces));
    } catch (const ValidationError& e) {
      oc.error = fmt::format("sweep point {} ({}={}): {}", k, sweep_axis_name(spec.axis),
                             pp.sweep_value, e.what());
      oc.invalid_input = true;
    } catch (const std::exception& e) {
      oc.error = fmt::format("sweep point {} ({}={}): {}", k, sweep_axis_name(spec.axis),
                             pp.sweep_value, e.what());
    }
    pj["error"] = oc.error.empty() ? json(nullptr) : json(oc.error);
    if (!oc.error.empty()) log << "error: " << oc.error << '\n';
    write_file(spec.out_dir / point_filename(k), pj.dump(2) + "\n");

    const auto s = oc.summary.value_or(EnsembleSummary{0, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN});
    csv += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", csv_number(oc.sweep_value),
                       csv_number(s.mean), csv_number(s.min), csv_number(s.q1),
                       csv_number(s.median), csv_number(s.q3), csv_number(s.max),
                       csv_number(oc.reference_energy), csv_number(oc.initial_energy),
                       csv_number(oc.hf_energy));
    json entry;
    entry["file"] = point_filename(k);
    entry["sweep_value"] = oc.sweep_value;
    entry["error"] = oc.error.empty() ? json(nullptr) : json(oc.error);
    points.push_back(std::move(entry));
    outcomes.push_back(std::move(oc));
  }
  write_file(spec.out_dir / "summary.csv", csv);
  json top;
  top["metadata"] = metadata_json(&spec);
  top["spec"] = spec_json;
  top["points"] = points;
  write_file(spec.out_dir / "campaign.json", top.dump(2) + "\n");
  return outcomes;
}

namespace {

fs::path default_out_dir() {
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
  return {};
}

void add_problem_options(CLI::App* app, ProblemSpec& p, bool fcidump_required) {
  auto* f = app->add_option("--fcidump", p.fcidump, "FCIDUMP integral file");
  if (fcidump_required) f->required();
  app->add_option("--sidecar", p.sidecar,
                  "JSON with noons/orbital_energies (default: <fcidump>.json if present)");
  app->add_option("--eps1", p.eps1, "freeze orbitals with occupation > 2 - eps1");
  app->add_option("--eps2", p.eps2, "drop orbitals with occupation < eps2");
  app->add_option("--active", p.active, "explicit active spatial orbitals")->delimiter(',');
  app->add_option("--frozen", p.frozen, "doubly occupied frozen orbitals (with --active)")
      ->delimiter(',');
}

struct CampaignOptions {
  CampaignSpec spec;
  std::string optimizer = "cobyla";
  std::uint64_t seed = 0;
};

void add_campaign_options(CLI::App* app, CampaignOptions& o, bool fcidump_required) {
  CampaignSpec& s = o.spec;
  add_problem_options(app, s.problem, fcidump_required);
  app->add_option("--ansatz", s.ansatz.family, "he | qucc")->capture_default_str();
  app->add_option("--variant", s.ansatz.variant, "HE variant v1 | v2 | v3")
      ->capture_default_str();
  app->add_option("--depth", s.ansatz.depth, "HE depth d")->capture_default_str();
  app->add_flag("--spin-conserving", s.ansatz.spin_conserving,
                "keep only spin-conserving qUCC excitations");
  app->add_option("--max-evals", s.vqe.max_iterations, "objective evaluations per trial")
      ->capture_default_str();
  app->add_option("--optimizer", o.optimizer, "cobyla | nelder_mead")->capture_default_str();
  app->add_option("--rho-begin", s.vqe.rho_begin, "initial trust radius")
      ->capture_default_str();
  app->add_option("--rho-end", s.vqe.rho_end, "final trust radius")->capture_default_str();
  app->add_option("--shots", s.vqe.n_shots, "shots per Pauli term (0 = exact)")
      ->capture_default_str();
  app->add_flag("--group-qwc", s.vqe.sampling.group_qubitwise,
                "measure qubit-wise commuting terms together");
  app->add_option("--noise", s.noise_file, "noise model JSON (enables noise)");
  app->add_option("--t1", s.t1_us, "T1 in µs (enables noise)");
  app->add_option("--t2", s.t2_us, "T2 in µs (sweep-t1 default: T2 = T1)");
  app->add_option("--init", s.init, "auto | zeros | random | mp2 | explicit")
      ->capture_default_str();
  app->add_option("--theta", s.explicit_theta, "explicit initial vector")->delimiter(',');
  app->add_option("--perturbation", s.vqe.init_perturbation,
                  "half-width of a uniform perturbation of mp2/explicit starts")
      ->capture_default_str();
  app->add_option("--seed", o.seed, "base RNG seed")->capture_default_str();
  app->add_option("--trials", s.n_trials, "independent trials per point")
      ->capture_default_str();
  app->add_option("--jobs", s.jobs, "worker threads")->capture_default_str();
  app->add_flag("--traces", s.include_traces, "store per-evaluation energy traces");
  app->add_option("--out", s.out_dir, std::string("output directory (default: $") +
                                          kOutDirEnv + ")");
}

int finish_campaign(CampaignOptions& o, SweepAxis axis, std::ostream& out) {
  CampaignSpec& s = o.spec;
  s.axis = axis;
  s.vqe.optimizer = optimizer_from_name(o.optimizer);
  s.vqe.rng_seed = o.seed;
  if (s.out_dir.empty()) s.out_dir = default_out_dir();
  const auto outcomes = run_campaign(s, out);
  const bool ok = std::all_of(outcomes.begin(), outcomes.end(),
                              [](const SweepPointOutcome& p) { return p.error.empty(); });
  out << "wrote " << (s.out_dir / "summary.csv").string() << '\n';
  if (ok) return kExitSuccess;
  const bool all_invalid = std::all_of(outcomes.begin(), outcomes.end(), [](const SweepPointOutcome& p) {
    return p.error.empty() || p.invalid_input;
  });
  return all_invalid ? kExitValidation : kExitRuntime;
}

struct ExactOptionsCli {
  ProblemSpec problem;
  std::vector<fs::path> fcidump_list;
  std::vector<double> params;
  fs::path out_dir;
};

int run_exact(ExactOptionsCli& o, std::ostream& out) {
  if (o.out_dir.empty()) o.out_dir = default_out_dir();
  if (o.out_dir.empty()) {
    throw ValidationError(fmt::format("no output directory: pass --out or set {}", kOutDirEnv));
  }
  std::vector<ProblemSpec> specs;
  if (o.fcidump_list.empty()) {
    specs.push_back(o.problem);
  } else {
    if (!o.problem.fcidump.empty()) {
      throw ValidationError("give either --fcidump or --fcidump-list, not both");
    }
    for (const auto& f : o.fcidump_list) {
      ProblemSpec p = o.problem;
      p.fcidump = f;
      p.sidecar.clear();
      specs.push_back(std::move(p));
    }
  }
  if (!o.params.empty() && o.params.size() != specs.size()) {
    throw ValidationError(fmt::format("--params has {} values for {} FCIDUMP files",
                                      o.params.size(), specs.size()));
  }
  for (const auto& p : specs) p.validate();
  fs::create_directories(o.out_dir);

  // Provenance: everything that determines the result, by content.
  json canonical;
  canonical["command"] = "exact";
  canonical["params"] = o.params;
  canonical["eps1"] = o.problem.eps1 ? json(*o.problem.eps1) : json(nullptr);
  canonical["eps2"] = o.problem.eps2 ? json(*o.problem.eps2) : json(nullptr);
  canonical["active"] = o.problem.active;
  canonical["frozen"] = o.problem.frozen;
  canonical["fcidump_fnv1a"] = json::array();
  for (const auto& p : specs) canonical["fcidump_fnv1a"].push_back(hex64(fnv1a64(read_file(p.fcidump))));

  auto points = json::array();
  std::string csv;
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const Problem p = prepare_problem(specs[k]);
    const SpectrumResult r = ground_state(p.hamiltonian, p.n_electrons, p.e_core);
    const OneRdm rdm = one_rdm(r.ground_state, p.frozen.n_orbitals);
    const double param = o.params.empty() ? static_cast<double>(k) : o.params[k];
    if (csv.empty()) csv = noon_csv_header(rdm.noons.size());
    csv += noon_csv_row(param, rdm.noons);
    json pj;
    pj["parameter"] = param;
    pj["fcidump"] = specs[k].fcidump.filename().string();
    pj["fcidump_fnv1a"] = hex64(fnv1a64(read_file(specs[k].fcidump)));
    pj["n_qubits"] = p.n_qubits;
    pj["n_electrons"] = p.n_electrons;
    pj["active"] = p.active_space.active;
    pj["occupied_frozen"] = p.active_space.occupied_frozen;
    pj["ground_energy"] = r.ground_energy;
    pj["hf_energy"] = p.hf_energy;
    pj["residual"] = r.residual;
    pj["solver"] = r.iterative ? "lanczos" : "dense";
    pj["noons"] = rdm.noons;
    out << fmt::format("{}: E0 = {:.12f} Ha ({} qubits, {} electrons)\n",
                       specs[k].fcidump.filename().string(), r.ground_energy, p.n_qubits,
                       p.n_electrons);
    points.push_back(std::move(pj));
  }
  json top;
  top["metadata"] = metadata_json(canonical.dump());
  if (points.size() == 1) {
    for (auto& [key, value] : points[0].items()) top[key] = value;
  } else {
    top["points"] = points;
  }
  write_file(o.out_dir / "exact.json", top.dump(2) + "\n");
  write_file(o.out_dir / "noons.csv", csv);
  out << "wrote " << (o.out_dir / "exact.json").string() << '\n';
  return kExitSuccess;
}

struct GeometryOptions {
  int distortion = 1;
  std::vector<double> params;
  fs::path out_dir;
};

int run_geometry(GeometryOptions& o, std::ostream& out) {
  if (o.out_dir.empty()) o.out_dir = default_out_dir();
  if (o.out_dir.empty()) {
    throw ValidationError(fmt::format("no output directory: pass --out or set {}", kOutDirEnv));
  }
  std::vector<std::pair<fs::path, std::string>> files;
  for (double v : o.params) {
    const MoleculeGeometry g = make_distortion(o.distortion, v);
    files.emplace_back(o.out_dir / xyz_filename(o.distortion, v), to_xyz(g));
  }
  fs::create_directories(o.out_dir);
  for (const auto& [path, text] : files) {
    write_file(path, text);
    out << "wrote " << path.string() << '\n';
  }
  return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"vqesim: VQE simulation campaigns for molecular Hamiltonians", "vqesim"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  GeometryOptions geo;
  auto* geometry = app.add_subcommand("geometry", "write benzene distortion XYZ files");
  geometry->add_option("--distortion", geo.distortion, "distortion family 1, 2 or 3")
      ->required()
      ->check(CLI::Range(1, 3));
  geometry->add_option("--params", geo.params, "parameter values in Å")
      ->required()
      ->delimiter(',');
  geometry->add_option("--out", geo.out_dir, "output directory");

  ExactOptionsCli ex;
  auto* exact = app.add_subcommand("exact", "exact ground energy and NOONs");
  add_problem_options(exact, ex.problem, false);
  exact->add_option("--fcidump-list", ex.fcidump_list, "several FCIDUMP files")
      ->delimiter(',');
  exact->add_option("--params", ex.params, "parameter value per FCIDUMP")->delimiter(',');
  exact->add_option("--out", ex.out_dir, "output directory");

  CampaignOptions vqe_opts;
  auto* vqe = app.add_subcommand("vqe", "VQE campaign (optionally over an FCIDUMP list)");
  add_campaign_options(vqe, vqe_opts, false);
  vqe->add_option("--fcidump-list", vqe_opts.spec.fcidump_list,
                  "one FCIDUMP per geometry (sweep axis)")
      ->delimiter(',');
  vqe->add_option("--params", vqe_opts.spec.params, "declared parameter per FCIDUMP")
      ->delimiter(',');

  CampaignOptions t1_opts;
  auto* sweep_t1 = app.add_subcommand("sweep-t1", "VQE campaign over T1 values");
  add_campaign_options(sweep_t1, t1_opts, true);
  sweep_t1->add_option("--t1-list", t1_opts.spec.t1_list, "T1 values in µs")
      ->required()
      ->delimiter(',');

  CampaignOptions shots_opts;
  auto* sweep_shots = app.add_subcommand("sweep-shots", "VQE campaign over shot counts");
  add_campaign_options(sweep_shots, shots_opts, true);
  sweep_shots->add_option("--shots-list", shots_opts.spec.shots_list, "shot counts")
      ->required()
      ->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitValidation;
  }

  try {
    if (*geometry) return run_geometry(geo, out);
    if (*exact) return run_exact(ex, out);
    if (*vqe) {
      if (vqe_opts.spec.fcidump_list.empty() && vqe_opts.spec.problem.fcidump.empty()) {
        throw ValidationError("vqe needs --fcidump or --fcidump-list");
      }
      return finish_campaign(vqe_opts,
                             vqe_opts.spec.fcidump_list.empty() ? SweepAxis::none
                                                                : SweepAxis::fcidump_list,
                             out);
    }
    if (*sweep_t1) return finish_campaign(t1_opts, SweepAxis::t1, out);
    if (*sweep_shots) return finish_campaign(shots_opts, SweepAxis::shots, out);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitValidation;
}

}  // namespace vqesim::cli
