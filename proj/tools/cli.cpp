// Copyright 2026 The bobw-bandits Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <filesystem>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "bobw/csv_io.hpp"
#include "bobw/datasets.hpp"
#include "bobw/errors.hpp"
#include "bobw/format.hpp"
#include "bobw/hard_instances.hpp"
#include "bobw/harness.hpp"
#include "bobw/instance_io.hpp"
#include "bobw/shorthand.hpp"
#include "bobw/theory.hpp"

namespace bobw::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// String-valued flags with explicit defaults. Values are converted on use so
// that a bad token is reported together with the flag that carried it, and
// so the fully resolved set can be echoed next to the outputs.
class Flags {
 public:
  void add(CLI::App* app, const std::string& name, std::string fallback, const std::string& help) {
    values_[name] = std::move(fallback);
    options_[name] = app->add_option("--" + name, values_[name], help)->capture_default_str();
  }

  bool given(const std::string& name) const { return options_.at(name)->count() > 0; }
  bool has(const std::string& name) const { return values_.count(name) > 0; }
  const std::string& str(const std::string& name) const { return values_.at(name); }
  void set(const std::string& name, std::string value) { values_[name] = std::move(value); }

  double real(const std::string& name) const {
    try {
      return parse_real(str(name), "--" + name);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }

  std::int64_t integer(const std::string& name) const {
    try {
      return parse_integer(str(name), "--" + name);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }

  std::vector<double> reals(const std::string& name) const {
    std::vector<double> out;
    std::stringstream ss(str(name));
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        out.push_back(parse_real(token, "--" + name));
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
    }
    if (out.empty()) throw UsageError("--" + name + ": expected a comma-separated list of numbers");
    return out;
  }

  nlohmann::json resolved() const {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [name, value] : values_) doc[name] = value;
    return doc;
  }

 private:
  std::map<std::string, std::string> values_;
  std::map<std::string, CLI::Option*> options_;
};

void write_text(const std::filesystem::path& path, const std::string& text) {
  AtomicFile file(path);
  file.stream() << text;
  file.commit();
}

void write_meta(const std::string& prefix, const std::string& command, const Flags& flags,
                const std::vector<std::string>& warnings, nlohmann::json extra = {}) {
  nlohmann::json doc;
  doc["command"] = command;
  doc["flags"] = flags.resolved();
  doc["schema_version"] = kSchemaVersion;
  doc["std_convention"] = "population";
  doc["warnings"] = warnings;
  if (!extra.is_null()) doc["details"] = std::move(extra);
  write_text(prefix + ".meta.json", doc.dump(2) + "\n");
}

void report_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

std::ostream& human(std::ostream& out) { return out << std::setprecision(12); }

Eigen::VectorXd means_from_flag(const Flags& flags) {
  const auto values = flags.reals("means");
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

Environment load_environment(const std::string& spec) {
  if (spec.empty()) throw UsageError("--instance is required");
  if (spec.starts_with("advclip:"))
    return std::make_shared<const AdversarialInstance>(adversarial_from_shorthand(spec));
  if (is_shorthand(spec))
    return std::make_shared<const StochasticInstance>(stochastic_from_shorthand(spec));
  return std::make_shared<const StochasticInstance>(load_instance(spec));
}

double environment_scale(const Environment& env) {
  if (const auto* s = std::get_if<std::shared_ptr<const StochasticInstance>>(&env))
    return (*s)->sub_gaussian_scale();
  return 0.5;
}

// ---------------------------------------------------------------------------
// hardness

void add_hardness(CLI::App* sub, Flags& f) {
  f.add(sub, "means", "", "comma-separated arm means");
  f.add(sub, "instance", "", "instance file or shorthand (instead of --means)");
  f.add(sub, "p", "", "also report H'_p and C_p for this exponent");
}

int run_hardness(const Flags& f, std::ostream& out) {
  GapProfile profile;
  if (f.given("means")) {
    profile = gap_profile(means_from_flag(f));
  } else {
    const Environment env = load_environment(f.str("instance"));
    const auto* s = std::get_if<std::shared_ptr<const StochasticInstance>>(&env);
    if (!s) throw UsageError("hardness needs a stochastic instance");
    profile = gap_profile(**s);
  }
  std::optional<double> p;
  if (!f.str("p").empty()) p = f.real("p");
  const Hardness h = hardness(profile, p);
  human(out) << "L=" << profile.size() << '\n'
             << "optimal_arm=" << profile.optimal_arm << '\n'
             << "delta=" << profile.min_gap << '\n'
             << "H1=" << h.h1 << '\n'
             << "H2=" << h.h2 << '\n';
  if (h.hp_prime) out << "Hp_prime=" << *h.hp_prime << '\n' << "Cp=" << *h.cp << '\n';
  if (profile.exceeds_unit_gap) out << "note: some gap exceeds 1\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// gamma-interval

void add_gamma_interval(CLI::App* sub, Flags& f) {
  f.add(sub, "L", "", "number of arms");
  f.add(sub, "delta", "", "lower bound on the minimum gap");
  f.add(sub, "h2", "auto", "upper bound on H2 (auto: (L-1)/delta^2)");
  f.add(sub, "sigma", "0.5", "sub-Gaussian scale");
  f.add(sub, "eps", "0.01", "epsilon");
  f.add(sub, "beta", "e", "beta ('e' accepted)");
  f.add(sub, "T", "", "budget(s), comma-separated");
  f.add(sub, "out", "", "also write <out>.csv and <out>.meta.json");
}

int run_gamma_interval(Flags& f, std::ostream& out) {
  const double L = static_cast<double>(f.integer("L"));
  const double gap = f.real("delta");
  if (f.str("h2") == "auto") f.set("h2", format_double((L - 1.0) / (gap * gap)));
  std::ostringstream csv;
  csv << "T,lo,hi,empty\n";
  for (double T : f.reals("T")) {
    const auto iv = theory::gamma_interval(L, T, f.real("sigma"), f.real("eps"), f.real("beta"),
                                           gap, f.real("h2"));
    csv << format_double(T) << ',' << format_double(iv.lo) << ',' << format_double(iv.hi) << ','
        << (iv.empty() ? 1 : 0) << '\n';
  }
  out << csv.str();
  if (!f.str("out").empty()) {
    write_text(f.str("out") + ".csv", csv.str());
    write_meta(f.str("out"), "gamma-interval", f, {});
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// bounds

void add_bounds(CLI::App* sub, Flags& f) {
  f.add(sub, "kind", "all",
        "comma-separated kinds: baseline kinds, bobw_failure, bobw_regret, bobw_feasible, "
        "gamma_1, B1, B2, B1v, B2v, or 'all' for every baseline kind");
  f.add(sub, "means", "", "arm means; fills L, gaps, delta, H2 and their bounds");
  f.add(sub, "T", "0", "budget");
  f.add(sub, "L", "0", "number of arms");
  f.add(sub, "sigma", "0.5", "sub-Gaussian scale");
  f.add(sub, "eps", "0.01", "epsilon");
  f.add(sub, "beta", "e", "beta");
  f.add(sub, "gamma", "0", "gamma (BoBW or Exp3.P)");
  f.add(sub, "gap", "0", "minimum gap (empirical minimum gap for adversarial kinds)");
  f.add(sub, "gaps", "", "suboptimal gaps, comma-separated");
  f.add(sub, "h2", "0", "H2");
  f.add(sub, "h2-upper", "0", "upper bound on H2");
  f.add(sub, "gap-lower", "0", "lower bound on the minimum gap");
  f.add(sub, "R", "1", "reward range");
  f.add(sub, "V", "0.25", "variance bound");
  f.add(sub, "phi", "0", "phi_T");
  f.add(sub, "psi", "0", "psi_T");
  f.add(sub, "alpha", "0", "UCB-E alpha");
  f.add(sub, "conf-delta", "0.01", "confidence level delta");
  f.add(sub, "eta", "0", "Exp3.P eta");
  f.add(sub, "p", "0", "NSE exponent p");
  f.add(sub, "hp", "0", "H'_p");
  f.add(sub, "cp", "0", "C_p");
  f.add(sub, "out", "", "also write <out>.csv and <out>.meta.json");
}

int run_bounds(Flags& f, std::ostream& out, std::ostream& err) {
  theory::BoundInputs in;
  in.T = f.real("T");
  in.L = f.real("L");
  in.sigma = f.real("sigma");
  in.eps = f.real("eps");
  in.beta = f.real("beta");
  in.gamma = f.real("gamma");
  in.min_gap = f.real("gap");
  in.h2 = f.real("h2");
  in.h2_upper = f.real("h2-upper");
  in.min_gap_lower = f.real("gap-lower");
  in.reward_range = f.real("R");
  in.variance_bound = f.real("V");
  in.phi = f.real("phi");
  in.psi = f.real("psi");
  in.alpha = f.real("alpha");
  in.delta = f.real("conf-delta");
  in.eta = f.real("eta");
  in.p = f.real("p");
  in.hp_prime = f.real("hp");
  in.cp = f.real("cp");
  if (!f.str("gaps").empty()) in.gaps = f.reals("gaps");
  if (f.given("means")) {
    const GapProfile profile = gap_profile(means_from_flag(f));
    const Hardness h = hardness(profile, in.p > 0.0 ? std::optional<double>(in.p) : std::nullopt);
    in.L = static_cast<double>(profile.size());
    in.gaps.clear();
    for (Eigen::Index i = 0; i < profile.size(); ++i)
      if (i != profile.optimal_arm) in.gaps.push_back(profile.gaps[i]);
    in.min_gap = profile.min_gap;
    in.h2 = h.h2;
    if (in.h2_upper == 0.0) in.h2_upper = h.h2;
    if (in.min_gap_lower == 0.0) in.min_gap_lower = profile.min_gap;
    if (h.hp_prime && in.hp_prime == 0.0) in.hp_prime = *h.hp_prime;
    if (h.cp && in.cp == 0.0) in.cp = *h.cp;
  }

  std::vector<std::string> kinds;
  const bool every = f.str("kind") == "all";
  if (every) {
    for (auto k : theory::all_bound_kinds()) kinds.push_back(theory::to_string(k));
  } else {
    std::stringstream ss(f.str("kind"));
    for (std::string k; std::getline(ss, k, ',');) kinds.push_back(k);
  }

  std::ostringstream csv;
  csv << "kind,value,vacuous,condition_ok\n";
  for (const auto& kind : kinds) {
    theory::BoundValue v;
    if (every) {
      try {
        v = theory::baseline_bound(theory::bound_kind_from_string(kind), in);
      } catch (const BanditError& e) {
        err << "skipped " << e.what() << '\n';
        continue;
      }
    } else if (kind == "bobw_failure") {
      v.value = theory::bobw_failure_bound(in.gamma, in.eps, in.L);
      v.vacuous = v.value >= 1.0;
      v.condition_ok = theory::bobw_feasible(in.T, in.sigma, in.eps, in.beta, in.gamma, in.gaps);
    } else if (kind == "bobw_feasible") {
      v.value = theory::bobw_feasible(in.T, in.sigma, in.eps, in.beta, in.gamma, in.gaps) ? 1 : 0;
    } else if (kind == "bobw_regret") {
      v.value = theory::bobw_regret_bound_explicit(in.T, in.L, in.sigma, in.eps, in.beta,
                                                   in.gamma, in.gaps);
    } else if (kind == "gamma_1") {
      v.value = theory::gamma_1(in.min_gap, in.h2, in.sigma, in.eps, in.beta, in.T, in.L);
    } else if (kind == "B1" || kind == "B2" || kind == "B1v" || kind == "B2v") {
      v.value = theory::pareto_lower_bound(theory::pareto_kind_from_string(kind), in);
    } else {
      theory::BoundKind k;
      try {
        k = theory::bound_kind_from_string(kind);
      } catch (const ParseError& e) {
        throw UsageError(std::string("--kind: ") + e.what());
      }
      v = theory::baseline_bound(k, in);
    }
    csv << kind << ',' << format_double(v.value) << ',' << (v.vacuous ? 1 : 0) << ','
        << (v.condition_ok ? 1 : 0) << '\n';
  }
  out << csv.str();
  if (!f.str("out").empty()) {
    write_text(f.str("out") + ".csv", csv.str());
    write_meta(f.str("out"), "bounds", f, {});
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// simulate / pareto

void add_run_flags(CLI::App* sub, Flags& f, bool sweep) {
  if (!sweep) f.add(sub, "algo", "bobw", "bobw | ucbe | sh | exp3p | upadv | ucbalpha");
  f.add(sub, "instance", "", "instance file, bern:L=..,delta=.. or advclip:...");
  f.add(sub, "T", "", "budget (fixed-budget runs)");
  f.add(sub, "trials", "100", "number of independent trials");
  f.add(sub, "seed", "0", "base seed");
  f.add(sub, "workers", "0", "worker threads (0: BOBW_WORKERS or all cores)");
  f.add(sub, "out", "", "write <out>.trials.csv, <out>.agg.csv and <out>.meta.json");
  f.add(sub, "sigma", "auto", "BoBW sub-Gaussian scale (auto: the instance's)");
  f.add(sub, "eps", "0.01", "BoBW epsilon");
  f.add(sub, "beta", "e", "BoBW beta");
  if (sweep) {
    f.add(sub, "gammas", "", "ascending BoBW gamma grid, comma-separated");
  } else {
    f.add(sub, "gamma", "0.9", "BoBW confidence gamma or Exp3.P mixing rate");
    f.add(sub, "a", "auto", "UCB-E exploration a (auto: 25(T-L)/(36 H2))");
    f.add(sub, "eta", "auto", "Exp3.P learning rate (auto: gamma/L)");
    f.add(sub, "alpha", "3", "UCB_alpha exploration alpha");
    f.add(sub, "conf-delta", "0.01", "fixed-confidence delta");
    f.add(sub, "step-cap", "auto", "fixed-confidence step cap (auto: 100 T)");
  }
}

ExperimentConfig base_config(Flags& f, const Environment& env) {
  ExperimentConfig config;
  config.environment = env;
  config.n_trials = f.integer("trials");
  config.base_seed = static_cast<std::uint64_t>(f.integer("seed"));
  config.workers = static_cast<int>(f.integer("workers"));
  if (f.str("sigma") == "auto") f.set("sigma", format_double(environment_scale(env)));
  return config;
}

BobwParams bobw_from(const Flags& f, double gamma) {
  return BobwParams{f.real("sigma"), f.real("eps"), f.real("beta"), gamma};
}

int run_simulate(Flags& f, std::ostream& out, std::ostream& err) {
  const Environment env = load_environment(f.str("instance"));
  ExperimentConfig config = base_config(f, env);
  const Eigen::Index arms = environment_size(env);
  const std::string algo = f.str("algo");

  if (algo == "ucbalpha") {
    if (f.str("step-cap") == "auto") {
      if (f.str("T").empty()) throw UsageError("--step-cap or --T is required for ucbalpha");
      f.set("step-cap", std::to_string(100 * f.integer("T")));
    }
    config.protocol = FixedConfidence{f.real("conf-delta"), f.integer("step-cap")};
    config.params = UcbAlphaParams{f.real("alpha"), f.real("conf-delta")};
  } else {
    if (f.str("T").empty()) throw UsageError("--T is required");
    const std::int64_t T = f.integer("T");
    config.protocol = FixedBudget{T};
    if (algo == "bobw") {
      config.params = bobw_from(f, f.real("gamma"));
    } else if (algo == "ucbe") {
      if (f.str("a") == "auto") {
        const auto* s = std::get_if<std::shared_ptr<const StochasticInstance>>(&env);
        if (!s) throw UsageError("--a must be given for a reward table");
        const double h2 = hardness(gap_profile(**s)).h2;
        f.set("a", format_double(25.0 * static_cast<double>(T - arms) / (36.0 * h2)));
      }
      config.params = UcbEParams{f.real("a")};
    } else if (algo == "sh") {
      config.params = SequentialHalvingParams{};
    } else if (algo == "exp3p") {
      if (f.str("eta") == "auto")
        f.set("eta", format_double(f.real("gamma") / static_cast<double>(arms)));
      config.params = Exp3PParams{f.real("gamma"), f.real("eta")};
    } else if (algo == "upadv") {
      config.params = UniformPullParams{};
    } else {
      throw UsageError("--algo: unknown algorithm '" + algo + "'");
    }
  }

  const BatchResult result = run_batch(config);
  report_warnings(result.warnings, err);
  out << aggregate_csv_header() << '\n';
  write_aggregate_row(out, result.aggregate);
  if (!f.str("out").empty()) {
    write_batch_outputs(f.str("out"), {result});
    write_meta(f.str("out"), "simulate", f, result.warnings,
               {{"params", nlohmann::json::parse(params_to_json(config.params))},
                {"protocol", describe(config.protocol)},
                {"instance", environment_label(env)}});
  }
  return kOk;
}

int run_pareto(Flags& f, std::ostream& out, std::ostream& err) {
  const Environment env = load_environment(f.str("instance"));
  ExperimentConfig config = base_config(f, env);
  if (f.str("T").empty()) throw UsageError("--T is required");
  config.protocol = FixedBudget{f.integer("T")};
  config.params = bobw_from(f, 0.5);
  const auto gammas = f.reals("gammas");
  const auto results = pareto_sweep(config, gammas);

  out << "gamma,mean_regret,std_regret,failure_probability\n";
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& a = results[i].aggregate;
    out << format_double(gammas[i]) << ',' << format_double(a.mean_regret) << ','
        << format_double(a.std_regret) << ',' << format_double(a.failure_probability) << '\n';
    warnings.insert(warnings.end(), results[i].warnings.begin(), results[i].warnings.end());
  }
  report_warnings(warnings, err);
  if (!f.str("out").empty()) {
    write_batch_outputs(f.str("out"), results);
    write_meta(f.str("out"), "pareto", f, warnings, {{"instance", environment_label(env)}});
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// lower-bound

void add_lower_bound(CLI::App* sub, Flags& f) {
  f.add(sub, "family", "bern", "bern | gauss | advclip");
  f.add(sub, "L", "", "number of arms");
  f.add(sub, "shift", "", "common shift for every arm (bern, gauss)");
  f.add(sub, "shifts", "", "per-arm shifts for arms 2..L, comma-separated (bern, gauss)");
  f.add(sub, "b", "1", "Bernoulli payoff amplitude");
  f.add(sub, "sigma", "1", "Gaussian / clipped-noise standard deviation");
  f.add(sub, "T", "", "table length (advclip)");
  f.add(sub, "eps", "0.1", "separation (advclip)");
  f.add(sub, "ell", "0", "0-based instance index (advclip)");
  f.add(sub, "seed", "0", "noise seed (advclip)");
  f.add(sub, "out", "", "output prefix");
}

int run_lower_bound(Flags& f, std::ostream& out) {
  if (f.str("out").empty()) throw UsageError("--out is required");
  const Eigen::Index arms = f.integer("L");
  const std::string family = f.str("family");
  const std::string prefix = f.str("out");
  nlohmann::json details;
  if (family == "advclip") {
    if (f.str("T").empty()) throw UsageError("--T is required for advclip");
    const auto table = adversarial_clipped_family(arms, f.integer("T"), f.real("eps"),
                                                  f.real("sigma"), f.integer("ell"),
                                                  RngStream(static_cast<std::uint64_t>(f.integer("seed")), 0));
    write_reward_table_csv(table, prefix + ".csv");
    human(out) << "best_arm=" << table.best_arm() << '\n'
               << "min_empirical_gap=" << table.min_empirical_gap() << '\n'
               << "regenerations=" << table.regenerations() << '\n';
    details = {{"label", table.label()},
               {"best_arm", table.best_arm()},
               {"min_empirical_gap", table.min_empirical_gap()},
               {"regenerations", table.regenerations()}};
  } else {
    std::vector<double> shifts;
    if (!f.str("shifts").empty()) {
      shifts = f.reals("shifts");
    } else if (!f.str("shift").empty()) {
      shifts.assign(static_cast<std::size_t>(std::max<Eigen::Index>(arms - 1, 0)), f.real("shift"));
    } else {
      throw UsageError("--shift or --shifts is required");
    }
    std::vector<StochasticInstance> instances;
    if (family == "bern")
      instances = bern_family(arms, shifts, f.real("b"));
    else if (family == "gauss")
      instances = gauss_family(arms, shifts, f.real("sigma"));
    else
      throw UsageError("--family: unknown family '" + family + "'");
    details["files"] = nlohmann::json::array();
    for (std::size_t k = 0; k < instances.size(); ++k) {
      const std::string path = prefix + "." + std::to_string(k) + ".json";
      save_instance(instances[k], path);
      details["files"].push_back(path);
      out << path << '\n';
    }
  }
  write_meta(prefix, "lower-bound", f, {}, details);
  return kOk;
}

// ---------------------------------------------------------------------------
// dataset

void add_dataset(CLI::App* sub, Flags& f) {
  f.add(sub, "source", "movielens", "movielens | pkis2");
  f.add(sub, "path", "", "input CSV");
  f.add(sub, "min-ratings", "50000", "movielens: minimum number of ratings per movie");
  f.add(sub, "variance", "1", "movielens: reward variance of every arm");
  f.add(sub, "kinase", "MAPKAPK5", "pkis2: kinase column");
  f.add(sub, "raw-scale", "100", "pkis2: upper end of the raw inhibition scale");
  f.add(sub, "out", "", "write the instance to <out>.json and <out>.meta.json");
}

int run_dataset(const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.str("path").empty()) throw UsageError("--path is required");
  const std::string source = f.str("source");
  std::optional<LoadedInstance> loaded;
  if (source == "movielens")
    loaded.emplace(load_movielens(f.str("path"), f.integer("min-ratings"), f.real("variance")));
  else if (source == "pkis2")
    loaded.emplace(load_pkis2(f.str("path"), f.str("kinase"), f.real("raw-scale")));
  else
    throw UsageError("--source: unknown source '" + source + "'");

  const GapProfile profile = gap_profile(loaded->instance);
  human(out) << "L=" << loaded->instance.size() << '\n'
             << "rows=" << loaded->report.rows << '\n'
             << "dropped=" << loaded->report.dropped << '\n'
             << "missing=" << loaded->report.missing << '\n'
             << "best_arm=" << loaded->instance.arm(profile.optimal_arm).label << '\n'
             << "min_gap=" << profile.min_gap << '\n';
  std::vector<std::string> warnings;
  if (loaded->report.dropped > 0 && source == "pkis2")
    warnings.push_back(std::to_string(loaded->report.dropped) +
                       " entries with non-positive percent control were dropped");
  if (profile.exceeds_unit_gap) warnings.push_back("instance has a gap above 1");
  report_warnings(warnings, err);
  if (!f.str("out").empty()) {
    save_instance(loaded->instance, f.str("out") + ".json");
    write_meta(f.str("out"), "dataset", f, warnings,
               {{"rows", loaded->report.rows},
                {"dropped", loaded->report.dropped},
                {"missing", loaded->report.missing}});
  }
  return kOk;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Best-of-both-worlds bandit toolkit", "bobw"};
  app.require_subcommand(1);
  std::map<std::string, Flags> flags;

  auto* hardness_cmd = app.add_subcommand("hardness", "gap profile and hardness quantities");
  add_hardness(hardness_cmd, flags["hardness"]);
  auto* gamma_cmd = app.add_subcommand("gamma-interval", "admissible gamma interval per budget");
  add_gamma_interval(gamma_cmd, flags["gamma-interval"]);
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate closed-form bounds");
  add_bounds(bounds_cmd, flags["bounds"]);
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte-Carlo run of one policy");
  add_run_flags(simulate_cmd, flags["simulate"], false);
  auto* pareto_cmd = app.add_subcommand("pareto", "BoBW gamma sweep with paired seeds");
  add_run_flags(pareto_cmd, flags["pareto"], true);
  auto* lower_cmd = app.add_subcommand("lower-bound", "generate lower-bound instance families");
  add_lower_bound(lower_cmd, flags["lower-bound"]);
  auto* dataset_cmd = app.add_subcommand("dataset", "build an instance from a dataset");
  add_dataset(dataset_cmd, flags["dataset"]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    for (auto* sub : app.get_subcommands()) {
      const Flags& f = flags[sub->get_name()];
      if (!f.has("out") || f.str("out").empty()) continue;
      const auto parent = std::filesystem::path(f.str("out")).parent_path();
      std::error_code ec;
      if (!parent.empty()) std::filesystem::create_directories(parent, ec);
      if (ec) throw IoError("cannot create " + parent.string() + ": " + ec.message());
    }
    if (hardness_cmd->parsed()) return run_hardness(flags["hardness"], out);
    if (gamma_cmd->parsed()) return run_gamma_interval(flags["gamma-interval"], out);
    if (bounds_cmd->parsed()) return run_bounds(flags["bounds"], out, err);
    if (simulate_cmd->parsed()) return run_simulate(flags["simulate"], out, err);
    if (pareto_cmd->parsed()) return run_pareto(flags["pareto"], out, err);
    if (lower_cmd->parsed()) return run_lower_bound(flags["lower-bound"], out);
    if (dataset_cmd->parsed()) return run_dataset(flags["dataset"], out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BanditError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace bobw::cli
