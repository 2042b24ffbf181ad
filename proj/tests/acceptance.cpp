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

// Acceptance suite. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria (capped at 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bobw/datasets.hpp"
#include "bobw/harness.hpp"
#include "bobw/theory.hpp"

using namespace bobw;
namespace th = bobw::theory;

namespace {

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s  %-34s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool rel_close(double got, double want, double tol) {
  return std::fabs(got - want) <= tol * std::fabs(want);
}

std::string fmt(const char* pattern, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Environment two_level(Eigen::Index arms, double gap) {
  return std::make_shared<const StochasticInstance>(bernoulli_two_level(arms, gap));
}

BatchResult batch(Environment env, PolicyParams params, Protocol protocol, std::int64_t trials,
                  std::uint64_t seed) {
  ExperimentConfig c{std::move(env), std::move(params), protocol, trials, seed, 0, {}};
  return run_batch(c);
}

BobwParams bobw(double gamma) {
  BobwParams p;
  p.gamma = gamma;
  return p;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// ---------------------------------------------------------------------------

void closed_forms() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  Eigen::VectorXd pair(2);
  pair << 0.5, 0.45;
  const Hardness h = hardness(gap_profile(pair));
  ok &= rel_close(h.h1, 20.0, 1e-12) && rel_close(h.h2, 400.0, 1e-12);

  const auto wide = gap_profile(bernoulli_two_level(256, 0.05).means());
  ok &= rel_close(hardness(wide).h2, 102000.0, 1e-12);

  th::BoundInputs in;
  in.phi = 10.0;
  in.L = 11.0;
  in.min_gap_lower = 0.1;
  in.h2_upper = 10.0 / (0.1 * 0.1);
  in.reward_range = 1.0;
  in.variance_bound = 0.25;
  for (auto kind : {th::ParetoKind::Bounded1, th::ParetoKind::Bounded2, th::ParetoKind::Variance1,
                    th::ParetoKind::Variance2})
    ok &= rel_close(th::pareto_lower_bound(kind, in), 125.0, 1e-12);

  RngStream rng(2024, 0);
  for (int rep = 0; rep < 1000; ++rep) {
    const Eigen::Index arms = 2 + static_cast<Eigen::Index>(rng.uniform_index(30));
    Eigen::VectorXd means(arms);
    for (Eigen::Index i = 0; i < arms; ++i) means[i] = rng.uniform();
    const auto profile = gap_profile(means);
    const double lhs = profile.min_gap * hardness(profile).h2;
    ok &= lhs <= static_cast<double>(arms - 1) / profile.min_gap * (1.0 + 1e-12);
  }
  const double uniform_lhs = wide.min_gap * hardness(wide).h2;
  ok &= rel_close(uniform_lhs, 255.0 / 0.05, 1e-12);

  const double elapsed = seconds_since(start);
  report(ok && elapsed < 1.0, "closed-form exactness",
         "H1=" + fmt("%.12g", h.h1) + " H2=" + fmt("%.12g", h.h2) + " runtime=" +
             fmt("%.3fs", elapsed));
}

void gamma_interval_table() {
  const double reference_hi[4] = {1.38e-5, 1.61e-6, 1.84e-7, 2.07e-8};
  const char* reference_lo[4] = {"1.85e-7", "4.33e-73", "0", "0"};
  bool ok = true;
  double previous_lo = INFINITY;
  std::string detail;
  for (int k = 0; k < 4; ++k) {
    const double T = std::pow(10.0, 6 + k);
    const auto iv = th::gamma_interval(256, T, 0.5, 0.01, std::exp(1.0), 0.05, 102000.0);
    char rounded[32];
    std::snprintf(rounded, sizeof rounded, "%.2e", iv.hi);
    ok &= std::stod(rounded) == reference_hi[k];
    ok &= iv.lo >= 0.0 && (iv.lo < previous_lo || (iv.lo == 0.0 && previous_lo == 0.0));
    previous_lo = iv.lo;
    std::printf("      T=1e%d hi=%.4e lo=%.6g (reported lo %s)\n", 6 + k, iv.hi, iv.lo, reference_lo[k]);
  }
  report(ok, "admissible gamma interval", "hi to 3 s.f., lo >= 0 and decreasing");
}

void reduced_regret_table() {
  const auto env = two_level(64, 0.1);
  const auto hi = batch(env, bobw(0.9), FixedBudget{100000}, 300, 1);
  const auto lo = batch(env, bobw(9e-7), FixedBudget{100000}, 300, 1);
  report(rel_close(hi.aggregate.mean_regret, 3780.0, 0.10), "regret gamma=0.9 (L=64, gap 0.1)",
         fmt("mean=%.1f", hi.aggregate.mean_regret) + fmt(" std=%.2f", hi.aggregate.std_regret) +
             " target 3780 +-10%");
  report(rel_close(lo.aggregate.mean_regret, 3910.0, 0.10), "regret gamma=9e-7 (L=64, gap 0.1)",
         fmt("mean=%.1f", lo.aggregate.mean_regret) + fmt(" std=%.2f", lo.aggregate.std_regret) +
             " target 3910 +-10%");
  report(hi.aggregate.mean_regret < lo.aggregate.mean_regret &&
             hi.aggregate.std_regret > lo.aggregate.std_regret,
         "regret ordering across gamma", "paired seeds, mean and std");
}

void failure_table() {
  const auto r = batch(two_level(64, 0.1), bobw(0.6), FixedBudget{100000}, 2000, 2);
  report(r.aggregate.failure_probability <= 0.01, "failure gamma=0.6 (L=64, gap 0.1)",
         fmt("failure=%.4f", r.aggregate.failure_probability) + " over 2000 trials");
}

void competitor_ordering() {
  const auto env = two_level(64, 0.05);
  const auto ours = batch(env, bobw(0.9), FixedBudget{100000}, 200, 3);
  const auto theirs = batch(env, UcbAlphaParams{3.0, 0.01}, FixedConfidence{0.01, 10000000}, 200, 3);
  const double ratio_mean = theirs.aggregate.mean_regret / ours.aggregate.mean_regret;
  const double ratio_std = theirs.aggregate.std_regret / ours.aggregate.std_regret;
  report(ratio_mean >= 2.0, "ucb-alpha mean regret >= 2x",
         fmt("ucb-alpha=%.1f", theirs.aggregate.mean_regret) +
             fmt(" bobw=%.1f", ours.aggregate.mean_regret) + fmt(" ratio=%.2f", ratio_mean));
  report(ratio_std >= 10.0, "ucb-alpha regret std >= 10x",
         fmt("ucb-alpha=%.1f", theirs.aggregate.std_regret) +
             fmt(" bobw=%.2f", ours.aggregate.std_regret) + fmt(" ratio=%.2f", ratio_std) +
             fmt(" capped=%.0f", static_cast<double>(theirs.aggregate.capped_count)));
}

void concentration_audit() {
  // The bound is increasing in gamma; bisect in log space for the value 0.1.
  double lo = std::log(1e-12);
  double hi = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (th::bobw_failure_bound(std::exp(mid), 0.01, 2.0) < 0.1 ? lo : hi) = mid;
  }
  const double gamma = std::exp(0.5 * (lo + hi));
  const double bound = th::bobw_failure_bound(gamma, 0.01, 2.0);
  const double rate =
      concentration_violation_rate(bernoulli_two_level(2, 0.1), bobw(gamma), 10000, 5000, 4);
  const double limit = 0.1 + 3.0 * std::sqrt(0.1 * 0.9 / 5000.0);
  report(rate <= limit && rel_close(bound, 0.1, 1e-9), "concentration audit",
         fmt("violation=%.4f", rate) + fmt(" limit=%.4f", limit) + fmt(" bound=%.4f", bound));
}

void exp3p_invariants() {
  RngStream rng(77, 0);
  bool ok = true;
  for (int config = 0; config < 100; ++config) {
    const Eigen::Index arms = 2 + static_cast<Eigen::Index>(rng.uniform_index(15));
    const double gamma = config == 0 ? 1.0 : 0.01 + 0.99 * rng.uniform();
    const double eta = 1e-3 + rng.uniform();
    const std::int64_t horizon = 1 + static_cast<std::int64_t>(rng.uniform_index(1000));
    const auto inst = bernoulli_two_level(arms, 0.01 + 0.48 * rng.uniform());
    Exp3P policy(Exp3PParams{gamma, eta}, arms);
    RngStream play(config, 1);
    for (std::int64_t t = 0; t < horizon; ++t) {
      const auto& p = policy.probabilities();
      ok &= std::fabs(p.sum() - 1.0) <= 1e-12;
      ok &= p.minCoeff() >= gamma / static_cast<double>(arms);
      const Eigen::Index arm = policy.select(play);
      policy.update(arm, sample_reward(inst, arm, play));
    }
  }
  Exp3P uniform(Exp3PParams{1.0, 0.5}, 5);
  RngStream play(5, 5);
  bool exact = true;
  for (int t = 0; t < 500; ++t) {
    exact &= (uniform.probabilities().array() == 0.2).all();
    const Eigen::Index arm = uniform.select(play);
    uniform.update(arm, play.uniform());
  }
  report(ok && exact, "exp3p invariants", "100 configurations, sum 1e-12, floor gamma/L, gamma=1 uniform");
}

void halving_schedule() {
  RngStream rng(88, 0);
  bool ok = true;
  for (Eigen::Index arms = 2; arms <= 32; ++arms) {
    const std::int64_t rounds = static_cast<std::int64_t>(std::ceil(std::log2(static_cast<double>(arms))));
    const std::int64_t lo = arms * rounds;
    for (int draw = 0; draw < 5; ++draw) {
      const std::int64_t budget =
          lo + static_cast<std::int64_t>(rng.uniform_index(static_cast<std::size_t>(10000 - lo + 1)));
      const auto inst = bernoulli_two_level(arms, 0.2);
      SequentialHalving sh(arms, budget);
      RngStream play(arms, static_cast<std::uint64_t>(draw));
      std::int64_t used = 0;
      ok &= sh.scheduled_pulls() <= budget;
      for (; used < budget; ++used) {
        const Eigen::Index arm = sh.select(play);
        sh.update(arm, sample_reward(inst, arm, play));
      }
      ok &= sh.stats().pulls.sum() <= budget && sh.finished() && sh.survivors().size() == 1;
    }
  }
  report(ok, "halving schedule", "L=2..32, sampled budgets, one survivor");

  const auto env = two_level(4, 0.3);
  const auto r = batch(env, SequentialHalvingParams{}, FixedBudget{400}, 2000, 6);
  th::BoundInputs in;
  in.T = 400;
  in.L = 4;
  in.h2 = 3.0 / 0.09;
  const auto b = th::baseline_bound(th::BoundKind::ShFailure, in);
  const bool applies = b.value < 1.0;
  report(!applies || r.aggregate.failure_probability <= b.value, "halving failure vs bound",
         fmt("failure=%.4f", r.aggregate.failure_probability) + fmt(" bound=%.4f", b.value) +
             (applies ? "" : " (vacuous, holds trivially)"));
}

void adversarial_tables() {
  const double eps = 0.1;
  const double sd = 1.0 / 3.0;
  const double threshold = 0.7 * eps * clipped_separation_probability(eps, sd);
  int hits = 0;
  for (int k = 0; k < 200; ++k) {
    const auto table = adversarial_clipped_family(4, 10000, eps, sd, 0, RngStream(500 + k, 0));
    hits += table.min_empirical_gap() >= threshold ? 1 : 0;
  }
  report(hits >= 190, "clipped-table gap event", fmt("%.0f/200 tables", hits) + fmt(" threshold=%.4f", threshold));

  const Exp3PParams params{0.5, 0.25};
  int wrong = 0;
  double bound_sum = 0.0;
  bool all_below = true;
  for (int k = 0; k < 500; ++k) {
    auto table = std::make_shared<const AdversarialInstance>(
        adversarial_clipped_family(2, 10000, eps, sd, k % 2, RngStream(9000 + k, 0)));
    th::BoundInputs in;
    in.T = 10000;
    in.L = 2;
    in.gamma = params.gamma;
    in.min_gap = table->min_empirical_gap();
    const double bound = th::baseline_bound(th::BoundKind::Exp3PFailure, in).value;
    bound_sum += bound;
    all_below &= bound < 1.0;
    const auto rec = run_trial(params, table, FixedBudget{10000}, 31, k);
    wrong += rec.correct ? 0 : 1;
  }
  const double rate = wrong / 500.0;
  const double mean_bound = bound_sum / 500.0;
  report(!all_below || rate <= mean_bound, "exp3p failure on clipped tables",
         fmt("failure=%.4f", rate) + fmt(" mean bound=%.4f", mean_bound));
}

void determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "bobw_acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ExperimentConfig c{two_level(8, 0.1), bobw(0.3), FixedBudget{5000}, 64, 12, 1, dir / "a"};
  const auto a = run_batch(c);
  c.output_prefix = dir / "b";
  c.workers = 4;
  const auto b = run_batch(c);
  bool ok = slurp(dir / "a.trials.csv") == slurp(dir / "b.trials.csv") &&
            slurp(dir / "a.agg.csv") == slurp(dir / "b.agg.csv");
  Aggregator shuffled(a.aggregate.algorithm, a.aggregate.params_json, a.aggregate.instance_label,
                      a.aggregate.protocol);
  Aggregator rest = shuffled;
  auto order = a.trials;
  std::reverse(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size(); ++i) (i % 2 ? shuffled : rest).add(order[i]);
  shuffled.merge(rest);
  const auto merged = shuffled.finalize();
  ok &= merged.mean_regret == b.aggregate.mean_regret && merged.std_regret == b.aggregate.std_regret &&
        merged.failure_count == b.aggregate.failure_count;
  std::filesystem::remove_all(dir);
  report(ok, "determinism and merge", "byte-identical CSVs across worker counts, permuted merge");
}

void dataset_fixtures() {
  const std::filesystem::path data = BOBW_TEST_DATA;
  const auto ml = load_movielens(data / "ratings_small.csv", 2).instance;
  const auto pk = load_pkis2(data / "inhibition_small.csv", "MAPKAPK5").instance;
  const bool ok = ml.size() == 2 && ml.means()[0] == 4.5 && ml.means()[1] == 3.0 && pk.size() == 3 &&
                  pk.means()[1] == 0.0 && rel_close(pk.means()[0], std::log(0.2), 1e-12);
  report(ok, "dataset fixtures", "arm counts and means");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<const char*, void (*)()>> criteria = {
      {"closed-form exactness", closed_forms},
      {"admissible gamma interval", gamma_interval_table},
      {"exp3p invariants", exp3p_invariants},
      {"halving schedule", halving_schedule},
      {"determinism and merge", determinism},
      {"dataset fixtures", dataset_fixtures},
      {"concentration audit", concentration_audit},
      {"clipped tables", adversarial_tables},
      {"regret table", reduced_regret_table},
      {"failure table", failure_table},
      {"competitor ordering", competitor_ordering},
  };
  for (const auto& [name, run] : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      report(false, name, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d criterion line(s) failed, %.1fs\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
