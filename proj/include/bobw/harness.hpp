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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bobw/hard_instances.hpp"
#include "bobw/instance.hpp"
#include "bobw/policy.hpp"

namespace bobw {

inline constexpr int kSchemaVersion = 1;

struct FixedBudget {
  std::int64_t horizon = 0;
};

/// Runs until the policy's stopping rule fires or `step_cap` steps elapse.
/// `delta` replaces the confidence level of a UCB_alpha policy.
struct FixedConfidence {
  double delta = 0.01;
  std::int64_t step_cap = 0;
};

using Protocol = std::variant<FixedBudget, FixedConfidence>;

/// "fixed_budget(T=...)" or "fixed_confidence(delta=...;cap=...)".
std::string describe(const Protocol& protocol);

using Environment = std::variant<std::shared_ptr<const StochasticInstance>,
                                 std::shared_ptr<const AdversarialInstance>>;

std::string environment_label(const Environment& env);
Eigen::Index environment_size(const Environment& env);

struct TrialRecord {
  std::int64_t trial = 0;
  std::uint64_t seed = 0;
  std::int64_t steps_used = 0;
  double pseudo_regret = 0.0;
  std::optional<double> realized_regret;  // adversarial tables only
  Eigen::Index recommended_arm = 0;
  bool correct = false;
  bool stopped_early = false;
  // Fixed-confidence run that reached its step cap without stopping.
  bool capped = false;
};

/// Runs one trial on the streams derived from (seed, trial).
///
/// Stochastic pseudo-regret is sum_i N_i * gap_i from the final pull counts.
/// On a reward table it uses the empirical gaps to the best column, and the
/// realized regret sum_t (g_best,t - g_pulled,t) is filled in as well.
TrialRecord run_trial(const PolicyParams& params, const Environment& env,
                      const Protocol& protocol, std::uint64_t seed, std::int64_t trial);

struct ExperimentConfig {
  Environment environment;
  PolicyParams params;
  Protocol protocol;
  std::int64_t n_trials = 1;
  std::uint64_t base_seed = 0;
  // 0: take BOBW_WORKERS from the environment, else hardware concurrency.
  int workers = 0;
  // When set, run_batch writes <prefix>.trials.csv and <prefix>.agg.csv.
  std::optional<std::filesystem::path> output_prefix;
};

/// Throws DomainError for an invalid configuration.
void validate(const ExperimentConfig& config);

struct AggregateResult {
  std::string algorithm;
  std::string params_json;
  std::string instance_label;
  std::string protocol;
  std::int64_t n_trials = 0;
  double mean_regret = 0.0;
  double std_regret = 0.0;  // population convention (divide by n)
  std::int64_t failure_count = 0;
  double failure_probability = 0.0;
  double mean_stop_time = 0.0;
  double std_stop_time = 0.0;
  std::int64_t capped_count = 0;
};

/// Order-independent fold over trial records. Records are keyed by trial
/// index, so merging is a set union and finalize() always sums in index
/// order: any partition of the same records gives a bit-identical result.
class Aggregator {
 public:
  Aggregator(std::string algorithm, std::string params_json, std::string instance_label,
             std::string protocol);

  /// Throws DomainError if the trial index was already added.
  void add(const TrialRecord& record);
  void merge(const Aggregator& other);
  std::int64_t count() const { return static_cast<std::int64_t>(records_.size()); }
  AggregateResult finalize() const;

 private:
  AggregateResult meta_;
  std::map<std::int64_t, TrialRecord> records_;
};

struct BatchResult {
  AggregateResult aggregate;
  std::vector<TrialRecord> trials;  // ordered by trial index
  std::vector<std::string> warnings;
};

/// Runs config.n_trials trials (trial i uses streams from (base_seed, i)) on
/// a pool of worker threads. Results do not depend on the worker count.
BatchResult run_batch(const ExperimentConfig& config);

int resolve_workers(int requested);

/// One aggregate per gamma, all sharing the same trial seeds. The config's
/// params must be BobwParams; `gammas` must be ascending.
std::vector<BatchResult> pareto_sweep(const ExperimentConfig& config,
                                      const std::vector<double>& gammas);

/// Fraction of trials in which some pulled arm's empirical mean ever left
/// its confidence band, |mean_i - w_i| > C_i, over `horizon` steps of BoBW.
double concentration_violation_rate(const StochasticInstance& instance, const BobwParams& params,
                                    std::int64_t horizon, std::int64_t n_trials,
                                    std::uint64_t base_seed, int workers = 0);

// ---------------------------------------------------------------------------
// CSV output

std::string trials_csv_header();
std::string aggregate_csv_header();
void write_trials_csv(std::ostream& out, const AggregateResult& meta,
                      const std::vector<TrialRecord>& trials);
void write_aggregate_row(std::ostream& out, const AggregateResult& result);

/// Writes both files for one batch; neither file is left behind on failure.
void write_batch_outputs(const std::filesystem::path& prefix,
                         const std::vector<BatchResult>& batches);

}  // namespace bobw
