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

#include "bobw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "bobw/csv_io.hpp"
#include "bobw/errors.hpp"
#include "bobw/format.hpp"

namespace bobw {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Calls body(i) for i in [0, n) on up to `workers` threads. The first
// exception thrown by any call is rethrown after all threads have joined.
template <class Body>
void parallel_for(std::int64_t n, int workers, Body body) {
  const int threads = static_cast<int>(std::min<std::int64_t>(std::max(workers, 1), n));
  if (threads <= 1) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::int64_t i = next++; i < n && !failed; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct Outcome {
  std::int64_t steps = 0;
  bool stopped = false;
  double realized = 0.0;
};

// Hot loop, instantiated per concrete policy type.
template <class P>
Outcome drive(P& policy, const Environment& env, std::int64_t limit, bool until_stop,
              const RngStream& trial_stream) {
  RngStream policy_rng = trial_stream.child(0);
  Outcome out;
  if (const auto* stochastic = std::get_if<std::shared_ptr<const StochasticInstance>>(&env)) {
    const StochasticInstance& inst = **stochastic;
    std::vector<RngStream> arm_rngs;
    arm_rngs.reserve(static_cast<std::size_t>(inst.size()));
    for (Eigen::Index i = 0; i < inst.size(); ++i)
      arm_rngs.push_back(trial_stream.child(static_cast<std::uint64_t>(1 + i)));
    for (; out.steps < limit; ++out.steps) {
      const Eigen::Index arm = policy.select(policy_rng);
      policy.update(arm, sample_reward(inst, arm, arm_rngs[static_cast<std::size_t>(arm)]));
      if (until_stop && policy.stopped()) {
        ++out.steps;
        out.stopped = true;
        break;
      }
    }
  } else {
    const AdversarialInstance& table = *std::get<std::shared_ptr<const AdversarialInstance>>(env);
    const Eigen::Index best = table.best_arm();
    for (; out.steps < limit; ++out.steps) {
      const Eigen::Index arm = policy.select(policy_rng);
      const double reward = table.reward(out.steps, arm);
      policy.update(arm, reward);
      out.realized += table.reward(out.steps, best) - reward;
      if (until_stop && policy.stopped()) {
        ++out.steps;
        out.stopped = true;
        break;
      }
    }
  }
  return out;
}

double plain_mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double population_std(const std::vector<double>& values, double mean) {
  double sum = 0.0;
  for (double v : values) sum += (v - mean) * (v - mean);
  return std::sqrt(sum / static_cast<double>(values.size()));
}

}  // namespace

std::string describe(const Protocol& protocol) {
  return std::visit(Overloaded{
                        [](const FixedBudget& p) {
                          return "fixed_budget(T=" + std::to_string(p.horizon) + ")";
                        },
                        [](const FixedConfidence& p) {
                          return "fixed_confidence(delta=" + format_double(p.delta) +
                                 ";cap=" + std::to_string(p.step_cap) + ")";
                        },
                    },
                    protocol);
}

std::string environment_label(const Environment& env) {
  return std::visit([](const auto& ptr) { return ptr->label(); }, env);
}

Eigen::Index environment_size(const Environment& env) {
  return std::visit([](const auto& ptr) { return ptr->size(); }, env);
}

TrialRecord run_trial(const PolicyParams& raw_params, const Environment& env,
                      const Protocol& protocol, std::uint64_t seed, std::int64_t trial) {
  const Eigen::Index arms = environment_size(env);
  const bool confidence = std::holds_alternative<FixedConfidence>(protocol);
  const std::int64_t limit = confidence ? std::get<FixedConfidence>(protocol).step_cap
                                        : std::get<FixedBudget>(protocol).horizon;

  PolicyParams params = raw_params;
  if (auto* ucb = std::get_if<UcbAlphaParams>(&params)) {
    if (!confidence)
      throw DomainError("ucbalpha stops on its own and needs the fixed-confidence protocol");
    ucb->delta = std::get<FixedConfidence>(protocol).delta;
  }

  const RngStream stream(seed, static_cast<std::uint64_t>(trial));
  Eigen::Index recommended = 0;
  PullCounts pulls;
  const Outcome outcome = std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        auto finish = [&](auto& policy) {
          const Outcome o = drive(policy, env, limit, confidence, stream);
          recommended = policy.recommend();
          pulls = policy.stats().pulls;
          return o;
        };
        if constexpr (std::is_same_v<T, BobwParams>) {
          BobwLilUcb policy(p, arms);
          return finish(policy);
        } else if constexpr (std::is_same_v<T, UcbEParams>) {
          UcbE policy(p, arms);
          return finish(policy);
        } else if constexpr (std::is_same_v<T, SequentialHalvingParams>) {
          SequentialHalving policy(arms, limit);
          return finish(policy);
        } else if constexpr (std::is_same_v<T, Exp3PParams>) {
          Exp3P policy(p, arms);
          return finish(policy);
        } else if constexpr (std::is_same_v<T, UniformPullParams>) {
          UniformPull policy(arms);
          return finish(policy);
        } else {
          UcbAlpha policy(p, arms);
          return finish(policy);
        }
      },
      params);

  TrialRecord record;
  record.trial = trial;
  record.seed = seed;
  record.steps_used = outcome.steps;
  record.recommended_arm = recommended;
  record.stopped_early = outcome.stopped;
  record.capped = confidence && !outcome.stopped;

  Eigen::VectorXd gaps;
  Eigen::Index best = 0;
  if (const auto* stochastic = std::get_if<std::shared_ptr<const StochasticInstance>>(&env)) {
    const GapProfile profile = gap_profile(**stochastic);
    gaps = profile.gaps;
    best = profile.optimal_arm;
  } else {
    const auto& table = *std::get<std::shared_ptr<const AdversarialInstance>>(env);
    gaps = table.empirical_gaps();
    best = table.best_arm();
    record.realized_regret = outcome.realized;
  }
  record.pseudo_regret = pulls.cast<double>().dot(gaps);
  record.correct = recommended == best;
  return record;
}

void validate(const ExperimentConfig& config) {
  if (config.n_trials < 1) throw DomainError("n_trials must be at least 1");
  const Eigen::Index arms = environment_size(config.environment);
  const bool needs_warmup = !std::holds_alternative<Exp3PParams>(config.params) &&
                            !std::holds_alternative<UniformPullParams>(config.params);
  std::visit(Overloaded{
                 [&](const FixedBudget& p) {
                   if (p.horizon < 1) throw DomainError("budget T must be positive");
                   if (needs_warmup && p.horizon < arms)
                     throw DomainError("budget T = " + std::to_string(p.horizon) +
                                       " is smaller than the number of arms L = " +
                                       std::to_string(arms));
                 },
                 [&](const FixedConfidence& p) {
                   if (!(p.delta > 0.0 && p.delta < 1.0))
                     throw DomainError("delta must lie in (0,1)");
                   if (p.step_cap < arms)
                     throw DomainError("step cap must be at least the number of arms");
                 },
             },
             config.protocol);
  if (const auto* table =
          std::get_if<std::shared_ptr<const AdversarialInstance>>(&config.environment)) {
    const std::int64_t limit =
        std::visit(Overloaded{[](const FixedBudget& p) { return p.horizon; },
                              [](const FixedConfidence& p) { return p.step_cap; }},
                   config.protocol);
    if (limit > (*table)->horizon())
      throw DomainError("the run is longer than the reward table (" +
                        std::to_string((*table)->horizon()) + " rows)");
  }
  (void)bobw::validate(config.params);
}

// ---------------------------------------------------------------------------

Aggregator::Aggregator(std::string algorithm, std::string params_json,
                       std::string instance_label, std::string protocol) {
  meta_.algorithm = std::move(algorithm);
  meta_.params_json = std::move(params_json);
  meta_.instance_label = std::move(instance_label);
  meta_.protocol = std::move(protocol);
}

void Aggregator::add(const TrialRecord& record) {
  if (!records_.emplace(record.trial, record).second)
    throw DomainError("trial " + std::to_string(record.trial) + " aggregated twice");
}

void Aggregator::merge(const Aggregator& other) {
  for (const auto& [trial, record] : other.records_) add(record);
}

AggregateResult Aggregator::finalize() const {
  AggregateResult out = meta_;
  out.n_trials = count();
  if (records_.empty()) return out;
  std::vector<double> regrets;
  std::vector<double> steps;
  regrets.reserve(records_.size());
  steps.reserve(records_.size());
  for (const auto& [trial, r] : records_) {
    regrets.push_back(r.pseudo_regret);
    steps.push_back(static_cast<double>(r.steps_used));
    if (!r.correct) ++out.failure_count;
    if (r.capped) ++out.capped_count;
  }
  out.mean_regret = plain_mean(regrets);
  out.std_regret = population_std(regrets, out.mean_regret);
  out.mean_stop_time = plain_mean(steps);
  out.std_stop_time = population_std(steps, out.mean_stop_time);
  out.failure_probability =
      static_cast<double>(out.failure_count) / static_cast<double>(out.n_trials);
  return out;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BOBW_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

BatchResult run_batch(const ExperimentConfig& config) {
  validate(config);
  BatchResult result;
  result.warnings = bobw::validate(config.params);
  if (const auto* s = std::get_if<std::shared_ptr<const StochasticInstance>>(&config.environment)) {
    if (gap_profile(**s).exceeds_unit_gap)
      result.warnings.push_back("instance has a gap above 1; bounds assume unit-scale rewards");
  }

  result.trials.resize(static_cast<std::size_t>(config.n_trials));
  parallel_for(config.n_trials, resolve_workers(config.workers), [&](std::int64_t i) {
    result.trials[static_cast<std::size_t>(i)] =
        run_trial(config.params, config.environment, config.protocol, config.base_seed, i);
  });

  Aggregator agg(algorithm_name(config.params), params_to_json(config.params),
                 environment_label(config.environment), describe(config.protocol));
  for (const auto& r : result.trials) agg.add(r);
  result.aggregate = agg.finalize();
  if (result.aggregate.capped_count > 0)
    result.warnings.push_back(std::to_string(result.aggregate.capped_count) +
                              " trial(s) reached the step cap without stopping");

  if (config.output_prefix) write_batch_outputs(*config.output_prefix, {result});
  return result;
}

std::vector<BatchResult> pareto_sweep(const ExperimentConfig& config,
                                      const std::vector<double>& gammas) {
  const auto* base = std::get_if<BobwParams>(&config.params);
  if (!base) throw DomainError("pareto_sweep: the swept policy must be bobw");
  if (gammas.empty()) throw DomainError("pareto_sweep: empty gamma grid");
  if (!std::is_sorted(gammas.begin(), gammas.end()))
    throw DomainError("pareto_sweep: gamma grid must be ascending");

  std::vector<BatchResult> out;
  ExperimentConfig point = config;
  point.output_prefix.reset();
  for (double gamma : gammas) {
    BobwParams p = *base;
    p.gamma = gamma;
    point.params = p;
    out.push_back(run_batch(point));
  }
  if (config.output_prefix) write_batch_outputs(*config.output_prefix, out);
  return out;
}

double concentration_violation_rate(const StochasticInstance& instance, const BobwParams& params,
                                    std::int64_t horizon, std::int64_t n_trials,
                                    std::uint64_t base_seed, int workers) {
  std::vector<char> violated(static_cast<std::size_t>(n_trials), 0);
  const Eigen::VectorXd& truth = instance.means();
  parallel_for(n_trials, resolve_workers(workers), [&](std::int64_t trial) {
    const RngStream stream(base_seed, static_cast<std::uint64_t>(trial));
    RngStream policy_rng = stream.child(0);
    std::vector<RngStream> arm_rngs;
    for (Eigen::Index i = 0; i < instance.size(); ++i)
      arm_rngs.push_back(stream.child(static_cast<std::uint64_t>(1 + i)));
    BobwLilUcb policy(params, instance.size());
    for (std::int64_t t = 0; t < horizon; ++t) {
      const Eigen::Index arm = policy.select(policy_rng);
      policy.update(arm, sample_reward(instance, arm, arm_rngs[static_cast<std::size_t>(arm)]));
      if (std::fabs(policy.stats().means[arm] - truth[arm]) > policy.radii()[arm]) {
        violated[static_cast<std::size_t>(trial)] = 1;
        break;
      }
    }
  });
  std::int64_t count = 0;
  for (char v : violated) count += v;
  return static_cast<double>(count) / static_cast<double>(n_trials);
}

// ---------------------------------------------------------------------------

std::string trials_csv_header() {
  return "schema_version,algorithm,params_json,instance_label,protocol,trial,seed,steps_used,"
         "pseudo_regret,realized_regret,recommended_arm,correct,stopped_early";
}

std::string aggregate_csv_header() {
  return "schema_version,algorithm,params_json,instance_label,protocol,mean_regret,std_regret,"
         "failure_count,failure_probability,mean_stop_time,std_stop_time,n_trials";
}

void write_trials_csv(std::ostream& out, const AggregateResult& meta,
                      const std::vector<TrialRecord>& trials) {
  const std::string prefix = std::to_string(kSchemaVersion) + ',' + csv_field(meta.algorithm) +
                             ',' + csv_field(meta.params_json) + ',' +
                             csv_field(meta.instance_label) + ',' + csv_field(meta.protocol) + ',';
  for (const auto& r : trials) {
    out << prefix << r.trial << ',' << r.seed << ',' << r.steps_used << ','
        << format_double(r.pseudo_regret) << ','
        << (r.realized_regret ? format_double(*r.realized_regret) : std::string{}) << ','
        << r.recommended_arm << ',' << (r.correct ? 1 : 0) << ',' << (r.stopped_early ? 1 : 0)
        << '\n';
  }
}

void write_aggregate_row(std::ostream& out, const AggregateResult& a) {
  out << kSchemaVersion << ',' << csv_field(a.algorithm) << ',' << csv_field(a.params_json) << ','
      << csv_field(a.instance_label) << ',' << csv_field(a.protocol) << ','
      << format_double(a.mean_regret) << ',' << format_double(a.std_regret) << ','
      << a.failure_count << ',' << format_double(a.failure_probability) << ','
      << format_double(a.mean_stop_time) << ',' << format_double(a.std_stop_time) << ','
      << a.n_trials << '\n';
}

void write_batch_outputs(const std::filesystem::path& prefix,
                         const std::vector<BatchResult>& batches) {
  const std::filesystem::path trials_path = prefix.string() + ".trials.csv";
  const std::filesystem::path agg_path = prefix.string() + ".agg.csv";
  AtomicFile trials(trials_path);
  AtomicFile agg(agg_path);
  trials.stream() << trials_csv_header() << '\n';
  agg.stream() << aggregate_csv_header() << '\n';
  for (const auto& b : batches) {
    write_trials_csv(trials.stream(), b.aggregate, b.trials);
    write_aggregate_row(agg.stream(), b.aggregate);
  }
  trials.commit();
  try {
    agg.commit();
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(trials_path, ignored);
    throw;
  }
}

}  // namespace bobw
