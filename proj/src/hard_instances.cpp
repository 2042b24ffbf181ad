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

#include "bobw/hard_instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bobw/csv_io.hpp"
#include "bobw/errors.hpp"
#include "bobw/format.hpp"
#include "bobw/shorthand.hpp"

namespace bobw {

namespace {

void check_shifts(Eigen::Index arms, const std::vector<double>& shifts) {
  if (arms < 2) throw DomainError("lower-bound family: need at least two arms");
  if (static_cast<Eigen::Index>(shifts.size()) != arms - 1)
    throw DomainError("lower-bound family: expected " + std::to_string(arms - 1) +
                      " shifts, got " + std::to_string(shifts.size()));
}

}  // namespace

std::vector<StochasticInstance> bern_family(Eigen::Index arms, const std::vector<double>& shifts,
                                            double amplitude) {
  check_shifts(arms, shifts);
  for (double d : shifts)
    if (!(d > 0.0 && d <= 0.25))
      throw DomainError("bern_family: every shift must lie in (0, 1/4], got " + format_double(d));
  if (!(amplitude > 0.0)) throw DomainError("bern_family: amplitude must be positive");

  std::vector<StochasticInstance> family;
  for (Eigen::Index k = 0; k < arms; ++k) {
    std::vector<ArmModel> models;
    models.push_back(ArmModel::bernoulli(0.5, {}, amplitude));
    for (Eigen::Index j = 1; j < arms; ++j) {
      const double d = shifts[static_cast<std::size_t>(j - 1)];
      models.push_back(ArmModel::bernoulli(j == k ? 0.5 + d : 0.5 - d, {}, amplitude));
    }
    family.emplace_back(std::move(models), std::nullopt,
                        "bern_family:L=" + std::to_string(arms) + ",k=" + std::to_string(k));
  }
  return family;
}

std::vector<StochasticInstance> gauss_family(Eigen::Index arms, const std::vector<double>& shifts,
                                             double sd) {
  check_shifts(arms, shifts);
  for (double d : shifts)
    if (!(d > 0.0)) throw DomainError("gauss_family: shifts must be positive");
  if (!(sd > 0.0)) throw DomainError("gauss_family: standard deviation must be positive");

  const double variance = sd * sd;
  std::vector<StochasticInstance> family;
  for (Eigen::Index k = 0; k < arms; ++k) {
    std::vector<ArmModel> models;
    models.push_back(ArmModel::gaussian(0.5, variance));
    for (Eigen::Index j = 1; j < arms; ++j) {
      const double d = shifts[static_cast<std::size_t>(j - 1)];
      models.push_back(ArmModel::gaussian(j == k ? 0.5 + d : 0.5 - d, variance));
    }
    family.emplace_back(std::move(models), std::nullopt,
                        "gauss_family:L=" + std::to_string(arms) + ",k=" + std::to_string(k));
  }
  return family;
}

// ---------------------------------------------------------------------------

AdversarialInstance::AdversarialInstance(RewardTable rewards, std::string label)
    : rewards_(std::move(rewards)), label_(std::move(label)) {
  if (rewards_.rows() < 1 || rewards_.cols() < 1)
    throw DomainError("adversarial instance: empty reward table");
  if ((rewards_.array() < 0.0).any() || (rewards_.array() > 1.0).any() ||
      !rewards_.allFinite())
    throw DomainError("adversarial instance: rewards must lie in [0,1]");
  gains_ = rewards_.colwise().sum().transpose();
  const double top = gains_.maxCoeff(&best_);
  if ((gains_.array() == top).count() > 1)
    throw NonUniqueOptimum("adversarial instance: the largest cumulative gain is shared");
  min_gap_ = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < size(); ++j)
    if (j != best_) min_gap_ = std::min(min_gap_, empirical_gap(best_, j));
}

Eigen::VectorXd AdversarialInstance::cumulative_gains(std::int64_t steps) const {
  if (steps < 0 || steps > horizon()) throw DomainError("cumulative_gains: step out of range");
  return rewards_.topRows(steps).colwise().sum().transpose();
}

double AdversarialInstance::empirical_gap(Eigen::Index i, Eigen::Index j) const {
  return (gains_[i] - gains_[j]) / static_cast<double>(horizon());
}

Eigen::VectorXd AdversarialInstance::empirical_gaps() const {
  return (gains_[best_] - gains_.array()) / static_cast<double>(horizon());
}

double clipped_separation_probability(double shift, double sd) {
  const double m = 1.0 - 2.0 * shift;
  return 1.0 - std::exp(-m * m / (8.0 * sd * sd));
}

namespace {

RewardTable clipped_table(Eigen::Index arms, std::int64_t horizon, double shift, double sd,
                          Eigen::Index which, RngStream noise) {
  RewardTable table(horizon, arms);
  auto fill = [&](Eigen::Index t, double base) {
    table(t, 0) = std::clamp(base, 0.0, 1.0);
    for (Eigen::Index j = 1; j < arms; ++j)
      table(t, j) = std::clamp(j == which ? base + shift : base - shift, 0.0, 1.0);
  };
  fill(0, 0.5);
  for (Eigen::Index t = 1; t < horizon; ++t) fill(t, noise.normal(0.5, sd));
  return table;
}

}  // namespace

AdversarialInstance adversarial_clipped_family(Eigen::Index arms, std::int64_t horizon,
                                               double shift, double sd, Eigen::Index which,
                                               const RngStream& rng) {
  if (arms < 2) throw DomainError("adversarial family: need at least two arms");
  if (horizon < 1) throw DomainError("adversarial family: horizon must be positive");
  if (!(shift > 0.0 && shift < 0.5)) throw DomainError("adversarial family: shift must lie in (0, 1/2)");
  if (!(sd > 0.0)) throw DomainError("adversarial family: sd must be positive");
  if (which < 0 || which >= arms) throw DomainError("adversarial family: instance index out of range");

  const std::string label = "advclip:L=" + std::to_string(arms) + ",T=" + std::to_string(horizon) +
                            ",eps=" + format_double(shift) + ",sigma=" + format_double(sd) +
                            ",ell=" + std::to_string(which) + ",seed=" + std::to_string(rng.seed());
  for (int attempt = 0;; ++attempt) {
    RngStream noise = attempt == 0 ? rng : rng.child(static_cast<std::uint64_t>(attempt));
    try {
      AdversarialInstance out(clipped_table(arms, horizon, shift, sd, which, noise), label);
      out.set_regenerations(attempt);
      return out;
    } catch (const NonUniqueOptimum&) {
      if (attempt >= 64) throw;
    }
  }
}

AdversarialInstance adversarial_from_shorthand(const std::string& spec) {
  const Shorthand sh = parse_shorthand(spec);
  if (sh.kind != "advclip") throw ParseError("unknown adversarial shorthand '" + sh.kind + "'", -1);
  const auto seed = static_cast<std::uint64_t>(sh.integer_or("seed", 0));
  return adversarial_clipped_family(sh.integer("L"), sh.integer("T"), sh.number("eps"),
                                    sh.number("sigma"), sh.integer_or("ell", 0),
                                    RngStream(seed, 0));
}

void write_reward_table_csv(const AdversarialInstance& instance,
                            const std::filesystem::path& path) {
  AtomicFile file(path);
  auto& out = file.stream();
  out << "t,arm,reward\n";
  for (Eigen::Index t = 0; t < instance.horizon(); ++t)
    for (Eigen::Index j = 0; j < instance.size(); ++j)
      out << t << ',' << j << ',' << format_double(instance.reward(t, j)) << '\n';
  file.commit();
}

}  // namespace bobw
