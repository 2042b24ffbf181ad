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

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "bobw/rng.hpp"

namespace bobw {

enum class Family { Bernoulli, Gaussian, LogDomainGaussian };

const char* to_string(Family family);
Family family_from_string(const std::string& name);

/// Reward model of a single arm.
///
/// Bernoulli uses `location` as the success probability and pays `amplitude`
/// on success (1 by default). Gaussian uses `location` as
/// the mean together with `variance`. LogDomainGaussian draws a unit-variance
/// Gaussian centred at `location`, which already holds a log-transformed
/// quantity (e.g. log percent control).
struct ArmModel {
  Family family = Family::Bernoulli;
  double location = 0.0;
  double variance = 0.0;
  std::string label;
  double amplitude = 1.0;

  static ArmModel bernoulli(double p, std::string label = {}, double amplitude = 1.0);
  static ArmModel gaussian(double mean, double variance, std::string label = {});
  static ArmModel log_domain_gaussian(double log_mean, std::string label = {});

  double mean() const { return family == Family::Bernoulli ? amplitude * location : location; }
  /// Sub-Gaussian scale implied by the family alone.
  double natural_scale() const;
};

/// Immutable stochastic bandit instance; safe to share between threads.
class StochasticInstance {
 public:
  /// Throws DomainError on an empty arm list, an invalid arm, or a
  /// non-positive scale. When `scale` is absent the default_scale() rule is
  /// applied.
  explicit StochasticInstance(std::vector<ArmModel> arms,
                              std::optional<double> scale = std::nullopt,
                              std::string label = {});

  Eigen::Index size() const { return static_cast<Eigen::Index>(arms_.size()); }
  const ArmModel& arm(Eigen::Index i) const { return arms_.at(static_cast<std::size_t>(i)); }
  const std::vector<ArmModel>& arms() const { return arms_; }
  const Eigen::VectorXd& means() const { return means_; }
  double sub_gaussian_scale() const { return scale_; }
  const std::string& label() const { return label_; }

 private:
  std::vector<ArmModel> arms_;
  Eigen::VectorXd means_;
  double scale_;
  std::string label_;
};

/// Synthetic family used throughout the experiments: w_1 = top,
/// w_i = top - gap for the remaining L-1 arms, all Bernoulli.
StochasticInstance bernoulli_two_level(Eigen::Index arms, double gap,
                                       double top = 0.5);

struct GapProfile {
  Eigen::Index optimal_arm = 0;
  Eigen::VectorXd gaps;  // gaps[optimal_arm] == 0
  double min_gap = 0.0;  // +inf for a single-arm instance
  // Set when some gap exceeds 1, i.e. the instance is not on the unit reward
  // scale assumed by the bounds. No rescaling is attempted.
  bool exceeds_unit_gap = false;

  Eigen::Index size() const { return gaps.size(); }
};

struct Hardness {
  double h1 = 0.0;
  double h2 = 0.0;
  std::optional<double> hp_prime;
  std::optional<double> cp;
};

double sample_reward(const StochasticInstance& instance, Eigen::Index arm,
                     RngStream& rng);

/// Throws NonUniqueOptimum when the largest mean is shared.
GapProfile gap_profile(const Eigen::VectorXd& means);
GapProfile gap_profile(const StochasticInstance& instance);

/// H1 = sum 1/gap, H2 = sum 1/gap^2 over suboptimal arms. With `p`, also
/// H'_p = max_{i>=2} i^p / gap_(i)^2 (arms ranked by non-increasing mean,
/// 1-based) and C_p = 2^-p + sum_{r=2}^{L} r^-p.
Hardness hardness(const GapProfile& profile, std::optional<double> p = std::nullopt);

double default_scale(const std::vector<ArmModel>& arms);
inline double default_scale(const StochasticInstance& instance) {
  return default_scale(instance.arms());
}

}  // namespace bobw
