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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "bobw/instance.hpp"
#include "bobw/rng.hpp"

namespace bobw {

// Families used by the lower-bound constructions. Instance k (0-based) of a
// family of L instances has arm k as its unique best arm; instance 0 is the
// base instance where arm 0 is best. `shifts` holds one entry per arm 1..L-1.

/// Arm 0 ~ amplitude * Bern(1/2), arm j ~ amplitude * Bern(1/2 - shifts[j-1]);
/// instance k >= 1 flips arm k to amplitude * Bern(1/2 + shifts[k-1]).
/// Throws DomainError unless every shift lies in (0, 1/4] and amplitude > 0.
std::vector<StochasticInstance> bern_family(Eigen::Index arms, const std::vector<double>& shifts,
                                            double amplitude = 1.0);

/// Same flip structure with N(., sd^2) arms.
std::vector<StochasticInstance> gauss_family(Eigen::Index arms, const std::vector<double>& shifts,
                                             double sd);

using RewardTable = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Oblivious adversarial instance: a fixed T x L table of rewards in [0,1].
class AdversarialInstance {
 public:
  /// Throws DomainError for rewards outside [0,1] and NonUniqueOptimum when
  /// the largest cumulative gain is shared.
  explicit AdversarialInstance(RewardTable rewards, std::string label = {});

  Eigen::Index horizon() const { return rewards_.rows(); }
  Eigen::Index size() const { return rewards_.cols(); }
  const RewardTable& rewards() const { return rewards_; }
  double reward(std::int64_t step, Eigen::Index arm) const { return rewards_(step, arm); }

  /// Cumulative gains after the final step.
  const Eigen::VectorXd& cumulative_gains() const { return gains_; }
  /// Cumulative gains after `steps` steps (0 <= steps <= T).
  Eigen::VectorXd cumulative_gains(std::int64_t steps) const;
  /// (G_i - G_j) / T.
  double empirical_gap(Eigen::Index i, Eigen::Index j) const;
  Eigen::Index best_arm() const { return best_; }
  /// Smallest empirical gap between the best arm and any other arm.
  double min_empirical_gap() const { return min_gap_; }
  /// Empirical gaps of every arm to the best arm (0 for the best).
  Eigen::VectorXd empirical_gaps() const;

  const std::string& label() const { return label_; }
  /// How many candidate tables were rejected for a tied optimum.
  int regenerations() const { return regenerations_; }
  void set_regenerations(int n) { regenerations_ = n; }

 private:
  RewardTable rewards_;
  Eigen::VectorXd gains_;
  Eigen::Index best_ = 0;
  double min_gap_ = 0.0;
  std::string label_;
  int regenerations_ = 0;
};

/// Probability that a clipped shared-noise step keeps the full separation:
/// 1 - exp(-(1 - 2 shift)^2 / (8 sd^2)).
double clipped_separation_probability(double shift, double sd);

/// Clipped-Gaussian table for instance `which` (0-based) of the adversarial
/// family. Row 0 is deterministic: arm 0 gets 1/2, the boosted arm 1/2 + shift
/// and the rest 1/2 - shift. Later rows share one draw Z ~ N(1/2, sd^2):
/// clip(Z) for arm 0, clip(Z + shift) for the boosted arm, clip(Z - shift)
/// otherwise. Instance 0 boosts nobody. The same `rng` yields the same noise
/// for every `which`. A tied optimum is redrawn from rng.child(1), child(2), ...
AdversarialInstance adversarial_clipped_family(Eigen::Index arms, std::int64_t horizon,
                                               double shift, double sd, Eigen::Index which,
                                               const RngStream& rng);

/// Parses "advclip:L=..,T=..,eps=..,sigma=..,ell=..,seed=.." (ell 0-based).
AdversarialInstance adversarial_from_shorthand(const std::string& spec);

/// CSV with header "t,arm,reward" (t and arm 0-based), one row per cell.
void write_reward_table_csv(const AdversarialInstance& instance,
                            const std::filesystem::path& path);

}  // namespace bobw
