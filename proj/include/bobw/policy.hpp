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
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "bobw/rng.hpp"

namespace bobw {

using PullCounts = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

// ---------------------------------------------------------------------------
// Parameters

/// BoBW-lil'UCB(gamma). sigma is the common sub-Gaussian scale of the rewards.
struct BobwParams {
  double sigma = 0.5;
  double eps = 0.01;
  double beta = std::numbers::e;
  double gamma = 0.9;
};

/// UCB-E(a): index mean + sqrt(a / N).
struct UcbEParams {
  double a = 1.0;
};

struct SequentialHalvingParams {};

struct Exp3PParams {
  double gamma = 0.1;
  double eta = 0.01;
};

struct UniformPullParams {};

/// Fixed-confidence UCB_alpha stand-in: sampling index
/// mean + sqrt(alpha log t / (2N)), stopping once the empirical leader's
/// lower bound clears every other arm's upper bound at radius
/// sqrt(log(2L t^2 / delta) / (2N)).
struct UcbAlphaParams {
  double alpha = 3.0;
  double delta = 0.01;
};

using PolicyParams = std::variant<BobwParams, UcbEParams, SequentialHalvingParams,
                                  Exp3PParams, UniformPullParams, UcbAlphaParams>;

/// Short machine name: bobw, ucbe, sh, exp3p, upadv, ucbalpha.
std::string algorithm_name(const PolicyParams& params);

/// Throws DomainError for out-of-range parameters. Returns non-fatal
/// warnings, e.g. a BoBW gamma outside the range covered by its guarantees.
std::vector<std::string> validate(const PolicyParams& params);

/// Canonical JSON object with an "algorithm" key; keys are sorted so the text
/// is stable across runs.
std::string params_to_json(const PolicyParams& params);
PolicyParams params_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// Confidence radius

/// 5 sigma (1 + sqrt(eps)) sqrt( 2(1+eps)/n * log( log(beta + (1+eps) n) / gamma ) )
///
/// Throws DomainError when log(beta + (1+eps) n) / gamma <= 1, where the outer
/// logarithm would be non-positive.
double lil_radius(double n, double sigma, double eps, double beta, double gamma);

// ---------------------------------------------------------------------------
// State

/// Bookkeeping common to every policy: t = sum of pull counts, and the
/// running mean of the rewards routed to each arm.
struct ArmStats {
  std::int64_t t = 0;
  PullCounts pulls;
  Eigen::VectorXd means;

  explicit ArmStats(Eigen::Index arms = 0)
      : pulls(PullCounts::Zero(arms)), means(Eigen::VectorXd::Zero(arms)) {}

  Eigen::Index size() const { return pulls.size(); }
  void record(Eigen::Index arm, double reward);
};

/// Index of the maximum; exact ties broken uniformly at random.
Eigen::Index argmax_random_tie(const Eigen::VectorXd& values, RngStream& rng);
/// Index of the maximum; exact ties go to the lowest index.
Eigen::Index argmax_lowest(const Eigen::VectorXd& values);

class BobwLilUcb {
 public:
  BobwLilUcb(const BobwParams& params, Eigen::Index arms);

  Eigen::Index select(RngStream& rng);
  void update(Eigen::Index arm, double reward);
  Eigen::Index recommend() const { return argmax_lowest(stats_.means); }
  bool stopped() const { return false; }

  const ArmStats& stats() const { return stats_; }
  const BobwParams& params() const { return params_; }
  /// Current C_{i,t} (NaN for arms not yet pulled).
  const Eigen::VectorXd& radii() const { return radii_; }
  /// Current U_{i,t} = mean + radius.
  const Eigen::VectorXd& indices() const { return indices_; }

 private:
  BobwParams params_;
  ArmStats stats_;
  Eigen::VectorXd radii_;
  Eigen::VectorXd indices_;
};

class UcbE {
 public:
  UcbE(const UcbEParams& params, Eigen::Index arms);

  Eigen::Index select(RngStream& rng);
  void update(Eigen::Index arm, double reward);
  Eigen::Index recommend() const { return argmax_lowest(stats_.means); }
  bool stopped() const { return false; }

  const ArmStats& stats() const { return stats_; }
  const Eigen::VectorXd& radii() const { return radii_; }
  const Eigen::VectorXd& indices() const { return indices_; }

 private:
  UcbEParams params_;
  ArmStats stats_;
  Eigen::VectorXd radii_;
  Eigen::VectorXd indices_;
};

/// Sequential Halving over ceil(log2 L) phases. Phase r pulls each of its
/// |S_r| survivors floor(T / (|S_r| ceil(log2 L))) times round-robin and
/// keeps the top ceil(|S_r|/2) by within-phase mean (ties to the lower arm
/// index). After the final phase the remaining budget goes to the survivor
/// and no longer affects the recommendation.
class SequentialHalving {
 public:
  struct Phase {
    Eigen::Index arms;
    std::int64_t pulls_per_arm;
  };

  /// Throws BudgetTooSmall when the first phase would pull some arm 0 times.
  SequentialHalving(Eigen::Index arms, std::int64_t budget);

  Eigen::Index select(RngStream& rng);
  void update(Eigen::Index arm, double reward);
  /// Throws Incomplete before the final phase has finished.
  Eigen::Index recommend() const;
  bool stopped() const { return false; }

  const ArmStats& stats() const { return stats_; }
  const std::vector<Phase>& schedule() const { return schedule_; }
  const std::vector<Eigen::Index>& survivors() const { return survivors_; }
  bool finished() const { return survivors_.size() == 1; }
  std::int64_t scheduled_pulls() const;

 private:
  void close_phase();

  ArmStats stats_;
  std::vector<Phase> schedule_;
  std::vector<Eigen::Index> survivors_;
  std::size_t phase_ = 0;
  std::int64_t position_ = 0;
  Eigen::VectorXd phase_sums_;
};

/// Exp3.P(gamma, eta) with unnormalised importance-weighted gain estimates.
class Exp3P {
 public:
  Exp3P(const Exp3PParams& params, Eigen::Index arms);

  Eigen::Index select(RngStream& rng);
  void update(Eigen::Index arm, double reward);
  Eigen::Index recommend() const { return argmax_lowest(gains_); }
  bool stopped() const { return false; }

  const ArmStats& stats() const { return stats_; }
  const Eigen::VectorXd& probabilities() const { return probabilities_; }
  const Eigen::VectorXd& estimated_gains() const { return gains_; }

  /// Overwrite the gain estimates and recompute p (used by tests and to
  /// resume from a stored state).
  void set_estimated_gains(const Eigen::VectorXd& gains);

 private:
  void refresh_probabilities();

  Exp3PParams params_;
  ArmStats stats_;
  Eigen::VectorXd gains_;
  Eigen::VectorXd probabilities_;
  Eigen::VectorXd scratch_;
};

/// UP-ADV: uniform sampling, recommends the largest observed cumulative gain.
class UniformPull {
 public:
  explicit UniformPull(Eigen::Index arms);

  Eigen::Index select(RngStream& rng);
  void update(Eigen::Index arm, double reward);
  Eigen::Index recommend() const { return argmax_lowest(gains_); }
  bool stopped() const { return false; }

  const ArmStats& stats() const { return stats_; }
  const Eigen::VectorXd& observed_gains() const { return gains_; }

 private:
  ArmStats stats_;
  Eigen::VectorXd gains_;
};

class UcbAlpha {
 public:
  UcbAlpha(const UcbAlphaParams& params, Eigen::Index arms);

  /// Throws Stopped once the stopping rule has fired.
  Eigen::Index select(RngStream& rng);
  void update(Eigen::Index arm, double reward);
  Eigen::Index recommend() const { return argmax_lowest(stats_.means); }
  bool stopped() const { return stopped_; }

  const ArmStats& stats() const { return stats_; }
  Eigen::VectorXd indices() const;

 private:
  void check_stopping();

  UcbAlphaParams params_;
  ArmStats stats_;
  Eigen::VectorXd inv_sqrt_pulls_;
  Eigen::VectorXd scratch_;
  bool stopped_ = false;
};

/// Type-erased sequential policy: select an arm, ingest its reward,
/// recommend, and (fixed-confidence only) report stopping.
class Policy {
 public:
  using Impl = std::variant<BobwLilUcb, UcbE, SequentialHalving, Exp3P, UniformPull, UcbAlpha>;

  explicit Policy(Impl impl) : impl_(std::move(impl)) {}

  Eigen::Index select_arm(RngStream& rng);
  void update(Eigen::Index arm, double reward);
  Eigen::Index recommend() const;
  bool has_stopped() const;
  const ArmStats& stats() const;

  template <class T>
  const T* get_if() const { return std::get_if<T>(&impl_); }

 private:
  Impl impl_;
};

/// Builds a policy for `arms` arms. `horizon` is the budget T (Sequential
/// Halving needs it for its schedule); other policies ignore it.
Policy policy_init(const PolicyParams& params, Eigen::Index arms, std::int64_t horizon);

}  // namespace bobw
