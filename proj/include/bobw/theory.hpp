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
#include <optional>
#include <string>
#include <vector>

namespace bobw::theory {

// Multiplier inside the iterated-log inversion and gamma_1.
inline constexpr double kInversionFactor = 1.4;
// Multiplier used when the BAI argument is run with the looser constant.
inline constexpr double kLooseInversionFactor = 2.0;

/// Every evaluator reads only the fields it needs. `gaps` lists the
/// suboptimal gaps (no zero entry for the best arm).
struct BoundInputs {
  double T = 0.0;
  double L = 0.0;
  double sigma = 0.5;
  double eps = 0.01;
  double beta = 2.718281828459045;
  double gamma = 0.0;
  double min_gap = 0.0;
  std::vector<double> gaps;
  double h2 = 0.0;
  double h2_upper = 0.0;
  double min_gap_lower = 0.0;
  double reward_range = 1.0;
  double variance_bound = 0.25;
  double phi = 0.0;
  double psi = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
  double eta = 0.0;
  double p = 0.0;
  double hp_prime = 0.0;
  double cp = 0.0;
};

// ---------------------------------------------------------------------------
// BoBW-lil'UCB

/// sqrt(2.8 log(6 sqrt(2.8) sigma (1+eps)^2 / gap + beta))
///   * exp(-(T - L) / (144 sigma^2 (1+eps)^3 (h2 + gap^-2))).
/// Throws DomainError for T <= L or a non-positive gap.
double gamma_1(double gap, double h2, double sigma, double eps, double beta,
               double T, double L);

struct GammaInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty() const { return lo > hi; }
};

/// [gamma_1(gap_lower, h2_upper), min{log(beta+1+eps)/e, log T / T, 1/L}].
/// Both endpoints are returned even when the interval is empty.
GammaInterval gamma_interval(double L, double T, double sigma, double eps, double beta,
                             double gap_lower, double h2_upper);

/// 2L(2+eps)/eps * (gamma / log(1+eps))^(1+eps). Not clamped to 1.
double bobw_failure_bound(double gamma, double eps, double L);

/// (T - L)/(1+eps)^3 >= sum_i 72 sigma^2 / g_i^2 * log(2.8/gamma^2 * log(11 sigma (1+eps)^2 / g_i + beta))
/// with g_i = max(min_gap, gap_i) over all L arms (the best arm uses min_gap).
bool bobw_feasible(double T, double sigma, double eps, double beta, double gamma,
                   const std::vector<double>& suboptimal_gaps);

/// Explicit regret upper bound with all constants. Throws DomainError on a
/// zero gap or gamma outside (0,1). `L` counts every arm including the best.
double bobw_regret_bound_explicit(double T, double L, double sigma, double eps,
                                  double beta, double gamma,
                                  const std::vector<double>& suboptimal_gaps);

/// c log((1.4/rho) log(1.4 a c / rho + b)). Throws DomainError when
/// 1.4 a c / rho + b < e.
double iterated_log_inversion(double c, double a, double rho, double b);

// ---------------------------------------------------------------------------
// Baselines and lower bounds

enum class BoundKind {
  ShFailure,
  UcbERegret,
  UcbEFailure,
  UcbETunedFailure,
  SrFailure,
  UGapEFailure,
  SarFailure,
  NseFailure,
  CarpentierLower,
  Exp3PRegret,
  Exp3PFailure,
  UpAdvFailure,
  AdvBaiLower,
  AdvTradeoffLower,
};

std::string to_string(BoundKind kind);
/// Throws ParseError for an unknown name.
BoundKind bound_kind_from_string(const std::string& name);
const std::vector<BoundKind>& all_bound_kinds();

struct BoundValue {
  double value = 0.0;
  // A probability bound at or above 1.
  bool vacuous = false;
  // False when the side condition of the bound fails; the value is still
  // the evaluated expression.
  bool condition_ok = true;
  std::string condition;
};

BoundValue baseline_bound(BoundKind kind, const BoundInputs& in);

enum class ParetoKind { Bounded1, Bounded2, Variance1, Variance2 };

std::string to_string(ParetoKind kind);
ParetoKind pareto_kind_from_string(const std::string& name);

/// Bounded1: phi (L-1) R / (8 gap_lower)    Bounded2: phi gap_lower H2 R^3 / 8
/// Variance1: phi (L-1) V / (2 gap_lower)   Variance2: phi gap_lower H2 V / 2
/// H2 here is `h2_upper`. Throws DomainError when an input is not positive.
double pareto_lower_bound(ParetoKind kind, const BoundInputs& in);

}  // namespace bobw::theory
