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

#include "bobw/theory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "bobw/errors.hpp"

namespace bobw::theory {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

double harmonic_tail(double L) {
  double sum = 0.5;
  for (int i = 2; i <= static_cast<int>(L); ++i) sum += 1.0 / i;
  return sum;
}

BoundValue probability(double value) { return {value, value >= 1.0, true, {}}; }

constexpr std::array<std::pair<BoundKind, const char*>, 14> kBoundNames{{
    {BoundKind::ShFailure, "sh_failure"},
    {BoundKind::UcbERegret, "ucbe_regret"},
    {BoundKind::UcbEFailure, "ucbe_failure"},
    {BoundKind::UcbETunedFailure, "ucbe_tuned_failure"},
    {BoundKind::SrFailure, "sr_failure"},
    {BoundKind::UGapEFailure, "ugapeb_failure"},
    {BoundKind::SarFailure, "sar_failure"},
    {BoundKind::NseFailure, "nse_failure"},
    {BoundKind::CarpentierLower, "carpentier_lower"},
    {BoundKind::Exp3PRegret, "exp3p_regret"},
    {BoundKind::Exp3PFailure, "exp3p_failure"},
    {BoundKind::UpAdvFailure, "upadv_failure"},
    {BoundKind::AdvBaiLower, "adv_bai_lower"},
    {BoundKind::AdvTradeoffLower, "adv_tradeoff_lower"},
}};

constexpr std::array<std::pair<ParetoKind, const char*>, 4> kParetoNames{{
    {ParetoKind::Bounded1, "B1"},
    {ParetoKind::Bounded2, "B2"},
    {ParetoKind::Variance1, "B1v"},
    {ParetoKind::Variance2, "B2v"},
}};

}  // namespace

double gamma_1(double gap, double h2, double sigma, double eps, double beta, double T,
               double L) {
  require(T > L, "gamma_1: T must exceed L");
  require(gap > 0.0, "gamma_1: gap must be positive");
  const double f = kInversionFactor * 2.0;  // 2.8
  const double prefactor =
      std::sqrt(f * std::log(6.0 * std::sqrt(f) * sigma * std::pow(1.0 + eps, 2) / gap + beta));
  const double denom = 144.0 * sigma * sigma * std::pow(1.0 + eps, 3) * (h2 + 1.0 / (gap * gap));
  return prefactor * std::exp(-(T - L) / denom);
}

GammaInterval gamma_interval(double L, double T, double sigma, double eps, double beta,
                             double gap_lower, double h2_upper) {
  GammaInterval out;
  out.lo = gamma_1(gap_lower, h2_upper, sigma, eps, beta, T, L);
  out.hi = std::min({std::log(beta + 1.0 + eps) / std::numbers::e, std::log(T) / T, 1.0 / L});
  return out;
}

double bobw_failure_bound(double gamma, double eps, double L) {
  return 2.0 * L * (2.0 + eps) / eps * std::pow(gamma / std::log1p(eps), 1.0 + eps);
}

bool bobw_feasible(double T, double sigma, double eps, double beta, double gamma,
                   const std::vector<double>& suboptimal_gaps) {
  const double L = static_cast<double>(suboptimal_gaps.size() + 1);
  if (suboptimal_gaps.empty()) return T - L >= 0.0;
  const double min_gap = *std::min_element(suboptimal_gaps.begin(), suboptimal_gaps.end());
  const double f = kInversionFactor * 2.0;
  auto term = [&](double g) {
    return 72.0 * sigma * sigma / (g * g) *
           std::log(f / (gamma * gamma) *
                    std::log(11.0 * sigma * std::pow(1.0 + eps, 2) / g + beta));
  };
  double rhs = term(min_gap);
  for (double g : suboptimal_gaps) rhs += term(std::max(min_gap, g));
  return (T - L) / std::pow(1.0 + eps, 3) >= rhs;
}

double bobw_regret_bound_explicit(double T, double L, double sigma, double eps, double beta,
                                  double gamma, const std::vector<double>& suboptimal_gaps) {
  require(gamma > 0.0 && gamma < 1.0, "regret bound: gamma must lie in (0,1)");
  const double a1 = kInversionFactor;
  const double root_eps = std::sqrt(eps);
  double total = 0.0;
  for (double g : suboptimal_gaps) {
    require(g > 0.0, "regret bound: every suboptimal gap must be positive");
    const double inner = 10.0 * std::sqrt(2.0 * a1) * sigma * (1.0 + root_eps) * (1.0 + eps) /
                             (g * std::sqrt(gamma)) +
                         beta;
    total += 2.0 * g;
    total += 200.0 * sigma * sigma * std::pow(1.0 + root_eps, 2) * (1.0 + eps) / g *
             std::log(2.0 * a1 / gamma * std::log(inner));
  }
  total += T * bobw_failure_bound(gamma, eps, L);
  return total;
}

double iterated_log_inversion(double c, double a, double rho, double b) {
  const double inner = kInversionFactor * a * c / rho + b;
  require(inner >= std::numbers::e,
          "iterated_log_inversion: 1.4 a c / rho + b must be at least e");
  return c * std::log(kInversionFactor / rho * std::log(inner));
}

std::string to_string(BoundKind kind) {
  for (const auto& [k, name] : kBoundNames)
    if (k == kind) return name;
  return "unknown";
}

BoundKind bound_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kBoundNames)
    if (name == n) return k;
  throw ParseError("unknown bound kind '" + name + "'", -1);
}

const std::vector<BoundKind>& all_bound_kinds() {
  static const std::vector<BoundKind> kinds = [] {
    std::vector<BoundKind> out;
    for (const auto& entry : kBoundNames) out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

BoundValue baseline_bound(BoundKind kind, const BoundInputs& in) {
  const double T = in.T;
  const double L = in.L;
  switch (kind) {
    case BoundKind::ShFailure: {
      const double log2L = std::log2(L);
      if (T == 0.0) return probability(3.0 * log2L);
      return probability(3.0 * log2L * std::exp(-T / (8.0 * in.h2 * log2L)));
    }
    case BoundKind::UcbERegret: {
      double log_part = 0.0;
      double gap_part = 0.0;
      for (double g : in.gaps) {
        require(g > 0.0, "ucbe_regret: gaps must be positive");
        log_part += std::log(T) / g;
        gap_part += g;
      }
      BoundValue out;
      out.value = 2.0 * in.alpha * in.alpha * log_part +
                  (1.0 + std::numbers::pi * std::numbers::pi / 3.0) * gap_part;
      out.condition = "alpha log T <= 25 (T - L) / (36 H2)";
      out.condition_ok = in.alpha * std::log(T) <= 25.0 * (T - L) / (36.0 * in.h2);
      return out;
    }
    case BoundKind::UcbEFailure:
      return probability(2.0 * L * std::pow(T, 1.0 - 2.0 * in.alpha / 25.0));
    case BoundKind::UcbETunedFailure:
      return probability(2.0 * T * L * std::exp(-(T - L) / (18.0 * in.h2)));
    case BoundKind::SrFailure:
      return probability(L * (L - 1.0) * std::exp(-(T - L) / (harmonic_tail(L) * in.h2)));
    case BoundKind::UGapEFailure:
      return probability(2.0 * T * L * std::exp(-(T - L) / (8.0 * in.h2)));
    case BoundKind::SarFailure:
      return probability(2.0 * L * L *
                         std::exp(-(T - L) / (8.0 * harmonic_tail(L) * in.h2)));
    case BoundKind::NseFailure:
      require(in.hp_prime > 0.0 && in.cp > 0.0, "nse_failure: needs H'_p and C_p");
      return probability((L - 1.0) * std::exp(-2.0 * (T - L) / (in.hp_prime * in.cp)));
    case BoundKind::CarpentierLower:
      return probability(std::exp(-400.0 * T / (in.h2 * std::log(L))) / 6.0);
    case BoundKind::Exp3PRegret: {
      require(in.eta > 0.0 && in.delta > 0.0 && in.delta < 1.0,
              "exp3p_regret: needs eta > 0 and delta in (0,1)");
      BoundValue out;
      out.value = in.gamma * T + in.eta * L * T + std::log(L * L * T / (in.eta * in.delta)) +
                  std::log(L) / in.eta;
      out.condition = "L eta <= gamma <= 1/2";
      out.condition_ok = L * in.eta <= in.gamma && in.gamma <= 0.5;
      return out;
    }
    case BoundKind::Exp3PFailure:
      return probability(L * std::exp(-in.gamma * T * in.min_gap * in.min_gap / (4.0 * L)));
    case BoundKind::UpAdvFailure:
      return probability(L * std::exp(-3.0 * T * in.min_gap * in.min_gap / (28.0 * L)));
    case BoundKind::AdvBaiLower: {
      BoundValue out = probability(
          2.0 / 65.0 * std::exp(-150.0 * T * in.min_gap_lower * in.min_gap_lower / L));
      out.condition = "T >= 10";
      out.condition_ok = T >= 10.0;
      return out;
    }
    case BoundKind::AdvTradeoffLower: {
      require(in.min_gap_lower > 0.0, "adv_tradeoff_lower: gap lower bound must be positive");
      BoundValue out;
      out.value = in.psi * (L - 1.0) / (103.0 * in.min_gap_lower);
      out.condition = "0 < gap lower bound <= 1";
      out.condition_ok = in.min_gap_lower <= 1.0;
      return out;
    }
  }
  throw DomainError("baseline_bound: unhandled kind");
}

std::string to_string(ParetoKind kind) {
  for (const auto& [k, name] : kParetoNames)
    if (k == kind) return name;
  return "unknown";
}

ParetoKind pareto_kind_from_string(const std::string& name) {
  for (const auto& [k, n] : kParetoNames)
    if (name == n) return k;
  throw ParseError("unknown Pareto bound kind '" + name + "'", -1);
}

double pareto_lower_bound(ParetoKind kind, const BoundInputs& in) {
  require(in.phi > 0.0 && in.min_gap_lower > 0.0, "pareto bound: phi and gap must be positive");
  switch (kind) {
    case ParetoKind::Bounded1:
      require(in.L > 1.0 && in.reward_range > 0.0, "pareto bound: needs L > 1 and R > 0");
      return in.phi * (in.L - 1.0) * in.reward_range / (8.0 * in.min_gap_lower);
    case ParetoKind::Bounded2:
      require(in.h2_upper > 0.0 && in.reward_range > 0.0, "pareto bound: needs H2 > 0 and R > 0");
      return in.phi * in.min_gap_lower * in.h2_upper * std::pow(in.reward_range, 3) / 8.0;
    case ParetoKind::Variance1:
      require(in.L > 1.0 && in.variance_bound > 0.0, "pareto bound: needs L > 1 and V > 0");
      return in.phi * (in.L - 1.0) * in.variance_bound / (2.0 * in.min_gap_lower);
    case ParetoKind::Variance2:
      require(in.h2_upper > 0.0 && in.variance_bound > 0.0,
              "pareto bound: needs H2 > 0 and V > 0");
      return in.phi * in.min_gap_lower * in.h2_upper * in.variance_bound / 2.0;
  }
  throw DomainError("pareto_lower_bound: unhandled kind");
}

}  // namespace bobw::theory
