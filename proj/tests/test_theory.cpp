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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bobw/errors.hpp"
#include "bobw/rng.hpp"
#include "bobw/theory.hpp"
#include "oracles.hpp"

using namespace bobw;
using namespace bobw::theory;

namespace {

constexpr double kE = std::numbers::e;

double g1(double T, double h2 = 102000.0) { return gamma_1(0.05, h2, 0.5, 0.01, kE, T, 256); }

}  // namespace

TEST_SUITE("theory") {

TEST_CASE("gamma_1 reference values") {
  const double budgets[4] = {1e6, 1e7, 1e8, 1e9};
  for (int i = 0; i < 4; ++i)
    CHECK(g1(budgets[i]) == doctest::Approx(oracle::kGamma1[i]).epsilon(1e-9));
}

TEST_CASE("gamma_1 shape") {
  CHECK(g1(1e8) < g1(1e7));
  CHECK(g1(1e7) < g1(1e6));
  CHECK(g1(1e6, 2e5) > g1(1e6, 1e5));
  const double prefactor =
      std::sqrt(2.8 * std::log(6.0 * std::sqrt(2.8) * 0.5 * 1.01 * 1.01 / 0.05 + kE));
  CHECK(g1(257) == doctest::Approx(prefactor).epsilon(1e-6));
  CHECK(g1(1e12) == 0.0);
  CHECK_THROWS_AS(g1(256), DomainError);
  CHECK_THROWS_AS(gamma_1(0.0, 1.0, 0.5, 0.01, kE, 10, 2), DomainError);
}

TEST_CASE("interval upper endpoint") {
  const double budgets[4] = {1e6, 1e7, 1e8, 1e9};
  const double rounded[4] = {1.38e-5, 1.61e-6, 1.84e-7, 2.07e-8};
  for (int i = 0; i < 4; ++i) {
    const auto iv = gamma_interval(256, budgets[i], 0.5, 0.01, kE, 0.05, 102000);
    CHECK(iv.hi == std::log(budgets[i]) / budgets[i]);
    CHECK(iv.hi == doctest::Approx(rounded[i]).epsilon(5e-3));
    CHECK(iv.lo >= 0.0);
  }
  CHECK(gamma_interval(256, 1e6, 0.5, 0.01, kE, 0.05, 102000).empty());
  CHECK_FALSE(gamma_interval(256, 1e9, 0.5, 0.01, kE, 0.05, 102000).empty());
  // 1/L is the binding term for small budgets.
  CHECK(gamma_interval(4, 5, 0.5, 0.01, kE, 0.5, 12).hi == 0.25);
}

TEST_CASE("failure bound") {
  CHECK(bobw_failure_bound(1e-6, 0.01, 64) ==
        doctest::Approx(oracle::kFailureBound).epsilon(1e-12));
  CHECK(bobw_failure_bound(oracle::kGammaForTenth, 0.01, 2) == doctest::Approx(0.1).epsilon(1e-12));
  double prev = 0.0;
  for (double g = 1e-12; g < 1.0; g *= 10) {
    const double b = bobw_failure_bound(g, 0.01, 8);
    CHECK(b > prev);
    prev = b;
  }
  CHECK(bobw_failure_bound(1e-300, 0.5, 8) < 1e-250);
}

TEST_CASE("sample-size condition") {
  const std::vector<double> gaps(63, 0.1);
  CHECK_FALSE(bobw_feasible(64, 0.5, 0.01, kE, 0.1, gaps));
  CHECK(bobw_feasible(1e9, 0.5, 0.01, kE, 0.1, gaps));
  CHECK(bobw_feasible(1e7, 0.5, 0.01, kE, 0.1, gaps) >= bobw_feasible(1e6, 0.5, 0.01, kE, 0.1, gaps));
}

TEST_CASE("explicit regret bound") {
  CHECK(bobw_regret_bound_explicit(1e5, 2, 0.5, 0.01, kE, 1e-3, {0.1}) ==
        doctest::Approx(oracle::kRegretBound).epsilon(1e-12));
  const double third = 1e5 * bobw_failure_bound(1e-3, 0.01, 1);
  CHECK(bobw_regret_bound_explicit(1e5, 1, 0.5, 0.01, kE, 1e-3, {}) == doctest::Approx(third));
  CHECK_THROWS_AS(bobw_regret_bound_explicit(1e5, 2, 0.5, 0.01, kE, 1e-3, {0.0}), DomainError);
  CHECK_THROWS_AS(bobw_regret_bound_explicit(1e5, 2, 0.5, 0.01, kE, 1.0, {0.1}), DomainError);

  // Middle term: strictly decreasing in gamma.
  auto middle = [](double gamma) {
    return bobw_regret_bound_explicit(0.0, 2, 0.5, 0.01, kE, gamma, {0.1}) - 0.2;
  };
  CHECK(middle(1e-6) > middle(1e-4));
  CHECK(middle(1e-4) > middle(1e-2));
  // Doubling the gaps roughly halves the middle term.
  auto mid_gap = [](double gap) {
    return bobw_regret_bound_explicit(0.0, 2, 0.5, 0.01, kE, 1e-3, {gap}) - 2 * gap;
  };
  CHECK(mid_gap(0.2) / mid_gap(0.1) == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("iterated-log inversion") {
  CHECK(iterated_log_inversion(100, 1.01, 0.1, kE) ==
        doctest::Approx(oracle::kInversion).epsilon(1e-12));
  CHECK(iterated_log_inversion(100, 1.01, 0.01, kE) > iterated_log_inversion(100, 1.01, 0.1, kE));
  CHECK_THROWS_AS(iterated_log_inversion(0.1, 0.1, 1.0, 0.0), DomainError);
}

TEST_CASE("inversion dominates every solution of the implicit inequality") {
  RngStream rng(99, 0);
  int checked = 0;
  while (checked < 200) {
    const double c = 1.0 + 200.0 * rng.uniform();
    const double a = 0.1 + 3.0 * rng.uniform();
    const double rho = 0.01 + 0.6 * rng.uniform();
    const double b = 3.0 * rng.uniform();
    if (kInversionFactor * a * c / rho + b < kE) continue;
    const double bound = iterated_log_inversion(c, a, rho, b);
    // Scan tau on a geometric grid well past the bound.
    for (double tau = 1e-3; tau < 50.0 * bound; tau *= 1.01) {
      const double inner = std::log(a * tau + b) / rho;
      if (inner <= 1.0) continue;
      if (tau <= c * std::log(inner)) REQUIRE(tau <= bound);
    }
    ++checked;
  }
}

TEST_CASE("baseline bounds") {
  BoundInputs in;
  in.T = 100;
  in.h2 = 1000;
  in.L = 10;
  CHECK(baseline_bound(BoundKind::CarpentierLower, in).value ==
        doctest::Approx(oracle::kCarpentier).epsilon(1e-12));

  BoundInputs u;
  u.alpha = 13;
  u.L = 2;
  u.T = 1e4;
  const auto ucbe = baseline_bound(BoundKind::UcbEFailure, u);
  CHECK(ucbe.value == doctest::Approx(oracle::kUcbEFailure).epsilon(1e-12));
  CHECK(ucbe.vacuous);

  BoundInputs s;
  s.L = 8;
  s.T = 0;
  s.h2 = 50;
  CHECK(baseline_bound(BoundKind::ShFailure, s).value == doctest::Approx(9.0));
  s.T = 1e5;
  CHECK(baseline_bound(BoundKind::ShFailure, s).value ==
        doctest::Approx(9.0 * std::exp(-1e5 / (8.0 * 50 * 3))));
}

TEST_CASE("side conditions are reported, not thrown") {
  BoundInputs in;
  in.T = 1000;
  in.L = 2;
  in.alpha = 3;
  in.h2 = 1e6;
  in.gaps = {0.001};
  const auto v = baseline_bound(BoundKind::UcbERegret, in);
  CHECK_FALSE(v.condition_ok);
  CHECK(v.value > 0.0);

  BoundInputs e;
  e.T = 1000;
  e.L = 4;
  e.gamma = 0.1;
  e.eta = 0.5;
  e.delta = 0.1;
  CHECK_FALSE(baseline_bound(BoundKind::Exp3PRegret, e).condition_ok);
  e.eta = 0.01;
  CHECK(baseline_bound(BoundKind::Exp3PRegret, e).condition_ok);

  BoundInputs a;
  a.T = 5;
  a.L = 2;
  a.min_gap_lower = 0.1;
  CHECK_FALSE(baseline_bound(BoundKind::AdvBaiLower, a).condition_ok);
  a.T = 10;
  CHECK(baseline_bound(BoundKind::AdvBaiLower, a).value ==
        doctest::Approx(2.0 / 65.0 * std::exp(-150.0 * 10 * 0.01 / 2)));
}

TEST_CASE("bound kind names round trip") {
  for (auto k : all_bound_kinds()) CHECK(bound_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(bound_kind_from_string("nope"), ParseError);
}

TEST_CASE("Pareto lower bounds") {
  BoundInputs in;
  in.phi = 10;
  in.L = 11;
  in.reward_range = 1;
  in.min_gap_lower = 0.1;
  CHECK(pareto_lower_bound(ParetoKind::Bounded1, in) == doctest::Approx(125.0).epsilon(1e-12));

  in.h2_upper = (in.L - 1) / (in.min_gap_lower * in.min_gap_lower);
  CHECK(pareto_lower_bound(ParetoKind::Bounded2, in) ==
        doctest::Approx(pareto_lower_bound(ParetoKind::Bounded1, in)).epsilon(1e-12));

  // With V = R^2/4 the variance form is R times the bounded form.
  for (double range : {0.5, 1.0, 2.0}) {
    in.reward_range = range;
    in.variance_bound = range * range / 4.0;
    CHECK(pareto_lower_bound(ParetoKind::Variance1, in) /
              pareto_lower_bound(ParetoKind::Bounded1, in) ==
          doctest::Approx(range).epsilon(1e-12));
  }
  in.variance_bound = 0.3;
  CHECK(pareto_lower_bound(ParetoKind::Variance2, in) ==
        doctest::Approx(10 * 0.1 * in.h2_upper * 0.3 / 2).epsilon(1e-12));
  in.phi = 0;
  CHECK_THROWS_AS(pareto_lower_bound(ParetoKind::Bounded1, in), DomainError);
}

}  // TEST_SUITE
