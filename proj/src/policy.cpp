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

#include "bobw/policy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "bobw/errors.hpp"

namespace bobw {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

std::int64_t ceil_log2(Eigen::Index n) {
  std::int64_t r = 0;
  while ((Eigen::Index{1} << r) < n) ++r;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parameters

std::string algorithm_name(const PolicyParams& params) {
  return std::visit(Overloaded{
                        [](const BobwParams&) { return "bobw"; },
                        [](const UcbEParams&) { return "ucbe"; },
                        [](const SequentialHalvingParams&) { return "sh"; },
                        [](const Exp3PParams&) { return "exp3p"; },
                        [](const UniformPullParams&) { return "upadv"; },
                        [](const UcbAlphaParams&) { return "ucbalpha"; },
                    },
                    params);
}

std::vector<std::string> validate(const PolicyParams& params) {
  std::vector<std::string> warnings;
  std::visit(
      Overloaded{
          [&](const BobwParams& p) {
            require(p.sigma > 0.0, "bobw: sigma must be positive");
            require(p.eps > 0.0 && p.eps < 1.0, "bobw: eps must lie in (0,1)");
            require(p.beta >= 0.0, "bobw: beta must be >= 0");
            require(p.gamma > 0.0 && p.gamma < 1.0, "bobw: gamma must lie in (0,1)");
            require(std::log(p.beta + 1.0 + p.eps) / p.gamma > 1.0,
                    "bobw: log(beta + 1 + eps) / gamma must exceed 1 for the "
                    "radius to be defined after one pull");
            const double limit =
                std::min(std::log(p.beta + 1.0 + p.eps) / std::numbers::e, 1.0);
            if (p.gamma >= limit)
              warnings.push_back("bobw: gamma = " + std::to_string(p.gamma) +
                                 " is not below min{log(beta+1+eps)/e, 1} = " +
                                 std::to_string(limit) +
                                 "; the regret and failure guarantees do not apply");
          },
          [](const UcbEParams& p) { require(p.a > 0.0, "ucbe: a must be positive"); },
          [](const SequentialHalvingParams&) {},
          [](const Exp3PParams& p) {
            require(p.gamma >= 0.0 && p.gamma <= 1.0, "exp3p: gamma must lie in [0,1]");
            require(p.eta > 0.0, "exp3p: eta must be positive");
          },
          [](const UniformPullParams&) {},
          [](const UcbAlphaParams& p) {
            require(p.alpha > 0.0, "ucbalpha: alpha must be positive");
            require(p.delta > 0.0 && p.delta < 1.0, "ucbalpha: delta must lie in (0,1)");
          },
      },
      params);
  return warnings;
}

std::string params_to_json(const PolicyParams& params) {
  nlohmann::json doc = std::visit(
      Overloaded{
          [](const BobwParams& p) {
            return nlohmann::json{{"sigma", p.sigma}, {"eps", p.eps},
                                  {"beta", p.beta}, {"gamma", p.gamma}};
          },
          [](const UcbEParams& p) { return nlohmann::json{{"a", p.a}}; },
          [](const SequentialHalvingParams&) { return nlohmann::json::object(); },
          [](const Exp3PParams& p) {
            return nlohmann::json{{"gamma", p.gamma}, {"eta", p.eta}};
          },
          [](const UniformPullParams&) { return nlohmann::json::object(); },
          [](const UcbAlphaParams& p) {
            return nlohmann::json{{"alpha", p.alpha}, {"delta", p.delta}};
          },
      },
      params);
  doc["algorithm"] = algorithm_name(params);
  return doc.dump();
}

PolicyParams params_from_json(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto name = doc.at("algorithm").get<std::string>();
    if (name == "bobw") {
      BobwParams p;
      p.sigma = doc.value("sigma", p.sigma);
      p.eps = doc.value("eps", p.eps);
      p.beta = doc.value("beta", p.beta);
      p.gamma = doc.at("gamma").get<double>();
      return p;
    }
    if (name == "ucbe") return UcbEParams{doc.at("a").get<double>()};
    if (name == "sh") return SequentialHalvingParams{};
    if (name == "exp3p")
      return Exp3PParams{doc.at("gamma").get<double>(), doc.at("eta").get<double>()};
    if (name == "upadv") return UniformPullParams{};
    if (name == "ucbalpha")
      return UcbAlphaParams{doc.at("alpha").get<double>(), doc.at("delta").get<double>()};
    throw ParseError("unknown algorithm '" + name + "'", -1);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("policy parameters: ") + e.what(), -1);
  }
}

// ---------------------------------------------------------------------------
// Radius and helpers

double lil_radius(double n, double sigma, double eps, double beta, double gamma) {
  const double ratio = std::log(beta + (1.0 + eps) * n) / gamma;
  if (!(ratio > 1.0))
    throw DomainError("lil_radius: log(beta + (1+eps) n) / gamma = " +
                      std::to_string(ratio) + " must exceed 1");
  return 5.0 * sigma * (1.0 + std::sqrt(eps)) *
         std::sqrt(2.0 * (1.0 + eps) / n * std::log(ratio));
}

void ArmStats::record(Eigen::Index arm, double reward) {
  ++t;
  const auto n = ++pulls[arm];
  means[arm] += (reward - means[arm]) / static_cast<double>(n);
}

Eigen::Index argmax_random_tie(const Eigen::VectorXd& values, RngStream& rng) {
  const double* v = values.data();
  const Eigen::Index n = values.size();
  Eigen::Index best = 0;
  Eigen::Index ties = 1;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (v[i] > v[best]) {
      best = i;
      ties = 1;
    } else if (v[i] == v[best]) {
      ++ties;
    }
  }
  if (ties == 1) return best;
  auto pick = static_cast<Eigen::Index>(rng.uniform_index(static_cast<std::size_t>(ties)));
  const double top = v[best];
  for (Eigen::Index i = best; i < n; ++i) {
    if (v[i] == top && pick-- == 0) return i;
  }
  return best;
}

Eigen::Index argmax_lowest(const Eigen::VectorXd& values) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return best;
}

// ---------------------------------------------------------------------------
// BoBW-lil'UCB

BobwLilUcb::BobwLilUcb(const BobwParams& params, Eigen::Index arms)
    : params_(params),
      stats_(arms),
      radii_(Eigen::VectorXd::Constant(arms, std::numeric_limits<double>::quiet_NaN())),
      indices_(Eigen::VectorXd::Constant(arms, std::numeric_limits<double>::quiet_NaN())) {
  validate(params_);
}

Eigen::Index BobwLilUcb::select(RngStream& rng) {
  if (stats_.t < stats_.size()) return static_cast<Eigen::Index>(stats_.t);
  return argmax_random_tie(indices_, rng);
}

void BobwLilUcb::update(Eigen::Index arm, double reward) {
  stats_.record(arm, reward);
  radii_[arm] = lil_radius(static_cast<double>(stats_.pulls[arm]), params_.sigma,
                           params_.eps, params_.beta, params_.gamma);
  indices_[arm] = stats_.means[arm] + radii_[arm];
}

// ---------------------------------------------------------------------------
// UCB-E

UcbE::UcbE(const UcbEParams& params, Eigen::Index arms)
    : params_(params),
      stats_(arms),
      radii_(Eigen::VectorXd::Constant(arms, std::numeric_limits<double>::quiet_NaN())),
      indices_(Eigen::VectorXd::Constant(arms, std::numeric_limits<double>::quiet_NaN())) {
  validate(params_);
}

Eigen::Index UcbE::select(RngStream& rng) {
  if (stats_.t < stats_.size()) return static_cast<Eigen::Index>(stats_.t);
  return argmax_random_tie(indices_, rng);
}

void UcbE::update(Eigen::Index arm, double reward) {
  stats_.record(arm, reward);
  radii_[arm] = std::sqrt(params_.a / static_cast<double>(stats_.pulls[arm]));
  indices_[arm] = stats_.means[arm] + radii_[arm];
}

// ---------------------------------------------------------------------------
// Sequential Halving

SequentialHalving::SequentialHalving(Eigen::Index arms, std::int64_t budget)
    : stats_(arms), phase_sums_(Eigen::VectorXd::Zero(arms)) {
  if (arms < 1) throw DomainError("sh: need at least one arm");
  const std::int64_t rounds = ceil_log2(arms);
  Eigen::Index remaining = arms;
  for (std::int64_t r = 0; r < rounds; ++r) {
    const std::int64_t pulls = budget / (static_cast<std::int64_t>(remaining) * rounds);
    if (pulls == 0)
      throw BudgetTooSmall("sh: budget " + std::to_string(budget) +
                           " leaves 0 pulls per arm in a phase with " +
                           std::to_string(remaining) + " arms (need T >= L*ceil(log2 L) = " +
                           std::to_string(static_cast<std::int64_t>(arms) * rounds) + ")");
    schedule_.push_back({remaining, pulls});
    remaining = (remaining + 1) / 2;
  }
  survivors_.resize(static_cast<std::size_t>(arms));
  for (Eigen::Index i = 0; i < arms; ++i) survivors_[static_cast<std::size_t>(i)] = i;
}

std::int64_t SequentialHalving::scheduled_pulls() const {
  std::int64_t total = 0;
  for (const auto& phase : schedule_) total += phase.arms * phase.pulls_per_arm;
  return total;
}

Eigen::Index SequentialHalving::select(RngStream&) {
  if (finished()) return survivors_.front();
  const auto k = static_cast<std::int64_t>(survivors_.size());
  return survivors_[static_cast<std::size_t>(position_ % k)];
}

void SequentialHalving::update(Eigen::Index arm, double reward) {
  stats_.record(arm, reward);
  if (finished()) return;
  phase_sums_[arm] += reward;
  ++position_;
  const Phase& phase = schedule_[phase_];
  if (position_ == phase.arms * phase.pulls_per_arm) close_phase();
}

void SequentialHalving::close_phase() {
  // Every survivor got the same number of pulls, so ranking by phase sum is
  // ranking by within-phase mean.
  std::stable_sort(survivors_.begin(), survivors_.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return phase_sums_[a] > phase_sums_[b]; });
  survivors_.resize((survivors_.size() + 1) / 2);
  std::sort(survivors_.begin(), survivors_.end());
  phase_sums_.setZero();
  position_ = 0;
  ++phase_;
}

Eigen::Index SequentialHalving::recommend() const {
  if (!finished())
    throw Incomplete("sh: recommendation requested before the final phase (" +
                     std::to_string(phase_) + " of " + std::to_string(schedule_.size()) +
                     " phases done)");
  return survivors_.front();
}

// ---------------------------------------------------------------------------
// Exp3.P

Exp3P::Exp3P(const Exp3PParams& params, Eigen::Index arms)
    : params_(params),
      stats_(arms),
      gains_(Eigen::VectorXd::Zero(arms)),
      probabilities_(Eigen::VectorXd::Constant(arms, 1.0 / static_cast<double>(arms))),
      scratch_(arms) {
  validate(params_);
}

Eigen::Index Exp3P::select(RngStream& rng) {
  const double u = rng.uniform();
  double cumulative = 0.0;
  const Eigen::Index n = probabilities_.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    cumulative += probabilities_[i];
    if (u < cumulative) return i;
  }
  // Rounding left the total marginally below u; fall back to the last arm
  // with positive probability.
  for (Eigen::Index i = n - 1; i > 0; --i)
    if (probabilities_[i] > 0.0) return i;
  return 0;
}

void Exp3P::update(Eigen::Index arm, double reward) {
  stats_.record(arm, reward);
  gains_[arm] += reward / probabilities_[arm];
  refresh_probabilities();
}

void Exp3P::set_estimated_gains(const Eigen::VectorXd& gains) {
  gains_ = gains;
  refresh_probabilities();
}

void Exp3P::refresh_probabilities() {
  const double n = static_cast<double>(gains_.size());
  scratch_ = params_.eta * gains_;
  scratch_ = (scratch_.array() - scratch_.maxCoeff()).exp();
  const double total = scratch_.sum();
  probabilities_ = ((1.0 - params_.gamma) / total) * scratch_.array() + params_.gamma / n;
}

// ---------------------------------------------------------------------------
// UP-ADV

UniformPull::UniformPull(Eigen::Index arms)
    : stats_(arms), gains_(Eigen::VectorXd::Zero(arms)) {}

Eigen::Index UniformPull::select(RngStream& rng) {
  return static_cast<Eigen::Index>(rng.uniform_index(static_cast<std::size_t>(stats_.size())));
}

void UniformPull::update(Eigen::Index arm, double reward) {
  stats_.record(arm, reward);
  gains_[arm] += reward;
}

// ---------------------------------------------------------------------------
// UCB_alpha

UcbAlpha::UcbAlpha(const UcbAlphaParams& params, Eigen::Index arms)
    : params_(params),
      stats_(arms),
      inv_sqrt_pulls_(Eigen::VectorXd::Zero(arms)),
      scratch_(arms) {
  validate(params_);
}

Eigen::VectorXd UcbAlpha::indices() const {
  const double t = static_cast<double>(std::max<std::int64_t>(stats_.t, 1));
  const double width = std::sqrt(params_.alpha * std::log(t) / 2.0);
  return stats_.means + width * inv_sqrt_pulls_;
}

Eigen::Index UcbAlpha::select(RngStream& rng) {
  if (stopped_) throw Stopped("ucbalpha: the stopping rule already fired");
  if (stats_.t < stats_.size()) return static_cast<Eigen::Index>(stats_.t);
  const double width = std::sqrt(params_.alpha * std::log(static_cast<double>(stats_.t)) / 2.0);
  scratch_ = stats_.means + width * inv_sqrt_pulls_;
  return argmax_random_tie(scratch_, rng);
}

void UcbAlpha::update(Eigen::Index arm, double reward) {
  stats_.record(arm, reward);
  inv_sqrt_pulls_[arm] = 1.0 / std::sqrt(static_cast<double>(stats_.pulls[arm]));
  if (stats_.t >= stats_.size()) check_stopping();
}

void UcbAlpha::check_stopping() {
  const Eigen::Index arms = stats_.size();
  const double t = static_cast<double>(stats_.t);
  const double c = 2.0 * static_cast<double>(arms);
  const double width = std::sqrt(std::log(c * t * t / params_.delta) / 2.0);
  const Eigen::Index leader = argmax_lowest(stats_.means);
  const double lower = stats_.means[leader] - width * inv_sqrt_pulls_[leader];
  for (Eigen::Index j = 0; j < arms; ++j) {
    if (j == leader) continue;
    if (stats_.means[j] + width * inv_sqrt_pulls_[j] > lower) return;
  }
  stopped_ = true;
}

// ---------------------------------------------------------------------------
// Policy

Eigen::Index Policy::select_arm(RngStream& rng) {
  return std::visit([&](auto& p) { return p.select(rng); }, impl_);
}

void Policy::update(Eigen::Index arm, double reward) {
  std::visit([&](auto& p) { p.update(arm, reward); }, impl_);
}

Eigen::Index Policy::recommend() const {
  return std::visit([](const auto& p) { return p.recommend(); }, impl_);
}

bool Policy::has_stopped() const {
  return std::visit([](const auto& p) { return p.stopped(); }, impl_);
}

const ArmStats& Policy::stats() const {
  return std::visit([](const auto& p) -> const ArmStats& { return p.stats(); }, impl_);
}

Policy policy_init(const PolicyParams& params, Eigen::Index arms, std::int64_t horizon) {
  if (arms < 1) throw DomainError("policy_init: need at least one arm");
  return std::visit(
      Overloaded{
          [&](const BobwParams& p) { return Policy(BobwLilUcb(p, arms)); },
          [&](const UcbEParams& p) { return Policy(UcbE(p, arms)); },
          [&](const SequentialHalvingParams&) {
            return Policy(SequentialHalving(arms, horizon));
          },
          [&](const Exp3PParams& p) { return Policy(Exp3P(p, arms)); },
          [&](const UniformPullParams&) { return Policy(UniformPull(arms)); },
          [&](const UcbAlphaParams& p) { return Policy(UcbAlpha(p, arms)); },
      },
      params);
}

}  // namespace bobw
