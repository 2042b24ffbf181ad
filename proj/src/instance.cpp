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

#include "bobw/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bobw/errors.hpp"
#include "bobw/format.hpp"

namespace bobw {

const char* to_string(Family family) {
  switch (family) {
    case Family::Bernoulli: return "bernoulli";
    case Family::Gaussian: return "gaussian";
    case Family::LogDomainGaussian: return "log_gaussian";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  if (name == "bernoulli") return Family::Bernoulli;
  if (name == "gaussian") return Family::Gaussian;
  if (name == "log_gaussian") return Family::LogDomainGaussian;
  throw DomainError("unknown reward family '" + name + "'");
}

ArmModel ArmModel::bernoulli(double p, std::string label, double amplitude) {
  return {Family::Bernoulli, p, amplitude * amplitude * p * (1.0 - p), std::move(label), amplitude};
}

ArmModel ArmModel::gaussian(double mean, double variance, std::string label) {
  return {Family::Gaussian, mean, variance, std::move(label)};
}

ArmModel ArmModel::log_domain_gaussian(double log_mean, std::string label) {
  return {Family::LogDomainGaussian, log_mean, 1.0, std::move(label)};
}

double ArmModel::natural_scale() const {
  switch (family) {
    case Family::Bernoulli: return 0.5 * amplitude;  // any variable bounded in [0, amplitude]
    case Family::Gaussian: return std::sqrt(variance);
    case Family::LogDomainGaussian: return 1.0;
  }
  return 0.0;
}

double default_scale(const std::vector<ArmModel>& arms) {
  double scale = 0.0;
  for (const auto& arm : arms) scale = std::max(scale, arm.natural_scale());
  return scale;
}

namespace {

void validate_arm(const ArmModel& arm, std::size_t index) {
  const std::string where = "arm " + std::to_string(index) + ": ";
  if (!std::isfinite(arm.location)) throw DomainError(where + "mean is not finite");
  switch (arm.family) {
    case Family::Bernoulli:
      if (arm.location < 0.0 || arm.location > 1.0)
        throw DomainError(where + "Bernoulli parameter outside [0,1]");
      if (!(arm.amplitude > 0.0) || !std::isfinite(arm.amplitude))
        throw DomainError(where + "Bernoulli amplitude must be positive and finite");
      break;
    case Family::Gaussian:
      if (!(arm.variance >= 0.0) || !std::isfinite(arm.variance))
        throw DomainError(where + "Gaussian variance must be finite and >= 0");
      break;
    case Family::LogDomainGaussian:
      break;
  }
}

}  // namespace

StochasticInstance::StochasticInstance(std::vector<ArmModel> arms,
                                       std::optional<double> scale,
                                       std::string label)
    : arms_(std::move(arms)), label_(std::move(label)) {
  if (arms_.empty()) throw DomainError("an instance needs at least one arm");
  means_.resize(static_cast<Eigen::Index>(arms_.size()));
  for (std::size_t i = 0; i < arms_.size(); ++i) {
    validate_arm(arms_[i], i);
    means_[static_cast<Eigen::Index>(i)] = arms_[i].mean();
  }
  scale_ = scale ? *scale : default_scale(arms_);
  if (!(scale_ > 0.0) || !std::isfinite(scale_))
    throw DomainError("sub-Gaussian scale must be positive and finite");
}

StochasticInstance bernoulli_two_level(Eigen::Index arms, double gap, double top) {
  if (arms < 1) throw DomainError("bernoulli_two_level: need at least one arm");
  std::vector<ArmModel> models;
  models.reserve(static_cast<std::size_t>(arms));
  models.push_back(ArmModel::bernoulli(top));
  for (Eigen::Index i = 1; i < arms; ++i) models.push_back(ArmModel::bernoulli(top - gap));
  std::string label = "bern:L=" + std::to_string(arms) + ",delta=" + format_double(gap);
  if (top != 0.5) label += ",top=" + format_double(top);
  return StochasticInstance(std::move(models), std::nullopt, std::move(label));
}

double sample_reward(const StochasticInstance& instance, Eigen::Index arm,
                     RngStream& rng) {
  if (arm < 0 || arm >= instance.size())
    throw DomainError("arm index " + std::to_string(arm) + " out of range");
  const ArmModel& model = instance.arm(arm);
  switch (model.family) {
    case Family::Bernoulli:
      return rng.bernoulli(model.location) ? model.amplitude : 0.0;
    case Family::Gaussian:
      if (model.variance == 0.0) return model.location;
      return rng.normal(model.location, std::sqrt(model.variance));
    case Family::LogDomainGaussian:
      return rng.normal(model.location, 1.0);
  }
  return 0.0;
}

GapProfile gap_profile(const Eigen::VectorXd& means) {
  if (means.size() == 0) throw DomainError("gap_profile: empty instance");
  GapProfile profile;
  const double best = means.maxCoeff(&profile.optimal_arm);
  if ((means.array() == best).count() > 1)
    throw NonUniqueOptimum("the largest mean " + std::to_string(best) +
                           " is attained by more than one arm");
  profile.gaps = best - means.array();
  profile.gaps[profile.optimal_arm] = 0.0;
  profile.min_gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < profile.gaps.size(); ++i) {
    if (i == profile.optimal_arm) continue;
    profile.min_gap = std::min(profile.min_gap, profile.gaps[i]);
  }
  profile.exceeds_unit_gap = profile.gaps.maxCoeff() > 1.0;
  return profile;
}

GapProfile gap_profile(const StochasticInstance& instance) {
  return gap_profile(instance.means());
}

Hardness hardness(const GapProfile& profile, std::optional<double> p) {
  Hardness h;
  for (Eigen::Index i = 0; i < profile.size(); ++i) {
    if (i == profile.optimal_arm) continue;
    const double gap = profile.gaps[i];
    h.h1 += 1.0 / gap;
    h.h2 += 1.0 / (gap * gap);
  }
  if (p) {
    if (!(*p > 0.0)) throw DomainError("hardness: p must be positive");
    std::vector<double> sorted(profile.gaps.begin(), profile.gaps.end());
    std::sort(sorted.begin(), sorted.end());  // sorted[0] is the optimum
    double hp = 0.0;
    for (std::size_t r = 1; r < sorted.size(); ++r) {
      const double rank = static_cast<double>(r + 1);
      hp = std::max(hp, std::pow(rank, *p) / (sorted[r] * sorted[r]));
    }
    double cp = std::pow(2.0, -*p);
    for (std::size_t r = 2; r <= sorted.size(); ++r)
      cp += std::pow(static_cast<double>(r), -*p);
    h.hp_prime = hp;
    h.cp = cp;
  }
  return h;
}

}  // namespace bobw
