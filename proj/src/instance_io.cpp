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

#include "bobw/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bobw/errors.hpp"

namespace bobw {

using nlohmann::json;

std::string instance_to_json(const StochasticInstance& instance) {
  json doc;
  doc["label"] = instance.label();

  bool mixed = false;
  bool any_gaussian = false;
  bool any_label = false;
  bool any_amplitude = false;
  const Family first = instance.arm(0).family;
  json families = json::array();
  json means = json::array();
  json variances = json::array();
  json labels = json::array();
  json amplitudes = json::array();
  for (const auto& arm : instance.arms()) {
    mixed = mixed || arm.family != first;
    any_gaussian = any_gaussian || arm.family == Family::Gaussian;
    any_label = any_label || !arm.label.empty();
    families.push_back(to_string(arm.family));
    means.push_back(arm.location);
    variances.push_back(arm.family == Family::Gaussian ? arm.variance : 0.0);
    labels.push_back(arm.label);
    const double amplitude = arm.family == Family::Bernoulli ? arm.amplitude : 1.0;
    any_amplitude = any_amplitude || amplitude != 1.0;
    amplitudes.push_back(amplitude);
  }
  doc["family"] = mixed ? families : json(to_string(first));
  doc["means"] = means;
  if (any_gaussian) doc["variances"] = variances;
  doc["sub_gaussian_scale"] = instance.sub_gaussian_scale();
  if (any_label) doc["arm_labels"] = labels;
  if (any_amplitude) doc["amplitudes"] = amplitudes;
  return doc.dump(2) + "\n";
}

StochasticInstance instance_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance file: ") + e.what(), -1);
  }
  try {
    const auto& means = doc.at("means");
    if (!means.is_array() || means.empty())
      throw ParseError("instance file: 'means' must be a non-empty array", -1);
    const std::size_t n = means.size();

    std::vector<Family> families(n);
    const auto& family = doc.at("family");
    if (family.is_string()) {
      std::fill(families.begin(), families.end(),
                family_from_string(family.get<std::string>()));
    } else if (family.is_array() && family.size() == n) {
      for (std::size_t i = 0; i < n; ++i)
        families[i] = family_from_string(family[i].get<std::string>());
    } else {
      throw ParseError("instance file: 'family' must be a name or one name per arm", -1);
    }

    const json* variances = doc.contains("variances") ? &doc["variances"] : nullptr;
    if (variances && (!variances->is_array() || variances->size() != n))
      throw ParseError("instance file: 'variances' must have one entry per arm", -1);
    const json* labels = doc.contains("arm_labels") ? &doc["arm_labels"] : nullptr;
    if (labels && (!labels->is_array() || labels->size() != n))
      throw ParseError("instance file: 'arm_labels' must have one entry per arm", -1);

    const json* amplitudes = doc.contains("amplitudes") ? &doc["amplitudes"] : nullptr;
    if (amplitudes && (!amplitudes->is_array() || amplitudes->size() != n))
      throw ParseError("instance file: 'amplitudes' must have one entry per arm", -1);

    std::vector<ArmModel> arms;
    arms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double mean = means[i].get<double>();
      std::string label = labels ? (*labels)[i].get<std::string>() : std::string{};
      switch (families[i]) {
        case Family::Bernoulli:
          arms.push_back(ArmModel::bernoulli(
              mean, std::move(label), amplitudes ? (*amplitudes)[i].get<double>() : 1.0));
          break;
        case Family::Gaussian:
          arms.push_back(ArmModel::gaussian(
              mean, variances ? (*variances)[i].get<double>() : 1.0, std::move(label)));
          break;
        case Family::LogDomainGaussian:
          arms.push_back(ArmModel::log_domain_gaussian(mean, std::move(label)));
          break;
      }
    }
    std::optional<double> scale;
    if (doc.contains("sub_gaussian_scale")) scale = doc["sub_gaussian_scale"].get<double>();
    return StochasticInstance(std::move(arms), scale, doc.value("label", std::string{}));
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance file: ") + e.what(), -1);
  }
}

void save_instance(const StochasticInstance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << instance_to_json(instance);
  if (!out) throw IoError("write failed for " + path.string());
}

StochasticInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(buffer.str());
}

}  // namespace bobw
