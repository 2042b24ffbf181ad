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

#include <filesystem>
#include <string>

#include "bobw/instance.hpp"

namespace bobw {

// Instance document (JSON):
//
//   {
//     "label": "bern:L=64,delta=0.1",
//     "family": "bernoulli" | "gaussian" | "log_gaussian" | [per-arm names],
//     "means": [...],                 // success probability for bernoulli arms,
//                                     // log means for log_gaussian arms
//     "variances": [...],             // optional, Gaussian arms only (default 1)
//     "sub_gaussian_scale": 0.5,      // optional, default_scale() when absent
//     "arm_labels": ["...", ...],     // optional
//     "amplitudes": [...]             // optional, Bernoulli payoff on success (default 1)
//   }
//
// Export always writes the scale so a reload is value-identical.

std::string instance_to_json(const StochasticInstance& instance);
StochasticInstance instance_from_json(const std::string& text);

void save_instance(const StochasticInstance& instance, const std::filesystem::path& path);
StochasticInstance load_instance(const std::filesystem::path& path);

}  // namespace bobw
