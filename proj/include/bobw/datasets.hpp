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

#include <cstdint>
#include <filesystem>
#include <string>

#include "bobw/instance.hpp"

namespace bobw {

struct LoadReport {
  std::int64_t rows = 0;
  // ML: movies below the rating threshold. PKIS2: entries with percent
  // control <= 0, whose logarithm is undefined.
  std::int64_t dropped = 0;
  // PKIS2 only: inhibitors with an empty cell for the kinase.
  std::int64_t missing = 0;
};

struct LoadedInstance {
  StochasticInstance instance;
  LoadReport report;
};

/// Ratings CSV with header userId,movieId,rating,timestamp. Movies with at
/// least `min_ratings` ratings become Gaussian arms with their mean rating
/// and the given variance, ordered by movie id.
///
/// Throws IoError, ParseError (with line number), EmptySelection when no
/// movie qualifies, and NonUniqueOptimum.
LoadedInstance load_movielens(const std::filesystem::path& path, std::int64_t min_ratings,
                              double variance = 1.0);

/// Inhibition table CSV: a header of kinase names after one leading column,
/// then one row per inhibitor with numeric cells on [0, raw_scale]. Each
/// inhibitor with a value for `kinase` becomes a LogDomainGaussian arm
/// centred at log(1 - raw / raw_scale).
///
/// Throws IoError, ParseError, UnknownKinase, EmptySelection and
/// NonUniqueOptimum.
LoadedInstance load_pkis2(const std::filesystem::path& path, const std::string& kinase,
                          double raw_scale = 100.0);

}  // namespace bobw
