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
#include <map>
#include <string>
#include <string_view>

#include "bobw/instance.hpp"

namespace bobw {

/// Inline instance descriptions such as "bern:L=64,delta=0.1".
struct Shorthand {
  std::string kind;
  std::map<std::string, std::string> fields;

  /// Throws ParseError naming the key when it is missing or malformed.
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  std::int64_t integer(const std::string& key) const;
  std::int64_t integer_or(const std::string& key, std::int64_t fallback) const;
};

/// Splits "kind:k1=v1,k2=v2". Throws ParseError on a malformed body.
Shorthand parse_shorthand(std::string_view text);

/// Real number with "e" accepted for Euler's number.
double parse_real(std::string_view text, std::string_view what);
/// Integer; accepts exact real spellings such as "1e6".
std::int64_t parse_integer(std::string_view text, std::string_view what);

/// True when `text` looks like an inline shorthand rather than a file path.
bool is_shorthand(std::string_view text);

/// "bern:L=..,delta=..[,top=..]" builds bernoulli_two_level.
StochasticInstance stochastic_from_shorthand(const std::string& text);

}  // namespace bobw
