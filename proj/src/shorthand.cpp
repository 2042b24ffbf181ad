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

#include "bobw/shorthand.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "bobw/errors.hpp"

namespace bobw {

double parse_real(std::string_view text, std::string_view what) {
  if (text == "e") return std::numbers::e;
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw ParseError(std::string(what) + ": cannot parse '" + std::string(text) + "' as a number",
                     -1);
  return value;
}

std::int64_t parse_integer(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec == std::errc{} && ptr == end && !text.empty()) return value;
  double real = 0.0;
  auto [rptr, rec] = std::from_chars(text.data(), end, real);
  if (rec == std::errc{} && rptr == end && !text.empty() && std::isfinite(real) &&
      real == std::floor(real) && std::fabs(real) < 9.0e18)
    return static_cast<std::int64_t>(real);
  throw ParseError(std::string(what) + ": cannot parse '" + std::string(text) + "' as an integer",
                   -1);
}

bool is_shorthand(std::string_view text) {
  return text.starts_with("bern:") || text.starts_with("advclip:");
}

Shorthand parse_shorthand(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0)
    throw ParseError("instance shorthand '" + std::string(text) + "' has no 'kind:' prefix", -1);
  Shorthand out;
  out.kind = std::string(text.substr(0, colon));
  std::string_view body = text.substr(colon + 1);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw ParseError("instance shorthand: expected key=value, got '" + std::string(item) + "'",
                       -1);
    out.fields[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

double Shorthand::number(const std::string& key) const {
  const auto it = fields.find(key);
  if (it == fields.end()) throw ParseError(kind + " shorthand: missing '" + key + "'", -1);
  return parse_real(it->second, kind + " shorthand '" + key + "'");
}

double Shorthand::number_or(const std::string& key, double fallback) const {
  return fields.contains(key) ? number(key) : fallback;
}

std::int64_t Shorthand::integer(const std::string& key) const {
  const auto it = fields.find(key);
  if (it == fields.end()) throw ParseError(kind + " shorthand: missing '" + key + "'", -1);
  return parse_integer(it->second, kind + " shorthand '" + key + "'");
}

std::int64_t Shorthand::integer_or(const std::string& key, std::int64_t fallback) const {
  return fields.contains(key) ? integer(key) : fallback;
}

StochasticInstance stochastic_from_shorthand(const std::string& text) {
  const Shorthand sh = parse_shorthand(text);
  if (sh.kind != "bern")
    throw ParseError("unknown stochastic instance shorthand '" + sh.kind + "'", -1);
  return bernoulli_two_level(sh.integer("L"), sh.number("delta"), sh.number_or("top", 0.5));
}

}  // namespace bobw
