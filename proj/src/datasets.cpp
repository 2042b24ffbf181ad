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

#include "bobw/datasets.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <string_view>

#include "bobw/csv_io.hpp"
#include "bobw/errors.hpp"
#include "bobw/format.hpp"

namespace bobw {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

template <class T>
T parse_field(std::string_view text, const char* what, long line) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw ParseError(std::string("bad ") + what + " '" + std::string(text) + "'", line);
  return value;
}

}  // namespace

LoadedInstance load_movielens(const std::filesystem::path& path, std::int64_t min_ratings,
                              double variance) {
  if (min_ratings < 1) throw DomainError("min_ratings must be at least 1");
  std::ifstream in = open_input(path);
  std::string line;
  long line_no = 1;
  if (!std::getline(in, line)) throw ParseError("empty ratings file", 1);
  if (split_csv_line(line) != std::vector<std::string>{"userId", "movieId", "rating", "timestamp"})
    throw ParseError("expected header userId,movieId,rating,timestamp", 1);

  struct Tally {
    double sum = 0.0;
    std::int64_t count = 0;
  };
  std::map<std::int64_t, Tally> movies;
  LoadReport report;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    // Fast path for the four numeric columns.
    std::string_view rest(line);
    std::string_view cols[4];
    for (int c = 0; c < 4; ++c) {
      const auto comma = rest.find(',');
      if ((comma == std::string_view::npos) != (c == 3))
        throw ParseError("expected 4 columns", line_no);
      cols[c] = rest.substr(0, comma);
      if (c < 3) rest.remove_prefix(comma + 1);
    }
    const auto movie = parse_field<std::int64_t>(cols[1], "movieId", line_no);
    const auto rating = parse_field<double>(cols[2], "rating", line_no);
    if (!std::isfinite(rating)) throw ParseError("rating is not finite", line_no);
    auto& tally = movies[movie];
    tally.sum += rating;
    ++tally.count;
    ++report.rows;
  }

  std::vector<ArmModel> arms;
  for (const auto& [movie, tally] : movies) {
    if (tally.count < min_ratings) {
      ++report.dropped;
      continue;
    }
    arms.push_back(ArmModel::gaussian(tally.sum / static_cast<double>(tally.count), variance,
                                      "movie:" + std::to_string(movie)));
  }
  if (arms.empty())
    throw EmptySelection("no movie has at least " + std::to_string(min_ratings) + " ratings");
  StochasticInstance instance(std::move(arms), std::nullopt,
                              "movielens:min_ratings=" + std::to_string(min_ratings));
  (void)gap_profile(instance);
  return {std::move(instance), report};
}

LoadedInstance load_pkis2(const std::filesystem::path& path, const std::string& kinase,
                          double raw_scale) {
  if (!(raw_scale > 0.0)) throw DomainError("raw_scale must be positive");
  std::ifstream in = open_input(path);
  std::string line;
  long line_no = 1;
  if (!std::getline(in, line)) throw ParseError("empty inhibition table", 1);
  const auto header = split_csv_line(line);
  std::size_t column = 0;
  for (std::size_t c = 1; c < header.size(); ++c)
    if (header[c] == kinase) column = c;
  if (column == 0) throw UnknownKinase("kinase '" + kinase + "' is not a column of " + path.string());

  LoadReport report;
  std::vector<ArmModel> arms;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw ParseError("expected " + std::to_string(header.size()) + " columns, got " +
                           std::to_string(fields.size()),
                       line_no);
    ++report.rows;
    const std::string& cell = fields[column];
    if (cell.find_first_not_of(" ") == std::string::npos) {
      ++report.missing;
      continue;
    }
    const double raw = parse_field<double>(cell, "inhibition value", line_no);
    const double percent_control = 1.0 - raw / raw_scale;
    if (!(percent_control > 0.0)) {
      ++report.dropped;
      continue;
    }
    arms.push_back(ArmModel::log_domain_gaussian(std::log(percent_control), fields[0]));
  }
  if (arms.empty())
    throw EmptySelection("no inhibitor has a usable value for kinase '" + kinase + "'");
  StochasticInstance instance(std::move(arms), std::nullopt, "pkis2:" + kinase);
  (void)gap_profile(instance);
  return {std::move(instance), report};
}

}  // namespace bobw
