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
#include <vector>

#include "bobw/rng.hpp"
#include "oracles.hpp"

using bobw::RngStream;

TEST_SUITE("rng") {

TEST_CASE("matches an independent port of the generator") {
  RngStream a(42, 0);
  for (auto expected : oracle::kStream42_0) CHECK(a.next_u64() == expected);

  RngStream child = RngStream(42, 0).child(3);
  for (auto expected : oracle::kStream42_0_child3) CHECK(child.next_u64() == expected);

  RngStream c(7, 5);
  CHECK(c.uniform() == oracle::kStream7_5_uniform[0]);
  CHECK(c.uniform() == oracle::kStream7_5_uniform[1]);
}

TEST_CASE("children depend only on seed, stream and index") {
  RngStream used(9, 4);
  for (int i = 0; i < 17; ++i) used.next_u64();
  RngStream fresh(9, 4);
  RngStream x = used.child(2);
  RngStream y = fresh.child(2);
  for (int i = 0; i < 8; ++i) CHECK(x.next_u64() == y.next_u64());

  RngStream p = fresh.child(1);
  RngStream q = fresh.child(2);
  CHECK(p.next_u64() != q.next_u64());
}

TEST_CASE("distinct streams give distinct sequences") {
  RngStream a(1, 0);
  RngStream b(1, 1);
  RngStream c(2, 0);
  const auto va = a.next_u64();
  CHECK(va != b.next_u64());
  CHECK(va != c.next_u64());
}

TEST_CASE("uniform draws lie in [0,1) and have the right mean") {
  RngStream rng(3, 0);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("bounded integers are in range and roughly uniform") {
  RngStream rng(4, 0);
  std::vector<int> counts(7, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) {
    const auto k = rng.uniform_index(7);
    REQUIRE(k < 7);
    ++counts[k];
  }
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - n / 7.0) * (c - n / 7.0) / (n / 7.0);
  CHECK(chi2 < 22.46);  // 0.999 quantile, 6 degrees of freedom
  CHECK(rng.uniform_index(1) == 0);
}

TEST_CASE("normal draws have the requested moments") {
  RngStream rng(5, 0);
  const int n = 200000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal(1.5, 2.0);
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  CHECK(mean == doctest::Approx(1.5).epsilon(0.01));
  CHECK(sq / n - mean * mean == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("bernoulli edge probabilities") {
  RngStream rng(6, 0);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(rng.bernoulli(0.0));
    CHECK(rng.bernoulli(1.0));
  }
}

}  // TEST_SUITE
