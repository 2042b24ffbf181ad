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

// Reference values computed outside this code base (40-digit mpmath or an
// independent Python port of the generator) and frozen here.

#include <cstdint>

namespace oracle {

// xoshiro256** seeded through splitmix64, Python port.
inline constexpr std::uint64_t kStream42_0[3] = {0x0cee3ac9ad457c96ULL, 0x719a1abe9d3f4270ULL,
                                                 0x7256f0ab739bfce7ULL};
inline constexpr std::uint64_t kStream42_0_child3[2] = {0xc5531f7f0b6bae83ULL,
                                                        0xd71c542520fc78e6ULL};
inline constexpr double kStream7_5_uniform[2] = {0.5057309208446783, 0.6393992306771855};

// Confidence radius, sigma 0.5, eps 0.01, beta e, gamma 0.01.
inline constexpr double kRadiusN1 = 8.633882752811419;
inline constexpr double kRadiusN4 = 4.478872311532726;

// Exp3.P sampling law for gains (2, 1), gamma 0.2, eta 1.
inline constexpr double kExp3PLaw[2] = {0.6848468629040039, 0.3151531370959961};

// Failure bound at eps 0.01, gamma 1e-6, L 64.
inline constexpr double kFailureBound = 2.358251559852300;

// Iterated-log inversion at a 1.01, c 100, rho 0.1, b e.
inline constexpr double kInversion = 462.0899604466572;

// Fixed-budget lower bound at T 100, H2 1000, L 10.
inline constexpr double kCarpentier = 4.757522699990205e-9;

// UCB-E failure bound at alpha 13, L 2, T 1e4.
inline constexpr double kUcbEFailure = 2.767323883675746;

// gamma_1 for L 256, gap 0.05, H2 102000, sigma 0.5, eps 0.01, beta e.
inline constexpr double kGamma1[4] = {2.77481894109, 0.259494608075, 1.32759380538e-11,
                                      1.63092506652e-114};

// Explicit regret bound at T 1e5, L 2, gap 0.1, sigma 0.5, eps 0.01, beta e, gamma 1e-3.
inline constexpr double kRegretBound = 7902720.201869406;

// Gamma at which the two-arm failure bound (eps 0.01) equals 0.1.
inline constexpr double kGammaForTenth = 1.352842923317173e-6;

}  // namespace oracle
