// Copyright 2026 The planar_lagrange Authors
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
#include <random>

#include "planar_lagrange/rational.hpp"
#include "planar_lagrange/series.hpp"

namespace planar_lagrange {

/// Seeded generator whose draws are identical on every platform.
/// (std::uniform_int_distribution is implementation-defined.)
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// numerator in [-9, 9] (nonzero if requested), denominator in [1, 9].
Rational random_rational(SeededRng& rng, bool nonzero = false);

/// A series with a random coefficient on every reduced tree (and `1`) of
/// degree <= support_degree.
TreeSeries random_series(std::size_t max_degree, std::size_t support_degree, SeededRng& rng,
                         bool nonzero_constant = false);

}  // namespace planar_lagrange
