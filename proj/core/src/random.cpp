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

#include "planar_lagrange/random.hpp"

#include <algorithm>

namespace planar_lagrange {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = engine_.max() - engine_.max() % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

std::int64_t SeededRng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational random_rational(SeededRng& rng, bool nonzero) {
  std::int64_t num = 0;
  do {
    num = rng.between(-9, 9);
  } while (nonzero && num == 0);
  Rational r(static_cast<long>(num), static_cast<unsigned long>(rng.between(1, 9)));
  r.canonicalize();
  return r;
}

TreeSeries random_series(std::size_t max_degree, std::size_t support_degree, SeededRng& rng,
                         bool nonzero_constant) {
  TreeSeries s(max_degree);
  const std::size_t top = std::min(max_degree, support_degree);
  s.set(PlanarTree(), random_rational(rng, nonzero_constant));
  for (std::size_t d = 1; d <= top; ++d) {
    for (const auto& t : enumerate_prt(d, EnumerationLimit{std::max<std::size_t>(top, 10)})) {
      s.set(t, random_rational(rng));
    }
  }
  return s;
}

}  // namespace planar_lagrange
