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

#include "planar_lagrange/rational.hpp"

#include <cctype>

#include "planar_lagrange/errors.hpp"

namespace planar_lagrange {

namespace {

void check_integer(std::string_view digits, std::size_t offset, bool signed_ok) {
  std::size_t i = 0;
  if (signed_ok && i < digits.size() && (digits[i] == '-' || digits[i] == '+')) ++i;
  if (i == digits.size()) throw ParseError("expected a decimal integer", offset);
  for (; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw ParseError("expected a decimal digit", offset + i);
    }
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  check_integer(num, 0, true);
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    check_integer(den, slash + 1, false);
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator", slash + 1);
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

}  // namespace planar_lagrange
