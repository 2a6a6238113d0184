// Copyright 2026 The offnash Authors
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

#ifndef OFFNASH_RATIONAL_HPP
#define OFFNASH_RATIONAL_HPP

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "offnash/errors.hpp"

namespace offnash {

// The sole numeric type of the library. GMP keeps values in canonical
// form (positive denominator, gcd(|num|, den) = 1) through arithmetic;
// parse_rational() canonicalizes textual input.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Renders in canonical form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

/// Accepts "p" or "p/q" with optional leading '-' on p and q a positive
/// integer. Returns nullopt on any other shape (including "p/0").
inline std::optional<Rational> parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_digits(den)) return std::nullopt;
  }
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_digits(digits)) return std::nullopt;
  Integer n{std::string(num)};
  Integer d = den.empty() ? Integer(1) : Integer{std::string(den)};
  if (d == 0) return std::nullopt;
  Rational r(n, d);
  mpq_canonicalize(r.backend().data());
  return r;
}

inline Integer floor_int(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.backend().data(), numerator(r).backend().data(),
             denominator(r).backend().data());
  return q;
}

inline Integer ceil_int(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.backend().data(), numerator(r).backend().data(),
             denominator(r).backend().data());
  return q;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// gcd over rationals: gcd({p_k/q_k}) = gcd({p_k * L / q_k}) / L with
/// L = lcm of the denominators. gcd of the empty set (or of all-zero
/// inputs) is 0.
inline Rational rational_gcd(const std::vector<Rational>& values) {
  Integer lcm_den = 1;
  for (const Rational& v : values) lcm_den = lcm(lcm_den, denominator(v));
  Integer g = 0;
  for (const Rational& v : values) {
    Integer scaled = numerator(v) * (lcm_den / denominator(v));
    g = gcd(g, scaled);
  }
  return Rational(g, lcm_den);
}

}  // namespace offnash

#endif  // OFFNASH_RATIONAL_HPP
