/*
 * Copyright 2026 The graded-em Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GEM_RATIONAL_HPP
#define GEM_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gem {

/// Exact arbitrary-precision rational. Every weight, output and distance in
/// the library is one of these; nothing is ever rounded.
using Rational = boost::multiprecision::mpq_rational;

/// Raised for malformed user input (bad literals, unknown states, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a value lies outside the carrier an operation expects.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exploration exceeds its configured state cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p". Decimal notation is rejected on purpose: the only
/// accepted spelling of one half is "1/2".
Rational parse_rational(std::string_view text);

/// Canonical spelling: "p" when the denominator is 1, "p/q" otherwise,
/// always in lowest terms.
std::string to_string(const Rational& r);

inline Rational rat(long long p, long long q = 1) { return Rational(p) / Rational(q); }

}  // namespace gem

#endif  // GEM_RATIONAL_HPP
