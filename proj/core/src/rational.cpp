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

#include "gem/rational.hpp"

#include <cctype>

namespace gem {

namespace {

boost::multiprecision::mpz_int parse_integer(std::string_view digits, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < digits.size() && (digits[pos] == '-' || digits[pos] == '+')) {
    negative = digits[pos] == '-';
    ++pos;
  }
  if (pos == digits.size()) throw InputError("malformed rational literal '" + std::string(whole) + "'");
  boost::multiprecision::mpz_int value = 0;
  for (; pos < digits.size(); ++pos) {
    const char c = digits[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("malformed rational literal '" + std::string(whole) +
                       "' (expected \"p\" or \"p/q\"; decimals are not accepted)");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const auto num = parse_integer(text.substr(0, slash), text);
  const auto den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  const auto& num = boost::multiprecision::numerator(r);
  const auto& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace gem
