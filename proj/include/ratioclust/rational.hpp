// Copyright 2026 The ratioclust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RATIOCLUST_RATIONAL_HPP_
#define RATIOCLUST_RATIONAL_HPP_

#include <cmath>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "ratioclust/error.hpp"

namespace ratioclust {

/// Arbitrary-precision rational used by the exact evaluation mode.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(boost::multiprecision::cpp_int(num),
                  boost::multiprecision::cpp_int(den));
}

/// Exact conversion of a finite double (every finite double is a dyadic
/// rational).
inline Rational to_rational(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot convert non-finite value to rational");
  }
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // mantissa * 2^53 is an exact integer for IEEE doubles.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  boost::multiprecision::cpp_int num(scaled);
  boost::multiprecision::cpp_int den(1);
  if (exponent >= 0) {
    num <<= exponent;
  } else {
    den <<= -exponent;
  }
  return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ratioclust

#endif  // RATIOCLUST_RATIONAL_HPP_
