// Copyright 2026 The RecallForge Authors. All rights reserved.
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

#ifndef RECALL_FORGE_RATIONAL_H_
#define RECALL_FORGE_RATIONAL_H_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace recall_forge {

// Exact arbitrary-precision rational. Always kept in lowest terms.
using Rational = mpq_class;

// Raised for malformed input documents or violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive computation would exceed its configured guard.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "p/q" or an integer string. Rejects zero denominators.
Rational ParseRational(std::string_view text);

// "p/q" with q > 1, or "p" when the value is integral.
std::string RationalToString(const Rational& value);

// Bits of numerator plus bits of denominator.
std::size_t BitLength(const Rational& value);

}  // namespace recall_forge

#endif  // RECALL_FORGE_RATIONAL_H_
