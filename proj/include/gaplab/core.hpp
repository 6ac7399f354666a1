// Copyright 2026 The gaplab Authors
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
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace gaplab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Errors. Every failure the library reports is one of these; the CLI maps
// them all to exit code 2.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain where a formula or bound is valid.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Request above the configured sieve or primality ceiling.
class CeilingExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OrderError : public Error {
 public:
  OrderError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Query height above the largest ordinate in a zero table.
class HeightExceeded : public Error {
 public:
  using Error::Error;
};

/// Zero table does not start at height 0, so N(T) would undercount.
class NotAnchored : public Error {
 public:
  using Error::Error;
};

/// Truncation height within 1e-6 of a zero ordinate.
class NearZeroOrdinate : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

/// One of the threshold inequalities has no sign change in the search bracket.
class NoThreshold : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Constants.
// ---------------------------------------------------------------------------

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;
inline constexpr double kEulerGamma = 0.5772156649015329;
inline constexpr double kLog2Pi = 1.8378770664093453;  // log(2 pi)

// ---------------------------------------------------------------------------
// 128-bit integer helpers.
// ---------------------------------------------------------------------------

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

inline std::optional<u128> parse_u128(const std::string& s) {
  if (s.empty()) return std::nullopt;
  u128 v = 0;
  constexpr u128 kMax = ~static_cast<u128>(0);
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    const auto d = static_cast<unsigned>(c - '0');
    if (v > (kMax - d) / 10) return std::nullopt;
    v = v * 10 + d;
  }
  return v;
}

/// base^exp, or nullopt when the result does not fit in 128 bits.
inline std::optional<u128> checked_pow(u128 base, unsigned exp) {
  u128 result = 1;
  constexpr u128 kMax = ~static_cast<u128>(0);
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > kMax / base) return std::nullopt;
    result *= base;
  }
  return result;
}

inline double to_double(u128 v) { return static_cast<double>(v); }

}  // namespace gaplab
