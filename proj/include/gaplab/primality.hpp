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

/**
 * Deterministic Miller-Rabin.
 *
 * Testing against the first 13 primes as witnesses is exact for every
 * n < 3317044064679887385961981 (Sorenson and Webster's psi_13). Above that
 * bound the test is only probabilistic, so is_prime refuses with
 * CeilingExceeded instead of answering.
 */

#include <array>

#include "gaplab/core.hpp"

namespace gaplab {

/// Exclusive upper bound on n for which is_prime is a certificate.
inline constexpr u128 kPrimalityCeiling =
    static_cast<u128>(3317044064679ULL) * static_cast<u128>(1000000000000ULL) +
    static_cast<u128>(887385961981ULL);

namespace detail {

inline constexpr std::array<unsigned, 13> kWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                                        19, 23, 29, 31, 37, 41};

inline u64 mulmod64(u64 a, u64 b, u64 n) {
  return static_cast<u64>(static_cast<u128>(a) * b % n);
}

// Valid for n < 2^82: every partial product stays below 2^123.
inline u128 mulmod82(u128 a, u128 b, u128 n) {
  constexpr unsigned kSplit = 41;
  const u128 lo_mask = (static_cast<u128>(1) << kSplit) - 1;
  const u128 a_hi = a >> kSplit;
  const u128 a_lo = a & lo_mask;
  const u128 b_shift = (b << kSplit) % n;
  return (a_hi * b_shift % n + a_lo * b % n) % n;
}

template <typename T, typename MulMod>
T powmod(T base, T exp, T n, MulMod mulmod) {
  T result = 1;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

template <typename T, typename MulMod>
bool miller_rabin(T n, MulMod mulmod) {
  T d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (unsigned a : kWitnesses) {
    if (static_cast<T>(a) % n == 0) continue;
    T x = powmod<T>(static_cast<T>(a), d, n, mulmod);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline constexpr std::array<unsigned, 15> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                                          23, 29, 31, 37, 41, 43, 47};

}  // namespace detail

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (unsigned p : detail::kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 53 * 53) return true;
  return detail::miller_rabin<u64>(n, detail::mulmod64);
}

inline bool is_prime(u128 n) {
  if (n <= ~static_cast<u64>(0)) return is_prime(static_cast<u64>(n));
  if (n >= kPrimalityCeiling) {
    throw CeilingExceeded("primality of " + to_string(n) +
                          " is above the deterministic witness bound");
  }
  for (unsigned p : detail::kSmallPrimes) {
    if (n % p == 0) return false;
  }
  return detail::miller_rabin<u128>(n, detail::mulmod82);
}

}  // namespace gaplab
