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

// Prime-side ground truth: the von Mangoldt function, Chebyshev psi and theta
// by segmented sieving, and certificate-grade searches for primes in short
// intervals.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gaplab/core.hpp"
#include "gaplab/primality.hpp"
#include "gaplab/summation.hpp"

namespace gaplab {

struct SieveConfig {
  u64 ceiling = 1'000'000'000;       ///< largest x accepted by psi/theta
  u64 segment_size = u64{1} << 20;   ///< integers per sieve segment
};

// ---------------------------------------------------------------------------
// Integer roots and the von Mangoldt function.
// ---------------------------------------------------------------------------

/// floor(n^(1/k)) computed exactly in integers.
inline u64 iroot(u64 n, unsigned k) {
  if (k == 0) throw DomainError("iroot: k must be positive");
  if (k == 1 || n < 2) return n;
  auto r = static_cast<u64>(std::pow(static_cast<double>(n), 1.0 / k));
  auto pow_le = [&](u64 b) {
    const auto p = checked_pow(b, k);
    return p && *p <= n;
  };
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

/// Writes n = base^exponent with exponent maximal.
inline std::pair<u64, unsigned> perfect_power(u64 n) {
  if (n < 4) return {n, 1};
  for (unsigned k = 63; k >= 2; --k) {
    const u64 r = iroot(n, k);
    if (r >= 2 && checked_pow(r, k) == static_cast<u128>(n)) return {r, k};
  }
  return {n, 1};
}

/// Lambda(n) = log p when n = p^m, else 0.
inline double von_mangoldt(u64 n) {
  if (n < 1) throw DomainError("von_mangoldt: n must be >= 1");
  if (n == 1) return 0.0;
  const auto [base, exponent] = perfect_power(n);
  (void)exponent;
  return is_prime(base) ? std::log(static_cast<double>(base)) : 0.0;
}

// ---------------------------------------------------------------------------
// Segmented sieve.
// ---------------------------------------------------------------------------

/// All primes <= limit by a plain sieve. Used for sieving primes.
inline std::vector<u64> small_primes(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

/// Calls visit(p) for every prime p in [lo, hi], ascending, sieving the range
/// in segments of cfg.segment_size integers.
template <typename Visitor>
void for_each_prime(u64 lo, u64 hi, Visitor&& visit, const SieveConfig& cfg = {}) {
  if (hi < 2 || lo > hi) return;
  lo = std::max<u64>(lo, 2);
  const u64 root = iroot(hi, 2);
  const auto base = small_primes(root);
  const u64 seg = std::max<u64>(cfg.segment_size, 64);
  std::vector<unsigned char> mark;
  for (u64 seg_lo = lo; seg_lo <= hi;) {
    const u64 seg_hi = (hi - seg_lo < seg - 1) ? hi : seg_lo + seg - 1;
    mark.assign(seg_hi - seg_lo + 1, 1);
    for (u64 p : base) {
      if (p * p > seg_hi) break;
      u64 start = std::max(p * p, (seg_lo + p - 1) / p * p);
      for (u64 j = start; j <= seg_hi; j += p) mark[j - seg_lo] = 0;
    }
    for (u64 i = 0; i < mark.size(); ++i) {
      if (mark[i]) visit(seg_lo + i);
    }
    if (seg_hi == hi) break;
    seg_lo = seg_hi + 1;
  }
}

/// Primes in [lo, hi]. Every listed element is prime and none is omitted.
struct PrimeRange {
  u64 lo = 2;
  u64 hi = 2;
  std::vector<u64> primes;
};

inline PrimeRange primes_in(u64 lo, u64 hi, const SieveConfig& cfg = {}) {
  if (lo < 2) throw DomainError("primes_in: lo must be >= 2");
  if (hi < lo) throw DomainError("primes_in: hi must be >= lo");
  if (hi > cfg.ceiling) throw CeilingExceeded("primes_in: hi above sieve ceiling");
  PrimeRange r{lo, hi, {}};
  for_each_prime(lo, hi, [&](u64 p) { r.primes.push_back(p); }, cfg);
  return r;
}

// ---------------------------------------------------------------------------
// Chebyshev functions.
// ---------------------------------------------------------------------------

struct ChebyshevEval {
  double x = 0;
  double psi = 0;    ///< sum of Lambda(n), n <= x
  double theta = 0;  ///< sum of log p, p <= x
  /// Bound on accumulated floating-point error in psi (summation plus one
  /// rounding per logarithm); theta's is no larger.
  double error_bound = 0;
};

namespace detail {

inline u64 checked_floor(double x, const SieveConfig& cfg, const char* who) {
  if (!(x >= 0)) throw DomainError(std::string(who) + ": x must be >= 0");
  if (x > static_cast<double>(cfg.ceiling)) {
    throw CeilingExceeded(std::string(who) + ": x above sieve ceiling " +
                          std::to_string(cfg.ceiling));
  }
  return static_cast<u64>(std::floor(x));
}

// (p^r, log p) for every proper prime power p^r <= limit, r >= 2, ascending.
inline std::vector<std::pair<u64, double>> proper_prime_powers(u64 limit) {
  std::vector<std::pair<u64, double>> out;
  for (u64 p : small_primes(iroot(limit, 2))) {
    const double lp = std::log(static_cast<double>(p));
    for (u128 q = static_cast<u128>(p) * p; q <= limit; q *= p) {
      out.emplace_back(static_cast<u64>(q), lp);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// psi and theta at every point of xs in one sieve pass; results are in the
/// order of xs. Queries need not be sorted.
inline std::vector<ChebyshevEval> chebyshev_sweep(std::span<const double> xs,
                                                  const SieveConfig& cfg = {}) {
  std::vector<u64> n(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) n[i] = detail::checked_floor(xs[i], cfg, "psi");
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return n[a] < n[b]; });

  std::vector<ChebyshevEval> out(xs.size());
  if (xs.empty()) return out;
  const u64 top = n[order.back()];
  const auto powers = detail::proper_prime_powers(top);

  CompensatedSum theta;
  CompensatedSum extra;  // psi - theta
  std::size_t next_power = 0;
  std::size_t next_query = 0;
  constexpr double u = std::numeric_limits<double>::epsilon() / 2;

  auto resolve_below = [&](u64 limit) {
    // Answer every query with floor(x) < limit.
    while (next_query < order.size() && n[order[next_query]] < limit) {
      const u64 q = n[order[next_query]];
      while (next_power < powers.size() && powers[next_power].first <= q) {
        extra.add(powers[next_power].second);
        ++next_power;
      }
      CompensatedSum psi = theta;
      psi.merge(extra);
      auto& r = out[order[next_query]];
      r.x = xs[order[next_query]];
      r.theta = theta.value();
      r.psi = psi.value();
      r.error_bound = psi.error_bound() + u * psi.abs_sum();
      ++next_query;
    }
  };

  for_each_prime(
      2, top,
      [&](u64 p) {
        resolve_below(p);
        theta.add(std::log(static_cast<double>(p)));
      },
      cfg);
  resolve_below(~u64{0});
  return out;
}

inline ChebyshevEval chebyshev(double x, const SieveConfig& cfg = {}) {
  const double xs[] = {x};
  return chebyshev_sweep(xs, cfg).front();
}

inline double psi(double x, const SieveConfig& cfg = {}) { return chebyshev(x, cfg).psi; }
inline double theta(double x, const SieveConfig& cfg = {}) { return chebyshev(x, cfg).theta; }

// ---------------------------------------------------------------------------
// Dusart's bounds on psi - theta.
// ---------------------------------------------------------------------------

struct DusartCheck {
  double x = 0;
  double gap = 0;  ///< psi(x) - theta(x)
  double lower = 0;
  double upper = 0;
  bool lower_ok = false;
  bool upper_ok = false;
};

namespace detail {
inline DusartCheck dusart_from(const ChebyshevEval& e) {
  DusartCheck c;
  c.x = e.x;
  c.gap = e.psi - e.theta;
  c.lower = 0.9999 * std::sqrt(e.x);
  c.upper = 1.00007 * std::sqrt(e.x) + 1.78 * std::cbrt(e.x);
  c.lower_ok = c.gap > c.lower;
  c.upper_ok = c.gap < c.upper;
  return c;
}
}  // namespace detail

/// 0.9999 x^(1/2) < psi(x) - theta(x) < 1.00007 x^(1/2) + 1.78 x^(1/3), x >= 121.
inline DusartCheck psi_theta_gap_check(double x, const SieveConfig& cfg = {}) {
  if (!(x >= 121)) throw DomainError("psi_theta_gap_check: x must be >= 121");
  return detail::dusart_from(chebyshev(x, cfg));
}

inline std::vector<DusartCheck> psi_theta_gap_check(std::span<const double> xs,
                                                    const SieveConfig& cfg = {}) {
  for (double x : xs) {
    if (!(x >= 121)) throw DomainError("psi_theta_gap_check: x must be >= 121");
  }
  std::vector<DusartCheck> out;
  out.reserve(xs.size());
  for (const auto& e : chebyshev_sweep(xs, cfg)) out.push_back(detail::dusart_from(e));
  return out;
}

// ---------------------------------------------------------------------------
// Primes in short intervals.
// ---------------------------------------------------------------------------

enum class GapStatus { found, exhausted };

inline const char* to_string(GapStatus s) {
  return s == GapStatus::found ? "found" : "exhausted";
}

/// Outcome of searching (lo, hi] for a prime. When status is found, witness is
/// the smallest prime in the interval.
struct GapCertificate {
  double x = 0;  ///< interval start as a real
  double h = 0;  ///< interval length as a real
  u128 lo = 0;   ///< exclusive integer lower end actually searched
  u128 hi = 0;   ///< inclusive integer upper end actually searched
  std::optional<u128> witness;
  GapStatus status = GapStatus::exhausted;
};

/// Smallest prime p with lo < p <= hi.
inline std::optional<u128> first_prime_after(u128 lo, u128 hi) {
  if (hi >= kPrimalityCeiling) {
    throw CeilingExceeded("interval end " + to_string(hi) + " above primality ceiling");
  }
  for (u128 n = lo + 1; n <= hi; ++n) {
    if (n <= ~u64{0} ? is_prime(static_cast<u64>(n)) : is_prime(n)) return n;
  }
  return std::nullopt;
}

inline GapCertificate prime_in_interval(u128 lo, u128 hi) {
  GapCertificate c;
  c.lo = lo;
  c.hi = hi;
  c.x = to_double(lo);
  c.h = to_double(hi - lo);
  c.witness = first_prime_after(lo, hi);
  c.status = c.witness ? GapStatus::found : GapStatus::exhausted;
  return c;
}

/// Searches (x, x + h] for its smallest prime.
inline GapCertificate prime_in_interval(double x, double h) {
  if (!(x >= 2)) throw DomainError("prime_in_interval: x must be >= 2");
  if (!(h > 0)) throw DomainError("prime_in_interval: h must be > 0");
  const long double end = static_cast<long double>(x) + static_cast<long double>(h);
  if (end >= static_cast<long double>(kPrimalityCeiling)) {
    throw CeilingExceeded("prime_in_interval: x + h above primality ceiling");
  }
  auto c = prime_in_interval(static_cast<u128>(std::floor(static_cast<long double>(x))),
                             static_cast<u128>(std::floor(end)));
  c.x = x;
  c.h = h;
  return c;
}

/// One certificate per n in [n_lo, n_hi] for the open interval (n^m, (n+1)^m).
inline std::vector<GapCertificate> cube_gap_scan(u64 n_lo, u64 n_hi, unsigned m = 3) {
  if (n_lo < 1) throw DomainError("cube_gap_scan: n_lo must be >= 1");
  if (m < 2) throw DomainError("cube_gap_scan: m must be >= 2");
  if (n_hi < n_lo) return {};
  const auto top = checked_pow(static_cast<u128>(n_hi) + 1, m);
  if (!top || *top >= kPrimalityCeiling) {
    throw CeilingExceeded("cube_gap_scan: (n_hi + 1)^" + std::to_string(m) +
                          " above primality ceiling");
  }
  std::vector<GapCertificate> out;
  out.reserve(n_hi - n_lo + 1);
  u128 lower = *checked_pow(n_lo, m);
  for (u64 n = n_lo; n <= n_hi; ++n) {
    const u128 upper = *checked_pow(static_cast<u128>(n) + 1, m);
    out.push_back(prime_in_interval(lower, upper - 1));
    lower = upper;
  }
  return out;
}

}  // namespace gaplab
