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

// Closed-form explicit bounds on the zeros of zeta and on zeta'/zeta.
// All logarithms are natural.

#include <cmath>
#include <complex>

#include "gaplab/core.hpp"

namespace gaplab {

/// The improvable constants, threaded explicitly so that what-if runs with
/// other values are ordinary calls.
struct BoundParams {
  double A = 9.7;         ///< zero-density leading constant
  double c_ford = 57.54;  ///< zero-free region constant
  double L = 5;           ///< density log exponent is L - 2 sigma
  double dusart_lo = 0.9999;
  double dusart_hi1 = 1.00007;
  double dusart_hi2 = 1.78;
  double delta_rs = 28314000;  ///< prime in (x(1 - 1/delta), x]

  void validate() const {
    if (!(A > 0 && c_ford > 0 && dusart_lo > 0 && dusart_hi1 > 0 && dusart_hi2 > 0 &&
          delta_rs > 0)) {
      throw DomainError("BoundParams: constants must be positive");
    }
    if (!(L >= 2)) throw DomainError("BoundParams: L must be >= 2");
  }
};

/// N(T) < T log T / (2 pi), T > 15.
inline double n_upper(double T) {
  if (!(T > 15)) throw DomainError("n_upper needs T > 15");
  return T * std::log(T) / (2 * kPi);
}

/// N(sigma, T) <= A (3T)^{8(1-sigma)/3} log^{L-2 sigma} T + 103 log^2 T,
/// for T >= 2000 and sigma >= 0.52.
inline double density_bound(double sigma, double T, const BoundParams& params = {}) {
  if (!(T >= 2000)) throw DomainError("density_bound needs T >= 2000");
  if (!(sigma >= 0.52)) throw DomainError("density_bound needs sigma >= 0.52");
  params.validate();
  const double lt = std::log(T);
  return params.A * std::pow(3 * T, 8 * (1 - sigma) / 3) * std::pow(lt, params.L - 2 * sigma) +
         103 * lt * lt;
}

/// nu(T) from log T, for heights beyond double range.
inline double zero_free_nu_log(double T_log, const BoundParams& params = {}) {
  if (!(T_log >= std::log(3.0))) throw DomainError("zero_free_nu needs T >= 3");
  params.validate();
  return 1 / (params.c_ford * std::pow(T_log, 2.0 / 3) * std::cbrt(std::log(T_log)));
}

/// Width nu(T) of the zero-free region sigma >= 1 - nu(T), T >= 3.
inline double zero_free_nu(double T, const BoundParams& params = {}) {
  if (!(T >= 3)) throw DomainError("zero_free_nu needs T >= 3");
  return zero_free_nu_log(std::log(T), params);
}

/// |zeta'/zeta(s)| < 9 + log|s| on the left contour, Re s <= -1. Keeping s at
/// distance >= 1 from the odd negative integers is the caller's job.
inline double zetaprime_over_zeta_left_bound(std::complex<double> s) {
  if (!(s.real() <= -1)) throw DomainError("left bound needs Re s <= -1");
  return 9 + std::log(std::abs(s));
}

/// |zeta'/zeta| < log^2 t + 20 log t at the shifted ordinate t0 in (t-1, t+1).
inline double zetaprime_over_zeta_strip_bound(double t) {
  if (!(t > 50)) throw DomainError("strip bound needs t > 50");
  const double lt = std::log(t);
  return lt * lt + 20 * lt;
}

/// |sum over |gamma - t| < 1 of 1/(s - rho)| < log^2 t + log t at t0.
inline double choicet_bound(double t) {
  if (!(t > 50)) throw DomainError("choicet_bound needs t > 50");
  const double lt = std::log(t);
  return lt * lt + lt;
}

}  // namespace gaplab
