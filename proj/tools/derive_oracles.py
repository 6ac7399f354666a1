#!/usr/bin/env python3
# Copyright 2026 The gaplab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent oracle for the frozen constants in tests/oracles.hpp.

Everything here is recomputed from the defining formulas with mpmath at 40
digits and sympy's prime generator; nothing is shared with the C++ code.
"""

import sympy
from mpmath import mp, mpf, log, exp, pi, cbrt, e, euler, cos, sin, sqrt

mp.dps = 40


def chebyshev(x):
    psi = theta = mpf(0)
    for p in sympy.primerange(2, int(x) + 1):
        lp = log(p)
        theta += lp
        pk = p
        while pk <= x:
            psi += lp
            pk *= p
    return psi, theta


def show(name, v, digits=17):
    print(f"{name} = {mp.nstr(v, digits)}")


for x in (10, 100, 1000, 10**4, 10**5, 10**6):
    p, t = chebyshev(x)
    show(f"psi({x})", p)
    show(f"theta({x})", t)
p, t = chebyshev(121)
show("gap(121)", p - t)

show("n_upper(100)", 100 * log(100) / (2 * pi))
lt = log(2000)
show("density(1,2000)", mpf("9.7") * lt**3 + 103 * lt**2)
show("density(0.52,2000)",
     mpf("9.7") * (6000) ** (8 * (1 - mpf("0.52")) / 3) * lt ** (5 - 2 * mpf("0.52")) + 103 * lt**2)
show("nu(3)", 1 / (mpf("57.54") * log(3) ** (mpf(2) / 3) * cbrt(log(log(3)))))
show("nu(e^e)", 1 / (mpf("57.54") * e ** (mpf(2) / 3)))
show("strip(51)", log(51) ** 2 + 20 * log(51))
show("choicet(1e4)", log(10**4) ** 2 + log(10**4))


def ineq1(y, k, A=mpf("9.7"), c=mpf("57.54"), L=5, eps=mpf("1e-3")):
    ly = log(y)
    return (log(27 * A / 256) + (L - 1 - k) * ly
            - 4 / (cbrt(9) * c) * y ** (k - mpf(2) / 3) / cbrt(ly)
            - log((1 - eps) / 2))


def ineq2(y, k, m, eps=mpf("1e-3")):
    return (mpf(11) / 4 * log(y) + mpf(3) / 8 * y**k - (mpf(3) / 8 - mpf(1) / m) * y
            - log(mpf(m) / 12 * (1 - eps)))


k = mpf("0.9359")
show("ineq1(8e14)", ineq1(mpf("8e14"), k))
show("ineq1(1e10)", ineq1(mpf("1e10"), k))
show("ineq2(8e14,m=3)", ineq2(mpf("8e14"), k, 3))
show("term2(8e14)", ineq1(mpf("8e14"), k) + log((1 - mpf("1e-3")) / 2))

# Big-sum split at alpha = 1.194, x = e^60, in units of x log^2 x.
a, L = mpf("1.194"), mpf(60)
c = 1 + 1 / L
s1s5 = e / (log(a) * L)
s3 = 5 / L
s2 = a**c * (L + log(1 - 1 / a) + euler + exp(-L) / (1 - 1 / a)) / L
s4 = 2 * (L + log(a)) / (3 - a) * (L + log(a - 1) + euler + exp(-L) / (a - 1)) / L**2
show("bigsum s1_s5", s1s5)
show("bigsum s2", s2)
show("bigsum s4 corrected", s4)
show("bigsum ratio corrected", s1s5 + s3 + s2 + s4)
show("bigsum ratio verbatim", s1s5 + s3 + s2 + s4 * exp(-L))

# One conjugate pair at x = 1000.5, gamma = gamma_1.
g, lx = mpf("14.134725141734693"), log(mpf("1000.5"))
rho = mp.mpc(0.5, g)
show("pair(1000.5, g1)", 2 * (exp(rho * lx) / rho).real)
show("pair closed form", 2 * sqrt(exp(lx)) * (cos(g * lx) / 2 + g * sin(g * lx)) / (mpf(1) / 4 + g**2))

show("g/h factor", 1 / (1 - 1 / mpf(28314000)))
show("log 2pi", log(2 * pi))


def budget_ratio(xl, Tl):
    x, T, L = exp(mpf(xl)), exp(mpf(Tl)), mpf(xl)
    U = x  # x^-U terms vanish at this scale
    h = log(sqrt(U**2 + (T + 1) ** 2))
    window = (2 * x * log(T) / (T - 1) + (9 + h) / (2 * pi * x * (T - 1))
              + e / (2 * pi * (T - 1)) * (log(T + 1) ** 2 + log(T + 1))
              + e * x * L / (pi * (T - 1)))
    total = log(2 * pi) + abs(log(1 - x**-2) / 2) + 2 * window + mpf("2.8") * x * L**2 / (pi * T)
    return total / (2 * x * L**2 / T)


mp.dps = 80
for xl, Tl in ((60, log(51)), (60, 30), (60, 60 - log(2)), (100, 50)):
    show(f"budget ratio ({xl}, {mp.nstr(Tl, 6)})", budget_ratio(xl, Tl))
