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

"""Generates a zero-ordinate fixture table in the gaplab zeros format.

Used only to produce tests/data/zeros_100k.txt for environments without a
published table. Zeros are isolated by sign changes of the Hardy Z-function
between Gram points, completeness is checked at every good Gram point
(N(g_n) must equal n + 1), and each root is polished with Brent's method.

    python3 tools/gen_zeros.py --count 100000 --out tests/data/zeros_100k.txt
"""

import argparse
import math
import sys

from mpmath import fp, mp
from scipy.optimize import brentq


def gram_point(n, guess):
    t = guess
    for _ in range(50):
        f = fp.siegeltheta(t) - n * math.pi
        # theta'(t) ~ log(t / 2pi) / 2
        dt = f / (0.5 * math.log(t / (2 * math.pi)))
        t -= dt
        if abs(dt) < 1e-12 * t:
            break
    return t


def sign_changes(z, a, b, za, zb, steps):
    """Brackets of sign changes of z on [a, b] sampled at `steps` subintervals."""
    out = []
    prev_t, prev_z = a, za
    for i in range(1, steps + 1):
        t = b if i == steps else a + (b - a) * i / steps
        zt = zb if i == steps else z(t)
        if (prev_z < 0) != (zt < 0):
            out.append((prev_t, t))
        prev_t, prev_z = t, zt
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100000)
    ap.add_argument("--out", required=True)
    ap.add_argument("--check", type=int, default=0,
                    help="compare the first N zeros against mpmath.zetazero")
    args = ap.parse_args()

    z = fp.siegelz
    # g_{-1} ~ 9.67 lies below the first zero; start there.
    grams = [gram_point(-1, 9.7)]
    n = -1
    brackets = []
    last_good = (0, grams[0], z(grams[0]))  # (index into grams, t, Z)
    pending = []
    zg_prev = last_good[2]
    while len(brackets) < args.count + 2:
        n += 1
        g = gram_point(n, grams[-1] + 2 * math.pi / math.log(max(grams[-1], 10) / (2 * math.pi)))
        zg = z(g)
        pending.append(sign_changes(z, grams[-1], g, zg_prev, zg, 2))
        grams.append(g)
        zg_prev = zg
        good = ((-1) ** n) * zg > 0
        if not good:
            continue
        found = sum(len(p) for p in pending)
        expected = (n + 1) - len(brackets)
        steps = 2
        lo_t = last_good[1]
        while found != expected:
            steps *= 2
            if steps > 4096:
                sys.exit(f"could not isolate zeros between {lo_t} and {g}")
            segs = grams[last_good[0]:]
            pending = []
            for a, b in zip(segs, segs[1:]):
                pending.append(sign_changes(z, a, b, z(a), z(b), steps))
            found = sum(len(p) for p in pending)
        for p in pending:
            brackets.extend(p)
        pending = []
        last_good = (len(grams) - 1, g, zg)
        if n % 5000 == 0:
            print(f"gram {n}: {len(brackets)} zeros, t = {g:.3f}", file=sys.stderr)

    brackets = brackets[: args.count]
    with open(args.out, "w") as f:
        f.write(f"# {args.count} nontrivial zeta zero ordinates, Riemann-Siegel Z sign changes\n")
        f.write("# isolated between Gram points, polished with Brent's method (xtol 1e-11)\n")
        for i, (a, b) in enumerate(brackets):
            r = brentq(z, a, b, xtol=1e-11, rtol=1e-15)
            f.write(f"{r:.10f}\n")
            if i % 10000 == 0:
                print(f"polished {i}", file=sys.stderr)

    if args.check:
        with open(args.out) as f:
            vals = [float(l) for l in f if not l.startswith("#")]
        mp.dps = 20
        worst = 0.0
        for i in range(args.check):
            ref = float(mp.zetazero(i + 1).imag)
            worst = max(worst, abs(ref - vals[i]))
        print(f"max deviation over first {args.check}: {worst:.3e}", file=sys.stderr)


if __name__ == "__main__":
    main()
