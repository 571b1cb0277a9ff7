#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Regenerates tests/fixtures/oracle_fixtures.json.

Exhaustive minima of max_j ||h_j(n)|| over 1 <= n <= N, computed with
Python's Fraction type, independently of the C++ code. Run from the
repository root:  python3 scripts/gen_fixtures.py
"""

import json
import random
from fractions import Fraction

SEED = 20261014
COUNT = 60


def dist(x):
    x = x % 1
    return min(x, 1 - x)


def evaluate(row, n):
    return sum(c * n ** (e + 1) for e, c in enumerate(row))


def brute(coeffs, N):
    best, arg = None, None
    for n in range(1, N + 1):
        v = max(dist(evaluate(row, n)) for row in coeffs)
        if best is None or v < best:
            best, arg = v, n
            if v == 0:
                break
    return arg, best


def fmt(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def record(coeffs, N, tag):
    degree = len(coeffs[0])
    n_star, value = brute(coeffs, N)
    return {
        "tag": tag,
        "polys": {"degree": degree, "coeffs": [[fmt(c % 1) for c in row] for row in coeffs]},
        "N": str(N),
        "n_star": str(n_star),
        "value": fmt(value),
    }


def main():
    F = Fraction
    out = [
        record([[F(1, 3)]], 10, "linear-third"),
        record([[F(0), F(89, 144)]], 100, "square-fibonacci"),
        record([[F(1, 2), F(1, 2)]], 10, "triangular"),
        record([[F(1, 3), F(0), F(1, 3)]], 10, "cubic-thirds"),
        record([[F(0), F(89, 144)], [F(0), F(13, 21)]], 2000, "square-pair"),
        record([[F(0), F(0), F(89, 144)]], 5000, "cube-fibonacci"),
    ]
    rng = random.Random(SEED)
    for i in range(COUNT):
        degree = rng.randint(1, 3)
        d = rng.randint(1, 2)
        N = rng.choice([50, 200, 1000, 3000])
        coeffs = []
        for _ in range(d):
            row = []
            for _ in range(degree):
                q = rng.randint(2, 5000)
                row.append(F(rng.randint(0, q - 1), q))
            if all(c == 0 for c in row):
                row[-1] = F(1, 7)
            coeffs.append(row)
        out.append(record(coeffs, N, f"random-{i}"))
    doc = {
        "generator": "scripts/gen_fixtures.py",
        "seed": SEED,
        "count": len(out),
        "records": out,
    }
    with open("tests/fixtures/oracle_fixtures.json", "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
