#!/usr/bin/env python3
"""Write the modular-form table for Gamma0(2) used by the tests and the CLI.

Basis of M_{2k}(Gamma0(2)): monomials F2^a E4^b with a + 2b = k, where
F2 = 2 E2(2 tau) - E2(tau) and E4 is the level-one Eisenstein series.
"""

import argparse
import json
from fractions import Fraction


def sigma(k, n):
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def eisenstein(k, prec):
    c = {2: -24, 4: 240, 6: -504}[k]
    return [Fraction(1)] + [Fraction(c * sigma(k - 1, n)) for n in range(1, prec)]


def rescale(f, m, prec):
    out = [Fraction(0)] * prec
    for n, c in enumerate(f):
        if n * m < prec:
            out[n * m] = c
    return out


def mul(a, b):
    prec = len(a)
    out = [Fraction(0)] * prec
    for i, x in enumerate(a):
        if x:
            for j in range(prec - i):
                out[i + j] += x * b[j]
    return out


def power(f, e):
    out = [Fraction(1)] + [Fraction(0)] * (len(f) - 1)
    for _ in range(e):
        out = mul(out, f)
    return out


def rank(rows):
    rows = [list(r) for r in rows]
    r = 0
    for col in range(len(rows[0]) if rows else 0):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def to_json(f):
    coeffs = [[n, str(c)] for n, c in enumerate(f) if c != 0]
    return {"denom": 1, "prec": len(f), "coeffs": coeffs}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--prec", type=int, default=40)
    ap.add_argument("--max-weight", type=int, default=30)
    ap.add_argument("-o", "--output", default="data/gamma0_2.json")
    args = ap.parse_args()

    prec = args.prec
    e2 = eisenstein(2, prec)
    f2 = [2 * x - y for x, y in zip(rescale(e2, 2, prec), e2)]
    odd_sigma = [Fraction(1)] + [Fraction(24 * sum(d for d in range(1, n + 1) if n % d == 0 and d % 2))
                                 for n in range(1, prec)]
    assert f2 == odd_sigma, "F2 does not match its divisor-sum expansion"
    e4 = eisenstein(4, prec)

    dims, bases = {}, {}
    for k in range(0, args.max_weight // 2 + 1):
        basis = [mul(power(f2, k - 2 * b), power(e4, b)) for b in range(k // 2 + 1)]
        assert rank(basis) == len(basis), f"dependent monomials at weight {2 * k}"
        dims[str(2 * k)] = len(basis)
        bases[str(2 * k)] = [to_json(f) for f in basis]

    table = {"name": "gamma0(2)", "prec": prec, "dims": dims, "bases": bases}
    with open(args.output, "w") as fh:
        json.dump(table, fh, separators=(",", ":"))
        fh.write("\n")


if __name__ == "__main__":
    main()
