#!/usr/bin/env python3
"""Derive the mod-2 structure constants of the Hurwitz order.

Works in exact rational quaternion arithmetic, expresses each product of the
basis (1, i, j, w), w = (1 + i + j + k) / 2, back in that basis with integer
coordinates, and reduces mod 2. Prints the fixture consumed by
`rings::hurwitz_mod2` followed by a SHA-256 of the table lines.
"""
import hashlib
from fractions import Fraction as Q


def qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


half = Q(1, 2)
basis = {
    "1": (Q(1), Q(0), Q(0), Q(0)),
    "i": (Q(0), Q(1), Q(0), Q(0)),
    "j": (Q(0), Q(0), Q(1), Q(0)),
    "w": (half, half, half, half),
}
names = ["1", "i", "j", "w"]


def coords(q):
    # q = c1*1 + ci*i + cj*j + cw*w; the k-coefficient fixes cw = 2*q3.
    cw = 2 * q[3]
    c1 = q[0] - cw / 2
    ci = q[1] - cw / 2
    cj = q[2] - cw / 2
    out = (c1, ci, cj, cw)
    assert all(c.denominator == 1 for c in out), q
    return [int(c) for c in out]


lines = []
for a in names:
    for b in names:
        c = coords(qmul(basis[a], basis[b]))
        bits = "".join(str(x % 2) for x in c)
        lines.append(f"{a} * {b} = {bits}")

body = "\n".join(lines) + "\n"
print(body, end="")
print("# sha256 " + hashlib.sha256(body.encode()).hexdigest())
