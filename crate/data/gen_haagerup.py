#!/usr/bin/env python3
"""Write haagerup-center.mtc: the rank-12 modular data with sqrt(13) spelled
out as the quadratic Gauss sum over E(13)."""

from fractions import Fraction
from collections import defaultdict

RESIDUES = {1, 3, 4, 9, 10, 12}


def chi(k):
    return 1 if k % 13 in RESIDUES else -1


def add(*terms):
    out = defaultdict(Fraction)
    for t in terms:
        for k, v in t.items():
            out[k % 13] += v
    return {k: v for k, v in out.items() if v != 0}


def scale(c, t):
    return {k: Fraction(c) * v for k, v in t.items()}


def const(q):
    return {0: Fraction(q)} if q else {}


GAUSS = {k: Fraction(chi(k)) for k in range(1, 13)}
Y = scale(Fraction(3, 13), GAUSS)
X = add(const(Fraction(1, 2)), scale(Fraction(-3, 26), GAUSS))
ONE_MINUS_X = add(const(1), scale(-1, X))


def c(j):
    # -y (zeta^j + zeta^-j)
    shifted = add({(k + j) % 13: v for k, v in Y.items()}, {(k - j) % 13: v for k, v in Y.items()})
    return scale(-1, shifted)


def render(t):
    if not t:
        return "0"
    parts = []
    for k in sorted(t):
        v = t[k]
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        body = str(mag) if k == 0 else (f"E(13)^{k}" if mag == 1 else f"{mag}*E(13)^{k}")
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


C_INDEX = [
    [1, 2, 3, 4, 5, 6],
    [2, 4, 6, 5, 3, 1],
    [3, 6, 4, 1, 2, 5],
    [4, 5, 1, 3, 6, 2],
    [5, 3, 2, 6, 1, 4],
    [6, 1, 5, 2, 4, 3],
]

rows = [
    [X, ONE_MINUS_X] + [const(1)] * 4 + [Y] * 6,
    [ONE_MINUS_X, X] + [const(1)] * 4 + [scale(-1, Y)] * 6,
]
for pattern in ([2, -1, -1, -1], [-1, 2, -1, -1], [-1, -1, -1, 2], [-1, -1, 2, -1]):
    rows.append([const(1), const(1)] + [const(p) for p in pattern] + [const(0)] * 6)
for idx in C_INDEX:
    rows.append([Y, scale(-1, Y)] + [const(0)] * 4 + [c(j) for j in idx])
rows = [[scale(Fraction(1, 3), e) for e in row] for row in rows]

T = ["1", "1", "1", "1", "E(3)", "E(3)^2",
     "E(13)^6", "E(13)^11", "E(13)^2", "E(13)^5", "E(13)^7", "E(13)^8"]

lines = ["rank = 12", "labels = [" + ", ".join(f'"x{i}"' for i in range(1, 13)) + "]", "S = ["]
for row in rows:
    lines.append("  [" + ", ".join(f'"{render(e)}"' for e in row) + "],")
lines.append("]")
lines.append("T = [" + ", ".join(f'"{t}"' for t in T) + "]")

with open("haagerup-center.mtc", "w") as fh:
    fh.write("\n".join(lines) + "\n")
