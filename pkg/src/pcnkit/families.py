"""Known PcN / APcN power-map families, encoded as matchers.

Each row is a claim to be checked, not a trusted fact; rows sourced from
other work are transcribed as printed, so some of them do not survive
the brute-force oracle (see ``tests/test_families.py`` for the measured
findings). Exponent patterns are matched modulo ``p^m - 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .gf import FieldSpec, v2
from .theorems import Prediction


@dataclass(frozen=True)
class FamilyRow:
    row_id: str
    chars: str  # "any", "odd", or a prime as text
    pattern: str
    condition: str
    uniformity: int
    ref: str
    # (p, m) -> iterable of (d, params)
    exponents: Callable[[int, int], Iterable[tuple[int, dict]]]
    # (F, params, c) -> bool
    admits: Callable[[FieldSpec, dict, int], bool]

    def char_ok(self, p: int) -> bool:
        if self.chars == "any":
            return True
        if self.chars == "odd":
            return p != 2
        return p == int(self.chars)

    def citation(self) -> str:
        return f"known family {self.row_id}: d = {self.pattern}; {self.condition}; uniformity {self.uniformity} [{self.ref}]"


def _fixed(fn):
    return lambda p, m: [(fn(p, m), {})]


def _with_k(fn, ks=lambda p, m: range(1, m + 1)):
    return lambda p, m: [(fn(p, m, k), {"k": k}) for k in ks(p, m)]


def _not_one(F, c):
    return c != 1


def _minus_one(F, c):
    return c == F.minus_one


def _r03(F, par, c):
    if c in (0, 1):
        return False
    return F.trace(c) == 1 and F.trace(F.inv(c)) == 1


def _r04(F, par, c):
    if c == 1:
        return False
    four = F.const(4)
    if c == four or (four != 0 and c == F.inv(four)):
        return True
    a = F.sub(F.mul(c, c), F.mul(four, c))
    b = F.sub(1, F.mul(four, c))
    return F.quadratic_character(a) == -1 and F.quadratic_character(b) == -1


def _odd_congruence(p: int, gcd_ok):
    """Odd d with d(p^k+1)/2 = (p^m+1)/2 mod p^m-1, over k in [1, m]."""

    def gen(pp, m):
        n = pp**m - 1
        out = []
        for k in range(1, m + 1):
            if not gcd_ok(k, m):
                continue
            a, b = (pp**k + 1) // 2, (pp**m + 1) // 2
            g = math.gcd(a, n)
            if b % g:
                continue
            step = n // g
            d0 = (b // g) * pow(a // g, -1, step) % step
            for t in range(g):
                d = (d0 + t * step - 1) % n + 1
                if d % 2:
                    out.append((d, {"k": k}))
        return out

    return gen


ROWS: tuple[FamilyRow, ...] = (
    FamilyRow("R01", "any", "2", "c != 1", 2, "literature",
              _fixed(lambda p, m: 2), lambda F, par, c: c != 1),
    FamilyRow("R02", "any", "p^m-2", "c = 0", 1, "literature",
              _fixed(lambda p, m: p**m - 2), lambda F, par, c: c == 0),
    FamilyRow("R03", "2", "2^m-2", "c != 0, Tr(c) = Tr(1/c) = 1", 2, "literature",
              _fixed(lambda p, m: 2**m - 2), _r03),
    FamilyRow("R04", "odd", "p^m-2", "c = 4, 1/4, or chi(c^2-4c) = chi(1-4c) = -1", 2, "literature",
              _fixed(lambda p, m: p**m - 2), _r04),
    FamilyRow("R05", "3", "(3^k+1)/2", "c = -1, m/gcd(k,m) = 1", 1, "literature",
              _with_k(lambda p, m, k: (3**k + 1) // 2),
              lambda F, par, c: c == F.minus_one and F.m // math.gcd(par["k"], F.m) == 1),
    FamilyRow("R06", "odd", "(p^2+1)/2", "c = -1, m odd", 1, "literature",
              _fixed(lambda p, m: (p**2 + 1) // 2), lambda F, par, c: c == F.minus_one and F.m % 2 == 1),
    FamilyRow("R07", "odd", "p^2-p+1", "c = -1, m = 3", 1, "literature",
              _fixed(lambda p, m: p**2 - p + 1), lambda F, par, c: c == F.minus_one and F.m == 3),
    FamilyRow("R08", "odd", "p^4+(p-2)p^2+(p-1)p+1", "c = -1, m = 5", 1, "literature",
              _fixed(lambda p, m: p**4 + (p - 2) * p**2 + (p - 1) * p + 1),
              lambda F, par, c: c == F.minus_one and F.m == 5),
    FamilyRow("R09", "odd", "(p^5+1)/(p+1)", "c = -1, m = 5", 1, "literature",
              _fixed(lambda p, m: (p**5 + 1) // (p + 1)), lambda F, par, c: c == F.minus_one and F.m == 5),
    FamilyRow("R10", "odd", "(p-1)p^6+p^5+(p-2)p^3+(p-1)p^2+p", "c = -1, m = 7", 1, "literature",
              _fixed(lambda p, m: (p - 1) * p**6 + p**5 + (p - 2) * p**3 + (p - 1) * p**2 + p),
              lambda F, par, c: c == F.minus_one and F.m == 7),
    FamilyRow("R11", "odd", "(p-2)p^6+(p-2)p^5+(p-1)p^4+p^3+p^2+p", "c = -1, m = 7", 1, "literature",
              _fixed(lambda p, m: (p - 2) * p**6 + (p - 2) * p**5 + (p - 1) * p**4 + p**3 + p**2 + p),
              lambda F, par, c: c == F.minus_one and F.m == 7),
    FamilyRow("R12", "odd", "(p^7+1)/(p+1)", "c = -1, m = 7", 1, "literature",
              _fixed(lambda p, m: (p**7 + 1) // (p + 1)), lambda F, par, c: c == F.minus_one and F.m == 7),
    FamilyRow("R13", "3", "(3^m+3)/2", "c = -1, m even", 2, "literature",
              _fixed(lambda p, m: (3**m + 3) // 2), lambda F, par, c: c == F.minus_one and F.m % 2 == 0),
    FamilyRow("R14", "3", "3^m-3", "c = 0", 2, "literature",
              _fixed(lambda p, m: 3**m - 3), lambda F, par, c: c == 0),
    FamilyRow("R15", "odd", "(p^k+1)/2", "c = -1, v2(m) <= v2(k)+1 (1 <= k < m, m >= 3)", 1, "literature",
              _with_k(lambda p, m, k: (p**k + 1) // 2, lambda p, m: range(1, m) if m >= 3 else ()),
              lambda F, par, c: c == F.minus_one and v2(F.m) <= v2(par["k"]) + 1),
    FamilyRow("R16", "odd", "p^k+1", "v2(m) <= v2(k), 1 != c in GF(p^gcd(m,k))", 2, "literature",
              _with_k(lambda p, m, k: p**k + 1),
              lambda F, par, c: c != 1 and v2(F.m) <= v2(par["k"]) and F.in_subfield(c, math.gcd(F.m, par["k"]))),
    FamilyRow("R17", "2", "2^k+1", "v2(m) <= v2(k), k >= 2, 1 != c in GF(2^gcd(m,k))", 1, "literature",
              _with_k(lambda p, m, k: 2**k + 1, lambda p, m: range(2, m + 1)),
              lambda F, par, c: c != 1 and v2(F.m) <= v2(par["k"]) and F.in_subfield(c, math.gcd(F.m, par["k"]))),
    FamilyRow("R18", "3", "(3^k+1)/2", "c = -1, k odd, gcd(k,m) = 1", 2, "literature",
              _with_k(lambda p, m, k: (3**k + 1) // 2),
              lambda F, par, c: c == F.minus_one and par["k"] % 2 == 1 and math.gcd(par["k"], F.m) == 1),
    FamilyRow("R19", "3", "odd d, d(3^k+1)/2 = (3^m+1)/2 mod 3^m-1", "c = -1, k and m odd, gcd(m,k) = 1", 1,
              "literature", _odd_congruence(3, lambda k, m: k % 2 == 1 and m % 2 == 1 and math.gcd(m, k) == 1),
              lambda F, par, c: c == F.minus_one),
    FamilyRow("R20", "5", "odd d, d(5^k+1)/2 = (5^m+1)/2 mod 5^m-1", "c = -1, gcd(2m,k) = 1", 1,
              "literature", _odd_congruence(5, lambda k, m: math.gcd(2 * m, k) == 1),
              lambda F, par, c: c == F.minus_one),
)


def row_instances(F: FieldSpec, row: FamilyRow):
    """(d_reduced, params) pairs of ``row`` over ``F``; empty if the row does not apply."""
    if not row.char_ok(F.p):
        return []
    n = F.order - 1
    seen = []
    for d, par in row.exponents(F.p, F.m):
        if d < 1:
            continue
        seen.append(((d - 1) % n + 1, par))
    return seen


def _prediction(row: FamilyRow, F: FieldSpec, par: dict, d: int, c: int) -> Prediction:
    if row.uniformity == 1:
        claim = {"kind": "pcn"}
    elif row.uniformity == 2:
        claim = {"kind": "apcn"}
    else:
        claim = {"kind": "uniformity", "value": row.uniformity}
    return Prediction(
        f"table-{row.row_id}", True, f"matches d = {row.pattern} with {row.condition}",
        row.citation(), claim, {"p": F.p, "m": F.m, "d": d, "c": c, **par},
    )


def known_families_lookup(F: FieldSpec, d: int, c: int) -> list[Prediction]:
    """Every row whose exponent pattern and c-condition match ``(d, c)`` over ``F``."""
    n = F.order - 1
    dr = (d - 1) % n + 1
    out = []
    for row in ROWS:
        for d_row, par in row_instances(F, row):
            if d_row == dr and row.admits(F, par, c):
                out.append(_prediction(row, F, par, d, c))
                break
    return out
