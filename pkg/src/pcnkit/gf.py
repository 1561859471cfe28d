"""Table-driven arithmetic in GF(p^m).

Elements are integer codes in ``[0, p^m)``. A code is read base-p,
little-endian, as the coefficient vector of a polynomial in the root
``x`` of the field modulus, so code ``p`` is ``x`` itself whenever
``m >= 2``.

The modulus is the first monic degree-m polynomial (ordered by the value
of its low coefficients read as a base-p code) whose root has order
``p^m - 1``. That makes every element encoding reproducible across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime

DEFAULT_SIZE_CAP = 1 << 22

# numbers of rows pushed through one digit matmul while filling exp tables
_CHUNK = 1 << 16


class FieldError(ValueError):
    """Invalid field parameters or element codes."""


class SizeCapExceeded(FieldError):
    """Requested field is larger than the configured size cap."""


def v2(n: int) -> int | float:
    """2-adic valuation of ``n``; ``math.inf`` for ``n == 0``."""
    if n < 0:
        raise ValueError("v2 is defined on non-negative integers")
    if n == 0:
        return math.inf
    return (n & -n).bit_length() - 1


def gcd_pk1(p: int, k: int, m: int) -> int:
    """gcd(p^k + 1, p^m - 1) by its closed form, checked against Euclid."""
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    if p == 2:
        value = (2 ** math.gcd(2 * k, m) - 1) // (2 ** math.gcd(k, m) - 1)
    elif v2(m) <= v2(k):
        value = 2
    else:
        value = p ** math.gcd(k, m) + 1
    direct = math.gcd(p**k + 1, p**m - 1)
    assert value == direct, (p, k, m, value, direct)
    return value


def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = list(factorint(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in factors):
            return g
    raise AssertionError(f"no primitive root mod {p}")


def _companion(coeffs: tuple[int, ...], p: int) -> np.ndarray:
    """Matrix of multiplication by the modulus root, acting on digit columns."""
    m = len(coeffs) - 1
    M = np.zeros((m, m), dtype=np.int64)
    for j in range(m - 1):
        M[j + 1, j] = 1
    for i in range(m):
        M[i, m - 1] = (-coeffs[i]) % p
    return M


def _matpow(M: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(M.shape[0], dtype=np.int64)
    base = M.copy()
    while e:
        if e & 1:
            result = result @ base % p
        base = base @ base % p
        e >>= 1
    return result


def _root_is_primitive(coeffs: tuple[int, ...], p: int, order: int, factors) -> bool:
    # x has order exactly p^m - 1 only if every nonzero residue is a unit,
    # so this test also certifies irreducibility
    M = _companion(coeffs, p)
    m = M.shape[0]
    one = np.zeros(m, dtype=np.int64)
    one[0] = 1
    if not np.array_equal(_matpow(M, order, p)[:, 0], one):
        return False
    return all(not np.array_equal(_matpow(M, order // r, p)[:, 0], one) for r in factors)


def find_modulus(p: int, m: int) -> tuple[int, ...]:
    """Little-endian coefficients (leading 1 included) of the canonical modulus."""
    if m == 1:
        g = smallest_primitive_root(p)
        return ((-g) % p, 1)
    order = p**m - 1
    factors = list(factorint(order))
    for value in range(1, p**m):
        low = tuple((value // p**i) % p for i in range(m))
        if low[0] == 0:
            continue
        coeffs = low + (1,)
        if _root_is_primitive(coeffs, p, order, factors):
            return coeffs
    raise AssertionError(f"no primitive polynomial of degree {m} over GF({p})")


def _exp_table(coeffs: tuple[int, ...], p: int) -> np.ndarray:
    """Codes of g^0, g^1, ..., g^(q-2), built by doubling with digit matrices."""
    m = len(coeffs) - 1
    n = p**m - 1
    weights = p ** np.arange(m, dtype=np.int64)
    digits = np.zeros((n, m), dtype=np.int64)
    digits[0, 0] = 1
    step = _companion(coeffs, p)  # multiplication by g^filled
    filled = 1
    while filled < n:
        take = min(filled, n - filled)
        for lo in range(0, take, _CHUNK):
            hi = min(lo + _CHUNK, take)
            digits[filled + lo:filled + hi] = digits[lo:hi] @ step.T % p
        filled += take
        step = step @ step % p
    return digits @ weights


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """A concrete GF(p^m): modulus, generator and discrete-log tables.

    Arithmetic methods accept Python ints or integer numpy arrays and
    return the same kind.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    exp_table: np.ndarray
    log_table: np.ndarray

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def generator(self) -> int:
        return int(self.exp_table[1 % len(self.exp_table)])

    @property
    def minus_one(self) -> int:
        return self.p - 1 if self.p != 2 else 1

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={self.modulus})"

    def header(self) -> dict:
        """JSON-ready description of this realization."""
        return {
            "p": self.p,
            "m": self.m,
            "order": self.order,
            "modulus": list(self.modulus),
            "generator": self.generator,
        }

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def check(self, x) -> None:
        arr = np.asarray(x)
        if arr.size and (arr.min() < 0 or arr.max() >= self.order):
            raise FieldError(f"element code out of range for GF({self.p}^{self.m})")

    def const(self, t: int) -> int:
        """Code of the integer ``t`` embedded in the prime subfield."""
        return t % self.p

    def add(self, x, y):
        if self.p == 2:
            return x ^ y
        if self.m == 1:
            return (x + y) % self.p
        p = self.p
        out = 0
        weight = 1
        for _ in range(self.m):
            out = out + ((x // weight + y // weight) % p) * weight
            weight *= p
        return out

    def neg(self, x):
        if self.p == 2:
            return x
        p = self.p
        out = 0
        weight = 1
        for _ in range(self.m):
            out = out + ((-(x // weight)) % p) * weight
            weight *= p
        return out

    def sub(self, x, y):
        if self.p == 2:
            return x ^ y
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if isinstance(x, (int, np.integer)) and isinstance(y, (int, np.integer)):
            if x == 0 or y == 0:
                return 0
            i = (int(self.log_table[x]) + int(self.log_table[y])) % (self.order - 1)
            return int(self.exp_table[i])
        x = np.asarray(x)
        y = np.asarray(y)
        r = self.exp_table[(self.log_table[x] + self.log_table[y]) % (self.order - 1)]
        return np.where((x == 0) | (y == 0), 0, r)

    def inv(self, x):
        if np.any(np.asarray(x) == 0):
            raise ZeroDivisionError("0 has no inverse")
        n = self.order - 1
        if isinstance(x, (int, np.integer)):
            return int(self.exp_table[(-int(self.log_table[x])) % n])
        return self.exp_table[(-self.log_table[np.asarray(x)]) % n]

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def pow(self, x, d: int):
        if d < 0:
            raise ValueError("exponent must be non-negative")
        n = self.order - 1
        e = d % n
        if isinstance(x, (int, np.integer)):
            if x == 0:
                return 1 if d == 0 else 0
            return int(self.exp_table[int(self.log_table[x]) * e % n])
        x = np.asarray(x)
        r = self.exp_table[self.log_table[x] * e % n]
        return np.where(x == 0, 1 if d == 0 else 0, r)

    def power_table(self, d: int) -> np.ndarray:
        """``x^d`` for every code ``x``."""
        return self.pow(self.elements(), d)

    def quadratic_character(self, x):
        """eta(x) in {-1, 0, 1}; odd characteristic only."""
        if self.p == 2:
            raise FieldError("quadratic character needs odd p")
        n = self.order - 1
        if isinstance(x, (int, np.integer)):
            if x == 0:
                return 0
            return 1 if int(self.log_table[x]) % 2 == 0 else -1
        x = np.asarray(x)
        return np.where(x == 0, 0, np.where(self.log_table[x] % 2 == 0, 1, -1))

    def frobenius(self, x, h: int = 1):
        return self.pow(x, self.p**h)

    def in_subfield(self, x, g: int) -> bool:
        """Fixed-point test ``x^(p^g) == x``, i.e. ``x`` lies in GF(p^g)."""
        return self.pow(x, self.p**g) == x

    def subfield(self, g: int) -> np.ndarray:
        elems = self.elements()
        return elems[self.pow(elems, self.p**g) == elems]

    def trace(self, x) -> int:
        """Absolute trace to GF(p), returned as an integer in [0, p)."""
        total = 0
        y = x
        for _ in range(self.m):
            total = self.add(total, y)
            y = self.pow(y, self.p)
        assert total < self.p
        return total

    def parse(self, token: str) -> int:
        """Element from a user token: ``-1``, ``g^e``, or a bare code."""
        token = token.strip()
        if token == "-1":
            return self.minus_one
        if token.startswith("g^"):
            e = int(token[2:])
            if e < 0:
                raise FieldError("generator exponent must be non-negative")
            return int(self.exp_table[e % (self.order - 1)])
        code = int(token)
        if not 0 <= code < self.order:
            raise FieldError(f"element code {code} out of range [0, {self.order})")
        return code


def build_field(p: int, m: int, cap: int = DEFAULT_SIZE_CAP) -> FieldSpec:
    """Build the canonical realization of GF(p^m)."""
    if not isinstance(p, int) or not isprime(p):
        raise FieldError(f"p={p} is not prime")
    if m < 1:
        raise FieldError("m must be >= 1")
    if p**m > cap:
        raise SizeCapExceeded(f"{p}^{m} = {p**m} exceeds size cap {cap}")
    return _build(p, m)


@lru_cache(maxsize=64)
def _build(p: int, m: int) -> FieldSpec:
    coeffs = find_modulus(p, m)
    exp = _exp_table(coeffs, p)
    q = p**m
    log = np.zeros(q, dtype=np.int64)
    log[exp] = np.arange(q - 1, dtype=np.int64)
    if len(np.unique(exp)) != q - 1 or exp[0] != 1:
        raise AssertionError(f"exp table for GF({p}^{m}) is not a bijection")
    exp.setflags(write=False)
    log.setflags(write=False)
    return FieldSpec(p, m, coeffs, exp, log)


def prime_powers(limit: int, min_order: int = 2):
    """All (p, m) with ``min_order <= p^m <= limit``, ordered by p^m."""
    out = []
    for p in range(2, limit + 1):
        if not isprime(p):
            continue
        q, m = p, 1
        while q <= limit:
            if q >= min_order:
                out.append((q, p, m))
            q *= p
            m += 1
    return [(p, m) for _, p, m in sorted(out)]
