"""Exact c-differential counts, uniformity and spectra of power maps.

For ``F(x) = x^d`` the count of solutions of ``F(x + a) - c F(x) = b`` at
``a != 0`` equals the count at ``a = 1`` for a rescaled ``b``, and at
``a = 0`` (``c != 1``) it is ``gcd(d, p^m - 1)`` on the nonzero image.
Uniformity therefore needs one pass over ``x`` at ``a = 1`` plus the gcd
term. The all-``a`` path is kept for cross-checking.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .gf import FieldSpec

PCN = "PcN"
APCN = "APcN"
HIGHER = "higher"


@dataclass(frozen=True)
class PowerMap:
    d: int
    d_reduced: int
    gcd_d: int

    @classmethod
    def of(cls, F: FieldSpec, d: int) -> "PowerMap":
        if d < 1:
            raise ValueError("exponent d must be positive")
        n = F.order - 1
        return cls(d, (d - 1) % n + 1, math.gcd(d, n))


@dataclass(frozen=True)
class Spectrum:
    """``omega[i]`` = number of b hit exactly i times (at a = 1)."""

    order: int
    omega: tuple[int, ...]

    def __post_init__(self):
        assert sum(self.omega) == self.order, self.omega
        assert sum(i * w for i, w in enumerate(self.omega)) == self.order, self.omega

    def nonzero(self) -> dict[int, int]:
        return {i: w for i, w in enumerate(self.omega) if w}

    def to_json(self) -> dict:
        return {"omega": list(self.omega)}


@dataclass(frozen=True)
class UniformityReport:
    uniformity: int
    witness_b: int | None
    gcd_term: int | None
    classification: str
    branch: str
    counts_max: int = field(repr=False, default=0)

    def to_json(self) -> dict:
        return {
            "uniformity": self.uniformity,
            "witness_b": self.witness_b,
            "gcd_term": self.gcd_term,
            "classification": self.classification,
            "branch": self.branch,
        }


def classification_of(uniformity: int) -> str:
    if uniformity == 1:
        return PCN
    if uniformity == 2:
        return APCN
    return HIGHER


def _as_map(F: FieldSpec, P) -> PowerMap:
    return P if isinstance(P, PowerMap) else PowerMap.of(F, int(P))


def derivative(F: FieldSpec, P, c: int, a: int, xs: np.ndarray | None = None) -> np.ndarray:
    """Values of ``(x + a)^d - c x^d`` over ``xs`` (default: the whole field)."""
    P = _as_map(F, P)
    if xs is None:
        xs = F.elements()
    shifted = F.pow(F.add(xs, a), P.d)
    return F.sub(shifted, F.mul(c, F.pow(xs, P.d)))


def c_delta(F: FieldSpec, P, c: int, a: int, b: int) -> int:
    """Number of x with ``F(x + a) - c F(x) = b``, by full enumeration."""
    F.check([c, a, b])
    return int(np.count_nonzero(derivative(F, P, c, a) == b))


def counts_at(F: FieldSpec, P, c: int, a: int = 1, workers: int = 1) -> np.ndarray:
    """Histogram over b of the counts at fixed (c, a).

    With ``workers > 1`` the x-range is split into contiguous slices, each
    counted into its own buffer; the integer sum is schedule-independent.
    """
    F.check([c, a])
    P = _as_map(F, P)
    q = F.order
    if workers <= 1:
        return np.bincount(derivative(F, P, c, a), minlength=q)
    bounds = np.linspace(0, q, workers + 1).astype(np.int64)

    def part(i):
        xs = np.arange(bounds[i], bounds[i + 1], dtype=np.int64)
        return np.bincount(derivative(F, P, c, a, xs), minlength=q)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(part, range(workers)))
    return np.sum(parts, axis=0)


def c_uniformity(F: FieldSpec, P, c: int, workers: int = 1) -> UniformityReport:
    P = _as_map(F, P)
    counts = counts_at(F, P, c, 1, workers)
    top = int(counts.max())
    witness = int(np.argmax(counts))
    if c == 1:
        # a = 0 is excluded when c = 1
        return UniformityReport(top, witness, None, classification_of(top), "c=1: a!=0", top)
    u = max(top, P.gcd_d)
    return UniformityReport(
        u,
        witness if top == u else None,
        P.gcd_d,
        classification_of(u),
        "c!=1: max(a=1 counts, gcd(d, q-1))",
        top,
    )


def c_uniformity_all_a(F: FieldSpec, P, c: int) -> int:
    """Uniformity straight from the definition: maximum over every a."""
    P = _as_map(F, P)
    best = 0
    for a in range(F.order):
        if a == 0 and c == 1:
            continue
        best = max(best, int(np.bincount(derivative(F, P, c, a), minlength=F.order).max()))
    return best


def c_spectrum(F: FieldSpec, P, c: int, workers: int = 1) -> Spectrum:
    counts = counts_at(F, P, c, 1, workers)
    return Spectrum(F.order, tuple(int(w) for w in np.bincount(counts)))


def classify(F: FieldSpec, P, c: int) -> str:
    return c_uniformity(F, P, c).classification


def _derivative_rows(F: FieldSpec, P: PowerMap, cs: np.ndarray) -> np.ndarray:
    powers = F.power_table(P.d)
    plus_one = F.add(F.elements(), 1)
    shifted = powers[plus_one]
    return F.sub(shifted[None, :], F.mul(cs[:, None], powers[None, :]))


def max_counts_all_c(F: FieldSpec, P, cs: np.ndarray | None = None) -> np.ndarray:
    """``max_b count(1, b)`` for each c in ``cs`` (default: every element)."""
    P = _as_map(F, P)
    q = F.order
    if cs is None:
        cs = F.elements()
    cs = np.asarray(cs, dtype=np.int64)
    out = np.empty(len(cs), dtype=np.int64)
    rows = max(1, (1 << 20) // q)
    for lo in range(0, len(cs), rows):
        block = cs[lo:lo + rows]
        vals = _derivative_rows(F, P, block)
        flat = vals + (np.arange(len(block), dtype=np.int64) * q)[:, None]
        hist = np.bincount(flat.ravel(), minlength=len(block) * q)
        out[lo:lo + len(block)] = hist.reshape(len(block), q).max(axis=1)
    return out


def uniformity_all_c(F: FieldSpec, P, cs: np.ndarray | None = None) -> np.ndarray:
    """c-differential uniformity of ``x^d`` for each c in ``cs``."""
    P = _as_map(F, P)
    if cs is None:
        cs = F.elements()
    cs = np.asarray(cs, dtype=np.int64)
    tops = max_counts_all_c(F, P, cs)
    return np.where(cs == 1, tops, np.maximum(tops, P.gcd_d))
