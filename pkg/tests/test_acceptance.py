"""Acceptance criteria, one test each, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` to see the lines, or
``python3 tests/test_acceptance.py`` for the summary alone. Set
``PCNKIT_EXTENDED=1`` to add the m = 9, 10 conjecture runs.
"""

from __future__ import annotations

import math
import os
import subprocess
import sys
import time

import numpy as np
import pytest

from pcnkit.cdiff import c_spectrum, c_uniformity, c_uniformity_all_a, uniformity_all_c
from pcnkit.gf import build_field, prime_powers
from pcnkit.oracle import bluher_counts, conjecture_check, system_counts
from pcnkit.suites import duality_mismatches, gold_mismatches, spectrum_cases, spectrum_cs
from pcnkit.theorems import QUOTED_U_M6, solve_congruence

RESULTS: dict[str, tuple[bool, str]] = {}


def record(name: str, ok: bool, detail: str) -> bool:
    RESULTS[name] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return ok


def criterion_1():
    cases = [(3, 5, 61), (7, 3, 43), (11, 3, 111), (5, 5, 3645), (13, 3, 157)]
    parts, ok = [], True
    for p, m, d in cases:
        t = time.perf_counter()
        F = build_field(p, m)
        u = c_uniformity(F, d, F.minus_one).uniformity
        dt = time.perf_counter() - t
        ok &= u == 1 and dt < 1.0
        parts.append(f"({p},{m},{d}) u={u} {dt:.3f}s")
    return record("1 example regression", ok, "; ".join(parts))


def criterion_2():
    t = time.perf_counter()
    F = build_field(17, 3)
    u111 = c_uniformity(F, 111, F.minus_one).uniformity
    u273 = c_uniformity(F, 273, F.minus_one).uniformity
    dt = time.perf_counter() - t
    in_t2 = 273 in solve_congruence(17, 3, 1, "T2").solutions
    ok = u273 == 1 and in_t2 and dt < 30
    return record("2 p=17 anomaly", ok, f"x^273 u={u273} (T2 solution: {in_t2}); x^111 u={u111} recorded; {dt:.2f}s")


def criterion_3():
    t = time.perf_counter()
    cases, bad = 0, []
    for m in range(2, 9):
        n, b = gold_mismatches(m)
        cases += n
        bad += b
    dt = time.perf_counter() - t
    return record("3 Gold equivalence p=2, m in [2,8]", not bad and dt < 120,
                  f"{cases} cases, {len(bad)} mismatches, {dt:.2f}s")


def criterion_4(ms=range(2, 9)):
    parts, ok = [], True
    for m in ms:
        r = conjecture_check(m)
        ok &= not r.scan_not_predicted and not r.predicted_not_scan and r.c0_matches_permutations
        parts.append(f"m={m}:{'empty' if r.holds else 'DIFF'}")
        if m == 6:
            agreed = set(r.agreed_exponents())
            noted = any("missing from U: [5]" in n for n in r.notes)
            ok &= agreed == set(QUOTED_U_M6) | {5} and noted
            parts.append(f"m=6 agreed=U+{sorted(agreed - QUOTED_U_M6)} noted={noted}")
    return record(f"4 conjecture diffs m in [{min(ms)},{max(ms)}]", ok, " ".join(parts))


def criterion_5():
    parts, ok = [], True
    for p, m, k, label, omega in spectrum_cases():
        F = build_field(p, m)
        cs = spectrum_cs(F, k, label)
        got = {tuple(c_spectrum(F, p**k + 1, c).omega) for c in cs}
        ok &= got == {tuple(omega)}
        parts.append(f"({p},{m},{k},{label}) -> {sorted(got)}")
    return record("5 APcN spectra", ok, "; ".join(parts))


def criterion_6():
    F27, F81 = build_field(3, 3), build_field(3, 4)
    u27 = c_uniformity(F27, 2, F27.minus_one).uniformity
    u81 = c_uniformity(F81, 2, F81.minus_one).uniformity
    ok = u27 == 1 and u81 == 2
    return record("6 half-Gold both branches", ok, f"(3,3,1) u={u27} (needs 1); (3,4,1) u={u81} (needs 2)")


def criterion_7():
    parts, ok = [], True
    for p, k, m in [(3, 1, 2), (3, 1, 4), (5, 1, 2)]:
        r = bluher_counts(build_field(p, m), k)
        good = r.case == "h even" and all(r.agrees.values()) and not r.non_integral
        ok &= good
        parts.append(f"({p},{k},{m}) {r.counts_bruteforce} {'exact' if good else 'MISMATCH'}")
    r = bluher_counts(build_field(3, 3), 1)
    good = r.sum_ok and r.weighted_sum_ok and r.non_integral == [r.Q + 1]
    ok &= good
    parts.append(f"(3,1,3) sums ok={r.sum_ok and r.weighted_sum_ok} flagged N_{r.Q + 1}="
                 f"{r.to_json()['counts_formula'][str(r.Q + 1)]} measured {r.counts_bruteforce[r.Q + 1]}")
    return record("7 Bluher", ok, "; ".join(parts))


def criterion_8():
    F = build_field(3, 3)
    r = system_counts(F, 1)
    vals = {v for row in r.counts.values() for v in row}
    ok = len(r.counts) == 27 and not r.violations and vals <= {0, 4}
    return record("8 systems on GF(27), k=1", ok, f"{len(r.counts)} b values, counts {sorted(vals)}, "
                  f"{len(r.violations)} violations")


def criterion_9():
    parts, ok = [], True
    t = time.perf_counter()
    # spectrum sum identities (Spectrum also asserts them on construction)
    n_spec = 0
    for p, m in prime_powers(81):
        F = build_field(p, m)
        for d in range(1, F.order):
            for c in range(F.order):
                s = c_spectrum(F, d, c)
                ok &= sum(s.omega) == F.order == sum(i * w for i, w in enumerate(s.omega))
                n_spec += 1
    parts.append(f"spectra {n_spec}")
    # a = 1 reduction against the full definition
    n_a = 0
    for p, m in prime_powers(27):
        F = build_field(p, m)
        for d in range(1, F.order):
            fast = uniformity_all_c(F, d)
            for c in range(F.order):
                ok &= int(fast[c]) == c_uniformity_all_a(F, d, c)
                n_a += 1
    parts.append(f"all-a {n_a}")
    # Frobenius twist
    n_t = 0
    for p, m in prime_powers(256):
        if m == 1:
            continue
        F = build_field(p, m)
        cs = F.elements()
        for d in range(1, F.order):
            u = uniformity_all_c(F, d)
            for h in range(1, m):
                ok &= np.array_equal(uniformity_all_c(F, d * p**h), u)
                ok &= np.array_equal(u[F.frobenius(cs, h)], u)
                n_t += 1
    parts.append(f"twist {n_t}")
    # duality
    n_d = 0
    for p, m in prime_powers(243):
        cases, bad = duality_mismatches(build_field(p, m))
        ok &= not bad
        n_d += cases
    parts.append(f"duality {n_d}")
    parts.append(f"{time.perf_counter() - t:.1f}s")
    return record("9 property suites", ok, ", ".join(parts))


DETERMINISM_CMDS = [
    ["uniformity", "-p", "13", "-m", "3", "-d", "157", "-c", "-1"],
    ["spectrum", "-p", "3", "-m", "4", "-d", "10", "-c", "g^5"],
    ["scan", "-p", "5", "-m", "2"],
    ["scan", "-p", "2", "-m", "6", "--conjecture"],
    ["verify", "bluher"],
    ["solve", "-p", "3", "-m", "5", "-k", "1"],
]


def criterion_10():
    ok = True
    for argv in DETERMINISM_CMDS:
        outs = {
            subprocess.run([sys.executable, "-m", "pcnkit", *argv, "--workers", w],
                           capture_output=True, check=True).stdout
            for w in ("1", "1", "2", "4")
        }
        ok &= len(outs) == 1
    return record("10 determinism", ok, f"{len(DETERMINISM_CMDS)} commands x 4 runs (workers 1,1,2,4)")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("fn", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_criterion(fn):
    assert fn()


@pytest.mark.skipif(not os.environ.get("PCNKIT_EXTENDED"), reason="set PCNKIT_EXTENDED=1 for m = 9, 10")
def test_criterion_4_extended():
    assert criterion_4(range(9, 11))


if __name__ == "__main__":
    for fn in CRITERIA:
        fn()
    if os.environ.get("PCNKIT_EXTENDED"):
        criterion_4(range(9, 11))
    failed = [k for k, (ok, _) in RESULTS.items() if not ok]
    print(f"{len(RESULTS) - len(failed)}/{len(RESULTS)} criteria pass")
    sys.exit(1 if failed else 0)
