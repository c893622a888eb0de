"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

All comparisons are exact identities in Q(zeta_2p); there is no tolerance anywhere.
Run directly (``python tests/test_acceptance.py``) for just the summary lines.
"""

import subprocess
import sys
import time
from functools import lru_cache

import pytest

from uqsl2.algebra import algebra
from uqsl2.basic import full_algebra_slf, slf_blocks, slf_total
from uqsl2.verify import bracket_identities, relation_identities, run_verify

PS = (2, 3, 4, 5)


@lru_cache(maxsize=None)
def report(p):
    return run_verify(p, "fast")


def claims(p, *prefixes):
    return [c for c in report(p).checks if c.claim.startswith(prefixes)]


# filled as the criteria run; conftest prints these lines in the terminal summary
CRITERION_LINES = []


def summarize(number, title, ok, detail):
    line = f"CRITERION {number} [{title}]: {'PASS' if ok else 'FAIL'}  {detail}"
    CRITERION_LINES.append(line)
    print(line)
    return ok


def check_claims(number, title, prefixes, expected_count=None, extra="", more_failures=()):
    failures, total, counts_ok = list(more_failures), 0, not more_failures
    for p in PS:
        got = claims(p, *prefixes)
        total += len(got)
        failures += [f"p={p}:{c.claim}" for c in got if c.status != "pass"]
        if not got or (expected_count and len(got) != expected_count(p)):
            counts_ok = False
            failures.append(f"p={p}: {len(got)} checks found")
    ok = not failures and counts_ok
    detail = f"{total} exact checks in the verify reports for p={PS[0]}..{PS[-1]}"
    if extra:
        detail += f" ({extra})"
    if failures:
        detail += "; failing: " + ", ".join(failures[:5])
    return summarize(number, title, ok, detail), failures


def test_criterion_1_relations():
    # evaluated directly so the per-p runtime is measured on its own
    bad, timings, total = [], [], 0
    for p in PS:
        start = time.perf_counter()
        triples = list(relation_identities(p)) + list(bracket_identities(p))
        bad += [f"p={p}:{name}" for name, lhs, rhs in triples if lhs != rhs]
        timings.append(f"p={p} {time.perf_counter() - start:.2f}s")
        total += len(triples)
        if len(triples) != 6 + 4 * (p - 1):
            bad.append(f"p={p}: {len(triples)} identities")
    ok, failures = check_claims(
        1, "defining relations and bracket identities", ("relations.", "lemma3.2."),
        expected_count=lambda p: 6 + 4 * (p - 1), extra=f"direct: {total} identities, " + ", ".join(timings),
        more_failures=bad,
    )
    assert ok, failures


def test_criterion_2_idempotents():
    ok, failures = check_claims(
        2, "idempotency and left ideal dimensions",
        ("prop3.5.idempotent", "prop3.8.idempotent", "prop3.5.left_ideal_dim", "prop3.7.left_ideal_dim"),
        expected_count=lambda p: 4 * p,
    )
    assert ok, failures


def test_criterion_3_internal_identities():
    prefixes = ("eq3.7.", "eq3.14.", "eq3.17.", "eq3.18.", "eq3.19.", "lemma3.3.", "lemma3.6.", "prop3.7.action.", "remark3.4.")
    ok, failures = check_claims(
        3, "internal identities and the projective action inside the algebra", prefixes,
        # two families for every s <= p, seven more for s < p, each for both signs
        expected_count=lambda p: 2 * (2 * p + 7 * (p - 1)),
    )
    assert ok, failures


def test_criterion_4_casimir():
    prefixes = ("prop3.10.", "eq3.20.", "sec3.3.block_membership", "sec3.3.casimir")
    ok, failures = check_claims(
        4, "Casimir minimal polynomial and block projectors", prefixes,
        # 2 polynomial + 3 projector + 2 casimir-form checks, 2p memberships,
        # 2p scalars on simple modules, 2p on a_0 and 2(p-1) on e_s
        expected_count=lambda p: 7 + 3 * (2 * p) + 2 * (p - 1),
    )
    assert ok, failures


def test_criterion_5_tables():
    ok, failures = check_claims(
        5, "product table (64 cells) and commutator table (36 cells plus A central)", ("table1.", "table2."),
        expected_count=lambda p: (64 + 36 + 1) * (p - 1),
    )
    assert ok, failures


def test_criterion_6_slf_dimensions():
    start = time.perf_counter()
    bad = []
    for p in PS:
        bad += [c.claim for c in claims(p, "prop4.4.slf", "thm4.5.") if c.status != "pass"]
        blocks = slf_blocks(p)
        if blocks != {s: (1 if s in (0, p) else 3) for s in range(p + 1)}:
            bad.append(f"blocks p={p}: {blocks}")
    totals = {p: slf_total(p) for p in range(2, 8)}
    expected = {2: 5, 3: 8, 4: 11, 5: 14, 6: 17, 7: 20}
    if totals != expected:
        bad.append(f"totals {totals}")
    ok = summarize(
        6, "symmetric linear function dimensions", not bad,
        f"slf_total(2..7) = {[totals[p] for p in range(2, 8)]} in {time.perf_counter() - start:.1f}s",
    )
    assert ok, bad


def test_criterion_7_full_algebra_cross_check():
    rows, bad = [], []
    for p, dim in ((2, 16), (3, 54), (4, 128)):
        start = time.perf_counter()
        brute = full_algebra_slf(p)
        elapsed = time.perf_counter() - start
        rows.append(f"p={p}: dim {algebra(p).dim}, brute force {brute} ({elapsed:.2f}s)")
        if algebra(p).dim != dim or brute != slf_total(p) or brute != 3 * p - 1:
            bad.append(p)
    ok = summarize(7, "brute-force commutator quotient equals block sum", not bad, "; ".join(rows))
    assert ok, bad


def test_criterion_8_determinism():
    cmd = [sys.executable, "-m", "uqsl2", "verify", "--p", "3", "--level", "full"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    ok = (
        first.returncode == 0
        and second.returncode == 0
        and first.stdout == second.stdout
        and b"FAIL" not in first.stdout
        and b"slf_total = 8" in first.stdout
    )
    detail = f"exit codes {first.returncode}/{second.returncode}, {len(first.stdout)} bytes, identical={first.stdout == second.stdout}"
    assert summarize(8, "deterministic verify report", ok, detail), first.stderr.decode()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
