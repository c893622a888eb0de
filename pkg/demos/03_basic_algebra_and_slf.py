"""Multiplication tables of the basic blocks and the count of symmetric linear functions.

Symmetric linear functions on an algebra A are dual to A/[A, A].  The count can
be done block by block on 8-dimensional basic algebras, or by brute force over
all 2p^3 basis monomials; both give 3p - 1.

Run with ``python demos/03_basic_algebra_and_slf.py``.
"""

import time

from uqsl2 import commutator_table, full_algebra_slf, mult_table, slf_blocks, slf_total
from uqsl2.basic import LABELS, NON_A_LABELS

p, s = 3, 1

# %% Products of the eight basis vectors of the block B_s.
table = mult_table(p, s).as_labels()
print("x*y".ljust(5) + "".join(lab.ljust(5) for lab in LABELS))
for x in LABELS:
    print(x.ljust(5) + "".join((table[(x, y)] or "0").ljust(5) for y in LABELS))

# %% Commutators span a 5-dimensional subspace, leaving a 3-dimensional quotient.
ct = commutator_table(p, s).restrict(NON_A_LABELS)
print("[Y0+, X0-] =", {k: str(v) for k, v in ct.entry("Y0+", "X0-").items()})
print("block quotient dimensions:", slf_blocks(p))

# %% Summing over the blocks, then checking against the whole algebra.
for q in range(2, 6):
    print(f"p={q}: slf_total = {slf_total(q)}  (3p-1 = {3 * q - 1})")
start = time.perf_counter()
print("brute force over all monomials at p=3:", full_algebra_slf(3), f"({time.perf_counter() - start:.2f}s)")
