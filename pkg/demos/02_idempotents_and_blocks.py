"""Primitive idempotents, projective covers and the Casimir block decomposition.

Run with ``python demos/02_idempotents_and_blocks.py``.
"""

from uqsl2 import (
    Sign,
    block_dimension,
    block_projectors,
    casimir,
    check_relations,
    left_ideal_dimension,
    minimal_polynomial,
    primitive_idempotent,
    projective_module,
)

p = 3

# %% Each e_s^sign squares to itself; the left ideal it cuts out is a projective module.
for s in range(1, p + 1):
    for sign in Sign:
        e = primitive_idempotent(s, sign, p)
        print(f"e_{s}^{sign}: {len(e.terms):3d} terms, dim A e = {left_ideal_dimension(e)}")

print("e_1^+ at p=2:", primitive_idempotent(1, "+", 2).factored_str())

# %% The same projective modules as explicit matrices.
P = projective_module(1, "+", p)
print("P_1^+ basis:", P.labels, "->", check_relations(P))

# %% The Casimir element splits the algebra into p + 1 blocks.
C = casimir(p)
print("minimal polynomial of C:", minimal_polynomial(C))
bp = block_projectors(p)
print("block dimensions:", [block_dimension(p, s) for s in range(p + 1)])
for s in range(1, p):
    inside = bp[s] * primitive_idempotent(s, "+", p) == primitive_idempotent(s, "+", p)
    print(f"e_{s}^+ lies in Q_{s}: {inside}")
