"""A first look at the algebra: exact cyclotomic numbers and PBW normal forms.

Run with ``python demos/01_field_and_pbw.py``.
"""

from uqsl2 import algebra, commutator, field, minimal_polynomial, q_int

p = 3
F = field(p)
q = F.zeta(1)

# %% The coefficient field Q(zeta_6): q^2 reduces modulo Phi_6 = x^2 - x + 1.
print("q^2 =", q * q)
print("1/q =", q.inverse())
print("quantum integers:", [str(q_int(n, p)) for n in range(p + 1)])

# %% The algebra has dimension 2p^3; products land in the basis E^a F^b K^c.
A = algebra(p)
E, Fg, K = A.E, A.F, A.K
print(f"dim = {A.dim}")
print("F*E =", Fg * E)
print("[E, F] =", commutator(E, Fg))
print("E^p =", E ** p, "  K^2p =", K ** (2 * p))

# %% K generates a commutative subalgebra; its minimal polynomial is t^2p - 1.
print("minimal polynomial of K:", minimal_polynomial(K))
