"""Matrix models of the simple modules X_s and the projective modules P_s.

Matrices act on column vectors: column j holds the image of basis vector j.
P_s uses the fixed basis order (b_0..b_{s-1}, x_0..x_{p-s-1}, y_0..y_{p-s-1}, a_0..a_{s-1}).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .cyclotomic import CycNum, ParameterError, field, q_int
from .idempotents import Sign
from .linalg import Matrix, rank

__all__ = [
    "Representation",
    "RelationReport",
    "simple_module",
    "projective_module",
    "check_relations",
    "casimir_matrix",
    "highest_weight_dimension",
]


@dataclass
class Representation:
    p: int
    dim: int
    mat_E: Matrix
    mat_F: Matrix
    mat_K: Matrix
    labels: list = dc_field(default_factory=list)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def to_json(self):
        return {
            "p": self.p,
            "dim": self.dim,
            "labels": list(self.labels),
            "E": self.mat_E.to_json(),
            "F": self.mat_F.to_json(),
            "K": self.mat_K.to_json(),
        }


@dataclass
class RelationReport:
    ok: bool
    relation: str | None = None
    entry: tuple | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "all relations hold"
        return f"relation {self.relation} fails at entry {self.entry}"


def _signed(c: CycNum, sign: Sign) -> CycNum:
    return c if sign is Sign.PLUS else -c


def simple_module(s: int, sign, p: int) -> Representation:
    """X_s: basis a_0..a_{s-1}, K a_n = sigma q^(s-1-2n) a_n, E a_n = sigma [n][s-n] a_{n-1}, F a_n = a_{n+1}."""
    sign = Sign.parse(sign)
    if not (1 <= s <= p):
        raise ParameterError(f"s must lie in [1, {p}], got {s}")
    fld = field(p)
    E, F, K = Matrix.zeros(p, s, s), Matrix.zeros(p, s, s), Matrix.zeros(p, s, s)
    for n in range(s):
        K[n, n] = _signed(fld.zeta(s - 1 - 2 * n), sign)
        if n >= 1:
            E[n - 1, n] = _signed(q_int(n, p) * q_int(s - n, p), sign)
        if n + 1 < s:
            F[n + 1, n] = fld.one
    return Representation(p, s, E, F, K, [f"a_{n}" for n in range(s)])


def projective_module(s: int, sign, p: int) -> Representation:
    """P_s for 1 <= s <= p-1 (2p-dimensional)."""
    sign = Sign.parse(sign)
    if not (1 <= s <= p - 1):
        raise ParameterError(f"projective_module needs 1 <= s <= {p - 1}, got {s}; X_p is itself projective")
    fld = field(p)
    t = p - s
    labels = (
        [f"b_{n}" for n in range(s)]
        + [f"x_{k}" for k in range(t)]
        + [f"y_{k}" for k in range(t)]
        + [f"a_{n}" for n in range(s)]
    )
    idx = {lab: i for i, lab in enumerate(labels)}
    dim = 2 * p
    E, F, K = Matrix.zeros(p, dim, dim), Matrix.zeros(p, dim, dim), Matrix.zeros(p, dim, dim)

    def put(mat, src, dst, c):
        mat[idx[dst], idx[src]] = c

    for n in range(s):
        w = _signed(fld.zeta(s - 1 - 2 * n), sign)
        put(K, f"b_{n}", f"b_{n}", w)
        put(K, f"a_{n}", f"a_{n}", w)
        if n >= 1:
            c = _signed(q_int(n, p) * q_int(s - n, p), sign)
            put(E, f"b_{n}", f"b_{n - 1}", c)
            put(E, f"b_{n}", f"a_{n - 1}", fld.one)
            put(E, f"a_{n}", f"a_{n - 1}", c)
        else:
            put(E, "b_0", f"x_{t - 1}", fld.one)
        if n + 1 < s:
            put(F, f"b_{n}", f"b_{n + 1}", fld.one)
            put(F, f"a_{n}", f"a_{n + 1}", fld.one)
        else:
            put(F, f"b_{n}", "y_0", fld.one)
    for k in range(t):
        w = _signed(fld.zeta(t - 1 - 2 * k), -sign)
        put(K, f"x_{k}", f"x_{k}", w)
        put(K, f"y_{k}", f"y_{k}", w)
        if k >= 1:
            c = _signed(q_int(k, p) * q_int(t - k, p), -sign)
            put(E, f"x_{k}", f"x_{k - 1}", c)
            put(E, f"y_{k}", f"y_{k - 1}", c)
        else:
            put(E, "y_0", f"a_{s - 1}", fld.one)
        if k + 1 < t:
            put(F, f"x_{k}", f"x_{k + 1}", fld.one)
            put(F, f"y_{k}", f"y_{k + 1}", fld.one)
        else:
            put(F, f"x_{k}", "a_0", fld.one)
    return Representation(p, dim, E, F, K, labels)


def _first_mismatch(lhs: Matrix, rhs: Matrix):
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            if lhs[i, j] != rhs[i, j]:
                return (i, j)
    return None


def check_relations(r: Representation) -> RelationReport:
    """Check the defining relations as exact matrix identities."""
    p = r.p
    fld = field(p)
    q = fld.zeta(1)
    E, F, K = r.mat_E, r.mat_F, r.mat_K
    n = r.dim
    zero = Matrix.zeros(p, n, n)
    ident = Matrix.identity(p, n)
    Kinv = K ** (2 * p - 1)
    checks = [
        ("E^p = 0", lambda: (E ** p, zero)),
        ("F^p = 0", lambda: (F ** p, zero)),
        ("K^2p = 1", lambda: (K ** (2 * p), ident)),
        ("K E K^-1 = q^2 E", lambda: (K @ E, (E @ K).scale(q * q))),
        ("K F K^-1 = q^-2 F", lambda: (K @ F, (F @ K).scale(fld.zeta(-2)))),
        ("[E, F] = (K - K^-1)/(q - q^-1)", lambda: (E @ F - F @ E, (K - Kinv).scale((q - fld.zeta(-1)).inverse()))),
    ]
    for name, thunk in checks:
        lhs, rhs = thunk()
        bad = _first_mismatch(lhs, rhs)
        if bad is not None:
            return RelationReport(False, name, bad)
    return RelationReport(True)


def casimir_matrix(r: Representation) -> Matrix:
    """EF + (q^-1 K + q K^-1)/(q - q^-1)^2 acting on the module."""
    fld = field(r.p)
    q, qi = fld.zeta(1), fld.zeta(-1)
    Kinv = r.mat_K ** (2 * r.p - 1)
    d = (q - qi) * (q - qi)
    return r.mat_E @ r.mat_F + (r.mat_K.scale(qi) + Kinv.scale(q)).scale(d.inverse())


def highest_weight_dimension(r: Representation, weight: CycNum) -> int:
    """dim of {v : K v = weight v, E v = 0}; K must be diagonal in the chosen basis."""
    cols = [j for j in range(r.dim) if r.mat_K[j, j] == weight]
    if any(r.mat_K[i, j] for i in range(r.dim) for j in range(r.dim) if i != j):
        raise ParameterError("K is not diagonal in this basis")
    if not cols:
        return 0
    sub = Matrix.from_rows(r.p, [[r.mat_E[i, j] for j in cols] for i in range(r.dim)], len(cols))
    return len(cols) - rank(sub)
