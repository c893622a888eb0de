"""Verification suites: every structural claim replayed as an exact identity.

Each check has a stable claim id.  ``run_verify(p, level)`` collects them into
a :class:`VerifyReport`; the ``fast`` level covers the per-block checks and
``full`` adds the brute-force trace-space computation on the whole algebra.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from .algebra import algebra, commutator, element_to_sparse, normal_product
from .basic import (
    LABELS,
    NON_A_LABELS,
    REFERENCE_COMMUTATORS,
    REFERENCE_PRODUCTS,
    SLUGS,
    basic_basis,
    basic_idempotent,
    commutator_table,
    corner_dimension,
    full_algebra_slf,
    ideal_vectors,
    mult_table,
    slf_blocks,
)
from .center import (
    beta,
    block_projectors,
    casimir,
    casimir_alt,
    expected_casimir_polynomial,
    minimal_polynomial,
)
from .cyclotomic import ParameterError, field, q_int
from .idempotents import (
    Sign,
    a_vector,
    a_vector_closed_form,
    alpha,
    b0,
    b_vector,
    gamma_delta,
    left_ideal_dimension,
    primitive_idempotent,
    vs_element,
    x_vector,
    y_vector,
)
from .linalg import Matrix, RankAccumulator
from .representations import (
    casimir_matrix,
    check_relations,
    highest_weight_dimension,
    projective_module,
    simple_module,
)

__all__ = [
    "Check",
    "VerifyReport",
    "run_verify",
    "relation_identities",
    "bracket_identities",
    "projective_action_identities",
    "annihilation_identities",
    "weight_filter_identities",
    "LEVELS",
]

LEVELS = ("fast", "full")
PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    claim: str
    status: str
    detail: str = ""


@dataclass
class VerifyReport:
    p: int
    level: str
    checks: list = dc_field(default_factory=list)
    slf_total: int | None = None
    elapsed: float = 0.0

    @property
    def failed(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def add(self, claim: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(claim, PASS if ok else FAIL, detail))

    def skip(self, claim: str, detail: str) -> None:
        self.checks.append(Check(claim, SKIP, detail))

    def to_json(self) -> dict:
        # elapsed time is left out so that repeated runs are byte-identical
        return {
            "p": self.p,
            "level": self.level,
            "slf_total": self.slf_total,
            "passed": sum(c.status == PASS for c in self.checks),
            "failed": len(self.failed),
            "skipped": sum(c.status == SKIP for c in self.checks),
            "checks": [{"id": c.claim, "status": c.status, "detail": c.detail} for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"{c.status.upper():4}  {c.claim}" + (f"  {c.detail}" if c.detail else "") for c in self.checks]
        d = self.to_json()
        lines.append(
            f"p={self.p} level={self.level}: {len(self.checks)} checks, "
            f"{d['passed']} passed, {d['failed']} failed, {d['skipped']} skipped"
        )
        lines.append(f"slf_total = {self.slf_total}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# identity generators: (name, lhs, rhs) triples of algebra elements
# ---------------------------------------------------------------------------

def relation_identities(p: int):
    alg = algebra(p)
    E, F, K, Ki = alg.E, alg.F, alg.K, alg.Kinv
    q = alg.q
    yield "relations.Ep", E ** p, alg.zero()
    yield "relations.Fp", F ** p, alg.zero()
    yield "relations.K2p", K ** (2 * p), alg.one()
    yield "relations.KEKinv", K * E * Ki, E.scale(q * q)
    yield "relations.KFKinv", K * F * Ki, F.scale(alg.field.zeta(-2))
    yield "relations.EF", commutator(E, F), (K - Ki).scale(alg.inv_q_diff)


def bracket_identities(p: int):
    """[E, F^m] and [E^m, F] in both orderings, 1 <= m <= p-1."""
    alg = algebra(p)
    E, F, K, Ki = alg.E, alg.F, alg.K, alg.Kinv
    fld = alg.field
    for m in range(1, p):
        c = q_int(m, p) * alg.inv_q_diff
        up = K.scale(fld.zeta(m - 1)) - Ki.scale(fld.zeta(-(m - 1)))
        down = K.scale(fld.zeta(-(m - 1))) - Ki.scale(fld.zeta(m - 1))
        lhs = commutator(E, F ** m)
        yield f"lemma3.2.m{m}.E_Fm.left", lhs, (F ** (m - 1) * down).scale(c)
        yield f"lemma3.2.m{m}.E_Fm.right", lhs, (up * F ** (m - 1)).scale(c)
        lhs = commutator(E ** m, F)
        yield f"lemma3.2.m{m}.Em_F.left", lhs, (E ** (m - 1) * up).scale(c)
        yield f"lemma3.2.m{m}.Em_F.right", lhs, (down * E ** (m - 1)).scale(c)


def _signed(c, sign):
    return c if sign is Sign.PLUS else -c


def projective_action_identities(s: int, sign, p: int):
    """Action of E, F, K on the vectors b_n, x_k, y_k, a_n spanning P_s, inside the algebra."""
    sign = Sign.parse(sign)
    alg = algebra(p)
    fld = alg.field
    E, F, K = alg.E, alg.F, alg.K
    t = p - s
    b = [b_vector(s, n, sign, p) for n in range(s)]
    a = [a_vector(s, n, sign, p) for n in range(s)]
    x = [x_vector(s, k, sign, p) for k in range(t)]
    y = [y_vector(s, k, sign, p) for k in range(t)]
    zero = alg.zero()
    for n in range(s):
        w = _signed(fld.zeta(s - 1 - 2 * n), sign)
        yield f"K.b{n}", K * b[n], b[n].scale(w)
        yield f"K.a{n}", K * a[n], a[n].scale(w)
        c = _signed(q_int(n, p) * q_int(s - n, p), sign)
        if n >= 1:
            yield f"E.b{n}", E * b[n], b[n - 1].scale(c) + a[n - 1]
            yield f"E.a{n}", E * a[n], a[n - 1].scale(c)
        else:
            yield "E.b0", E * b[0], x[t - 1]
            yield "E.a0", E * a[0], zero
        yield f"F.b{n}", F * b[n], b[n + 1] if n + 1 < s else y[0]
        yield f"F.a{n}", F * a[n], a[n + 1] if n + 1 < s else zero
    for k in range(t):
        w = _signed(fld.zeta(t - 1 - 2 * k), -sign)
        yield f"K.x{k}", K * x[k], x[k].scale(w)
        yield f"K.y{k}", K * y[k], y[k].scale(w)
        c = _signed(q_int(k, p) * q_int(t - k, p), -sign)
        if k >= 1:
            yield f"E.x{k}", E * x[k], x[k - 1].scale(c)
            yield f"E.y{k}", E * y[k], y[k - 1].scale(c)
        else:
            yield "E.x0", E * x[0], zero
            yield "E.y0", E * y[0], a[s - 1]
        yield f"F.x{k}", F * x[k], x[k + 1] if k + 1 < t else a[0]
        yield f"F.y{k}", F * y[k], y[k + 1] if k + 1 < t else zero


def projective_vectors(s: int, sign, p: int):
    sign = Sign.parse(sign)
    t = p - s
    return (
        [b_vector(s, n, sign, p) for n in range(s)]
        + [x_vector(s, k, sign, p) for k in range(t)]
        + [y_vector(s, k, sign, p) for k in range(t)]
        + [a_vector(s, n, sign, p) for n in range(s)]
    )


def annihilation_identities(p: int, s: int):
    """Left action of e_s^+ and e_{p-s}^- on the ideal bases: which vectors die, which survive."""
    plus = ideal_vectors(p, s, Sign.PLUS)
    minus = ideal_vectors(p, s, Sign.MINUS)
    ep = primitive_idempotent(s, Sign.PLUS, p)
    em = primitive_idempotent(p - s, Sign.MINUS, p)
    alg = algebra(p)
    zero = alg.zero()
    # vectors fixed by the idempotent; everything else in both families is killed
    keep_plus = {("minus", ("Y", 0)), ("minus", ("X", 0)), ("plus", ("A", 0)), ("plus", ("B", 0))}
    keep_minus = {("plus", ("X", 0)), ("plus", ("Y", 0)), ("minus", ("A", 0)), ("minus", ("B", 0))}
    for idem, name, keep in ((ep, "e+", keep_plus), (em, "e-", keep_minus)):
        for fam, vecs in (("plus", plus), ("minus", minus)):
            for key, v in sorted(vecs.items()):
                tag = f"{name}.{fam[0]}{key[0]}{key[1]}"
                expected = v if (fam, key) in keep else zero
                yield tag, normal_product(idem, v), expected


def weight_filter_identities(p: int, s: int):
    """v_s^+ and v_{p-s}^- applied to weight vectors of P_s^+ and P_{p-s}^-."""
    two_p = field(p).coerce(2 * p)
    zero = algebra(p).zero()
    vp = vs_element(s, Sign.PLUS, p)
    vm = vs_element(p - s, Sign.MINUS, p)
    # phi_n: weight q^(s-1-2n); psi_k: weight -q^(p-s-1-2k)
    phis = {}
    psis = {}
    for n in range(s):
        phis.setdefault(n, []).extend([b_vector(s, n, Sign.PLUS, p), a_vector(s, n, Sign.PLUS, p)])
    for k in range(p - s):
        psis.setdefault(k, []).extend([
            x_vector(s, k, Sign.PLUS, p), y_vector(s, k, Sign.PLUS, p),
            b_vector(p - s, k, Sign.MINUS, p), a_vector(p - s, k, Sign.MINUS, p),
        ])
    for n, vecs in phis.items():
        for i, phi in enumerate(vecs):
            yield f"v+.phi{n}.{i}", vp * phi, phi.scale(two_p) if n == 0 else zero
            yield f"v-.phi{n}.{i}", vm * phi, zero
    for k, vecs in psis.items():
        for i, psi in enumerate(vecs):
            yield f"v+.psi{k}.{i}", vp * psi, zero
            yield f"v-.psi{k}.{i}", vm * psi, psi.scale(two_p) if k == 0 else zero


# ---------------------------------------------------------------------------
# the suites
# ---------------------------------------------------------------------------

def _identity_check(report, claim, triples):
    bad = [name for name, lhs, rhs in triples if lhs != rhs]
    report.add(claim, not bad, "mismatch: " + ", ".join(bad[:5]) if bad else "")


def _guard(report, claim, fn):
    try:
        fn()
    except Exception as exc:  # a crashing check is a failed check
        report.add(claim, False, f"{type(exc).__name__}: {exc}")


def _suite_relations(report, p):
    for name, lhs, rhs in relation_identities(p):
        report.add(name, lhs == rhs)
    for name, lhs, rhs in bracket_identities(p):
        report.add(name, lhs == rhs)


def _suite_modules(report, p):
    fld = field(p)
    for s in range(1, p + 1):
        for sign in Sign:
            tag = f"s{s}.{sign.word}"
            r = simple_module(s, sign, p)
            rel = check_relations(r)
            report.add(f"thm3.1.relations.{tag}", rel.ok, "" if rel.ok else str(rel))
            scalar = _signed(beta(s, p), sign)
            report.add(f"sec3.3.casimir_scalar.{tag}", casimir_matrix(r) == Matrix.identity(p, s).scale(scalar))
            if s < p:
                r = projective_module(s, sign, p)
                rel = check_relations(r)
                report.add(f"prop3.7.relations.{tag}", rel.ok, "" if rel.ok else str(rel))
                hw = highest_weight_dimension(r, _signed(fld.zeta(s - 1), sign))
                report.add(f"prop3.7.unique_highest_weight.{tag}", hw == 1, f"dim={hw}")


def _suite_idempotents(report, p):
    for s in range(1, p + 1):
        for sign in Sign:
            tag = f"s{s}.{sign.word}"
            _identity_check(report, f"lemma3.3.{tag}", [
                (f"n{n}", a_vector(s, n, sign, p), a_vector_closed_form(s, n, sign, p) if n else a_vector(s, 0, sign, p))
                for n in range(s + 1)
            ])
            report.add(f"remark3.4.Ea0.{tag}", (algebra(p).E * a_vector(s, 0, sign, p)).is_zero())
            if s == p:
                claim = f"prop3.5.idempotent.{sign.word}"
                _guard(report, claim, lambda: report.add(claim, bool(primitive_idempotent(p, sign, p))))
                d = left_ideal_dimension(primitive_idempotent(p, sign, p))
                report.add(f"prop3.5.left_ideal_dim.{sign.word}", d == p, f"dim={d}")
                continue
            alg = algebra(p)
            gd = gamma_delta(s, sign, p)
            b, a = b0(s, sign, p), a_vector(s, 0, sign, p)
            poly = alg.zero()
            for n in range(1, p - s + 1):
                poly = poly + alg.monomial(p - n, p - 1 - n).scale(alpha(s, n, sign, p))
            report.add(f"lemma3.6.{tag}", alg.F * (poly * vs_element(s, sign, p)) == a)
            report.add(f"eq3.7.{tag}", alg.F * (alg.E * b) == a)
            report.add(f"eq3.17.{tag}", b * b == b.scale(gd.gamma) + a.scale(gd.delta))
            report.add(f"eq3.18.{tag}", a * b == a.scale(gd.gamma))
            report.add(f"eq3.19.{tag}", b * a == a.scale(gd.gamma))
            report.add(f"prop3.8.a0_squared.{tag}", (a * a).is_zero())
            chain = field(p).one
            for i in range(1, s):
                chain = chain * _signed(q_int(i, p) * q_int(s - i, p), sign)
            total = field(p).zero
            for i in range(1, s):
                prod = field(p).one
                for j in range(1, s):
                    if j != i:
                        prod = prod * _signed(q_int(j, p) * q_int(s - j, p), sign)
                total = total + prod
            lhs = alg.monomial(s - 1, 0) * b_vector(s, s - 1, sign, p)
            report.add(f"eq3.14.{tag}", lhs == b.scale(chain) + a.scale(total))
            _identity_check(report, f"prop3.7.action.{tag}", projective_action_identities(s, sign, p))
            acc = RankAccumulator()
            for v in projective_vectors(s, sign, p):
                acc.add(element_to_sparse(v))
            report.add(f"prop3.7.dimension.{tag}", acc.rank == 2 * p, f"rank={acc.rank}")
            claim = f"prop3.8.idempotent.{tag}"
            _guard(report, claim, lambda: report.add(claim, bool(primitive_idempotent(s, sign, p))))
            d = left_ideal_dimension(primitive_idempotent(s, sign, p))
            report.add(f"prop3.7.left_ideal_dim.{tag}", d == 2 * p, f"dim={d}")
    gp = [gamma_delta(s, Sign.PLUS, p) for s in range(1, p)]
    gm = [gamma_delta(p - s, Sign.MINUS, p) for s in range(1, p)]
    report.add("sec4.1.gamma_symmetry", all(x.gamma == y.gamma for x, y in zip(gp, gm)))
    report.add("sec4.1.delta_symmetry", all(x.delta == y.delta for x, y in zip(gp, gm)))


def _suite_center(report, p):
    alg = algebra(p)
    C = casimir(p)
    report.add("sec3.3.casimir.two_forms", C == casimir_alt(p))
    report.add("sec3.3.casimir.central", all(commutator(C, g).is_zero() for g in (alg.E, alg.F, alg.K)))
    for s in range(1, p + 1):
        for sign in Sign:
            tag = f"s{s}.{sign.word}"
            a = a_vector(s, 0, sign, p)
            report.add(f"sec3.3.casimir_a0.{tag}", C * a == a.scale(_signed(beta(s, p), sign)))
            if s < p:
                e = primitive_idempotent(s, sign, p)
                # the a_0 term enters through e_s = (b_0 - ...)/gamma, so it carries the 1/gamma
                a_norm = a / gamma_delta(s, sign, p).gamma
                report.add(f"sec3.3.casimir_e.{tag}", C * e == a_norm + e.scale(_signed(beta(s, p), sign)))
    mp = minimal_polynomial(C)
    report.add("prop3.10.minimal_polynomial", mp == expected_casimir_polynomial(p), f"degree={mp.degree}")
    betas = [beta(j, p) for j in range(p + 1)]
    report.add("prop3.10.betas_distinct", len(set(betas)) == len(betas))
    bp = block_projectors(p)
    total = alg.zero()
    for pi in bp.projectors:
        total = total + pi
    report.add("eq3.20.partition_of_unity", total == alg.one())
    orth = all(
        (bp[s] * bp[t] == (bp[s] if s == t else alg.zero()))
        for s in range(p + 1) for t in range(p + 1)
    )
    report.add("eq3.20.orthogonal_idempotents", orth)
    report.add("eq3.20.central", all(
        commutator(pi, g).is_zero() for pi in bp.projectors for g in (alg.E, alg.F, alg.K)
    ))
    members = [(s, s, Sign.PLUS) for s in range(1, p)] + [(s, p - s, Sign.MINUS) for s in range(1, p)]
    members += [(0, p, Sign.MINUS), (p, p, Sign.PLUS)]
    for block, s, sign in members:
        e = primitive_idempotent(s, sign, p)
        inside = all((bp[t] * e == (e if t == block else alg.zero())) for t in range(p + 1))
        report.add(f"sec3.3.block_membership.e{s}{sign.symbol}.Q{block}", inside)


def _suite_basic(report, p):
    fld = field(p)
    e = basic_idempotent(p)
    dim = corner_dimension(e)
    report.add("sec4.1.basic_algebra_dim", dim == 8 * (p - 1) + 2, f"dim={dim}")
    for sign, block in ((Sign.PLUS, p), (Sign.MINUS, 0)):
        d = corner_dimension(primitive_idempotent(p, sign, p))
        report.add(f"prop4.1.dim.B{block}", d == 1, f"dim={d}")
    blocks = slf_blocks(p)
    for s in range(1, p):
        tag = f"s{s}"
        bb = basic_basis(p, s)
        gd = gamma_delta(s, Sign.PLUS, p)
        f = bb.unit
        d = corner_dimension(f)
        report.add(f"thm4.3.dimension.{tag}", d == 8, f"dim={d}")
        d = left_ideal_dimension(f)
        report.add(f"sec4.1.Qs_left_ideal_dim.{tag}", d == 4 * p, f"dim={d}")
        g = gd.gamma
        plus = ideal_vectors(p, s, Sign.PLUS)
        minus = ideal_vectors(p, s, Sign.MINUS)
        rel = []
        for fam, vecs, fs, sg in (("plus", plus, s, Sign.PLUS), ("minus", minus, p - s, Sign.MINUS)):
            gdf = gamma_delta(fs, sg, p)
            for n in range(fs):
                rel.append((f"{fam}.B{n}", vecs[("B", n)],
                            (b_vector(fs, n, sg, p) - a_vector(fs, n, sg, p).scale(gdf.delta / gdf.gamma)) / gdf.gamma))
                rel.append((f"{fam}.A{n}", vecs[("A", n)], a_vector(fs, n, sg, p) / gdf.gamma))
            for k in range(p - fs):
                rel.append((f"{fam}.X{k}", vecs[("X", k)], x_vector(fs, k, sg, p) / gdf.gamma))
                rel.append((f"{fam}.Y{k}", vecs[("Y", k)], y_vector(fs, k, sg, p) / gdf.gamma))
        _identity_check(report, f"sec4.1.ideal_basis_vectors.{tag}", rel)
        report.add(f"sec4.1.gamma_common.{tag}", g == gamma_delta(p - s, Sign.MINUS, p).gamma)
        _identity_check(report, f"lemma4.2.{tag}", weight_filter_identities(p, s))
        _identity_check(report, f"sec4.1.annihilation.{tag}", annihilation_identities(p, s))
        named = bb.labeled()
        fixes = [
            ("eq4.1", "e+", "Y0-"), ("eq4.2", "e+", "X0-"), ("eq4.3", "e+", "A0+"),
            ("eq4.4", "e-", "X0+"), ("eq4.5", "e-", "Y0+"), ("eq4.6", "e-", "A0-"),
        ]
        for claim, left, right in fixes:
            report.add(f"{claim}.{tag}", named[left] * named[right] == named[right])
        mt = mult_table(p, s).as_labels()
        for x in LABELS:
            for y in LABELS:
                got, want = mt[(x, y)], REFERENCE_PRODUCTS[(x, y)]
                report.add(
                    f"table1.cell.{SLUGS[x]}.{SLUGS[y]}.{tag}", got == want,
                    "" if got == want else f"got {got!r}, expected {want!r}",
                )
        ct = commutator_table(p, s)
        for x in NON_A_LABELS:
            for y in NON_A_LABELS:
                got, want = ct.entries[(x, y)], REFERENCE_COMMUTATORS[(x, y)]
                report.add(
                    f"table2.cell.{SLUGS[x]}.{SLUGS[y]}.{tag}", got == want,
                    "" if got == want else f"got {got!r}, expected {want!r}",
                )
        a_central = all(not ct.entries[(x, a)] for x in LABELS for a in ("A0+", "A0-"))
        report.add(f"table2.A_central.{tag}", a_central)
        comm_span = RankAccumulator()
        for x in LABELS:
            for y in LABELS:
                combo = ct.entries[(x, y)]
                comm_span.add({LABELS.index(k): fld.coerce(v) for k, v in combo.items()})
        expected_span = RankAccumulator()
        for combo in ({"X0+": 1}, {"X0-": 1}, {"Y0+": 1}, {"Y0-": 1}, {"A0+": 1, "A0-": -1}):
            expected_span.add({LABELS.index(k): fld.coerce(v) for k, v in combo.items()})
        joint = RankAccumulator()
        for acc in (comm_span, expected_span):
            for row in acc.rows.values():
                joint.add(row)
        report.add(
            f"prop4.4.commutator_span.{tag}",
            comm_span.rank == expected_span.rank == joint.rank == 5,
            f"rank={comm_span.rank}",
        )
        report.add(f"prop4.4.slf.B{s}", blocks[s] == 3, f"dim={blocks[s]}")
    for s in (0, p):
        report.add(f"prop4.4.slf.B{s}", blocks[s] == 1, f"dim={blocks[s]}")
    total = sum(blocks.values())
    report.add("thm4.5.slf_total", total == 3 * p - 1, f"slf_total={total}")
    report.slf_total = total


def _suite_full(report, p, allow_large):
    claim = "thm2.1.full_algebra_cross_check"
    if p > 4 and not allow_large:
        report.skip(claim, f"brute force disabled for p={p}; pass --allow-large")
        return
    brute = full_algebra_slf(p, allow_large=True)
    report.add(claim, brute == report.slf_total, f"brute_force={brute}, block_sum={report.slf_total}")
    report.add("thm4.6.slf_full_algebra", brute == 3 * p - 1, f"dim={brute}")


def run_verify(p: int, level: str = "fast", allow_large: bool = False) -> VerifyReport:
    if p < 2:
        raise ParameterError(f"p must be >= 2, got {p}")
    if level not in LEVELS:
        raise ParameterError(f"level must be one of {LEVELS}, got {level!r}")
    start = time.perf_counter()
    report = VerifyReport(p, level)
    for suite in (_suite_relations, _suite_modules, _suite_idempotents, _suite_center, _suite_basic):
        try:
            suite(report, p)
        except Exception as exc:
            report.add(f"suite.{suite.__name__.lstrip('_')}", False, f"{type(exc).__name__}: {exc}")
    if level == "full":
        try:
            _suite_full(report, p, allow_large)
        except Exception as exc:
            report.add("suite.full", False, f"{type(exc).__name__}: {exc}")
    report.elapsed = time.perf_counter() - start
    return report
