"""Command-line front end.

Subcommands: ``verify``, ``idempotent``, ``table``, ``casimir``, ``slf``.
Results go to stdout, diagnostics to stderr.  Exit codes: 0 success, 1 a
verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .basic import NON_A_LABELS, commutator_table, mult_table, slf_blocks
from .center import block_dimension, block_projectors, casimir, expected_casimir_polynomial, minimal_polynomial
from .cyclotomic import ParameterError
from .idempotents import Sign, primitive_idempotent
from .verify import LEVELS, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _require_p(p: int) -> None:
    if p < 2:
        raise UsageError(f"--p must be an integer >= 2, got {p}")


def _cmd_verify(args, out) -> int:
    report = run_verify(args.p, args.level, allow_large=args.allow_large)
    out.write((_dump(report.to_json()) if args.format == "json" else report.to_text()) + "\n")
    print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return report.exit_code


def _cmd_idempotent(args, out) -> int:
    if args.s is None:
        raise UsageError("idempotent needs --s")
    if not (1 <= args.s <= args.p):
        raise UsageError(f"--s must lie in [1, {args.p}], got {args.s}")
    sign = Sign.parse(args.sign)
    e = primitive_idempotent(args.s, sign, args.p)
    if args.format == "json":
        out.write(_dump({"p": args.p, "s": args.s, "sign": sign.symbol, "element": e.to_json()}) + "\n")
    else:
        out.write(f"e_{args.s}^{sign.symbol} (p={args.p}) = {e.factored_str()}\n")
    return EXIT_OK


def _render_cell(combo) -> str:
    if not combo:
        return "0"
    parts = []
    for lab, c in combo.items():
        parts.append(lab if c == 1 else (f"-{lab}" if c == -1 else f"({c})*{lab}"))
    return " + ".join(parts).replace("+ -", "- ")


def _cmd_table(args, out) -> int:
    if args.s is None:
        raise UsageError("table needs --s")
    if not (1 <= args.s <= args.p - 1):
        raise UsageError(f"--s must lie in [1, {args.p - 1}], got {args.s}")
    if args.kind == "product":
        table = mult_table(args.p, args.s)
    else:
        table = commutator_table(args.p, args.s).restrict(NON_A_LABELS)
    if args.format == "json":
        out.write(_dump(table.to_json()) + "\n")
        return EXIT_OK
    labels = table.labels
    cells = [[_render_cell(table.entry(x, y)) for y in labels] for x in labels]
    width = max(len(c) for row in cells for c in row + list(labels))
    title = "x*y" if args.kind == "product" else "[x, y]"
    out.write(f"{title:<{width}}  " + "  ".join(f"{y:<{width}}" for y in labels).rstrip() + "\n")
    for x, row in zip(labels, cells):
        out.write(f"{x:<{width}}  " + "  ".join(f"{c:<{width}}" for c in row).rstrip() + "\n")
    return EXIT_OK


def _cmd_casimir(args, out) -> int:
    p = args.p
    bp = block_projectors(p)
    mp = minimal_polynomial(casimir(p))
    expected = expected_casimir_polynomial(p)
    dims = {s: block_dimension(p, s) for s in range(p + 1)}
    if args.format == "json":
        out.write(_dump({
            "p": p,
            "eigenvalues": [b.to_json() for b in bp.eigenvalues],
            "multiplicities": list(bp.multiplicities),
            "minimal_polynomial": [c.to_json() for c in mp.coeffs],
            "matches_expected": mp == expected,
            "block_dimensions": {str(s): d for s, d in dims.items()},
        }) + "\n")
        return EXIT_OK if mp == expected else EXIT_FAIL
    factors = []
    for j, (b, m) in enumerate(zip(bp.eigenvalues, bp.multiplicities)):
        factors.append(f"(t - beta_{j})" + (f"^{m}" if m > 1 else ""))
    out.write(f"Psi_{2 * p}(t) = " + "".join(factors) + "\n")
    for j, b in enumerate(bp.eigenvalues):
        out.write(f"  beta_{j} = {b}\n")
    out.write(f"expanded: {mp}\n")
    out.write(f"minimal polynomial of C matches: {'yes' if mp == expected else 'no'}\n")
    out.write("block dimensions: " + ", ".join(f"Q_{s}: {d}" for s, d in dims.items()) + "\n")
    return EXIT_OK if mp == expected else EXIT_FAIL


def _cmd_slf(args, out) -> int:
    blocks = slf_blocks(args.p)
    total = sum(blocks.values())
    if args.format == "json":
        out.write(_dump({"p": args.p, "blocks": {str(s): d for s, d in blocks.items()}, "slf_total": total}) + "\n")
    else:
        out.write(f"{total}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uqsl2", description="Exact computations in the restricted quantum group at q = exp(pi i / p).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, with_s=False):
        sp.add_argument("--p", type=int, required=True, help="root-of-unity order parameter, p >= 2")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if with_s:
            sp.add_argument("--s", type=int, help="block / module index")
        return sp

    v = common(sub.add_parser("verify", help="run the verification suite"))
    v.add_argument("--level", choices=LEVELS, default="fast")
    v.add_argument("--allow-large", action="store_true", help="run the brute-force check for p > 4 too")
    v.set_defaults(func=_cmd_verify)

    i = common(sub.add_parser("idempotent", help="print a primitive idempotent"), with_s=True)
    i.add_argument("--sign", choices=("+", "-"), default="+")
    i.set_defaults(func=_cmd_idempotent)

    t = common(sub.add_parser("table", help="multiplication or commutator table of a basic block"), with_s=True)
    t.add_argument("--kind", choices=("product", "commutator"), default="product")
    t.set_defaults(func=_cmd_table)

    c = common(sub.add_parser("casimir", help="minimal polynomial of the Casimir element and block dimensions"))
    c.set_defaults(func=_cmd_casimir)

    s = common(sub.add_parser("slf", help="dimension of the space of symmetric linear functions"))
    s.set_defaults(func=_cmd_slf)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with code 2
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        _require_p(args.p)
        return args.func(args, out)
    except (UsageError, ParameterError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
