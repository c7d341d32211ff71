"""Command-line interface: identity verification, expression evaluation, and
table dumps.

Subcommands:
  verify <suite> --m A..B [--seed S] [--cases N] [--json PATH]
  eval --m M "<hecke-literal> * <poly-literal>"
  springer --m M --show {flags|bases|matrix} [--generator KEY] [--json PATH]
  theta --m M --matrices [--json PATH]
  orbits --n N --m M --bounds N,r [--count-only]

Set GLHECKE_MAX_TERMS to cap polynomial term counts (CI memory limits).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import springer, theta, verify
from .hecke import parse_hecke
from .laurent import parse_poly, x_profile
from .polyrep import act


def _parse_m_range(text: str) -> tuple[int, int]:
    if ".." in text:
        a, b = text.split("..")
        return int(a), int(b)
    v = int(text)
    return v, v


def _parse_bounds(text: str) -> tuple[int, int]:
    a, b = text.split(",")
    return int(a), int(b)


def _split_eval_expression(m: int, text: str):
    """Split '<hecke-literal> * <poly-literal>' at a top-level '*'.

    Tried right to left so multi-factor polynomial tails like ``x1*x2``
    stay on the polynomial side; the first split where both halves parse
    wins.
    """
    depth = 0
    stars = []
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "*" and depth == 0:
            stars.append(i)
    errors = []
    for i in reversed(stars):
        try:
            h = parse_hecke(m, text[:i])
            u = parse_poly(x_profile(m), text[i + 1 :])
            return h, u
        except ValueError as exc:
            errors.append(str(exc))
    raise ValueError(
        "expected '<hecke-literal> * <poly-literal>'"
        + (f" ({errors[-1]})" if errors else "")
    )


def _cmd_verify(args) -> int:
    m_range = _parse_m_range(args.m)
    report = verify.run_suite(
        args.suite,
        m_range,
        seed=args.seed,
        cases=args.cases,
        n=args.n,
        bounds=_parse_bounds(args.bounds),
    )
    sys.stdout.write(verify.report_text(report))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(verify.report_json(report, include_elapsed=args.timings))
    return 1 if report.failed else 0


def _cmd_eval(args) -> int:
    h, u = _split_eval_expression(args.m, args.expression)
    print(act(h, u))
    return 0


def _matrix_payload(m: int, generator: str) -> dict:
    mats = theta.theta_action_matrices(m)
    aliases = {f"T_s{i}": f"T[{i}]" for i in range(1, m + 1)}
    aliases["T_sm"] = f"T[{m}]"
    aliases["T_w1"] = "Tw[1]"
    key = aliases.get(generator, generator)
    if key not in mats:
        raise SystemExit(f"unknown generator {generator!r}; available: {sorted(mats)}")
    return {
        "m": m,
        "basis": "theorem",
        "generator": generator,
        "matrix": [[str(entry) for entry in row] for row in mats[key]],
    }


def _cmd_springer(args) -> int:
    m = args.m
    if args.show == "flags":
        table = springer.build_fixed_flags(m)
        payload = {
            "m": m,
            "fixed_points": [
                {
                    "point": f"p{k + 1}",
                    "flag": [
                        "<" + ",".join(f"u{v}" for v in step) + ">"
                        for step in table.flags[k]
                    ],
                    "graded_weights": [str(table.weight_poly(k, j)) for j in range(m)],
                }
                for k in range(m)
            ],
        }
    elif args.show == "bases":
        tables = springer.declared_bases(m)
        payload = {
            "m": m,
            "system_determinant": str(tables.system_det),
            "theorem_basis": [
                [str(e) for e in cls.entries] for cls in tables.theorem
            ],
            "lusztig_basis": [
                [str(entry) for entry in row] for row in tables.lusztig
            ],
        }
    else:  # matrix
        payload = _matrix_payload(m, args.generator)
    text = json.dumps(payload, indent=2, sort_keys=True)
    print(text)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
    return 0


def _cmd_theta(args) -> int:
    m = args.m
    mats = theta.theta_action_matrices(m)
    payload = {
        "m": m,
        "basis": "IC",
        "matrices": {
            key: [[str(entry) for entry in row] for row in mat]
            for key, mat in mats.items()
        },
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
    return 0


def _cmd_orbits(args) -> int:
    bounds = _parse_bounds(args.bounds)
    labels = theta.enumerate_orbits(args.n, args.m, bounds[0], bounds[1])
    if args.count_only:
        print(len(labels))
        return 0
    payload = {
        "n": args.n,
        "m": args.m,
        "bounds": {"N": bounds[0], "r": bounds[1]},
        "count": len(labels),
        "labels": [
            {
                "lambda": list(label.lam),
                "subset": list(label.subset),
                "bijection": list(label.bij),
                "matrix": {
                    f"({row},{col})": f"t^{a}" if a != 1 else "t"
                    for (row, col), a in theta.orbit_representative(label, args.m).items()
                },
            }
            for label in labels
        ],
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="glhecke", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITES)
    p.add_argument("--m", required=True, help="rank or A..B range")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=1000, help="randomized case count")
    p.add_argument("--n", type=int, default=1, help="orbits: max first-factor rank")
    p.add_argument("--bounds", default="0,1", help="orbits: N,r")
    p.add_argument("--json", help="write the canonical JSON report here")
    p.add_argument("--timings", action="store_true", help="keep elapsed_ms in JSON")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("eval", help="evaluate '<hecke-literal> * <poly-literal>'")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("expression")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("springer", help="fixed points, bases, action matrices")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--show", choices=("flags", "bases", "matrix"), required=True)
    p.add_argument("--generator", default="T_sm", help="for --show matrix")
    p.add_argument("--json", help="write compact JSON here")
    p.set_defaults(fn=_cmd_springer)

    p = sub.add_parser("theta", help="IC-basis generator matrices")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--matrices", action="store_true", required=True)
    p.add_argument("--json", help="write compact JSON here")
    p.set_defaults(fn=_cmd_theta)

    p = sub.add_parser("orbits", help="orbit labels for the (GL_n, GL_m) pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bounds", required=True, help="N,r")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=_cmd_orbits)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
