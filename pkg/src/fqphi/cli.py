"""Command-line surface.

Every subcommand selects the field by prime and extension degree (--p, --s)
and emits machine-readable output: JSON by default, CSV or plain text via
--format.  Big integers are always serialized as decimal strings in JSON.

Exit codes: 0 on success; 1 when a mathematical check fails or the queried
value is not in the relevant value set; 2 on usage errors (bad arguments,
malformed polynomial text, invalid field parameters).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import collision, density, erdos, preimage, totient
from .errors import CounterexampleError
from .gfpoly import FieldSpec, factor, parse_poly
from .verify import SUITES, Budgets, run_suite


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fqphi",
        description="Totient and sum-of-divisors arithmetic for polynomials "
        "over finite fields, with exact counting and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="field characteristic")
    common.add_argument("--s", type=int, default=1,
                        help="extension degree, q = p^s (default 1)")
    common.add_argument("--format", choices=("json", "csv", "text"),
                        default="json", help="output format (default json)")

    sp = sub.add_parser("phi", parents=[common],
                        help="totient of a polynomial")
    sp.add_argument("--poly", required=True)

    sp = sub.add_parser("sigma", parents=[common],
                        help="sum of divisors of a polynomial")
    sp.add_argument("--poly", required=True)

    sp = sub.add_parser("factor", parents=[common],
                        help="factor into monic irreducibles")
    sp.add_argument("--poly", required=True)

    sp = sub.add_parser("signature", parents=[common],
                        help="degree and irreducible-divisor counts")
    sp.add_argument("--poly", required=True)

    sp = sub.add_parser("same-phi", parents=[common],
                        help="decide phi(f) = phi(g) from signatures alone")
    sp.add_argument("--f", required=True)
    sp.add_argument("--g", required=True)

    sp = sub.add_parser("pi", parents=[common],
                        help="number of monic irreducibles of a degree")
    sp.add_argument("--d", type=int, required=True)

    sp = sub.add_parser("preimage", parents=[common],
                        help="preimages of n under phi")
    sp.add_argument("action", choices=("count", "list", "profile"))
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("sierpinski", parents=[common],
                        help="value engineered to hit a prescribed count")
    sp.add_argument("--kind", choices=("exact", "power", "binomial"),
                    required=True)
    sp.add_argument("--l", type=int, required=True)

    sp = sub.add_parser("erdos", parents=[common],
                        help="common values of phi and sigma")
    sp.add_argument("action", choices=("member", "scan", "witness"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--y", type=int)

    sp = sub.add_parser("density", parents=[common],
                        help="totient value counts and their ceiling")
    sp.add_argument("--y", type=int, required=True)

    sp = sub.add_parser("verify", parents=[common],
                        help="run a verification suite")
    sp.add_argument("suite", choices=SUITES + ("all",))
    sp.add_argument("--budget-degree", type=int, default=None)
    sp.add_argument("--budget-n", type=int, default=None)
    sp.add_argument("--budget-y", type=int, default=None)
    return parser


def _emit(payload: dict, fmt: str, csv_rows=None) -> None:
    if fmt == "json":
        print(json.dumps(payload))
    elif fmt == "csv":
        if csv_rows is None:
            csv_rows = [list(payload.keys()), [payload[k] for k in payload]]
        for row in csv_rows:
            print(",".join(str(cell) for cell in row))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _field(args) -> FieldSpec:
    return FieldSpec(args.p, args.s)


def _cmd_phi(args) -> int:
    spec = _field(args)
    value = totient.phi(parse_poly(spec, args.poly))
    _emit(
        {
            "value": str(value.value),
            "factored": {
                "j": value.j,
                "m": {str(d): m for d, m in sorted(value.counts.items())},
            },
        },
        args.format,
    )
    return 0


def _cmd_sigma(args) -> int:
    spec = _field(args)
    g = parse_poly(spec, args.poly)
    _emit({"value": str(totient.sigma(g))}, args.format)
    return 0


def _cmd_factor(args) -> int:
    spec = _field(args)
    fac = factor(parse_poly(spec, args.poly))
    if args.format == "text":
        pieces = [] if fac.unit == 1 else [str(fac.unit)]
        pieces += [
            f"({part})" if exp == 1 else f"({part})^{exp}"
            for part, exp in fac.parts
        ]
        print(" * ".join(pieces) if pieces else "1")
        return 0
    payload = {
        "unit": fac.unit,
        "factors": [
            {"poly": str(part), "exp": exp} for part, exp in fac.parts
        ],
    }
    rows = [["poly", "exp"]] + [[str(p), e] for p, e in fac.parts]
    _emit(payload, args.format, csv_rows=rows)
    return 0


def _cmd_signature(args) -> int:
    spec = _field(args)
    sig = totient.signature(parse_poly(spec, args.poly))
    _emit(
        {
            "degree": sig.degree,
            "m": {str(d): m for d, m in sorted(sig.counts.items())},
        },
        args.format,
    )
    return 0


def _cmd_same_phi(args) -> int:
    spec = _field(args)
    sig_f = totient.signature(parse_poly(spec, args.f))
    sig_g = totient.signature(parse_poly(spec, args.g))
    _emit({"same_phi": collision.same_phi(sig_f, sig_g, spec)}, args.format)
    return 0


def _cmd_pi(args) -> int:
    spec = _field(args)
    if args.d < 1:
        raise ValueError("--d must be >= 1")
    _emit({"d": args.d, "pi": str(spec.pi(args.d))}, args.format)
    return 0


def _cmd_preimage(args) -> int:
    spec = _field(args)
    if args.n is None or args.n < 1:
        raise ValueError("--n must be >= 1")
    if args.action == "count":
        count = preimage.preimage_count(args.n, spec)
        _emit({"count": str(count)}, args.format)
        return 0 if count else 1
    if args.action == "list":
        polys = preimage.preimage_list(args.n, spec)
        if args.format == "text":
            for f in polys:
                print(f)
            print(f"count: {len(polys)}")
            return 0 if polys else 1
        payload = {"count": str(len(polys)), "polys": [str(f) for f in polys]}
        rows = [["poly"]] + [[str(f)] for f in polys]
        _emit(payload, args.format, csv_rows=rows)
        return 0 if polys else 1
    profile = preimage.count_profile(args.n, spec)
    _emit({"count": str(profile.count), "class": profile.label}, args.format)
    return 0 if profile.count else 1


def _cmd_sierpinski(args) -> int:
    spec = _field(args)
    n, expected = preimage.sierpinski_witness(spec, args.kind, args.l)
    computed = preimage.preimage_count(n, spec)
    _emit(
        {
            "n": str(n),
            "expected": str(expected),
            "computed": str(computed),
            "ok": computed == expected,
        },
        args.format,
    )
    return 0 if computed == expected else 1


def _cmd_erdos(args) -> int:
    spec = _field(args)
    if args.action == "member":
        if args.n is None or args.n < 1:
            raise ValueError("erdos member requires --n >= 1")
        verdict = erdos.intersection_member(args.n, spec)
        payload: dict = {"member": verdict.member}
        if verdict.member:
            payload["family"] = verdict.family
            payload["params"] = {
                f"d{i + 1}": d for i, d in enumerate(verdict.params)
            }
        _emit(payload, args.format)
        return 0 if verdict.member else 1
    if args.action == "scan":
        if args.y is None or args.y < 1:
            raise ValueError("erdos scan requires --y >= 1")
        members = erdos.intersection_up_to(args.y, spec)
        payload = {"members": [str(v) for v in members]}
        rows = [["n"]] + [[v] for v in members]
        _emit(payload, args.format, csv_rows=rows)
        return 0
    if args.n is None or args.n < 1:
        raise ValueError("erdos witness requires --n >= 1")
    pair = erdos.erdos_witness(args.n, spec)
    if pair is None:
        _emit({"member": False}, args.format)
        return 1
    f, g = pair
    _emit({"member": True, "f": str(f), "g": str(g)}, args.format)
    return 0


def _cmd_density(args) -> int:
    spec = _field(args)
    if args.y < 1:
        raise ValueError("--y must be >= 1")
    reports = density.density_sweep(spec, args.y)
    rows = [["y", "k", "V", "bound", "ratio"]] + [
        [r.y, r.k, r.count, r.bound, r.ratio] for r in reports
    ]
    payload = {
        "reports": [
            {
                "y": str(r.y),
                "k": r.k,
                "V": str(r.count),
                "bound": r.bound,
                "ratio": r.ratio,
                "bound_checked": r.bound_checked,
            }
            for r in reports
        ]
    }
    if args.format == "text":
        for r in reports:
            note = "" if r.bound_checked else "  (k = 0: ceiling not applicable)"
            print(
                f"y={r.y} k={r.k} V={r.count} bound={r.bound:.4f} "
                f"ratio={r.ratio:.6f}{note}")
        return 0
    _emit(payload, args.format, csv_rows=rows)
    return 0


def _cmd_verify(args) -> int:
    budgets = Budgets(args.budget_degree, args.budget_n, args.budget_y)
    results = run_suite(args.suite, budgets)
    passed = sum(1 for r in results if r.ok)
    failed = len(results) - passed
    if args.format == "json":
        print(json.dumps({
            "suite": args.suite,
            "checks": [
                {"name": r.name, "ok": r.ok, "detail": r.detail}
                for r in results
            ],
            "passed": passed,
            "failed": failed,
        }))
    else:
        for r in results:
            mark = "PASS" if r.ok else "FAIL"
            print(f"[{mark}] {r.name}: {r.detail}")
        print(f"{passed} passed, {failed} failed")
    return 0 if failed == 0 else 1


_COMMANDS = {
    "phi": _cmd_phi,
    "sigma": _cmd_sigma,
    "factor": _cmd_factor,
    "signature": _cmd_signature,
    "same-phi": _cmd_same_phi,
    "pi": _cmd_pi,
    "preimage": _cmd_preimage,
    "sierpinski": _cmd_sierpinski,
    "erdos": _cmd_erdos,
    "density": _cmd_density,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except CounterexampleError as exc:
        print(f"mathematical check failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
