"""Command-line interface: check runner, polynomial round-tripping, fiber scans.

    k3family list-checks
    k3family verify all --seed 7 --out report.json
    k3family verify slice-factorization --slice 4,28,42
    k3family poly parse cubic.txt --vars x,alpha,beta --domain QQ
    k3family scan --t point.json --prime 2305843009213693951

`verify` exits 0 only when every check passes; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .checks import (
    CheckSpec,
    UnknownCheckError,
    default_specs,
    list_checks,
    run_checks,
)
from .domains import DEFAULT_PRIME, GF, QQ, ZZ, DomainError
from .family import FamilyPoint
from .kodaira import scan_point
from .poly import ContextError, PolyRing, to_str


def _parse_domain(text: str):
    if text == "ZZ":
        return ZZ
    if text == "QQ":
        return QQ
    m = re.fullmatch(r"GF[:(](\d+)\)?", text)
    if m:
        return GF(int(m.group(1)))
    raise argparse.ArgumentTypeError(f"unknown domain {text!r}; use ZZ, QQ, or GF:p")


def _parse_slice(text: str) -> tuple:
    try:
        weights = tuple(int(w) for w in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad slice {text!r}; expected e.g. 4,28,42")
    if not weights:
        raise argparse.ArgumentTypeError("slice needs at least one weight")
    return weights


def _read_poly_file(path: str):
    """Polynomial text with optional leading directives:

        # vars: u, b
        # domain: QQ
        -21*b^2*u^5 + 70*b^3*u^4

    Directives may be overridden by --vars/--domain.  Without either, the
    variables are taken in order of first appearance.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    vars_line = None
    domain_line = None
    body = []
    for line in raw.splitlines():
        stripped = line.strip()
        m = re.fullmatch(r"#\s*vars\s*:\s*(.*)", stripped)
        if m:
            vars_line = tuple(v.strip() for v in m.group(1).split(",") if v.strip())
            continue
        m = re.fullmatch(r"#\s*domain\s*:\s*(.*)", stripped)
        if m:
            domain_line = m.group(1).strip()
            continue
        if stripped.startswith("#"):
            continue
        body.append(line)
    return "\n".join(body).strip(), vars_line, domain_line


def _cmd_list_checks(args) -> int:
    width = max(len(name) for name, _ in list_checks())
    for name, summary in list_checks():
        print(f"{name:<{width}}  {summary}")
    return 0


def _cmd_verify(args) -> int:
    try:
        prime_field = GF(args.prime)  # validates primality up front
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    del prime_field

    if args.check == "all":
        specs = default_specs(
            seed=args.seed,
            prime=args.prime,
            trials=args.trials,
            slice_weights=args.slice,
        )
    else:
        specs = [
            CheckSpec(
                name=args.check,
                seed=args.seed,
                prime=args.prime,
                trials=args.trials,
                slice_weights=args.slice,
            )
        ]

    try:
        report = run_checks(specs, workers=args.workers, measure_time=args.timings)
    except UnknownCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    text = report.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        for c in report.checks:
            line = f"{c.name}: {c.status}"
            if args.timings:
                line += f" ({c.millis} ms)"
            print(line)
        print(f"report written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0 if report.all_pass() else 1


def _cmd_poly(args) -> int:
    try:
        body, vars_line, domain_line = _read_poly_file(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not body:
        print("error: no polynomial text in file", file=sys.stderr)
        return 2

    if args.vars:
        names = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    elif vars_line:
        names = vars_line
    else:
        seen = []
        for name in re.findall(r"[A-Za-z_][A-Za-z_0-9]*", body):
            if name not in seen:
                seen.append(name)
        names = tuple(seen)
    if not names:
        print("error: constant input and no variables declared", file=sys.stderr)
        return 2

    if args.domain:
        dom = args.domain
    elif domain_line:
        try:
            dom = _parse_domain(domain_line)
        except argparse.ArgumentTypeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        dom = QQ

    ring = PolyRing(names, dom)
    try:
        p = ring.parse(body)
    except (ContextError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    canonical = to_str(p)
    if args.action == "print":
        print(canonical)
        return 0
    info = {
        "canonical": canonical,
        "variables": list(names),
        "domain": dom.name,
        "terms": len(p.sorted_terms()),
        "total_degree": p.total_degree(),
        "round_trip": ring.parse(canonical) == p,
    }
    print(json.dumps(info, indent=2, sort_keys=True))
    return 0


def _cmd_scan(args) -> int:
    try:
        field = GF(args.prime)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        with open(args.t, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        t = FamilyPoint.from_json(text, field)
    except (ContextError, DomainError, ValueError, KeyError) as exc:
        print(f"error: bad family point: {exc}", file=sys.stderr)
        return 2
    result = scan_point(t, seed=args.seed)
    print(result.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3family",
        description="exact verification suite for the weighted Weierstrass family",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list-checks", help="list registered checks").set_defaults(
        fn=_cmd_list_checks
    )

    v = sub.add_parser("verify", help="run one check or the whole registry")
    v.add_argument("check", help="'all' or a registered check name")
    v.add_argument("--seed", type=int, default=0, help="stream seed (default 0)")
    v.add_argument(
        "--prime",
        type=int,
        default=DEFAULT_PRIME,
        help="modular arithmetic prime (default 2^61 - 1)",
    )
    v.add_argument(
        "--slice",
        type=_parse_slice,
        default=None,
        metavar="W1,W2,...",
        help="weights for the slice-factorization check, e.g. 4,42",
    )
    v.add_argument("--trials", type=int, default=None, help="override trial counts")
    v.add_argument("--out", default=None, metavar="FILE", help="write the JSON report here")
    v.add_argument(
        "--timings",
        action="store_true",
        help="record wall-clock millis (reports are then not byte-reproducible)",
    )
    v.add_argument("--workers", type=int, default=1, help="concurrent checks (default 1)")
    v.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("poly", help="parse or canonically print a polynomial file")
    p.add_argument("action", choices=("parse", "print"))
    p.add_argument("file", help="text file, optionally with '# vars:'/'# domain:' lines")
    p.add_argument("--vars", default=None, help="comma-separated variable order")
    p.add_argument(
        "--domain", type=_parse_domain, default=None, help="ZZ, QQ, or GF:p (default QQ)"
    )
    p.set_defaults(fn=_cmd_poly)

    s = sub.add_parser("scan", help="classify the singular fibers of one family member")
    s.add_argument("--t", required=True, metavar="FILE", help="family point JSON")
    s.add_argument(
        "--prime",
        type=int,
        default=DEFAULT_PRIME,
        help="field of definition (default 2^61 - 1)",
    )
    s.add_argument("--seed", type=int, default=0, help="root-splitting seed")
    s.set_defaults(fn=_cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
