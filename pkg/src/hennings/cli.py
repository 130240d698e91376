"""Command-line driver.

    hennings invariants FILE... --l N [--strict] [--budget T] [--out P] [--format F]
    hennings verify {axioms,lemmas,calibrate,corpus} --l N
    hennings print FILE

Exit codes: 0 all checks pass, 1 a check failed, 2 bad input, 3 term budget
exceeded, 4 undefined normalizer under --strict.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .report import CheckReport
from .tangle import TangleError, parse, print_tangle
from .universal import DEFAULT_BUDGET, STANDARD_CONVENTION, BudgetExceeded

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET, EXIT_UNDEFINED = 0, 1, 2, 3, 4


def _ell(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 2:
        raise argparse.ArgumentTypeError("the root of unity needs order l > 1")
    return v


def _budget(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hennings", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="psi, tau and h of tangle files")
    inv.add_argument("files", nargs="+", type=Path)
    inv.add_argument("--l", dest="ell", type=_ell, required=True)
    inv.add_argument("--strict", action="store_true", help="exit 4 when a normalizer vanishes")
    inv.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET)
    inv.add_argument("--out", type=Path)
    inv.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    inv.add_argument("--timing", action="store_true", help="include runtimes (breaks byte-determinism)")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=("axioms", "lemmas", "calibrate", "corpus"))
    ver.add_argument("--l", dest="ell", type=_ell, required=True)
    ver.add_argument("--out", type=Path)
    ver.add_argument("--format", choices=("json", "pretty"), default="json")

    pr = sub.add_parser("print", help="re-print a tangle file canonically")
    pr.add_argument("file", type=Path)
    return p


def _meta(ell: int) -> dict:
    return {"ell": ell, "version": __version__, "convention": STANDARD_CONVENTION.describe()}


def _document(ell: int, results: list, checks: list[CheckReport], timing: bool = False) -> dict:
    return {
        "meta": _meta(ell),
        "results": [r.to_json(timing) for r in results],
        "checks": [c.to_json() for c in checks],
    }


def _scalar_text(z) -> str:
    if z is None:
        return "undefined"
    if z.is_rational():
        return str(z.coeffs()[0])
    w = z.to_complex()
    return f"{w.real:.6g}{w.imag:+.6g}i"


def render(doc: dict, results: list, checks: list[CheckReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "ell", "h", "sigma_plus", "sigma_minus", "psi", "tau", "theorem_ok"])
        for r in results:
            w.writerow([
                r.name, r.ell, r.h, r.sigma_plus, r.sigma_minus,
                json.dumps(r.psi.to_json() if r.psi is not None else None),
                json.dumps(r.tau.to_json() if r.tau is not None else None),
                r.theorem_ok,
            ])
        return buf.getvalue()
    lines = []
    for r in results:
        lines.append(
            f"{r.name} (l={r.ell}): h={r.h} sigma=({r.sigma_plus},{r.sigma_minus}) "
            f"psi={_scalar_text(r.psi)} tau={_scalar_text(r.tau)} theorem_ok={r.theorem_ok}"
        )
    for c in checks:
        mark = "PASS" if c.ok else "FAIL"
        lines.append(f"[{mark}] {c.name} ({len(c.items)} items)")
        for f in c.failures():
            lines.append(f"    failed: {f}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_invariants(args) -> int:
    from .manifold import verify_theorem

    diagrams = []
    for path in args.files:
        try:
            diagrams.append(parse(path.read_text()))
        except (OSError, TangleError) as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            return EXIT_INPUT
    results = []
    try:
        for d in diagrams:
            results.append(verify_theorem(d, args.ell, budget=args.budget))
    except BudgetExceeded as exc:
        print(f"term budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    theorem = CheckReport(f"psi = h tau, l={args.ell}")
    for r in results:
        if r.theorem_ok is not None:
            theorem.add(r.name, r.theorem_ok)
    doc = _document(args.ell, results, [theorem], args.timing)
    _emit(render(doc, results, [theorem], args.format), args.out)
    if args.strict and any(r.psi_undefined or r.tau_undefined for r in results):
        return EXIT_UNDEFINED
    return EXIT_OK if theorem.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    from .checks import SUITES, corpus_suite

    results: list = []
    try:
        if args.suite == "corpus":
            results, checks = corpus_suite(args.ell)
        else:
            checks = SUITES[args.suite](args.ell)
    except BudgetExceeded as exc:
        print(f"term budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    doc = _document(args.ell, results, checks)
    _emit(render(doc, results, checks, args.format), args.out)
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FAIL


def cmd_print(args) -> int:
    try:
        d = parse(args.file.read_text())
    except (OSError, TangleError) as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(print_tangle(d))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"invariants": cmd_invariants, "verify": cmd_verify, "print": cmd_print}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
