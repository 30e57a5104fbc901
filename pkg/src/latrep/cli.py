"""Command-line interface.

Exit codes: 0 success / every claim holds, 1 a checked property fails (a
witness is printed), 2 input or precondition error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .audit import census_report
from .core import Lattice, is_distributive
from .document import DocumentError, family_to_json, load_family, load_lattice, to_dot
from .errors import LatticeError, NotAFilter, NotALattice
from .filters import (FilterFamily, all_filters, prime_filters, principal_filters,
                      union_closure_witness)
from .representation import (VerificationReport, build_representation, check_coincidence,
                              check_symmetry, veestar2_prime_gap, verify_iso, verify_prop1,
                              verify_prop2)

OK, FAILED, BAD_INPUT = 0, 1, 2
ALL_CLAIMS = ("prop1", "prop2", "iso", "coincidence", "symmetry")


class _Exit(Exception):
    def __init__(self, code, message):
        self.code = code
        self.message = message


def _load(path) -> Lattice:
    try:
        return load_lattice(path)
    except LatticeError as exc:
        raise _Exit(BAD_INPUT, f"{type(exc).__name__}: {exc}") from None


def _family(L: Lattice, spec: str) -> FilterFamily:
    if spec == "all":
        return all_filters(L)
    if spec == "principal":
        return principal_filters(L)
    if spec == "prime":
        return prime_filters(L)
    if spec.startswith("custom:"):
        try:
            return load_family(L, spec[len("custom:"):])
        except NotAFilter as exc:
            raise _Exit(FAILED, str(exc)) from None
        except LatticeError as exc:
            raise _Exit(BAD_INPUT, f"{type(exc).__name__}: {exc}") from None
    raise _Exit(BAD_INPUT, f"unknown family {spec!r}; use all, principal, prime or custom:<path>")


def _fmt_set(L: Lattice, F: FilterFamily, indices) -> str:
    return "{" + ", ".join("{" + ",".join(F[i].names()) + "}" for i in indices) + "}"


def _emit(args, payload: dict, text: list) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print("\n".join(text))


def cmd_validate(args) -> int:
    try:
        L = load_lattice(args.path)
    except NotALattice as exc:
        raise _Exit(BAD_INPUT, f"NotALattice: offending pair ({exc.pair[0]}, {exc.pair[1]}): {exc}") from None
    except LatticeError as exc:
        raise _Exit(BAD_INPUT, f"{type(exc).__name__}: {exc}") from None
    payload = {
        "size": L.size,
        "bottom": L.names[L.bottom],
        "top": L.names[L.top],
        "distributive": is_distributive(L),
    }
    _emit(args, payload, [f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in payload.items()])
    return OK


def cmd_represent(args) -> int:
    L = _load(args.path)
    F = _family(L, args.family)
    rep = build_representation(L, F)
    payload = {
        "family": args.family.split(":")[0],
        "filters": family_to_json(F),
        "image": {L.names[a]: list(rep.image[a].members) for a in L.elements},
        "injective": rep.is_injective(),
    }
    text = [f"family: {payload['family']} ({len(F)} filters)"]
    text += [f"  [{i}] {{{', '.join(f.names())}}}" for i, f in enumerate(F)]
    text.append("point map:")
    for a in L.elements:
        members = rep.image[a].members
        text.append(f"  f({L.names[a]}) = " + ("∅" if not members else "{" + ", ".join(map(str, members)) + "}"))
    text.append(f"injective: {str(rep.is_injective()).lower()}")
    _emit(args, payload, text)
    return OK


def _report_lines(L, F, r: VerificationReport) -> list:
    if r.holds:
        return [f"{r.claim}: holds ({r.pairs_checked} pairs)"]
    cx = r.counterexample
    lines = [f"{r.claim}: FAILS at a={cx.a_name}, b={cx.b_name}" + (f" ({cx.note})" if cx.note else "")]
    lines.append(f"  left  = {_fmt_set(L, F, cx.left)}")
    lines.append(f"  right = {_fmt_set(L, F, cx.right)}")
    return lines


def cmd_verify(args) -> int:
    L = _load(args.path)
    F = _family(L, args.family)
    claims = [c.strip() for c in args.claims.split(",") if c.strip()]
    unknown = [c for c in claims if c not in ALL_CLAIMS]
    if unknown:
        raise _Exit(BAD_INPUT, f"unknown claims: {', '.join(unknown)}")
    results, skipped, text = [], {}, []
    supported = F.kind.value in ("all", "principal")
    for claim in claims:
        if claim == "prop1":
            results.extend(verify_prop1(L, F))
        elif claim == "iso":
            results.append(verify_iso(L, F))
        elif claim == "coincidence":
            if supported:
                results.append(check_coincidence(L, F))
            else:
                skipped[claim] = f"only claimed for all/principal families, not {F.kind.value}"
        elif claim == "symmetry":
            if supported:
                results.extend(check_symmetry(L, F))
            else:
                skipped[claim] = f"only claimed for all/principal families, not {F.kind.value}"
        elif claim == "prop2":
            if is_distributive(L):
                r = verify_prop2(L)
                results.append(r)
            else:
                skipped[claim] = "lattice is not distributive"
    primes = prime_filters(L)
    for r in results:
        fam = primes if r.claim == "prop2" else F
        text += _report_lines(L, fam, r)
    text += [f"{c}: skipped ({why})" for c, why in skipped.items()]
    payload = {"family": F.kind.value, "reports": [r.as_dict() for r in results], "skipped": skipped}
    _emit(args, payload, text)
    return OK if all(r.holds for r in results) else FAILED


def cmd_counterexample(args) -> int:
    L = _load(args.path)
    if args.kind == "veestar2-gap":
        if not is_distributive(L):
            raise _Exit(BAD_INPUT, "NotDistributive: veestar2-gap needs a distributive lattice")
        w = veestar2_prime_gap(L)
        if w is None:
            _emit(args, {"kind": args.kind, "witness": None}, ["no gap: f(a)∪f(b) ⊆ f(a)∨**f(b) for all pairs"])
            return FAILED
        a, b, Z = w
        payload = {"kind": args.kind, "witness": {"a": L.names[a], "b": L.names[b], "Z": Z.names()}}
        _emit(args, payload, [f"witness: a={L.names[a]}, b={L.names[b]}, Z={{{', '.join(Z.names())}}}",
                              "  Z ∈ f(a∨b) but Z ∉ f(a)∨**f(b)"])
        return OK
    F = all_filters(L)
    w = union_closure_witness(L, F)
    if w is None:
        _emit(args, {"kind": args.kind, "witness": None}, ["family is union-closed"])
        return FAILED
    X, Y = w
    payload = {"kind": args.kind, "witness": {"X": X.names(), "Y": Y.names()}}
    _emit(args, payload, [f"witness: X={{{', '.join(X.names())}}}, Y={{{', '.join(Y.names())}}}",
                          "  X∪Y is not a filter"])
    return OK


def cmd_census(args) -> int:
    try:
        report = census_report(args.max_size)
    except LatticeError as exc:
        raise _Exit(BAD_INPUT, f"{type(exc).__name__}: {exc}") from None
    body = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(body, encoding="utf-8")
    failed = 0
    for row in report["sizes"]:
        fails = sum(t["fail"] for t in row["claims"].values())
        failed += fails
        print(f"size {row['size']}: {row['lattices']} lattices, {row['distributive']} distributive, {fails} failed checks")
    return OK if failed == 0 else FAILED


def cmd_export_dot(args) -> int:
    L = _load(args.path)
    dot = to_dot(L, Path(args.path).stem)
    if args.out:
        Path(args.out).write_text(dot, encoding="utf-8")
    else:
        sys.stdout.write(dot)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latrep", description="Set-of-sets representation of finite lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    def doc_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("path")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    doc_cmd("validate", cmd_validate, "check that a document describes a lattice")
    sp = doc_cmd("represent", cmd_represent, "print a filter family and the point map")
    sp.add_argument("--family", default="all")
    sp = doc_cmd("verify", cmd_verify, "check the representation identities")
    sp.add_argument("--family", default="all")
    sp.add_argument("--claims", default=",".join(ALL_CLAIMS))
    sp = doc_cmd("counterexample", cmd_counterexample, "search for a witness")
    sp.add_argument("--kind", choices=["veestar2-gap", "union-closure"], required=True)
    sp = sub.add_parser("census", help="enumerate small lattices and tally every claim")
    sp.add_argument("--max-size", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_census)
    sp = sub.add_parser("export-dot", help="write the Hasse diagram in DOT format")
    sp.add_argument("path")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(exc.message, file=sys.stderr if exc.code == BAD_INPUT else sys.stdout)
        return exc.code
    except DocumentError as exc:
        print(str(exc), file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
