"""Command-line interface.

Exit status: 0 on success or a passing check, 1 when a claim is refuted,
2 for usage or input errors, 3 when an instance violates a claim's hypotheses
(or an operation needs a lattice and the order is not one).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .errors import KunzLatticeError, NotALattice, PreconditionViolated
from .family import IdealFamily, enumerate_normalized_ideals
from .ideals import NormalizedIdeal, format_kunz, ideal_minimal_generators
from .order import build_order, irreducibles, is_distributive, is_lattice, to_dot
from .semigroup import NumericalSemigroup, from_generators
from .verify import CLAIMS, run_claim, unitary_extension_defects

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").strip("()").split(",") if v != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _semigroup_json(S: NumericalSemigroup) -> dict[str, Any]:
    return {
        "generators": list(S.minimal_generators),
        "multiplicity": S.multiplicity,
        "frobenius": S.frobenius,
        "conductor": S.conductor,
        "genus": S.genus,
        "gaps": list(S.gaps),
        "kunz": list(S.kunz),
    }


def _ideal_json(I: NormalizedIdeal) -> dict[str, Any]:
    return {
        "kunz": list(I.kunz),
        "genus": I.genus,
        "minimal_generators": list(ideal_minimal_generators(I)),
    }


def _document(semigroup=None, ideals=(), order=None, verdicts=None) -> str:
    doc = {
        "semigroup": semigroup,
        "ideals": list(ideals),
        "order": order,
        "verdicts": verdicts or {},
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_info(S: NumericalSemigroup, args) -> tuple[str, int]:
    if args.format == "json":
        return _document(semigroup=_semigroup_json(S)), EXIT_OK
    lines = [
        f"generators: {' '.join(map(str, S.minimal_generators))}",
        f"multiplicity: {S.multiplicity}",
        f"frobenius: {S.frobenius}",
        f"conductor: {S.conductor}",
        f"genus: {S.genus}",
        f"gaps: {' '.join(map(str, S.gaps)) or '-'}",
        f"kunz: {format_kunz(S.kunz)}",
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_ideals(S: NumericalSemigroup, args) -> tuple[str, int]:
    F = enumerate_normalized_ideals(S)
    chosen = [F.lookup(x) for x in args.ideal] if args.ideal else list(F)
    if args.format == "json":
        return (
            _document(semigroup=_semigroup_json(S), ideals=[_ideal_json(I) for I in chosen]),
            EXIT_OK,
        )
    return "".join(format_kunz(I.kunz) + "\n" for I in chosen), EXIT_OK


def _poset_summary(F: IdealFamily, kind: str) -> dict[str, Any]:
    O = build_order(F, kind)
    check = is_lattice(O)
    out: dict[str, Any] = {
        "kind": kind,
        "size": len(O),
        "cover_edges": len(O.edges),
        "edges": [list(e) for e in O.edges],
        "lattice": check.ok,
        "witness": None,
        "distributive": None,
        "sublattice": None,
    }
    if not check.ok:
        out["witness"] = {
            "pair": [list(I.kunz) for I in check.pair],
            "missing": "join" if check.direction == "upper" else "meet",
            "bounds": [list(I.kunz) for I in check.bounds],
        }
    else:
        dist = is_distributive(O)
        out["distributive"] = dist.ok
        if not dist.ok:
            out["sublattice"] = {
                "shape": dist.shape,
                "elements": [list(I.kunz) for I in dist.sublattice],
            }
    return out


def cmd_poset(S: NumericalSemigroup, args) -> tuple[str, int]:
    F = enumerate_normalized_ideals(S)
    fmt = "dot" if args.dot else args.format
    if fmt == "dot":
        return to_dot(build_order(F, args.kind)), EXIT_OK
    summary = _poset_summary(F, args.kind)
    if fmt == "json":
        return (
            _document(
                semigroup=_semigroup_json(S),
                ideals=[list(I.kunz) for I in F],
                order=summary,
            ),
            EXIT_OK,
        )
    fmt_list = lambda vs: " ".join(format_kunz(v) for v in vs) or "-"
    lines = [
        f"semigroup: {S}",
        f"order: {args.kind}",
        f"size: {summary['size']}",
        f"cover_edges: {summary['cover_edges']}",
        f"lattice: {'yes' if summary['lattice'] else 'no'}",
    ]
    if summary["witness"]:
        w = summary["witness"]
        label = "minimal_upper_bounds" if w["missing"] == "join" else "maximal_lower_bounds"
        lines += [
            f"witness: {fmt_list(w['pair'])}",
            f"missing: {w['missing']}",
            f"{label}: {fmt_list(w['bounds'])}",
            "distributive: n/a",
        ]
    else:
        lines.append(f"distributive: {'yes' if summary['distributive'] else 'no'}")
        if summary["sublattice"]:
            sub = summary["sublattice"]
            lines.append(f"{sub['shape'].lower()}: {fmt_list(sub['elements'])}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_irreducibles(S: NumericalSemigroup, args) -> tuple[str, int]:
    F = enumerate_normalized_ideals(S)
    found = irreducibles(F, args.kind)
    if args.format == "json":
        return (
            _document(
                semigroup=_semigroup_json(S),
                ideals=[_ideal_json(I) for I in found],
                verdicts={"kind": args.kind, "count": len(found)},
            ),
            EXIT_OK,
        )
    return "".join(format_kunz(I.kunz) + "\n" for I in found), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    S = from_generators(args.sg) if args.sg else None
    if S is not None and args.gen is None:
        raise argparse.ArgumentTypeError("--sg needs --gen")
    try:
        params = {
            "semigroup": S,
            "generator": args.gen,
            "genus": args.genus,
            "m": args.m,
            "m_max": args.m_max,
        }
        # unset options fall back to the per-claim defaults
        report = run_claim(args.claim, **{k: v for k, v in params.items() if v is not None})
    except PreconditionViolated as exc:
        text = f"precondition violated: {exc}\n"
        if args.claim == "unitary-extension" and S is not None:
            try:
                defects = unitary_extension_defects(S, args.gen)
            except PreconditionViolated:
                defects = None
            if defects is not None:
                text += "direct comparison:\n"
                text += "".join(f"  {k}: {' '.join(v)}\n" for k, v in defects.items()) or "  no defects\n"
        return text, EXIT_PRECONDITION
    body = (
        _document(verdicts=report.to_dict()) if args.format == "json" else report.to_text()
    )
    return body, EXIT_OK if report.passed else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kunzlattice",
        description="Ideal class monoids of numerical semigroups in Kunz coordinates.",
    )
    parser.add_argument("-o", "--output", help="write to this file instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_gens(name: str, help: str, formats=("text", "json")) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("generators", nargs="+", type=int, metavar="GEN")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("-o", "--output", default=argparse.SUPPRESS)
        return p

    with_gens("info", "invariants of the semigroup")
    p = with_gens("ideals", "Kunz coordinates of every normalized ideal")
    p.add_argument(
        "--ideal",
        action="append",
        type=_int_list,
        metavar="X1,...,Xm-1",
        help="only this ideal (repeatable); must satisfy the Kunz inequalities",
    )
    p = with_gens("poset", "order statistics or a Hasse diagram", ("text", "json", "dot"))
    p.add_argument("--kind", choices=("preceq", "subset"), default="preceq")
    p.add_argument("--dot", action="store_true", help="same as --format dot")
    p = with_gens("irreducibles", "irreducible ideals of one kind")
    p.add_argument(
        "--kind",
        choices=("plus", "join", "meet", "union", "intersection"),
        required=True,
    )

    p = sub.add_parser("verify", help="check a claim over a range of semigroups")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--genus", type=int, default=None, help="genus bound for sweeps")
    p.add_argument("--sg", type=_int_list, help="a single semigroup, as comma-separated generators")
    p.add_argument("--gen", type=int, help="minimal generator to remove (with --sg)")
    p.add_argument("--m", type=int, help="single multiplicity (ordinary-extension)")
    p.add_argument("--m-max", type=int, default=None, help="largest multiplicity to sweep")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output", default=argparse.SUPPRESS)
    return parser


COMMANDS = {
    "info": cmd_info,
    "ideals": cmd_ideals,
    "poset": cmd_poset,
    "irreducibles": cmd_irreducibles,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            text, code = cmd_verify(args)
        else:
            S = from_generators(args.generators)
            text, code = COMMANDS[args.command](S, args)
    except NotALattice as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PreconditionViolated as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (KunzLatticeError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
