"""Command-line front end.

Exit codes: 0 success, 1 unreadable input or bad arguments, 2 invalid algebra
(or an operation whose precondition the algebra fails), 3 internal
certificate failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import catalog
from . import radicals as rd
from . import structure as st
from .algebra import (
    LieAlgebra,
    centre,
    derivations,
    derived_algebra,
    direct_product,
    killing_form,
    semidirect_product,
)
from .checks import invariant_suite
from .errors import AlgebraError, InternalError, LieRadicalsError, ParseError
from .io import (
    algebra_to_dict,
    dumps_algebra,
    load_algebra,
    matrix_to_rows,
    read_json,
    semidirect_spec_from_dict,
    subspace_to_dict,
)
from .linalg import Matrix, Subspace
from .report import build_report, render_text

EXIT_OK, EXIT_PARSE, EXIT_ALGEBRA, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _load(source: str) -> LieAlgebra:
    """A JSON file, or ``catalog:<name>`` for a built-in algebra."""
    if source.startswith("catalog:"):
        return catalog.build(source[len("catalog:"):])
    return load_algebra(source)


# --------------------------------------------------------------------------
# op registry
# --------------------------------------------------------------------------
def _verdict_json(v: st.Verdict) -> dict:
    out = {"answer": v.answer, "tag": v.tag, "heuristic": v.heuristic, "notes": list(v.notes),
           "violations": [{"condition": x.condition, "detail": x.detail,
                           "subspace": subspace_to_dict(x.subspace)} for x in v.violations]}
    w = v.witness
    if isinstance(w, st.FrattiniFreeWitness):
        out["witness"] = {"C": subspace_to_dict(w.C), "S": subspace_to_dict(w.S), "J": subspace_to_dict(w.J),
                          "blocks": [{"space": subspace_to_dict(b.space),
                                      "weights": None if b.weights is None else [str(c) for c in b.weights]}
                                     for b in w.blocks],
                          "complete": w.complete}
    elif isinstance(w, st.JacobsonFreeWitness):
        out["witness"] = {"semisimple": subspace_to_dict(w.semisimple), "centre": subspace_to_dict(w.centre)}
    elif w is not None:
        out["witness"] = _to_json(w)
    return out


def _to_json(x):
    if isinstance(x, Subspace):
        return subspace_to_dict(x)
    if isinstance(x, st.PartialSplit):
        return {"partial": True, "reason": x.reason, "parts": [subspace_to_dict(p) for p in x.parts]}
    if isinstance(x, st.Verdict):
        return _verdict_json(x)
    if isinstance(x, st.LeviWitness):
        return {"levi": subspace_to_dict(x.levi), "radical": subspace_to_dict(x.radical)}
    if isinstance(x, rd.SeriesRecord):
        return {"kind": x.kind, "dims": x.dims, "stabilized_at": x.stabilized_at,
                "terms": [subspace_to_dict(t) for t in x.terms[: x.stabilized_at + 1]]}
    if isinstance(x, rd.RadicalIndices):
        return {"r_frattini": x.r_frattini, "r_jacobson": x.r_jacobson}
    if isinstance(x, rd.Obstruction):
        return {"nil_bracket": subspace_to_dict(x.nil_bracket),
                "nonsemisimple": subspace_to_dict(x.nonsemisimple),
                "central_derived": subspace_to_dict(x.central_derived)}
    if isinstance(x, list):
        return [_to_json(y) for y in x]
    if isinstance(x, Matrix):
        return matrix_to_rows(x)
    return x


OPS: dict[str, Callable[[LieAlgebra], object]] = {
    "centre": centre,
    "derived_algebra": derived_algebra,
    "derived_series": rd.derived_series,
    "lower_central_series": rd.lower_central_series,
    "solvability_index": rd.solvability_index,
    "nilpotency_index": rd.nilpotency_index,
    "is_solvable": rd.is_solvable,
    "is_nilpotent": rd.is_nilpotent,
    "is_semisimple": rd.is_semisimple,
    "killing_form": killing_form,
    "derivations": derivations,
    "solvable_radical": rd.solvable_radical,
    "vasilescu_radical": rd.vasilescu_radical,
    "nilradical": rd.nilradical,
    "jacobson_ideal": rd.jacobson_ideal,
    "levi_radical": rd.levi_radical,
    "lower_central_radical": rd.lower_central_radical,
    "frattini_ideal": rd.frattini_ideal,
    "frattini_obstruction": rd.frattini_obstruction,
    "radical_indices": rd.radical_indices,
    "levi_decomposition": st.levi_decomposition,
    "largest_semisimple_ideal": st.largest_semisimple_ideal,
    "simple_components": st.simple_components,
    "direct_summands": st.direct_summands,
    "frattini_free": st.frattini_free,
    "jacobson_free": st.jacobson_free,
    "subsimple": st.subsimple,
    "submaximal_witness_family": st.submaximal_witness_family,
    "superpose_derived": rd.superpose(rd.derived_step),
    "superpose_lower_central": rd.superpose(rd.LOWER_CENTRAL),
    "star_frattini": rd.star(rd.FRATTINI),
    "star_jacobson": rd.star(rd.JACOBSON),
}


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------
def cmd_analyze(args) -> int:
    L = _load(args.file)
    report = build_report(L)
    print(report.to_json() if args.json else render_text(L, report))
    return EXIT_OK


def cmd_verify(args) -> int:
    L = _load(args.file)
    results = invariant_suite(L, samples=args.samples)
    for c in results:
        line = f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
        print(line + (f"  ({c.detail})" if c.detail and not c.passed else ""))
    failed = sum(not c.passed for c in results)
    print(f"{len(results) - failed}/{len(results)} invariants hold")
    return EXIT_OK if not failed else EXIT_INTERNAL


def cmd_op(args) -> int:
    if args.name not in OPS:
        raise ParseError(f"unknown operation {args.name!r}; known: {', '.join(sorted(OPS))}")
    L = _load(args.file)
    result = OPS[args.name](L)
    print(json.dumps({"op": args.name, "algebra": L.name, "result": _to_json(result)}, indent=2))
    return EXIT_OK


def cmd_product(args) -> int:
    if args.kind == "direct":
        if len(args.inputs) < 2:
            raise ParseError("direct product needs at least two algebra files")
        L = direct_product([_load(p) for p in args.inputs])
    else:
        if len(args.inputs) != 1:
            raise ParseError("semidirect product takes exactly one spec file")
        L1, L0, phi, name = semidirect_spec_from_dict(read_json(args.inputs[0]))
        L = semidirect_product(L1, L0, phi, name)
    print(dumps_algebra(L))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for e in catalog.list_entries():
            params = f"(n), n in [{e.min_param}, {e.max_param}]" if e.arity else ""
            print(f"{e.name}{params}  {e.description}")
        return EXIT_OK
    if not args.name:
        raise ParseError("catalog emit needs an entry name")
    L = catalog.build(args.name, *args.params)
    print(json.dumps(algebra_to_dict(L), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lieradicals", description="Radicals and structure of Lie algebras over Q(i).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="full structure report")
    a.add_argument("file", help="algebra JSON file or catalog:<name>")
    a.add_argument("--json", action="store_true", help="emit the JSON report")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run the invariant suite")
    v.add_argument("file")
    v.add_argument("--samples", type=int, default=50, help="nilradical membership samples")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("op", help="run one named operation and print JSON")
    o.add_argument("name")
    o.add_argument("file")
    o.set_defaults(func=cmd_op)

    pr = sub.add_parser("product", help="direct or semidirect product")
    pr.add_argument("kind", choices=["direct", "semidirect"])
    pr.add_argument("inputs", nargs="+")
    pr.set_defaults(func=cmd_product)

    c = sub.add_parser("catalog", help="built-in algebras")
    c.add_argument("action", choices=["list", "emit"])
    c.add_argument("name", nargs="?")
    c.add_argument("params", nargs="*", type=int)
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (catalog.UnknownEntry, catalog.BadParams) as exc:
        print(f"catalog error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AlgebraError as exc:
        print(f"invalid algebra: {exc}", file=sys.stderr)
        return EXIT_ALGEBRA
    except InternalError as exc:
        print(f"internal certificate failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except LieRadicalsError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ALGEBRA


if __name__ == "__main__":
    sys.exit(main())
