"""Structure reports: the full analysis of one algebra as plain JSON data."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields

from . import catalog
from . import radicals as rd
from . import structure as st
from .algebra import LieAlgebra, centre, derived_algebra, describe, is_ideal
from .errors import ParseError
from .io import scalar_text, subspace_from_dict, subspace_to_dict
from .linalg import Subspace
from .scalars import parse_scalar

SCHEMA = 1

SUBSPACE_KEYS = ("centre", "derived", "rad", "nilradical", "jacobson", "frattini",
                 "levi_radical", "largest_semisimple_ideal", "levi_subalgebra")


@dataclass
class StructureReport:
    name: str
    dim: int
    flags: dict
    centre_dim: int
    derived_dims: list
    lower_central_dims: list
    subspaces: dict
    indices: dict
    verdicts: dict
    summands: dict
    notes: list = field(default_factory=list)
    schema: int = SCHEMA

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_dict(cls, doc: dict) -> "StructureReport":
        names = {f.name for f in fields(cls)}
        missing = names - set(doc) - {"notes", "schema"}
        if missing:
            raise ParseError(f"report lacks keys {sorted(missing)}")
        if doc.get("schema", SCHEMA) != SCHEMA:
            raise ParseError(f"unsupported report schema {doc.get('schema')}")
        return cls(**{k: v for k, v in doc.items() if k in names})

    @classmethod
    def from_json(cls, text: str) -> "StructureReport":
        return cls.from_dict(json.loads(text))


def _violations(v: st.Verdict) -> list:
    return [{"condition": x.condition, "detail": x.detail, "subspace": subspace_to_dict(x.subspace)}
            for x in v.violations]


def _frattini_verdict(L: LieAlgebra) -> dict:
    v = st.frattini_free(L)
    out = {"answer": v.answer, "violations": _violations(v), "notes": list(v.notes)}
    if v.answer:
        w = v.witness
        out["witness"] = {
            "C": subspace_to_dict(w.C),
            "S": subspace_to_dict(w.S),
            "J": subspace_to_dict(w.J),
            "blocks": [{"space": subspace_to_dict(b.space),
                        "weights": None if b.weights is None else [scalar_text(c) for c in b.weights]}
                       for b in w.blocks],
            "complete": w.complete,
        }
        fam = st.submaximal_witness_family(L)
        partial = isinstance(fam, st.PartialSplit)
        out["submaximal_family"] = [subspace_to_dict(I) for I in (fam.parts if partial else fam)]
        out["submaximal_family_complete"] = not partial
    return out


def _jacobson_verdict(L: LieAlgebra) -> dict:
    v = st.jacobson_free(L)
    out = {"answer": v.answer, "violations": _violations(v)}
    if v.answer:
        out["witness"] = {"semisimple": subspace_to_dict(v.witness.semisimple),
                          "centre": subspace_to_dict(v.witness.centre)}
    return out


def _subsimple_verdict(L: LieAlgebra) -> dict:
    v = st.subsimple(L)
    return {"answer": v.answer, "tag": v.tag, "heuristic": v.heuristic, "notes": list(v.notes)}


def build_report(L: LieAlgebra, nil_samples: int = 50) -> StructureReport:
    ds, lcs = rd.derived_series(L), rd.lower_central_series(L)
    semisimple = rd.is_semisimple(L)
    simple = False
    if semisimple and L.dim:
        comps = st.simple_components(L)
        simple = not isinstance(comps, st.PartialSplit) and len(comps) == 1
    flags = {
        "abelian": L.is_abelian(),
        "nilpotent": rd.is_nilpotent(L),
        "nilpotency_index": rd.nilpotency_index(L),
        "solvable": rd.is_solvable(L),
        "solvability_index": rd.solvability_index(L),
        "semisimple": semisimple,
        "simple": simple,
    }
    spaces = {
        "centre": centre(L),
        "derived": derived_algebra(L),
        "rad": rd.solvable_radical(L),
        "nilradical": rd.nilradical(L, samples=nil_samples),
        "jacobson": rd.jacobson_ideal(L),
        "frattini": rd.frattini_ideal(L),
        "levi_radical": rd.levi_radical(L),
        "largest_semisimple_ideal": st.largest_semisimple_ideal(L),
        "levi_subalgebra": st.levi_decomposition(L).levi,
    }
    r = rd.radical_indices(L)
    summ = st.direct_summands(L)
    if isinstance(summ, st.PartialSplit):
        summands = {"complete": False, "dims": [p.dim for p in summ.parts]}
    else:
        summands = {"complete": True, "dims": [p.dim for p in summ]}
    notes = catalog.notes_for(L.name)
    return StructureReport(
        name=L.name,
        dim=L.dim,
        flags=flags,
        centre_dim=spaces["centre"].dim,
        derived_dims=ds.dims,
        lower_central_dims=lcs.dims,
        subspaces={k: subspace_to_dict(U) for k, U in spaces.items()},
        indices={"r_frattini": r.r_frattini, "r_jacobson": r.r_jacobson},
        verdicts={
            "subsimple": _subsimple_verdict(L),
            "frattini_free": _frattini_verdict(L),
            "jacobson_free": _jacobson_verdict(L),
        },
        summands=summands,
        notes=notes,
    )


def recheck_report(L: LieAlgebra, report: StructureReport) -> list[str]:
    """Re-verify every subspace of a report against the algebra; returns failures."""
    out = []
    if report.dim != L.dim:
        return [f"report dimension {report.dim} differs from algebra dimension {L.dim}"]
    parsed = {k: L.span(subspace_from_dict(v, L.dim, k).basis) for k, v in report.subspaces.items()}
    for k in SUBSPACE_KEYS:
        if k == "levi_subalgebra":
            continue
        if not is_ideal(L, parsed[k]):
            out.append(f"{k} is not an ideal")
    for k, U in parsed.items():
        if U.dim != report.subspaces[k]["dim"]:
            out.append(f"{k}: recorded dim differs from its rows")
    recomputed = {
        "rad": rd.solvable_radical(L),
        "nilradical": rd.nilradical(L, samples=0),
        "jacobson": rd.jacobson_ideal(L),
        "frattini": rd.frattini_ideal(L),
        "levi_radical": rd.levi_radical(L),
        "largest_semisimple_ideal": st.largest_semisimple_ideal(L),
        "centre": centre(L),
        "derived": derived_algebra(L),
    }
    for k, U in recomputed.items():
        if parsed[k] != U:
            out.append(f"{k}: report has {describe(L, parsed[k])}, recomputed {describe(L, U)}")
    numbers = {
        "centre_dim": (report.centre_dim, recomputed["centre"].dim),
        "derived_dims": (report.derived_dims, rd.derived_series(L).dims),
        "lower_central_dims": (report.lower_central_dims, rd.lower_central_series(L).dims),
    }
    for k, (got, want) in numbers.items():
        if _plain(got) != _plain(want):
            out.append(f"{k}: report has {got}, recomputed {want}")
    ff = report.verdicts["frattini_free"]
    if ff["answer"]:
        w = ff["witness"]
        space = lambda d, where: L.span(subspace_from_dict(d, L.dim, where).basis)  # noqa: E731
        C, S, J = space(w["C"], "C"), space(w["S"], "S"), space(w["J"], "J")
        blocks = []
        for n, b in enumerate(w["blocks"]):
            weights = None if b["weights"] is None else tuple(_scalars(b["weights"]))
            blocks.append(st.Block(space(b["space"], f"blocks[{n}]"), weights))
        out += st.check_frattini_witness(L, st.FrattiniFreeWitness(C, S, J, tuple(blocks), w["complete"]))
        fam = [space(d, f"family[{n}]") for n, d in enumerate(ff["submaximal_family"])]
        out += st.check_submaximal_family(L, fam, require_subsimple=ff["submaximal_family_complete"])
    return out


def _plain(x):
    return list(x) if isinstance(x, (list, tuple)) else x


def _scalars(texts):
    return [parse_scalar(t) for t in texts]


def _fmt_space(L: LieAlgebra, d: dict) -> str:
    U = Subspace(L.dim, subspace_from_dict(d, L.dim).basis)
    return f"dim {d['dim']}: {describe(L, U)}"


def render_text(L: LieAlgebra, report: StructureReport) -> str:
    f = report.flags
    lines = [f"algebra {report.name or '(unnamed)'}  dim {report.dim}"]
    props = []
    if f["abelian"]:
        props.append("abelian")
    if f["nilpotent"]:
        props.append(f"nilpotent (index {f['nilpotency_index']})")
    if f["solvable"]:
        props.append(f"solvable (i_s = {f['solvability_index']})")
    if f["semisimple"]:
        props.append("simple" if f["simple"] else "semisimple")
    lines.append("  " + (", ".join(props) if props else "not solvable, not semisimple"))
    lines.append(f"  centre dim {report.centre_dim}")
    lines.append(f"  derived series dims {report.derived_dims}")
    lines.append(f"  lower central series dims {report.lower_central_dims}")
    for k in SUBSPACE_KEYS:
        lines.append(f"  {k:<25} {_fmt_space(L, report.subspaces[k])}")
    lines.append(f"  r_frattini {report.indices['r_frattini']}   r_jacobson {report.indices['r_jacobson']}")
    v = report.verdicts
    ss = v["subsimple"]
    lines.append(f"  subsimple: {'yes' if ss['answer'] else 'no'} ({ss['tag']})"
                 + (" [heuristic isomorphism]" if ss["heuristic"] else ""))
    for key in ("frattini_free", "jacobson_free"):
        d = v[key]
        lines.append(f"  {key}: {'yes' if d['answer'] else 'no'}")
        for x in d["violations"]:
            lines.append(f"    violated: {x['detail']}; offending {_fmt_space(L, x['subspace'])}")
        if key == "frattini_free" and d["answer"]:
            w = d["witness"]
            lines.append(f"    C {_fmt_space(L, w['C'])}")
            lines.append(f"    S {_fmt_space(L, w['S'])}")
            lines.append(f"    J {_fmt_space(L, w['J'])}")
            for b in w["blocks"]:
                wt = "not scalar over Q(i)" if b["weights"] is None else ", ".join(b["weights"]) or "-"
                lines.append(f"      block {_fmt_space(L, b['space'])}; C weights {wt}")
            lines.append(f"    submaximal family dims: {[s['dim'] for s in d['submaximal_family']]}"
                         + ("" if d["submaximal_family_complete"] else " (partial over Q(i))"))
    s = report.summands
    lines.append(f"  direct summand dims {s['dims']}" + ("" if s["complete"] else " (partial split)"))
    for n in report.notes:
        lines.append(f"  note: {n}")
    return "\n".join(lines)
