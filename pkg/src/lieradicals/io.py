"""JSON encoding of algebras, subspaces and operator lists.

Algebra documents look like::

    {"name": "heisenberg3", "dim": 3, "basis": ["x", "y", "z"],
     "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}]}

Only pairs with ``i < j`` may appear; omitted pairs bracket to zero.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .algebra import LieAlgebra, make_algebra
from .errors import ParseError, ScalarParseError
from .linalg import Matrix, Subspace, to_dense
from .scalars import GaussianRational, parse_scalar


def scalar_text(c) -> str:
    return str(GaussianRational.coerce(c))


def _scalar(value: Any, where: str) -> GaussianRational:
    if isinstance(value, bool):
        raise ParseError("boolean is not a scalar", where)
    if isinstance(value, int):
        return GaussianRational(value)
    try:
        return parse_scalar(value)
    except ScalarParseError as exc:
        raise ParseError(str(exc), where) from exc


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", where)
    return value


# --------------------------------------------------------------------------
# algebras
# --------------------------------------------------------------------------
def algebra_to_dict(L: LieAlgebra) -> dict:
    brackets = []
    for (i, j) in sorted(k for k in L.table if k[0] < k[1]):
        row = L.table[(i, j)]
        brackets.append({"i": i, "j": j, "coeffs": {str(k): scalar_text(row[k]) for k in sorted(row)}})
    return {"name": L.name, "dim": L.dim, "basis": list(L.labels), "brackets": brackets}


def algebra_from_dict(doc: Any, where: str = "") -> LieAlgebra:
    """Parse and validate; raises :class:`ParseError` or an :class:`AlgebraError`."""
    at = (lambda key: f"{where}.{key}" if where else key)
    if not isinstance(doc, dict):
        raise ParseError("algebra document must be a JSON object", where or "$")
    for key in ("dim", "brackets"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}", where or "$")
    dim = _int(doc["dim"], at("dim"))
    if dim < 0:
        raise ParseError("dimension must be non-negative", at("dim"))
    labels = doc.get("basis")
    if labels is None:
        labels = [f"b{k}" for k in range(dim)]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ParseError("basis must be a list of strings", at("basis"))
    if len(labels) != dim:
        raise ParseError(f"basis has {len(labels)} labels but dim is {dim}", at("basis"))
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name must be a string", at("name"))
    entries = doc["brackets"]
    if not isinstance(entries, list):
        raise ParseError("brackets must be a list", at("brackets"))
    table: dict[tuple[int, int], dict[int, GaussianRational]] = {}
    for n, entry in enumerate(entries):
        loc = at(f"brackets[{n}]")
        if not isinstance(entry, dict):
            raise ParseError("bracket entry must be an object", loc)
        for key in ("i", "j", "coeffs"):
            if key not in entry:
                raise ParseError(f"missing key {key!r}", loc)
        i, j = _int(entry["i"], f"{loc}.i"), _int(entry["j"], f"{loc}.j")
        if not (0 <= i < j < dim):
            raise ParseError(f"need 0 <= i < j < {dim}, got i={i}, j={j}", loc)
        if (i, j) in table:
            raise ParseError(f"pair ({i}, {j}) given twice", loc)
        coeffs = entry["coeffs"]
        if not isinstance(coeffs, dict):
            raise ParseError("coeffs must be an object", f"{loc}.coeffs")
        row = {}
        for k, v in coeffs.items():
            try:
                kk = int(k)
            except ValueError:
                raise ParseError(f"coordinate key {k!r} is not an integer", f"{loc}.coeffs") from None
            if not 0 <= kk < dim:
                raise ParseError(f"coordinate {kk} out of range", f"{loc}.coeffs")
            c = _scalar(v, f"{loc}.coeffs.{k}")
            if c:
                row[kk] = c
        table[(i, j)] = row
    return make_algebra(dim, labels, table, name)


def loads_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from exc


def read_json(path) -> Any:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file ({exc.strerror})", str(p)) from exc
    except UnicodeDecodeError as exc:
        raise ParseError("file is not UTF-8", str(p)) from exc
    return loads_json(text, str(p))


def load_algebra(path) -> LieAlgebra:
    return algebra_from_dict(read_json(path))


def dumps_algebra(L: LieAlgebra) -> str:
    return json.dumps(algebra_to_dict(L), indent=2, ensure_ascii=False)


# --------------------------------------------------------------------------
# subspaces and operators
# --------------------------------------------------------------------------
def subspace_to_rows(U: Subspace) -> list[list[str]]:
    """Echelon basis rows in ambient coordinates, as scalar text."""
    return [[scalar_text(c) for c in to_dense(r, U.ambient_dim)] for r in U.sparse_basis]


def subspace_to_dict(U: Subspace) -> dict:
    return {"dim": U.dim, "rows": subspace_to_rows(U)}


def subspace_from_dict(doc: dict, ambient_dim: int, where: str = "") -> Subspace:
    rows = doc.get("rows", [])
    vecs = []
    for n, row in enumerate(rows):
        if len(row) != ambient_dim:
            raise ParseError(f"row has {len(row)} entries, expected {ambient_dim}", f"{where}.rows[{n}]")
        vecs.append([_scalar(c, f"{where}.rows[{n}][{k}]") for k, c in enumerate(row)])
    U = Subspace(ambient_dim, vecs)
    if U.dim != len(rows):
        raise ParseError("rows are linearly dependent", where)
    return U


def matrix_to_rows(M: Matrix) -> list[list[str]]:
    return [[scalar_text(c) for c in row] for row in M]


def matrix_from_rows(rows: Any, where: str) -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("matrix must be a list of rows", where)
    width = {len(r) for r in rows}
    if len(width) > 1:
        raise ParseError("matrix rows have different lengths", where)
    return Matrix([[_scalar(c, f"{where}[{a}][{b}]") for b, c in enumerate(r)] for a, r in enumerate(rows)],
                  width.pop() if width else 0)


def semidirect_spec_from_dict(doc: Any) -> tuple[LieAlgebra, LieAlgebra, list[Matrix], str]:
    """``{"acting": algebra, "ideal": algebra, "phi": [matrix per acting basis vector], "name"?}``."""
    if not isinstance(doc, dict):
        raise ParseError("semidirect spec must be a JSON object", "$")
    for key in ("acting", "ideal", "phi"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}", "$")
    L1 = algebra_from_dict(doc["acting"], "acting")
    L0 = algebra_from_dict(doc["ideal"], "ideal")
    phi = doc["phi"]
    if not isinstance(phi, list):
        raise ParseError("phi must be a list of matrices", "phi")
    mats = [matrix_from_rows(m, f"phi[{k}]") for k, m in enumerate(phi)]
    return L1, L0, mats, doc.get("name", "")
