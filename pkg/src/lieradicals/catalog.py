"""Built-in model algebras and their expected properties.

Every expectation carries a tag: ``KNOWN`` (a standard published value),
``DERIVED`` (hand computation checked independently in the test suite) or
``TRIVIAL``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable

from .algebra import LieAlgebra, direct_product, make_algebra, semidirect_product
from .errors import LieRadicalsError
from .linalg import Matrix, solve


class UnknownEntry(LieRadicalsError, KeyError):
    pass


class BadParams(LieRadicalsError, ValueError):
    pass


# --------------------------------------------------------------------------
# matrix algebras
# --------------------------------------------------------------------------
def unit_matrix(n: int, i: int, j: int) -> Matrix:
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = 1
    return Matrix(rows)


def matrix_lie_algebra(mats: list[Matrix], labels: list[str], name: str) -> LieAlgebra:
    """Structure constants of a commutator-closed span of matrices."""
    flat = Matrix.from_columns([m.flatten() for m in mats], mats[0].rows ** 2)
    table = {}
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            comm = mats[a] @ mats[b] - mats[b] @ mats[a]
            if comm.is_zero():
                continue
            coords = solve(flat, comm.flatten())
            if coords is None:
                raise BadParams(f"{name}: matrices are not closed under commutators")
            table[(a, b)] = {k: v for k, v in enumerate(coords) if v}
    return make_algebra(len(mats), labels, table, name)


def sl_basis(n: int) -> tuple[list[Matrix], list[str]]:
    if n == 2:
        h = unit_matrix(2, 0, 0) - unit_matrix(2, 1, 1)
        return [h, unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)], ["h", "e", "f"]
    mats, labels = [], []
    for k in range(n - 1):
        mats.append(unit_matrix(n, k, k) - unit_matrix(n, k + 1, k + 1))
        labels.append(f"h{k + 1}")
    for i in range(n):
        for j in range(i + 1, n):
            mats.append(unit_matrix(n, i, j))
            labels.append(f"e{i + 1}{j + 1}")
    for i in range(n):
        for j in range(i):
            mats.append(unit_matrix(n, i, j))
            labels.append(f"e{i + 1}{j + 1}")
    return mats, labels


def _entries(n: int, keep: Callable[[int, int], bool]):
    mats, labels = [], []
    for i in range(n):
        for j in range(n):
            if keep(i, j):
                mats.append(unit_matrix(n, i, j))
                labels.append(f"e{i + 1}{j + 1}")
    return mats, labels


def abelian(n: int) -> LieAlgebra:
    return make_algebra(n, [f"a{k + 1}" for k in range(n)], {}, f"abelian({n})")


def heisenberg3() -> LieAlgebra:
    return make_algebra(3, ["x", "y", "z"], {(0, 1): {2: 1}}, "heisenberg3")


def borel2() -> LieAlgebra:
    # h = diag(1, -1), e = e12
    return make_algebra(2, ["h", "e"], {(0, 1): {1: 2}}, "borel2")


def sl(n: int) -> LieAlgebra:
    mats, labels = sl_basis(n)
    return matrix_lie_algebra(mats, labels, f"sl({n})")


def gl(n: int) -> LieAlgebra:
    mats, labels = _entries(n, lambda i, j: True)
    return matrix_lie_algebra(mats, labels, f"gl({n})")


def upper_triangular(n: int) -> LieAlgebra:
    mats, labels = _entries(n, lambda i, j: i <= j)
    return matrix_lie_algebra(mats, labels, f"t({n})")


def strictly_upper(n: int) -> LieAlgebra:
    mats, labels = _entries(n, lambda i, j: i < j)
    if not mats:
        return make_algebra(0, [], {}, f"n({n})")
    return matrix_lie_algebra(mats, labels, f"n({n})")


def class_two(n: int) -> LieAlgebra:
    """``sl(n)`` acting on ``C^n`` by its defining representation."""
    mats, _ = sl_basis(n)
    X = make_algebra(n, [f"v{k + 1}" for k in range(n)], {}, f"C^{n}")
    return semidirect_product(sl(n), X, mats, f"classII({n})")


def class_one() -> LieAlgebra:
    return direct_product([sl(2), sl(2)], "classI")


def cext4() -> LieAlgebra:
    return make_algebra(4, ["x", "y", "n1", "n2"], {(0, 1): {2: 1}, (0, 3): {3: 1}}, "cext4")


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class Expectation:
    value: object
    tag: str
    note: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    arity: int  # number of integer parameters
    builder: Callable[..., LieAlgebra]
    min_param: int = 1
    max_param: int = 8
    description: str = ""
    notes: tuple = field(default=())


ENTRIES: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("abelian", 1, abelian, 0, 21, "commutative algebra of dimension n"),
        CatalogEntry("heisenberg3", 0, heisenberg3, description="[x,y] = z"),
        CatalogEntry("borel2", 0, borel2, description="upper triangular matrices in sl(2); [h,e] = 2e"),
        CatalogEntry("sl", 1, sl, 2, 4, "traceless n x n matrices"),
        CatalogEntry("gl", 1, gl, 1, 4, "all n x n matrices"),
        CatalogEntry("t", 1, upper_triangular, 1, 8, "all upper triangular n x n matrices"),
        CatalogEntry("n", 1, strictly_upper, 1, 8, "strictly upper triangular n x n matrices"),
        CatalogEntry("classII", 1, class_two, 2, 4, "sl(n) acting on C^n by the identity representation"),
        CatalogEntry("classI", 0, class_one, description="sl(2) + sl(2)"),
        CatalogEntry("cext4", 0, cext4, description="[x,y] = n1, [x,n2] = n2"),
    ]
}

_NAME = re.compile(r"^(?P<base>[A-Za-z_]+[A-Za-z_0-9]*?)(?:\((?P<p>\d+)\)|(?P<q>\d+))?$")


def list_entries() -> list[CatalogEntry]:
    return list(ENTRIES.values())


def _lookup(name: str, params) -> tuple[CatalogEntry, tuple]:
    params = tuple(int(p) for p in params)
    entry = ENTRIES.get(name)
    if entry is None:
        m = _NAME.match(name)
        if m and m.group("base") in ENTRIES and not params:
            entry = ENTRIES[m.group("base")]
            p = m.group("p") or m.group("q")
            params = (int(p),) if p else ()
    if entry is None:
        raise UnknownEntry(name)
    if len(params) != entry.arity:
        raise BadParams(f"{entry.name} takes {entry.arity} parameter(s), got {len(params)}")
    for p in params:
        if not entry.min_param <= p <= entry.max_param:
            raise BadParams(f"{entry.name}: parameter {p} outside [{entry.min_param}, {entry.max_param}]")
    return entry, params


def parse_name(name: str) -> tuple[str, tuple]:
    """Catalog key and parameters of a name like ``"t(4)"``; raises :class:`UnknownEntry`."""
    entry, params = _lookup(name, ())
    return entry.name, params


def build(name: str, *params) -> LieAlgebra:
    entry, params = _lookup(name, params)
    return entry.builder(*params)


def _span(*vectors: dict) -> list:
    return [dict(v) for v in vectors]


def _labels(*labels: str) -> list:
    return [{lab: "1"} for lab in labels]


def _ceil_log2(n: int) -> int:
    return math.ceil(math.log2(n)) if n > 1 else 0


def erratum_note(n: int) -> str:
    return (
        f"t({n}): the index formula '= n' would give r_jacobson = {n}, but i_s(n({n})) = "
        f"ceil(log2 {n}) = {_ceil_log2(n)} so r_jacobson = {_ceil_log2(n) + 1}"
    )


def notes_for(name: str, params=()) -> list[str]:
    """Report notes attached to a catalog algebra (currently the t(n) index erratum)."""
    try:
        entry, params = _lookup(name, params)
    except LieRadicalsError:
        return []
    if entry.name == "t" and params[0] >= 4:
        return [erratum_note(params[0])]
    return []


def expected_table(name: str, *params) -> dict[str, Expectation]:
    entry, params = _lookup(name, params)
    P, D, T = "KNOWN", "DERIVED", "TRIVIAL"
    key = entry.name
    if key == "heisenberg3":
        return {
            "dim": Expectation(3, T),
            "centre_dim": Expectation(1, P, "nilpotent, phi = [L, L] = centre"),
            "derived_dims": Expectation([3, 1, 0], P, "nilpotent, phi = [L, L] = centre"),
            "frattini": Expectation(_labels("z"), P, "nilpotent, phi = [L, L] = centre"),
            "jacobson": Expectation(_labels("z"), D),
            "frattini_free": Expectation(False, P, "nilpotent, phi = [L, L] = centre"),
            "subsimple": Expectation("not_subsimple", P, "nilpotent of dim > 1"),
            "indices": Expectation((2, 2), D, "nilpotent: both equal i_s(L)"),
        }
    if key == "borel2":
        return {
            "dim": Expectation(2, T),
            "jacobson": Expectation(_labels("e"), P, "rad acts irreducibly on span{e}"),
            "frattini": Expectation([], P, "rad acts irreducibly on span{e}"),
            "nilradical": Expectation(_labels("e"), D),
            "jacobson_free": Expectation(False, D),
            "frattini_free": Expectation(True, P, "rad acts irreducibly on span{e}"),
            "subsimple": Expectation("classII", P, "solvable, abelian nilradical, irreducible action"),
            "indices": Expectation((1, 2), D),
        }
    if key == "cext4":
        return {
            "dim": Expectation(4, T),
            "frattini": Expectation(_labels("n1"), D, "n1 in Z cap [L,L]; quotient is Frattini-free"),
            "frattini_free": Expectation(False, D),
            "frattini_violations": Expectation(["nonsemisimple", "central_derived"], D),
        }
    if key == "abelian":
        n = params[0]
        labels = [f"a{k + 1}" for k in range(n)]
        return {
            "dim": Expectation(n, T),
            "rad": Expectation(_labels(*labels), T),
            "nilradical": Expectation(_labels(*labels), T),
            "jacobson": Expectation([], T),
            "frattini": Expectation([], T),
            "jacobson_free": Expectation(True, T),
            "indices": Expectation((min(n, 1), min(n, 1)), T),
        }
    if key == "sl":
        n = params[0]
        return {
            "dim": Expectation(n * n - 1, T),
            "rad": Expectation([], T),
            "subsimple": Expectation("simple", T),
            "frattini_free": Expectation(True, T),
            "indices": Expectation((1, 1), T),
        }
    if key == "gl":
        n = params[0]
        identity = {f"e{k + 1}{k + 1}": "1" for k in range(n)}
        return {
            "dim": Expectation(n * n, T),
            "rad": Expectation(_span(identity), D),
            "jacobson_free": Expectation(True, P, "reductive"),
            "levi_radical_dim": Expectation(n * n - 1, D),
        }
    if key == "t":
        n = params[0]
        strict = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(i + 1, n)]
        identity = {f"e{k + 1}{k + 1}": "1" for k in range(n)}
        table = {
            "dim": Expectation(n * (n + 1) // 2, T),
            "jacobson": Expectation(_labels(*strict), P, "K = [L, L] = n(n)"),
            "nilradical": Expectation(_span(identity) + _labels(*strict), D,
                                      "the identity matrix is central"),
        }
        if n in (2, 3):
            table["indices"] = Expectation((n - 1, n), P, "small n only, see erratum_note")
        elif n >= 4:
            table["indices"] = Expectation((_ceil_log2(n), _ceil_log2(n) + 1), D, erratum_note(n))
        if n == 3:
            table["frattini"] = Expectation(_labels("e13"), P, "phi lies in the second derived term")
        return table
    if key == "n":
        n = params[0]
        return {
            "dim": Expectation(n * (n - 1) // 2, T),
            "solvability_index": Expectation(_ceil_log2(n), D, "derived series doubles the band"),
        }
    if key == "classII":
        n = params[0]
        return {
            "dim": Expectation(n * n - 1 + n, P, "sl(n) + C^n"),
            "subsimple": Expectation("classII", P, "semisimple part acts irreducibly"),
            "frattini_free": Expectation(True, P, "semisimple plus irreducible abelian ideal"),
            "largest_semisimple_ideal": Expectation([], P, "no semisimple ideals"),
        }
    if key == "classI":
        return {
            "dim": Expectation(6, T),
            "subsimple": Expectation("classI", P, "semisimple part acts irreducibly"),
            "frattini_free": Expectation(True, P, "semisimple plus irreducible abelian ideal"),
        }
    raise UnknownEntry(name)


def subspace_from_expectation(L: LieAlgebra, spec: list):
    """Turn ``[{label: scalar text}]`` into a subspace of ``L``."""
    from .scalars import parse_scalar

    vectors = []
    for v in spec:
        vec = [0] * L.dim
        for lab, c in v.items():
            vec[L.labels.index(lab)] = parse_scalar(c)
        vectors.append(vec)
    return L.span(vectors)


def default_population() -> list[LieAlgebra]:
    """Every catalog algebra at the parameters used by the acceptance suite."""
    out = [abelian(1), abelian(2), abelian(3), heisenberg3(), borel2(), cext4(), class_one()]
    out += [sl(2), sl(3), gl(2), gl(3)]
    out += [upper_triangular(n) for n in (2, 3, 4, 5)]
    out += [strictly_upper(n) for n in (3, 4, 5)]
    out += [class_two(2), class_two(3)]
    return out
