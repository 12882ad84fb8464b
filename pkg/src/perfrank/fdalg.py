"""Finite-dimensional associative algebras given by structure constants."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import TYPE_CHECKING, Sequence

from .linal import (QQ, Echelon, ExactMatrix, FieldSpec, fmt, kernel_rows,
                    matmul_rows, rank_rows)

if TYPE_CHECKING:
    from .perf import MatrixOverA


class AlgebraError(ValueError):
    pass


class UnsupportedCharacteristic(AlgebraError):
    pass


class FDAlgebra:
    """Unital associative algebra with basis ``b_0..b_{m-1}``.

    ``mult[i][j]`` is the coordinate vector of ``b_i * b_j``.  Construction
    validates associativity and the unit laws exhaustively.
    """

    def __init__(self, field: FieldSpec, labels: Sequence[str], mult, unit, name: str = "",
                 validate: bool = True):
        self.field = field
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.name = name
        F = field
        self.mult = tuple(tuple(tuple(F.coerce(x) for x in mult[i][j]) for j in range(self.dim))
                          for i in range(self.dim))
        self.unit = tuple(F.coerce(x) for x in unit)
        if len(self.unit) != self.dim:
            raise AlgebraError("unit has wrong length")
        if validate:
            problems = self.violations()
            if problems:
                raise AlgebraError("; ".join(problems[:10]))

    def __repr__(self):
        return f"FDAlgebra({self.name or 'A'}, dim={self.dim}, field={self.field})"

    # -- basic arithmetic on coordinate tuples
    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise AlgebraError(f"unknown basis label {label!r}") from None

    def basis_vector(self, i: int) -> tuple:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def zero(self) -> tuple:
        return (self.field.zero,) * self.dim

    def mul(self, x, y) -> tuple:
        F = self.field
        out = [F.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.mult[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, s in enumerate(row[j]):
                    if s:
                        out[k] += c * s
        return tuple(F.norm(v) for v in out)

    def add(self, x, y) -> tuple:
        F = self.field
        return tuple(F.norm(a + b) for a, b in zip(x, y))

    def neg(self, x) -> tuple:
        F = self.field
        return tuple(F.norm(-a) for a in x)

    def scale(self, c, x) -> tuple:
        F = self.field
        return tuple(F.norm(c * a) for a in x)

    def element(self, spec) -> "AlgElement":
        """Element from a label, a coordinate list, or a ``{label: coeff}`` dict."""
        return AlgElement(self, self.coords(spec))

    def coords(self, spec) -> tuple:
        F = self.field
        if isinstance(spec, AlgElement):
            return spec.coords
        if isinstance(spec, str):
            return self.basis_vector(self.index(spec))
        if isinstance(spec, dict):
            v = [F.zero] * self.dim
            for lab, c in spec.items():
                v[self.index(lab)] = F.norm(v[self.index(lab)] + F.coerce(c))
            return tuple(v)
        spec = tuple(F.coerce(x) for x in spec)
        if len(spec) != self.dim:
            raise AlgebraError("coordinate vector has wrong length")
        return spec

    def one(self) -> "AlgElement":
        return AlgElement(self, self.unit)

    # -- multiplication operators as k-matrices (column convention)
    @cached_property
    def left_mult(self) -> tuple:
        """``left_mult[i]`` is the matrix of ``x -> b_i x``."""
        m = self.dim
        return tuple(tuple(tuple(self.mult[i][j][k] for j in range(m)) for k in range(m))
                     for i in range(m))

    @cached_property
    def right_mult(self) -> tuple:
        """``right_mult[i]`` is the matrix of ``x -> x b_i``."""
        m = self.dim
        return tuple(tuple(tuple(self.mult[j][i][k] for j in range(m)) for k in range(m))
                     for i in range(m))

    def _combine(self, mats, x):
        F = self.field
        m = self.dim
        out = [[F.zero] * m for _ in range(m)]
        for c, M in zip(x, mats):
            if c:
                for r in range(m):
                    row = M[r]
                    orow = out[r]
                    for s in range(m):
                        if row[s]:
                            orow[s] += c * row[s]
        return [[F.norm(v) for v in r] for r in out]

    def left_matrix(self, x):
        return self._combine(self.left_mult, x)

    def right_matrix(self, x):
        return self._combine(self.right_mult, x)

    def violations(self) -> list[str]:
        out = []
        m = self.dim
        if any(len(self.mult[i]) != m for i in range(m)):
            return ["structure constants have wrong shape"]
        for i in range(m):
            bi = self.basis_vector(i)
            if self.mul(self.unit, bi) != bi or self.mul(bi, self.unit) != bi:
                out.append(f"unit law fails on {self.labels[i]}")
        for i, j, k in itertools.product(range(m), repeat=3):
            lhs = self.mul(self.mult[i][j], self.basis_vector(k))
            rhs = self.mul(self.basis_vector(i), self.mult[j][k])
            if lhs != rhs:
                out.append(f"associativity fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")
        return out

    def to_json(self):
        products = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in enumerate(self.mult[i][j]):
                    if c:
                        products.append([i, j, k, fmt(c)])
        return {"field": self.field.to_json(), "basis": list(self.labels),
                "unit": [fmt(x) for x in self.unit], "products": products}

    @cached_property
    def radical_info(self) -> "RadicalInfo":
        return radical_and_residue(self)


@dataclass(frozen=True)
class AlgElement:
    algebra: FDAlgebra
    coords: tuple

    def __add__(self, other):
        return AlgElement(self.algebra, self.algebra.add(self.coords, _c(other)))

    def __sub__(self, other):
        return AlgElement(self.algebra, self.algebra.add(self.coords, self.algebra.neg(_c(other))))

    def __neg__(self):
        return AlgElement(self.algebra, self.algebra.neg(self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return AlgElement(self.algebra, self.algebra.mul(self.coords, other.coords))
        return AlgElement(self.algebra, self.algebra.scale(self.algebra.field.coerce(other), self.coords))

    def __rmul__(self, c):
        return AlgElement(self.algebra, self.algebra.scale(self.algebra.field.coerce(c), self.coords))

    def is_zero(self):
        return not any(self.coords)

    def __repr__(self):
        terms = [f"{fmt(c)}*{lab}" for c, lab in zip(self.coords, self.algebra.labels) if c]
        return " + ".join(terms) or "0"


def _c(x):
    return x.coords if isinstance(x, AlgElement) else tuple(x)


# ---------------------------------------------------------------- builders

def from_structure_constants(data, name: str = "") -> FDAlgebra:
    """Build from the JSON-shaped dict ``{field, basis, unit, products}``."""
    F = FieldSpec.from_json(data.get("field"))
    labels = list(data["basis"])
    m = len(labels)
    if m == 0:
        raise AlgebraError("algebra must have positive dimension")
    mult = [[[F.zero] * m for _ in range(m)] for _ in range(m)]
    for entry in data.get("products", []):
        i, j, k, c = entry
        i, j, k = (_label_or_index(labels, x) for x in (i, j, k))
        mult[i][j][k] = F.norm(mult[i][j][k] + F.coerce(c))
    unit = data["unit"]
    if isinstance(unit, (str, dict)):
        tmp = FDAlgebra(F, labels, mult, [0] * m, validate=False)
        unit = tmp.coords(unit)
    return FDAlgebra(F, labels, mult, unit, name=name)


def _label_or_index(labels, x) -> int:
    if isinstance(x, str):
        if x not in labels:
            raise AlgebraError(f"unknown basis label {x!r}")
        return labels.index(x)
    x = int(x)
    if not 0 <= x < len(labels):
        raise AlgebraError(f"basis index {x} out of range")
    return x


def matrix_algebra(n: int, field: FieldSpec = QQ) -> FDAlgebra:
    """M_n(field) with the matrix-unit basis ``E{i}{j}``."""
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    m = n * n
    mult = [[[0] * m for _ in range(m)] for _ in range(m)]
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if j == k:
            mult[i * n + j][k * n + l][i * n + l] = 1
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return FDAlgebra(field, labels, mult, unit, name=f"M{n}")


def monoid_algebra(table, labels=None, field: FieldSpec = QQ, name: str = "") -> FDAlgebra:
    """k[M] from a multiplication table ``table[i][j] = index of m_i m_j``."""
    m = len(table)
    labels = labels or [f"m{i}" for i in range(m)]
    mult = [[[0] * m for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(m):
            mult[i][j][table[i][j]] = 1
    units = [i for i in range(m) if all(table[i][j] == j and table[j][i] == j for j in range(m))]
    if not units:
        raise AlgebraError("monoid table has no identity element")
    unit = [1 if k == units[0] else 0 for k in range(m)]
    return FDAlgebra(field, labels, mult, unit, name=name)


def _compose(p, q, src, dst):
    """Path product ``p q`` (``q`` first), or None when not composable.

    Paths are ``(vertex,)`` for trivial paths or tuples of arrow names in
    product order.
    """
    def s(path):
        return path[1] if path[0] is None else src[path[-1]]

    def t(path):
        return path[1] if path[0] is None else dst[path[0]]

    if s(p) != t(q):
        return None
    if p[0] is None:
        return q
    if q[0] is None:
        return p
    return p + q


def from_quiver(vertices, arrows, relations=(), path_cap: int = 10, field: FieldSpec = QQ,
                name: str = "") -> FDAlgebra:
    """Path algebra modulo a homogeneous admissible ideal.

    ``arrows`` is a list of ``{"name", "src", "dst"}``; each relation is a
    list of ``(coeff, [arrow names in product order])`` terms.  The product
    ``a b`` means ``b`` followed by ``a``, so ``a`` must start where ``b`` ends.
    """
    F = field
    vertices = [str(v) for v in vertices]
    src = {a["name"]: str(a["src"]) for a in arrows}
    dst = {a["name"]: str(a["dst"]) for a in arrows}
    for a in arrows:
        if src[a["name"]] not in vertices or dst[a["name"]] not in vertices:
            raise AlgebraError(f"arrow {a['name']} has an unknown endpoint")
    rels = []
    for rel in relations:
        terms = [(F.coerce(c), tuple(path)) for c, path in rel]
        lengths = {len(p) for _, p in terms}
        if not terms:
            continue
        if len(lengths) != 1:
            raise AlgebraError("relations must be homogeneous in path length")
        if min(lengths) < 2:
            raise AlgebraError("relations must lie in paths of length >= 2")
        for _, p in terms:
            for a, b in zip(p, p[1:]):
                if src[a] != dst[b]:
                    raise AlgebraError(f"path {'*'.join(p)} is not composable")
        rels.append(terms)

    # paths by length, arrow tuples in product order
    by_len: list[list[tuple]] = [[(None, v) for v in vertices], [(a["name"],) for a in arrows]]
    for L in range(2, path_cap + 2):
        nxt = []
        for p in by_len[L - 1]:
            for a in arrows:
                if src[p[-1]] == dst[a["name"]]:
                    nxt.append(p + (a["name"],))
        by_len.append(nxt)

    def s_of(p):
        return src[p[-1]]

    def t_of(p):
        return dst[p[0]]

    survivors: list[list[tuple]] = []
    for L, paths in enumerate(by_len):
        if L < 2:
            survivors.append(paths)
            continue
        index = {p: i for i, p in enumerate(paths)}
        gens = []
        for rel in rels:
            rl = len(rel[0][1])
            if rl > L:
                continue
            lead = rel[0][1]
            for left_len in range(L - rl + 1):
                right_len = L - rl - left_len
                lefts = [()] if left_len == 0 else [p for p in by_len[left_len]]
                rights = [()] if right_len == 0 else [p for p in by_len[right_len]]
                for u in lefts:
                    if u and src[u[-1]] != dst[lead[0]]:
                        continue
                    for w in rights:
                        if w and dst[w[0]] != src[lead[-1]]:
                            continue
                        v = [F.zero] * len(paths)
                        ok = False
                        for c, p in rel:
                            if (u and src[u[-1]] != dst[p[0]]) or (w and dst[w[0]] != src[p[-1]]):
                                continue
                            full = u + p + w
                            v[index[full]] = F.norm(v[index[full]] + c)
                            ok = True
                        if ok:
                            gens.append(v)
        ech = Echelon(gens, len(paths), F)
        pivset = set(ech.pivots)
        keep = [p for i, p in enumerate(paths) if i not in pivset]
        if L == path_cap + 1 and keep:
            raise AlgebraError(
                f"path {'*'.join(keep[0])} of length {L} survives; algebra is not "
                f"finite-dimensional within path_cap={path_cap}")
        survivors.append((keep, ech, index))

    basis: list[tuple] = []
    reducers = {}
    for L, entry in enumerate(survivors):
        if L < 2:
            basis.extend(entry)
        else:
            keep, ech, index = entry
            basis.extend(keep)
            reducers[L] = (ech, index, keep)
    pos = {p: i for i, p in enumerate(basis)}
    m = len(basis)

    def express(path) -> list:
        """Coordinates of a path in the surviving basis."""
        v = [F.zero] * m
        L = 0 if path[0] is None else len(path)
        if L > path_cap:
            return v
        if L < 2:
            v[pos[path]] = F.one
            return v
        ech, index, keep = reducers[L]
        e = [F.zero] * len(index)
        e[index[path]] = F.one
        r = ech.reduce(e)
        for p in keep:
            c = r[index[p]]
            if c:
                v[pos[p]] = c
        return v

    mult = [[None] * m for _ in range(m)]
    for i, p in enumerate(basis):
        for j, q in enumerate(basis):
            pq = _compose(p, q, src, dst)
            mult[i][j] = [F.zero] * m if pq is None else express(pq)
    labels = [f"e{p[1]}" if p[0] is None else "*".join(p) for p in basis]
    unit = [F.one if p[0] is None else F.zero for p in basis]
    return FDAlgebra(F, labels, mult, unit, name=name)


def from_quiver_json(data, name: str = "") -> FDAlgebra:
    F = FieldSpec.from_json(data.get("field"))
    return from_quiver(data["vertices"], data.get("arrows", []), data.get("relations", []),
                       int(data.get("path_cap", 10)), F, name=name)


# ---------------------------------------------------------------- homs

class MatAlgebraHom:
    """A homomorphism ``A -> M_n(K)`` given by the images of basis elements."""

    def __init__(self, source: FDAlgebra, n: int, images: Sequence[ExactMatrix],
                 name: str = "", check: bool = True):
        self.source = source
        self.n = n
        self.field = source.field
        self.images = tuple(images)
        self.name = name
        if len(self.images) != source.dim:
            raise AlgebraError("one image matrix per basis element is required")
        for M in self.images:
            if M.field != self.field:
                raise AlgebraError("target field must equal the algebra's ground field")
            if (M.rows, M.cols) != (n, n):
                raise AlgebraError(f"images must be {n}x{n}")
        if check:
            problems = verify_hom(self)
            if problems:
                raise AlgebraError("invalid homomorphism: " + "; ".join(problems[:10]))

    @classmethod
    def from_labels(cls, source: FDAlgebra, n: int, images: dict, name: str = "", check=True):
        F = source.field
        mats = []
        for lab in source.labels:
            M = images.get(lab)
            if M is None:
                mats.append(ExactMatrix.zeros(n, n, F))
            elif isinstance(M, ExactMatrix):
                mats.append(M)
            else:
                mats.append(ExactMatrix.from_rows(M, F))
        return cls(source, n, mats, name=name, check=check)

    def __repr__(self):
        return f"MatAlgebraHom({self.name or 'phi'}: {self.source.name or 'A'} -> M{self.n}({self.field}))"

    def image_rows(self, x):
        """Image of a coordinate vector as an ``n x n`` row list."""
        F = self.field
        n = self.n
        out = [[F.zero] * n for _ in range(n)]
        for c, M in zip(x, self.images):
            if c:
                for i in range(n):
                    row = M.entries[i]
                    o = out[i]
                    for j in range(n):
                        if row[j]:
                            o[j] += c * row[j]
        return [[F.norm(v) for v in r] for r in out]

    def image(self, x) -> ExactMatrix:
        return ExactMatrix.from_rows(self.image_rows(_c(x)), self.field, cols=self.n)

    def to_json(self):
        return {"n": self.n, "images": {lab: M.to_json() for lab, M in zip(self.source.labels, self.images)}}


def verify_hom(phi: MatAlgebraHom) -> list[str]:
    """Every violated multiplicativity or unitality constraint; empty iff valid."""
    A = phi.source
    F = phi.field
    out = []
    ident = [[F.one if i == j else F.zero for j in range(phi.n)] for i in range(phi.n)]
    if phi.image_rows(A.unit) != ident:
        out.append("unit does not map to the identity")
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = matmul_rows(phi.images[i].tolist(), phi.images[j].tolist(), F)
            rhs = phi.image_rows(A.mult[i][j])
            if [list(r) for r in lhs] != rhs:
                out.append(f"phi({A.labels[i]})phi({A.labels[j]}) != phi({A.labels[i]}*{A.labels[j]})")
    return out


def identity_hom(A: FDAlgebra) -> MatAlgebraHom:
    """``k -> M_1(k)`` for a one-dimensional algebra."""
    if A.dim != 1:
        raise AlgebraError("identity hom to M_1 needs a one-dimensional algebra")
    return MatAlgebraHom(A, 1, [ExactMatrix.from_rows([[A.unit[0]]], A.field)])


# ---------------------------------------------------------------- radical

@dataclass
class RadicalInfo:
    radical: list  # basis vectors (RREF rows)
    quotient: FDAlgebra
    is_local: bool
    pivots: list = dc_field(default_factory=list)
    complement: list = dc_field(default_factory=list)
    _echelon: object = None

    def project(self, x) -> tuple:
        """Image of an element of A in the quotient algebra."""
        r = self._echelon.reduce(x)
        return tuple(r[j] for j in self.complement)


def radical_and_residue(A: FDAlgebra) -> RadicalInfo:
    F = A.field
    m = A.dim
    p = F.characteristic()
    if p and p <= m:
        raise UnsupportedCharacteristic(
            f"trace-form radical needs characteristic 0 or > dim A (= {m}); got {p}")
    traces = [sum(A.left_mult[i][k][k] for k in range(m)) for i in range(m)]
    gram = [[F.norm(sum((c * t for c, t in zip(A.mult[i][j], traces)), F.zero)) for j in range(m)]
            for i in range(m)]
    rad = kernel_rows(gram, m, F)
    ech = Echelon(rad, m, F)
    # two-sided ideal and nilpotent
    for r in ech.rows:
        for i in range(m):
            b = A.basis_vector(i)
            if not ech.contains(A.mul(r, b)) or not ech.contains(A.mul(b, r)):
                raise AlgebraError("trace-form kernel is not an ideal")
    power = [list(r) for r in ech.rows]
    for _ in range(m + 1):
        if not power:
            break
        nxt = [list(A.mul(x, r)) for x in power for r in ech.rows]
        power = Echelon(nxt, m, F).rows if nxt else []
    if power:
        raise AlgebraError("trace-form kernel is not nilpotent")
    pivset = set(ech.pivots)
    comp = [j for j in range(m) if j not in pivset]
    info = RadicalInfo(radical=[tuple(r) for r in ech.rows], quotient=None, is_local=False,
                       pivots=list(ech.pivots), complement=comp, _echelon=ech)
    qm = len(comp)
    qmult = [[list(info.project(A.mul(A.basis_vector(i), A.basis_vector(j)))) for j in comp]
             for i in comp]
    qunit = list(info.project(A.unit))
    info.quotient = FDAlgebra(F, [A.labels[j] for j in comp], qmult, qunit,
                              name=f"{A.name}/rad" if A.name else "A/rad")
    info.is_local = qm == 1
    return info


def residue_scalar(A: FDAlgebra, x):
    info = A.radical_info
    if not info.is_local:
        raise AlgebraError("algebra is not local with residue field k")
    (c,) = info.project(_c(x))
    (u,) = info.quotient.unit
    return A.field.norm(c * A.field.inv(u))


def residue_hom(A: FDAlgebra) -> MatAlgebraHom:
    """The composite ``A -> A/rad = k`` as a hom into ``M_1(k)``."""
    F = A.field
    imgs = [ExactMatrix.from_rows([[residue_scalar(A, A.basis_vector(i))]], F) for i in range(A.dim)]
    return MatAlgebraHom(A, 1, imgs, name="residue")


def local_matrix_rank(A: FDAlgebra, M: "MatrixOverA"):
    """Rank over the residue field of the entrywise reduction of ``M``."""
    if not A.radical_info.is_local:
        raise AlgebraError("local_matrix_rank requires a local algebra")
    rows = [[residue_scalar(A, x) for x in row] for row in M.entries]
    return rank_rows(rows, A.field)
