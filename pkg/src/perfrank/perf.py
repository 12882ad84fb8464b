"""Bounded complexes of finite-rank free right A-modules.

Conventions used throughout the package:

* Homological grading, ``d_n : X_n -> X_{n-1}``.
* A map of right modules ``A^a -> A^b`` is a ``b x a`` matrix over ``A``
  acting on column vectors from the left, so ``g o f`` is the matrix
  product ``G F`` and a ``1 x 1`` matrix ``[[x]]`` is left multiplication
  by ``x``.
* ``(Sigma^k X)_n = X_{n-k}`` with differential ``(-1)^k d``.
* ``cone(f)_n = X_{n-1} + Y_n`` with differential ``[[-d^X, 0], [f, d^Y]]``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .fdalg import AlgebraError, FDAlgebra, MatAlgebraHom
from .linal import ExactMatrix, FieldSpec, fmt, rank_rows


class ComplexError(ValueError):
    pass


# ---------------------------------------------------------------- matrices over A

class MatrixOverA:
    """An ``rows x cols`` matrix whose entries are coordinate tuples of ``algebra``."""

    __slots__ = ("algebra", "rows", "cols", "entries", "_hash")

    def __init__(self, algebra: FDAlgebra, rows: int, cols: int, entries):
        self.algebra = algebra
        self.rows = rows
        self.cols = cols
        self.entries = tuple(tuple(tuple(e) for e in r) for r in entries)
        self._hash = None
        if len(self.entries) != rows or any(len(r) != cols for r in self.entries):
            raise ComplexError("matrix entries do not match shape")

    @classmethod
    def zeros(cls, A: FDAlgebra, rows: int, cols: int) -> "MatrixOverA":
        z = A.zero()
        return cls(A, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, A: FDAlgebra, n: int) -> "MatrixOverA":
        z, u = A.zero(), A.unit
        return cls(A, n, n, [[u if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, A: FDAlgebra, n: int, c) -> "MatrixOverA":
        return cls.identity(A, n).scale(c)

    @classmethod
    def from_entries(cls, A: FDAlgebra, rows, cols: int | None = None) -> "MatrixOverA":
        """Entries may be labels, ``{label: coeff}`` dicts, coordinate lists, or 0."""
        conv = [[A.zero() if x in (0, "0", None) else A.coords(x) for x in r] for r in rows]
        if cols is None:
            cols = len(conv[0]) if conv else 0
        return cls(A, len(conv), cols, conv)

    def __eq__(self, other):
        return (isinstance(other, MatrixOverA) and self.algebra is other.algebra
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        A = self.algebra
        from .fdalg import AlgElement
        body = "; ".join(", ".join(repr(AlgElement(A, e)) for e in r) for r in self.entries)
        return f"MatrixOverA[{self.rows}x{self.cols}: {body}]"

    @property
    def shape(self):
        return (self.rows, self.cols)

    def _same(self, other):
        if self.algebra is not other.algebra:
            raise ComplexError("algebra mismatch")

    def __add__(self, other):
        self._same(other)
        if self.shape != other.shape:
            raise ComplexError(f"shape mismatch {self.shape} vs {other.shape}")
        A = self.algebra
        return MatrixOverA(A, self.rows, self.cols,
                           [[A.add(a, b) for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        A = self.algebra
        return MatrixOverA(A, self.rows, self.cols, [[A.neg(a) for a in r] for r in self.entries])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "MatrixOverA":
        A = self.algebra
        c = A.field.coerce(c)
        return MatrixOverA(A, self.rows, self.cols, [[A.scale(c, a) for a in r] for r in self.entries])

    def __matmul__(self, other) -> "MatrixOverA":
        self._same(other)
        if self.cols != other.rows:
            raise ComplexError(f"cannot compose {self.shape} with {other.shape}")
        A = self.algebra
        out = []
        for r in self.entries:
            row = []
            for j in range(other.cols):
                acc = A.zero()
                for k, a in enumerate(r):
                    if any(a):
                        b = other.entries[k][j]
                        if any(b):
                            acc = A.add(acc, A.mul(a, b))
                row.append(acc)
            out.append(row)
        return MatrixOverA(A, self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return not any(any(any(e) for e in r) for r in self.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "MatrixOverA":
        return MatrixOverA(self.algebra, len(rows), len(cols),
                           [[self.entries[i][j] for j in cols] for i in rows])

    def k_matrix(self):
        """Row lists of the k-linear map ``A^cols -> A^rows`` (``m x m`` blocks)."""
        A = self.algebra
        m = A.dim
        out = [[A.field.zero] * (self.cols * m) for _ in range(self.rows * m)]
        for i, r in enumerate(self.entries):
            for j, a in enumerate(r):
                if any(a):
                    blk = A.left_matrix(a)
                    for s in range(m):
                        out[i * m + s][j * m:(j + 1) * m] = blk[s]
        return out

    def phi_rows(self, phi: MatAlgebraHom):
        """Row lists of the entrywise image under ``phi`` (``n x n`` blocks)."""
        if phi.source is not self.algebra:
            raise ComplexError("hom source does not match matrix algebra")
        n = phi.n
        F = phi.field
        out = [[F.zero] * (self.cols * n) for _ in range(self.rows * n)]
        for i, r in enumerate(self.entries):
            for j, a in enumerate(r):
                if any(a):
                    blk = phi.image_rows(a)
                    for s in range(n):
                        out[i * n + s][j * n:(j + 1) * n] = blk[s]
        return out

    def phi(self, phi: MatAlgebraHom) -> ExactMatrix:
        return ExactMatrix.from_rows(self.phi_rows(phi), phi.field, cols=self.cols * phi.n)

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[[fmt(x) for x in e] for e in r] for r in self.entries]}

    @classmethod
    def from_json(cls, A: FDAlgebra, data) -> "MatrixOverA":
        rows, cols = int(data["rows"]), int(data["cols"])
        ents = data.get("entries", [])
        M = cls.from_entries(A, ents, cols=cols) if ents else cls.zeros(A, rows, cols)
        if M.rows != rows:
            raise ComplexError("declared rows do not match entries")
        return M


def block(A: FDAlgebra, blocks: Sequence[Sequence[MatrixOverA]]) -> MatrixOverA:
    """Assemble a block matrix; every block row/column must have consistent shape."""
    rows = []
    for brow in blocks:
        h = brow[0].rows
        if any(b.rows != h for b in brow):
            raise ComplexError("ragged block row")
        for i in range(h):
            row = []
            for b in brow:
                row.extend(b.entries[i])
            rows.append(row)
    cols = sum(b.cols for b in blocks[0]) if blocks else 0
    return MatrixOverA(A, len(rows), cols, rows)


def diag(A: FDAlgebra, *mats: MatrixOverA) -> MatrixOverA:
    """Block-diagonal matrix."""
    return _diag_slow(A, mats, sum(M.rows for M in mats), sum(M.cols for M in mats))


def _diag_slow(A, mats, rows, cols):
    out = [[A.zero()] * cols for _ in range(rows)]
    r0 = c0 = 0
    for M in mats:
        for i, r in enumerate(M.entries):
            out[r0 + i][c0:c0 + M.cols] = r
        r0 += M.rows
        c0 += M.cols
    return MatrixOverA(A, rows, cols, out)


# ---------------------------------------------------------------- complexes

class FreeComplex:
    """Bounded complex of free modules ``A^{r_n}`` with ``d_n`` of shape ``r_{n-1} x r_n``."""

    def __init__(self, algebra: FDAlgebra, ranks: dict, diffs: dict | None = None, name: str = ""):
        self.algebra = algebra
        self.ranks = {int(n): int(r) for n, r in ranks.items() if int(r) > 0}
        self.name = name
        self.diffs = {}
        for n, D in (diffs or {}).items():
            n = int(n)
            if D.algebra is not algebra:
                raise ComplexError("differential over a different algebra")
            if D.shape != (self.rank(n - 1), self.rank(n)):
                raise ComplexError(
                    f"d_{n} has shape {D.shape}, expected {(self.rank(n - 1), self.rank(n))}")
            if D.rows and D.cols and not D.is_zero():
                self.diffs[n] = D

    def rank(self, n: int) -> int:
        return self.ranks.get(n, 0)

    def d(self, n: int) -> MatrixOverA:
        D = self.diffs.get(n)
        if D is None:
            return MatrixOverA.zeros(self.algebra, self.rank(n - 1), self.rank(n))
        return D

    @property
    def support(self) -> list[int]:
        return sorted(self.ranks)

    def is_zero(self) -> bool:
        return not self.ranks

    def key(self):
        return (tuple(sorted(self.ranks.items())), tuple(sorted(self.diffs.items())))

    def __eq__(self, other):
        return isinstance(other, FreeComplex) and other.algebra is self.algebra and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        deg = ", ".join(f"{n}:{r}" for n, r in sorted(self.ranks.items(), reverse=True))
        return f"FreeComplex({self.name + ' ' if self.name else ''}ranks {{{deg}}})"

    def to_json(self, algebra_ref: str = ""):
        return {"algebra": algebra_ref,
                "degrees": [{"n": n, "rank": r} for n, r in sorted(self.ranks.items())],
                "differentials": {str(n): D.to_json() for n, D in sorted(self.diffs.items())}}

    @classmethod
    def from_json(cls, A: FDAlgebra, data, name: str = "") -> "FreeComplex":
        ranks = {int(d["n"]): int(d["rank"]) for d in data.get("degrees", [])}
        diffs = {int(n): MatrixOverA.from_json(A, m) for n, m in data.get("differentials", {}).items()}
        return cls(A, ranks, diffs, name=name)


def validate(X: FreeComplex) -> list[str]:
    """Problems with ``X``: shape incoherence or ``d_{n} d_{n+1} != 0``."""
    out = []
    for n, D in X.diffs.items():
        if D.shape != (X.rank(n - 1), X.rank(n)):
            out.append(f"d_{n} has shape {D.shape}")
    if out:
        return out
    for n in X.diffs:
        if n + 1 in X.diffs and not (X.d(n) @ X.d(n + 1)).is_zero():
            out.append(f"d_{n} d_{n + 1} != 0")
    return out


def check_complex(X: FreeComplex) -> FreeComplex:
    problems = validate(X)
    if problems:
        raise ComplexError("; ".join(problems))
    return X


def free_module(A: FDAlgebra, rank: int = 1, degree: int = 0) -> FreeComplex:
    """``A^rank`` concentrated in one degree."""
    return FreeComplex(A, {degree: rank})


def zero_complex(A: FDAlgebra) -> FreeComplex:
    return FreeComplex(A, {})


def two_term(f: MatrixOverA, top_degree: int = 1) -> FreeComplex:
    """``A^cols -> A^rows`` in degrees ``top_degree``, ``top_degree - 1``."""
    A = f.algebra
    ranks = {top_degree: f.cols, top_degree - 1: f.rows}
    if f.rows == 0 or f.cols == 0:
        return FreeComplex(A, ranks)
    return FreeComplex(A, ranks, {top_degree: f})


def shift(X: FreeComplex, k: int = 1) -> FreeComplex:
    sign = -1 if k % 2 else 1
    ranks = {n + k: r for n, r in X.ranks.items()}
    diffs = {n + k: (D.scale(sign) if sign == -1 else D) for n, D in X.diffs.items()}
    return FreeComplex(X.algebra, ranks, diffs)


def direct_sum(X: FreeComplex, Y: FreeComplex) -> FreeComplex:
    if X.algebra is not Y.algebra:
        raise ComplexError("algebra mismatch")
    A = X.algebra
    degs = set(X.ranks) | set(Y.ranks)
    ranks = {n: X.rank(n) + Y.rank(n) for n in degs}
    diffs = {}
    for n in degs:
        if n - 1 in degs and (n in X.diffs or n in Y.diffs):
            diffs[n] = _diag(A, X.d(n), Y.d(n))
    return FreeComplex(A, ranks, diffs)


def _diag(A, M, N) -> MatrixOverA:
    return _diag_slow(A, (M, N), M.rows + N.rows, M.cols + N.cols)


def brutal_truncate(X: FreeComplex, lo: int | None = None, hi: int | None = None) -> FreeComplex:
    """Keep ``X_n`` for ``lo <= n <= hi`` (``None`` means unbounded)."""
    def inside(n):
        return (lo is None or n >= lo) and (hi is None or n <= hi)
    ranks = {n: r for n, r in X.ranks.items() if inside(n)}
    diffs = {n: D for n, D in X.diffs.items() if inside(n) and inside(n - 1)}
    return FreeComplex(X.algebra, ranks, diffs)


def conjugate(X: FreeComplex, P: dict, Pinv: dict):
    """Transport ``X`` along degreewise isomorphisms ``P_n`` (with inverses ``Pinv_n``).

    Returns ``(X', iso)`` where ``d'_n = P_{n-1} d_n P_n^{-1}`` and ``iso: X -> X'``.
    """
    A = X.algebra
    diffs = {n: P[n - 1] @ D @ Pinv[n] for n, D in X.diffs.items()}
    Y = FreeComplex(A, dict(X.ranks), diffs)
    return Y, ChainMap(X, Y, {n: P[n] for n in X.ranks})


# ---------------------------------------------------------------- chain maps

class ChainMap:
    """Degreewise matrices ``f_n : X_n -> Y_n`` of shape ``r^Y_n x r^X_n``."""

    def __init__(self, source: FreeComplex, target: FreeComplex, comps: dict | None = None,
                 name: str = ""):
        if source.algebra is not target.algebra:
            raise ComplexError("algebra mismatch")
        self.source = source
        self.target = target
        self.algebra = source.algebra
        self.name = name
        self.comps = {}
        for n, M in (comps or {}).items():
            n = int(n)
            if M.shape != (target.rank(n), source.rank(n)):
                raise ComplexError(f"f_{n} has shape {M.shape}, expected "
                                   f"{(target.rank(n), source.rank(n))}")
            if M.rows and M.cols and not M.is_zero():
                self.comps[n] = M

    def comp(self, n: int) -> MatrixOverA:
        M = self.comps.get(n)
        if M is None:
            return MatrixOverA.zeros(self.algebra, self.target.rank(n), self.source.rank(n))
        return M

    def degrees(self):
        return sorted(set(self.source.ranks) | set(self.target.ranks))

    def key(self):
        return (self.source.key(), self.target.key(), tuple(sorted(self.comps.items())))

    def __eq__(self, other):
        return isinstance(other, ChainMap) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"ChainMap({self.source!r} -> {self.target!r})"

    def __add__(self, other: "ChainMap") -> "ChainMap":
        _same_ends(self, other)
        return ChainMap(self.source, self.target,
                        {n: self.comp(n) + other.comp(n) for n in self.source.ranks})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ChainMap":
        return ChainMap(self.source, self.target, {n: M.scale(c) for n, M in self.comps.items()})

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        """``self o other``."""
        if other.target != self.source:
            raise ComplexError("chain maps are not composable")
        return ChainMap(other.source, self.target,
                        {n: self.comp(n) @ other.comp(n) for n in other.source.ranks
                         if self.target.rank(n)})

    def to_json(self):
        return {"components": {str(n): M.to_json() for n, M in sorted(self.comps.items())}}


def _same_ends(f, g):
    if f.source != g.source or f.target != g.target:
        raise ComplexError("chain maps have different source or target")


def chain_map_violations(f: ChainMap) -> list[str]:
    X, Y = f.source, f.target
    out = []
    for n in sorted(set(X.ranks) | set(Y.ranks)):
        if not X.rank(n) or not Y.rank(n - 1):
            continue
        lhs = f.comp(n - 1) @ X.d(n)
        rhs = Y.d(n) @ f.comp(n)
        if lhs != rhs:
            out.append(f"f_{n - 1} d^X_{n} != d^Y_{n} f_{n}")
    return out


def check_chain_map(f: ChainMap) -> ChainMap:
    problems = chain_map_violations(f)
    if problems:
        raise ComplexError("invalid chain map: " + "; ".join(problems))
    return f


def identity_map(X: FreeComplex) -> ChainMap:
    return ChainMap(X, X, {n: MatrixOverA.identity(X.algebra, r) for n, r in X.ranks.items()})


def zero_map(X: FreeComplex, Y: FreeComplex) -> ChainMap:
    return ChainMap(X, Y, {})


def matrix_map(F: MatrixOverA, degree: int = 0) -> ChainMap:
    """The chain map between free modules concentrated in ``degree`` given by ``F``."""
    A = F.algebra
    return ChainMap(free_module(A, F.cols, degree), free_module(A, F.rows, degree), {degree: F})


def shift_map(f: ChainMap, k: int = 1) -> ChainMap:
    return ChainMap(shift(f.source, k), shift(f.target, k), {n + k: M for n, M in f.comps.items()})


def sum_map(f: ChainMap, g: ChainMap) -> ChainMap:
    A = f.algebra
    X, Y = direct_sum(f.source, g.source), direct_sum(f.target, g.target)
    return ChainMap(X, Y, {n: _diag(A, f.comp(n), g.comp(n)) for n in X.ranks if Y.rank(n)})


def triangular_map(f: ChainMap, h: ChainMap, g: ChainMap) -> ChainMap:
    """``[[f, h], [0, g]] : X + Z -> Y + W`` for ``f: X->Y``, ``g: Z->W``, ``h: Z->Y``."""
    if h.source != g.source or h.target != f.target:
        raise ComplexError("h must share its source with g and its target with f")
    A = f.algebra
    X, Y = direct_sum(f.source, g.source), direct_sum(f.target, g.target)
    comps = {}
    for n in X.ranks:
        if not Y.rank(n):
            continue
        fn, hn, gn = f.comp(n), h.comp(n), g.comp(n)
        top = _hcat(A, fn, hn)
        bot = _hcat(A, MatrixOverA.zeros(A, gn.rows, fn.cols), gn)
        comps[n] = _vcat(A, top, bot)
    return ChainMap(X, Y, comps)


def _hcat(A, M, N):
    rows = M.rows
    return MatrixOverA(A, rows, M.cols + N.cols, [M.entries[i] + N.entries[i] for i in range(rows)])


def _vcat(A, M, N):
    return MatrixOverA(A, M.rows + N.rows, M.cols, list(M.entries) + list(N.entries))


def cone(f: ChainMap):
    """Mapping cone with its canonical maps ``iota: Y -> C`` and ``pi: C -> Sigma X``."""
    problems = chain_map_violations(f)
    if problems:
        raise ComplexError("cone of an invalid chain map: " + "; ".join(problems))
    A = f.algebra
    X, Y = f.source, f.target
    degs = {n + 1 for n in X.ranks} | set(Y.ranks)
    ranks = {n: X.rank(n - 1) + Y.rank(n) for n in degs}
    diffs = {}
    for n in degs:
        if n - 1 not in degs:
            continue
        a, b = X.rank(n - 1), Y.rank(n)      # source blocks
        c, e = X.rank(n - 2), Y.rank(n - 1)  # target blocks
        top = _hcat(A, -X.d(n - 1) if a and c else MatrixOverA.zeros(A, c, a),
                    MatrixOverA.zeros(A, c, b))
        bot = _hcat(A, f.comp(n - 1) if a and e else MatrixOverA.zeros(A, e, a),
                    Y.d(n) if b and e else MatrixOverA.zeros(A, e, b))
        diffs[n] = _vcat(A, top, bot)
    C = FreeComplex(A, ranks, diffs)
    SX = shift(X, 1)
    iota = ChainMap(Y, C, {n: _vcat(A, MatrixOverA.zeros(A, X.rank(n - 1), r),
                                     MatrixOverA.identity(A, r))
                           for n, r in Y.ranks.items()})
    pi = ChainMap(C, SX, {n: _hcat(A, MatrixOverA.identity(A, X.rank(n - 1)),
                                   MatrixOverA.zeros(A, X.rank(n - 1), Y.rank(n)))
                          for n in C.ranks if X.rank(n - 1)})
    return C, iota, pi


def null_homotopic(X: FreeComplex, Y: FreeComplex, h: dict) -> ChainMap:
    """``d h + h d`` for a graded map ``h_n : X_n -> Y_{n+1}``."""
    A = X.algebra
    comps = {}
    for n in X.ranks:
        if not Y.rank(n):
            continue
        acc = MatrixOverA.zeros(A, Y.rank(n), X.rank(n))
        if n in h and Y.rank(n + 1):
            acc = acc + Y.d(n + 1) @ h[n]
        if n - 1 in h and X.rank(n - 1):
            acc = acc + h[n - 1] @ X.d(n)
        comps[n] = acc
    return ChainMap(X, Y, comps)


# ---------------------------------------------------------------- homology and base change

def homology_dims(X: FreeComplex) -> dict[int, int]:
    """``dim_k H_n(X)`` for every degree in the support."""
    A = X.algebra
    F = A.field
    m = A.dim
    rk = {n: rank_rows(D.k_matrix(), F) for n, D in X.diffs.items()}
    return {n: X.rank(n) * m - rk.get(n, 0) - rk.get(n + 1, 0) for n in X.support}


@lru_cache(maxsize=None)
def ground_algebra(field: FieldSpec) -> FDAlgebra:
    """The field itself as a one-dimensional algebra."""
    return FDAlgebra(field, ["1"], [[[1]]], [1], name=str(field))


def base_change(phi: MatAlgebraHom, X: FreeComplex) -> FreeComplex:
    """``X (x)_A K^n``: each ``A^r`` becomes ``K^{rn}``, entries ``a`` become ``phi(a)`` blocks."""
    if phi.source is not X.algebra:
        raise ComplexError("hom source does not match complex algebra")
    K = ground_algebra(phi.field)
    n = phi.n
    diffs = {}
    for deg, D in X.diffs.items():
        rows = D.phi_rows(phi)
        diffs[deg] = MatrixOverA(K, D.rows * n, D.cols * n, [[(x,) for x in r] for r in rows])
    return FreeComplex(K, {deg: r * n for deg, r in X.ranks.items()}, diffs)


def base_change_map(phi: MatAlgebraHom, f: ChainMap) -> ChainMap:
    K = ground_algebra(phi.field)
    n = phi.n
    comps = {}
    for deg, M in f.comps.items():
        rows = M.phi_rows(phi)
        comps[deg] = MatrixOverA(K, M.rows * n, M.cols * n, [[(x,) for x in r] for r in rows])
    return ChainMap(base_change(phi, f.source), base_change(phi, f.target), comps)


# ---------------------------------------------------------------- idempotents

class IdempotentObject:
    """A pair ``(X, e)`` with ``e`` a strictly idempotent chain endomorphism."""

    def __init__(self, complex: FreeComplex, e: ChainMap, name: str = ""):
        if e.source != complex or e.target != complex:
            raise ComplexError("idempotent must be an endomorphism of the complex")
        check_chain_map(e)
        if e @ e != e:
            raise ComplexError("endomorphism is not idempotent")
        self.complex = complex
        self.e = e
        self.name = name

    def __repr__(self):
        return f"IdempotentObject({self.complex!r})"


def left_multiplication_idempotent(X: FreeComplex, elements: dict) -> ChainMap:
    """Chain endomorphism acting on ``X_n`` as the scalar matrix ``diag(x_n)``.

    ``elements`` maps each degree to an algebra element (label, dict or coords)
    or to a list with one element per free generator.
    """
    A = X.algebra
    comps = {}
    for n, r in X.ranks.items():
        spec = elements.get(n, elements.get(str(n)))
        if spec is None:
            continue
        specs = spec if isinstance(spec, list) and spec and not _is_coord_list(A, spec) else [spec] * r
        if len(specs) != r:
            raise ComplexError(f"degree {n} needs {r} diagonal entries")
        comps[n] = MatrixOverA(A, r, r, [[A.coords(specs[i]) if i == j else A.zero()
                                          for j in range(r)] for i in range(r)])
    return ChainMap(X, X, comps)


def _is_coord_list(A, spec):
    return len(spec) == A.dim and all(not isinstance(x, (str, dict, list)) for x in spec)


__all__ = [
    "ComplexError", "MatrixOverA", "FreeComplex", "ChainMap", "IdempotentObject", "validate",
    "check_complex", "free_module", "zero_complex", "two_term", "shift", "direct_sum",
    "brutal_truncate", "conjugate", "chain_map_violations", "check_chain_map", "identity_map",
    "zero_map", "matrix_map", "shift_map", "sum_map", "triangular_map", "cone", "null_homotopic",
    "homology_dims", "ground_algebra", "base_change", "base_change_map", "block",
    "left_multiplication_idempotent", "AlgebraError",
]
