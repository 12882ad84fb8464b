"""Exact dense linear algebra over the rationals and prime fields.

Matrices are plain row lists internally; :class:`ExactMatrix` is the
immutable public wrapper.  Rational entries are :class:`fractions.Fraction`,
prime-field entries are ``int`` in ``range(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``p == 0``) or the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else 1

    def coerce(self, x):
        if self.p == 0:
            if isinstance(x, str):
                return Fraction(x.strip())
            return Fraction(x)
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def norm(self, x):
        return x if self.p == 0 else x % self.p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p == 0:
            return 1 / x
        return pow(x, -1, self.p)

    def characteristic(self) -> int:
        return self.p

    def to_json(self):
        return "Q" if self.p == 0 else {"Fp": self.p}

    @classmethod
    def from_json(cls, data) -> "FieldSpec":
        if data in (None, "Q", "QQ"):
            return cls(0)
        if isinstance(data, dict) and "Fp" in data:
            return cls(int(data["Fp"]))
        raise FieldError(f"unknown field {data!r}")

    def __str__(self):
        return "Q" if self.p == 0 else f"F_{self.p}"


QQ = FieldSpec(0)


def fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


# ---------------------------------------------------------------- raw rows

def rref(rows: Sequence[Sequence], F: FieldSpec):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``."""
    M = [list(r) for r in rows]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots = []
    r = 0
    p = F.p
    for c in range(ncols):
        piv = None
        for i in range(r, len(M)):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        if p:
            M[r] = [x * inv % p for x in M[r]]
        else:
            M[r] = [x * inv for x in M[r]]
        prow = M[r]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                row = M[i]
                if p:
                    M[i] = [(a - f * b) % p for a, b in zip(row, prow)]
                else:
                    M[i] = [a - f * b for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank_rows(rows: Sequence[Sequence], F: FieldSpec) -> int:
    """Rank by forward elimination only (no back substitution)."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    p = F.p
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(M)):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        prow = M[rank]
        inv = F.inv(prow[c])
        for i in range(rank + 1, len(M)):
            if M[i][c]:
                f = M[i][c] * inv
                row = M[i]
                if p:
                    M[i] = [(a - f * b) % p for a, b in zip(row, prow)]
                else:
                    M[i] = [a - f * b for a, b in zip(row, prow)]
        rank += 1
        if rank == len(M):
            break
    return rank


def kernel_rows(rows: Sequence[Sequence], ncols: int, F: FieldSpec) -> list[list]:
    """Basis of the right null space ``{x : M x = 0}``, one vector per list."""
    R, pivots = rref(rows, F) if rows else ([], [])
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [F.zero] * ncols
        v[free] = F.one
        for row, pc in zip(R, pivots):
            if row[free]:
                v[pc] = F.norm(-row[free])
        basis.append(v)
    return basis


def matmul_rows(A, B, F: FieldSpec):
    if not A:
        return []
    if not B:
        return [[] for _ in A]
    Bt = list(zip(*B))
    p = F.p
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a]
        new = []
        for col in Bt:
            s = sum((a * col[k] for k, a in nz), F.zero)
            new.append(s % p if p else s)
        out.append(new)
    return out


def transpose_rows(A, ncols: int):
    if not A:
        return [[] for _ in range(ncols)]
    return [list(c) for c in zip(*A)]


class Echelon:
    """A subspace stored as RREF rows; supports fast membership/coordinates."""

    def __init__(self, vectors: Iterable[Sequence], dim: int, F: FieldSpec):
        self.F = F
        self.dim = dim
        vecs = [list(v) for v in vectors]
        self.rows, self.pivots = rref(vecs, F) if vecs else ([], [])

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        """Remainder of ``v`` after subtracting its projection onto the span."""
        F = self.F
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = [F.norm(a - c * b) for a, b in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def coords(self, v):
        """Coordinates of ``v`` in the RREF basis, or ``None`` if outside."""
        if not self.contains(v):
            return None
        return [v[pc] for pc in self.pivots]


# ---------------------------------------------------------------- wrapper

@dataclass(frozen=True)
class ExactMatrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows, field: FieldSpec = QQ, cols: int | None = None):
        rows = [tuple(field.coerce(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows, cols, field: FieldSpec = QQ):
        z = field.zero
        return cls(field, rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, n, field: FieldSpec = QQ):
        return cls(field, n, n, tuple(tuple(field.one if i == j else field.zero for j in range(n))
                                      for i in range(n)))

    def tolist(self):
        return [list(r) for r in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def _check(self, other):
        if self.field != other.field:
            raise FieldError("field mismatch")

    def __add__(self, other):
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        F = self.field
        return ExactMatrix(F, self.rows, self.cols, tuple(
            tuple(F.norm(a + b) for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self):
        F = self.field
        return ExactMatrix(F, self.rows, self.cols,
                           tuple(tuple(F.norm(-a) for a in r) for r in self.entries))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.field
        c = F.coerce(c)
        return ExactMatrix(F, self.rows, self.cols,
                           tuple(tuple(F.norm(c * a) for a in r) for r in self.entries))

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        prod = matmul_rows(self.tolist(), other.tolist(), self.field)
        if not prod:
            return ExactMatrix.zeros(self.rows, other.cols, self.field)
        return ExactMatrix(self.field, self.rows, other.cols, tuple(tuple(r) for r in prod))

    def apply(self, v):
        F = self.field
        return [F.norm(sum((a * b for a, b in zip(r, v)), F.zero)) for r in self.entries]

    @property
    def T(self):
        return ExactMatrix(self.field, self.cols, self.rows,
                           tuple(tuple(r) for r in transpose_rows(self.tolist(), self.cols)))

    def is_zero(self):
        return not any(any(r) for r in self.entries)

    def to_json(self):
        return {"field": self.field.to_json(), "rows": self.rows, "cols": self.cols,
                "entries": [[fmt(x) for x in r] for r in self.entries]}

    @classmethod
    def from_json(cls, data, field: FieldSpec | None = None):
        F = FieldSpec.from_json(data.get("field")) if "field" in data else (field or QQ)
        rows, cols = int(data["rows"]), int(data["cols"])
        ents = data.get("entries", [])
        m = cls.from_rows(ents, F, cols=cols)
        if m.rows != rows:
            raise ValueError("declared rows do not match entries")
        return m

    def __repr__(self):
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.entries)
        return f"ExactMatrix<{self.field}>[{body}]"


def block_diag(*mats: ExactMatrix) -> ExactMatrix:
    F = mats[0].field
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = [[F.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for m in mats:
        for i, row in enumerate(m.entries):
            out[r0 + i][c0:c0 + m.cols] = row
        r0 += m.rows
        c0 += m.cols
    return ExactMatrix(F, rows, cols, tuple(tuple(r) for r in out))


def rank(M: ExactMatrix) -> int:
    return rank_rows(M.tolist(), M.field)


def kernel_basis(M: ExactMatrix) -> list[list]:
    return kernel_rows(M.tolist(), M.cols, M.field)


def solve_in_span(M: ExactMatrix, v) -> list | None:
    """Coefficients ``c`` with ``M c = v``, or ``None`` if ``v`` is not in the column span."""
    F = M.field
    v = [F.coerce(x) for x in v]
    if len(v) != M.rows:
        raise ValueError("vector length does not match row count")
    aug = [list(r) + [b] for r, b in zip(M.entries, v)]
    if not aug:
        return [F.zero] * M.cols
    R, pivots = rref(aug, F)
    if M.cols in pivots:
        return None
    sol = [F.zero] * M.cols
    for row, pc in zip(R, pivots):
        sol[pc] = row[-1]
    return sol
