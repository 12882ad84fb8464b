"""Rank functions on matrices, modules and perfect complexes.

Every rank here comes from a homomorphism ``phi: A -> M_n(K)``.  A matrix
``F`` over ``A`` gets ``rank_K(phi(F)) / n``, and a complex gets the
q-polynomial ``sum_n (r_n - rho(d_n) - rho(d_{n+1})) q^n``.  Periodic
versions are reductions of that polynomial modulo ``q^d - 1``.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from .coeff import INF, CoeffPoly, PeriodError, divide_q_plus_1, normalize, parse_period
from .fdalg import FDAlgebra, MatAlgebraHom, identity_hom, verify_hom
from .homalg import RIGHT, FDModule, homological_epi_check, presentation
from .linal import rank_rows
from .perf import (ChainMap, FreeComplex, IdempotentObject, MatrixOverA, cone, free_module,
                   homology_dims, matrix_map)

log = logging.getLogger(__name__)


class RankError(ValueError):
    pass


class SylvesterRank:
    """Rank function on matrices over ``A`` induced by ``phi: A -> M_n(K)``."""

    def __init__(self, phi: MatAlgebraHom, name: str = ""):
        problems = verify_hom(phi)
        if problems:
            raise RankError("invalid homomorphism: " + "; ".join(problems[:10]))
        self.phi = phi
        self.algebra = phi.source
        self.n = phi.n
        self.name = name or phi.name
        self._mcache: dict = {}
        self._ocache: dict = {}

    def __repr__(self):
        return f"SylvesterRank({self.name or 'phi'}, n={self.n})"

    def _check(self, algebra: FDAlgebra, what: str):
        if algebra is not self.algebra:
            raise RankError(f"{what} is over a different algebra than the rank function")

    def matrix(self, F: MatrixOverA) -> Fraction:
        self._check(F.algebra, "matrix")
        hit = self._mcache.get(F)
        if hit is None:
            rows = F.phi_rows(self.phi)
            r = rank_rows(rows, self.phi.field) if rows and rows[0] else 0
            hit = self._mcache[F] = Fraction(r, self.n)
        return hit


def sylvester_morphism_rank(sigma: SylvesterRank, F: MatrixOverA) -> Fraction:
    return sigma.matrix(F)


def sylvester_module_rank(sigma: SylvesterRank, M: FDModule) -> Fraction:
    """``g - rho(f)`` for a presentation ``A^p -> A^g -> M -> 0``."""
    sigma._check(M.algebra, "module")
    if M.side != RIGHT:
        raise RankError("module ranks are defined for right modules")
    P = presentation(M)
    return P.generators - sigma.matrix(P.f)


def derived_object_rank(sigma: SylvesterRank, X: FreeComplex) -> CoeffPoly:
    sigma._check(X.algebra, "complex")
    key = X.key()
    hit = sigma._ocache.get(key)
    if hit is not None:
        return hit
    terms = []
    for n in X.support:
        c = X.rank(n) - sigma.matrix(X.d(n)) - sigma.matrix(X.d(n + 1))
        terms.append((n, c))
    val = normalize(terms, INF)
    if not val.is_nonneg():
        raise RankError(f"negative object rank {val}")
    sigma._ocache[key] = val
    return val


def _check_period(d):
    d = parse_period(d)
    if d != INF and d > 1 and d % 2 == 0:
        raise PeriodError("morphism ranks need d = 1, odd d, or d = inf")
    return d


def morphism_rank_from_objects(rx: CoeffPoly, ry: CoeffPoly, rc: CoeffPoly) -> CoeffPoly:
    """``(rho(Y) - rho(cone f) + q rho(X)) / (1 + q)``; at ``d = 1`` this is halving."""
    num = ry - rc + rx.shift(1)
    phi, _ = divide_q_plus_1(num)
    if phi is None:
        raise RankError(f"{num} is not divisible by 1+q")
    return phi


def derived_morphism_rank(sigma: SylvesterRank, f: ChainMap, d=INF) -> CoeffPoly:
    return RankFunction(sigma, d).mor(f)


class RankFunction:
    """A ``d``-periodic rank function: the reduction of a derived Sylvester rank."""

    def __init__(self, sigma: SylvesterRank, period=INF):
        self.sigma = sigma
        self.period = _check_period(period)
        self.algebra = sigma.algebra

    def __repr__(self):
        return f"RankFunction({self.sigma.name}, d={self.period})"

    def obj(self, X: FreeComplex) -> CoeffPoly:
        return derived_object_rank(self.sigma, X).reduce_period(self.period)

    def mor(self, f: ChainMap) -> CoeffPoly:
        C, _, _ = cone(f)
        val = morphism_rank_from_objects(self.obj(f.source), self.obj(f.target), self.obj(C))
        if not val.is_nonneg():
            raise RankError(f"negative morphism rank {val}")
        return val

    def matrix(self, F: MatrixOverA) -> Fraction:
        return self.sigma.matrix(F)

    def unit(self) -> CoeffPoly:
        return CoeffPoly.const(1, self.period)


class FaultyRank(RankFunction):
    """A rank function with one object rank overridden; used to exercise the checkers."""

    def __init__(self, sigma: SylvesterRank, period, target: FreeComplex, value):
        super().__init__(sigma, period)
        self.target_key = target.key()
        self.value = value if isinstance(value, CoeffPoly) else CoeffPoly.const(value, self.period)

    def obj(self, X: FreeComplex) -> CoeffPoly:
        if X.key() == self.target_key:
            return self.value
        return super().obj(X)


# ---------------------------------------------------------------- classification

def fullness_and_kernel(sigma: SylvesterRank, target, d=INF) -> dict:
    R = RankFunction(sigma, d)
    if isinstance(target, FreeComplex):
        r = R.obj(target)
        return {"kind": "object", "rank": r, "in_kernel": r.is_zero()}
    if isinstance(target, IdempotentObject):
        r = R.mor(target.e)
        return {"kind": "object", "rank": r, "in_kernel": r.is_zero()}
    rf, rx, ry = R.mor(target), R.obj(target.source), R.obj(target.target)
    left, right = rf == rx, rf == ry
    return {"kind": "morphism", "rank": rf, "source_rank": rx, "target_rank": ry,
            "left_full": left, "right_full": right, "full": left and right}


def idempotent_rank(sigma: SylvesterRank, P: IdempotentObject, d=INF) -> CoeffPoly:
    """Rank of ``(X, e)``, which is the rank of the morphism ``e``."""
    if P.e @ P.e != P.e:
        raise RankError("endomorphism is not idempotent")
    return RankFunction(sigma, d).mor(P.e)


@dataclass
class SubmatrixWitness:
    rows: tuple
    cols: tuple
    matrix: object          # MatrixOverA over A, or a row list over K
    over: str               # "A" or "K"
    rank: Fraction          # rho(F)
    size: int


def full_square_submatrix(sigma: SylvesterRank, F: MatrixOverA) -> SubmatrixWitness:
    """A square submatrix ``N`` whose rank equals its size and ``rho(F)``.

    Searches submatrices of ``F`` exhaustively when ``rho(F)`` is an integer.
    If ``rho(F)`` is fractional, or no such submatrix of ``F`` exists, the
    witness is a nonsingular ``k x k`` submatrix of ``phi(F)`` with
    ``k = n rho(F)``, read off from pivot positions.
    """
    r = sigma.matrix(F)
    if r.denominator == 1:
        k = int(r)
        for rows in itertools.combinations(range(F.rows), k):
            for cols in itertools.combinations(range(F.cols), k):
                N = F.submatrix(rows, cols)
                if sigma.matrix(N) == k:
                    return SubmatrixWitness(rows, cols, N, "A", r, k)
    K = sigma.phi.field
    rows_ = F.phi_rows(sigma.phi)
    k = int(r * sigma.n)
    from .linal import rref
    if k == 0:
        return SubmatrixWitness((), (), [], "K", r, 0)
    _, cols = rref(rows_, K)
    sub = [[row[c] for c in cols] for row in rows_]
    _, rws = rref([list(c) for c in zip(*sub)], K)
    N = [[rows_[i][c] for c in cols] for i in rws]
    if rank_rows(N, K) != k:
        raise RankError("pivot witness has the wrong rank")
    return SubmatrixWitness(tuple(rws), tuple(cols), N, "K", r, k)


# ---------------------------------------------------------------- fields and diagnostics

def graded_dimension_rank(X: FreeComplex) -> CoeffPoly:
    """``sum_n dim H_n(X) q^n`` for a complex of vector spaces."""
    if X.algebra.dim != 1:
        raise RankError("graded dimension rank needs a complex over the ground field")
    return normalize(homology_dims(X).items(), INF)


@dataclass
class LocalizingReport:
    normalized: bool
    value_denominator: int
    epi: object
    depth: int

    @property
    def consistent(self) -> bool:
        return self.normalized and self.epi.passes

    @property
    def conclusion(self) -> str:
        if not self.normalized:
            return "not a normalized rank function"
        if self.epi.passes:
            return f"consistent with localizing to depth {self.depth}"
        if not self.epi.mult_iso:
            return "not localizing (multiplication map is not bijective)"
        return f"not localizing (Tor obstruction at degree {self.epi.first_obstruction})"

    def to_json(self):
        return {"normalized": self.normalized, "value_denominator": self.value_denominator,
                "epicheck": self.epi.to_json(), "depth": self.depth,
                "consistent": self.consistent, "conclusion": self.conclusion}


def localizing_diagnostic(sigma: SylvesterRank, depth: int = 6) -> LocalizingReport:
    """Finite-depth evidence for or against the rank function being localizing."""
    if depth < 1:
        raise RankError("depth must be >= 1")
    A = sigma.algebra
    normalized = derived_object_rank(sigma, free_module(A, 1, 0)) == 1
    epi = homological_epi_check(sigma.phi, depth)
    return LocalizingReport(normalized, sigma.n, epi, depth)


def matrix_rank_poly(sigma: SylvesterRank, F: MatrixOverA, d=INF) -> CoeffPoly:
    """Derived rank of the degree-0 chain map induced by ``F``."""
    return RankFunction(sigma, d).mor(matrix_map(F, 0))


def ground_rank(field=None) -> SylvesterRank:
    from .linal import QQ
    from .perf import ground_algebra
    return SylvesterRank(identity_hom(ground_algebra(field or QQ)), name="id")
