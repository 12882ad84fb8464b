"""Randomized checks of the rank-function axioms and their standard consequences.

Every sample ``i`` draws from ``random.Random(f"{seed}:{i}")``, so a report is
a pure function of the rank function, the period and the configuration, and
any recorded counterexample can be replayed on its own.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .coeff import INF, CoeffPoly, PeriodError, normalize
from .fdalg import FDAlgebra
from .homalg import (FDModule, direct_sum as module_sum, free_right_module, generated_submodule,
                     quotient_with_projection, regular_module, submodule)
from .linal import kernel_rows
from .perf import (ChainMap, ComplexError, FreeComplex, MatrixOverA, cone, conjugate, diag,
                   direct_sum, free_module, identity_map, null_homotopic, shift, shift_map,
                   sum_map, triangular_map, two_term, zero_map)
from .rank import RankError, RankFunction, SylvesterRank, sylvester_module_rank


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    samples: int = 200
    max_degrees: int = 3       # number of consecutive nonzero degrees
    max_rank: int = 2          # rank of each free module
    density: float = 0.5       # chance that a coordinate is nonzero

    def __post_init__(self):
        if self.samples < 0 or self.max_degrees < 1 or self.max_rank < 1:
            raise ValueError("sample bounds must be positive")
        if not 0 < self.density <= 1:
            raise ValueError("density must be in (0, 1]")

    def rng(self, i: int) -> random.Random:
        return random.Random(f"{self.seed}:{i}")

    def to_json(self):
        return {"seed": self.seed, "samples": self.samples, "max_degrees": self.max_degrees,
                "max_rank": self.max_rank, "density": self.density}


@dataclass
class AxiomReport:
    suite: str
    period: object
    config: SampleConfig
    tallies: dict = field(default_factory=dict)      # axiom -> [passed, failed]
    counterexample: dict | None = None

    def record(self, axiom: str, ok: bool, sample: int, detail: str = "", inputs=None):
        t = self.tallies.setdefault(axiom, [0, 0])
        t[0 if ok else 1] += 1
        if not ok and self.counterexample is None:
            self.counterexample = {"suite": self.suite, "axiom": axiom, "sample": sample, "seed": self.config.seed,
                                   "rng_key": f"{self.config.seed}:{sample}",
                                   "detail": detail, "inputs": inputs or {}}

    @property
    def passed(self) -> bool:
        return all(f == 0 for _, f in self.tallies.values())

    @property
    def failed_axioms(self) -> list[str]:
        return sorted(a for a, (_, f) in self.tallies.items() if f)

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        out = AxiomReport(self.suite, self.period, self.config,
                          {a: list(t) for a, t in self.tallies.items()}, self.counterexample)
        for a, (p, f) in other.tallies.items():
            t = out.tallies.setdefault(a, [0, 0])
            t[0] += p
            t[1] += f
        if out.counterexample is None:
            out.counterexample = other.counterexample
        return out

    def to_json(self):
        return {"suite": self.suite, "period": self.period, "config": self.config.to_json(),
                "tallies": {a: {"pass": p, "fail": f} for a, (p, f) in sorted(self.tallies.items())},
                "passed": self.passed, "counterexample": self.counterexample}

    def summary(self) -> str:
        lines = [f"{self.suite} (d={self.period}, seed={self.config.seed}, "
                 f"samples={self.config.samples}): {'PASS' if self.passed else 'FAIL'}"]
        for a, (p, f) in sorted(self.tallies.items()):
            lines.append(f"  {a:<12} pass {p:>4}  fail {f:>4}")
        if self.counterexample:
            c = self.counterexample
            lines.append(f"  first failure: {c['axiom']} at sample {c['sample']}: {c['detail']}")
        return "\n".join(lines)


# ---------------------------------------------------------------- random data

def random_element(A: FDAlgebra, rng: random.Random, density: float = 0.5):
    F = A.field
    return tuple(F.coerce(rng.choice((-2, -1, 1, 2))) if rng.random() < density else F.zero
                 for _ in range(A.dim))


def random_matrix(A: FDAlgebra, rows: int, cols: int, rng: random.Random,
                  density: float = 0.5) -> MatrixOverA:
    return MatrixOverA(A, rows, cols,
                       [[random_element(A, rng, density) for _ in range(cols)] for _ in range(rows)])


def _combo(basis, rng, density, F, length):
    v = [F.zero] * length
    for b in basis:
        if rng.random() < density:
            c = F.coerce(rng.choice((-2, -1, 1, 2)))
            v = [F.norm(x + c * y) for x, y in zip(v, b)]
    return v


def random_complex(A: FDAlgebra, rng: random.Random, cfg: SampleConfig) -> FreeComplex:
    """Random ranks in consecutive degrees; each ``d_n`` has columns in ``ker d_{n-1}``."""
    F = A.field
    m = A.dim
    length = rng.randint(1, cfg.max_degrees)
    lo = rng.randint(-1, 1)
    ranks = {lo + i: rng.randint(1, cfg.max_rank) for i in range(length)}
    diffs = {}
    for n in range(lo + 1, lo + length):
        rows, cols = ranks[n - 1], ranks[n]
        prev = diffs.get(n - 1)
        if prev is None:
            D = random_matrix(A, rows, cols, rng, cfg.density)
        else:
            ker = kernel_rows(prev.k_matrix(), rows * m, F)
            colvecs = [_combo(ker, rng, cfg.density, F, rows * m) for _ in range(cols)]
            D = MatrixOverA(A, rows, cols, [[tuple(colvecs[j][r * m:(r + 1) * m])
                                             for j in range(cols)] for r in range(rows)])
        diffs[n] = D
    return FreeComplex(A, ranks, diffs)


def random_chain_map(X: FreeComplex, Y: FreeComplex, rng: random.Random,
                     density: float = 0.5) -> ChainMap:
    """A random element of the space of chain maps ``X -> Y``."""
    A = X.algebra
    F = A.field
    m = A.dim
    degs = [n for n in X.support if Y.rank(n)]
    slots = [(n, i, j, l) for n in degs for i in range(Y.rank(n)) for j in range(X.rank(n))
             for l in range(m)]
    if not slots:
        return zero_map(X, Y)

    def build(vec):
        comps = {}
        for n in degs:
            comps[n] = [[[F.zero] * m for _ in range(X.rank(n))] for _ in range(Y.rank(n))]
        for (n, i, j, l), c in zip(slots, vec):
            if c:
                comps[n][i][j][l] = c
        return {n: MatrixOverA(A, Y.rank(n), X.rank(n), M) for n, M in comps.items()}

    def residual(comps):
        out = []
        for n in sorted(set(X.support) | set(Y.support)):
            if not X.rank(n) or not Y.rank(n - 1):
                continue
            fn = comps.get(n, MatrixOverA.zeros(A, Y.rank(n), X.rank(n)))
            fm = comps.get(n - 1, MatrixOverA.zeros(A, Y.rank(n - 1), X.rank(n - 1)))
            R = Y.d(n) @ fn - fm @ X.d(n)
            out.extend(x for row in R.entries for e in row for x in e)
        return out

    cols = []
    for s in range(len(slots)):
        e = [F.zero] * len(slots)
        e[s] = F.one
        cols.append(residual(build(e)))
    if cols and cols[0]:
        system = [list(r) for r in zip(*cols)]
        ker = kernel_rows(system, len(slots), F)
    else:
        ker = [[F.one if i == s else F.zero for i in range(len(slots))] for s in range(len(slots))]
    vec = _combo(ker, rng, density, F, len(slots))
    return ChainMap(X, Y, build(vec))


def random_invertible(A: FDAlgebra, n: int, rng: random.Random, density: float = 0.5):
    """``(P, P^{-1})`` as a product of elementary matrices."""
    P = MatrixOverA.identity(A, n)
    Pinv = MatrixOverA.identity(A, n)
    if n < 2:
        return P, Pinv
    for _ in range(rng.randint(1, 3)):
        i, j = rng.sample(range(n), 2)
        a = random_element(A, rng, density)
        E = [[A.unit if r == c else A.zero() for c in range(n)] for r in range(n)]
        Einv = [row[:] for row in E]
        E[i][j] = a
        Einv[i][j] = tuple(A.field.norm(-x) for x in a)
        P = MatrixOverA(A, n, n, E) @ P
        Pinv = Pinv @ MatrixOverA(A, n, n, Einv)
    return P, Pinv


def random_conjugate(X: FreeComplex, rng: random.Random, density: float = 0.5):
    A = X.algebra
    P, Pinv = {}, {}
    for n, r in X.ranks.items():
        P[n], Pinv[n] = random_invertible(A, r, rng, density)
    return conjugate(X, P, Pinv)


def random_contractible(A: FDAlgebra, rng: random.Random, cfg: SampleConfig) -> FreeComplex:
    kind = rng.randrange(3)
    if kind == 0:
        C, _, _ = cone(identity_map(random_complex(A, rng, cfg)))
        return C
    r = rng.randint(1, cfg.max_rank)
    P, _ = random_invertible(A, r, rng, cfg.density)
    X = two_term(P, rng.randint(-1, 2))
    if kind == 2:
        X, _ = random_conjugate(direct_sum(X, two_term(MatrixOverA.identity(A, 1), 0)), rng)
    return X


def random_module(A: FDAlgebra, rng: random.Random, cfg: SampleConfig) -> FDModule:
    """A quotient of ``A^g`` by a random submodule."""
    g = rng.randint(1, cfg.max_rank)
    free = free_right_module(A, g)
    vecs = [_combo([[A.field.one if i == j else A.field.zero for i in range(free.dim)]
                    for j in range(free.dim)], rng, cfg.density / 2, A.field, free.dim)
            for _ in range(rng.randint(0, 2))]
    Q, _ = quotient_with_projection(free, [v for v in vecs if any(v)])
    return Q


# ---------------------------------------------------------------- helpers

def _js(obj):
    if isinstance(obj, FreeComplex):
        return obj.to_json()
    if isinstance(obj, ChainMap):
        return {"source": obj.source.to_json(), "target": obj.target.to_json(), **obj.to_json()}
    if isinstance(obj, MatrixOverA):
        return obj.to_json()
    if isinstance(obj, FDModule):
        return obj.to_json()
    return str(obj)


class _Sample:
    """Evaluates named checks for one sample and feeds the report."""

    def __init__(self, report: AxiomReport, index: int, only: str | None = None):
        self.report = report
        self.index = index
        self.only = only
        self.failures: list[str] = []

    def check(self, axiom: str, fn: Callable[[], tuple], **inputs):
        if self.only is not None and axiom != self.only:
            return
        try:
            ok, detail = fn()
        except (RankError, PeriodError, ComplexError, ArithmeticError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        if not ok:
            self.failures.append(axiom)
        self.report.record(axiom, ok, self.index, detail,
                           {k: _js(v) for k, v in inputs.items()} if not ok else None)


def _eq(a, b):
    return a == b, f"{a} != {b}"


def _le(a, b):
    return (b - a).is_nonneg(), f"{a} is not <= {b}"


# ---------------------------------------------------------------- suites

def _rank_sample(R: RankFunction, rng: random.Random, cfg: SampleConfig, s: _Sample):
    A = R.algebra
    d = R.period
    q = CoeffPoly.monomial(1, 1, d)
    one = CoeffPoly.const(1, d)
    A0 = free_module(A, 1, 0)
    if s.index == 0:
        idA = identity_map(A0)
        s.check("O1", lambda: _eq(R.obj(A0), one), X=A0)
        s.check("M1", lambda: _eq(R.mor(idA), one), f=idA)
        C, iota, pi = cone(idA)
        s.check("M3", lambda: _eq(R.mor(idA) + R.mor(iota), R.obj(A0)), f=idA)
    X = random_complex(A, rng, cfg)
    Y = random_complex(A, rng, cfg)
    Z = random_complex(A, rng, cfg)
    f = random_chain_map(X, Y, rng, cfg.density)
    g = random_chain_map(Y, Z, rng, cfg.density)
    f2 = random_chain_map(Z, X, rng, cfg.density)
    h = random_chain_map(Z, Y, rng, cfg.density)
    C, iota, pi = cone(f)
    SX = shift(X, 1)

    s.check("O1", lambda: _eq(R.obj(FreeComplex(A, {})), CoeffPoly.zero(d)))
    s.check("O2", lambda: _eq(R.obj(direct_sum(X, Y)), R.obj(X) + R.obj(Y)), X=X, Y=Y)
    s.check("Op1", lambda: _eq(R.obj(SX), R.obj(X) * q), X=X)
    s.check("O3", lambda: _le(R.obj(Y), R.obj(X) + R.obj(C)), f=f)
    s.check("O3", lambda: _le(R.obj(C), R.obj(Y) + R.obj(SX)), f=f)
    s.check("M1", lambda: _eq(R.mor(identity_map(X)), R.obj(X)), X=X)
    s.check("M1", lambda: _eq(R.mor(zero_map(X, Y)), CoeffPoly.zero(d)), X=X, Y=Y)
    s.check("M2", lambda: _eq(R.mor(sum_map(f, g)), R.mor(f) + R.mor(g)), f=f, g=g)
    s.check("Mp1", lambda: _eq(R.mor(shift_map(f, 1)), R.mor(f) * q), f=f)
    s.check("M3", lambda: _eq(R.mor(f) + R.mor(iota), R.obj(Y)), f=f)
    s.check("M3", lambda: _eq(R.mor(iota) + R.mor(pi), R.obj(C)), f=f)
    s.check("M3", lambda: _eq(R.mor(pi) + R.mor(f) * q, R.obj(SX)), f=f)
    s.check("Op3", lambda: _eq(R.obj(X) - R.obj(Y) + R.obj(C),
                               R.mor(shift_map(pi, -1)) * (q + one)), f=f)
    s.check("M4", lambda: _le(R.mor(f) + R.mor(f2), R.mor(triangular_map(f, h, f2))),
            f=f, g=f2, h=h)
    gf = g @ f
    s.check("M5", lambda: _le(R.mor(gf), R.mor(f)), f=f, g=g)
    s.check("M5", lambda: _le(R.mor(gf), R.mor(g)), f=f, g=g)
    s.check("Mbound", lambda: _le(R.mor(f), R.obj(X)), f=f)
    s.check("Mbound", lambda: _le(R.mor(f), R.obj(Y)), f=f)


def check_rank_axioms(R: RankFunction, cfg: SampleConfig = SampleConfig()) -> AxiomReport:
    return _run("rank", R, cfg, _rank_sample)


def _run(suite, R, cfg, fn, only=None, indices=None) -> AxiomReport:
    report = AxiomReport(suite, getattr(R, "period", None), cfg)
    for i in (indices if indices is not None else range(cfg.samples)):
        fn(R, cfg.rng(i), cfg, _Sample(report, i, only))
    return report


def _sylvester_sample(sigma: SylvesterRank, rng: random.Random, cfg: SampleConfig, s: _Sample):
    A = sigma.algebra
    R = sigma.matrix
    r = cfg.max_rank + 1
    a, b, c = (rng.randint(1, r) for _ in range(3))
    F = random_matrix(A, a, b, rng, cfg.density)
    G = random_matrix(A, b, c, rng, cfg.density)
    H = random_matrix(A, a, c, rng, cfg.density)
    K = random_matrix(A, c, c, rng, cfg.density)
    if s.index == 0:
        s.check("m1", lambda: _eq(R(MatrixOverA.identity(A, 1)), 1))
        s.check("o1", lambda: _eq(sylvester_module_rank(sigma, regular_module(A)), 1))
    s.check("m1", lambda: _eq(R(MatrixOverA.identity(A, a)), a))
    s.check("m2", lambda: _eq(R(diag(A, F, G)), R(F) + R(G)), F=F, G=G)
    s.check("m3", lambda: _le_q(R(F) + R(K), R(_block2(A, F, H, K))), F=F, H=H, K=K)
    s.check("m4", lambda: _le_q(R(F @ G), min(R(F), R(G))), F=F, G=G)
    # modules: M2 a random quotient of A^g, M3 = M2 / M1 with M1 generated by random vectors
    M2 = random_module(A, rng, cfg)
    N = random_module(A, rng, cfg)
    rho = lambda M: sylvester_module_rank(sigma, M)
    s.check("o2", lambda: _eq(rho(module_sum(M2, N)), rho(M2) + rho(N)), M=M2, N=N)
    unit = [[A.field.one if i == j else A.field.zero for i in range(M2.dim)] for j in range(M2.dim)]
    gens = [v for v in (_combo(unit, rng, cfg.density / 2, A.field, M2.dim) for _ in range(2)) if any(v)]
    M1, _ = submodule(M2, generated_submodule(M2, gens).rows)
    M3, _ = quotient_with_projection(M2, gens)
    s.check("o3", lambda: _le_q(rho(M3), rho(M2)), M1=M1, M2=M2)
    s.check("o3", lambda: _le_q(rho(M2), rho(M1) + rho(M3)), M1=M1, M2=M2)


def _le_q(a, b):
    return a <= b, f"{a} is not <= {b}"


def _block2(A, F, H, K):
    from .perf import block
    return block(A, [[F, H], [MatrixOverA.zeros(A, K.rows, F.cols), K]])


def check_sylvester_axioms(sigma: SylvesterRank, cfg: SampleConfig = SampleConfig()) -> AxiomReport:
    """m1-m4 on random matrices and o1-o3 on random finite-dimensional modules."""
    return _run("sylvester", sigma, cfg, _sylvester_sample)


def _lemma_sample(R: RankFunction, rng: random.Random, cfg: SampleConfig, s: _Sample):
    A = R.algebra
    d = R.period
    q = CoeffPoly.monomial(1, 1, d)
    X = random_complex(A, rng, cfg)
    Y = random_complex(A, rng, cfg)
    Z = random_complex(A, rng, cfg)
    f = random_chain_map(X, Y, rng, cfg.density)
    g = random_chain_map(X, Y, rng, cfg.density)
    k = random_chain_map(Y, Z, rng, cfg.density)
    hom = {n: random_matrix(A, Y.rank(n + 1), X.rank(n), rng, cfg.density)
           for n in X.support if Y.rank(n + 1)}
    nul = null_homotopic(X, Y, hom)
    alpha = rng.choice((-1, 2, Fraction(-1, 3), 5))

    s.check("sum", lambda: _le(R.mor(f + g), R.mor(f) + R.mor(g)), f=f, g=g)
    s.check("additive", lambda: _eq(R.mor(nul), CoeffPoly.zero(d)), g=nul)
    s.check("additive", lambda: _eq(R.mor(f + nul), R.mor(f)), f=f, g=nul)
    s.check("scalar", lambda: _eq(R.mor(f.scale(-1)), R.mor(f)), f=f)
    s.check("scalar", lambda: _eq(R.mor(f.scale(alpha)), R.mor(f)), f=f)
    X2, iso = random_conjugate(X, rng, cfg.density)
    g2 = random_chain_map(X2, Y, rng, cfg.density)
    s.check("full", lambda: _eq(R.mor(iso), R.obj(X)), f=iso)
    s.check("full", lambda: _eq(R.mor(g2 @ iso), R.mor(g2)), f=iso, g=g2)
    s.check("full", lambda: _eq(R.mor(k @ identity_map(Y)), R.mor(k)), g=k)
    # Y -> cone(f) + Z -> cone(kf) for f: X -> Y, k: Y -> Z
    Cf, _, _ = cone(f)
    Ckf, _, _ = cone(k @ f)
    B = direct_sum(Cf, Z)
    s.check("neeman", lambda: _le(R.obj(B), R.obj(Y) + R.obj(Ckf)), f=f, g=k)
    s.check("neeman", lambda: _le(R.obj(Ckf), R.obj(B) + R.obj(Y) * q), f=f, g=k)
    s.check("neeman", lambda: _le(R.obj(Y) * q, R.obj(Ckf) + R.obj(B) * q), f=f, g=k)
    bound = normalize([(n, r) for n, r in X.ranks.items()], INF).reduce_period(d)
    s.check("objbound", lambda: _le(R.obj(X), bound), X=X)


def check_lemma_suite(R: RankFunction, cfg: SampleConfig = SampleConfig()) -> AxiomReport:
    """Consequences of the axioms: subadditivity, null maps, scalars, full maps, octahedral bounds."""
    return _run("lemmas", R, cfg, _lemma_sample)


SUITES = {"rank": _rank_sample, "sylvester": _sylvester_sample, "lemmas": _lemma_sample}


def replay(R, cfg: SampleConfig, counterexample: dict) -> list[str]:
    """Re-run the sample that produced ``counterexample``; returns the failing axioms."""
    suite = counterexample.get("suite") or "rank"
    report = AxiomReport(suite, getattr(R, "period", None), cfg)
    s = _Sample(report, counterexample["sample"], counterexample["axiom"])
    SUITES[suite](R, cfg.rng(counterexample["sample"]), cfg, s)
    return s.failures
