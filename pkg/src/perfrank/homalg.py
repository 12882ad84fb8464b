"""Finite-dimensional modules, free resolutions and Tor over an FDAlgebra.

A module is a k-vector space with one action matrix per algebra basis
element.  Vectors are coordinate columns; for a right module
``coords(m * b) = action[b] @ coords(m)``, for a left module
``coords(b * m) = action[b] @ coords(m)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from .fdalg import FDAlgebra, MatAlgebraHom, UnsupportedCharacteristic
from .linal import Echelon, fmt, kernel_rows, matmul_rows, rank_rows
from .perf import MatrixOverA

log = logging.getLogger(__name__)

RIGHT, LEFT = "right", "left"


class ModuleError(ValueError):
    pass


class FDModule:
    def __init__(self, algebra: FDAlgebra, dim: int, action: Sequence, side: str = RIGHT,
                 name: str = "", check: bool = True):
        if side not in (RIGHT, LEFT):
            raise ModuleError(f"side must be 'right' or 'left', not {side!r}")
        self.algebra = algebra
        self.dim = dim
        self.side = side
        self.name = name
        F = algebra.field
        self.action = tuple(tuple(tuple(F.coerce(x) for x in row) for row in M) for M in action)
        if len(self.action) != algebra.dim:
            raise ModuleError("one action matrix per basis element is required")
        if any(len(M) != dim or any(len(r) != dim for r in M) for M in self.action):
            raise ModuleError(f"action matrices must be {dim}x{dim}")
        if check:
            problems = self.violations()
            if problems:
                raise ModuleError("; ".join(problems[:10]))

    def __repr__(self):
        return f"FDModule({self.name or 'M'}, dim={self.dim}, {self.side})"

    def act_matrix(self, x):
        """Action matrix of an arbitrary algebra element given by coordinates."""
        F = self.algebra.field
        v = self.dim
        out = [[F.zero] * v for _ in range(v)]
        for c, M in zip(x, self.action):
            if c:
                for i in range(v):
                    for j in range(v):
                        if M[i][j]:
                            out[i][j] += c * M[i][j]
        return [[F.norm(a) for a in r] for r in out]

    def act(self, x, vec):
        F = self.algebra.field
        M = self.act_matrix(x)
        return [F.norm(sum((a * b for a, b in zip(r, vec)), F.zero)) for r in M]

    def violations(self) -> list[str]:
        A = self.algebra
        F = A.field
        out = []
        ident = [[F.one if i == j else F.zero for j in range(self.dim)] for i in range(self.dim)]
        if self.act_matrix(A.unit) != ident:
            out.append("unit does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                Mi, Mj = [list(r) for r in self.action[i]], [list(r) for r in self.action[j]]
                lhs = matmul_rows(Mj, Mi, F) if self.side == RIGHT else matmul_rows(Mi, Mj, F)
                lhs = [list(r) for r in lhs] if lhs else [[] for _ in range(self.dim)]
                rhs = self.act_matrix(A.mult[i][j])
                if self.dim and lhs != rhs:
                    out.append(f"action of {A.labels[i]}*{A.labels[j]} is not compatible")
        return out

    def to_json(self, algebra_ref: str = ""):
        return {"algebra": algebra_ref, "dim": self.dim, "side": self.side,
                "action": {lab: {"rows": self.dim, "cols": self.dim,
                                 "entries": [[fmt(x) for x in r] for r in M]}
                           for lab, M in zip(self.algebra.labels, self.action)}}

    @classmethod
    def from_json(cls, A: FDAlgebra, data, name: str = "") -> "FDModule":
        dim = int(data["dim"])
        side = data.get("side", RIGHT)
        F = A.field
        acts = []
        given = data.get("action", {})
        for lab in A.labels:
            M = given.get(lab)
            if M is None:
                raise ModuleError(f"module {name or ''} has no action for basis element {lab}")
            rows = M["entries"] if isinstance(M, dict) else M
            acts.append([[F.coerce(x) for x in r] for r in rows] if dim else [])
        return cls(A, dim, acts, side=side, name=name)


# ---------------------------------------------------------------- constructions

def regular_module(A: FDAlgebra, side: str = RIGHT) -> FDModule:
    acts = A.right_mult if side == RIGHT else A.left_mult
    return FDModule(A, A.dim, acts, side, name="A", check=False)


def free_module_action(A: FDAlgebra, g: int, side: str = RIGHT):
    base = A.right_mult if side == RIGHT else A.left_mult
    m = A.dim
    F = A.field
    acts = []
    for M in base:
        big = [[F.zero] * (g * m) for _ in range(g * m)]
        for b in range(g):
            for i in range(m):
                big[b * m + i][b * m:(b + 1) * m] = M[i]
        acts.append(big)
    return acts


def free_right_module(A: FDAlgebra, g: int) -> FDModule:
    return FDModule(A, g * A.dim, free_module_action(A, g), RIGHT, name=f"A^{g}", check=False)


def module_from_hom(phi: MatAlgebraHom, side: str = RIGHT) -> FDModule:
    """``M_n(K)`` as an A-module through ``phi`` (row-major matrix-unit basis)."""
    A = phi.source
    F = A.field
    n = phi.n
    dim = n * n
    acts = []
    for l in range(A.dim):
        P = phi.images[l].entries
        M = [[F.zero] * dim for _ in range(dim)]
        for i in range(n):
            for j in range(n):
                col = i * n + j
                if side == RIGHT:   # E_ij P has row i equal to row j of P
                    for t in range(n):
                        M[i * n + t][col] = P[j][t]
                else:               # P E_ij has column j equal to column i of P
                    for s in range(n):
                        M[s * n + j][col] = P[s][i]
        acts.append(M)
    return FDModule(A, dim, acts, side, name=f"{phi.name or 'B'}-{side}")


def direct_sum(M: FDModule, N: FDModule) -> FDModule:
    if M.algebra is not N.algebra or M.side != N.side:
        raise ModuleError("direct sum needs modules over the same algebra on the same side")
    F = M.algebra.field
    v, w = M.dim, N.dim
    acts = []
    for a, b in zip(M.action, N.action):
        big = [[F.zero] * (v + w) for _ in range(v + w)]
        for i in range(v):
            big[i][:v] = a[i]
        for i in range(w):
            big[v + i][v:] = b[i]
        acts.append(big)
    return FDModule(M.algebra, v + w, acts, M.side, check=False)


def submodule(M: FDModule, vectors) -> tuple[FDModule, Echelon]:
    """Submodule spanned (over k) by ``vectors``; they must already be invariant."""
    A = M.algebra
    ech = Echelon(vectors, M.dim, A.field)
    acts = []
    for l in range(A.dim):
        cols = []
        for w in ech.rows:
            c = ech.coords(_apply(M.action[l], w, A.field))
            if c is None:
                raise ModuleError("vectors do not span a submodule")
            cols.append(c)
        k = len(ech)
        acts.append([[cols[j][i] for j in range(k)] for i in range(k)])
    return FDModule(A, len(ech), acts, M.side, check=False), ech


def generated_submodule(M: FDModule, gens) -> Echelon:
    """k-span of ``gens`` closed under the action."""
    A = M.algebra
    F = A.field
    vecs = [list(g) for g in gens]
    ech = Echelon(vecs, M.dim, F)
    frontier = list(ech.rows)
    while frontier:
        new = []
        for v in frontier:
            for l in range(A.dim):
                w = _apply(M.action[l], v, F)
                if not ech.contains(w):
                    vecs.append(w)
                    new.append(w)
                    ech = Echelon(vecs, M.dim, F)
        frontier = new
    return ech


def quotient_module(M: FDModule, vectors) -> FDModule:
    """``M / S`` where ``S`` is the submodule generated by ``vectors``."""
    return quotient_with_projection(M, vectors)[0]


def quotient_with_projection(M: FDModule, vectors):
    """``(M / S, proj)`` where ``proj`` sends a vector of ``M`` to its class."""
    A = M.algebra
    F = A.field
    S = generated_submodule(M, vectors)
    piv = set(S.pivots)
    comp = [j for j in range(M.dim) if j not in piv]
    acts = []
    for l in range(A.dim):
        Ml = M.action[l]
        cols = []
        for j in comp:
            e = [F.zero] * M.dim
            e[j] = F.one
            r = S.reduce(_apply(Ml, e, F))
            cols.append([r[i] for i in comp])
        q = len(comp)
        acts.append([[cols[c][r] for c in range(q)] for r in range(q)])

    def proj(v):
        r = S.reduce(v)
        return [r[i] for i in comp]
    return FDModule(A, len(comp), acts, M.side, check=False), proj


def coker_module(F_: MatrixOverA) -> FDModule:
    """Cokernel of the right-module map ``A^cols -> A^rows`` given by ``F_``."""
    A = F_.algebra
    free = free_right_module(A, F_.rows)
    K = F_.k_matrix()
    cols = [[row[j] for row in K] for j in range(F_.cols * A.dim)] if K else []
    return quotient_module(free, cols)


def _apply(M, v, F):
    return [F.norm(sum((a * b for a, b in zip(r, v) if a), F.zero)) for r in M]


# ---------------------------------------------------------------- resolutions

@dataclass
class FreeHull:
    generators: list          # module vectors
    surjection: list          # rows of the k-matrix A^g -> M
    g: int


def _radical(A: FDAlgebra):
    try:
        return A.radical_info.radical
    except UnsupportedCharacteristic:
        return None


def free_hull(M: FDModule) -> FreeHull:
    """Generators of a right module and the surjection ``A^g -> M``.

    Uses a basis of ``M / M rad(A)`` when the radical is available (so ``g``
    is minimal), otherwise a greedy generating subset of the standard basis.
    """
    if M.side != RIGHT:
        raise ModuleError("free hulls are built for right modules")
    A = M.algebra
    F = A.field
    v = M.dim
    std = [[F.one if i == j else F.zero for i in range(v)] for j in range(v)]
    rad = _radical(A)
    gens = []
    if rad is not None:
        MJ = []
        for r in rad:
            R = M.act_matrix(r)
            MJ.extend([[R[i][s] for i in range(v)] for s in range(v)])
        ech = Echelon(MJ, v, F)
        vecs = [list(x) for x in ech.rows]
        for e in std:
            if not ech.contains(e):
                gens.append(e)
                vecs.append(e)
                ech = Echelon(vecs, v, F)
    else:
        span = Echelon([], v, F)
        for e in std:
            if not span.contains(e):
                gens.append(e)
                span = generated_submodule(M, gens)
    m = A.dim
    surj = [[F.zero] * (len(gens) * m) for _ in range(v)]
    for i, g in enumerate(gens):
        for l in range(m):
            col = _apply(M.action[l], g, F)
            for r in range(v):
                surj[r][i * m + l] = col[r]
    if v and rank_rows(surj, F) != v:
        raise ModuleError("free hull is not surjective")
    return FreeHull(gens, surj, len(gens))


@dataclass
class Resolution:
    module: FDModule
    ranks: list                      # g_0, g_1, ...
    maps: list                       # f_1, f_2, ... with f_i : A^{g_i} -> A^{g_{i-1}}
    augmentation: list               # k-matrix A^{g_0} -> M
    syzygies: list = field(default_factory=list)


def resolution(M: FDModule, depth: int) -> Resolution:
    """Free resolution ``A^{g_depth} -> ... -> A^{g_0} -> M -> 0``; exactness is checked."""
    if depth < 1:
        raise ModuleError("depth must be >= 1")
    A = M.algebra
    F = A.field
    m = A.dim
    hull = free_hull(M)
    ranks = [hull.g]
    maps: list[MatrixOverA] = []
    syz = []
    prev_map = hull.surjection
    g_prev = hull.g
    for step in range(depth):
        ker = kernel_rows(prev_map, g_prev * m, F) if g_prev else []
        if not ker:
            ranks.append(0)
            maps.append(MatrixOverA.zeros(A, g_prev, 0))
            g_prev = 0
            prev_map = []
            syz.append(None)
            continue
        K, ech = submodule(free_right_module(A, g_prev), ker)
        syz.append(K)
        h = free_hull(K)
        # generators as vectors of A^{g_prev}
        gens = []
        for c in h.generators:
            vec = [F.zero] * (g_prev * m)
            for coeff, w in zip(c, ech.rows):
                if coeff:
                    vec = [F.norm(a + coeff * b) for a, b in zip(vec, w)]
            gens.append(vec)
        f = MatrixOverA(A, g_prev, h.g,
                        [[tuple(gens[j][r * m:(r + 1) * m]) for j in range(h.g)]
                         for r in range(g_prev)])
        kf = f.k_matrix()
        if rank_rows(kf, F) != len(ker) or any(any(r) for r in matmul_rows(prev_map, kf, F)):
            raise ModuleError(f"resolution is not exact at stage {step}")
        maps.append(f)
        ranks.append(h.g)
        prev_map = kf
        g_prev = h.g
    log.debug("resolution ranks %s", ranks)
    return Resolution(M, ranks, maps, hull.surjection, syz)


@dataclass
class Presentation:
    f: MatrixOverA
    module: FDModule
    generators: int


def presentation(M: FDModule) -> Presentation:
    """``A^p --f--> A^g -> M -> 0`` with the cokernel dimension audited."""
    res = resolution(M, 1)
    f = res.maps[0]
    A = M.algebra
    kf = f.k_matrix()
    coker_dim = f.rows * A.dim - (rank_rows(kf, A.field) if kf else 0)
    if coker_dim != M.dim:
        raise ModuleError("presentation cokernel has the wrong dimension")
    return Presentation(f, M, res.ranks[0])


# ---------------------------------------------------------------- tensor and Tor

def _check_pair(M: FDModule, N: FDModule):
    if M.side != RIGHT or N.side != LEFT:
        raise ModuleError("tensor product needs a right module and a left module")
    if M.algebra is not N.algebra:
        raise ModuleError("modules are over different algebras")


def tensor_relations(M: FDModule, N: FDModule) -> list:
    """Spanning vectors ``m a (x) n - m (x) a n`` inside ``M (x)_k N``."""
    _check_pair(M, N)
    F = M.algebra.field
    v, w = M.dim, N.dim
    rels = []
    for l in range(M.algebra.dim):
        Am, An = M.action[l], N.action[l]
        for s in range(v):
            for t in range(w):
                vec = [F.zero] * (v * w)
                for s2 in range(v):
                    if Am[s2][s]:
                        vec[s2 * w + t] += Am[s2][s]
                for t2 in range(w):
                    if An[t2][t]:
                        vec[s * w + t2] -= An[t2][t]
                if any(vec):
                    rels.append([F.norm(x) for x in vec])
    return rels


def tensor_dim(M: FDModule, N: FDModule) -> int:
    rels = tensor_relations(M, N)
    return M.dim * N.dim - (rank_rows(rels, M.algebra.field) if rels else 0)


def _tensor_map(f: MatrixOverA, N: FDModule):
    w = N.dim
    F = N.algebra.field
    out = [[F.zero] * (f.cols * w) for _ in range(f.rows * w)]
    for r, row in enumerate(f.entries):
        for c, a in enumerate(row):
            if any(a):
                blk = N.act_matrix(a)
                for s in range(w):
                    out[r * w + s][c * w:(c + 1) * w] = blk[s]
    return out


def tor_dims(M: FDModule, N: FDModule, depth: int) -> list[int]:
    """``[dim Tor_0, ..., dim Tor_depth]`` of ``Tor^A(M, N)``."""
    _check_pair(M, N)
    res = resolution(M, depth + 1)
    F = M.algebra.field
    w = N.dim
    rk = [0]
    for f in res.maps:
        T = _tensor_map(f, N)
        rk.append(rank_rows(T, F) if T and T[0] else 0)
    return [res.ranks[i] * w - rk[i] - rk[i + 1] for i in range(depth + 1)]


@dataclass
class EpiReport:
    tensor_dim: int
    target_dim: int
    mult_iso: bool
    tor_vanishing: list
    depth: int

    @property
    def passes(self) -> bool:
        return self.mult_iso and not any(self.tor_vanishing)

    @property
    def first_obstruction(self):
        for i, t in enumerate(self.tor_vanishing, start=1):
            if t:
                return i
        return None

    @property
    def verdict(self) -> str:
        if not self.mult_iso:
            return "fails: B (x)_A B -> B is not bijective"
        if self.passes:
            return f"passes to depth {self.depth}"
        return f"fails: Tor_{self.first_obstruction} != 0"

    def to_json(self):
        return {"tensor_dim": self.tensor_dim, "target_dim": self.target_dim,
                "mult_iso": self.mult_iso, "tor_vanishing": list(self.tor_vanishing),
                "depth": self.depth, "passes": self.passes, "verdict": self.verdict}


def homological_epi_check(phi: MatAlgebraHom, depth: int = 6) -> EpiReport:
    """Depth-bounded evidence that ``phi`` is a homological epimorphism."""
    if depth < 1:
        raise ModuleError("depth must be >= 1")
    Br = module_from_hom(phi, RIGHT)
    Bl = module_from_hom(phi, LEFT)
    F = phi.field
    n = phi.n
    d = n * n
    # multiplication M_n (x)_k M_n -> M_n, basis E_ij (x) E_kl -> delta_jk E_il
    mu = [[F.zero] * (d * d) for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for l in range(n):
                mu[i * n + l][(i * n + j) * d + (j * n + l)] = F.one
    rels = tensor_relations(Br, Bl)
    rels_killed = not rels or not any(any(r) for r in matmul_rows(mu, [list(c) for c in zip(*rels)], F))
    td = d * d - (rank_rows(rels, F) if rels else 0)
    mult_iso = rels_killed and td == d and rank_rows(mu, F) == d
    tors = tor_dims(Br, Bl, depth)
    return EpiReport(td, d, mult_iso, tors[1:], depth)
