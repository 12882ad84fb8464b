"""End-to-end acceptance checks, one per criterion, all exact.

Run under pytest (a summary section lists PASS/FAIL per criterion) or
directly with ``python tests/test_acceptance.py``.
"""

import itertools
import random
import sys
from fractions import Fraction

import pytest

from perfrank.axioms import (SampleConfig, check_rank_axioms, check_sylvester_axioms,
                             random_chain_map, random_complex, random_conjugate,
                             random_contractible, random_matrix)
from perfrank.cli import load
from perfrank.coeff import INF, CoeffPoly, divide_q_plus_1, normalize
from perfrank.fdalg import local_matrix_rank
from perfrank.homalg import homological_epi_check, tor_dims
from perfrank.perf import cone, direct_sum, matrix_map
from perfrank.rank import (FaultyRank, RankFunction, SylvesterRank, derived_morphism_rank,
                           derived_object_rank, full_square_submatrix, idempotent_rank,
                           localizing_diagnostic, sylvester_morphism_rank)


def criterion_1():
    ws = load("smallexample")
    phi = ws.homs["loc-m2"]
    epi = homological_epi_check(phi, 6)
    tau = idempotent_rank(SylvesterRank(phi), ws.idempotents["twoterm-alpha2"])
    loc = localizing_diagnostic(SylvesterRank(phi), 6)
    ok = (epi.tensor_dim == 4 and epi.mult_iso and epi.tor_vanishing == [0] * 6
          and tau == CoeffPoly.zero() and loc.consistent
          and loc.conclusion == "consistent with localizing to depth 6")
    return ok, f"tensor_dim={epi.tensor_dim} Tor_1..6={epi.tor_vanishing} tau={tau} ({loc.conclusion})"


def criterion_2():
    ws = load("smallexample")
    tor = tor_dims(ws.modules["S1"], ws.modules["S1-left"], 6)
    loc = localizing_diagnostic(SylvesterRank(ws.homs["aug"]), 6)
    ok = (tor == [1, 0, 1, 0, 1, 0, 1] and not loc.consistent
          and loc.epi.first_obstruction == 2 and "degree 2" in loc.conclusion)
    return ok, f"Tor(S1,S1)={tor} ({loc.conclusion})"


def criterion_3():
    ws = load("fiedorowicz")
    assert ws.algebras["M"].dim == 5
    tor = tor_dims(ws.modules["k"], ws.modules["k-left"], 4)
    return tor == [1, 0, 1, 0, 0], f"Tor(k,k)={tor}"


def criterion_4(samples=200):
    ws = load("smallexample")
    A = ws.algebras["A"]
    bad = []
    count = 0
    for name in ("loc-m2", "aug"):
        sigma = SylvesterRank(ws.homs[name])
        for i in range(samples):
            rng = random.Random(f"c4:{name}:{i}")
            F = random_matrix(A, rng.randint(1, 4), rng.randint(1, 4), rng, rng.choice((0.3, 0.6, 0.9)))
            got = derived_morphism_rank(sigma, matrix_map(F, 0), INF)
            want = CoeffPoly.const(sylvester_morphism_rank(sigma, F))
            count += 1
            if got != want:
                bad.append((name, i, str(got), str(want)))
    return not bad, f"{count} matrices, {len(bad)} mismatches {bad[:3]}"


def criterion_5(samples=200, seed=0):
    ws = load("smallexample")
    cfg = SampleConfig(seed=seed, samples=samples)
    failures = []
    runs = 0
    for name in ("loc-m2", "aug"):
        sigma = SylvesterRank(ws.homs[name])
        rep = check_sylvester_axioms(sigma, cfg)
        runs += 1
        if not rep.passed:
            failures.append((name, "sylvester", rep.failed_axioms))
        for d in (1, 3, INF):
            rep = check_rank_axioms(RankFunction(sigma, d), cfg)
            runs += 1
            if not rep.passed:
                failures.append((name, d, rep.failed_axioms))
    # a single wrong object value must be caught
    sigma = SylvesterRank(ws.homs["aug"])
    A_ = ws.complexes["A"]
    faulty = check_rank_axioms(FaultyRank(sigma, 1, A_, 2), SampleConfig(seed=seed, samples=20))
    detected = not faulty.passed and faulty.counterexample is not None
    return not failures and detected, (f"{runs} suite runs x {samples} samples, failures={failures}, "
                                       f"fault detected={detected}")


def criterion_6(n=50):
    ws = load("smallexample")
    A = ws.algebras["A"]
    cfg = SampleConfig(max_degrees=3, max_rank=2)
    bad = []
    for name in ("loc-m2", "aug"):
        sigma = SylvesterRank(ws.homs[name])
        for i in range(n):
            rng = random.Random(f"c6:{name}:{i}")
            C = random_contractible(A, rng, cfg)
            if derived_object_rank(sigma, C) != 0:
                bad.append((name, i, "contractible"))
            X = random_complex(A, rng, cfg)
            r = derived_object_rank(sigma, X)
            if derived_object_rank(sigma, direct_sum(X, C)) != r:
                bad.append((name, i, "summand"))
            Xc, _ = random_conjugate(X, rng)
            if derived_object_rank(sigma, Xc) != r:
                bad.append((name, i, "conjugate"))
    return not bad, f"{2 * n} contractibles and invariance checks, failures={bad[:3]}"


def _exhaustive_max_full(sigma, F):
    """Largest k with a k x k submatrix N of F and rho(N) = k, by brute force."""
    best = 0
    for k in range(1, min(F.rows, F.cols) + 1):
        if any(sigma.matrix(F.submatrix(r, c)) == k
               for r in itertools.combinations(range(F.rows), k)
               for c in itertools.combinations(range(F.cols), k)):
            best = k
    return best


def criterion_7(n_random=100):
    ws = load("dualnumbers")
    D = ws.algebras["D"]
    sigma = SylvesterRank(ws.homs["residue"])
    bad = []
    for i in range(n_random):
        rng = random.Random(f"c7:{i}")
        F = random_matrix(D, rng.randint(1, 5), rng.randint(1, 5), rng, rng.choice((0.3, 0.6, 0.9)))
        if local_matrix_rank(D, F) != sylvester_morphism_rank(sigma, F):
            bad.append(("rank", i))
    witnesses = 0
    for rows, cols in itertools.product(range(1, 6), repeat=2):
        for j in range(4):
            rng = random.Random(f"c7w:{rows}:{cols}:{j}")
            F = random_matrix(D, rows, cols, rng, (0.2, 0.5, 0.8, 1.0)[j])
            r = sylvester_morphism_rank(sigma, F)
            w = full_square_submatrix(sigma, F)
            witnesses += 1
            if w.over != "A" or w.size != r or sigma.matrix(w.matrix) != w.size:
                bad.append(("witness", rows, cols, j))
            if _exhaustive_max_full(sigma, F) != r:
                bad.append(("oracle", rows, cols, j))
    return not bad, f"{n_random} rank comparisons, {witnesses} witnesses, failures={bad[:3]}"


def _random_poly(rng, nonneg, lo=-4, hi=4):
    terms = [(rng.randint(lo, hi), Fraction(rng.randint(0 if nonneg else -5, 5), rng.randint(1, 4)))
             for _ in range(rng.randint(0, 5))]
    return normalize(terms, INF)


def criterion_8(n=500):
    bad = []
    one_q = normalize([(0, 1), (1, 1)], INF)
    for i in range(n):
        rng = random.Random(f"c8:{i}")
        phi = _random_poly(rng, True)
        back, witness = divide_q_plus_1(one_q * phi)
        if back != phi or not witness:
            bad.append(("inf", i))
        d = rng.choice((1, 3, 5, 7, 9))
        phid = phi.reduce_period(d)
        back, witness = divide_q_plus_1(one_q.reduce_period(d) * phid)
        if back != phid or not witness:
            bad.append((d, i))
    for i in range(n):
        rng = random.Random(f"c8h:{i}")
        a, b = _random_poly(rng, False), _random_poly(rng, False)
        d = rng.randint(1, 9)
        red = lambda p: p.reduce_period(d)
        k = rng.randint(-3, 3)
        if (red(a + b) != red(a) + red(b) or red(a * b) != red(a) * red(b)
                or red(a.shift(k)) != red(a).shift(k) or red(CoeffPoly.const(1)) != CoeffPoly.const(1, d)):
            bad.append(("hom", i))
        # cone relation rho(C) = rho(Y) + q rho(X) - (1+q) rho(f) survives reduction
        c = b + a.shift(1) - one_q * phi
        if red(c) != red(b) + red(a).shift(1) - one_q.reduce_period(d) * red(phi):
            bad.append(("cone-form", i))
    ws = load("smallexample")
    A = ws.algebras["A"]
    cfg = SampleConfig()
    sigma = SylvesterRank(ws.homs["loc-m2"])
    for i in range(40):
        rng = random.Random(f"c8c:{i}")
        X, Y = random_complex(A, rng, cfg), random_complex(A, rng, cfg)
        f = random_chain_map(X, Y, rng)
        C, _, _ = cone(f)
        full = derived_object_rank(sigma, C)
        for d in (1, 3, 5):
            if RankFunction(sigma, d).obj(C) != full.reduce_period(d):
                bad.append(("cone", i, d))
            if RankFunction(sigma, d).mor(f) != RankFunction(sigma, INF).mor(f).reduce_period(d):
                bad.append(("morphism", i, d))
    return not bad, f"{n} divisions, {n} homomorphism pairs, 40 cones, failures={bad[:3]}"


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, acceptance):
    ok, detail = CRITERIA[n]()
    acceptance[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


if __name__ == "__main__":
    results = [(n, *CRITERIA[n]()) for n in sorted(CRITERIA)]
    for n, ok, detail in results:
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    sys.exit(0 if all(ok for _, ok, _ in results) else 1)
