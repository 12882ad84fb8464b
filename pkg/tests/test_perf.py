import random

import pytest
from hypothesis import given, strategies as st

from perfrank.axioms import (SampleConfig, random_chain_map, random_complex, random_conjugate,
                             random_contractible, random_matrix)
from perfrank.perf import (ChainMap, ComplexError, FreeComplex, IdempotentObject, MatrixOverA,
                           brutal_truncate, chain_map_violations, cone, direct_sum, free_module,
                           homology_dims, identity_map, left_multiplication_idempotent,
                           null_homotopic, shift, shift_map, two_term, validate)

CFG = SampleConfig()
seeds = st.integers(0, 10**6)


def euler(X, m):
    return sum((-1) ** n * r * m for n, r in X.ranks.items())


@given(seeds)
def test_random_complexes_square_to_zero(A, seed):
    X = random_complex(A, random.Random(seed), CFG)
    assert validate(X) == []


@given(seeds)
def test_cone_structure(A, seed):
    rng = random.Random(seed)
    X, Y = random_complex(A, rng, CFG), random_complex(A, rng, CFG)
    f = random_chain_map(X, Y, rng)
    assert chain_map_violations(f) == []
    C, iota, pi = cone(f)
    assert validate(C) == []
    assert chain_map_violations(iota) == [] and chain_map_violations(pi) == []
    assert all(M.is_zero() for M in (pi @ iota).comps.values())
    for n in C.ranks:
        assert C.rank(n) == X.rank(n - 1) + Y.rank(n)


@given(seeds)
def test_euler_characteristic(A, seed):
    X = random_complex(A, random.Random(seed), CFG)
    H = homology_dims(X)
    assert sum((-1) ** n * h for n, h in H.items()) == euler(X, A.dim)


@given(seeds)
def test_shift_moves_homology(A, seed):
    X = random_complex(A, random.Random(seed), CFG)
    H, HS = homology_dims(X), homology_dims(shift(X, 1))
    assert {n + 1: h for n, h in H.items()} == HS
    assert shift(shift(X, 1), -1) == X


@given(seeds)
def test_contractibles_are_acyclic(A, seed):
    C = random_contractible(A, random.Random(seed), CFG)
    assert all(h == 0 for h in homology_dims(C).values())


@given(seeds)
def test_conjugation_is_chain_iso(A, seed):
    rng = random.Random(seed)
    X = random_complex(A, rng, CFG)
    Y, iso = random_conjugate(X, rng)
    assert validate(Y) == [] and chain_map_violations(iso) == []
    assert homology_dims(X) == homology_dims(Y)


@given(seeds)
def test_null_homotopic_maps_are_chain_maps(A, seed):
    rng = random.Random(seed)
    X, Y = random_complex(A, rng, CFG), random_complex(A, rng, CFG)
    h = {n: random_matrix(A, Y.rank(n + 1), X.rank(n), rng)
         for n in X.ranks if Y.rank(n + 1)}
    assert chain_map_violations(null_homotopic(X, Y, h)) == []


@given(seeds)
def test_matrix_product_associative(A, seed):
    rng = random.Random(seed)
    a, b, c, d = (rng.randint(1, 3) for _ in range(4))
    F, G, H = (random_matrix(A, a, b, rng), random_matrix(A, b, c, rng),
               random_matrix(A, c, d, rng))
    assert (F @ G) @ H == F @ (G @ H)
    assert F @ MatrixOverA.identity(A, b) == F


def test_cone_of_identity_on_free_module(A):
    C, iota, pi = cone(identity_map(free_module(A, 1, 0)))
    assert C.ranks == {0: 1, 1: 1}
    assert C.d(1) == MatrixOverA.identity(A, 1)


def test_shift_negates_differential(A):
    X = two_term(MatrixOverA.from_entries(A, [["a2"]]))
    assert shift(X, 1).d(2) == X.d(1).scale(-1)
    assert shift(X, 2).d(3) == X.d(1)


def test_bad_differential_rejected(A):
    D = MatrixOverA.from_entries(A, [["e1"]])
    X = FreeComplex(A, {0: 1, 1: 1, 2: 1}, {1: D, 2: D})
    assert validate(X)
    with pytest.raises(ComplexError):
        FreeComplex(A, {0: 1, 1: 2}, {1: D})


def test_idempotent_objects(A):
    X = two_term(MatrixOverA.from_entries(A, [["a2"]]))
    e = left_multiplication_idempotent(X, {1: "e2", 0: "e1"})
    P = IdempotentObject(X, e)
    assert P.e @ P.e == P.e
    with pytest.raises(ComplexError):
        IdempotentObject(X, left_multiplication_idempotent(X, {1: "e1", 0: "e1"}))
    with pytest.raises(ComplexError):
        IdempotentObject(X, identity_map(X).scale(2))


def test_json_round_trip(A):
    X = random_complex(A, random.Random(5), CFG)
    assert FreeComplex.from_json(A, X.to_json()) == X
    f = random_chain_map(X, X, random.Random(6))
    comps = {int(n): MatrixOverA.from_json(A, m) for n, m in f.to_json()["components"].items()}
    assert ChainMap(X, X, comps) == f


def test_truncation_and_sums(A):
    X = random_complex(A, random.Random(9), SampleConfig(max_degrees=3))
    T = brutal_truncate(X, lo=0, hi=0)
    assert set(T.ranks) <= {0}
    S = direct_sum(X, shift(X, 1))
    assert validate(S) == []
    assert shift_map(identity_map(X), 1) == identity_map(shift(X, 1))


@given(seeds)
def test_base_change_commutes_with_constructions(A, loc, seed):
    from perfrank.perf import base_change, base_change_map
    rng = random.Random(seed)
    X, Y = random_complex(A, rng, CFG), random_complex(A, rng, CFG)
    f = random_chain_map(X, Y, rng)
    C, _, _ = cone(f)
    Cb, _, _ = cone(base_change_map(loc, f))
    assert base_change(loc, C) == Cb
    assert base_change(loc, shift(X, 1)) == shift(base_change(loc, X), 1)
    assert base_change(loc, direct_sum(X, Y)) == direct_sum(base_change(loc, X), base_change(loc, Y))


@given(seeds)
def test_homology_of_sum_is_pointwise(A, seed):
    rng = random.Random(seed)
    X, Y = random_complex(A, rng, CFG), random_complex(A, rng, CFG)
    H = homology_dims(direct_sum(X, Y))
    HX, HY = homology_dims(X), homology_dims(Y)
    assert H == {n: HX.get(n, 0) + HY.get(n, 0) for n in H}
