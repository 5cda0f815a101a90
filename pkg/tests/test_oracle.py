import itertools
import random
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from linres.errors import BudgetError, FieldError, LinresError
from linres.linalg import DEFAULT_PRIME, QQ, normalize_field, rank
from linres.monomials import Monomial, MonomialIdeal, lcm_all, maximal_ideal, maximal_power
from linres.oracle import (
    betti_table,
    graded_betti,
    lcm_lattice,
    reduced_homology_rank,
    regularity,
    satisfies_ndp,
    strand_betti,
    t_s,
)
from linres.fractal import sier3


def small_ideal(n=3, top=3, max_gens=5):
    mono = st.tuples(*[st.integers(0, top)] * n).filter(any)
    return st.lists(mono, min_size=1, max_size=max_gens).map(lambda gs: MonomialIdeal(n, gs))


def closure(faces_top):
    faces = {}
    for f in faces_top:
        for k in range(1, len(f) + 1):
            for sub in itertools.combinations(f, k):
                faces.setdefault(k - 1, set()).add(sub)
    return {k: sorted(v) for k, v in faces.items()}


def hochster_betti(I: MonomialIdeal, char=QQ):
    """Square-free Betti numbers from restrictions of the Stanley-Reisner complex."""
    n = I.nvars
    supports = [g.support for g in I.gens]
    out = {}
    for size in range(1, n + 1):
        for sigma in itertools.combinations(range(n), size):
            faces = {}
            for k in range(1, size + 1):
                for f in itertools.combinations(sigma, k):
                    if not any(s <= set(f) for s in supports):
                        faces.setdefault(k - 1, []).append(f)
            for i in range(size):
                r = reduced_homology_rank(faces, size - i - 2, char)
                if r:
                    out[i, Monomial(tuple(1 if v in sigma else 0 for v in range(n)))] = r
    return out


# --------------------------------------------------------------------------
# linear algebra


@settings(max_examples=80)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=6))
def test_rank_matches_sympy(matrix):
    rows = [{j: v for j, v in enumerate(r) if v} for r in matrix]
    assert rank(rows, QQ) == sympy.Matrix(matrix).rank()
    p = 7
    dm = DomainMatrix([[GF(p)(v) for v in r] for r in matrix], (len(matrix), 5), GF(p))
    assert rank(rows, p) == dm.rank()


def test_rank_depends_on_characteristic():
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1}]
    assert rank(rows, QQ) == 3
    assert rank(rows, 2) == 2


def test_normalize_field():
    assert normalize_field("q") == normalize_field("QQ") == normalize_field(0) == QQ
    assert normalize_field("Fp") == DEFAULT_PRIME
    assert normalize_field("F101") == 101
    assert normalize_field(5) == 5
    for bad in ("F4", 9, "reals", -1):
        with pytest.raises(FieldError):
            normalize_field(bad)


def test_reduced_homology_small_complexes():
    assert reduced_homology_rank({}, -1) == 1
    assert reduced_homology_rank(closure([(0,)]), 0) == 0
    assert reduced_homology_rank(closure([(0,), (1,)]), 0) == 1
    circle = closure([(0, 1), (1, 2), (0, 2)])
    assert reduced_homology_rank(circle, 1) == 1 and reduced_homology_rank(circle, 0) == 0
    assert reduced_homology_rank(closure([(0, 1, 2)]), 1) == 0


# --------------------------------------------------------------------------
# lcm lattice


@settings(max_examples=60)
@given(small_ideal())
def test_lcm_lattice_matches_subset_enumeration(I):
    lat = lcm_lattice(I)
    best = {}
    for k in range(1, len(I.gens) + 1):
        for sub in itertools.combinations(I.gens, k):
            best.setdefault(lcm_all(sub, I.nvars), k)
    assert set(lat.elements) == set(best)
    assert dict(lat.level) == best
    assert len(lat) == len(best) + 1


def test_lattice_budget():
    with pytest.raises(BudgetError):
        lcm_lattice(maximal_power(3, 6), budget=10)
    with pytest.raises(LinresError):
        lcm_lattice(MonomialIdeal(2))


# --------------------------------------------------------------------------
# Betti numbers


def test_known_tables():
    assert graded_betti(maximal_power(3, 2)).as_triples() == [(0, 2, 6), (1, 3, 8), (2, 4, 3)]
    assert graded_betti(sier3(3)).as_triples() == [(0, 3, 9), (1, 4, 12), (2, 5, 3), (2, 6, 1)]
    ci = MonomialIdeal(2, [(2, 0), (0, 3)])
    assert graded_betti(ci).as_triples() == [(0, 2, 1), (0, 3, 1), (1, 5, 1)]
    for n in range(1, 6):
        assert graded_betti(maximal_ideal(n)).totals() == {i: comb(n, i + 1) for i in range(n)}


@settings(max_examples=80, deadline=None)
@given(small_ideal())
def test_oracles_agree(I):
    a = graded_betti(I)
    assert a.same_numbers(strand_betti(I))
    assert a.same_numbers(graded_betti(I, reduce=False))
    assert a.same_numbers(strand_betti(I, reduce=False))


@settings(max_examples=40, deadline=None)
@given(small_ideal(n=4, top=2, max_gens=4))
def test_oracles_agree_four_variables(I):
    assert graded_betti(I).same_numbers(strand_betti(I, reduce=False))


def test_hochster_formula_on_random_squarefree_ideals():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(2, 5)
        gens = set()
        for _ in range(rng.randint(1, 6)):
            e = tuple(rng.randint(0, 1) for _ in range(n))
            if sum(e) >= 2:
                gens.add(e)
        if not gens:
            continue
        I = MonomialIdeal(n, gens)
        want = hochster_betti(I)
        assert dict((k, v) for k, v in graded_betti(I).entries.items() if v) == want
        assert dict((k, v) for k, v in strand_betti(I).entries.items() if v) == want


def rp2_ideal():
    facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
              (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)]
    faces = {frozenset(s) for f in facets for k in (1, 2, 3) for s in itertools.combinations(f, k)}
    nonfaces = [t for t in itertools.combinations(range(6), 3) if frozenset(t) not in faces]
    return MonomialIdeal(6, [tuple(1 if v in t else 0 for v in range(6)) for t in nonfaces])


def test_characteristic_two_changes_betti_numbers():
    I = rp2_ideal()
    q, two = graded_betti(I), graded_betti(I, field=2)
    assert not q.same_numbers(two)
    assert q.same_numbers(graded_betti(I, field="Fp"))
    assert two.same_numbers(strand_betti(I, field=2))
    assert regularity(I) == 3 and regularity(I, field=2) == 4


def test_qq_and_large_prime_agree_on_samples():
    for I in [sier3(5), maximal_power(3, 3), MonomialIdeal(4, [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)])]:
        assert graded_betti(I).same_numbers(graded_betti(I, field="Fp"))


def test_partial_tables():
    I = maximal_power(3, 3)
    part = graded_betti(I, max_index=1)
    assert not part.complete
    with pytest.raises(LinresError):
        part.regularity()
    with pytest.raises(LinresError):
        part.t(2)
    assert part.t(1) == 4
    assert t_s(I, 2) == 5
    assert betti_table(I, oracle="taylor").projective_dimension() == 2
    with pytest.raises(LinresError):
        betti_table(I, oracle="magic")


def test_t_s_of_vanishing_tor_is_none():
    I = MonomialIdeal(3, [(1, 0, 0)])
    assert t_s(I, 0) == 1
    assert graded_betti(I).t(1) is None


def test_satisfies_ndp():
    assert satisfies_ndp(maximal_power(3, 4), 4, 3)
    v = satisfies_ndp(sier3(3), 3, 3)
    assert not v and (2, 6) in v.offending
    assert satisfies_ndp(sier3(3), 3, 2)
    assert not satisfies_ndp(MonomialIdeal(2, [(1, 0), (0, 2)]), 1, 1)
    assert satisfies_ndp(MonomialIdeal(3), 2, 3)
    assert satisfies_ndp(maximal_power(3, 4), 4, 3, oracle="taylor")
    with pytest.raises(LinresError):
        satisfies_ndp(maximal_ideal(2), 1, 0)
