import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from linres.errors import AmbientMismatchError, LinresError, NotPrimaryError
from linres.monomials import (
    Monomial,
    MonomialIdeal,
    below,
    bracket_power,
    colon_monomial,
    contains,
    divides,
    divisors_of_degree,
    gcd,
    intersect,
    is_primary,
    is_subideal,
    lcm,
    maximal_ideal,
    maximal_power,
    minimalize,
    missing_monomials,
    monomials_of_degree,
    parse_monomial,
    power,
    product,
    restrict_vars,
    socle_monomials,
    truncate,
    unit_ideal,
)

N = 3
EXP = st.integers(0, 4)
mono = st.tuples(EXP, EXP, EXP).map(Monomial)
ideal = st.lists(mono, min_size=1, max_size=5).map(lambda gs: MonomialIdeal(N, gs))


def all_monomials_up_to(n, top):
    for e in itertools.product(range(top + 1), repeat=n):
        yield Monomial(e)


def brute_in(gens, w):
    return any(all(a <= b for a, b in zip(g.exponents, w.exponents)) for g in gens)


def test_monomial_basics():
    m = Monomial((2, 0, 1))
    assert m.degree == 3
    assert m.support == {0, 2}
    assert not m.is_squarefree() and Monomial((1, 0, 1)).is_squarefree()
    assert Monomial.var(3, 1, 4).is_pure_power()
    assert str(m) == "x1^2*x3"
    assert str(Monomial.one(2)) == "1"
    assert m * Monomial((0, 1, 0)) == Monomial((2, 1, 1))
    assert m / Monomial((1, 0, 0)) == Monomial((1, 0, 1))
    with pytest.raises(LinresError):
        m / Monomial((0, 1, 0))
    with pytest.raises(LinresError):
        Monomial((1, -1))
    with pytest.raises(AmbientMismatchError):
        lcm(Monomial((1,)), Monomial((1, 0)))


def test_parse_monomial():
    assert parse_monomial("x1^2*x3", 3) == Monomial((2, 0, 1))
    assert parse_monomial("x^3y^2z", 3, names="xyz") == Monomial((3, 2, 1))
    assert parse_monomial("1", 2) == Monomial.one(2)
    with pytest.raises(LinresError):
        parse_monomial("x4", 3)


@given(mono, mono)
def test_lcm_gcd_identities(a, b):
    assert lcm(a, b) * gcd(a, b) == a * b
    assert divides(a, lcm(a, b)) and divides(gcd(a, b), b)


def test_monomials_of_degree_order_and_count():
    mons = list(monomials_of_degree(3, 4))
    assert len(mons) == 15
    assert mons == sorted(mons, reverse=True)
    assert mons[0] == Monomial((4, 0, 0))
    assert list(monomials_of_degree(2, 0)) == [Monomial.one(2)]


@given(mono, st.integers(0, 6))
def test_divisors_of_degree(m, s):
    got = set(divisors_of_degree(m, s))
    want = {w for w in monomials_of_degree(N, s) if divides(w, m)}
    assert got == want


@given(st.lists(mono, min_size=1, max_size=6))
def test_minimal_generators_are_an_antichain(gens):
    I = MonomialIdeal(N, gens)
    for a, b in itertools.permutations(I.gens, 2):
        assert not divides(a, b)
    for g in gens:
        assert contains(I, g)
    assert list(I.gens) == sorted(I.gens, reverse=True)
    assert minimalize(gens) == I


@settings(max_examples=60)
@given(ideal, ideal)
def test_membership_of_sum_product_intersection(I, J):
    S, P, X = I + J, product(I, J), intersect(I, J)
    for w in all_monomials_up_to(N, 5):
        a, b = contains(I, w), contains(J, w)
        assert contains(S, w) == (a or b)
        assert contains(X, w) == (a and b)
        assert contains(P, w) == any(
            divides(g * h, w) for g in I.gens for h in J.gens
        )
        assert a == brute_in(I.gens, w)


@settings(max_examples=60)
@given(ideal, mono)
def test_colon(I, f):
    C = colon_monomial(I, f)
    for w in all_monomials_up_to(N, 4):
        assert contains(C, w) == contains(I, w * f)


@settings(max_examples=60)
@given(ideal, st.integers(0, 6))
def test_truncate(I, d):
    T = truncate(I, d)
    for w in all_monomials_up_to(N, 5):
        assert contains(T, w) == (contains(I, w) and w.degree >= d)


def test_powers_and_special_ideals():
    m = maximal_ideal(3)
    assert power(m, 2) == maximal_power(3, 2)
    assert power(m, 0) == unit_ideal(3)
    assert unit_ideal(3).is_unit() and MonomialIdeal(3).is_zero()
    assert len(bracket_power(4, 2).gens) == 4
    assert is_subideal(maximal_power(3, 3), maximal_power(3, 2))
    assert not is_subideal(maximal_power(3, 2), maximal_power(3, 3))


def test_restrict_and_below():
    I = MonomialIdeal(3, [(1, 1, 0), (0, 1, 1), (2, 0, 0)])
    assert restrict_vars(I, [0, 1]) == MonomialIdeal(3, [(1, 1, 0), (2, 0, 0)])
    assert below(I, Monomial((1, 1, 1))) == MonomialIdeal(3, [(1, 1, 0), (0, 1, 1)])
    with pytest.raises(LinresError):
        restrict_vars(I, [5])


def test_socle_monomials_brute_force():
    I = MonomialIdeal(3, [(3, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)])
    assert is_primary(I)
    got = set(socle_monomials(I))
    want = set()
    for w in all_monomials_up_to(3, 3):
        if contains(I, w):
            continue
        if all(contains(I, w * Monomial.var(3, i)) for i in range(3)):
            want.add(w)
    assert got == want
    with pytest.raises(NotPrimaryError):
        socle_monomials(MonomialIdeal(2, [(2, 0)]))


def test_missing_monomials():
    I = maximal_power(3, 2) + MonomialIdeal(3, [(1, 0, 0)])
    assert missing_monomials(I, 2) == []
    J = MonomialIdeal(2, [(2, 0), (0, 2)])
    assert missing_monomials(J, 2) == [Monomial((1, 1))]


def test_ideal_validation():
    with pytest.raises(AmbientMismatchError):
        MonomialIdeal(2, [(1, 0, 0)])
    with pytest.raises(LinresError):
        MonomialIdeal(65)
    I = MonomialIdeal(2, [(1, 0)])
    with pytest.raises(AttributeError):
        I.nvars = 3
    assert hash(I) == hash(MonomialIdeal(2, [(1, 0), (2, 1)]))


@given(mono, mono)
def test_lcm_gcd_degrees(a, b):
    assert lcm(a, b).degree + gcd(a, b).degree == a.degree + b.degree


@settings(max_examples=60)
@given(st.lists(st.sampled_from(list(monomials_of_degree(3, 3))), min_size=1, max_size=6),
       st.sets(st.integers(0, 2)))
def test_restriction_is_a_below(gens, K):
    I = MonomialIdeal(3, gens)
    top = Monomial(tuple(3 if i in K else 0 for i in range(3)))
    assert restrict_vars(I, K) == below(I, top)


@settings(max_examples=60)
@given(ideal)
def test_truncation_to_top_degree_is_equigenerated(I):
    d = max(I.degrees)
    assert truncate(I, d).degrees == {d}
    assert minimalize(minimalize(I.gens).gens) == minimalize(reversed(I.gens))
