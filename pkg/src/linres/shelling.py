"""Shelling moves on equigenerated ideals, polarization and Alexander duality."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .almost_linear import ShadowSystem, analyze_almost_linear, s_shadow
from .errors import (
    AmbientMismatchError,
    CertificateError,
    LinresError,
    NotEquigeneratedError,
    NotSquareFreeError,
    PreconditionError,
)
from .linalg import QQ
from .monomials import (
    Monomial,
    MonomialIdeal,
    colon_monomial,
    contains,
    is_subideal,
    missing_monomials,
    unit_ideal,
    intersect,
)
from .oracle import regularity

DEFAULT_STATE_BUDGET = 1_000_000


def _degree(I: MonomialIdeal) -> int:
    degs = I.degrees
    if len(degs) != 1:
        raise NotEquigeneratedError(f"generators in degrees {sorted(degs)}")
    return next(iter(degs))


def is_shelling_move(I: MonomialIdeal, f: Monomial) -> bool:
    """True when ``I : f`` is generated by variables."""
    if I.gens and f.degree != _degree(I):
        raise NotEquigeneratedError(f"move {f} has degree {f.degree}, ideal has {_degree(I)}")
    if contains(I, f):
        raise LinresError(f"{f} already lies in the ideal")
    return all(g.degree == 1 for g in colon_monomial(I, f).gens)


def add_generator(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    return MonomialIdeal(I.nvars, I.gens + (f,))


@dataclass(frozen=True)
class ShellingPath:
    start: MonomialIdeal
    moves: tuple[Monomial, ...] = ()

    def ideals(self):
        cur = self.start
        yield cur
        for f in self.moves:
            cur = add_generator(cur, f)
            yield cur

    @property
    def end(self) -> MonomialIdeal:
        *_, last = self.ideals()
        return last

    def is_valid(self) -> bool:
        cur = self.start
        for f in self.moves:
            if contains(cur, f) or not is_shelling_move(cur, f):
                return False
            cur = add_generator(cur, f)
        return True


@dataclass(frozen=True)
class ShellingSearch:
    """Outcome of :func:`shelled_over`: ``status`` is found, impossible or exhausted."""

    status: str
    path: ShellingPath | None = None
    states: int = 0

    def __bool__(self):
        return self.status == "found"


def shelled_over(I: MonomialIdeal, J: MonomialIdeal, budget: int = DEFAULT_STATE_BUDGET) -> ShellingSearch:
    """Breadth-first search for a sequence of shelling moves from ``I`` to ``J``.

    Only generators of ``J`` are ever added, since adding anything else leaves
    ``J`` for good.  States are the sets of added generators.  ``impossible``
    means the whole reachable set was explored; ``exhausted`` means the budget
    ran out first.
    """
    if I.nvars != J.nvars:
        raise AmbientMismatchError("ideals in different rings")
    if not is_subideal(I, J):
        raise PreconditionError("the start ideal is not contained in the target")
    d = _degree(J)
    if I.gens and _degree(I) != d:
        raise NotEquigeneratedError("start and target are generated in different degrees")
    todo = tuple(g for g in J.gens if not contains(I, g))
    start = frozenset()
    parent: dict[frozenset, tuple[frozenset, Monomial] | None] = {start: None}
    queue = deque([start])
    goal = frozenset(todo)
    while queue:
        state = queue.popleft()
        if state == goal:
            moves = []
            while parent[state] is not None:
                state, f = parent[state]
                moves.append(f)
            return ShellingSearch("found", ShellingPath(I, tuple(reversed(moves))), len(parent))
        cur = MonomialIdeal(I.nvars, I.gens + tuple(state))
        for f in todo:
            if f in state or contains(cur, f):
                continue
            if not is_shelling_move(cur, f):
                continue
            nxt = state | {f}
            if nxt in parent:
                continue
            parent[nxt] = (state, f)
            if len(parent) > budget:
                return ShellingSearch("exhausted", None, len(parent))
            queue.append(nxt)
    return ShellingSearch("impossible", None, len(parent))


@dataclass(frozen=True)
class NoShellDecision:
    shellable: bool
    singletons: tuple[Monomial, ...] = ()
    obstruction: tuple[Monomial, ...] = ()
    obstruction_socle: Monomial | None = None
    start_system: ShadowSystem | None = field(default=None, repr=False)
    target_system: ShadowSystem | None = field(default=None, repr=False)

    def __bool__(self):
        return self.shellable


def noshell_decision(I: MonomialIdeal, J: MonomialIdeal) -> NoShellDecision:
    """Decide whether ``J`` is shelled over ``I`` for almost linear primary ideals.

    It is exactly when ``N(I)`` is ``N(J)`` plus shadows of single monomials;
    those singletons can then be added in any order.
    """
    sys_i = analyze_almost_linear(I)
    sys_j = analyze_almost_linear(J)
    if not sys_i or not sys_j:
        raise CertificateError("both ideals need a valid shadow-system certificate")
    if sys_i.d != sys_j.d or not is_subideal(I, J):
        raise PreconditionError("need I inside J, both generated in the same degree")
    d = sys_i.d
    n_j = set(missing_monomials(J, d))
    singles, obstruction, culprit = [], (), None
    for m in sys_i.socle_mons:
        sh = s_shadow([m], d)
        if sh <= n_j:
            continue
        if m.degree == d:
            singles.append(m)
        elif not obstruction:
            obstruction = tuple(sorted(sh, reverse=True))
            culprit = m
    if obstruction:
        return NoShellDecision(False, (), obstruction, culprit, sys_i, sys_j)
    return NoShellDecision(True, tuple(sorted(singles, reverse=True)), (), None, sys_i, sys_j)


@dataclass(frozen=True)
class RigidityReport:
    regularity: int
    moves: tuple[tuple[Monomial, int], ...]

    @property
    def violations(self) -> list[tuple[Monomial, int]]:
        return [(f, r) for f, r in self.moves if r != self.regularity]

    @property
    def holds(self) -> bool:
        return not self.violations


def rigidity_check(I: MonomialIdeal, field=QQ) -> RigidityReport:
    """Regularity after every legal shelling move of an almost linear ideal."""
    cert = analyze_almost_linear(I)
    if not cert:
        raise PreconditionError(f"not almost linear ({cert.condition})")
    reg = regularity(I, field)
    if reg < cert.d + 2:
        raise PreconditionError(f"regularity {reg} is below d+2 = {cert.d + 2}")
    moves = []
    for f in missing_monomials(I, cert.d):
        if is_shelling_move(I, f):
            moves.append((f, regularity(add_generator(I, f), field)))
    return RigidityReport(reg, tuple(moves))


# --------------------------------------------------------------------------
# polarization


def polarization_width(I: MonomialIdeal) -> int:
    return max((max(g.exponents) for g in I.gens if g.exponents), default=0) or 1


def polarize(I: MonomialIdeal, width: int | None = None) -> MonomialIdeal:
    """Replace ``x_i^r`` by ``x_{i,0} ... x_{i,r-1}``.

    The new variables form an ``nvars x width`` grid numbered row-major, so
    ``x_{i,j}`` has index ``i*width + j``.
    """
    w = polarization_width(I) if width is None else width
    n = I.nvars
    gens = []
    for g in I.gens:
        if max(g.exponents, default=0) > w:
            raise LinresError(f"grid width {w} too small for {g}")
        e = [0] * (n * w)
        for i, a in enumerate(g.exponents):
            for j in range(a):
                e[i * w + j] = 1
        gens.append(Monomial(tuple(e)))
    return MonomialIdeal(n * w, gens)


def depolarize(J: MonomialIdeal, nvars: int) -> MonomialIdeal:
    """Send ``x_{i,j}`` to ``x_i`` on a grid with ``nvars`` rows."""
    if nvars < 1 or J.nvars % nvars:
        raise LinresError(f"{J.nvars} variables do not form a grid with {nvars} rows")
    w = J.nvars // nvars
    gens = []
    for g in J.gens:
        gens.append(Monomial(tuple(sum(g.exponents[i * w:(i + 1) * w]) for i in range(nvars))))
    return MonomialIdeal(nvars, gens)


def grid_variable(i: int, j: int, width: int) -> int:
    return i * width + j


# --------------------------------------------------------------------------
# Alexander duality


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """The square-free dual: intersection of the primes ``(x_i : i in supp g)``."""
    if not I.is_squarefree():
        raise NotSquareFreeError("Alexander duality is implemented for square-free ideals")
    n = I.nvars
    result = unit_ideal(n)
    for g in I.gens:
        prime = MonomialIdeal(n, [Monomial.var(n, i) for i in sorted(g.support)])
        result = intersect(result, prime)
    return result


def dual_complex_facets(I: MonomialIdeal) -> list[tuple[int, ...]]:
    """Facets of the complex whose Stanley-Reisner ideal is the dual of ``I``.

    They are the complements of the generator supports of ``I``.
    """
    if not I.is_squarefree():
        raise NotSquareFreeError("Alexander duality is implemented for square-free ideals")
    everything = frozenset(range(I.nvars))
    facets = {tuple(sorted(everything - g.support)) for g in I.gens}
    return sorted(facets)
