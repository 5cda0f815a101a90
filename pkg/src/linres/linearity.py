"""Combinatorial certifiers for linear presentation and related conditions."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

import networkx as nx

from .errors import BudgetError, LinresError, NotEquigeneratedError, NotSquareFreeError
from .linalg import QQ
from .monomials import (
    Monomial,
    MonomialIdeal,
    bracket_power,
    below,
    contains,
    lcm,
    maximal_power,
    monomials_of_degree,
    power,
    maximal_ideal,
    product,
    require_primary,
    restrict_vars,
)
from .oracle import satisfies_ndp


@dataclass(frozen=True)
class LinearityVerdict:
    result: bool
    method: str
    witness: Any = None
    detail: str = ""

    def __bool__(self):
        return self.result


def generated_degree(I: MonomialIdeal) -> int:
    degs = I.degrees
    if len(degs) != 1:
        raise NotEquigeneratedError(f"generators in degrees {sorted(degs)}")
    return next(iter(degs))


def dual_graph(I: MonomialIdeal) -> nx.Graph:
    """Generators joined when their lcm has degree one more than theirs."""
    d = generated_degree(I) if I.gens else 0
    G = nx.Graph()
    G.add_nodes_from(I.gens)
    for f, g in itertools.combinations(I.gens, 2):
        if lcm(f, g).degree == d + 1:
            G.add_edge(f, g)
    return G


def _adjacency(gens, d):
    adj = {g: [] for g in gens}
    for f, g in itertools.combinations(gens, 2):
        if sum(map(max, f.exponents, g.exponents)) == d + 1:
            adj[f].append(g)
            adj[g].append(f)
    return adj


def _connected_under(f, g, adj, top) -> bool:
    te = top.exponents
    seen = {f}
    queue = deque([f])
    while queue:
        h = queue.popleft()
        if h == g:
            return True
        for k in adj[h]:
            if k not in seen and all(a <= b for a, b in zip(k.exponents, te)):
                seen.add(k)
                queue.append(k)
    return False


def disconnected_pair(I: MonomialIdeal) -> tuple[Monomial, Monomial] | None:
    """A generator pair with no dual-graph path through generators dividing their lcm."""
    if not I.gens:
        return None
    d = generated_degree(I)
    adj = _adjacency(I.gens, d)
    for f, g in itertools.combinations(I.gens, 2):
        if not _connected_under(f, g, adj, lcm(f, g)):
            return f, g
    return None


def is_linearly_presented(I: MonomialIdeal) -> LinearityVerdict:
    pair = disconnected_pair(I)
    if pair is None:
        return LinearityVerdict(True, "dual_graph_paths")
    return LinearityVerdict(False, "dual_graph_paths", pair, "no path below lcm of the pair")


# --------------------------------------------------------------------------
# locality


def locality_check(
    I: MonomialIdeal,
    d: int,
    p: int,
    mode: str = "vars",
    field=QQ,
    max_checks: int = 100_000,
) -> LinearityVerdict:
    """Decide N_{d,p} from small pieces of ``I``.

    ``mode="vars"`` checks every restriction to ``d*p`` variables (clamped to
    the ambient number); ``mode="lcms"`` checks ``below(I, m)`` for every lcm
    ``m`` of at most ``p`` generators.
    """
    if I.gens and I.degrees != {d}:
        return LinearityVerdict(False, f"locality:{mode}", sorted(I.degrees), "not generated in degree d")
    if mode == "vars":
        r = min(d * p, I.nvars)
        pieces = (tuple(K) for K in itertools.combinations(range(I.nvars), r))
        make = lambda K: restrict_vars(I, K)
    elif mode == "lcms":
        lcms = set()
        for size in range(1, p + 1):
            for sub in itertools.combinations(I.gens, size):
                lcms.add(_lcm_many(sub))
                if len(lcms) > max_checks:
                    raise BudgetError(f"more than {max_checks} lcms to check")
        pieces = iter(sorted(lcms, reverse=True))
        make = lambda m: below(I, m)
    else:
        raise LinresError(f"unknown locality mode {mode!r}")
    seen = set()
    for count, key in enumerate(pieces):
        if count >= max_checks:
            raise BudgetError(f"more than {max_checks} restrictions to check")
        J = make(key)
        if J in seen:
            continue
        seen.add(J)
        v = satisfies_ndp(J, d, p, field)
        if not v:
            return LinearityVerdict(False, f"locality:{mode}", key, f"piece fails at {list(v.offending)}")
    return LinearityVerdict(True, f"locality:{mode}")


def _lcm_many(mons):
    out = mons[0]
    for m in mons[1:]:
        out = lcm(out, m)
    return out


# --------------------------------------------------------------------------
# square-free cubics


_PATTERNS = {
    1: ((0, 1, 2), (3, 4, 5)),
    2: ((0, 1, 2), (0, 1, 3), (0, 1, 4), (2, 3, 4)),
}


def canonical_form(edges) -> tuple:
    """Relabeling-invariant key of a set of vertex sets (a small hypergraph)."""
    edges = [frozenset(e) for e in edges]
    verts = sorted(set().union(*edges)) if edges else []
    best = None
    for perm in itertools.permutations(range(len(verts))):
        relabel = dict(zip(verts, perm))
        key = tuple(sorted(tuple(sorted(relabel[v] for v in e)) for e in edges))
        if best is None or key < best:
            best = key
    return (len(verts),) + (best or ())


def _gens_fail_paths(edges) -> bool:
    n = 1 + max(max(e) for e in edges)
    I = MonomialIdeal(n, [Monomial(tuple(1 if i in e else 0 for i in range(n))) for e in edges])
    return disconnected_pair(I) is not None


@lru_cache(maxsize=None)
def forbidden_forms() -> dict[tuple, int]:
    """Canonical forms of the disconnected subsets of the two cubic patterns."""
    out = {}
    for label, pattern in _PATTERNS.items():
        for size in range(2, len(pattern) + 1):
            for sub in itertools.combinations(pattern, size):
                if _gens_fail_paths(sub):
                    out.setdefault(canonical_form(sub), label)
    return out


def _require_squarefree_cubic(I: MonomialIdeal) -> None:
    if not I.is_squarefree():
        raise NotSquareFreeError("cubic square-free certifier needs a square-free ideal")
    if I.gens and I.degrees != {3}:
        raise NotEquigeneratedError("cubic square-free certifier needs generators of degree 3")


def cubic_squarefree_lp(I: MonomialIdeal) -> LinearityVerdict:
    """Linear presentation of a square-free cubic ideal via forbidden restrictions.

    Fails exactly when the restriction to some set of at most six variables
    is, after relabeling, a subset of ``{123, 456}`` or of
    ``{123, 124, 125, 345}`` violating the path condition.
    """
    _require_squarefree_cubic(I)
    forms = forbidden_forms()
    supports = {g: g.support for g in I.gens}
    for r in (5, 6):
        if r > I.nvars:
            break
        for K in itertools.combinations(range(I.nvars), r):
            Ks = frozenset(K)
            sub = [s for s in supports.values() if s <= Ks]
            if not 2 <= len(sub) <= 4:
                continue
            if frozenset().union(*sub) != Ks:
                continue
            label = forms.get(canonical_form(sub))
            if label is not None:
                return LinearityVerdict(
                    False,
                    "cubic_squarefree_patterns",
                    {"variables": K, "pattern": label},
                    f"restriction matches pattern ({label})",
                )
    return LinearityVerdict(True, "cubic_squarefree_patterns")


# --------------------------------------------------------------------------
# primary cubics


def cubic_primary_lp(I: MonomialIdeal) -> LinearityVerdict:
    """Linear presentation of a primary cubic ideal.

    Requires every non-square-free cubic, and at least two or no square-free
    cubics in each restriction to four variables.
    """
    require_primary(I)
    if I.degrees != {3}:
        raise NotEquigeneratedError("cubic primary certifier needs generators of degree 3")
    n = I.nvars
    for w in monomials_of_degree(n, 3):
        if not w.is_squarefree() and not contains(I, w):
            return LinearityVerdict(False, "cubic_primary", {"missing": w}, "a non-square-free cubic is missing")
    sqf = [g.support for g in I.gens if g.is_squarefree()]
    for K in itertools.combinations(range(n), 4):
        Ks = frozenset(K)
        count = sum(1 for s in sqf if s <= Ks)
        if count == 1:
            return LinearityVerdict(
                False, "cubic_primary", {"variables": K}, "exactly one square-free cubic on four variables"
            )
    return LinearityVerdict(True, "cubic_primary")


# --------------------------------------------------------------------------
# necessary conditions for primary N_{d,p}


@dataclass(frozen=True)
class NecessaryReport:
    d: int
    p: int
    checks: dict = field(default_factory=dict)

    @property
    def refuted(self) -> bool:
        return any(c["applicable"] and not c["passed"] for c in self.checks.values())


def ndd1_necessary(I: MonomialIdeal, d: int, p: int) -> NecessaryReport:
    """Containments every primary N_{d,p} ideal must satisfy.

    ``few_variables``: all degree-d monomials in at most p variables;
    ``equals_power``: I = m^d when p >= min(n, d);
    ``bracket_times_power``: I contains m^[d-p+1] m^(p-1) when d >= p.
    Failure of any applicable check refutes N_{d,p}; passing proves nothing.
    """
    require_primary(I)
    n = I.nvars
    checks = {}
    missing = [w for w in monomials_of_degree(n, d) if len(w.support) <= p and not contains(I, w)]
    checks["few_variables"] = {"applicable": True, "passed": not missing, "witness": missing[:1]}
    applicable = p >= min(n, d)
    checks["equals_power"] = {
        "applicable": applicable,
        "passed": I == maximal_power(n, d) if applicable else True,
        "witness": [],
    }
    if d >= p:
        J = product(bracket_power(n, d - p + 1), power(maximal_ideal(n), p - 1))
        absent = [g for g in J.gens if not contains(I, g)]
        checks["bracket_times_power"] = {"applicable": True, "passed": not absent, "witness": absent[:1]}
    else:
        checks["bracket_times_power"] = {"applicable": False, "passed": True, "witness": []}
    return NecessaryReport(d, p, checks)
