"""Ground-truth graded Betti numbers of monomial ideals.

Two independent homology computations are provided:

* :func:`graded_betti` uses the lcm lattice: ``beta_{i,m}(I)`` is the rank of
  the reduced homology ``H~_{i-1}`` of the order complex of the open interval
  ``(0, m)``.
* :func:`strand_betti` uses the Taylor complex: ``beta_{i,m}(I)`` is the rank
  of ``H~_{i-1}`` of the simplicial complex on generator index sets whose lcm
  strictly divides ``m``.

Homological indices always refer to the ideal ``I`` (not ``S/I``), so that
``beta_{0,m} = 1`` exactly at the minimal generators.

Only multidegrees that are lcms of at most ``i+1`` generators can carry
``beta_i`` (they are the multidegrees of the ``i``-th Taylor module), so both
routes skip the rest.  Both routes shrink their complex by a
homotopy-preserving reduction before taking homology: beat-point removal on
the interval poset, and removal of dominated vertices in the Taylor strand.
Either reduction can be switched off for brute-force checks.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import BudgetError, LinresError
from .linalg import QQ, field_name, normalize_field, rank
from .monomials import Monomial, MonomialIdeal

DEFAULT_LATTICE_BUDGET = 20_000
DEFAULT_CHAIN_BUDGET = 2_000_000


# --------------------------------------------------------------------------
# simplicial homology


def reduced_homology_rank(faces: Mapping[int, list[tuple]], j: int, char: int = QQ) -> int:
    """``dim H~_j`` of a simplicial complex given by its faces per dimension.

    ``faces[k]`` lists the ``k``-dimensional faces as increasing tuples; it
    must be complete for ``k <= j + 1``.  The empty face is implicit.
    """
    if j < -1:
        return 0
    n_j = 1 if j == -1 else len(faces.get(j, ()))
    return n_j - _boundary_rank(faces, j, char) - _boundary_rank(faces, j + 1, char)


def _boundary_rank(faces, k: int, char: int) -> int:
    if k <= -1:
        return 0
    top = faces.get(k, ())
    if not top:
        return 0
    if k == 0:
        return 1
    index = {f: c for c, f in enumerate(faces.get(k - 1, ()))}
    rows = []
    for f in top:
        row = {}
        for pos in range(len(f)):
            row[index[f[:pos] + f[pos + 1:]]] = -1 if pos % 2 else 1
        rows.append(row)
    return rank(rows, char)


# --------------------------------------------------------------------------
# lcm lattice


@dataclass(frozen=True)
class LcmLattice:
    """All lcms of nonempty subsets of the generators, plus the bottom ``0``.

    ``elements`` excludes the bottom; ``level[m]`` is the least number of
    generators whose lcm is ``m``.
    """

    nvars: int
    atoms: tuple[Monomial, ...]
    elements: tuple[Monomial, ...]
    level: Mapping[Monomial, int]

    def __len__(self):
        return len(self.elements) + 1

    @property
    def bottom(self) -> Monomial:
        return Monomial.one(self.nvars)

    @property
    def top(self) -> Monomial:
        return max(self.elements, key=lambda m: m.degree) if self.elements else self.bottom

    def below(self, m: Monomial) -> list[Monomial]:
        """Elements of the open interval ``(0, m)``."""
        me = m.exponents
        return [x for x in self.elements if x != m and all(a <= b for a, b in zip(x.exponents, me))]


def lcm_lattice(
    I: MonomialIdeal, budget: int = DEFAULT_LATTICE_BUDGET, max_level: int | None = None
) -> LcmLattice:
    """The lcm lattice of ``I``, or only its elements of level ``<= max_level``."""
    if I.is_zero():
        raise LinresError("the zero ideal has no lcm lattice")
    atoms = [g.exponents for g in I.gens]
    level: dict[tuple, int] = {a: 1 for a in atoms}
    frontier = list(level)
    k = 1
    while frontier and (max_level is None or k < max_level):
        k += 1
        new = []
        for x in frontier:
            for a in atoms:
                y = tuple(map(max, x, a))
                if y not in level:
                    level[y] = k
                    new.append(y)
        if len(level) + 1 > budget:
            raise BudgetError(f"lcm lattice exceeds {budget} elements")
        frontier = new
    mons = {e: Monomial(e) for e in level}
    elements = tuple(sorted(mons.values(), key=lambda m: (m.degree, m.exponents)))
    return LcmLattice(
        nvars=I.nvars,
        atoms=I.gens,
        elements=elements,
        level=MappingProxyType({mons[e]: v for e, v in level.items()}),
    )


# --------------------------------------------------------------------------
# Betti tables


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers ``(i, m) -> rank`` of an ideal.

    Entries are known for homological indices ``0..max_index``; ``complete``
    says whether that covers the whole resolution.
    """

    nvars: int
    entries: Mapping[tuple[int, Monomial], int]
    field: int
    max_index: int
    complete: bool
    method: str = ""

    @property
    def field_id(self) -> str:
        return field_name(self.field)

    def _check(self, s: int) -> None:
        if s > self.max_index and not self.complete:
            raise LinresError(f"Betti numbers only computed up to index {self.max_index}")

    def betti(self, i: int, m: Monomial) -> int:
        self._check(i)
        return self.entries.get((i, m), 0)

    def graded(self) -> dict[tuple[int, int], int]:
        """Totals ``(i, total degree) -> rank``."""
        out: dict[tuple[int, int], int] = {}
        for (i, m), r in self.entries.items():
            out[i, m.degree] = out.get((i, m.degree), 0) + r
        return out

    def as_triples(self) -> list[tuple[int, int, int]]:
        return sorted((i, e, r) for (i, e), r in self.graded().items())

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (i, _), r in self.entries.items():
            out[i] = out.get(i, 0) + r
        return out

    def t(self, s: int) -> int | None:
        """Top degree of ``Tor_s``; ``None`` stands for minus infinity."""
        self._check(s)
        degs = [m.degree for (i, m), r in self.entries.items() if i == s and r]
        return max(degs) if degs else None

    def regularity(self) -> int | None:
        if not self.complete:
            raise LinresError("regularity needs the complete Betti table")
        vals = [m.degree - i for (i, m), r in self.entries.items() if r]
        return max(vals) if vals else None

    def projective_dimension(self) -> int | None:
        if not self.complete:
            raise LinresError("projective dimension needs the complete Betti table")
        idx = [i for (i, _), r in self.entries.items() if r]
        return max(idx) if idx else None

    def same_numbers(self, other: "BettiTable") -> bool:
        k = min(self.max_index, other.max_index)
        a = {key: r for key, r in self.entries.items() if key[0] <= k and r}
        b = {key: r for key, r in other.entries.items() if key[0] <= k and r}
        return a == b


def _resolve_index(I: MonomialIdeal, max_index: int | None) -> tuple[int, bool]:
    full = max(0, min(I.nvars - 1, len(I.gens) - 1))
    if max_index is None or max_index >= full:
        return full, True
    if max_index < 0:
        raise LinresError("max_index must be >= 0")
    return max_index, False


def graded_betti(
    I: MonomialIdeal,
    field=QQ,
    max_index: int | None = None,
    budget: int = DEFAULT_LATTICE_BUDGET,
    reduce: bool = True,
    workers: int = 1,
) -> BettiTable:
    """Betti numbers from the order complexes of lcm-lattice intervals."""
    char = normalize_field(field)
    k, complete = _resolve_index(I, max_index)
    return _graded_cached(I, char, k, complete, budget, reduce, workers)


@lru_cache(maxsize=4096)
def _graded_cached(I, char, k, complete, budget, reduce, workers):
    if I.is_zero():
        return BettiTable(I.nvars, MappingProxyType({}), char, k, True, "lattice")
    # a partial table only needs lattice elements of level <= k+1, and the
    # interval below each of them is then rebuilt from the generators under it
    partial = not complete and k + 1 < len(I.gens)
    lat = lcm_lattice(I, budget, k + 1 if partial else None)
    base = I.gens if partial else lat.elements
    elems = np.array([m.exponents for m in base], dtype=np.int64).reshape(len(base), I.nvars)
    todo = [(m.exponents, lat.level[m]) for m in lat.elements if lat.level[m] <= k + 1]
    args = (elems, char, k, reduce, partial)
    if workers > 1 and len(todo) > 64:
        chunks = [todo[w::workers] for w in range(workers)]
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_lattice_chunk, [(args, c) for c in chunks]))
    else:
        parts = [_lattice_chunk((args, todo))]
    entries = {}
    for part in parts:
        for i, e, r in part:
            entries[i, Monomial(e)] = r
    return BettiTable(I.nvars, MappingProxyType(entries), char, k, complete, "lattice")


def _lattice_chunk(payload):
    (elems, char, k, reduce, partial), todo = payload
    out = []
    for m, lev in todo:
        mv = np.array(m, dtype=np.int64)
        sub = elems[(elems <= mv).all(axis=1)]
        if k == 1 and lev == 2:
            # only the components of (0, m) matter, and atoms a, b share one iff lcm(a, b) < m
            r = _atom_components(sub[(sub != mv).any(axis=1)], mv) - 1
            if r:
                out.append((1, m, r))
            continue
        if partial:
            sub = _closure(sub)
        sub = sub[(sub != mv).any(axis=1)]
        lo = lev - 1
        if len(sub) == 0:
            if lo <= 0 <= k:
                out.append((0, m, 1))
            continue
        less = (sub[:, None, :] <= sub[None, :, :]).all(axis=2)
        np.fill_diagonal(less, False)
        if reduce:
            alive = _beat_core(less)
            less = less[np.ix_(alive, alive)]
        faces = _chains(less, k)
        for i in range(max(lo, 1), k + 1):
            r = reduced_homology_rank(faces, i - 1, char)
            if r:
                out.append((i, m, r))
    return out


def _atom_components(atoms: np.ndarray, top: np.ndarray) -> int:
    atoms = atoms[_minimal_rows(atoms)]
    joined = (np.maximum(atoms[:, None, :], atoms[None, :, :]) != top).any(axis=2)
    seen = np.zeros(len(atoms), dtype=bool)
    count = 0
    for start in range(len(atoms)):
        if seen[start]:
            continue
        count += 1
        front = np.zeros(len(atoms), dtype=bool)
        front[start] = True
        while front.any():
            seen |= front
            front = joined[front].any(axis=0) & ~seen
    return count


def _minimal_rows(rows: np.ndarray) -> np.ndarray:
    below = (rows[:, None, :] <= rows[None, :, :]).all(axis=2)
    np.fill_diagonal(below, False)
    return ~below.any(axis=0)


def _closure(gens: np.ndarray) -> np.ndarray:
    """All lcms of nonempty subsets of the rows of ``gens``."""
    if len(gens) == 0:
        return gens
    # every row is bounded by the columnwise max, so rows pack into mixed-radix keys
    radix = gens.max(axis=0) + 1
    if float(np.prod(radix.astype(float))) >= 2.0**62:
        return _closure_rows(gens)
    place = np.concatenate(([1], np.cumprod(radix[:-1]))).astype(np.int64)
    seen = np.unique(gens @ place)
    frontier = np.unique(gens, axis=0)
    while len(frontier):
        cand = np.maximum(frontier[:, None, :], gens[None, :, :]).reshape(-1, gens.shape[1])
        keys, idx = np.unique(cand @ place, return_index=True)
        fresh = ~np.isin(keys, seen, assume_unique=True)
        frontier = cand[idx[fresh]]
        seen = np.union1d(seen, keys[fresh])
    out = np.empty((len(seen), gens.shape[1]), dtype=np.int64)
    rest = seen.copy()
    for j in range(gens.shape[1]):
        out[:, j] = rest % radix[j]
        rest //= radix[j]
    return out


def _closure_rows(gens: np.ndarray) -> np.ndarray:
    atoms = [tuple(g) for g in gens.tolist()]
    seen = set(atoms)
    frontier = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for a in atoms:
                y = tuple(map(max, x, a))
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return np.array(sorted(seen), dtype=np.int64).reshape(len(seen), gens.shape[1])


def _beat_core(less: np.ndarray) -> np.ndarray:
    """Indices surviving repeated removal of beat points.

    ``x`` is a beat point when the elements below it have a maximum ``y``, or
    the elements above it have a minimum ``y``; deleting it keeps the
    homotopy type of the order complex.  The witness ``y`` stays valid while
    other points are deleted, as long as ``y`` itself survives, so each pass
    removes a whole batch.
    """
    n = len(less)
    alive = np.ones(n, dtype=bool)
    while True:
        live = less & alive[:, None] & alive[None, :]
        nlow = live.sum(axis=0)
        nup = live.sum(axis=1)
        # down[y, x]: y is the maximum of the points below x
        down = live & (nlow[:, None] == nlow[None, :] - 1)
        up = live.T & (nup[:, None] == nup[None, :] - 1)
        witness = np.where(down.any(axis=0), down.argmax(axis=0), -1)
        witness = np.where((witness < 0) & up.any(axis=0), up.argmax(axis=0), witness)
        removed = False
        for x in np.flatnonzero((witness >= 0) & alive):
            if alive[witness[x]]:
                alive[x] = False
                removed = True
        if not removed:
            return np.flatnonzero(alive)


def _chains(less: np.ndarray, k: int, budget: int = DEFAULT_CHAIN_BUDGET) -> dict[int, list[tuple]]:
    """Chains of the poset as faces of the order complex, dimensions ``0..k``."""
    n = len(less)
    ups = [tuple(np.flatnonzero(less[x]).tolist()) for x in range(n)]
    faces: dict[int, list[tuple]] = {0: [(x,) for x in range(n)]}
    cur = faces[0]
    total = n
    for dim in range(1, k + 1):
        nxt = [c + (y,) for c in cur for y in ups[c[-1]]]
        if not nxt:
            break
        total += len(nxt)
        if total > budget:
            raise BudgetError(f"order complex exceeds {budget} chains")
        faces[dim] = nxt
        cur = nxt
    return faces


def strand_betti(
    I: MonomialIdeal,
    field=QQ,
    max_index: int | None = None,
    budget: int = DEFAULT_LATTICE_BUDGET,
    reduce: bool = True,
) -> BettiTable:
    """Betti numbers from the Taylor complex strands below each lattice element."""
    char = normalize_field(field)
    k, complete = _resolve_index(I, max_index)
    return _strand_cached(I, char, k, complete, budget, reduce)


@lru_cache(maxsize=4096)
def _strand_cached(I, char, k, complete, budget, reduce):
    if I.is_zero():
        return BettiTable(I.nvars, MappingProxyType({}), char, k, True, "taylor")
    lat = lcm_lattice(I, budget, None if complete else k + 1)
    entries = {}
    gens = [g.exponents for g in I.gens]
    for m in lat.elements:
        lev = lat.level[m]
        if lev > k + 1:
            continue
        me = m.exponents
        supp = [i for i, e in enumerate(me) if e]
        # bit j of a generator's mask: its exponent of x_{supp[j]} is below m's
        masks = []
        for g in gens:
            if g == me or any(a > b for a, b in zip(g, me)):
                continue
            bits = 0
            for j, i in enumerate(supp):
                if g[i] < me[i]:
                    bits |= 1 << j
            masks.append(bits)
        if not masks:
            if lev - 1 <= 0:
                entries[0, m] = 1
            continue
        if reduce:
            masks = _undominated(masks)
        faces = _taylor_faces(masks, k)
        for i in range(max(lev - 1, 1), k + 1):
            r = reduced_homology_rank(faces, i - 1, char)
            if r:
                entries[i, m] = r
    return BettiTable(I.nvars, MappingProxyType(entries), char, k, complete, "taylor")


def _undominated(masks: list[int]) -> list[int]:
    """Drop vertices whose facet memberships are contained in another vertex's."""
    distinct = sorted(set(masks), key=lambda b: -bin(b).count("1"))
    kept: list[int] = []
    for b in distinct:
        if not any(b & c == b for c in kept):
            kept.append(b)
    return kept


def _taylor_faces(masks: list[int], k: int) -> dict[int, list[tuple]]:
    """Vertex sets (up to size ``k+1``) whose masks share a common bit."""
    n = len(masks)
    faces: dict[int, list[tuple]] = {0: [(v,) for v in range(n)]}
    cur = [((v,), masks[v]) for v in range(n)]
    for dim in range(1, k + 1):
        nxt = []
        for f, b in cur:
            for v in range(f[-1] + 1, n):
                c = b & masks[v]
                if c:
                    nxt.append((f + (v,), c))
        if not nxt:
            break
        faces[dim] = [f for f, _ in nxt]
        cur = nxt
    return faces


# --------------------------------------------------------------------------
# derived invariants


ORACLES = {"lattice": graded_betti, "taylor": strand_betti}


def betti_table(I: MonomialIdeal, field=QQ, max_index=None, oracle: str = "lattice", **kw) -> BettiTable:
    try:
        fn = ORACLES[oracle]
    except KeyError:
        raise LinresError(f"unknown oracle {oracle!r}") from None
    return fn(I, field, max_index, **kw)


def t_s(I: MonomialIdeal, s: int, field=QQ, oracle: str = "lattice") -> int | None:
    return betti_table(I, field, s, oracle).t(s)


def regularity(I: MonomialIdeal, field=QQ, oracle: str = "lattice") -> int | None:
    return betti_table(I, field, None, oracle).regularity()


@dataclass(frozen=True)
class NdpVerdict:
    result: bool
    d: int
    p: int
    offending: tuple[tuple[int, int], ...] = ()
    method: str = "oracle"
    table: BettiTable | None = field(default=None, repr=False, compare=False)

    def __bool__(self):
        return self.result


def satisfies_ndp(I: MonomialIdeal, d: int, p: int, field=QQ, oracle: str = "lattice", **kw) -> NdpVerdict:
    """Decide N_{d,p}: generated in degree d, Tor_s concentrated in degree d+s for s < p.

    The zero ideal satisfies every condition vacuously.  ``offending`` lists
    the pairs ``(s, degree)`` that break the condition.
    """
    if p < 1:
        raise LinresError("N_{d,p} needs p >= 1")
    bad = sorted({(0, g.degree) for g in I.gens if g.degree != d})
    if bad:
        return NdpVerdict(False, d, p, tuple(bad), "oracle")
    table = betti_table(I, field, p - 1, oracle, **kw)
    bad = sorted(
        {(i, m.degree) for (i, m), r in table.entries.items() if r and i <= p - 1 and m.degree != d + i}
    )
    return NdpVerdict(not bad, d, p, tuple(bad), f"oracle:{table.method}", table)
