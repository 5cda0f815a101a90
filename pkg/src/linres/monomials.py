"""Exact monomial and monomial-ideal algebra.

Variables are indexed ``0 .. nvars-1``. Every ideal is stored by its unique
minimal generating set, sorted in descending lexicographic order of the
exponent vectors (so ``x1^2, x1*x2, x2^2`` in two variables).
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Iterator, Sequence

from .errors import AmbientMismatchError, LinresError, NotPrimaryError

MAX_NVARS = 64
MAX_EXPONENT = 4096


@dataclass(frozen=True, slots=True, order=True)
class Monomial:
    exponents: tuple[int, ...]
    degree: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.exponents, tuple):
            object.__setattr__(self, "exponents", tuple(self.exponents))
        if any(e < 0 for e in self.exponents):
            raise LinresError(f"negative exponent in {self.exponents}")
        object.__setattr__(self, "degree", sum(self.exponents))

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "Monomial":
        e = [0] * nvars
        e[i] = power
        return cls(tuple(e))

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def is_pure_power(self) -> bool:
        return len(self.support) == 1

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not divides(other, self):
            raise LinresError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        return format_monomial(self)


def _check_same(a: Monomial, b: Monomial) -> None:
    if len(a.exponents) != len(b.exponents):
        raise AmbientMismatchError(
            f"monomials in {len(a.exponents)} and {len(b.exponents)} variables"
        )


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return Monomial(tuple(map(max, a.exponents, b.exponents)))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return Monomial(tuple(map(min, a.exponents, b.exponents)))


def divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b``."""
    _check_same(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def lcm_all(mons: Iterable[Monomial], nvars: int) -> Monomial:
    return reduce(lcm, mons, Monomial.one(nvars))


def format_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = [f"x{i + 1}" for i in range(m.nvars)]
    parts = []
    for name, e in zip(names, m.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"([A-Za-z]+)(\d*)(?:\^(\d+))?")


def parse_monomial(text: str, nvars: int, names: Sequence[str] | None = None) -> Monomial:
    """Parse ``"x1^2*x3"`` (or ``"x^2 z"`` with ``names="xyz"``) into a monomial."""
    exps = [0] * nvars
    text = text.strip()
    if text in ("", "1"):
        return Monomial(tuple(exps))
    for tok in re.split(r"[\s*]+", text):
        if not tok:
            continue
        if names is not None:
            # letters may be run together: "x^3y^2z"
            for name, power in re.findall(r"([A-Za-z]\d*)(?:\^(\d+))?", tok):
                if name not in names:
                    raise LinresError(f"unknown variable {name!r}")
                exps[list(names).index(name)] += int(power or 1)
            continue
        mt = _FACTOR.fullmatch(tok)
        if not mt or not mt.group(2):
            raise LinresError(f"cannot parse factor {tok!r}")
        i = int(mt.group(2)) - 1
        if not 0 <= i < nvars:
            raise LinresError(f"variable index {i + 1} outside 1..{nvars}")
        exps[i] += int(mt.group(3) or 1)
    return Monomial(tuple(exps))


def monomials_of_degree(nvars: int, d: int) -> Iterator[Monomial]:
    """All monomials of degree ``d``, in descending lexicographic order."""
    if d < 0:
        return
    for exps in _compositions(nvars, d):
        yield Monomial(exps)


def _compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            yield (first,) + rest


def divisors_of_degree(m: Monomial, s: int) -> Iterator[Monomial]:
    """All degree-``s`` divisors of ``m``."""

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == len(m.exponents) - 1:
            if remaining <= m.exponents[i]:
                yield (remaining,)
            return
        tail_cap = sum(m.exponents[i + 1:])
        for e in range(min(remaining, m.exponents[i]), -1, -1):
            if remaining - e > tail_cap:
                break
            for rest in rec(i + 1, remaining - e):
                yield (e,) + rest

    if s < 0 or s > m.degree:
        return
    if not m.exponents:
        if s == 0:
            yield m
        return
    for exps in rec(0, s):
        yield Monomial(exps)


class MonomialIdeal:
    """A monomial ideal, stored by its minimal generators.

    The zero ideal has no generators; the unit ideal is generated by ``1``.
    Instances are immutable and hashable.
    """

    __slots__ = ("nvars", "gens", "_genset")

    def __init__(self, nvars: int, gens: Iterable[Monomial | Sequence[int]] = ()):
        if not 0 <= nvars <= MAX_NVARS:
            raise LinresError(f"nvars={nvars} outside 0..{MAX_NVARS}")
        mons = []
        for g in gens:
            if not isinstance(g, Monomial):
                g = Monomial(tuple(g))
            if g.nvars != nvars:
                raise AmbientMismatchError(f"generator {g.exponents} is not in {nvars} variables")
            if g.exponents and max(g.exponents) > MAX_EXPONENT:
                raise LinresError(f"exponent above {MAX_EXPONENT} in {g.exponents}")
            mons.append(g)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "gens", tuple(sorted(_antichain(mons), reverse=True)))
        object.__setattr__(self, "_genset", frozenset(self.gens))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.nvars == other.nvars and self._genset == other._genset

    def __hash__(self):
        return hash((self.nvars, self._genset))

    def __repr__(self):
        return f"MonomialIdeal({self.nvars}, [{', '.join(map(str, self.gens))}])"

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, w: Monomial) -> bool:
        return contains(self, w)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _check_ideals(self, other)
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].degree == 0

    def is_generator(self, m: Monomial) -> bool:
        return m in self._genset

    @property
    def degrees(self) -> set[int]:
        return {g.degree for g in self.gens}

    def is_equigenerated(self, d: int | None = None) -> bool:
        degs = self.degrees
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def format(self, names: Sequence[str] | None = None) -> str:
        return ", ".join(format_monomial(g, names) for g in self.gens) or "0"


def _antichain(mons: Iterable[Monomial]) -> list[Monomial]:
    kept: list[Monomial] = []
    for g in sorted(set(mons), key=lambda m: m.degree):
        ge = g.exponents
        if not any(all(x <= y for x, y in zip(h.exponents, ge)) for h in kept):
            kept.append(g)
    return kept


def _check_ideals(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.nvars != J.nvars:
        raise AmbientMismatchError(f"ideals in {I.nvars} and {J.nvars} variables")


def minimalize(gens: Iterable[Monomial], nvars: int | None = None) -> MonomialIdeal:
    gens = list(gens)
    if nvars is None:
        if not gens:
            raise LinresError("nvars is required for an empty generating set")
        nvars = gens[0].nvars
    return MonomialIdeal(nvars, gens)


def maximal_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, [Monomial.var(nvars, i) for i in range(nvars)])


def unit_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, [Monomial.one(nvars)])


def bracket_power(nvars: int, t: int) -> MonomialIdeal:
    """``(x1^t, ..., xn^t)``."""
    if t < 1:
        raise LinresError("bracket power needs t >= 1")
    return MonomialIdeal(nvars, [Monomial.var(nvars, i, t) for i in range(nvars)])


def maximal_power(nvars: int, d: int) -> MonomialIdeal:
    """``m^d``: all monomials of degree ``d``."""
    return MonomialIdeal(nvars, monomials_of_degree(nvars, d))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_ideals(I, J)
    return MonomialIdeal(I.nvars, [g * h for g in I.gens for h in J.gens])


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise LinresError("negative ideal power")
    result = unit_ideal(I.nvars)
    for _ in range(k):
        result = product(result, I)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_ideals(I, J)
    return MonomialIdeal(I.nvars, [lcm(g, h) for g in I.gens for h in J.gens])


def contains(I: MonomialIdeal, w: Monomial) -> bool:
    if w.nvars != I.nvars:
        raise AmbientMismatchError(f"monomial in {w.nvars} variables, ideal in {I.nvars}")
    we = w.exponents
    return any(all(x <= y for x, y in zip(g.exponents, we)) for g in I.gens)


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when I is contained in J."""
    _check_ideals(I, J)
    return all(contains(J, g) for g in I.gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return is_subideal(I, J) and is_subideal(J, I)


def restrict_vars(I: MonomialIdeal, K: Iterable[int]) -> MonomialIdeal:
    """Set every variable outside ``K`` to zero (same ambient ring)."""
    K = frozenset(K)
    if not K <= set(range(I.nvars)):
        raise LinresError(f"variable subset {sorted(K)} not within 0..{I.nvars - 1}")
    return MonomialIdeal(I.nvars, [g for g in I.gens if g.support <= K])


def below(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The ideal generated by the generators of ``I`` dividing ``m``."""
    return MonomialIdeal(I.nvars, [g for g in I.gens if divides(g, m)])


def truncate(I: MonomialIdeal, d: int) -> MonomialIdeal:
    """``I ∩ m^d``."""
    if d < 0:
        raise LinresError("truncation degree must be >= 0")
    n = I.nvars
    out = []
    for g in I.gens:
        if g.degree >= d:
            out.append(g)
        else:
            out.extend(g * u for u in monomials_of_degree(n, d - g.degree))
    return MonomialIdeal(n, out)


def colon_monomial(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    """``I : f`` for a monomial ``f``."""
    if f.nvars != I.nvars:
        raise AmbientMismatchError("colon by a monomial in a different ring")
    fe = f.exponents
    return MonomialIdeal(
        I.nvars,
        [Monomial(tuple(a - min(a, b) for a, b in zip(g.exponents, fe))) for g in I.gens],
    )


def colon_maximal(I: MonomialIdeal) -> MonomialIdeal:
    """``I : m``, the intersection of ``I : x_i`` over all variables."""
    n = I.nvars
    result = unit_ideal(n)
    for i in range(n):
        result = intersect(result, colon_monomial(I, Monomial.var(n, i)))
    return result


def pure_power_exponents(I: MonomialIdeal) -> list[int | None]:
    """Smallest ``a`` with ``x_i^a`` among the generators, per variable (None if absent)."""
    out: list[int | None] = [None] * I.nvars
    for g in I.gens:
        supp = g.support
        if len(supp) == 1:
            (i,) = supp
            out[i] = g.exponents[i]
        elif not supp:
            return [0] * I.nvars
    return out


def is_primary(I: MonomialIdeal) -> bool:
    """True when ``I`` contains a pure power of every variable."""
    return all(a is not None for a in pure_power_exponents(I))


def require_primary(I: MonomialIdeal) -> None:
    missing = [i for i, a in enumerate(pure_power_exponents(I)) if a is None]
    if missing:
        raise NotPrimaryError(
            "ideal is not primary: no pure power of " + ", ".join(f"x{i + 1}" for i in missing)
        )


def socle_monomials(I: MonomialIdeal) -> list[Monomial]:
    """Monomials w outside I with x_i*w in I for all i (the socle of S/I).

    These are exactly the minimal generators of ``I : m`` not lying in ``I``.
    """
    require_primary(I)
    return [g for g in colon_maximal(I).gens if not contains(I, g)]


def missing_monomials(I: MonomialIdeal, d: int) -> list[Monomial]:
    """Degree-``d`` monomials not in ``I``, in descending lex order."""
    return [w for w in monomials_of_degree(I.nvars, d) if not contains(I, w)]


def variable_subsets(nvars: int, r: int) -> Iterator[tuple[int, ...]]:
    return itertools.combinations(range(nvars), min(r, nvars))
