"""Sierpinski-type sparse ideals with (almost) linear resolutions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import LinresError
from .monomials import (
    Monomial,
    MonomialIdeal,
    bracket_power,
    maximal_ideal,
    maximal_power,
    power,
    product,
)


@lru_cache(maxsize=None)
def sier3(d: int) -> MonomialIdeal:
    """The three-variable fractal ideal of degree ``d``.

    ``I_1 = m``, ``I_2 = m^2``, ``I_{2r-1} = (x^r, y^r, z^r) I_{r-1}`` and
    ``I_{2r} = x^{r+1} I_{r-1} + (y^r, z^r) I_r``.
    """
    if d < 1:
        raise LinresError("sier3 needs d >= 1")
    if d <= 2:
        return maximal_power(3, d)
    if d % 2:
        r = (d + 1) // 2
        return product(bracket_power(3, r), sier3(r - 1))
    r = d // 2
    x_part = product(MonomialIdeal(3, [Monomial.var(3, 0, r + 1)]), sier3(r - 1))
    yz = MonomialIdeal(3, [Monomial.var(3, 1, r), Monomial.var(3, 2, r)])
    return x_part + product(yz, sier3(r))


def sier_general_degree(p: int, r: int) -> int:
    return (2**r - 1) * (p - 1) + 2**r


def sier_general(n: int, p: int, r: int) -> MonomialIdeal:
    """``(m m^[2] m^[4] ... m^[2^(r-1)])^(p-1) m^[2^r]`` in ``n`` variables."""
    if n < 2 or p < 1 or r < 1:
        raise LinresError("sier_general needs n >= 2, p >= 1, r >= 1")
    chain = maximal_ideal(n)
    for j in range(1, r):
        chain = product(chain, bracket_power(n, 2**j))
    return product(power(chain, p - 1), bracket_power(n, 2**r))


def generator_count(I: MonomialIdeal) -> int:
    return len(I.gens)


@dataclass(frozen=True)
class Sparsity:
    generators: int
    full_count: int

    @property
    def ratio(self) -> float:
        return self.generators / self.full_count


def sparsity(I: MonomialIdeal) -> Sparsity:
    """Generator count compared with that of ``m^d`` (``I`` equigenerated in degree d)."""
    degs = I.degrees
    if len(degs) != 1:
        raise LinresError("sparsity is defined for equigenerated ideals")
    (d,) = degs
    return Sparsity(len(I.gens), comb(I.nvars - 1 + d, d))
