"""Primary ideals whose resolution is linear except for the last step.

A primary ideal ``I`` generated in degree ``d`` is N_{d,n-1} exactly when
the set ``N`` of degree-d monomials outside ``I`` is the d-shadow of a set of
(d-1)-saturated, pairwise (d-1)-separated monomials.  Those monomials are the
socle generators of ``S/I`` of degree at least ``d``, which makes the shadow
system a checkable certificate.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CertificateError, LinresError, NotEquigeneratedError
from .monomials import (
    Monomial,
    MonomialIdeal,
    divisors_of_degree,
    gcd,
    missing_monomials,
    monomials_of_degree,
    require_primary,
    socle_monomials,
    truncate,
)


def s_shadow(mons, s: int) -> set[Monomial]:
    out: set[Monomial] = set()
    for m in mons:
        out.update(divisors_of_degree(m, s))
    return out


def is_s_saturated(m: Monomial, s: int) -> bool:
    floor = m.degree - s
    return all(e >= floor for e in m.exponents)


def are_s_separated(a: Monomial, b: Monomial, s: int) -> bool:
    return gcd(a, b).degree < s


@dataclass(frozen=True)
class ShadowSystem:
    nvars: int
    d: int
    socle_mons: tuple[Monomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "socle_mons", tuple(sorted(set(self.socle_mons), reverse=True)))

    def violations(self) -> list[tuple[str, tuple]]:
        """Broken invariants, each with the offending monomials."""
        out = []
        s = self.d - 1
        for m in self.socle_mons:
            if m.nvars != self.nvars:
                out.append(("ambient", (m,)))
            elif m.degree < self.d:
                out.append(("degree", (m,)))
            elif not is_s_saturated(m, s):
                out.append(("saturation", (m,)))
        for a, b in itertools.combinations(self.socle_mons, 2):
            if a.nvars == b.nvars and not are_s_separated(a, b, s):
                out.append(("separation", (a, b)))
        return out

    def is_valid(self) -> bool:
        return self.nvars >= 2 and self.d >= 1 and not self.violations()

    def shadow(self) -> set[Monomial]:
        return s_shadow(self.socle_mons, self.d)


@dataclass(frozen=True)
class Refutation:
    condition: str
    witnesses: tuple = field(default=())

    def __bool__(self):
        return False


def _generated_degree(I: MonomialIdeal) -> int:
    degs = I.degrees
    if len(degs) != 1:
        raise NotEquigeneratedError(f"generators in degrees {sorted(degs)}")
    return next(iter(degs))


def analyze_almost_linear(I: MonomialIdeal) -> ShadowSystem | Refutation:
    """Shadow-system certificate for N_{d,n-1}, or the condition that fails.

    Returns a :class:`ShadowSystem` when ``I`` is N_{d,n-1}; otherwise a
    falsy :class:`Refutation` naming the violated condition.
    """
    require_primary(I)
    d = _generated_degree(I)
    s = d - 1
    N = set(missing_monomials(I, d))
    cands = [m for m in socle_monomials(I) if m.degree >= d]
    for m in cands:
        if not is_s_saturated(m, s):
            return Refutation("saturation", (m,))
    for a, b in itertools.combinations(cands, 2):
        if not are_s_separated(a, b, s):
            return Refutation("separation", (a, b))
    shadow = s_shadow(cands, d)
    if shadow != N:
        extra = sorted(N - shadow, reverse=True)
        return Refutation("shadow", tuple(extra or sorted(shadow - N, reverse=True)))
    return ShadowSystem(I.nvars, d, tuple(cands))


def build_from_shadows(sys: ShadowSystem) -> MonomialIdeal:
    """The ideal generated by the degree-d monomials outside the shadow."""
    if sys.nvars < 2:
        raise CertificateError("shadow systems need at least two variables")
    bad = sys.violations()
    if bad:
        kind, mons = bad[0]
        raise CertificateError(f"{kind} violated by {', '.join(map(str, mons))}")
    shadow = sys.shadow()
    return MonomialIdeal(sys.nvars, [w for w in monomials_of_degree(sys.nvars, sys.d) if w not in shadow])


def regularity_almost_linear(sys: ShadowSystem) -> int:
    if not sys.socle_mons:
        return sys.d
    return 1 + max(m.degree for m in sys.socle_mons)


def saturated_candidates(nvars: int, d: int) -> list[Monomial]:
    """Every (d-1)-saturated monomial of degree >= d in ``nvars`` variables.

    Saturation forces ``deg m <= nvars*(d-1)/(nvars-1)``, so the list is finite.
    """
    if nvars < 2:
        raise LinresError("need at least two variables")
    out = []
    top = nvars * (d - 1) // (nvars - 1)
    for D in range(d, top + 1):
        floor = D - (d - 1)
        rest = D - nvars * floor
        if rest < 0:
            continue
        for w in monomials_of_degree(nvars, rest):
            out.append(Monomial(tuple(e + floor for e in w.exponents)))
    return out


def all_shadow_systems(nvars: int, d: int) -> list[ShadowSystem]:
    """All valid shadow systems: pairwise separated subsets of the candidates."""
    cands = saturated_candidates(nvars, d)
    s = d - 1
    out = []

    def grow(start, chosen):
        out.append(ShadowSystem(nvars, d, tuple(chosen)))
        for j in range(start, len(cands)):
            c = cands[j]
            if all(are_s_separated(c, x, s) for x in chosen):
                grow(j + 1, chosen + [c])

    grow(0, [])
    return out


def sharp_regularity_bound(n: int, d: int, p: int) -> int:
    return d + (n - p) * ((d - 1) // p)


def sharp_example(n: int, d: int, p: int) -> MonomialIdeal:
    """An N_{d,p} primary ideal attaining the regularity bound.

    With ``d-1 = q*p + r``, let ``m = (x1...xn)^q * x1^r`` and take the
    degree-d monomials not dividing ``m``.
    """
    if not 1 <= p <= min(n, d):
        raise LinresError("sharp_example needs 1 <= p <= min(n, d)")
    q, r = divmod(d - 1, p)
    a = [q] * n
    a[0] += r
    J = MonomialIdeal(n, [Monomial.var(n, i, a[i] + 1) for i in range(n)])
    return truncate(J, d)


def sharp_socle(n: int, d: int, p: int) -> Monomial:
    q, r = divmod(d - 1, p)
    a = [q] * n
    a[0] += r
    return Monomial(tuple(a))
