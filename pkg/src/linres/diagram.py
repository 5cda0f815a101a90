"""SVG pictures of degree-d monomials in three variables.

The degree-d monomials form a triangle with ``x^d`` at the apex.  Monomial
``x^a y^b z^c`` sits on row ``d - a`` (counted from the top) at horizontal
position ``c + a/2``.  Generators are drawn as small black dots, the
monomials missing from the ideal as larger red dots.
"""
from __future__ import annotations

from .errors import LinresError
from .monomials import MonomialIdeal, contains, monomials_of_degree

UNIT = 30
MARGIN = 20


def position(exps: tuple[int, int, int], d: int) -> tuple[float, float]:
    a, _, c = exps
    return c + a / 2, d - a


def triangle_svg(I: MonomialIdeal, d: int | None = None) -> str:
    if I.nvars != 3:
        raise LinresError("diagrams need exactly three variables")
    if d is None:
        degs = I.degrees
        if len(degs) != 1:
            raise LinresError("diagrams need an equigenerated ideal")
        (d,) = degs
    size = d * UNIT + 2 * MARGIN
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]
    gens, missing = [], []
    for w in monomials_of_degree(3, d):
        px, py = position(w.exponents, d)
        cx, cy = MARGIN + px * UNIT, MARGIN + py * UNIT
        if I.is_generator(w):
            gens.append((cx, cy))
        elif not contains(I, w):
            missing.append((cx, cy))
    for cx, cy in gens:
        out.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="{0.1 * UNIT:g}" fill="black"/>')
    for cx, cy in missing:
        out.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="{0.2 * UNIT:g}" fill="red"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
