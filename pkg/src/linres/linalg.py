"""Exact rank of sparse integer matrices, over the rationals or a prime field.

Matrices are given as a list of rows, each row a ``{column: value}`` dict.
Boundary matrices of simplicial complexes have entries in {-1, 0, 1}, so the
row-by-row elimination below stays small in practice.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable

from .errors import FieldError

QQ = 0
DEFAULT_PRIME = 32003


def normalize_field(field) -> int:
    """Map a field descriptor to its characteristic (0 for the rationals).

    Accepts ``0``, ``"QQ"``, ``"q"``, ``"Fp"`` (the default prime), a prime
    ``p`` or a string such as ``"F101"``.
    """
    if field is None:
        return QQ
    if isinstance(field, str):
        f = field.strip()
        if f.lower() in ("q", "qq", "0", "rationals"):
            return QQ
        if f in ("Fp", "fp", "p"):
            return DEFAULT_PRIME
        if f[:1] in "Ff" and f[1:].isdigit():
            field = int(f[1:])
        elif f.isdigit():
            field = int(f)
        else:
            raise FieldError(f"unknown field {field!r}")
    if not isinstance(field, int) or field < 0:
        raise FieldError(f"unknown field {field!r}")
    if field == 0:
        return QQ
    if not _is_prime(field):
        raise FieldError(f"characteristic {field} is not prime")
    return field


def field_name(char: int) -> str:
    return "QQ" if char == 0 else f"F{char}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def rank(rows: Iterable[dict[int, int]], char: int = QQ) -> int:
    if char == QQ:
        return _rank_qq(rows)
    return _rank_mod_p(rows, char)


def _rank_qq(rows) -> int:
    # fraction-free: r <- b*r - a*pivot, then divide out the content
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                if g > 1:
                    r = {k: v // g for k, v in r.items()}
                pivots[c] = r
                break
            a, b = r[c], piv[c]
            new = {k: b * v for k, v in r.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - a * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            r = new
    return len(pivots)


def _rank_mod_p(rows, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            a = r[c]
            for k, v in piv.items():
                nv = (r.get(k, 0) - a * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)
