"""Reading and writing ideals: a line-per-monomial text format and JSON.

Text format::

    # comment
    nvars 3
    name example
    x1^2 x2
    x3^3

JSON format: ``{"schema": 1, "nvars": 3, "gens": [[2, 1, 0], [0, 0, 3]]}``
(``schema``, ``name`` and ``field`` optional; any other key is rejected).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .monomials import Monomial, MonomialIdeal

SCHEMA = 1
_JSON_KEYS = {"schema", "nvars", "gens", "name", "field"}
_TOKEN = re.compile(r"x(\d+)(?:\^(\d+))?")
_DIRECTIVES = ("nvars", "name", "field")


@dataclass
class IdealDocument:
    nvars: int
    gens: list[list[int]]
    name: str | None = None
    field: str | None = None

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.nvars, [tuple(g) for g in self.gens])

    @classmethod
    def from_ideal(cls, I: MonomialIdeal, name=None, field=None) -> "IdealDocument":
        return cls(I.nvars, [list(g.exponents) for g in I.gens], name, field)


def parse(source: str | Path, nvars: int | None = None) -> IdealDocument:
    """Parse a file path or literal text in either accepted format."""
    text = _read(source)
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text, nvars)


def _read(source) -> str:
    if isinstance(source, Path):
        return source.read_text()
    if "\n" not in source and not source.lstrip().startswith("{"):
        p = Path(source)
        if p.is_file():
            return p.read_text()
    return source


def parse_json(text: str) -> IdealDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    unknown = set(data) - _JSON_KEYS
    if unknown:
        raise ParseError(f"unknown fields: {', '.join(sorted(unknown))}")
    if data.get("schema", SCHEMA) != SCHEMA:
        raise ParseError(f"unsupported schema {data['schema']!r}")
    n = data.get("nvars")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("nvars must be a non-negative integer")
    gens = data.get("gens")
    if not isinstance(gens, list):
        raise ParseError("gens must be a list")
    for k, g in enumerate(gens):
        if (
            not isinstance(g, list)
            or len(g) != n
            or not all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in g)
        ):
            raise ParseError(f"generator {k} must be a list of {n} non-negative integers")
    for key in ("name", "field"):
        if key in data and not isinstance(data[key], str):
            raise ParseError(f"{key} must be a string")
    return IdealDocument(n, [list(g) for g in gens], data.get("name"), data.get("field"))


def parse_text(text: str, nvars: int | None = None) -> IdealDocument:
    rows: list[tuple[int, dict[int, int]]] = []
    meta: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        head, _, rest = line.strip().partition(" ")
        if head in _DIRECTIVES:
            if head in meta:
                raise ParseError(f"repeated {head}", lineno, 1)
            meta[head] = rest.strip()
            continue
        exps: dict[int, int] = {}
        if line.strip() != "1":
            for m in re.finditer(r"\S+", line):
                tok = _TOKEN.fullmatch(m.group())
                if not tok or int(tok.group(1)) < 1:
                    raise ParseError(f"bad token {m.group()!r}", lineno, m.start() + 1)
                i = int(tok.group(1)) - 1
                exps[i] = exps.get(i, 0) + int(tok.group(2) or 1)
        rows.append((lineno, exps))
    if "nvars" in meta:
        if not meta["nvars"].isdigit():
            raise ParseError("nvars needs an integer")
        n = int(meta["nvars"])
        if nvars is not None and nvars != n:
            raise ParseError(f"file says nvars {n}, caller says {nvars}")
    elif nvars is not None:
        n = nvars
    else:
        n = max((i + 1 for _, e in rows for i in e), default=0)
    gens = []
    for lineno, e in rows:
        if e and max(e) >= n:
            raise ParseError(f"variable x{max(e) + 1} exceeds nvars {n}", lineno)
        gens.append([e.get(i, 0) for i in range(n)])
    return IdealDocument(n, gens, meta.get("name"), meta.get("field"))


def serialize(doc: IdealDocument, fmt: str = "json") -> str:
    if fmt == "json":
        data = {"schema": SCHEMA, "nvars": doc.nvars, "gens": doc.gens}
        if doc.name is not None:
            data["name"] = doc.name
        if doc.field is not None:
            data["field"] = doc.field
        return json.dumps(data) + "\n"
    if fmt == "text":
        lines = [f"nvars {doc.nvars}"]
        if doc.name is not None:
            lines.append(f"name {doc.name}")
        if doc.field is not None:
            lines.append(f"field {doc.field}")
        for g in doc.gens:
            toks = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(g) if e]
            lines.append(" ".join(toks) or "1")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def monomial_json(m: Monomial) -> list[int]:
    return list(m.exponents)
