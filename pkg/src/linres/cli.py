"""Command-line front end.

Every command prints a JSON report (or text/SVG where noted).  Exit status
is 0 when the verdict is true, 1 when it is false and 2 on errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import almost_linear, fractal, linearity, oracle, shelling
from .diagram import triangle_svg
from .documents import SCHEMA, IdealDocument, parse, serialize
from .errors import LinresError
from .linalg import field_name, normalize_field
from .monomials import Monomial, MonomialIdeal, is_primary, maximal_power


def to_json(obj):
    """Turn library results into plain JSON values."""
    if isinstance(obj, Monomial):
        return list(obj.exponents)
    if isinstance(obj, MonomialIdeal):
        return [list(g.exponents) for g in obj.gens]
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_json(v) for v in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    return obj


def _echo(I: MonomialIdeal, name=None) -> dict:
    out = {"nvars": I.nvars, "gens": to_json(I)}
    if name:
        out["name"] = name
    return out


def _report(command: str, I: MonomialIdeal, **fields) -> dict:
    rep = {"schema": SCHEMA, "command": command, "input": _echo(I)}
    rep.update(fields)
    return rep


def _check_entry(name, verdict, method, witness=None, detail=""):
    return {"name": name, "verdict": bool(verdict), "method": method, "witness": to_json(witness), "detail": detail}


def fast_certifier(I: MonomialIdeal, d: int, p: int):
    """The combinatorial certifier that decides N_{d,p} for ``I``, or None."""
    if not I.gens:
        return None
    if I.degrees != {d}:
        return _check_entry("ndp", False, "generator_degrees", sorted(I.degrees), "not generated in degree d")
    if p == 1:
        return _check_entry("ndp", True, "generator_degrees")
    primary = is_primary(I)
    if p == 2:
        if d == 3 and I.is_squarefree():
            v = linearity.cubic_squarefree_lp(I)
        elif d == 3 and primary:
            v = linearity.cubic_primary_lp(I)
        else:
            v = linearity.is_linearly_presented(I)
        return _check_entry("ndp", v.result, v.method, v.witness, v.detail)
    if primary and p == I.nvars - 1:
        cert = almost_linear.analyze_almost_linear(I)
        if cert:
            return _check_entry("ndp", True, "shadow_system", cert.socle_mons)
        return _check_entry("ndp", False, "shadow_system", cert.witnesses, cert.condition)
    if primary:
        rep = linearity.ndd1_necessary(I, d, p)
        if rep.refuted:
            bad = {k: c["witness"] for k, c in rep.checks.items() if c["applicable"] and not c["passed"]}
            return _check_entry("ndp", False, "necessary_containments", bad)
    return None


def _betti_json(table) -> list:
    return [list(t) for t in table.as_triples()]


def _oracle_kw(budget, threads, oracle_name="lattice") -> dict:
    kw = {} if budget is None else {"budget": budget}
    if threads > 1 and oracle_name == "lattice":
        kw["workers"] = threads
    return kw


def cmd_check(
    I: MonomialIdeal, d: int, p: int, method: str = "auto", field="q", budget=None, threads: int = 1
) -> dict:
    char = normalize_field(field)
    kw = _oracle_kw(budget, threads)
    fields = {"d": d, "p": p, "field": field_name(char)}
    if method in ("auto", "fast"):
        entry = fast_certifier(I, d, p)
        if entry is not None:
            return _report("check", I, verdict=entry["verdict"], checks=[entry], **fields)
        if method == "fast":
            raise LinresError("no combinatorial certifier applies; use --method oracle")
        method = "oracle"
    if method == "oracle":
        v = oracle.satisfies_ndp(I, d, p, char, **kw)
        entry = _check_entry("ndp", v.result, v.method, v.offending)
        extra = {"betti": _betti_json(v.table)} if v.table is not None else {}
        return _report("check", I, verdict=v.result, checks=[entry], **fields, **extra)
    if method == "locality":
        v = linearity.locality_check(I, d, p, "vars", char)
        entry = _check_entry("ndp", v.result, v.method, v.witness, v.detail)
        return _report("check", I, verdict=v.result, checks=[entry], **fields)
    raise LinresError(f"unknown method {method!r}")


def cmd_betti(I: MonomialIdeal, field="q", budget=None, oracle_name="lattice", threads: int = 1) -> dict:
    kw = _oracle_kw(budget, threads, oracle_name)
    table = oracle.betti_table(I, field, None, oracle_name, **kw)
    return _report(
        "betti", I, verdict=True, field=table.field_id, method=table.method,
        betti=_betti_json(table), regularity=table.regularity(),
    )


def cmd_analyze(I: MonomialIdeal) -> dict:
    cert = almost_linear.analyze_almost_linear(I)
    if cert:
        return _report(
            "analyze", I, verdict=True, d=cert.d, socle=to_json(cert.socle_mons),
            regularity=almost_linear.regularity_almost_linear(cert),
        )
    return _report("analyze", I, verdict=False, condition=cert.condition, witness=to_json(cert.witnesses))


def cmd_gen(family: str, n=None, d=None, p=None, r=None) -> IdealDocument:
    if family in ("fractal", "sier3"):
        if n not in (None, 3):
            raise LinresError("the three-variable fractal family needs n = 3")
        return IdealDocument.from_ideal(fractal.sier3(d), name=f"sier3 d={d}")
    if family == "sier_general":
        return IdealDocument.from_ideal(fractal.sier_general(n, p, r), name=f"sier_general n={n} p={p} r={r}")
    if family == "sharp":
        return IdealDocument.from_ideal(almost_linear.sharp_example(n, d, p), name=f"sharp n={n} d={d} p={p}")
    if family == "power":
        return IdealDocument.from_ideal(maximal_power(n, d), name=f"power n={n} d={d}")
    raise LinresError(f"unknown family {family!r}")


def cmd_shelling(I: MonomialIdeal, J: MonomialIdeal, budget=None) -> dict:
    search = shelling.shelled_over(I, J, budget or shelling.DEFAULT_STATE_BUDGET)
    rep = _report(
        "shelling", I, target=_echo(J), verdict=search.status == "found",
        search={"status": search.status, "states": search.states,
                "moves": to_json(search.path.moves) if search.path else None},
    )
    try:
        dec = shelling.noshell_decision(I, J)
    except LinresError as e:
        rep["structural"] = {"applicable": False, "reason": str(e)}
    else:
        rep["structural"] = {
            "applicable": True, "shellable": dec.shellable, "singletons": to_json(dec.singletons),
            "obstruction": to_json(dec.obstruction), "obstruction_socle": to_json(dec.obstruction_socle),
        }
    return rep


def cmd_diagram(I: MonomialIdeal) -> str:
    return triangle_svg(I)


def cmd_dual(I: MonomialIdeal) -> str:
    facets = shelling.dual_complex_facets(I)
    lines = [f"# {len(facets)} facets on {I.nvars} vertices, dimension {max((len(f) for f in facets), default=0) - 1}"]
    lines += [" ".join(str(v + 1) for v in f) for f in facets]
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q (rationals, default) or Fp (32003) or F<prime>")
    common.add_argument("--threads", type=int, default=1, help="worker processes for the lattice oracle")
    common.add_argument("--budget", type=int, default=None, help="cap on lattice elements or search states")
    common.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json", "text", "svg"], default=None)
    common.add_argument("--nvars", type=int, default=None, help="ambient variables for text input")
    common.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")

    ap = argparse.ArgumentParser(prog="linres", description="Partial linearity of monomial ideals.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="decide N_{d,p}")
    c.add_argument("--ideal", required=True, help="ideal file (JSON or text) or inline document")
    c.add_argument("--d", type=int, required=True, help="generator degree")
    c.add_argument("--p", type=int, required=True, help="linear steps, t_s = d+s for s < p")
    c.add_argument("--method", choices=["auto", "fast", "oracle", "locality"], default="auto")

    b = sub.add_parser("betti", parents=[common], help="graded Betti table and regularity")
    b.add_argument("--ideal", required=True)
    b.add_argument("--oracle", choices=sorted(oracle.ORACLES), default="lattice")

    a = sub.add_parser("analyze", parents=[common], help="shadow-system certificate")
    a.add_argument("--ideal", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a family member")
    g.add_argument("family", choices=["fractal", "sier3", "sier_general", "sharp", "power"])
    for flag in ("--n", "--d", "--p", "--r"):
        g.add_argument(flag, type=int, default=None)

    s = sub.add_parser("shelling", parents=[common], help="is the target shelled over the ideal")
    s.add_argument("--ideal", required=True)
    s.add_argument("--target", required=True, help="ideal containing --ideal")

    dg = sub.add_parser("diagram", parents=[common], help="SVG triangle picture (three variables)")
    dg.add_argument("--ideal", required=True)

    du = sub.add_parser("dual", parents=[common], help="facets of the Alexander dual complex")
    du.add_argument("--ideal", required=True)
    return ap


def _load(source: str, nvars) -> MonomialIdeal:
    return parse(source, nvars).to_ideal()


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    start = time.perf_counter()
    try:
        verdict = True
        if args.command == "gen":
            doc = cmd_gen(args.family, args.n, args.d, args.p, args.r)
            _emit(serialize(doc, args.format if args.format in ("json", "text") else "json"), args.out)
            return 0
        I = _load(args.ideal, args.nvars)
        if args.command == "diagram":
            _emit(cmd_diagram(I), args.out)
            return 0
        if args.command == "dual":
            _emit(cmd_dual(I), args.out)
            return 0
        if args.command == "check":
            rep = cmd_check(I, args.d, args.p, args.method, args.field, args.budget, args.threads)
        elif args.command == "betti":
            rep = cmd_betti(I, args.field, args.budget, args.oracle, args.threads)
        elif args.command == "analyze":
            rep = cmd_analyze(I)
        elif args.command == "shelling":
            rep = cmd_shelling(I, _load(args.target, args.nvars), args.budget)
        verdict = rep["verdict"]
        if args.timing:
            rep["timing_s"] = round(time.perf_counter() - start, 6)
        if args.format == "text":
            text = "".join(f"{k}: {json.dumps(v)}\n" for k, v in rep.items())
        else:
            text = json.dumps(rep, indent=2) + "\n"
        _emit(text, args.out)
        return 0 if verdict else 1
    except (LinresError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
