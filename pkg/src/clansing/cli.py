"""Command-line interface.  Run ``clansing --help`` for the list of commands.

Exit status is 0 on success, 2 for bad input (including malformed clans) and
1 when a computation fails; failures print ``error: <reason>: <message>`` to
stderr, or a JSON object with ``error`` and ``message`` keys under ``--json``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import analysis, clans, ideal, interop, order, patterns, slice
from .algebra import DEFAULT_BUDGET, buchberger
from .errors import BadIndices, ClanError, ComputationError, MixedSignature, NotComparable

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class _Out:
    def __init__(self, as_json: bool, stream):
        self.as_json = as_json
        self.stream = stream

    def emit(self, text: str, data) -> None:
        if self.as_json:
            self.stream.write(json.dumps(data, sort_keys=True) + "\n")
        else:
            self.stream.write(text.rstrip("\n") + "\n")


def _clan(text: str) -> clans.Clan:
    return clans.parse(text)


def _indices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise BadIndices(f"cannot read indices from {text!r}")


# -- commands -----------------------------------------------------------------

def cmd_enumerate(a, out):
    cs = clans.enumerate_clans(a.p, a.q)
    out.emit("\n".join(str(c) for c in cs), [str(c) for c in cs])


def cmd_length(a, out):
    c = _clan(a.clan)
    n = clans.length(c)
    out.emit(str(n), {"clan": str(c), "length": n})


def cmd_covers(a, out):
    c = _clan(a.clan)
    cs = order.covers(c)
    out.emit("\n".join(str(x) for x in cs), {"clan": str(c), "covers": [str(x) for x in cs]})


def cmd_poset(a, out):
    P = order.hasse(a.p, a.q)
    if a.dot:
        text = interop.emit_dot(P, name=f"clans_{a.p}_{a.q}")
        out.emit(text, {"dot": text})
    else:
        lines = [f"{x} {ell} -> {' '.join(str(y) for y in P.up_covers(x))}".rstrip(" ->")
                 for x, ell in zip(P.elements, P.lengths)]
        out.emit("\n".join(lines), P.to_json_obj())


def cmd_leq(a, out):
    x, y = _clan(a.a), _clan(a.b)
    r = order.leq(x, y)
    out.emit(str(r).lower(), {"a": str(x), "b": str(y), "leq": r})


def cmd_pattern(a, out):
    big, small = _clan(a.big), _clan(a.small)
    w = patterns.includes(big, small)
    idx = None if w is None else list(w.indices)
    out.emit("none" if w is None else " ".join(map(str, idx)),
             {"big": str(big), "small": str(small), "witness": idx})


def cmd_interval_embed(a, out):
    theta, alpha, gamma = _clan(a.theta), _clan(a.alpha), _clan(a.gamma)
    if not order.leq(alpha, gamma):
        raise NotComparable(f"{alpha} is not below {gamma}")
    es = patterns.find_interval_embeddings(theta, (alpha, gamma))
    lines = [f"[{e.big[0]}, {e.big[1]}] at {' '.join(map(str, e.indices))}" for e in es]
    out.emit("\n".join(lines) if lines else "none", [e.to_json_obj() for e in es])


def cmd_matrix(a, out):
    c = _clan(a.clan)
    sm = slice.generic_matrix(c)
    text = f"w = {' '.join(map(str, sm.w))}\n{sm.pretty()}"
    if a.inverse:
        text += "\ninverse:\n" + slice.format_matrix(slice.inverse(c))
    data = {"clan": str(c), "w": list(sm.w), "matrix": slice.matrix_to_json(sm.polys())}
    if a.inverse:
        data["inverse"] = slice.matrix_to_json(slice.inverse(c))
    out.emit(text, data)


def cmd_ideal(a, out):
    ms = ideal.generators(_clan(a.gamma), _clan(a.alpha), method=a.method)
    out.emit("\n".join(g.to_str() for g in ms.generators) or "0", ms.to_json_obj())


def cmd_gb(a, out):
    ms = ideal.generators(_clan(a.gamma), _clan(a.alpha), method=a.method)
    gb = buchberger(ms.generators, order=a.order, budget=a.budget, ring=ms.ring)
    gens = [g.to_str(a.order) for g in gb.generators]
    out.emit("\n".join(gens) or "0", {"gamma": str(ms.gamma), "alpha": str(ms.alpha),
                                      "order": a.order, "basis": gens, "dimension": gb.dimension})


def cmd_smooth(a, out):
    r = analysis.smooth_at(_clan(a.gamma), _clan(a.alpha), budget=a.budget)
    out.emit(f"{r.verdict} (dim {r.variety_dim}, tangent dim {r.tangent_dim}; {r.caveat})",
             r.to_json_obj())


def cmd_maxsing(a, out):
    g = _clan(a.gamma)
    ms = analysis.maxsing(g, budget=a.budget)
    out.emit("\n".join(str(c) for c in ms) or "none", {"gamma": str(g), "maxsing": [str(c) for c in ms]})


def cmd_verify_iso(a, out):
    theta, alpha, gamma = _clan(a.theta), _clan(a.alpha), _clan(a.gamma)
    if not order.leq(alpha, gamma):
        raise NotComparable(f"{alpha} is not below {gamma}")
    es = patterns.find_interval_embeddings(theta, (alpha, gamma))
    if a.indices is not None:
        want = _indices(a.indices)
        if len(want) != alpha.n or max(want) > theta.n:
            raise BadIndices(f"need {alpha.n} increasing indices in 1..{theta.n}")
        es = [e for e in es if e.indices == want]
        if not es:
            out.emit("no embeddings", [])
            return EXIT_COMPUTE
    results = [analysis.verify_interval_iso(e, budget=a.budget) for e in es]
    lines = [f"{' '.join(map(str, v.embedding.indices))}: {'verified' if v.verified else 'FAILED'}"
             for v in results]
    out.emit("\n".join(lines) or "no embeddings", [v.to_json_obj() for v in results])
    return EXIT_OK if all(v.verified for v in results) else EXIT_COMPUTE


def cmd_table(a, out):
    rows = analysis.singularity_table(a.p, a.q, budget=a.budget)
    out.emit("\n".join(r.format() for r in rows), [r.to_json_obj() for r in rows])


def cmd_export_cas(a, out):
    checks = interop.CAS_CHECKS if not a.checks else tuple(a.checks.split(","))
    script = interop.emit_cas(_clan(a.gamma), _clan(a.alpha), checks, method=a.method)
    if a.output:
        path = script.write(a.output)
        out.emit(str(path), {"path": str(path), "dialect": script.dialect, "checks": list(script.checks)})
    else:
        out.emit(script.text, {"dialect": script.dialect, "checks": list(script.checks), "text": script.text})


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="Groebner reduction step budget")
    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", choices=("minors", "compact"), default="minors",
                        help="generator construction for auxiliary conditions")

    ap = argparse.ArgumentParser(prog="clansing", description="Clans, closure order and slice ideals.")
    ap.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help, parents=()):
        p = sub.add_parser(name, help=help, parents=[common, *parents])
        p.set_defaults(func=func)
        return p

    p = add("enumerate", cmd_enumerate, "list all (p,q)-clans")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    add("length", cmd_length, "length of a clan").add_argument("clan")
    add("covers", cmd_covers, "clans covering a clan").add_argument("clan")
    p = add("poset", cmd_poset, "closure order on (p,q)-clans")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--dot", action="store_true", help="emit a DOT Hasse diagram")
    p = add("leq", cmd_leq, "compare two clans")
    p.add_argument("a")
    p.add_argument("b")
    p = add("pattern", cmd_pattern, "least witness of SMALL inside BIG")
    p.add_argument("big")
    p.add_argument("small")
    p = add("interval-embed", cmd_interval_embed, "embeddings of [ALPHA,GAMMA] into THETA")
    for name in ("theta", "alpha", "gamma"):
        p.add_argument(name)
    p = add("matrix", cmd_matrix, "generic slice matrix of a clan")
    p.add_argument("clan")
    p.add_argument("--inverse", action="store_true", help="also print the inverse")
    p = add("ideal", cmd_ideal, "slice ideal generators", [method])
    p.add_argument("gamma")
    p.add_argument("alpha")
    p = add("gb", cmd_gb, "reduced Groebner basis of the slice ideal", [method, budget])
    p.add_argument("gamma")
    p.add_argument("alpha")
    p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    p = add("smooth", cmd_smooth, "smoothness of the closure of GAMMA along ALPHA", [budget])
    p.add_argument("gamma")
    p.add_argument("alpha")
    p = add("maxsing", cmd_maxsing, "maximal singular orbits of a closure", [budget])
    p.add_argument("gamma")
    p = add("verify-iso", cmd_verify_iso, "check slice isomorphisms for interval embeddings", [budget])
    for name in ("theta", "alpha", "gamma"):
        p.add_argument(name)
    p.add_argument("--indices", help="restrict to one index set, e.g. 2,3,4,5")
    p = add("table", cmd_table, "singular clans with their maximal singular orbits", [budget])
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p = add("export-cas", cmd_export_cas, "Macaulay2 script for the slice ideal", [method])
    p.add_argument("gamma")
    p.add_argument("alpha")
    p.add_argument("--checks", help="comma-separated subset of " + ",".join(interop.CAS_CHECKS))
    p.add_argument("-o", "--output", help="write the script to this file")
    return ap


_CLAN_LIKE = re.compile(r"-[-+0-9,]+")


def _protect_clans(argv: Sequence[str]) -> list[str]:
    """Clans such as ``-1221+`` look like options to argparse; swap their
    leading hyphen for the unicode minus, which the clan parser accepts.  A
    bare ``--`` is left alone as the usual end-of-options marker."""
    return ["\u2212" + a[1:] if a != "--" and _CLAN_LIKE.fullmatch(a) else a for a in argv]


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _protect_clans(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args.json, stdout)

    def fail(code: int, exc: Exception) -> int:
        reason = getattr(exc, "reason", type(exc).__name__)
        if args.json:
            stdout.write(json.dumps({"error": reason, "message": str(exc)}, sort_keys=True) + "\n")
        stderr.write(f"error: {reason}: {exc}\n")
        return code

    try:
        code = args.func(args, out)
    except (ClanError, BadIndices) as exc:
        return fail(EXIT_USAGE, exc)
    except (ComputationError, NotComparable, MixedSignature, ValueError) as exc:
        return fail(EXIT_COMPUTE, exc)
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
