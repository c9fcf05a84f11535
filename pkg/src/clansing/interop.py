"""Text exports: Macaulay2 scripts for checks that need a full CAS, and DOT
drawings of Hasse diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .clans import Clan, as_clan
from .ideal import generators
from .order import ClanPoset

__all__ = ["CasScript", "CAS_CHECKS", "emit_cas", "emit_dot", "CAS_EXTENSION"]

CAS_CHECKS = ("dim", "radical", "gorensteinType", "multiplicity", "tangentCone")
CAS_EXTENSION = ".m2.txt"


@dataclass(frozen=True)
class CasScript:
    dialect: str
    text: str
    checks: tuple[str, ...]

    def write(self, path: str | Path) -> Path:
        path = Path(path)
        if not path.name.endswith(CAS_EXTENSION):
            path = path.with_name(path.name + CAS_EXTENSION)
        path.write_text(self.text)
        return path


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_cas(gamma: Clan | str, alpha: Clan | str,
             checks: Iterable[str] = CAS_CHECKS, method: str = "minors") -> CasScript:
    """A Macaulay2 script for the slice ideal of ``gamma`` at ``alpha``.

    The script declares the polynomial ring over QQ in the slice variables and
    the generators exactly as built in-core, then prints one ``key: value``
    line per requested check.  Gorenstein type is read off the last module of
    a minimal resolution over the local ring at the origin; multiplicity is
    the degree of the tangent cone.
    """
    gamma, alpha = as_clan(gamma), as_clan(alpha)
    checks = tuple(checks)
    unknown = set(checks) - set(CAS_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    ms = generators(gamma, alpha, method=method)
    ring = ms.ring
    names = [p.to_str(style="m2") for p in ring.gens()]
    gens = [g.to_str(style="m2") for g in ms.generators]

    lines = [
        f"-- slice ideal of the orbit closure of {gamma} at the orbit of {alpha}",
        f"-- {len(names)} variables, {len(gens)} generators",
    ]
    if names:
        lines.append("R = QQ[" + ", ".join(names) + "];")
    else:
        lines.append("R = QQ[];")
    if gens:
        lines.append("I = ideal(" + ",\n    ".join(gens) + ");")
    else:
        lines.append("I = ideal(0_R);")
    lines.append(f'print({_quote("gamma: " + str(gamma))});')
    lines.append(f'print({_quote("alpha: " + str(alpha))});')
    if "dim" in checks:
        lines.append('print("dim: " | toString dim I);')
    if "radical" in checks:
        lines.append('print("radical: " | toString(radical I == I));')
    if "tangentCone" in checks or "multiplicity" in checks:
        lines.append("TC = tangentCone I;")
    if "tangentCone" in checks:
        lines.append('print("tangentCone: " | toString TC);')
    if "multiplicity" in checks:
        lines.append('print("multiplicity: " | toString degree TC);')
    if "gorensteinType" in checks:
        lines += [
            'needsPackage "LocalRings";',
            "RP = localRing(R, ideal vars R);",
            "C = res(RP^1 / promote(I, RP));",
            'print("gorensteinType: " | toString rank C_(length C));',
        ]
    return CasScript("Macaulay2", "\n".join(lines) + "\n", checks)


def emit_dot(poset: ClanPoset, name: str = "clans") -> str:
    """Hasse diagram in DOT, edges pointing from each clan to its covers."""
    out = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for c, ell in zip(poset.elements, poset.lengths):
        s = str(c)
        out.append(f'  {_quote(s)} [label="{s}\\n{ell}"];')
    for a, b in poset.edges():
        out.append(f"  {_quote(str(a))} -> {_quote(str(b))};")
    out.append("}")
    return "\n".join(out) + "\n"
