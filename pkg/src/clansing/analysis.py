"""Geometry of slice varieties: dimension, smoothness at the origin, maximal
singular orbits, interval isomorphism checks and the upper-ideal scan.

Smoothness verdicts use the minor generators as given.  They are only
scheme-theoretically meaningful if those generators cut out a radical
ideal, which is expected but unproven; every report carries that caveat.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .algebra import (DEFAULT_BUDGET, GroebnerBasis, buchberger,
                      linear_part_rank_at_origin, radical_member)
from .clans import Clan, as_clan, enumerate_clans, length, sort_key
from .errors import DimensionMismatch, PositionMapMismatch, ResourceLimit
from .ideal import MarsSpringerIdeal, generators
from .order import hasse
from .patterns import IntervalEmbedding, find_interval_embeddings
from .slice import generic_matrix, var_name

__all__ = [
    "SingularityReport", "IsoVerification", "UpperIdealReport", "ideal_of",
    "groebner_of", "variety_dimension", "smooth_at", "maxsing",
    "verify_interval_iso", "upper_ideal_check", "singularity_table", "TableRow",
]

RADICALITY_CAVEAT = "contingent on radicality of generators"

# The compact route spans the same ideal as the literal minors and is far
# smaller, so the scans below use it.
SCAN_METHOD = "compact"


@dataclass(frozen=True)
class SingularityReport:
    gamma: Clan
    alpha: Clan
    variety_dim: int
    tangent_dim: int
    verdict: str  # "Smooth" or "Singular"
    caveat: str = RADICALITY_CAVEAT

    @property
    def singular(self) -> bool:
        return self.verdict == "Singular"

    def to_json_obj(self) -> dict:
        return {"gamma": str(self.gamma), "alpha": str(self.alpha),
                "varietyDim": self.variety_dim, "tangentDim": self.tangent_dim,
                "verdict": self.verdict, "caveat": self.caveat}


def ideal_of(gamma: Clan | str, alpha: Clan | str) -> MarsSpringerIdeal:
    gamma, alpha = as_clan(gamma), as_clan(alpha)
    return generators(gamma, alpha, method=SCAN_METHOD)


@lru_cache(maxsize=None)
def _gb(gamma: Clan, alpha: Clan, budget: int) -> GroebnerBasis:
    ms = ideal_of(gamma, alpha)
    return buchberger(ms.generators, budget=budget, ring=ms.ring)


def groebner_of(gamma: Clan | str, alpha: Clan | str, budget: int = DEFAULT_BUDGET) -> GroebnerBasis:
    return _gb(as_clan(gamma), as_clan(alpha), budget)


def variety_dimension(gamma: Clan | str, alpha: Clan | str, budget: int = DEFAULT_BUDGET) -> int:
    """Dimension of the slice variety; must equal ``length(gamma) - length(alpha)``."""
    gamma, alpha = as_clan(gamma), as_clan(alpha)
    d = groebner_of(gamma, alpha, budget).dimension
    expected = length(gamma) - length(alpha)
    if d != expected:
        raise DimensionMismatch(
            f"slice of {gamma} at {alpha} has dimension {d}, expected {expected}")
    return d


@lru_cache(maxsize=None)
def _smooth(gamma: Clan, alpha: Clan, budget: int) -> SingularityReport:
    ms = ideal_of(gamma, alpha)
    vdim = variety_dimension(gamma, alpha, budget)
    tdim = ms.ring.nvars - linear_part_rank_at_origin(ms.generators)
    verdict = "Smooth" if tdim == vdim else "Singular"
    return SingularityReport(gamma, alpha, vdim, tdim, verdict)


def smooth_at(gamma: Clan | str, alpha: Clan | str, budget: int = DEFAULT_BUDGET) -> SingularityReport:
    """Compare the tangent space at the origin with the slice dimension."""
    return _smooth(as_clan(gamma), as_clan(alpha), budget)


def maxsing(gamma: Clan | str, budget: int = DEFAULT_BUDGET) -> list[Clan]:
    """Maximal ``alpha <= gamma`` along whose orbit the closure is singular."""
    gamma = as_clan(gamma)
    poset = hasse(*gamma.signature)
    below = [a for a in poset.elements if poset.leq(a, gamma)]
    bad = [a for a in below if smooth_at(gamma, a, budget).singular]
    top = [a for a in bad if not any(b != a and poset.leq(a, b) for b in bad)]
    return sorted(top, key=sort_key)


# -- interval isomorphism ---------------------------------------------------------

@dataclass
class IsoVerification:
    embedding: IntervalEmbedding
    variable_map: dict[str, str]
    deleted_vars: tuple[str, ...]
    deleted_vars_vanish: bool
    mapped_gens_in_radical: bool
    dims_equal: bool

    @property
    def verified(self) -> bool:
        return self.deleted_vars_vanish and self.mapped_gens_in_radical and self.dims_equal

    def to_json_obj(self) -> dict:
        return {"embedding": self.embedding.to_json_obj(),
                "variableMap": dict(sorted(self.variable_map.items())),
                "deletedVars": list(self.deleted_vars),
                "deletedVarsVanish": self.deleted_vars_vanish,
                "mappedGensInRadical": self.mapped_gens_in_radical,
                "dimsEqual": self.dims_equal, "verified": self.verified}


def _position_map(alpha: Clan, beta: Clan, indices: tuple[int, ...]):
    """Match the generic matrix of ``alpha`` with what is left of ``beta``'s
    after deleting row ``j`` and column ``w_beta(j)`` for every ``j`` off
    ``indices``.  Returns the variable map and the deleted ``beta`` variables."""
    ma, mb = generic_matrix(alpha), generic_matrix(beta)
    n = beta.n
    off = [j for j in range(1, n + 1) if j not in indices]
    dropped_cols = {mb.w[j - 1] for j in off}
    rows = list(indices)
    cols = [c for c in range(1, n + 1) if c not in dropped_cols]
    if len(cols) != alpha.n:
        raise PositionMapMismatch("deleted columns are not distinct")
    vmap: dict[tuple[int, int], tuple[int, int]] = {}
    kept: set[tuple[int, int]] = set()
    for r_a, r_b in enumerate(rows, start=1):
        for c_a, c_b in enumerate(cols, start=1):
            ea, eb = ma.entry(r_a, c_a), mb.entry(r_b, c_b)
            if eb.var is not None:
                kept.add(eb.var)
            if ea.var is None or eb.var is None:
                if ea != eb:
                    raise PositionMapMismatch(
                        f"entry ({r_a},{c_a}) of {alpha} is {ea.kind}, entry ({r_b},{c_b}) of {beta} is {eb.kind}")
                continue
            if ea.coef != eb.coef or vmap.setdefault(ea.var, eb.var) != eb.var:
                raise PositionMapMismatch(f"variable {ea.var} of {alpha} has no consistent image")
    if len(set(vmap.values())) != len(vmap) or set(vmap.values()) != kept \
            or set(vmap) != set(ma.variables):
        raise PositionMapMismatch(f"variables of {alpha} and the reduced matrix of {beta} differ")
    deleted = tuple(var_name(*v) for v in mb.variables if v not in kept)
    return {var_name(*a): var_name(*b) for a, b in vmap.items()}, deleted


def verify_interval_iso(e: IntervalEmbedding, budget: int = DEFAULT_BUDGET) -> IsoVerification:
    """Check that the slice of ``theta`` at ``beta`` matches that of ``gamma`` at
    ``alpha`` once the rows and columns off the embedding are deleted."""
    alpha, gamma = e.small
    beta, theta = e.big
    vmap, deleted = _position_map(alpha, beta, e.indices)
    small = ideal_of(gamma, alpha)
    big = ideal_of(theta, beta)
    gb = groebner_of(theta, beta, budget)
    ring_b = big.ring

    vanish = all(radical_member(ring_b.gen(ring_b.index(v)), big.generators, budget, gb=gb)
                 for v in deleted)
    idx_map = {small.ring.index(a): ring_b.index(b) for a, b in vmap.items()}
    mapped = all(radical_member(g.rename(ring_b, idx_map), big.generators, budget, gb=gb)
                 for g in small.generators)
    dims = variety_dimension(theta, beta, budget) == variety_dimension(gamma, alpha, budget)
    return IsoVerification(e, vmap, deleted, vanish, mapped, dims)


# -- upper order ideal scan -------------------------------------------------------

@dataclass
class UpperIdealReport:
    p: int
    q: int
    pairs_checked: int = 0
    embeddings_checked: int = 0
    violations: list[tuple[str, tuple[str, str], tuple[str, str]]] = field(default_factory=list)
    budget_exhausted: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.budget_exhausted


def _comparable_pairs(p: int, q: int):
    poset = hasse(p, q)
    for g in poset.elements:
        for a in poset.elements:
            if poset.leq(a, g):
                yield a, g


def upper_ideal_check(p: int, q: int, prop: Callable[[Clan, Clan], bool]) -> UpperIdealReport:
    """Check that ``prop(alpha, gamma)`` is stable under both generating
    relations of the interval order: enlarging ``gamma``'s interval by interval
    pattern containment into a (p,q)-interval, and lowering ``alpha``."""
    report = UpperIdealReport(p, q)
    cache: dict[tuple[Clan, Clan], bool | None] = {}

    def holds(a: Clan, g: Clan) -> bool | None:
        key = (a, g)
        if key not in cache:
            try:
                cache[key] = bool(prop(a, g))
            except ResourceLimit:
                cache[key] = None
                report.budget_exhausted.append((str(a), str(g)))
        return cache[key]

    poset = hasse(p, q)
    # lowering alpha: enough to check covers
    for a, g in _comparable_pairs(p, q):
        report.pairs_checked += 1
        if not holds(a, g):
            continue
        for b in poset.elements:
            if a in poset.up_covers(b) and holds(b, g) is False:
                report.violations.append(("lower", (str(a), str(g)), (str(b), str(g))))
    # interval containment from every smaller signature
    n = p + q
    for r in range(p + 1):
        for s in range(q + 1):
            if r + s < 1 or r + s >= n:
                continue
            for a, g in _comparable_pairs(r, s):
                if not holds(a, g):
                    continue
                for theta in poset.elements:
                    for emb in find_interval_embeddings(theta, (a, g)):
                        report.embeddings_checked += 1
                        beta = emb.big[0]
                        if holds(beta, theta) is False:
                            report.violations.append(
                                ("contain", (str(a), str(g)), (str(beta), str(theta))))
    return report


# -- singularity table ---------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    clan: Clan
    length: int
    maxsing: tuple[Clan, ...]
    maxnongor: tuple[Clan, ...] | None = None  # needs an external CAS

    def format(self) -> str:
        ms = ", ".join(str(c) for c in self.maxsing)
        ng = "?" if self.maxnongor is None else ", ".join(str(c) for c in self.maxnongor)
        return f"({self.clan}, {self.length}, {{{ms}}}, {{{ng}}})"

    def to_json_obj(self) -> dict:
        return {"clan": str(self.clan), "length": self.length,
                "maxsing": [str(c) for c in self.maxsing],
                "maxnongor": None if self.maxnongor is None else [str(c) for c in self.maxnongor]}


def singularity_table(p: int, q: int, budget: int = DEFAULT_BUDGET) -> list[TableRow]:
    """One row per singular (p,q)-clan, longest first."""
    rows = []
    for g in enumerate_clans(p, q):
        ms = maxsing(g, budget)
        if ms:
            rows.append(TableRow(g, length(g), tuple(ms)))
    rows.sort(key=lambda r: (-r.length, sort_key(r.clan)))
    return rows
