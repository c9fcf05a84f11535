"""Rank conditions of an orbit closure and the minor ideal they define on a slice.

For a clan ``gamma`` the orbit closure is cut out by three families of rank
bounds on an invertible matrix ``M``:

* ``SW(i)``: the southwest ``(n-i) x p`` block has rank ``<= p - gamma(i;+)``;
* ``SE(i)``: the southeast ``(n-i) x q`` block has rank ``<= q - gamma(i;-)``;
* ``AUX(i,j)``: ``M^{[i;j]}`` has rank ``<= j + gamma(i;j)``, where
  ``M^{[i;j]}`` is the first ``i`` columns of ``M^{-1}`` with the last ``q``
  rows zeroed, followed by the first ``j`` columns of ``M^{-1}``.

Restricting to the generic matrix of ``alpha`` turns each bound into minors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import Polynomial, Ring, rank_of_rows
from .clans import Clan, as_clan, stats
from .errors import BadIndices, MixedSignature, NotComparable, SingularPoint
from .slice import base_point, generic_matrix, inverse, poly_minors, rational_inverse

__all__ = [
    "RankCondition", "MarsSpringerIdeal", "rank_conditions", "aux_matrix",
    "generators", "point_satisfies", "rank_profile", "profile_satisfies",
    "projector_block",
]


@dataclass(frozen=True)
class RankCondition:
    kind: str  # "SW", "SE" or "AUX"
    params: tuple[int, ...]
    bound: int
    max_rank: int

    @property
    def minor_size(self) -> int:
        return self.bound + 1

    @property
    def vacuous(self) -> bool:
        """True when no invertible matrix can violate the bound."""
        return self.bound >= self.max_rank

    def __str__(self) -> str:
        return f"{self.kind}{self.params} rank<={self.bound}"


def rank_conditions(gamma: Clan | str) -> list[RankCondition]:
    gamma = as_clan(gamma)
    st = stats(gamma)
    n, p, q = gamma.n, gamma.p, gamma.q
    out = []
    for i in range(1, n + 1):
        out.append(RankCondition("SW", (i,), p - st.plus(i), min(n - i, p)))
    for i in range(1, n + 1):
        out.append(RankCondition("SE", (i,), q - st.minus(i), min(n - i, q)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            # rank M^{[i;j]} = j + rank of rows j+1..n, columns 1..i of the
            # projector B = M P M^{-1}; off the diagonal B agrees with -(1-B),
            # so that block has rank at most min(p, q) as well
            out.append(RankCondition("AUX", (i, j), j + st.cross(i, j), j + min(i, n - j, p, q)))
    return out


def aux_matrix(minv: Sequence[Sequence], i: int, j: int, q: int) -> list[list]:
    """The ``n x (i+j)`` auxiliary matrix built from ``M^{-1}``."""
    n = len(minv)
    if not (1 <= i < j <= n) or not 0 <= q <= n:
        raise BadIndices(f"need 1 <= i < j <= n={n}, got i={i}, j={j}")
    out = []
    for r in range(n):
        row = minv[r]
        zero = row[0] * 0
        head = [zero if r >= n - q else row[c] for c in range(i)]
        out.append(head + [row[c] for c in range(j)])
    return out


def projector_block(m: Sequence[Sequence], p: int) -> list[list]:
    """``M P M^{-1}`` given as ``M[:, :p] @ M^{-1}[:p, :]``; needs ``(M, M^{-1})``."""
    mat, minv = m
    n = len(mat)
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = mat[r][0] * 0
            for k in range(p):
                a = mat[r][k]
                b = minv[k][c]
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


# -- rank profiles of concrete rational matrices --------------------------------

def rank_profile(m: Sequence[Sequence[Fraction]], p: int) -> dict[tuple, int]:
    """Ranks of every block the conditions look at, for an invertible ``m``."""
    n = len(m)
    q = n - p
    minv = rational_inverse(m)
    if minv is None:
        raise SingularPoint("rank conditions need an invertible matrix")
    prof: dict[tuple, int] = {}
    for i in range(1, n + 1):
        prof[("SW", i)] = rank_of_rows([row[:p] for row in m[i:]]) if i < n else 0
        prof[("SE", i)] = rank_of_rows([row[p:] for row in m[i:]]) if i < n and q else 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            prof[("AUX", i, j)] = rank_of_rows(aux_matrix(minv, i, j, q))
    return prof


def profile_satisfies(prof: dict[tuple, int], gamma: Clan) -> bool:
    for cond in rank_conditions(gamma):
        if prof[(cond.kind,) + cond.params] > cond.bound:
            return False
    return True


def point_satisfies(m: Sequence[Sequence[Fraction]], gamma: Clan | str) -> bool:
    """Whether the invertible rational matrix ``m`` meets all rank bounds of ``gamma``."""
    gamma = as_clan(gamma)
    if len(m) != gamma.n:
        raise MixedSignature(f"{len(m)}x{len(m)} matrix against a clan of size {gamma.n}")
    return profile_satisfies(rank_profile(m, gamma.p), gamma)


@lru_cache(maxsize=None)
def _base_profile(alpha: Clan) -> dict[tuple, int]:
    return rank_profile(base_point(alpha), alpha.p)


def origin_in_closure(alpha: Clan, gamma: Clan) -> bool:
    if alpha.signature != gamma.signature:
        raise MixedSignature(f"{alpha} is a {alpha.signature}-clan, {gamma} a {gamma.signature}-clan")
    return profile_satisfies(_base_profile(alpha), gamma)


# -- the ideal -----------------------------------------------------------------

@dataclass
class MarsSpringerIdeal:
    gamma: Clan
    alpha: Clan
    ring: Ring
    generators: tuple[Polynomial, ...]
    conditions: tuple[RankCondition, ...]
    sources: tuple[RankCondition, ...] = field(default=(), repr=False)

    def to_json_obj(self) -> dict:
        return {
            "gamma": str(self.gamma),
            "alpha": str(self.alpha),
            "variables": list(self.ring.names),
            "conditions": [str(c) for c in self.conditions],
            "generators": [g.to_str() for g in self.generators],
        }


def _minors(mat, k: int, ring: Ring, rows=None, cols=None) -> list[Polynomial]:
    return [v for v in poly_minors(mat, k, ring, rows, cols).values() if not v.is_zero()]


def _build(gamma: Clan, alpha: Clan, method: str) -> MarsSpringerIdeal:
    if not origin_in_closure(alpha, gamma):
        raise NotComparable(f"{alpha} is not below {gamma} in closure order")
    sm = generic_matrix(alpha)
    ring = sm.ring
    mat = sm.polys()
    n, p, q = alpha.n, alpha.p, alpha.q
    active = [c for c in rank_conditions(gamma) if not c.vacuous]
    seen: dict[Polynomial, int] = {}
    gens: list[Polynomial] = []
    srcs: list[RankCondition] = []

    def add(polys, cond):
        for f in polys:
            g = f.primitive()
            if g not in seen:
                seen[g] = len(gens)
                gens.append(g)
                srcs.append(cond)

    minv = inverse(alpha) if any(c.kind == "AUX" for c in active) else None
    proj = None
    for cond in active:
        k = cond.minor_size
        if cond.kind == "SW":
            (i,) = cond.params
            add(_minors(mat, k, ring, range(i, n), range(0, p)), cond)
        elif cond.kind == "SE":
            (i,) = cond.params
            add(_minors(mat, k, ring, range(i, n), range(p, n)), cond)
        else:
            i, j = cond.params
            if method == "minors":
                aux = aux_matrix(minv, i, j, q)
                add(_minors(aux, k, ring), cond)
            elif method == "compact":
                if proj is None:
                    proj = projector_block((mat, minv), p)
                add(_minors(proj, k - j, ring, range(j, n), range(0, i)), cond)
            else:
                raise ValueError(f"unknown method {method!r}")
    return MarsSpringerIdeal(gamma, alpha, ring, tuple(gens), tuple(active), tuple(srcs))


@lru_cache(maxsize=None)
def _cached(gamma: Clan, alpha: Clan, method: str) -> MarsSpringerIdeal:
    return _build(gamma, alpha, method)


def generators(gamma: Clan | str, alpha: Clan | str, method: str = "minors") -> MarsSpringerIdeal:
    """Minor generators of the ideal of ``gamma``'s closure on ``alpha``'s slice.

    ``method="minors"`` takes the minors of the auxiliary matrices exactly as
    defined.  ``method="compact"`` uses, for each ``AUX(i,j)``, the
    ``(gamma(i;j)+1)``-minors of rows ``j+1..n`` and columns ``1..i`` of
    ``M P M^{-1}``; the two generator sets span the same ideal and the compact
    one is much smaller.  Vacuous conditions are skipped, zero minors dropped,
    and every generator is scaled to integer content 1 with positive leading
    coefficient, duplicates removed.
    """
    return _cached(as_clan(gamma), as_clan(alpha), method)
