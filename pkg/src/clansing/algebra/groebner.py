"""Buchberger's algorithm with the Gebauer-Moeller pair criteria.

Everything here works on plain ``{exponent: Fraction}`` dicts internally and
wraps results back into :class:`Polynomial`.  A step budget bounds the number
of single-term reduction steps so desk-scale runs fail with
:class:`ResourceLimit` instead of hanging.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import NonVanishingAtOrigin, ResourceLimit
from .polynomial import ORDERS, Monomial, Polynomial, Ring

__all__ = [
    "GroebnerBasis", "buchberger", "normal_form", "contains", "dimension",
    "radical_member", "linear_part_rank_at_origin", "DEFAULT_BUDGET", "rank_of_rows",
]

DEFAULT_BUDGET = 10**6

Terms = dict[Monomial, Fraction]


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Budget:
    __slots__ = ("left", "limit")

    def __init__(self, limit: int):
        self.left = limit
        self.limit = limit

    def spend(self, k: int = 1):
        self.left -= k
        if self.left < 0:
            raise ResourceLimit(f"Groebner step budget of {self.limit} reductions exhausted")


class _Poly:
    """A polynomial with its leading term cached, for use during Buchberger."""
    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms: Terms, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]


def _monic(terms: Terms, key) -> Terms:
    lm = max(terms, key=key)
    inv = 1 / terms[lm]
    return {m: c * inv for m, c in terms.items()}


def _reduce(f: Terms, basis: Sequence[_Poly], key, budget: _Budget, full: bool = True) -> Terms:
    """Remainder of ``f`` on division by ``basis`` (full or top reduction)."""
    f = dict(f)
    rem: Terms = {}
    while f:
        m = max(f, key=key)
        c = f[m]
        for g in basis:
            if _divides(g.lm, m):
                budget.spend()
                shift = tuple(x - y for x, y in zip(m, g.lm))
                factor = c / g.lc
                for gm, gc in g.terms.items():
                    t = tuple(x + y for x, y in zip(gm, shift))
                    v = f.get(t)
                    if v is None:
                        f[t] = -factor * gc
                    else:
                        v -= factor * gc
                        if v:
                            f[t] = v
                        else:
                            del f[t]
                break
        else:
            if not full:
                rem.update(f)
                return rem
            rem[m] = c
            del f[m]
    return rem


def _spoly(f: _Poly, g: _Poly) -> Terms:
    l = _lcm(f.lm, g.lm)
    sf = tuple(x - y for x, y in zip(l, f.lm))
    sg = tuple(x - y for x, y in zip(l, g.lm))
    out: Terms = {}
    for m, c in f.terms.items():
        t = tuple(x + y for x, y in zip(m, sf))
        out[t] = c / f.lc
    for m, c in g.terms.items():
        t = tuple(x + y for x, y in zip(m, sg))
        v = out.get(t, Fraction(0)) - c / g.lc
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


@dataclass
class GroebnerBasis:
    """A reduced Groebner basis together with its ring and monomial order."""
    ring: Ring
    generators: tuple[Polynomial, ...]
    order: str = "grevlex"
    _dim: int | None = field(default=None, repr=False)

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]

    @property
    def dimension(self) -> int:
        if self._dim is None:
            self._dim = dimension(self)
        return self._dim

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def __contains__(self, f: Polynomial) -> bool:
        return contains(self, f)


def buchberger(gens: Iterable[Polynomial], order: str = "grevlex", budget: int = DEFAULT_BUDGET,
               ring: Ring | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are chosen by the normal strategy (smallest lcm first) and pruned
    with the Gebauer-Moeller criteria.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for an empty generator list")
        ring = gens[0].ring
    key = ORDERS[order]
    spent = _Budget(budget)

    polys: list[_Poly] = []
    active: list[int] = []
    pairs: list[tuple[int, int]] = []

    def update(h: int):
        nonlocal active, pairs
        hp = polys[h]
        C = [(h, g) for g in active]
        D: list[tuple[int, int]] = []
        while C:
            _, g1 = C.pop()
            l1 = _lcm(hp.lm, polys[g1].lm)
            if _coprime(hp.lm, polys[g1].lm) or not any(
                _divides(_lcm(hp.lm, polys[g2].lm), l1) for _, g2 in itertools.chain(C, D)
            ):
                D.append((h, g1))
        E = [(a, b) for a, b in D if not _coprime(polys[a].lm, polys[b].lm)]
        kept = []
        for a, b in pairs:
            lab = _lcm(polys[a].lm, polys[b].lm)
            if (_divides(hp.lm, lab) and _lcm(polys[a].lm, hp.lm) != lab
                    and _lcm(hp.lm, polys[b].lm) != lab):
                continue
            kept.append((a, b))
        pairs = kept + E
        active = [g for g in active if not _divides(hp.lm, polys[g].lm)] + [h]

    basis_view = lambda: [polys[g] for g in active]

    for f in gens:
        if f.ring != ring:
            raise ValueError("generators live in different rings")
        if f.is_zero():
            continue
        r = _reduce(f.terms, basis_view(), key, spent) if active else dict(f.terms)
        if not r:
            continue
        polys.append(_Poly(_monic(r, key), key))
        update(len(polys) - 1)
        if not any(polys[-1].lm):
            break

    while pairs and not any(not any(polys[g].lm) for g in active):
        idx = min(range(len(pairs)), key=lambda t: key(_lcm(polys[pairs[t][0]].lm, polys[pairs[t][1]].lm)))
        a, b = pairs.pop(idx)
        s = _spoly(polys[a], polys[b])
        spent.spend()
        if not s:
            continue
        r = _reduce(s, basis_view(), key, spent)
        if not r:
            continue
        polys.append(_Poly(_monic(r, key), key))
        update(len(polys) - 1)

    basis = basis_view()
    if any(not any(g.lm) for g in basis):
        return GroebnerBasis(ring, (ring.one(),), order)
    # minimal basis, then inter-reduce
    minimal = [g for g in basis if not any(h is not g and _divides(h.lm, g.lm) for h in basis)]
    reduced: list[_Poly] = []
    for g in minimal:
        others = [h for h in minimal if h is not g]
        r = _reduce(g.terms, others, key, spent)
        reduced.append(_Poly(_monic(r, key), key))
    reduced.sort(key=lambda g: key(g.lm), reverse=True)
    return GroebnerBasis(ring, tuple(Polynomial(ring, g.terms) for g in reduced), order)


def normal_form(f: Polynomial, gb: GroebnerBasis, budget: int = DEFAULT_BUDGET) -> Polynomial:
    key = ORDERS[gb.order]
    basis = [_Poly(g.terms, key) for g in gb.generators]
    return Polynomial(f.ring, _reduce(f.terms, basis, key, _Budget(budget)))


def contains(gb: GroebnerBasis, f: Polynomial) -> bool:
    return normal_form(f, gb).is_zero()


def dimension(gb: GroebnerBasis) -> int:
    """Krull dimension of ``R/I``: the size of a largest set of variables no
    leading monomial is supported on.  Returns -1 for the unit ideal."""
    if gb.is_unit:
        return -1
    n = gb.ring.nvars
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gb.leading_monomials()]
    best = 0

    def search(start: int, chosen: list[int]):
        nonlocal best
        if len(chosen) + (n - start) <= best:
            return
        best = max(best, len(chosen))
        for v in range(start, n):
            cand = chosen + [v]
            cs = set(cand)
            if any(s <= cs for s in supports):
                continue
            search(v + 1, cand)

    search(0, [])
    return best


def radical_member(f: Polynomial, gens: Sequence[Polynomial], budget: int = DEFAULT_BUDGET,
                   gb: GroebnerBasis | None = None) -> bool:
    """``f`` lies in the radical of ``<gens>`` iff ``1 in <gens, 1 - t f>``.

    Plain membership is tried first since it implies radical membership.
    """
    if f.is_zero():
        return True
    ring = f.ring
    if gb is None:
        gb = buchberger(gens, budget=budget, ring=ring)
    if contains(gb, f):
        return True
    t_name = "_t"
    while t_name in ring.names:
        t_name += "_"
    big = ring.extend(t_name)
    emb = {i: i for i in range(ring.nvars)}
    lifted = [g.rename(big, emb) for g in gens]
    t = big.gen(ring.nvars)
    rab = big.one() - t * f.rename(big, emb)
    return buchberger(lifted + [rab], budget=budget, ring=big).is_unit


def rank_of_rows(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                fct = m[r][col] / pr[col]
                m[r] = [a - fct * b for a, b in zip(m[r], pr)]
        rank += 1
        if rank == len(m):
            break
    return rank


def linear_part_rank_at_origin(gens: Sequence[Polynomial]) -> int:
    """Rank of the Jacobian of ``gens`` at the origin."""
    rows = []
    for g in gens:
        if g.constant_term():
            raise NonVanishingAtOrigin(f"generator {g} does not vanish at the origin")
        lin = g.linear_part()
        if lin:
            rows.append([lin.get(i, Fraction(0)) for i in range(g.ring.nvars)])
    return rank_of_rows(rows)
