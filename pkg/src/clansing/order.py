"""Closure order on (p,q)-clans.

Covers come from ten local moves on subsequences of a clan; ``leq`` is
reachability along covers.  An independent comparison, ``leq_rank_oracle``,
tests whether the base point of one slice satisfies the other clan's rank
conditions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .clans import Clan, Entry, as_clan, enumerate_clans, length, sort_key
from .errors import MixedSignature, NotComparable

__all__ = [
    "TranspositionMove", "ClanPoset", "transpositions", "covers", "leq",
    "leq_rank_oracle", "hasse", "interval", "t7_length_diff",
]


@dataclass(frozen=True)
class TranspositionMove:
    rule: str
    positions: tuple[int, ...]
    result: Clan


def _rebuild(entries: tuple[Entry, ...], signs: dict[int, str], pairs) -> Clan:
    out = list(entries)
    for pos, s in signs.items():
        out[pos - 1] = s
    for a, b in pairs:
        out[a - 1] = b
        out[b - 1] = a
    return Clan(tuple(out))


def _moves(c: Clan) -> Iterator[TranspositionMove]:
    e = c.entries
    n = c.n
    signs = {i: e[i - 1] for i in range(1, n + 1) if c.is_sign(i)}
    ms = c.matchings

    for i, j in itertools.combinations(sorted(signs), 2):
        if signs[i] != signs[j]:
            rule = "T1" if signs[i] == "+" else "T2"
            yield TranspositionMove(rule, (i, j), _rebuild(e, {}, [(i, j)]))

    for (a, b), k in itertools.product(ms, sorted(signs)):
        s = signs[k]
        if b < k:
            # 11s -> 1s1
            rule = "T3" if s == "+" else "T4"
            yield TranspositionMove(rule, (a, b, k), _rebuild(e, {b: s}, [(a, k)]))
        elif k < a:
            # s11 -> 1s1
            rule = "T5" if s == "+" else "T6"
            yield TranspositionMove(rule, (k, a, b), _rebuild(e, {a: s}, [(k, b)]))

    for (i, j), (k, l) in itertools.combinations(ms, 2):
        if j < k:
            pos = (i, j, k, l)
            yield TranspositionMove("T7", pos, _rebuild(e, {}, [(i, k), (j, l)]))
            yield TranspositionMove("T8", pos, _rebuild(e, {j: "+", k: "-"}, [(i, l)]))
            yield TranspositionMove("T9", pos, _rebuild(e, {j: "-", k: "+"}, [(i, l)]))
        elif k < j < l:
            # matchings (i,j),(k,l) with i < k < j < l form the pattern 1212
            pos = (i, k, j, l)
            yield TranspositionMove("T10", pos, _rebuild(e, {}, [(i, l), (k, j)]))


def transpositions(c: Clan | str) -> list[TranspositionMove]:
    """Every application of the moves T1..T10 to a subsequence occurrence of
    the move's left-hand pattern, grouped by rule then positions."""
    c = as_clan(c)
    moves = list(_moves(c))
    moves.sort(key=lambda m: (int(m.rule[1:]), m.positions))
    return moves


def covers(c: Clan | str) -> list[Clan]:
    """Clans covering ``c``: transposition results exactly one longer."""
    c = as_clan(c)
    target = length(c) + 1
    found = {m.result for m in _moves(c) if length(m.result) == target}
    return sorted(found, key=sort_key)


def t7_length_diff(c: Clan | str, i: int, j: int, k: int, l: int) -> int:
    """Predicted length gain of the T7 move on matchings ``(i,j)`` and ``(k,l)``."""
    c = as_clan(c)
    outer = sum(1 for a, b in c.matchings if a < i and j < b < k)
    inner = sum(1 for a, b in c.matchings if j < a < k and b > l)
    return 2 * (k - j) - 1 - 2 * (outer + inner)


@dataclass
class ClanPoset:
    """A finite poset of clans given by its cover relation."""
    elements: tuple[Clan, ...]
    cover_edges: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    index: dict[Clan, int] = field(init=False, repr=False)
    _reach: list[int] | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        self.index = {c: k for k, c in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, c) -> bool:
        return as_clan(c) in self.index

    def edges(self) -> list[tuple[Clan, Clan]]:
        return [(self.elements[a], self.elements[b])
                for a, ups in enumerate(self.cover_edges) for b in ups]

    def up_covers(self, c: Clan) -> list[Clan]:
        return [self.elements[b] for b in self.cover_edges[self.index[c]]]

    def reach(self) -> list[int]:
        """Bitset of elements above each element (inclusive)."""
        if self._reach is None:
            reach = [0] * len(self.elements)
            order = sorted(range(len(self.elements)), key=lambda k: -self.lengths[k])
            for k in order:
                bits = 1 << k
                for b in self.cover_edges[k]:
                    bits |= reach[b]
                reach[k] = bits
            self._reach = reach
        return self._reach

    def leq(self, a: Clan, b: Clan) -> bool:
        return bool(self.reach()[self.index[a]] >> self.index[b] & 1)

    def maximal(self) -> list[Clan]:
        return [c for c, ups in zip(self.elements, self.cover_edges) if not ups]

    def minimal(self) -> list[Clan]:
        has_down = {b for ups in self.cover_edges for b in ups}
        return [c for k, c in enumerate(self.elements) if k not in has_down]

    def to_json_obj(self) -> dict:
        return {
            "elements": [str(c) for c in self.elements],
            "lengths": list(self.lengths),
            "covers": [[str(a), str(b)] for a, b in self.edges()],
        }


@lru_cache(maxsize=None)
def hasse(p: int, q: int) -> ClanPoset:
    """The full closure order on (p,q)-clans."""
    elems = tuple(enumerate_clans(p, q))
    idx = {c: k for k, c in enumerate(elems)}
    edges = tuple(tuple(idx[d] for d in covers(c)) for c in elems)
    return ClanPoset(elems, edges, tuple(length(c) for c in elems))


def _same_signature(a: Clan, b: Clan):
    if a.signature != b.signature:
        raise MixedSignature(f"{a} is a {a.signature}-clan but {b} is a {b.signature}-clan")


def leq(a: Clan | str, b: Clan | str) -> bool:
    a, b = as_clan(a), as_clan(b)
    _same_signature(a, b)
    return hasse(*a.signature).leq(a, b)


def leq_rank_oracle(a: Clan | str, b: Clan | str) -> bool:
    """Whether the base point of ``a``'s slice meets the rank conditions of ``b``."""
    from .ideal import origin_in_closure
    a, b = as_clan(a), as_clan(b)
    _same_signature(a, b)
    return origin_in_closure(a, b)


def interval(a: Clan | str, b: Clan | str) -> ClanPoset:
    """The induced subposet on ``{c : a <= c <= b}``."""
    a, b = as_clan(a), as_clan(b)
    if not leq(a, b):
        raise NotComparable(f"{a} is not below {b}")
    full = hasse(*a.signature)
    reach = full.reach()
    ia, ib = full.index[a], full.index[b]
    keep = [k for k in range(len(full)) if reach[ia] >> k & 1 and reach[k] >> ib & 1]
    local = {k: t for t, k in enumerate(keep)}
    edges = tuple(tuple(local[u] for u in full.cover_edges[k] if u in local) for k in keep)
    return ClanPoset(tuple(full.elements[k] for k in keep), edges,
                     tuple(full.lengths[k] for k in keep))
