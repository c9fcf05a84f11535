"""(p,q)-clans: signed partial matchings on ``{1, ..., n}``.

A clan is stored as a tuple with one entry per position: ``"+"``, ``"-"`` or
the 1-based index of the matched partner.  Strings such as ``"1+12-2"`` are
the usual way to write them; equal labels mark a matching and the labels
themselves carry no meaning, so ``"2121"`` and ``"1212"`` are the same clan.

>>> c = parse("1+12-2")
>>> c.matchings
((1, 3), (4, 6))
>>> str(parse("2121"))
'1212'
>>> length(parse("123231"))
8
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Union

from .errors import BadToken, ClanError, EmptyInput, UnbalancedLabel

__all__ = [
    "Clan", "ClanStats", "parse", "canonical_string", "enumerate_clans",
    "count_clans", "length", "length_by_crossings", "length_by_incoming",
    "stats", "underlying_involution", "to_json", "from_json", "as_clan",
]

Entry = Union[str, int]

_MINUS_ALIASES = {"-", "−", "–"}


@dataclass(frozen=True)
class Clan:
    entries: tuple[Entry, ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise EmptyInput("a clan needs at least one position")
        for i, e in enumerate(self.entries, start=1):
            if e in ("+", "-"):
                continue
            if not isinstance(e, int) or not 1 <= e <= n or e == i:
                raise BadToken(f"bad entry {e!r} at position {i}")
            if self.entries[e - 1] != i:
                raise UnbalancedLabel(f"position {i} points to {e}, which does not point back")

    @property
    def n(self) -> int:
        return len(self.entries)

    @cached_property
    def matchings(self) -> tuple[tuple[int, int], ...]:
        """Matched pairs ``(a, b)`` with ``a < b``, sorted by left end."""
        return tuple((i, e) for i, e in enumerate(self.entries, start=1)
                     if isinstance(e, int) and i < e)

    @property
    def p(self) -> int:
        return self.entries.count("+") + len(self.matchings)

    @property
    def q(self) -> int:
        return self.entries.count("-") + len(self.matchings)

    @property
    def signature(self) -> tuple[int, int]:
        return (self.p, self.q)

    def is_sign(self, i: int) -> bool:
        return self.entries[i - 1] in ("+", "-")

    def partner(self, i: int) -> int | None:
        e = self.entries[i - 1]
        return e if isinstance(e, int) else None

    def is_left_end(self, i: int) -> bool:
        e = self.entries[i - 1]
        return isinstance(e, int) and e > i

    def is_right_end(self, i: int) -> bool:
        e = self.entries[i - 1]
        return isinstance(e, int) and e < i

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"Clan({canonical_string(self)!r})"

    def __len__(self) -> int:
        return len(self.entries)


def _tokenize(text: str) -> list[str]:
    text = text.strip()
    if not text:
        raise EmptyInput("empty clan string")
    if "," in text or any(ch.isspace() for ch in text):
        tokens = [t for t in text.replace(",", " ").split()]
    else:
        tokens = list(text)
    if not tokens:
        raise EmptyInput("empty clan string")
    return tokens


def parse(text: str) -> Clan:
    """Parse ``"1+12-2"`` or the delimited form ``"1,+,1,12,-,12"``.

    In the compact form every digit is its own label, so labels of 10 or more
    need the delimited form.  The unicode minus sign is accepted for ``-``.
    """
    tokens = _tokenize(text)
    positions: dict[str, list[int]] = {}
    kinds: list[str | None] = []
    for i, tok in enumerate(tokens, start=1):
        if tok == "+":
            kinds.append("+")
        elif tok in _MINUS_ALIASES:
            kinds.append("-")
        elif tok.isdigit():
            positions.setdefault(tok, []).append(i)
            kinds.append(None)
        else:
            raise BadToken(f"unrecognized token {tok!r} at position {i}")
    entries: list[Entry] = [k if k is not None else 0 for k in kinds]
    for label, where in positions.items():
        if len(where) != 2:
            raise UnbalancedLabel(f"label {label} appears {len(where)} time(s)")
        a, b = where
        entries[a - 1] = b
        entries[b - 1] = a
    return Clan(tuple(entries))


def as_clan(c: Clan | str) -> Clan:
    return c if isinstance(c, Clan) else parse(c)


def _labels(c: Clan) -> list[str]:
    out: list[str] = []
    label_of: dict[int, int] = {}
    nxt = 1
    for i, e in enumerate(c.entries, start=1):
        if e in ("+", "-"):
            out.append(e)
        elif e > i:
            label_of[i] = nxt
            out.append(str(nxt))
            nxt += 1
        else:
            out.append(str(label_of[e]))
    return out


def canonical_string(c: Clan) -> str:
    """Render with matchings numbered 1, 2, ... by first occurrence."""
    toks = _labels(c)
    if len(c.matchings) >= 10:
        return ",".join(toks)
    return "".join(toks)


def sort_key(c: Clan) -> tuple[int, ...]:
    """Lexicographic key on canonical tokens with ``+ < - < 1 < 2 < ...``."""
    return tuple(0 if t == "+" else 1 if t == "-" else 1 + int(t) for t in _labels(c))


def _partial_matchings(n: int, k: int) -> Iterator[list[tuple[int, int]]]:
    """All sets of ``k`` disjoint pairs on ``1..n``."""
    def rec(free: list[int], k: int):
        if k == 0:
            yield []
            return
        if len(free) < 2 * k:
            return
        first, rest = free[0], free[1:]
        # first is matched
        for idx, b in enumerate(rest):
            for tail in rec(rest[:idx] + rest[idx + 1:], k - 1):
                yield [(first, b)] + tail
        # first is unmatched
        yield from rec(rest, k)
    yield from rec(list(range(1, n + 1)), k)


def enumerate_clans(p: int, q: int) -> list[Clan]:
    """All (p,q)-clans, sorted by :func:`sort_key`."""
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError(f"need p, q >= 0 and p + q >= 1, got ({p}, {q})")
    n = p + q
    out = []
    for k in range(min(p, q) + 1):
        for pairs in _partial_matchings(n, k):
            used = {x for pr in pairs for x in pr}
            free = [i for i in range(1, n + 1) if i not in used]
            for plus in itertools.combinations(free, p - k):
                entries: list[Entry] = ["-"] * n
                for i in plus:
                    entries[i - 1] = "+"
                for a, b in pairs:
                    entries[a - 1] = b
                    entries[b - 1] = a
                out.append(Clan(tuple(entries)))
    out.sort(key=sort_key)
    return out


def count_clans(p: int, q: int) -> int:
    """Closed-form count: sum_k C(n,2k) (2k-1)!! C(n-2k, p-k)."""
    n = p + q
    total = 0
    for k in range(min(p, q) + 1):
        double_fact = math.prod(range(2 * k - 1, 0, -2))
        total += math.comb(n, 2 * k) * double_fact * math.comb(n - 2 * k, p - k)
    return total


def length_by_crossings(c: Clan) -> int:
    """Sum over matchings ``i<j`` of ``j - i - #{s<i<t<j : s, t matched}``,
    scanning labels of the string directly."""
    labels = _labels(c)
    n = len(labels)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if labels[i] == labels[j] and labels[i] not in ("+", "-"):
                nested_across = 0
                for s in range(i):
                    for t in range(i + 1, j):
                        if labels[s] == labels[t] and labels[s] not in ("+", "-"):
                            nested_across += 1
                total += (j - i) - nested_across
    return total


def length_by_incoming(c: Clan) -> int:
    """Sum over matchings of ``C(a,b) = b - a - I(a,b)``, ``I`` counting
    incoming matchings ``(s<t)`` with ``s < a < t < b``."""
    ms = c.matchings
    total = 0
    for a, b in ms:
        incoming = sum(1 for s, t in ms if s < a < t < b)
        total += b - a - incoming
    return total


def length(c: Clan) -> int:
    c = as_clan(c)
    x = length_by_incoming(c)
    y = length_by_crossings(c)
    if x != y:
        raise AssertionError(f"length formulas disagree on {c}: {x} != {y}")
    return x


@dataclass(frozen=True)
class ClanStats:
    """Rank-count statistics; lists are indexed so that ``plus_counts[i-1]``
    is the count for the first ``i`` positions."""
    length: int
    plus_counts: tuple[int, ...]
    minus_counts: tuple[int, ...]
    cross_counts: dict[tuple[int, int], int]

    def plus(self, i: int) -> int:
        return self.plus_counts[i - 1]

    def minus(self, i: int) -> int:
        return self.minus_counts[i - 1]

    def cross(self, i: int, j: int) -> int:
        return self.cross_counts[(i, j)]


def stats(c: Clan) -> ClanStats:
    """Counts of signs and matchings among the first ``i`` positions.

    A matching is counted by ``plus``/``minus`` only once both endpoints are
    among the first ``i`` positions; ``cross(i, j)`` counts matchings with left
    end ``<= i`` and right end ``> j``.
    """
    c = as_clan(c)
    n = c.n
    plus, minus = [], []
    np_ = nm = 0
    closed = 0
    for i in range(1, n + 1):
        e = c.entries[i - 1]
        if e == "+":
            np_ += 1
        elif e == "-":
            nm += 1
        elif e < i:
            closed += 1
        plus.append(np_ + closed)
        minus.append(nm + closed)
    cross = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            cross[(i, j)] = sum(1 for a, b in c.matchings if a <= i and b > j)
    return ClanStats(length(c), tuple(plus), tuple(minus), cross)


def underlying_involution(c: Clan) -> tuple[int, ...]:
    """One-line notation: signs are fixed points, matched pairs swap."""
    c = as_clan(c)
    return tuple(i if e in ("+", "-") else e for i, e in enumerate(c.entries, start=1))


def to_dict(c: Clan) -> dict:
    entries = []
    for e in c.entries:
        if e in ("+", "-"):
            entries.append({"kind": e})
        else:
            entries.append({"kind": "m", "partner": e})
    return {"n": c.n, "entries": entries}


def from_dict(d: dict) -> Clan:
    entries: list[Entry] = []
    for item in d["entries"]:
        kind = item["kind"]
        if kind in ("+", "-"):
            entries.append(kind)
        elif kind == "m":
            entries.append(int(item["partner"]))
        else:
            raise BadToken(f"unknown entry kind {kind!r}")
    if len(entries) != d["n"]:
        raise ClanError(f"n={d['n']} but {len(entries)} entries given")
    return Clan(tuple(entries))


def to_json(c: Clan) -> str:
    return json.dumps(to_dict(c), sort_keys=True)


def from_json(text: str) -> Clan:
    return from_dict(json.loads(text))
