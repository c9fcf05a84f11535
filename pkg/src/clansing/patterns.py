"""Pattern inclusion between clans, interval pattern containment, and the
pattern criterion for smooth orbit closures.

Indices in this module are 1-based, like clan positions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .clans import Clan, as_clan, length
from .errors import BadIndices, IllFormedCompletion

__all__ = [
    "PatternWitness", "IntervalEmbedding", "includes", "avoids_all",
    "MCGOVERN_PATTERNS", "mcgovern_smooth", "phi", "witnesses",
    "interval_contains", "find_interval_embeddings",
]

MCGOVERN_PATTERNS: tuple[Clan, ...] = tuple(
    as_clan(s) for s in ("1+-1", "1-+1", "1212", "1+221", "1-221", "122+1", "122-1", "122331")
)


@dataclass(frozen=True)
class PatternWitness:
    indices: tuple[int, ...]


def _fits(big: Clan, small: Clan, idx: Sequence[int], k: int) -> bool:
    """Whether position ``k`` of ``small`` can sit at ``idx[k]`` given the
    earlier choices ``idx[:k]``."""
    e = small.entries[k]
    b = big.entries[idx[k] - 1]
    if e in ("+", "-"):
        return b == e
    if b in ("+", "-"):
        return False
    if e > k + 1:
        # left end: its partner in big must come later
        return b > idx[k]
    return b == idx[e - 1]


def witnesses(big: Clan | str, small: Clan | str) -> Iterable[tuple[int, ...]]:
    """Every index tuple witnessing ``small`` inside ``big``, in lexicographic order."""
    big, small = as_clan(big), as_clan(small)
    m, n = small.n, big.n
    idx = [0] * m

    def rec(k: int, start: int):
        if k == m:
            yield tuple(idx)
            return
        for pos in range(start, n - (m - k) + 2):
            idx[k] = pos
            if _fits(big, small, idx, k):
                yield from rec(k + 1, pos + 1)

    if m <= n:
        yield from rec(0, 1)


def includes(big: Clan | str, small: Clan | str) -> PatternWitness | None:
    """The lexicographically least witness of ``small`` in ``big``, or ``None``."""
    for w in witnesses(big, small):
        return PatternWitness(w)
    return None


def avoids_all(c: Clan | str, patterns: Iterable[Clan | str]) -> bool:
    return all(includes(c, pat) is None for pat in patterns)


def mcgovern_smooth(c: Clan | str) -> bool:
    """True iff ``c`` avoids all eight patterns characterising smooth closures."""
    return avoids_all(c, MCGOVERN_PATTERNS)


def _check_indices(indices: Sequence[int], n: int, m: int) -> tuple[int, ...]:
    idx = tuple(indices)
    if len(idx) != m:
        raise BadIndices(f"expected {m} indices, got {len(idx)}")
    if any(b <= a for a, b in zip(idx, idx[1:])) or (idx and not 1 <= idx[0] <= idx[-1] <= n):
        raise BadIndices(f"indices {idx} are not strictly increasing within 1..{n}")
    return idx


def phi(alpha: Clan | str, theta: Clan | str, indices: Sequence[int]) -> Clan:
    """The clan agreeing with ``alpha`` on ``indices`` and with ``theta`` elsewhere."""
    alpha, theta = as_clan(alpha), as_clan(theta)
    idx = _check_indices(indices, theta.n, alpha.n)
    inside = set(idx)
    for a, b in theta.matchings:
        if (a in inside) != (b in inside):
            raise IllFormedCompletion(
                f"matching ({a},{b}) of {theta} has exactly one end among {idx}")
    entries = list(theta.entries)
    for k, pos in enumerate(idx):
        e = alpha.entries[k]
        entries[pos - 1] = e if e in ("+", "-") else idx[e - 1]
    return Clan(tuple(entries))


def _witnesses_at(big: Clan, small: Clan, idx: tuple[int, ...]) -> bool:
    return all(_fits(big, small, idx, k) for k in range(small.n))


@dataclass(frozen=True)
class IntervalEmbedding:
    small: tuple[Clan, Clan]  # (alpha, gamma)
    big: tuple[Clan, Clan]  # (beta, theta)
    indices: tuple[int, ...]
    length_diff: int

    def to_json_obj(self) -> dict:
        return {
            "small": [str(c) for c in self.small],
            "big": [str(c) for c in self.big],
            "indices": list(self.indices),
            "lengthDiff": self.length_diff,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, d: dict) -> "IntervalEmbedding":
        a, g = (as_clan(s) for s in d["small"])
        b, t = (as_clan(s) for s in d["big"])
        return cls((a, g), (b, t), tuple(d["indices"]), int(d["lengthDiff"]))


def _is_interval(lo: Clan, hi: Clan) -> bool:
    from .order import leq
    return lo.signature == hi.signature and leq(lo, hi)


def interval_contains(small: tuple, big: tuple, indices: Sequence[int]) -> bool:
    """Whether ``indices`` realise ``[alpha, gamma]`` inside ``[beta, theta]``:
    a common witness, agreement off the indices, and equal length gaps."""
    alpha, gamma = (as_clan(c) for c in small)
    beta, theta = (as_clan(c) for c in big)
    if alpha.n != gamma.n or beta.n != theta.n:
        return False
    try:
        idx = _check_indices(indices, theta.n, gamma.n)
    except BadIndices:
        return False
    if not (_is_interval(alpha, gamma) and _is_interval(beta, theta)):
        return False
    if not (_witnesses_at(theta, gamma, idx) and _witnesses_at(beta, alpha, idx)):
        return False
    inside = set(idx)
    for pos in range(1, theta.n + 1):
        if pos not in inside and theta.entries[pos - 1] != beta.entries[pos - 1]:
            return False
    return length(theta) - length(beta) == length(gamma) - length(alpha)


def merely_embeds(alpha: Clan, gamma: Clan, theta: Clan, idx: tuple[int, ...]) -> Clan | None:
    """``Phi(alpha)`` when ``idx`` witnesses ``gamma`` in ``theta``, else ``None``."""
    if not _witnesses_at(theta, gamma, idx):
        return None
    return phi(alpha, theta, idx)


def find_interval_embeddings(theta: Clan | str, small: tuple) -> list[IntervalEmbedding]:
    """All embeddings of ``[alpha, gamma]`` into ``[Phi(alpha), theta]``; an
    empty list means ``theta`` interval-avoids the small interval."""
    theta = as_clan(theta)
    alpha, gamma = (as_clan(c) for c in small)
    if not _is_interval(alpha, gamma):
        return []
    diff = length(gamma) - length(alpha)
    out = []
    for idx in witnesses(theta, gamma):
        beta = phi(alpha, theta, idx)
        if length(theta) - length(beta) != diff:
            continue
        if interval_contains((alpha, gamma), (beta, theta), idx):
            out.append(IntervalEmbedding((alpha, gamma), (beta, theta), idx, diff))
    return out
