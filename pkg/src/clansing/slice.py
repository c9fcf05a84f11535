"""The affine space of matrices transversal to the orbit of a clan.

``generic_matrix(alpha)`` places the forced ``1``/``-1`` entries, zeroes out
everything the normal form pins down, and leaves the rest as coordinates
``z_{r,c}``.  A pair of interleaved matchings ``(i<k), (j<l)`` with
``i<j<k<l`` ties the entry at ``(l, w(k))`` to minus the entry at
``(l, w(i))``.

>>> w_alpha(parse("122133"))
(1, 2, 5, 4, 3, 6)
>>> free_variable_count(parse("1+12-2"))
5
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import Polynomial, Ring
from .clans import Clan, as_clan
from .errors import NonConstantDeterminant

__all__ = [
    "Entry", "SymbolicMatrix", "w_alpha", "generic_matrix", "base_point",
    "free_variable_count", "determinant", "inverse", "var_name",
    "poly_det", "poly_minors", "format_matrix", "format_entry", "matrix_to_json",
    "rational_inverse",
]

PolyMatrix = tuple[tuple[Polynomial, ...], ...]


def var_name(r: int, c: int) -> str:
    return f"z_{{{r},{c}}}"


@dataclass(frozen=True)
class Entry:
    """A slice-matrix entry: ``coef`` times the variable at ``var`` (or just
    ``coef`` when ``var`` is None).  ``coef == 0`` means a forced zero."""
    coef: int = 0
    var: tuple[int, int] | None = None

    @property
    def kind(self) -> str:
        if self.var is None:
            return {0: "Zero", 1: "One", -1: "MinusOne"}[self.coef]
        return "Var" if self.coef == 1 else "MinusVar"


ZERO = Entry(0)


def w_alpha(c: Clan | str) -> tuple[int, ...]:
    """The permutation assigning columns to positions, in one-line notation.

    ``1..p`` go left to right to ``+``'s and left ends; ``p+1..n`` go to
    ``-``'s in reading order, a right end taking the next free value the
    moment its left end is read.
    """
    c = as_clan(c)
    p, n = c.p, c.n
    w = [0] * (n + 1)
    nxt_plus = 1
    nxt_minus = p + 1
    for i in range(1, n + 1):
        e = c.entries[i - 1]
        if e == "+":
            w[i] = nxt_plus
            nxt_plus += 1
        elif e == "-":
            w[i] = nxt_minus
            nxt_minus += 1
        elif e > i:
            w[i] = nxt_plus
            nxt_plus += 1
            w[e] = nxt_minus
            nxt_minus += 1
    return tuple(w[1:])


@dataclass(frozen=True)
class SymbolicMatrix:
    clan: Clan
    w: tuple[int, ...]
    entries: tuple[tuple[Entry, ...], ...]
    variables: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def ring(self) -> Ring:
        return _ring_for(self.variables)

    def var_index(self, pos: tuple[int, int]) -> int:
        return self.variables.index(pos)

    def entry(self, r: int, c: int) -> Entry:
        return self.entries[r - 1][c - 1]

    def pivots(self) -> dict[int, int]:
        """Column -> row of its northmost 1."""
        out = {}
        for col in range(1, self.n + 1):
            for row in range(1, self.n + 1):
                e = self.entry(row, col)
                if e.var is None and e.coef == 1:
                    out[col] = row
                    break
        return out

    def polys(self) -> PolyMatrix:
        ring = self.ring
        idx = {v: k for k, v in enumerate(self.variables)}
        gens = ring.gens()
        rows = []
        for row in self.entries:
            out = []
            for e in row:
                if e.var is None:
                    out.append(ring.const(e.coef))
                else:
                    out.append(gens[idx[e.var]].scale(e.coef))
            rows.append(tuple(out))
        return tuple(rows)

    def evaluate(self, values: Sequence[Fraction] | None = None) -> tuple[tuple[Fraction, ...], ...]:
        vals = dict(zip(self.variables, values)) if values is not None else {}
        return tuple(
            tuple(Fraction(e.coef) * (vals.get(e.var, 0) if e.var else 1) for e in row)
            for row in self.entries
        )

    def pretty(self) -> str:
        return format_matrix(self.polys())

    def to_json_obj(self) -> dict:
        rows = []
        for row in self.entries:
            rows.append([{"coef": e.coef, "var": list(e.var) if e.var else None} for e in row])
        return {"clan": str(self.clan), "w": list(self.w), "entries": rows,
                "variables": [list(v) for v in self.variables]}


@lru_cache(maxsize=None)
def _ring_for(variables: tuple[tuple[int, int], ...]) -> Ring:
    return Ring(tuple(var_name(r, c) for r, c in variables))


@lru_cache(maxsize=4096)
def _generic_matrix(c: Clan) -> SymbolicMatrix:
    n, p = c.n, c.p
    w = (0,) + w_alpha(c)
    # None marks a not-yet-decided entry
    grid: list[list[Entry | None]] = [[None] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        e = c.entries[i - 1]
        if e in ("+", "-"):
            grid[i][w[i]] = Entry(1)
        elif e > i:
            grid[i][w[i]] = Entry(1)
            grid[i][w[e]] = Entry(1)
        else:
            grid[i][w[e]] = Entry(-1)
            grid[i][w[i]] = Entry(1)

    def is_one(r, col):
        g = grid[r][col]
        return g is not None and g.var is None and g.coef == 1

    def is_minus(r, col):
        g = grid[r][col]
        return g is not None and g.var is None and g.coef == -1

    pivot_row = {}
    for col in range(1, n + 1):
        pivot_row[col] = next(r for r in range(1, n + 1) if is_one(r, col))

    zero: set[tuple[int, int]] = set()
    for block in (range(1, p + 1), range(p + 1, n + 1)):
        cols = list(block)
        left_block = block.start == 1
        # same row as a pivot (fixed entries are never overwritten below)
        for col in cols:
            for cc in cols:
                zero.add((pivot_row[col], cc))
        for col in cols:
            pr = pivot_row[col]
            # above the pivot
            for r in range(1, pr):
                zero.add((r, col))
            # between the pivot and its partner entry lower in the column
            if left_block:
                partner = next((r for r in range(pr + 1, n + 1) if is_minus(r, col)), None)
            else:
                partner = next((r for r in range(pr + 1, n + 1) if is_one(r, col)), None)
            if partner is not None:
                for r in range(pr + 1, partner):
                    zero.add((r, col))
                # right of the -1 (left block) or of the second 1 (right block)
                for cc in cols:
                    if cc > col:
                        zero.add((partner, cc))

    for (r, col) in zero:
        if grid[r][col] is None:
            grid[r][col] = ZERO

    ties: dict[tuple[int, int], tuple[int, int]] = {}
    ms = c.matchings
    for (i, k) in ms:
        for (j, l) in ms:
            if i < j < k < l:
                src, dst = (l, w[i]), (l, w[k])
                if grid[src[0]][src[1]] is not None or grid[dst[0]][dst[1]] is not None:
                    raise AssertionError(f"1212 tie at {src}/{dst} hits a fixed entry in {c}")
                ties[dst] = src

    variables = []
    for r in range(1, n + 1):
        for col in range(1, n + 1):
            if grid[r][col] is None and (r, col) not in ties:
                grid[r][col] = Entry(1, (r, col))
                variables.append((r, col))
    for dst, src in ties.items():
        grid[dst[0]][dst[1]] = Entry(-1, src)

    entries = tuple(tuple(grid[r][col] for col in range(1, n + 1)) for r in range(1, n + 1))
    return SymbolicMatrix(c, w[1:], entries, tuple(variables))


def generic_matrix(c: Clan | str) -> SymbolicMatrix:
    return _generic_matrix(as_clan(c))


def base_point(c: Clan | str) -> tuple[tuple[Fraction, ...], ...]:
    """The generic matrix with every coordinate set to zero."""
    return generic_matrix(c).evaluate()


def free_variable_count(c: Clan | str) -> int:
    return len(generic_matrix(c).variables)


# -- determinants and minors of polynomial matrices ---------------------------

def poly_minors(mat: Sequence[Sequence[Polynomial]], k: int, ring: Ring,
                rows: Sequence[int] | None = None, cols: Sequence[int] | None = None
                ) -> dict[tuple[tuple[int, ...], tuple[int, ...]], Polynomial]:
    """All ``k x k`` minors, keyed by (row tuple, column tuple), 0-based.

    Laplace expansion along the first chosen row, memoizing sub-minors so that
    minors sharing rows and columns are computed once.
    """
    rows = list(range(len(mat))) if rows is None else list(rows)
    cols = list(range(len(mat[0]) if mat else 0)) if cols is None else list(cols)
    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], Polynomial] = {}
    zero = ring.zero()

    def det(rs: tuple[int, ...], cs: tuple[int, ...]) -> Polynomial:
        if not rs:
            return ring.one()
        hit = memo.get((rs, cs))
        if hit is not None:
            return hit
        r0, rest = rs[0], rs[1:]
        acc = zero
        for idx, c in enumerate(cs):
            a = mat[r0][c]
            if a.is_zero():
                continue
            sub = det(rest, cs[:idx] + cs[idx + 1:])
            if sub.is_zero():
                continue
            term = a * sub
            acc = acc - term if idx % 2 else acc + term
        memo[(rs, cs)] = acc
        return acc

    import itertools
    out = {}
    for rs in itertools.combinations(rows, k):
        for cs in itertools.combinations(cols, k):
            out[(rs, cs)] = det(rs, cs)
    return out


def poly_det(mat: Sequence[Sequence[Polynomial]], ring: Ring) -> Polynomial:
    n = len(mat)
    return poly_minors(mat, n, ring)[(tuple(range(n)), tuple(range(n)))]


def determinant(c: Clan | str) -> Fraction:
    """The determinant of the generic matrix, which is a nonzero constant."""
    m = generic_matrix(c)
    d = poly_det(m.polys(), m.ring)
    if d.is_zero() or not d.is_constant():
        raise NonConstantDeterminant(f"det M_{m.clan} = {d}")
    return d.constant_term()


@lru_cache(maxsize=4096)
def _inverse(c: Clan) -> PolyMatrix:
    m = generic_matrix(c)
    ring = m.ring
    mat = m.polys()
    n = m.n
    d = determinant(c)
    cof = poly_minors(mat, n - 1, ring)
    full = tuple(range(n))
    inv = []
    for i in range(n):
        row = []
        for j in range(n):
            # inverse[i][j] = (-1)^(i+j) minor(delete row j, col i) / det
            key = (full[:j] + full[j + 1:], full[:i] + full[i + 1:])
            val = cof[key] if n > 1 else ring.one()
            row.append(val.scale(Fraction((-1) ** (i + j)) / d))
        inv.append(tuple(row))
    return tuple(inv)


def inverse(c: Clan | str) -> PolyMatrix:
    """Adjugate over the constant determinant: a matrix of polynomials."""
    return _inverse(as_clan(c))


def rational_inverse(mat: Sequence[Sequence[Fraction]]) -> list[list[Fraction]] | None:
    """Gauss-Jordan inverse, or None when singular."""
    n = len(mat)
    a = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


# -- rendering ----------------------------------------------------------------

def format_entry(x) -> str:
    if isinstance(x, Polynomial):
        return x.to_str(style="tex")
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def format_matrix(mat) -> str:
    """Body of a LaTeX ``pmatrix``: four-space indent, ``&`` separators."""
    lines = ["    " + " & ".join(format_entry(x) for x in row) for row in mat]
    return " \\\\\n".join(lines)


def matrix_to_json(mat) -> list[list]:
    out = []
    for row in mat:
        r = []
        for x in row:
            r.append(x.to_json_obj() if isinstance(x, Polynomial) else str(Fraction(x)))
        out.append(r)
    return out
