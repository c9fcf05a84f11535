"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Ring` is just an ordered tuple of variable names; a
:class:`Polynomial` maps exponent tuples (one slot per ring variable) to
nonzero :class:`~fractions.Fraction` coefficients.

>>> R = Ring(("x", "y"))
>>> x, y = R.gens()
>>> str((x + y) ** 2)
'x^2+2xy+y^2'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Callable, Mapping, Sequence

Monomial = tuple[int, ...]
Number = int | Fraction

__all__ = ["Ring", "Polynomial", "Monomial", "grevlex_key", "lex_key", "ORDERS", "parse_polynomial"]


def grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Monomial):
    return m


ORDERS: dict[str, Callable[[Monomial], object]] = {"grevlex": grevlex_key, "lex": lex_key}


@dataclass(frozen=True)
class Ring:
    """Polynomial ring over the rationals in the named variables."""
    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def gen(self, i: int | str) -> "Polynomial":
        if isinstance(i, str):
            i = self.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: Number) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def extend(self, name: str) -> "Ring":
        return Ring(self.names + (name,))


class Polynomial:
    """Immutable sparse polynomial.  Arithmetic requires a common ring."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Number] | None = None):
        self.ring = ring
        clean: dict[Monomial, Fraction] = {}
        if terms:
            n = ring.nvars
            for m, c in terms.items():
                if len(m) != n:
                    raise ValueError(f"exponent {m} does not fit ring of {n} variables")
                if c:
                    clean[m] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict[Monomial, Fraction]) -> "Polynomial":
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- basic predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.ring.nvars, Fraction(0))

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def variables_used(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def __len__(self) -> int:
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Number) -> "Polynomial":
        if not c:
            return self.ring.zero()
        c = Fraction(c)
        return Polynomial._raw(self.ring, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return self.ring.zero()
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    # -- orders, normalization ---------------------------------------------

    def sorted_terms(self, order: str = "grevlex") -> list[tuple[Monomial, Fraction]]:
        key = ORDERS[order]
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: str = "grevlex") -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=ORDERS[order])

    def leading_coefficient(self, order: str = "grevlex") -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: str = "grevlex") -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    def primitive(self, order: str = "grevlex") -> "Polynomial":
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.terms:
            return self
        den = reduce(lcm, (c.denominator for c in self.terms.values()), 1)
        num = reduce(gcd, (abs(c.numerator * (den // c.denominator)) for c in self.terms.values()), 0)
        f = Fraction(den, num)
        if self.leading_coefficient(order) < 0:
            f = -f
        return self.scale(f)

    # -- evaluation, substitution ------------------------------------------

    def evaluate(self, point: Sequence[Number]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def linear_part(self) -> dict[int, Fraction]:
        out = {}
        for m, c in self.terms.items():
            if sum(m) == 1:
                out[m.index(1)] = c
        return out

    def rename(self, target: Ring, index_map: Mapping[int, int]) -> "Polynomial":
        """Move into ``target``, sending variable ``i`` to ``index_map[i]``."""
        out: dict[Monomial, Fraction] = {}
        n = target.nvars
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                if k:
                    e[index_map[i]] += k
            t = tuple(e)
            out[t] = out.get(t, Fraction(0)) + c
        return Polynomial(target, out)

    def substitute(self, values: Mapping[int, Polynomial | Number]) -> "Polynomial":
        """Replace selected variables by polynomials or numbers."""
        result = self.ring.zero()
        for m, c in self.terms.items():
            keep = list(m)
            term = self.ring.const(c)
            for i, v in values.items():
                if m[i]:
                    keep[i] = 0
                    term = term * (v ** m[i] if isinstance(v, Polynomial) else self.ring.const(Fraction(v) ** m[i]))
            term = term * Polynomial._raw(self.ring, {tuple(keep): Fraction(1)})
            result = result + term
        return result

    # -- rendering ------------------------------------------------------------

    def to_str(self, order: str = "grevlex", style: str = "tex") -> str:
        """Render, e.g. ``z_{3,2}z_{5,5}+z_{4,2}z_{5,6}``.

        ``style`` is ``"tex"`` (juxtaposed factors, ``\\frac`` coefficients),
        ``"plain"`` (``*``-separated, ``a/b`` coefficients) or ``"m2"``.
        """
        if not self.terms:
            return "0"
        names = self.ring.names
        if style == "m2":
            names = tuple(_m2_name(s) for s in names)
        sep = "" if style == "tex" else "*"
        pieces = []
        for idx, (m, c) in enumerate(self.sorted_terms(order)):
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = sep.join(factors)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = _fmt_coeff(a, style)
            elif a == 1:
                body = mono
            else:
                body = _fmt_coeff(a, style) + sep + mono
            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(sign + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str(style='plain')!r})"

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self.ring.names),
            "terms": [[list(m), str(c)] for m, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_obj(cls, obj: dict, ring: Ring | None = None) -> "Polynomial":
        ring = ring or Ring(tuple(obj["vars"]))
        return cls(ring, {tuple(m): Fraction(c) for m, c in obj["terms"]})


def _fmt_coeff(a: Fraction, style: str) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    if style == "tex":
        return f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
    if style == "m2":
        return f"({a.numerator}/{a.denominator})"
    return f"{a.numerator}/{a.denominator}"


def _m2_name(name: str) -> str:
    m = re.fullmatch(r"(\w+)_\{(\d+),(\d+)\}", name)
    if m:
        return f"{m.group(1)}_({m.group(2)},{m.group(3)})"
    return name


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z](?:[A-Za-z0-9]|_\w)*(?:_\{\d+,\d+\})?)|(?P<op>[-+*^()]))")


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse ``"z_{3,2}*z_{5,5} + 1/2 z_{4,2}^2"``; juxtaposition multiplies."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None)

    def take():
        nonlocal i
        t = tokens[i]
        i += 1
        return t

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term().scale(sign)
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = factor()
        while True:
            k, v = peek()
            if (k, v) == ("op", "*"):
                take()
                acc = acc * factor()
            elif k in ("num", "var") or (k, v) == ("op", "("):
                acc = acc * factor()
            else:
                return acc

    def factor():
        base = atom()
        if peek() == ("op", "^"):
            take()
            k, v = take()
            if k != "num":
                raise ValueError("exponent must be a number")
            base = base ** int(v)
        return base

    def atom():
        k, v = take()
        if k == "num":
            return ring.const(Fraction(v))
        if k == "var":
            return ring.gen(v)
        if (k, v) == ("op", "("):
            e = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return e
        if (k, v) == ("op", "-"):
            return -factor()
        raise ValueError(f"unexpected token {v!r}")

    result = expr()
    if i != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return result
