"""Graded dimension counts for twisted free modules and signed combinations of them.

Everything here is exact: binomials are Python integers and Hilbert polynomial
coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Union


class NotArtinian(ValueError):
    """Raised when an h-vector is requested for a module of positive dimension."""


@lru_cache(maxsize=1 << 16)
def dim_polyring(num_vars: int, v: int) -> int:
    """Number of monomials of degree ``v`` in ``num_vars`` variables."""
    if v < 0:
        return 0
    return comb(v + num_vars - 1, num_vars - 1)


@dataclass(frozen=True)
class FreeModule:
    """Direct sum of copies of R(a), one for each entry ``a`` of ``twists``."""

    ambient_vars: int
    twists: tuple = ()

    def __post_init__(self):
        if self.ambient_vars < 1:
            raise ValueError("ambient_vars must be positive")
        object.__setattr__(self, "twists", tuple(sorted(map(int, self.twists))))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def shifted(self, k: int) -> "FreeModule":
        """The module twisted by ``k``, i.e. every R(a) becomes R(a+k)."""
        return FreeModule(self.ambient_vars, tuple(a + k for a in self.twists))

    def dual(self) -> "FreeModule":
        return FreeModule(self.ambient_vars, tuple(-a for a in self.twists))

    def __add__(self, other: "FreeModule") -> "FreeModule":
        if other.ambient_vars != self.ambient_vars:
            raise ValueError("direct sum over different polynomial rings")
        return FreeModule(self.ambient_vars, self.twists + other.twists)

    def counts(self) -> Counter:
        return Counter(self.twists)


def dim_free(F: FreeModule, v: int) -> int:
    return sum(dim_polyring(F.ambient_vars, v + a) for a in F.twists)


Operand = Union[FreeModule, "DimExpr"]


@dataclass(frozen=True, eq=False)
class DimExpr:
    """Formal signed sum ``value(v) = sum(coeff * operand(v + shift))``.

    Operands are free modules or previously built expressions, so the operand
    graph is acyclic by construction.  The whole tree is flattened once into a
    signed multiset of twists of R, which is what :func:`evaluate` and
    :func:`hilbert_polynomial` work from.
    """

    ambient_vars: int
    terms: tuple = ()
    label: str = field(default="", compare=False)

    # -- construction helpers -------------------------------------------------
    @classmethod
    def zero(cls, ambient_vars: int) -> "DimExpr":
        return cls(ambient_vars, ())

    @classmethod
    def of(cls, F: FreeModule, label: str = "") -> "DimExpr":
        return cls(F.ambient_vars, ((1, F, 0),), label)

    @classmethod
    def combine(cls, ambient_vars: int, terms: Iterable, label: str = "") -> "DimExpr":
        """Build from ``(coeff, operand, shift)`` triples."""
        checked = []
        for coeff, operand, shift in terms:
            if operand.ambient_vars != ambient_vars:
                raise ValueError("operand lives over a different polynomial ring")
            checked.append((int(coeff), operand, int(shift)))
        return cls(ambient_vars, tuple(checked), label)

    def shift(self, k: int) -> "DimExpr":
        """Expression whose value at v is this one's value at v + k."""
        return DimExpr(self.ambient_vars, ((1, self, k),))

    def named(self, label: str) -> "DimExpr":
        return DimExpr(self.ambient_vars, self.terms, label)

    def __add__(self, other: "DimExpr") -> "DimExpr":
        return DimExpr.combine(self.ambient_vars, [(1, self, 0), (1, other, 0)])

    def __sub__(self, other: "DimExpr") -> "DimExpr":
        return DimExpr.combine(self.ambient_vars, [(1, self, 0), (-1, other, 0)])

    def __neg__(self) -> "DimExpr":
        return DimExpr(self.ambient_vars, ((-1, self, 0),))

    def __rmul__(self, k: int) -> "DimExpr":
        return DimExpr(self.ambient_vars, ((int(k), self, 0),))

    def __call__(self, v: int) -> int:
        return evaluate(self, v)

    def values(self, lo: int, hi: int) -> list:
        """[self(lo), ..., self(hi)], sharing one binomial table across degrees."""
        if hi < lo:
            return []
        flat = self.flat
        top = hi + max(flat, default=0)
        table = [dim_polyring(self.ambient_vars, k) for k in range(0, max(top, -1) + 1)]
        out = [0] * (hi - lo + 1)
        for a, c in flat.items():
            for v in range(max(lo, -a), hi + 1):
                out[v - lo] += c * table[v + a]
        return out

    # -- flattened form -------------------------------------------------------
    @cached_property
    def flat(self) -> Mapping[int, int]:
        """Signed multiset {twist a: coefficient of R(a)} equivalent to this tree."""
        out: Counter = Counter()
        for coeff, operand, shift in self.terms:
            if isinstance(operand, FreeModule):
                for a in operand.twists:
                    out[a + shift] += coeff
            else:
                for a, c in operand.flat.items():
                    out[a + shift] += coeff * c
        return {a: c for a, c in sorted(out.items()) if c}

    def __repr__(self):
        name = self.label or "DimExpr"
        return f"<{name} over {self.ambient_vars} vars, {len(self.flat)} twists>"


def evaluate(e: DimExpr, v: int) -> int:
    N = e.ambient_vars
    return sum(c * dim_polyring(N, v + a) for a, c in e.flat.items())


# -- Hilbert polynomials -------------------------------------------------------


def _binomial_numerator(a: int, num_vars: int) -> list:
    """Integer coefficients (ascending) of (v + a + 1)(v + a + 2)...(v + a + N - 1)."""
    p = [1]
    for k in range(1, num_vars):
        c = a + k
        p = [c * x + y for x, y in zip(p + [0], [0] + p)]
    return p


def stability_bound(e: DimExpr) -> int:
    """A degree from which on ``e`` agrees with its Hilbert polynomial."""
    return max((-a for a in e.flat), default=0)


@dataclass(frozen=True)
class HilbertPolynomial:
    coefficients: tuple  # ascending powers of v, exact rationals
    stability_bound: int

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, v) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * v + c
        return acc

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c:
                mono = "" if k == 0 else ("v" if k == 1 else f"v^{k}")
                if mono and c in (1, -1):
                    parts.append(("-" if c < 0 else "") + mono)
                else:
                    parts.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def hilbert_polynomial(e: DimExpr) -> HilbertPolynomial:
    N = e.ambient_vars
    total = [0] * N
    for a, c in e.flat.items():
        for k, x in enumerate(_binomial_numerator(a, N)):
            total[k] += c * x
    while total and total[-1] == 0:
        total.pop()
    d = factorial(N - 1)
    return HilbertPolynomial(tuple(Fraction(x, d) for x in total), stability_bound(e))


def h_vector(e: DimExpr) -> tuple:
    """Hilbert function (H(0), ..., H(socle)) of an Artinian graded module."""
    hp = hilbert_polynomial(e)
    if not hp.is_zero():
        raise NotArtinian(f"Hilbert polynomial is {hp}, not zero")
    values = [evaluate(e, v) for v in range(0, max(hp.stability_bound, 0) + 1)]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def negative_degrees(e: DimExpr, lo: int, hi: int) -> list:
    """Degrees in [lo, hi] where ``e`` evaluates negative (a sign of bad input)."""
    return [v for v in range(lo, hi + 1) if evaluate(e, v) < 0]


# -- independent oracle ----------------------------------------------------------


def series_oracle(numerator_twists, num_vars: int, v_max: int, v_min: int = 0) -> list:
    """Coefficients of ``sum(c * t**(-a)) / (1 - t)**N`` for degrees v_min..v_max.

    ``numerator_twists`` is a mapping {a: c} or an iterable of twists (each
    counted +1) or of ``(c, a)`` pairs.  The division is carried out by N rounds
    of running sums on a truncated Laurent series, never touching binomials.
    """
    if v_max < v_min:
        return []
    if isinstance(numerator_twists, Mapping):
        items = list(numerator_twists.items())
    else:
        items = []
        for x in numerator_twists:
            if isinstance(x, tuple):
                c, a = x
                items.append((a, c))
            else:
                items.append((x, 1))
    lowest = min([-a for a, _ in items] + [v_min])
    series = [0] * (v_max - lowest + 1)
    for a, c in items:
        if -a <= v_max:
            series[-a - lowest] += c
    for _ in range(num_vars):
        running = 0
        for i, x in enumerate(series):
            running += x
            series[i] = running
    return series[v_min - lowest:]
