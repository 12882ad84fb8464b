"""Periodic coefficient rings R(d).

``R(d)`` is ``Q[q]/(q^d - 1)`` for finite ``d`` and the Laurent ring
``Q[q, q^-1]`` for ``d = INF``.  Rank values of every rank function in the
package are :class:`CoeffPoly` instances.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

INF = "inf"

Period = Union[int, str]


class PeriodError(ValueError):
    pass


def parse_period(d) -> Period:
    if d in (INF, "infinity", "oo", None) or (isinstance(d, float) and d == float("inf")):
        return INF
    try:
        d = int(d)
    except (TypeError, ValueError):
        raise PeriodError(f"bad period {d!r}") from None
    if d < 1:
        raise PeriodError("finite periods must be >= 1")
    return d


def _qfrac(x) -> Fraction:
    return Fraction(x.strip()) if isinstance(x, str) else Fraction(x)


def normalize(raw: Iterable[tuple[int, object]], period: Period) -> "CoeffPoly":
    period = parse_period(period)
    acc: dict[int, Fraction] = {}
    for e, c in raw:
        e = int(e)
        if period != INF:
            e %= period
        acc[e] = acc.get(e, Fraction(0)) + _qfrac(c)
    return CoeffPoly._make(period, acc)


class CoeffPoly:
    """Immutable element of R(d) in canonical form."""

    __slots__ = ("period", "_c")

    def __init__(self, coeffs=None, period: Period = INF):
        p = normalize((coeffs or {}).items() if isinstance(coeffs, dict) else (coeffs or ()), period)
        self.period = p.period
        self._c = p._c

    @classmethod
    def _make(cls, period, acc: dict) -> "CoeffPoly":
        obj = object.__new__(cls)
        obj.period = period
        obj._c = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        return obj

    @classmethod
    def const(cls, c, period: Period = INF) -> "CoeffPoly":
        return normalize([(0, c)], period)

    @classmethod
    def monomial(cls, e: int, c=1, period: Period = INF) -> "CoeffPoly":
        return normalize([(e, c)], period)

    @classmethod
    def zero(cls, period: Period = INF) -> "CoeffPoly":
        return cls._make(parse_period(period), {})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def items(self):
        return self._c

    def __getitem__(self, e: int) -> Fraction:
        if self.period != INF:
            e %= self.period
        return dict(self._c).get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return all(e == 0 for e, _ in self._c)

    def constant(self) -> Fraction:
        return self[0]

    # -- ring structure
    def _same(self, other: "CoeffPoly"):
        if not isinstance(other, CoeffPoly):
            raise TypeError(f"expected CoeffPoly, got {type(other).__name__}")
        if self.period != other.period:
            raise PeriodError(f"period mismatch: {self.period} vs {other.period}")

    def _lift(self, other) -> "CoeffPoly":
        if isinstance(other, CoeffPoly):
            return other
        return CoeffPoly.const(other, self.period)

    def __add__(self, other):
        other = self._lift(other)
        self._same(other)
        return normalize(self._c + other._c, self.period)

    __radd__ = __add__

    def __neg__(self):
        return CoeffPoly._make(self.period, {e: -c for e, c in self._c})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, CoeffPoly):
            return self.scale(other)
        self._same(other)
        return normalize([(e1 + e2, c1 * c2) for e1, c1 in self._c for e2, c2 in other._c],
                         self.period)

    __rmul__ = __mul__

    def scale(self, c) -> "CoeffPoly":
        c = _qfrac(c)
        return CoeffPoly._make(self.period, {e: c * x for e, x in self._c})

    def shift(self, k: int) -> "CoeffPoly":
        """Multiply by ``q^k``."""
        return normalize([(e + k, c) for e, c in self._c], self.period)

    def __eq__(self, other):
        if isinstance(other, CoeffPoly):
            return self.period == other.period and self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == CoeffPoly.const(other, self.period)
        return NotImplemented

    def __hash__(self):
        return hash((self.period, self._c))

    # -- order
    def is_nonneg(self) -> bool:
        return all(c >= 0 for _, c in self._c)

    def __ge__(self, other):
        return (self - self._lift(other)).is_nonneg()

    def __le__(self, other):
        return (self._lift(other) - self).is_nonneg()

    def at_one(self) -> Fraction:
        return sum((c for _, c in self._c), Fraction(0))

    # -- reduction and division
    def reduce_period(self, target: Period) -> "CoeffPoly":
        return reduce_period(self, target)

    def __repr__(self):
        return f"CoeffPoly({self}, d={self.period})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in self._c:
            cs = str(c)
            if e == 0:
                term = cs
            else:
                mono = "q" if e == 1 else f"q^{e}"
                term = mono if c == 1 else ("-" + mono if c == -1 else f"{cs}*{mono}")
            parts.append(term)
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def to_json(self):
        return {"period": self.period, "coeffs": [[e, str(c)] for e, c in self._c]}

    @classmethod
    def from_json(cls, data) -> "CoeffPoly":
        return normalize([(e, c) for e, c in data["coeffs"]], data["period"])


def arith(a: CoeffPoly, b, op: str, k: int = 0) -> CoeffPoly:
    """Dispatch form of the ring operations (``add``, ``sub``, ``mul``, ``shift``, ``scale``)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "shift":
        return a.shift(k)
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown op {op!r}")


def is_nonneg(a: CoeffPoly) -> bool:
    return a.is_nonneg()


def divides(small: Period, big: Period) -> bool:
    if big == INF:
        return True
    if small == INF:
        return False
    return big % small == 0


def reduce_period(a: CoeffPoly, target: Period) -> CoeffPoly:
    target = parse_period(target)
    if target == a.period:
        return a
    if not divides(target, a.period):
        raise PeriodError(f"cannot reduce period {a.period} to {target}")
    return normalize(a.items(), target)


def one_plus_q_inverse(d: int) -> CoeffPoly:
    """Inverse of ``1 + q`` in R(d) for odd ``d``."""
    if d == INF or d % 2 == 0:
        raise PeriodError("1+q is invertible only for odd finite periods")
    return normalize([(i, Fraction((-1) ** i, 2)) for i in range(d)], d)


def alternating_tails_nonneg(a: CoeffPoly) -> bool:
    """Tail criterion for ``a = (1+q) phi`` with ``phi >= 0`` at infinite period."""
    if a.period != INF:
        raise PeriodError("tail criterion is stated for Laurent polynomials")
    if a.is_zero():
        return True
    c = a.coeffs
    lo, hi = min(c), max(c)
    for n in range(lo - 2, hi + 1):
        tail = sum((((-1) ** (e - n)) * x for e, x in c.items() if e >= n), Fraction(0))
        if tail < 0:
            return False
    return True


def divide_q_plus_1(a: CoeffPoly) -> tuple[CoeffPoly | None, bool]:
    """Return ``(phi, witness)`` with ``(1+q) phi = a``.

    ``phi`` is ``None`` when ``a`` is not divisible (only possible at infinite
    period).  ``witness`` says whether ``phi`` exists with nonnegative
    coefficients.
    """
    d = a.period
    if d != INF:
        if d % 2 == 0:
            raise PeriodError("division by 1+q is undefined for even periods")
        phi = a * one_plus_q_inverse(d)
        return phi, phi.is_nonneg()
    if a.is_zero():
        return a, True
    c = a.coeffs
    lo, hi = min(c), max(c)
    # synthetic division from the top degree: phi_{n-1} = a_n - phi_n
    phi: dict[int, Fraction] = {}
    carry = Fraction(0)
    for n in range(hi, lo, -1):
        carry = c.get(n, Fraction(0)) - carry
        phi[n - 1] = carry
    if c.get(lo, Fraction(0)) - carry != 0:
        return None, alternating_tails_nonneg(a)
    q = CoeffPoly._make(INF, phi)
    return q, q.is_nonneg()
