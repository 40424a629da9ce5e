"""Truncated formal power series with exact rational coefficients.

A series carries its truncation order explicitly: ``PowerSeries([1, 1], 4)``
is ``1 + x + O(x^4)``. Arithmetic requires matching orders and never extends
precision on its own.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import ConstantTermNotOne, InternalInconsistency, OrderMismatch, ZeroConstantTerm

__all__ = [
    "PowerSeries",
    "series_add",
    "series_mul",
    "series_invert",
    "series_sqrt",
    "format_rational",
]

Scalar = Union[int, Fraction]


class PowerSeries:
    """Truncated power series ``sum c_k x^k + O(x^order)`` over the rationals."""

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Iterable[Scalar], order: int):
        if order < 1:
            raise ValueError("truncation order must be positive")
        coeffs = [Fraction(c) for c in coefficients][:order]
        coeffs += [Fraction(0)] * (order - len(coeffs))
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)
        self.order = order

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "PowerSeries":
        return cls([c], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def __repr__(self) -> str:
        terms = ", ".join(format_rational(c) for c in self.coefficients)
        return f"PowerSeries([{terms}], order={self.order})"

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            if other.order != self.order:
                raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Rational)):
            return PowerSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PowerSeries((a + b for a, b in zip(self, other)), self.order)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries((-a for a in self), self.order)

    def __sub__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PowerSeries((a - b for a, b in zip(self, other)), self.order)

    def __rsub__(self, other) -> "PowerSeries":
        return (-self) + other

    def __mul__(self, other) -> "PowerSeries":
        if isinstance(other, (int, Rational)):
            return PowerSeries((a * other for a in self), self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.order
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * n
        for i, ai in enumerate(a):
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PowerSeries":
        if isinstance(other, (int, Rational)):
            return PowerSeries((a / other for a in self), self.order)
        return self * self._coerce(other).invert()

    def __pow__(self, k: int) -> "PowerSeries":
        if k < 0:
            return self.invert() ** (-k)
        out = PowerSeries.constant(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def truncate(self, order: int) -> "PowerSeries":
        """Re-express at a different order (padding with zeros when longer)."""
        return PowerSeries(self.coefficients[:order], order)

    def invert(self) -> "PowerSeries":
        """Multiplicative inverse by the triangular coefficient recurrence."""
        a = self.coefficients
        if a[0] == 0:
            raise ZeroConstantTerm("cannot invert a series with zero constant term")
        n = self.order
        b = [Fraction(0)] * n
        b[0] = 1 / a[0]
        for k in range(1, n):
            acc = sum((a[i] * b[k - i] for i in range(1, k + 1)), Fraction(0))
            b[k] = -acc / a[0]
        return PowerSeries(b, n)

    def sqrt(self) -> "PowerSeries":
        """Square root with constant term 1, by Newton iteration
        ``b <- (b + a / b) / 2`` with the precision doubling each round."""
        if self.coefficients[0] != 1:
            raise ConstantTermNotOne("series_sqrt needs constant term 1")
        target = self.order
        prec = 1
        b = PowerSeries([1], 1)
        while prec < target:
            prec = min(2 * prec, target)
            a = self.truncate(prec)
            b = b.truncate(prec)
            b = (b + a * b.invert()) / 2
        return b.truncate(target)

    def mul_x(self) -> "PowerSeries":
        """Multiply by x (the top coefficient falls off)."""
        return PowerSeries((Fraction(0),) + self.coefficients[:-1], self.order)

    def div_x(self) -> "PowerSeries":
        """Divide by x; the constant term must vanish.

        The result loses one coefficient of precision, so its order is one
        less than the input's.
        """
        if self.coefficients[0] != 0:
            raise InternalInconsistency(
                f"dividing by x requires a zero constant term, got {self.coefficients[0]}"
            )
        if self.order < 2:
            raise ValueError("order too small to divide by x")
        return PowerSeries(self.coefficients[1:], self.order - 1)

    def scale(self, factor: Scalar) -> "PowerSeries":
        """Substitute ``x -> factor * x``."""
        f = Fraction(factor)
        return PowerSeries((c * f**k for k, c in enumerate(self.coefficients)), self.order)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)

    def as_integers(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integral coefficients")
        return [int(c) for c in self.coefficients]


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a + b


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def series_invert(a: PowerSeries) -> PowerSeries:
    return a.invert()


def series_sqrt(a: PowerSeries) -> PowerSeries:
    return a.sqrt()


def format_rational(c: Union[int, Fraction]) -> str:
    """``"p/q"`` for proper rationals, bare integer otherwise."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def coefficients_equal(a: Sequence[Fraction], b: Sequence[Fraction], what: str) -> None:
    """Raise InternalInconsistency when two constructions disagree."""
    if list(a) != list(b):
        raise InternalInconsistency(f"{what}: {list(map(format_rational, a))} != {list(map(format_rational, b))}")
