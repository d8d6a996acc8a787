"""Truncated q-expansions with a fractional leading exponent.

A series is stored as ``q^leading * (c_0 + c_1 q + ... + c_N q^N)`` where
``leading`` is an exact rational and the c_n live either in the exact
rational domain (`fractions.Fraction`, the default everywhere) or in the
complex floating domain (used only for numeric evaluation and monodromy).

Truncation is knowledge, not padding: terms beyond ``q^(leading+N)`` are
unknown, and every arithmetic operation propagates the largest truncation
for which all contributing terms of its inputs are known.  Terms *below*
the leading exponent are genuinely zero.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import CannotExtend, NonConvergent, NonIntegralOffset

#: Truncation used by convenience constructors when none is given.
DEFAULT_TERMS = 64

_TWO_PI_I = 2j * math.pi


def _coerce(c):
    """Map a coefficient into one of the two supported domains."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, (float, complex)):
        return complex(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


@dataclass(frozen=True)
class QExpansion:
    """Immutable truncated series ``q^leading * sum(c_n q^n, n=0..N)``."""

    leading: Fraction
    coeffs: tuple

    @staticmethod
    def make(coeffs, leading=0) -> QExpansion:
        """Build a series from any iterable of rationals/ints/complex."""
        return QExpansion(Fraction(leading), tuple(_coerce(c) for c in coeffs))

    @staticmethod
    def zero(order: int = DEFAULT_TERMS) -> QExpansion:
        """The canonical zero series, known through q^order."""
        return QExpansion(Fraction(0), (Fraction(0),) * (order + 1))

    @staticmethod
    def one(order: int = DEFAULT_TERMS) -> QExpansion:
        return QExpansion(Fraction(0), (Fraction(1),) + (Fraction(0),) * order)

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def horizon(self) -> Fraction:
        """Largest exponent whose coefficient is known."""
        return self.leading + self.truncation_order

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, exponent) -> Fraction | complex:
        """Coefficient of q^exponent; zero below the leading term or off-lattice."""
        exponent = Fraction(exponent)
        if exponent > self.horizon:
            raise CannotExtend(f"coefficient of q^{exponent} is beyond the known truncation")
        offset = exponent - self.leading
        if offset < 0 or offset.denominator != 1:
            return Fraction(0)
        return self.coeffs[int(offset)]

    def normalized(self) -> QExpansion:
        """Shift the leading exponent up so that c_0 != 0 (canonical zero if zero)."""
        if self.is_zero:
            return QExpansion.zero(max(math.floor(self.horizon), 0))
        shift = next(i for i, c in enumerate(self.coeffs) if c != 0)
        return QExpansion(self.leading + shift, self.coeffs[shift:])

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: QExpansion) -> QExpansion:
        if not isinstance(other, QExpansion):
            return NotImplemented
        # A zero operand is lattice-agnostic: it only caps the horizon.
        if self.is_zero or other.is_zero:
            zero, live = (self, other) if self.is_zero else (other, self)
            if live.is_zero:
                return zero if zero.horizon <= live.horizon else live
            keep = math.floor(zero.horizon - live.leading)
            if keep < 0:
                # the zero's knowledge ends below the live terms; there the sum is zero
                return zero
            return QExpansion(live.leading, live.coeffs[: keep + 1])
        offset = self.leading - other.leading
        if offset.denominator != 1:
            raise NonIntegralOffset(
                f"cannot add series with leading exponents {self.leading} and {other.leading}"
            )
        lead = min(self.leading, other.leading)
        horizon = min(self.horizon, other.horizon)
        n_out = int(horizon - lead)
        coeffs = []
        for n in range(n_out + 1):
            e = lead + n
            c = 0
            da = int(e - self.leading)
            if 0 <= da <= self.truncation_order:
                c = c + self.coeffs[da]
            db = int(e - other.leading)
            if 0 <= db <= other.truncation_order:
                c = c + other.coeffs[db]
            coeffs.append(c)
        return QExpansion(lead, tuple(_coerce(c) for c in coeffs))

    def __sub__(self, other: QExpansion) -> QExpansion:
        return self + (-other)

    def __neg__(self) -> QExpansion:
        return QExpansion(self.leading, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, QExpansion):
            n_out = min(self.truncation_order, other.truncation_order)
            coeffs = [Fraction(0)] * (n_out + 1)
            for i, a in enumerate(self.coeffs[: n_out + 1]):
                if a == 0:
                    continue
                for j in range(min(n_out - i, other.truncation_order) + 1):
                    b = other.coeffs[j]
                    if b != 0:
                        coeffs[i + j] += a * b
            return QExpansion(self.leading + other.leading, tuple(_coerce(c) for c in coeffs))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> QExpansion:
        c = _coerce(c)
        if c == 0:
            # zero on the same lattice, so no horizon knowledge is lost
            return QExpansion(self.leading, (Fraction(0),) * len(self.coeffs))
        return QExpansion(self.leading, tuple(_coerce(c * a) for a in self.coeffs))

    def theta(self) -> QExpansion:
        """q d/dq: multiply the coefficient of q^(leading+n) by leading+n."""
        return QExpansion(
            self.leading,
            tuple(_coerce((self.leading + n) * c) for n, c in enumerate(self.coeffs)),
        )

    def truncate(self, order: int) -> QExpansion:
        """Drop coefficients beyond the given truncation order."""
        if order < 0:
            raise CannotExtend("truncation order must be nonnegative")
        if order > self.truncation_order:
            if self.is_zero:
                return QExpansion.zero(order)
            raise CannotExtend(
                f"series known to order {self.truncation_order}, cannot extend to {order}"
            )
        return QExpansion(self.leading, self.coeffs[: order + 1])

    def evaluate(self, tau: complex) -> complex:
        """Sum the truncated series at a point of the upper half-plane.

        Fractional leading powers are evaluated as exp(2*pi*i*leading*tau)
        directly, so there is no branch ambiguity.  Emits a ``NonConvergent``
        warning if |q| > 1/2, where the truncation is unreliable.
        """
        tau = complex(tau)
        if tau.imag <= 0:
            raise ValueError("evaluation requires Im(tau) > 0")
        q = cmath.exp(_TWO_PI_I * tau)
        if abs(q) > 0.5:
            warnings.warn("|q| > 0.5: truncated evaluation unreliable", NonConvergent)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * q + complex(c)
        return acc * cmath.exp(_TWO_PI_I * self.leading * tau)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs[:8]):
            if c == 0:
                continue
            e = self.leading + n
            if e == 0:
                terms.append(f"{c}")
            elif e == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^({e})")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^({self.horizon + 1}))"
