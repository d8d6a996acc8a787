"""Vector-valued modular forms for representations with diagonal T-action.

A representation is carried as exponent data: rho(T) = diag(e^{2 pi i m_j})
with exact rationals 0 <= m_j < 1, plus an optional numeric rho(S).  A form
is a weight together with one q-expansion per component; holomorphy at the
cusp means each component's leading exponent exceeds its m_j by a
nonnegative integer.

rho(S) is never needed exactly: it is recovered numerically from a
fundamental system by sampling tau on the unit circle, which the S-involution
tau -> -1/tau preserves.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from . import linalg
from .classical import serre_derivative
from .errors import InsufficientTruncation, SingularSampleMatrix
from .qseries import QExpansion


@dataclass(frozen=True)
class RepData:
    """Exponents m_j of the diagonal T-action, with optional numeric S-matrix."""

    exponents: tuple  # Fractions in [0, 1)
    rho_S: tuple | None = None  # p x p, rows of complex entries
    s_squared_sign: int | None = None  # +1 or -1 when known

    @staticmethod
    def make(exponents, rho_S=None, s_squared_sign=None) -> RepData:
        ms = tuple(Fraction(m) for m in exponents)
        for m in ms:
            if not 0 <= m < 1:
                raise ValueError(f"T-exponent {m} outside [0, 1)")
        if rho_S is not None:
            rho_S = tuple(tuple(complex(x) for x in row) for row in rho_S)
            if len(rho_S) != len(ms) or any(len(row) != len(ms) for row in rho_S):
                raise ValueError("rho_S must be a p x p matrix")
        if s_squared_sign not in (None, 1, -1):
            raise ValueError("s_squared_sign must be +1 or -1")
        return RepData(ms, rho_S, s_squared_sign)

    @property
    def p(self) -> int:
        return len(self.exponents)

    def rho_T(self) -> np.ndarray:
        return np.diag([cmath.exp(2j * math.pi * float(m)) for m in self.exponents])

    def with_rho_S(self, matrix, sign=None) -> RepData:
        rows = tuple(tuple(complex(x) for x in row) for row in matrix)
        return replace(self, rho_S=rows, s_squared_sign=sign)


@dataclass(frozen=True)
class VVMF:
    """A weight, representation data, and one q-expansion per component."""

    weight: int
    rep: RepData
    components: tuple

    @staticmethod
    def make(weight: int, rep: RepData, components) -> VVMF:
        components = tuple(components)
        if len(components) != rep.p:
            raise ValueError(f"expected {rep.p} components, got {len(components)}")
        return VVMF(weight, rep, components)

    @property
    def p(self) -> int:
        return self.rep.p


@dataclass(frozen=True)
class ComponentCheck:
    index: int
    ok: bool
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    components: tuple


def validate(form: VVMF) -> ValidationReport:
    """Check holomorphy at the cusp: leading_j - m_j must be in Z>=0.

    Failures are reported per component rather than raised; a zero component
    carries no exponent information and passes.
    """
    checks = []
    for j, (f, m) in enumerate(zip(form.components, form.rep.exponents)):
        if f.is_zero:
            checks.append(ComponentCheck(j, True, "zero component"))
            continue
        gap = f.normalized().leading - m
        if gap.denominator != 1:
            checks.append(
                ComponentCheck(j, False, f"leading {f.normalized().leading} not congruent to {m} mod 1")
            )
        elif gap < 0:
            checks.append(ComponentCheck(j, False, f"meromorphic at infinity: leading below {m}"))
        else:
            checks.append(ComponentCheck(j, True, f"leading = m_j + {gap}"))
    return ValidationReport(all(c.ok for c in checks), tuple(checks))


def module_action(g: QExpansion, g_weight: int, form: VVMF) -> VVMF:
    """Multiply every component by the classical form g of even weight g_weight."""
    if g.leading.denominator != 1 or g.leading < 0:
        raise ValueError("module action needs a classical form with integer leading >= 0")
    return VVMF(form.weight + g_weight, form.rep, tuple(g * f for f in form.components))


def serre_vvmf(form: VVMF) -> VVMF:
    """Componentwise Serre derivative at the form's weight; weight goes up by 2."""
    k = form.weight
    return VVMF(k + 2, form.rep, tuple(serre_derivative(f, k) for f in form.components))


def is_essential(form: VVMF, n_terms: int) -> bool:
    """True iff the components are linearly independent over C.

    Decided exactly from the coefficient matrix on the union of the component
    exponent lattices, capped at the smallest nonzero-component horizon so no
    unknown coefficient is ever treated as zero.
    """
    p = form.p
    if n_terms + 1 < p:
        raise InsufficientTruncation(f"{n_terms + 1} aligned coefficients cannot have rank {p}")
    live = [f for f in form.components if not f.is_zero]
    if len(live) < p:
        return False  # a zero component is dependent outright
    cap = min(f.horizon for f in live)
    grid = sorted({f.leading + n for f in live for n in range(n_terms + 1) if f.leading + n <= cap})
    rows = [[f.coefficient(e) for e in grid] for f in form.components]
    return linalg.rank(rows) == p


def evaluate_vec(form: VVMF, tau: complex):
    """Evaluate all components at a point of the upper half-plane."""
    return [f.evaluate(tau) for f in form.components]


def default_sample_points(p: int):
    """p points on the unit circle, arguments spread over [1.15, 1.55] radians.

    The circle is stable under tau -> -1/tau, and |q| < 0.005 at both tau and
    -1/tau, so truncated evaluations converge fast.
    """
    if p < 1:
        raise ValueError("need at least one sample point")
    if p == 1:
        thetas = [1.35]
    else:
        thetas = [1.15 + 0.4 * l / (p - 1) for l in range(p)]
    return [cmath.exp(1j * t) for t in thetas]


def recover_rho_S(form: VVMF, points=None) -> np.ndarray:
    """Solve tau^{-k} F(-1/tau_l) = X F(tau_l) for the monodromy matrix X.

    Wants an essential form and p sample points; raises SingularSampleMatrix
    when the value matrix [f_j(tau_l)] is too ill-conditioned to invert.
    """
    p = form.p
    if points is None:
        points = default_sample_points(p)
    points = [complex(t) for t in points]
    if len(points) != p:
        raise ValueError(f"need exactly {p} sample points")
    value = np.array([[f.evaluate(t) for t in points] for f in form.components])
    if np.linalg.cond(value) > 1e8:
        raise SingularSampleMatrix("sample value matrix is numerically singular; pick new points")
    slashed = np.array(
        [[t ** (-form.weight) * f.evaluate(-1 / t) for t in points] for f in form.components]
    )
    return np.linalg.solve(value.T, slashed.T).T


@dataclass(frozen=True)
class RelationReport:
    ok: bool
    sign: int
    s_squared_residual: float
    braid_residual: float


def check_relations(rep: RepData, tol: float = 1e-6) -> RelationReport:
    """Verify rho(S)^2 = +-I and (rho(S) rho(T))^3 = rho(S)^2 numerically."""
    if rep.rho_S is None:
        raise ValueError("rep carries no rho_S")
    s = np.array(rep.rho_S)
    eye = np.eye(rep.p)
    s2 = s @ s
    res_plus = float(np.max(np.abs(s2 - eye)))
    res_minus = float(np.max(np.abs(s2 + eye)))
    sign, s2_res = (1, res_plus) if res_plus <= res_minus else (-1, res_minus)
    st = s @ rep.rho_T()
    braid_res = float(np.max(np.abs(st @ st @ st - s2)))
    return RelationReport(s2_res < tol and braid_res < tol, sign, s2_res, braid_res)
