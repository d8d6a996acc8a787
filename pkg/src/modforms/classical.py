"""The graded algebra M of classical holomorphic modular forms on SL(2,Z).

M is the weighted polynomial algebra C[Q, R] on the Eisenstein series
Q = E4 (weight 4) and R = E6 (weight 6).  This module provides exact
q-expansions of the generators, the discriminant Delta and eta-powers,
dimension and basis bookkeeping for each graded piece M_w, conversion
between the polynomial picture and q-expansions, and the Serre derivative

    D(f) = theta(f) + k * P * f      (f of weight k)

which raises weight by 2.  P is the weight-2 quasimodular series
-1/12 + 2*sum_n sigma_1(n) q^n; this normalization is the one pinned down
by the identities D(Delta) = 0 and D(eta^2k) = 0.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import AmbiguousTruncation, NotInM, OddWeight
from .qseries import DEFAULT_TERMS, QExpansion


def _sigma(power: int, n: int) -> int:
    """Divisor power sum sigma_power(n)."""
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**power
            e = n // d
            if e != d:
                total += e**power
        d += 1
    return total


@functools.lru_cache(maxsize=None)
def eisenstein(kind: str, terms: int = DEFAULT_TERMS) -> QExpansion:
    """Exact expansion of P (quasimodular E2), Q = E4 or R = E6 to ``terms``."""
    if kind == "Q":
        coeffs = [Fraction(1)] + [Fraction(240 * _sigma(3, n)) for n in range(1, terms + 1)]
    elif kind == "R":
        coeffs = [Fraction(1)] + [Fraction(-504 * _sigma(5, n)) for n in range(1, terms + 1)]
    elif kind == "P":
        coeffs = [Fraction(-1, 12)] + [Fraction(2 * _sigma(1, n)) for n in range(1, terms + 1)]
    else:
        raise ValueError(f"unknown Eisenstein kind {kind!r} (expected P, Q or R)")
    return QExpansion(Fraction(0), tuple(coeffs))


def delta(terms: int = DEFAULT_TERMS) -> QExpansion:
    """The discriminant cusp form (Q^3 - R^2)/1728 = q - 24q^2 + ..."""
    q4 = eisenstein("Q", terms)
    q6 = eisenstein("R", terms)
    return (q4 * q4 * q4 - q6 * q6).scale(Fraction(1, 1728))


@functools.lru_cache(maxsize=None)
def euler_product(terms: int = DEFAULT_TERMS) -> QExpansion:
    """prod_{n>=1} (1 - q^n) via the pentagonal number theorem."""
    coeffs = [Fraction(0)] * (terms + 1)
    k = 0
    while True:
        done = True
        for kk in (k, -k) if k else (0,):
            e = kk * (3 * kk - 1) // 2
            if e <= terms:
                coeffs[e] += (-1) ** (kk % 2)
                done = False
        if done:
            break
        k += 1
    return QExpansion(Fraction(0), tuple(coeffs))


@functools.lru_cache(maxsize=None)
def eta_power(h: int, terms: int = DEFAULT_TERMS) -> QExpansion:
    """q-expansion of eta^h = q^(h/24) * prod(1-q^n)^h, by binary powering."""
    if h < 0:
        raise ValueError("eta exponent must be nonnegative")
    acc = QExpansion.one(terms)
    base = euler_product(terms)
    e = h
    while e:
        if e & 1:
            acc = acc * base
        base = base * base
        e >>= 1
    return QExpansion(Fraction(h, 24), acc.coeffs)


def dim_M(weight: int) -> int:
    """dim M_w: floor(k/6) or floor(k/6)+1 (w = 2k) according as w = 2 mod 12 or not."""
    if weight % 2:
        raise OddWeight(f"classical forms have even weight, got {weight}")
    if weight < 0:
        return 0
    k = weight // 2
    return k // 6 + (0 if weight % 12 == 2 else 1)


def monomial_basis(weight: int) -> list[tuple[int, int]]:
    """All (u, v) with 4u + 6v = weight, in lexicographic order."""
    if weight % 2:
        raise OddWeight(f"classical forms have even weight, got {weight}")
    basis = []
    for u in range(weight // 4 + 1):
        rem = weight - 4 * u
        if rem % 6 == 0:
            basis.append((u, rem // 6))
    return basis


@dataclass(frozen=True)
class PolynomialQR:
    """Element of M = C[Q, R] on the monomial basis {Q^u R^v}, with a weight.

    ``coords`` maps (u, v) with 4u + 6v = weight to an exact rational
    coefficient; zero coefficients are dropped on construction.
    """

    weight: int
    coords: tuple  # sorted tuple of ((u, v), Fraction) pairs

    @staticmethod
    def make(weight: int, coords) -> PolynomialQR:
        items = []
        for (u, v), c in dict(coords).items():
            c = Fraction(c)
            if c == 0:
                continue
            if u < 0 or v < 0 or 4 * u + 6 * v != weight:
                raise ValueError(f"monomial Q^{u} R^{v} does not have weight {weight}")
            items.append(((u, v), c))
        return PolynomialQR(weight, tuple(sorted(items)))

    @staticmethod
    def monomial(u: int, v: int, c=1) -> PolynomialQR:
        return PolynomialQR.make(4 * u + 6 * v, {(u, v): Fraction(c)})

    @staticmethod
    def zero(weight: int = 0) -> PolynomialQR:
        return PolynomialQR(weight, ())

    def coord_dict(self) -> dict:
        return dict(self.coords)

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def constant_term(self) -> Fraction:
        """Value at the cusp: every monomial Q^u R^v starts 1 + O(q)."""
        return sum((c for _, c in self.coords), Fraction(0))

    def __add__(self, other: PolynomialQR) -> PolynomialQR:
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.weight != other.weight:
            raise ValueError(f"cannot add weights {self.weight} and {other.weight}")
        acc = self.coord_dict()
        for key, c in other.coords:
            acc[key] = acc.get(key, Fraction(0)) + c
        return PolynomialQR.make(self.weight, acc)

    def __sub__(self, other: PolynomialQR) -> PolynomialQR:
        return self + (-other)

    def __neg__(self) -> PolynomialQR:
        return PolynomialQR(self.weight, tuple((k, -c) for k, c in self.coords))

    def __mul__(self, other):
        if isinstance(other, PolynomialQR):
            acc = {}
            for (u1, v1), c1 in self.coords:
                for (u2, v2), c2 in other.coords:
                    key = (u1 + u2, v1 + v2)
                    acc[key] = acc.get(key, Fraction(0)) + c1 * c2
            return PolynomialQR.make(self.weight + other.weight, acc)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> PolynomialQR:
        c = Fraction(c)
        if c == 0:
            return PolynomialQR.zero(self.weight)
        return PolynomialQR(self.weight, tuple((k, c * x) for k, x in self.coords))


@dataclass(frozen=True)
class EtaPower:
    """The form eta^h; weight h/2, leading q-exponent h/24."""

    h: int

    @property
    def weight(self) -> Fraction:
        return Fraction(self.h, 2)

    @property
    def leading_exponent(self) -> Fraction:
        return Fraction(self.h, 24)

    def to_qexpansion(self, terms: int = DEFAULT_TERMS) -> QExpansion:
        return eta_power(self.h, terms)


def to_qexpansion(m: PolynomialQR, terms: int = DEFAULT_TERMS) -> QExpansion:
    """Substitute the Eisenstein expansions for Q and R."""
    if m.is_zero:
        return QExpansion.zero(terms)
    q4 = eisenstein("Q", terms)
    q6 = eisenstein("R", terms)
    powers_q: dict[int, QExpansion] = {0: QExpansion.one(terms)}
    powers_r: dict[int, QExpansion] = {0: QExpansion.one(terms)}
    acc = QExpansion.zero(terms)
    for (u, v), c in m.coords:
        for powers, base, e in ((powers_q, q4, u), (powers_r, q6, v)):
            while e not in powers:
                top = max(powers)
                powers[top + 1] = powers[top] * base
        acc = acc + (powers_q[u] * powers_r[v]).scale(c)
    return acc


def from_qexpansion(f: QExpansion, weight: int, terms: int | None = None) -> PolynomialQR:
    """Recover the unique element of M_weight matching f to ``terms`` coefficients.

    Solved by exact elimination against the monomial basis; raises NotInM when
    the overdetermined system is inconsistent (f is not a form of this weight,
    at least to the checked depth) and AmbiguousTruncation when fewer than
    dim M_weight coefficients are known.
    """
    if terms is None:
        terms = f.truncation_order if not f.is_zero else dim_M(weight)
    basis = monomial_basis(weight)
    d = len(basis)
    if f.is_zero:
        return PolynomialQR.zero(weight)
    if terms + 1 < d:
        raise AmbiguousTruncation(
            f"{terms + 1} coefficients cannot determine a form in the {d}-dimensional M_{weight}"
        )
    if f.leading.denominator != 1 or f.leading < 0:
        raise NotInM(f"leading exponent {f.leading} is not a nonnegative integer")
    if f.horizon < terms:
        raise AmbiguousTruncation(f"series only known through q^{f.horizon}, need q^{terms}")
    columns = [to_qexpansion(PolynomialQR.monomial(u, v), terms) for u, v in basis]
    a = [[col.coefficient(n) for col in columns] for n in range(terms + 1)]
    b = [f.coefficient(n) for n in range(terms + 1)]
    x = linalg.solve_overdetermined(a, b)
    if x is None:
        raise NotInM(f"series does not match any form of weight {weight} to q^{terms}")
    return PolynomialQR.make(weight, {basis[i]: x[i] for i in range(d)})


def serre_derivative(f: QExpansion, k, terms: int | None = None) -> QExpansion:
    """D(f) = theta(f) + k P f, with f regarded at weight k; raises weight by 2."""
    p2 = eisenstein("P", f.truncation_order)
    out = f.theta() + (p2 * f).scale(k)
    if terms is not None and terms < out.truncation_order:
        out = out.truncate(terms)
    return out


def serre_derivative_poly(m: PolynomialQR) -> PolynomialQR:
    """The graded derivation of C[Q, R] with D(Q) = -R/3 and D(R) = -Q^2/2."""
    acc = {}
    for (u, v), c in m.coords:
        if u:
            key = (u - 1, v + 1)
            acc[key] = acc.get(key, Fraction(0)) - Fraction(u, 3) * c
        if v:
            key = (u + 2, v - 1)
            acc[key] = acc.get(key, Fraction(0)) - Fraction(v, 2) * c
    return PolynomialQR.make(m.weight + 2, acc)
