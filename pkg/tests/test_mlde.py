import random
from fractions import Fraction

import pytest

from modforms.classical import PolynomialQR, eisenstein, eta_power, monomial_basis
from modforms.errors import (
    NonIntegralWeight,
    NotARoot,
    OrderTooLarge,
    ResonantRoot,
    RootsNotDistinct,
    RootsOutOfRange,
)
from modforms.mlde import (
    MLDE,
    fundamental_system,
    indicial_polynomial,
    mlde_from_exponents,
    solve_frobenius,
    verify_solution,
    weight_relation_check,
)
from modforms.qseries import QExpansion

F = Fraction


def order2(k0, c):
    return MLDE.make(k0, 2, [PolynomialQR.monomial(1, 0, c)])


E4_EQUATION = order2(4, F(-1, 6))


def test_make_validates():
    with pytest.raises(ValueError):
        MLDE.make(4, 0, [])
    with pytest.raises(ValueError):
        MLDE.make(4, 2, [])
    with pytest.raises(ValueError):
        MLDE.make(4, 2, [PolynomialQR.monomial(0, 1)])  # weight 6, needs 4


def test_indicial_order_one():
    for k0 in (0, 3, 5, 12):
        ind = indicial_polynomial(MLDE.make(k0, 1, []))
        assert list(ind.poly) == [F(-k0, 12), F(1)]
        assert ind.roots == (F(k0, 12),)


def test_indicial_order_two():
    ind = indicial_polynomial(E4_EQUATION)
    assert list(ind.poly) == [F(0), F(-5, 6), F(1)]
    assert ind.roots == (F(0), F(5, 6))
    ind = indicial_polynomial(order2(3, F(-1, 18)))
    assert ind.roots == (F(1, 12), F(7, 12))


def test_indicial_matches_skew_application():
    # independent oracle: I(lambda) is the q^lambda coefficient of L[q^lambda]
    rng = random.Random(5)
    for _ in range(10):
        k0 = rng.randint(0, 10)
        c = F(rng.randint(-8, 8), rng.randint(1, 6))
        eq = order2(k0, c)
        ind = indicial_polynomial(eq)
        for _ in range(3):
            lam = F(rng.randint(-10, 10), 12)
            stub = QExpansion.make([1], leading=lam)
            coeff = eq.to_skew().apply(stub, k0, 0).coefficient(lam)
            val = sum(p * lam**i for i, p in enumerate(ind.poly))
            assert coeff == val


def test_frobenius_reproduces_e4():
    sol = solve_frobenius(E4_EQUATION, 0, 48)
    assert (sol - eisenstein("Q", 48)).is_zero


def test_frobenius_order_one_eta_powers():
    for k0 in (1, 4, 7, 11):
        sol = solve_frobenius(MLDE.make(k0, 1, []), F(k0, 12), 32)
        assert (sol - eta_power(2 * k0, 32)).is_zero


def test_frobenius_not_a_root():
    with pytest.raises(NotARoot):
        solve_frobenius(E4_EQUATION, F(1, 2), 8)


def test_frobenius_resonant():
    # indicial roots {0, 1} differ by an integer, so I(0 + 1) = 0
    eq = order2(5, F(-35, 144))
    assert indicial_polynomial(eq).roots == (F(0), F(1))
    with pytest.raises(ResonantRoot):
        solve_frobenius(eq, 0, 8)


def test_fundamental_system():
    system = fundamental_system(E4_EQUATION, 24)
    assert system.weight == 4
    assert [f.leading for f in system.components] == [F(0), F(5, 6)]
    assert system.rep.exponents == (F(0), F(5, 6))


def test_fundamental_system_rejects_repeated_roots():
    # discriminant tuned to zero: double root at 5/12
    eq = order2(4, F(1, 144))
    with pytest.raises(RootsNotDistinct):
        fundamental_system(eq, 8)


def test_fundamental_system_rejects_roots_outside_range():
    eq = order2(5, F(-35, 144))  # roots {0, 1}
    with pytest.raises(RootsOutOfRange):
        fundamental_system(eq, 8)


def test_weight_relation():
    assert weight_relation_check(4, [0, F(5, 6)])
    assert weight_relation_check(7, [F(7, 12)])
    assert not weight_relation_check(2, [0, F(5, 6)])


def test_mlde_from_exponents_examples():
    eq = mlde_from_exponents([0, F(5, 6)])
    assert eq.weight == 4
    assert dict(eq.coeffs[0].coords) == {(1, 0): F(-1, 6)}
    eq = mlde_from_exponents([F(1, 12), F(7, 12)])
    assert eq.weight == 3
    assert dict(eq.coeffs[0].coords) == {(1, 0): F(-1, 18)}
    eq = mlde_from_exponents([0, F(1, 2)])
    assert eq.weight == 2
    assert dict(eq.coeffs[0].coords) == {(1, 0): F(-1, 18)}


def test_mlde_from_exponents_rejections():
    with pytest.raises(NonIntegralWeight):
        mlde_from_exponents([0, F(1, 4)])
    with pytest.raises(RootsNotDistinct):
        mlde_from_exponents([0, 0])
    with pytest.raises(RootsOutOfRange):
        mlde_from_exponents([0, F(3, 2)])
    with pytest.raises(OrderTooLarge):
        mlde_from_exponents([F(i, 12) for i in range(6)])


def test_round_trip_denominator_12():
    # all order-2 exponent pairs j/12 with integral weight, plus order-3 samples
    pairs = [
        (F(i, 12), F(j, 12))
        for i in range(12)
        for j in range(i + 1, 12)
        if (i + j) % 2 == 0
    ]
    triples = [
        (F(1, 12), F(5, 12), F(9, 12)),
        (F(0, 12), F(4, 12), F(8, 12)),
        (F(2, 12), F(6, 12), F(10, 12)),
    ]
    for exps in pairs + triples:
        eq = mlde_from_exponents(exps)
        assert weight_relation_check(eq.weight, exps)
        system = fundamental_system(eq, 48)
        assert tuple(f.leading for f in system.components) == tuple(sorted(exps))
        for f in system.components:
            assert verify_solution(eq, f, 48).ok


def test_verify_solution_examples():
    assert verify_solution(E4_EQUATION, eisenstein("Q", 32), 32).ok
    assert verify_solution(MLDE.make(2, 1, []), eta_power(4, 32), 32).ok
    report = verify_solution(E4_EQUATION, eisenstein("R", 32), 32)
    assert not report.ok
    # residual of E6: I(1)(a_1 - 240) = (1/6)(-504 - 240) = -124 at q^1
    assert report.first_nonzero_exponent == 1
    assert report.first_nonzero_value == -124


def test_weight_relation_is_automatic():
    # Vieta on the exact indicial polynomial, random operators of order <= 4
    rng = random.Random(11)
    for _ in range(60):
        p = rng.randint(1, 4)
        k0 = rng.randint(-6, 14)
        coeffs = []
        for j in range(p - 1):
            basis = monomial_basis(2 * (p - j))
            u, v = basis[0]
            coeffs.append(PolynomialQR.monomial(u, v, F(rng.randint(-20, 20), rng.randint(1, 12))))
        ind = indicial_polynomial(MLDE.make(k0, p, coeffs))
        root_sum = -ind.poly[p - 1] if p > 1 else -ind.poly[0]
        assert 12 * root_sum == p * (p + k0 - 1)
