import pytest

from nildga.deformation import (
    CoordinateSystem,
    closed_form_kodaira,
    degree_two_coordinates,
    frobenius_products,
    generalized_solution,
    kodaira_surface_coordinates,
    kuranishi_solve,
    mc_residual,
)
from nildga.exterior import Multivector
from nildga.nilcomplex import build_kodaira, complex_dga


@pytest.fixture(scope="module")
def solved():
    coords = kodaira_surface_coordinates()
    gamma, chen = kuranishi_solve(coords, 6)
    return coords, gamma, chen


def test_closed_form(solved):
    coords, gamma, chen = solved
    ref, ref_chen = closed_form_kodaira(6)
    assert gamma == ref
    assert not chen and not ref_chen


def test_coefficients(solved):
    coords, gamma, _ = solved
    ring = gamma.ring
    geo = sum((ring.var("t2") ** k for k in range(1, 5)), ring.const(1))
    assert gamma.coeff_of("T") == -(ring.var("t4") * ring.var("s0")) * geo
    assert gamma.coeff_of("or^T") == -(ring.var("s0") * ring.var("s3")) * geo


def test_residual_vanishes(solved):
    coords, gamma, chen = solved
    assert not mc_residual(coords.pres, gamma, chen)


def test_gamma_parity(solved):
    _, gamma, chen = solved
    assert gamma.is_even()
    assert chen.parity_ok()


@pytest.mark.parametrize("D", [2, 3, 4])
def test_lower_truncations(D):
    gamma, chen = kuranishi_solve(kodaira_surface_coordinates(), D)
    assert (gamma, chen) == closed_form_kodaira(D)


@pytest.mark.parametrize("n", [2, 3])
def test_generalized(n):
    coords, gamma = generalized_solution(n, 4)
    assert not mc_residual(coords.pres, gamma)
    solved, chen = kuranishi_solve(coords, 4)
    assert solved == gamma
    assert not chen


def test_degree_two_names():
    coords = degree_two_coordinates(2)
    assert coords.names == ("aB1", "aB2", "aBB12", "a", "aphi11", "aphi12", "aphi22", "aT1", "aT2")
    assert coords.odd == []


def test_coordinate_validation(surface):
    with pytest.raises(ValueError):
        CoordinateSystem(surface, ("x",), (Multivector.zero(surface.gens),))
    with pytest.raises(ValueError):
        CoordinateSystem(surface, ("x", "y"), (Multivector.one(surface.gens),))


@pytest.fixture(scope="module")
def frob():
    return frobenius_products(6)


def test_frobenius_table(frob):
    r = frob.ring
    geo = (r.const(1) - r.var("t2")).inverse()
    t4, s3 = r.var("t4"), r.var("s3")
    expected = {
        ("t1", "s2"): t4 * geo,
        ("t2", "s1"): t4 * geo,
        ("t3", "s2"): r.const(1),
        ("t4", "s1"): r.const(1),
        ("s1", "t2"): t4 * geo,
        ("s1", "t4"): r.const(1),
        ("s1", "s2"): s3 * geo,
        ("s2", "t1"): t4 * geo,
        ("s2", "t3"): r.const(1),
        ("s2", "s1"): -(s3 * geo),
    }
    shown = ("t1", "t2", "t3", "t4", "s1", "s2")
    for a in shown:
        for b in shown:
            want = expected.get((a, b))
            got = frob.product(a, b)
            if want is None:
                assert not got, (a, b)
            else:
                assert got == {"s4": want}, (a, b)


def test_frobenius_laws(frob):
    assert frob.unit_ok("t0")
    assert frob.supercommutative()
    assert frob.associative() == (True, None)
    for a in ("s3", "s4", "s5"):
        for b in frob.coords:
            if b != "t0":
                assert not frob.product(a, b)
