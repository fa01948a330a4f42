import pytest

from nildga.dga import AXIOMS, DGAPresentation, differential, schouten, schouten_direct, verify_axioms
from nildga.exterior import GeneratorSet, Multivector
from nildga.nilcomplex import build_kodaira, complex_dga, complex_lie_algebra
from nildga.scalars import gq

HALF_I = gq(0, "1/2")


def mv(pres, *names, c=1):
    return Multivector.from_names(pres.gens, *names, coeff=c)


def test_generator_brackets(surface):
    assert schouten(surface, mv(surface, "T"), mv(surface, "or")) == mv(surface, "ow", c=-HALF_I)
    assert schouten(surface, mv(surface, "or"), mv(surface, "T", "W")) == mv(surface, "ow", "W", c=HALF_I)
    assert schouten(surface, mv(surface, "T"), mv(surface, "or", "T")) == mv(surface, "ow", "T", c=-HALF_I)


def test_mixed_degree_bracket(surface):
    got = schouten(surface, mv(surface, "or", "T", "W"), mv(surface, "or", "T"))
    assert got == mv(surface, "ow", "or", "T", "W", c=gq(0, -1))


def test_dbar_values(surface):
    assert differential(surface, mv(surface, "or", "T")) == mv(surface, "ow", "or", "W", c=-HALF_I)
    assert not differential(surface, mv(surface, "W"))
    assert not differential(surface, mv(surface, "ow"))


@pytest.mark.parametrize("n", [1, 2])
def test_oracle_agrees(n):
    pres = complex_dga(build_kodaira(n))
    lie = complex_lie_algebra(build_kodaira(n))
    basis = pres.gens.basis()
    for a in basis:
        for b in basis:
            ua, ub = Multivector.monomial(pres.gens, a), Multivector.monomial(pres.gens, b)
            assert schouten(pres, ua, ub) == schouten_direct(lie, ua, ub)


def test_axioms_surface(surface):
    rep = verify_axioms(surface)
    assert rep.passed
    assert set(rep.results) == set(AXIOMS)
    assert rep.to_dict()["passed"] is True


def test_corrupted_differential_is_caught(surface):
    bad = surface.with_differential(ow=mv(surface, "or", "T"))
    rep = verify_axioms(bad)
    assert not rep.passed
    failed = {r.name for r in rep.failures()}
    assert "D2" in failed
    assert rep.results["D2"].counterexample == ("ow",)


def test_corrupted_bracket_is_caught():
    g = GeneratorSet([("X", (1, 0)), ("Y", (1, 0)), ("Z", (1, 0))])
    # [X,Y]=X, [Y,Z]=X, [X,Z]=Y violates Jacobi
    pres = DGAPresentation(g, {("X", "Y"): {1: 1}, ("Y", "Z"): {1: 1}, ("X", "Z"): {2: 1}})
    rep = verify_axioms(pres)
    assert not rep.results["L3"].passed


def test_presentation_validation():
    g = GeneratorSet([("X", (1, 0)), ("a", (0, 1))])
    with pytest.raises(ValueError):
        DGAPresentation(g, {("X", "a"): {3: 1}})
    with pytest.raises(ValueError):
        DGAPresentation(g, differential_table={"a": {2: 1}})
    with pytest.raises(ValueError):
        DGAPresentation(g, {("X", "a"): {1: 1}, ("a", "X"): {1: 1}})


def test_rescaled_dbar_of_t_still_satisfies_axioms(surface):
    # ∂̄T = -(i/2) ω̄∧T is still a square-zero derivation compatible with the bracket
    alt = surface.with_differential(T=mv(surface, "ow", "T", c=-HALF_I))
    assert verify_axioms(alt).passed
