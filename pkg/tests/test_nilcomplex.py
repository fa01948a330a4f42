import pytest

from nildga.nilcomplex import (
    NilComplexSpec,
    RealLieAlgebra,
    SpecError,
    SymplecticSpec,
    build_kodaira,
    check_abelian,
    check_contraction,
    complex_dga,
    kodaira_real_algebra,
    symplectic_bracket_via_contraction,
    symplectic_dga,
)
from nildga.scalars import ZERO, gq


def test_kodaira_structure_constants():
    spec = build_kodaira(2)
    assert spec.E[0][0] == gq(0, "-1/2")
    assert spec.E[0][1] == ZERO
    assert spec.F[0][0] == gq(0, "-1/2")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_real_structure_is_abelian(n):
    assert check_abelian(kodaira_real_algebra(n))


def test_non_abelian_structure_detected():
    alg = kodaira_real_algebra(1)
    # rotating U into X breaks [JA,JB]=[A,B]
    J = dict(alg.J)
    J["X"], J["Y"], J["U"], J["V"] = {"U": 1}, {"V": 1}, {"X": -1}, {"Y": -1}
    bad = RealLieAlgebra(alg.basis, alg.brackets, J)
    assert not check_abelian(bad)


def test_j_must_square_to_minus_one():
    alg = kodaira_real_algebra(1)
    J = dict(alg.J)
    J["X"] = {"X": 1}
    with pytest.raises(SpecError):
        check_abelian(RealLieAlgebra(alg.basis, alg.brackets, J))


def test_bad_specs():
    with pytest.raises(SpecError):
        build_kodaira(0)
    with pytest.raises(SpecError):
        NilComplexSpec(1, ((ZERO,),))
    with pytest.raises(SpecError):
        SymplecticSpec(1, 0, 1, 0)


def test_dimensions():
    assert len(complex_dga(build_kodaira(3)).gens) == 8
    assert len(symplectic_dga(SymplecticSpec(1, 0, 0, 0)).gens) == 4


@pytest.mark.parametrize("vals", [(1, 0, 0, 0), (0, 1, 0, 0), (2, 1, 1, 0), ("1/2", 0, 0, "3/4")])
def test_symplectic_bracket_from_contraction(vals):
    s = SymplecticSpec(*vals)
    assert check_contraction(s)
    assert symplectic_bracket_via_contraction(s) == {("g", "d"): {"ap": 1}}
    pres = symplectic_dga(s)
    assert pres.generator_bracket("g", "d").terms == {pres.gens.mask(["ap"]): gq(1)}
