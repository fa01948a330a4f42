import pytest

from nildga.mirror import (
    cohomology_match,
    derham_dims,
    graph_frame,
    mirror_map,
    explicit_frame,
    special_family_check,
    verify_mirror,
)
from nildga.nilcomplex import SpecError, SymplecticSpec, build_kodaira, complex_dga
from nildga.scalars import gq

SAMPLES = [(1, 0, 0, 0), (0, 1, 0, 0), (2, 1, 1, 0), (0, 0, 1, 0)]


@pytest.mark.parametrize("vals", SAMPLES)
def test_mirror_is_isomorphism(vals):
    rep = verify_mirror(SymplecticSpec(*vals))
    assert rep.passed, rep.to_dict()


@pytest.mark.parametrize("vals", SAMPLES)
def test_cohomology_match(vals):
    cm = cohomology_match(SymplecticSpec(*vals))
    assert cm["complex"] == [1, 3, 4]
    assert cm["symplectic"] == [1, 3, 4, 3, 1]
    assert cm["passed"]


def test_broken_map_is_detected():
    s = SymplecticSpec(1, 0, 0, 0)
    ups = mirror_map(s)
    ups.images["ow"] = ups.images["ow"] * gq(2)
    rep = verify_mirror(s, ups)
    assert not rep.checks["bracket"]
    assert "bracket" in rep.counterexamples


def test_frames_agree():
    for ts in [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (gq(1, 2), 3, gq(0, -1), "1/2")]:
        assert graph_frame(*ts) == explicit_frame(*ts)


@pytest.mark.parametrize("t", [gq(1), gq(0, 1), gq(1, 1), gq("3/2")])
def test_special_family(t):
    assert special_family_check(t)
    assert not special_family_check(t, omega_t=t * gq(2))


def test_special_family_rejects_zero():
    with pytest.raises(SpecError):
        special_family_check(0)


def test_derham_needs_forms():
    with pytest.raises(SpecError):
        derham_dims(complex_dga(build_kodaira(1)))
