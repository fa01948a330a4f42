import pytest
from hypothesis import given, strategies as st

from nildga.exterior import GeneratorSet, Multivector, merge_sign, normalize_monomial, wedge
from nildga.scalars import ONE, gq

G = GeneratorSet([("x", (1, 0)), ("y", (1, 0)), ("a", (0, 1)), ("b", (0, 1)), ("c", (0, 1))])
masks = st.integers(min_value=0, max_value=(1 << len(G)) - 1)
coeffs = st.integers(min_value=-3, max_value=3).map(gq)
elements = st.dictionaries(masks, coeffs, max_size=5).map(lambda d: Multivector(G, d))


def test_basis_counts():
    assert len(G.basis()) == 32
    assert len(G.basis(p=1, q=2)) == 2 * 3
    assert len(G.basis(degree=2)) == 10


def test_parse_and_name():
    m, s = G.parse_monomial("b^x")
    assert s == -1
    assert G.monomial_name(m) == "x^b"
    assert normalize_monomial([G["a"], G["a"]]) == (0, 0)


def test_from_names_sign():
    assert Multivector.from_names(G, "b", "a") == -Multivector.from_names(G, "a", "b")
    assert not Multivector.from_names(G, "a", "a")


def test_merge_sign_transposition():
    a, b = 1 << 0, 1 << 1
    assert merge_sign(a, b) == 1
    assert merge_sign(b, a) == -1


@given(masks, masks)
def test_graded_commutativity(m1, m2):
    u, v = Multivector.monomial(G, m1), Multivector.monomial(G, m2)
    sign = -1 if (bin(m1).count("1") * bin(m2).count("1")) % 2 else 1
    assert wedge(u, v) == wedge(v, u) * sign


@given(elements, elements, elements)
def test_wedge_associative(u, v, w):
    assert wedge(wedge(u, v), w) == wedge(u, wedge(v, w))


@given(st.permutations(["x", "y", "a", "b", "c"]))
def test_normalize_sign_is_permutation_parity(perm):
    mask, sign = normalize_monomial([G[n] for n in perm])
    order = [G[n].index for n in perm]
    inv = sum(1 for i in range(5) for j in range(i + 1, 5) if order[i] > order[j])
    assert mask == 31
    assert sign == (-1) ** inv


def test_degree_and_bidegree():
    v = Multivector.from_names(G, "x", "a", "b")
    assert v.degree() == 3
    assert v.bidegree() == (1, 2)
    mixed = v + Multivector.one(G)
    with pytest.raises(ValueError):
        mixed.degree()
