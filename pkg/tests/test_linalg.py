from hypothesis import given, strategies as st

from nildga import linalg
from nildga.scalars import ONE, ZERO, gq

entries = st.integers(min_value=-3, max_value=3).map(gq)
mats = st.integers(min_value=1, max_value=4).flatmap(
    lambda r: st.integers(min_value=1, max_value=4).flatmap(
        lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(mats)
def test_rank_nullity(a):
    cols = len(a[0])
    null = linalg.nullspace(a, cols)
    assert linalg.rank(a) + len(null) == cols
    for v in null:
        assert linalg.is_zero_vector(linalg.matvec(a, v))


@given(mats)
def test_rank_of_transpose(a):
    assert linalg.rank(a) == linalg.rank(linalg.transpose(a))


def test_inverse_and_solve():
    i = gq(0, 1)
    a = [[ONE, i], [ZERO, gq(2)]]
    inv = linalg.inverse(a)
    assert linalg.matmul(a, inv) == linalg.identity(2)
    x = linalg.solve(a, [gq(1), gq(4)])
    assert linalg.matvec(a, x) == [gq(1), gq(4)]
    assert linalg.solve([[ONE], [ONE]], [ONE, ZERO]) is None


def test_inner_is_hermitian():
    u, v = [gq(0, 1), gq(1)], [gq(1), gq(0, 1)]
    assert linalg.inner(u, v) == linalg.inner(v, u).conjugate()
