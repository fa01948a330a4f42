import sympy as sp

from nildga.symbolic import (
    chen_commuting,
    chen_symbolic,
    evaluate,
    gauge_brackets,
    left_derivative,
    mu_functions,
    reduce_mod,
    symbols,
)

S = symbols()
I = sp.I


def test_repeated_odd_symbols_survive():
    chen = chen_symbolic()
    assert set(chen) == {"s1", "t1", "t3", "t5"}
    assert all(v != 0 for v in chen.values())


def test_components():
    for comp in ("K0", "K1"):
        for v in chen_symbolic().values():
            assert reduce_mod(v, comp) == 0


def test_surrogate_point():
    vals = {k: evaluate(v, {"s0": 1, "s3": 1, "t4": 1, "t2": 0}) for k, v in chen_symbolic().items()}
    assert vals == {"s1": -I / 2, "t1": -I / 2, "t3": I / 2, "t5": -I}


def test_mu_identity():
    mu1, mu2 = mu_functions()
    assert sp.simplify(mu2 * S["t4"] - mu1 * S["s3"]) == 0


def test_left_derivative_word_order():
    s0, s3 = S["s0"], S["s3"]
    assert left_derivative(s0 * s3, "s3") == -s0
    assert left_derivative(s0 * s3, "s0") == s3
    assert left_derivative(S["t2"] * s0, "t2") == s0


def test_gauge_k0():
    g = gauge_brackets("K0")
    t2, s3 = S["t2"], S["s3"]
    assert list(g) == ["s0"]
    assert sp.simplify(g["s0"]["t5"] - I * s3 ** 2 / (t2 - 1)) == 0


def test_gauge_k1():
    g = gauge_brackets("K1")
    t2, s0 = S["t2"], S["s0"]
    assert sorted(g) == ["s3", "t4"]
    assert sp.simplify(g["t4"]["s1"] - I * s0 ** 2 / (2 * (t2 - 1))) == 0
    assert sp.simplify(g["s3"]["t1"] + I * s0 ** 2 / (2 * (t2 - 1))) == 0


def test_commuting_forms():
    flat = chen_commuting()
    assert flat["s1"] != 0
    assert set(flat) == {"s1", "t1", "t3", "t5"}
