"""Chen field of the Kodaira surface with repeated odd symbols kept.

Odd coordinates are sympy non-commutative symbols, so a word such as
``s0*s3*s0`` keeps its order and is not annihilated.  Signs of left
derivatives are read off the word order; evaluation at numeric points treats
all symbols as ordinary numbers.
"""

from __future__ import annotations

import sympy as sp

__all__ = [
    "ODD",
    "EVEN",
    "COMPONENTS",
    "symbols",
    "mu_functions",
    "chen_symbolic",
    "chen_commuting",
    "left_derivative",
    "gauge_brackets",
    "reduce_mod",
    "evaluate",
]

EVEN = tuple(f"t{k}" for k in range(6))
ODD = tuple(f"s{k}" for k in range(6))

_SYM = {n: sp.Symbol(n) for n in EVEN}
_SYM.update({n: sp.Symbol(n, commutative=False) for n in ODD})

COMPONENTS = {"K0": ("s0",), "K1": ("t4", "s3")}


def symbols() -> dict[str, sp.Symbol]:
    return dict(_SYM)


def mu_functions() -> tuple[sp.Expr, sp.Expr]:
    """μ1 = -s0 t4/(1-t2), μ2 = -s0 s3/(1-t2)."""
    s0, s3, t2, t4 = _SYM["s0"], _SYM["s3"], _SYM["t2"], _SYM["t4"]
    return -s0 * t4 / (1 - t2), -s0 * s3 / (1 - t2)


def chen_symbolic() -> dict[str, sp.Expr]:
    """c_s1 = (i/2)μ1 s0, c_t1 = (i/2)μ2 s0, c_t3 = (i/2)μ1 μ2, c_t5 = i μ2 s3."""
    mu1, mu2 = mu_functions()
    s0, s3 = _SYM["s0"], _SYM["s3"]
    half_i = sp.I / 2
    return {
        "s1": sp.expand(half_i * mu1 * s0),
        "t1": sp.expand(half_i * mu2 * s0),
        "t3": sp.expand(half_i * mu1 * mu2),
        "t5": sp.expand(sp.I * mu2 * s3),
    }


def chen_commuting() -> dict[str, sp.Expr]:
    """The same coefficients with every symbol commuting (the displayed closed forms)."""
    plain = {n: sp.Symbol(n) for n in EVEN + ODD}
    return {k: sp.factor(v.subs({_SYM[n]: plain[n] for n in ODD})) for k, v in chen_symbolic().items()}


def _words(expr: sp.Expr):
    """Yield (commutative coefficient, list of odd factor names) for each term."""
    for term in sp.Add.make_args(sp.expand(expr)):
        if term == 0:
            continue
        c, nc = term.args_cnc()
        word: list[str] = []
        for f in nc:
            if isinstance(f, sp.Pow):
                word.extend([f.base.name] * int(f.exp))
            else:
                word.append(f.name)
        yield sp.Mul(*c), word


def _rebuild(coef: sp.Expr, word: list[str]) -> sp.Expr:
    out = coef
    for w in word:
        out = out * _SYM[w]
    return out


def left_derivative(expr: sp.Expr, name: str) -> sp.Expr:
    """∂/∂x from the left; an odd x picks up (-1)^(odd factors before it)."""
    if name in EVEN:
        return sp.expand(sp.diff(expr, _SYM[name]))
    out = sp.Integer(0)
    for coef, word in _words(expr):
        for k, w in enumerate(word):
            if w == name:
                sign = -1 if k % 2 else 1
                out += sign * _rebuild(coef, word[:k] + word[k + 1:])
    return sp.expand(out)


def reduce_mod(expr: sp.Expr, component: str) -> sp.Expr:
    """Restrict to a component by setting its defining coordinates to zero."""
    if component not in COMPONENTS:
        raise KeyError(f"unknown component {component!r}; expected one of {sorted(COMPONENTS)}")
    sub = {_SYM[n]: 0 for n in COMPONENTS[component]}
    return sp.simplify(sp.expand(expr).subs(sub))


def gauge_brackets(component: str, coordinate: str | None = None) -> dict[str, dict[str, sp.Expr]]:
    """Σ_α (∂c_α/∂y) ∂/∂x_α restricted to a component, for each coordinate y.

    This is [∂/∂y, ∂⃗]; it equals [∂⃗, ∂/∂y] for odd y and its negative for even
    y, so it spans the same distribution.  Only nonzero fields are returned.
    """
    if component not in COMPONENTS:
        raise KeyError(f"unknown component {component!r}; expected one of {sorted(COMPONENTS)}")
    chen = chen_symbolic()
    names = [coordinate] if coordinate else list(EVEN + ODD)
    out: dict[str, dict[str, sp.Expr]] = {}
    for y in names:
        if y not in _SYM:
            raise KeyError(f"unknown coordinate {y!r}")
        field = {}
        for a, c in chen.items():
            v = reduce_mod(left_derivative(c, y), component)
            if v != 0:
                field[a] = sp.factor(v)
        if field or coordinate:
            out[y] = field
    return out


def evaluate(expr: sp.Expr, values: dict[str, object]) -> sp.Expr:
    """Numeric value with every symbol treated as a number."""
    return sp.nsimplify(sp.simplify(expr.subs({_SYM[k]: sp.nsimplify(v) for k, v in values.items()})))
