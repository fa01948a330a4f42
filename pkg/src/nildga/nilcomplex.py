"""Presentations built from nilpotent Lie algebra data.

Complex side: a 2-step nilpotent Lie algebra with abelian complex structure
and one-dimensional center of type (1,0), given by structure constants
``[T̄_j, T_k] = E_jk W + F_jk W̄``.  Symplectic side: the invariant symplectic
forms on the Kodaira surface, parametrised by ``(u1, v1, u2, v2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from gmpy2 import mpq

from . import linalg
from .dga import ComplexLieAlgebra, DGAPresentation, schouten_direct
from .exterior import GeneratorSet, Multivector
from .scalars import ONE, ZERO, GaussianRational, gq, parse_rational

__all__ = [
    "SpecError",
    "NilComplexSpec",
    "SymplecticSpec",
    "RealLieAlgebra",
    "build_kodaira",
    "kodaira_real_algebra",
    "check_abelian",
    "complex_generators",
    "complex_lie_algebra",
    "complex_dga",
    "symplectic_dga",
    "contract",
    "primed_forms",
    "check_contraction",
    "contract_from_omega",
    "omega_components",
    "symplectic_bracket_via_contraction",
]

HALF_I = gq(0, "1/2")


class SpecError(ValueError):
    """Input data violates a structural requirement."""


def _names(n: int) -> tuple[list[str], list[str]]:
    if n == 1:
        return ["ow"], ["T"]
    return [f"ow{j}" for j in range(1, n + 1)], [f"T{j}" for j in range(1, n + 1)]


@dataclass(frozen=True)
class NilComplexSpec:
    """Structure constants of a 2-step nilpotent algebra with abelian J.

    ``F`` defaults to the value forced by the reality constraint
    ``conj(F_kj) = -E_jk``.
    """

    n: int
    E: tuple[tuple[GaussianRational, ...], ...]
    F: tuple[tuple[GaussianRational, ...], ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 1:
            raise SpecError("n must be a positive integer")
        E = tuple(tuple(GaussianRational.coerce(x) for x in row) for row in self.E)
        if len(E) != n or any(len(r) != n for r in E):
            raise SpecError(f"E must be a {n}x{n} matrix")
        object.__setattr__(self, "E", E)
        forced = tuple(tuple(-E[k][j].conjugate() for k in range(n)) for j in range(n))
        # forced[j][k] = -conj(E[k][j]), i.e. F_jk with conj(F_jk) = -E_kj
        if self.F is None:
            object.__setattr__(self, "F", forced)
        else:
            F = tuple(tuple(GaussianRational.coerce(x) for x in row) for row in self.F)
            if F != forced:
                raise SpecError("F violates the reality constraint conj(F_kj) = -E_jk")
            object.__setattr__(self, "F", F)
        self._check_center()

    def _check_center(self):
        n = self.n
        E = [list(r) for r in self.E]
        F = [list(r) for r in self.F]
        # no combination of T_k (resp. T̄_j) may be central
        cols = E + F
        rows = linalg.transpose(E) + linalg.transpose(F)
        if linalg.rank(cols) < n or linalg.rank(rows) < n:
            raise SpecError("center must be spanned by W and its conjugate (structure constants are degenerate)")

    @property
    def names(self) -> tuple[list[str], list[str]]:
        return _names(self.n)


def build_kodaira(n: int) -> NilComplexSpec:
    """Kodaira manifold of complex dimension n+1: E = diag(-i/2)."""
    if not isinstance(n, int) or n < 1:
        raise SpecError("n must be a positive integer")
    E = tuple(tuple(-HALF_I if j == k else ZERO for k in range(n)) for j in range(n))
    return NilComplexSpec(n, E)


# --------------------------------------------------------------------------
# real Lie algebras and abelian complex structures
# --------------------------------------------------------------------------


@dataclass
class RealLieAlgebra:
    """Real Lie algebra with a linear endomorphism J, both in a named basis.

    ``brackets[(a, b)]`` is a dict name -> rational; ``J[a]`` is the image of
    basis vector ``a``.
    """

    basis: tuple[str, ...]
    brackets: dict[tuple[str, str], dict[str, mpq]]
    J: dict[str, dict[str, mpq]]

    def bracket(self, x: dict[str, mpq], y: dict[str, mpq]) -> dict[str, mpq]:
        out: dict[str, mpq] = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for c, v in self.brackets.get((a, b), {}).items():
                    out[c] = out.get(c, mpq(0)) + ca * cb * v
        return {k: v for k, v in out.items() if v}

    def apply_J(self, x: dict[str, mpq]) -> dict[str, mpq]:
        out: dict[str, mpq] = {}
        for a, ca in x.items():
            for c, v in self.J[a].items():
                out[c] = out.get(c, mpq(0)) + ca * v
        return {k: v for k, v in out.items() if v}


def kodaira_real_algebra(n: int) -> RealLieAlgebra:
    """[X_j, Y_j] = U, JX_j = Y_j, JY_j = -X_j, JU = V, JV = -U."""
    if n == 1:
        xs, ys = ["X"], ["Y"]
    else:
        xs = [f"X{j}" for j in range(1, n + 1)]
        ys = [f"Y{j}" for j in range(1, n + 1)]
    br: dict[tuple[str, str], dict[str, mpq]] = {}
    J: dict[str, dict[str, mpq]] = {"U": {"V": mpq(1)}, "V": {"U": mpq(-1)}}
    for x, y in zip(xs, ys):
        br[(x, y)] = {"U": mpq(1)}
        br[(y, x)] = {"U": mpq(-1)}
        J[x] = {y: mpq(1)}
        J[y] = {x: mpq(-1)}
    return RealLieAlgebra(tuple(xs + ys + ["U", "V"]), br, J)


def check_abelian(alg: RealLieAlgebra) -> bool:
    """True iff J² = -1 and [JA, JB] = [A, B] on every basis pair."""
    for a in alg.basis:
        if alg.apply_J(alg.apply_J({a: mpq(1)})) != {a: mpq(-1)}:
            raise SpecError("J does not square to -1")
    for a in alg.basis:
        for b in alg.basis:
            ea, eb = {a: mpq(1)}, {b: mpq(1)}
            if alg.bracket(alg.apply_J(ea), alg.apply_J(eb)) != alg.bracket(ea, eb):
                return False
    return True


# --------------------------------------------------------------------------
# complex side
# --------------------------------------------------------------------------


def complex_generators(n: int) -> GeneratorSet:
    forms, vecs = _names(n)
    specs = [(f, (0, 1)) for f in forms] + [("or", (0, 1))]
    specs += [(v, (1, 0)) for v in vecs] + [("W", (1, 0))]
    return GeneratorSet(specs)


def _lie_data(spec: NilComplexSpec):
    forms, vecs = spec.names
    bars = [v + "b" for v in vecs]
    br: dict[tuple[str, str], dict[str, GaussianRational]] = {}
    for j in range(spec.n):
        for k in range(spec.n):
            e, f = spec.E[j][k], spec.F[j][k]
            val = {nm: c for nm, c in (("W", e), ("Wb", f)) if c}
            if val:
                br[(bars[j], vecs[k])] = val
                br[(vecs[k], bars[j])] = {nm: -c for nm, c in val.items()}
    duals = {f: b for f, b in zip(forms, bars)}
    duals["or"] = "Wb"
    return br, tuple(vecs + ["W"]), duals


def complex_lie_algebra(spec: NilComplexSpec) -> ComplexLieAlgebra:
    """Lie algebra data together with its presentation (used by the bracket oracle)."""
    gens = complex_generators(spec.n)
    br, vnames, duals = _lie_data(spec)
    bare = DGAPresentation(gens, {}, {}, name="lie-data")
    lie = ComplexLieAlgebra(bare, br, vnames, duals)
    pres = _complex_presentation(spec, lie)
    lie.presentation = pres
    return lie


def _complex_presentation(spec: NilComplexSpec, lie: ComplexLieAlgebra) -> DGAPresentation:
    gens = lie.presentation.gens
    forms, vecs = spec.names
    names = gens.names
    table = {}
    for x in names:
        for y in names:
            if gens.index[x] >= gens.index[y]:
                continue
            val = schouten_direct(lie, Multivector.from_names(gens, x), Multivector.from_names(gens, y))
            if val:
                table[(x, y)] = val
    dtable = {}
    W = gens.index["W"]
    for j, t in enumerate(vecs):
        terms = {}
        for k, f in enumerate(forms):
            c = spec.E[k][j]
            if c:
                terms[(1 << gens.index[f]) | (1 << W)] = c
        dtable[t] = Multivector(gens, terms)
    label = f"kodaira-{spec.n}" if spec == build_kodaira(spec.n) else f"nilpotent-{spec.n}"
    return DGAPresentation(gens, table, dtable, name=label)


def complex_dga(spec: NilComplexSpec) -> DGAPresentation:
    """∂̄T_j = Σ_k E_kj ω̄^k∧W; generator brackets from the direct formulas."""
    return complex_lie_algebra(spec).presentation


# --------------------------------------------------------------------------
# symplectic side
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SymplecticSpec:
    u1: mpq
    v1: mpq
    u2: mpq
    v2: mpq

    def __post_init__(self):
        for k in ("u1", "v1", "u2", "v2"):
            object.__setattr__(self, k, parse_rational(getattr(self, k)))
        if self.delta == 0:
            raise SpecError("degenerate form: u1²+v1²-u2²-v2² = 0")

    @classmethod
    def from_values(cls, values: Sequence) -> "SymplecticSpec":
        if len(values) != 4:
            raise SpecError("symplectic data needs four rationals u1,v1,u2,v2")
        return cls(*values)

    @property
    def delta(self) -> mpq:
        return self.u1 ** 2 + self.v1 ** 2 - self.u2 ** 2 - self.v2 ** 2


SYMPLECTIC_NAMES = ("ap", "bp", "g", "d")  # α′, β′, γ, δ


def symplectic_generators() -> GeneratorSet:
    return GeneratorSet([(nm, (0, 1)) for nm in SYMPLECTIC_NAMES])


def symplectic_dga(s: SymplecticSpec) -> DGAPresentation:
    """[γ, δ] = α′ and dγ = -Δ α′∧β′; everything else vanishes on generators."""
    gens = symplectic_generators()
    ap = Multivector.from_names(gens, "ap")
    dg = Multivector.from_names(gens, "ap", "bp", coeff=GaussianRational(-s.delta))
    return DGAPresentation(gens, {("g", "d"): ap}, {"g": dg}, name=f"symplectic(Δ={s.delta})")


REAL_VECTORS = ("X", "Y", "U", "V")
REAL_FORMS = ("alpha", "beta", "gamma", "delta")


def contract(v: str, s: SymplecticSpec) -> dict[str, mpq]:
    """ι(v) = Ω(v, ·) in the basis α, β, γ, δ dual to X, Y, U, V."""
    u1, v1, u2, v2 = s.u1, s.v1, s.u2, s.v2
    table = {
        "X": {"gamma": u1 + u2, "delta": v1 + v2},
        "Y": {"gamma": v1 - v2, "delta": -(u1 - u2)},
        "U": {"alpha": -(u1 + u2), "beta": -(v1 - v2)},
        "V": {"alpha": -(v1 + v2), "beta": u1 - u2},
    }
    if v not in table:
        raise SpecError(f"unknown frame vector {v!r}")
    return {k: x for k, x in table[v].items() if x}


def omega_components(s: SymplecticSpec) -> dict[tuple[str, str], mpq]:
    """Ω as a map (form_i, form_j) -> coefficient of form_i∧form_j, i < j."""
    u1, v1, u2, v2 = s.u1, s.v1, s.u2, s.v2
    return {
        ("alpha", "gamma"): u1 + u2,
        ("beta", "delta"): -u1 + u2,
        ("alpha", "delta"): v1 + v2,
        ("beta", "gamma"): v1 - v2,
    }


def contract_from_omega(v: str, s: SymplecticSpec) -> dict[str, mpq]:
    """ι_vΩ computed from the 2-form itself (check for :func:`contract`)."""
    out: dict[str, mpq] = {}
    dual = dict(zip(REAL_VECTORS, REAL_FORMS))[v]
    for (a, b), c in omega_components(s).items():
        if a == dual:
            out[b] = out.get(b, mpq(0)) + c
        elif b == dual:
            out[a] = out.get(a, mpq(0)) - c
    return {k: x for k, x in out.items() if x}


def primed_forms(s: SymplecticSpec) -> dict[str, dict[str, mpq]]:
    """α′ = -ι(U)/Δ and β′ = ι(V)/Δ in the α, β basis."""
    d = s.delta
    return {
        "ap": {k: -x / d for k, x in contract("U", s).items()},
        "bp": {k: x / d for k, x in contract("V", s).items()},
    }


def check_contraction(s: SymplecticSpec) -> bool:
    """-Δ α′∧β′ equals dγ = -α∧β."""
    p = primed_forms(s)
    a, b = p["ap"], p["bp"]
    ab = a.get("alpha", 0) * b.get("beta", 0) - a.get("beta", 0) * b.get("alpha", 0)
    return -s.delta * ab == -1 and set(a) <= {"alpha", "beta"} and set(b) <= {"alpha", "beta"}


def symplectic_bracket_via_contraction(s: SymplecticSpec) -> dict[tuple[str, str], dict[str, mpq]]:
    """[θ1, θ2]_Ω = ι[ι⁻¹θ1, ι⁻¹θ2] on α′, β′, γ, δ, expressed in that basis."""
    # columns: images of X, Y, U, V in the α, β, γ, δ basis
    iota = [[GaussianRational(contract(v, s).get(f, 0)) for v in REAL_VECTORS] for f in REAL_FORMS]
    inv = linalg.inverse(iota)
    p = primed_forms(s)
    primed = {
        "ap": [GaussianRational(p["ap"].get(f, 0)) for f in REAL_FORMS],
        "bp": [GaussianRational(p["bp"].get(f, 0)) for f in REAL_FORMS],
        "g": [ZERO, ZERO, ONE, ZERO],
        "d": [ZERO, ZERO, ZERO, ONE],
    }
    # change of basis from α, β, γ, δ to α′, β′, γ, δ
    to_primed = linalg.inverse(linalg.from_columns([primed[k] for k in SYMPLECTIC_NAMES], 4))
    real = kodaira_real_algebra(1)
    out: dict[tuple[str, str], dict[str, mpq]] = {}
    for i, x in enumerate(SYMPLECTIC_NAMES):
        for y in SYMPLECTIC_NAMES[i + 1:]:
            vx = linalg.matvec(inv, primed[x])
            vy = linalg.matvec(inv, primed[y])
            br = real.bracket(
                {n: c.re for n, c in zip(REAL_VECTORS, vx) if c},
                {n: c.re for n, c in zip(REAL_VECTORS, vy) if c},
            )
            vec = [GaussianRational(br.get(n, 0)) for n in REAL_VECTORS]
            form = linalg.matvec(iota, vec)
            coords = linalg.matvec(to_primed, form)
            val = {n: c.re for n, c in zip(SYMPLECTIC_NAMES, coords) if c}
            if val:
                out[(x, y)] = val
    return out
