"""Extended Maurer-Cartan equation, Kuranishi recursion and Frobenius products.

Conventions (coefficients sit on the left of fields):

* ``∂̄(f·a) = (-1)^|f| f·∂̄a``
* ``[f·a, g·b] = (-1)^{|g|(|a|+1)} fg·[a, b]``
* the Chen field acts by left partial derivatives, ``∂⃗Γ = Σ c_α ∂Γ/∂x_α``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .dga import DGAPresentation
from .exterior import GeneratorSet, Multivector, popcount
from .hodge import KODAIRA_SURFACE_CLASSES, degree_two_classes, hodge_for
from .nilcomplex import build_kodaira, complex_dga
from .scalars import ONE, ZERO, GaussianRational, gq
from .superring import ChenField, SuperField, SuperRing, SuperScalar

log = logging.getLogger(__name__)

__all__ = [
    "ReductionError",
    "CoordinateSystem",
    "FrobeniusTable",
    "kodaira_surface_coordinates",
    "degree_two_coordinates",
    "mc_residual",
    "kuranishi_solve",
    "closed_form_kodaira",
    "generalized_solution",
    "generalized_s",
    "dbar_gamma",
    "frobenius_products",
    "K0_GENERIC_COORDINATES",
]


class ReductionError(ArithmeticError):
    """A product left the span of the chosen classes modulo ∂̄_Γ-exact terms."""


@dataclass
class CoordinateSystem:
    """One coordinate per harmonic class; parity of x_α is the degree parity of θ^α."""

    pres: DGAPresentation
    names: tuple[str, ...]
    classes: tuple[Multivector, ...]

    def __post_init__(self):
        if len(self.names) != len(self.classes):
            raise ValueError("one class per coordinate is required")
        for nm, c in zip(self.names, self.classes):
            if not c:
                raise ValueError(f"class of {nm} is zero")
            if len(c.degrees()) != 1:
                raise ValueError(f"class of {nm} is not homogeneous")

    def parity(self, name: str) -> int:
        return self.classes[self.names.index(name)].degree() & 1

    @property
    def even(self) -> list[str]:
        return [n for n in self.names if self.parity(n) == 0]

    @property
    def odd(self) -> list[str]:
        return [n for n in self.names if self.parity(n) == 1]

    def ring(self, D: int) -> SuperRing:
        return SuperRing(self.even, self.odd, D)

    def cls(self, name: str) -> Multivector:
        return self.classes[self.names.index(name)]

    def gamma1(self, ring: SuperRing) -> SuperField:
        out = SuperField.zero(ring, self.pres.gens)
        for nm, c in zip(self.names, self.classes):
            out = out + SuperField.from_multivector(ring, c, ring.var(nm))
        return out

    def restrict(self, names: Sequence[str]) -> "CoordinateSystem":
        return CoordinateSystem(self.pres, tuple(names), tuple(self.cls(n) for n in names))


def kodaira_surface_coordinates(pres: DGAPresentation | None = None) -> CoordinateSystem:
    """t0..t5, s0..s5 attached to the twelve harmonic classes of the Kodaira surface."""
    pres = pres or complex_dga(build_kodaira(1))
    g = pres.gens
    names, classes = [], []
    for nm, text in KODAIRA_SURFACE_CLASSES:
        m, s = g.parse_monomial(text)
        names.append(nm)
        classes.append(Multivector(g, {m: s}))
    return CoordinateSystem(pres, tuple(names), tuple(classes))


def _class_from_spec(g: GeneratorSet, spec: dict) -> Multivector:
    out = Multivector.zero(g)
    for text, c in spec.items():
        m, s = g.parse_monomial(text)
        out = out + Multivector(g, {m: c * s})
    return out


def degree_two_coordinates(n: int, pres: DGAPresentation | None = None) -> CoordinateSystem:
    """Coordinates on 𝔥²: aB<j> (𝓑^j), aBB<ij> (𝓑^{ij}), a (ψ), aphi<jk> (φ^j_k, j<=k), aT<j> (B_j)."""
    pres = pres or complex_dga(build_kodaira(n))
    g = pres.gens
    cl = degree_two_classes(n)
    names, classes = [], []
    rename = {}
    for label, spec in cl["0,2"]:
        idx = label.split("^")[1]
        rename[label] = ("aB" if len(idx) == 1 else "aBB") + idx
    for label, spec in cl["1,1"]:
        rename[label] = "a" if label == "phi" else "aphi" + label.split("^")[1].replace("_", "")
    for label, spec in cl["2,0"]:
        rename[label] = "aT" + label.split("_")[1]
    for key in ("0,2", "1,1", "2,0"):
        for label, spec in cl[key]:
            names.append(rename[label])
            classes.append(_class_from_spec(g, spec))
    return CoordinateSystem(pres, tuple(names), tuple(classes))


# ----------------------------------------------------------------------------
# Maurer-Cartan
# ----------------------------------------------------------------------------

HALF = gq("1/2")


def mc_residual(pres: DGAPresentation, gamma: SuperField, chen: ChenField | None = None) -> SuperField:
    """∂̄Γ + ∂⃗Γ + ½[Γ, Γ], truncated at the ring order."""
    out = gamma.differential(pres) + gamma.bracket(pres, gamma).scale(HALF)
    if chen:
        out = out + chen.apply(gamma)
    return out


def dbar_gamma(pres: DGAPresentation, gamma: SuperField, v: SuperField) -> SuperField:
    """∂̄_Γ v = ∂̄v + [Γ, v]."""
    return v.differential(pres) + gamma.bracket(pres, v)


class _ClassSolver:
    """Coefficients of harmonic fields in a fixed list of classes."""

    def __init__(self, coords: CoordinateSystem):
        self.coords = coords
        monos = sorted({m for c in coords.classes for m in c.terms})
        self.monos = monos
        self.row = {m: k for k, m in enumerate(monos)}
        A = linalg.from_columns([[c.coeff(m) for m in monos] for c in coords.classes], len(monos))
        AH = linalg.conj_transpose(A)
        self.left_inv = linalg.matmul(linalg.inverse(linalg.matmul(AH, A)), AH)
        self.A = A

    def solve(self, field: SuperField) -> dict[str, SuperScalar] | None:
        """c with Σ_α c_α θ^α = field, or None if field is outside the span."""
        ring = field.ring
        for m in field.terms:
            if m not in self.row:
                return None
        out: dict[str, SuperScalar] = {}
        for a, nm in enumerate(self.coords.names):
            acc = SuperScalar._raw(ring, {})
            for m, c in field.terms.items():
                w = self.left_inv[a][self.row[m]]
                if w:
                    acc = acc + c * w
            if acc:
                out[nm] = acc
        # verify reconstruction
        rec = SuperField.zero(ring, field.gens)
        for nm, c in out.items():
            rec = rec + SuperField.from_multivector(ring, self.coords.cls(nm), c)
        if rec != field:
            return None
        return out


def kuranishi_solve(coords: CoordinateSystem, D: int) -> tuple[SuperField, ChenField]:
    """Kuranishi recursion in harmonic gauge up to total order D.

    Γ^(1) = Σ x_α θ^α; at order k the source Q_k = -(½[Γ,Γ])_k - (∂⃗Γ)_k is
    split into its harmonic part (absorbed by the Chen field) and the rest,
    which is inverted by ∂̄*G.
    """
    if D < 1:
        raise ValueError("truncation order must be at least 1")
    pres = coords.pres
    h = hodge_for(pres)
    ring = coords.ring(D)
    gens = pres.gens
    solver = _ClassSolver(coords)
    parts: dict[int, SuperField] = {1: coords.gamma1(ring)}
    chen_parts: dict[int, ChenField] = {}
    for k in range(2, D + 1):
        q = SuperField.zero(ring, gens)
        for i in range(1, k):
            j = k - i
            if i > j:
                break
            br = parts[i].bracket(pres, parts[j])
            q = q - (br.scale(HALF) if i == j else br)
        for j, cj in chen_parts.items():
            m = k + 1 - j
            if m in parts:
                q = q - cj.apply(parts[m])
        q = q.homogeneous(k)
        harm = q.apply_even(h.harmonic_mono)
        c = solver.solve(harm)
        if c is None:
            raise ReductionError(f"harmonic part at order {k} is outside the span of the coordinate classes")
        if c:
            chen_parts[k] = ChenField(ring, c)
        rest = q - harm
        parts[k] = rest.apply_even(h.green_mono).apply_odd(h.adjoint_mono)
        log.debug("order %d: %d terms in Γ, %d chen coefficients", k, len(parts[k].terms), len(c))
    gamma = SuperField.zero(ring, gens)
    for p in parts.values():
        gamma = gamma + p
    chen = ChenField(ring)
    for cf in chen_parts.values():
        for nm, v in cf.coeffs.items():
            chen.add(nm, v)
    return gamma, chen


def closed_form_kodaira(D: int) -> tuple[SuperField, ChenField]:
    """Γ = Γ_1 - s0 t4/(1-t2)·T - s0 s3/(1-t2)·ρ̄∧T and the four Chen coefficients.

    Products of odd coordinates are taken in the strict ring, so repeated odd
    symbols vanish.
    """
    coords = kodaira_surface_coordinates()
    ring = coords.ring(D)
    g = coords.pres.gens
    inv = (ring.const(1) - ring.var("t2")).inverse()
    s0, s3, t4 = ring.var("s0"), ring.var("s3"), ring.var("t4")
    mu1 = -(s0 * t4) * inv
    mu2 = -(s0 * s3) * inv
    gamma = coords.gamma1(ring)
    gamma = gamma + SuperField.from_multivector(ring, Multivector.from_names(g, "T"), mu1)
    gamma = gamma + SuperField.from_multivector(ring, Multivector.from_names(g, "or", "T"), mu2)
    hi = gq(0, "1/2")
    chen = ChenField(
        ring,
        {
            "s1": mu1 * s0 * hi,
            "t1": mu2 * s0 * hi,
            "t3": mu1 * mu2 * hi,
            "t5": mu2 * s3 * gq(0, 1),
        },
    )
    return gamma, chen


# ----------------------------------------------------------------------------
# generalized deformations of Kodaira manifolds
# ----------------------------------------------------------------------------


def generalized_s(pres: DGAPresentation, n: int, j: int, k: int) -> Multivector:
    """s^j_k = ½(ω̄^j∧T_k - ω̄^k∧T_j), indices from 1."""
    g = pres.gens
    om = (lambda i: "ow") if n == 1 else (lambda i: f"ow{i}")
    tt = (lambda i: "T") if n == 1 else (lambda i: f"T{i}")
    a = Multivector.from_names(g, om(j), tt(k), coeff=HALF)
    b = Multivector.from_names(g, om(k), tt(j), coeff=HALF)
    return a - b


def generalized_solution(n: int, D: int) -> tuple[CoordinateSystem, SuperField]:
    """Γ = Γ_1 - (1/(1-a)) Σ_{i,j} a^i a_j s^j_i on the degree-two coordinates."""
    coords = degree_two_coordinates(n)
    ring = coords.ring(D)
    pres = coords.pres
    gamma = coords.gamma1(ring)
    inv = (ring.const(1) - ring.var("a")).inverse()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            s = generalized_s(pres, n, j, i)
            if not s:
                continue
            coef = -(ring.var(f"aT{i}") * ring.var(f"aB{j}")) * inv
            gamma = gamma + SuperField.from_multivector(ring, s, coef)
    return coords, gamma


# ----------------------------------------------------------------------------
# Frobenius products
# ----------------------------------------------------------------------------

K0_GENERIC_COORDINATES = ("t0", "t1", "t2", "t3", "t4", "s1", "s2", "s3", "s4", "s5")


@dataclass
class FrobeniusTable:
    """μ^{αβ}_γ: ∂_α∘∂_β = Σ_γ μ^{αβ}_γ ∂_γ."""

    ring: SuperRing
    coords: tuple[str, ...]
    products: dict[tuple[str, str], dict[str, SuperScalar]] = field(default_factory=dict)

    def product(self, a: str, b: str) -> dict[str, SuperScalar]:
        return self.products.get((a, b), {})

    def entry(self, a: str, b: str, c: str) -> SuperScalar:
        return self.product(a, b).get(c, SuperScalar._raw(self.ring, {}))

    def supercommutative(self) -> bool:
        for a in self.coords:
            for b in self.coords:
                sign = -1 if self.ring.parity_of(a) and self.ring.parity_of(b) else 1
                pa, pb = self.product(a, b), self.product(b, a)
                if set(pa) != set(pb):
                    return False
                if any(pa[c] != pb[c] * sign for c in pa):
                    return False
        return True

    def unit_ok(self, unit: str = "t0") -> bool:
        one = self.ring.const(1)
        for a in self.coords:
            want = {a: one} if a in self.coords else {}
            if self.product(unit, a) != want or self.product(a, unit) != want:
                return False
        return True

    def _times(self, left: dict[str, SuperScalar], right: dict[str, SuperScalar]) -> dict[str, SuperScalar]:
        """(Σ f_α ∂_α)∘(Σ g_β ∂_β) = Σ (-1)^{|α||g_β|} f_α g_β ∂_α∘∂_β."""
        out: dict[str, SuperScalar] = {}
        for a, f in left.items():
            pa = self.ring.parity_of(a)
            for b, gcoef in right.items():
                if pa:
                    gcoef = SuperScalar._raw(self.ring, {k: (-c if popcount(k[1]) & 1 else c) for k, c in gcoef.terms.items()})
                fg = f * gcoef
                if not fg:
                    continue
                for c, mu in self.product(a, b).items():
                    val = fg * mu
                    if val:
                        s = out.get(c)
                        s = val if s is None else s + val
                        if s:
                            out[c] = s
                        else:
                            out.pop(c, None)
        return out

    def associative(self) -> tuple[bool, tuple[str, str, str] | None]:
        one = self.ring.const(1)
        for a in self.coords:
            for b in self.coords:
                ab = self.product(a, b)
                for c in self.coords:
                    left = self._times(ab, {c: one})
                    right = self._times({a: one}, self.product(b, c))
                    if left != right:
                        return False, (a, b, c)
        return True, None


def frobenius_products(D: int, coords: Sequence[str] = K0_GENERIC_COORDINATES, quotient: Sequence[str] = ("t5",)) -> FrobeniusTable:
    """Products of ∂Γ/∂x on the generic part of K0 (s0 = 0, Γ = Γ_1).

    Each wedge ∂_αΓ∧∂_βΓ is reduced order by order modulo the image of
    ∂̄_Γ = ∂̄ + [Γ, ·]; harmonic remainders are read off in the coordinate
    classes, and the directions in ``quotient`` are discarded.
    """
    full = kodaira_surface_coordinates()
    pres = full.pres
    h = hodge_for(pres)
    ring = full.ring(D)
    gamma = full.gamma1(ring).substitute_zero(["s0"])
    solver = _ClassSolver(full)
    table = FrobeniusTable(ring, tuple(coords))
    derivs = {nm: gamma.derivative(nm) for nm in coords}
    for a in coords:
        for b in coords:
            prod = derivs[a].wedge(derivs[b])
            mu = _reduce(prod, gamma, pres, h, solver, D)
            table.products[(a, b)] = {c: v for c, v in mu.items() if c not in quotient and v}
    return table


def _reduce(prod: SuperField, gamma: SuperField, pres, h, solver: _ClassSolver, D: int) -> dict[str, SuperScalar]:
    ring = prod.ring
    gens = pres.gens
    mu: dict[str, SuperScalar] = {}
    u_prev = SuperField.zero(ring, gens)
    for k in range(D + 1):
        r = prod.homogeneous(k) - gamma.bracket(pres, u_prev).homogeneous(k)
        harm = r.apply_even(h.harmonic_mono)
        c = solver.solve(harm)
        if c is None:
            raise ReductionError(f"harmonic part at order {k} is outside the coordinate classes")
        for nm, v in c.items():
            mu[nm] = mu[nm] + v if nm in mu else v
        rest = r - harm
        if rest.differential(pres):
            raise ReductionError(f"remainder at order {k} is not ∂̄-exact")
        u_prev = rest.apply_even(h.green_mono).apply_odd(h.adjoint_mono)
    return mu
