"""Differential Gerstenhaber algebras given by generator-level data.

A :class:`DGAPresentation` stores the bracket of every pair of degree-one
generators and the differential of every generator.  Both operations extend to
the whole exterior algebra: the bracket as a biderivation (graded commutative
law plus the two distributive laws), the differential as an anti-derivation.

Degrees are total degrees; every generator is odd.  With ``|a|`` the degree of
``a`` the conventions are::

    [a, b]        = -(-1)^((|a|+1)(|b|+1)) [b, a]
    [a∧b, c]      = a∧[b, c] + (-1)^(|a||b|) b∧[a, c]
    [a, b∧c]      = [a, b]∧c + (-1)^(|b| + |a||b|) b∧[a, c]
    ∂̄(a∧b)        = ∂̄a∧b + (-1)^|a| a∧∂̄b
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .exterior import GeneratorSet, Multivector, add_into, merge_sign, popcount, wedge_terms
from .scalars import GaussianRational

log = logging.getLogger(__name__)

__all__ = [
    "DGAPresentation",
    "AxiomReport",
    "AxiomResult",
    "ComplexLieAlgebra",
    "schouten",
    "schouten_direct",
    "differential",
    "verify_axioms",
]

Terms = dict  # int mask -> GaussianRational


def _sgn(k: int) -> int:
    return -1 if k & 1 else 1


def _mono_wedge(ma: int, mb: int) -> tuple[int, int]:
    """(mask, sign) of the product of two monomials; sign 0 if it vanishes."""
    if ma & mb:
        return 0, 0
    return ma | mb, merge_sign(ma, mb)


def _left_mul(mask: int, terms: Mapping[int, GaussianRational], sign: int = 1) -> Terms:
    """``sign * (monomial ∧ terms)``."""
    out: Terms = {}
    for m, c in terms.items():
        if m & mask:
            continue
        s = merge_sign(mask, m) * sign
        out[m | mask] = c if s > 0 else -c
    return out


def _right_mul(terms: Mapping[int, GaussianRational], mask: int, sign: int = 1) -> Terms:
    """``sign * (terms ∧ monomial)``."""
    out: Terms = {}
    for m, c in terms.items():
        if m & mask:
            continue
        s = merge_sign(m, mask) * sign
        out[m | mask] = c if s > 0 else -c
    return out


class DGAPresentation:
    """Generators with bracket and differential tables on degree-one elements.

    ``bracket_table`` maps a pair of generator names to the bracket of those
    generators (a Multivector or a ``{mask: coeff}`` mapping); missing pairs
    are zero and the antisymmetric partner is filled in automatically.
    ``differential_table`` maps generator names to their degree-two images.
    """

    def __init__(
        self,
        gens: GeneratorSet,
        bracket_table: Mapping[tuple[str, str], object] | None = None,
        differential_table: Mapping[str, object] | None = None,
        name: str = "",
    ):
        self.gens = gens
        self.name = name
        self._gbr: dict[tuple[int, int], Terms] = {}
        self._gd: dict[int, Terms] = {}
        for (x, y), val in (bracket_table or {}).items():
            i, j = gens.index[x], gens.index[y]
            terms = _as_terms(val)
            if not terms:
                continue
            for m in terms:
                if popcount(m) != 1:
                    raise ValueError(f"bracket [{x},{y}] must have degree 1")
            prev = self._gbr.get((i, j))
            if prev is not None and prev != terms:
                raise ValueError(f"conflicting bracket entries for [{x},{y}]")
            partner = self._gbr.get((j, i))
            neg = {m: -c for m, c in terms.items()}
            if partner is not None and partner != neg:
                raise ValueError(f"bracket table is not antisymmetric at ({x},{y})")
            self._gbr[(i, j)] = terms
            self._gbr[(j, i)] = neg
            if i == j and terms:
                raise ValueError(f"bracket [{x},{x}] must vanish for a degree-one generator")
        for x, val in (differential_table or {}).items():
            terms = _as_terms(val)
            for m in terms:
                if popcount(m) != 2:
                    raise ValueError(f"differential of {x} must have degree 2")
            if terms:
                self._gd[gens.index[x]] = terms
        self._br_cache: dict[tuple[int, int], Terms] = {}
        self._d_cache: dict[int, Terms] = {}

    # generator-level views ---------------------------------------------------
    def generator_bracket(self, x: str, y: str) -> Multivector:
        i, j = self.gens.index[x], self.gens.index[y]
        return Multivector(self.gens, self._gbr.get((i, j), {}))

    def generator_differential(self, x: str) -> Multivector:
        return Multivector(self.gens, self._gd.get(self.gens.index[x], {}))

    @property
    def bracket_table(self) -> dict[tuple[str, str], Multivector]:
        names = self.gens.names
        return {(names[i], names[j]): Multivector(self.gens, t) for (i, j), t in self._gbr.items()}

    @property
    def differential_table(self) -> dict[str, Multivector]:
        names = self.gens.names
        return {names[i]: Multivector(self.gens, t) for i, t in self._gd.items()}

    def with_differential(self, **images) -> "DGAPresentation":
        """Copy with some generator differentials replaced (used to corrupt data in tests)."""
        dt = dict(self.differential_table)
        dt.update(images)
        return DGAPresentation(self.gens, self.bracket_table, dt, name=self.name + "*")

    # monomial-level operations -------------------------------------------------
    def bracket_mono(self, ma: int, mb: int) -> Terms:
        """Bracket of two basis monomials, by peeling the leftmost generator."""
        key = (ma, mb)
        hit = self._br_cache.get(key)
        if hit is not None:
            return hit
        if ma == 0 or mb == 0:
            out: Terms = {}
        elif ma & (ma - 1):
            # [g∧r, c] = g∧[r, c] + (-1)^{|r|} r∧[g, c]
            g = ma & -ma
            r = ma ^ g
            out = _left_mul(g, self.bracket_mono(r, mb))
            add_into(out, _left_mul(r, self.bracket_mono(g, mb), _sgn(popcount(r))))
        elif mb & (mb - 1):
            # |a| = 1 here: [a, g∧r] = [a, g]∧r + g∧[a, r]
            g = mb & -mb
            r = mb ^ g
            out = _right_mul(self.bracket_mono(ma, g), r)
            add_into(out, _left_mul(g, self.bracket_mono(ma, r)))
        else:
            out = self._gbr.get((ma.bit_length() - 1, mb.bit_length() - 1), {})
        self._br_cache[key] = out
        return out

    def differential_mono(self, m: int) -> Terms:
        hit = self._d_cache.get(m)
        if hit is not None:
            return hit
        if m == 0:
            out: Terms = {}
        elif m & (m - 1):
            g = m & -m
            r = m ^ g
            out = _right_mul(self._gd.get(g.bit_length() - 1, {}), r)
            add_into(out, _left_mul(g, self.differential_mono(r), -1))
        else:
            out = self._gd.get(m.bit_length() - 1, {})
        self._d_cache[m] = out
        return out

    def bracket_terms(self, a: Mapping[int, GaussianRational], b: Mapping[int, GaussianRational]) -> Terms:
        out: Terms = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                t = self.bracket_mono(ma, mb)
                if t:
                    add_into(out, t, ca * cb)
        return out

    def differential_terms(self, a: Mapping[int, GaussianRational]) -> Terms:
        out: Terms = {}
        for m, c in a.items():
            t = self.differential_mono(m)
            if t:
                add_into(out, t, c)
        return out

    def __repr__(self):
        return f"DGAPresentation({self.name or 'unnamed'}, generators={list(self.gens.names)})"


def _as_terms(val) -> Terms:
    if isinstance(val, Multivector):
        return dict(val.terms)
    return {m: GaussianRational.coerce(c) for m, c in dict(val).items() if c}


def schouten(pres: DGAPresentation, a: Multivector, b: Multivector) -> Multivector:
    """Schouten bracket extended from the generator table as a biderivation."""
    return Multivector._raw(pres.gens, pres.bracket_terms(a.terms, b.terms))


def differential(pres: DGAPresentation, a: Multivector) -> Multivector:
    """Anti-derivation extension of the generator differential."""
    return Multivector._raw(pres.gens, pres.differential_terms(a.terms))


# --------------------------------------------------------------------------
# Direct formulas from a Lie algebra with complex structure
# --------------------------------------------------------------------------


@dataclass
class ComplexLieAlgebra:
    """Complexified Lie algebra data behind a complex-side presentation.

    ``bracket`` holds Lie brackets of basis vectors of g_C by name (both
    orders), ``vector_names`` are the (1,0) basis vectors (also generators of
    the presentation), ``form_duals`` maps each (0,1)-form generator to the
    (0,1) vector it is dual to.
    """

    presentation: DGAPresentation
    bracket: dict[tuple[str, str], dict[str, GaussianRational]]
    vector_names: tuple[str, ...]
    form_duals: dict[str, str]

    def lie(self, x: str, y: str) -> dict[str, GaussianRational]:
        return self.bracket.get((x, y), {})

    def lie_derivative_1form(self, v: str, form: str) -> Terms:
        """(L_V θ)(B̄) = -θ([V, B̄]^{0,1}) for an invariant (0,1)-form θ."""
        gens = self.presentation.gens
        target = self.form_duals[form]
        out: Terms = {}
        for f, bbar in self.form_duals.items():
            c = self.lie(v, bbar).get(target)
            if c:
                out[1 << gens.index[f]] = -c
        return out


def _lie_derivative_form(lie: ComplexLieAlgebra, v: str, psi: int) -> Terms:
    """Even derivation L_V on a monomial of (0,1)-forms."""
    out: Terms = {}
    m = psi
    while m:
        low = m & -m
        m ^= low
        name = lie.presentation.gens.generators[low.bit_length() - 1].name
        d1 = lie.lie_derivative_1form(v, name)
        if not d1:
            continue
        # replace the factor `low` in place: before ∧ L(low) ∧ after
        before = psi & (low - 1)
        after = psi & ~((low << 1) - 1)
        t = _right_mul(_left_mul(before, d1), after)
        add_into(out, t)
    return out


def _lie_vec_on_polyvector(lie: ComplexLieAlgebra, u: str, theta: int) -> Terms:
    """[U, V_1∧...∧V_p] = Σ_l V_1∧...∧[U, V_l]∧...∧V_p (Lie derivative)."""
    gens = lie.presentation.gens
    out: Terms = {}
    m = theta
    while m:
        low = m & -m
        m ^= low
        vname = gens.generators[low.bit_length() - 1].name
        br = lie.lie(u, vname)
        if not br:
            continue
        d1 = {1 << gens.index[k]: c for k, c in br.items() if c}
        before = theta & (low - 1)
        after = theta & ~((low << 1) - 1)
        add_into(out, _right_mul(_left_mul(before, d1), after))
    return out


def _vec_form(lie: ComplexLieAlgebra, xi: int, psi: int) -> Terms:
    """[V_1∧...∧V_k, ψ] = Σ_j (-1)^{k-j} V_1..V̂_j..V_k ∧ L_{V_j}ψ."""
    if xi == 0 or psi == 0:
        return {}
    gens = lie.presentation.gens
    idx = [k for k in range(xi.bit_length()) if xi >> k & 1]
    kk = len(idx)
    out: Terms = {}
    for j, bit in enumerate(idx, start=1):
        lv = _lie_derivative_form(lie, gens.generators[bit].name, psi)
        if lv:
            add_into(out, _left_mul(xi ^ (1 << bit), lv, _sgn(kk - j)))
    return out


def _vec_vec(lie: ComplexLieAlgebra, xi: int, theta: int) -> Terms:
    """[U_1∧...∧U_k, Θ] = Σ_j (-1)^{k-j} U_1..Û_j..U_k ∧ [U_j, Θ]."""
    if xi == 0 or theta == 0:
        return {}
    gens = lie.presentation.gens
    idx = [k for k in range(xi.bit_length()) if xi >> k & 1]
    kk = len(idx)
    out: Terms = {}
    for j, bit in enumerate(idx, start=1):
        lv = _lie_vec_on_polyvector(lie, gens.generators[bit].name, theta)
        if lv:
            add_into(out, _left_mul(xi ^ (1 << bit), lv, _sgn(kk - j)))
    return out


def _direct_mono(lie: ComplexLieAlgebra, ma: int, mb: int) -> Terms:
    gens = lie.presentation.gens
    fm, vm = gens.form_mask, gens.vector_mask
    phi, xi = ma & fm, ma & vm
    psi, theta = mb & fm, mb & vm
    s_a = merge_sign(phi, xi)  # a = s_a φ∧Ξ
    s_b = merge_sign(psi, theta)
    dphi, dxi, dpsi, dtheta = popcount(phi), popcount(xi), popcount(psi), popcount(theta)
    A, B = dphi + dxi, dpsi + dtheta
    out: Terms = {}
    # φ∧[Ξ,ψ]∧Θ
    t = _vec_form(lie, xi, psi)
    if t:
        add_into(out, _right_mul(_left_mul(phi, t), theta))
    # (-1)^{AB+A+B} ψ∧[Θ,φ]∧Ξ
    t = _vec_form(lie, theta, phi)
    if t:
        add_into(out, _right_mul(_left_mul(psi, t), xi, _sgn(A * B + A + B)))
    # (-1)^{ψ(Ξ+1)} φ∧ψ∧[Ξ,Θ]
    t = _vec_vec(lie, xi, theta)
    if t:
        pp, sp = _mono_wedge(phi, psi)
        if sp:
            add_into(out, _left_mul(pp, t, sp * _sgn(dpsi * (dxi + 1))))
    if s_a * s_b < 0:
        out = {m: -c for m, c in out.items()}
    return out


def schouten_direct(lie: ComplexLieAlgebra, a: Multivector, b: Multivector) -> Multivector:
    """Bracket from the explicit polyvector/form formulas (independent oracle).

    Uses Lie brackets of (1,0) vectors, Lie derivatives of invariant (0,q)
    forms computed from structure constants, and the mixed three-term formula.
    """
    if not isinstance(lie, ComplexLieAlgebra):
        raise TypeError("schouten_direct needs the Lie algebra data of a complex structure")
    out: Terms = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            t = _direct_mono(lie, ma, mb)
            if t:
                add_into(out, t, ca * cb)
    return Multivector._raw(lie.presentation.gens, out)


# --------------------------------------------------------------------------
# Axiom verification
# --------------------------------------------------------------------------


@dataclass
class AxiomResult:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: tuple[str, ...] | None = None
    detail: str = ""

    def fail(self, names: tuple[str, ...], detail: str = ""):
        if self.passed:
            self.passed = False
            self.counterexample = names
            self.detail = detail


@dataclass
class AxiomReport:
    """Per-axiom outcome of an exhaustive check over basis monomials."""

    presentation: str
    results: dict[str, AxiomResult] = field(default_factory=dict)
    basis_size: int = 0
    jacobi_max_degree: int | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results.values() if not r.passed]

    def to_dict(self) -> dict:
        return {
            "presentation": self.presentation,
            "basis_size": self.basis_size,
            "jacobi_max_degree": self.jacobi_max_degree,
            "passed": self.passed,
            "axioms": {
                k: {
                    "passed": r.passed,
                    "checked": r.checked,
                    "counterexample": list(r.counterexample) if r.counterexample else None,
                    "detail": r.detail,
                }
                for k, r in self.results.items()
            },
        }


AXIOMS = ("L1", "L2", "L3", "L3-cyclic", "C1", "C2", "C3", "distributive1", "distributive2", "D1", "D2", "D3", "D4")


def _eq(a: Terms, b: Terms) -> bool:
    return a == b


def _combine(*parts: tuple[Terms, int]) -> Terms:
    out: Terms = {}
    for t, s in parts:
        if t:
            add_into(out, t, s)
    return out


def verify_axioms(
    pres: DGAPresentation,
    jacobi_max_degree: int | None = None,
    progress: Callable[[str], None] | None = None,
) -> AxiomReport:
    """Exhaustively check L1-L3, C1-C3, D1-D4 and the expanded distributive laws.

    Every axiom is checked on all pairs or triples of basis monomials, except
    that Jacobi (L3 and its cyclic form) is limited to monomials of degree at
    most ``jacobi_max_degree`` when that is given.
    """
    gens = pres.gens
    basis = gens.basis()
    nb = len(basis)
    deg = {m: popcount(m) for m in basis}
    names = {m: gens.monomial_name(m) for m in basis}
    rep = AxiomReport(presentation=pres.name or repr(pres), basis_size=nb, jacobi_max_degree=jacobi_max_degree)
    R = {k: AxiomResult(k) for k in AXIOMS}
    rep.results = R

    BR: dict[tuple[int, int], Terms] = {}
    for a in basis:
        for b in basis:
            t = pres.bracket_mono(a, b)
            if t:
                BR[(a, b)] = t
    D = {m: pres.differential_mono(m) for m in basis}
    if progress:
        progress(f"bracket table: {len(BR)} nonzero of {nb * nb}")

    def br(x: Terms, m: int) -> Terms:
        out: Terms = {}
        for mx, c in x.items():
            t = BR.get((mx, m))
            if t:
                add_into(out, t, c)
        return out

    def rbr(m: int, x: Terms) -> Terms:
        out: Terms = {}
        for mx, c in x.items():
            t = BR.get((m, mx))
            if t:
                add_into(out, t, c)
        return out

    empty: Terms = {}
    # ---- pairs
    for a in basis:
        da = deg[a]
        Da = D[a]
        R["D1"].checked += 1
        if any(popcount(m) != da + 1 for m in Da):
            R["D1"].fail((names[a],), "differential does not raise degree by one")
        R["D2"].checked += 1
        if pres.differential_terms(Da):
            R["D2"].fail((names[a],), "∂̄∂̄ ≠ 0")
        for b in basis:
            db = deg[b]
            ab = BR.get((a, b), empty)
            R["L1"].checked += 1
            if any(popcount(m) != da + db - 1 for m in ab):
                R["L1"].fail((names[a], names[b]), "bracket degree is not |a|+|b|-1")
            R["L2"].checked += 1
            ba = BR.get((b, a), empty)
            s = -_sgn((da + 1) * (db + 1))
            if ab != ({m: c if s > 0 else -c for m, c in ba.items()}):
                R["L2"].fail((names[a], names[b]), "graded antisymmetry fails")
            mw, sw = _mono_wedge(a, b)
            R["C1"].checked += 1
            R["C2"].checked += 1
            if sw:
                if popcount(mw) != da + db:
                    R["C1"].fail((names[a], names[b]))
                mw2, sw2 = _mono_wedge(b, a)
                if sw2 * _sgn(da * db) != sw:
                    R["C2"].fail((names[a], names[b]), "graded commutativity fails")
            # D4: ∂̄(a∧b) = ∂̄a∧b + (-1)^a a∧∂̄b
            R["D4"].checked += 1
            lhs = pres.differential_terms({mw: 1 if sw > 0 else -1}) if sw else empty
            rhs = _combine((_right_mul(Da, b), 1), (_left_mul(a, D[b]), _sgn(da)))
            if lhs != rhs:
                R["D4"].fail((names[a], names[b]), "anti-derivation rule fails")
            # D3: ∂̄[a,b] = [∂̄a,b] - (-1)^a [a,∂̄b]
            R["D3"].checked += 1
            lhs = pres.differential_terms(ab) if ab else empty
            rhs = _combine((br(Da, b), 1), (rbr(a, D[b]), -_sgn(da)))
            if lhs != rhs:
                R["D3"].fail((names[a], names[b]), "differential is not a derivation of the bracket")
    if progress:
        progress("pair axioms done")

    # ---- triples for the distributive laws (C3 and its expanded forms)
    nz_right: dict[int, set[int]] = {}
    nz_left: dict[int, set[int]] = {}
    for (x, y) in BR:
        nz_right.setdefault(y, set()).add(x)
        nz_left.setdefault(x, set()).add(y)
    total = nb * nb * nb
    for key in ("C3", "distributive1", "distributive2"):
        R[key].checked = total

    # C3 / distributive2: [a∧b, c] = a∧[b,c] + (-1)^{ab} b∧[a,c] = a∧[b,c] + (-1)^{b+bc}[a,c]∧b
    for c in basis:
        dc = deg[c]
        nzc = nz_right.get(c, set())
        for a in basis:
            ac = BR.get((a, c))
            da = deg[a]
            cands = basis if ac is not None else _candidates(a, nzc)
            for b in cands:
                bc = BR.get((b, c))
                if a & b:
                    lhs = empty
                else:
                    t = BR.get((a | b, c))
                    lhs = empty if t is None else ({m: v for m, v in t.items()} if merge_sign(a, b) > 0 else {m: -v for m, v in t.items()})
                if lhs is empty and bc is None and ac is None:
                    continue
                db = deg[b]
                r1 = _combine((_left_mul(a, bc or empty), 1), (_left_mul(b, ac or empty), _sgn(da * db)))
                if lhs != r1:
                    R["C3"].fail((names[a], names[b], names[c]), "[a∧b,c] ≠ a∧[b,c] ± b∧[a,c]")
                r2 = _combine((_left_mul(a, bc or empty), 1), (_right_mul(ac or empty, b), _sgn(db + db * dc)))
                if lhs != r2:
                    R["distributive2"].fail((names[a], names[b], names[c]), "second form fails")
    if progress:
        progress("C3 done")

    # distributive1: [a, b∧c] = [a,b]∧c + (-1)^{bc}[a,c]∧b = [a,b]∧c + (-1)^{b+ab} b∧[a,c]
    for a in basis:
        da = deg[a]
        nza = nz_left.get(a, set())
        for b in basis:
            ab_ = BR.get((a, b))
            db = deg[b]
            cands = basis if ab_ is not None else _candidates(b, nza)
            for c in cands:
                acb = BR.get((a, c))
                if b & c:
                    lhs = empty
                else:
                    t = BR.get((a, b | c))
                    lhs = empty if t is None else (t if merge_sign(b, c) > 0 else {m: -v for m, v in t.items()})
                if lhs is empty and ab_ is None and acb is None:
                    continue
                dc = deg[c]
                r1 = _combine((_right_mul(ab_ or empty, c), 1), (_right_mul(acb or empty, b), _sgn(db * dc)))
                r2 = _combine((_right_mul(ab_ or empty, c), 1), (_left_mul(b, acb or empty), _sgn(db + da * db)))
                if lhs != r1 or lhs != r2:
                    R["distributive1"].fail((names[a], names[b], names[c]), "[a,b∧c] expansion fails")
    if progress:
        progress("distributive1 done")

    # ---- Jacobi
    jb = [m for m in basis if jacobi_max_degree is None or deg[m] <= jacobi_max_degree]
    R["L3"].checked = R["L3-cyclic"].checked = len(jb) ** 3
    jset = set(jb)
    for a in jb:
        da = deg[a]
        for b in jb:
            db = deg[b]
            ab_ = BR.get((a, b))
            for c in jb:
                bc = BR.get((b, c))
                ac = BR.get((a, c))
                if ab_ is None and bc is None and ac is None:
                    continue
                dc = deg[c]
                a_bc = rbr(a, bc) if bc else empty
                ab_c = br(ab_, c) if ab_ else empty
                b_ac = rbr(b, ac) if ac else empty
                # L3: [a,[b,c]] = [[a,b],c] - (-1)^{ab+a+b}[b,[a,c]]
                rhs = _combine((ab_c, 1), (b_ac, -_sgn(da * db + da + db)))
                if a_bc != rhs:
                    R["L3"].fail((names[a], names[b], names[c]), "Jacobi identity fails")
                # cyclic: Σ (-1)^{(a+1)(c+1)} [a,[b,c]] = 0
                ca = BR.get((c, a))
                b_ca = rbr(b, ca) if ca else empty
                c_ab = rbr(c, ab_) if ab_ else empty
                cyc = _combine(
                    (a_bc, _sgn((da + 1) * (dc + 1))),
                    (b_ca, _sgn((db + 1) * (da + 1))),
                    (c_ab, _sgn((dc + 1) * (db + 1))),
                )
                if cyc:
                    R["L3-cyclic"].fail((names[a], names[b], names[c]), "cyclic Jacobi fails")
    if progress:
        progress("Jacobi done")
    del jset
    for r in R.values():
        if not r.passed:
            log.info("axiom %s fails at %s: %s", r.name, r.counterexample, r.detail)
    return rep


def _candidates(x: int, nz: set[int]) -> Iterable[int]:
    """Partners y of x for which [x∧y, c] or [y, c] can be nonzero, given [x, c] = 0."""
    out = set(nz)
    for z in nz:
        if z & x == x and z != x:
            out.add(z ^ x)
    return out
