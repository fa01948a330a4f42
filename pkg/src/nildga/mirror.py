"""Symplectic mirror of the Kodaira surface.

Deformed distributions are handled in the ordered basis
``T̄, W̄, ω, ρ, T, W, ω̄, ρ̄`` of the complexified ``T ⊕ T*``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .dga import DGAPresentation
from .exterior import Multivector, add_into, wedge_terms
from .hodge import hodge_for
from .nilcomplex import SpecError, SymplecticSpec, build_kodaira, complex_dga, contract, symplectic_dga
from .scalars import ONE, ZERO, GaussianRational, gq

__all__ = [
    "FRAME_BASIS",
    "graph_frame",
    "explicit_frame",
    "special_family_check",
    "MirrorMap",
    "MirrorReport",
    "mirror_map",
    "verify_mirror",
    "derham_dims",
    "cohomology_match",
]

FRAME_BASIS = ("Tb", "Wb", "w", "r", "T", "W", "ow", "or")
_POS = {n: k for k, n in enumerate(FRAME_BASIS)}
# pairing between (0,1) vectors and (0,1) forms, (1,0) forms and (1,0) vectors
_PAIR = {("ow", "Tb"): ONE, ("or", "Wb"): ONE, ("T", "w"): ONE, ("W", "r"): ONE}
_CONJ = {"Tb": "T", "T": "Tb", "Wb": "W", "W": "Wb", "w": "ow", "ow": "w", "r": "or", "or": "r"}

# the four 2-fields and their coordinates
_TWO_FIELDS = (("t1", ("ow", "or")), ("t2", ("or", "W")), ("t3", ("ow", "T")), ("t4", ("T", "W")))


def _vec(d: dict[str, GaussianRational]) -> list[GaussianRational]:
    out = [ZERO] * 8
    for k, v in d.items():
        out[_POS[k]] = out[_POS[k]] + v
    return out


def _contract_two(a: str, b: str, x: str) -> dict[str, GaussianRational]:
    """(a∧b)(x) = a(x) b - b(x) a."""
    out: dict[str, GaussianRational] = {}
    ax = _PAIR.get((a, x))
    bx = _PAIR.get((b, x))
    if ax:
        out[b] = out.get(b, ZERO) + ax
    if bx:
        out[a] = out.get(a, ZERO) - bx
    return out


def graph_frame(t1, t2, t3, t4) -> linalg.Matrix:
    """Rows e + Γ(e) for e in T̄, W̄, ω, ρ with Γ = t1 ω̄∧ρ̄ + t2 ρ̄∧W + t3 ω̄∧T + t4 T∧W."""
    ts = dict(zip(("t1", "t2", "t3", "t4"), (GaussianRational.coerce(x) for x in (t1, t2, t3, t4))))
    rows = []
    for e in ("Tb", "Wb", "w", "r"):
        row = {e: ONE}
        for coord, (a, b) in _TWO_FIELDS:
            for k, v in _contract_two(a, b, e).items():
                row[k] = row.get(k, ZERO) + ts[coord] * v
        rows.append(_vec(row))
    return rows


def explicit_frame(t1, t2, t3, t4) -> linalg.Matrix:
    """The displayed 4×8 frame matrix, entered literally."""
    t1, t2, t3, t4 = (GaussianRational.coerce(x) for x in (t1, t2, t3, t4))
    z, o = ZERO, ONE
    return [
        [o, z, z, z, t3, z, z, t1],
        [z, o, z, z, z, t2, -t1, z],
        [z, z, o, z, z, t4, -t3, z],
        [z, z, z, o, -t4, z, z, -t2],
    ]


def conjugate_rows(rows: linalg.Matrix) -> linalg.Matrix:
    out = []
    for r in rows:
        d = {}
        for k, v in enumerate(r):
            if v:
                d[_CONJ[FRAME_BASIS[k]]] = v.conjugate()
        out.append(_vec(d))
    return out


# real frame in the complex basis
_HALF = gq("1/2")
_I = gq(0, 1)
_REAL_VECTORS = {
    "X": {"T": ONE, "Tb": ONE},
    "Y": {"T": _I, "Tb": -_I},
    "U": {"W": ONE, "Wb": ONE},
    "V": {"W": _I, "Wb": -_I},
}
_REAL_FORMS = {
    "alpha": {"w": _HALF, "ow": _HALF},
    "beta": {"w": -_I * _HALF, "ow": _I * _HALF},
    "gamma": {"r": _HALF, "or": _HALF},
    "delta": {"r": -_I * _HALF, "or": _I * _HALF},
}


def real_graph(s: SymplecticSpec) -> linalg.Matrix:
    """Rows v + ι_vΩ for v in X, Y, U, V, expressed in the complex basis."""
    rows = []
    for v in ("X", "Y", "U", "V"):
        d: dict[str, GaussianRational] = dict(_REAL_VECTORS[v])
        for form, c in contract(v, s).items():
            for k, x in _REAL_FORMS[form].items():
                d[k] = d.get(k, ZERO) + x * c
        rows.append(_vec(d))
    return rows


def special_family_frame(t) -> linalg.Matrix:
    t = GaussianRational.coerce(t)
    if not t:
        raise SpecError("the special family needs t ≠ 0")
    return graph_frame(t * _HALF, 0, 0, -2 / t.conjugate())


def special_family_check(t, omega_t=None) -> bool:
    """Span of the real graph of Ω equals L̄_Γ (and L_Γ) for the family member t.

    Ω is built from ``omega_t`` (default: ``t`` itself) as
    u(α∧γ - β∧δ) + v(α∧δ + β∧γ) with u + iv = omega_t.
    """
    t = GaussianRational.coerce(t)
    w = t if omega_t is None else GaussianRational.coerce(omega_t)
    if not t or not w:
        raise SpecError("the special family needs t ≠ 0")
    lbar = special_family_frame(t)
    graph = real_graph(SymplecticSpec(w.re, w.im, 0, 0))
    if linalg.rank(graph) != 4 or linalg.rank(lbar) != 4:
        return False
    if linalg.rank(graph + lbar) != 4:
        return False
    return linalg.rank(graph + conjugate_rows(lbar)) == 4


# ----------------------------------------------------------------------------
# mirror map Υ
# ----------------------------------------------------------------------------


@dataclass
class MirrorMap:
    """Υ on generators, extended multiplicatively."""

    delta: GaussianRational
    source: DGAPresentation
    target: DGAPresentation
    images: dict[str, Multivector] = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, repr=False)

    def mono(self, m: int) -> dict:
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        if m == 0:
            out = {0: ONE}
        else:
            out = {0: ONE}
            for g in self.source.gens.factors(m):
                out = wedge_terms(out, self.images[g.name].terms)
        self._cache[m] = out
        return out

    def apply_terms(self, terms: dict) -> dict:
        out: dict = {}
        for m, c in terms.items():
            add_into(out, self.mono(m), c)
        return out

    def __call__(self, v: Multivector) -> Multivector:
        return Multivector._raw(self.target.gens, self.apply_terms(v.terms))

    def matrix(self) -> linalg.Matrix:
        sb, tb = self.source.gens.basis(), self.target.gens.basis()
        idx = {m: k for k, m in enumerate(tb)}
        cols = []
        for m in sb:
            col = [ZERO] * len(tb)
            for tm, c in self.mono(m).items():
                col[idx[tm]] = c
            cols.append(col)
        return linalg.from_columns(cols, len(tb))


def mirror_map(s: SymplecticSpec, source: DGAPresentation | None = None, target: DGAPresentation | None = None) -> MirrorMap:
    """ω̄ ↦ 2iα′, ρ̄ ↦ δ, T ↦ γ, W ↦ -Δβ′."""
    source = source or complex_dga(build_kodaira(1))
    target = target or symplectic_dga(s)
    d = GaussianRational(s.delta)
    tg = target.gens
    images = {
        "ow": Multivector.from_names(tg, "ap", coeff=gq(0, 2)),
        "or": Multivector.from_names(tg, "d"),
        "T": Multivector.from_names(tg, "g"),
        "W": Multivector.from_names(tg, "bp", coeff=-d),
    }
    return MirrorMap(d, source, target, images)


@dataclass
class MirrorReport:
    delta: GaussianRational
    checks: dict[str, bool] = field(default_factory=dict)
    counterexamples: dict[str, tuple[str, ...]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "delta": self.delta.to_pair(),
            "passed": self.passed,
            "checks": dict(self.checks),
            "counterexamples": {k: list(v) for k, v in self.counterexamples.items()},
        }


def verify_mirror(s: SymplecticSpec, ups: MirrorMap | None = None) -> MirrorReport:
    """Wedge, differential and bracket compatibility on all monomial pairs, plus bijectivity."""
    ups = ups or mirror_map(s)
    src, tgt = ups.source, ups.target
    rep = MirrorReport(ups.delta, {"wedge": True, "differential": True, "bracket": True, "bijective": True})
    basis = src.gens.basis()
    name = src.gens.monomial_name

    def fail(key, *ms):
        if rep.checks[key]:
            rep.checks[key] = False
            rep.counterexamples[key] = tuple(name(m) for m in ms)

    for a in basis:
        ua = ups.mono(a)
        if ups.apply_terms(src.differential_mono(a)) != tgt.differential_terms(ua):
            fail("differential", a)
        for b in basis:
            ub = ups.mono(b)
            if ups.apply_terms(wedge_terms({a: ONE}, {b: ONE})) != wedge_terms(ua, ub):
                fail("wedge", a, b)
            if ups.apply_terms(src.bracket_mono(a, b)) != tgt.bracket_terms(ua, ub):
                fail("bracket", a, b)
    M = ups.matrix()
    if len(M) != len(M[0]) or linalg.rank(M) != len(M):
        rep.checks["bijective"] = False
    return rep


def derham_dims(pres: DGAPresentation) -> tuple[int, ...]:
    """Betti numbers of the invariant de Rham complex of a presentation made of forms."""
    h = hodge_for(pres)
    if h.pmax != 0:
        raise SpecError("de Rham dimensions need a presentation generated by 1-forms")
    return tuple(len(h.harmonic_vectors(0, k)) for k in range(h.qmax + 1))


def cohomology_match(s: SymplecticSpec, degrees=(0, 1, 2)) -> dict:
    """Compare ⊕_{p+q=k} 𝔥^{p,q} with H^k and check Υ sends harmonic classes onto H^k."""
    src = complex_dga(build_kodaira(1))
    tgt = symplectic_dga(s)
    ups = mirror_map(s, src, tgt)
    hs, ht = hodge_for(src), hodge_for(tgt)
    b = derham_dims(tgt)
    out = {"complex": [], "symplectic": list(b), "degrees": list(degrees), "classes_map": True}
    for k in degrees:
        classes = []
        for p in range(k + 1):
            q = k - p
            if (p, q) in hs._basis:
                classes += [hs.from_vector(v, p, q) for v in hs.harmonic_vectors(p, q)]
        out["complex"].append(len(classes))
        images = [ups.apply_terms(c) for c in classes]
        n = len(ht.basis(0, k))
        if any(tgt.differential_terms(im) for im in images):
            out["classes_map"] = False
            continue
        exact_cols = linalg.transpose(ht.matrix(0, k - 1)) if k > 0 else []
        exact = [list(c) for c in exact_cols if any(c)]
        cols = [ht.to_vector(im, 0, k) for im in images]
        r_exact = linalg.rank(linalg.from_columns(exact, n)) if exact else 0
        r_all = linalg.rank(linalg.from_columns(cols + exact, n)) if cols + exact else 0
        if r_all - r_exact != b[k] or len(classes) != b[k]:
            out["classes_map"] = False
    out["passed"] = out["classes_map"] and out["complex"] == [b[k] for k in degrees]
    return out
