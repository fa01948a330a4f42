"""Finite-dimensional Hodge theory for the resolution of each 𝔤^{p,0}.

The monomial basis is declared orthonormal, so ∂̄* is the conjugate
transpose of the ∂̄ matrix.  Everything is exact over Q(i).
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field

from . import linalg
from .dga import DGAPresentation
from .exterior import Multivector, add_into, popcount
from .scalars import ONE, ZERO

__all__ = [
    "Hodge",
    "CohomologyBasis",
    "dbar_matrix",
    "cohomology_basis",
    "adjoint_apply",
    "green_apply",
    "harmonic_projection",
    "hodge_for",
    "KODAIRA_SURFACE_CLASSES",
    "degree_two_classes",
]

# Harmonic classes of the Kodaira surface in coordinate order t0..t5, s0..s5.
KODAIRA_SURFACE_CLASSES = (
    ("t0", "1"),
    ("t1", "ow^or"),
    ("t2", "or^W"),
    ("t3", "ow^T"),
    ("t4", "T^W"),
    ("t5", "ow^or^T^W"),
    ("s0", "or"),
    ("s1", "ow"),
    ("s2", "W"),
    ("s3", "or^T^W"),
    ("s4", "ow^T^W"),
    ("s5", "ow^or^T"),
)


def dbar_matrix(pres: DGAPresentation, p: int, q: int) -> linalg.Matrix:
    """Matrix of ∂̄ from bidegree (p, q) to (p, q+1) in monomial bases."""
    return hodge_for(pres).matrix(p, q)


@dataclass
class CohomologyBasis:
    """Harmonic representatives per bidegree."""

    spaces: dict[tuple[int, int], list[Multivector]] = field(default_factory=dict)

    def dims(self) -> dict[tuple[int, int], int]:
        return {k: len(v) for k, v in self.spaces.items()}

    def grid(self) -> list[list[int]]:
        """h^{p,q} with rows p and columns q."""
        pmax = max(p for p, _ in self.spaces)
        qmax = max(q for _, q in self.spaces)
        return [[len(self.spaces.get((p, q), [])) for q in range(qmax + 1)] for p in range(pmax + 1)]

    def degree(self, k: int) -> list[Multivector]:
        out = []
        for (p, q), v in sorted(self.spaces.items()):
            if p + q == k:
                out.extend(v)
        return out

    def all(self) -> list[Multivector]:
        out = []
        for key in sorted(self.spaces, key=lambda pq: (pq[0] + pq[1], pq)):
            out.extend(self.spaces[key])
        return out


class Hodge:
    """Cached ∂̄ matrices, harmonic spaces and Green operator of one presentation."""

    def __init__(self, pres: DGAPresentation):
        self.pres = pres
        g = pres.gens
        self.pmax = popcount(g.vector_mask)
        self.qmax = popcount(g.form_mask)
        self._basis = {}
        self._index = {}
        for p in range(self.pmax + 1):
            for q in range(self.qmax + 1):
                b = g.basis(p=p, q=q)
                self._basis[(p, q)] = b
                self._index[(p, q)] = {m: k for k, m in enumerate(b)}
        self._mat: dict = {}
        self._space: dict = {}
        self._mono_cache: dict = {}

    def basis(self, p: int, q: int) -> list[int]:
        return self._basis.get((p, q), [])

    def matrix(self, p: int, q: int) -> linalg.Matrix:
        key = (p, q)
        if key not in self._mat:
            src, dst = self.basis(p, q), self.basis(p, q + 1)
            idx = self._index.get((p, q + 1), {})
            m = linalg.zeros(len(dst), len(src))
            for c, mono in enumerate(src):
                for tm, coef in self.pres.differential_mono(mono).items():
                    if tm not in idx:
                        raise ValueError("differential does not have bidegree (0, 1)")
                    m[idx[tm]][c] = coef
            self._mat[key] = m
        return self._mat[key]

    def _space_data(self, p: int, q: int) -> dict:
        key = (p, q)
        data = self._space.get(key)
        if data is not None:
            return data
        n = len(self.basis(p, q))
        D = self.matrix(p, q)
        Dprev = self.matrix(p, q - 1) if q > 0 else []
        DprevH = linalg.conj_transpose(Dprev) if Dprev else []
        stacked = [r for r in D if any(r)] + [r for r in DprevH if any(r)]
        harm = linalg.nullspace(stacked, cols=n) if stacked else linalg.nullspace([], cols=n)
        # Laplacian L = D^H D + Dprev Dprev^H
        lap = linalg.zeros(n, n)
        if D:
            lap = linalg.madd(lap, linalg.matmul(linalg.conj_transpose(D), D))
        if Dprev:
            lap = linalg.madd(lap, linalg.matmul(Dprev, DprevH))
        if harm:
            B = linalg.from_columns(harm, n)
            BH = linalg.conj_transpose(B)
            gram_inv = linalg.inverse(linalg.matmul(BH, B))
            proj = linalg.matmul(B, linalg.matmul(gram_inv, BH))
        else:
            proj = linalg.zeros(n, n)
        green = linalg.matmul(linalg.inverse(linalg.madd(lap, proj)), _minus_identity(proj))
        data = {"harmonic": harm, "proj": proj, "green": green, "lap": lap}
        self._space[key] = data
        return data

    def harmonic_vectors(self, p: int, q: int) -> list[linalg.Vector]:
        return self._space_data(p, q)["harmonic"]

    def kernel_dim(self, p: int, q: int) -> int:
        return len(self.basis(p, q)) - linalg.rank(self.matrix(p, q))

    def image_dim(self, p: int, q: int) -> int:
        """Rank of ∂̄ landing in (p, q)."""
        return linalg.rank(self.matrix(p, q - 1)) if q > 0 else 0

    # conversion between multivectors and coordinate vectors
    def to_vector(self, v: Multivector | dict, p: int, q: int) -> linalg.Vector:
        terms = v.terms if isinstance(v, Multivector) else v
        idx = self._index[(p, q)]
        out = [ZERO] * len(idx)
        for m, c in terms.items():
            out[idx[m]] = c
        return out

    def from_vector(self, vec, p: int, q: int) -> dict:
        b = self.basis(p, q)
        return {b[k]: c for k, c in enumerate(vec) if c}

    def _split(self, terms: dict) -> dict:
        g = self.pres.gens
        parts: dict = {}
        for m, c in terms.items():
            parts.setdefault(g.bidegree(m), {})[m] = c
        return parts

    # operators on monomials (cached), all linear
    def _op_mono(self, kind: str, m: int) -> dict:
        key = (kind, m)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        p, q = self.pres.gens.bidegree(m)
        k = self._index[(p, q)][m]
        if kind == "adjoint":
            if q == 0:
                out = {}
            else:
                D = self.matrix(p, q - 1)
                out = self.from_vector([x.conjugate() for x in D[k]], p, q - 1)
        else:
            mat = self._space_data(p, q)["proj" if kind == "harm" else "green"]
            out = self.from_vector([row[k] for row in mat], p, q)
        self._mono_cache[key] = out
        return out

    def apply(self, kind: str, terms: dict) -> dict:
        out: dict = {}
        for m, c in terms.items():
            t = self._op_mono(kind, m)
            if t:
                add_into(out, t, c)
        return out

    def adjoint_mono(self, m: int) -> dict:
        return self._op_mono("adjoint", m)

    def green_mono(self, m: int) -> dict:
        return self._op_mono("green", m)

    def harmonic_mono(self, m: int) -> dict:
        return self._op_mono("harm", m)

    def harmonic_coordinates(self, v: dict, classes: list[Multivector]) -> list | None:
        """Coefficients of a harmonic element in a list of harmonic classes, or None."""
        if not v:
            return [ZERO] * len(classes)
        parts = self._split(v)
        sol = [ZERO] * len(classes)
        for (p, q), t in parts.items():
            sel = [k for k, c in enumerate(classes) if c.terms and self.pres.gens.bidegree(next(iter(c.terms))) == (p, q)]
            n = len(self.basis(p, q))
            A = linalg.from_columns([self.to_vector(classes[k], p, q) for k in sel], n)
            x = linalg.solve(A, self.to_vector(t, p, q)) if sel else None
            if x is None:
                return None
            for k, val in zip(sel, x):
                sol[k] = val
        return sol

    def cohomology_basis(self) -> CohomologyBasis:
        cb = CohomologyBasis()
        for p in range(self.pmax + 1):
            for q in range(self.qmax + 1):
                cb.spaces[(p, q)] = [
                    Multivector._raw(self.pres.gens, self.from_vector(v, p, q)) for v in self.harmonic_vectors(p, q)
                ]
        return cb

    def complement_basis(self, p: int, q: int) -> list[Multivector]:
        """Orthogonal complement of the harmonic space inside bidegree (p, q)."""
        harm = self.harmonic_vectors(p, q)
        n = len(self.basis(p, q))
        if not harm:
            vecs = linalg.nullspace([], cols=n)
        else:
            vecs = linalg.nullspace(linalg.conj_transpose(linalg.from_columns(harm, n)), cols=n)
        return [Multivector._raw(self.pres.gens, self.from_vector(v, p, q)) for v in vecs]


def _minus_identity(proj):
    n = len(proj)
    return [[(ONE if r == c else ZERO) - proj[r][c] for c in range(n)] for r in range(n)]


_CACHE: "weakref.WeakKeyDictionary[DGAPresentation, Hodge]" = weakref.WeakKeyDictionary()


def hodge_for(pres: DGAPresentation) -> Hodge:
    h = _CACHE.get(pres)
    if h is None:
        h = Hodge(pres)
        _CACHE[pres] = h
    return h


def cohomology_basis(pres: DGAPresentation) -> CohomologyBasis:
    """Harmonic representatives; the Kodaira surface gets its named basis in coordinate order."""
    h = hodge_for(pres)
    cb = h.cohomology_basis()
    g = pres.gens
    if g.names == ("ow", "or", "T", "W"):
        named = CohomologyBasis({k: [] for k in cb.spaces})
        for _, text in KODAIRA_SURFACE_CLASSES:
            m, s = g.parse_monomial(text)
            named.spaces[g.bidegree(m)].append(Multivector(g, {m: s}))
        if _same_spans(h, cb, named):
            return named
    return cb


def _same_spans(h: Hodge, a: CohomologyBasis, b: CohomologyBasis) -> bool:
    for key, vs in a.spaces.items():
        ws = b.spaces.get(key, [])
        if len(vs) != len(ws):
            return False
        if not vs:
            continue
        n = len(h.basis(*key))
        A = linalg.from_columns([h.to_vector(v, *key) for v in vs], n)
        AB = linalg.from_columns([h.to_vector(v, *key) for v in vs + ws], n)
        if linalg.rank(A) != linalg.rank(AB):
            return False
    return True


def adjoint_apply(pres: DGAPresentation, v: Multivector) -> Multivector:
    return Multivector._raw(pres.gens, hodge_for(pres).apply("adjoint", v.terms))


def green_apply(pres: DGAPresentation, v: Multivector) -> Multivector:
    return Multivector._raw(pres.gens, hodge_for(pres).apply("green", v.terms))


def harmonic_projection(pres: DGAPresentation, v: Multivector) -> Multivector:
    return Multivector._raw(pres.gens, hodge_for(pres).apply("harm", v.terms))


def degree_two_classes(n: int) -> dict[str, list[tuple[str, dict[str, object]]]]:
    """Named degree-two harmonic classes of a Kodaira manifold, as name -> {monomial: coeff}.

    φ^j_k is listed for j <= k (it is symmetric in j, k).
    """
    if n == 1:
        om, ts = ["ow"], ["T"]
    else:
        om = [f"ow{j}" for j in range(1, n + 1)]
        ts = [f"T{j}" for j in range(1, n + 1)]
    from .scalars import gq

    half = gq("1/2")
    out: dict[str, list] = {"0,2": [], "2,0": [], "1,1": []}
    for j in range(n):
        out["0,2"].append((f"B^{j + 1}", {f"{om[j]}^or": ONE}))
    for i in range(n):
        for j in range(i + 1, n):
            out["0,2"].append((f"B^{i + 1}{j + 1}", {f"{om[i]}^{om[j]}": ONE}))
    for j in range(n):
        out["2,0"].append((f"B_{j + 1}", {f"{ts[j]}^W": ONE}))
    out["1,1"].append(("phi", {"or^W": ONE}))
    for j in range(n):
        for k in range(j, n):
            if j == k:
                out["1,1"].append((f"phi^{j + 1}_{k + 1}", {f"{om[j]}^{ts[k]}": ONE}))
            else:
                out["1,1"].append(
                    (f"phi^{j + 1}_{k + 1}", {f"{om[j]}^{ts[k]}": half, f"{om[k]}^{ts[j]}": half})
                )
    return out
