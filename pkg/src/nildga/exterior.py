"""Graded exterior algebra on odd degree-one generators.

Monomials are stored as bitmasks over an ordered :class:`GeneratorSet`; bit
``k`` set means generator ``k`` is a factor, and the canonical order of factors
is ascending bit index.  Moving factors into that order produces the usual
Koszul sign because every generator has degree one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .scalars import ONE, GaussianRational

__all__ = [
    "Generator",
    "GeneratorSet",
    "Multivector",
    "normalize_monomial",
    "wedge",
    "scalar_mul",
    "add",
    "popcount",
    "merge_sign",
]


def popcount(x: int) -> int:
    return bin(x).count("1")


_SIGN_CACHE: dict[tuple[int, int], int] = {}


def merge_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenation (factors of ``a``, factors of ``b``).

    ``a`` and ``b`` must be disjoint.  Counts pairs with an ``a`` factor sorted
    after a ``b`` factor.
    """
    key = (a, b)
    s = _SIGN_CACHE.get(key)
    if s is None:
        inv = 0
        bb = b
        while bb:
            low = bb & -bb
            inv += popcount(a & ~((low << 1) - 1))
            bb ^= low
        s = -1 if inv & 1 else 1
        if len(_SIGN_CACHE) < 1 << 20:
            _SIGN_CACHE[key] = s
    return s


@dataclass(frozen=True)
class Generator:
    """A degree-one generator; ``bidegree`` is (1, 0) for vectors, (0, 1) for forms."""

    name: str
    bidegree: tuple[int, int]
    index: int

    def __post_init__(self):
        if sum(self.bidegree) != 1 or min(self.bidegree) < 0:
            raise ValueError(f"generator {self.name} must have bidegree (1,0) or (0,1)")

    @property
    def parity(self) -> int:
        return 1

    @property
    def is_vector(self) -> bool:
        return self.bidegree == (1, 0)


class GeneratorSet:
    """Ordered, name-unique collection of generators of one exterior algebra."""

    def __init__(self, specs: Sequence[tuple[str, tuple[int, int]]]):
        gens = []
        seen = set()
        for k, (name, bideg) in enumerate(specs):
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
            gens.append(Generator(name, tuple(bideg), k))
        self.generators: tuple[Generator, ...] = tuple(gens)
        self.index = {g.name: g.index for g in gens}
        self.vector_mask = sum(1 << g.index for g in gens if g.is_vector)
        self.form_mask = sum(1 << g.index for g in gens if not g.is_vector)
        self.full_mask = (1 << len(gens)) - 1

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, name: str) -> Generator:
        return self.generators[self.index[name]]

    def __eq__(self, other):
        return isinstance(other, GeneratorSet) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for nm in names:
            m |= 1 << self.index[nm]
        return m

    def bidegree(self, mask: int) -> tuple[int, int]:
        return popcount(mask & self.vector_mask), popcount(mask & self.form_mask)

    def factors(self, mask: int) -> list[Generator]:
        return [g for g in self.generators if mask >> g.index & 1]

    def monomial_name(self, mask: int, sep: str = "^") -> str:
        if mask == 0:
            return "1"
        return sep.join(g.name for g in self.factors(mask))

    def parse_monomial(self, text: str, sep: str = "^") -> tuple[int, int]:
        """Parse ``"ow^or^T"`` (any order) into ``(mask, sign)``."""
        text = text.strip()
        if text in ("", "1"):
            return 0, 1
        return normalize_monomial([self[nm] for nm in text.split(sep)])

    def basis(self, p: int | None = None, q: int | None = None, degree: int | None = None) -> list[int]:
        """Monomial masks, ordered by degree then lexicographically by generator index."""
        vec = [g.index for g in self.generators if g.is_vector]
        frm = [g.index for g in self.generators if not g.is_vector]
        out = []
        if p is not None or q is not None:
            ps = [p] if p is not None else range(len(vec) + 1)
            qs = [q] if q is not None else range(len(frm) + 1)
            for pp in ps:
                for qq in qs:
                    for fsub in combinations(frm, qq):
                        for vsub in combinations(vec, pp):
                            out.append(sum(1 << k for k in fsub + vsub))
            return out
        degs = [degree] if degree is not None else range(len(self.generators) + 1)
        for d in degs:
            for sub in combinations(range(len(self.generators)), d):
                out.append(sum(1 << k for k in sub))
        return out


def normalize_monomial(seq: Sequence[Generator]) -> tuple[int, int]:
    """Sort a product of generators into canonical order.

    Returns ``(mask, sign)``; ``sign`` is 0 when a generator repeats (the
    product vanishes), otherwise the sign of the sorting permutation.
    """
    mask = 0
    sign = 1
    for g in seq:
        bit = 1 << g.index
        if mask & bit:
            return 0, 0
        # g moves left past every already-placed factor with a larger index
        if popcount(mask >> (g.index + 1)) & 1:
            sign = -sign
        mask |= bit
    return mask, sign


def wedge_terms(a: Mapping[int, GaussianRational], b: Mapping[int, GaussianRational]) -> dict:
    out: dict[int, GaussianRational] = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if ma & mb:
                continue
            m = ma | mb
            c = ca * cb if merge_sign(ma, mb) > 0 else -(ca * cb)
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s:
                    out[m] = s
                else:
                    del out[m]
    return out


def add_into(acc: dict, terms: Mapping[int, GaussianRational], scale: GaussianRational | int = 1):
    """In-place ``acc += scale * terms`` dropping cancelled entries."""
    for m, c in terms.items():
        if scale != 1:
            c = c * scale
        prev = acc.get(m)
        if prev is None:
            if c:
                acc[m] = c
        else:
            s = prev + c
            if s:
                acc[m] = s
            else:
                del acc[m]
    return acc


class Multivector:
    """Element of the exterior algebra: a sparse map monomial mask -> scalar.

    The zero element is the empty map.  Instances are treated as immutable.
    """

    __slots__ = ("gens", "terms")

    def __init__(self, gens: GeneratorSet, terms: Mapping[int, object] | None = None):
        self.gens = gens
        clean: dict[int, GaussianRational] = {}
        if terms:
            for m, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    clean[m] = c
        self.terms = clean

    @classmethod
    def _raw(cls, gens, terms: dict) -> "Multivector":
        obj = object.__new__(cls)
        obj.gens = gens
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, gens: GeneratorSet) -> "Multivector":
        return cls._raw(gens, {})

    @classmethod
    def one(cls, gens: GeneratorSet) -> "Multivector":
        return cls._raw(gens, {0: ONE})

    @classmethod
    def monomial(cls, gens: GeneratorSet, mask: int, coeff=ONE) -> "Multivector":
        return cls(gens, {mask: coeff})

    @classmethod
    def from_names(cls, gens: GeneratorSet, *names: str, coeff=ONE) -> "Multivector":
        mask, sign = normalize_monomial([gens[n] for n in names])
        if sign == 0:
            return cls.zero(gens)
        c = GaussianRational.coerce(coeff)
        return cls(gens, {mask: c if sign > 0 else -c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector._raw(self.gens, add_into(dict(self.terms), other.terms))

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector._raw(self.gens, add_into(dict(self.terms), other.terms, -1))

    def __neg__(self):
        return Multivector._raw(self.gens, {m: -c for m, c in self.terms.items()})

    def __mul__(self, c):
        c = GaussianRational.coerce(c)
        if not c:
            return Multivector.zero(self.gens)
        return Multivector._raw(self.gens, {m: v * c for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "Multivector") -> "Multivector":
        return wedge(self, other)

    def coeff(self, mask: int) -> GaussianRational:
        return self.terms.get(mask, GaussianRational())

    def component(self, p: int, q: int) -> "Multivector":
        g = self.gens
        return Multivector._raw(g, {m: c for m, c in self.terms.items() if g.bidegree(m) == (p, q)})

    def degrees(self) -> set[int]:
        return {popcount(m) for m in self.terms}

    def degree(self) -> int:
        """Total degree of a homogeneous nonzero element."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("degree of zero or inhomogeneous multivector is undefined")
        return ds.pop()

    def bidegree(self) -> tuple[int, int]:
        bs = {self.gens.bidegree(m) for m in self.terms}
        if len(bs) != 1:
            raise ValueError("bidegree of zero or inhomogeneous multivector is undefined")
        return bs.pop()

    def conjugate_coefficients(self) -> "Multivector":
        return Multivector._raw(self.gens, {m: c.conjugate() for m, c in self.terms.items()})

    def sorted_terms(self) -> list[tuple[int, GaussianRational]]:
        return sorted(self.terms.items(), key=lambda mc: (popcount(mc[0]), _mask_key(mc[0])))

    def __repr__(self):
        return f"Multivector({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            name = self.gens.monomial_name(m, "∧") if m else ""
            if c == 1:
                parts.append(name or "1")
            elif c == -1:
                parts.append("-" + (name or "1"))
            else:
                parts.append(f"{c}" + (f"·{name}" if name else ""))
        return " + ".join(parts).replace("+ -", "- ")


def _mask_key(m: int) -> tuple[int, ...]:
    return tuple(k for k in range(m.bit_length()) if m >> k & 1)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Graded-commutative exterior product."""
    return Multivector._raw(a.gens, wedge_terms(a.terms, b.terms))


def scalar_mul(c, a: Multivector) -> Multivector:
    return a * c


def add(a: Multivector, b: Multivector) -> Multivector:
    return a + b


def basis_iter(gens: GeneratorSet) -> Iterator[int]:
    return iter(gens.basis())
