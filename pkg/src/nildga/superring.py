"""Truncated supercommutative coefficient ring and fields over it.

A coefficient is a polynomial in even coordinates ``t`` and odd coordinates
``s`` (which anticommute and square to zero), truncated above total degree
``D``.  Coefficients multiply fields of the exterior algebra from the left;
moving an odd coefficient past an odd element produces the Koszul sign.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .dga import DGAPresentation
from .exterior import GeneratorSet, Multivector, add_into, merge_sign, popcount
from .scalars import ONE, GaussianRational, format_gq

__all__ = ["SuperRing", "SuperScalar", "SuperField", "ChenField"]

Key = tuple  # (even exponent tuple, odd bitmask)


class SuperRing:
    """Coordinates, parities and the truncation order ``D``."""

    def __init__(self, even: Sequence[str], odd: Sequence[str], D: int):
        if D < 0:
            raise ValueError("truncation order must be non-negative")
        if len(set(even) | set(odd)) != len(even) + len(odd):
            raise ValueError("coordinate names must be unique")
        self.even = tuple(even)
        self.odd = tuple(odd)
        self.D = D
        self._even_index = {n: k for k, n in enumerate(self.even)}
        self._odd_index = {n: k for k, n in enumerate(self.odd)}
        self.zero_exps = (0,) * len(self.even)

    def __eq__(self, other):
        return isinstance(other, SuperRing) and (self.even, self.odd, self.D) == (other.even, other.odd, other.D)

    def __hash__(self):
        return hash((self.even, self.odd, self.D))

    def with_order(self, D: int) -> "SuperRing":
        return SuperRing(self.even, self.odd, D)

    @property
    def coordinates(self) -> tuple[str, ...]:
        return self.even + self.odd

    def parity_of(self, name: str) -> int:
        if name in self._even_index:
            return 0
        if name in self._odd_index:
            return 1
        raise KeyError(name)

    @staticmethod
    def degree(key: Key) -> int:
        return sum(key[0]) + popcount(key[1])

    # raw operations on {key: coeff} dicts ---------------------------------
    def mul_raw(self, a: Mapping, b: Mapping) -> dict:
        out: dict = {}
        D = self.D
        for (ea, oa), ca in a.items():
            da = sum(ea) + popcount(oa)
            for (eb, ob), cb in b.items():
                if oa & ob:
                    continue
                if da + sum(eb) + popcount(ob) > D:
                    continue
                key = (tuple(x + y for x, y in zip(ea, eb)), oa | ob)
                c = ca * cb
                if merge_sign(oa, ob) < 0:
                    c = -c
                prev = out.get(key)
                if prev is None:
                    out[key] = c
                else:
                    s = prev + c
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        return out

    def const(self, c) -> "SuperScalar":
        c = GaussianRational.coerce(c)
        return SuperScalar(self, {(self.zero_exps, 0): c} if c else {})

    def var(self, name: str, coeff=ONE) -> "SuperScalar":
        c = GaussianRational.coerce(coeff)
        if name in self._even_index:
            e = list(self.zero_exps)
            e[self._even_index[name]] = 1
            key = (tuple(e), 0)
        else:
            key = (self.zero_exps, 1 << self._odd_index[name])
        return SuperScalar(self, {key: c} if c and self.D >= 1 else {})

    def monomial(self, powers: Mapping[str, int], coeff=ONE) -> "SuperScalar":
        """Product of coordinates; odd ones are multiplied in the order given."""
        out = self.const(coeff)
        for name, k in powers.items():
            for _ in range(k):
                out = out * self.var(name)
        return out

    def key_str(self, key: Key) -> str:
        e, o = key
        parts = []
        for name, k in zip(self.even, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        for j, name in enumerate(self.odd):
            if o >> j & 1:
                parts.append(name)
        return "*".join(parts)


class SuperScalar:
    """Element of the truncated super ring; immutable."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: SuperRing, terms: Mapping | None = None):
        self.ring = ring
        D = ring.D
        self.terms = {k: GaussianRational.coerce(c) for k, c in (terms or {}).items() if c and SuperRing.degree(k) <= D}

    @classmethod
    def _raw(cls, ring, terms):
        obj = object.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        return obj

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SuperScalar):
            return self.terms == other.terms
        if isinstance(other, (int, GaussianRational)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = self._lift(other)
        return SuperScalar._raw(self.ring, add_into(dict(self.terms), other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return SuperScalar._raw(self.ring, add_into(dict(self.terms), other.terms, -1))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return SuperScalar._raw(self.ring, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SuperScalar):
            return SuperScalar._raw(self.ring, self.ring.mul_raw(self.terms, other.terms))
        c = GaussianRational.coerce(other)
        if not c:
            return SuperScalar._raw(self.ring, {})
        return SuperScalar._raw(self.ring, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other  # scalars from Q(i) commute with everything

    def __pow__(self, k: int):
        out = self.ring.const(1)
        for _ in range(k):
            out = out * self
        return out

    def _lift(self, other) -> "SuperScalar":
        if isinstance(other, SuperScalar):
            return other
        return self.ring.const(other)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((self.ring.zero_exps, 0), GaussianRational())

    def is_unit(self) -> bool:
        return bool(self.constant_term())

    def inverse(self) -> "SuperScalar":
        """Inverse of a unit by the geometric series, exact to the truncation order."""
        c0 = self.constant_term()
        if not c0:
            raise ZeroDivisionError("not a unit of the local ring (zero constant term)")
        c0i = c0.inverse()
        x = self.ring.const(1) - self * c0i  # nilpotent modulo truncation
        out = self.ring.const(1)
        power = self.ring.const(1)
        for _ in range(self.ring.D):
            power = power * x
            if not power:
                break
            out = out + power
        return out * c0i

    def __truediv__(self, other):
        if isinstance(other, SuperScalar):
            return self * other.inverse()
        return self * GaussianRational.coerce(other).inverse()

    def parities(self) -> set[int]:
        return {popcount(o) & 1 for _, o in self.terms}

    def parity(self) -> int:
        ps = self.parities()
        if len(ps) > 1:
            raise ValueError("inhomogeneous parity")
        return ps.pop() if ps else 0

    def homogeneous(self, k: int) -> "SuperScalar":
        return SuperScalar._raw(self.ring, {key: c for key, c in self.terms.items() if SuperRing.degree(key) == k})

    def truncate(self, D: int) -> "SuperScalar":
        return SuperScalar._raw(self.ring, {key: c for key, c in self.terms.items() if SuperRing.degree(key) <= D})

    def min_degree(self) -> int | None:
        return min((SuperRing.degree(k) for k in self.terms), default=None)

    def derivative(self, name: str) -> "SuperScalar":
        """Left partial derivative; for odd s, ∂/∂s(s·m) = m."""
        ring = self.ring
        out: dict = {}
        if name in ring._even_index:
            j = ring._even_index[name]
            for (e, o), c in self.terms.items():
                if e[j]:
                    e2 = e[:j] + (e[j] - 1,) + e[j + 1:]
                    out[(e2, o)] = c * e[j]
        else:
            j = ring._odd_index[name]
            bit = 1 << j
            for (e, o), c in self.terms.items():
                if o & bit:
                    sign = popcount(o & (bit - 1)) & 1
                    out[(e, o ^ bit)] = -c if sign else c
        return SuperScalar._raw(ring, out)

    def substitute_zero(self, names: Iterable[str]) -> "SuperScalar":
        ring = self.ring
        ev = [ring._even_index[n] for n in names if n in ring._even_index]
        od = 0
        for n in names:
            if n in ring._odd_index:
                od |= 1 << ring._odd_index[n]
        return SuperScalar._raw(
            ring, {(e, o): c for (e, o), c in self.terms.items() if not (o & od) and not any(e[j] for j in ev)}
        )

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: (SuperRing.degree(kc[0]), tuple(-x for x in kc[0][0]), kc[0][1]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.sorted_terms():
            mono = self.ring.key_str(key)
            if not mono:
                parts.append(format_gq(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_gq(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"SuperScalar({self})"


def _neg(terms: Mapping) -> dict:
    return {k: -c for k, c in terms.items()}


class SuperField:
    """Field Σ f_m·m with SuperScalar coefficients f_m on the left of monomials m."""

    __slots__ = ("ring", "gens", "terms")

    def __init__(self, ring: SuperRing, gens: GeneratorSet, terms: Mapping[int, SuperScalar] | None = None):
        self.ring = ring
        self.gens = gens
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, ring, gens):
        return cls(ring, gens, {})

    @classmethod
    def from_multivector(cls, ring: SuperRing, v: Multivector, coeff: SuperScalar | None = None) -> "SuperField":
        coeff = coeff if coeff is not None else ring.const(1)
        return cls(ring, v.gens, {m: coeff * c for m, c in v.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SuperField):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __add__(self, other: "SuperField") -> "SuperField":
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            s = c if prev is None else prev + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SuperField(self.ring, self.gens, out)

    def __neg__(self):
        return SuperField(self.ring, self.gens, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f: SuperScalar | GaussianRational | int) -> "SuperField":
        """``f·self`` with ``f`` placed on the left of every coefficient."""
        if not isinstance(f, SuperScalar):
            f = self.ring.const(f)
        return SuperField(self.ring, self.gens, {m: f * c for m, c in self.terms.items()})

    def coeff(self, mask: int) -> SuperScalar:
        return self.terms.get(mask, SuperScalar._raw(self.ring, {}))

    def coeff_of(self, name: str) -> SuperScalar:
        m, s = self.gens.parse_monomial(name)
        c = self.coeff(m)
        return c if s > 0 else -c

    def homogeneous(self, k: int) -> "SuperField":
        return SuperField(self.ring, self.gens, {m: c.homogeneous(k) for m, c in self.terms.items()})

    def truncate(self, D: int) -> "SuperField":
        return SuperField(self.ring, self.gens, {m: c.truncate(D) for m, c in self.terms.items()})

    def derivative(self, name: str) -> "SuperField":
        return SuperField(self.ring, self.gens, {m: c.derivative(name) for m, c in self.terms.items()})

    def substitute_zero(self, names: Iterable[str]) -> "SuperField":
        names = list(names)
        return SuperField(self.ring, self.gens, {m: c.substitute_zero(names) for m, c in self.terms.items()})

    def is_even(self) -> bool:
        """Total parity (coefficient parity plus monomial degree) is even on every term."""
        for m, c in self.terms.items():
            d = popcount(m)
            if any((p + d) & 1 for p in c.parities()):
                return False
        return True

    def is_odd(self) -> bool:
        for m, c in self.terms.items():
            d = popcount(m)
            if any(not ((p + d) & 1) for p in c.parities()):
                return False
        return True

    # algebra ---------------------------------------------------------------
    def _apply_mono_op(self, op, odd: bool) -> "SuperField":
        """Coefficient-wise linear operator on monomials; odd operators pick up (-1)^|f|."""
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            img = op(m)
            if not img:
                continue
            if odd:
                ev = {k: v for k, v in c.terms.items() if not popcount(k[1]) & 1}
                od = {k: -v for k, v in c.terms.items() if popcount(k[1]) & 1}
                ct = ev
                ct.update(od)
            else:
                ct = c.terms
            for tm, tc in img.items():
                acc = out.setdefault(tm, {})
                add_into(acc, ct, tc)
        return SuperField(self.ring, self.gens, {m: SuperScalar._raw(self.ring, t) for m, t in out.items() if t})

    def differential(self, pres: DGAPresentation) -> "SuperField":
        """∂̄(f·a) = (-1)^|f| f·∂̄a."""
        return self._apply_mono_op(pres.differential_mono, odd=True)

    def apply_even(self, op) -> "SuperField":
        return self._apply_mono_op(op, odd=False)

    def apply_odd(self, op) -> "SuperField":
        return self._apply_mono_op(op, odd=True)

    def wedge(self, other: "SuperField") -> "SuperField":
        """(f·a)∧(g·b) = (-1)^{|a||g|} fg·a∧b."""
        ring = self.ring
        out: dict[int, dict] = {}
        for ma, fa in self.terms.items():
            da = popcount(ma)
            for mb, gb in other.terms.items():
                if ma & mb:
                    continue
                s = merge_sign(ma, mb)
                g = gb.terms if not (da & 1) else _odd_flip(gb.terms)
                prod = ring.mul_raw(fa.terms, g)
                if prod:
                    add_into(out.setdefault(ma | mb, {}), prod, s)
        return SuperField(ring, self.gens, {m: SuperScalar._raw(ring, t) for m, t in out.items() if t})

    def bracket(self, pres: DGAPresentation, other: "SuperField") -> "SuperField":
        """[f·a, g·b] = (-1)^{|g|(|a|+1)} fg·[a, b]."""
        ring = self.ring
        out: dict[int, dict] = {}
        for ma, fa in self.terms.items():
            da = popcount(ma)
            for mb, gb in other.terms.items():
                br = pres.bracket_mono(ma, mb)
                if not br:
                    continue
                g = gb.terms if da & 1 else _odd_flip(gb.terms)
                prod = ring.mul_raw(fa.terms, g)
                if not prod:
                    continue
                for tm, tc in br.items():
                    add_into(out.setdefault(tm, {}), prod, tc)
        return SuperField(ring, self.gens, {m: SuperScalar._raw(ring, t) for m, t in out.items() if t})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (popcount(mc[0]), mc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            parts.append(f"({c})·{self.gens.monomial_name(m, '∧')}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SuperField({self})"


def _odd_flip(terms: Mapping) -> dict:
    """Negate the odd part of a coefficient: f ↦ (-1)^|f| f."""
    return {k: (-c if popcount(k[1]) & 1 else c) for k, c in terms.items()}


class ChenField:
    """Coefficients c_α of the odd vector field Σ c_α ∂/∂x_α."""

    def __init__(self, ring: SuperRing, coeffs: Mapping[str, SuperScalar] | None = None):
        self.ring = ring
        self.coeffs: dict[str, SuperScalar] = {k: v for k, v in (coeffs or {}).items() if v}

    def __getitem__(self, name: str) -> SuperScalar:
        return self.coeffs.get(name, SuperScalar._raw(self.ring, {}))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, ChenField) and self.coeffs == other.coeffs

    def add(self, name: str, c: SuperScalar):
        s = self[name] + c
        if s:
            self.coeffs[name] = s
        else:
            self.coeffs.pop(name, None)

    def parity_ok(self) -> bool:
        """c_α has parity opposite to x_α (the field is odd)."""
        for name, c in self.coeffs.items():
            px = self.ring.parity_of(name)
            if any(p == px for p in c.parities()):
                return False
        return True

    def apply(self, field: SuperField) -> SuperField:
        """Σ_α c_α·∂field/∂x_α."""
        out = SuperField.zero(field.ring, field.gens)
        for name, c in self.coeffs.items():
            d = field.derivative(name)
            if d:
                out = out + d.scale(c)
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})·∂/∂{n}" for n, c in self.coeffs.items())
