"""Serialization and text rendering for CLI reports."""

from __future__ import annotations

import hashlib
import json
import os
import sys
from typing import Any

from .exterior import Multivector
from .scalars import GaussianRational
from .superring import SuperField, SuperRing, SuperScalar

__all__ = [
    "coeff_json",
    "multivector_json",
    "superscalar_json",
    "superfield_json",
    "closed_form",
    "format_series",
    "dump_json",
    "digest",
    "Style",
]


def coeff_json(c: GaussianRational) -> list[str]:
    return c.to_pair()


def multivector_json(v: Multivector) -> list[list]:
    return [[v.gens.monomial_name(m), coeff_json(c)] for m, c in v.sorted_terms()]


def superscalar_json(f: SuperScalar) -> list[list]:
    return [[f.ring.key_str(k) or "1", coeff_json(c)] for k, c in f.sorted_terms()]


def superfield_json(v: SuperField) -> dict[str, list]:
    return {v.gens.monomial_name(m): superscalar_json(c) for m, c in v.sorted_terms()}


def closed_form(f: SuperScalar, variable: str = "t2", max_power: int = 3) -> tuple[SuperScalar, int] | None:
    """Write a truncated series as g/(1-t)^k with g free of top-degree terms, k <= max_power."""
    ring: SuperRing = f.ring
    if variable not in ring.even or not f:
        return None
    D = ring.D
    one_minus = ring.const(1) - ring.var(variable)
    g = f
    for k in range(max_power + 1):
        if k:
            g = g * one_minus
        if all(SuperRing.degree(key) < D for key in g.terms):
            return g, k
    return None


def format_series(f: SuperScalar, variable: str = "t2") -> str:
    cf = closed_form(f, variable)
    if cf is None:
        return str(f)
    g, k = cf
    num = str(g)
    if k == 0:
        return num
    den = f"(1-{variable})" + (f"^{k}" if k > 1 else "")
    if len(g.terms) > 1:
        num = f"({num})"
    if num.startswith("-"):
        return f"-{num[1:]}/{den}"
    return f"{num}/{den}"


def dump_json(doc: Any, path: str | None) -> str:
    text = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def digest(obj: Any) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()[:16]


class Style:
    """PASS/FAIL markers, coloured only on a terminal and when NO_COLOR is unset."""

    def __init__(self, stream=None):
        stream = stream or sys.stdout
        self.color = hasattr(stream, "isatty") and stream.isatty() and "NO_COLOR" not in os.environ

    def verdict(self, ok: bool) -> str:
        word = "PASS" if ok else "FAIL"
        if not self.color:
            return word
        return f"\033[{32 if ok else 31}m{word}\033[0m"
