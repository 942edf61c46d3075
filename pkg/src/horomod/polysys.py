"""Small exact polynomial systems in named unknowns.

Just enough ring arithmetic for generating and linearizing structure
equations: sparse polynomials over Q in named unknowns, monomials of
degree at most two, canonical form (monomials sorted by degree then
unknown name, integer content cleared, leading coefficient positive),
and a plain-text export with one polynomial per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import ValidationError

Q = Fraction

Mono = Tuple[int, ...]  # sorted unknown indices; () is the constant monomial
Poly = Dict[Mono, Q]
Grade = Tuple[int, ...]  # degree in the simple roots
CanonPoly = Tuple[Tuple[Mono, int], ...]


def poly_add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, Q(0)) + c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def poly_scale(p: Poly, c) -> Poly:
    c = Q(c)
    if not c:
        return {}
    return {m: c * v for m, v in p.items()}


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(sorted(m1 + m2))
            v = out.get(m, Q(0)) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def poly_degree(p: Poly) -> int:
    return max((len(m) for m in p), default=0)


def linear_part(p: Poly) -> Poly:
    return {m: c for m, c in p.items() if len(m) == 1}


def evaluate(p: Poly, values: Mapping[int, Q]) -> Q:
    total = Q(0)
    for m, c in p.items():
        term = c
        for idx in m:
            term *= values.get(idx, Q(0))
        total += term
    return total


@dataclass(frozen=True)
class PolySystem:
    unknowns: Tuple[str, ...]
    grades: Tuple[Grade, ...]  # one per unknown
    equations: Tuple[Tuple[CanonPoly, Grade], ...]

    def __post_init__(self):
        if len(self.unknowns) != len(self.grades):
            raise ValidationError("one grade per unknown required")


def _mono_key(names: Sequence[str], m: Mono):
    return (len(m), tuple(names[i] for i in m))


def canonical_poly(p: Poly, names: Sequence[str]) -> CanonPoly:
    """Sorted, integer-cleared, positive leading coefficient; () if zero."""
    items = [(m, c) for m, c in p.items() if c]
    if not items:
        return ()
    items.sort(key=lambda mc: _mono_key(names, mc[0]))
    denlcm = 1
    for _, c in items:
        denlcm = denlcm * c.denominator // gcd(denlcm, c.denominator)
    ints = [c * denlcm for _, c in items]
    content = 0
    for c in ints:
        content = gcd(content, int(c))
    sign = 1 if ints[0] > 0 else -1
    return tuple(
        (m, sign * int(c) // content) for (m, _), c in zip(items, ints)
    )


def canon_to_poly(cp: CanonPoly) -> Poly:
    return {m: Q(c) for m, c in cp}


def _fmt_coeff(c: Q) -> str:
    c = Q(c)
    sign = "+" if c >= 0 else "-"
    mag = abs(c)
    if mag.denominator == 1:
        return f"{sign}{mag.numerator}"
    return f"{sign}{mag.numerator}/{mag.denominator}"


def render_poly(cp: CanonPoly, names: Sequence[str]) -> str:
    if not cp:
        return "0"
    parts = []
    for m, c in cp:
        term = _fmt_coeff(Q(c))
        if m:
            term += "*" + "*".join(names[i] for i in m)
        parts.append(term)
    return "".join(parts)


def _grade_str(g: Grade) -> str:
    if len(g) == 1:
        return f"{g[0]}*alpha"
    return "+".join(f"{k}*alpha{i + 1}" for i, k in enumerate(g))


def system_to_text(system: PolySystem) -> str:
    lines = []
    for name, g in zip(system.unknowns, system.grades):
        lines.append(f"# unknown {name} grade={_grade_str(g)}")
    for cp, _ in system.equations:
        lines.append(render_poly(cp, system.unknowns))
    return "\n".join(lines) + "\n"
