"""Graded multiplication laws and their structure equations.

A law is a finite window of structure coefficients c[lam,mu,i] for a
multiplicity-free weight monoid: the product of the weight-lam and
weight-mu pieces decomposes over Hom channels indexed by i, the i=0
channel is fixed to 1, and each coefficient carries the grade
lam+mu-nu as a natural combination of simple roots.

For rank one everything is explicit: channels are transvectants of
binary forms, commutativity and associativity expand into an exact
polynomial system, the linearization at the all-zero point computes
the tangent space with its torus weights, and coordinate rings of
small orbit closures give honest numeric laws to feed back in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import ResourceError, ValidationError
from . import linalg
from .monoids import RootMonoid, WeightMonoid, make_root_monoid, make_weight_monoid
from .polysys import (
    Grade,
    Poly,
    PolySystem,
    canon_to_poly,
    canonical_poly,
    evaluate,
    linear_part,
    render_poly,
)
from .rootdata import RootDatum, make_root_datum, to_root_coords

Q = Fraction

Weight = Tuple[int, ...]
LawKey = Tuple[Weight, Weight, Weight, int]

MAX_ORBIT_TRUNCATION = 16
_WINDOW_CAP = 100_000


# ------------------------------------------------------------ binary forms


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: Tuple[Q, ...]  # against x^(d-j) y^j


def make_binary_form(degree: int, coeffs: Sequence) -> BinaryForm:
    co = tuple(Q(c) for c in coeffs)
    if degree < 0 or len(co) != degree + 1:
        raise ValidationError("coefficient vector must have length degree+1")
    return BinaryForm(degree, co)


def _falling(n: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= n - t
    return out


def _channel_coeff(a: int, s: int, b: int, t: int, i: int) -> int:
    """Coefficient of the i-th transvectant on the monomial pair
    (x^(a-s) y^s, x^(b-t) y^t); the result is the single monomial of
    y-exponent s+t-i in degree a+b-2i."""
    total = 0
    for j in range(i + 1):
        total += (
            (-1) ** j
            * comb(i, j)
            * _falling(a - s, i - j)
            * _falling(s, j)
            * _falling(b - t, j)
            * _falling(t, i - j)
        )
    return total


def transvectant(f: BinaryForm, g: BinaryForm, i: int) -> BinaryForm:
    if i < 0 or i > min(f.degree, g.degree):
        raise ValidationError(f"transvectant index {i} out of range")
    d = f.degree + g.degree - 2 * i
    out = [Q(0)] * (d + 1)
    for s, fc in enumerate(f.coeffs):
        if not fc:
            continue
        for t, gc in enumerate(g.coeffs):
            if not gc:
                continue
            m = s + t - i
            if 0 <= m <= d:
                out[m] += fc * gc * _channel_coeff(f.degree, s, g.degree, t, i)
    return BinaryForm(d, tuple(out))


# ------------------------------------------------------- law container


def monoid_window(monoid: WeightMonoid, bound: int) -> Tuple[Weight, ...]:
    """Monoid elements with every fundamental coordinate <= bound."""
    gens = [g for g in monoid.generators if any(g)]
    if any(x < 0 for g in gens for x in g):
        raise ValidationError("window enumeration needs dominant generators")
    zero = tuple(0 for _ in range(monoid.rd.rank))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                cand = tuple(a + b for a, b in zip(w, g))
                if cand in seen or any(c > bound for c in cand):
                    continue
                seen.add(cand)
                nxt.append(cand)
        if len(seen) > _WINDOW_CAP:
            raise ResourceError("monoid window enumeration cap exceeded")
        frontier = nxt
    return tuple(sorted(seen))


@dataclass(frozen=True)
class MultiplicationLaw:
    rd: RootDatum
    monoid: WeightMonoid
    truncation: int
    coeffs: Dict[LawKey, Q]


def _is_a1(rd: RootDatum) -> bool:
    return rd.cartan == ((2,),)


def coeff_grade(rd: RootDatum, lam: Weight, mu: Weight, nu: Weight) -> Grade:
    diff = tuple(l + m - n for l, m, n in zip(lam, mu, nu))
    rc = to_root_coords(rd, diff)
    out = []
    for x in rc:
        if x.denominator != 1 or x < 0:
            raise ValidationError(
                f"grade of ({lam},{mu})->{nu} is not a natural root combination"
            )
        out.append(int(x))
    return tuple(out)


def make_law(
    rd: RootDatum,
    monoid: WeightMonoid,
    truncation: int,
    coeffs: Mapping[LawKey, object],
) -> MultiplicationLaw:
    if truncation < 0:
        raise ValidationError("truncation must be non-negative")
    window = set(monoid_window(monoid, truncation))
    table: Dict[LawKey, Q] = {}
    for (lam, mu, nu, ch), raw in coeffs.items():
        lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
        val = Q(raw)
        if not val:
            continue
        for w in (lam, mu, nu):
            if w not in window:
                raise ValidationError(f"weight {w} outside the monoid window")
        sumw = tuple(a + b for a, b in zip(lam, mu))
        if sumw not in window:
            raise ValidationError(
                f"pair ({lam},{mu}) exceeds the truncation window"
            )
        coeff_grade(rd, lam, mu, nu)  # raises if nu > lam+mu in root order
        if (nu == sumw) != (ch == 0):
            raise ValidationError("channel 0 must be exactly the top component")
        if ch == 0 and val != 1:
            raise ValidationError("top-channel coefficient must be 1")
        if _is_a1(rd):
            if ch < 0 or ch > min(lam[0], mu[0]) or nu[0] != lam[0] + mu[0] - 2 * ch:
                raise ValidationError(f"bad channel {ch} for ({lam},{mu})->{nu}")
        if (not any(lam) and nu != mu) or (not any(mu) and nu != lam):
            raise ValidationError("multiplication by the unit component must be trivial")
        key: LawKey = (lam, mu, nu, ch)
        if key in table:
            raise ValidationError(f"duplicate coefficient {key}")
        table[key] = val
    return MultiplicationLaw(rd, monoid, truncation, table)


def horospherical_law(
    rd: RootDatum, monoid: WeightMonoid, truncation: int
) -> MultiplicationLaw:
    window = monoid_window(monoid, truncation)
    wset = set(window)
    coeffs: Dict[LawKey, Q] = {}
    for lam in window:
        for mu in window:
            sumw = tuple(a + b for a, b in zip(lam, mu))
            if sumw in wset:
                coeffs[(lam, mu, sumw, 0)] = Q(1)
    return MultiplicationLaw(rd, monoid, truncation, coeffs)


def law_grades(law: MultiplicationLaw) -> Dict[LawKey, Grade]:
    return {
        key: coeff_grade(law.rd, key[0], key[1], key[2]) for key in law.coeffs
    }


def contract(law: MultiplicationLaw, point: Sequence) -> MultiplicationLaw:
    """Scale each coefficient of grade g by prod point[k]**g[k]."""
    pt = [Q(x) for x in point]
    if len(pt) != law.rd.rank:
        raise ValidationError("contraction point must have one value per simple root")
    out: Dict[LawKey, Q] = {}
    for key, val in law.coeffs.items():
        g = coeff_grade(law.rd, key[0], key[1], key[2])
        factor = Q(1)
        for base, exp in zip(pt, g):
            factor *= base ** exp
        if val * factor:
            out[key] = val * factor
    return MultiplicationLaw(law.rd, law.monoid, law.truncation, out)


def root_monoid_of_law(law: MultiplicationLaw) -> RootMonoid:
    gens = sorted(
        {
            coeff_grade(law.rd, lam, mu, nu)
            for (lam, mu, nu, ch) in law.coeffs
            if ch != 0
        }
    )
    return make_root_monoid(law.rd, gens)


def law_to_json_dict(law: MultiplicationLaw) -> dict:
    entries = [
        {
            "lam": list(lam),
            "mu": list(mu),
            "nu": list(nu),
            "channel": ch,
            "value": str(law.coeffs[(lam, mu, nu, ch)]),
        }
        for (lam, mu, nu, ch) in sorted(law.coeffs)
    ]
    return {
        "rd": {"label": law.rd.label, "cartan": [list(r) for r in law.rd.cartan]},
        "monoid": {"generators": [list(g) for g in law.monoid.generators]},
        "truncation": law.truncation,
        "coeffs": entries,
    }


def law_from_json_dict(data: dict) -> MultiplicationLaw:
    rdinfo = data["rd"]
    if rdinfo.get("label") and rdinfo["label"] != "custom":
        rd = make_root_datum(rdinfo["label"])
    else:
        rd = make_root_datum(rdinfo["cartan"])
    monoid = make_weight_monoid(rd, [tuple(g) for g in data["monoid"]["generators"]])
    coeffs = {
        (
            tuple(e["lam"]),
            tuple(e["mu"]),
            tuple(e["nu"]),
            int(e["channel"]),
        ): Q(e["value"])
        for e in data["coeffs"]
    }
    return make_law(rd, monoid, int(data["truncation"]), coeffs)


# --------------------------------------------- rank-one equation system


def _a1_window_ints(monoid: WeightMonoid, bound: int) -> List[int]:
    if not _is_a1(monoid.rd):
        raise ValidationError("equation generation is implemented for rank one")
    return [w[0] for w in monoid_window(monoid, bound)]


def _pair_embed(r: int) -> Dict[Tuple[int, int], Q]:
    """Top vector of the depth-r component in a tensor of two forms,
    keyed by y-exponents."""
    return {(j, r - j): Q((-1) ** j * comb(r, j)) for j in range(r + 1)}


def _lower_pair(vec: Dict[Tuple[int, int], Q], p: int, q: int) -> Dict[Tuple[int, int], Q]:
    out: Dict[Tuple[int, int], Q] = {}
    for (y1, y2), c in vec.items():
        if y1 < p:
            key = (y1 + 1, y2)
            out[key] = out.get(key, Q(0)) + c * (p - y1)
        if y2 < q:
            key = (y1, y2 + 1)
            out[key] = out.get(key, Q(0)) + c * (q - y2)
    return {k: v for k, v in out.items() if v}


def _triple_top_vectors(a: int, b: int, c: int, nu: int) -> List[Dict[Tuple[int, int, int], Q]]:
    """Spanning set of the singular vectors of weight nu in the triple
    tensor of forms of degrees a, b, c: one per admissible splitting
    through the first two factors."""
    out = []
    for i0 in range(min(a, b) + 1):
        e = a + b - 2 * i0
        k2 = e + c - nu
        if k2 < 0 or k2 % 2:
            continue
        k = k2 // 2
        if k > min(e, c):
            continue
        img = [_pair_embed(i0)]
        for m in range(k):
            low = _lower_pair(img[-1], a, b)
            img.append({key: v / (e - m) for key, v in low.items()})
        eta: Dict[Tuple[int, int, int], Q] = {}
        for m in range(k + 1):
            outer = Q((-1) ** m * comb(k, m))
            for (s, t), v in img[m].items():
                key = (s, t, k - m)
                eta[key] = eta.get(key, Q(0)) + outer * v
        out.append({k_: v for k_, v in eta.items() if v})
    return out


def law_equations(monoid: WeightMonoid, truncation: int) -> PolySystem:
    """Commutativity and associativity constraints on a rank-one law
    window, as an exact polynomial system in the non-top coefficients."""
    return _law_equations_with_kinds(monoid, truncation)[0]


def law_equation_kinds(
    monoid: WeightMonoid, truncation: int
) -> Tuple[str, ...]:
    """Origin of each equation of law_equations, in matching order:
    "commutativity" or "associativity"."""
    return _law_equations_with_kinds(monoid, truncation)[1]


def _law_equations_with_kinds(
    monoid: WeightMonoid, truncation: int
) -> Tuple[PolySystem, Tuple[str, ...]]:
    ints = _a1_window_ints(monoid, truncation)
    sset = set(ints)
    pos = [x for x in ints if x >= 1]
    if not any(x + y <= truncation for x in pos for y in pos):
        raise ValidationError("truncation too small to contain any generator product")

    index: Dict[Tuple[int, int, int], int] = {}
    names: List[str] = []
    grades: List[Grade] = []
    for a in pos:
        for b in pos:
            if a + b > truncation:
                continue
            for i in range(1, min(a, b) + 1):
                if a + b - 2 * i not in sset:
                    continue
                index[(a, b, i)] = len(names)
                names.append(f"m[{a},{b},{i}]")
                grades.append((i,))

    raw_equations: List[Tuple[Poly, Grade, str]] = []

    for (a, b, i) in sorted(index):
        if a > b:
            continue
        poly: Poly = {}
        if a == b:
            if i % 2:
                poly[(index[(a, b, i)],)] = Q(2)
        else:
            poly[(index[(a, b, i)],)] = Q(1)
            other = (index[(b, a, i)],)
            poly[other] = poly.get(other, Q(0)) - Q((-1) ** i)
        poly = {m: v for m, v in poly.items() if v}
        if poly:
            raw_equations.append((poly, (i,), "commutativity"))

    def channel_factor(x: int, y: int, ch: int) -> Optional[Tuple[int, ...]]:
        """Monomial contributed by the coefficient c[x,y,ch]; None when
        that coefficient is identically zero, () for the fixed top one."""
        if ch == 0:
            return ()
        if x + y - 2 * ch not in sset:
            return None
        return (index[(x, y, ch)],)

    for a in pos:
        for b in pos:
            for c in pos:
                if a + b + c > truncation:
                    continue
                for nu in ints:
                    tot = a + b + c - nu
                    if tot <= 0 or tot % 2:
                        continue
                    r = tot // 2
                    for eta in _triple_top_vectors(a, b, c, nu):
                        poly = {}
                        for (s, t, u), coef in eta.items():
                            for i in range(min(a, b) + 1):
                                j = r - i
                                e = a + b - 2 * i
                                if j < 0 or e < 0 or j > min(e, c):
                                    continue
                                if e not in sset:
                                    continue
                                k1 = _channel_coeff(a, s, b, t, i)
                                if not k1:
                                    continue
                                k2 = _channel_coeff(e, s + t - i, c, u, j)
                                if not k2:
                                    continue
                                left = channel_factor(a, b, i)
                                right = channel_factor(e, c, j)
                                if left is None or right is None:
                                    continue
                                m = tuple(sorted(left + right))
                                v = poly.get(m, Q(0)) + coef * k1 * k2
                                poly[m] = v
                            for p in range(min(b, c) + 1):
                                q = r - p
                                d = b + c - 2 * p
                                if q < 0 or d < 0 or q > min(a, d):
                                    continue
                                if d not in sset:
                                    continue
                                k1 = _channel_coeff(b, t, c, u, p)
                                if not k1:
                                    continue
                                k2 = _channel_coeff(a, s, d, t + u - p, q)
                                if not k2:
                                    continue
                                left = channel_factor(b, c, p)
                                right = channel_factor(a, d, q)
                                if left is None or right is None:
                                    continue
                                m = tuple(sorted(left + right))
                                v = poly.get(m, Q(0)) - coef * k1 * k2
                                poly[m] = v
                        poly = {m: v for m, v in poly.items() if v}
                        if poly:
                            raw_equations.append((poly, (r,), "associativity"))

    seen = set()
    canon = []
    for poly, grade, kind in raw_equations:
        cp = canonical_poly(poly, names)
        if not cp or (cp, grade) in seen:
            continue
        seen.add((cp, grade))
        canon.append((cp, grade, kind))
    canon.sort(
        key=lambda eg: (
            eg[1],
            max(len(m) for m, _ in eg[0]),
            render_poly(eg[0], names),
        )
    )
    system = PolySystem(
        tuple(names),
        tuple(grades),
        tuple((cp, grade) for cp, grade, _ in canon),
    )
    return system, tuple(kind for _, _, kind in canon)


def tangent_at_horospherical(system: PolySystem) -> Tuple[int, Tuple[Grade, ...]]:
    """Kernel of the degree-one truncation at the all-zero point,
    reported blockwise per grade."""
    by_grade: Dict[Grade, List[int]] = {}
    for idx, g in enumerate(system.grades):
        by_grade.setdefault(g, []).append(idx)
    rows_by_grade: Dict[Grade, List[List[Q]]] = {}
    for cp, g in system.equations:
        poly = canon_to_poly(cp)
        if () in poly:
            raise ValidationError("system is not centered at the all-zero point")
        lin = linear_part(poly)
        if not lin:
            continue
        cols = by_grade[g]
        colpos = {u: k for k, u in enumerate(cols)}
        row = [Q(0)] * len(cols)
        for (u,), cval in lin.items():
            assert system.grades[u] == g, "linear term off its equation grade"
            row[colpos[u]] = cval
        rows_by_grade.setdefault(g, []).append(row)
    dim = 0
    weights: List[Grade] = []
    for g in sorted(by_grade):
        cols = by_grade[g]
        rows = rows_by_grade.get(g, [])
        rank = linalg.rank(rows) if rows else 0
        free = len(cols) - rank
        dim += free
        weights.extend([g] * free)
    return dim, tuple(weights)


def law_unknown_values(law: MultiplicationLaw) -> Dict[str, Q]:
    if not _is_a1(law.rd):
        raise ValidationError("unknown naming is defined for rank one")
    out: Dict[str, Q] = {}
    for (lam, mu, nu, ch), val in law.coeffs.items():
        if ch == 0:
            continue
        out[f"m[{lam[0]},{mu[0]},{ch}]"] = val
    return out


def system_residuals(system: PolySystem, values: Mapping[str, Q]) -> Tuple[Q, ...]:
    """Value of each equation at the given coefficient assignment;
    unnamed unknowns count as zero."""
    point = {
        i: Q(values.get(name, Q(0))) for i, name in enumerate(system.unknowns)
    }
    return tuple(evaluate(canon_to_poly(cp), point) for cp, _ in system.equations)


# ----------------------------------------------------- orbit laws (A1)

# Functions on the group are polynomials in the four matrix entries
# with the relation (top-left)(bottom-right) = 1 + (top-right)(bottom-left);
# monomials are exponent quadruples reduced so the first and last slots
# are never both positive.

NFPoly = Dict[Tuple[int, int, int, int], Q]


def _nf_into(out: NFPoly, mono: Tuple[int, int, int, int], coef: Q) -> None:
    p, q, r, s = mono
    if p and s:
        t = min(p, s)
        for k in range(t + 1):
            _nf_into(out, (p - t, q + k, r + k, s - t), coef * comb(t, k))
        return
    v = out.get(mono, Q(0)) + coef
    if v:
        out[mono] = v
    else:
        out.pop(mono, None)


def nf_poly(raw: Mapping[Tuple[int, int, int, int], Q]) -> NFPoly:
    out: NFPoly = {}
    for mono, coef in raw.items():
        if coef:
            _nf_into(out, mono, coef)
    return out


def nf_mul(f: NFPoly, g: NFPoly) -> NFPoly:
    out: NFPoly = {}
    for (p1, q1, r1, s1), c1 in f.items():
        for (p2, q2, r2, s2), c2 in g.items():
            _nf_into(out, (p1 + p2, q1 + q2, r1 + r2, s1 + s2), c1 * c2)
    return out


def nf_add(f: NFPoly, g: NFPoly) -> NFPoly:
    out = dict(f)
    for mono, c in g.items():
        v = out.get(mono, Q(0)) + c
        if v:
            out[mono] = v
        else:
            out.pop(mono, None)
    return out


def nf_scale(f: NFPoly, c) -> NFPoly:
    c = Q(c)
    if not c:
        return {}
    return {m: c * v for m, v in f.items()}


def _op_raise(f: NFPoly) -> NFPoly:
    out: NFPoly = {}
    for (p, q, r, s), c in f.items():
        if p:
            _nf_into(out, (p - 1, q, r + 1, s), -c * p)
        if q:
            _nf_into(out, (p, q - 1, r, s + 1), -c * q)
    return out


def _op_lower(f: NFPoly) -> NFPoly:
    out: NFPoly = {}
    for (p, q, r, s), c in f.items():
        if r:
            _nf_into(out, (p + 1, q, r - 1, s), -c * r)
        if s:
            _nf_into(out, (p, q + 1, r, s - 1), -c * s)
    return out


def _op_weight(f: NFPoly) -> NFPoly:
    out: NFPoly = {}
    for (p, q, r, s), c in f.items():
        v = c * (r + s - p - q)
        if v:
            out[(p, q, r, s)] = v
    return out


def _coordinate_pullbacks(form: BinaryForm) -> List[NFPoly]:
    """Pullback of each linear coordinate along the orbit map of the
    given vector: entry r is the weight-(2r-n) function picking the
    y^r coefficient of the moved vector."""
    n = form.degree
    out = []
    for r in range(n + 1):
        raw: Dict[Tuple[int, int, int, int], Q] = {}
        for t, vt in enumerate(form.coeffs):
            if not vt:
                continue
            for k in range(r + 1):
                l = r - k
                if k > n - t or l > t:
                    continue
                mono = (n - t - k, t - l, k, l)
                raw[mono] = raw.get(mono, Q(0)) + vt * comb(n - t, k) * comb(t, l)
        out.append(nf_poly(raw))
    return out


def _normalize_nf(f: NFPoly) -> NFPoly:
    items = sorted(f.items())
    if not items:
        return {}
    denlcm = 1
    for _, c in items:
        denlcm = denlcm * c.denominator // _gcd(denlcm, c.denominator)
    ints = [int(c * denlcm) for _, c in items]
    content = 0
    for c in ints:
        content = _gcd(content, abs(c))
    sign = 1 if ints[0] > 0 else -1
    return {m: Q(sign * c, content) for (m, _), c in zip(items, ints)}


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _single_generator(monoid: WeightMonoid) -> int:
    gens = [g for g in monoid.generators if any(g)]
    if len(gens) != 1:
        raise ValidationError(
            "orbit laws are implemented for single-generator weight monoids"
        )
    return gens[0][0]


def _hw_covariant(forms: Sequence[BinaryForm], nbar: int) -> NFPoly:
    cands: List[NFPoly] = []
    for form in forms:
        pulls = _coordinate_pullbacks(form)
        for r, pb in enumerate(pulls):
            if 2 * r - form.degree == nbar and pb:
                cands.append(pb)
    if not cands:
        raise ValidationError("no coordinate function of the generator weight")
    raised = [_op_raise(pb) for pb in cands]
    monos = sorted({m for rp in raised for m in rp})
    rows = [[rp.get(m, Q(0)) for rp in raised] for m in monos]
    kern = linalg.kernel_basis(rows, len(cands))
    if not kern:
        raise ValidationError("no singular covariant of the generator weight")
    if len(kern) > 1:
        raise ValidationError(
            "degree-one covariant of the generator weight is not unique; "
            "the orbit closure is not multiplicity-free in this window"
        )
    z: NFPoly = {}
    for coef, pb in zip(kern[0], cands):
        if coef:
            z = nf_add(z, nf_scale(pb, coef))
    z = _normalize_nf(z)
    if not z:
        raise ValidationError("singular covariant vanished after normalization")
    return z


def _lowering_basis(top: NFPoly, weight: int) -> List[NFPoly]:
    basis = [top]
    for s in range(weight):
        nxt = nf_scale(_op_lower(basis[-1]), Q(1, weight - s))
        if not nxt:
            raise ValidationError("covariant span collapsed while lowering")
        basis.append(nxt)
    if _op_lower(basis[-1]):
        raise ValidationError("covariant does not close into the expected span")
    return basis


def orbit_law(
    forms: Sequence[BinaryForm],
    monoid: WeightMonoid,
    truncation: int,
) -> MultiplicationLaw:
    """Numeric law of the orbit closure of the given vector, read off by
    multiplying covariant bases as functions on the group."""
    if not _is_a1(monoid.rd):
        raise ValidationError("orbit laws are implemented for rank one")
    if truncation > MAX_ORBIT_TRUNCATION:
        raise ValidationError(
            f"orbit-law truncation capped at {MAX_ORBIT_TRUNCATION}"
        )
    forms = list(forms)
    if not forms or all(not any(f.coeffs) for f in forms):
        raise ValidationError("zero vector has no orbit law")
    nbar = _single_generator(monoid)
    ints = _a1_window_ints(monoid, truncation)
    sset = set(ints)

    z = _hw_covariant(forms, nbar)
    bases: Dict[int, List[NFPoly]] = {0: [{(0, 0, 0, 0): Q(1)}]}
    power: NFPoly = {(0, 0, 0, 0): Q(1)}
    done = 0
    for a in ints:
        if a == 0:
            continue
        if a % nbar:
            raise ValidationError("window weight off the generator lattice")
        while done < a // nbar:
            power = nf_mul(power, z)
            done += 1
        if not power:
            raise ValidationError("covariant power vanished; window too large")
        bases[a] = _lowering_basis(power, a)

    coeffs: Dict[LawKey, Q] = {}
    wset = set(ints)
    for a in ints:
        for b in ints:
            if a + b > truncation or a + b not in wset:
                continue
            coeffs[((a,), (b,), (a + b,), 0)] = Q(1)
            if a == 0 or b == 0:
                continue
            channels = [
                i for i in range(min(a, b) + 1) if a + b - 2 * i in sset
            ]
            sol = _solve_pair(a, b, channels, bases)
            for i, val in zip(channels, sol):
                if i and val:
                    coeffs[((a,), (b,), (a + b - 2 * i,), i)] = val
    return make_law(monoid.rd, monoid, truncation, coeffs)


def _solve_pair(
    a: int, b: int, channels: List[int], bases: Dict[int, List[NFPoly]]
) -> List[Q]:
    mn = min(a, b)
    solve_pairs = [(0, t) for t in range(mn + 1)]
    if (a + 1) * (b + 1) <= 25:
        verify_pairs = [(s, t) for s in range(a + 1) for t in range(b + 1)]
    else:
        verify_pairs = [(s, 0) for s in range(1, mn + 1)] + [
            (1, 1),
            (1, min(2, b)),
            (min(2, a), 1),
        ]
    rows: List[List[Q]] = []
    rhs: List[Q] = []
    for s, t in solve_pairs:
        prod = nf_mul(bases[a][s], bases[b][t])
        terms: List[Tuple[int, Q, NFPoly]] = []
        for i in channels:
            k = _channel_coeff(a, s, b, t, i)
            if not k:
                continue
            terms.append((i, Q(k), bases[a + b - 2 * i][s + t - i]))
        monos = sorted(set(prod) | {m for _, _, vec in terms for m in vec})
        for m in monos:
            row = [Q(0)] * len(channels)
            for i, k, vec in terms:
                row[channels.index(i)] += k * vec.get(m, Q(0))
            rows.append(row)
            rhs.append(prod.get(m, Q(0)))
    sol = linalg.solve(rows, rhs)
    if sol is None:
        raise ValidationError(
            f"product of the weight-{a} and weight-{b} pieces does not "
            "decompose inside the declared monoid window"
        )
    if sol[channels.index(0)] != 1:
        raise ValidationError("top-channel normalization failed")
    for s, t in verify_pairs:
        if t > b or s > a:
            continue
        prod = nf_mul(bases[a][s], bases[b][t])
        acc: NFPoly = {}
        for i, val in zip(channels, sol):
            if not val:
                continue
            k = _channel_coeff(a, s, b, t, i)
            if not k:
                continue
            m = s + t - i
            if 0 <= m <= a + b - 2 * i:
                acc = nf_add(acc, nf_scale(bases[a + b - 2 * i][m], val * k))
        if acc != prod:
            raise ValidationError(
                f"decomposition check failed on rows ({s},{t}) for the "
                f"({a},{b}) product"
            )
    return list(sol)
