"""Dimensions, weight multiplicities and tensor product decompositions.

All computations stay in exact rational arithmetic.  Characters are
plain dicts mapping weights (fundamental coordinates) to positive
integer multiplicities, closed under the Weyl group.

tensor_decompose pushes the weights of one factor against the other
highest weight and folds them back into the dominant chamber with
signs; tensor_decompose_oracle multiplies full characters and peels
highest weights greedily.  The two are independent routes and the test
suite insists they agree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .errors import ResourceError, ValidationError
from .rootdata import (
    RootDatum,
    Weight,
    check_weight,
    dominant_conjugate,
    is_dominant,
    lowest_weight,
    positive_coroots,
    positive_roots,
    to_root_coords,
)

Q = Fraction

DEFAULT_DIM_CAP = 10_000

CharacterTable = Dict[Weight, int]
Decomposition = Dict[Weight, int]


def weyl_dim(rd: RootDatum, lam) -> int:
    """Dimension of the simple module with highest weight lam."""
    lam = check_weight(rd, lam)
    if not is_dominant(rd, lam):
        raise ValidationError(f"{lam} is not dominant")
    num = Q(1)
    den = Q(1)
    for beta in positive_coroots(rd):
        num *= sum(b * (l + 1) for b, l in zip(beta, lam))
        den *= sum(beta)
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)


@lru_cache(maxsize=None)
def _symmetrizer(rd: RootDatum) -> Tuple[Q, ...]:
    """Positive rationals d with d_i C_ij = d_j C_ji (invariant form data)."""
    n = rd.rank
    d: List[Q] = [Q(0)] * n
    for start in range(n):
        if d[start] != 0:
            continue
        d[start] = Q(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or rd.cartan[i][j] == 0:
                    continue
                val = d[i] * rd.cartan[i][j] / rd.cartan[j][i]
                if d[j] == 0:
                    d[j] = val
                    stack.append(j)
                elif d[j] != val:
                    raise ValidationError("Cartan matrix is not symmetrizable")
    return tuple(d)


def _inner(rd: RootDatum, mu, nu) -> Q:
    """Weyl-invariant pairing of two weights in fundamental coordinates."""
    d = _symmetrizer(rd)
    x = to_root_coords(rd, nu)
    return sum(Q(m) * xi * di for m, xi, di in zip(mu, x, d))


def dominant_weights_below(rd: RootDatum, lam: Weight) -> List[Weight]:
    """All dominant mu with lam - mu a natural sum of simple roots."""
    kmax = to_root_coords(rd, tuple(a - b for a, b in zip(lam, lowest_weight(rd, lam))))
    bounds = []
    for c in kmax:
        assert c.denominator == 1 and c >= 0
        bounds.append(int(c))
    found = []
    ks = [0] * rd.rank

    def rec(i):
        if i == rd.rank:
            mu = tuple(
                lam[j] - sum(ks[t] * rd.cartan[t][j] for t in range(rd.rank))
                for j in range(rd.rank)
            )
            if all(c >= 0 for c in mu):
                found.append(mu)
            return
        for v in range(bounds[i] + 1):
            ks[i] = v
            rec(i + 1)
        ks[i] = 0

    rec(0)
    found.sort(key=lambda mu: (sum(to_root_coords(rd, mu)), mu), reverse=True)
    return found


def _dominant_mult(rd: RootDatum, lam: Weight) -> Dict[Weight, int]:
    """Freudenthal recursion for multiplicities at dominant weights."""
    dom = dominant_weights_below(rd, lam)
    table: Dict[Weight, int] = {lam: 1}
    dom_set = set(dom)
    rho_norm = _inner(rd, _shift(lam), _shift(lam))
    roots_fund = [
        tuple(sum(c[i] * rd.cartan[i][j] for i in range(rd.rank)) for j in range(rd.rank))
        for c in positive_roots(rd)
    ]

    def mult_of(nu) -> int:
        conj, _, _ = dominant_conjugate(rd, nu)
        return table.get(conj, 0)

    for mu in dom:
        if mu == lam:
            continue
        rhs = Q(0)
        for alpha in roots_fund:
            k = 1
            while True:
                nu = tuple(m + k * a for m, a in zip(mu, alpha))
                conj, _, _ = dominant_conjugate(rd, nu)
                if conj not in dom_set:
                    break
                m = table.get(conj)
                assert m is not None, "recursion order violated"
                rhs += m * _inner(rd, nu, alpha)
                k += 1
        denom = rho_norm - _inner(rd, _shift(mu), _shift(mu))
        assert denom > 0
        val = 2 * rhs / denom
        assert val.denominator == 1 and val > 0
        table[mu] = int(val)
    return table


def _shift(mu: Weight) -> Tuple[int, ...]:
    return tuple(m + 1 for m in mu)


def _weyl_orbit(rd: RootDatum, mu: Weight) -> List[Weight]:
    seen = {mu}
    queue = [mu]
    while queue:
        w = queue.pop()
        for i in range(rd.rank):
            ci = w[i]
            if ci == 0:
                continue
            r = tuple(c - ci * a for c, a in zip(w, rd.cartan[i]))
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return sorted(seen)


def weight_multiplicities(rd: RootDatum, lam, cap: int = DEFAULT_DIM_CAP) -> CharacterTable:
    """Full character of the simple module with highest weight lam."""
    lam = check_weight(rd, lam)
    dim = weyl_dim(rd, lam)
    if dim > cap:
        raise ResourceError(f"dimension {dim} exceeds cap {cap}")
    table = _dominant_mult(rd, lam)
    char: CharacterTable = {}
    for mu, m in table.items():
        for w in _weyl_orbit(rd, mu):
            char[w] = m
    assert sum(char.values()) == dim
    return char


def tensor_decompose(rd: RootDatum, lam, mu, cap: int = DEFAULT_DIM_CAP) -> Decomposition:
    """Decomposition of V(lam) (x) V(mu) into simple summands.

    Weight-push method: for every weight eps of the smaller factor,
    reflect lam + eps + rho to the dominant chamber; wall hits drop out
    and the sign of the reflecting element weights the count.
    """
    lam = check_weight(rd, lam)
    mu = check_weight(rd, mu)
    for w in (lam, mu):
        if not is_dominant(rd, w):
            raise ValidationError(f"{w} is not dominant")
    dl, dm = weyl_dim(rd, lam), weyl_dim(rd, mu)
    if dl * dm > cap:
        raise ResourceError(f"tensor dimension {dl * dm} exceeds cap {cap}")
    if dm > dl:
        lam, mu = mu, lam
    char = weight_multiplicities(rd, mu, cap=cap)
    acc: Dict[Weight, int] = {}
    for eps, m in char.items():
        shifted = tuple(l + e + 1 for l, e in zip(lam, eps))
        conj, sign, wall = dominant_conjugate(rd, shifted)
        if wall:
            continue
        nu = tuple(c - 1 for c in conj)
        acc[nu] = acc.get(nu, 0) + sign * m
    result = {nu: m for nu, m in acc.items() if m != 0}
    assert all(m > 0 for m in result.values())
    return result


def character_product_peel(rd: RootDatum, lam, mu, cap: int = DEFAULT_DIM_CAP) -> Decomposition:
    """Brute-force oracle: multiply full characters, peel highest weights.

    Independent of tensor_decompose on purpose; keep it that way.
    """
    lam = check_weight(rd, lam)
    mu = check_weight(rd, mu)
    dl, dm = weyl_dim(rd, lam), weyl_dim(rd, mu)
    if dl * dm > cap:
        raise ResourceError(f"tensor dimension {dl * dm} exceeds cap {cap}")
    ca = weight_multiplicities(rd, lam, cap=cap)
    cb = weight_multiplicities(rd, mu, cap=cap)
    prod: Dict[Weight, int] = {}
    for wa, ma in ca.items():
        for wb, mb in cb.items():
            w = tuple(a + b for a, b in zip(wa, wb))
            prod[w] = prod.get(w, 0) + ma * mb
    result: Decomposition = {}
    while prod:
        dominant = [w for w, m in prod.items() if m != 0 and is_dominant(rd, w)]
        assert dominant, "character peel left a non-dominant residue"
        top = max(dominant, key=lambda w: (sum(to_root_coords(rd, w)), w))
        m = prod[top]
        assert m > 0
        result[top] = m
        for w, k in weight_multiplicities(rd, top, cap=cap).items():
            left = prod.get(w, 0) - m * k
            assert left >= 0
            if left == 0:
                prod.pop(w, None)
            else:
                prod[w] = left
    return result
