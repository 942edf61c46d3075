"""Explicit sl_n modules as sparse rational matrices.

Chevalley conventions on the natural module of A_{n-1}: e_i is the
matrix unit E_{i,i+1}, f_i is E_{i+1,i}, h_i is E_{ii} - E_{i+1,i+1}
(1-based i).  Vectors are dense tuples of Fraction, operators sparse
dicts keyed by (row, col).  Constructions: natural, dual, tensor, sum,
sym, ext, all with deterministic bases: tensor indices in row-major
order, sym on sorted monomials in lexicographic order, ext on strictly
increasing index tuples with Koszul signs.

The full Chevalley basis of sl_n is ordered: e[i,j] for i < j in
lexicographic order (e[i,j] acting as E_{ij}), then f[i,j] for i < j
(acting as E_{ji}), then h[i] for i = 1..n-1.  Stabilizer coefficient
vectors and adjoint module coordinates all use this order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ResourceError, ValidationError
from .linalg import RowSpace, kernel_basis
from .rootdata import RootDatum, Weight, make_root_datum

Q = Fraction

Matrix = Dict[Tuple[int, int], Q]
Vector = Tuple[Q, ...]

DEFAULT_MODULE_DIM_CAP = 2000


def mat_apply(mat: Matrix, vec: Sequence) -> Vector:
    n = len(vec)
    out = [Q(0)] * n
    for (r, c), val in mat.items():
        x = vec[c]
        if x:
            out[r] += val * x
    return tuple(out)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    by_row: Dict[int, List[Tuple[int, Q]]] = {}
    for (r, c), val in b.items():
        by_row.setdefault(r, []).append((c, val))
    out: Matrix = {}
    for (r, c), va in a.items():
        for c2, vb in by_row.get(c, ()):  # a[r,c] * b[c,c2]
            key = (r, c2)
            out[key] = out.get(key, Q(0)) + va * vb
    return {k: v for k, v in out.items() if v != 0}


def mat_commutator(a: Matrix, b: Matrix) -> Matrix:
    out = dict(mat_mul(a, b))
    for k, v in mat_mul(b, a).items():
        out[k] = out.get(k, Q(0)) - v
    return {k: v for k, v in out.items() if v != 0}


def mat_scale(a: Matrix, s: Q) -> Matrix:
    return {} if s == 0 else {k: v * s for k, v in a.items()}


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Q(0)) + v
    return {k: v for k, v in out.items() if v != 0}


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return mat_add(a, mat_scale(b, Q(-1))) == {}


@dataclass(frozen=True)
class ExplicitModule:
    rd: RootDatum
    label: str
    dim: int
    basis_weights: Tuple[Weight, ...]
    e: Tuple[Matrix, ...] = field(repr=False)
    f: Tuple[Matrix, ...] = field(repr=False)
    h: Tuple[Matrix, ...] = field(repr=False)


def _require_type_a(rd: RootDatum) -> int:
    """Returns n for sl_n after checking the Cartan matrix is type A."""
    n = rd.rank + 1
    expected = make_root_datum(f"A{rd.rank}").cartan
    if rd.cartan != expected:
        raise ValidationError("explicit modules require a type-A root datum")
    return n


def _natural_weights(rd: RootDatum, n: int) -> Tuple[Weight, ...]:
    out = []
    for j in range(n):
        out.append(
            tuple((1 if j == i else 0) - (1 if j == i + 1 else 0) for i in range(rd.rank))
        )
    return tuple(out)


def natural(rd: RootDatum) -> ExplicitModule:
    n = _require_type_a(rd)
    e = tuple({(i, i + 1): Q(1)} for i in range(rd.rank))
    f = tuple({(i + 1, i): Q(1)} for i in range(rd.rank))
    h = tuple({(i, i): Q(1), (i + 1, i + 1): Q(-1)} for i in range(rd.rank))
    return ExplicitModule(rd, f"natural({n})", n, _natural_weights(rd, n), e, f, h)


def dual(m: ExplicitModule) -> ExplicitModule:
    def neg_t(mat: Matrix) -> Matrix:
        return {(c, r): -v for (r, c), v in mat.items()}

    return ExplicitModule(
        m.rd,
        f"dual({m.label})",
        m.dim,
        tuple(tuple(-c for c in w) for w in m.basis_weights),
        tuple(neg_t(x) for x in m.e),
        tuple(neg_t(x) for x in m.f),
        tuple(neg_t(x) for x in m.h),
    )


def tensor(a: ExplicitModule, b: ExplicitModule, cap: int = DEFAULT_MODULE_DIM_CAP) -> ExplicitModule:
    if a.rd != b.rd:
        raise ValidationError("tensor factors over different root data")
    dim = a.dim * b.dim
    if dim > cap:
        raise ResourceError(f"module dimension {dim} exceeds cap {cap}")

    def both(ma: Matrix, mb: Matrix) -> Matrix:
        out: Matrix = {}
        for (r, c), v in ma.items():
            for j in range(b.dim):
                out[(r * b.dim + j, c * b.dim + j)] = v
        for (r, c), v in mb.items():
            for i in range(a.dim):
                key = (i * b.dim + r, i * b.dim + c)
                out[key] = out.get(key, Q(0)) + v
        return {k: v for k, v in out.items() if v != 0}

    weights = tuple(
        tuple(x + y for x, y in zip(a.basis_weights[i], b.basis_weights[j]))
        for i in range(a.dim)
        for j in range(b.dim)
    )
    return ExplicitModule(
        a.rd,
        f"tensor({a.label},{b.label})",
        dim,
        weights,
        tuple(both(x, y) for x, y in zip(a.e, b.e)),
        tuple(both(x, y) for x, y in zip(a.f, b.f)),
        tuple(both(x, y) for x, y in zip(a.h, b.h)),
    )


def direct_sum(a: ExplicitModule, b: ExplicitModule) -> ExplicitModule:
    if a.rd != b.rd:
        raise ValidationError("sum terms over different root data")

    def block(ma: Matrix, mb: Matrix) -> Matrix:
        out = dict(ma)
        for (r, c), v in mb.items():
            out[(r + a.dim, c + a.dim)] = v
        return out

    return ExplicitModule(
        a.rd,
        f"sum({a.label},{b.label})",
        a.dim + b.dim,
        a.basis_weights + b.basis_weights,
        tuple(block(x, y) for x, y in zip(a.e, b.e)),
        tuple(block(x, y) for x, y in zip(a.f, b.f)),
        tuple(block(x, y) for x, y in zip(a.h, b.h)),
    )


def _columns(mat: Matrix) -> Dict[int, List[Tuple[int, Q]]]:
    cols: Dict[int, List[Tuple[int, Q]]] = {}
    for (r, c), v in mat.items():
        cols.setdefault(c, []).append((r, v))
    return cols


def sym(k: int, m: ExplicitModule, cap: int = DEFAULT_MODULE_DIM_CAP) -> ExplicitModule:
    if k < 0:
        raise ValidationError("sym degree must be >= 0")
    basis = list(combinations_with_replacement(range(m.dim), k))
    dim = len(basis)
    if dim > cap:
        raise ResourceError(f"module dimension {dim} exceeds cap {cap}")
    index = {mono: i for i, mono in enumerate(basis)}

    def induced(mat: Matrix) -> Matrix:
        cols = _columns(mat)
        out: Matrix = {}
        for ci, mono in enumerate(basis):
            counts: Dict[int, int] = {}
            for u in mono:
                counts[u] = counts.get(u, 0) + 1
            for u, cnt in counts.items():
                pos = mono.index(u)
                for v, val in cols.get(u, ()):  # replace one u by v
                    new = list(mono)
                    new[pos] = v
                    new.sort()
                    key = (index[tuple(new)], ci)
                    out[key] = out.get(key, Q(0)) + cnt * val
        return {kk: v for kk, v in out.items() if v != 0}

    weights = tuple(
        tuple(sum(m.basis_weights[u][i] for u in mono) for i in range(m.rd.rank))
        for mono in basis
    )
    return ExplicitModule(
        m.rd,
        f"sym({k},{m.label})",
        dim,
        weights,
        tuple(induced(x) for x in m.e),
        tuple(induced(x) for x in m.f),
        tuple(induced(x) for x in m.h),
    )


def _sort_sign(seq: List[int]) -> int:
    """Sign of the permutation sorting seq; 0 on duplicates."""
    s = list(seq)
    sign = 1
    for i in range(len(s)):
        for j in range(len(s) - 1 - i):
            if s[j] > s[j + 1]:
                s[j], s[j + 1] = s[j + 1], s[j]
                sign = -sign
            elif s[j] == s[j + 1]:
                return 0
    return sign


def ext(k: int, m: ExplicitModule, cap: int = DEFAULT_MODULE_DIM_CAP) -> ExplicitModule:
    if k < 0 or k > m.dim:
        raise ValidationError("ext degree out of range")
    basis = list(combinations(range(m.dim), k))
    dim = len(basis)
    if dim > cap:
        raise ResourceError(f"module dimension {dim} exceeds cap {cap}")
    index = {mono: i for i, mono in enumerate(basis)}

    def induced(mat: Matrix) -> Matrix:
        cols = _columns(mat)
        out: Matrix = {}
        for ci, mono in enumerate(basis):
            for pos, u in enumerate(mono):
                for v, val in cols.get(u, ()):
                    new = list(mono)
                    new[pos] = v
                    sign = _sort_sign(new)
                    if sign == 0:
                        continue
                    key = (index[tuple(sorted(new))], ci)
                    out[key] = out.get(key, Q(0)) + sign * val
        return {kk: v for kk, v in out.items() if v != 0}

    weights = tuple(
        tuple(sum(m.basis_weights[u][i] for u in mono) for i in range(m.rd.rank))
        for mono in basis
    )
    return ExplicitModule(
        m.rd,
        f"ext({k},{m.label})",
        dim,
        weights,
        tuple(induced(x) for x in m.e),
        tuple(induced(x) for x in m.f),
        tuple(induced(x) for x in m.h),
    )


# ---------------------------------------------------------------- parser

_TOKEN_NAMES = {"natural", "dual", "tensor", "sum", "sym", "ext"}


def _tokenize(expr: str) -> List[str]:
    out: List[str] = []
    i = 0
    while i < len(expr):
        ch = expr[i]
        if ch.isspace():
            i += 1
        elif ch in "(),":
            out.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(expr) and expr[j].isdigit():
                j += 1
            out.append(expr[i:j])
            i = j
        elif ch.isalpha():
            j = i
            while j < len(expr) and expr[j].isalpha():
                j += 1
            out.append(expr[i:j])
            i = j
        else:
            raise ValidationError(f"bad character {ch!r} in module expression")
    return out


def build_module(rd: RootDatum, expr: str, cap: int = DEFAULT_MODULE_DIM_CAP) -> ExplicitModule:
    """Parse expressions like sum(natural(4),ext(2,natural(4)))."""
    toks = _tokenize(expr)
    pos = 0

    def peek() -> Optional[str]:
        return toks[pos] if pos < len(toks) else None

    def eat(expected: Optional[str] = None) -> str:
        nonlocal pos
        if pos >= len(toks):
            raise ValidationError("unexpected end of module expression")
        t = toks[pos]
        if expected is not None and t != expected:
            raise ValidationError(f"expected {expected!r}, got {t!r}")
        pos += 1
        return t

    def parse() -> ExplicitModule:
        name = eat()
        if name not in _TOKEN_NAMES:
            raise ValidationError(f"unknown construction {name!r}")
        eat("(")
        if name == "natural":
            n = int(eat())
            eat(")")
            if n != rd.rank + 1:
                raise ValidationError(
                    f"natural({n}) does not match rank {rd.rank} datum"
                )
            return natural(rd)
        if name == "dual":
            inner = parse()
            eat(")")
            return dual(inner)
        if name in ("sym", "ext"):
            k = int(eat())
            eat(",")
            inner = parse()
            eat(")")
            return (sym if name == "sym" else ext)(k, inner, cap=cap)
        terms = [parse()]
        while peek() == ",":
            eat(",")
            terms.append(parse())
        eat(")")
        out = terms[0]
        for t in terms[1:]:
            out = tensor(out, t, cap=cap) if name == "tensor" else direct_sum(out, t)
        if out.dim > cap:
            raise ResourceError(f"module dimension {out.dim} exceeds cap {cap}")
        return out

    mod = parse()
    if pos != len(toks):
        raise ValidationError("trailing input in module expression")
    return mod


def check_brackets(m: ExplicitModule) -> None:
    """Assert the defining relations hold on this module."""
    r = m.rd.rank
    for i in range(r):
        for j in range(r):
            cij = m.rd.cartan[i][j]
            assert mat_eq(mat_commutator(m.h[i], m.e[j]), mat_scale(m.e[j], Q(cij)))
            assert mat_eq(mat_commutator(m.h[i], m.f[j]), mat_scale(m.f[j], Q(-cij)))
            comm = mat_commutator(m.e[i], m.f[j])
            assert mat_eq(comm, m.h[i] if i == j else {})
    for idx, w in enumerate(m.basis_weights):
        for i in range(r):
            col = [v for (rr, cc), v in m.h[i].items() if cc == idx and rr != idx]
            assert not col, "h is not diagonal on the weight basis"
            assert m.h[i].get((idx, idx), Q(0)) == w[i]


# ------------------------------------------------- Chevalley basis order


def chevalley_labels(rd: RootDatum) -> List[str]:
    n = rd.rank + 1
    labels = [f"e[{i},{j}]" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    labels += [f"f[{i},{j}]" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    labels += [f"h[{i}]" for i in range(1, n)]
    return labels


def chevalley_matrices(m: ExplicitModule) -> List[Matrix]:
    """Action matrices for the full Chevalley basis, in label order.

    e[i,j] represents E_{ij} = [E_{i,i+1}, E_{i+1,j}] and f[i,j]
    represents E_{ji} = [E_{j,i+1}-part commutators] built from the
    simple generators, so all structure constants are consistent.
    """
    n = m.rd.rank + 1
    upper: Dict[Tuple[int, int], Matrix] = {}
    lower: Dict[Tuple[int, int], Matrix] = {}
    for i in range(1, n):
        upper[(i, i + 1)] = m.e[i - 1]
        lower[(i, i + 1)] = m.f[i - 1]
    for span in range(2, n):
        for i in range(1, n - span + 1):
            j = i + span
            upper[(i, j)] = mat_commutator(upper[(i, i + 1)], upper[(i + 1, j)])
            lower[(i, j)] = mat_commutator(lower[(i + 1, j)], lower[(i, i + 1)])
    out: List[Matrix] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(upper[(i, j)])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(lower[(i, j)])
    out.extend(m.h)
    return out


def chevalley_weights(rd: RootDatum) -> List[Weight]:
    """Adjoint weights of the Chevalley basis elements, in label order."""
    n = rd.rank + 1
    nat = _natural_weights(rd, n)
    out = [
        tuple(a - b for a, b in zip(nat[i], nat[j]))
        for i in range(n)
        for j in range(n)
        if i < j
    ]
    out += [
        tuple(b - a for a, b in zip(nat[i], nat[j]))
        for i in range(n)
        for j in range(n)
        if i < j
    ]
    out += [tuple(0 for _ in range(rd.rank))] * rd.rank
    return out


def adjoint_module(rd: RootDatum) -> ExplicitModule:
    """sl_n acting on itself, coordinates in the Chevalley basis order."""
    n = _require_type_a(rd)
    units: List[Matrix] = []
    for i in range(n):
        for j in range(n):
            if i < j:
                units.append({(i, j): Q(1)})
    for i in range(n):
        for j in range(n):
            if i < j:
                units.append({(j, i): Q(1)})
    for i in range(rd.rank):
        units.append({(i, i): Q(1), (i + 1, i + 1): Q(-1)})
    dim = len(units)

    def expand(mat: Matrix) -> Vector:
        coords = [Q(0)] * dim
        pos = 0
        for i in range(n):
            for j in range(n):
                if i < j:
                    coords[pos] = mat.get((i, j), Q(0))
                    pos += 1
        for i in range(n):
            for j in range(n):
                if i < j:
                    coords[pos] = mat.get((j, i), Q(0))
                    pos += 1
        partial = Q(0)
        for i in range(rd.rank):
            partial += mat.get((i, i), Q(0))
            coords[pos] = partial
            pos += 1
        return tuple(coords)

    def ad_matrix(x: Matrix) -> Matrix:
        out: Matrix = {}
        for col, b in enumerate(units):
            vec = expand(mat_commutator(x, b))
            for row, v in enumerate(vec):
                if v != 0:
                    out[(row, col)] = v
        return out

    e = tuple(ad_matrix({(i, i + 1): Q(1)}) for i in range(rd.rank))
    f = tuple(ad_matrix({(i + 1, i): Q(1)}) for i in range(rd.rank))
    h = tuple(
        ad_matrix({(i, i): Q(1), (i + 1, i + 1): Q(-1)}) for i in range(rd.rank)
    )
    return ExplicitModule(
        rd, "adjoint", dim, tuple(chevalley_weights(rd)), e, f, h
    )


# ------------------------------------------------------------ operations


def _weight_blocks(m: ExplicitModule) -> Dict[Weight, List[int]]:
    blocks: Dict[Weight, List[int]] = {}
    for idx, w in enumerate(m.basis_weights):
        blocks.setdefault(w, []).append(idx)
    return blocks


def highest_weight_vectors(m: ExplicitModule) -> Dict[Weight, List[Vector]]:
    """Basis of the joint kernel of the raising operators, one entry per
    dominant weight that actually carries highest weight vectors."""
    blocks = _weight_blocks(m)
    out: Dict[Weight, List[Vector]] = {}
    order = sorted(blocks, key=lambda w: (sum(w), w), reverse=True)
    for chi in order:
        if any(c < 0 for c in chi):
            continue
        src = blocks[chi]
        rows: List[List[Q]] = []
        for i in range(m.rd.rank):
            target = tuple(c + a for c, a in zip(chi, m.rd.cartan[i]))
            for t in blocks.get(target, []):
                row = [m.e[i].get((t, s), Q(0)) for s in src]
                if any(x != 0 for x in row):
                    rows.append(row)
        kern = kernel_basis(rows, len(src))
        if not kern:
            continue
        vecs = []
        for k in kern:
            v = [Q(0)] * m.dim
            for s, val in zip(src, k):
                v[s] = val
            vecs.append(tuple(v))
        out[chi] = vecs
    return out


@dataclass(frozen=True)
class Coinvariants:
    dim: int
    rep_indices: Tuple[int, ...]
    rep_weights: Tuple[Weight, ...]


def u_coinvariants(m: ExplicitModule) -> Coinvariants:
    """Quotient of the module by the span of all raising images.

    Images of the simple raising operators already span the images of
    every positive root vector, since each of those is an iterated
    commutator of simple ones.
    """
    span = RowSpace(m.dim)
    for i in range(m.rd.rank):
        cols = _columns(m.e[i])
        for c, entries in sorted(cols.items()):
            v = [Q(0)] * m.dim
            for r, val in entries:
                v[r] = val
            span.add(v)
    pivot_set = set(span.pivots)
    reps = tuple(i for i in range(m.dim) if i not in pivot_set)
    return Coinvariants(
        dim=m.dim - span.dim,
        rep_indices=reps,
        rep_weights=tuple(m.basis_weights[i] for i in reps),
    )


def orbit_tangent(m: ExplicitModule, x: Sequence) -> List[Vector]:
    """Reduced basis of the span of all Chevalley basis images of x."""
    vec = _check_point(m, x)
    span = RowSpace(m.dim)
    for mat in chevalley_matrices(m):
        span.add(mat_apply(mat, vec))
    return span.basis()


def stabilizer_lie(m: ExplicitModule, x: Sequence) -> List[Vector]:
    """Kernel of xi -> xi.x, as Chevalley coefficient vectors."""
    vec = _check_point(m, x)
    mats = chevalley_matrices(m)
    images = [mat_apply(mat, vec) for mat in mats]
    rows = [[images[k][r] for k in range(len(mats))] for r in range(m.dim)]
    return kernel_basis(rows, len(mats))


def _check_point(m: ExplicitModule, x: Sequence) -> Vector:
    v = tuple(Q(c) for c in x)
    if len(v) != m.dim:
        raise ValidationError(f"point has length {len(v)}, module dimension {m.dim}")
    return v


# ------------------------------------------------------------ stabilizers


@dataclass(frozen=True)
class DiagCongruence:
    """Integer functional on weights plus a modulus.

    Modulus 0 demands the value vanish exactly (a torus factor);
    modulus d demands the value be divisible by d (a finite cyclic
    diagonalizable factor).
    """

    coeffs: Tuple[int, ...]
    modulus: int

    def passes(self, w: Weight) -> bool:
        val = sum(c * x for c, x in zip(self.coeffs, w))
        if self.modulus == 0:
            return val == 0
        return val % self.modulus == 0


@dataclass(frozen=True)
class StabilizerSpec:
    """Generators of an isotropy group: a Lie algebra part given by
    Chevalley coefficient vectors, and a diagonalizable part given by
    weight congruences."""

    lie_part: Tuple[Tuple[Q, ...], ...] = ()
    diag_part: Tuple[DiagCongruence, ...] = ()

    def passes(self, w: Weight) -> bool:
        return all(c.passes(w) for c in self.diag_part)


def unipotent_radical_spec(rd: RootDatum) -> StabilizerSpec:
    """Lie algebra of the standard maximal unipotent subgroup."""
    total = len(chevalley_labels(rd))
    n_upper = (rd.rank + 1) * rd.rank // 2
    vecs = []
    for k in range(n_upper):
        v = [Q(0)] * total
        v[k] = Q(1)
        vecs.append(tuple(v))
    return StabilizerSpec(lie_part=tuple(vecs))


def lie_matrix(m: ExplicitModule, coeffs: Sequence) -> Matrix:
    mats = chevalley_matrices(m)
    if len(coeffs) != len(mats):
        raise ValidationError(
            f"stabilizer vector length {len(coeffs)} != {len(mats)} basis elements"
        )
    out: Matrix = {}
    for c, mat in zip(coeffs, mats):
        if c:
            out = mat_add(out, mat_scale(mat, Q(c)))
    return out


def fixed_subspace(m: ExplicitModule, stab: StabilizerSpec) -> List[Vector]:
    """Vectors killed by the Lie part and supported on congruence-passing
    weights."""
    passing = [i for i in range(m.dim) if stab.passes(m.basis_weights[i])]
    rows: List[List[Q]] = []
    for coeffs in stab.lie_part:
        mat = lie_matrix(m, coeffs)
        cols = _columns(mat)
        for r in range(m.dim):
            row = [Q(0)] * len(passing)
            touched = False
            for k, p in enumerate(passing):
                for rr, val in cols.get(p, ()):  # entries of column p
                    if rr == r:
                        row[k] = val
                        touched = True
            if touched:
                rows.append(row)
    kern = kernel_basis(rows, len(passing))
    out = []
    for k in kern:
        v = [Q(0)] * m.dim
        for p, val in zip(passing, k):
            v[p] = val
        out.append(tuple(v))
    return out


def fixed_in_quotient(
    m: ExplicitModule, span_vectors: Sequence[Sequence], stab: StabilizerSpec
) -> Tuple[int, List[Vector]]:
    """Fixed subspace of M / span under the stabilizer.

    The span must be stable under the stabilizer (true for orbit
    tangents at the stabilized point); fixedness of a class means the
    Lie part maps a representative into the span and the class has a
    representative supported on congruence-passing weights.  Returned
    representatives are independent modulo the span.
    """
    span = RowSpace(m.dim)
    for v in span_vectors:
        span.add(v)
    passing = [i for i in range(m.dim) if stab.passes(m.basis_weights[i])]
    rows: List[List[Q]] = []
    for coeffs in stab.lie_part:
        mat = lie_matrix(m, coeffs)
        reduced_cols = []
        for p in passing:
            col = [Q(0)] * m.dim
            for (r, c), val in mat.items():
                if c == p:
                    col[r] = val
            reduced_cols.append(span.reduce(col))
        for r in range(m.dim):
            row = [reduced_cols[k][r] for k in range(len(passing))]
            if any(x != 0 for x in row):
                rows.append(row)
    kern = kernel_basis(rows, len(passing))
    w_basis = []
    for k in kern:
        v = [Q(0)] * m.dim
        for p, val in zip(passing, k):
            v[p] = val
        w_basis.append(tuple(v))
    # part of the span supported on passing weights
    non_passing = [i for i in range(m.dim) if i not in set(passing)]
    srows = span.basis()
    trows = [[row[q] for q in non_passing] for row in srows]
    tker = kernel_basis(
        [[trows[k][q] for k in range(len(srows))] for q in range(len(non_passing))],
        len(srows),
    )
    base = RowSpace(m.dim)
    for t in tker:
        vec = [Q(0)] * m.dim
        for coef, row in zip(t, srows):
            if coef:
                vec = [a + coef * b for a, b in zip(vec, row)]
        base.add(vec)
    s_triv_dim = base.dim
    reps = [w for w in w_basis if base.add(w)]
    assert len(reps) == len(w_basis) - s_triv_dim
    return len(reps), reps


def isotypic_components(m: ExplicitModule) -> List[Tuple[Weight, List[Vector]]]:
    """Decomposition into isotypic pieces: highest weight vectors closed
    under the lowering operators."""
    comps = []
    total = 0
    for lam, vecs in highest_weight_vectors(m).items():
        space = RowSpace(m.dim)
        queue = list(vecs)
        for v in queue:
            space.add(v)
        while queue:
            v = queue.pop()
            for i in range(m.rd.rank):
                img = mat_apply(m.f[i], v)
                if any(c != 0 for c in img) and space.add(img):
                    queue.append(img)
        comps.append((lam, space.basis()))
        total += space.dim
    assert total == m.dim, "module did not split into isotypic pieces"
    return comps
