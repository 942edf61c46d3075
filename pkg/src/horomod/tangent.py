"""Invariant deformation dimensions at a stabilized point.

The four-term exact sequence

    0 -> (g/g_x)^{G_x} -> V^{G_x} -> (V/g.x)^{G_x} -> T1(X)^G -> 0

reduces the invariant part of the deformation space of an orbit closure
to three fixed-space dimensions, all computed in exact arithmetic.  The
normality and boundary-codimension hypotheses behind the sequence are
caller-asserted and recorded in the report, never checked here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, List, Sequence, Tuple

from .errors import ValidationError
from .liealg import (
    ExplicitModule,
    StabilizerSpec,
    adjoint_module,
    fixed_in_quotient,
    fixed_subspace,
    isotypic_components,
    lie_matrix,
    mat_apply,
    orbit_tangent,
    stabilizer_lie,
)
from .linalg import RowSpace, solve
from .rootdata import RootDatum, Weight, to_root_coords

RootVector = Tuple[int, ...]


@dataclass(frozen=True)
class TangentReport:
    dim_g_mod_gx_fixed: int
    dim_V_fixed: int
    dim_normal_fixed: int
    dim_T1_invariant: int
    weights: Tuple[RootVector, ...]
    normal_assumed: bool = True
    small_boundary_assumed: bool = True

    def __post_init__(self) -> None:
        lhs = self.dim_T1_invariant
        rhs = (
            self.dim_normal_fixed
            - self.dim_V_fixed
            + self.dim_g_mod_gx_fixed
        )
        if lhs != rhs:
            raise ValidationError(
                f"fixed-space dimensions {self.dim_g_mod_gx_fixed}, "
                f"{self.dim_V_fixed}, {self.dim_normal_fixed} break the "
                f"exact-sequence identity (got {lhs}, expected {rhs})"
            )
        for w in self.weights:
            if any(c < 0 for c in w):
                raise ValidationError(
                    f"tangent weight {w} is not a non-negative root vector"
                )


def report_to_json_dict(report: TangentReport) -> dict:
    return {
        "dims": {
            "g_mod_gx_fixed": report.dim_g_mod_gx_fixed,
            "V_fixed": report.dim_V_fixed,
            "normal_fixed": report.dim_normal_fixed,
            "t1_invariant": report.dim_T1_invariant,
        },
        "weights": [list(w) for w in report.weights],
        "hypotheses": {
            "normal": report.normal_assumed,
            "boundary_codim_ge_2": report.small_boundary_assumed,
        },
    }


def tangent_weight(rd: RootDatum, lam: Weight, mu: Weight) -> RootVector:
    """Grading character lambda - mu of the deformation moving the
    highest-weight line of V(lambda) toward a weight-mu direction,
    in root coordinates."""
    diff = tuple(a - b for a, b in zip(lam, mu))
    if len(lam) != rd.rank or len(mu) != rd.rank:
        raise ValidationError("weights must have one entry per simple root")
    coords = to_root_coords(rd, diff)
    out = []
    for c in coords:
        if c.denominator != 1 or c < 0:
            raise ValidationError(
                f"weight {mu} is not below {lam} in the dominance order"
            )
        out.append(int(c))
    return tuple(out)


def moduli_tangent_dim(t1_inv: int, dim_derT_Y: int, dim_derG_X: int) -> int:
    """Moduli tangent dimension from the invariant deformation count and
    the two derivation counts, by the six-term sequence with vanishing
    toric tail."""
    for v in (t1_inv, dim_derT_Y, dim_derG_X):
        if not isinstance(v, int) or v < 0:
            raise ValidationError("dimension inputs must be non-negative integers")
    out = t1_inv + dim_derT_Y - dim_derG_X
    if out < 0:
        raise ValidationError(
            f"inconsistent inputs: {t1_inv} + {dim_derT_Y} - {dim_derG_X} < 0"
        )
    return out


def _component_weights(
    m: ExplicitModule, rep: Sequence[Q]
) -> List[RootVector]:
    """Weights lambda - mu over the isotypic pieces meeting the
    representative, one per (piece, T-weight) pair in its support."""
    comps = isotypic_components(m)
    cols: List[Tuple[Weight, Tuple[Q, ...]]] = []
    for lam, basis in comps:
        for b in basis:
            cols.append((lam, b))
    rows = [[cols[k][1][r] for k in range(len(cols))] for r in range(m.dim)]
    coeffs = solve(rows, list(rep))
    if coeffs is None:
        raise ValidationError("representative escapes the module decomposition")
    parts: Dict[Weight, List[Q]] = {}
    for (lam, b), c in zip(cols, coeffs):
        if not c:
            continue
        acc = parts.setdefault(lam, [Q(0)] * m.dim)
        for r in range(m.dim):
            acc[r] += c * b[r]
    out: List[RootVector] = []
    for lam in sorted(parts):
        part = parts[lam]
        mus = sorted({m.basis_weights[i] for i, v in enumerate(part) if v})
        for mu in mus:
            out.append(tangent_weight(m.rd, lam, mu))
    return out


def t1_invariant(
    m: ExplicitModule,
    x: Sequence,
    stab: StabilizerSpec,
    normal_assumed: bool = True,
    small_boundary_assumed: bool = True,
) -> TangentReport:
    """Invariant deformation dimensions of the orbit closure of x, with
    isotropy described by stab.

    The Lie part of stab must annihilate x (checked).  Normality of the
    closure and boundary codimension at least two are the caller's
    responsibility; the flags are echoed into the report.
    """
    vec = tuple(Q(c) for c in x)
    if len(vec) != m.dim:
        raise ValidationError(
            f"point has length {len(vec)}, module dimension {m.dim}"
        )
    for coeffs in stab.lie_part:
        img = mat_apply(lie_matrix(m, coeffs), vec)
        if any(c != 0 for c in img):
            raise ValidationError(
                "stabilizer Lie part does not annihilate the point"
            )

    gx = stabilizer_lie(m, vec)
    ad = adjoint_module(m.rd)
    dim_a, _ = fixed_in_quotient(ad, gx, stab)
    v_fixed = fixed_subspace(m, stab)
    dim_b = len(v_fixed)
    tangent = orbit_tangent(m, vec)
    dim_c, reps = fixed_in_quotient(m, tangent, stab)

    dim_t1 = dim_c - dim_b + dim_a
    if dim_t1 < 0:
        raise ValidationError(
            "fixed-space dimensions violate the exact sequence; "
            "the stabilizer description is inconsistent with the point"
        )

    # Classes surviving modulo both the orbit directions and the fixed
    # vectors of the ambient module are the invariant deformations.
    span = RowSpace(m.dim)
    for t in tangent:
        span.add(t)
    for v in v_fixed:
        span.add(v)
    weights: List[RootVector] = []
    survivors = 0
    for rep in reps:
        if span.add(rep):
            survivors += 1
            weights.extend(_component_weights(m, rep))
    if survivors != dim_t1:
        raise ValidationError(
            "exactness check failed: the cokernel has dimension "
            f"{survivors}, the alternating sum gives {dim_t1}"
        )

    return TangentReport(
        dim_g_mod_gx_fixed=dim_a,
        dim_V_fixed=dim_b,
        dim_normal_fixed=dim_c,
        dim_T1_invariant=dim_t1,
        weights=tuple(sorted(weights)),
        normal_assumed=normal_assumed,
        small_boundary_assumed=small_boundary_assumed,
    )
