#!/usr/bin/env python3
"""Print the two worked reproductions as small tables.

Runs the deformation computation for the binary-form cones (n = 1..6),
the matching law-linearization dimensions (n = 1..5, window D = 4n),
and the rank-three point in k4 + wedge2 + wedge3.
"""

import sys
import time
from fractions import Fraction as Q

sys.path.insert(0, "src")

from horomod.liealg import (
    DiagCongruence,
    StabilizerSpec,
    build_module,
    unipotent_radical_spec,
)
from horomod.monoids import make_weight_monoid
from horomod.mulaw import law_equations, tangent_at_horospherical
from horomod.rootdata import make_root_datum
from horomod.tangent import t1_invariant


def binary_family():
    rd = make_root_datum("A1")
    print("binary-form cones, closure of the orbit of x^n in V(n)")
    print(f"{'n':>3} {'T1 dim':>7} {'law dim':>8}  weights")
    for n in range(1, 7):
        m = build_module(rd, f"sym({n},natural(2))")
        x = [Q(0)] * m.dim
        x[m.basis_weights.index((n,))] = Q(1)
        stab = StabilizerSpec(
            lie_part=unipotent_radical_spec(rd).lie_part,
            diag_part=(DiagCongruence(coeffs=(1,), modulus=n),),
        )
        report = t1_invariant(m, x, stab)
        if n <= 5:
            mon = make_weight_monoid(rd, [(n,)])
            law_dim, _ = tangent_at_horospherical(law_equations(mon, 4 * n))
            law_txt = str(law_dim)
        else:
            law_txt = "-"
        ws = " ".join(f"{w[0]}*alpha" for w in report.weights) or "-"
        print(f"{n:>3} {report.dim_T1_invariant:>7} {law_txt:>8}  {ws}")
    print()


def flag_point():
    rd = make_root_datum("A3")
    m = build_module(rd, "sum(natural(4),ext(2,natural(4)),ext(3,natural(4)))")
    x = [Q(0)] * m.dim
    for w in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        x[m.basis_weights.index(w)] = Q(1)
    report = t1_invariant(m, x, unipotent_radical_spec(rd))
    print("rank-three point e1 + e1^e2 + e1^e2^e3")
    print(f"  T1 dim   {report.dim_T1_invariant}")
    for w in report.weights:
        pretty = "+".join(
            f"a{i + 1}" for i, c in enumerate(w) for _ in range(c)
        )
        print(f"  weight   {pretty}  (root coords {list(w)})")
    print()


if __name__ == "__main__":
    t0 = time.monotonic()
    binary_family()
    flag_point()
    print(f"total {time.monotonic() - t0:.2f}s")
