"""Command-line front end.

Every operation is exposed as a subcommand emitting a JSON envelope

    {"status": "ok", "payload": ..., "provenance": {...}}

on stdout.  Weights are comma-separated integers in fundamental
coordinates; monoid generator lists separate weights with semicolons;
rational numbers are printed as exact "p/q" strings.  Exit codes:
0 success, 2 usage, 3 invalid input, 4 resource cap.

Arguments that may start with a minus sign (negative weight entries,
contraction points) can be passed after a literal "--" separator.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as Q
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .errors import ResourceError, ValidationError
from .liealg import (
    DiagCongruence,
    StabilizerSpec,
    build_module,
    chevalley_labels,
    highest_weight_vectors,
    orbit_tangent,
    stabilizer_lie,
    u_coinvariants,
    unipotent_radical_spec,
)
from .monoids import (
    make_root_monoid,
    make_weight_monoid,
    semigroup_presentation,
    saturation,
)
from .mulaw import (
    contract,
    law_equations,
    law_from_json_dict,
    law_to_json_dict,
    make_binary_form,
    orbit_law,
    root_monoid_of_law,
    tangent_at_horospherical,
)
from .polysys import render_poly, system_to_text
from .rootdata import dominance_leq, make_root_datum, to_root_coords
from .repcalc import tensor_decompose, weight_multiplicities, weyl_dim
from .tangent import report_to_json_dict, t1_invariant, tangent_weight


# ------------------------------------------------------------ parsing helpers


def _parse_weight(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValidationError(f"malformed weight {text!r}: expected comma-separated integers")


def _parse_weight_list(text: str) -> List[Tuple[int, ...]]:
    return [_parse_weight(part) for part in text.split(";") if part != ""]


def _parse_point(text: str) -> List[Q]:
    out = []
    for part in text.split(","):
        try:
            out.append(Q(part))
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"malformed rational {part!r}")
    return out


def _fmt_weight(w: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in w) + ")"


def _fmt_vec(v: Sequence[Q]) -> List[str]:
    return [str(Q(c)) for c in v]


def _load_law(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            blob = json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read law file {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise ValidationError(f"law file {path} is not valid JSON: {exc}")
    return law_from_json_dict(blob)


def _stab_from_args(rd, args) -> StabilizerSpec:
    lie = unipotent_radical_spec(rd).lie_part if args.lie_u else ()
    diag = []
    for entry in args.diag or []:
        head, _, mod = entry.partition(":")
        if not mod:
            raise ValidationError(
                f"malformed congruence {entry!r}: expected coeffs:modulus"
            )
        diag.append(
            DiagCongruence(coeffs=_parse_weight(head), modulus=int(mod))
        )
    return StabilizerSpec(lie_part=lie, diag_part=tuple(diag))


# ------------------------------------------------------------ subcommands


def _cmd_root_datum(args):
    rd = make_root_datum(args.group)
    from .rootdata import positive_roots

    payload = {
        "label": rd.label,
        "rank": rd.rank,
        "cartan": [list(row) for row in rd.cartan],
        "positive_roots": [list(r) for r in positive_roots(rd)],
    }
    return payload, {}, None


def _cmd_dominance(args):
    rd = make_root_datum(args.group)
    lam = _parse_weight(args.lam)
    mu = _parse_weight(args.mu)
    leq = dominance_leq(rd, mu, lam)
    payload = {"leq": leq}
    if leq:
        diff = tuple(a - b for a, b in zip(lam, mu))
        payload["difference_root_coords"] = [
            str(c) for c in to_root_coords(rd, diff)
        ]
    return payload, {}, None


def _cmd_tensor(args):
    rd = make_root_datum(args.group)
    dec = tensor_decompose(
        rd, _parse_weight(args.lam), _parse_weight(args.mu), cap=args.cap
    )
    payload = {_fmt_weight(w): k for w, k in dec.items()}
    return payload, {"cap": args.cap}, None


def _cmd_dim(args):
    rd = make_root_datum(args.group)
    payload = {"dim": weyl_dim(rd, _parse_weight(args.lam))}
    return payload, {}, None


def _cmd_weights(args):
    rd = make_root_datum(args.group)
    table = weight_multiplicities(rd, _parse_weight(args.lam), cap=args.cap)
    payload = {_fmt_weight(w): k for w, k in table.items()}
    return payload, {"cap": args.cap}, None


def _cmd_hwv(args):
    rd = make_root_datum(args.group)
    m = build_module(rd, args.module, cap=args.cap)
    vecs = highest_weight_vectors(m)
    payload = {
        _fmt_weight(w): [_fmt_vec(v) for v in vs] for w, vs in vecs.items()
    }
    return payload, {"cap": args.cap}, None


def _cmd_coinv(args):
    rd = make_root_datum(args.group)
    m = build_module(rd, args.module, cap=args.cap)
    co = u_coinvariants(m)
    payload = {
        "dim": co.dim,
        "rep_indices": list(co.rep_indices),
        "rep_weights": [_fmt_weight(w) for w in co.rep_weights],
    }
    return payload, {"cap": args.cap}, None


def _cmd_orbit_tangent(args):
    rd = make_root_datum(args.group)
    m = build_module(rd, args.module, cap=args.cap)
    basis = orbit_tangent(m, _parse_point(args.point))
    payload = {"dim": len(basis), "basis": [_fmt_vec(v) for v in basis]}
    return payload, {"cap": args.cap}, None


def _cmd_stabilizer(args):
    rd = make_root_datum(args.group)
    m = build_module(rd, args.module, cap=args.cap)
    basis = stabilizer_lie(m, _parse_point(args.point))
    payload = {
        "dim": len(basis),
        "labels": list(chevalley_labels(rd)),
        "basis": [_fmt_vec(v) for v in basis],
    }
    return payload, {"cap": args.cap}, None


def _cmd_t1(args):
    rd = make_root_datum(args.group)
    m = build_module(rd, args.module, cap=args.cap)
    stab = _stab_from_args(rd, args)
    report = t1_invariant(
        m,
        _parse_point(args.point),
        stab,
        normal_assumed=args.normal,
        small_boundary_assumed=args.small_boundary,
    )
    blob = report_to_json_dict(report)
    hyps = blob.pop("hypotheses")
    return blob, {"cap": args.cap}, hyps


def _cmd_tangent_weight(args):
    rd = make_root_datum(args.group)
    w = tangent_weight(rd, _parse_weight(args.lam), _parse_weight(args.mu))
    return {"weight_root_coords": list(w)}, {}, None


def _law_monoid(args):
    rd = make_root_datum(args.group)
    return rd, make_weight_monoid(rd, _parse_weight_list(args.monoid))


def _cmd_law_equations(args):
    _, mon = _law_monoid(args)
    system = law_equations(mon, args.truncation)
    if args.export_system:
        with open(args.export_system, "w", encoding="utf-8") as fh:
            fh.write(system_to_text(system))
    payload = {
        "unknown_count": len(system.unknowns),
        "equation_count": len(system.equations),
        "unknowns": list(system.unknowns),
        "equations": [
            render_poly(cp, system.unknowns) for cp, _ in system.equations
        ],
    }
    if args.export_system:
        payload["exported_to"] = args.export_system
    return payload, {"truncation": args.truncation}, None


def _cmd_law_tangent(args):
    _, mon = _law_monoid(args)
    dim, weights = tangent_at_horospherical(law_equations(mon, args.truncation))
    payload = {"dim": dim, "weights": [list(w) for w in weights]}
    return payload, {"truncation": args.truncation}, None


def _cmd_contract(args):
    law = _load_law(args.law_file)
    moved = contract(law, _parse_point(args.point))
    payload = law_to_json_dict(moved)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
    return payload, {"truncation": law.truncation}, None


def _cmd_root_monoid(args):
    law = _load_law(args.law_file)
    rm = root_monoid_of_law(law)
    payload = {
        "generators": [list(g) for g in rm.generators],
        "bound_limited": True,
    }
    return payload, {"truncation": law.truncation}, None


def _cmd_orbit_law(args):
    rd, mon = _law_monoid(args)
    forms = []
    for text in args.form:
        coeffs = _parse_point(text)
        forms.append(make_binary_form(len(coeffs) - 1, coeffs))
    law = orbit_law(forms, mon, args.truncation)
    payload = law_to_json_dict(law)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
    return payload, {"truncation": args.truncation}, None


def _cmd_saturate(args):
    rd = make_root_datum(args.group)
    gens = _parse_weight_list(args.generators)
    mon = (
        make_root_monoid(rd, gens)
        if args.root
        else make_weight_monoid(rd, gens)
    )
    sat = saturation(mon)
    payload = {"generators": [list(g) for g in sat.generators]}
    return payload, {}, None


def _cmd_presentation(args):
    rd = make_root_datum(args.group)
    mon = make_weight_monoid(rd, _parse_weight_list(args.generators))
    pres = semigroup_presentation(mon, args.bound)
    payload = {
        "relations": [
            [list(lhs), list(rhs)] for lhs, rhs in pres.relations
        ],
        "bound_limited": pres.bound_limited,
    }
    return payload, {"bound": args.bound}, None


def _cmd_reproduce_example1(args):
    rd = make_root_datum("A1")
    dims = []
    weight_table: Dict[str, List[List[int]]] = {}
    for n in range(1, 7):
        m = build_module(rd, f"sym({n},natural(2))")
        x = [Q(0)] * m.dim
        x[m.basis_weights.index((n,))] = Q(1)
        stab = StabilizerSpec(
            lie_part=unipotent_radical_spec(rd).lie_part,
            diag_part=(DiagCongruence(coeffs=(1,), modulus=n),),
        )
        report = t1_invariant(m, x, stab)
        dims.append(report.dim_T1_invariant)
        if report.weights:
            weight_table[str(n)] = [list(w) for w in report.weights]
    payload = {"dims": dims, "weights": weight_table}
    return payload, {}, {"normal": True, "boundary_codim_ge_2": True}


def _cmd_reproduce_example2(args):
    rd = make_root_datum("A3")
    m = build_module(rd, "sum(natural(4),ext(2,natural(4)),ext(3,natural(4)))")
    x = [Q(0)] * m.dim
    for w in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        x[m.basis_weights.index(w)] = Q(1)
    report = t1_invariant(m, x, unipotent_radical_spec(rd))
    payload = {
        "dim": report.dim_T1_invariant,
        "weights": [list(w) for w in report.weights],
    }
    return payload, {}, {"normal": True, "boundary_codim_ge_2": True}


# ------------------------------------------------------------ wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horomod",
        description="Exact invariants of multiplicity-free module closures.",
    )
    parser.add_argument(
        "--version", action="version", version=f"horomod {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true",
                        help="indent output for humans")
    common.add_argument("--json", action="store_true",
                        help="compact JSON output (the default)")

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=func)
        return p

    def with_cap(p):
        p.add_argument("--cap", type=int, default=2000)
        return p

    p = add("root-datum", _cmd_root_datum, "Cartan matrix and positive roots")
    p.add_argument("group")

    p = add("dominance", _cmd_dominance, "is mu below lam")
    p.add_argument("group")
    p.add_argument("mu")
    p.add_argument("lam")

    p = add("tensor", _cmd_tensor, "decompose V(lam) (x) V(mu)")
    p.add_argument("group")
    p.add_argument("lam")
    p.add_argument("mu")
    with_cap(p)

    p = add("dim", _cmd_dim, "dimension of V(lam)")
    p.add_argument("group")
    p.add_argument("lam")

    p = add("weights", _cmd_weights, "weight multiplicities of V(lam)")
    p.add_argument("group")
    p.add_argument("lam")
    with_cap(p)

    p = add("hwv", _cmd_hwv, "highest weight vectors of a built module")
    p.add_argument("group")
    p.add_argument("module")
    with_cap(p)

    p = add("coinv", _cmd_coinv, "coinvariants of a built module")
    p.add_argument("group")
    p.add_argument("module")
    with_cap(p)

    p = add("orbit-tangent", _cmd_orbit_tangent, "basis of g.x")
    p.add_argument("group")
    p.add_argument("module")
    p.add_argument("point")
    with_cap(p)

    p = add("stabilizer", _cmd_stabilizer, "Lie stabilizer of a point")
    p.add_argument("group")
    p.add_argument("module")
    p.add_argument("point")
    with_cap(p)

    p = add("t1", _cmd_t1, "invariant deformation report at a point")
    p.add_argument("group")
    p.add_argument("module")
    p.add_argument("point")
    p.add_argument("--lie-u", action="store_true",
                   help="stabilizer Lie part = maximal unipotent")
    p.add_argument("--diag", action="append",
                   help="weight congruence coeffs:modulus, repeatable")
    p.add_argument("--normal", action=argparse.BooleanOptionalAction,
                   default=True)
    p.add_argument("--small-boundary", action=argparse.BooleanOptionalAction,
                   default=True)
    with_cap(p)

    p = add("tangent-weight", _cmd_tangent_weight, "lam - mu in root coords")
    p.add_argument("group")
    p.add_argument("lam")
    p.add_argument("mu")

    p = add("law-equations", _cmd_law_equations,
            "commutativity and associativity system for a rank-one window")
    p.add_argument("group")
    p.add_argument("monoid", help="semicolon-separated generator weights")
    p.add_argument("--truncation", type=int, required=True)
    p.add_argument("--export-system", metavar="FILE")

    p = add("law-tangent", _cmd_law_tangent,
            "linearized solution space at the graded law")
    p.add_argument("group")
    p.add_argument("monoid")
    p.add_argument("--truncation", type=int, required=True)

    p = add("contract", _cmd_contract, "rescale a law toward the graded one")
    p.add_argument("law_file")
    p.add_argument("point", help="comma-separated rationals, one per simple root")
    p.add_argument("--output", metavar="FILE")

    p = add("root-monoid", _cmd_root_monoid, "grades of the nonzero coefficients")
    p.add_argument("law_file")

    p = add("orbit-law", _cmd_orbit_law,
            "law of the closure of the orbit of a binary form")
    p.add_argument("group")
    p.add_argument("monoid")
    p.add_argument("--form", action="append", required=True,
                   help="coefficient list, repeatable per summand")
    p.add_argument("--truncation", type=int, required=True)
    p.add_argument("--output", metavar="FILE")

    p = add("saturate", _cmd_saturate, "Hilbert basis of cone cap lattice")
    p.add_argument("group")
    p.add_argument("generators")
    p.add_argument("--root", action="store_true",
                   help="generators are root-coordinate vectors")

    p = add("presentation", _cmd_presentation,
            "binomial relations among monoid generators up to a degree bound")
    p.add_argument("group")
    p.add_argument("generators")
    p.add_argument("--bound", type=int, required=True)

    add("reproduce-example1", _cmd_reproduce_example1,
        "deformation dims of binary-form cones, n = 1..6")
    add("reproduce-example2", _cmd_reproduce_example2,
        "deformation report for the flag-like point in k4 + /\\2 + /\\3")
    return parser


def _emit(obj: dict, pretty: bool) -> None:
    if pretty:
        text = json.dumps(obj, sort_keys=True, indent=2)
    else:
        text = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def _table(payload: dict) -> Optional[str]:
    if not payload or not all(
        isinstance(v, (int, str, bool)) for v in payload.values()
    ):
        return None
    width = max(len(str(k)) for k in payload)
    lines = [f"{str(k).ljust(width)}  {v}" for k, v in sorted(payload.items())]
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    provenance = {
        "command": "horomod " + " ".join(argv),
        "version": __version__,
    }
    try:
        payload, bounds, hyps = args.func(args)
    except ValidationError as exc:
        _emit(
            {
                "status": "error",
                "error": {"type": "validation", "message": str(exc)},
                "provenance": provenance,
            },
            args.pretty,
        )
        return 3
    except ResourceError as exc:
        _emit(
            {
                "status": "error",
                "error": {"type": "resource", "message": str(exc)},
                "provenance": provenance,
            },
            args.pretty,
        )
        return 4

    provenance["bounds"] = bounds
    if hyps is not None:
        provenance["hypotheses"] = hyps
    _emit(
        {"status": "ok", "payload": payload, "provenance": provenance},
        args.pretty,
    )
    if args.pretty:
        table = _table(payload)
        if table:
            sys.stdout.write("\n" + table + "\n")
    return 0
