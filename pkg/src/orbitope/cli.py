"""Command-line front end.

Every subcommand prints one JSON report on stdout: schema version, echo of
the command, a digest of the inputs, mode flags (with seed and sample
count for probabilistic runs), the result payload, and a trailing timing
field.  Identical argv and seed produce byte-identical output except for
the timing field.  Rationals are serialized as strings, never floats.

Exit codes: 0 success, 2 parse error, 3 precondition failure, 4 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

from . import elab2, grpalg, orbit, symcore
from .errors import PreconditionError, ResourceCapError
from .exactmath import Matrix, parse_rational, render_rational
from .perm import PermGroup, cycle_string, parse_cycles

SCHEMA_VERSION = 1


class InputError(Exception):
    """Malformed file or argument (exit code 2)."""


def _load_json(path: str):
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_group(path: str, max_order: int = orbit.DEFAULT_MAX_ORDER) -> orbit.MatrixGroup:
    """Group file: {"dim": d, "generators": [[["1","0"],["0","1"]], ...]}."""
    data = _load_json(path)
    try:
        dim = int(data["dim"])
        gens = [Matrix.from_strings(g) for g in data["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad group file {path}: {exc}") from exc
    if not gens:
        return orbit.close_group([], dim=dim, max_order=max_order)
    if any(g.nrows != dim or g.ncols != dim for g in gens):
        raise InputError(f"bad group file {path}: generator dimension mismatch")
    return orbit.close_group(gens, max_order=max_order)


def load_family(path: str) -> symcore.VectorFamily:
    """Family file: {"dim": d, "columns": [["1","0"], ...]}."""
    data = _load_json(path)
    try:
        dim = int(data["dim"])
        cols = [[parse_rational(x) for x in col] for col in data["columns"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad family file {path}: {exc}") from exc
    if any(len(col) != dim for col in cols):
        raise InputError(f"bad family file {path}: column length mismatch")
    return symcore.VectorFamily.from_columns(dim, cols)


def load_graph(path: str) -> elab2.Graph:
    """Graph file: JSON {"n": ..., "edges": [[u,v],...]} or 'u v' lines."""
    try:
        with open(path) as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
            return elab2.Graph(int(data["n"]), tuple(tuple(e) for e in data["edges"]))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad graph file {path}: {exc}") from exc
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"bad edge line in {path}: {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InputError(f"bad edge line in {path}: {line!r}") from exc
    if not edges:
        raise InputError(f"graph file {path} has no edges")
    n = max(max(e) for e in edges) + 1
    try:
        return elab2.Graph(n, tuple(edges))
    except ValueError as exc:
        raise InputError(f"bad graph in {path}: {exc}") from exc


def load_gf2_matrix(path: str) -> elab2.GF2Matrix:
    """Rows of '0'/'1' characters, one line per row."""
    try:
        with open(path) as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        matrix = elab2.GF2Matrix.from_strings(lines)
    except ValueError as exc:
        raise InputError(f"bad GF(2) matrix in {path}: {exc}") from exc
    if matrix.nrows == 0:
        raise InputError(f"GF(2) matrix in {path} is empty")
    return matrix


def parse_point(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(part) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad point {text!r}: {exc}") from exc


def parse_permutation_arg(text: str, degree: int):
    text = text.strip()
    if text.startswith("("):
        return parse_cycles(text, degree)
    try:
        images = json.loads(text)
        return tuple(int(x) for x in images)
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise InputError(f"bad permutation {text!r}: {exc}") from exc


def render_vector(v) -> list[str]:
    return [render_rational(x) for x in v]


def group_payload(group: PermGroup, emit=None) -> dict:
    payload = {
        "order": str(group.order()),
        "degree": group.degree,
        "generators": [list(g) for g in group.generators],
        "generator_cycles": [cycle_string(g) for g in group.generators],
    }
    if emit:
        payload.update(emit)
    return payload


def _digest(*parts: str) -> str:
    h = hashlib.sha256()
    for part in parts:
        h.update(part.encode())
        h.update(b"\0")
    return h.hexdigest()


def _file_digest(path: str) -> str:
    try:
        with open(path, "rb") as handle:
            return hashlib.sha256(handle.read()).hexdigest()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (input_digest, mode, result)
# ---------------------------------------------------------------------------


def cmd_linsym(args):
    family = load_family(args.family)
    group = symcore.linsym_group(family)
    emit = {}
    if args.emit_matrices:
        emit["realizations"] = [
            symcore.realize(family, g).to_strings() for g in group.generators
        ]
    verified = [
        symcore.is_linear_symmetry(symcore.color_matrix(family), g)
        for g in group.generators
    ]
    payload = group_payload(group, emit)
    payload["generators_verified"] = verified
    return _file_digest(args.family), {"exact": True}, payload


def cmd_orbit_sym(args):
    group = load_group(args.group, max_order=args.max_order)
    point = parse_point(args.point)
    sym = orbit.affsym_group(group, point)
    emit = {}
    if args.emit_matrices:
        realizations = []
        for g in sym.generators:
            linear, translation = orbit.realize_symmetry(group, point, g)
            realizations.append(
                {"linear": linear.to_strings(), "translation": render_vector(translation)}
            )
        emit["realizations"] = realizations
    payload = group_payload(sym, emit)
    payload["group_order"] = group.order
    payload["barycenter"] = render_vector(orbit.barycenter(group, point))
    payload["generators_verified"] = [True] * len(sym.generators)
    return (
        _digest(_file_digest(args.group), args.point),
        {"exact": True},
        payload,
    )


def cmd_generic_sym(args):
    group = load_group(args.group, max_order=args.max_order)
    mode = "auto"
    if args.exact:
        mode = "exact"
    elif args.samples is not None:
        mode = "monte_carlo"
    max_dim = int(os.environ.get("ORBITOPE_MAX_DIM", orbit.DEFAULT_SYMBOLIC_DIM))
    result = orbit.generic_linsym(
        group,
        mode=mode,
        samples=args.samples if args.samples is not None else 5,
        seed=args.seed,
        max_dim=max_dim,
        threads=args.threads,
    )
    payload = group_payload(result.group)
    payload["group_order"] = group.order
    payload["generators_verified"] = (
        list(result.generator_verified)
        if result.mode == "monte_carlo"
        else [True] * len(result.group.generators)
    )
    mode_info = {
        "exact": result.exact,
        "mode": result.mode,
        "probabilistic": not result.exact,
    }
    if result.mode == "monte_carlo":
        mode_info["samples"] = result.samples
        mode_info["seed"] = result.seed
    return _file_digest(args.group), mode_info, payload


def cmd_is_generic(args):
    group = load_group(args.group, max_order=args.max_order)
    point = parse_point(args.point)
    max_dim = int(os.environ.get("ORBITOPE_MAX_DIM", orbit.DEFAULT_SYMBOLIC_DIM))
    generating = orbit.is_generating_point(group, point)
    stabilizer = orbit.stabilizer_in_group(group, point)
    generic = (
        orbit.is_generic(group, point, max_dim=max_dim, seed=args.seed)
        if generating
        else False
    )
    payload = {
        "generic": generic,
        "generating": generating,
        "stabilizer_order": len(stabilizer),
    }
    if generating:
        payload["affsym_order"] = str(orbit.affsym_group(group, point).order())
    return (
        _digest(_file_digest(args.group), args.point),
        {"exact": True},
        payload,
    )


def cmd_closure_check(args):
    group = load_group(args.group, max_order=args.max_order)
    point = parse_point(args.point)
    witness = parse_point(args.witness) if args.witness else None
    report = orbit.generic_closure_check(group, point, witness=witness, seed=args.seed)
    payload = {
        "base_order": report.base_order,
        "affsym_order": str(report.affsym_order),
        "realized_group_order": report.realized_order,
        "witness": render_vector(report.witness),
        "witness_affsym_order": str(report.witness_affsym_order),
        "generically_closed": report.closed,
    }
    return (
        _digest(_file_digest(args.group), args.point, args.witness or ""),
        {"exact": True, "seed": args.seed},
        payload,
    )


def cmd_reppoly_sym(args):
    group = load_group(args.group, max_order=args.max_order)
    gamma = grpalg.gamma_character(group)
    sym = grpalg.reppoly_symgroup(group)
    contains = {
        "left_multiplications": all(
            sym.contains(group.left_regular(i)) for i in group.generator_indices
        ),
        "right_multiplications": all(
            sym.contains(group.right_regular(i)) for i in group.generator_indices
        ),
        "inversion": sym.contains(group.inversion_perm()),
    }
    payload = group_payload(sym)
    payload["group_order"] = group.order
    payload["gamma"] = {str(i): g for i, g in enumerate(gamma)}
    payload["contains"] = contains
    payload["lower_bound"] = grpalg.bigsym_lower_bound(group)
    return _file_digest(args.group), {"exact": True}, payload


def cmd_idempotent(args):
    group = load_group(args.group, max_order=args.max_order)
    point = parse_point(args.point)
    f = grpalg.splitting_idempotent(group, point)
    cert = grpalg.idempotent_certificate(f, point)
    payload = {
        "coefficients": {str(i): render_rational(c) for i, c in enumerate(f.coeffs)},
        "certificate": cert,
        "central": grpalg.is_central(f),
    }
    return (
        _digest(_file_digest(args.group), args.point),
        {"exact": True},
        payload,
    )


def cmd_inversion_test(args):
    group = load_group(args.group, max_order=args.max_order)
    point = parse_point(args.point)
    has = grpalg.has_inversion_symmetry(group, point)
    payload = {
        "inversion_symmetry": has,
        "equivalent_to_representation_polytope": has,
    }
    return (
        _digest(_file_digest(args.group), args.point),
        {"exact": True},
        payload,
    )


def cmd_gale_check(args):
    group = load_group(args.group, max_order=args.max_order)
    point = parse_point(args.point)
    f = grpalg.splitting_idempotent(group, point)
    side_f, side_c = grpalg.gale_symmetry_groups(f)
    equal_as_sets = all(side_c.contains(g) for g in side_f.generators) and all(
        side_f.contains(g) for g in side_c.generators
    )
    payload = {
        "idempotent_orbit_order": str(side_f.order()),
        "complement_orbit_order": str(side_c.order()),
        "orders_equal": side_f.order() == side_c.order(),
        "groups_equal": equal_as_sets,
    }
    return (
        _digest(_file_digest(args.group), args.point),
        {"exact": True},
        payload,
    )


def cmd_cutpoly(args):
    graph = load_graph(args.graph)
    space = elab2.cut_space(graph)
    stabilizer = elab2.admissible_perms(graph)
    payload = {
        "vertices": graph.n,
        "edges": len(graph.edges),
        "cut_space_dimension": space.dim,
        "cut_polytope_vertices": 2 ** space.dim,
        "admissible_order": str(stabilizer.order()),
        "admissible_generators": [list(g) for g in stabilizer.generators],
        "affine_symmetry_order": str(2 ** space.dim * stabilizer.order()),
    }
    return _file_digest(args.graph), {"exact": True}, payload


def cmd_elab2_sym(args):
    c = load_gf2_matrix(args.c_matrix)
    rep = elab2.diag_rep(c)
    sym = grpalg.reppoly_symgroup(rep)
    gamma = grpalg.gamma_character(rep)
    hamming = [
        elab2.hamming_gamma(c, elab2.index_to_vector(k, c.ncols))
        for k in range(2 ** c.ncols)
    ]
    payload = group_payload(sym)
    payload["group_order"] = rep.order
    payload["dimension"] = c.nrows
    payload["ideal_character"] = elab2.is_ideal_character(c)
    payload["faithful"] = c.rank() == c.ncols
    payload["gamma_matches_hamming_formula"] = list(gamma) == hamming[: rep.order]
    payload["extra_symmetries"] = sym.order() > rep.order
    return _file_digest(args.c_matrix), {"exact": True}, payload


def cmd_class_t_check(args):
    graph = load_graph(args.graph)
    cert = elab2.class_t_check(graph)
    payload = {
        "vertices": graph.n,
        "big_enough": cert.big_enough,
        "complement_is_tree": cert.complement_is_tree,
        "cover_gt_3": cert.cover_gt_3,
        "in_class": cert.in_class,
    }
    return _file_digest(args.graph), {"exact": True}, payload


def cmd_caterpillar(args):
    n = args.n
    if n < 7:
        raise InputError("the caterpillar family starts at 7 vertices")
    graph = elab2.caterpillar_complement(n)
    cert = elab2.class_t_check(graph)
    tree_auts = elab2.graph_automorphism_group(elab2.caterpillar_tree(n))
    payload = {
        "n": graph.n,
        "edges": [list(e) for e in graph.edges],
        "class_t": {
            "big_enough": cert.big_enough,
            "complement_is_tree": cert.complement_is_tree,
            "cover_gt_3": cert.cover_gt_3,
            "in_class": cert.in_class,
        },
        "tree_is_asymmetric": tree_auts.order() == 1,
    }
    return _digest(str(n)), {"exact": True}, payload


def cmd_count_ideal_bound(args):
    bound = elab2.count_ideal_orbit_bound(args.n, args.d)
    payload = {
        "ideal_character_count": str(bound.count),
        "gl_order": str(bound.gl_order),
        "forced_stabilizer": bound.forced_stabilizer,
    }
    return _digest(str(args.n), str(args.d)), {"exact": True}, payload


HANDLERS = {
    "linsym": cmd_linsym,
    "orbit-sym": cmd_orbit_sym,
    "generic-sym": cmd_generic_sym,
    "is-generic": cmd_is_generic,
    "closure-check": cmd_closure_check,
    "reppoly-sym": cmd_reppoly_sym,
    "idempotent": cmd_idempotent,
    "inversion-test": cmd_inversion_test,
    "gale-check": cmd_gale_check,
    "cutpoly": cmd_cutpoly,
    "elab2-sym": cmd_elab2_sym,
    "class-t-check": cmd_class_t_check,
    "caterpillar": cmd_caterpillar,
    "count-ideal-bound": cmd_count_ideal_bound,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitope",
        description="Exact affine symmetry groups of orbit polytopes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-order", type=int, default=orbit.DEFAULT_MAX_ORDER)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--emit-matrices", action="store_true")

    p = sub.add_parser("linsym", parents=[common], help="linear symmetries of a vector family")
    p.add_argument("--family", required=True)

    p = sub.add_parser("orbit-sym", parents=[common], help="affine symmetries of an orbit polytope")
    p.add_argument("--group", required=True)
    p.add_argument("--point", required=True)

    p = sub.add_parser("generic-sym", parents=[common], help="generic symmetry group over Q(X)")
    p.add_argument("--group", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--samples", type=int, default=None)

    p = sub.add_parser("is-generic", parents=[common], help="test a point for genericity")
    p.add_argument("--group", required=True)
    p.add_argument("--point", required=True)

    p = sub.add_parser("closure-check", parents=[common], help="generic closedness of the realized symmetry group")
    p.add_argument("--group", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--witness", default=None)

    p = sub.add_parser("reppoly-sym", parents=[common], help="symmetries of a representation polytope")
    p.add_argument("--group", required=True)

    p = sub.add_parser("idempotent", parents=[common], help="splitting idempotent of an orbit polytope")
    p.add_argument("--group", required=True)
    p.add_argument("--point", required=True)

    p = sub.add_parser("inversion-test", parents=[common], help="test for the vertex-inversion symmetry")
    p.add_argument("--group", required=True)
    p.add_argument("--point", required=True)

    p = sub.add_parser("gale-check", parents=[common], help="symmetry groups of an idempotent orbit and its complement")
    p.add_argument("--group", required=True)
    p.add_argument("--point", required=True)

    p = sub.add_parser("cutpoly", parents=[common], help="affine symmetries of the cut polytope of a graph")
    p.add_argument("--graph", required=True)

    p = sub.add_parser("elab2-sym", parents=[common], help="symmetries of a diagonal sign representation polytope")
    p.add_argument("--c-matrix", required=True)

    p = sub.add_parser("class-t-check", parents=[common], help="tree-complement class membership")
    p.add_argument("--graph", required=True)

    p = sub.add_parser("caterpillar", parents=[common], help="emit the caterpillar complement graph")
    p.add_argument("n", type=int)

    p = sub.add_parser("count-ideal-bound", parents=[common], help="ideal character count versus |GL(n,2)|")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        digest, mode, result = HANDLERS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 3
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 4
    report = {
        "schema": SCHEMA_VERSION,
        "command": args.command,
        "input_digest": digest,
        "mode": mode,
        "result": result,
        "timing_ms": round((time.perf_counter() - start) * 1000, 3),
    }
    print(json.dumps(report, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
