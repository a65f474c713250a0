"""Command-line interface: ``entrocone <command> ...``.

Exit status is 0 on success, 1 when ``check`` finds violated inequalities
and 2 for unreadable or inconsistent input.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
import time
from fractions import Fraction

import numpy as np

from . import __version__
from .cones import (
    PolyCone,
    correlated_vector,
    dual_cone,
    evaluate,
    extremal_rays,
    is_facet,
)
from .entropy import (
    DensityMatrix,
    JointDistribution,
    PureState,
    entropy_vector_classical,
    entropy_vector_quantum,
)
from .errors import EntroconeError, NotIsotropicError, RefutationError
from .extremal import (
    DifferentialReport,
    classical_differential,
    classify_classical,
    classify_quantum,
    entropy_differential,
)
from .fileio import (
    InputError,
    cone_from_json,
    digest,
    dumps,
    functional_from_json,
    load_json,
    read_bytes,
    state_from_json,
    vector_from_json,
)
from .inequalities import catalog, elemental_shannon, ingleton, von_neumann_cone, zhang_yeung
from .stabilizer import (
    PhaseSpace,
    classical_model_vector,
    enumerate_isotropic,
    parse_submodule,
    stabilizer_entropy_vector,
)
from .typeclasses import (
    Partition,
    aep_mass,
    chan_yeung_vector,
    classical_kronecker,
    kostka,
    restriction_multiplicities,
    type_class_size,
)

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT = 0, 1, 2


def thread_cap() -> int:
    """Parallelism cap from ``ENTROCONE_THREADS``; every command currently runs on one thread."""
    raw = os.environ.get("ENTROCONE_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _report(command: list[str], data: bytes | None, results, violations=None, timing=None) -> dict:
    out = {
        "command": command,
        "inputs_digest": digest(data) if data is not None else None,
        "results": results,
        "violations": violations or [],
    }
    if timing is not None:
        out["timing_seconds"] = timing
    return out


def _rational_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"expected a comma list of rationals, got {text!r}") from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# --------------------------------------------------------------------------
# commands


def cmd_entropy(args) -> tuple[str, int]:
    obj, data = load_json(args.file)
    state = state_from_json(obj)
    if args.classical and not isinstance(state, JointDistribution):
        raise InputError("--classical needs a file with 'probs'")
    if args.quantum and isinstance(state, JointDistribution):
        raise InputError("--quantum needs a density matrix or pure state")
    if isinstance(state, JointDistribution):
        vec = entropy_vector_classical(state)
    else:
        vec = entropy_vector_quantum(state)
    return dumps(vec.to_json_obj()), EXIT_OK


def _catalog_for(n: int, family: str):
    if family == "quantum":
        return von_neumann_cone(n)
    out = list(elemental_shannon(n))
    if n == 4 and family in ("classical", "linear"):
        out.append(zhang_yeung())
    if n == 4 and family == "linear":
        out.append(ingleton())
    return out


def cmd_check(args) -> tuple[str, int]:
    obj, data = load_json(args.file)
    vec = vector_from_json(obj)
    n = args.catalog if args.catalog is not None else vec.n
    if n != vec.n:
        raise InputError(f"vector has {vec.n} parties but --catalog asks for {n}")
    ineqs = _catalog_for(n, args.family)
    t0 = time.perf_counter()
    violations = []
    for ineq in ineqs:
        val = evaluate(ineq.functional, vec)
        if val < -args.tol:
            violations.append({"name": ineq.name, "value": val, "witness": ineq.functional.to_json_obj()["coeffs"]})
    timing = time.perf_counter() - t0 if args.timing else None
    results = {"n": n, "family": args.family, "evaluated": len(ineqs), "tol": args.tol}
    rep = _report(["check", args.file], data, results, violations, timing)
    return dumps(rep), EXIT_VIOLATIONS if violations else EXIT_OK


def _csv_points(n: int, vectors) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"mask_{m}" for m in range(1, 1 << n)])
    seen = set()
    for v in vectors:
        row = tuple(repr(float(x) + 0.0) for x in v.entries[1:])
        if row in seen:
            continue
        seen.add(row)
        w.writerow(row)
    return buf.getvalue()


def cmd_stab(args) -> tuple[str, int]:
    if args.enumerate:
        n, d = args.enumerate
        space = PhaseSpace(n, d)
        en = enumerate_isotropic(space, args.budget, args.seed)
        vecs = [stabilizer_entropy_vector(M) for M in en.modules]
        if args.format == "csv" or args.emit_csv:
            return _csv_points(n, vecs), EXIT_OK
        points = sorted({tuple(float(x) + 0.0 for x in v.entries) for v in vecs})
        results = {
            "n": n,
            "d": d,
            "modules": len(en.modules),
            "truncated": en.truncated,
            "exhaustive": en.exhaustive,
            "points": [{"n": n, "entries": dict(zip(_keys(n), p))} for p in points],
        }
        return dumps(_report(["stab", "--enumerate", str(n), str(d)], None, results)), EXIT_OK
    if not args.file:
        raise InputError("stab needs a submodule file or --enumerate N D")
    data = read_bytes(args.file)
    try:
        M = parse_submodule(data.decode("utf-8"))
    except ValueError as exc:
        if isinstance(exc, EntroconeError):
            raise
        raise InputError(f"{args.file}: {exc}") from None
    vec = stabilizer_entropy_vector(M)
    if args.format == "csv" or args.emit_csv:
        return _csv_points(M.n, [vec]), EXIT_OK
    results = {
        "d": M.d,
        "n": M.n,
        "generators": [list(g) for g in M.generators],
        "cardinality": M.cardinality(),
        "entropy": vec.to_json_obj(),
        "classical_model": classical_model_vector(M).to_json_obj(),
    }
    return dumps(_report(["stab", args.file], data, results)), EXIT_OK


def _keys(n: int) -> list[str]:
    from .subsets import subset_key

    return [subset_key(m) for m in range(1 << n)]


def _n_from_ambient(k: int) -> int | None:
    n = (k + 1).bit_length() - 1
    return n if (1 << n) - 1 == k else None


def cmd_cone(args) -> tuple[str, int]:
    obj, data = load_json(args.file)
    cone = cone_from_json(obj)
    if args.dualize:
        return dumps(dual_cone(cone).to_json_obj()), EXIT_OK
    if args.extremal:
        rays = extremal_rays(cone)
        out = {"n_ambient": cone.n_ambient, "rays": [[str(x) for x in r] for r in rays], "count": len(rays)}
        return dumps(out), EXIT_OK
    if args.facet:
        fobj, _ = load_json(args.facet)
        f = functional_from_json(fobj)
        if (1 << f.n) - 1 != cone.n_ambient:
            raise InputError("functional and cone live in different dimensions")
        if args.witnesses:
            wobj, _ = load_json(args.witnesses)
            points = [[Fraction(str(x)) for x in p] for p in wobj]
        else:
            points = [correlated_vector(m, f.n) for m in range(1, 1 << f.n)]
        try:
            chk = is_facet(f, points)
        except RefutationError as exc:
            raise InputError(f"witness violates the functional: {exc}") from None
        return dumps({"is_facet": chk.is_facet, "face_dim": chk.face_dim, "cone_dim": chk.cone_dim}), EXIT_OK
    return dumps(cone.to_json_obj()), EXIT_OK


def cmd_catalog(args) -> tuple[str, int]:
    n = args.n
    ineqs = catalog(n) if args.family == "all" else _catalog_for(n, args.family)
    if args.as_cone:
        return dumps(PolyCone.from_functionals([i.functional for i in ineqs]).to_json_obj()), EXIT_OK
    return dumps({"n": n, "inequalities": [i.to_json_obj() for i in ineqs]}), EXIT_OK


def cmd_types(args) -> tuple[str, int]:
    kind = args.kind
    a = args.args
    need = {"size": 1, "cy": 1, "kostka": 2, "kron": 3, "restrict": 2, "aep": 1}[kind]
    if len(a) != need:
        raise InputError(f"types {kind} takes {need} argument(s)")
    if kind == "size":
        counts = [int(x) for x in a[0].split(",")]
        out = {"counts": counts, "size": str(type_class_size(counts)), "log2": math.log2(type_class_size(counts))}
    elif kind == "cy":
        obj, _ = load_json(a[0])
        p = state_from_json(obj)
        if not isinstance(p, JointDistribution) or not p.exact:
            raise InputError("cy needs a joint distribution with rational string probabilities")
        vec = chan_yeung_vector(p, args.k)
        q = int(np.lcm.reduce([x.denominator for x in p.probs.reshape(-1)]))
        normalized = vec.entries / (q * args.k)
        target = entropy_vector_classical(p).entries
        out = {
            "k": args.k,
            "q": q,
            "vector": vec.to_json_obj(),
            "normalized_error": float(np.max(np.abs(normalized - target))),
        }
    elif kind == "kostka":
        out = {"shape": a[0], "content": a[1], "kostka": kostka(_partition(a[0]), [int(x) for x in a[1].split(",")])}
    elif kind == "kron":
        out = {"joint": a[0], "rows": a[1], "cols": a[2],
               "kronecker": classical_kronecker(_partition(a[0]), _partition(a[1]), _partition(a[2]))}
    elif kind == "restrict":
        d = int(a[1])
        mult = restriction_multiplicities(_partition(a[0]), d)
        out = {"mu": a[0], "d": d, "multiplicities": {",".join(map(str, nu)): v for nu, v in mult.items()}}
    else:
        p = _rational_list(a[0])
        mass = aep_mass(p, args.n, Fraction(args.eps), norm=args.norm)
        out = {"p": [str(x) for x in p], "n": args.n, "eps": args.eps, "norm": args.norm,
               "mass": float(mass), "mass_exact": str(mass)}
    return dumps({"command": kind, "result": out}), EXIT_OK


def cmd_rays(args) -> tuple[str, int]:
    obj, data = load_json(args.file)
    state = state_from_json(obj)
    if isinstance(state, JointDistribution):
        rep = classical_differential(state)
        rep.verdict = classify_classical(state, args.tol)
    else:
        pure = state if isinstance(state, PureState) else _as_pure(state)
        if pure is not None:
            rep = entropy_differential(pure, args.tol)
        else:
            rep = DifferentialReport([], np.zeros((0, 0)), None, {}, [])
        rep.verdict = classify_quantum(state, args.tol)
    return dumps(rep.to_json_obj()), EXIT_OK


def _as_pure(rho: DensityMatrix) -> PureState | None:
    w, V = np.linalg.eigh(rho.matrix)
    if w[-1] < 1 - 1e-10:
        return None
    v = V[:, -1]
    nz = np.flatnonzero(np.abs(v) > 1e-12)[0]
    v = v * (abs(v[nz]) / v[nz])
    return PureState(rho.local_dims, v / np.linalg.norm(v))


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-8, help="numerical tolerance (default 1e-8)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled enumerations (default 0)")
    common.add_argument("--budget", type=int, default=None, help="cap on enumerated objects")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing in reports")

    parser = argparse.ArgumentParser(prog="entrocone", description="Entropy cones, stabilizer states and type classes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", parents=[common], help="entropy vector of a state or distribution")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--quantum", action="store_true")
    g.add_argument("--classical", action="store_true")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("check", parents=[common], help="evaluate an inequality catalog on a vector")
    p.add_argument("file")
    p.add_argument("--catalog", type=int, default=None, metavar="N")
    p.add_argument("--family", choices=("quantum", "classical", "linear"), default="quantum")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("stab", parents=[common], help="stabilizer entropy vectors")
    p.add_argument("file", nargs="?")
    p.add_argument("--enumerate", nargs=2, type=int, metavar=("N", "D"))
    p.add_argument("--emit-csv", action="store_true")
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("cone", parents=[common], help="dualize a cone, list extremal rays, test facets")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--dualize", action="store_true")
    g.add_argument("--extremal", action="store_true")
    g.add_argument("--facet", metavar="FUNCTIONAL_FILE")
    p.add_argument("--witnesses", metavar="POINTS_FILE")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("types", parents=[common], help="type classes and partition combinatorics")
    p.add_argument("kind", choices=("size", "cy", "kostka", "kron", "restrict", "aep"))
    p.add_argument("args", nargs="*")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--eps", type=str, default="0.25")
    p.add_argument("--norm", choices=("l1", "inf"), default="l1")
    p.set_defaults(func=cmd_types)

    p = sub.add_parser("rays", parents=[common], help="entropy differential and extremal-ray verdict")
    p.add_argument("file")
    p.set_defaults(func=cmd_rays)

    p = sub.add_parser("catalog", parents=[common], help="dump named inequalities as JSON")
    p.add_argument("n", type=int)
    p.add_argument("--family", choices=("all", "quantum", "classical", "linear"), default="all")
    p.add_argument("--as-cone", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except NotIsotropicError as exc:
        print(f"error: submodule is not isotropic: {exc} (pair {exc.pair})", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, EntroconeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
