"""Command-line surface and file schema.

Spec files are JSON with every rational as a canonical "p/q" string; no
floating point enters the pipeline.  Reports are emitted as canonical JSON
(sorted keys) and are byte-identical across runs apart from the timings
field, which is excluded from the triplet hash.

Exit codes: 0 success, 1 invariant violation, 2 parse/structural error,
3 violated operation precondition.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

from .exactla import Matrix, format_scalar, parse_scalar
from .generators import (
    gen_glblock,
    gen_principal,
    gen_symplectic,
    gen_with_trivial_summand,
    monomial_basis,
)
from .liecore import (
    FundamentalTriplet,
    LieAlgebraData,
    QuadraticForm,
    Refusal,
    Representation,
    StructureError,
    validate,
)
from .localg import build_local, reduce_triplet
from .sl2 import PolyInvariant, complete_triple, property_p_test
from .tower import (
    NEGATIVE,
    POSITIVE,
    assemble,
    centralizer_graded,
    grow,
    pairing_table,
    pn_check,
)

def degree_cap() -> int:
    """GLAW_MAX_DEGREE caps every degree budget; 8 when unset."""
    return int(os.environ.get("GLAW_MAX_DEGREE", "8"))


class SpecError(ValueError):
    """The spec file does not parse into a well-formed triplet."""


# ---------------------------------------------------------------------------
# TripletSpec schema


def parse_triplet_spec(obj: dict) -> tuple[FundamentalTriplet, str, dict]:
    if not isinstance(obj, dict):
        raise SpecError("spec must be a JSON object")
    try:
        name = str(obj.get("name", ""))
        dim_g0 = int(obj["dim_g0"])
        dim_v = int(obj["dim_V"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"missing or malformed header field: {exc}") from exc
    if dim_g0 < 1 or dim_v < 1:
        raise SpecError("dimensions must be positive")
    zero = Fraction(0)
    table = [[[zero] * dim_g0 for _ in range(dim_g0)] for _ in range(dim_g0)]
    for entry in obj.get("structure_constants", []):
        try:
            i, j, terms = int(entry[0]), int(entry[1]), entry[2]
        except (TypeError, ValueError, IndexError) as exc:
            raise SpecError(f"malformed structure constant entry {entry!r}") from exc
        if not (0 <= i < dim_g0 and 0 <= j < dim_g0):
            raise SpecError(f"structure constant indices ({i},{j}) out of range")
        for term in terms:
            try:
                k, coeff = int(term[0]), parse_scalar(str(term[1]))
            except (TypeError, ValueError, IndexError) as exc:
                raise SpecError(f"malformed structure coefficient {term!r}") from exc
            if not 0 <= k < dim_g0:
                raise SpecError(f"structure coefficient index {k} out of range")
            table[i][j][k] += coeff
            table[j][i][k] -= coeff
    g0 = LieAlgebraData(dim_g0, tuple(tuple(tuple(v) for v in row) for row in table))
    gram_rows = obj.get("B0")
    if not isinstance(gram_rows, list) or len(gram_rows) != dim_g0:
        raise SpecError("B0 must be a dense dim_g0 x dim_g0 matrix of rationals")
    try:
        gram = Matrix.from_rows([[parse_scalar(str(x)) for x in row] for row in gram_rows])
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    if gram.cols != dim_g0:
        raise SpecError("B0 has the wrong width")
    rho_list = obj.get("rho")
    if not isinstance(rho_list, list) or len(rho_list) != dim_g0:
        raise SpecError("rho must list one dim_V x dim_V matrix per g0 basis element")
    mats = []
    for m in rho_list:
        if not isinstance(m, list) or len(m) != dim_v or any(len(r) != dim_v for r in m):
            raise SpecError("a rho matrix has the wrong shape")
        try:
            mats.append(Matrix.from_rows([[parse_scalar(str(x)) for x in row] for row in m]))
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
    try:
        triplet = FundamentalTriplet(g0, QuadraticForm(gram), Representation(dim_v, tuple(mats)))
    except StructureError as exc:
        raise SpecError(str(exc)) from exc
    meta = obj.get("meta", {})
    if not isinstance(meta, dict):
        raise SpecError("meta must be an object")
    return triplet, name, meta


def emit_triplet_spec(t: FundamentalTriplet, name: str, meta: dict | None = None) -> dict:
    sc = []
    for i in range(t.dim_g0):
        for j in range(i + 1, t.dim_g0):
            terms = [[k, format_scalar(c)] for k, c in enumerate(t.g0.structure[i][j]) if c != 0]
            if terms:
                sc.append([i, j, terms])
    out = {
        "name": name,
        "dim_g0": t.dim_g0,
        "dim_V": t.dim_v,
        "structure_constants": sc,
        "B0": [[format_scalar(x) for x in row] for row in t.b0.gram.entries],
        "rho": [[[format_scalar(x) for x in row] for row in m.entries] for m in t.rho.action],
    }
    if meta:
        out["meta"] = meta
    return out


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def triplet_hash(t: FundamentalTriplet) -> str:
    payload = emit_triplet_spec(t, name="")
    payload.pop("name")
    return hashlib.sha256(canonical_json(payload).encode()).hexdigest()


def load_spec(path: str) -> dict:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}") from exc


# ---------------------------------------------------------------------------
# command handlers


def _print_report(report: dict):
    sys.stdout.write(canonical_json(report))


def _envelope(command: str, t: FundamentalTriplet, name: str, started: float) -> dict:
    return {
        "command": command,
        "name": name,
        "triplet_hash": triplet_hash(t),
        "timings": {"seconds": round(time.time() - started, 6)},
    }


def cmd_validate(args) -> int:
    started = time.time()
    t, name, _ = parse_triplet_spec(load_spec(args.spec))
    rep = validate(t)
    report = _envelope("validate", t, name, started)
    report["ok"] = rep.ok
    report["violations"] = rep.violations
    _print_report(report)
    return 0 if rep.ok else 1


def _grown(t: FundamentalTriplet, sides: list[str], max_degree: int):
    local = build_local(t)
    out = {}
    for side in sides:
        out[side] = grow(local, side, max_degree)
    return local, out


def cmd_grow(args, thin: bool = False) -> int:
    started = time.time()
    t, name, _ = parse_triplet_spec(load_spec(args.spec))
    sides = [POSITIVE, NEGATIVE] if args.side == "both" else [args.side]
    budget = min(args.max_degree, degree_cap())
    local, towers = _grown(t, sides, budget)
    report = _envelope("dims" if thin else "grow", t, name, started)
    report["max_degree"] = budget
    report["dims"] = {side: tw.dims() for side, tw in towers.items()}
    report["terminated"] = {side: tw.terminated for side, tw in towers.items()}
    if not thin and POSITIVE in towers and NEGATIVE in towers:
        tp, tn = towers[POSITIVE], towers[NEGATIVE]
        top = min(tp.top_degree, tn.top_degree)
        from .exactla import rank as _rank

        report["pairing_ranks"] = [_rank(m) for m in pairing_table(tp, tn, top)] if top >= 1 else []
    _print_report(report)
    return 0


def cmd_dims(args) -> int:
    return cmd_grow(args, thin=True)


def cmd_pn_check(args) -> int:
    started = time.time()
    t, name, _ = parse_triplet_spec(load_spec(args.spec))
    local = build_local(t)
    res = pn_check(local, args.n)
    report = _envelope("pn-check", t, name, started)
    report["n"] = args.n
    report["holds"] = res.holds
    report["witness"] = (
        None
        if res.witness is None
        else {
            "dual_indices": list(res.witness[0]),
            "v_indices": list(res.witness[1]),
            "value": [format_scalar(x) for x in res.value],
        }
    )
    _print_report(report)
    return 0


def _x_vector_from_args(t: FundamentalTriplet, meta: dict, args):
    if args.x_vector:
        coords = [parse_scalar(p) for p in args.x_vector.split(",")]
        if len(coords) != t.dim_v:
            raise SpecError("--x-vector length does not match dim_V")
        return tuple(coords)
    fam = meta.get("family")
    if fam != "symplectic":
        raise SpecError("--poly needs a spec generated by `gen sp` (monomial metadata); use --x-vector")
    n, p = int(meta["n"]), int(meta["p"])
    poly = PolyInvariant.from_string(args.poly, n)
    if not poly.is_homogeneous() or poly.degree() != p:
        raise SpecError(f"the polynomial must be homogeneous of degree {p}")
    mono = monomial_basis(n, p)
    coords = [Fraction(0)] * t.dim_v
    for e, c in poly.terms:
        coords[mono.index(e)] = c
    return tuple(coords)


def cmd_sl2(args) -> int:
    started = time.time()
    t, name, meta = parse_triplet_spec(load_spec(args.spec))
    if not (args.poly or args.x_vector):
        raise SpecError("one of --poly or --x-vector is required")
    x = _x_vector_from_args(t, meta, args)
    report = _envelope("sl2", t, name, started)
    report["property_P"] = property_p_test(t, x)
    cert = complete_triple(t, x)
    report["certificate"] = {
        "x": [format_scalar(v) for v in cert.x],
        "h0": [format_scalar(v) for v in cert.h0],
        "y": [format_scalar(v) for v in cert.y],
        "residuals_zero": cert.ok,
    }
    _print_report(report)
    return 0


def _sub_basis_from_args(t: FundamentalTriplet, meta: dict, spec: str):
    if spec.startswith("file:"):
        data = json.load(open(spec[5:], "r", encoding="utf-8"))
        return [tuple(parse_scalar(str(x)) for x in v) for v in data]
    if spec.replace(" ", "").startswith("o(") and spec.endswith(")"):
        if meta.get("family") != "symplectic":
            raise SpecError("o(n) needs a spec generated by `gen sp` (gl(n) basis metadata)")
        n = int(meta["n"])
        out = []
        for a in range(n):
            for b in range(a + 1, n):
                v = [Fraction(0)] * (n * n)
                v[a * n + b] = Fraction(1)
                v[b * n + a] = Fraction(-1)
                out.append(tuple(v))
        return out
    raise SpecError(f"unknown subalgebra specifier {spec!r}; use o(n) or file:PATH")


def cmd_centralizer(args) -> int:
    started = time.time()
    t, name, meta = parse_triplet_spec(load_spec(args.spec))
    sub = _sub_basis_from_args(t, meta, args.sub)
    local = build_local(t)
    budget = min(args.max_degree, degree_cap())
    tp = grow(local, POSITIVE, budget)
    tn = grow(local, NEGATIVE, budget)
    graded = centralizer_graded(tp, tn, local, sub, budget)
    report = _envelope("centralizer", t, name, started)
    report["sub_dim"] = len(sub)
    report["dims"] = {str(d): len(v) for d, v in sorted(graded.items())}
    report["bases"] = {
        str(d): [[format_scalar(x) for x in vec] for vec in v] for d, v in sorted(graded.items())
    }
    _print_report(report)
    return 0


def cmd_assemble(args) -> int:
    started = time.time()
    t, name, _ = parse_triplet_spec(load_spec(args.spec))
    local = build_local(t)
    budget = min(args.max_degree, degree_cap())
    tp = grow(local, POSITIVE, budget)
    tn = grow(local, NEGATIVE, budget)
    asm = assemble(tp, tn, local)
    from .exactla import rank as _rank
    from .liecore import center as _center, killing_form as _killing

    report = _envelope("assemble", t, name, started)
    report["dim"] = asm.algebra.dim
    report["degrees"] = list(asm.degrees)
    report["killing_rank"] = _rank(_killing(asm.algebra))
    report["center_dim"] = len(_center(asm.algebra))
    if args.full:
        report["structure_constants"] = [
            [i, j, [[k, format_scalar(c)] for k, c in enumerate(asm.algebra.structure[i][j]) if c != 0]]
            for i in range(asm.algebra.dim)
            for j in range(i + 1, asm.algebra.dim)
            if any(c != 0 for c in asm.algebra.structure[i][j])
        ]
    _print_report(report)
    return 0


def cmd_reduce(args) -> int:
    started = time.time()
    t, name, _ = parse_triplet_spec(load_spec(args.spec))
    red = reduce_triplet(t, assert_completely_reducible=True)
    report = _envelope("reduce", t, name, started)
    report["v0_dim"] = len(red.v0)
    report["kernel_dim"] = len(red.g0_kernel)
    report["transitive_part"] = emit_triplet_spec(red.transitive_part, name=f"{name}:transitive")
    _print_report(report)
    return 0


def cmd_gen(args) -> int:
    if args.family == "sp":
        lam = parse_scalar(args.lam)
        t = gen_symplectic(args.n, args.p, lam, args.form)
        name = args.name or f"sp{args.p}(C^{args.n},{args.form},{args.lam})"
        meta = {"family": "symplectic", "n": args.n, "p": args.p, "lambda": args.lam, "form": args.form}
    elif args.family == "glblock":
        l1, l2 = parse_scalar(args.lambda1), parse_scalar(args.lambda2)
        t = gen_glblock(args.n, l1, l2)
        name = args.name or f"glblock(n={args.n},{args.lambda1},{args.lambda2})"
        meta = {"family": "glblock", "n": args.n, "lambda1": args.lambda1, "lambda2": args.lambda2}
    elif args.family == "cartan":
        rows = [[int(x) for x in row.split(",")] for row in args.matrix.split(";")]
        sym = [parse_scalar(x) for x in args.symmetrizer.split(",")] if args.symmetrizer else None
        t = gen_principal(rows, sym)
        name = args.name or f"cartan({args.matrix})"
        meta = {"family": "cartan", "matrix": rows}
    elif args.family == "trivial-summand":
        base, base_name, base_meta = parse_triplet_spec(load_spec(args.spec))
        t = gen_with_trivial_summand(base, args.k)
        name = args.name or f"{base_name}+trivial({args.k})"
        meta = dict(base_meta)
        meta["trivial_summand"] = args.k
    else:  # pragma: no cover
        raise SpecError(f"unknown generator family {args.family!r}")
    sys.stdout.write(canonical_json(emit_triplet_spec(t, name, meta)))
    return 0


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glaw",
        description="exact-arithmetic workbench for graded Lie algebras built from fundamental triplets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec(p):
        p.add_argument("spec", help="path to a TripletSpec JSON file, or - for stdin")

    def add_degree(p):
        p.add_argument("--max-degree", type=int, default=degree_cap(), dest="max_degree")

    p = sub.add_parser("validate", help="check every triplet invariant")
    add_spec(p)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("grow", help="grow the graded tower and report dims and pairing ranks")
    add_spec(p)
    add_degree(p)
    p.add_argument("--side", choices=["pos", "neg", "both"], default="both")
    p.set_defaults(fn=cmd_grow)

    p = sub.add_parser("dims", help="grow and report the dimension table only")
    add_spec(p)
    add_degree(p)
    p.add_argument("--side", choices=["pos", "neg", "both"], default="both")
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser(
        "pn-check",
        help="test the universal degree-n vanishing identity",
        description="Evaluates the degree-n identity on all basis tuples. "
        "The scan costs dim(V)^n * dim(V)^(n-1) evaluations, so n above 4 is "
        "only practical for module dimensions up to about 6.",
    )
    add_spec(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_pn_check)

    p = sub.add_parser("sl2", help="property (P) test and triple completion for a candidate")
    add_spec(p)
    p.add_argument("--poly", help="candidate as a polynomial (needs gen sp metadata)")
    p.add_argument("--x-vector", dest="x_vector", help="candidate as comma-separated coordinates")
    p.set_defaults(fn=cmd_sl2)

    p = sub.add_parser("centralizer", help="graded centralizer of a g0 subalgebra")
    add_spec(p)
    add_degree(p)
    p.add_argument("--sub", required=True, help="o(n) or file:PATH with a JSON list of g0 vectors")
    p.set_defaults(fn=cmd_centralizer)

    p = sub.add_parser("assemble", help="assemble a terminated tower into structure constants")
    add_spec(p)
    add_degree(p)
    p.add_argument("--full", action="store_true", help="include the full structure constants")
    p.set_defaults(fn=cmd_assemble)

    p = sub.add_parser("reduce", help="split off the trivial summand and the representation kernel")
    add_spec(p)
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("gen", help="emit a built-in triplet family as TripletSpec JSON")
    gsub = p.add_subparsers(dest="family", required=True)

    g = gsub.add_parser("sp", help="gl(n) on degree-p polynomials")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--lambda", dest="lam", required=True, help="center scale, a rational like 2 or 1/2")
    g.add_argument("--form", default="trace", choices=["trace", "sl-shifted", "g2"])
    g.add_argument("--name")
    g.set_defaults(fn=cmd_gen)

    g = gsub.add_parser("glblock", help="two gl(n) blocks on n x n matrices")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--lambda1", required=True)
    g.add_argument("--lambda2", required=True)
    g.add_argument("--name")
    g.set_defaults(fn=cmd_gen)

    g = gsub.add_parser("cartan", help="principal grading data of a symmetrizable matrix")
    g.add_argument("--matrix", required=True, help="rows separated by ';', entries by ','")
    g.add_argument("--symmetrizer", help="comma-separated positive rationals")
    g.add_argument("--name")
    g.set_defaults(fn=cmd_gen)

    g = gsub.add_parser("trivial-summand", help="append a zero-action summand to a spec")
    g.add_argument("spec")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--name")
    g.set_defaults(fn=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (SpecError, StructureError, ValueError) as exc:
        sys.stderr.write(canonical_json({"error": str(exc), "kind": "parse"}))
        return 2
    except Refusal as exc:
        hint = " (run `glaw reduce` first)" if "transitive" in str(exc) else ""
        sys.stderr.write(canonical_json({"error": str(exc) + hint, "kind": "precondition"}))
        return 3


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
