"""Command-line front end: ``pmv run`` and ``pmv validate``."""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Callable

import jsonschema

from pmv.algebra import (
    CapExceeded,
    ChainAlgebra,
    GammaAlgebra,
    PmvAlgebra,
    ProductAlgebra,
    TableAlgebra,
    algebra_from_spec,
    check_axioms,
    sampled_axiom_check,
)
from pmv.groups import LexQ2, Qn, RieszRep
from pmv.ideals import all_maximal_ideals
from pmv.jordan import jordan_decompose, lattice_ops, lub_oracle, measure_basis, random_measure, simplex_report
from pmv.linalg import frac
from pmv.metric import (
    check_interpolation,
    check_norm_properties,
    extend_state,
    is_metric_on,
    norm_kernel,
    sample_grid,
    sample_quadruples,
)
from pmv.states import (
    check_state_identities,
    classify_r_state,
    enumerate_r_morphisms,
    enumerate_vertices,
    fmt_vec,
    r_state,
    state_polytope,
)

ANALYSES = ("axioms", "ideals", "states", "morphisms", "jordan", "metric", "simplex")
DEFAULT_CAPS = {"max_carrier": 64, "max_dim": 12, "sample_bound": 25}
FINITE_ONLY = {"ideals", "morphisms", "jordan", "metric", "simplex"}

EXIT_OK, EXIT_MALFORMED, EXIT_FAILED, EXIT_CAP = 0, 1, 2, 3


class JobError(ValueError):
    """Malformed job; the message names the offending field."""


def load_schema() -> dict:
    return json.loads(resources.files("pmv").joinpath("data/job.schema.json").read_text())


def _field_path(err: jsonschema.ValidationError) -> str:
    parts = [str(p) for p in err.absolute_path]
    return ".".join(parts) if parts else "<job>"


def parse_job(raw: Any) -> dict:
    errors = sorted(jsonschema.Draft202012Validator(load_schema()).iter_errors(raw),
                    key=lambda e: (list(map(str, e.absolute_path)), e.message))
    if errors:
        e = errors[0]
        raise JobError(f"{_field_path(e)}: {e.message}")
    return raw


def carrier_size(spec: dict) -> float:
    kind = spec["kind"]
    if kind == "table":
        return len(spec["carrier"])
    if kind == "chain":
        return spec["k"] + 1
    if kind == "gamma":
        return math.prod(u + 1 for u in spec["unit"]) if spec["group"] == "zn" else math.inf
    return math.prod(carrier_size(f) for f in spec["factors"])


def build_algebra(spec: dict) -> PmvAlgebra:
    try:
        return algebra_from_spec(spec)
    except (ValueError, TypeError, KeyError) as exc:
        raise JobError(f"algebra: {exc}") from None


def build_rep(job: dict) -> RieszRep:
    r = job.get("riesz", {"qn": 1})
    return LexQ2() if r.get("lexq2") else Qn(r["qn"])


def _rat(v) -> str:
    return str(frac(v))


@dataclass
class Outcome:
    body: dict
    failures: list[str] = field(default_factory=list)
    csv_rows: list[dict] = field(default_factory=list)


@dataclass
class Context:
    job: dict
    algebra: PmvAlgebra
    rep: RieszRep
    caps: dict
    seed: int


# -- analyses --------------------------------------------------------------------------


def _axioms(ctx: Context) -> Outcome:
    A = ctx.algebra
    if A.finite:
        rep = check_axioms(A)
    else:
        rep = sampled_axiom_check(A, A.sample(ctx.caps["sample_bound"]))
    failures = [f"axioms: {name} fails" for name in rep.failed]
    return Outcome(rep.to_json(), failures)


def _ideals(ctx: Context) -> Outcome:
    maxi = all_maximal_ideals(ctx.algebra)
    body = {"maximal": [{"members": I.labels(), "normal": normal} for I, normal in maxi]}
    failures = [] if any(normal for _, normal in maxi) else ["ideals: no normal maximal ideal"]
    return Outcome(body, failures)


def _given_state(ctx: Context):
    spec = ctx.job.get("state")
    if spec is None:
        return None
    comps = spec["components"]
    if not isinstance(ctx.rep, Qn) or len(comps) != ctx.rep.dim:
        raise JobError(f"state.components: expected {ctx.rep.dim} component value lists")
    n = ctx.algebra.tables.n
    for i, c in enumerate(comps):
        if len(c) != n:
            raise JobError(f"state.components.{i}: expected {n} values in carrier order")
    try:
        return r_state(ctx.algebra, ctx.rep, [[frac(v) for v in c] for c in comps])
    except ValueError as exc:
        raise JobError(f"state: {exc}") from None


def _states(ctx: Context) -> Outcome:
    A = ctx.algebra
    if isinstance(ctx.rep, LexQ2):
        fam = ctx.job.get("family")
        if fam is None:
            raise JobError("family: the lexq2 target needs family.b")
        try:
            s = r_state(A, ctx.rep, b=frac(fam["b"]))
        except ValueError as exc:
            raise JobError(f"family: {exc}") from None
        bound = ctx.caps["sample_bound"]
        verdict = classify_r_state(A, s, bound=bound)
        ids = check_state_identities(A, s, bound=bound)
        body = {"family": {"b": _rat(fam["b"])}, "classification": verdict.to_json(),
                "identities": {k: v is None for k, v in ids.items()}}
        # (xii) is reported, not asserted, for this target
        failures = [f"states: identity ({k}) fails" for k, v in ids.items() if v is not None and k != "xii"]
        return Outcome(body, failures)
    if not A.finite:
        raise JobError("riesz: states of an infinite algebra need the lexq2 family")
    P = state_polytope(A, max_dim=ctx.caps["max_dim"])
    body: dict = {"dimension": P.dimension, "vertices": [fmt_vec(v) for v in P.vertices]}
    failures = []
    if P.empty:
        body["empty"] = True
    for v in enumerate_vertices(P):
        bad = [k for k, w in check_state_identities(A, v).items() if w is not None]
        failures += [f"states: identity ({k}) fails at a vertex" for k in bad]
    s = _given_state(ctx)
    if s is not None:
        body["classification"] = classify_r_state(A, s).to_json()
    return Outcome(body, failures)


def _chain_shape(A: PmvAlgebra) -> tuple[int, str]:
    if isinstance(A, ChainAlgebra):
        return 1, str(A.k)
    if isinstance(A, ProductAlgebra) and all(isinstance(f, ChainAlgebra) for f in A.factors):
        ks = sorted({f.k for f in A.factors})
        return len(A.factors), "x".join(str(k) for k in ks)
    return 1, ""


def _morphisms(ctx: Context) -> Outcome:
    A, rep = ctx.algebra, ctx.rep
    if not isinstance(rep, Qn):
        raise JobError("riesz: morphism enumeration needs a qn target")
    ms = enumerate_r_morphisms(A, rep)
    entries, failures = [], []
    for s in ms:
        v = classify_r_state(A, s)
        if not (v.is_morphism and v.is_extremal and v.is_meet_preserving):
            failures.append("morphisms: an enumerated morphism fails its own classification")
        entries.append({"values": s.values(), "kernel": v.kernel.labels(), "kernel_maximal": v.kernel_maximal})
    expected = len(all_maximal_ideals(A)) ** rep.dim
    if expected != len(ms):
        failures.append(f"morphisms: count {len(ms)} differs from (#maximal ideals)^m = {expected}")
    n, k = _chain_shape(A)
    row = {"n": n, "m": rep.dim, "k": k, "count": len(ms)}
    return Outcome({"count": len(ms), "morphisms": entries}, failures, [row])


def _jordan(ctx: Context, pairs: int = 10) -> Outcome:
    A, rep = ctx.algebra, ctx.rep
    if not isinstance(rep, Qn):
        raise JobError("riesz: the jordan analysis needs a qn target (Q lex Q is not Dedekind complete)")
    rng = random.Random(ctx.seed)
    agree = disjoint = 0
    failures = []
    for _ in range(pairs):
        m1, m2 = random_measure(A, rep, rng), random_measure(A, rep, rng)
        if lattice_ops(m1, m2, "sup") == lub_oracle(m1, m2):
            agree += 1
        else:
            failures.append("jordan: sup differs from the LP least upper bound")
        plus, minus = jordan_decompose(m1)
        if all(v == rep.zero for v in lattice_ops(plus, minus, "inf").table):
            disjoint += 1
        else:
            failures.append("jordan: positive and negative parts are not disjoint")
    body = {"measure_dimension": len(measure_basis(A)), "pairs": pairs, "sup_matches_lp": agree,
            "jordan_parts_disjoint": disjoint}
    return Outcome(body, failures)


def _metric(ctx: Context) -> Outcome:
    A, rep = ctx.algebra, ctx.rep
    if not isinstance(rep, Qn):
        raise JobError("riesz: the metric analysis needs a qn target")
    s = _given_state(ctx)
    if s is None:
        # barycentre of the extremal states in every component
        V = state_polytope(A, max_dim=ctx.caps["max_dim"]).vertices
        bary = [sum((v[i] for v in V), Fraction(0)) / len(V) for i in range(A.tables.n)]
        s = r_state(A, rep, [bary] * rep.dim)
    try:
        mctx = extend_state(A, s, seed=ctx.seed)
    except TypeError as exc:
        raise JobError(f"algebra: {exc}") from None
    grid = sample_grid(mctx)
    norms = check_norm_properties(mctx, grid, seed=ctx.seed)
    interp = check_interpolation(mctx, sample_quadruples(mctx, 100, random.Random(ctx.seed)))
    kernel = norm_kernel(mctx)
    separated, witness = is_metric_on(mctx, grid)
    body = {
        "kernel_basis": [list(k) for k in kernel],
        "is_metric": not kernel,
        "separates_samples": separated,
        "separation_witness": witness,
        "norm_properties": norms.to_json(),
        "interpolation": interp.to_json(),
        "grid_size": len(grid),
    }
    failures = []
    if not norms.ok:
        failures.append("metric: a norm property fails")
    if not interp.ok:
        failures.append("metric: interpolation fails on a sampled quadruple")
    if separated != (not kernel):
        failures.append("metric: separation and kernel triviality disagree")
    return Outcome(body, failures)


def _simplex(ctx: Context) -> Outcome:
    if not isinstance(ctx.rep, Qn):
        raise JobError("riesz: simplex certification needs a qn target")
    state_polytope(ctx.algebra, max_dim=ctx.caps["max_dim"])
    r = simplex_report(ctx.algebra, ctx.rep)
    failures = [] if (r.is_simplex or r.empty) else ["simplex: the state space is not a simplex"]
    return Outcome(r.to_json(), failures)


RUNNERS: dict[str, Callable[[Context], Outcome]] = {
    "axioms": _axioms, "ideals": _ideals, "states": _states, "morphisms": _morphisms,
    "jordan": _jordan, "metric": _metric, "simplex": _simplex,
}


# -- orchestration ---------------------------------------------------------------------


def prepare(job: dict) -> Context:
    parse_job(job)
    caps = {**DEFAULT_CAPS, **job.get("caps", {})}
    size = carrier_size(job["algebra"])
    A = build_algebra(job["algebra"])
    rep = build_rep(job)
    if size != math.inf and size > caps["max_carrier"]:
        raise CapExceeded(f"carrier size {size} exceeds max_carrier {caps['max_carrier']}")
    if not A.finite:
        bad = [a for a in job["analyses"] if a in FINITE_ONLY]
        if bad:
            raise JobError(f"analyses: {bad[0]!r} needs a finite algebra")
    if "family" in job and not isinstance(rep, LexQ2):
        raise JobError("family: only meaningful with the lexq2 target")
    return Context(job, A, rep, caps, int(job.get("seed", 0)))


def threads() -> int:
    try:
        return max(1, int(os.environ.get("PMV_THREADS", "1")))
    except ValueError:
        return 1


def run_job(job: dict) -> tuple[int, dict, list[dict]]:
    """Run every requested analysis. Returns (exit code, report, csv rows)."""
    ctx = prepare(job)
    if ctx.algebra.finite:
        ctx.algebra.tables  # compile once before fanning out
    order = [a for a in ANALYSES if a in job["analyses"]]
    with ThreadPoolExecutor(max_workers=threads()) as pool:
        futures = {a: pool.submit(RUNNERS[a], ctx) for a in order}
        outcomes = {a: futures[a].result() for a in order}
    failures = [f for a in order for f in outcomes[a].failures]
    report = {
        "version": 1,
        "algebra": ctx.algebra.name,
        "carrier_size": ctx.algebra.tables.n if ctx.algebra.finite else None,
        "target": repr(ctx.rep),
        "analyses": {a: outcomes[a].body for a in order},
        "failures": failures,
        "ok": not failures,
    }
    rows = [r for a in order for r in outcomes[a].csv_rows]
    return (EXIT_FAILED if failures else EXIT_OK), report, rows


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def write_csv(directory: Path, rows: list[dict]) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    with open(directory / "morphism_counts.csv", "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["n", "m", "k", "count"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)


def validate_job(job: Any) -> tuple[int, dict]:
    """Schema check plus an axiom precheck for finite algebras."""
    parse_job(job)
    A = build_algebra(job["algebra"])
    size = carrier_size(job["algebra"])
    caps = {**DEFAULT_CAPS, **job.get("caps", {})}
    diag: dict = {"schema": "ok", "algebra": A.name}
    if size != math.inf and size > caps["max_carrier"]:
        raise CapExceeded(f"carrier size {size} exceeds max_carrier {caps['max_carrier']}")
    rep = check_axioms(A) if A.finite else sampled_axiom_check(A, A.sample(caps["sample_bound"]))
    diag["axioms"] = rep.to_json()
    if not rep.ok:
        name = rep.failed[0]
        diag["error"] = f"axiom {name} fails at {rep.results[name].witness}"
        return EXIT_FAILED, diag
    return EXIT_OK, diag


def _load(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise JobError(f"--job: cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise JobError(f"--job: invalid JSON at line {exc.lineno}: {exc.msg}") from None


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="pmv", description="Exact pseudo MV-algebra workbench")
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="run the analyses of a job")
    p_run.add_argument("--job", required=True)
    p_run.add_argument("--out", help="report path (default: output.json of the job, else stdout)")
    p_run.add_argument("--csv", help="directory for CSV tables")
    p_val = sub.add_parser("validate", help="schema check and axiom precheck")
    p_val.add_argument("--job", required=True)
    args = parser.parse_args(argv)
    try:
        job = _load(args.job)
        if args.command == "validate":
            code, diag = validate_job(job)
            sys.stdout.write(dumps(diag))
            if code != EXIT_OK:
                print(diag["error"], file=sys.stderr)
            return code
        code, report, rows = run_job(job)
        out = args.out or job.get("output", {}).get("json")
        text = dumps(report)
        if out:
            Path(out).parent.mkdir(parents=True, exist_ok=True)
            Path(out).write_text(text)
        else:
            sys.stdout.write(text)
        csv_dir = args.csv or job.get("output", {}).get("csv")
        if csv_dir:
            write_csv(Path(csv_dir), rows)
        for f in report["failures"]:
            print(f, file=sys.stderr)
        return code
    except JobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
