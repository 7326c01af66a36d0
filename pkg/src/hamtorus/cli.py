"""Command-line front end: dimension grids, Betti tables, coranks, checks.

Examples::

    hamtorus dims   --torus 2 --weights 2..6
    hamtorus betti  --torus 4 --weights 2..4 --format json
    hamtorus corank --torus 6 --weights 0..10 --method all
    hamtorus corank --euclidean 2 --basis polynomial --weights -1..6
    hamtorus verify t2-tables

Boundary matrices are cached in the triplet text format under
``$HAMTORUS_CACHE`` (default ``./.hamtorus-cache``); runs with the same
options produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .basis import BasisKind
from .bracket import PoissonStructure
from .cache import MatrixCache, default_cache_dir
from .chains import chain_dim
from .homology import (
    betti_table,
    corank_closed,
    corank_computed,
    corank_poisson_product,
    corank_recursive,
)
from .verify import SUITES, run_suite

DEFAULT_BUDGET = 40000
WORKERS = 4


@dataclass(frozen=True)
class Model:
    space: str  # "torus" or "euclidean"
    n: int
    kind: BasisKind
    pi: PoissonStructure

    @property
    def label(self) -> str:
        if self.space == "euclidean":
            return f"R^{self.n}"
        if self.pi.rank2m != self.n:
            return f"T^{self.n} (pairing {self.pi.rank2m})"
        return f"T^{self.n}"


@dataclass(frozen=True)
class JobSpec:
    command: str
    model: Model
    w_lo: int
    w_hi: int
    max_degree: int | None
    rank_policy: str
    fmt: str
    cache_dir: Path | None
    seed: int
    budget: int | None
    method: str = "compute"


def _parse_weights(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
    else:
        lo = hi = text
    return int(lo), int(hi)  # hi < lo is an empty range, not an error


def _build_model(args, parser) -> Model:
    given = [x for x in (args.torus, args.euclidean, args.degenerate) if x is not None]
    if len(given) != 1:
        parser.error("specify exactly one of --torus, --euclidean, --degenerate")
    try:
        if args.torus is not None:
            n = int(args.torus)
            kind = BasisKind(args.basis) if args.basis else BasisKind.PRODUCT
            if not kind.on_torus:
                parser.error("polynomial basis lives on euclidean space")
            return Model("torus", n, kind, PoissonStructure.symplectic(n))
        if args.degenerate is not None:
            n_text, m_text = args.degenerate.split(":", 1)
            n, m = int(n_text), int(m_text)
            kind = BasisKind(args.basis) if args.basis else BasisKind.PRODUCT
            if not kind.on_torus:
                parser.error("polynomial basis lives on euclidean space")
            return Model("torus", n, kind, PoissonStructure.degenerate(n, m))
        n = int(args.euclidean)
        kind = BasisKind(args.basis) if args.basis else BasisKind.POLYNOMIAL
        if kind.on_torus:
            parser.error("torus bases need --torus or --degenerate")
        return Model("euclidean", n, kind, PoissonStructure.symplectic(n))
    except ValueError as exc:
        parser.error(str(exc))


def _build_spec(args, parser) -> JobSpec:
    model = _build_model(args, parser)
    try:
        w_lo, w_hi = _parse_weights(args.weights)
    except ValueError as exc:
        parser.error(str(exc))
    if model.kind.on_torus and w_lo < 0 and w_lo <= w_hi:
        parser.error("torus weights are non-negative")
    if args.max_degree is not None and args.max_degree < 1:
        parser.error("--max-degree must be at least 1")
    cache_dir = None if args.no_cache else Path(args.cache or default_cache_dir())
    return JobSpec(
        command=args.command,
        model=model,
        w_lo=w_lo,
        w_hi=w_hi,
        max_degree=args.max_degree,
        rank_policy=args.rank,
        fmt=args.format,
        cache_dir=cache_dir,
        seed=args.seed,
        budget=None if args.no_budget else DEFAULT_BUDGET,
        method=getattr(args, "method", "compute"),
    )


def _degree_cap(spec: JobSpec, w: int) -> int:
    if spec.max_degree is not None:
        return spec.max_degree
    if spec.model.kind.on_torus:
        return max(w, 1)
    n = spec.model.n
    return max(w + n * (n + 5) // 2, 1)


def _model_json(model: Model) -> dict:
    return {
        "space": model.space,
        "n": model.n,
        "basis": model.kind.value,
        "symplectic_rank": model.pi.rank2m,
    }


def _none_to_skipped(value):
    return "skipped" if value is None else value


def _emit(cells, coranks, spec: JobSpec) -> str:
    payload = {"model": _model_json(spec.model), "cells": cells, "coranks": coranks}
    return json.dumps(payload, indent=2) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _grid_text(header, rows) -> str:
    table = [header] + [[str(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(row, widths)) for row in table]
    return "\n".join(lines) + "\n"


def cmd_dims(spec: JobSpec) -> str:
    weights = list(range(spec.w_lo, spec.w_hi + 1))
    model = spec.model
    caps = {w: _degree_cap(spec, w) for w in weights}
    max_m = max(caps.values(), default=1)

    def row(w):
        return [chain_dim(w, m, model.n, model.kind, model.pi) for m in range(1, max_m + 1)]

    with ThreadPoolExecutor(max_workers=WORKERS) as pool:
        grid = dict(zip(weights, pool.map(row, weights)))
    if spec.fmt == "json":
        cells = [
            {"w": w, "m": m, "dim": grid[w][m - 1]}
            for w in weights
            for m in range(1, max_m + 1)
        ]
        return _emit(cells, [], spec)
    if spec.fmt == "csv":
        rows = [(w, m, grid[w][m - 1]) for w in weights for m in range(1, max_m + 1)]
        return _csv_text(["w", "m", "dim"], rows)
    header = ["w\\m"] + [str(m) for m in range(1, max_m + 1)]
    return _grid_text(header, [[w] + grid[w] for w in weights])


def cmd_betti(spec: JobSpec) -> str:
    weights = list(range(spec.w_lo, spec.w_hi + 1))
    model = spec.model
    cache_store = MatrixCache(spec.cache_dir) if spec.cache_dir else None

    def work(w):
        return betti_table(
            w,
            model.n,
            model.kind,
            model.pi,
            _degree_cap(spec, w),
            policy=spec.rank_policy,
            seed=spec.seed,
            budget=spec.budget,
            cache_store=cache_store,
        )

    with ThreadPoolExecutor(max_workers=WORKERS) as pool:
        tables = dict(zip(weights, pool.map(work, weights)))
    if spec.fmt == "json":
        cells = [
            {
                "w": w,
                "m": m,
                "dim": tables[w].cells[m].dim,
                "ker": _none_to_skipped(tables[w].cells[m].ker),
                "betti": _none_to_skipped(tables[w].cells[m].betti),
            }
            for w in weights
            for m in tables[w].degrees
        ]
        return _emit(cells, [], spec)
    if spec.fmt == "csv":
        rows = [
            (w, m, c.dim, _none_to_skipped(c.ker), _none_to_skipped(c.betti))
            for w in weights
            for m, c in sorted(tables[w].cells.items())
        ]
        return _csv_text(["w", "m", "dim", "ker", "betti"], rows)
    blocks = []
    for w in weights:
        bt = tables[w]
        header = [f"wt={w}"] + [str(m) for m in bt.degrees]
        rows = [
            ["dim"] + [c.dim for c in map(bt.cells.get, bt.degrees)],
            ["ker"] + [_none_to_skipped(c.ker) for c in map(bt.cells.get, bt.degrees)],
            ["betti"] + [_none_to_skipped(c.betti) for c in map(bt.cells.get, bt.degrees)],
        ]
        blocks.append(_grid_text(header, rows))
    return "\n".join(blocks)


def _corank_one(spec: JobSpec, w: int, method: str, cache_store):
    model = spec.model
    if w == 0 and model.kind.on_torus:
        return 1  # the central class of constants
    if method == "compute":
        return corank_computed(
            w,
            model.n,
            model.kind,
            model.pi,
            policy=spec.rank_policy,
            seed=spec.seed,
            cache_store=cache_store,
        )
    symplectic_torus = model.space == "torus" and model.pi.rank2m == model.n
    if method == "recursive":
        if symplectic_torus:
            return corank_recursive(w, model.n)
        if model.space == "torus":
            return corank_poisson_product(w, model.n, model.pi.rank2m // 2)
        return None
    if method == "closed":
        if symplectic_torus:
            return corank_closed(w, model.n)
        return None
    raise ValueError(f"unknown corank method {method!r}")


def cmd_corank(spec: JobSpec) -> str:
    weights = list(range(spec.w_lo, spec.w_hi + 1))
    methods = ["compute", "recursive", "closed"] if spec.method == "all" else [spec.method]
    cache_store = MatrixCache(spec.cache_dir) if spec.cache_dir else None
    values = {}
    with ThreadPoolExecutor(max_workers=WORKERS) as pool:
        jobs = {
            (w, meth): pool.submit(_corank_one, spec, w, meth, cache_store)
            for w in weights
            for meth in methods
        }
        for key, fut in jobs.items():
            values[key] = fut.result()
    if spec.fmt == "json":
        coranks = [
            {"w": w, "method": meth, "value": "n/a" if values[(w, meth)] is None else values[(w, meth)]}
            for w in weights
            for meth in methods
        ]
        return _emit([], coranks, spec)
    if spec.fmt == "csv":
        rows = [
            (w, meth, "n/a" if values[(w, meth)] is None else values[(w, meth)])
            for w in weights
            for meth in methods
        ]
        return _csv_text(["w", "method", "value"], rows)
    header = ["w"] + methods + (["agree"] if len(methods) > 1 else [])
    rows = []
    for w in weights:
        row = [w] + ["n/a" if values[(w, m)] is None else values[(w, m)] for m in methods]
        if len(methods) > 1:
            present = {values[(w, m)] for m in methods if values[(w, m)] is not None}
            row.append("yes" if len(present) == 1 else "NO")
        rows.append(row)
    return _grid_text(header, rows)


def cmd_verify(args, parser) -> int:
    cache_store = None
    if not args.no_cache:
        cache_store = MatrixCache(Path(args.cache or default_cache_dir()))
    checks = run_suite(args.suite, policy=args.rank, seed=args.seed, cache_store=cache_store)
    failures = 0
    for check in checks:
        status = "PASS" if check.ok else "FAIL"
        failures += not check.ok
        print(f"[{status}] {check.name}: expected {check.expected!r}, got {check.actual!r}")
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 1 if failures else 0


def _add_common(sub):
    sub.add_argument("--torus", metavar="2N", help="symplectic torus dimension")
    sub.add_argument("--euclidean", metavar="N", help="euclidean (polynomial) dimension")
    sub.add_argument("--degenerate", metavar="N:M", help="n-torus pairing only 2m coordinates")
    sub.add_argument("--basis", choices=[k.value for k in BasisKind])
    sub.add_argument("--weights", default="2..6", help="weight range A..B or a single weight")
    sub.add_argument("--max-degree", type=int, default=None)
    sub.add_argument("--rank", choices=["fast", "exact"], default="fast")
    sub.add_argument("--format", choices=["table", "csv", "json"], default="table")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--no-budget", action="store_true",
                     help="rank even the largest matrices")
    sub.add_argument("--cache", default=None, help="cache directory override")
    sub.add_argument("--no-cache", action="store_true", help="bypass the matrix cache")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamtorus",
        description="exact chain-complex dimensions, Betti numbers and coranks "
        "for Hamiltonian function algebras on tori",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name, doc in (
        ("dims", "chain-space dimension grid"),
        ("betti", "dim/ker/Betti grid per weight"),
        ("corank", "degree-1 corank per weight"),
    ):
        sub = subs.add_parser(name, help=doc)
        _add_common(sub)
        if name == "corank":
            sub.add_argument(
                "--method",
                choices=["compute", "recursive", "closed", "all"],
                default="compute",
            )
    ver = subs.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=list(SUITES))
    ver.add_argument("--rank", choices=["fast", "exact"], default="fast")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--cache", default=None)
    ver.add_argument("--no-cache", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args, parser)
    spec = _build_spec(args, parser)
    handler = {"dims": cmd_dims, "betti": cmd_betti, "corank": cmd_corank}[spec.command]
    try:
        text = handler(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
