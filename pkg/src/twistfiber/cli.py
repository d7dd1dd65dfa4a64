"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 enumeration cap exceeded,
4 verification failure.  All indices are 1-based Bourbaki labels.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import oracle, qcount, strata, twist, weylgroup
from .rootsystem import InadmissibleTypeError, RootSystemSpec, build, dim_g

log = logging.getLogger(__name__)

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_VERIFY = 0, 2, 3, 4


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


class UsageError(Exception):
    pass


def _parse_index_list(text: str | None) -> list[int]:
    if text is None or text.strip() == "":
        return []
    try:
        return sorted({int(t) for t in text.split(",")})
    except ValueError:
        raise UsageError(f"malformed index list {text!r}") from None


def _parse_weight(text: str | None, rank: int) -> list[int]:
    if text is None:
        raise UsageError("--weight is required")
    try:
        lam = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed weight vector {text!r}") from None
    if len(lam) != rank:
        raise UsageError(f"weight {text!r} must have {rank} coordinates")
    return lam


class Context:
    def __init__(self, args):
        self.args = args
        self.spec = RootSystemSpec(args.family, args.rank)
        self.rs = build(self.spec)
        self.sigma = twist.resolve(self.rs, args.twist)
        self.cap = args.cap
        if args.cache_dir:
            _load_or_store_cache(self.rs, Path(args.cache_dir), self.cap)

    def header(self, kind: str) -> dict:
        return {"family": self.spec.family, "rank": self.spec.rank,
                "twist": self.sigma.to_json(), "kind": kind}


def _load_or_store_cache(rs, cache_dir: Path, cap: int) -> None:
    path = cache_dir / f"weyl_{rs.key[0]}{rs.key[1]}.json"
    if path.exists():
        try:
            data = json.loads(path.read_text())
            weylgroup.table_from_words(rs, data["words"])
            return
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring unusable cache %s: %s", path, exc)
    table = weylgroup.group_table(rs, cap)
    cache_dir.mkdir(parents=True, exist_ok=True)
    path.write_text(_dumps({"family": rs.key[0], "rank": rs.key[1],
                                "words": [list(w.word) for w in table.elements]}))


def _emit(fmt: str, header: dict, columns: list[str], rows: list[dict], key: str,
          extra: dict | None = None) -> str:
    if fmt == "json":
        body = dict(header)
        body.update(extra or {})
        body["count"] = len(rows)
        body[key] = rows
        return _dumps(body)

    def cell(v):
        return ",".join(map(str, v)) if isinstance(v, list) else str(v)

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([cell(r[c]) for c in columns])
        return buf.getvalue().rstrip("\n")
    cells = [[cell(r[c]) if c not in ("J", "w_word") else "{" + cell(r[c]) + "}" for c in columns]
             for r in rows]
    widths = [max([len(c)] + [len(row[k]) for row in cells]) for k, c in enumerate(columns)]
    title = (f"# {header['kind']}  {header['family']}{header['rank']}"
             f"  twist={header['twist']}  count={len(rows)}")
    lines = [title, "  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _pieces_out(ctx: Context, kind: str, pieces, extra=None) -> str:
    rows = [p.to_record() for p in pieces]
    return _emit(ctx.args.format, ctx.header(kind), ["J", "w_word", "length", "dim"], rows,
                 "pieces", extra)


def _elements_out(ctx: Context, kind: str, elements, extra=None) -> str:
    rows = [{"w_word": list(w.word), "length": w.length} for w in elements]
    return _emit(ctx.args.format, ctx.header(kind), ["w_word", "length"], rows, "elements", extra)


def cmd_rootsys_info(ctx: Context) -> str:
    rs = ctx.rs
    info = {"label": rs.label, "cartan": rs.cartan.tolist(),
            "num_positive_roots": rs.num_positive_roots, "dim_g": dim_g(rs),
            "weyl_order": weylgroup.group_order(rs), "highest_root": list(rs.highest_root),
            "orbits": [list(o) for o in ctx.sigma.orbits]}
    rows = [{"root": list(r), "height": sum(r)} for r in rs.positive_roots]
    if ctx.args.format == "json":
        return _dumps({**ctx.header("rootsys"), **info, "positive_roots": rows})
    if ctx.args.format == "csv":
        return _emit("csv", ctx.header("rootsys"), ["root", "height"], rows, "positive_roots")
    lines = [f"# rootsys  {rs.label}  twist={ctx.sigma.to_json()}"]
    lines += [f"{k}: {v}" for k, v in info.items()]
    return "\n".join(lines)


def cmd_coset_reps(ctx: Context) -> str:
    J = _parse_index_list(ctx.args.subset)
    reps = weylgroup.min_coset_reps(ctx.rs, J, ctx.cap)
    return _elements_out(ctx, "coset-reps", reps, {"J": J})


def cmd_strata(ctx: Context) -> str:
    which = ctx.args.action
    rs, sigma, cap = ctx.rs, ctx.sigma, ctx.cap
    if which == "pieces":
        return _pieces_out(ctx, "pieces", strata.enumerate_pieces(rs, sigma, cap))
    if which == "boundary":
        return _pieces_out(ctx, "boundary", strata.steinberg_boundary(rs, sigma, cap))
    if which == "components":
        return _pieces_out(ctx, "components", strata.irreducible_components(rs, sigma, cap))
    lam = _parse_weight(ctx.args.weight, rs.rank)
    return _pieces_out(ctx, "nilcone", strata.nilcone(rs, sigma, lam, cap), {"weight": lam})


def cmd_count(ctx: Context) -> str:
    rs, sigma, cap = ctx.rs, ctx.sigma, ctx.cap
    if ctx.args.action == "poincare":
        K = _parse_index_list(ctx.args.subset) if ctx.args.subset is not None else None
        poly = qcount.poincare(rs, K, cap)
        extra = {"K": sorted(rs.index_set) if K is None else K}
    else:
        poly = qcount.boundary_count(rs, sigma, ctx.args.method, cap)
        extra = {"split_hypothesis": True, "method": ctx.args.method}
    if ctx.args.format == "json":
        return _dumps({**ctx.header(f"count-{ctx.args.action}"), **extra,
                           "polynomial": poly.to_json(), "pretty": str(poly)})
    if ctx.args.format == "csv":
        return "exponent,coeff\n" + "\n".join(f"{k},{c}" for k, c in enumerate(poly.coeffs))
    return str(poly)


def cmd_coxeter(ctx: Context) -> str:
    elems = twist.twisted_coxeter_elements(ctx.rs, ctx.sigma, ctx.cap)
    return _elements_out(ctx, "coxeter", elems)


def cmd_verify(args) -> tuple[str, int]:
    checks = None if args.check == "all" else [args.check]
    reports = oracle.run_checks(args.max_rank, checks, seed=args.seed, trials=args.trials,
                                cap=args.cap)
    failed = [r for r in reports if not r.ok]
    if args.format == "json":
        out = _dumps({"kind": "verify", "max_rank": args.max_rank,
                          "reports": [r.to_json() for r in reports],
                          "failed": len(failed)})
    else:
        lines = [f"# verify  max_rank={args.max_rank}  seed={args.seed}"]
        for r in reports:
            status = "ok" if r.ok else f"FAIL ({len(r.violations)} violations)"
            lines.append(f"{r.check:<20} {r.system:<3} twist={r.twist}  cases={r.cases}  {status}")
        lines.append(f"{len(reports)} reports, {len(failed)} failed")
        out = "\n".join(lines)
    return out, EXIT_VERIFY if failed else EXIT_OK


def _common(p: argparse.ArgumentParser, *, system: bool = True) -> None:
    if system:
        p.add_argument("--family", required=True, choices=list("ABCDEFG"))
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--twist", default="identity",
                       help="identity | flip | triality | triality2 | one-line permutation like 2,1")
        p.add_argument("--cache-dir", default=None)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--cap", type=int, default=weylgroup.DEFAULT_CAP)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistfiber", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    def leaf(group, actions, extra=None):
        gp = sub.add_parser(group)
        gsub = gp.add_subparsers(dest="action", required=True)
        for a in actions:
            p = gsub.add_parser(a)
            _common(p)
            if extra:
                extra(p, a)

    leaf("rootsys", ["info"])
    leaf("weyl", ["coset-reps"], lambda p, a: p.add_argument("--subset", default=""))
    leaf("strata", ["pieces", "boundary", "components", "nilcone"],
         lambda p, a: p.add_argument("--weight", default=None) if a == "nilcone" else None)

    def count_extra(p, a):
        if a == "poincare":
            p.add_argument("--subset", default=None)
        else:
            p.add_argument("--method", choices=["enumerate", "inclusion_exclusion"],
                           default="enumerate")

    leaf("count", ["boundary", "poincare"], count_extra)
    leaf("coxeter", ["list"])

    vp = sub.add_parser("verify")
    vp.add_argument("check", choices=["all"] + list(oracle.CHECKS))
    vp.add_argument("--max-rank", type=int, default=3)
    vp.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)
    vp.add_argument("--trials", type=int, default=oracle.DEFAULT_TRIALS)
    _common(vp, system=False)
    return parser


_DISPATCH = {"rootsys": cmd_rootsys_info, "weyl": cmd_coset_reps, "strata": cmd_strata,
             "count": cmd_count, "coxeter": cmd_coxeter}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    try:
        if args.group == "verify":
            text, code = cmd_verify(args)
        else:
            text, code = _DISPATCH[args.group](Context(args)), EXIT_OK
    except weylgroup.WeylCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, InadmissibleTypeError, twist.InvalidTwistError, strata.WeightError,
            IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(text, file=out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
