"""Command-line front end.

Subcommands: moments (standardized-moment tables), dist (exact pmf dumps),
distance (distance-to-normal rate tables), sample (uniform vectors or
decoded partitions), verify (invariant suite).

Exit codes: 0 ok, 1 usage or infeasible request, 2 verification or diff
failure.  CSV output is comma separated, LF line endings, '.' decimals,
no locale anywhere.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import codec, families, gaussref, polya
from .exactdist import dist_statistic, mixture_identity_check, moments
from .families import ENUMERATION_LIMIT, FamilySpec

DIFF_TOLERANCE = 0.001 + 1e-9


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract says 1
    def error(self, message):
        raise _UsageError(message)


def parse_range(text: str) -> list[int]:
    """'a..b' inclusive, or a single integer."""
    if ".." in text:
        a, _, b = text.partition("..")
        lo, hi = int(a), int(b)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _load_config(path: str) -> dict[str, str]:
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"config line {line!r} is not key=value")
            out[key.strip()] = value.strip()
    return out


def _fill_from_config(args):
    """CLI flags win; config supplies anything left unset."""
    if not getattr(args, "config", None):
        return
    conf = _load_config(args.config)
    for key, value in conf.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise ValueError(f"unknown config key {key!r}")
        if getattr(args, attr) is None:
            setattr(args, attr, value)


def _cap_for(family: str | None, args) -> int:
    if family is None:
        raise ValueError("--family is required")
    cap = args.e if family == "selfconj" else args.d
    if cap is None:
        flag = "--e" if family == "selfconj" else "--d"
        raise ValueError(f"{flag} is required for family {family!r}")
    return int(cap)


def _spec_from(args) -> FamilySpec:
    cap = _cap_for(args.family, args)
    if args.n is None:
        raise ValueError("--n is required")
    ns = parse_range(str(args.n))
    if len(ns) != 1:
        raise ValueError("this subcommand takes a single --n, not a range")
    return FamilySpec(args.family, ns[0], cap)


def _stat_arg(args):
    return args.stat if args.stat is not None else "length"


def _write_out(text: str, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- moments

def _moment_column(job):
    family, cap, n, stat, k_lo, k_hi = job
    report = moments(dist_statistic(FamilySpec(family, n, cap), stat), k_hi)
    return n, [report.standardized[k] for k in range(k_lo, k_hi + 1)]


def cmd_moments(args) -> int:
    family = args.family
    cap = _cap_for(family, args)
    if args.n is None:
        raise ValueError("--n is required")
    ns = parse_range(args.n)
    ks = parse_range(args.k)
    stat = _stat_arg(args)
    jobs = [(family, cap, n, stat, ks[0], ks[-1]) for n in ns]
    if args.jobs and int(args.jobs) > 1:
        with ProcessPoolExecutor(max_workers=int(args.jobs)) as pool:
            columns = dict(pool.map(_moment_column, jobs))
    else:
        columns = dict(map(_moment_column, jobs))
    lines = ["k," + ",".join(str(n) for n in ns)]
    for row, k in enumerate(ks):
        lines.append(f"{k}," + ",".join(columns[n][row] for n in ns))
    table = "\n".join(lines) + "\n"
    _write_out(table, args.out)
    if args.diff:
        return _diff_tables(table, args.diff)
    return 0


def _parse_cells(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([c.strip() for c in line.split(",")])
    return rows


def _diff_tables(produced: str, golden_path: str) -> int:
    with open(golden_path) as fh:
        golden = fh.read()
    ours = _parse_cells(produced)
    theirs = _parse_cells(golden)
    problems = []
    if ours[:1] != theirs[:1]:
        problems.append(f"header mismatch: {ours[0]} vs {theirs[0]}")
    elif len(ours) != len(theirs):
        problems.append(f"row count {len(ours)} vs {len(theirs)}")
    else:
        for ra, rb in zip(ours[1:], theirs[1:]):
            if ra[0] != rb[0] or len(ra) != len(rb):
                problems.append(f"row shape mismatch at k={ra[0]} vs k={rb[0]}")
                continue
            for col, (a, b) in enumerate(zip(ra[1:], rb[1:]), start=1):
                if abs(float(a) - float(b)) > DIFF_TOLERANCE:
                    problems.append(
                        f"k={ra[0]} {ours[0][col]}: {a} differs from golden {b}"
                    )
    for msg in problems:
        print(f"diff: {msg}", file=sys.stderr)
    return 2 if problems else 0


# ------------------------------------------------------------------- dist

def cmd_dist(args) -> int:
    spec = _spec_from(args)
    dist = dist_statistic(spec, _stat_arg(args))
    lines = [f"# total={dist.total}", "value,weight"]
    lines += [f"{v},{w}" for v, w in dist.items()]
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


# --------------------------------------------------------------- distance

def _distance_row(job):
    family, cap, n, stat = job
    rows = gaussref.rate_table(family, stat, cap, [n])
    return n, rows[0]


def cmd_distance(args) -> int:
    family = args.family
    cap = _cap_for(family, args)
    if args.n is None:
        raise ValueError("--n is required")
    ns = parse_range(args.n)
    stat = _stat_arg(args)
    jobs = [(family, cap, n, stat) for n in ns]
    if args.jobs and int(args.jobs) > 1:
        with ProcessPoolExecutor(max_workers=int(args.jobs)) as pool:
            produced = dict(pool.map(_distance_row, jobs))
    else:
        produced = dict(map(_distance_row, jobs))
    rows = [produced[n] for n in ns]
    _write_out(gaussref.rate_table_csv(rows), args.out)
    return 0


# ----------------------------------------------------------------- sample

def cmd_sample(args) -> int:
    spec = _spec_from(args)
    count = int(args.count)
    out_lines = []
    for x in families.sample(spec, seed=int(args.seed), count=count):
        record = {"x": list(x)}
        if args.decode:
            vec = families.as_vector(spec, x)
            p = (
                codec.decode_selfconj(vec)
                if spec.family == "selfconj"
                else codec.decode_core(vec)
            )
            record["partition"] = str(p)
        out_lines.append(json.dumps(record))
    _write_out("\n".join(out_lines) + "\n", args.out)
    return 0


# ----------------------------------------------------------------- verify

def _verify_checks(quick: bool, limit: int):
    n_code, cap_code = (5, 2) if quick else (7, 3)
    yield (
        "bijection round-trips",
        lambda: all(
            _roundtrip(spec, x)
            for fam in families.FAMILIES
            for n in range(2, n_code + 1)
            for cap in range(0, cap_code + 1)
            for spec in [FamilySpec(fam, n, cap)]
            for x in families.enumerate_family(spec, limit=limit)
        ),
    )
    n_orc, cap_orc = (5, 2) if quick else (6, 3)
    yield (
        "oracle equivalence",
        lambda: all(
            families.oracle_distribution(spec, stat, limit=limit)
            == dist_statistic(spec, stat)
            for fam in families.FAMILIES
            for n in range(2, n_orc + 1)
            for cap in range(0, cap_orc + 1)
            for spec in [FamilySpec(fam, n, cap)]
            for stat in (
                ("length", "size", "durfee", "power:2")
                if fam == "selfconj"
                else ("length", "size")
            )
        ),
    )
    yield (
        "pinned partition codec example",
        lambda: _pinned_example(),
    )
    yield (
        "mixture identity",
        lambda: all(
            mixture_identity_check(FamilySpec("strict", n, d), stat)
            for n in range(2, 6 if quick else 7)
            for d in (1, 2)
            for stat in ("length", "size")
        ),
    )
    yield (
        "real roots with certificates",
        lambda: all(
            _roots_ok(n, d)
            for n in range(2, (12 if quick else 24) + 1)
            for d in (1, 2, 3)
        ),
    )
    yield (
        "mean and variance bounds for the match count",
        lambda: all(
            polya.u_mean_bounds(n, d).meets_upper
            for n in range(2, 101 if quick else 201)
            for d in (1, 2, 3)
        ),
    )
    yield (
        "sampler determinism",
        lambda: families.sample(FamilySpec("strict", 6, 2), seed=11, count=5)
        == families.sample(FamilySpec("strict", 6, 2), seed=11, count=5),
    )


def _roundtrip(spec: FamilySpec, x) -> bool:
    vec = families.as_vector(spec, x)
    if spec.family == "selfconj":
        p = codec.decode_selfconj(vec)
        return codec.encode_selfconj(p, spec.n, spec.cap) == vec
    p = codec.decode_core(vec)
    return codec.encode_core(p, spec.n, spec.cap) == vec


def _pinned_example() -> bool:
    from .partitions import beta_set, from_parts, is_s_core

    p = from_parts((6, 3, 2, 1))
    v = codec.encode_core(p, 4, 3)
    return (
        v.x == (3, 0, 1)
        and codec.decode_core(v) == p
        and codec.stat_length(v) == 4
        and codec.stat_size(v) == 12
        and beta_set(p) == (9, 5, 3, 1)
        and all(is_s_core(p, s) for s in (4, 6, 11))
    )


def _roots_ok(n: int, d: int) -> bool:
    roots, cert = polya.pf_real_roots(polya.u_polynomial(n, d))
    return (
        cert.all_negative
        and cert.all_at_most(Fraction(-1, 4 * d))
        and all(polya.residual(polya.u_weights(n, d), r) <= 1e-9 for r in roots)
    )


def cmd_verify(args) -> int:
    limit = int(args.limit) if args.limit else ENUMERATION_LIMIT
    failures = 0
    for name, check in _verify_checks(bool(args.quick), limit):
        try:
            ok = check()
        except Exception as exc:  # surface, keep running the rest
            ok = False
            print(f"FAIL {name} ({exc})")
        else:
            print(("PASS " if ok else "FAIL ") + name)
        failures += not ok
    print(f"{'ok' if not failures else 'FAILED'}: {failures} failing check(s)")
    return 2 if failures else 0


# ------------------------------------------------------------------- main

def build_parser() -> _Parser:
    parser = _Parser(prog="coreperim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_n=True):
        p.add_argument("--family", choices=families.FAMILIES)
        p.add_argument("--stat", help="length | size | durfee | power:k")
        p.add_argument("--d", help="per-class capacity for core/strict")
        p.add_argument("--e", help="per-class capacity for selfconj")
        if with_n:
            p.add_argument("--n", help="modulus, or inclusive range a..b")
        p.add_argument("--config", help="key=value file supplying unset flags")
        p.add_argument("--out", "-o", help="write to file instead of stdout")

    p = sub.add_parser("moments", help="standardized-moment table (rows k, columns n)")
    add_common(p)
    p.add_argument("--k", help="moment orders, range a..b", default="3..8")
    p.add_argument("--jobs", help="worker processes for the column sweep")
    p.add_argument("--diff", help="golden CSV to compare against (exit 2 on drift)")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("dist", help="exact pmf dump as CSV")
    add_common(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("distance", help="distance-to-normal rate table")
    add_common(p)
    p.add_argument("--jobs", help="worker processes")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("sample", help="uniform vectors as JSON lines")
    add_common(p)
    p.add_argument("--seed", required=True, help="PRNG seed (documented stream v1)")
    p.add_argument("--count", default="1")
    p.add_argument("--decode", action="store_true", help="include the partition")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--quick", action="store_true", help="smaller exhaustive scales")
    p.add_argument("--limit", help="enumeration size guard")
    p.add_argument("--config", help="key=value file supplying unset flags")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _fill_from_config(args)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
