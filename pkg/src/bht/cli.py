"""Command line interface: one subcommand per module surface.

Exit codes follow the claim contract: 0 when the requested computation
succeeds and every asserted claim holds, 1 when some claim is violated,
2 for usage errors.  Machine-readable output (one JSON object per line,
each carrying ``schema: 1``) sits behind ``--json``; the default output
is a small human-readable table.

Configuration precedence is flags, then environment variables
(BHT_CACHE_DIR, BHT_SEARCH_CAP, BHT_JOBS), then a ``bht.conf`` file of
``key=value`` lines in the working directory.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import families, forbidden, partition, polynomials, search
from .graphs import (
    Graph,
    canonical_form,
    format_edge_list,
    from_graph6,
    parse_edge_list,
    to_graph6,
)
from .spectral import spectral_radius

CONFIG_FILE = "bht.conf"


def _config_file() -> dict[str, str]:
    path = Path(CONFIG_FILE)
    if not path.is_file():
        return {}
    out = {}
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if "=" in line:
            key, val = line.split("=", 1)
            out[key.strip()] = val.strip()
    return out


def _setting(flag_value, env_key: str, file_key: str, default):
    if flag_value is not None:
        return flag_value
    if env_key in os.environ:
        return os.environ[env_key]
    cfg = _config_file()
    if file_key in cfg:
        return cfg[file_key]
    return default


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps({"schema": 1, **payload}))
    else:
        for line in lines:
            print(line)


def _read_graph(path: str, fmt: str) -> Graph:
    text = Path(path).read_text()
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "graph6":
        return from_graph6(text.strip().splitlines()[0])
    stripped = [l for l in text.splitlines() if l.split("#", 1)[0].strip()]
    if stripped and len(stripped[0].split("#", 1)[0].split()) == 2:
        try:
            return parse_edge_list(text)
        except ValueError:
            pass
    return from_graph6(stripped[0])


def _parse_params(text: str) -> dict[str, int]:
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise SystemExit(_usage_error(f"bad parameter {item!r}; expected k=v"))
        key, val = item.split("=", 1)
        out[key.strip()] = int(val)
    return out


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _parse_blocks(text: str, n: int) -> list[list[int]]:
    blocks = []
    for chunk in text.split(";"):
        block: list[int] = []
        for token in chunk.split(","):
            token = token.strip()
            if not token:
                continue
            if "-" in token[1:]:
                lo, hi = token.split("-", 1)
                block.extend(range(int(lo), int(hi) + 1))
            else:
                block.append(int(token))
        blocks.append(block)
    listed = sorted(v for blk in blocks for v in blk)
    if listed != list(range(n)):
        raise ValueError(f"blocks must cover 0..{n - 1} exactly once")
    return blocks


# -- subcommands -------------------------------------------------------------


def cmd_family(args) -> int:
    params = _parse_params(args.params)
    order = {
        "complete": ("n",), "complete_bipartite": ("a", "b"), "star": ("n",),
        "path": ("n",), "cycle": ("n",), "complete_split": ("n", "k"),
        "book": ("m",), "split_pendant": ("n", "k", "t"),
        "split_pendant_size": ("m", "t"), "star_matching": ("n", "k"),
        "theta": ("p", "q", "r"), "r_chain": ("k",), "double_star": ("a", "b"),
        "kminus": ("s", "t"), "kplus": ("s", "t"),
        "k1_join_star_edge": ("m", "r"), "k1_join_candidate": ("m",),
        "hts0_r_chain": ("t", "k"), "star_diamond_k4": ("m",),
        "generalized_theta": None,
    }
    if args.name not in order:
        return _usage_error(f"unknown family {args.name!r}; known: {sorted(order)}")
    if order[args.name] is None:
        tup = tuple(params[k] for k in sorted(params))
    else:
        missing = [k for k in order[args.name] if k not in params]
        if missing:
            return _usage_error(f"{args.name} needs parameters {order[args.name]}")
        tup = tuple(params[k] for k in order[args.name])
    try:
        g = families.build(families.FamilySpec(args.name, tup))
    except ValueError as exc:
        return _usage_error(str(exc))
    if args.format == "graph6":
        out = to_graph6(g) + "\n"
    else:
        out = format_edge_list(g)
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_lambda(args) -> int:
    g = _read_graph(args.input, args.format)
    res = spectral_radius(g)
    payload = {"lambda": res.lam, "residual": res.residual, "n": g.n, "m": g.m}
    lines = [f"lambda    {res.lam:.12f}", f"residual  {res.residual:.3e}"]
    if args.perron:
        payload["perron"] = list(res.perron)
        lines.append("perron    " + " ".join(f"{x:.8f}" for x in res.perron))
    _emit(payload, args.json, lines)
    return 0


def cmd_free(args) -> int:
    g = _read_graph(args.input, args.format)
    names = [p.strip() for p in args.patterns.split(",") if p.strip()]
    results = {}
    lines = []
    for name in names:
        if name not in forbidden.NAMED_PATTERNS:
            return _usage_error(f"unknown pattern {name!r}; known: {forbidden.NAMED_PATTERNS}")
        witness = forbidden.contains_subgraph(g, name)
        results[name] = {"free": witness is None, "witness": witness}
        lines.append(f"{name:10s} {'free' if witness is None else f'contained, witness {witness}'}")
    _emit({"free": results}, args.json, lines)
    return 0


def cmd_quotient(args) -> int:
    g = _read_graph(args.input, args.format)
    try:
        blocks = _parse_blocks(args.blocks, g.n)
        q = partition.quotient(g, blocks)
    except ValueError as exc:
        return _usage_error(str(exc))
    cp = partition.charpoly(q)
    lam_a, lam_q, equal = partition.quotient_lambda_check(g, blocks)
    payload = {
        "matrix": [[str(x) for x in row] for row in q],
        "charpoly": [str(c) for c in cp.coeffs],
        "charpoly_str": str(cp),
        "lambda_A": lam_a,
        "lambda_Q": lam_q,
        "equal": equal,
    }
    lines = ["quotient matrix:"]
    lines += ["  " + "  ".join(f"{str(x):>6s}" for x in row) for row in q]
    lines += [f"charpoly  {cp}", f"lambda_A  {lam_a:.12f}", f"lambda_Q  {lam_q:.12f}",
              f"equal     {equal}"]
    _emit(payload, args.json, lines)
    return 0 if equal else 1


def cmd_poly(args) -> int:
    params = {}
    for key in ("t", "r", "p"):
        val = getattr(args, key)
        if val is not None:
            params[key] = val
    try:
        poly = polynomials.instantiate(args.id, args.m, **params)
    except (ValueError, TypeError) as exc:
        return _usage_error(str(exc))
    payload: dict = {"id": args.id, "m": args.m, **params,
                     "coeffs": [str(c) for c in poly.coeffs], "poly": str(poly)}
    lines = [f"{args.id}(m={args.m}{''.join(f', {k}={v}' for k, v in params.items())}) = {poly}"]
    if args.root or not args.coeffs:
        value, bracket = polynomials.largest_real_root(poly)
        payload["largest_root"] = value
        payload["bracket"] = [str(bracket.lo), str(bracket.hi)]
        lines.append(f"largest root {value:.12f} in ({bracket.lo}, {bracket.hi}]")
    _emit(payload, args.json, lines)
    return 0


def cmd_crossover(args) -> int:
    lo, hi = _parse_range(args.range)
    if args.pair == "even":
        left = polynomials.cone_star_matching_even
        right = lambda m: polynomials.split_pendant_poly(m, 1)  # noqa: E731
        parity = "even"
    elif args.pair == "odd":
        left = polynomials.cone_star_matching_odd
        right = lambda m: polynomials.split_pendant_poly(m, 2)  # noqa: E731
        parity = "odd"
    else:
        return _usage_error("--pair must be even or odd")
    rep = polynomials.crossover_scan(left, right, parity, (lo, hi))
    payload = {
        "pair": args.pair,
        "runs": [list(r) for r in rep.runs],
        "flips": [list(f) for f in rep.flips],
    }
    lines = [f"run m={a}..{b}: cone root {'>' if o == 'gt' else '<'} split root"
             for a, b, o in rep.runs]
    lines += [f"flip between m={a} and m={b}" for a, b in rep.flips]
    _emit(payload, args.json, lines)
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def cmd_search(args) -> int:
    cap = int(_setting(args.cap, "BHT_SEARCH_CAP", "cap", search.DEFAULT_CAP))
    jobs = int(_setting(args.jobs, "BHT_JOBS", "jobs", 1))
    cache_dir = _setting(args.cache_dir, "BHT_CACHE_DIR", "cache_dir", None)
    patterns = [p.strip() for p in args.forbid.split(",") if p.strip()]
    for p in patterns:
        if p not in forbidden.NAMED_PATTERNS:
            return _usage_error(f"unknown pattern {p!r}")
    exclusions: list[bytes] = []
    if args.exclude_book:
        if args.m % 2 == 0:
            return _usage_error("the book graph exists only at odd sizes")
        exclusions.append(canonical_form(families.book(args.m)))
    try:
        rep = search.extremal_search(
            args.m, patterns, exclusions, cap=cap, force=args.force,
            jobs=jobs, connected_only=not args.widen, cache_dir=cache_dir,
        )
    except ValueError as exc:
        return _usage_error(str(exc))
    payload = rep.to_json()
    lines = [
        f"m={rep.m} patterns={','.join(rep.patterns)} best_lambda={rep.best_lambda:.12f}",
        f"counts: {rep.counts}  wall_time={rep.wall_time:.2f}s",
    ]
    lines += [f"maximizer: {to_graph6(g)}  (n={g.n})" for g, _ in rep.maximizers]
    _emit(payload, args.json, lines)
    return 0


def cmd_verify(args) -> int:
    thms = search.THEOREM_IDS if args.thm == "all" else (args.thm,)
    for t in thms:
        if t not in search.THEOREM_IDS:
            return _usage_error(f"unknown theorem id {t!r}; known: {search.THEOREM_IDS}")
    if args.m is None and args.range is None:
        return _usage_error("pass --m or --range")
    ms = [args.m] if args.m is not None else list(range(*_add1(_parse_range(args.range))))
    failed = False
    for thm in thms:
        for m in ms:
            rep = search.verify_theorem(thm, m, jobs=args.jobs or 1)
            if rep.status == "fail":
                failed = True
            if args.json:
                print(json.dumps(rep.to_json()))
            else:
                detail = "; ".join(
                    f"{name}{'' if ok else ' FAILED'}" for name, ok, _ in rep.checks
                )
                print(f"{thm} m={m}: {rep.status}  [{detail}]")
        if thm == "c6_runner_up" and len(ms) > 1:
            for parity in ("even", "odd"):
                pair_lo = max(min(ms), 22)
                rep2 = polynomials.crossover_scan(
                    polynomials.cone_star_matching_even if parity == "even"
                    else polynomials.cone_star_matching_odd,
                    (lambda m: polynomials.split_pendant_poly(m, 1)) if parity == "even"
                    else (lambda m: polynomials.split_pendant_poly(m, 2)),
                    parity, (pair_lo, max(ms)),
                )
                line = {"schema": 1, "crossover": parity, "flips": [list(f) for f in rep2.flips]}
                print(json.dumps(line) if args.json else
                      f"crossover ({parity}): flips at {rep2.flips}")
    return 1 if failed else 0


def _add1(rng: tuple[int, int]) -> tuple[int, int]:
    return rng[0], rng[1] + 1


def cmd_certify(args) -> int:
    if args.m < 22:
        return _usage_error("certificates start at m = 22")
    certs = polynomials.inequality_certificates(args.m)
    ok = all(c.holds for c in certs)
    if args.json:
        for c in certs:
            print(json.dumps({"schema": 1, "m": args.m, "name": c.name,
                              "statement": c.statement, "holds": c.holds,
                              "detail": c.detail}))
    else:
        width = max(len(c.name) for c in certs)
        for c in certs:
            mark = "ok " if c.holds else "VIOLATED"
            print(f"{c.name:<{width}}  {mark}  {c.statement}"
                  + (f"  [{c.detail}]" if c.detail else ""))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bht", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="emit a named family graph")
    p.add_argument("--name", required=True)
    p.add_argument("--params", default="", help="comma list k=v")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("lambda", help="spectral radius of a graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")
    p.add_argument("--perron", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("free", help="forbidden-subgraph tests with witnesses")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")
    p.add_argument("--patterns", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_free)

    p = sub.add_parser("quotient", help="exact quotient matrix of a partition")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")
    p.add_argument("--blocks", required=True, help='e.g. "0;1;2,3;4-9"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("poly", help="named polynomial instances and roots")
    p.add_argument("--id", required=True, choices=polynomials.POLY_IDS)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--root", action="store_true")
    p.add_argument("--coeffs", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("crossover", help="largest-root ordering scans over m")
    p.add_argument("--pair", required=True, choices=("even", "odd"))
    p.add_argument("--range", required=True, help="lo:hi")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_crossover)

    p = sub.add_parser("search", help="exhaustive extremal search at small m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--forbid", required=True, help="comma list of pattern names")
    p.add_argument("--exclude-book", action="store_true")
    p.add_argument("--cap", type=int)
    p.add_argument("--jobs", type=int)
    p.add_argument("--force", action="store_true")
    p.add_argument("--widen", action="store_true",
                   help="include disconnected isolate-free graphs (tiny m)")
    p.add_argument("--cache-dir")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check the maximality claims")
    p.add_argument("--thm", required=True,
                   help=f"one of {search.THEOREM_IDS} or 'all'")
    p.add_argument("--m", type=int)
    p.add_argument("--range", help="lo:hi")
    p.add_argument("--jobs", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="exact-sign inequality certificates")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        return _usage_error(f"cannot read {exc.filename}")
    except ValueError as exc:
        return _usage_error(str(exc))
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
