"""Command-line frontend: transforms, triangles, word oracles, verification.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 enumeration
budget exceeded.  All output is UTF-8 with LF line endings and is
deterministic for a fixed invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from typing import Callable, Sequence

from .bell import bell_invert_identity_check
from .errors import ComptriError, EnumerationBudgetError
from .identities import (
    check_binomial_inversion,
    check_chebyshev,
    check_closed_forms,
    check_power_expansion,
    check_word_binomial,
)
from .pascal import from_rows, identity, mat_mul, mat_pow, pascal_lower, shifted_pascal_inverse
from .sequences import Preset, iterate_invert, make_seed
from .triangle import (
    DEFAULT_ORDER_CAP,
    row_sum,
    triangle_bell,
    triangle_convolution,
    triangle_pascal,
    triangle_recurrence,
)
from .words import DEFAULT_BUDGET, oracle_row

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_MAPPED_PRESETS = (
    Preset.ONES,
    Preset.FIB,
    Preset.ODD,
    Preset.NATURAL,
    Preset.GE2,
    Preset.TWO_THREE,
)

_BUILDERS = {
    "recurrence": triangle_recurrence,
    "conv": triangle_convolution,
    "bell": triangle_bell,
    "pascal": triangle_pascal,
}


def _parse_seed_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ComptriError(f"could not parse {text!r} as comma-separated integers")


def _resolve_seed(args: argparse.Namespace, parser: argparse.ArgumentParser):
    """Returns (seed, seed_repr, N); flag misuse becomes a usage error."""
    preset = Preset(args.preset) if args.preset else None
    if args.seed is not None:
        if preset not in (None, Preset.CUSTOM):
            parser.error("--seed only combines with --preset custom")
        try:
            values = _parse_seed_list(args.seed)
            n = args.N if args.N is not None else len(values)
            seed = make_seed(Preset.CUSTOM, n, values)
        except ComptriError as exc:
            parser.error(str(exc))
        return seed, values[:n], n
    if preset is None:
        parser.error("one of --preset or --seed is required")
    if preset is Preset.CUSTOM:
        parser.error("the custom preset needs --seed")
    if args.N is None:
        parser.error("--N is required with --preset")
    try:
        seed = make_seed(preset, args.N)
    except ComptriError as exc:
        parser.error(str(exc))
    return seed, preset.value, args.N


def _emit_sequence(seed_repr, m: int, n: int, values: Sequence[int], fmt: str) -> str:
    if fmt == "csv":
        return ",".join(str(v) for v in values) + "\n"
    if fmt == "json":
        doc = {"seed": seed_repr, "m": m, "N": n, "values": [str(v) for v in values]}
        return json.dumps(doc) + "\n"
    return "".join(f"{i} {v}\n" for i, v in enumerate(values, start=1))


def _emit_triangle(seed_repr, m: int, n: int, rows, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "seed": seed_repr,
            "m": m,
            "N": n,
            "rows": [[str(v) for v in row] for row in rows],
        }
        return json.dumps(doc) + "\n"
    if fmt == "csv":
        lines = ["n,k,value"]
        for i, row in enumerate(rows, start=1):
            for j, v in enumerate(row, start=1):
                lines.append(f"{i},{j},{v}")
        return "\n".join(lines) + "\n"
    out = []
    idx = 1
    for row in rows:
        for v in row:
            out.append(f"{idx} {v}\n")
            idx += 1
    return "".join(out)


def _cmd_transform(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    seed, seed_repr, n = _resolve_seed(args, parser)
    if args.m < 0:
        parser.error("--m must be >= 0")
    values = iterate_invert(seed, args.m).values
    sys.stdout.write(_emit_sequence(seed_repr, args.m, n, values, args.format))
    return EXIT_OK


def _cmd_triangle(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    seed, seed_repr, n = _resolve_seed(args, parser)
    if args.m < 1:
        parser.error("--m must be >= 1 for triangles")
    if n > DEFAULT_ORDER_CAP:
        parser.error(f"--N is capped at {DEFAULT_ORDER_CAP}")
    if args.algo == "all":
        triangles = {name: build(seed, args.m, n) for name, build in _BUILDERS.items()}
        mismatches = []
        for i in range(n):
            for j in range(i + 1):
                vals = {name: tri.rows[i][j] for name, tri in triangles.items()}
                if len(set(vals.values())) > 1:
                    mismatches.append((i + 1, j + 1, vals))
        if mismatches:
            for ni, ki, vals in mismatches[:20]:
                detail = " ".join(f"{name}={v}" for name, v in vals.items())
                sys.stderr.write(f"disagreement at n={ni} k={ki}: {detail}\n")
            sys.stderr.write(f"{len(mismatches)} disagreeing entries\n")
            return EXIT_FAIL
        rows = triangles["recurrence"].rows
    else:
        rows = _BUILDERS[args.algo](seed, args.m, n).rows
    sys.stdout.write(_emit_triangle(seed_repr, args.m, n, rows, args.format))
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    preset = Preset(args.preset) if args.preset else None
    if preset is None or preset is Preset.CUSTOM or args.seed is not None:
        parser.error("the oracle needs one of the mapped presets")
    if args.N is None:
        parser.error("--N is required")
    if args.m < 1:
        parser.error("--m must be >= 1")
    if args.N > DEFAULT_ORDER_CAP:
        parser.error(f"--N is capped at {DEFAULT_ORDER_CAP}")
    seed = make_seed(preset, args.N)
    tri = triangle_recurrence(seed, args.m, args.N)
    lines = ["n,k,engine,oracle,match"]
    all_match = True
    start = 4 if preset is Preset.GE2 else 1
    for n in range(start, args.N + 1):
        try:
            counts = oracle_row(preset, args.m, n, args.budget)
        except EnumerationBudgetError as exc:
            sys.stdout.write("\n".join(lines) + "\n")
            sys.stderr.write(f"budget exceeded at n={n}, k=1..{n}: {exc}\n")
            return EXIT_BUDGET
        for k in range(1, n + 1):
            engine = tri.value(n, k)
            oracle = counts[k - 1]
            match = "ok" if engine == oracle else "MISMATCH"
            if engine != oracle:
                all_match = False
            lines.append(f"{n},{k},{engine},{oracle},{match}")
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if all_match else EXIT_FAIL


def _suite_row_sums(cap: int | None, budget: int) -> tuple[int, list[str]]:
    n_max = cap if cap is not None else 30
    checks = 0
    fails: list[str] = []
    for preset in _MAPPED_PRESETS:
        f0 = make_seed(preset, n_max)
        order_cap = max(n_max, DEFAULT_ORDER_CAP)
        base = triangle_recurrence(f0, 1, n_max, order_cap=order_cap)
        for m in range(1, 6):
            tri = triangle_recurrence(f0, m, n_max, order_cap=order_cap)
            fm = iterate_invert(f0, m)
            for n in range(1, n_max + 1):
                checks += 2
                if row_sum(tri, n) != fm(n):
                    fails.append(f"{preset.value} m={m} n={n}: row sum != transform")
                expansion = sum(m ** (i - 1) * base.value(n, i) for i in range(1, n + 1))
                if expansion != fm(n):
                    fails.append(f"{preset.value} m={m} n={n}: depth-1 expansion != transform")
    return checks, fails


def _suite_binomial(cap: int | None, budget: int) -> tuple[int, list[str]]:
    n_max = cap if cap is not None else 20
    checks = 0
    fails: list[str] = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            checks += 1
            if not check_binomial_inversion(n, k):
                fails.append(f"inversion identity fails at n={n} k={k}")
    for m in range(2, 6):
        for n in range(1, min(n_max, 18) + 1):
            for k in range(1, n + 1):
                checks += 1
                if not check_power_expansion(m, n, k):
                    fails.append(f"power expansion fails at m={m} n={n} k={k}")
    return checks, fails


def _suite_bell(cap: int | None, budget: int) -> tuple[int, list[str]]:
    n_max = cap if cap is not None else 10
    checks = 0
    fails: list[str] = []
    for preset in _MAPPED_PRESETS:
        checks += 1
        if not bell_invert_identity_check(make_seed(preset, n_max).values, n_max):
            fails.append(f"Bell identity fails for {preset.value}")
    return checks, fails


def _suite_pascal(cap: int | None, budget: int) -> tuple[int, list[str]]:
    order = cap if cap is not None else 16
    checks = 0
    fails: list[str] = []
    ell = pascal_lower(order)
    for preset in _MAPPED_PRESETS:
        f0 = make_seed(preset, order)
        mats = [
            from_rows(triangle_recurrence(f0, m, order).rows) for m in range(1, 5)
        ]
        for m in range(2, 5):
            checks += 2
            if mat_mul(mats[m - 2], ell).rows != mats[m - 1].rows:
                fails.append(f"{preset.value}: step relation fails at m={m}")
            if mat_mul(mats[0], mat_pow(ell, m - 1)).rows != mats[m - 1].rows:
                fails.append(f"{preset.value}: power relation fails at m={m}")
    for n in range(1, min(order, 12) + 1):
        q, qinv = shifted_pascal_inverse(n)
        checks += 2
        if mat_mul(q, qinv).rows != identity(n).rows:
            fails.append(f"shifted Pascal inverse fails on the right at order {n}")
        if mat_mul(qinv, q).rows != identity(n).rows:
            fails.append(f"shifted Pascal inverse fails on the left at order {n}")
    pow_order = min(cap, 20) if cap is not None else 20
    ell = pascal_lower(pow_order)
    for m in range(1, 7):
        power = mat_pow(ell, m)
        checks += 1
        expected = tuple(
            tuple(m ** (i - j) * comb(i - 1, j - 1) for j in range(1, i + 1))
            for i in range(1, pow_order + 1)
        )
        if power.rows != expected:
            fails.append(f"Pascal power m={m} differs from the closed form")
    return checks, fails


def _suite_closed_forms(cap: int | None, budget: int) -> tuple[int, list[str]]:
    order = cap if cap is not None else 20
    checks = 0
    fails: list[str] = []
    for preset in _MAPPED_PRESETS:
        for result in check_closed_forms(preset, order):
            checks += 1
            if not result.ok:
                fails.append(
                    f"{preset.value} m={result.m} n={result.n} k={result.k}: "
                    f"engine {result.engine} != formula {result.formula}"
                )
    return checks, fails


def _suite_chebyshev(cap: int | None, budget: int) -> tuple[int, list[str]]:
    total = cap if cap is not None else 16
    checks = 0
    fails: list[str] = []
    for n in range(1, total):
        for k in range(1, min(n, total - n) + 1):
            checks += 1
            if not check_chebyshev(n, k, budget):
                fails.append(f"Chebyshev coefficient check fails at n={n} k={k}")
    return checks, fails


def _suite_word_binomial(cap: int | None, budget: int) -> tuple[int, list[str]]:
    total = cap if cap is not None else 14
    checks = 0
    fails: list[str] = []
    for n in range(1, total):
        for k in range(1, total - n + 1):
            checks += 1
            if not check_word_binomial(n, k, budget):
                fails.append(f"word-count identity fails at n={n} k={k}")
    return checks, fails


_SUITES: dict[str, Callable[[int | None, int], tuple[int, list[str]]]] = {
    "row-sums": _suite_row_sums,
    "binomial": _suite_binomial,
    "bell": _suite_bell,
    "pascal": _suite_pascal,
    "closed-forms": _suite_closed_forms,
    "chebyshev": _suite_chebyshev,
    "word-binomial": _suite_word_binomial,
}


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    names = [args.suite] if args.suite else list(_SUITES)
    total_checks = 0
    total_fails = 0
    for name in names:
        checks, fails = _SUITES[name](args.max, args.budget)
        total_checks += checks
        total_fails += len(fails)
        sys.stdout.write(f"{name}: {checks} checks, {len(fails)} failures\n")
        for line in fails[:10]:
            sys.stderr.write(f"  {name}: {line}\n")
    verdict = "PASS" if total_fails == 0 else "FAIL"
    sys.stdout.write(f"{verdict}: {total_checks} checks, {total_fails} failures\n")
    return EXIT_OK if total_fails == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comptri",
        description="Exact composition triangles, invert transforms, and word oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    preset_names = [p.value for p in Preset]

    def add_seed_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--preset", choices=preset_names, help="built-in seed f_0")
        p.add_argument("--seed", help="comma-separated integers for a custom seed")
        p.add_argument("--N", type=int, default=None, help="prefix length")

    p = sub.add_parser("transform", help="print the m-th invert transform f_m(1..N)")
    add_seed_flags(p)
    p.add_argument("--m", type=int, default=1, help="transform depth, 0 echoes the seed")
    p.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("triangle", help="print the depth-m triangle c(n,k)")
    add_seed_flags(p)
    p.add_argument("--m", type=int, default=1, help="triangle depth, at least 1")
    p.add_argument("--algo", choices=("recurrence", "conv", "bell", "pascal", "all"), default="recurrence")
    p.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("oracle", help="compare triangle entries against word counts")
    add_seed_flags(p)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="word-space bound")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("verify", help="run the identity verification suites")
    p.add_argument("--suite", choices=sorted(_SUITES), default=None, help="run one suite")
    p.add_argument("--max", type=int, default=None, help="cap the suite's main sweep bound")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="word-space bound")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except EnumerationBudgetError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BUDGET
    except (ComptriError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
