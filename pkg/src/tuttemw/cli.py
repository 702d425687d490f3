"""Command-line front end: exact evaluation, counterexample verification,
family sweeps, asymptotic queries, and oracle cross-checks.

Exit codes: 0 success, 1 oracle-check mismatch, 2 invalid parameters or
size limits, 3 degenerate denominator without --fallback-oracle, 10 a
verified violation of the multiplicative inequality.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import asymptotics, matroids, thickening, uniform
from .errors import (
    DegenerateDenominatorError,
    InvalidParametersError,
    NotABasisError,
    SizeLimitError,
)
from .exact import approx_decimal
from .thickening import ThickenedUniform
from .uniform import UniformMatroid

RESULT_FIELDS = ("n", "r", "k", "x", "t_x0", "t_0x", "t_11", "ratio", "mult", "add", "max")
INEQUALITIES = ("mult", "add", "max")


# ---------------------------------------------------------------------------
# option parsing helpers (values stay strings until here so that config-file
# entries and command-line flags go through identical conversions)

def _as_int(value, name: str) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise InvalidParametersError(f"{name} expects an integer, got {value!r}") from None


def _as_float(value, name: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise InvalidParametersError(f"{name} expects a number, got {value!r}") from None


def _as_fraction(value, name: str) -> Fraction:
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise InvalidParametersError(f"{name} expects a rational like 2 or 3/2, got {value!r}") from None


def _as_bool(value, name: str) -> bool:
    if value is None:
        return False
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("true", "1", "yes", "on"):
        return True
    if text in ("false", "0", "no", "off"):
        return False
    raise InvalidParametersError(f"{name} expects a boolean, got {value!r}")


def _as_range(value, name: str) -> tuple[int, int, int]:
    """Parse 'a', 'a:b', or 'a:b:step' into (lo, hi, step)."""
    parts = str(value).split(":")
    if len(parts) == 1:
        lo = _as_int(parts[0], name)
        return lo, lo, 1
    if len(parts) in (2, 3):
        lo = _as_int(parts[0], name)
        hi = _as_int(parts[1], name)
        step = _as_int(parts[2], name) if len(parts) == 3 else 1
        if step < 1:
            raise InvalidParametersError(f"{name} step must be >= 1, got {step}")
        return lo, hi, step
    raise InvalidParametersError(f"{name} expects min[:max[:step]], got {value!r}")


def _as_int_list(value, name: str) -> tuple[int, ...]:
    return tuple(_as_int(part, name) for part in str(value).split(","))


def _load_config(path: str) -> dict[str, str]:
    data: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                key, sep, value = line.partition("=")
                if not sep:
                    raise InvalidParametersError(
                        f"{path}:{lineno}: expected key=value, got {line!r}"
                    )
                data[key.strip()] = value.strip()
    except OSError as exc:
        raise InvalidParametersError(f"cannot read config file: {exc}") from None
    return data


def _merge_config(args: argparse.Namespace) -> None:
    """Fill unset options from the config file; explicit flags win."""
    for key, value in _load_config(args.config).items():
        attr = key.replace("-", "_")
        if attr in ("config", "func", "command", "sub") or not hasattr(args, attr):
            raise InvalidParametersError(f"unknown config key {key!r}")
        if getattr(args, attr) is None:
            setattr(args, attr, value)


# ---------------------------------------------------------------------------
# search machinery

@dataclass(frozen=True)
class SearchConfig:
    """One family sweep: which (n, r, k) triples to test at which point."""

    n_min: int
    n_max: int
    n_step: int
    r_mode: str  # "all" | "alpha" | "explicit"
    alpha: Fraction | None
    r_values: tuple[int, ...]
    k_min: int
    k_max: int
    x: Fraction
    inequality: str
    stop_at_first: bool
    threads: int

    def validate(self) -> None:
        if self.n_min < 0 or self.n_step < 1:
            raise InvalidParametersError("n range must be non-negative with step >= 1")
        if self.k_min < 1:
            raise InvalidParametersError(f"k must be >= 1, got {self.k_min}")
        if self.x < 0:
            raise InvalidParametersError(f"search point must satisfy x >= 0, got {self.x}")
        if self.inequality not in INEQUALITIES:
            raise InvalidParametersError(f"inequality must be one of {INEQUALITIES}")
        if self.threads < 1:
            raise InvalidParametersError(f"threads must be >= 1, got {self.threads}")
        if self.r_mode == "alpha" and not (self.alpha and 0 < self.alpha < 1):
            raise InvalidParametersError("alpha must lie strictly between 0 and 1")

    def _ranks_for(self, n: int) -> Iterable[int]:
        if self.r_mode == "all":
            return range(1, n)
        if self.r_mode == "alpha":
            r = self.alpha * n
            return (int(r),) if r.denominator == 1 and 0 < r < n else ()
        return tuple(r for r in self.r_values if 0 < r < n)

    def grid(self) -> list[tuple[int, int, int]]:
        """All (n, r, k) points ordered by element count k*n, then n, then r."""
        points = [
            (n, r, k)
            for n in range(self.n_min, self.n_max + 1, self.n_step)
            for k in range(self.k_min, self.k_max + 1)
            for r in self._ranks_for(n)
        ]
        points.sort(key=lambda p: (p[2] * p[0], p[0], p[1], p[2]))
        return points


@dataclass(frozen=True)
class ResultRow:
    """One sweep row; exact values are carried as strings of integers or p/q."""

    n: int
    r: int
    k: int
    x: Fraction
    t_x0: Fraction
    t_0x: Fraction
    t_11: Fraction
    ratio: float
    mult: bool
    add: bool
    max: bool

    @classmethod
    def from_report(cls, n: int, r: int, k: int, report: thickening.MWReport) -> "ResultRow":
        return cls(
            n=n,
            r=r,
            k=k,
            x=report.x,
            t_x0=report.t_x0,
            t_0x=report.t_0x,
            t_11=report.t_11,
            ratio=report.ratio_mult_real,
            mult=report.status_mult,
            add=report.status_add,
            max=report.status_max,
        )

    def status(self, inequality: str) -> bool:
        return getattr(self, inequality)

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "x": str(self.x),
            "t_x0": str(self.t_x0),
            "t_0x": str(self.t_0x),
            "t_11": str(self.t_11),
            "ratio": self.ratio,
            "mult": self.mult,
            "add": self.add,
            "max": self.max,
        }

    def to_csv_fields(self) -> list[str]:
        fields = []
        for key in RESULT_FIELDS:
            value = self.to_record()[key]
            if isinstance(value, bool):
                fields.append("true" if value else "false")
            else:
                fields.append(str(value))
        return fields


def _mw_row(task: tuple[int, int, int, Fraction]) -> ResultRow:
    n, r, k, x = task
    report = thickening.mw_report(ThickenedUniform(UniformMatroid(n, r), k), x)
    return ResultRow.from_report(n, r, k, report)


def _search_rows(cfg: SearchConfig) -> Iterator[ResultRow]:
    """Rows in canonical order; grid points may be computed in parallel but
    emission order never depends on completion order."""
    tasks = [(n, r, k, cfg.x) for (n, r, k) in cfg.grid()]
    if cfg.threads > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (8 * cfg.threads))
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            yield from pool.map(_mw_row, tasks, chunksize=chunk)
    else:
        yield from map(_mw_row, tasks)


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_eval(args: argparse.Namespace) -> int:
    n = _as_int(args.n, "-n")
    r = _as_int(args.r, "-r")
    k = _as_int(args.k if args.k is not None else 1, "-k")
    x = _as_fraction(args.x, "-x")
    y = _as_fraction(args.y, "-y")
    thick = ThickenedUniform(UniformMatroid(n, r), k)
    try:
        value = thickening.thickened_eval(thick, x, y)
    except DegenerateDenominatorError:
        if not _as_bool(args.fallback_oracle, "--fallback-oracle"):
            raise
        table = matroids.thicken_matroid(matroids.uniform_oracle(n, r), k)
        value = matroids.subset_expansion_tutte(table).evaluate(x, y)
    print(value)
    print(f"~ {approx_decimal(value)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    n = _as_int(args.n, "-n")
    r = _as_int(args.r, "-r")
    k = _as_int(args.k if args.k is not None else 1, "-k")
    x = _as_fraction(args.x if args.x is not None else 2, "-x")
    thick = ThickenedUniform(UniformMatroid(n, r), k)
    report = thickening.mw_report(thick, x)
    print(f"matroid U({n},{r}) thickened k={k}: {k * n} elements, rank {r}")
    print(f"x = {x}")
    print(f"t_x0 = {report.t_x0}")
    print(f"t_0x = {report.t_0x}")
    print(f"t_11 = {report.t_11}")
    print(f"ratio = {report.ratio_mult}")
    print(f"ratio ~ {approx_decimal(report.ratio_mult)}")
    for name, ok in (("mult", report.status_mult), ("add", report.status_add), ("max", report.status_max)):
        print(f"{name} = {'holds' if ok else 'violated'}")
    return 0 if report.status_mult else 10


def _search_config(args: argparse.Namespace) -> SearchConfig:
    n_min, n_max, n_step = _as_range(args.n, "-n") if args.n is not None else (0, -1, 1)
    if args.alpha is not None and args.r is not None and str(args.r) != "all":
        raise InvalidParametersError("give either -r or --alpha, not both")
    if args.alpha is not None:
        r_mode, alpha, r_values = "alpha", _as_fraction(args.alpha, "--alpha"), ()
    elif args.r is None or str(args.r) == "all":
        r_mode, alpha, r_values = "all", None, ()
    else:
        r_mode, alpha, r_values = "explicit", None, _as_int_list(args.r, "-r")
    k_min, k_max, k_step = _as_range(args.k if args.k is not None else 1, "-k")
    if k_step != 1:
        raise InvalidParametersError("k range does not support a step")
    cfg = SearchConfig(
        n_min=n_min,
        n_max=n_max,
        n_step=n_step,
        r_mode=r_mode,
        alpha=alpha,
        r_values=r_values,
        k_min=k_min,
        k_max=k_max,
        x=_as_fraction(args.x if args.x is not None else 2, "-x"),
        inequality=str(args.inequality or "mult"),
        stop_at_first=_as_bool(args.stop_at_first, "--stop-at-first"),
        threads=_as_int(args.threads if args.threads is not None else 1, "--threads"),
    )
    cfg.validate()
    return cfg


def _cmd_search(args: argparse.Namespace) -> int:
    cfg = _search_config(args)
    fmt = str(args.format or "csv")
    if fmt not in ("csv", "json"):
        raise InvalidParametersError(f"--format must be csv or json, got {fmt!r}")
    out = sys.stdout
    writer = None
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(RESULT_FIELDS)
    for row in _search_rows(cfg):
        if writer is not None:
            writer.writerow(row.to_csv_fields())
        else:
            out.write(json.dumps(row.to_record()) + "\n")
        if cfg.stop_at_first and not row.status(cfg.inequality):
            break
    return 0


def _cmd_asymptote(args: argparse.Namespace) -> int:
    if args.sub == "x0":
        tol = _as_float(args.tol if args.tol is not None else "1e-9", "--tol")
        print(f"{asymptotics.threshold_x0(tol):.12g}")
        return 0
    if args.sub == "optimal-alpha":
        argmax, value = asymptotics.optimal_alpha()
        print(f"alpha = {argmax:.12g}")
        print(f"value = {value:.12g}")
        return 0
    if args.sub == "exponent":
        x = _as_float(args.x, "-x")
        alpha = _as_float(args.alpha, "--alpha")
        try:
            print(f"{asymptotics.mw_exponent(x, alpha):.12g}")
        except ValueError as exc:
            raise InvalidParametersError(str(exc)) from None
        return 0
    # convergence table of measured exponents against the n -> inf limit
    x = _as_fraction(args.x if args.x is not None else 2, "-x")
    ns = _as_int_list(args.n if args.n is not None else "99,198,396,798", "-n")
    print("n exponent")
    for n in ns:
        try:
            value = asymptotics.empirical_exponent(n, x)
        except ValueError as exc:
            raise InvalidParametersError(str(exc)) from None
        print(f"{n} {value:.12g}")
    print(f"# limit ln(9/8) = {math.log(9 / 8):.12g}")
    return 0


def _first_mismatch(out, label: str, instance: str) -> int:
    print(f"{label}: MISMATCH at {instance}", file=out)
    return 1


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    max_n = _as_int(args.n if args.n is not None else 8, "-n")
    if max_n > 12:
        raise SizeLimitError(f"oracle-check is limited to max_n <= 12, got {max_n}")
    if max_n < 0:
        raise InvalidParametersError(f"max_n must be non-negative, got {max_n}")
    out = sys.stdout
    grid = [
        (Fraction(2), Fraction(0)),
        (Fraction(0), Fraction(2)),
        (Fraction(1), Fraction(1)),
        (Fraction(3), Fraction(3)),
        (Fraction(1, 2), Fraction(2, 3)),
        (Fraction(5, 2), Fraction(1, 3)),
    ]

    checked = 0
    for n in range(max_n + 1):
        for r in range(n + 1):
            closed = uniform.tutte_polynomial(UniformMatroid(n, r))
            expanded = matroids.subset_expansion_tutte(matroids.uniform_oracle(n, r))
            if closed != expanded:
                return _first_mismatch(out, "closed form vs subset expansion", f"U({n},{r})")
            checked += 1
    print(f"closed form vs subset expansion: ok ({checked} matroids, n <= {max_n})", file=out)

    checked = 0
    for n in range(max_n + 1):
        for r in range(n + 1):
            table = matroids.uniform_oracle(n, r)
            swapped = {
                (j, i): c
                for (i, j), c in matroids.subset_expansion_tutte(table).as_dict().items()
            }
            dual_poly = matroids.subset_expansion_tutte(matroids.dual_matroid(table))
            if dual_poly.as_dict() != swapped:
                return _first_mismatch(out, "duality argument swap", f"U({n},{r})")
            checked += 1
    print(f"duality argument swap: ok ({checked} matroids, n <= {max_n})", file=out)

    checked = 0
    for k in (2, 3):
        for n in range(1, max_n // k + 1):
            for r in range(n + 1):
                table = matroids.thicken_matroid(matroids.uniform_oracle(n, r), k)
                poly = matroids.subset_expansion_tutte(table)
                thick = ThickenedUniform(UniformMatroid(n, r), k)
                for x, y in grid:
                    if poly.evaluate(x, y) != thickening.thickened_eval(thick, x, y):
                        return _first_mismatch(
                            out, "thickening identity", f"U({n},{r}) k={k} at ({x},{y})"
                        )
                checked += 1
    print(f"thickening identity: ok ({checked} matroids, n*k <= {max_n})", file=out)

    checked = 0
    for n in range(1, min(max_n, 8) + 1):
        for r in range(1, n + 1):
            table = matroids.uniform_oracle(n, r)
            for basis in matroids.bases(table):
                graph = matroids.exchange_graph(table, basis)
                if not graph.is_complete_bipartite():
                    return _first_mismatch(
                        out, "exchange graph completeness", f"U({n},{r}) basis {basis:#x}"
                    )
                checked += 1
    print(f"exchange graph completeness: ok ({checked} bases, n <= {min(max_n, 8)})", file=out)

    checked = 0
    for n in range(1, min(max_n, 5) + 1):
        for r in range(1, n + 1):
            table = matroids.uniform_oracle(n, r)
            thick_table = matroids.thicken_matroid(table, 2)
            for basis in matroids.bases(table):
                transformed = matroids.thicken_exchange_graph(
                    matroids.exchange_graph(table, basis)
                )
                lifted = matroids.exchange_graph(thick_table, matroids.lifted_basis(basis, 2))
                if not transformed.isomorphic_to(lifted):
                    return _first_mismatch(
                        out, "pendant-twin transform", f"U({n},{r}) basis {basis:#x}"
                    )
                checked += 1
    print(f"pendant-twin transform: ok ({checked} bases, n <= {min(max_n, 5)})", file=out)
    return 0


# ---------------------------------------------------------------------------
# parser assembly

def _add_matroid_flags(parser: argparse.ArgumentParser, with_y: bool) -> None:
    parser.add_argument("-n", help="ground-set size of the base uniform matroid")
    parser.add_argument("-r", help="rank of the base uniform matroid")
    parser.add_argument("-k", help="thickening multiplicity (default 1)")
    parser.add_argument("-x", help="evaluation point x, a rational like 2 or 3/2")
    if with_y:
        parser.add_argument("-y", help="evaluation point y, a rational")
    parser.add_argument("--config", help="key=value file supplying unset flags")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tuttemw",
        description="Exact Tutte polynomials of thickened uniform matroids and "
        "Merino-Welsh inequality checks.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p_eval = commands.add_parser("eval", help="exact Tutte value at a rational point")
    _add_matroid_flags(p_eval, with_y=True)
    p_eval.add_argument(
        "--fallback-oracle",
        action="store_true",
        default=None,
        help="on a degenerate substitution, evaluate the explicit rank-table matroid",
    )
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = commands.add_parser("verify", help="Merino-Welsh report for one matroid")
    _add_matroid_flags(p_verify, with_y=False)
    p_verify.set_defaults(func=_cmd_verify)

    p_search = commands.add_parser("search", help="sweep a family and emit result rows")
    p_search.add_argument("-n", help="n range as min[:max[:step]]")
    p_search.add_argument("-r", help="'all' (default), a rank, or a comma list")
    p_search.add_argument("--alpha", help="rank density; keeps only integral r = alpha*n")
    p_search.add_argument("-k", help="k or k range as min:max (default 1)")
    p_search.add_argument("-x", help="evaluation point (default 2)")
    p_search.add_argument("--inequality", help="which status stops the sweep: mult, add, max")
    p_search.add_argument("--format", help="csv (default) or json lines")
    p_search.add_argument("--stop-at-first", action="store_true", default=None,
                          help="halt at the first violated row in canonical order")
    p_search.add_argument("--threads", help="worker processes for the sweep (default 1)")
    p_search.add_argument("--config", help="key=value file supplying unset flags")
    p_search.set_defaults(func=_cmd_search)

    p_asym = commands.add_parser("asymptote", help="growth-rate and threshold queries")
    asym_subs = p_asym.add_subparsers(dest="sub", required=True)
    p_x0 = asym_subs.add_parser("x0", help="largest root of x^3 - 9(x-1)")
    p_x0.add_argument("--tol", help="bisection tolerance (default 1e-9)")
    asym_subs.add_parser("optimal-alpha", help="argmax and maximum of the density factor")
    p_exp = asym_subs.add_parser("exponent", help="rate lambda(x, alpha)")
    p_exp.add_argument("-x", required=True)
    p_exp.add_argument("-a", "--alpha", required=True)
    p_emp = asym_subs.add_parser("empirical", help="measured exponents at density 2/3")
    p_emp.add_argument("-x", help="evaluation point (default 2)")
    p_emp.add_argument("-n", help="comma list of n values (default 99,198,396,798)")
    p_asym.set_defaults(func=_cmd_asymptote)

    p_oracle = commands.add_parser("oracle-check", help="closed forms vs brute force")
    p_oracle.add_argument("-n", help="largest ground-set size to sweep (default 8, max 12)")
    p_oracle.set_defaults(func=_cmd_oracle_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if getattr(args, "config", None):
            _merge_config(args)
        return args.func(args)
    except (InvalidParametersError, SizeLimitError, NotABasisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegenerateDenominatorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
