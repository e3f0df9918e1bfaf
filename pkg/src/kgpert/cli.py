"""Command-line front end.

Subcommands:

    corrections      energy corrections, partial sums, stabilized estimate,
                     optional shooting-method reference with percentage error
    table1           regenerate the screening-scan benchmark table
    table2           regenerate the partial-sum benchmark table
    numerov          converged shooting-method eigenvalue for one state
    exact-swave      exact l = 0 energy and its screening expansion
    critical-lambda  critical screening strength for l = 0

Exit codes: 0 success, 2 domain error, 3 convergence failure.  Floats are
printed with 10 decimal places; CSV uses a plain header row and '.' decimal
separator; JSON reports follow a fixed key order so identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from .closed_forms import critical_lambda, exact_swave_energy, exact_swave_expansion
from .errors import ConvergenceError, DomainError, KgpertError
from .perturbation import QuantumState, energy_corrections
from .potentials import HulthenParams, hulthen_closed_form, hulthen_series, required_series_order
from .summation import PartialSumSequence, partial_sums, percent_error, stabilized_estimate
from . import reference

MAX_ORDER = 30  # hard cap on requested corrections

__all__ = ["main", "build_parser", "MAX_ORDER"]


def _fmt(x: float) -> str:
    return f"{x:.10f}"


def _round(x: float) -> float:
    return round(float(x), 10)


def _add_state_args(p, with_l=True):
    p.add_argument("-a", type=float, default=1.0, help="vector coupling strength (>= 0)")
    p.add_argument("-b", type=float, default=1.0, help="scalar coupling strength (>= 0)")
    p.add_argument("--lambda", dest="lam", type=float, default=0.05,
                   help="screening parameter (> 0)")
    p.add_argument("-n", type=int, default=0, help="radial quantum number (node count)")
    if with_l:
        p.add_argument("-l", type=int, default=0, help="orbital quantum number")
    p.add_argument("--mass", type=float, default=1.0, help="particle mass (natural units)")


def _add_output_args(p):
    p.add_argument("--format", choices=("text", "csv", "json"), default="text",
                   help="output format")
    p.add_argument("--out", metavar="PATH", default=None,
                   help="write the report to PATH instead of stdout")


def _add_grid_args(p):
    p.add_argument("--grid-steps", type=int, default=20000,
                   help="Numerov grid steps (minimum; refined automatically)")
    p.add_argument("--r-max", type=float, default=None,
                   help="outer grid cutoff (default: from the weakest binding)")
    p.add_argument("--tol", type=float, default=1e-11,
                   help="eigenvalue convergence tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgpert",
        description="Relativistic bound-state energies for screened Coulomb "
                    "potentials: perturbation expansion and shooting-method oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("corrections", help="energy corrections and partial sums")
    _add_state_args(p)
    p.add_argument("-K", "--order", dest="order", type=int, default=5,
                   help=f"highest correction order (<= {MAX_ORDER})")
    p.add_argument("--no-numerov", action="store_true",
                   help="skip the shooting-method reference")
    _add_grid_args(p)
    _add_output_args(p)

    for name in ("table1", "table2"):
        p = sub.add_parser(name, help=f"regenerate benchmark {name}")
        p.add_argument("--no-numerov", action="store_true",
                       help="perturbation columns only")
        _add_grid_args(p)
        _add_output_args(p)

    p = sub.add_parser("numerov", help="shooting-method eigenvalue")
    _add_state_args(p)
    _add_grid_args(p)
    _add_output_args(p)

    p = sub.add_parser("exact-swave", help="exact s-wave energy and expansion")
    _add_state_args(p, with_l=False)
    _add_output_args(p)

    p = sub.add_parser("critical-lambda", help="critical screening for s-waves")
    p.add_argument("-a", type=float, default=1.0)
    p.add_argument("-b", type=float, default=1.0)
    p.add_argument("-n", type=int, default=0)
    p.add_argument("--mass", type=float, default=1.0)
    _add_output_args(p)

    return parser


def _numerov_config(args):
    from .numerov import NumerovConfig

    return NumerovConfig(steps=args.grid_steps, r_max=args.r_max, energy_tol=args.tol)


def _solve_reference(a, b, lam, n, l, mass, sums, args):
    """Shooting-method energy near a perturbative estimate.

    The bracket width follows the size of the last correction (the natural
    error scale of the truncated series) and never reaches the continuum
    edge, which would blow up the grid.
    """
    from .numerov import solve_eigenvalue

    potential = hulthen_closed_form(HulthenParams(a, b, lam))
    state = QuantumState(n=n, l=l, m=mass)
    estimate = sums[-1]
    tail = abs(sums[-1] - sums[-2]) if len(sums) > 1 else 0.01 * mass
    if abs(estimate) < mass and tail < 0.01 * mass:
        half_width = min(0.02 * mass, max(1e-3 * mass, 1e3 * tail))
        lo = max(estimate - half_width, -0.99999 * mass)
        hi = estimate + min(half_width, 0.5 * (mass - estimate))
    else:
        # diverging expansion: no usable estimate, scan most of the gap
        lo, hi = -0.95 * mass, 0.9995 * mass
    solution = solve_eigenvalue(potential, state, (lo, hi), _numerov_config(args))
    return solution


def _cmd_corrections(args):
    if not 0 <= args.order <= MAX_ORDER:
        raise DomainError(f"order must be in 0..{MAX_ORDER}")
    params = HulthenParams(args.a, args.b, args.lam)
    state = QuantumState(n=args.n, l=args.l, m=args.mass)
    series = hulthen_series(params, required_series_order(args.order))
    expansion = energy_corrections(state, series, args.order)
    sums = partial_sums(expansion)

    report = {
        "command": "corrections",
        "params": {"a": args.a, "b": args.b, "lambda": args.lam, "n": args.n,
                   "l": args.l, "mass": args.mass, "order": args.order},
        "corrections": [_round(e) for e in expansion.corrections],
        "partial_sums": [_round(s) for s in sums.sums],
    }
    if args.order >= 2:
        stab = stabilized_estimate(sums)
        report["stabilized"] = {"value": _round(stab.value), "index": stab.index}
    if not args.no_numerov:
        solution = _solve_reference(args.a, args.b, args.lam, args.n, args.l,
                                    args.mass, sums.sums, args)
        report["reference"] = _round(solution.energy)
        report["error_pct"] = _round(percent_error(sums.sums[-1], solution.energy))
    return report


def _table_families(args, lam, n, l, order):
    """Partial sums (and optional eigensolver energy) for the three couplings."""
    out = {}
    for family, (a, b) in reference.FAMILIES.items():
        series = hulthen_series(HulthenParams(a, b, lam), required_series_order(order))
        state = QuantumState(n=n, l=l, m=1.0)
        sums = partial_sums(energy_corrections(state, series, order)).sums
        row = {"partial_sums": sums}
        if not args.no_numerov:
            solution = _solve_reference(a, b, lam, n, l, 1.0, sums, args)
            row["numerov"] = solution.energy
        out[family] = row
    return out


def _cmd_table1(args):
    rows = []
    max_dev = {"energy": 0.0, "error_pct": 0.0}
    for lam in reference.LAMBDA_GRID:
        fam = _table_families(args, lam, reference.TABLE1_N, reference.TABLE1_L, 5)
        printed = reference.TABLE1_ROWS[lam]
        row = {"lambda": lam}
        for idx, family in enumerate(("vector", "scalar", "mixed")):
            s5 = fam[family]["partial_sums"][-1]
            row[f"E_{family}"] = _round(s5)
            max_dev["energy"] = max(max_dev["energy"], abs(s5 - printed[2 * idx]))
            if not args.no_numerov:
                eps = percent_error(s5, fam[family]["numerov"])
                row[f"eps_{family}"] = round(float(eps), 5)
                max_dev["error_pct"] = max(max_dev["error_pct"],
                                           abs(eps - printed[2 * idx + 1]))
        rows.append(row)
    report = {
        "command": "table1",
        "params": {"a": 1.0, "b": 1.0, "n": reference.TABLE1_N,
                   "l": reference.TABLE1_L, "order": 5},
        "rows": rows,
        "max_abs_deviation": {"energy": float(f"{max_dev['energy']:.3e}")},
    }
    if not args.no_numerov:
        report["max_abs_deviation"]["error_pct"] = float(f"{max_dev['error_pct']:.3e}")
    return report


def _cmd_table2(args):
    order = reference.TABLE2_ORDER
    lam = reference.TABLE2_LAMBDA
    columns = {}
    max_dev = {"partial_sums": 0.0, "numerov": 0.0}
    for n in (1, 2):
        fam = _table_families(args, lam, n, reference.TABLE2_L, order)
        for family in ("vector", "scalar", "mixed"):
            key = f"{family}_n{n}"
            sums = fam[family]["partial_sums"]
            columns[key] = {"partial_sums": [_round(s) for s in sums]}
            printed = reference.TABLE2_PARTIAL_SUMS[(family, n)]
            max_dev["partial_sums"] = max(
                max_dev["partial_sums"],
                max(abs(s - p) for s, p in zip(sums, printed)),
            )
            if not args.no_numerov:
                e_num = fam[family]["numerov"]
                columns[key]["numerov"] = _round(e_num)
                max_dev["numerov"] = max(
                    max_dev["numerov"],
                    abs(e_num - reference.TABLE2_NUMEROV[(family, n)]),
                )
    report = {
        "command": "table2",
        "params": {"a": 1.0, "b": 1.0, "lambda": lam, "l": reference.TABLE2_L,
                   "order": order},
        "columns": columns,
        "max_abs_deviation": {"partial_sums": float(f"{max_dev['partial_sums']:.3e}")},
    }
    if not args.no_numerov:
        report["max_abs_deviation"]["numerov"] = float(f"{max_dev['numerov']:.3e}")
    return report


def _cmd_numerov(args):
    params = HulthenParams(args.a, args.b, args.lam)
    state = QuantumState(n=args.n, l=args.l, m=args.mass)
    order = 8
    series = hulthen_series(params, required_series_order(order))
    sums = partial_sums(energy_corrections(state, series, order))
    solution = _solve_reference(args.a, args.b, args.lam, args.n, args.l,
                                args.mass, sums.sums, args)
    return {
        "command": "numerov",
        "params": {"a": args.a, "b": args.b, "lambda": args.lam, "n": args.n,
                   "l": args.l, "mass": args.mass},
        "energy": _round(solution.energy),
        "nodes": solution.nodes,
        "mismatch": float(f"{solution.mismatch:.3e}"),
    }


def _cmd_exact_swave(args):
    params = HulthenParams(args.a, args.b, args.lam)
    exact = exact_swave_energy(params, args.n, args.mass)
    expansion = exact_swave_expansion(params, args.n, args.mass)
    sums = PartialSumSequence.from_corrections(expansion)
    return {
        "command": "exact-swave",
        "params": {"a": args.a, "b": args.b, "lambda": args.lam, "n": args.n,
                   "mass": args.mass},
        "energy": _round(exact.energy),
        "kappa": _round(exact.kappa),
        "n_tilde": _round(exact.cap_n_tilde),
        "corrections": [_round(e) for e in expansion],
        "partial_sums": [_round(s) for s in sums.sums],
    }


def _cmd_critical_lambda(args):
    value = critical_lambda(args.a, args.b, args.n, args.mass)
    return {
        "command": "critical-lambda",
        "params": {"a": args.a, "b": args.b, "n": args.n, "mass": args.mass},
        "lambda_cr": _round(value),
    }


_COMMANDS = {
    "corrections": _cmd_corrections,
    "table1": _cmd_table1,
    "table2": _cmd_table2,
    "numerov": _cmd_numerov,
    "exact-swave": _cmd_exact_swave,
    "critical-lambda": _cmd_critical_lambda,
}


def _render_text(report) -> str:
    lines = [f"# {report['command']}"]
    lines.append("params: " + ", ".join(f"{k}={v}" for k, v in report["params"].items()))
    if "corrections" in report:
        lines.append(f"{'k':>4} {'correction':>16} {'partial sum':>16}")
        for k, (e, s) in enumerate(zip(report["corrections"], report["partial_sums"])):
            lines.append(f"{k:>4} {_fmt(e):>16} {_fmt(s):>16}")
    if "stabilized" in report:
        stab = report["stabilized"]
        lines.append(f"stabilized estimate: {_fmt(stab['value'])} (k* = {stab['index']})")
    if "rows" in report:  # table1
        has_eps = any("eps_vector" in row for row in report["rows"])
        head = f"{'lambda':>8} {'E_V':>14}"
        head += f" {'eps_V%':>9}" if has_eps else ""
        head += f" {'E_W':>14}" + (f" {'eps_W%':>9}" if has_eps else "")
        head += f" {'E_V+W':>14}" + (f" {'eps_V+W%':>9}" if has_eps else "")
        lines.append(head)
        for row in report["rows"]:
            cells = [f"{row['lambda']:>8.2f}"]
            for family in ("vector", "scalar", "mixed"):
                cells.append(f"{row['E_' + family]:>14.10f}")
                if has_eps:
                    cells.append(f"{row['eps_' + family]:>9.5f}")
            lines.append(" ".join(cells))
    if "columns" in report:  # table2
        cols = list(report["columns"])
        lines.append(f"{'k':>6} " + " ".join(f"{c:>14}" for c in cols))
        n_sums = len(report["columns"][cols[0]]["partial_sums"])
        for k in range(n_sums):
            cells = [f"{report['columns'][c]['partial_sums'][k]:>14.10f}" for c in cols]
            lines.append(f"{k:>6} " + " ".join(cells))
        if "numerov" in report["columns"][cols[0]]:
            cells = [f"{report['columns'][c]['numerov']:>14.10f}" for c in cols]
            lines.append(f"{'E_num':>6} " + " ".join(cells))
    for key in ("energy", "kappa", "n_tilde", "lambda_cr", "reference", "error_pct"):
        if key in report:
            lines.append(f"{key}: {_fmt(report[key])}")
    if "nodes" in report:
        lines.append(f"nodes: {report['nodes']}")
    if "mismatch" in report:
        lines.append(f"mismatch: {report['mismatch']:.3e}")
    if "max_abs_deviation" in report:
        dev = ", ".join(f"{k}={v:.3e}" for k, v in report["max_abs_deviation"].items())
        lines.append(f"max abs deviation vs reference: {dev}")
    return "\n".join(lines) + "\n"


def _render_csv(report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "rows" in report:  # table1
        has_eps = any("eps_vector" in row for row in report["rows"])
        header = ["lambda"]
        for family in ("vector", "scalar", "mixed"):
            header.append(f"E_{family}")
            if has_eps:
                header.append(f"eps_{family}")
        writer.writerow(header)
        for row in report["rows"]:
            cells = [f"{row['lambda']:.2f}"]
            for family in ("vector", "scalar", "mixed"):
                cells.append(_fmt(row[f"E_{family}"]))
                if has_eps:
                    cells.append(f"{row['eps_' + family]:.5f}")
            writer.writerow(cells)
    elif "columns" in report:  # table2
        cols = list(report["columns"])
        writer.writerow(["k"] + cols)
        n_sums = len(report["columns"][cols[0]]["partial_sums"])
        for k in range(n_sums):
            writer.writerow([k] + [_fmt(report["columns"][c]["partial_sums"][k])
                                   for c in cols])
        if "numerov" in report["columns"][cols[0]]:
            writer.writerow(["E_num"] + [_fmt(report["columns"][c]["numerov"])
                                         for c in cols])
    elif "corrections" in report:
        writer.writerow(["k", "correction", "partial_sum"])
        for k, (e, s) in enumerate(zip(report["corrections"], report["partial_sums"])):
            writer.writerow([k, _fmt(e), _fmt(s)])
    else:
        keys = [k for k in report if k not in ("command", "params")]
        writer.writerow(keys)
        writer.writerow([report[k] for k in keys])
    return buf.getvalue()


def render(report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(report)
    return _render_text(report)


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = _COMMANDS[args.command](args)
    except ConvergenceError as exc:
        print(f"convergence failure ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 3
    except (DomainError, KgpertError) as exc:
        print(f"domain error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 2
    text = render(report, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
