"""Command-line front end: sweeps, verification, and rigidity reports.

Outputs are deterministic for a fixed config and seed: CSV files carry 17
significant digits with LF line endings, and the SVG plots are rendered
by the in-package writer.  Exit codes: 0 success, 2 config error,
3 validity violation, 4 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Iterable, Sequence

from .config import RunConfig, load_config
from .errors import ConfigError, ValidityError
from .ring import amplitude_t0
from .smatrix import (
    factorized_s,
    random_symmetric_unitary,
    reciprocal_from_generator,
    reciprocal_ring_family,
    rigidity_report,
    seeded_generator,
    symmetric_phi_grid,
)
from .svgplot import write_line_plot
from .transport import double_slit_visibility, dot_arm_rms, sweep_lambda, sweep_phase
from .verify import run_all

__all__ = ["main"]

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VALIDITY = 3
EXIT_VERIFY = 4

RIGIDITY_GRID_POINTS = 64


def _fmt(value: float) -> str:
    return f"{float(value):.17g}"


def _write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[float]]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def cmd_sweep_phase(cfg: RunConfig) -> int:
    """Transmission over one flux period, one column per detector overlap."""
    os.makedirs(cfg.out_dir, exist_ok=True)
    sweeps = [sweep_phase(cfg.ring, lam, cfg.n_phi) for lam in cfg.lambda_list]
    for lam, sweep in zip(cfg.lambda_list, sweeps):
        bad = sweep.out_of_range()
        if bad.size:
            print(
                f"warning: {bad.size} transmission values outside [0, 1] "
                f"for lambda={lam:g}",
                file=sys.stderr,
            )
    csv_path = os.path.join(cfg.out_dir, "phase_sweep.csv")
    header = ["phi"] + [f"T_lambda={_fmt(lam)}" for lam in cfg.lambda_list]
    phis = sweeps[0].phis
    _write_csv(
        csv_path,
        header,
        ([phis[i]] + [s.values[i] for s in sweeps] for i in range(len(phis))),
    )
    svg_path = os.path.join(cfg.out_dir, "phase_sweep.svg")
    write_line_plot(
        svg_path,
        phis,
        [s.values for s in sweeps],
        [f"lambda = {lam:g}" for lam in cfg.lambda_list],
        title="Transmission vs flux phase",
        xlabel="phi (rad)",
        ylabel="T",
    )
    print(f"wrote {csv_path}")
    print(f"wrote {svg_path}")
    return EXIT_OK


def cmd_sweep_lambda(cfg: RunConfig) -> int:
    """Closed-loop visibility against the detector overlap, with the
    fixed-two-path reference alongside."""
    os.makedirs(cfg.out_dir, exist_ok=True)
    pairs = sweep_lambda(cfg.ring, cfg.lambda_list, cfg.n_phi)
    arm_a = float(abs(amplitude_t0(cfg.ring, 0.0)))
    arm_b = dot_arm_rms(cfg.ring, cfg.n_phi)
    rows = [
        (lam, vis, double_slit_visibility(arm_a, arm_b, lam)) for lam, vis in pairs
    ]
    csv_path = os.path.join(cfg.out_dir, "visibility.csv")
    _write_csv(
        csv_path,
        ["lambda", "visibility_closed_loop", "visibility_double_slit"],
        rows,
    )
    svg_path = os.path.join(cfg.out_dir, "visibility.svg")
    write_line_plot(
        svg_path,
        [r[0] for r in rows],
        [[r[1] for r in rows], [r[2] for r in rows]],
        ["closed loop", "double slit"],
        title="Visibility vs detector overlap",
        xlabel="lambda",
        ylabel="visibility",
    )
    print(f"wrote {csv_path}")
    print(f"wrote {svg_path}")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    """Run the cross-validation suites; exit 0 only if all pass."""
    results = run_all(cfg.ring, cfg.seed)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"[{status}] {result.name}: {result.detail}")
    n_pass = sum(r.passed for r in results)
    print(f"verification: {n_pass}/{len(results)} suites passed")
    return EXIT_OK if n_pass == len(results) else EXIT_VERIFY


def cmd_rigidity(cfg: RunConfig) -> int:
    """Tabulate the rigidity identity for a factorized and a generic family."""
    os.makedirs(cfg.out_dir, exist_ok=True)
    grid = symmetric_phi_grid(RIGIDITY_GRID_POINTS)
    cases = [
        (
            "rigidity_factorized.csv",
            rigidity_report(
                factorized_s(
                    reciprocal_ring_family(cfg.seed + 1),
                    random_symmetric_unitary(cfg.seed + 2),
                ),
                grid,
            ),
        ),
        (
            "rigidity_generic.csv",
            rigidity_report(reciprocal_from_generator(seeded_generator(cfg.seed)), grid),
        ),
    ]
    header = ["phi", "T_pos", "T_neg", "s12sq_minus_s21sq", "identity_residual"]
    for filename, report in cases:
        path = os.path.join(cfg.out_dir, filename)
        _write_csv(
            path,
            header,
            zip(
                report.phis,
                report.t_pos,
                report.t_neg,
                report.s12sq_minus_s21sq,
                report.identity_residual,
            ),
        )
        print(
            f"wrote {path}: max asymmetry = {report.max_asymmetry:.6e}, "
            f"max identity residual = {report.max_identity_residual:.3e}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abring",
        description=(
            "Transmission, dephasing visibility, and phase-rigidity reports for a "
            "closed-loop Aharonov-Bohm interferometer with a charge detector."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = [
        ("sweep-phase", cmd_sweep_phase, "transmission vs flux phase for each overlap"),
        ("sweep-lambda", cmd_sweep_lambda, "visibility vs detector overlap"),
        ("verify", cmd_verify, "run the cross-validation suites"),
        ("rigidity", cmd_rigidity, "rigidity identity tables for seeded S-matrix families"),
    ]
    for name, func, help_text in commands:
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--config", metavar="PATH", default=None, help="config file path")
        sp.add_argument("--out", metavar="DIR", default=None, help="output directory override")
        sp.add_argument("--seed", metavar="INT", type=int, default=None, help="seed override")
        sp.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, out_dir=args.out, seed=args.seed)
        return args.func(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValidityError as exc:
        print(f"validity error: {exc}", file=sys.stderr)
        return EXIT_VALIDITY


if __name__ == "__main__":
    raise SystemExit(main())
