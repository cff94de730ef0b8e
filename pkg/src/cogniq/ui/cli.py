"""Define the ``cogniq`` command-line interface.

Every subcommand reads a dataset (a bundled one by default), runs one
analysis and writes a JSON report. Exit codes are 0 on success, 1 when inputs
are invalid (a JSON description of the error is written on standard error),
2 when a fit did not converge (the report is still written).

"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import pandas as pd

from cogniq.bloch.fit_membrane import MembraneFitSettings, fit_membrane
from cogniq.bloch.membranes import UniformMembrane
from cogniq.bloch.replicability import (
    replicability_agreement,
    simulate_replicability,
)
from cogniq.bloch.universal import universal_sweep
from cogniq.config.config_manager import load_settings
from cogniq.constants import (
    DEFAULT_SEED,
    Q_MAX,
    clinton_gore,
    example_membership,
    singlet_correlations,
)
from cogniq.core.errors import ContractViolation
from cogniq.fock.chsh import chsh_value, classical_chsh_bound
from cogniq.fock.extension import fock_batch, mean_deviation
from cogniq.fock.statistics import identical_concepts_distributions
from cogniq.io.datasets import Dataset, load_dataset
from cogniq.io.report import (
    Report,
    error_document,
    inputs_digest,
    write_report,
    write_sweep,
)
from cogniq.order_effects.diagnostics import (
    compute_q,
    compute_q_prime,
    conditional_probabilities,
    first_question_marginals,
    order_effect_sizes,
)
from cogniq.order_effects.fit_hilbert import FitSettings, fit_hilbert_2d
from cogniq.order_effects.sequential_table import SequentialTable
from cogniq.util.log_manager import set_up_logging


@dataclass
class Outcome:
    """What a subcommand computed.

    Parameters
    ----------
    results : dict[str, Any]
        Named values of the report.
    raw : bytes
        Content of the input dataset, for the digest.
    flags : dict[str, Any]
        Effective settings, for the digest.
    table : pandas.DataFrame | None, optional
        Tabular results, written with ``--format csv`` or ``--emit-sweep``.
    converged : bool, optional
        False if a fit did not converge.

    """

    results: dict[str, Any]
    raw: bytes
    flags: dict[str, Any] = field(default_factory=dict)
    table: pd.DataFrame | None = None
    converged: bool = True


def _load(args: argparse.Namespace, default: Any, kind: str) -> Dataset:
    """Load ``--input``, or the bundled ``default`` dataset."""
    path = default if args.input is None else Path(args.input)
    return load_dataset(path, kind)


def _overrides(args: argparse.Namespace) -> dict[str, dict[str, Any]]:
    """Give the configuration entries set by explicit flags."""
    flags = {
        "fit_hilbert": {"restarts": args.restarts},
        "fit_membrane": {"restarts": args.restarts, "tol": args.tol},
        "universal": {"samples": args.samples},
        "replicability": {
            "participants": args.participants,
            "policy": args.policy,
            "membrane": args.membrane,
            "sequence": (
                None if args.sequence is None else args.sequence.split(",")
            ),
        },
    }
    return {
        table: {key: val for key, val in entries.items() if val is not None}
        for table, entries in flags.items()
    }


def run_diagnose(args: argparse.Namespace, config: dict) -> Outcome:
    """Diagnose the order effects of a sequential table."""
    dataset = _load(args, clinton_gore, "sequential")
    table = dataset.payload
    q = compute_q(table)
    q_prime = compute_q_prime(table)
    results = {
        "table": table.to_dict(),
        "q": q,
        "q_abs": abs(q),
        "q_fraction_of_max": abs(q) / Q_MAX,
        "q_prime": q_prime.value,
        "q_prime_ratio": q_prime.ratio,
        "marginals": first_question_marginals(table),
        "conditionals": conditional_probabilities(table),
        "order_effect_sizes": order_effect_sizes(table),
    }
    return Outcome(results, dataset.raw)


def _target_diagnostics(table: SequentialTable) -> dict[str, float]:
    return {
        "target_q": compute_q(table),
        "target_q_prime": compute_q_prime(table).value,
    }


def run_fit_hilbert(args: argparse.Namespace, config: dict) -> Outcome:
    """Fit a 2D Hilbert model with rank-1 projectors."""
    dataset = _load(args, clinton_gore, "sequential")
    settings = FitSettings(**config["fit_hilbert"], seed=args.seed)
    report = fit_hilbert_2d(dataset.payload, settings)
    results = report.to_dict() | _target_diagnostics(dataset.payload)
    return Outcome(
        results,
        dataset.raw,
        flags=config["fit_hilbert"],
        converged=report.converged,
    )


def _membrane_settings(
    args: argparse.Namespace, config: dict
) -> MembraneFitSettings:
    return MembraneFitSettings(**config["fit_membrane"], seed=args.seed)


def run_fit_membrane(args: argparse.Namespace, config: dict) -> Outcome:
    """Fit interval membranes and geometry."""
    dataset = _load(args, clinton_gore, "sequential")
    report = fit_membrane(dataset.payload, _membrane_settings(args, config))
    results = report.to_dict() | _target_diagnostics(dataset.payload)
    return Outcome(
        results,
        dataset.raw,
        flags=config["fit_membrane"],
        converged=report.converged,
    )


def run_simulate_replicability(
    args: argparse.Namespace, config: dict
) -> Outcome:
    """Fit membranes, then simulate participants answering a sequence."""
    dataset = _load(args, clinton_gore, "sequential")
    report = fit_membrane(dataset.payload, _membrane_settings(args, config))
    settings = config["replicability"]
    model = report.model
    if settings["membrane"] == "uniform":
        model = replace(
            model, membrane_a=UniformMembrane(), membrane_b=UniformMembrane()
        )
    stats = simulate_replicability(
        model,
        sequence=settings["sequence"],
        participants=settings["participants"],
        policy=settings["policy"],
        seed=args.seed,
    )
    results: dict[str, Any] = {
        "model": model.to_dict(),
        "fit_residual": report.residual,
        "simulation": stats.to_dict(),
    }
    sequence = stats.sequence
    if len(sequence) == 3 and sequence[0] == sequence[2] != sequence[1]:
        results["memoryless_agreement"] = replicability_agreement(
            model, sequence[0], sequence[1]
        )
    return Outcome(
        results,
        dataset.raw,
        flags=config["fit_membrane"] | settings,
        converged=report.converged,
    )


def run_universal(args: argparse.Namespace, config: dict) -> Outcome:
    """Compare the universal average with the Born rule."""
    settings = config["universal"]
    sweep = universal_sweep(
        samples=settings["samples"],
        seed=args.seed,
        grid_points=settings["grid_points"],
        max_cells=settings["max_cells"],
        weight_distribution=settings["weight_distribution"],
    )
    results = {
        "sweep": sweep.to_dict(orient="records"),
        "max_abs_difference": float(sweep["difference"].abs().max()),
    }
    return Outcome(results, b"", flags=settings, table=sweep)


def run_fock(args: argparse.Namespace, config: dict) -> Outcome:
    """Classify and model every membership record."""
    dataset = _load(args, example_membership, "membership")
    records = dataset.payload
    batch = fock_batch(records)
    results: dict[str, Any] = {"records": batch.to_dict(orient="records")}
    for combination in ("conjunction", "disjunction"):
        subset = [r for r in records if r.combination == combination]
        if subset:
            results[f"mean_deviation_{combination}"] = mean_deviation(subset)
    return Outcome(results, dataset.raw, table=batch)


def run_chsh(args: argparse.Namespace, config: dict) -> Outcome:
    """Evaluate the CHSH expression of four joint tables."""
    dataset = _load(args, singlet_correlations, "correlations")
    correlations = dataset.payload
    results = {
        "correlations": {
            key: value
            for key, value in zip(
                ("E_11", "E_12", "E_21", "E_22"), correlations.as_tuple()
            )
        },
        "chsh": chsh_value(correlations).to_dict(),
        "classical_bound": classical_chsh_bound(),
    }
    return Outcome(results, dataset.raw)


def run_stats_be_mb(args: argparse.Namespace, config: dict) -> Outcome:
    """Compare Maxwell-Boltzmann and Bose-Einstein statistics."""
    raw = b""
    n_entities, n_cells = args.N, args.M
    counts: Any = None
    if args.input is not None:
        dataset = load_dataset(Path(args.input), "occupation_counts")
        raw = dataset.raw
        n_entities = dataset.payload.n_entities
        n_cells = dataset.payload.n_cells
        counts = dataset.payload.counts or None
    if args.counts is not None:
        try:
            counts = [int(c) for c in args.counts.split(",")]
        except ValueError:
            raise ContractViolation(f"Invalid --counts {args.counts!r}")
    if n_entities is None or n_cells is None:
        raise ContractViolation("Give --N and --M, or an --input file.")

    distributions = identical_concepts_distributions(
        n_entities,
        n_cells,
        counts=counts,
        max_configurations=config["statistics"]["max_configurations"],
    )
    table = pd.DataFrame(
        {
            "configuration": distributions.to_dict()["configurations"],
            "maxwell_boltzmann": distributions.maxwell_boltzmann,
            "bose_einstein": distributions.bose_einstein,
        }
    )
    flags = {"N": n_entities, "M": n_cells, "counts": args.counts}
    return Outcome(distributions.to_dict(), raw, flags=flags, table=table)


COMMANDS: dict[
    str, Callable[[argparse.Namespace, dict[str, dict[str, Any]]], Outcome]
] = {
    "diagnose": run_diagnose,
    "fit-hilbert": run_fit_hilbert,
    "fit-membrane": run_fit_membrane,
    "simulate-replicability": run_simulate_replicability,
    "universal": run_universal,
    "fock": run_fock,
    "chsh": run_chsh,
    "stats-be-mb": run_stats_be_mb,
}


def _common_parser() -> argparse.ArgumentParser:
    """Define the flags shared by every subcommand."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        "--input",
        help="Dataset to analyse. If not provided, a bundled example is used.",
        type=str,
        default=None,
    )
    parser.add_argument(
        "--format",
        help="Write the JSON report, or the tabular results as CSV.",
        choices=("json", "csv"),
        default="json",
    )
    parser.add_argument(
        "--seed",
        help=f"Root seed of every random generator (default {DEFAULT_SEED}).",
        type=int,
        default=DEFAULT_SEED,
    )
    parser.add_argument(
        "--samples",
        help="Number of random membranes per grid point (default 100000).",
        type=int,
    )
    parser.add_argument(
        "--tol",
        help="Residual below which a membrane fit converged (default 1e-4).",
        type=float,
    )
    parser.add_argument(
        "--restarts",
        help="Number of starting points of the fits (default 32).",
        type=int,
    )
    parser.add_argument(
        "--participants",
        help="Number of simulated participants (default 10000).",
        type=int,
    )
    parser.add_argument(
        "--sequence",
        help="Comma-separated questions, e.g. G,C,G (the default).",
        type=str,
    )
    parser.add_argument(
        "--policy",
        help="If answered questions keep their answer (default memory).",
        choices=("memory", "memoryless"),
    )
    parser.add_argument(
        "--membrane",
        help="Simulate the fitted membranes, or uniform ones (the Born "
        "rule) on the fitted geometry (default fitted).",
        choices=("fitted", "uniform"),
    )
    parser.add_argument("--N", help="Number of entities.", type=int)
    parser.add_argument("--M", help="Number of cells.", type=int)
    parser.add_argument(
        "--counts",
        help="Comma-separated observed counts, one per configuration.",
        type=str,
    )
    parser.add_argument(
        "--output",
        help="Where to write the report. Standard output if not provided.",
        type=str,
    )
    parser.add_argument(
        "--emit-sweep",
        help="Where to write tabular results as CSV.",
        type=str,
    )
    parser.add_argument(
        "--config",
        help="TOML configuration. The bundled one if not provided.",
        type=str,
    )
    parser.add_argument(
        "--log-level",
        help="Console log level (default WARNING).",
        default="WARNING",
        type=str.upper,
        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
    )
    parser.add_argument("--log-file", help="Also log in this file.", type=str)
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Create the parser of the ``cogniq`` command."""
    parser = argparse.ArgumentParser(
        "cogniq",
        description="Quantum models of human judgement: order effects, "
        "membranes, concept combinations.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_parser()
    for name, handler in COMMANDS.items():
        subparsers.add_parser(name, parents=[common], help=handler.__doc__)
    return parser


def _write_outputs(
    args: argparse.Namespace, report: Report, outcome: Outcome
) -> None:
    """Write the report, and the table if asked."""
    output = None if args.output is None else Path(args.output)
    if args.emit_sweep is not None:
        if outcome.table is None:
            raise ContractViolation(f"{args.command} has no tabular results")
        write_sweep(outcome.table, Path(args.emit_sweep))

    if args.format == "json":
        write_report(report, output)
        return
    if outcome.table is None:
        raise ContractViolation(f"{args.command} has no tabular results")
    if output is None:
        outcome.table.to_csv(sys.stdout, index=False)
        return
    write_sweep(outcome.table, output)


def run(args: argparse.Namespace) -> int:
    """Execute the subcommand; let validation errors propagate."""
    config = load_settings(args.config, override=_overrides(args))
    outcome = COMMANDS[args.command](args, config)
    report = Report(
        command=args.command,
        inputs_digest=inputs_digest(
            outcome.raw, outcome.flags | {"seed": args.seed}
        ),
        results=outcome.results,
        seed=args.seed,
    )
    _write_outputs(args, report, outcome)
    if not outcome.converged:
        logging.warning(f"{args.command} did not converge")
        return 2
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    """Parse the command line and run it.

    Returns
    -------
    int
        The exit code.

    """
    args = build_parser().parse_args(argv)
    set_up_logging(
        console_log_level=args.log_level,
        logfile_file=None if args.log_file is None else Path(args.log_file),
    )
    try:
        return run(args)
    except (ValueError, ArithmeticError, OSError) as e:
        logging.error(f"{e.__class__.__name__}: {e}")
        sys.stderr.write(error_document(e) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
