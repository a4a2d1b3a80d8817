"""Command-line entry point.

Exit codes: 0 success, 1 a dissociation point failed, 2 usage or invalid
settings, 3 unreadable or inconsistent input files, 4 no convergence.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from .errors import ConvergenceError, FcidumpParseError, IntegralIntegrityError
from .growth import gradient_greedy_run, iqeb_run, reference_energies, uccsd_run
from .models import (
    GrowthConfig,
    Method,
    OptimizerSettings,
    OutputFormat,
    PoolKind,
    RunRecord,
    Selection,
    Termination,
    load_sweep_manifest,
    read_run_record,
    write_run_record,
)
from .operators import MolecularIntegrals, PauliSum, qubit_hamiltonian, read_fcidump

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_POINT_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_NOT_CONVERGED = 4

GROWTH_METHODS = (
    Method.IQEB,
    Method.ADAPT,
    Method.QUBIT_ADAPT,
    Method.GREEDY_QUBIT,
    Method.GREEDY_FERMIONIC,
    Method.UCCSD,
)

POOL_BY_METHOD = {
    Method.IQEB: PoolKind.QUBIT,
    Method.ADAPT: PoolKind.FERMIONIC_PAIRS,
    Method.QUBIT_ADAPT: PoolKind.PAULI_EXPONENTIAL,
    Method.GREEDY_QUBIT: PoolKind.QUBIT,
    Method.GREEDY_FERMIONIC: PoolKind.FERMIONIC,
}


class UsageError(Exception):
    pass


def _on_off(value: str) -> bool:
    match value.lower():
        case "on":
            return True
        case "off":
            return False
    raise argparse.ArgumentTypeError(f"expected on or off, got {value!r}")


def _methods(value: str) -> list[Method]:
    try:
        return [Method(v.strip()) for v in value.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def load_problem(path: Path) -> tuple[MolecularIntegrals, PauliSum]:
    ints = read_fcidump(path)
    return ints, qubit_hamiltonian(ints)


def growth_config(method: Method, args: argparse.Namespace) -> GrowthConfig:
    complement = method is Method.IQEB and args.spin_complement is not False
    return GrowthConfig(
        pool_kind=POOL_BY_METHOD[method],
        selection=Selection.TOP_N_ENERGY_REDUCTION if method is Method.IQEB else Selection.LARGEST_GRADIENT,
        n=args.top_n,
        epsilon=args.epsilon,
        spin_complement_append=complement,
        max_iterations=args.max_iters,
        threads=args.threads,
        optimizer=OptimizerSettings(),
    )


def simulate(
    method: Method,
    ints: MolecularIntegrals,
    h: PauliSum,
    args: argparse.Namespace,
    *,
    fixture: str,
    references: tuple[float, float] | None = None,
) -> RunRecord:
    if method is Method.UCCSD:
        return uccsd_run(h, ints, fixture=fixture, references=references, seed=args.seed)
    config = growth_config(method, args)
    runner = iqeb_run if method is Method.IQEB else gradient_greedy_run
    return runner(h, ints, config, fixture=fixture, method=method, references=references, seed=args.seed)


# ---- commands -----------------------------------------------------------


def cmd_run(args: argparse.Namespace) -> int:
    if args.spin_complement and args.method is not Method.IQEB:
        raise UsageError(f"--spin-complement on only applies to iqeb, not {args.method.value}")
    ints, h = load_problem(args.fcidump)
    record = simulate(args.method, ints, h, args, fixture=str(args.fcidump))
    out = args.out or Path(f"{args.fcidump.stem}_{args.method.value}")
    for path in write_run_record(record, out, args.format):
        log.info("Wrote run record", extra={"path": str(path)})
    print(record.summary())
    if record.termination is Termination.MAX_ITERATIONS:
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def _curve_columns(methods: Sequence[Method]) -> list[str]:
    columns = ["bond_length"]
    for method in methods:
        columns += [f"e_{method.value}", f"error_{method.value}", f"params_{method.value}"]
    return columns


def cmd_dissociation(args: argparse.Namespace) -> int:
    manifest = load_sweep_manifest(args.manifest)
    methods: list[Method] = args.methods
    out_dir: Path = args.out_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    failed = 0
    for point in manifest.points:
        row: dict[str, float | int | str] = {"bond_length": point.bond_length}
        try:
            ints, h = load_problem(point.fcidump)
            e_hf, e_fci = reference_energies(h, ints)
            for method in methods:
                if method.is_reference:
                    energy, params = (e_hf if method is Method.HF else e_fci), 0
                else:
                    record = simulate(method, ints, h, args, fixture=str(point.fcidump), references=(e_hf, e_fci))
                    write_run_record(
                        record, out_dir / f"{manifest.molecule}_{point.bond_length:g}_{method.value}", args.format
                    )
                    energy, params = record.final_energy, record.n_params
                row[f"e_{method.value}"] = energy
                row[f"error_{method.value}"] = energy - e_fci
                row[f"params_{method.value}"] = params
        except Exception:
            failed += 1
            log.exception("Sweep point failed", extra={"bond_length": point.bond_length, "fcidump": str(point.fcidump)})
        rows.append(row)

    curve = out_dir / f"{manifest.molecule}_curve.csv"
    with curve.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=_curve_columns(methods), restval="nan", lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: f"{v:.12g}" if isinstance(v, float) else v for k, v in row.items()})
    print(f"{manifest.molecule}: {len(rows) - failed}/{len(rows)} points -> {curve}")
    return EXIT_POINT_FAILED if failed else EXIT_OK


def cmd_fci(args: argparse.Namespace) -> int:
    ints, h = load_problem(args.fcidump)
    e_hf, e_fci = reference_energies(h, ints)
    print(f"n_qubits={ints.n_qubits}")
    print(f"pauli_terms={len(h)}")
    print(f"e_hf={e_hf:.12g}")
    print(f"e_fci={e_fci:.12g}")
    print(f"correlation={e_fci - e_hf:.12g}")
    return EXIT_OK


def resource_rows(record: RunRecord) -> list[dict[str, int | str]]:
    """Cumulative parameter and CNOT tallies after each accepted iteration."""
    rows = []
    slots: set[int] = set()
    cnots = 0
    for iteration in record.accepted:
        for element in iteration.chosen:
            slots.add(element.slot)
            cnots += element.cnot_cost
        rows.append(
            {
                "m": iteration.m,
                "chosen": ";".join(c.label() for c in iteration.chosen),
                "n_params": len(slots),
                "n_cnots": cnots,
            }
        )
    return rows


def cmd_resources(args: argparse.Namespace) -> int:
    record = read_run_record(args.record)
    rows = resource_rows(record)
    fields = ["m", "n_params", "n_cnots", "chosen"]
    if args.out is not None:
        with args.out.open("w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    writer = csv.DictWriter(sys.stdout, fieldnames=fields, delimiter="\t", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return EXIT_OK


# ---- parser -------------------------------------------------------------


def _add_growth_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--epsilon", type=float, default=1e-6, help="exit threshold (default 1e-6)")
    parser.add_argument("--top-n", type=int, default=10, help="candidates minimized per iteration")
    parser.add_argument(
        "--spin-complement", type=_on_off, default=None, metavar="{on,off}", help="default on for iqeb"
    )
    parser.add_argument("--max-iters", type=int, default=200)
    parser.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    parser.add_argument("--seed", type=int, default=None, help="recorded only; runs are deterministic")
    parser.add_argument(
        "--format",
        type=OutputFormat,
        default=OutputFormat.JSON,
        choices=list(OutputFormat),
        metavar="{json,csv,msgpack,both}",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iqeb", description=__doc__.splitlines()[0])
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("-v", "--verbose", action="store_true", help="shortcut for --log-level INFO")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="one adaptive or UCCSD simulation")
    run.add_argument("--method", type=Method, choices=GROWTH_METHODS, default=Method.IQEB, metavar="METHOD")
    run.add_argument("--fcidump", type=Path, required=True)
    run.add_argument("--out", type=Path, default=None)
    _add_growth_flags(run)
    run.set_defaults(handler=cmd_run)

    sweep = commands.add_parser("dissociation", help="energies along a bond-length sweep")
    sweep.add_argument("--manifest", type=Path, required=True)
    sweep.add_argument("--methods", type=_methods, default=[Method.IQEB, Method.UCCSD, Method.HF, Method.FCI])
    sweep.add_argument("--out-dir", type=Path, default=Path("."))
    _add_growth_flags(sweep)
    sweep.set_defaults(handler=cmd_dissociation)

    fci = commands.add_parser("fci", help="Hartree-Fock and exact ground energies")
    fci.add_argument("--fcidump", type=Path, required=True)
    fci.set_defaults(handler=cmd_fci)

    resources = commands.add_parser("resources", help="cumulative parameters and CNOTs of a run record")
    resources.add_argument("--record", type=Path, required=True)
    resources.add_argument("--out", type=Path, default=None, help="also write the tallies as CSV")
    resources.set_defaults(handler=cmd_resources)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level="INFO" if args.verbose and args.log_level == "WARNING" else args.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except (UsageError, ValidationError) as exc:
        print(f"iqeb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FcidumpParseError, IntegralIntegrityError, OSError) as exc:
        print(f"iqeb: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceError as exc:
        print(f"iqeb: error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    except ValueError as exc:
        print(f"iqeb: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
