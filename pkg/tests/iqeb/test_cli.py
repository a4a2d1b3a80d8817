import csv
import json
from pathlib import Path

import pytest

from iqeb.cli import EXIT_INPUT, EXIT_NOT_CONVERGED, EXIT_OK, EXIT_POINT_FAILED, EXIT_USAGE, main, resource_rows
from iqeb.models import (
    ChosenElement,
    ExcitationKind,
    IterationRecord,
    Method,
    OutputFormat,
    RunRecord,
    Termination,
    write_run_record,
)


@pytest.fixture
def h2_fcidump(fixtures_dir: Path) -> Path:
    return fixtures_dir / "h2_0.735.fcidump"


def two_step_record() -> RunRecord:
    def element(slot: int) -> ChosenElement:
        return ChosenElement(kind=ExcitationKind.QUBIT_DOUBLE, indices=(0, 1, 2, 3), cnot_cost=13, slot=slot)

    return RunRecord(
        method=Method.IQEB,
        fixture="manual",
        e_hf=-1.0,
        e_fci=-1.2,
        iterations=[
            IterationRecord(m=1, chosen=[element(0)], grad=0.2, delta_e=0.1, energy=-1.1, n_params=1, n_cnots=13),
            IterationRecord(m=2, chosen=[element(1)], grad=0.1, delta_e=0.05, energy=-1.15, n_params=2, n_cnots=26),
            IterationRecord(m=3, grad=0.01, delta_e=0.0, energy=-1.15, n_params=2, n_cnots=26, accepted=False),
        ],
        termination=Termination.EPSILON_REACHED,
    )


def test_run_writes_a_record(h2_fcidump: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    out = tmp_path / "h2_iqeb"

    code = main(["run", "--fcidump", str(h2_fcidump), "--out", str(out), "--epsilon", "1e-8", "--threads", "1"])

    assert code == EXIT_OK
    data = json.loads((tmp_path / "h2_iqeb.json").read_text())
    assert data["method"] == "iqeb"
    assert data["iterations"][0]["chosen"][0]["indices"] == [0, 1, 2, 3]
    assert capsys.readouterr().out.startswith("iqeb: E=-1.13730603")


def test_run_writes_both_formats(h2_fcidump: Path, tmp_path: Path) -> None:
    out = tmp_path / "h2_adapt"

    code = main(["run", "--method", "adapt", "--fcidump", str(h2_fcidump), "--out", str(out), "--format", "both"])

    assert code == EXIT_OK
    assert (tmp_path / "h2_adapt.json").is_file()
    rows = list(csv.DictReader((tmp_path / "h2_adapt.csv").open()))
    assert rows[0]["chosen"].startswith("fermionic_double:")


def test_iteration_cap_exits_not_converged(h2_fcidump: Path, tmp_path: Path) -> None:
    args = ["run", "--fcidump", str(h2_fcidump), "--out", str(tmp_path / "capped"), "--max-iters", "1"]

    assert main(args) == EXIT_NOT_CONVERGED


def test_missing_fcidump_is_an_input_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["run", "--fcidump", str(tmp_path / "absent.fcidump"), "--out", str(tmp_path / "x")])

    assert code == EXIT_INPUT
    assert "iqeb: error:" in capsys.readouterr().err


def test_corrupt_fcidump_is_an_input_error(tmp_path: Path) -> None:
    path = tmp_path / "broken.fcidump"
    path.write_text("&FCI NORB=2,NELEC=2,\n&END\n 0.5 1 1 1 7\n")

    assert main(["fci", "--fcidump", str(path)]) == EXIT_INPUT


def test_complement_flag_only_applies_to_iqeb(h2_fcidump: Path, tmp_path: Path) -> None:
    args = ["run", "--method", "adapt", "--spin-complement", "on", "--fcidump", str(h2_fcidump)]

    assert main([*args, "--out", str(tmp_path / "x")]) == EXIT_USAGE


def test_invalid_settings_are_usage_errors(h2_fcidump: Path, tmp_path: Path) -> None:
    args = ["run", "--fcidump", str(h2_fcidump), "--out", str(tmp_path / "x"), "--top-n", "0"]

    assert main(args) == EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--method", "vqe", "--fcidump", "h2.fcidump"],
        ["run"],
        ["run", "--fcidump", "h2.fcidump", "--spin-complement", "maybe"],
        ["dissociation", "--manifest", "m.txt", "--methods", "iqeb,nope"],
        [],
    ],
)
def test_argument_errors_exit_with_usage(argv: list[str]) -> None:
    with pytest.raises(SystemExit) as exc:
        main(argv)

    assert exc.value.code == EXIT_USAGE


def test_fci_prints_reference_energies(
    h2_fcidump: Path, h2_energies: tuple[float, float], capsys: pytest.CaptureFixture[str]
) -> None:
    scf, fci = h2_energies

    assert main(["fci", "--fcidump", str(h2_fcidump)]) == EXIT_OK

    values = dict(line.split("=", 1) for line in capsys.readouterr().out.splitlines())
    assert values["n_qubits"] == "4"
    assert values["pauli_terms"] == "15"
    assert float(values["e_hf"]) == pytest.approx(scf, abs=1e-10)
    assert float(values["e_fci"]) == pytest.approx(fci, abs=1e-9)
    assert float(values["correlation"]) == pytest.approx(fci - scf, abs=1e-9)


def test_resource_rows_accumulate_accepted_iterations() -> None:
    rows = resource_rows(two_step_record())

    assert [(r["m"], r["n_params"], r["n_cnots"]) for r in rows] == [(1, 1, 13), (2, 2, 26)]
    assert rows[0]["chosen"] == "qubit_double:0-1-2-3"


def test_resources_command_prints_and_writes_tallies(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    (record,) = write_run_record(two_step_record(), tmp_path / "manual", OutputFormat.MSGPACK)
    out = tmp_path / "tallies.csv"

    assert main(["resources", "--record", str(record), "--out", str(out)]) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "m\tn_params\tn_cnots\tchosen"
    assert lines[-1] == "2\t2\t26\tqubit_double:0-1-2-3"
    assert list(csv.DictReader(out.open()))[-1]["n_cnots"] == "26"


def test_dissociation_writes_curve(h2_fcidump: Path, tmp_path: Path, h2_energies: tuple[float, float]) -> None:
    scf, fci = h2_energies
    manifest = tmp_path / "h2.txt"
    manifest.write_text(f"# molecule: H2\n0.735 {h2_fcidump}\n")
    out_dir = tmp_path / "curves"

    code = main(["dissociation", "--manifest", str(manifest), "--methods", "hf,fci,uccsd", "--out-dir", str(out_dir)])

    assert code == EXIT_OK
    (row,) = csv.DictReader((out_dir / "H2_curve.csv").open())
    assert float(row["bond_length"]) == 0.735
    assert float(row["e_hf"]) == pytest.approx(scf, abs=1e-10)
    assert float(row["error_fci"]) == 0.0
    assert float(row["error_uccsd"]) == pytest.approx(0.0, abs=1e-6)
    assert row["params_uccsd"] == "3"
    assert (out_dir / "H2_0.735_uccsd.json").is_file()


def test_dissociation_continues_past_a_failed_point(h2_fcidump: Path, tmp_path: Path) -> None:
    broken = tmp_path / "broken.fcidump"
    broken.write_text("not an fcidump\n")
    manifest = tmp_path / "sweep.txt"
    manifest.write_text(f"# molecule: H2\n0.735 {h2_fcidump}\n1.0 {broken}\n")
    out_dir = tmp_path / "curves"

    code = main(["dissociation", "--manifest", str(manifest), "--methods", "hf,fci", "--out-dir", str(out_dir)])

    assert code == EXIT_POINT_FAILED
    rows = list(csv.DictReader((out_dir / "H2_curve.csv").open()))
    assert len(rows) == 2
    assert rows[0]["e_fci"] != "nan"
    assert rows[1]["e_hf"] == "nan"


def test_empty_manifest_is_a_usage_error(tmp_path: Path) -> None:
    manifest = tmp_path / "empty.txt"
    manifest.write_text("# molecule: H2\n")

    assert main(["dissociation", "--manifest", str(manifest), "--out-dir", str(tmp_path)]) == EXIT_USAGE
