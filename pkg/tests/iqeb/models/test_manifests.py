from pathlib import Path

import pytest
from pydantic import ValidationError

from iqeb.models import load_sweep_manifest, parse_sweep_manifest, read_fixture_manifest


def test_fixture_manifest_resolves_paths(fixtures_dir: Path, h2_energies: tuple[float, float]) -> None:
    entries = read_fixture_manifest(fixtures_dir / "manifest.toml")
    h2 = entries["h2_0735"]

    assert h2.molecule == "H2"
    assert h2.basis == "sto-3g"
    assert h2.bond_length == 0.735
    assert (h2.scf_energy, h2.fci_energy) == h2_energies
    assert h2.fcidump == fixtures_dir / "h2_0.735.fcidump"
    assert h2.fcidump.is_file()


def test_parse_sweep_manifest_reads_points_and_name() -> None:
    text = """
    # molecule: LiH
    # bond_length fcidump scf fci
    1.0  lih_1.fcidump  -7.7  -7.8
    1.5  lih_1.5.fcidump  # no reference energies
    2.0  /data/lih_2.fcidump  -7.6
    """

    manifest = parse_sweep_manifest(text, base_dir=Path("/fixtures"))

    assert manifest.molecule == "LiH"
    assert [p.bond_length for p in manifest.points] == [1.0, 1.5, 2.0]
    assert manifest.points[0].fcidump == Path("/fixtures/lih_1.fcidump")
    assert manifest.points[2].fcidump == Path("/data/lih_2.fcidump")
    assert (manifest.points[0].scf_energy, manifest.points[0].fci_energy) == (-7.7, -7.8)
    assert (manifest.points[1].scf_energy, manifest.points[1].fci_energy) == (None, None)
    assert (manifest.points[2].scf_energy, manifest.points[2].fci_energy) == (-7.6, None)


def test_parse_sweep_manifest_reports_bad_lines() -> None:
    with pytest.raises(ValueError, match="Manifest line 2"):
        parse_sweep_manifest("1.0 a.fcidump\n1.5\n")
    with pytest.raises(ValueError, match="Manifest line 1"):
        parse_sweep_manifest("1.0 a.fcidump -1 -2 -3\n")


def test_sweep_needs_points_in_increasing_order() -> None:
    with pytest.raises(ValidationError):
        parse_sweep_manifest("# only comments\n")
    with pytest.raises(ValidationError, match="strictly increasing"):
        parse_sweep_manifest("2.0 a.fcidump\n1.0 b.fcidump\n")
    with pytest.raises(ValidationError):
        parse_sweep_manifest("0.0 a.fcidump\n")


def test_load_sweep_manifest_defaults_name_to_stem(tmp_path: Path, fixtures_dir: Path) -> None:
    path = tmp_path / "hydrogen.txt"
    path.write_text(f"0.735 {fixtures_dir / 'h2_0.735.fcidump'}\n")

    manifest = load_sweep_manifest(path)

    assert manifest.molecule == "hydrogen"
    assert manifest.points[0].fcidump.is_file()
    assert load_sweep_manifest(fixtures_dir / "h2_sweep.txt").molecule == "H2"


def test_load_sweep_manifest_needs_existing_files(tmp_path: Path) -> None:
    path = tmp_path / "sweep.txt"
    path.write_text("1.0 missing.fcidump\n")

    with pytest.raises(FileNotFoundError, match="missing.fcidump"):
        load_sweep_manifest(path)
