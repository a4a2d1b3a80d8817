"""Fixture and dissociation-sweep manifests."""

import tomllib
from pathlib import Path
from typing import Self

from pydantic import BaseModel, Field, model_validator

from .types import Angstrom


class FixtureEntry(BaseModel):
    """Provenance and reference energies of one FCIDUMP fixture."""

    name: str
    fcidump: Path
    molecule: str
    basis: str = "sto-3g"
    bond_length: Angstrom
    scf_energy: float | None = Field(None, description="SCF energy (Hartree), core included")
    fci_energy: float | None = Field(None, description="FCI energy (Hartree), core included")
    source: str = Field("", description="Program and version that produced the integrals")


class SweepPoint(BaseModel):
    bond_length: Angstrom
    fcidump: Path
    scf_energy: float | None = None
    fci_energy: float | None = None


class SweepManifest(BaseModel):
    """Geometries of one dissociation curve."""

    molecule: str
    points: list[SweepPoint] = Field(min_length=1)

    @model_validator(mode="after")
    def check_increasing(self) -> Self:
        lengths = [p.bond_length for p in self.points]
        if any(b <= a for a, b in zip(lengths, lengths[1:])):
            raise ValueError(f"Bond lengths must be strictly increasing, got {lengths}")
        return self


def read_fixture_manifest(path: str | Path) -> dict[str, FixtureEntry]:
    """Read a TOML fixture manifest, one table per fixture.

    ``fcidump`` paths are resolved against the manifest's directory.
    """
    path = Path(path)
    with path.open("rb") as fh:
        raw = tomllib.load(fh)
    entries: dict[str, FixtureEntry] = {}
    for name, table in raw.items():
        entry = FixtureEntry.model_validate({"name": name, **table})
        entries[name] = entry.model_copy(update={"fcidump": path.parent / entry.fcidump})
    return entries


def parse_sweep_manifest(text: str, *, base_dir: Path | None = None, molecule: str = "") -> SweepManifest:
    """Parse ``<bond_length> <fcidump> [scf_energy] [fci_energy]`` lines.

    ``#`` starts a comment. A ``# molecule: NAME`` comment names the curve.
    """
    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            key, _, value = stripped.lstrip("#").partition(":")
            if key.strip().lower() == "molecule" and value.strip():
                molecule = value.strip()
            continue
        fields = stripped.split("#", 1)[0].split()
        if not fields:
            continue
        if not 2 <= len(fields) <= 4:
            raise ValueError(f"Manifest line {lineno}: expected 2 to 4 fields, got {len(fields)}")
        fcidump = Path(fields[1])
        if base_dir is not None and not fcidump.is_absolute():
            fcidump = base_dir / fcidump
        energies = [float(f) for f in fields[2:]] + [None, None]
        points.append(
            SweepPoint(bond_length=float(fields[0]), fcidump=fcidump, scf_energy=energies[0], fci_energy=energies[1])
        )
    return SweepManifest(molecule=molecule or "molecule", points=points)


def load_sweep_manifest(path: str | Path) -> SweepManifest:
    """Read a sweep manifest and check every FCIDUMP it names is readable."""
    path = Path(path)
    manifest = parse_sweep_manifest(path.read_text(), base_dir=path.parent, molecule=path.stem)
    for point in manifest.points:
        if not point.fcidump.is_file():
            raise FileNotFoundError(f"Sweep point {point.bond_length} Å: no such FCIDUMP {point.fcidump}")
    return manifest
