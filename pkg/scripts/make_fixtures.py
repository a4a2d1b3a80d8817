"""Generate STO-3G FCIDUMP fixtures and their manifest tables.

Needs PySCF, which is not a dependency of the package:

    uv run --with pyscf python scripts/make_fixtures.py all
    uv run --with pyscf python scripts/make_fixtures.py lih 1.546 3.0
    uv run --with pyscf python scripts/make_fixtures.py h2 --grid 0.5 2.5 0.1

``all`` writes the full fixture set with ``manifest.toml`` and the
dissociation manifests. Otherwise the TOML tables are printed on stdout and
``--sweep`` also writes a dissociation manifest next to the FCIDUMP files.
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

import numpy as np
from pyscf import fci, gto, scf
from pyscf.tools import fcidump

log = logging.getLogger("make_fixtures")

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

GEOMETRIES = {
    "h2": ("H2", lambda d: f"H 0 0 0; H 0 0 {d}"),
    "lih": ("LiH", lambda d: f"Li 0 0 0; H 0 0 {d}"),
    "beh2": ("BeH2", lambda d: f"Be 0 0 0; H 0 0 {d}; H 0 0 {-d}"),
}

# bond lengths of the checked-in set, and whether each molecule gets a sweep manifest
FIXTURE_SET = {
    "h2": ([0.735], (0.5, 2.5, 0.1), True),
    "lih": ([1.546, 3.0], (1.0, 4.0, 0.25), True),
    "beh2": ([1.316, 3.0], None, False),
}

MANIFEST_HEADER = """\
# FCIDUMP fixtures, STO-3G.
# Regenerate with `uv run --with pyscf python scripts/make_fixtures.py all`.
# Energies in Hartree, nuclear repulsion included.
"""


def grid(start: float, stop: float, step: float) -> list[float]:
    return [round(float(d), 6) for d in np.arange(start, stop + step / 2, step)]


def make_fixture(name: str, bond_length: float, out_dir: Path, with_fci: bool = True) -> str:
    molecule, geometry = GEOMETRIES[name]
    mol = gto.M(atom=geometry(bond_length), basis="sto-3g", unit="Angstrom", verbose=0)
    mf = scf.RHF(mol).run()
    path = out_dir / f"{name}_{bond_length:g}.fcidump"
    fcidump.from_scf(mf, str(path), tol=1e-15)
    table = [
        f"[{name}_{round(bond_length * 1000):04d}]",
        f'fcidump = "{path.name}"',
        f'molecule = "{molecule}"',
        f"bond_length = {bond_length:g}",
        f"scf_energy = {mf.e_tot!r}",
    ]
    if with_fci:
        e_fci = fci.FCI(mf).kernel()[0]
        table.append(f"fci_energy = {e_fci!r}")
    table.append('source = "PySCF RHF/FCI, STO-3G"')
    log.info("Wrote fixture", extra={"path": str(path), "scf_energy": mf.e_tot})
    return "\n".join(table)


def write_sweep(name: str, lengths: list[float], out_dir: Path) -> Path:
    sweep = out_dir / f"{name}_sweep.txt"
    lines = [f"# molecule: {GEOMETRIES[name][0]}"]
    lines += [f"{d:g}  {name}_{d:g}.fcidump" for d in lengths]
    sweep.write_text("\n".join(lines) + "\n")
    return sweep


def make_all(out_dir: Path) -> None:
    tables = []
    for name, (points, span, sweep) in FIXTURE_SET.items():
        lengths = sorted(set(points + (grid(*span) if span else [])))
        tables += [make_fixture(name, d, out_dir) for d in lengths]
        if sweep:
            write_sweep(name, lengths, out_dir)
    (out_dir / "manifest.toml").write_text(MANIFEST_HEADER + "\n" + "\n\n".join(tables) + "\n")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("molecule", choices=[*sorted(GEOMETRIES), "all"])
    parser.add_argument("bond_lengths", type=float, nargs="*", help="Angstrom")
    parser.add_argument("--grid", type=float, nargs=3, metavar=("START", "STOP", "STEP"))
    parser.add_argument("--out-dir", type=Path, default=FIXTURES)
    parser.add_argument("--no-fci", action="store_true", help="skip the FCI reference energy")
    parser.add_argument("--sweep", action="store_true", help="also write <molecule>_sweep.txt")
    args = parser.parse_args()
    logging.basicConfig(level="INFO")
    args.out_dir.mkdir(parents=True, exist_ok=True)

    if args.molecule == "all":
        make_all(args.out_dir)
        return

    lengths = list(args.bond_lengths)
    if args.grid:
        lengths += grid(*args.grid)
    if not lengths:
        parser.error("give bond lengths or --grid")
    lengths = sorted(set(lengths))
    tables = [make_fixture(args.molecule, d, args.out_dir, not args.no_fci) for d in lengths]
    print("\n\n".join(tables))
    if args.sweep:
        write_sweep(args.molecule, lengths, args.out_dir)


if __name__ == "__main__":
    main()
