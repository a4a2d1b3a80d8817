"""Molpro-convention FCIDUMP files.

Header ``&FCI NORB=..,NELEC=..,MS2=.., ... &END`` (or ``/``), then lines
``value i j k l`` with 1-based spatial indices:

- ``i = j = k = l = 0``: core energy
- ``k = l = 0``: one-body ``h_ij``
- all nonzero: chemists' ``(ij|kl)``

Lines ``value i 0 0 0`` (orbital energies) are accepted and ignored.
"""

from __future__ import annotations

import io
import itertools
import logging
import re
from collections.abc import Iterable
from pathlib import Path
from typing import TextIO

import numpy as np

from ..errors import FcidumpParseError, IntegralIntegrityError
from .fermion import SYMMETRY_TOLERANCE, MolecularIntegrals

log = logging.getLogger(__name__)

DEFAULT_FLOAT_FORMAT = " %.16g"

_KEY = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\s*=")


def _header_fields(header: str) -> dict[str, list[str]]:
    body = header.strip()
    if not body.upper().startswith("&FCI"):
        raise FcidumpParseError("Header must start with &FCI", field="&FCI", line=1)
    body = body[4:]
    keys = list(_KEY.finditer(body))
    fields: dict[str, list[str]] = {}
    for key, nxt in zip(keys, keys[1:] + [None]):
        raw = body[key.end() : nxt.start() if nxt else len(body)]
        fields[key.group(1).upper()] = [v for v in re.split(r"[,\s]+", raw) if v]
    return fields


def _int_field(fields: dict[str, list[str]], name: str, default: int | None = None) -> int:
    values = fields.get(name)
    if values is None:
        if default is None:
            raise FcidumpParseError(f"Missing header field {name}", field=name)
        return default
    if len(values) != 1:
        raise FcidumpParseError(f"Header field {name} expects one integer, got {values}", field=name)
    try:
        return int(values[0])
    except ValueError:
        raise FcidumpParseError(f"Header field {name} is not an integer: {values[0]!r}", field=name) from None


def _split_header(lines: list[str]) -> tuple[str, int]:
    """Return the header text and the index of the first data line."""
    collected = []
    for n, line in enumerate(lines):
        upper = line.upper()
        if "&END" in upper:
            collected.append(line[: upper.index("&END")])
            return " ".join(collected), n + 1
        if line.strip().endswith("/"):
            collected.append(line.strip()[:-1])
            return " ".join(collected), n + 1
        collected.append(line)
    raise FcidumpParseError("Header is not terminated by &END or /", field="&END")


class _Table:
    """Integral table filled through its symmetry orbit with duplicate checks."""

    def __init__(self, shape: tuple[int, ...]):
        self.values = np.zeros(shape)
        self.filled = np.zeros(shape, dtype=bool)

    def set(self, orbit: Iterable[tuple[int, ...]], value: float, lineno: int) -> None:
        for idx in set(orbit):
            if self.filled[idx] and abs(self.values[idx] - value) > SYMMETRY_TOLERANCE:
                raise IntegralIntegrityError(
                    f"Line {lineno}: integral {tuple(i + 1 for i in idx)} = {value} "
                    f"conflicts with earlier value {self.values[idx]}"
                )
            self.values[idx] = value
            self.filled[idx] = True


def parse_fcidump(text: str | TextIO) -> MolecularIntegrals:
    """Parse FCIDUMP text, expanding every stored entry over its 8-fold symmetry orbit."""
    if not isinstance(text, str):
        text = text.read()
    lines = text.splitlines()
    header, start = _split_header(lines)
    fields = _header_fields(header)
    norb = _int_field(fields, "NORB")
    nelec = _int_field(fields, "NELEC")
    ms2 = _int_field(fields, "MS2", default=0)
    if norb < 1:
        raise FcidumpParseError(f"NORB must be positive, got {norb}", field="NORB")
    if not 0 < nelec <= 2 * norb:
        raise FcidumpParseError(f"NELEC must be in (0, {2 * norb}], got {nelec}", field="NELEC")
    orbsym = tuple(int(v) for v in fields.get("ORBSYM", []) if v.lstrip("-").isdigit())

    one = _Table((norb, norb))
    two = _Table((norb,) * 4)
    core: float | None = None
    for offset, line in enumerate(lines[start:]):
        lineno = start + offset + 1
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 5:
            raise FcidumpParseError(f"Expected 'value i j k l', got {len(parts)} fields", line=lineno)
        try:
            value = float(parts[0].replace("D", "E").replace("d", "e"))
            i, j, k, l = (int(p) for p in parts[1:])
        except ValueError:
            raise FcidumpParseError(f"Cannot parse integral line {line.strip()!r}", line=lineno) from None
        if any(not 0 <= idx <= norb for idx in (i, j, k, l)):
            raise FcidumpParseError(f"Index out of range [0, {norb}] in {line.strip()!r}", line=lineno)
        match (i, j, k, l):
            case (0, 0, 0, 0):
                if core is not None and abs(core - value) > SYMMETRY_TOLERANCE:
                    raise IntegralIntegrityError(f"Line {lineno}: core energy {value} conflicts with {core}")
                core = value
            case (_, 0, 0, 0):
                pass
            case (_, _, 0, 0) if i and j:
                p, q = i - 1, j - 1
                one.set(((p, q), (q, p)), value, lineno)
            case _ if 0 not in (i, j, k, l):
                p, q, r, s = i - 1, j - 1, k - 1, l - 1
                orbit = [(a, b, c, d) for (a, b), (c, d) in _pair_orbits((p, q), (r, s))]
                two.set(orbit, value, lineno)
            case _:
                raise FcidumpParseError(f"Unrecognized index pattern {(i, j, k, l)}", line=lineno)

    ints = MolecularIntegrals(
        n_spatial=norb,
        n_electrons=nelec,
        ms2=ms2,
        core_energy=core or 0.0,
        one_body=one.values,
        two_body=two.values,
        orbsym=orbsym,
    )
    log.debug(
        "Parsed FCIDUMP",
        extra={"norb": norb, "nelec": nelec, "ms2": ms2, "two_body_nonzero": int(np.count_nonzero(two.values))},
    )
    return ints


def _pair_orbits(pq: tuple[int, int], rs: tuple[int, int]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    pairs = []
    for a, b in ((pq, rs), (rs, pq)):
        for x, y in itertools.product((a, a[::-1]), (b, b[::-1])):
            pairs.append((x, y))
    return pairs


def read_fcidump(path: str | Path) -> MolecularIntegrals:
    with Path(path).open() as fh:
        return parse_fcidump(fh)


def write_fcidump(
    ints: MolecularIntegrals,
    stream: TextIO,
    *,
    tol: float = 1e-15,
    float_format: str = DEFAULT_FLOAT_FORMAT,
) -> None:
    """Write symmetry-unique entries (``i >= j``, ``k >= l``, ``ij >= kl``)."""
    n = ints.n_spatial
    stream.write(f" &FCI NORB={n:4d},NELEC={ints.n_electrons:2d},MS2={ints.ms2},\n")
    orbsym = ints.orbsym or (1,) * n
    stream.write(f"  ORBSYM={','.join(str(s) for s in orbsym)},\n")
    stream.write("  ISYM=1,\n")
    stream.write(" &END\n")
    two_fmt = float_format + " %4d %4d %4d %4d\n"
    pairs = [(i, j) for i in range(n) for j in range(i + 1)]
    for a, (i, j) in enumerate(pairs):
        for k, l in pairs[: a + 1]:
            value = ints.two_body[i, j, k, l]
            if abs(value) > tol:
                stream.write(two_fmt % (value, i + 1, j + 1, k + 1, l + 1))
    one_fmt = float_format + " %4d %4d    0    0\n"
    for i, j in pairs:
        value = ints.one_body[i, j]
        if abs(value) > tol:
            stream.write(one_fmt % (value, i + 1, j + 1))
    stream.write((float_format + "    0    0    0    0\n") % ints.core_energy)


def dumps_fcidump(ints: MolecularIntegrals) -> str:
    buffer = io.StringIO()
    write_fcidump(ints, buffer)
    return buffer.getvalue()
