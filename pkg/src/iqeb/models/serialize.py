import csv
import io
import json
from pathlib import Path
from typing import Any

import msgpack
from pydantic import BaseModel

from .enums import OutputFormat
from .records import RunRecord

SIGNIFICANT_DIGITS = 12

CSV_FIELDS = ("m", "chosen", "grad", "delta_e", "energy", "n_params", "n_cnots", "accepted", "wall_ms")
RECORD_SUFFIXES = (".json", ".csv", ".msgpack")


def _round(value: Any) -> Any:
    if isinstance(value, float):
        return float(f"{value:.{SIGNIFICANT_DIGITS}g}")
    if isinstance(value, dict):
        return {k: _round(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_round(v) for v in value]
    return value


def to_dict(model: BaseModel) -> dict[str, Any]:
    """JSON-mode dump with floats cut to 12 significant digits."""
    return _round(model.model_dump(mode="json"))


def to_msgpack(model: BaseModel) -> bytes:
    """
    Serialize a Pydantic model to MessagePack bytes.
    """
    return msgpack.packb(to_dict(model), use_bin_type=True)


def from_msgpack[M: BaseModel](model_cls: type[M], packed: bytes) -> M:
    """
    Deserialize MessagePack bytes to a Pydantic model.
    """
    return model_cls.model_validate(msgpack.unpackb(packed, raw=False))


def to_json(model: BaseModel) -> str:
    return json.dumps(to_dict(model), indent=2) + "\n"


def from_json[M: BaseModel](model_cls: type[M], text: str) -> M:
    return model_cls.model_validate_json(text)


def run_record_rows(record: RunRecord) -> list[dict[str, Any]]:
    rows = []
    for it in to_dict(record)["iterations"]:
        row = {k: it[k] for k in CSV_FIELDS if k != "chosen"}
        row["chosen"] = ";".join(
            f"{c['kind']}:{'-'.join(str(i) for i in c['indices'])}" + (f":{c['letters']}" if c.get("letters") else "")
            for c in it["chosen"]
        )
        rows.append(row)
    return rows


def to_csv(record: RunRecord) -> str:
    """One row per iteration, same numeric content as the JSON document."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(run_record_rows(record))
    return buffer.getvalue()


def write_run_record(record: RunRecord, out: str | Path, fmt: OutputFormat = OutputFormat.JSON) -> list[Path]:
    """Write ``record`` next to ``out`` in every format ``fmt`` names; return the paths."""
    out = Path(out)
    if out.suffix in RECORD_SUFFIXES:
        out = out.with_suffix("")
    out.parent.mkdir(parents=True, exist_ok=True)
    written = []
    for suffix in fmt.suffixes():
        path = out.with_name(out.name + suffix)
        match suffix:
            case ".json":
                path.write_text(to_json(record))
            case ".csv":
                path.write_text(to_csv(record))
            case ".msgpack":
                path.write_bytes(to_msgpack(record))
        written.append(path)
    return written


def read_run_record(path: str | Path) -> RunRecord:
    """Load a JSON or MessagePack run record, chosen by file suffix."""
    path = Path(path)
    if path.suffix == ".msgpack":
        return from_msgpack(RunRecord, path.read_bytes())
    if path.suffix == ".json":
        return from_json(RunRecord, path.read_text())
    raise ValueError(f"Unsupported record format {path.suffix!r}, expected .json or .msgpack")
