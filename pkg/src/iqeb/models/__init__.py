"""
IQEB Models
===========

Shared Pydantic models: run configuration, per-iteration records and manifests.
"""

from .config import GrowthConfig, OptimizerSettings
from .enums import ExcitationKind, GateName, Method, OutputFormat, PoolKind, Selection, Termination
from .manifests import (
    FixtureEntry,
    SweepManifest,
    SweepPoint,
    load_sweep_manifest,
    parse_sweep_manifest,
    read_fixture_manifest,
)
from .records import CandidateRecord, ChosenElement, IterationRecord, RunRecord, ScreenStats
from .serialize import from_msgpack, read_run_record, to_csv, to_json, to_msgpack, write_run_record

__all__ = [
    "GrowthConfig",
    "OptimizerSettings",
    "ExcitationKind",
    "GateName",
    "Method",
    "OutputFormat",
    "PoolKind",
    "Selection",
    "Termination",
    "FixtureEntry",
    "SweepManifest",
    "SweepPoint",
    "load_sweep_manifest",
    "parse_sweep_manifest",
    "read_fixture_manifest",
    "CandidateRecord",
    "ChosenElement",
    "IterationRecord",
    "RunRecord",
    "ScreenStats",
    "to_msgpack",
    "from_msgpack",
    "to_json",
    "to_csv",
    "write_run_record",
    "read_run_record",
]
