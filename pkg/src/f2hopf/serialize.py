"""Stable JSON encoding of the engine's outputs.

Tensors and matrices are hex strings of the packed bit layout (coordinate 0
at the least significant bit), so files are byte-identical across runs and
platforms and can be diffed as golden files.  Every file carries the schema
kind, the engine version and a payload checksum.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from f2hopf import __version__
from f2hopf.gf2 import Gf2Mat
from f2hopf.structure import AlgebraSC, CoalgebraSC

SCHEMA_PREFIX = "f2hopf/"


def tensor_to_hex(bits: int) -> str:
    return format(bits, "x")


def tensor_from_hex(s: str) -> int:
    return int(s, 16)


def mat_to_hex(m: Gf2Mat) -> str:
    return ",".join(format(r, "x") for r in m.rows)


def mat_from_hex(s: str, cols: int) -> Gf2Mat:
    return Gf2Mat(tuple(int(p, 16) for p in s.split(",")), cols)


def algebra_record(label: str, a: AlgebraSC, relations: str) -> dict[str, Any]:
    return {
        "label": label,
        "dim": a.n,
        "product": tensor_to_hex(a.v),
        "unit": tensor_to_hex(a.eta),
        "relations": relations,
    }


def algebra_from_record(rec: dict[str, Any]) -> AlgebraSC:
    return AlgebraSC(
        rec["dim"], tensor_from_hex(rec["product"]), tensor_from_hex(rec["unit"])
    )


def coalgebra_record(c: CoalgebraSC) -> dict[str, Any]:
    return {
        "dim": c.n,
        "coproduct": tensor_to_hex(c.c),
        "counit": tensor_to_hex(c.eps),
    }


def coalgebra_from_record(rec: dict[str, Any]) -> CoalgebraSC:
    return CoalgebraSC(
        rec["dim"], tensor_from_hex(rec["coproduct"]), tensor_from_hex(rec["counit"])
    )


def payload_checksum(payload: Any) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def dump_dataset(kind: str, payload: Any) -> str:
    doc = {
        "schema": SCHEMA_PREFIX + kind,
        "version": __version__,
        "checksum": payload_checksum(payload),
        "payload": payload,
    }
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


class DatasetError(ValueError):
    pass


def load_dataset(text: str, kind: str | None = None) -> tuple[str, Any]:
    """Parse and checksum-verify a dataset; returns (kind, payload)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetError(f"not valid JSON: {exc}") from exc
    for field in ("schema", "version", "checksum", "payload"):
        if field not in doc:
            raise DatasetError(f"missing field {field!r}")
    schema = doc["schema"]
    if not schema.startswith(SCHEMA_PREFIX):
        raise DatasetError(f"unknown schema {schema!r}")
    got_kind = schema[len(SCHEMA_PREFIX):]
    if kind is not None and got_kind != kind:
        raise DatasetError(f"expected schema kind {kind!r}, found {got_kind!r}")
    if payload_checksum(doc["payload"]) != doc["checksum"]:
        raise DatasetError("payload checksum mismatch")
    return got_kind, doc["payload"]
