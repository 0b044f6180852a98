"""Vector files, certificate reports and the independent re-check.

JSON is the canonical vector format (floats round-trip exactly through
repr); CSV is a convenience importer with complex cells written "re:im".
Certificate reports are JSON documents validated against a published
schema and bound to their input by a content digest.
"""

from __future__ import annotations

import csv
import hashlib
import json
from pathlib import Path
from typing import Any

import jsonschema
import numpy as np

from . import analysis
from .errors import ArgumentError
from .linalg import UnitVectorSequence, gram, hermitian_eigenvalues
from .partition import PartitionCertificate

TOOL_VERSION = "0.1.0"
SCHEMA_VERSION = 1

REPORT_TOL = 1e-9

CERTIFICATE_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "frame-partition certificate report",
    "type": "object",
    "required": [
        "schema_version",
        "tool_version",
        "input_digest",
        "mode",
        "global_bounds",
        "levels",
        "target",
        "blocks",
        "all_certified",
        "borderline",
        "timings",
    ],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "tool_version": {"type": "string"},
        "input_digest": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
        "mode": {"enum": ["feichtinger", "uniform"]},
        "global_bounds": {
            "type": "object",
            "required": ["spectral_B", "schur_B", "bessel_B_used"],
            "properties": {
                "spectral_B": {"type": "number"},
                "schur_B": {"type": "number"},
                "bessel_B_used": {"type": "number"},
            },
            "additionalProperties": False,
        },
        "levels": {"type": "integer", "minimum": 0},
        "target": {"type": "number"},
        "blocks": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": [
                    "indices",
                    "sigma",
                    "eta",
                    "gamma",
                    "lambda_min",
                    "lambda_max",
                    "certified",
                    "borderline",
                ],
                "properties": {
                    "indices": {
                        "type": "array",
                        "minItems": 1,
                        "items": {"type": "integer", "minimum": 0},
                    },
                    "sigma": {"type": "number"},
                    "eta": {"type": "number"},
                    "gamma": {"type": "number"},
                    "lambda_min": {"type": "number"},
                    "lambda_max": {"type": "number"},
                    "certified": {"type": "boolean"},
                    "borderline": {"type": "boolean"},
                },
                "additionalProperties": False,
            },
        },
        "all_certified": {"type": "boolean"},
        "borderline": {"type": "boolean"},
        "timings": {
            "type": "object",
            "additionalProperties": {"type": "number"},
        },
    },
    "additionalProperties": False,
}


def _vector_rows(seq: UnitVectorSequence) -> list[list[float]] | list[list[list[float]]]:
    if seq.field == "real":
        return [[float(x.real) for x in row] for row in seq.vectors]
    return [[[float(x.real), float(x.imag)] for x in row] for row in seq.vectors]


def sequence_digest(seq: UnitVectorSequence) -> str:
    """Content hash of the sequence (dim, field and exact coordinates)."""
    payload = {
        "dim": seq.dim,
        "field": seq.field,
        "vectors": [
            [[repr(float(x.real)), repr(float(x.imag))] for x in row] for row in seq.vectors
        ],
    }
    raw = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(raw).hexdigest()


def write_vectors(path: str | Path, seq: UnitVectorSequence, fmt: str | None = None) -> None:
    path = Path(path)
    fmt = fmt or path.suffix.lstrip(".").lower()
    if fmt == "json":
        doc = {
            "dim": seq.dim,
            "field": seq.field,
            "count": seq.n,
            "vectors": _vector_rows(seq),
        }
        if seq.labels is not None:
            doc["labels"] = list(seq.labels)
        path.write_text(json.dumps(doc, indent=2) + "\n")
    elif fmt == "csv":
        with path.open("w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["dim", "field", "count"])
            writer.writerow([seq.dim, seq.field, seq.n])
            for row in seq.vectors:
                if seq.field == "real":
                    writer.writerow([repr(float(x.real)) for x in row])
                else:
                    writer.writerow([f"{float(x.real)!r}:{float(x.imag)!r}" for x in row])
    else:
        raise ArgumentError(f"unknown vector file format {fmt!r} (use json or csv)")


def _parse_json_vectors(doc: Any) -> UnitVectorSequence:
    if not isinstance(doc, dict):
        raise ArgumentError("vector file must contain a JSON object")
    try:
        dim = int(doc["dim"])
        field = str(doc["field"])
        count = int(doc["count"])
        rows = doc["vectors"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ArgumentError(f"malformed vector file header: {exc}") from exc
    if not isinstance(rows, list) or len(rows) != count:
        raise ArgumentError("vector count does not match header")
    vectors = np.zeros((count, dim), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise ArgumentError(f"row {i} has wrong length (expected {dim})")
        for j, cell in enumerate(row):
            if field == "complex":
                if not (isinstance(cell, list) and len(cell) == 2):
                    raise ArgumentError(f"row {i} col {j}: expected [re, im] pair")
                vectors[i, j] = complex(float(cell[0]), float(cell[1]))
            else:
                vectors[i, j] = float(cell)
    labels = doc.get("labels")
    return UnitVectorSequence(
        vectors, field=field, labels=tuple(labels) if labels is not None else None
    )


def _parse_csv_vectors(text: str) -> UnitVectorSequence:
    rows = list(csv.reader(text.splitlines()))
    if len(rows) < 3 or [c.strip() for c in rows[0]] != ["dim", "field", "count"]:
        raise ArgumentError("csv vector file must start with a dim,field,count header")
    try:
        dim, field, count = int(rows[1][0]), rows[1][1].strip(), int(rows[1][2])
    except (IndexError, ValueError) as exc:
        raise ArgumentError(f"malformed csv header values: {exc}") from exc
    data = rows[2:]
    if len(data) != count:
        raise ArgumentError(f"expected {count} vector rows, found {len(data)}")
    vectors = np.zeros((count, dim), dtype=np.complex128)
    for i, row in enumerate(data):
        if len(row) != dim:
            raise ArgumentError(f"row {i} has {len(row)} cells, expected {dim}")
        for j, cell in enumerate(row):
            try:
                if field == "complex":
                    re_part, im_part = cell.split(":")
                    vectors[i, j] = complex(float(re_part), float(im_part))
                else:
                    vectors[i, j] = float(cell)
            except ValueError as exc:
                raise ArgumentError(f"row {i} col {j}: unparseable cell {cell!r}") from exc
    return UnitVectorSequence(vectors, field=field)


def read_vectors(path: str | Path, fmt: str | None = None) -> UnitVectorSequence:
    path = Path(path)
    fmt = fmt or path.suffix.lstrip(".").lower()
    text = path.read_text()
    if fmt == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ArgumentError(f"invalid JSON in {path}: {exc}") from exc
        return _parse_json_vectors(doc)
    if fmt == "csv":
        return _parse_csv_vectors(text)
    raise ArgumentError(f"unknown vector file format {fmt!r} (use json or csv)")


def build_report(
    cert: PartitionCertificate,
    seq: UnitVectorSequence,
    timings: dict[str, float] | None = None,
) -> dict[str, Any]:
    """Machine-readable report for a certified partition; schema-validated."""
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": TOOL_VERSION,
        "input_digest": sequence_digest(seq),
        "mode": cert.mode,
        "global_bounds": {
            "spectral_B": cert.spectral_bound,
            "schur_B": cert.schur_bound,
            "bessel_B_used": cert.global_bessel,
        },
        "levels": cert.partition.levels,
        "target": cert.target,
        "blocks": [
            {
                "indices": list(bc.indices),
                "sigma": bc.sigma,
                "eta": bc.eta,
                "gamma": bc.gamma,
                "lambda_min": bc.riesz.lambda_min,
                "lambda_max": bc.riesz.lambda_max,
                "certified": bc.riesz.certified if cert.mode == "feichtinger" else bc.eta < 1.0,
                "borderline": bc.riesz.borderline,
            }
            for bc in cert.per_block
        ],
        "all_certified": cert.all_certified,
        "borderline": cert.borderline,
        "timings": dict(timings or {}),
    }
    jsonschema.validate(report, CERTIFICATE_SCHEMA)
    return report


def write_report(path: str | Path, report: dict[str, Any]) -> None:
    jsonschema.validate(report, CERTIFICATE_SCHEMA)
    Path(path).write_text(json.dumps(report, indent=2) + "\n")


def read_report(path: str | Path) -> dict[str, Any]:
    try:
        report = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ArgumentError(f"invalid JSON in report {path}: {exc}") from exc
    try:
        jsonschema.validate(report, CERTIFICATE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise ArgumentError(f"report does not match the certificate schema: {exc.message}") from exc
    return report


def recertify(
    seq: UnitVectorSequence, report: dict[str, Any], tol: float = REPORT_TOL
) -> list[dict[str, Any]]:
    """Independently recompute every block's values and diff them vs the report.

    Returns one entry per block: {"block", "indices", "passed", "failures"}.
    Raises ArgumentError when the report's blocks are not a partition of the
    input's index set.
    """
    blocks = [tuple(b["indices"]) for b in report["blocks"]]
    seen: set[int] = set()
    for block in blocks:
        if not block or seen.intersection(block):
            raise ArgumentError("report blocks are empty or overlap")
        seen.update(block)
    if seen != set(range(seq.n)):
        raise ArgumentError(
            f"report blocks do not cover the input index set 0..{seq.n - 1}"
        )
    g = gram(seq)
    results = []
    for pos, (block, reported) in enumerate(zip(blocks, report["blocks"])):
        expected = {
            "sigma": analysis.sigma(g, block),
            "eta": analysis.eta(g, block),
            "gamma": analysis.separation_constant(g, block),
        }
        eigs = hermitian_eigenvalues(g.submatrix(list(block)))
        expected["lambda_min"] = float(eigs[0])
        expected["lambda_max"] = float(eigs[-1])
        failures = [
            f"{key}: reported {reported[key]!r}, recomputed {value!r}"
            for key, value in expected.items()
            if abs(reported[key] - value) > tol
        ]
        certified = (
            expected["sigma"] < 1.0 if report["mode"] == "feichtinger" else expected["eta"] < 1.0
        )
        if bool(reported["certified"]) != certified:
            failures.append(
                f"certified: reported {reported['certified']}, recomputed {certified}"
            )
        results.append(
            {"block": pos, "indices": list(block), "passed": not failures, "failures": failures}
        )
    return results
