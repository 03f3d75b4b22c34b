"""Reading and writing subspace files and distance matrices.

A subspace file is JSON:

    {
      "field": "real" | "complex",
      "ambient_dim": n,
      "subspaces": [{"id": "...", "vectors": [[...], ...]}, ...]
    }

Each vector is one spanning row of length n; complex entries are encoded
as two-element ``[re, im]`` arrays to avoid string-parsing ambiguity.
JSON is the canonical machine format (full precision); CSV is provided for
distance matrices only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .numerics import DEFAULT_TOL, Field, Tolerance
from .subspace import Subspace


class SubspaceFileError(ValueError):
    """Malformed subspace file (CLI exit code 2)."""


@dataclass(frozen=True)
class SubspaceFile:
    field: Field
    ambient_dim: int
    subspaces: list[tuple[str, Subspace]]

    def ids(self) -> list[str]:
        return [name for name, _ in self.subspaces]

    def get(self, name: str) -> Subspace:
        for sid, sub in self.subspaces:
            if sid == name:
                return sub
        raise KeyError(name)


def _parse_scalar(entry, field: Field):
    if isinstance(entry, (int, float)):
        return float(entry)
    if (field is Field.COMPLEX and isinstance(entry, list) and len(entry) == 2
            and all(isinstance(x, (int, float)) for x in entry)):
        return complex(entry[0], entry[1])
    raise SubspaceFileError(f"bad scalar entry {entry!r} for field {field.value}")


def parse_subspace_file(text: str, tol: Tolerance = DEFAULT_TOL) -> SubspaceFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SubspaceFileError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SubspaceFileError("top level must be an object")
    try:
        field = Field(doc["field"])
        n = int(doc["ambient_dim"])
        entries = doc["subspaces"]
    except (KeyError, ValueError, TypeError) as exc:
        raise SubspaceFileError(f"missing or malformed header field: {exc}") from exc
    if n < 1:
        raise SubspaceFileError("ambient_dim must be positive")
    if not isinstance(entries, list) or not entries:
        raise SubspaceFileError("need at least one subspace")
    out: list[tuple[str, Subspace]] = []
    seen: set[str] = set()
    for item in entries:
        try:
            sid = str(item["id"])
            vectors = item["vectors"]
        except (KeyError, TypeError) as exc:
            raise SubspaceFileError(f"malformed subspace entry: {exc}") from exc
        if sid in seen:
            raise SubspaceFileError(f"duplicate subspace id {sid!r}")
        seen.add(sid)
        rows = []
        for vec in vectors:
            if not isinstance(vec, list) or len(vec) != n:
                raise SubspaceFileError(
                    f"subspace {sid!r}: every vector must have length {n}")
            rows.append([_parse_scalar(x, field) for x in vec])
        cols = (np.array(rows, dtype=field.dtype).T if rows
                else np.zeros((n, 0), dtype=field.dtype))
        try:
            sub = Subspace.from_columns(cols, field, tol)
        except DimensionError as exc:
            raise SubspaceFileError(f"subspace {sid!r}: {exc}") from exc
        out.append((sid, sub))
    return SubspaceFile(field, n, out)


def load_subspace_file(path, tol: Tolerance = DEFAULT_TOL) -> SubspaceFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_subspace_file(fh.read(), tol)


def _encode_scalar(x, field: Field):
    if field is Field.COMPLEX:
        z = complex(x)
        return [z.real, z.imag]
    return float(np.real(x))


def dump_subspace_file(sfile: SubspaceFile) -> str:
    """Serialize; parsing the result reproduces identical bases bit for bit
    (orthonormal bases pass through construction unchanged)."""
    doc = {
        "field": sfile.field.value,
        "ambient_dim": sfile.ambient_dim,
        "subspaces": [
            {"id": sid,
             "vectors": [[_encode_scalar(x, sfile.field) for x in sub.basis[:, j]]
                         for j in range(sub.dim)]}
            for sid, sub in sfile.subspaces
        ],
    }
    return json.dumps(doc, indent=2)


@dataclass(frozen=True)
class DistanceMatrixOutput:
    """A pairwise distance matrix; entry [i][j] is the distance FROM ids[i]
    TO ids[j] (direction convention row->column)."""

    metric: str
    ids: list[str]
    values: np.ndarray
    units: str
    direction_convention: str = "row->column"

    def to_json(self) -> str:
        return json.dumps({
            "metric": self.metric,
            "direction_convention": self.direction_convention,
            "ids": self.ids,
            "values": [[float(x) for x in row] for row in self.values],
            "units": self.units,
        }, indent=2)

    def to_csv(self) -> str:
        lines = [f"# metric={self.metric} units={self.units} "
                 f"direction={self.direction_convention}"]
        lines.append(",".join(["id"] + self.ids))
        for sid, row in zip(self.ids, self.values):
            lines.append(",".join([sid] + [repr(float(x)) for x in row]))
        return "\n".join(lines) + "\n"
