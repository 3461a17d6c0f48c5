"""Readers for the documented artifact formats (see docs/formats.md)."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

FORMAT_TAG = "chiralchain-array v1"


class ArtifactError(RuntimeError):
    """Missing or malformed artifact; nothing is rendered."""


def read_array(path):
    """Binary array + sidecar header; returns (values, header dict)."""
    path = Path(path)
    hdr_path = Path(str(path) + ".hdr")
    if not path.exists() or not hdr_path.exists():
        raise ArtifactError(f"missing artifact {path}")
    header = {}
    axis_meta = {}
    for line in hdr_path.read_text().splitlines():
        key, _, val = line.partition(":")
        key, val = key.strip(), val.strip()
        if key.startswith("axis "):
            parts = dict(p.split("=") for p in val.split())
            axis_meta[key[5:]] = (
                float(parts["start"]),
                float(parts["step"]),
                int(parts["points"]),
            )
        else:
            header[key] = val
    if header.get("format") != FORMAT_TAG:
        raise ArtifactError(f"{path}: unknown format {header.get('format')!r}")
    shape = tuple(int(s) for s in header["shape"].split())
    raw = np.fromfile(path, dtype="<f8")
    if header["dtype"] == "complex128":
        raw = raw.reshape(shape + (2,))
        values = raw[..., 0] + 1j * raw[..., 1]
    else:
        values = raw.reshape(shape)
    header["axis_meta"] = axis_meta
    return values, header


def axis_values(header, name):
    start, step, points = header["axis_meta"][name]
    return start + step * np.arange(points)


def read_csv(path) -> dict:
    path = Path(path)
    if not path.exists():
        raise ArtifactError(f"missing artifact {path}")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        names = next(reader)
        cols = {n: [] for n in names}
        for row in reader:
            for n, v in zip(names, row):
                try:
                    cols[n].append(float(v))
                except ValueError:
                    cols[n].append(np.nan)
    return {n: np.asarray(v) for n, v in cols.items()}


def read_manifest(run_dir) -> dict:
    path = Path(run_dir) / "manifest.json"
    if not path.exists():
        raise ArtifactError(f"missing manifest in {run_dir}")
    with open(path) as fh:
        return json.load(fh)


def require(root, *relative):
    """Assert that all artifact files exist before any rendering starts."""
    missing = [str(Path(root) / rel) for rel in relative if not (Path(root) / rel).exists()]
    if missing:
        raise ArtifactError("missing artifacts: " + ", ".join(missing))
