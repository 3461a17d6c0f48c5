"""Rendering tests against hand-written artifacts in the documented formats."""

import json
from pathlib import Path

import numpy as np
import pytest

from chainfig.cli import render
from chainfig.readers import ArtifactError, read_array


def _write_array(path, values, axes, axis_meta):
    """Independent writer following docs/formats.md."""
    values = np.ascontiguousarray(values)
    if np.iscomplexobj(values):
        dtype = "complex128"
        raw = np.empty(values.shape + (2,), dtype=np.float64)
        raw[..., 0] = values.real
        raw[..., 1] = values.imag
    else:
        dtype = "float64"
        raw = values.astype(np.float64)
    Path(path).write_bytes(raw.astype("<f8").tobytes())
    lines = [
        "format: chiralchain-array v1",
        f"dtype: {dtype}",
        "shape: " + " ".join(str(s) for s in values.shape),
        "order: C",
        "axes: " + " ".join(axes),
        "units: 1/Gamma",
        "normalization: fock(2)",
    ]
    for name, (start, step, points) in axis_meta.items():
        lines.append(
            f"axis {name}: start={float(start)!r} step={float(step)!r} points={int(points)}"
        )
    Path(str(path) + ".hdr").write_text("\n".join(lines) + "\n")


@pytest.fixture
def fake_run(tmp_path):
    run = tmp_path / "fig4_g2long"
    run.mkdir()
    t = np.linspace(0, 100, 40)
    g2 = np.exp(-((t[:, None] - 50) ** 2 + (t[None, :] - 50) ** 2) / 400)
    g2 *= 1 - np.exp(-((t[:, None] - t[None, :]) ** 2) / 50)
    _write_array(
        run / "g2_fock.bin",
        g2,
        ["t1", "t2"],
        {"t1": (0.0, t[1] - t[0], 40), "t2": (0.0, t[1] - t[0], 40)},
    )
    (run / "manifest.json").write_text(json.dumps({"name": "fig4_g2long", "inventory": []}))
    return tmp_path


def test_round_trip_reader(tmp_path):
    vals = np.arange(12, dtype=complex).reshape(3, 4) + 1j
    _write_array(tmp_path / "a.bin", vals, ["x", "y"], {"x": (0.0, 1.0, 3)})
    back, header = read_array(tmp_path / "a.bin")
    assert np.array_equal(back, vals)
    assert header["axis_meta"]["x"] == (0.0, 1.0, 3)


def test_render_writes_png_and_svg(fake_run, tmp_path):
    out = tmp_path / "figs"
    written = render("fig_G2long", fake_run, out)
    names = {p.name for p in written}
    assert names == {"fig_G2long.png", "fig_G2long.svg"}
    for p in written:
        assert p.stat().st_size > 1000


def test_render_deterministic(fake_run, tmp_path):
    a = render("fig_G2long", fake_run, tmp_path / "a")
    b = render("fig_G2long", fake_run, tmp_path / "b")
    for pa, pb in zip(a, b):
        assert pa.read_bytes() == pb.read_bytes()


def test_missing_artifacts_no_partial_output(tmp_path):
    out = tmp_path / "figs"
    with pytest.raises(ArtifactError):
        render("fig_G2long", tmp_path, out)
    assert not out.exists() or not any(out.iterdir())


def test_unknown_figure(tmp_path):
    with pytest.raises(ArtifactError):
        render("fig_nonexistent", tmp_path)


CATALOG_RUNS = Path(__file__).resolve().parents[2] / "runs"


@pytest.mark.skipif(
    not (CATALOG_RUNS / "fig4_g2long").exists(),
    reason="scenario catalog artifacts not present",
)
def test_render_full_catalog(tmp_path):
    """Every figure analogue renders from the real catalog artifacts."""
    from chainfig.figures import REGISTRY

    for name in sorted(REGISTRY):
        written = render(name, CATALOG_RUNS, tmp_path)
        assert all(p.stat().st_size > 1000 for p in written), name
