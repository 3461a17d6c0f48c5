"""chainfig render <figure-name> <artifact-dir> [--out DIR] [--formats png,svg]"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

from .figures import REGISTRY
from .readers import ArtifactError


def render(figure_name: str, artifact_root, out_dir=None, formats=("png", "svg")):
    """Render one figure product; fails without side effects when artifacts
    are missing, and produces byte-deterministic files otherwise."""
    import matplotlib.pyplot as plt

    if figure_name not in REGISTRY:
        raise ArtifactError(
            f"unknown figure {figure_name!r}; known: {', '.join(sorted(REGISTRY))}"
        )
    plt.rcParams["svg.hashsalt"] = "chainfig"
    plt.rcParams["figure.dpi"] = 110
    out_dir = Path(artifact_root) if out_dir is None else Path(out_dir)
    fig = plt.figure(figsize=(9, 6))
    try:
        REGISTRY[figure_name](artifact_root, fig)
    except Exception:
        plt.close(fig)
        raise
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for ext in formats:
        target = out_dir / f"{figure_name}.{ext}"
        fig.savefig(target, metadata={"Date": None} if ext == "svg" else None)
        written.append(target)
    plt.close(fig)
    return written


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="chainfig")
    sub = parser.add_subparsers(dest="command", required=True)
    r = sub.add_parser("render", help="render a figure from artifacts")
    r.add_argument("figure", help="figure product name, or 'all'")
    r.add_argument("artifacts", help="runs root holding the scenario outputs")
    r.add_argument("--out", default=None, help="output directory (default: artifacts dir)")
    r.add_argument("--formats", default="png,svg")
    args = parser.parse_args(argv)

    formats = tuple(f.strip() for f in args.formats.split(",") if f.strip())
    names = sorted(REGISTRY) if args.figure == "all" else [args.figure]
    status = 0
    for name in names:
        try:
            written = render(name, args.artifacts, args.out, formats)
        except ArtifactError as exc:
            print(f"{name}: {exc}", file=sys.stderr)
            status = 1
        else:
            print(f"{name}: " + ", ".join(str(w) for w in written))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
