"""Render figure analogues from simulation artifact directories.

This package reads only the documented artifact formats (flat binary
arrays with text sidecars, CSV curves, and run manifests); it never
invokes the solver.
"""

__version__ = "0.1.0"
