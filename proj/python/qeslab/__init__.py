"""Exact spectra, separation chains and conformance checks for
quasi-exactly-solvable models on the n-sphere and Euclidean space.

Rationals cross the boundary as "p/q" strings (``fractions.Fraction``
accepts them directly); floats appear only in "approx" fields.
"""

import json as _json

from ._qeslab import (
    basis_dim,
    contract,
    es_spectrum,
    separate,
    spectrum,
    verify,
)


def verify_report(suite="all", n=2, k=1, seed=0, precision=128):
    """Run a conformance suite and return the report as a dict."""
    return _json.loads(verify(suite, n, k, seed, precision))


__all__ = [
    "basis_dim",
    "contract",
    "es_spectrum",
    "separate",
    "spectrum",
    "verify",
    "verify_report",
]
