"""Shared helpers for the constructions."""

from __future__ import annotations

from typing import Sequence

from sepsys.errors import SelfCheckFailed
from sepsys.separation.system import Certificate, verify


def checked(cert: Certificate) -> Certificate:
    """Verify a freshly built certificate; failure is a bug in the construction."""
    report = verify(cert, require_distinct=True)
    if not report.valid:
        name = cert.system.provenance.get("construction", "?")
        raise SelfCheckFailed(f"{name} produced an invalid system: {report.summary()}")
    if cert.claimed_bound is not None and len(cert.system) > cert.claimed_bound:
        raise SelfCheckFailed(
            f"{cert.system.provenance.get('construction')} used {len(cert.system)} "
            f"elements, above its bound {cert.claimed_bound}"
        )
    return cert


def windows(seq: Sequence[int]) -> list[list[int]]:
    """Sliding windows of length ``ceil(len/2)`` starting at the first ``ceil(len/2)`` positions.

    Vertex ``p`` lies in windows ``max(0, p-h+1) .. min(p, h-1)``, a run whose
    endpoints determine ``p``, so the windows separate the sequence.
    """
    h = (len(seq) + 1) // 2
    return [list(seq[i : i + h]) for i in range(h)]


def alternate(xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Interleave two sides of a complete bipartite graph (sizes differ by at most one)."""
    if len(xs) < len(ys):
        xs, ys = ys, xs
    assert len(xs) - len(ys) <= 1
    out = []
    for i, x in enumerate(xs):
        out.append(x)
        if i < len(ys):
            out.append(ys[i])
    return out
