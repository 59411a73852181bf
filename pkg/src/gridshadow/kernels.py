"""Backend selection for the hot kernels.

The compiled ``_speedups`` extension is used when it was built; otherwise the
pure-Python implementations run. Graph kernels on more than 64 vertices always
use the pure-Python path since the compiled ones work on 64-bit bitsets.
"""
from __future__ import annotations

from contextlib import contextmanager

from . import _purekernels

try:
    from . import _speedups
except ImportError:  # extension not built
    _speedups = None

_BACKENDS = {"python": _purekernels}
if _speedups is not None:
    _BACKENDS["compiled"] = _speedups

_active = _BACKENDS.get("compiled", _purekernels)


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def backend() -> str:
    return "compiled" if _active is _speedups else "python"


def set_backend(name: str) -> str:
    """Switch the active backend; returns the previous backend name."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable (have {available_backends()})")
    previous = backend()
    _active = _BACKENDS[name]
    return previous


@contextmanager
def using(name: str):
    previous = set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _graph_impl(n: int):
    return _purekernels if n > 64 else _active


def sieve_segment(lo: int, size: int, base_primes) -> bytearray:
    return _active.sieve_segment(lo, size, base_primes)


def grid_adjacency(w: int, h: int) -> bytearray:
    return _active.grid_adjacency(w, h)


def max_clique(adj: list[int]) -> list[int]:
    return _graph_impl(len(adj)).max_clique(adj)


def k_coloring(adj: list[int], k: int) -> list[int] | None:
    return _graph_impl(len(adj)).k_coloring(adj, k)
