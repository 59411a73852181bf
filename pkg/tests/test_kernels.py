import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridshadow import _purekernels, kernels
from gridshadow.graphs import random_graph
from gridshadow.numbers import small_primes

compiled = pytest.importorskip("gridshadow._speedups")


def test_default_backend_is_compiled():
    assert kernels.available_backends() == ["compiled", "python"]
    assert kernels.backend() == "compiled"
    with kernels.using("python"):
        assert kernels.backend() == "python"
    assert kernels.backend() == "compiled"
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


@settings(max_examples=60, deadline=None)
@given(st.integers(-20, 10 ** 7), st.integers(0, 3000))
def test_sieve_segment_agrees(lo, size):
    base = small_primes(4000)
    assert compiled.sieve_segment(lo, size, base) == _purekernels.sieve_segment(lo, size, base)


@pytest.mark.parametrize("w, h", [(1, 1), (3, 7), (9, 2), (12, 12)])
def test_grid_adjacency_agrees(w, h):
    assert compiled.grid_adjacency(w, h) == _purekernels.grid_adjacency(w, h)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 64), st.floats(0, 1), st.integers(0, 10 ** 6))
def test_max_clique_agrees(n, p, seed):
    adj = random_graph(n, p, seed).masks
    assert compiled.max_clique(adj) == _purekernels.max_clique(adj)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 40), st.floats(0, 0.6), st.integers(0, 10 ** 6), st.integers(0, 6))
def test_k_coloring_agrees(n, p, seed, k):
    adj = random_graph(n, p, seed).masks
    assert compiled.k_coloring(adj, k) == _purekernels.k_coloring(adj, k)


def test_compiled_rejects_wide_graphs():
    adj = random_graph(65, 0.1, 0).masks
    with pytest.raises(ValueError):
        compiled.max_clique(adj)
    with pytest.raises(ValueError):
        compiled.k_coloring(adj, 3)


def test_full_64_vertex_masks():
    adj = random_graph(64, 0.9, 7).masks
    assert compiled.max_clique(adj) == _purekernels.max_clique(adj)
