"""Shared fixtures: backends, random graphs and the cached in-regime graph set."""

from __future__ import annotations

import random
import sys
from functools import lru_cache

import pytest

from tfik import kernels
from tfik.enumeration import Regime, enumerate_regime
from tfik.graph import SimpleGraph, from_edges

BACKENDS = ["python"] + (["compiled"] if kernels.compiled_backend is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    """Run the test once per available kernel, restoring the active one afterwards."""
    previous = kernels.BACKEND
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@lru_cache(maxsize=None)
def in_regime_graphs() -> tuple[SimpleGraph, ...]:
    """Every triangle-free 22-edge graph with minimum degree 3 (orders 10-14, disconnected allowed)."""
    return tuple(enumerate_regime(Regime(22, connected=False)).graphs)


@pytest.fixture(scope="session")
def regime_graphs() -> tuple[SimpleGraph, ...]:
    return in_regime_graphs()


@lru_cache(maxsize=None)
def ledger_scan() -> dict:
    """Ledger for every pair of every in-regime graph; violations of both count-equation claims."""
    import warnings
    from itertools import combinations

    from tfik.errors import OutOfRegime
    from tfik.graph import graph6_encode
    from tfik.reduction import pair_ledger

    pairs = nondegenerate = 0
    unequal, over = [], []
    with warnings.catch_warnings():
        warnings.simplefilter("error", OutOfRegime)
        for g in in_regime_graphs():
            for a, b in combinations(range(g.order), 2):
                led = pair_ledger(g, a, b)
                pairs += 1
                if led.actual > led.predicted:
                    over.append((graph6_encode(g).decode(), (a, b), led.predicted, led.actual, led.degenerate))
                if not led.degenerate:
                    nondegenerate += 1
                    if led.actual != led.predicted:
                        unequal.append((graph6_encode(g).decode(), (a, b), led.predicted, led.actual))
    return {"pairs": pairs, "nondegenerate": nondegenerate, "unequal": unequal, "over": over}


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance verdicts, one line per criterion, at the end of the run."""
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
