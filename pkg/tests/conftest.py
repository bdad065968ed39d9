from __future__ import annotations

import itertools
import sys

import pytest

from permrel import kernels
from permrel.permgroup import Permutation, cyclic_group, generate_closure, regular_representation
from permrel.rewriting import MonoidInstance, rewrite_step


def make(n, l, *gens):
    return MonoidInstance.from_generators(n, l, [Permutation(g) for g in gens])


def sym3():
    return generate_closure([Permutation((2, 1, 3)), Permutation((2, 3, 1))], 3)


def suite():
    """The fixed acceptance instances, keyed by letter."""
    return {
        "A": MonoidInstance(3, 2, cyclic_group(3)),
        "B": make(4, 2, (2, 1, 4, 3), (3, 4, 1, 2)),
        "C": MonoidInstance(4, 3, cyclic_group(4)),
        "D": make(4, 2, (2, 1, 4, 3)),
        "E": make(3, 2, (2, 1, 3)),
        "F": MonoidInstance(6, 2, regular_representation(sym3())),
        "G": make(2, 2),
    }


@pytest.fixture(scope="session")
def inst():
    return suite()


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    return kernels.available_backends()[request.param]


def brute_class(I, w):
    """Rewrite closure built only from rewrite_step (independent of the kernels)."""
    w = tuple(w)
    seen = {w}
    todo = [w]
    while todo:
        cur = todo.pop()
        for pos in range(1, len(cur) - I.l + 2):
            for g in I.H.elements:
                nxt = rewrite_step(I, cur, pos, g)
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
    return frozenset(seen)


def brute_partition(I, m):
    """Partition of all words of length m into rewrite classes."""
    out = {}
    for w in itertools.product(range(1, I.n + 1), repeat=m):
        if w not in out:
            cls = brute_class(I, w)
            for u in cls:
                out[u] = cls
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section(f"acceptance criteria (kernel backend: {kernels.BACKEND})")
    for line in mod.format_results():
        terminalreporter.write_line(line)
