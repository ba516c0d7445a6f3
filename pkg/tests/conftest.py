"""Shared corpora.

small_corpus: hypothesis-satisfying instances with n <= 20, small enough
for the exhaustive alpha oracle.  linear_corpus: uniform linear
instances including ones that do contain triangles.
"""

from __future__ import annotations

import pytest

import hyperind as hi


def random_instance(r: int, seed: int, n: int | None = None, m: int | None = None):
    if n is None:
        n = 8 + 3 * (seed % 4)
    if m is None:
        m = max(2, n // r + 1)
    h, _ = hi.random_linear_triangle_free(
        hi.InstanceSpec("random", n=n, r=r, m=m, seed=seed)
    )
    return h


@pytest.fixture(scope="session")
def small_corpus():
    items = []
    for r in (2, 3, 4):
        for seed in range(10):
            items.append((f"random-r{r}-s{seed}", random_instance(r, seed), r))
    for k, r in ((1, 2), (4, 2), (1, 3), (2, 3), (3, 3), (2, 4)):
        items.append((f"loose_path-{k}-{r}", hi.loose_path(k, r), r))
    for k, r in ((2, 2), (3, 3), (2, 4)):
        items.append((f"matching-{k}-{r}", hi.matching(k, r), r))
    assert all(h.n <= 20 for _, h, _ in items)
    return items


@pytest.fixture(scope="session")
def linear_corpus(small_corpus):
    items = list(small_corpus)
    items.append(("fano", hi.fano(), 3))
    # k = 3 cycles contain a triangle, longer ones do not
    for k, r in ((3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (6, 2), (5, 3)):
        items.append((f"loose_cycle-{k}-{r}", hi.loose_cycle(k, r), r))
    # linear, uniform, with a triangle hiding behind a double-linearity
    # violation (edge {0,1,2} holds two neighbors of the non-adjacent 3)
    items.append(
        ("dl-violation", hi.Hypergraph(6, [(0, 1, 2), (1, 3, 4), (2, 3, 5)]), 3)
    )
    return items
