"""Seeded instance families: random rejection sampling and named constructions.

Random instances are drawn with SplitMix64 (Steele, Lea, Flood 2014), a
published 64-bit generator that is trivial to reproduce in any language.
Every candidate edge consumes exactly one 64-bit draw, which is unranked
into an r-subset lexicographically, so a (seed, n, r) triple pins the
whole candidate stream; rejected candidates consume their draw.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .core import Hypergraph
from .errors import BadSpec

__all__ = [
    "InstanceSpec",
    "SplitMix64",
    "random_linear_triangle_free",
    "loose_path",
    "loose_cycle",
    "matching",
    "fano",
    "generate",
    "FAMILIES",
]

FAMILIES = ("random", "loose_path", "loose_cycle", "matching", "fano")

_M64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: 64-bit state advanced by the golden-gamma increment."""

    def __init__(self, seed: int):
        self._state = seed & _M64

    def next(self) -> int:
        """Next 64-bit output."""
        self._state = (self._state + 0x9E3779B97F4A7C15) & _M64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        return z ^ (z >> 31)


def _unrank_subset(index: int, n: int, r: int) -> tuple[int, ...]:
    """index-th r-subset of {0..n-1} in lexicographic order."""
    out = []
    need = r
    for v in range(n):
        if need == 0:
            break
        below = comb(n - v - 1, need - 1)
        if index < below:
            out.append(v)
            need -= 1
        else:
            index -= below
    return tuple(out)


@dataclass(frozen=True)
class InstanceSpec:
    """Reproducible description of a generated instance."""

    family: str
    n: int
    r: int
    m: int
    seed: int = 0

    def to_json(self) -> str:
        payload = {
            "family": self.family,
            "n": self.n,
            "r": self.r,
            "m": self.m,
            "seed": self.seed,
        }
        return json.dumps(payload, separators=(", ", ": "))

    @staticmethod
    def from_json(text: str) -> "InstanceSpec":
        data = json.loads(text)
        return InstanceSpec(
            family=data["family"],
            n=data["n"],
            r=data["r"],
            m=data["m"],
            seed=data.get("seed", 0),
        )


def _validate(spec: InstanceSpec) -> None:
    if spec.family not in FAMILIES:
        raise BadSpec(f"unknown family {spec.family!r}, expected one of {FAMILIES}")
    if spec.r < 2:
        raise BadSpec(f"uniformity must be at least 2, got {spec.r}")
    if spec.m < 0:
        raise BadSpec(f"edge target must be non-negative, got {spec.m}")
    if spec.seed < 0:
        raise BadSpec(f"seed must be non-negative, got {spec.seed}")


def random_linear_triangle_free(spec: InstanceSpec) -> tuple[Hypergraph, bool]:
    """Rejection-sample a random r-uniform linear triangle-free hypergraph.

    Uniform r-subsets are drawn one per RNG output and accepted exactly
    when adding them keeps the edge set linear and triangle-free (both
    checked incrementally).  Sampling stops at spec.m edges, or after
    50 * spec.m consecutive rejections, in which case the second return
    value is False and the instance has fewer edges than requested.

    Raises BadSpec for invalid parameters (including n < r with a
    positive edge target, where no candidate exists).
    """
    _validate(spec)
    n, r, m_target = spec.n, spec.r, spec.m
    if n < 0:
        raise BadSpec(f"vertex count must be non-negative, got {n}")
    if m_target > 0 and n < r:
        raise BadSpec(f"no {r}-subset of {n} vertices exists")
    rng = SplitMix64(spec.seed)
    total = comb(n, r)
    edges: list[tuple[int, ...]] = []
    pair_edge: dict[tuple[int, int], int] = {}
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    rejections = 0
    cap = 50 * m_target
    while len(edges) < m_target and rejections < cap:
        e = _unrank_subset(rng.next() % total, n, r)
        if _accepts(e, pair_edge, adj):
            idx = len(edges)
            edges.append(e)
            for i in range(r):
                for j in range(i + 1, r):
                    pair_edge[(e[i], e[j])] = idx
                    adj[e[i]].add(e[j])
                    adj[e[j]].add(e[i])
            rejections = 0
        else:
            rejections += 1
    return Hypergraph(n, edges), len(edges) == m_target


def _accepts(
    e: tuple[int, ...],
    pair_edge: dict[tuple[int, int], int],
    adj: dict[int, set[int]],
) -> bool:
    # linearity: no pair of the candidate may already be covered (this
    # also rejects duplicate edges)
    for i in range(len(e)):
        for j in range(i + 1, len(e)):
            if (e[i], e[j]) in pair_edge:
                return False
    # triangle-freeness: the candidate would host the pair {a, b} of a
    # triangle whose other two pairs lie in two distinct existing edges
    for i in range(len(e)):
        for j in range(i + 1, len(e)):
            a, b = e[i], e[j]
            for c in adj[a] & adj[b]:
                ea = pair_edge[(min(a, c), max(a, c))]
                eb = pair_edge[(min(b, c), max(b, c))]
                if ea != eb:
                    return False
    return True


def loose_path(k: int, r: int) -> Hypergraph:
    """k edges in a row, consecutive edges sharing exactly one vertex.

    n = k(r-1) + 1 vertices; edge i covers i(r-1) .. i(r-1)+r-1.
    """
    if k < 1:
        raise BadSpec(f"path needs at least one edge, got k={k}")
    if r < 2:
        raise BadSpec(f"uniformity must be at least 2, got {r}")
    edges = [tuple(range(i * (r - 1), i * (r - 1) + r)) for i in range(k)]
    return Hypergraph(k * (r - 1) + 1, edges)


def loose_cycle(k: int, r: int) -> Hypergraph:
    """k edges in a ring, consecutive edges sharing exactly one vertex.

    n = k(r-1) vertices; needs k >= 3.  At k = 3 the three link vertices
    form a triangle; for k >= 4 non-consecutive edges are disjoint, so
    the cycle is triangle-free.
    """
    if k < 3:
        raise BadSpec(f"cycle needs at least three edges, got k={k}")
    if r < 2:
        raise BadSpec(f"uniformity must be at least 2, got {r}")
    n = k * (r - 1)
    edges = [
        tuple(range(i * (r - 1), i * (r - 1) + r - 1)) + ((i + 1) * (r - 1) % n,)
        for i in range(k)
    ]
    return Hypergraph(n, edges)


def matching(k: int, r: int) -> Hypergraph:
    """k pairwise disjoint edges; n = k*r vertices."""
    if k < 1:
        raise BadSpec(f"matching needs at least one edge, got k={k}")
    if r < 2:
        raise BadSpec(f"uniformity must be at least 2, got {r}")
    edges = [tuple(range(i * r, i * r + r)) for i in range(k)]
    return Hypergraph(k * r, edges)


def fano() -> Hypergraph:
    """The seven-point plane: 3-uniform, linear, every pair adjacent.

    Not triangle-free; its independence number is 4.
    """
    lines = [
        (0, 1, 2),
        (0, 3, 4),
        (0, 5, 6),
        (1, 3, 5),
        (1, 4, 6),
        (2, 3, 6),
        (2, 4, 5),
    ]
    return Hypergraph(7, lines)


def generate(spec: InstanceSpec) -> tuple[Hypergraph, bool]:
    """Build the instance a spec describes.

    For the named families the edge count is spec.m (spec.n is derived
    and ignored); fano ignores every size field.  The second return
    value is False only when the random family stopped short of its
    edge target.
    """
    _validate(spec)
    if spec.family == "random":
        return random_linear_triangle_free(spec)
    if spec.family == "loose_path":
        return loose_path(spec.m, spec.r), True
    if spec.family == "loose_cycle":
        return loose_cycle(spec.m, spec.r), True
    if spec.family == "matching":
        return matching(spec.m, spec.r), True
    return fano(), True
