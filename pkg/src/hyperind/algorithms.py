"""Greedy independent-set extraction with exact certificates, and exact alpha.

The extractor repeatedly takes an isolated vertex when one exists and
otherwise scans every (vertex x, slot R) candidate, removing {x} union R
for the candidate whose exact rational delta

    delta = 1 + potential(H - ({x} u R)) - potential(H)

is largest.  On r-uniform linear triangle-free input the best delta is
never negative, so the potential drops by at most one per chosen vertex
and the final independent set has at least ceil(potential) vertices.
Every step is recorded so the guarantee can be re-audited offline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .core import Hypergraph, remove, slot_partition
from .errors import HypothesisViolated, InvalidSlot
from .bounds import as_ratio, potential, potential_weight
from .properties import has_uniformity, is_linear, is_triangle_free

__all__ = [
    "Step",
    "ExtractionCertificate",
    "candidate_delta",
    "candidate_deltas",
    "greedy_extract",
    "AlphaResult",
    "exact_alpha",
    "verify_independent",
]


@dataclass(frozen=True)
class Step:
    """One extraction step, in original vertex ids."""

    x: int
    slot: tuple[int, ...]
    potential_before: Fraction
    potential_after: Fraction

    @property
    def delta(self) -> Fraction:
        return 1 + self.potential_after - self.potential_before


@dataclass(frozen=True)
class ExtractionCertificate:
    """Audit trail of a greedy extraction.

    guarantee is the potential of the input; when guaranteed is True the
    independent set is certified to have at least ceil(guarantee)
    vertices.  guaranteed is False exactly when the structural
    preconditions were overridden with unsafe=True.
    """

    independent_set: tuple[int, ...]
    guarantee: Fraction
    steps: tuple[Step, ...]
    guaranteed: bool
    r: int

    def to_json(self) -> str:
        payload = {
            "independent_set": list(self.independent_set),
            "guarantee": as_ratio(self.guarantee),
            "steps": [
                {"x": s.x, "R": list(s.slot), "delta": as_ratio(s.delta)}
                for s in self.steps
            ],
            "guaranteed": self.guaranteed,
        }
        return json.dumps(payload, separators=(", ", ": "))


def _scratch_delta(h: Hypergraph, r: int, x: int, slot: Iterable[int]) -> Fraction:
    h2, _ = remove(h, set(slot) | {x})
    return 1 + potential(h2, r) - potential(h, r)


def candidate_delta(h: Hypergraph, r: int, x: int, slot: Iterable[int]) -> Fraction:
    """Exact potential change of removing {x} union slot and keeping x.

    slot must be one of the slots of x (the empty set when x is
    isolated); InvalidSlot is raised otherwise.  The value is computed
    from scratch on the removed hypergraph, with no shortcut identities.
    """
    h._check_vertex(x)
    rset = frozenset(slot)
    for v in rset:
        h._check_vertex(v)
    if h.degree(x) == 0:
        if rset:
            raise InvalidSlot(
                f"vertex {x} is isolated and admits only the empty pseudo-slot"
            )
    else:
        slots = slot_partition(h, x, r).slots
        if rset not in slots:
            raise InvalidSlot(f"{sorted(rset)} is not a slot of vertex {x}")
    return _scratch_delta(h, r, x, rset)


def candidate_deltas(
    h: Hypergraph, r: int
) -> list[tuple[int, int, frozenset[int], Fraction]]:
    """All (x, slot index, slot, delta) candidates, from-scratch deltas.

    Isolated vertices appear as pseudo-candidates with the empty slot.
    Requires the hypotheses that make slot partitions well defined
    (r-uniform, linear).
    """
    base = potential(h, r)
    out = []
    for x in range(h.n):
        if h.degree(x) == 0:
            h2, _ = remove(h, [x])
            out.append((x, 0, frozenset(), 1 + potential(h2, r) - base))
            continue
        for j, rset in enumerate(slot_partition(h, x, r).slots):
            h2, _ = remove(h, set(rset) | {x})
            out.append((x, j, rset, 1 + potential(h2, r) - base))
    return out


def _delta_fast(h: Hypergraph, r: int, x: int, rset: frozenset[int]) -> Fraction:
    # degree-drop identity: on linear triangle-free input a surviving
    # vertex z loses exactly |N(z) & R| incident edges
    delta = 1 - potential_weight(r, h.degree(x))
    drop: dict[int, int] = {}
    for y in rset:
        delta -= potential_weight(r, h.degree(y))
        for z in h.neighborhood(y):
            drop[z] = drop.get(z, 0) + 1
    for z, c in drop.items():
        if z == x or z in rset:
            continue
        dz = h.degree(z)
        delta += potential_weight(r, dz - c) - potential_weight(r, dz)
    return delta


def _lenient_slots(h: Hypergraph, x: int, r: int) -> list[frozenset[int]]:
    # best-effort slots for overridden preconditions: j-th smallest
    # remaining vertex of each incident edge lands in slot j, overlaps
    # and short edges allowed
    slots: list[set[int]] = [set() for _ in range(r - 1)]
    for i in h.incident_edges(x):
        rest = [v for v in h.edges[i] if v != x]
        for j, v in enumerate(rest[: r - 1]):
            slots[j].add(v)
    return [frozenset(s) for s in slots]


def greedy_extract(
    h: Hypergraph, r: int, unsafe: bool = False, debug: bool = False
) -> ExtractionCertificate:
    """Extract an independent set with an exact step-by-step certificate.

    Preconditions (r-uniform, linear, triangle-free) are enforced unless
    unsafe=True; overriding them keeps the extractor running with
    best-effort slots and from-scratch deltas, but the certificate is
    marked guaranteed=False and deltas may go negative.

    Ties are broken by smallest vertex id, then smallest slot index, so
    the output is deterministic.  With debug=True the incremental delta
    of every candidate is cross-checked against the from-scratch value.

    Raises HypothesisViolated when a precondition fails (and unsafe is
    not set).
    """
    guarantee = potential(h, r)  # validates r
    if not unsafe:
        if not has_uniformity(h, r):
            raise HypothesisViolated(f"input is not {r}-uniform")
        ok, wit = is_linear(h)
        if not ok:
            raise HypothesisViolated(f"input is not linear (edges {wit})")
        ok, twit = is_triangle_free(h)
        if not ok:
            raise HypothesisViolated(
                f"input has a triangle (vertices {twit['vertices']})"
            )
    cur = h
    orig = list(range(h.n))
    pot = guarantee
    chosen: list[int] = []
    steps: list[Step] = []
    while cur.n > 0:
        if debug and not unsafe:
            # residual closure: removals keep every precondition intact
            assert has_uniformity(cur, r)
            assert is_linear(cur)[0] and is_triangle_free(cur)[0]
        iso = next((u for u in range(cur.n) if cur.degree(u) == 0), None)
        if iso is not None:
            after = pot - 1  # weight of an isolated vertex is exactly 1
            steps.append(Step(orig[iso], (), pot, after))
            chosen.append(orig[iso])
            cur, mapping = remove(cur, [iso])
            orig = [orig[old] for old in sorted(mapping)]
            pot = after
            continue
        best: Optional[tuple[Fraction, int, int, frozenset[int]]] = None
        base = potential(cur, r) if unsafe else None
        for x in range(cur.n):
            if unsafe:
                slots = _lenient_slots(cur, x, r)
            else:
                slots = slot_partition(cur, x, r).slots
            for j, rset in enumerate(slots):
                if unsafe:
                    h2, _ = remove(cur, set(rset) | {x})
                    delta = 1 + potential(h2, r) - base
                else:
                    delta = _delta_fast(cur, r, x, rset)
                    if debug:
                        assert delta == _scratch_delta(cur, r, x, rset)
                if best is None or delta > best[0]:
                    best = (delta, x, j, rset)
        delta, x, _, rset = best
        after = pot + delta - 1
        steps.append(
            Step(orig[x], tuple(sorted(orig[v] for v in rset)), pot, after)
        )
        chosen.append(orig[x])
        cur, mapping = remove(cur, set(rset) | {x})
        orig = [orig[old] for old in sorted(mapping)]
        pot = after
    return ExtractionCertificate(
        independent_set=tuple(sorted(chosen)),
        guarantee=guarantee,
        steps=tuple(steps),
        guaranteed=not unsafe,
        r=r,
    )


@dataclass(frozen=True)
class AlphaResult:
    """Independence number search result.

    exact=False means the node budget ran out and alpha is only the best
    lower bound found (with a witness set attaining it).
    """

    alpha: int
    independent_set: tuple[int, ...]
    exact: bool
    nodes: int


def exact_alpha(h: Hypergraph, budget: Optional[int] = None) -> AlphaResult:
    """Branch-and-bound independence number.

    Branches include/exclude on the highest-degree undecided vertex of a
    smallest endangered edge (an edge with no excluded vertex yet),
    pruning with the trivial upper bound |included| + |undecided|.  When
    every edge already has an excluded vertex, all undecided vertices
    are taken at once.  Exploration is exclude-first so a good incumbent
    appears on the first descent; with a node budget the search stops
    early and flags the result inexact.
    """
    n = h.n
    full = (1 << n) - 1
    edge_masks = [sum(1 << v for v in e) for e in h.edges]
    best = 0
    best_mask = 0
    nodes = 0
    exact = True
    stack: list[tuple[int, int]] = [(full, 0)] if n else []
    while stack:
        nodes += 1
        if budget is not None and nodes > budget:
            exact = False
            break
        und, inc = stack.pop()
        if (und | inc).bit_count() <= best:
            continue
        exc = full & ~(und | inc)
        pick_eu = 0
        pick_sz = n + 1
        infeasible = False
        all_hit = True
        for em in edge_masks:
            if em & exc:
                continue
            all_hit = False
            eu = em & und
            sz = eu.bit_count()
            if sz == 0:
                infeasible = True
                break
            if sz < pick_sz:
                pick_sz, pick_eu = sz, eu
        if infeasible:
            continue
        if all_hit:
            cand = und | inc
            c = cand.bit_count()
            if c > best:
                best, best_mask = c, cand
            continue
        v_pick, v_deg = -1, -1
        mm = pick_eu
        while mm:
            low = mm & -mm
            v = low.bit_length() - 1
            deg = sum(
                1 for em in edge_masks if not (em & exc) and (em >> v) & 1
            )
            if deg > v_deg:
                v_deg, v_pick = deg, v
            mm ^= low
        bit = 1 << v_pick
        stack.append((und & ~bit, inc | bit))  # include, explored second
        stack.append((und & ~bit, inc))  # exclude, explored first
    witness = tuple(v for v in range(n) if (best_mask >> v) & 1)
    return AlphaResult(alpha=best, independent_set=witness, exact=exact, nodes=nodes)


def verify_independent(
    h: Hypergraph, independent: Iterable[int]
) -> tuple[bool, Optional[int]]:
    """Check that no edge is fully contained in the given vertex set.

    Returns (True, None) or (False, i) with i the index of a violating
    edge.  Raises InvalidVertex when the set leaves the vertex range.
    """
    s = set()
    for v in independent:
        h._check_vertex(v)
        s.add(v)
    for i, e in enumerate(h.edges):
        if all(v in s for v in e):
            return False, i
    return True, None
