"""Structural predicates with failure witnesses.

Every predicate that can fail returns a witness that reproduces the
violation when checked against the hypergraph, so negative answers are
auditable.  ``property_report`` bundles all predicates into one record
with a stable JSON form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Union

from .core import Hypergraph
from .errors import NotLinear

__all__ = [
    "VACUOUS",
    "is_uniform",
    "has_uniformity",
    "is_linear",
    "is_triangle_free",
    "is_double_linear",
    "neighborhood_max_degree",
    "PropertyReport",
    "property_report",
]

# Convention value returned by is_uniform for an edgeless hypergraph,
# which is r-uniform for every r.
VACUOUS = "vacuous"


def is_uniform(h: Hypergraph) -> Union[int, str, None]:
    """Common edge cardinality, VACUOUS for edgeless h, None if mixed."""
    if not h.edges:
        return VACUOUS
    sizes = {len(e) for e in h.edges}
    if len(sizes) == 1:
        return sizes.pop()
    return None


def has_uniformity(h: Hypergraph, r: int) -> bool:
    """True when every edge has exactly r vertices (vacuously for no edges)."""
    u = is_uniform(h)
    return u == VACUOUS or u == r


def is_linear(h: Hypergraph) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check that any two edges share at most one vertex.

    Returns (True, None) or (False, (i, j)) where edges i and j share
    at least two vertices.
    """
    pair_edge: dict[tuple[int, int], int] = {}
    for i, e in enumerate(h.edges):
        for a_pos in range(len(e)):
            for b_pos in range(a_pos + 1, len(e)):
                pair = (e[a_pos], e[b_pos])
                j = pair_edge.get(pair)
                if j is not None:
                    return False, (j, i)
                pair_edge[pair] = i
    return True, None


def _pair_edges(h: Hypergraph) -> dict[tuple[int, int], list[int]]:
    out: dict[tuple[int, int], list[int]] = {}
    for i, e in enumerate(h.edges):
        for a_pos in range(len(e)):
            for b_pos in range(a_pos + 1, len(e)):
                out.setdefault((e[a_pos], e[b_pos]), []).append(i)
    return out


def is_triangle_free(
    h: Hypergraph,
) -> tuple[bool, Optional[dict[str, tuple[int, ...]]]]:
    """Search for three vertices and three distinct edges forming a triangle.

    A triangle is vertices (u1, u2, u3) with distinct edges (e1, e2, e3)
    such that each ei contains the two vertices other than ui.  Works on
    non-linear input too: a pair may then lie in several edges and all
    choices of distinct representatives are tried.

    Returns (True, None) or (False, witness) with witness keys
    "vertices" = (u1, u2, u3) and "edges" = (e1, e2, e3) as edge indexes.
    """
    pair_edges = _pair_edges(h)
    for (a, b) in sorted(pair_edges):
        common = sorted(h.neighborhood(a) & h.neighborhood(b))
        for c in common:
            if c <= b:
                # triple {a,b,c} is handled at its two smallest vertices
                continue
            e_bc = pair_edges.get((b, c), ())
            e_ac = pair_edges.get((a, c), ())
            if not e_bc or not e_ac:
                continue
            e_ab = pair_edges[(a, b)]
            for i1 in e_bc:
                for i2 in e_ac:
                    if i2 == i1:
                        continue
                    for i3 in e_ab:
                        if i3 != i1 and i3 != i2:
                            return False, {
                                "vertices": (a, b, c),
                                "edges": (i1, i2, i3),
                            }
    return True, None


def is_double_linear(
    h: Hypergraph,
) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Check that edges see non-adjacent neighborhoods at most once.

    Requires h linear (raises NotLinear otherwise).  Fails when some
    edge through a vertex u contains two or more neighbors of a vertex v
    that is distinct from and non-adjacent to u.

    Returns (True, None) or (False, (u, v, i)) with i the edge index.
    """
    ok, _ = is_linear(h)
    if not ok:
        raise NotLinear("double linearity is only defined for linear input")
    for i, e in enumerate(h.edges):
        count: dict[int, int] = {}
        for w in e:
            for v in h.neighborhood(w):
                count[v] = count.get(v, 0) + 1
        for v in sorted(count):
            if count[v] < 2:
                continue
            nv = h.neighborhood(v)
            for u in e:
                if u != v and u not in nv:
                    return False, (u, v, i)
    return True, None


def neighborhood_max_degree(h: Hypergraph) -> int:
    """Largest degree in any subhypergraph induced by a vertex neighborhood.

    The subhypergraph induced by N(u) keeps exactly the edges fully
    contained in N(u); the degree of z there counts those edges through
    z.  Returns 0 when no edge fits inside any neighborhood.
    """
    best = 0
    for u in range(h.n):
        s = h.neighborhood(u)
        if not s:
            continue
        count: dict[int, int] = {}
        for e in h.edges:
            if all(w in s for w in e):
                for z in e:
                    count[z] = count.get(z, 0) + 1
        if count:
            best = max(best, max(count.values()))
    return best


@dataclass(frozen=True)
class PropertyReport:
    """All structural predicates of a hypergraph in one record."""

    uniform_r: Union[int, str, None]
    linear: bool
    triangle_free: bool
    double_linear: bool
    nbhd_max_degree: int
    witness: Optional[dict]

    def hypotheses_hold(self) -> bool:
        """True when the input is r-uniform (some r), linear, triangle-free."""
        return self.uniform_r is not None and self.linear and self.triangle_free

    def to_json(self) -> str:
        payload = {
            "uniform_r": self.uniform_r,
            "linear": self.linear,
            "triangle_free": self.triangle_free,
            "double_linear": self.double_linear,
            "nbhd_max_degree": self.nbhd_max_degree,
            "witness": self.witness,
        }
        return json.dumps(payload, separators=(", ", ": "))


def property_report(h: Hypergraph) -> PropertyReport:
    """Evaluate every predicate and collect failure witnesses.

    Witnesses record edges both as indexes and vertex tuples so they can
    be re-verified without the original object.  A non-linear input
    reports double_linear as False (the property presupposes linearity).
    """
    witness: dict = {}
    uniform_r = is_uniform(h)
    linear, lin_wit = is_linear(h)
    if lin_wit is not None:
        i, j = lin_wit
        witness["linear"] = {
            "edges": [i, j],
            "shared": sorted(set(h.edges[i]) & set(h.edges[j])),
        }
    tri_free, tri_wit = is_triangle_free(h)
    if tri_wit is not None:
        witness["triangle"] = {
            "vertices": list(tri_wit["vertices"]),
            "edges": list(tri_wit["edges"]),
        }
    if linear:
        double, dl_wit = is_double_linear(h)
        if dl_wit is not None:
            u, v, i = dl_wit
            witness["double_linear"] = {"u": u, "v": v, "edge": i}
    else:
        double = False
    return PropertyReport(
        uniform_r=uniform_r,
        linear=linear,
        triangle_free=tri_free,
        double_linear=double,
        nbhd_max_degree=neighborhood_max_degree(h),
        witness=witness or None,
    )
