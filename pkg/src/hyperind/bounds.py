"""Degree-sequence lower bounds on the independence number.

Four families of per-vertex weight functions are provided:

* ``potential_weight`` -- exact rational recurrence; its sum over the
  degree sequence (``potential``) is the guarantee attained by the
  greedy extractor for r-uniform linear triangle-free input.
* ``caro_tuza`` -- the classical product-form weight, for comparison.
* ``shearer_s1`` / ``shearer_s2`` -- the two graph (r = 2) bounds;
  ``potential_weight`` at r = 2 reduces exactly to ``shearer_s2``.
* ``li_zang`` / ``chishti`` -- integral-form bounds evaluated by
  adaptive Gauss-Legendre quadrature with certified tolerance.

The integral kernels are implemented with a "+" sign in the denominator
(``m + (x-m)t`` and ``1 + ((r-1)x - 1)t``).  The widely reprinted "-"
variants develop a pole inside (0, 1) once x > 2m (resp. x > 2/(r-1))
and already disagree with the exact r = 2 closed form at pole-free
arguments, while the "+" kernels reproduce it to machine precision; the
reprinted form stays available via ``kernel="printed"`` and raises on
interior poles.
"""

from __future__ import annotations

import heapq
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

import numpy as np

from .core import Hypergraph
from .errors import (
    BadUniformity,
    EmptyHypergraph,
    NegativeDegree,
    NonConvergent,
)

__all__ = [
    "potential_weight",
    "caro_tuza",
    "shearer_s1",
    "shearer_s2",
    "convexity_minorant",
    "li_zang",
    "chishti",
    "potential",
    "caro_tuza_total",
    "chishti_bound",
    "BoundValue",
    "TableRow",
    "bound_table",
    "table_to_csv",
    "table_to_json",
    "as_ratio",
]

Real = Union[int, float, Fraction]


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 2:
        raise BadUniformity(f"uniformity must be an integer >= 2, got {r!r}")


def _check_d(d: int) -> None:
    if not isinstance(d, int) or d < 0:
        raise NegativeDegree(f"degree must be a non-negative integer, got {d!r}")


# ---------------------------------------------------------------------------
# exact rational recurrences
# ---------------------------------------------------------------------------

_WEIGHT_CACHE: dict[int, list[Fraction]] = {}
_CT_CACHE: dict[int, list[Fraction]] = {}
_S2_CACHE: list[Fraction] = [Fraction(1)]


def potential_weight(r: int, d: int) -> Fraction:
    """Weight of a degree-d vertex in the potential bound, exact.

    w(0) = 1 and

        w(d) = (1 + ((r-1)d^2 - d) w(d-1)) / (1 + (r-1)d^2).

    The weight is non-increasing and convex in d, and summing it over
    the degree sequence of an r-uniform linear triangle-free hypergraph
    lower-bounds the independence number.
    """
    _check_r(r)
    _check_d(d)
    vals = _WEIGHT_CACHE.setdefault(r, [Fraction(1)])
    while len(vals) <= d:
        k = len(vals)
        c = (r - 1) * k * k
        vals.append((1 + (c - k) * vals[-1]) / (1 + c))
    return vals[d]


def caro_tuza(r: int, d: int) -> Fraction:
    """Classical product-form weight, exact:  prod_{i<=d} (r-1)i / ((r-1)i + 1).

    Equals the inverse generalized binomial coefficient C(d + 1/(r-1), d)^-1.
    """
    _check_r(r)
    _check_d(d)
    vals = _CT_CACHE.setdefault(r, [Fraction(1)])
    while len(vals) <= d:
        k = len(vals)
        vals.append(vals[-1] * ((r - 1) * k) / ((r - 1) * k + 1))
    return vals[d]


def shearer_s2(d: int) -> Fraction:
    """Graph bound from the difference equation, exact.

    (d+1) f(d) = 1 + (d - d^2)(f(d) - f(d-1)) with f(0) = 1, rearranged
    to f(d) = (1 + (d^2 - d) f(d-1)) / (1 + d^2).
    """
    _check_d(d)
    while len(_S2_CACHE) <= d:
        k = len(_S2_CACHE)
        _S2_CACHE.append((1 + (k * k - k) * _S2_CACHE[-1]) / (1 + k * k))
    return _S2_CACHE[d]


def shearer_s1(d: Real) -> float:
    """Graph bound (d ln d - d + 1) / (d - 1)^2 at a real argument d >= 0.

    The removable singularity at d = 1 (limit 1/2) is bridged by a
    three-term series in e = d - 1 for |e| < 1e-4; at d = 0 the value
    is exactly 1.
    """
    x = float(d)
    if x < 0:
        raise NegativeDegree(f"degree must be non-negative, got {d!r}")
    if x == 0.0:
        return 1.0
    e = x - 1.0
    if abs(e) < 1e-4:
        return 0.5 - e / 6.0 + e * e / 12.0
    return (x * math.log(x) - x + 1.0) / (e * e)


def convexity_minorant(r: int, d: int) -> Fraction:
    """Explicit rational minorant ((2r-1)d + 3r) / (r(d^2 + 5d + 5)).

    Lies below potential_weight(r, .) for all d >= 0 and certifies its
    convexity; equals 3/5 at d = 0 for every r.
    """
    _check_r(r)
    _check_d(d)
    return Fraction((2 * r - 1) * d + 3 * r, r * (d * d + 5 * d + 5))


# ---------------------------------------------------------------------------
# adaptive Gauss-Legendre quadrature
# ---------------------------------------------------------------------------

_GL_NODES: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _leggauss(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _GL_NODES:
        _GL_NODES[order] = np.polynomial.legendre.leggauss(order)
    return _GL_NODES[order]


def _adaptive_gl(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    tol: float,
    max_panels: int = 20000,
) -> float:
    """Globally adaptive Gauss-Legendre integration of f over [lo, hi].

    Each panel carries a GL15 value and the estimate |GL15 - GL7|; the
    worst panel is halved until the summed estimate drops below tol.
    Panels are summed in position order so the result does not depend
    on heap internals.  Raises NonConvergent when the panel budget runs
    out or the worst panel can no longer be split in float arithmetic.
    """
    x7, w7 = _leggauss(7)
    x15, w15 = _leggauss(15)

    def panel(a: float, b: float) -> tuple[float, float]:
        c, hw = 0.5 * (a + b), 0.5 * (b - a)
        v15 = hw * float(np.dot(w15, f(c + hw * x15)))
        v7 = hw * float(np.dot(w7, f(c + hw * x7)))
        return v15, abs(v15 - v7)

    v, e = panel(lo, hi)
    heap = [(-e, lo, hi, v)]
    total_err = e
    splits = 0
    while total_err > tol:
        splits += 1
        if splits > max_panels:
            raise NonConvergent(
                f"estimated error {total_err:.3e} still above tol={tol:.3e} "
                f"after {max_panels} panel splits"
            )
        neg_e, a, b, _ = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if not (a < mid < b):
            raise NonConvergent(
                "panel collapsed below float resolution before reaching tol"
            )
        v1, e1 = panel(a, mid)
        v2, e2 = panel(mid, b)
        total_err += e1 + e2 + neg_e
        heapq.heappush(heap, (-e1, a, mid, v1))
        heapq.heappush(heap, (-e2, mid, b, v2))
    return math.fsum(item[3] for item in sorted(heap, key=lambda t: t[1]))


def _beta(alpha: float, beta: float) -> float:
    return math.exp(
        math.lgamma(alpha) + math.lgamma(beta) - math.lgamma(alpha + beta)
    )


def _check_x(x: Real) -> float:
    xf = float(x)
    if xf < 0:
        raise NegativeDegree(f"argument must be non-negative, got {x!r}")
    return xf


def _check_kernel(kernel: str) -> bool:
    if kernel not in ("corrected", "printed"):
        raise ValueError(f"kernel must be 'corrected' or 'printed', got {kernel!r}")
    return kernel == "corrected"


def li_zang(
    r: int, m: int, x: Real, tol: float = 1e-9, kernel: str = "corrected"
) -> float:
    """Integral-form bound with neighborhood-degree parameter m.

    Evaluates (m/B) int_0^1 (1-t)^(a/m) / (t^b (m + (x-m)t)) dt with
    a = 1/(r-1)^2, b = (r-2)/(r-1) and normalizer B = Beta(1/(r-1), a/m)
    computed via log-Gamma.  The substitution t = u^(r-1) removes the
    t^-b endpoint singularity before quadrature.  At x = 0 the kernel
    reduces to m(1-t) and the integral cancels against B exactly, so
    1.0 is returned without quadrature.

    With kernel="printed" the denominator sign flips to m - (x-m)t;
    that form has a pole at t = m/(x-m) inside (0,1) whenever x > 2m
    and NonConvergent is raised there.

    |result - true value| <= tol on success.
    """
    _check_r(r)
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be an integer >= 1, got {m!r}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    corrected = _check_kernel(kernel)
    xf = _check_x(x)
    if not corrected and xf > 2 * m:
        raise NonConvergent(
            f"printed kernel has an interior pole at t = {m / (xf - m):.6g} "
            f"for x = {xf} > 2m = {2 * m}; use the corrected kernel"
        )
    if xf == 0.0:
        return 1.0
    rm1 = r - 1
    gamma = 1.0 / (rm1 * rm1 * m)  # exponent a/m
    bnorm = _beta(1.0 / rm1, gamma)
    sign = 1.0 if corrected else -1.0

    def f(u: np.ndarray) -> np.ndarray:
        t = np.minimum(u ** rm1, 1.0)
        return rm1 * (1.0 - t) ** gamma / (m + sign * (xf - m) * t)

    integral = _adaptive_gl(f, 0.0, 1.0, tol * bnorm / m)
    return (m / bnorm) * integral


def chishti(r: int, x: Real, tol: float = 1e-9, kernel: str = "corrected") -> float:
    """Integral-form bound 1/(r-1) int_0^1 (1-t) / (t^b (1 + ((r-1)x - 1)t)) dt.

    Same conventions as li_zang: t = u^(r-1) substitution (the 1/(r-1)
    prefactor then cancels), log-Gamma-free since no normalizer appears,
    exact 1.0 at x = 0, and kernel="printed" flips the denominator sign
    (pole inside (0,1) for x > 2/(r-1), raising NonConvergent).

    |result - true value| <= tol on success.
    """
    _check_r(r)
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    corrected = _check_kernel(kernel)
    xf = _check_x(x)
    if not corrected and (r - 1) * xf - 1.0 > 1.0:
        raise NonConvergent(
            f"printed kernel has an interior pole at t = {1.0 / ((r - 1) * xf - 1.0):.6g} "
            f"for x = {xf} > 2/(r-1); use the corrected kernel"
        )
    if xf == 0.0:
        return 1.0
    rm1 = r - 1
    coef = (rm1 * xf - 1.0) if corrected else -(rm1 * xf - 1.0)

    def f(u: np.ndarray) -> np.ndarray:
        t = np.minimum(u ** rm1, 1.0)
        return (1.0 - t) / (1.0 + coef * t)

    return _adaptive_gl(f, 0.0, 1.0, tol)


# ---------------------------------------------------------------------------
# hypergraph-level bounds
# ---------------------------------------------------------------------------


def potential(h: Hypergraph, r: int) -> Fraction:
    """Sum of potential_weight(r, degree(u)) over all vertices, exact.

    For r-uniform linear triangle-free h this lower-bounds the
    independence number; it is the guarantee the greedy extractor
    certifies.
    """
    _check_r(r)
    return sum(
        (count * potential_weight(r, d) for d, count in h.degree_histogram().items()),
        start=Fraction(0),
    )


def caro_tuza_total(h: Hypergraph, r: int) -> Fraction:
    """Sum of caro_tuza(r, degree(u)) over all vertices, exact."""
    _check_r(r)
    return sum(
        (count * caro_tuza(r, d) for d, count in h.degree_histogram().items()),
        start=Fraction(0),
    )


def chishti_bound(h: Hypergraph, r: int, tol: float = 1e-9) -> float:
    """n times the chishti value at the average degree.

    |result - true value| <= n * tol.  Raises EmptyHypergraph for n = 0.
    """
    _check_r(r)
    if h.n == 0:
        raise EmptyHypergraph("bound needs at least one vertex")
    return h.n * chishti(r, h.average_degree(), tol)


# ---------------------------------------------------------------------------
# comparison tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundValue:
    """One evaluated bound: exact Fraction or float with |error| <= error."""

    kind: str
    r: int
    argument: Real
    value: Union[Fraction, float]
    error: float = 0.0


@dataclass(frozen=True)
class TableRow:
    """All four bound columns at one degree."""

    d: int
    f_lz: BoundValue
    f_czpi: BoundValue
    f_ct: BoundValue
    f_r: BoundValue


def as_ratio(x: Fraction) -> str:
    """Render an exact value as 'p/q'."""
    return f"{x.numerator}/{x.denominator}"


def bound_table(
    r: int,
    d_max: int,
    m: int = 1,
    tol: float = 1e-9,
    max_workers: int = 1,
) -> list[TableRow]:
    """Evaluate all four bounds at d = 0..d_max.

    The two quadrature columns may be evaluated concurrently with
    max_workers threads; rows are assembled by index so the result is
    bit-identical to the sequential one.
    """
    _check_r(r)
    _check_d(d_max)
    # prime shared caches so worker threads only read
    potential_weight(r, d_max)
    caro_tuza(r, d_max)
    _leggauss(7)
    _leggauss(15)
    ds = list(range(d_max + 1))

    def quad_pair(d: int) -> tuple[float, float]:
        return li_zang(r, m, d, tol), chishti(r, d, tol)

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=min(max_workers, len(ds))) as pool:
            pairs = list(pool.map(quad_pair, ds))
    else:
        pairs = [quad_pair(d) for d in ds]
    rows = []
    for d, (lz, cz) in zip(ds, pairs):
        rows.append(
            TableRow(
                d=d,
                f_lz=BoundValue("f_LZ", r, d, lz, tol),
                f_czpi=BoundValue("f_CZPI", r, d, cz, tol),
                f_ct=BoundValue("f_CT", r, d, caro_tuza(r, d)),
                f_r=BoundValue("f_r", r, d, potential_weight(r, d)),
            )
        )
    return rows


def table_to_csv(rows: list[TableRow]) -> str:
    """CSV with header d,f_LZ,f_CZPI,f_CT,f_r; six decimals, LF endings."""
    lines = ["d,f_LZ,f_CZPI,f_CT,f_r"]
    for row in rows:
        lines.append(
            f"{row.d},{row.f_lz.value:.6f},{row.f_czpi.value:.6f},"
            f"{float(row.f_ct.value):.6f},{float(row.f_r.value):.6f}"
        )
    return "\n".join(lines) + "\n"


def table_to_json(rows: list[TableRow], r: int, m: int, tol: float) -> str:
    """JSON table; exact columns as 'p/q' strings, quadrature columns as floats."""
    import json

    payload = {
        "r": r,
        "m": m,
        "tol": tol,
        "rows": [
            {
                "d": row.d,
                "f_LZ": row.f_lz.value,
                "f_CZPI": row.f_czpi.value,
                "f_CT": as_ratio(row.f_ct.value),
                "f_r": as_ratio(row.f_r.value),
            }
            for row in rows
        ],
    }
    return json.dumps(payload, separators=(", ", ": "))
