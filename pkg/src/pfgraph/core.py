"""Core value types for Pythagorean fuzzy graphs.

A Pythagorean fuzzy degree is a pair (mu, nu) of membership and
non-membership values in [0, 1] constrained by mu^2 + nu^2 <= 1.  A graph
carries one degree per vertex and one degree per undirected edge, where an
edge degree is bounded by its endpoints: edge mu may not exceed the smaller
vertex mu, and edge nu may not exceed the larger vertex nu.

Design choices baked into this module:

- All numeric comparisons use one absolute tolerance (default 1e-9,
  overridable through the PFG_EPSILON environment variable or
  :func:`set_tolerance`).  Worked examples in the literature use one or two
  decimals; the tolerance absorbs binary-float rounding without masking
  genuine violations.
- Graphs are simple and undirected.  Edges are keyed by a canonically
  ordered :class:`PairKey`, which makes symmetry structural; self-loops are
  rejected at key construction.
- An edge whose degree is exactly (0, 0) means "no edge" and is removed
  when the graph is built.
- Values are immutable after construction.  Operations elsewhere in the
  package return new graphs and never mutate their inputs.

Graphs holding *invalid* data are representable on purpose: :func:`validate`
turns every broken invariant into a report entry instead of an exception,
so arbitrary candidate data can be inspected.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import ConstraintViolation

DEFAULT_EPSILON = 1e-9

_epsilon = float(os.environ.get("PFG_EPSILON", DEFAULT_EPSILON))


def tolerance() -> float:
    """Return the global absolute tolerance used by all comparisons."""
    return _epsilon


def set_tolerance(eps: float) -> None:
    """Override the global tolerance (must be a small positive number)."""
    global _epsilon
    if not (eps > 0.0) or not math.isfinite(eps):
        raise ValueError(f"tolerance must be a positive finite number, got {eps!r}")
    _epsilon = float(eps)


@dataclass(frozen=True)
class PFDegree:
    """A (membership, non-membership) pair.

    The type itself is a dumb value; whether it satisfies the unit-range and
    Pythagorean constraints is checked by :func:`degree_violations` and, for
    whole graphs, by :func:`validate`.
    """

    mu: float
    nu: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.mu, self.nu)

    def is_zero(self) -> bool:
        return self.mu == 0.0 and self.nu == 0.0


ZERO_DEGREE = PFDegree(0.0, 0.0)


def degree_violations(d: PFDegree) -> list[str]:
    """Return human-readable constraint problems of a single degree pair."""
    eps = tolerance()
    problems = []
    if not (-eps <= d.mu <= 1.0 + eps):
        problems.append(f"membership {d.mu!r} outside [0, 1]")
    if not (-eps <= d.nu <= 1.0 + eps):
        problems.append(f"non-membership {d.nu!r} outside [0, 1]")
    if d.mu * d.mu + d.nu * d.nu > 1.0 + eps:
        problems.append(
            f"membership {d.mu!r} and non-membership {d.nu!r} have squared sum > 1"
        )
    return problems


def hesitation(d: PFDegree) -> float:
    """Residual indeterminacy sqrt(1 - mu^2 - nu^2) of a valid degree pair.

    Raises ConstraintViolation when the squared sum exceeds 1 beyond
    tolerance.  A radicand within tolerance of zero clamps to exactly 0.
    """
    radicand = 1.0 - d.mu * d.mu - d.nu * d.nu
    if radicand < -tolerance():
        raise ConstraintViolation(
            f"degree ({d.mu!r}, {d.nu!r}) violates the Pythagorean constraint"
        )
    if radicand <= tolerance():
        return 0.0
    return math.sqrt(radicand)


def degree_min_max(a: PFDegree, b: PFDegree) -> PFDegree:
    """Combine two degrees taking the smaller membership and larger non-membership.

    For valid inputs the result is always valid: the degree supplying the
    larger nu also bounds the smaller mu, so the squared sum cannot grow.
    """
    return PFDegree(min(a.mu, b.mu), max(a.nu, b.nu))


def degree_max_min(a: PFDegree, b: PFDegree) -> PFDegree:
    """Combine two degrees taking the larger membership and smaller non-membership."""
    return PFDegree(max(a.mu, b.mu), min(a.nu, b.nu))


@dataclass(frozen=True, order=True)
class PairKey:
    """Canonical unordered pair of vertex labels (the edge key).

    ``PairKey(u, v) == PairKey(v, u)`` by construction; self-loops are
    rejected because the underlying graphs are simple.
    """

    lo: str
    hi: str

    def __init__(self, u: str, v: str) -> None:
        if u == v:
            raise ValueError(f"self-loop on vertex {u!r} is not allowed")
        lo, hi = (u, v) if u < v else (v, u)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __iter__(self) -> Iterator[str]:
        yield self.lo
        yield self.hi

    def other(self, v: str) -> str:
        if v == self.lo:
            return self.hi
        if v == self.hi:
            return self.lo
        raise KeyError(v)

    def __str__(self) -> str:
        return f"{self.lo}-{self.hi}"


@dataclass(frozen=True)
class PFGraph:
    """An immutable Pythagorean fuzzy graph: vertex degrees plus edge degrees.

    Construction copies both maps, accepts edge keys given either as
    PairKey or as a plain (u, v) tuple, and drops edges whose degree is
    exactly (0, 0).  No other checking happens here; use :func:`validate`.
    """

    vertices: Mapping[str, PFDegree]
    edges: Mapping[PairKey, PFDegree] = field(default_factory=dict)

    def __init__(self, vertices, edges=()):
        object.__setattr__(self, "vertices", dict(vertices))
        normalized = {}
        edge_items = edges.items() if isinstance(edges, Mapping) else edges
        for key, degree in edge_items:
            if not isinstance(key, PairKey):
                key = PairKey(*key)
            if not degree.is_zero():
                normalized[key] = degree
        object.__setattr__(self, "edges", normalized)

    def vertex_degree(self, v: str) -> PFDegree:
        return self.vertices[v]

    def has_edge(self, u: str, v: str) -> bool:
        return PairKey(u, v) in self.edges

    def edge_degree(self, u: str, v: str) -> PFDegree:
        """Degree of the edge between u and v, or (0, 0) when absent."""
        return self.edges.get(PairKey(u, v), ZERO_DEGREE)

    def pairs(self) -> Iterator[PairKey]:
        """All unordered pairs of distinct vertices, edge or not."""
        labels = sorted(self.vertices)
        for i, u in enumerate(labels):
            for v in labels[i + 1:]:
                yield PairKey(u, v)

    def pair_bound(self, u: str, v: str) -> PFDegree:
        """The largest degree an edge between u and v may carry."""
        return degree_min_max(self.vertices[u], self.vertices[v])


@dataclass(frozen=True)
class Violation:
    """One broken invariant: what kind, where, and the offending numbers."""

    kind: str
    where: str
    detail: str

    def as_dict(self) -> dict:
        return {"kind": self.kind, "where": self.where, "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "valid": self.ok,
            "violations": [v.as_dict() for v in self.violations],
        }


def validate(g: PFGraph) -> ValidationReport:
    """Check every graph invariant and report all violations found.

    An empty report means g is a well-formed Pythagorean fuzzy graph.
    Violations are data, not failures: arbitrary candidate graphs are
    accepted and described.
    """
    eps = tolerance()
    found: list[Violation] = []

    for label, degree in g.vertices.items():
        if not isinstance(label, str) or not label:
            found.append(
                Violation("bad_vertex_id", repr(label), "vertex ids must be non-empty strings")
            )
        for problem in degree_violations(degree):
            found.append(Violation("bad_vertex_degree", str(label), problem))

    for key, degree in g.edges.items():
        missing = [v for v in key if v not in g.vertices]
        if missing:
            found.append(
                Violation(
                    "dangling_edge",
                    str(key),
                    f"endpoint(s) {', '.join(map(repr, missing))} not in the vertex set",
                )
            )
            continue
        for problem in degree_violations(degree):
            found.append(Violation("bad_edge_degree", str(key), problem))
        bound = g.pair_bound(key.lo, key.hi)
        if degree.mu > bound.mu + eps:
            found.append(
                Violation(
                    "edge_membership_above_bound",
                    str(key),
                    f"edge membership {degree.mu!r} exceeds endpoint minimum {bound.mu!r}",
                )
            )
        if degree.nu > bound.nu + eps:
            found.append(
                Violation(
                    "edge_nonmembership_above_bound",
                    str(key),
                    f"edge non-membership {degree.nu!r} exceeds endpoint maximum {bound.nu!r}",
                )
            )

    return ValidationReport(tuple(found))


def degrees_close(a: PFDegree, b: PFDegree, eps: float | None = None) -> bool:
    if eps is None:
        eps = tolerance()
    return abs(a.mu - b.mu) <= eps and abs(a.nu - b.nu) <= eps


def graphs_close(g1: PFGraph, g2: PFGraph, eps: float | None = None) -> bool:
    """Equality up to tolerance: same vertices, all degrees within eps.

    Edge presence may differ only where the present degree is within eps of
    (0, 0), because absent edges read as exactly (0, 0).
    """
    if eps is None:
        eps = tolerance()
    if set(g1.vertices) != set(g2.vertices):
        return False
    for label in g1.vertices:
        if not degrees_close(g1.vertices[label], g2.vertices[label], eps):
            return False
    for key in set(g1.edges) | set(g2.edges):
        d1 = g1.edges.get(key, ZERO_DEGREE)
        d2 = g2.edges.get(key, ZERO_DEGREE)
        if not degrees_close(d1, d2, eps):
            return False
    return True
