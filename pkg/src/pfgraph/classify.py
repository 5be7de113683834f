"""Classification predicates and self-complementarity checks.

A graph is mu-strong when every edge's membership attains the endpoint
minimum, nu-strong when every edge's non-membership attains the endpoint
maximum, and strong when both hold.  Completeness asks for both equalities
on every unordered vertex pair, reading absent edges as (0, 0).  The
complete-mu-strong and complete-nu-strong variants replace one of the
all-pairs equalities with a strict inequality (a gap larger than the
tolerance).

Self-complementarity asks whether the graph is isomorphic to its own
complement, under the complement variant matching how the graph classifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .algebra import complement, complete_complement, strong_complement
from .core import PFDegree, PFGraph, PairKey, tolerance
from .morphism import MorphismKind, MorphismReport, find_morphism


@dataclass(frozen=True)
class Classification:
    """Strength and completeness profile plus one offending pair per false flag."""

    is_mu_strong: bool
    is_nu_strong: bool
    is_strong: bool
    is_complete: bool
    is_complete_mu_strong: bool
    is_complete_nu_strong: bool
    witnesses: Mapping[str, tuple[str, str]]

    def as_dict(self) -> dict:
        return {
            "is_mu_strong": self.is_mu_strong,
            "is_nu_strong": self.is_nu_strong,
            "is_strong": self.is_strong,
            "is_complete": self.is_complete,
            "is_complete_mu_strong": self.is_complete_mu_strong,
            "is_complete_nu_strong": self.is_complete_nu_strong,
            "witnesses": {flag: list(pair) for flag, pair in self.witnesses.items()},
        }


def classify(g: PFGraph) -> Classification:
    eps = tolerance()
    witnesses: dict[str, tuple[str, str]] = {}

    def note(flag: str, key: PairKey) -> None:
        witnesses.setdefault(flag, (key.lo, key.hi))

    mu_strong = nu_strong = True
    for key, degree in sorted(g.edges.items()):
        bound = g.pair_bound(key.lo, key.hi)
        if abs(degree.mu - bound.mu) > eps:
            mu_strong = False
            note("is_mu_strong", key)
        if abs(degree.nu - bound.nu) > eps:
            nu_strong = False
            note("is_nu_strong", key)

    complete = complete_mu = complete_nu = True
    for key in g.pairs():
        bound = g.pair_bound(key.lo, key.hi)
        degree = g.edge_degree(key.lo, key.hi)
        mu_equal = abs(degree.mu - bound.mu) <= eps
        nu_equal = abs(degree.nu - bound.nu) <= eps
        mu_below = bound.mu - degree.mu > eps
        nu_below = bound.nu - degree.nu > eps
        if not (mu_equal and nu_equal):
            complete = False
            note("is_complete", key)
        if not (mu_equal and nu_below):
            complete_mu = False
            note("is_complete_mu_strong", key)
        if not (mu_below and nu_equal):
            complete_nu = False
            note("is_complete_nu_strong", key)

    strong = mu_strong and nu_strong
    if not strong:
        first = witnesses.get("is_mu_strong") or witnesses.get("is_nu_strong")
        if first is not None:
            witnesses.setdefault("is_strong", first)
    return Classification(
        mu_strong, nu_strong, strong, complete, complete_mu, complete_nu, witnesses
    )


@dataclass(frozen=True)
class SumIdentityReport:
    """Totals of edge degrees against totals of pair bounds, with verdicts."""

    lhs_mu: float
    rhs_mu: float
    lhs_nu: float
    rhs_nu: float
    holds_mu: bool
    holds_nu: bool

    def as_dict(self) -> dict:
        return {
            "lhs_mu": self.lhs_mu,
            "rhs_mu": self.rhs_mu,
            "lhs_nu": self.lhs_nu,
            "rhs_nu": self.rhs_nu,
            "holds_mu": self.holds_mu,
            "holds_nu": self.holds_nu,
        }


def _pair_totals(g: PFGraph) -> tuple[float, float, float, float]:
    edge_mu = edge_nu = bound_mu = bound_nu = 0.0
    for key in g.pairs():
        degree = g.edge_degree(key.lo, key.hi)
        bound = g.pair_bound(key.lo, key.hi)
        edge_mu += degree.mu
        edge_nu += degree.nu
        bound_mu += bound.mu
        bound_nu += bound.nu
    return edge_mu, edge_nu, bound_mu, bound_nu


def _sum_report(g: PFGraph, factor: float) -> SumIdentityReport:
    eps = tolerance()
    edge_mu, edge_nu, bound_mu, bound_nu = _pair_totals(g)
    rhs_mu = factor * bound_mu
    rhs_nu = factor * bound_nu
    return SumIdentityReport(
        lhs_mu=edge_mu,
        rhs_mu=rhs_mu,
        lhs_nu=edge_nu,
        rhs_nu=rhs_nu,
        holds_mu=abs(edge_mu - rhs_mu) <= eps,
        holds_nu=abs(edge_nu - rhs_nu) <= eps,
    )


def sum_identity(g: PFGraph) -> SumIdentityReport:
    """Edge-degree totals against half the pair-bound totals.

    Every graph isomorphic to its general complement satisfies both
    equalities; the converse does not hold.
    """
    return _sum_report(g, 0.5)


def strong_sum_identity(g: PFGraph) -> SumIdentityReport:
    """Edge-degree totals against the full pair-bound totals (no half factor)."""
    return _sum_report(g, 1.0)


SELF_COMPLEMENT_VARIANTS = ("general", "strong", "complete")


def is_self_complementary(
    g: PFGraph, variant: str = "general", cap: Optional[int] = None
) -> MorphismReport:
    """Search for an isomorphism between g and its complement.

    ``variant`` picks the complement flavor: "general" works on any valid
    graph, "strong" and "complete" require the graph to classify
    accordingly (raising NotStrong/NotComplete otherwise).  The returned
    report carries the witness bijection when one exists.
    """
    if variant == "general":
        comp = complement(g)
    elif variant == "strong":
        comp = strong_complement(g)
    elif variant == "complete":
        comp = complete_complement(g)
    else:
        raise ValueError(
            f"unknown variant {variant!r}; expected one of {SELF_COMPLEMENT_VARIANTS}"
        )
    kwargs = {} if cap is None else {"cap": cap}
    return find_morphism(g, comp, MorphismKind.ISOMORPHISM, **kwargs)


def half_strong_construction(p: Mapping[str, PFDegree]) -> PFGraph:
    """Build the graph on all pairs whose edges carry half the attainable bound.

    Each pair (u, v) receives membership min(mu_u, mu_v)/2 and
    non-membership max(nu_u, nu_v)/2.  The output is always valid and is
    isomorphic to its own general complement under the identity map.
    """
    vertices = dict(p)
    labels = sorted(vertices)
    edges: dict[PairKey, PFDegree] = {}
    for i, u in enumerate(labels):
        for v in labels[i + 1:]:
            du, dv = vertices[u], vertices[v]
            edges[PairKey(u, v)] = PFDegree(
                0.5 * min(du.mu, dv.mu), 0.5 * max(du.nu, dv.nu)
            )
    return PFGraph(vertices, edges)
