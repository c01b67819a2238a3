"""Independent ground truth: Bron-Kerbosch enumeration and differencing.

This module never touches the arithmetic encoding; it works on plain
vertex sets so it can serve as the reference the encoded solver is
checked against. Correctness over speed throughout.
"""

from dataclasses import dataclass

from .encoding import Graph

__all__ = ["bron_kerbosch", "is_clique", "is_maximal", "diff", "DiffReport"]


def bron_kerbosch(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques of g, as frozensets in a canonical sorted order.

    Classic recursion with pivoting: at each node a pivot u is chosen from
    candidates + excluded with the most neighbors among the candidates,
    and only candidates outside N(u) are branched on. Pivot choice and
    branch order are tie-broken by vertex id, so output is deterministic.
    """
    adj = g.adjacency()
    found: list[frozenset[int]] = []

    def expand(grown: set[int], candidates: set[int], excluded: set[int]) -> None:
        if not candidates and not excluded:
            found.append(frozenset(grown))
            return
        pivot = max(
            sorted(candidates | excluded),
            key=lambda u: len(candidates & adj[u]),
        )
        for v in sorted(candidates - adj[pivot]):
            expand(grown | {v}, candidates & adj[v], excluded & adj[v])
            candidates.remove(v)
            excluded.add(v)

    if g.n > 0:
        expand(set(), set(g.vertices()), set())
    return sorted(found, key=sorted)


def is_clique(g: Graph, s: set[int]) -> bool:
    """True iff every pair in s is an edge of g."""
    members = sorted(s)
    for v in members:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} not in graph of size {g.n}")
    return all(
        (members[i], members[j]) in g.edges
        for i in range(len(members))
        for j in range(i + 1, len(members))
    )


def is_maximal(g: Graph, s: set[int]) -> bool:
    """True iff the clique s cannot be extended by any outside vertex."""
    if not is_clique(g, s):
        raise ValueError(f"{sorted(s)} is not a clique")
    adj = g.adjacency()
    return not any(s <= adj[v] for v in g.vertices() if v not in s)


@dataclass(frozen=True)
class DiffReport:
    """Two-way difference between solver output and oracle output."""

    missing: frozenset[frozenset[int]]
    extra: frozenset[frozenset[int]]
    matched: int

    @property
    def equal(self) -> bool:
        return not self.missing and not self.extra


def diff(solver_out, oracle_out) -> DiffReport:
    """Compare clique collections: missing = oracle only, extra = solver only."""
    solver_set = {frozenset(c) for c in solver_out}
    oracle_set = {frozenset(c) for c in oracle_out}
    return DiffReport(
        missing=frozenset(oracle_set - solver_set),
        extra=frozenset(solver_set - oracle_set),
        matched=len(solver_set & oracle_set),
    )
