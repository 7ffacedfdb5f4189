"""Exact location-domination solver: membership test, lower bounds, subset search.

A set L is locating-dominating when every vertex outside L sees a nonempty
slice of L through its open neighborhood (the vertex's "trace") and no two
outside vertices share a trace. The location-domination number is the
minimum size of such a set.

``lambda_exact`` walks candidate cardinalities upward, starting from the
larger of two sound lower bounds:

* counting: the outside vertices need pairwise distinct nonempty subsets of
  L, so ``order - size <= 2**size - 1`` must hold for any hit;
* twins: any locating-dominating set misses at most one vertex of each twin
  class, so the all-but-one class totals are forced.

With twin pruning enabled the search additionally fixes the lowest-indexed
all-but-one members of every twin class and only varies the rest. Swapping
two twins is a graph automorphism, so any solution can be relabeled onto a
superset of that forced core; the restriction loses no cardinality.

``lambda_oracle`` is the trust anchor: a plain unpruned enumeration of all
subsets in ascending cardinality, kept free of every shortcut used by the
real search.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, TwinPartition, VertexSet, twin_partition

ORACLE_MAX_ORDER = 24


@dataclass(frozen=True)
class SearchStats:
    sets_tested: int
    pruned_cardinalities_skipped: int
    elapsed: float


@dataclass(frozen=True)
class SolveResult:
    lambda_: int
    witness: VertexSet
    stats: SearchStats


def _is_ld_mask(adj: tuple[int, ...], candidate: int, full: int) -> bool:
    rest = full & ~candidate
    traces: set[int] = set()
    add = traces.add
    while rest:
        low = rest & -rest
        rest ^= low
        t = adj[low.bit_length() - 1] & candidate
        if not t or t in traces:
            return False
        add(t)
    return True


def trace(g: Graph, candidate: VertexSet, u: int) -> VertexSet:
    """Trace of ``u``: its open neighborhood intersected with the candidate set.

    Defined only for vertices outside the candidate set.
    """
    if candidate.universe != g.n:
        raise ValueError("candidate set universe does not match the graph order")
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range for order {g.n}")
    if candidate.mask >> u & 1:
        raise ValueError(f"vertex {u} is inside the candidate set")
    return VertexSet(g.n, g.adj[u] & candidate.mask)


def is_locating_dominating(g: Graph, candidate: VertexSet) -> bool:
    """True when every outside vertex has a nonempty trace and all traces differ.

    The full vertex set qualifies vacuously; the empty set fails for any
    graph with at least one vertex.
    """
    if candidate.universe != g.n:
        raise ValueError("candidate set universe does not match the graph order")
    return _is_ld_mask(g.adj, candidate.mask, (1 << g.n) - 1)


def info_lower_bound(order: int) -> int:
    """Smallest size s with ``order - s <= 2**s - 1``.

    A locating-dominating set of size s must hand out distinct nonempty
    subsets of itself to the ``order - s`` outside vertices, and only
    ``2**s - 1`` are available.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    s = 0
    while order - s > (1 << s) - 1:
        s += 1
    return s


def twin_lower_bound(partition: TwinPartition) -> int:
    """Sum of (size - 1) over all twin classes of size at least 2."""
    return sum(len(cls.vertices) - 1 for cls in partition.classes if len(cls.vertices) >= 2)


def _forced_core(partition: TwinPartition) -> int:
    forced = 0
    for cls in partition.classes:
        members = cls.vertices.members
        if len(members) >= 2:
            for v in members[:-1]:
                forced |= 1 << v
    return forced


def lambda_exact(
    g: Graph,
    use_twin_pruning: bool = True,
    deterministic_witness: bool = False,
) -> SolveResult:
    """Exact location-domination number with one witness set.

    The search enumerates cardinalities in ascending order starting at the
    combined lower bound, so the reported value is exact regardless of the
    pruning flag. The enumeration at each cardinality is lexicographic; with
    ``deterministic_witness`` a final unrestricted rescan at the winning
    cardinality guarantees the lexicographically least witness even though
    the main pass may have been restricted to supersets of the forced core.
    """
    started = time.perf_counter()
    n = g.n
    partition = twin_partition(g)
    start = max(info_lower_bound(n), twin_lower_bound(partition))
    forced = _forced_core(partition) if use_twin_pruning else 0
    forced_count = forced.bit_count()
    free = [1 << v for v in range(n) if not forced >> v & 1]
    adj = g.adj
    full = (1 << n) - 1
    tested = 0
    best: int | None = None
    size = start
    for size in range(start, n + 1):
        for combo in combinations(free, size - forced_count):
            candidate = forced
            for bit in combo:
                candidate |= bit
            tested += 1
            if _is_ld_mask(adj, candidate, full):
                best = candidate
                break
        if best is not None:
            break
    assert best is not None  # the full vertex set always qualifies
    if deterministic_witness:
        single = [1 << v for v in range(n)]
        for combo in combinations(single, size):
            candidate = 0
            for bit in combo:
                candidate |= bit
            tested += 1
            if _is_ld_mask(adj, candidate, full):
                best = candidate
                break
    elapsed = time.perf_counter() - started
    return SolveResult(size, VertexSet(n, best), SearchStats(tested, start, elapsed))


def lambda_oracle(g: Graph) -> SolveResult:
    """Ground-truth value by full subset enumeration, no pruning of any kind.

    Guarded to 24 vertices; use ``lambda_exact`` beyond that.
    """
    if g.n > ORACLE_MAX_ORDER:
        raise ValueError(f"oracle guard: order {g.n} exceeds {ORACLE_MAX_ORDER}")
    started = time.perf_counter()
    adj = g.adj
    full = (1 << g.n) - 1
    single = [1 << v for v in range(g.n)]
    tested = 0
    for size in range(g.n + 1):
        for combo in combinations(single, size):
            candidate = 0
            for bit in combo:
                candidate |= bit
            tested += 1
            if _is_ld_mask(adj, candidate, full):
                elapsed = time.perf_counter() - started
                return SolveResult(
                    size, VertexSet(g.n, candidate), SearchStats(tested, 0, elapsed)
                )
    raise AssertionError("unreachable: the full vertex set always qualifies")
