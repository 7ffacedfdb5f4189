"""Generators for graph families, cross maps, and small-graph enumeration.

The labeling conventions matter: solver witnesses and twin cores are index
based, and the verification harness freezes expected values against these
exact layouts (star center at index 0, near-complete twin pairs at
{0,1}, {2,3}, ..., saturated block at the top indices).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .functigraph import FunctionMap, Signature
from .graph import Graph, bits, is_connected

FAMILY_KINDS = ("complete", "star", "path", "cycle", "pendant_gap", "h_graph")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int | None = None
    i: int | None = None
    t: int | None = None


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def star_graph(n: int) -> Graph:
    """Star on n vertices with the center at index 0."""
    if n < 2:
        raise ValueError("star graph needs n >= 2")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path graph needs n >= 1")
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    # C_1 and C_2 are not simple graphs, so the floor is 3
    if n < 3:
        raise ValueError("cycle graph needs n >= 3")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def h_graph(n: int, i: int) -> Graph:
    """Complete graph on n vertices minus the i-edge matching (0,1), (2,3), ...

    Each removed edge turns its endpoints into a non-adjacent twin pair; the
    untouched vertices 2i..n-1 stay saturated. The pair (n, i) = (2, 1) is
    rejected because the result would have no edges at all.
    """
    if n < 2:
        raise ValueError("h_graph needs n >= 2")
    if not 1 <= i <= n // 2:
        raise ValueError(f"h_graph needs 1 <= i <= floor(n/2), got i={i}")
    if n == 2:
        raise ValueError("h_graph(2, 1) would be edgeless")
    g = complete_graph(n)
    adj = list(g.adj)
    for j in range(i):
        a, b = 2 * j, 2 * j + 1
        adj[a] ^= 1 << b
        adj[b] ^= 1 << a
    return Graph(n, tuple(adj))


def pendant_gap_graph(t: int) -> Graph:
    """Path 0-1-2 plus t-1 pendant vertices attached to vertex 0.

    Its location-domination number is t, and the functigraph under the
    constant map onto vertex 0 of the second copy doubles that to 2t.
    """
    if t < 2:
        raise ValueError("pendant gap graph needs t >= 2")
    edges = [(0, 1), (1, 2)] + [(0, 3 + j) for j in range(t - 1)]
    return Graph.from_edges(t + 2, edges)


def make_family(spec: FamilySpec) -> Graph:
    simple = {
        "complete": complete_graph,
        "star": star_graph,
        "path": path_graph,
        "cycle": cycle_graph,
    }
    if spec.kind in simple:
        if spec.n is None:
            raise ValueError(f"family {spec.kind!r} needs parameter n")
        return simple[spec.kind](spec.n)
    if spec.kind == "pendant_gap":
        if spec.t is None:
            raise ValueError("family 'pendant_gap' needs parameter t")
        return pendant_gap_graph(spec.t)
    if spec.kind == "h_graph":
        if spec.n is None or spec.i is None:
            raise ValueError("family 'h_graph' needs parameters n and i")
        return h_graph(spec.n, spec.i)
    raise ValueError(f"unknown family kind {spec.kind!r}")


def constant_map(n: int, target: int) -> FunctionMap:
    if not 0 <= target < n:
        raise ValueError(f"constant target {target} out of range")
    return FunctionMap(n, (target,) * n)


def identity_map(n: int) -> FunctionMap:
    return FunctionMap(n, tuple(range(n)))


def permutation_map(targets: Sequence[int]) -> FunctionMap:
    if sorted(targets) != list(range(len(targets))):
        raise ValueError("targets do not form a permutation")
    return FunctionMap(len(targets), tuple(targets))


def signature_map(parts: Sequence[int]) -> FunctionMap:
    """Canonical map with the given preimage signature.

    Preimages are contiguous blocks: vertices [0, s_1) map to image 0, the
    next s_2 vertices to image 1, and so on. This is the labeling the
    closed-form predictions and their witness sets are stated in.
    """
    sig = Signature(tuple(parts))
    targets: list[int] = []
    for image, size in enumerate(sig.parts):
        targets.extend([image] * size)
    return FunctionMap(sig.n, tuple(targets))


def make_map(
    kind: str,
    n: int | None = None,
    target: int | None = None,
    perm: Sequence[int] | None = None,
    parts: Sequence[int] | None = None,
) -> FunctionMap:
    if kind == "constant":
        if n is None or target is None:
            raise ValueError("constant map needs n and target")
        return constant_map(n, target)
    if kind == "identity":
        if n is None:
            raise ValueError("identity map needs n")
        return identity_map(n)
    if kind == "permutation":
        if perm is None:
            raise ValueError("permutation map needs perm")
        return permutation_map(perm)
    if kind == "signature":
        if parts is None:
            raise ValueError("signature map needs parts")
        if n is not None and sum(parts) != n:
            raise ValueError(f"signature parts must sum to {n}")
        return signature_map(parts)
    raise ValueError(f"unknown map kind {kind!r}")


def signatures(n: int) -> list[Signature]:
    """All signatures of n (integer partitions), in reverse-lexicographic order."""
    if n < 1:
        raise ValueError("signatures need n >= 1")
    out: list[Signature] = []
    prefix: list[int] = []

    def descend(remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(Signature(tuple(prefix)))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            descend(remaining - part, part)
            prefix.pop()

    descend(n, n)
    return out


def all_maps(n: int) -> Iterator[FunctionMap]:
    """Every one of the n**n maps on an n-vertex base, in target-tuple order."""
    for targets in product(range(n), repeat=n):
        yield FunctionMap(n, targets)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices (2^C(n,2) of them); n <= 6."""
    if not 1 <= n <= 6:
        raise ValueError("labeled enumeration is limited to 1 <= n <= 6")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[j] for j in bits(mask)])


def connected_graphs(n: int) -> Iterator[Graph]:
    for g in all_graphs(n):
        if is_connected(g):
            yield g


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant key: minimal adjacency code over degree-preserving
    relabelings. Intended for small graphs; regular graphs fall back to all
    permutations of their order.
    """
    n = g.n
    degree_of = [g.adj[v].bit_count() for v in range(n)]
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(degree_of[v], []).append(v)
    blocks = [groups[d] for d in sorted(groups)]
    best: int | None = None
    for choice in product(*(permutations(block) for block in blocks)):
        order = [v for block in choice for v in block]
        code = 0
        for a in range(n):
            row = g.adj[order[a]]
            for b in range(a + 1, n):
                code = code << 1 | (row >> order[b] & 1)
        if best is None or code < best:
            best = code
    return (n, tuple(sorted(degree_of)), best)


def nonisomorphic_connected_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    seen: dict[tuple, Graph] = {}
    for g in connected_graphs(n):
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g
    return list(seen.values())


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    prob = 0.5 if p is None else p
    for _ in range(10_000):
        g = random_graph(rng, n, prob)
        if is_connected(g):
            return g
    raise ValueError("failed to sample a connected graph; increase p")


def random_map_with_signature(rng: random.Random, parts: Sequence[int]) -> FunctionMap:
    """Uniformly scrambled map whose preimage signature equals ``parts``."""
    sig = Signature(tuple(parts))
    n = sig.n
    vertices = list(range(n))
    rng.shuffle(vertices)
    images = rng.sample(range(n), sig.num_parts)
    targets = [0] * n
    at = 0
    for image, size in zip(images, sig.parts):
        for v in vertices[at : at + size]:
            targets[v] = image
        at += size
    return FunctionMap(n, tuple(targets))
