"""Shared helpers for the test suite.

The labeled brute-force enumerator here is deliberately independent of the
library's orderly growth: it scans lexicographic combinations of candidate
edges and validates each selection with a local union-find, so agreement
between the two is meaningful evidence rather than a tautology.
"""

from __future__ import annotations

import itertools
import random

from supertrees import (
    DEFAULT_TOLERANCES,
    DegreeSequence,
    ShiftSpec,
    Supertree,
    SwitchSpec,
    apply_vertex_permutation,
    boundary_partition,
    build_supertree,
    canonical_code,
    enumerate_supertrees,
    feasible_degree_sequences,
)
from supertrees.config import strictly_less


def _connected(edges, n: int) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        for v in e[1:]:
            ra, rb = find(e[0]), find(v)
            if ra != rb:
                parent[ra] = rb
    return len({find(v) for v in range(n)}) == 1


def labeled_supertrees(k: int, n: int):
    """Yield every labeled supertree on vertices 0..n-1 as an edge tuple.

    Each edge set appears exactly once (edges sorted lexicographically).
    A selection of m edges with pairwise overlap at most one vertex, full
    vertex coverage, and connectivity has a spanning incidence tree by the
    counting identity k*m = n + m - 1, so no separate acyclicity test is
    needed.
    """
    if n < k or (n - 1) % (k - 1):
        return
    m = (n - 1) // (k - 1)
    pool = list(itertools.combinations(range(n), k))
    masks = [sum(1 << v for v in e) for e in pool]
    compat = []
    for i in range(len(pool)):
        b = 0
        for j in range(i + 1, len(pool)):
            if (masks[i] & masks[j]).bit_count() <= 1:
                b |= 1 << j
        compat.append(b)
    full = (1 << n) - 1

    def rec(allowed: int, chosen: list[int], cover: int):
        if len(chosen) == m:
            picked = [pool[i] for i in chosen]
            if cover == full and _connected(picked, n):
                yield tuple(picked)
            return
        rem = m - len(chosen)
        b = allowed
        while b:
            low = b & -b
            i = low.bit_length() - 1
            b ^= low
            grown = cover | masks[i]
            # each remaining edge covers at most k new vertices
            if grown.bit_count() + (rem - 1) * k >= n:
                yield from rec(allowed & compat[i], chosen + [i], grown)

    yield from rec((1 << len(pool)) - 1, [], 0)


def oracle_classes(k: int, n: int) -> dict[bytes, Supertree]:
    """Isomorphism classes on n vertices found by the labeled brute force."""
    out: dict[bytes, Supertree] = {}
    for edges in labeled_supertrees(k, n):
        G = build_supertree(k, n, edges)
        out.setdefault(canonical_code(G), G)
    return out


def random_supertree(rng: random.Random, k: int, m: int) -> Supertree:
    """A uniformly grown supertree with randomly permuted vertex labels."""
    edges = [tuple(range(k))]
    n = k
    for _ in range(m - 1):
        attach = rng.randrange(n)
        edges.append((attach,) + tuple(range(n, n + k - 1)))
        n += k - 1
    perm = list(range(n))
    rng.shuffle(perm)
    return apply_vertex_permutation(build_supertree(k, n, edges), perm)


def random_boundary_zero(rng: random.Random, G: Supertree) -> list[float]:
    """A nonzero test function vanishing on the boundary."""
    values = [0.0] * G.n
    interior = [v for v in range(G.n) if G.degrees[v] >= 2]
    for v in interior:
        values[v] = rng.uniform(-1.0, 1.0)
    pivot = max(interior, key=lambda v: abs(values[v]))
    if abs(values[pivot]) < 1e-6:
        values[pivot] = 1.0
    return values


def all_feasible(k: int, n_max: int) -> list[DegreeSequence]:
    """Every feasible degree sequence with at least one interior vertex."""
    out: list[DegreeSequence] = []
    for n in range(k, n_max + 1):
        if (n - 1) % (k - 1):
            continue
        for n0 in range(1, n + 1):
            out.extend(feasible_degree_sequences(n, n0, k))
    return out


def all_members(k: int, n_max: int) -> list[Supertree]:
    """Every isomorphism class with an interior vertex, up to n_max."""
    out: list[Supertree] = []
    for pi in all_feasible(k, n_max):
        out.extend(enumerate_supertrees(pi))
    return out


def switch_strict_witness(G, f, spec, tol=None) -> bool:
    """Whether a strict switch inequality admits an interior witness vertex.

    A strict eigenvalue decrease follows from a strict hypothesis only when
    the eigenvalue equation can be evaluated at an interior vertex whose
    incident edges change in exactly one of e1/e2: for an unbalanced
    exchanged-group sum, an interior vertex kept by one edge and absent from
    the other; for unbalanced kept-group sums, an interior vertex inside the
    exchanged groups. Without a witness the switch can be a relabeling.
    """
    tol = tol or DEFAULT_TOLERANCES
    interior = set(boundary_partition(G).interior)
    su1 = sum(float(f[v]) for v in spec.u1)
    sv1 = sum(float(f[v]) for v in spec.v1)
    rest1 = sum(float(f[v]) for v in spec.e1 if v not in spec.u1)
    rest2 = sum(float(f[v]) for v in spec.e2 if v not in spec.v1)
    kept1 = set(spec.e1) - spec.u1 - set(spec.e2)
    kept2 = set(spec.e2) - spec.v1 - set(spec.e1)
    if strictly_less(sv1, su1, tol) and interior & (kept1 | kept2):
        return True
    return strictly_less(rest1, rest2, tol) and bool(
        interior & (spec.u1 | spec.v1)
    )


def random_switch_spec(rng: random.Random, G):
    """A well-formed exchange between two random edges (maybe empty)."""
    e1, e2 = rng.sample(G.edges, 2)
    only1 = [v for v in e1 if v not in e2]
    only2 = [v for v in e2 if v not in e1]
    size = rng.randint(0, min(len(only1), len(only2)))
    return SwitchSpec(
        e1=e1,
        e2=e2,
        u1=frozenset(rng.sample(only1, size)),
        v1=frozenset(rng.sample(only2, size)),
    )


def random_shift_spec(rng: random.Random, G):
    """A bundle move that keeps u interior, or None if G has none.

    Leaving at least two edges at u keeps the boundary of the result inside
    the boundary of G, which the monotonicity lemma needs so the
    eigenfunction stays admissible after the move.
    """
    candidates = [v for v in range(G.n) if G.degrees[v] >= 3]
    if not candidates:
        return None
    u = rng.choice(candidates)
    at_u = [e for e in G.edges if u in e]
    bundle = tuple(sorted(rng.sample(at_u, rng.randint(1, G.degrees[u] - 2))))
    blocked = {w for e in bundle for w in e}
    options = [v for v in range(G.n) if v not in blocked]
    if not options:
        return None
    return ShiftSpec(u=u, edges=bundle, v=rng.choice(options))


def targeted_switch_spec(rng: random.Random, G):
    """An exchange of one interior vertex of e1 for a boundary vertex of e2.

    Oriented so the exchanged-group sums are strictly unbalanced; together
    with an interior vertex kept on one side this is the shape of exchange
    the extremality argument actually performs, so sampling it keeps the
    strict pool of the property suites populated.
    """
    choices = []
    witnessed = []
    for e1 in G.edges:
        interiors = [u for u in e1 if G.degrees[u] >= 2]
        if not interiors:
            continue
        for e2 in G.edges:
            if e2 == e1:
                continue
            leaves = [v for v in e2 if v not in e1 and G.degrees[v] == 1]
            if not leaves:
                continue
            for u in interiors:
                if u in e2:
                    continue
                # u's edges outside e1 must not touch e2, or the moved u
                # would pair twice with a vertex it already shares an edge
                # with and the rewiring could not stay a supertree
                nbrs = {
                    x for e in G.edges if u in e and e != e1 for x in e
                }
                if nbrs & set(e2):
                    continue
                for v in leaves:
                    if any(
                        G.degrees[x] >= 2
                        for x in e1
                        if x != u and x not in e2
                    ) or any(
                        G.degrees[x] >= 2
                        for x in e2
                        if x != v and x not in e1
                    ):
                        witnessed.append((e1, e2, u, v))
    if not witnessed:
        return None
    e1, e2, u, v = rng.choice(witnessed)
    return SwitchSpec(e1=e1, e2=e2, u1=frozenset({u}), v1=frozenset({v}))
