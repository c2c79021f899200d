"""Structure-rewiring operations and degree-sequence majorization.

Two edge rewirings preserve the vertex set: switching exchanges vertex
groups between two edges, shifting re-hangs a bundle of edges from one
vertex onto another. Both come with an eigenfunction hypothesis test; when
the hypothesis holds, the first Dirichlet eigenvalue does not increase (and
decreases strictly under the strict form).

On degree sequences, a unit transformation moves one unit of degree from a
larger interior entry to the next one, and majorization orders sequences by
ascending prefix sums. Any majorized pair is connected by a chain of unit
transformations, built greedily here.
"""

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances, at_least, at_most, strictly_less
from .core import DegreeSequence, Supertree, VertexId, build_supertree
from .errors import (
    DegreeTooSmall,
    IndexOutOfRange,
    InvalidSpec,
    LengthMismatch,
    NotMajorized,
    ResultNotSupertree,
    SupertreeError,
)

__all__ = [
    "SwitchSpec",
    "ShiftSpec",
    "HypothesisCheck",
    "apply_switch",
    "check_switch_hypothesis",
    "apply_shift",
    "check_shift_hypothesis",
    "unit_transformation",
    "majorizes",
    "unit_transform_chain",
]


@dataclass(frozen=True)
class SwitchSpec:
    """Exchange u1 (a subset of e1) with v1 (a subset of e2, same size)."""

    e1: tuple[VertexId, ...]
    e2: tuple[VertexId, ...]
    u1: frozenset
    v1: frozenset


@dataclass(frozen=True)
class ShiftSpec:
    """Replace u by v in every edge of the bundle (all containing u)."""

    u: VertexId
    edges: tuple[tuple[VertexId, ...], ...]
    v: VertexId


@dataclass(frozen=True)
class HypothesisCheck:
    """Outcome of an eigenfunction hypothesis test.

    weak guarantees the eigenvalue does not increase; strict additionally
    guarantees a strict decrease.
    """

    weak: bool
    strict: bool


def _validate_switch(G: Supertree, spec: SwitchSpec) -> None:
    edges = set(G.edges)
    if spec.e1 not in edges or spec.e2 not in edges:
        raise InvalidSpec("e1 and e2 must be edges of the supertree")
    if spec.e1 == spec.e2:
        raise InvalidSpec("e1 and e2 must be distinct edges")
    if not spec.u1 <= set(spec.e1):
        raise InvalidSpec("u1 must be a subset of e1")
    if not spec.v1 <= set(spec.e2):
        raise InvalidSpec("v1 must be a subset of e2")
    if len(spec.u1) != len(spec.v1):
        raise InvalidSpec("u1 and v1 must have the same size")
    if spec.u1 & spec.v1:
        raise InvalidSpec("u1 and v1 must be disjoint")


def apply_switch(G: Supertree, spec: SwitchSpec) -> Supertree:
    """The supertree with e1, e2 replaced by (e1 - u1) + v1, (e2 - v1) + u1.

    Empty groups leave the supertree unchanged. The degree sequence is
    always preserved: every vertex keeps its edge count.

    Raises:
        InvalidSpec: the groups are not same-size disjoint subsets of e1 and
            e2, or an exchanged edge loses a vertex to overlap.
        ResultNotSupertree: the rewired edge set is not a supertree.
    """
    _validate_switch(G, spec)
    e1p = tuple(sorted((set(spec.e1) - spec.u1) | spec.v1))
    e2p = tuple(sorted((set(spec.e2) - spec.v1) | spec.u1))
    if len(e1p) != G.k or len(e2p) != G.k:
        raise InvalidSpec("exchange must leave k distinct vertices per edge")
    new_edges = [e for e in G.edges if e != spec.e1 and e != spec.e2]
    new_edges += [e1p, e2p]
    try:
        return build_supertree(G.k, G.n, new_edges)
    except SupertreeError as exc:
        raise ResultNotSupertree(f"switched edge set is invalid: {exc}") from exc


def check_switch_hypothesis(
    G: Supertree, f, spec: SwitchSpec, tol: Tolerances = DEFAULT_TOLERANCES
) -> HypothesisCheck:
    """Test the eigenfunction hypothesis for a switch.

    Weak form: sum f over u1 >= sum f over v1 and sum f over e1 - u1 <=
    sum f over e2 - v1 (within tolerance). Strict form: weak with one of
    the two inequalities strict beyond tolerance.
    """
    _validate_switch(G, spec)
    fs = np.asarray(f, dtype=float)
    if fs.shape != (G.n,):
        raise InvalidSpec(f"expected {G.n} function values, got shape {fs.shape}")
    su1 = float(sum(fs[v] for v in spec.u1))
    sv1 = float(sum(fs[v] for v in spec.v1))
    rest1 = float(sum(fs[v] for v in spec.e1 if v not in spec.u1))
    rest2 = float(sum(fs[v] for v in spec.e2 if v not in spec.v1))
    weak = at_least(su1, sv1, tol) and at_most(rest1, rest2, tol)
    strict = weak and (
        strictly_less(sv1, su1, tol) or strictly_less(rest1, rest2, tol)
    )
    return HypothesisCheck(weak=weak, strict=strict)


def _validate_shift(G: Supertree, spec: ShiftSpec) -> None:
    edges = set(G.edges)
    if len(set(spec.edges)) != len(spec.edges):
        raise InvalidSpec("the shifted bundle repeats an edge")
    for e in spec.edges:
        if e not in edges:
            raise InvalidSpec(f"{e} is not an edge of the supertree")
        if spec.u not in e:
            raise InvalidSpec(f"{e} does not contain u={spec.u}")
        if spec.v in e:
            raise InvalidSpec(f"v={spec.v} already lies in {e}")
    if not 0 <= spec.u < G.n:
        raise InvalidSpec(f"u={spec.u} is not a vertex")
    if not 0 <= spec.v < G.n:
        raise InvalidSpec(f"v={spec.v} is not a vertex")
    if spec.v == spec.u:
        raise InvalidSpec("u and v must differ")


def apply_shift(G: Supertree, spec: ShiftSpec) -> Supertree:
    """The supertree with u replaced by v throughout the edge bundle.

    An empty bundle leaves the supertree unchanged; otherwise exactly two
    degrees move, u down and v up by the bundle size.

    Raises:
        InvalidSpec: the bundle is not a set of edges through u avoiding v.
        ResultNotSupertree: the rewired edge set is not a supertree.
    """
    _validate_shift(G, spec)
    bundle = set(spec.edges)
    new_edges = []
    for e in G.edges:
        if e in bundle:
            new_edges.append(tuple(sorted(w for w in e if w != spec.u) + [spec.v]))
        else:
            new_edges.append(e)
    try:
        return build_supertree(G.k, G.n, new_edges)
    except SupertreeError as exc:
        raise ResultNotSupertree(f"shifted edge set is invalid: {exc}") from exc


def check_shift_hypothesis(
    G: Supertree, f, spec: ShiftSpec, tol: Tolerances = DEFAULT_TOLERANCES
) -> HypothesisCheck:
    """Test the eigenfunction hypothesis for a shift.

    Weak form: f(u) >= f(v) and f(v) >= f(w) for every other vertex w of the
    bundle. Strict form: weak with at least one of those inequalities strict
    beyond tolerance.
    """
    _validate_shift(G, spec)
    fs = np.asarray(f, dtype=float)
    if fs.shape != (G.n,):
        raise InvalidSpec(f"expected {G.n} function values, got shape {fs.shape}")
    fu, fv = float(fs[spec.u]), float(fs[spec.v])
    others = {w for e in spec.edges for w in e} - {spec.u}
    weak = at_least(fu, fv, tol) and all(
        at_least(fv, float(fs[w]), tol) for w in others
    )
    strict = weak and (
        strictly_less(fv, fu, tol)
        or any(strictly_less(float(fs[w]), fv, tol) for w in others)
    )
    return HypothesisCheck(weak=weak, strict=strict)


def unit_transformation(pi: DegreeSequence, p: int) -> DegreeSequence:
    """Move one unit of degree from entry p to entry p+1, then re-sort.

    Entries are ascending over the interior; position p must hold degree at
    least 3 so the result keeps every interior degree at least 2.

    Raises:
        IndexOutOfRange: p is not an interior position with a successor.
        DegreeTooSmall: entry p is below 3.
    """
    if not 0 <= p <= pi.n0 - 2:
        raise IndexOutOfRange(
            f"p={p} is not an interior position below {pi.n0 - 1}"
        )
    if pi.entries[p] < 3:
        raise DegreeTooSmall(f"entry {p} has degree {pi.entries[p]} < 3")
    interior = list(pi.entries[: pi.n0])
    interior[p] -= 1
    interior[p + 1] += 1
    degrees = sorted(interior) + [1] * (pi.n - pi.n0)
    return DegreeSequence.from_degrees(pi.k, degrees)


def majorizes(
    pi_prime: DegreeSequence, pi: DegreeSequence
) -> bool:
    """Whether pi is majorized by pi_prime.

    Prefix sums run over the canonical arrangement (interior degrees
    ascending, then the unit degrees): pi is majorized when every proper
    prefix sum of pi is at most the matching prefix sum of pi_prime and the
    totals agree.

    Raises:
        LengthMismatch: the sequences differ in length or uniformity.
    """
    if pi.n != pi_prime.n or pi.k != pi_prime.k:
        raise LengthMismatch(
            f"cannot compare ({pi.k},{pi.n}) with ({pi_prime.k},{pi_prime.n})"
        )
    total = total_p = 0
    for j in range(pi.n - 1):
        total += pi.entries[j]
        total_p += pi_prime.entries[j]
        if total > total_p:
            return False
    return total + pi.entries[-1] == total_p + pi_prime.entries[-1]


def unit_transform_chain(
    pi: DegreeSequence, pi_prime: DegreeSequence
) -> list[int]:
    """Positions of unit transformations carrying pi onto pi_prime.

    Requires pi_prime majorized by pi. Replaying the returned positions
    through unit_transformation, starting from pi, produces exactly
    pi_prime. Equal sequences give the empty chain. Greedy: each step finds
    the first position where the prefix sums still disagree and moves one
    unit of degree across it, shrinking the prefix-sum gap.

    Raises:
        LengthMismatch: the sequences differ in length or uniformity.
        NotMajorized: pi_prime is not majorized by pi, or the interior
            counts differ (a unit transformation preserves interior count).
    """
    if not majorizes(pi, pi_prime):
        raise NotMajorized(f"({pi_prime}) is not majorized by ({pi})")
    if pi.entries == pi_prime.entries:
        return []
    if pi.n0 != pi_prime.n0:
        raise NotMajorized(
            f"interior counts differ ({pi.n0} vs {pi_prime.n0}); no chain exists"
        )
    chain: list[int] = []
    cur = pi
    while cur.entries != pi_prime.entries:
        prefix_cur = prefix_tgt = 0
        for j in range(pi.n0):
            prefix_cur += cur.entries[j]
            prefix_tgt += pi_prime.entries[j]
            if prefix_cur != prefix_tgt:
                break
        assert prefix_tgt < prefix_cur, "majorization bounds the target prefix"
        chain.append(j)
        cur = unit_transformation(cur, j)
        assert majorizes(cur, pi_prime), "each step keeps the target majorized"
    return chain
