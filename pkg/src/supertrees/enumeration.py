"""Exhaustive enumeration of supertree families and extremality checks.

Families come in two flavours: every supertree realizing a fixed degree
sequence, and every supertree with prescribed size, interior count, and
minimum interior degree. Enumeration grows trees one edge at a time from a
single edge, deduplicating isomorphism classes by canonical code at every
stage; every supertree with at least two edges loses a leaf edge to a
smaller supertree, so the growth reaches all classes.

On top of the enumerators sit the extremality checks: within each family the
SLO-supertree attains the smallest first Dirichlet eigenvalue, strictly
below every other class, and the eigenvalue of the SLO-supertree decreases
strictly along degree-sequence majorization.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .config import DEFAULT_TOLERANCES, Tolerances, strictly_less
from .core import (
    CanonicalCode,
    DegreeSequence,
    Supertree,
    build_supertree,
    canonical_code,
)
from .errors import EmptyFamily, NotMajorized
from .slo import construct_slo_supertree
from .spectral import first_dirichlet_eigenpair
from .transforms import unit_transform_chain

__all__ = [
    "FamilySpec",
    "FkCertificate",
    "feasible_degree_sequences",
    "enumerate_supertrees",
    "enumerate_family",
    "verify_fk_theorem1",
    "verify_fk_theorem2",
    "verify_majorization_monotonicity",
    "fk1_sweep",
    "fk2_sweep",
]


@dataclass(frozen=True)
class FamilySpec:
    """Identifies an enumerated family for reports.

    kind "pi" fixes a degree sequence; kind "counts" fixes vertex count n
    and interior count n0; kind "min_degree" additionally bounds the
    interior degrees from below by d.
    """

    kind: str
    k: int
    pi: DegreeSequence | None = None
    n: int | None = None
    n0: int | None = None
    d: int | None = None

    def describe(self) -> str:
        if self.kind == "pi":
            return f"T_pi(k={self.k},pi={self.pi})"
        if self.kind == "counts":
            return f"T(n={self.n},n0={self.n0},k={self.k})"
        return f"T_d(n={self.n},n0={self.n0},k={self.k},d={self.d})"


@dataclass(frozen=True)
class FkCertificate:
    """Outcome of one extremality check over a fully enumerated family.

    ``all_lambdas`` lists (canonical code, eigenvalue) for every isomorphism
    class, eigenvalues ascending. ``unique`` asserts the winner's eigenvalue
    sits strictly below the runner-up beyond the tie tolerance; ``slo_match``
    asserts the winner is the predicted SLO-supertree.
    """

    family: FamilySpec
    winner: Supertree
    winner_lambda: float
    slo_code: CanonicalCode
    all_lambdas: tuple[tuple[CanonicalCode, float], ...]
    unique: bool
    slo_match: bool

    @property
    def passed(self) -> bool:
        return self.unique and self.slo_match


def _ascending_partitions(total: int, count: int, low: int):
    if count == 0:
        if total == 0:
            yield ()
        return
    for first in range(low, total - low * (count - 1) + 1):
        for rest in _ascending_partitions(total - first, count - 1, first):
            yield (first,) + rest


def feasible_degree_sequences(
    n: int, n0: int, k: int, d_min: int = 2
) -> list[DegreeSequence]:
    """Degree sequences of supertrees on n vertices with n0 interior
    vertices, every interior degree at least d_min, ascending order.

    Every returned sequence is realizable (the greedy SLO construction
    realizes it); infeasible parameters give the empty list.
    """
    if n < 1 or k < 2 or (n - 1) % (k - 1) != 0 or not 0 <= n0 <= n:
        return []
    m = (n - 1) // (k - 1)
    if n0 == 0:
        return [DegreeSequence(k, (1,) * n, 0)] if m == 1 else []
    if m < 2:
        return []
    interior_sum = k * m - (n - n0)
    dm = max(2, d_min)
    return [
        DegreeSequence(k, part + (1,) * (n - n0), n0)
        for part in _ascending_partitions(interior_sum, n0, dm)
    ]


def _grow_classes(k: int, m_target: int, keep) -> list[Supertree]:
    """Isomorphism classes of supertrees with m_target edges whose every
    growth stage satisfies the monotone predicate keep."""
    if m_target < 1:
        return []
    start = build_supertree(k, k, [tuple(range(k))])
    layer = {canonical_code(start): start} if keep(start) else {}
    for _ in range(m_target - 1):
        grown: dict[CanonicalCode, Supertree] = {}
        for code in sorted(layer):
            G = layer[code]
            for v in range(G.n):
                edge = (v,) + tuple(range(G.n, G.n + k - 1))
                H = build_supertree(k, G.n + k - 1, list(G.edges) + [edge])
                if not keep(H):
                    continue
                hc = canonical_code(H)
                if hc not in grown:
                    grown[hc] = H
        layer = grown
    return [layer[c] for c in sorted(layer)]


def enumerate_supertrees(pi: DegreeSequence) -> list[Supertree]:
    """Every isomorphism class with degree sequence pi, sorted by canonical
    code."""
    target_desc = sorted(pi.interior, reverse=True)

    def keep(G: Supertree) -> bool:
        # degrees only grow, so current interiors sorted descending must fit
        # pointwise under the target interior slots
        cur = sorted((d for d in G.degrees if d >= 2), reverse=True)
        if len(cur) > pi.n0:
            return False
        return all(c <= t for c, t in zip(cur, target_desc))

    want = tuple(sorted(pi.entries))
    return [
        G
        for G in _grow_classes(pi.k, pi.m, keep)
        if tuple(sorted(G.degrees)) == want
    ]


def enumerate_family(
    n: int, n0: int, k: int, d_min: int = 2
) -> list[Supertree]:
    """Every isomorphism class with n vertices, n0 interior vertices, and
    all interior degrees at least d_min, sorted by canonical code."""
    if n < 1 or k < 2 or (n - 1) % (k - 1) != 0 or not 0 <= n0 <= n:
        return []
    m = (n - 1) // (k - 1)
    if n0 == 0:
        return [build_supertree(k, k, [tuple(range(k))])] if m == 1 else []
    interior_sum = k * m - (n - n0)
    dm = max(2, d_min)
    if interior_sum < dm * n0:
        return []
    cap = interior_sum - dm * (n0 - 1)

    def keep(G: Supertree) -> bool:
        cur = [d for d in G.degrees if d >= 2]
        return len(cur) <= n0 and all(d <= cap for d in cur)

    out = []
    for G in _grow_classes(k, m, keep):
        interior = [d for d in G.degrees if d >= 2]
        if len(interior) == n0 and all(d >= dm for d in interior):
            out.append(G)
    return out


def _score_family(
    family: FamilySpec,
    members: list[Supertree],
    slo_tree: Supertree,
    tol: Tolerances,
) -> FkCertificate:
    slo_code = canonical_code(slo_tree)
    scored = sorted(
        (
            (canonical_code(G), first_dirichlet_eigenpair(G, tol).lam, G)
            for G in members
        ),
        key=lambda item: (item[1], item[0]),
    )
    winner_code, winner_lambda, winner = scored[0]
    unique = len(scored) == 1 or scored[1][1] - winner_lambda > tol.lambda_tie
    return FkCertificate(
        family=family,
        winner=winner,
        winner_lambda=winner_lambda,
        slo_code=slo_code,
        all_lambdas=tuple((code, lam) for code, lam, _ in scored),
        unique=unique,
        slo_match=winner_code == slo_code,
    )


def verify_fk_theorem1(
    pi: DegreeSequence, tol: Tolerances = DEFAULT_TOLERANCES
) -> FkCertificate:
    """Check that the SLO-supertree of pi uniquely minimizes the first
    Dirichlet eigenvalue among all supertrees with degree sequence pi.

    The family is enumerated exhaustively; sequences without interior
    vertices have no Dirichlet spectrum and raise NoInteriorVertices.
    """
    members = enumerate_supertrees(pi)
    assert members, "validated degree sequences are realizable"
    slo_tree, _ = construct_slo_supertree(pi)
    family = FamilySpec(kind="pi", k=pi.k, pi=pi)
    return _score_family(family, members, slo_tree, tol)


def verify_fk_theorem2(
    n: int, n0: int, k: int, d: int, tol: Tolerances = DEFAULT_TOLERANCES
) -> FkCertificate:
    """Check that one SLO-supertree uniquely minimizes the first Dirichlet
    eigenvalue among all supertrees with n vertices, n0 interior vertices,
    and interior degrees at least d.

    The predicted winner is the SLO-supertree of the flattest sequence
    (d, ..., d, d') where d' absorbs the leftover interior degree.

    Raises:
        EmptyFamily: no such supertree has an interior vertex.
    """
    family = FamilySpec(kind="min_degree", k=k, n=n, n0=n0, d=d)
    if n0 < 1:
        raise EmptyFamily(
            f"{family.describe()} has no interior vertex to apply the "
            "eigenvalue problem to"
        )
    members = enumerate_family(n, n0, k, d)
    if not members:
        raise EmptyFamily(f"{family.describe()} is empty")
    m = (n - 1) // (k - 1)
    dm = max(2, d)
    dprime = (k * m - (n - n0)) - (n0 - 1) * dm
    pi_star = DegreeSequence(
        k, (dm,) * (n0 - 1) + (dprime,) + (1,) * (n - n0), n0
    )
    slo_tree, _ = construct_slo_supertree(pi_star)
    return _score_family(family, members, slo_tree, tol)


def verify_majorization_monotonicity(
    pi: DegreeSequence,
    pi_prime: DegreeSequence,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> bool:
    """Whether the eigenvalue drops strictly from SLO(pi) to SLO(pi_prime)
    for a pair with pi_prime majorized by pi.

    The unit-transformation chain connecting the sequences is materialized
    first as evidence that the pair is comparable.

    Raises:
        NotMajorized: pi_prime is not strictly majorized by pi with equal
            interior counts.
        LengthMismatch: the sequences differ in length or uniformity.
    """
    if pi.entries == pi_prime.entries:
        raise NotMajorized("the sequences are equal; no strict comparison")
    unit_transform_chain(pi, pi_prime)
    lam = first_dirichlet_eigenpair(construct_slo_supertree(pi)[0], tol).lam
    lam_prime = first_dirichlet_eigenpair(
        construct_slo_supertree(pi_prime)[0], tol
    ).lam
    return strictly_less(lam_prime, lam, tol)


def _fk1_job(args) -> FkCertificate:
    pi, tol = args
    return verify_fk_theorem1(pi, tol)


def _fk2_job(args) -> FkCertificate:
    n, n0, k, d, tol = args
    return verify_fk_theorem2(n, n0, k, d, tol)


def _run_jobs(worker, args_list, jobs: int):
    if jobs > 1 and len(args_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, args_list))
    return [worker(a) for a in args_list]


def fk1_sweep(
    k: int,
    n_max: int,
    tol: Tolerances = DEFAULT_TOLERANCES,
    jobs: int = 1,
) -> list[FkCertificate]:
    """Certificates for every feasible degree sequence with an interior
    vertex, edge size k, and at most n_max vertices."""
    seqs = []
    for n in range(k, n_max + 1):
        if (n - 1) % (k - 1):
            continue
        for n0 in range(1, n + 1):
            seqs.extend(feasible_degree_sequences(n, n0, k))
    return _run_jobs(_fk1_job, [(pi, tol) for pi in seqs], jobs)


def fk2_sweep(
    k: int,
    n_max: int,
    d: int,
    tol: Tolerances = DEFAULT_TOLERANCES,
    jobs: int = 1,
) -> list[FkCertificate]:
    """Certificates for every nonempty minimum-degree family with edge size
    k and at most n_max vertices."""
    combos = []
    for n in range(k, n_max + 1):
        if (n - 1) % (k - 1):
            continue
        for n0 in range(1, n + 1):
            if feasible_degree_sequences(n, n0, k, d):
                combos.append((n, n0, k, d, tol))
    return _run_jobs(_fk2_job, combos, jobs)
