"""Numeric tolerances and run configuration.

Every threshold used by the solver and by comparison helpers lives in one
frozen record so the CLI can override them in a single place and tests can
state them explicitly.
"""

from dataclasses import dataclass, field

__all__ = [
    "Tolerances",
    "Config",
    "DEFAULT_TOLERANCES",
    "DEFAULT_SEED",
    "approx_eq",
    "at_least",
    "at_most",
    "strictly_less",
]

# seed shared by the randomized property suites
DEFAULT_SEED = 170451


@dataclass(frozen=True)
class Tolerances:
    # Jacobi sweep stop: off-diagonal Frobenius norm <= eig_rel_threshold * ||M||_F
    eig_rel_threshold: float = 1e-13
    eig_max_sweeps: int = 100
    # |x - y| <= rel_eps * max(1, |x|, |y|) counts as equal for computed reals
    rel_eps: float = 1e-10
    # relative spectral-gap floor below which an eigenpair is flagged degenerate
    degenerate_gap: float = 1e-9
    # absolute tie window between eigenvalues of distinct supertrees
    lambda_tie: float = 1e-10


DEFAULT_TOLERANCES = Tolerances()


@dataclass
class Config:
    """Run configuration assembled by the CLI from its global flags."""

    tolerances: Tolerances = field(default_factory=Tolerances)
    jobs: int = 1
    output: str = "csv"  # "csv" or "plain"
    seed: int = DEFAULT_SEED


def _scale(x: float, y: float) -> float:
    return max(1.0, abs(x), abs(y))


def approx_eq(x: float, y: float, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """Equality of computed reals, relative to max(1, |x|, |y|)."""
    return abs(x - y) <= tol.rel_eps * _scale(x, y)


def at_least(x: float, y: float, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """x >= y up to the comparison slack."""
    return x >= y - tol.rel_eps * _scale(x, y)


def at_most(x: float, y: float, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """x <= y up to the comparison slack."""
    return x <= y + tol.rel_eps * _scale(x, y)


def strictly_less(x: float, y: float, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """x < y beyond the comparison slack."""
    return y - x > tol.rel_eps * _scale(x, y)
