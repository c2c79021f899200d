"""Family enumeration and Faber-Krahn extremality certificates."""

from __future__ import annotations

import pytest

from supertrees import (
    DegreeSequence,
    EmptyFamily,
    LengthMismatch,
    NotMajorized,
    canonical_code,
    construct_slo_supertree,
    enumerate_family,
    enumerate_supertrees,
    feasible_degree_sequences,
    first_dirichlet_eigenpair,
    fk1_sweep,
    fk2_sweep,
    unit_transform_chain,
    unit_transformation,
    verify_fk_theorem1,
    verify_fk_theorem2,
    verify_majorization_monotonicity,
)
from supertrees.enumeration import FamilySpec
from support import all_feasible, oracle_classes

BOUQUET9_CODE = b"e(v(e(v()v()))v(e(v()v()))v(e(v()v())))"
CHAIN9_CODE = b"v(e(v()v(e(v()v())))e(v()v(e(v()v()))))"


def _seq(k, entries, n0):
    return DegreeSequence(k, tuple(entries), n0)


def _classes(k, n):
    out = {}
    for n0 in range(0, n + 1):
        for pi in feasible_degree_sequences(n, n0, k):
            for G in enumerate_supertrees(pi):
                out[canonical_code(G)] = G
    return out


def test_feasible_sequences_examples():
    assert [s.entries for s in feasible_degree_sequences(5, 1, 3)] == [
        (2, 1, 1, 1, 1)
    ]
    assert [s.entries for s in feasible_degree_sequences(7, 2, 3, 2)] == [
        (2, 2, 1, 1, 1, 1, 1)
    ]
    # interior parts are emitted in ascending arrangements, flattest first
    assert [s.entries[:2] for s in feasible_degree_sequences(13, 2, 3)] == [
        (2, 5),
        (3, 4),
    ]
    for s in feasible_degree_sequences(13, 2, 3):
        assert s.k == 3 and s.n0 == 2 and sum(s.entries) == 3 * 6


def test_feasible_sequences_degenerate_cases():
    assert feasible_degree_sequences(4, 1, 3) == []
    assert feasible_degree_sequences(4, 0, 3) == []
    assert feasible_degree_sequences(6, 1, 3) == []
    assert [s.entries for s in feasible_degree_sequences(3, 0, 3)] == [
        (1, 1, 1)
    ]
    assert feasible_degree_sequences(5, 0, 3) == []
    assert feasible_degree_sequences(5, 6, 3) == []
    assert feasible_degree_sequences(0, 0, 3) == []


def test_feasible_sequences_min_degree_filter():
    assert [s.entries for s in feasible_degree_sequences(7, 1, 3, 3)] == [
        (3, 1, 1, 1, 1, 1, 1)
    ]
    assert feasible_degree_sequences(7, 2, 3, 3) == []
    assert [s.entries[:2] for s in feasible_degree_sequences(13, 2, 3, 3)] == [
        (3, 4)
    ]


def test_enumerate_single_class_sequences():
    for pi in (
        _seq(3, (2, 1, 1, 1, 1), 1),
        _seq(3, (2, 2, 1, 1, 1, 1, 1), 2),
        _seq(3, (2, 3) + (1,) * 7, 2),
        _seq(2, (2, 2, 1, 1), 2),
    ):
        members = enumerate_supertrees(pi)
        assert len(members) == 1
        assert sorted(members[0].degrees) == sorted(pi.entries)


def test_enumerate_two_classes_for_flat_three_interior():
    members = enumerate_supertrees(_seq(3, (2, 2, 2) + (1,) * 6, 3))
    assert [canonical_code(G) for G in members] == [
        BOUQUET9_CODE,
        CHAIN9_CODE,
    ]


def test_enumerate_members_realize_their_sequence():
    for pi in all_feasible(3, 9):
        members = enumerate_supertrees(pi)
        assert members
        codes = [canonical_code(G) for G in members]
        assert codes == sorted(codes) and len(set(codes)) == len(codes)
        for G in members:
            assert G.k == pi.k
            assert sorted(G.degrees) == sorted(pi.entries)


def test_enumerate_counts_match_free_trees_for_graphs():
    counts = [len(_classes(2, n)) for n in range(2, 11)]
    assert counts == [1, 1, 2, 3, 6, 11, 23, 47, 106]


def test_enumerate_matches_labeled_oracle_small():
    for n in (3, 5, 7):
        assert set(_classes(3, n)) == set(oracle_classes(3, n))


def test_enumerate_family_by_interior_count():
    assert [canonical_code(G) for G in enumerate_family(9, 3, 3)] == [
        BOUQUET9_CODE,
        CHAIN9_CODE,
    ]
    stars = enumerate_family(9, 1, 3)
    assert len(stars) == 1 and sorted(stars[0].degrees)[-1] == 4
    assert len(enumerate_family(9, 2, 3)) == 1
    assert len(enumerate_family(3, 0, 3)) == 1
    assert enumerate_family(5, 0, 3) == []
    assert enumerate_family(9, 3, 3, 3) == []


def test_family_spec_describe():
    pi = _seq(3, (2, 2, 1, 1, 1, 1, 1), 2)
    assert (
        FamilySpec(kind="pi", k=3, pi=pi).describe()
        == "T_pi(k=3,pi=2,2,1,1,1,1,1)"
    )
    assert FamilySpec(kind="counts", k=3, n=9, n0=3).describe() == (
        "T(n=9,n0=3,k=3)"
    )
    assert FamilySpec(kind="min_degree", k=3, n=7, n0=2, d=2).describe() == (
        "T_d(n=7,n0=2,k=3,d=2)"
    )


def test_fk1_certificate_small_family():
    cert = verify_fk_theorem1(_seq(3, (2, 2, 2) + (1,) * 6, 3))
    assert cert.unique and cert.slo_match and cert.passed
    assert canonical_code(cert.winner) == BOUQUET9_CODE
    assert cert.slo_code == BOUQUET9_CODE
    assert cert.winner_lambda == pytest.approx(1.0, abs=1e-12)
    assert [code for code, _ in cert.all_lambdas] == [
        BOUQUET9_CODE,
        CHAIN9_CODE,
    ]
    lams = [lam for _, lam in cert.all_lambdas]
    assert lams == sorted(lams)
    assert cert.winner_lambda == lams[0]


def test_fk1_singleton_family_is_unique():
    cert = verify_fk_theorem1(_seq(3, (2, 1, 1, 1, 1), 1))
    assert cert.unique and cert.slo_match and cert.passed
    assert len(cert.all_lambdas) == 1
    assert cert.winner_lambda == pytest.approx(2.0, abs=1e-12)


def test_fk2_flattest_sequence_wins():
    cert = verify_fk_theorem2(7, 2, 3, 2)
    assert cert.unique and cert.slo_match and cert.passed
    assert sorted(cert.winner.degrees) == [1, 1, 1, 1, 1, 2, 2]
    assert cert.winner_lambda == pytest.approx(1.5, abs=1e-12)
    assert canonical_code(cert.winner) == cert.slo_code


def test_fk2_agrees_with_fk1_on_flattest_sequence():
    flattest = {
        (7, 2): _seq(3, (2, 2) + (1,) * 5, 2),
        (9, 3): _seq(3, (2, 2, 2) + (1,) * 6, 3),
    }
    for (n, n0), pi in flattest.items():
        cert2 = verify_fk_theorem2(n, n0, 3, 2)
        cert1 = verify_fk_theorem1(pi)
        assert canonical_code(cert2.winner) == canonical_code(cert1.winner)
        assert cert2.winner_lambda == pytest.approx(
            cert1.winner_lambda, abs=1e-12
        )


def test_fk2_empty_family_errors():
    with pytest.raises(EmptyFamily, match="no interior vertex"):
        verify_fk_theorem2(5, 0, 3, 2)
    with pytest.raises(EmptyFamily, match="is empty"):
        verify_fk_theorem2(7, 3, 3, 2)


def test_fk1_sweep_small():
    certs = fk1_sweep(3, 7)
    assert [c.family.describe() for c in certs] == [
        "T_pi(k=3,pi=2,1,1,1,1)",
        "T_pi(k=3,pi=3,1,1,1,1,1,1)",
        "T_pi(k=3,pi=2,2,1,1,1,1,1)",
    ]
    assert all(c.passed for c in certs)
    parallel = fk1_sweep(3, 7, jobs=2)
    assert [(c.family.describe(), c.winner_lambda) for c in parallel] == [
        (c.family.describe(), c.winner_lambda) for c in certs
    ]


def test_fk2_sweep_small():
    certs = fk2_sweep(3, 9, 2)
    assert [(c.family.n, c.family.n0) for c in certs] == [
        (5, 1),
        (7, 1),
        (7, 2),
        (9, 1),
        (9, 2),
        (9, 3),
    ]
    assert all(c.passed for c in certs)


def test_majorization_monotonicity_examples():
    steep = _seq(3, (3, 3) + (1,) * 9, 2)
    flat = _seq(3, (2, 4) + (1,) * 9, 2)
    assert verify_majorization_monotonicity(steep, flat) is True
    with pytest.raises(NotMajorized, match="equal"):
        verify_majorization_monotonicity(steep, steep)
    with pytest.raises(NotMajorized):
        verify_majorization_monotonicity(flat, steep)
    with pytest.raises(LengthMismatch):
        verify_majorization_monotonicity(
            _seq(3, (2, 1, 1, 1, 1), 1), _seq(3, (2, 2) + (1,) * 5, 2)
        )


def test_majorization_monotonicity_along_chain():
    start = _seq(3, (4, 4, 4) + (1,) * 18, 3)
    end = _seq(3, (2, 3, 7) + (1,) * 18, 3)
    chain = unit_transform_chain(start, end)
    assert len(chain) >= 2
    lams = [first_dirichlet_eigenpair(construct_slo_supertree(start)[0]).lam]
    cur = start
    for p in chain:
        cur = unit_transformation(cur, p)
        lams.append(
            first_dirichlet_eigenpair(construct_slo_supertree(cur)[0]).lam
        )
    assert cur.entries == end.entries
    assert all(b < a for a, b in zip(lams, lams[1:]))
    assert lams[0] == pytest.approx(3.0, abs=1e-12)
    assert lams[-1] == pytest.approx(1.7114410964686546, abs=1e-10)
    assert verify_majorization_monotonicity(start, end) is True
