"""Bi-convexities: hulls, normality, the transversal oracle, round trips."""

import pytest

from twodual import (
    BeaOracle,
    BiConvexity,
    SetFamily,
    bea_from_biconvexity,
    biconvexity_from_bea,
    check_complemented,
    check_normal,
    check_pasch_convex,
    conv_hull,
    oracle_to_table,
    verify_convexity_duality,
)
from twodual.errors import MissingConstants, NotNormal, RoundTripFailure
from twodual.instances import (
    chain_interval_space,
    discrete_space,
    nonnormal_planar,
    planar_trace_space,
    powerset_family_space,
)


def test_families_must_be_closure_systems():
    good = SetFamily(base=2, sets=(0, 0b01, 0b11))
    with pytest.raises(ValueError):
        BiConvexity(3, good, good)  # base disagrees
    with pytest.raises(ValueError):
        BiConvexity(2, SetFamily(base=2, sets=(0, 0b01)), good)  # no full set
    with pytest.raises(ValueError):
        BiConvexity(2, SetFamily(base=2, sets=(0b01, 0b10, 0b11)), good)
    with pytest.raises(ValueError):
        BiConvexity(2, good, good, zero_elem=5)


def test_chain_hulls_fill_gaps():
    space = chain_interval_space(4)
    assert space.hull_lower(0b0101) == 0b0111
    assert space.hull_upper(0b1001) == 0b1111
    assert space.hull_lower(0b0010) == 0b0010
    assert space.hull_lower(0) == 0
    assert conv_hull(space, "L", 0b0101) == 0b0111
    assert conv_hull(space, "U", 0b0101) == 0b0111


def test_normality_of_the_stock_spaces():
    for space in (
        chain_interval_space(1),
        chain_interval_space(4),
        discrete_space(3),
        powerset_family_space(2),
        planar_trace_space(((0, 0), (1, 0), (0, 1))),
    ):
        assert check_normal(space).passed


def test_planar_fixture_is_not_normal():
    rep = check_normal(nonnormal_planar())
    assert not rep.passed
    assert rep.split_witnesses  # a disjoint pair admits no separating half
    doc = rep.to_json()
    assert doc["pass"] is False


def test_hull_transit_on_chains_and_the_planar_fixture():
    rep = check_pasch_convex(chain_interval_space(4))
    assert rep.passed
    assert rep.transit_checked and rep.transit_passed

    bad = check_pasch_convex(nonnormal_planar())
    assert not bad.passed
    assert bad.witness is not None
    assert bad.transit_passed is False  # the induced oracle agrees


def test_transversal_oracle_refuses_non_normal_spaces():
    with pytest.raises(NotNormal):
        bea_from_biconvexity(nonnormal_planar())
    forced = bea_from_biconvexity(nonnormal_planar(), force=True)
    assert forced.universe == 5


def test_round_trip_is_exact_on_normal_spaces():
    spaces = [
        chain_interval_space(1),
        chain_interval_space(3),
        chain_interval_space(4),
        discrete_space(2),
        discrete_space(3),
        powerset_family_space(2),
    ]
    for space in spaces:
        rebuilt = biconvexity_from_bea(bea_from_biconvexity(space))
        assert rebuilt.lower.sets == space.lower.sets
        assert rebuilt.upper.sets == space.upper.sets
        assert rebuilt.zero_elem == space.zero_elem
        assert rebuilt.one_elem == space.one_elem


def test_unrealizable_oracle_raises_round_trip_failure():
    # Delete a linked pair whose sides are both non-singletons: the hulls
    # rebuilt from singleton linkage cannot see the deletion, so the
    # transversal rule must disagree somewhere.
    oracle = bea_from_biconvexity(chain_interval_space(3))
    pairs = set(oracle_to_table(oracle).pairs)
    assert (0b011, 0b110) in pairs
    pairs.discard((0b011, 0b110))
    broken = BeaOracle.from_table(3, pairs)
    with pytest.raises(RoundTripFailure):
        biconvexity_from_bea(broken, skip_axioms=True)


def test_complementation_of_the_powerset_space():
    space = powerset_family_space(2)
    rep = check_complemented(space)
    assert rep.passed
    # Points are the four subsets of a two-point base in mask order;
    # negation is set complement.
    assert rep.negation == (3, 2, 1, 0)
    assert rep.to_json()["pass"] is True


def test_complementation_needs_constants():
    with pytest.raises(MissingConstants):
        check_complemented(chain_interval_space(3))


def test_chain_space_is_not_complemented():
    # Designate the endpoints of a three-chain: the middle point has no
    # complement.
    base = chain_interval_space(3)
    space = BiConvexity(3, base.lower, base.upper, zero_elem=0, one_elem=2)
    rep = check_complemented(space)
    assert not rep.passed
    assert 1 in rep.missing


def test_symmetric_audit_passes_on_interval_and_discrete_spaces():
    rep = verify_convexity_duality(
        [chain_interval_space(n) for n in (1, 2, 3)] + [discrete_space(2)],
        symmetric=True,
    )
    assert rep["pass"]
    for entry in rep["entries"]:
        assert entry["round_trip"]
        assert entry["dual_complemented"]
        assert entry["second_dual_symmetric"]


def test_audit_reports_the_planar_fixture_as_failed():
    rep = verify_convexity_duality([nonnormal_planar()])
    assert not rep["pass"]
    assert rep["entries"][0]["normal"] is False
