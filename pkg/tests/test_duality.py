"""Duals, second duals, evaluation reports, and the linkage dual."""

import pytest

from twodual import (
    BeaOracle,
    SetFamily,
    all_halfspaces,
    bidual_and_evaluate,
    check_semi_dual,
    dual,
    dual_of_surjection,
    evaluation_rows,
    family_bea,
    hom_equivalence,
    oracle_from_homs,
    ultimate_bidual_report,
    ultimate_dual,
)
from twodual.core import FiniteStructure
from twodual.errors import AxiomsFail, S1Violation, SignatureMismatch
from twodual.instances import gen_posets, template


def chain_lattice(n):
    """The n-chain as a bounded lattice structure."""
    sig = template("bounded_lattice").signature
    meet = [(a, b, min(a, b)) for a in range(n) for b in range(n)]
    join = [(a, b, max(a, b)) for a in range(n) for b in range(n)]
    return FiniteStructure(
        sig, n, {"meet": meet, "join": join}, {"zero": 0, "one": n - 1}
    )


def test_three_chain_dual_carrier_is_the_two_prime_filters():
    x = chain_lattice(3)
    ds = dual(x, template("bounded_lattice"), template("pure_set"))
    assert ds.carrier.homs.sets == (0b100, 0b110)
    assert ds.size == 2


def test_three_chain_against_pure_set_has_a_fat_second_dual():
    """The negative control: |X**| = 4 over a 3-element chain."""
    x = chain_lattice(3)
    ds, bidual, rep = bidual_and_evaluate(
        x, template("bounded_lattice"), template("pure_set")
    )
    assert rep.sizes == (3, 2, 4)
    assert rep.injective
    assert not rep.surjective
    assert rep.unrepresented == (0b01,)
    assert not rep.passed


def test_check_semi_dual_flags_the_negative_control():
    rep = check_semi_dual(
        template("bounded_lattice"), template("pure_set"), [chain_lattice(3)]
    )
    assert not rep.passed
    entry = rep.entries[0]
    assert entry["sizes"] == {"X": 3, "Xstar": 2, "Xbidual": 4}
    assert entry["unrepresented"] == 1


def test_signature_mismatch_is_refused():
    x = chain_lattice(3)
    with pytest.raises(SignatureMismatch):
        dual(x, template("order"), template("order"))


def test_s1_violation_names_the_broken_symbol():
    # hom(3-chain, bounded_lattice) lacks the constant-one function, so the
    # carrier cannot support a template that demands a one.
    x = chain_lattice(3)
    with pytest.raises(S1Violation) as err:
        dual(x, template("bounded_lattice"), template("semilattice01"))
    assert err.value.symbol == "one"


def test_evaluation_rows_are_point_rows_of_the_carrier():
    x = chain_lattice(3)
    ds = dual(x, template("bounded_lattice"), template("pure_set"))
    assert evaluation_rows(ds.carrier) == [0b00, 0b10, 0b11]


def test_priestley_round_trip_on_every_labeled_poset_up_to_three():
    order_t = template("order")
    dist_t = template("bounded_lattice")
    for n in (1, 2, 3):
        for p in gen_posets(n):
            _, _, rep = bidual_and_evaluate(p, order_t, dist_t)
            assert rep.passed, sorted(p.rel("leq"))


# ---------------------------------------------------- linkage duals


def test_ultimate_dual_constant_rule_no_constants():
    """A constant-free oracle gets both constants when ∅/full are halfspaces."""
    fam = SetFamily(base=2, sets=(0b01, 0b11))
    ud = ultimate_dual(family_bea(fam))
    # Halfspaces of the two-chain family: {1} and {0,1} (member indices).
    assert ud.carrier.sets == (0b10, 0b11)
    assert not ud.carrier.has_empty_as_zero  # ∅ is not a halfspace here
    assert ud.carrier.has_base_as_one


def test_ultimate_dual_constant_rule_with_constants():
    fam = SetFamily(
        base=2,
        sets=(0, 0b01, 0b11),
        has_empty_as_zero=True,
        has_base_as_one=True,
    )
    o = family_bea(fam)
    ud = ultimate_dual(o)
    # Source has both constants, so the dual gets neither.
    assert not ud.carrier.has_empty_as_zero
    assert not ud.carrier.has_base_as_one


def test_ultimate_dual_requires_the_core_axioms():
    broken = BeaOracle.from_table(2, {(0, 0)})
    with pytest.raises(AxiomsFail):
        ultimate_dual(broken)


def test_ultimate_bidual_report_powerset_family():
    fam = SetFamily(
        base=3,
        sets=tuple(range(8)),
        has_empty_as_zero=True,
        has_base_as_one=True,
    )
    rep = ultimate_bidual_report(family_bea(fam))
    assert rep["pass"]
    # The halfspaces of the full powerset family are the three point
    # filters, and their halfspaces recover all eight members.
    assert rep["sizes"] == {"X": 8, "Xstar": 3, "Xbidual": 8}


def test_ultimate_bidual_report_is_exact_on_small_oracles():
    import itertools

    for k in (1, 2, 3):
        for combo in itertools.combinations(range(8), k):
            fam = SetFamily(base=3, sets=combo)
            rep = ultimate_bidual_report(family_bea(fam))
            assert rep["pass"], (combo, rep["counterexamples"])


def test_oracle_from_homs_carries_template_constants():
    x = chain_lattice(3)
    o = oracle_from_homs(x, template("bounded_lattice"))
    assert o.zero_elem == 0
    assert o.one_elem == 2
    assert o.halfspaces == (0b100, 0b110)
    # Characteristic rule: s ⋈ t iff no hom separates them.
    assert o.query(0b010, 0b100)  # 1 ≤ 2
    assert not o.query(0b100, 0b010)  # 2 ≰ 1


def test_hom_equivalence_on_the_three_chain():
    x = chain_lattice(3)
    rep = hom_equivalence(x, template("bounded_lattice"))
    assert rep.equal
    assert rep.only_homs == ()
    assert rep.only_halfspaces == ()


def test_dual_of_surjection_embeds_the_dual():
    # Collapse the 3-chain onto the 2-chain: 0,1 ↦ 0 and 2 ↦ 1.
    x, y = chain_lattice(3), chain_lattice(2)
    lat = template("bounded_lattice")
    rep = dual_of_surjection([0, 0, 1], x, y, lat)
    assert rep.embedding
    assert rep.witnesses == ()


def test_dual_of_surjection_rejects_non_homs():
    from twodual.errors import NotHomomorphism, NotSurjective

    x, y = chain_lattice(3), chain_lattice(2)
    lat = template("bounded_lattice")
    with pytest.raises(NotHomomorphism):
        dual_of_surjection([1, 0, 1], x, y, lat)
    with pytest.raises(NotSurjective):
        dual_of_surjection([0, 0, 0], x, y, lat)
