"""Linkage oracles: queries, axioms, halfspaces, and separation.

The reference implementation used throughout this file computes linkage
directly with Python sets — intersection of the left side covered by the
union of the right side — independently of the bit-mask row machinery.
"""

import itertools

import pytest

from twodual import (
    AxiomsFail,
    BeaOracle,
    PaschFailure,
    PreconditionViolated,
    all_halfspaces,
    associated_order,
    bits,
    check_axiom,
    check_axioms,
    complement,
    family_bea,
    is_halfspace,
    oracle_to_table,
    require_axioms,
    separate,
)
from twodual.core import SetFamily
from twodual.errors import EmptyUniverse, InputError


def naive_family_query(base_size, members, s_mask, t_mask):
    """S ⋈ T by the definition: ⋂_{i∈S} A_i ⊆ ⋃_{j∈T} A_j.

    The empty intersection is the whole base, the empty union is ∅.
    """
    inter = set(range(base_size))
    for i in bits(s_mask):
        inter &= members[i]
    union = set()
    for j in bits(t_mask):
        union |= members[j]
    return inter <= union


def as_sets(family):
    return [set(bits(m)) for m in family.sets]


def small_families(base, max_members):
    """Every family over ``base`` points with up to ``max_members`` sets."""
    all_masks = range(1 << base)
    for k in range(1, max_members + 1):
        for combo in itertools.combinations(all_masks, k):
            yield SetFamily(base=base, sets=combo)


def test_family_bea_matches_the_set_theoretic_definition():
    checked = 0
    for fam in small_families(3, 3):
        oracle = family_bea(fam)
        members = as_sets(fam)
        n = len(fam)
        for s in range(1 << n):
            for t in range(1 << n):
                assert oracle.query(s, t) == naive_family_query(
                    fam.base, members, s, t
                ), (
                    fam.sets,
                    s,
                    t,
                )
                checked += 1
    # C(8,1)·4 + C(8,2)·16 + C(8,3)·64 subset pairs over 92 families.
    assert checked == 4064


def test_family_bea_needs_members():
    with pytest.raises(EmptyUniverse):
        family_bea(SetFamily(base=2, sets=()))


def test_realizations_are_exclusive():
    with pytest.raises(InputError):
        BeaOracle(2, pairs=frozenset(), halfspaces=(1,))
    with pytest.raises(InputError):
        BeaOracle(2)


def test_oracle_normalizes_masks_and_dedups_halfspaces():
    o = BeaOracle.from_halfspaces(2, (0b101, 0b01, 0b11))
    assert o.halfspaces == (0b01, 0b11)
    t = BeaOracle.from_table(2, {(0b100, 0b111)})
    assert t.pairs == frozenset({(0, 0b11)})


def test_query_constants_out_of_range():
    with pytest.raises(InputError):
        BeaOracle.from_halfspaces(2, (1,), zero=5)


def test_table_and_induced_realizations_agree():
    fam = SetFamily(base=4, sets=(0b0011, 0b0110, 0b1100, 0b1111))
    induced = family_bea(fam)
    table = oracle_to_table(induced)
    assert table.realization == "table"
    n = induced.universe
    for s in range(1 << n):
        for t in range(1 << n):
            assert induced.query(s, t) == table.query(s, t)


# ----------------------------------------------------------- axioms


def test_core_axioms_hold_for_every_small_family_oracle():
    for fam in small_families(3, 3):
        reports = check_axioms(family_bea(fam))
        assert set(reports) == {"i0", "i1", "i2", "i3"}
        for name, rep in reports.items():
            assert rep.passed, (fam.sets, name, rep.witness)


def test_i0_fails_when_empty_links_empty():
    o = BeaOracle.from_table(2, {(0, 0)})
    rep = check_axiom(o, "i0")
    assert not rep.passed
    assert rep.witness == (0, 0)


def test_i1_fails_for_a_non_monotone_table():
    # {0} ⋈ {1} but the extension {0} ⋈ {1, 0} is missing.
    o = BeaOracle.from_table(2, {(0b01, 0b10)})
    rep = check_axiom(o, "i1")
    assert not rep.passed


def test_i2_detects_asymmetric_singletons():
    # 0 links to 1 but nothing else; the associated order is not reflexive.
    o = BeaOracle.from_table(2, {(0b01, 0b10)})
    rep = check_axiom(o, "i2")
    assert not rep.passed


def test_i5_symmetry_of_a_symmetric_and_an_asymmetric_family():
    sym = SetFamily(base=2, sets=(0b01, 0b10))
    assert check_axiom(family_bea(sym), "i5").passed
    asym = SetFamily(base=2, sets=(0b01, 0b11))
    assert not check_axiom(family_bea(asym), "i5").passed


def test_constant_axioms_follow_the_designated_members():
    fam = SetFamily(
        base=2,
        sets=(0, 0b01, 0b11),
        has_empty_as_zero=True,
        has_base_as_one=True,
    )
    o = family_bea(fam)
    assert o.zero_elem == 0
    assert o.one_elem == 2
    reports = check_axioms(o)
    assert set(reports) == {"i0", "i1", "i2", "i3", "c0", "c1"}
    assert all(r.passed for r in reports.values())
    # Misdesignating a non-empty member as zero breaks c0.
    bad = BeaOracle.from_halfspaces(3, family_bea(fam).halfspaces, zero=1)
    assert not check_axiom(bad, "c0").passed


def test_require_axioms_raises_with_the_failing_reports():
    o = BeaOracle.from_table(2, {(0, 0)})
    with pytest.raises(AxiomsFail) as err:
        require_axioms(o, ("i0", "i1"))
    assert "i0" in err.value.failures


def test_unknown_axiom_is_an_input_error():
    o = family_bea(SetFamily(base=1, sets=(1,)))
    with pytest.raises(InputError):
        check_axiom(o, "i7")


def test_associated_order_of_a_nested_family_is_the_chain():
    fam = SetFamily(base=3, sets=(0b001, 0b011, 0b111))
    order = associated_order(family_bea(fam))
    assert order == frozenset(
        (p, q) for p in range(3) for q in range(3) if p <= q
    )


def test_complement_in_the_powerset_family():
    fam = SetFamily(
        base=2,
        sets=tuple(range(4)),
        has_empty_as_zero=True,
        has_base_as_one=True,
    )
    o = family_bea(fam)
    # Member masks are 0,1,2,3; complements swap 0↔3 and 1↔2.
    assert complement(o, fam.index[0b01]) == fam.index[0b10]
    assert complement(o, fam.index[0b00]) == fam.index[0b11]


# ------------------------------------------------------- halfspaces


def test_halfspace_methods_agree_on_small_oracles():
    for fam in small_families(3, 3):
        o = family_bea(fam)
        brute = all_halfspaces(o, method="brute").sets
        analytic = all_halfspaces(o, method="analytic").sets
        assert brute == analytic, fam.sets
        table = oracle_to_table(o)
        backtrack = all_halfspaces(table, method="backtrack").sets
        assert brute == backtrack, fam.sets


def test_halfspaces_respect_constants():
    fam = SetFamily(
        base=2,
        sets=(0, 0b01, 0b11),
        has_empty_as_zero=True,
        has_base_as_one=True,
    )
    o = family_bea(fam)
    for h in all_halfspaces(o).sets:
        assert not h >> o.zero_elem & 1
        assert h >> o.one_elem & 1
    brute = all_halfspaces(oracle_to_table(o), method="brute").sets
    assert brute == all_halfspaces(o).sets


def test_is_halfspace_on_the_two_chain():
    o = family_bea(SetFamily(base=2, sets=(0b01, 0b11)))
    # Universe is the two members; the up-closed index sets {1} and {0,1}
    # are halfspaces.  ∅ is not: ∅ ⋈ {0,1} because the members cover the base.
    assert is_halfspace(o, 0b10)
    assert is_halfspace(o, 0b11)
    assert not is_halfspace(o, 0b00)
    assert not is_halfspace(o, 0b01)


# -------------------------------------------------------- separation


def test_separate_rejects_linked_pairs():
    o = family_bea(SetFamily(base=2, sets=(0b01, 0b11)))
    with pytest.raises(PreconditionViolated):
        separate(o, 0b01, 0b10)  # member 0 ⊆ member 1


def test_separate_certificates_on_every_small_family():
    """Every non-linked pair of every small family yields a verified split."""
    produced = 0
    for fam in small_families(3, 3):
        o = family_bea(fam)
        n = o.universe
        full = o.full_mask
        for s in range(1 << n):
            for t in range(1 << n):
                if o.query(s, t):
                    continue
                u = separate(o, s, t)
                assert s & ~u == 0, (fam.sets, s, t, u)
                assert t & u == 0, (fam.sets, s, t, u)
                assert is_halfspace(o, u), (fam.sets, s, t, u)
                produced += 1
    assert produced > 1000


def test_separate_works_on_tables_too():
    fam = SetFamily(base=4, sets=(0b0001, 0b0011, 0b0111, 0b1111))
    table = oracle_to_table(family_bea(fam))
    u = separate(table, 0b1000, 0b0001)
    assert is_halfspace(table, u)
    assert 0b1000 & ~u == 0 and 0b0001 & u == 0


def test_separate_on_an_axiom_breaking_table_raises_pasch_failure():
    """Dropping a positive pair from a sound table gets separation stuck."""
    fam = SetFamily(base=4, sets=(0b0011, 0b0101, 0b1001, 0b1110))
    table = oracle_to_table(family_bea(fam))
    victims = [
        (s, t)
        for s, t in sorted(table.pairs)
        if s and t and s & t == 0 and (s | t) != table.full_mask
    ]
    assert victims, "fixture family too small to have a removable pair"
    s0, t0 = victims[0]
    broken = BeaOracle.from_table(
        table.universe, set(table.pairs) - {(s0, t0)}
    )
    assert not check_axiom(broken, "i3").passed
    with pytest.raises(PaschFailure):
        separate(broken, s0, t0)


def test_axiom_witnesses_are_popcount_minimal():
    # i3 witness of the broken two-chain: all masks in it stay small.
    fam = SetFamily(base=3, sets=(0b001, 0b011, 0b111))
    table = oracle_to_table(family_bea(fam))
    victims = [
        (s, t)
        for s, t in sorted(table.pairs)
        if s and t and s & t == 0 and (s | t) != table.full_mask
    ]
    s0, t0 = victims[0]
    broken = BeaOracle.from_table(table.universe, set(table.pairs) - {(s0, t0)})
    rep = check_axiom(broken, "i3")
    assert not rep.passed
    # The reported conclusion pair is the deleted one (it is the unique hole).
    a0, b0 = rep.witness[0], rep.witness[1]
    assert (a0, b0) == (s0, t0)
