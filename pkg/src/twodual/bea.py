"""The linkage oracle: a relation ``s ⋈ t`` between subsets of a universe.

A *linkage oracle* answers, for any pair of subsets ``(s, t)`` of a finite
universe, whether ``s`` is linked to ``t``.  Two realizations are provided:

``table``
    The positive pairs are stored exhaustively as a frozen set of mask
    pairs.  Nothing is assumed about them; the axiom checkers below do the
    honest sweeps.

``induced``
    A tuple of *halfspace* masks ``H`` is stored and ``s ⋈ t`` holds iff no
    ``h ∈ H`` contains all of ``s`` while missing all of ``t``.  Set
    families give rise to exactly this realization (see
    :func:`family_bea`): with sets ``A_i``, ``S ⋈ T`` iff
    ``⋂_{i∈S} A_i ⊆ ⋃_{j∈T} A_j`` — the empty intersection being the whole
    base and the empty union being empty.

The axiom names used throughout (``i0`` … ``i5``, ``c0``, ``c1``) match the
CLI flags:

* ``i0``  — the empty pair is not linked;
* ``i1``  — linkage is monotone under enlarging either side;
* ``i2``  — singleton linkage both ways happens exactly on the diagonal;
* ``i3``  — the transit rule: from ``(a0 ∪ {p}) ⋈ b0`` and
  ``a1 ⋈ (b1 ∪ {p})`` conclude ``(a0 ∪ a1) ⋈ (b0 ∪ b1)``;
* ``i4``  — every linked pair is linked through a point:
  ``a ⋈ {p}`` and ``{p} ⋈ b`` for some ``p``;
* ``i5``  — symmetry;
* ``c0`` / ``c1`` — the designated zero links to the empty set / the empty
  set links to the designated one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .caps import get_cap, guard
from .core import SetFamily, bits, mask_of, transpose
from .errors import (
    AxiomsFail,
    DuplicateComplement,
    EmptyUniverse,
    InputError,
    MissingConstants,
    PaschFailure,
    PreconditionViolated,
    UniverseTooLarge,
)

AXIOM_NAMES = ("i0", "i1", "i2", "i3", "i4", "i5", "c0", "c1")


@dataclass(frozen=True)
class BeaOracle:
    """A linkage oracle over universe ``0 .. universe-1``.

    Exactly one of ``pairs`` (table realization) and ``halfspaces``
    (induced realization) is set.  ``zero_elem`` / ``one_elem`` designate
    optional constant elements; they are indices into the universe, not
    necessarily ``0`` and ``universe - 1``.
    """

    universe: int
    pairs: frozenset | None = None
    halfspaces: tuple[int, ...] | None = None
    zero_elem: int | None = None
    one_elem: int | None = None

    def __post_init__(self):
        if self.universe < 1:
            raise EmptyUniverse("oracles need a nonempty universe")
        if (self.pairs is None) == (self.halfspaces is None):
            raise InputError("exactly one realization must be given")
        full = self.full_mask
        if self.pairs is not None:
            norm = frozenset((s & full, t & full) for s, t in self.pairs)
            object.__setattr__(self, "pairs", norm)
        else:
            seen = []
            for h in self.halfspaces:
                h &= full
                if h not in seen:
                    seen.append(h)
            object.__setattr__(self, "halfspaces", tuple(seen))
        for c in (self.zero_elem, self.one_elem):
            if c is not None and not 0 <= c < self.universe:
                raise InputError(f"constant {c} out of range")

    @classmethod
    def from_table(cls, universe, pairs, *, zero=None, one=None) -> "BeaOracle":
        return cls(universe, pairs=frozenset(pairs), zero_elem=zero, one_elem=one)

    @classmethod
    def from_halfspaces(cls, universe, sets, *, zero=None, one=None) -> "BeaOracle":
        return cls(universe, halfspaces=tuple(sets), zero_elem=zero, one_elem=one)

    @property
    def realization(self) -> str:
        return "table" if self.pairs is not None else "induced"

    @property
    def full_mask(self) -> int:
        return (1 << self.universe) - 1

    def query(self, s: int, t: int) -> bool:
        """Whether ``s ⋈ t`` (arguments are subset masks)."""
        full = self.full_mask
        s &= full
        t &= full
        if self.pairs is not None:
            return (s, t) in self.pairs
        for h in self.halfspaces:
            if s & ~h == 0 and t & h == 0:
                return False
        return True


def bea_query(oracle: BeaOracle, s: int, t: int) -> bool:
    return oracle.query(s, t)


def family_bea(family: SetFamily) -> BeaOracle:
    """Linkage oracle of a set family.

    The universe is the family's member *indices*; ``S ⋈ T`` iff the
    intersection over ``S`` is covered by the union over ``T``.  The point
    rows of the family (deduplicated by :func:`~twodual.core.transpose`)
    realize this as an induced oracle: a row witnesses a non-linked pair
    exactly when some base point lies in every ``S``-member and no
    ``T``-member.  Membership of the empty / full set, when flagged as
    designated, carries over to the oracle constants.
    """
    if not family.sets:
        raise EmptyUniverse("a family with no members induces no oracle")
    rows = transpose(family).family.sets
    zero = family.index[0] if family.has_empty_as_zero else None
    one = family.index[family.full_mask] if family.has_base_as_one else None
    return BeaOracle.from_halfspaces(len(family.sets), rows, zero=zero, one=one)


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    passed: bool
    witness: tuple | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "pass": self.passed,
            "witness": None
            if self.witness is None
            else [sorted(bits(m)) for m in self.witness],
            "note": self.note,
        }


def _best(witnesses) -> tuple | None:
    """Minimal witness by total popcount, then by the mask tuple itself."""
    if not witnesses:
        return None
    return min(witnesses, key=lambda w: (sum(m.bit_count() for m in w), w))


def _check_i0(o: BeaOracle) -> AxiomReport:
    if o.pairs is not None:
        ok = (0, 0) not in o.pairs
    else:
        # With no halfspaces at all, every pair — the empty one included —
        # is vacuously linked.
        ok = len(o.halfspaces) > 0
    return AxiomReport("i0", ok, None if ok else (0, 0))


def _check_i1(o: BeaOracle) -> AxiomReport:
    if o.halfspaces is not None:
        return AxiomReport(
            "i1", True, note="monotone by construction for induced oracles"
        )
    found = []
    for s, t in o.pairs:
        for p in range(o.universe):
            bit = 1 << p
            if not s & bit and (s | bit, t) not in o.pairs:
                found.append((s, t, s | bit, t))
            if not t & bit and (s, t | bit) not in o.pairs:
                found.append((s, t, s, t | bit))
    # Single-element extensions are complete: any monotonicity failure has
    # a one-step failure along a chain between the two pairs.
    return AxiomReport("i1", not found, _best(found))


def _check_i2(o: BeaOracle) -> AxiomReport:
    n = o.universe
    found = []
    le = [[o.query(1 << p, 1 << q) for q in range(n)] for p in range(n)]
    for p in range(n):
        if not le[p][p]:
            found.append((1 << p, 1 << p))
    for p in range(n):
        for q in range(p + 1, n):
            if le[p][q] and le[q][p]:
                found.append((1 << p, 1 << q))
    return AxiomReport("i2", not found, _best(found))


def _check_i3(o: BeaOracle) -> AxiomReport:
    if o.halfspaces is not None:
        return AxiomReport(
            "i3",
            True,
            note="a halfspace separating the conclusion would separate a premise",
        )
    by_first: dict[int, list] = {}
    by_second: dict[int, list] = {}
    for s, t in o.pairs:
        for p in bits(s):
            by_first.setdefault(p, []).append((s, t))
        for p in bits(t):
            by_second.setdefault(p, []).append((s, t))
    found = []
    for p in set(by_first) & set(by_second):
        bit = 1 << p
        for u, v in by_first[p]:
            for w, z in by_second[p]:
                for a0 in (u & ~bit, u):
                    for b1 in (z & ~bit, z):
                        if (a0 | w, v | b1) not in o.pairs:
                            found.append((a0, v, w, b1, bit))
    return AxiomReport("i3", not found, _best(found))


def _semilattice_closure(members, op, seed, limit) -> set | None:
    """Closure of ``members`` under an idempotent-commutative-associative
    binary op, with ``seed`` as the empty fold.  One left-to-right pass is
    complete for such ops.  Returns None when the cap is exceeded."""
    out = {seed}
    for h in members:
        out |= {op(h, e) for e in out}
        if len(out) > limit:
            return None
    return out


def _check_i4_induced(o: BeaOracle) -> AxiomReport:
    n = o.universe
    full = o.full_mask
    limit = get_cap("closure-size")
    inters = _semilattice_closure(o.halfspaces, int.__and__, full, limit)
    unions = _semilattice_closure(o.halfspaces, int.__or__, 0, limit)
    if inters is None or unions is None:
        guard("pair-axiom-sweep", n, "i4 fallback sweep after closure blow-up")
        return _check_i4_sweep(o)
    if len(inters) * len(unions) > 1 << 22:
        raise UniverseTooLarge(
            "closure-size", 1 << 22, len(inters) * len(unions), "i4 pair product"
        )
    # For induced oracles, a ⋈ b depends on a only through the intersection
    # of the halfspaces above a, and the witnessing points available for b
    # only through unions of halfspaces; so it suffices to test hull pairs.
    for a in inters:
        above = [h for h in o.halfspaces if a & ~h == 0]
        for bcomp in unions:
            if a & ~bcomp:
                continue
            if any(h & ~bcomp == 0 for h in above):
                continue
            b = full & ~bcomp
            # Re-derive the witness honestly before reporting it.
            if not o.query(a, b):
                raise AssertionError("i4 closure reduction out of step")
            for p in range(n):
                if o.query(a, 1 << p) and o.query(1 << p, b):
                    raise AssertionError("i4 closure reduction out of step")
            return AxiomReport("i4", False, (a, b))
    return AxiomReport("i4", True)


def _check_i4_sweep(o: BeaOracle) -> AxiomReport:
    n = o.universe
    found = []
    for s in range(1 << n):
        for t in range(1 << n):
            if not o.query(s, t):
                continue
            if not any(
                o.query(s, 1 << p) and o.query(1 << p, t) for p in range(n)
            ):
                found.append((s, t))
    return AxiomReport("i4", not found, _best(found))


def _check_i4(o: BeaOracle) -> AxiomReport:
    if o.halfspaces is not None:
        return _check_i4_induced(o)
    found = []
    for s, t in o.pairs:
        if not any(
            (s, 1 << p) in o.pairs and (1 << p, t) in o.pairs
            for p in range(o.universe)
        ):
            found.append((s, t))
    return AxiomReport("i4", not found, _best(found))


def _check_i5(o: BeaOracle) -> AxiomReport:
    if o.pairs is not None:
        found = [(s, t) for s, t in o.pairs if (t, s) not in o.pairs]
        return AxiomReport("i5", not found, _best(found))
    full = o.full_mask
    members = set(o.halfspaces)
    found = []
    for h in o.halfspaces:
        if full & ~h not in members:
            # (complement(h), h) is linked one way only.
            found.append((full & ~h, h))
    return AxiomReport(
        "i5",
        not found,
        _best(found),
        note="symmetry for induced oracles is complement-closure of the halfspaces",
    )


def _check_c0(o: BeaOracle) -> AxiomReport:
    if o.zero_elem is None:
        raise MissingConstants("c0 needs a designated zero element")
    pair = (1 << o.zero_elem, 0)
    ok = o.query(*pair)
    return AxiomReport("c0", ok, None if ok else pair)


def _check_c1(o: BeaOracle) -> AxiomReport:
    if o.one_elem is None:
        raise MissingConstants("c1 needs a designated one element")
    pair = (0, 1 << o.one_elem)
    ok = o.query(*pair)
    return AxiomReport("c1", ok, None if ok else pair)


_CHECKERS = {
    "i0": _check_i0,
    "i1": _check_i1,
    "i2": _check_i2,
    "i3": _check_i3,
    "i4": _check_i4,
    "i5": _check_i5,
    "c0": _check_c0,
    "c1": _check_c1,
}


def check_axiom(oracle: BeaOracle, axiom: str) -> AxiomReport:
    """Check one axiom; reports carry a minimal counterexample on failure.

    Witnesses are mask tuples: ``i1`` reports
    ``(a, b, a', b')`` — a linked pair and its non-linked one-element
    extension; ``i2`` reports the offending singleton pair; ``i3`` reports
    ``(a0, b0, a1, b1, {p})``; ``i4``/``i5`` report the linked pair that
    lacks a through-point / a converse.  Minimality is by total popcount,
    then mask order, over the counterexamples the checker enumerates.
    """
    try:
        fn = _CHECKERS[axiom]
    except KeyError:
        raise InputError(f"unknown axiom {axiom!r}") from None
    return fn(oracle)


def check_axioms(oracle: BeaOracle, axioms=None) -> dict:
    """Check several axioms; default is the core set plus any constants."""
    if axioms is None:
        axioms = ["i0", "i1", "i2", "i3"]
        if oracle.zero_elem is not None:
            axioms.append("c0")
        if oracle.one_elem is not None:
            axioms.append("c1")
    return {a: check_axiom(oracle, a) for a in axioms}


def require_axioms(oracle: BeaOracle, axioms) -> None:
    reports = {a: check_axiom(oracle, a) for a in axioms}
    failures = {a: r for a, r in reports.items() if not r.passed}
    if failures:
        raise AxiomsFail(failures)


def associated_order(oracle: BeaOracle) -> frozenset:
    """The order ``p ≤ q  iff  {p} ⋈ {q}`` (a poset once i0–i3 hold)."""
    require_axioms(oracle, ("i0", "i1", "i2", "i3"))
    n = oracle.universe
    return frozenset(
        (p, q) for p in range(n) for q in range(n) if oracle.query(1 << p, 1 << q)
    )


def complement(oracle: BeaOracle, a: int):
    """The complement of element ``a``: the unique ``b`` with
    ``{a,b} ⋈ {0}`` and ``{1} ⋈ {a,b}``.  Returns None when absent."""
    if oracle.zero_elem is None or oracle.one_elem is None:
        raise MissingConstants("complements need designated zero and one")
    z = 1 << oracle.zero_elem
    u = 1 << oracle.one_elem
    found = []
    for b in range(oracle.universe):
        both = (1 << a) | (1 << b)
        if oracle.query(both, z) and oracle.query(u, both):
            found.append(b)
    if not found:
        return None
    if len(found) > 1:
        raise DuplicateComplement(a, found)
    return found[0]


def is_halfspace(oracle: BeaOracle, u: int) -> bool:
    """Whether ``u`` is a halfspace: no subset of ``u`` links to any subset
    of its complement, and designated constants sit on the right sides."""
    full = oracle.full_mask
    u &= full
    if oracle.zero_elem is not None and u >> oracle.zero_elem & 1:
        return False
    if oracle.one_elem is not None and not u >> oracle.one_elem & 1:
        return False
    if oracle.pairs is not None:
        # The table stores every positive pair, so scan them all.
        return not any(s & ~u == 0 and t & u == 0 for s, t in oracle.pairs)
    # Induced oracles are monotone: a halfspace witnessing the maximal pair
    # (u, complement) witnesses every smaller pair.
    return not oracle.query(u, full & ~u)


def _halfspaces_backtrack(oracle: BeaOracle) -> list[int]:
    n = oracle.universe
    results = []
    table = oracle.pairs

    def viable(inmask: int, outmask: int) -> bool:
        if table is not None:
            # A stored pair dooms every completion only once both sides
            # are fully decided: s inside, t outside.
            return not any(
                s & ~inmask == 0 and t & ~outmask == 0 for s, t in table
            )
        # Some halfspace of the realization extends the partial split iff
        # the decided pair is not linked.
        return not oracle.query(inmask, outmask)

    def rec(x: int, inmask: int, outmask: int) -> None:
        if x == n:
            if is_halfspace(oracle, inmask):
                results.append(inmask)
            return
        bit = 1 << x
        if oracle.zero_elem == x:
            choices = (outmask | bit, None)
        elif oracle.one_elem == x:
            choices = (None, inmask | bit)
        else:
            choices = (outmask | bit, inmask | bit)
        if choices[0] is not None and viable(inmask, choices[0]):
            rec(x + 1, inmask, choices[0])
        if choices[1] is not None and viable(choices[1], outmask):
            rec(x + 1, choices[1], outmask)

    rec(0, 0, 0)
    return sorted(results)


def all_halfspaces(oracle: BeaOracle, *, method: str = "auto") -> SetFamily:
    """Every halfspace of the oracle, as a family in increasing mask order.

    ``method="auto"`` lists an induced oracle's stored halfspaces directly
    (they are exactly the halfspaces: a separator for ``(u, complement)``
    must equal ``u``) and backtracks over element splits for tables.
    ``"brute"`` sweeps all ``2^n`` subsets through :func:`is_halfspace` —
    the independent oracle the fast paths are tested against.
    """
    n = oracle.universe
    if method == "auto":
        method = "analytic" if oracle.halfspaces is not None else "backtrack"
    if method == "analytic":
        if oracle.halfspaces is None:
            raise InputError("analytic listing needs an induced oracle")
        guard("halfspace-universe", n, "analytic halfspace listing")
        out = []
        for h in oracle.halfspaces:
            if oracle.zero_elem is not None and h >> oracle.zero_elem & 1:
                continue
            if oracle.one_elem is not None and not h >> oracle.one_elem & 1:
                continue
            out.append(h)
        return SetFamily(base=n, sets=tuple(sorted(set(out))))
    if method == "brute":
        guard("halfspace-brute", n, "brute-force halfspace sweep")
        sets = [u for u in range(1 << n) if is_halfspace(oracle, u)]
        return SetFamily(base=n, sets=tuple(sets))
    if method == "backtrack":
        guard("halfspace-brute", n, "backtracking halfspace search")
        return SetFamily(base=n, sets=tuple(_halfspaces_backtrack(oracle)))
    raise InputError(f"unknown halfspace method {method!r}")


def separate(oracle: BeaOracle, a: int, b: int) -> int:
    """Grow a halfspace containing ``a`` and avoiding ``b``.

    Precondition: ``a`` is not linked to ``b`` (else
    :class:`PreconditionViolated`).  The first sweep grows the inside from
    ``a``, admitting a point when no subset of the grown side links to
    ``b``; the second grows the outside from ``b`` under the full
    no-linked-pair condition.  When the sweeps strand a point, or the grown
    side fails the halfspace certificate, the input violates the core
    axioms and a :class:`PaschFailure` is raised — the function never
    returns a bogus halfspace.
    """
    full = oracle.full_mask
    a &= full
    b &= full
    if oracle.query(a, b):
        raise PreconditionViolated("the sides are linked; nothing separates them")
    if a & b:
        raise PaschFailure(
            "sides overlap yet are not linked; singleton axioms must fail",
            witness=(a, b),
        )
    n = oracle.universe
    inside = a

    if oracle.halfspaces is not None:
        # Fast path: track which stored halfspaces still extend the sides.
        cands = [h for h in oracle.halfspaces if a & ~h == 0 and b & h == 0]
        for p in range(n):
            bit = 1 << p
            if (inside | b) & bit:
                continue
            keep = [h for h in cands if h & bit]
            if keep:
                inside |= bit
                cands = keep
        outside = b
        for p in range(n):
            bit = 1 << p
            if (inside | outside) & bit:
                continue
            avoid = [h for h in cands if not h & bit]
            if avoid:
                outside |= bit
                cands = avoid
    else:
        linked_to_b = [s for s, t in oracle.pairs if t == b]
        for p in range(n):
            bit = 1 << p
            if (inside | b) & bit:
                continue
            grown = inside | bit
            if not any(s & ~grown == 0 for s in linked_to_b):
                inside = grown
        outside = b
        clash = next(
            (
                (s, t)
                for s, t in oracle.pairs
                if s & ~inside == 0 and t & ~outside == 0
            ),
            None,
        )
        if clash is not None:
            raise PaschFailure(
                "a stored pair already links the grown sides", witness=clash
            )
        for p in range(n):
            bit = 1 << p
            if (inside | outside) & bit:
                continue
            grown = outside | bit
            if not any(
                s & ~inside == 0 and t & ~grown == 0 for s, t in oracle.pairs
            ):
                outside = grown

    if inside | outside != full:
        stuck = next(p for p in range(n) if not (inside | outside) >> p & 1)
        raise PaschFailure(
            f"element {stuck} can join neither side; the oracle breaks the "
            "monotonicity or transit axioms",
            stuck_point=stuck,
        )
    if not is_halfspace(oracle, inside):
        raise PaschFailure(
            "the grown side fails the halfspace certificate",
            witness=(inside, full & ~inside),
        )
    return inside


def oracle_to_table(oracle: BeaOracle) -> BeaOracle:
    """Materialize any oracle as a table by querying every subset pair."""
    n = oracle.universe
    guard("oracle-table", n, "pair-table materialization")
    pairs = frozenset(
        (s, t)
        for s in range(1 << n)
        for t in range(1 << n)
        if oracle.query(s, t)
    )
    return BeaOracle.from_table(
        n, pairs, zero=oracle.zero_elem, one=oracle.one_elem
    )
