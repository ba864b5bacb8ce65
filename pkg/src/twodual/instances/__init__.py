from .catalog import (
    TEMPLATES,
    ORACLE_TEMPLATES,
    template,
    oracle_template,
    template_names,
)
from .generators import (
    chain_interval_space,
    count_posets_brute,
    count_semilattice_tables,
    discrete_space,
    down_set_lattice,
    gen_betweenness,
    gen_biconvexity,
    gen_distributive_lattices,
    gen_families,
    gen_posets,
    gen_semilattices,
    gen_separated_instances,
    leq_rows,
    minimal_betweenness,
    nonnormal_planar,
    planar_trace_space,
    powerset_family_space,
    random_oracle_instances,
)
from .verifiers import (
    betweenness_axioms,
    make_transit_fixture,
    run_suite,
    suite_names,
    verify_betweenness,
    verify_biconvex,
    verify_hms,
    verify_hom_equivalence,
    verify_pasch,
    verify_priestley,
    verify_stone,
    verify_ultimate,
)

__all__ = [
    "TEMPLATES",
    "ORACLE_TEMPLATES",
    "template",
    "oracle_template",
    "template_names",
    "betweenness_axioms",
    "chain_interval_space",
    "count_posets_brute",
    "count_semilattice_tables",
    "discrete_space",
    "down_set_lattice",
    "gen_betweenness",
    "gen_biconvexity",
    "gen_distributive_lattices",
    "gen_families",
    "gen_posets",
    "gen_semilattices",
    "gen_separated_instances",
    "leq_rows",
    "make_transit_fixture",
    "minimal_betweenness",
    "nonnormal_planar",
    "planar_trace_space",
    "powerset_family_space",
    "random_oracle_instances",
    "run_suite",
    "suite_names",
    "verify_betweenness",
    "verify_biconvex",
    "verify_hms",
    "verify_hom_equivalence",
    "verify_pasch",
    "verify_priestley",
    "verify_stone",
    "verify_ultimate",
]
