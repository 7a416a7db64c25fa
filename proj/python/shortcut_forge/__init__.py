"""Shortcut sets and transitive-closure spanners for directed graphs."""

from ._core import (
    DiGraph,
    ShortcutForgeError,
    approx_shortcut,
    approx_shortcut_dag,
    approx_tc_spanner,
    chain_antichain_decompose,
    diameter,
    exists_shortcut,
    gen_layered,
    gen_path,
    gen_planted_cycles,
    gen_random_dag,
    min_shortcut_exact,
    min_tc_spanner_exact,
    path_two_shortcut,
    scc_condense,
    shortcut_from_tcspanner,
    transitive_reduction,
    verify_shortcut,
    verify_tc_spanner,
)

__all__ = [
    "DiGraph",
    "ShortcutForgeError",
    "approx_shortcut",
    "approx_shortcut_dag",
    "approx_tc_spanner",
    "chain_antichain_decompose",
    "diameter",
    "exists_shortcut",
    "gen_layered",
    "gen_path",
    "gen_planted_cycles",
    "gen_random_dag",
    "min_shortcut_exact",
    "min_tc_spanner_exact",
    "path_two_shortcut",
    "scc_condense",
    "shortcut_from_tcspanner",
    "transitive_reduction",
    "verify_shortcut",
    "verify_tc_spanner",
]
