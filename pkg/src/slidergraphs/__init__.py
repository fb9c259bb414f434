"""Circular slider graphs: de Bruijn, Kautz, Rauzy, periodic, transversally
Markov and Cayley/Schreier slider graphs, lamplighter groups, and checks of
their structural isomorphisms."""

from .digraph import (
    Digraph,
    IsoWitness,
    connectivity,
    cycle_digraph,
    eulerian_cycle,
    find_iso,
    induced_subgraph,
    line_digraph,
    step_d_induced,
    tensor_product,
    verify_iso,
)
from .export import export_dot, export_json, parse_json
from .groups import GroupTable, cyclic_group, symmetric_group
from .lamplighter import (
    LamplighterElement,
    Standard,
    SwitchWalkLeft,
    WalkRightSwitch,
    cayley_digraph,
    coset_projection,
    generator_elements,
    schreier_action,
    schreier_digraph,
    wreath_multiply,
)
from .slider import (
    PartitionSystem,
    cayley_slider,
    collatz_slider,
    factorial_slider,
    full_debruijn,
    induced_slider,
    kautz,
    partition_slider,
    periodic_slider,
    schreier_slider,
    trans_markov_slider,
)
from .symbolic import (
    Explicit,
    FiniteWord,
    Sft,
    Sofic,
    Tmc,
    aperiodic,
    circular_admissible,
    factors,
    irreducible,
    primitivity_exponent,
    sft_to_tmc,
    substitution_fixed_point,
)
from .theorems import (
    count_debruijn_sequences,
    debruijn_sequence,
    minimal_connecting_step,
    verify_thm_sch,
    verify_thm_schC,
    verify_thm_spider,
)
from .words import Alphabet, Arrow, cyclic_shift, debruijn_successors, is_debruijn_transition

__version__ = "0.1.0"
