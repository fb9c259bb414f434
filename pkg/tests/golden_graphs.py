"""Graphs pinned byte-for-byte under tests/golden/, keyed by file stem."""

from __future__ import annotations

from pathlib import Path

from slidergraphs.digraph import Digraph, cycle_digraph, line_digraph, tensor_product
from slidergraphs.groups import cyclic_group, symmetric_group
from slidergraphs.lamplighter import WalkRightSwitch, cayley_digraph, schreier_digraph
from slidergraphs.slider import (
    cayley_slider,
    collatz_slider,
    factorial_slider,
    full_debruijn,
    induced_slider,
    kautz,
    periodic_slider,
    trans_markov_slider,
)
from slidergraphs.symbolic import FiniteWord, Tmc, factors, fibonacci_word
from slidergraphs.words import Alphabet

GOLDEN_DIR = Path(__file__).parent / "golden"

ABC = Alphabet(3, ("a", "b", "c"))
CHAIN = Tmc(ABC, frozenset({(0, 0), (0, 1), (1, 2), (2, 0)}))
SCH_CASES = [(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4)]
SCHC_CASES = [(3, cyclic_group(3), (1,)), (2, cyclic_group(4), (1, 3)), (2, symmetric_group(3), (1,))]
SPIDER_CASES = [(3, cyclic_group(2), (0, 1)), (2, cyclic_group(3), (1,))]


def _ambient(spec: Tmc, n: int) -> Digraph:
    return induced_slider(factors(spec, n), spec.alphabet)


def golden_graphs() -> dict[str, Digraph]:
    gm = Tmc.golden_mean()
    out: dict[str, Digraph] = {
        "c00_empty": Digraph((), (), "g"),
        "c00_cycle2": cycle_digraph(2),
        "c01_golden_factors3": _ambient(gm, 3),
        "c02_debruijn_2_3": full_debruijn(2, 3),
        "c02_trans_markov_golden3": trans_markov_slider(gm, 3),
        "c03_periodic_chain3": periodic_slider(CHAIN, 3),
    }
    for n, m in SCH_CASES:
        out[f"c04_sch_{n}_{m}"] = schreier_digraph(n, cyclic_group(m), WalkRightSwitch(tuple(range(m))))
    for n, b, k in SCHC_CASES:
        tag = f"{n}_{b.order}_{'-'.join(map(str, k))}"
        out[f"c05_schc_{tag}"] = schreier_digraph(n, b, WalkRightSwitch(k))
        out[f"c05_cayley_slider_{tag}"] = cayley_slider(b, k, n)
    for n, b, k in SPIDER_CASES:
        tag = f"{n}_{b.order}_{'-'.join(map(str, k))}"
        out[f"c06_lamplighter_{tag}"] = cayley_digraph(n, b, WalkRightSwitch(k))
        out[f"c06_spider_{tag}"] = tensor_product(cycle_digraph(n), cayley_slider(b, k, n))
    for n in range(3, 9):
        out[f"c07_golden_ambient_{n}"] = _ambient(gm, n)
        out[f"c07_kautz3_ambient_{n}"] = _ambient(Tmc.kautz(3), n)
    for n in range(1, 6):
        out[f"c08_debruijn_2_{n}"] = full_debruijn(2, n)
    for n in range(1, 11):
        out[f"c09_collatz_{n}"] = collatz_slider(n)
    for m in range(1, 4):
        for n in range(1, 4):
            out[f"c10_line_debruijn_{m}_{n}"] = line_digraph(full_debruijn(m, n))
    for m in range(2, 5):
        for n in range(1, 6):
            out[f"c10_kautz_{m}_{n}"] = kautz(m, n)
    fib = FiniteWord(Alphabet(2), fibonacci_word(4096))
    for n in range(1, 21):
        out[f"c10_rauzy_fibonacci_{n}"] = factorial_slider(fib, n)
    return out
