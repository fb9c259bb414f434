"""Executable checks of the structural results about slider graphs, plus
de Bruijn sequence generation and counting."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable

from .digraph import Digraph, cycle_digraph, eulerian_cycle, find_iso, tensor_product, verify_iso
from .groups import GroupTable
from .lamplighter import (
    WalkRightSwitch,
    cayley_digraph,
    coset_projection,
    elements,
    schreier_digraph,
)
from .slider import DEFAULT_MAX_ARROWS, cayley_slider, full_debruijn, induced_slider
from .symbolic import (
    Sft,
    Subshift,
    Tmc,
    aperiodic,
    circular_admissible,
    factors,
    irreducible,
    primitivity_exponent,
    sft_to_tmc,
)
from .words import Word


@dataclass
class Report:
    theorem: str
    params: dict
    passed: bool
    counts: dict = field(default_factory=dict)
    witness: str = ""

    def to_text(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        counts = " ".join(f"{k}={v}" for k, v in self.counts.items())
        lines = [
            f"theorem: {self.theorem}",
            f"params: {params}",
            f"counts: {counts}",
            f"result: {'PASS' if self.passed else 'FAIL'}",
            f"witness: {self.witness}",
        ]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"


def _labels(b: GroupTable, k: Iterable[int]) -> str:
    return ",".join(b.labels[x] for x in k)


def _identity_check(name: str, params: dict, g1: Digraph, g2: Digraph) -> Report:
    check = verify_iso(g1, g2, {v: v for v in g1.vertices})
    counts = {
        "vertices": f"{g1.num_vertices}/{g2.num_vertices}",
        "arrows": f"{g1.num_arrows}/{g2.num_arrows}",
    }
    return Report(name, params, check.ok, counts, f"identity map on words: {check.reason}")


def verify_thm_sch(n: int, b: GroupTable) -> Report:
    """Schreier digraph of the walk-right-switch generators on B^n vs the full de Bruijn graph."""
    k = tuple(range(b.order))
    sch = schreier_digraph(n, b, WalkRightSwitch(k))
    dbg = full_debruijn(b.order, n, b.alphabet)
    return _identity_check("sch", {"n": n, "B": b.order}, sch, dbg)


def verify_thm_schC(n: int, b: GroupTable, k: Iterable[int]) -> Report:
    """Schreier digraph of walk-right-switch generators over K vs the Cayley slider graph."""
    k = tuple(sorted(set(k)))
    sch = schreier_digraph(n, b, WalkRightSwitch(k))
    cs = cayley_slider(b, k, n)
    return _identity_check("schC", {"n": n, "B": b.order, "K": _labels(b, k)}, sch, cs)


def spider_map(n: int, b: GroupTable) -> dict[str, str]:
    """``(a, phi) -> (a, coset_projection(a, phi))`` on vertex keys."""
    fmt = b.alphabet.format
    return {g.key(b): f"({g.a},{fmt(coset_projection(g))})" for g in elements(n, b)}


def verify_thm_spider(n: int, b: GroupTable, k: Iterable[int]) -> Report:
    """Cayley digraph of ``Z_n wr B`` vs the cycle tensored with the Cayley slider graph."""
    k = tuple(sorted(set(k)))
    cay = cayley_digraph(n, b, WalkRightSwitch(k))
    spider = tensor_product(cycle_digraph(n), cayley_slider(b, k, n))
    check = verify_iso(cay, spider, spider_map(n, b))
    params = {"n": n, "B": b.order, "K": _labels(b, k)}
    counts = {
        "vertices": f"{cay.num_vertices}/{spider.num_vertices}",
        "arrows": f"{cay.num_arrows}/{spider.num_arrows}",
    }
    if check.ok:
        return Report("spider", params, True, counts, f"explicit map (a,phi)->(a,proj): {check.reason}")
    witness = f"explicit map failed: {check.reason}"
    try:
        found = find_iso(cay, spider)
    except ValueError as exc:
        witness += f"; search skipped: {exc}"
    else:
        if found is None:
            witness += "; search: no isomorphism exists"
        else:
            witness += "; search found an isomorphism (convention bug in the explicit map)"
    return Report("spider", params, False, counts, witness)


@dataclass(frozen=True)
class StepResult:
    d_min: int | None
    bound: int | None
    mode: str
    n: int
    ambient_vertices: int
    periodic_vertices: int
    cutoff: int

    def to_text(self) -> str:
        return (
            f"mode: {self.mode}\nn: {self.n}\n"
            f"ambient_vertices: {self.ambient_vertices}\nperiodic_vertices: {self.periodic_vertices}\n"
            f"d_min: {self.d_min if self.d_min is not None else 'none'}\n"
            f"bound: {self.bound if self.bound is not None else 'none'}\n"
        )


def connect_bound(spec: Subshift) -> int | None:
    """``2*kappa + 2`` for a primitive Markov chain (an SFT is recoded first); otherwise ``None``."""
    if isinstance(spec, Sft):
        spec = sft_to_tmc(spec).tmc
    if isinstance(spec, Tmc) and irreducible(spec) and aperiodic(spec):
        return 2 * primitivity_exponent(spec) + 2
    return None


def _components_connected(n_x: int, arrows: set[tuple[int, int]], mode: str) -> bool:
    if n_x <= 1:
        return True
    out: list[list[int]] = [[] for _ in range(n_x)]
    inn: list[list[int]] = [[] for _ in range(n_x)]
    for u, v in arrows:
        out[u].append(v)
        inn[v].append(u)

    def reach(adj_lists) -> set[int]:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for adj in adj_lists:
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return seen

    if mode == "weak":
        return len(reach([out, inn])) == n_x
    return len(reach([out])) == n_x and len(reach([inn])) == n_x


def minimal_connecting_step(spec: Subshift, n: int, mode: str = "weak", cutoff: int | None = None) -> StepResult:
    """Least d such that the circularly admissible words are step-d connected in the slider graph on all factors."""
    if mode not in ("weak", "strong"):
        raise ValueError("mode must be 'weak' or 'strong'")
    x_words = circular_admissible(spec, n)
    if not x_words:
        raise ValueError(f"no circularly admissible words of length {n}")
    ambient = induced_slider(factors(spec, n), spec.alphabet)
    fmt = spec.alphabet.format
    xs = sorted(ambient.index[fmt(w)] for w in x_words)
    pos = {v: i for i, v in enumerate(xs)}
    if cutoff is None:
        cutoff = ambient.num_vertices
    adj = ambient.out_adj

    # per source: current level (walks of length exactly d) and x-vertices reached so far
    levels = [{v} for v in xs]
    arrows: set[tuple[int, int]] = set()
    d_min = None
    for d in range(1, cutoff + 1):
        for i, lev in enumerate(levels):
            lev = {w for u in lev for w in adj[u]}
            levels[i] = lev
            arrows.update((i, pos[w]) for w in lev if w in pos)
        if _components_connected(len(xs), arrows, mode):
            d_min = d
            break
    return StepResult(d_min, connect_bound(spec), mode, n, ambient.num_vertices, len(xs), cutoff)


MAX_SEQUENCE_LENGTH = DEFAULT_MAX_ARROWS


def debruijn_sequence(m: int, n: int) -> Word:
    """Cyclic word of length ``m**n`` containing every word of length ``n`` exactly once.

    Read off the labels of the lexicographically least Eulerian circuit of
    the de Bruijn graph of span ``n - 1``.
    """
    if m < 2 or n < 1:
        raise ValueError("need m >= 2 and n >= 1")
    if m ** n > MAX_SEQUENCE_LENGTH:
        raise ValueError(f"sequence length {m ** n} above the cap {MAX_SEQUENCE_LENGTH}")
    if n == 1:
        return tuple(range(m))
    g = full_debruijn(m, n - 1)
    circuit = eulerian_cycle(g)
    assert circuit is not None and len(circuit) == m ** n
    return tuple(int(lab) for _, _, lab in circuit)


MAX_COUNT_LENGTH = 16


def count_debruijn_sequences(m: int, n: int) -> int:
    """Number of de Bruijn sequences up to rotation, by exhaustive backtracking.

    Each rotation class has exactly one member that starts with ``0**n``;
    the search enumerates those members letter by letter.
    """
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    length = m ** n
    if length > MAX_COUNT_LENGTH:
        raise ValueError(
            f"exhaustive count limited to m**n <= {MAX_COUNT_LENGTH}; "
            "use the BEST-theorem formula from the literature for larger cases"
        )
    if n == 1:
        # one class per cyclic arrangement of m distinct letters
        from math import factorial

        return factorial(m - 1)

    seen: set[Word] = {(0,) * n}
    seq: list[int] = [0] * n
    count = 0

    def closes() -> bool:
        wrap = seq[-(n - 1):] + seq[: n - 1]
        windows = {tuple(wrap[i:i + n]) for i in range(n - 1)}
        return len(windows) == n - 1 and not windows & seen

    def extend():
        nonlocal count
        if len(seq) == length:
            if closes():
                count += 1
            return
        for c in range(m):
            win = tuple(seq[len(seq) - n + 1:]) + (c,)
            if win in seen:
                continue
            seen.add(win)
            seq.append(c)
            extend()
            seq.pop()
            seen.discard(win)

    extend()
    return count
