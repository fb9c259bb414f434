"""Circular slider graphs: subgraphs of full de Bruijn graphs.

Every constructor returns a :class:`~slidergraphs.digraph.Digraph` whose
vertex keys are word text forms (see :meth:`Alphabet.format`) and whose
arrows are de Bruijn transitions labelled by the appended letter.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .digraph import Digraph
from .groups import GroupTable
from .symbolic import (
    Explicit,
    FiniteWord,
    LanguageSpec,
    Subshift,
    Tmc,
    circular_admissible,
    factors,
)
from .words import Alphabet, Word

DEFAULT_MAX_ARROWS = 1 << 22


def _check_size(arrows: int, cap: int) -> None:
    if arrows > cap:
        raise ValueError(f"graph would have {arrows} arrows, above the cap of {cap}")


def _build(
    name: str,
    alphabet: Alphabet,
    vertices: Iterable[Word],
    arrows: Iterable[tuple[Word, Word, int]],
) -> Digraph:
    fmt = alphabet.format
    labels = alphabet.labels
    return Digraph.from_keys(
        (fmt(v) for v in vertices),
        ((fmt(s), fmt(d), labels[b]) for s, d, b in arrows),
        name,
    )


def _all_words(m: int, n: int) -> Iterable[Word]:
    return itertools.product(range(m), repeat=n)


def full_debruijn(
    m: int, n: int, alphabet: Alphabet | None = None, cap: int = DEFAULT_MAX_ARROWS
) -> Digraph:
    """The full de Bruijn graph on all ``m**n`` words of length ``n``."""
    if m < 1 or n < 1:
        raise ValueError("alphabet size and span must be positive")
    _check_size(m ** (n + 1), cap)
    alphabet = alphabet or Alphabet(m)
    if alphabet.size != m:
        raise ValueError("alphabet size mismatch")
    words = list(_all_words(m, n))
    arrows = ((w, w[1:] + (b,), b) for w in words for b in range(m))
    return _build(f"B_{m}^{n}", alphabet, words, arrows)


def kautz(m: int, n: int) -> Digraph:
    """Kautz graph: words of length ``n`` with no letter repeated consecutively."""
    return factorial_slider(Tmc.kautz(m), n).renamed(f"K_{m}^{n}")


def _factors_or_empty(spec: LanguageSpec, n: int) -> set[Word]:
    if isinstance(spec, FiniteWord) and n > len(spec.word):
        return set()
    if isinstance(spec, Explicit) and spec.length != n:
        return set()
    return factors(spec, n)


def factorial_slider(spec: LanguageSpec, n: int, name: str | None = None) -> Digraph:
    """Graph with one arrow prefix -> suffix for every factor of length ``n + 1``.

    The vertices are the factors of length ``n`` together with the
    prefixes and suffixes of the ``n + 1`` factors, so a finite word whose
    last factor cannot be extended still gets every vertex.
    """
    if n < 1:
        raise ValueError("span must be positive")
    if isinstance(spec, FiniteWord) and n > len(spec.word):
        raise ValueError(f"span {n} exceeds the word length {len(spec.word)}")
    if isinstance(spec, Explicit) and spec.length not in (n, n + 1):
        raise ValueError(f"explicit language has words of length {spec.length}, not {n} or {n + 1}")
    words_n = _factors_or_empty(spec, n)
    words_n1 = _factors_or_empty(spec, n + 1)
    vertices = set(words_n)
    vertices.update(w[:-1] for w in words_n1)
    vertices.update(w[1:] for w in words_n1)
    if not vertices:
        raise ValueError(f"language has no factors of length {n}")
    arrows = ((w[:-1], w[1:], w[-1]) for w in words_n1)
    return _build(name or f"S^{n}", spec.alphabet, vertices, arrows)


def induced_slider(vertex_set: Iterable[Sequence[int]], alphabet: Alphabet, name: str | None = None) -> Digraph:
    """Induced subgraph of the full de Bruijn graph on ``vertex_set``.

    Successors are tested for membership one by one; the ambient graph is
    never built.
    """
    words = {tuple(w) for w in vertex_set}
    if not words:
        raise ValueError("induced slider graph needs at least one vertex")
    lengths = {len(w) for w in words}
    if len(lengths) != 1:
        raise ValueError(f"vertex words have mixed lengths {sorted(lengths)}")
    (n,) = lengths
    if n < 1:
        raise ValueError("vertex words must be nonempty")
    for w in words:
        alphabet.check(w)
    m = alphabet.size
    arrows = (
        (w, w[1:] + (b,), b)
        for w in words
        for b in range(m)
        if w[1:] + (b,) in words
    )
    return _build(name or f"S[V]^{n}", alphabet, words, arrows)


def periodic_slider(spec: Subshift, n: int) -> Digraph:
    """Induced slider graph on the circularly admissible words of length ``n``."""
    words = circular_admissible(spec, n)
    if not words:
        raise ValueError(f"no circularly admissible words of length {n}")
    return induced_slider(words, spec.alphabet, f"P^{n}")


def trans_markov_slider(
    sigma: Tmc,
    n: int,
    restrict_to: Iterable[Sequence[int]] | None = None,
    cap: int = DEFAULT_MAX_ARROWS,
) -> Digraph:
    """De Bruijn transitions that drop ``a`` and append ``b`` only when ``(a, b)`` is admissible."""
    if n < 1:
        raise ValueError("span must be positive")
    m = sigma.alphabet.size
    if restrict_to is None:
        _check_size(m ** (n + 1), cap)
        words = set(_all_words(m, n))
        name = f"TM^{n}"
    else:
        words = {tuple(w) for w in restrict_to}
        for w in words:
            if len(w) != n:
                raise ValueError(f"restriction word {w} does not have length {n}")
            sigma.alphabet.check(w)
        name = f"TM[V]^{n}"
    succ = sigma.successors()
    arrows = (
        (w, w[1:] + (b,), b)
        for w in words
        for b in succ[w[0]]
        if w[1:] + (b,) in words
    )
    return _build(name, sigma.alphabet, words, arrows)


def cayley_tmc(group: GroupTable, k: Iterable[int]) -> Tmc:
    """The chain g ~> g*h for h in ``k``."""
    k = tuple(k)
    return Tmc(group.alphabet, frozenset((g, group.mul(g, h)) for g in range(group.order) for h in k))


def _validate_subset(group: GroupTable, k: Iterable[int]) -> tuple[int, ...]:
    k = tuple(sorted(set(k)))
    if not k:
        raise ValueError("generator subset must be nonempty")
    for h in k:
        if not 0 <= h < group.order:
            raise ValueError(f"{h} is not an element of the group")
    return k


def cayley_slider(group: GroupTable, k: Iterable[int], n: int, cap: int = DEFAULT_MAX_ARROWS) -> Digraph:
    """Arrows ``(g1, ..., gn) -> (g2, ..., gn, g1*h)`` labelled ``h`` for ``h`` in ``k``."""
    k = _validate_subset(group, k)
    if n < 1:
        raise ValueError("span must be positive")
    _check_size(group.order ** n * len(k), cap)
    alphabet = group.alphabet
    words = list(_all_words(group.order, n))
    fmt, labels = alphabet.format, alphabet.labels
    return Digraph.from_keys(
        (fmt(w) for w in words),
        ((fmt(w), fmt(w[1:] + (group.mul(w[0], h),)), labels[h]) for w in words for h in k),
        f"CayS_{n}",
    )


def schreier_slider(
    points: Alphabet,
    action: Callable[[int, int], int],
    group: GroupTable,
    k: Iterable[int],
    n: int,
    cap: int = DEFAULT_MAX_ARROWS,
) -> Digraph:
    """Arrows ``(x1, ..., xn) -> (x2, ..., xn, x1.h)`` labelled ``h``, for a right action on ``points``."""
    k = _validate_subset(group, k)
    if n < 1:
        raise ValueError("span must be positive")
    _check_size(points.size ** n * len(k), cap)
    words = list(_all_words(points.size, n))
    fmt = points.format
    return Digraph.from_keys(
        (fmt(w) for w in words),
        ((fmt(w), fmt(w[1:] + (action(w[0], h),)), group.labels[h]) for w in words for h in k),
        f"SchS_{n}",
    )


@dataclass(frozen=True)
class PartitionSystem:
    """A map on points ``0..len(image)-1`` with a finite partition.

    ``image[x]`` is the image of point ``x`` and ``cell[x]`` the partition
    element (alphabet symbol) containing it.
    """

    image: tuple[int, ...]
    cell: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        object.__setattr__(self, "cell", tuple(self.cell))
        npts = len(self.image)
        if len(self.cell) != npts:
            raise ValueError("image and cell must cover the same points")
        for y in self.image:
            if not 0 <= y < npts:
                raise ValueError(f"the map sends a point to {y}, outside the point set")
        self.alphabet.check(self.cell)

    def name_codes(self, n: int) -> np.ndarray:
        """Length-``n`` itinerary of every point, encoded base ``m`` (first letter most significant)."""
        m = self.alphabet.size
        if m ** n >= 1 << 62:
            raise ValueError("itinerary names too long to encode")
        image = np.asarray(self.image, dtype=np.int64)
        cell = np.asarray(self.cell, dtype=np.int64)
        codes = np.zeros(len(image), dtype=np.int64)
        pos = np.arange(len(image), dtype=np.int64)
        for _ in range(n):
            codes = codes * m + cell[pos]
            pos = image[pos]
        return codes

    def names(self, n: int) -> set[Word]:
        """Distinct itineraries ``cell(x), cell(Tx), ..., cell(T^(n-1) x)``."""
        m = self.alphabet.size
        out = set()
        for code in np.unique(self.name_codes(n)).tolist():
            digits = []
            for _ in range(n):
                code, r = divmod(code, m)
                digits.append(r)
            out.add(tuple(reversed(digits)))
        return out


def partition_slider(sys: PartitionSystem, n: int) -> Digraph:
    """Slider graph on the length-``n`` itinerary names of the points.

    Each distinct length ``n + 1`` name gives one arrow from its prefix to
    its suffix, labelled by its last letter.
    """
    if n < 1:
        raise ValueError("span must be positive")
    long_names = sys.names(n + 1)
    short_names = {w[:-1] for w in long_names}
    arrows = ((w[:-1], w[1:], w[-1]) for w in long_names)
    return _build(f"Part^{n}", sys.alphabet, short_names, arrows)


MAX_COLLATZ_SPAN = 20


def collatz_system(n: int) -> PartitionSystem:
    """Collatz map on residues mod 2**(n+1) with the even/odd partition."""
    mod = 1 << (n + 1)
    x = np.arange(mod, dtype=np.int64)
    image = np.where(x % 2 == 0, x // 2, (3 * x + 1) // 2) % mod
    return PartitionSystem(tuple(image.tolist()), tuple((x % 2).tolist()), Alphabet(2))


def collatz_slider(n: int) -> Digraph:
    """Slider graph of parity itineraries of the Collatz map; equals the full binary de Bruijn graph."""
    if not 1 <= n <= MAX_COLLATZ_SPAN:
        raise ValueError(f"Collatz span must be between 1 and {MAX_COLLATZ_SPAN}")
    return partition_slider(collatz_system(n), n).renamed(f"Collatz^{n}")
