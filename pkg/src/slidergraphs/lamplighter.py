"""Circular lamplighter groups ``Z_n wr B`` and their Cayley and Schreier digraphs.

An element ``(a, phi)`` has lamplighter position ``a`` in ``Z_n`` and lamp
configuration ``phi``, a word of length ``n`` over the elements of ``B``
(``phi[x]`` is the lamp at position ``x``).  Multiplication is

    (a1, phi1) * (a2, phi2) = (a1 + a2, phi1 * T^a1 phi2),   (T^a phi)(x) = phi(x - a).

The subgroup ``{(a, e...e)}`` is identified with ``Z_n``; its right cosets
are identified with words of length ``n`` by reading the lamps clockwise
from the position just after the lamplighter (``coset_projection``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .digraph import Digraph
from .groups import GroupTable
from .slider import DEFAULT_MAX_ARROWS
from .words import Word


@dataclass(frozen=True, order=True)
class LamplighterElement:
    a: int
    phi: Word

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(self.phi))
        n = len(self.phi)
        if n < 1:
            raise ValueError("lamp configuration must be nonempty")
        if not 0 <= self.a < n:
            raise ValueError(f"lamplighter position {self.a} outside Z_{n}")

    @property
    def n(self) -> int:
        return len(self.phi)

    def key(self, b: GroupTable) -> str:
        return f"{self.a}|{b.alphabet.format(self.phi)}"


@dataclass(frozen=True)
class Standard:
    """Walk generators ``(+-1, e)`` and switch generators ``(0, delta_0^b)``."""

    k: tuple[int, ...]


@dataclass(frozen=True)
class WalkRightSwitch:
    """``(1, delta_1^b)``: step right, then multiply the lamp arrived at by ``b``."""

    k: tuple[int, ...]


@dataclass(frozen=True)
class SwitchWalkLeft:
    """``(-1, delta_0^b)``: multiply the current lamp by ``b``, then step left."""

    k: tuple[int, ...]


GeneratorFamily = Union[Standard, WalkRightSwitch, SwitchWalkLeft]

FAMILIES = {"standard": Standard, "wrs": WalkRightSwitch, "swl": SwitchWalkLeft}


def _check(n: int, b: GroupTable, g: LamplighterElement) -> None:
    if g.n != n:
        raise ValueError(f"element {g} does not belong to Z_{n} wr B")
    for x in g.phi:
        if not 0 <= x < b.order:
            raise ValueError(f"lamp state {x} is not an element of B")


def identity(n: int, b: GroupTable) -> LamplighterElement:
    return LamplighterElement(0, (b.identity,) * n)


def delta(n: int, b: GroupTable, pos: int, value: int) -> Word:
    """Configuration equal to ``value`` at ``pos`` and to the identity elsewhere."""
    phi = [b.identity] * n
    phi[pos % n] = value
    return tuple(phi)


def wreath_multiply(n: int, b: GroupTable, g1: LamplighterElement, g2: LamplighterElement) -> LamplighterElement:
    _check(n, b, g1)
    _check(n, b, g2)
    a1 = g1.a
    mult = b.mult
    phi = tuple(mult[g1.phi[x]][g2.phi[(x - a1) % n]] for x in range(n))
    return LamplighterElement((a1 + g2.a) % n, phi)


def wreath_inverse(n: int, b: GroupTable, g: LamplighterElement) -> LamplighterElement:
    """``(a, phi)^-1 = (-a, T^-a phi^-1)``."""
    _check(n, b, g)
    a = g.a
    phi = tuple(b.inverse[g.phi[(x + a) % n]] for x in range(n))
    return LamplighterElement((-a) % n, phi)


def elements(n: int, b: GroupTable) -> Iterator[LamplighterElement]:
    for a in range(n):
        for phi in itertools.product(range(b.order), repeat=n):
            yield LamplighterElement(a, phi)


def generator_elements(n: int, b: GroupTable, fam: GeneratorFamily) -> list[LamplighterElement]:
    """Distinct generators of the family, in a fixed order."""
    k = tuple(fam.k)
    if not k:
        raise ValueError("generator subset K must be nonempty")
    for x in k:
        if not 0 <= x < b.order:
            raise ValueError(f"{x} is not an element of B")
    empty = (b.identity,) * n
    if isinstance(fam, Standard):
        gens = [LamplighterElement(1 % n, empty), LamplighterElement((-1) % n, empty)]
        gens += [LamplighterElement(0, delta(n, b, 0, x)) for x in k]
    elif isinstance(fam, WalkRightSwitch):
        gens = [LamplighterElement(1 % n, delta(n, b, 1, x)) for x in k]
    elif isinstance(fam, SwitchWalkLeft):
        gens = [LamplighterElement((-1) % n, delta(n, b, 0, x)) for x in k]
    else:
        raise TypeError(f"unknown generator family {fam!r}")
    seen = set()
    out = []
    for g in gens:
        if g not in seen:
            seen.add(g)
            out.append(g)
    return out


def cayley_digraph(n: int, b: GroupTable, fam: GeneratorFamily, cap: int = DEFAULT_MAX_ARROWS) -> Digraph:
    """Cayley digraph ``g -> g*s`` on every element of ``Z_n wr B`` (not just the span of the generators)."""
    gens = generator_elements(n, b, fam)
    size = n * b.order ** n
    if size * len(gens) > cap:
        raise ValueError(f"Cayley digraph would have {size * len(gens)} arrows, above the cap of {cap}")
    labels = [s.key(b) for s in gens]
    elems = list(elements(n, b))
    arrows = (
        (g.key(b), wreath_multiply(n, b, g, s).key(b), lab)
        for g in elems
        for s, lab in zip(gens, labels)
    )
    return Digraph.from_keys((g.key(b) for g in elems), arrows, f"Cay_{n}")


def coset_projection(g: LamplighterElement) -> Word:
    """The word ``phi(a+1), phi(a+2), ..., phi(a+n)`` (positions mod n)."""
    n, a = g.n, g.a
    return tuple(g.phi[(a + 1 + i) % n] for i in range(n))


def coset_lift(w: Sequence[int]) -> LamplighterElement:
    """A coset representative ``(0, phi)`` with ``coset_projection`` equal to ``w``."""
    n = len(w)
    return LamplighterElement(0, tuple(w[(x - 1) % n] for x in range(n)))


def schreier_action(w: Sequence[int], g: LamplighterElement, b: GroupTable) -> Word:
    """Right action of ``g = (a, phi)`` on the coset word ``w``.

    ``w`` is placed on the circle with ``w[i]`` at position ``i + 1``,
    multiplied pointwise by ``phi``, then read from position ``a + 1``.
    """
    n = len(w)
    if n != g.n:
        raise ValueError(f"word length {n} does not match Z_{g.n}")
    a, phi, mult = g.a, g.phi, b.mult
    return tuple(mult[w[(a + i) % n]][phi[(a + 1 + i) % n]] for i in range(n))


def schreier_digraph(n: int, b: GroupTable, fam: GeneratorFamily, cap: int = DEFAULT_MAX_ARROWS) -> Digraph:
    """Orbit digraph ``w -> w.s`` of the coset action on all words of length ``n`` over ``B``."""
    gens = generator_elements(n, b, fam)
    if b.order ** n * len(gens) > cap:
        raise ValueError("Schreier digraph above the size cap")
    fmt = b.alphabet.format
    labels = [s.key(b) for s in gens]
    words = list(itertools.product(range(b.order), repeat=n))
    arrows = ((fmt(w), fmt(schreier_action(w, s, b)), lab) for w in words for s, lab in zip(gens, labels))
    return Digraph.from_keys((fmt(w) for w in words), arrows, f"Sch_{n}")
