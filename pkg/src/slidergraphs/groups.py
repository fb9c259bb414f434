"""Finite groups given by multiplication tables."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .words import Alphabet

EXHAUSTIVE_ASSOCIATIVITY_ORDER = 64
_ASSOCIATIVITY_SAMPLES = 20000


@dataclass(frozen=True)
class GroupTable:
    """Group on elements ``0..order-1`` with ``mult[x][y] = x*y``.

    Identity and inverses are derived from the table; construction fails if
    the table is not a group.
    """

    mult: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()
    identity: int = field(init=False)
    inverse: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        mult = tuple(tuple(int(v) for v in row) for row in self.mult)
        object.__setattr__(self, "mult", mult)
        n = len(mult)
        if n < 1:
            raise ValueError("a group needs at least one element")
        for row in mult:
            if len(row) != n:
                raise ValueError("multiplication table must be square")
            if sorted(row) != list(range(n)):
                raise ValueError("multiplication table rows must be permutations of the elements")
        object.__setattr__(self, "labels", self.alphabet.labels)

        ids = [e for e in range(n) if all(mult[e][x] == x and mult[x][e] == x for x in range(n))]
        if not ids:
            raise ValueError("multiplication table has no identity")
        e = ids[0]
        object.__setattr__(self, "identity", e)
        inv = []
        for x in range(n):
            y = mult[x].index(e)
            if mult[y][x] != e:
                raise ValueError(f"element {x} has no two-sided inverse")
            inv.append(y)
        object.__setattr__(self, "inverse", tuple(inv))
        self._check_associative()

    def _check_associative(self):
        n, m = self.order, self.mult
        if n <= EXHAUSTIVE_ASSOCIATIVITY_ORDER:
            triples: Iterable = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(_ASSOCIATIVITY_SAMPLES))
        for x, y, z in triples:
            if m[m[x][y]][z] != m[x][m[y][z]]:
                raise ValueError(f"multiplication is not associative at ({x}, {y}, {z})")

    @property
    def order(self) -> int:
        return len(self.mult)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.order, self.labels)

    def mul(self, x: int, y: int) -> int:
        return self.mult[x][y]

    def element(self, label: str) -> int:
        return self.alphabet.index(label)

    def is_abelian(self) -> bool:
        return all(self.mult[x][y] == self.mult[y][x] for x in range(self.order) for y in range(x))


def cyclic_group(m: int) -> GroupTable:
    """Z_m with elements labelled ``0..m-1``."""
    if m < 1:
        raise ValueError("cyclic group order must be positive")
    return GroupTable(tuple(tuple((x + y) % m for y in range(m)) for x in range(m)))


def symmetric_group(k: int) -> GroupTable:
    """S_k acting on the right: ``(p*q)(i) = q(p(i))``; elements in lexicographic order."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    mult = tuple(tuple(index[tuple(q[p[i]] for i in range(k))] for q in perms) for p in perms)
    labels = tuple("".join(str(v) for v in p) if k <= 10 else "-".join(str(v) for v in p) for p in perms)
    return GroupTable(mult, labels)


def parse_group(text: str) -> GroupTable:
    """Parse the group file format::

        # comments allowed
        order = 3
        labels = e a b        (optional)
        row = 0 1 2
        row = 1 2 0
        row = 2 0 1

    Row entries are element labels (or indices when no labels are given).
    """
    order = None
    labels: tuple[str, ...] = ()
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "order":
            order = int(value)
        elif key == "labels":
            labels = tuple(value.split())
        elif key == "row":
            rows.append(value.split())
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    if order is None:
        raise ValueError("group file is missing 'order'")
    if len(rows) != order:
        raise ValueError(f"expected {order} rows, found {len(rows)}")
    alphabet = Alphabet(order, labels)
    mult = tuple(tuple(alphabet.index(v) for v in row) for row in rows)
    return GroupTable(mult, alphabet.labels)


def format_group(g: GroupTable) -> str:
    lines = [f"order = {g.order}", "labels = " + " ".join(g.labels)]
    lines += ["row = " + " ".join(g.labels[v] for v in row) for row in g.mult]
    return "\n".join(lines) + "\n"


def load_group(spec: str) -> GroupTable:
    """``zN`` for the cyclic group of order N, otherwise a path to a group file."""
    if spec[:1] in ("z", "Z") and spec[1:].isdigit():
        return cyclic_group(int(spec[1:]))
    return parse_group(Path(spec).read_text())


def parse_subset(g: GroupTable, text: str | Sequence[str]) -> tuple[int, ...]:
    """Element subset from ``all`` or comma separated labels; sorted, duplicates removed."""
    if isinstance(text, str):
        if text.strip() == "all":
            return tuple(range(g.order))
        parts = [p.strip() for p in text.split(",") if p.strip()]
    else:
        parts = list(text)
    if not parts:
        raise ValueError("empty element subset")
    return tuple(sorted({g.element(p) for p in parts}))
