"""Alphabets, words, the cyclic shift and de Bruijn transitions.

Words are plain tuples of symbol indices.  A word ``w`` of length ``n`` is
read linearly as ``w[0] w[1] ... w[n-1]``; the circular reading places the
slider between positions ``n-1`` and ``0``.  A de Bruijn transition drops
``w[0]`` and appends a new letter::

    w[0] w[1] ... w[n-1]  ~>  w[1] ... w[n-1] b
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

Word = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """A finite alphabet of ``size`` symbols ``0..size-1`` with display labels."""

    size: int
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.size}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.size)))
        else:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        if len(self.labels) != self.size:
            raise ValueError(f"expected {self.size} labels, got {len(self.labels)}")
        if len(set(self.labels)) != self.size:
            raise ValueError(f"alphabet labels are not distinct: {self.labels}")
        for lab in self.labels:
            if not lab or any(c in lab for c in ' \t\n.,"'):
                raise ValueError(f"invalid alphabet label {lab!r}")

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> Alphabet:
        labels = tuple(labels)
        return cls(len(labels), labels)

    @property
    def single_char(self) -> bool:
        return all(len(lab) == 1 for lab in self.labels)

    def index(self, label: str) -> int:
        try:
            return self._lookup[label]
        except KeyError:
            raise ValueError(f"unknown letter {label!r} (alphabet {self.labels})") from None

    @property
    def _lookup(self) -> dict[str, int]:
        lookup = self.__dict__.get("_lookup_cache")
        if lookup is None:
            lookup = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_lookup_cache", lookup)
        return lookup

    def format(self, word: Sequence[int]) -> str:
        """Text form: labels concatenated if all are single characters, else dot-joined."""
        sep = "" if self.single_char else "."
        return sep.join(self.labels[s] for s in word)

    def parse(self, text: str) -> Word:
        text = text.strip()
        if not text:
            raise ValueError("empty word")
        if self.single_char:
            parts = list(text)
        else:
            parts = text.split(".")
        return tuple(self.index(p) for p in parts)

    def check(self, word: Sequence[int]) -> None:
        for s in word:
            if not 0 <= s < self.size:
                raise ValueError(f"symbol {s} outside alphabet of size {self.size}")


class Arrow(NamedTuple):
    src: Word
    dst: Word
    label: int


def cyclic_shift(w: Sequence[int], k: int = 1) -> Word:
    """Rotate ``w`` anticlockwise by ``k``: ``result[i] = w[(i + k) % n]``."""
    n = len(w)
    if n == 0:
        raise ValueError("cannot shift the empty word")
    k %= n
    return tuple(w[k:]) + tuple(w[:k])


def debruijn_successors(w: Sequence[int], m: int) -> list[Arrow]:
    """All ``m`` de Bruijn transitions out of ``w``, ordered by the appended letter."""
    if not w:
        raise ValueError("de Bruijn successors need a nonempty word")
    src = tuple(w)
    tail = src[1:]
    return [Arrow(src, tail + (b,), b) for b in range(m)]


def is_debruijn_transition(w: Sequence[int], w2: Sequence[int], m: int | None = None) -> bool:
    """True iff ``w2`` agrees with ``cyclic_shift(w, 1)`` except possibly at its last position."""
    if len(w) != len(w2):
        raise ValueError(f"length mismatch: {len(w)} vs {len(w2)}")
    if not w:
        raise ValueError("words must be nonempty")
    if m is not None:
        for s in (*w, *w2):
            if not 0 <= s < m:
                raise ValueError(f"symbol {s} outside alphabet of size {m}")
    return tuple(w[1:]) == tuple(w2[:-1])
