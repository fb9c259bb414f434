"""Factor languages of finite words and subshifts.

Five kinds of language source are supported:

* :class:`FiniteWord` - the factors of a single finite word,
* :class:`Tmc` - a topological Markov chain given by admissible letter pairs,
* :class:`Sft` - a subshift of finite type given by forbidden words,
* :class:`Sofic` - a sofic subshift given by a labelled presentation graph,
* :class:`Explicit` - a caller-supplied set of words of one length.

``factors(spec, n)`` lists the length-``n`` words of the language and
``circular_admissible(spec, n)`` the length-``n`` words whose periodic
repetition lies in the subshift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence, Union

import numpy as np

from .words import Alphabet, Word


@dataclass(frozen=True)
class FiniteWord:
    alphabet: Alphabet
    word: Word

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if not self.word:
            raise ValueError("finite word must be nonempty")
        self.alphabet.check(self.word)


@dataclass(frozen=True)
class Tmc:
    """Topological Markov chain: the letter pair ``(a, b)`` may occur iff it is admissible."""

    alphabet: Alphabet
    admissible: frozenset[tuple[int, int]]

    def __post_init__(self):
        pairs = frozenset((int(a), int(b)) for a, b in self.admissible)
        object.__setattr__(self, "admissible", pairs)
        for pair in pairs:
            self.alphabet.check(pair)

    @classmethod
    def full(cls, m: int) -> Tmc:
        return cls(Alphabet(m), frozenset((a, b) for a in range(m) for b in range(m)))

    @classmethod
    def kautz(cls, m: int) -> Tmc:
        """No letter may follow itself."""
        return cls(Alphabet(m), frozenset((a, b) for a in range(m) for b in range(m) if a != b))

    @classmethod
    def golden_mean(cls) -> Tmc:
        return cls(Alphabet(2), frozenset({(0, 0), (0, 1), (1, 0)}))

    def matrix(self) -> np.ndarray:
        m = self.alphabet.size
        mat = np.zeros((m, m), dtype=bool)
        for a, b in self.admissible:
            mat[a, b] = True
        return mat

    def successors(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in range(self.alphabet.size)]
        for a, b in sorted(self.admissible):
            succ[a].append(b)
        return succ


@dataclass(frozen=True)
class Sft:
    """Subshift of finite type: bi-infinite words avoiding every forbidden word."""

    alphabet: Alphabet
    forbidden: frozenset[Word]

    def __post_init__(self):
        words = frozenset(tuple(w) for w in self.forbidden)
        object.__setattr__(self, "forbidden", words)
        if not words:
            raise ValueError("an SFT needs at least one forbidden word")
        for w in words:
            if len(w) < 2:
                raise ValueError("forbidden words must have length >= 2 (drop letters from the alphabet instead)")
            self.alphabet.check(w)

    @property
    def max_forbidden(self) -> int:
        return max(len(w) for w in self.forbidden)


@dataclass(frozen=True)
class Sofic:
    """Sofic subshift presented by a labelled graph on ``states`` states.

    ``edges`` are ``(from_state, to_state, symbol)`` triples.  Every state
    needs an incoming and an outgoing edge.
    """

    alphabet: Alphabet
    states: int
    edges: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        edges = frozenset((int(p), int(q), int(s)) for p, q, s in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.states < 1:
            raise ValueError("a presentation needs at least one state")
        for p, q, s in edges:
            if not (0 <= p < self.states and 0 <= q < self.states):
                raise ValueError(f"edge {(p, q, s)} refers to a missing state")
            self.alphabet.check((s,))
        outs = {p for p, _, _ in edges}
        ins = {q for _, q, _ in edges}
        for st in range(self.states):
            if st not in outs or st not in ins:
                raise ValueError(f"state {st} is a source or sink in the presentation")

    def symbol_relations(self) -> list[np.ndarray]:
        rel = [np.zeros((self.states, self.states), dtype=bool) for _ in range(self.alphabet.size)]
        for p, q, s in self.edges:
            rel[s][p, q] = True
        return rel


@dataclass(frozen=True)
class Explicit:
    alphabet: Alphabet
    words: frozenset[Word]

    def __post_init__(self):
        words = frozenset(tuple(w) for w in self.words)
        object.__setattr__(self, "words", words)
        lengths = {len(w) for w in words}
        if len(lengths) > 1:
            raise ValueError(f"explicit words must share one length, got lengths {sorted(lengths)}")
        for w in words:
            self.alphabet.check(w)

    @property
    def length(self) -> int | None:
        return len(next(iter(self.words))) if self.words else None


LanguageSpec = Union[FiniteWord, Tmc, Sft, Sofic, Explicit]
Subshift = Union[Tmc, Sft, Sofic]


def _extend(n: int, m: int, ok: Callable[[Word], bool]) -> set[Word]:
    """Words of length n built letter by letter, keeping prefixes accepted by ``ok``."""
    level: list[Word] = [()]
    for _ in range(n):
        level = [w + (b,) for w in level for b in range(m) if ok(w + (b,))]
    return set(level)


def _sofic_factors(spec: Sofic, n: int) -> dict[Word, frozenset[int]]:
    """Map each length-n path label to its set of end states."""
    out: dict[int, list[tuple[int, int]]] = {}
    for p, q, s in sorted(spec.edges):
        out.setdefault(p, []).append((q, s))
    level: dict[Word, frozenset[int]] = {(): frozenset(range(spec.states))}
    for _ in range(n):
        nxt: dict[Word, set[int]] = {}
        for w, ends in level.items():
            for p in ends:
                for q, s in out.get(p, ()):
                    nxt.setdefault(w + (s,), set()).add(q)
        level = {w: frozenset(e) for w, e in nxt.items()}
    return level


def factors(spec: LanguageSpec, n: int) -> set[Word]:
    """The length-``n`` words of the language."""
    if n < 1:
        raise ValueError("factor length must be positive")
    if isinstance(spec, FiniteWord):
        w = spec.word
        if n > len(w):
            raise ValueError(f"factor length {n} exceeds the word length {len(w)}")
        return {w[i:i + n] for i in range(len(w) - n + 1)}
    if isinstance(spec, Tmc):
        adm = spec.admissible
        return _extend(n, spec.alphabet.size, lambda w: len(w) < 2 or (w[-2], w[-1]) in adm)
    if isinstance(spec, Sft):
        forb = spec.forbidden
        lengths = sorted({len(f) for f in forb})
        return _extend(
            n,
            spec.alphabet.size,
            lambda w: not any(len(w) >= k and w[-k:] in forb for k in lengths),
        )
    if isinstance(spec, Sofic):
        return set(_sofic_factors(spec, n))
    if isinstance(spec, Explicit):
        if spec.length is not None and spec.length != n:
            raise ValueError(f"explicit language has words of length {spec.length}, not {n}")
        return set(spec.words)
    raise TypeError(f"unsupported language spec {type(spec).__name__}")


def _has_cycle(rel: np.ndarray) -> bool:
    """True iff some state reaches itself in one or more steps of ``rel``."""
    k = rel.shape[0]
    reach = rel.copy()
    # transitive closure by repeated squaring
    for _ in range(max(1, math.ceil(math.log2(k)) + 1)):
        nxt = reach | ((reach.astype(np.uint8) @ reach.astype(np.uint8)) > 0)
        if np.array_equal(nxt, reach):
            break
        reach = nxt
    return bool(reach.diagonal().any())


def circular_admissible(spec: Subshift, n: int) -> set[Word]:
    """Length-``n`` words whose bi-infinite periodic repetition lies in the subshift."""
    if n < 1:
        raise ValueError("word length must be positive")
    if isinstance(spec, Tmc):
        adm = spec.admissible
        return {w for w in factors(spec, n) if (w[-1], w[0]) in adm}
    if isinstance(spec, Sft):
        if spec.max_forbidden > n:
            raise ValueError(
                f"span shorter than longest forbidden word ({n} < {spec.max_forbidden})"
            )
        forb = spec.forbidden
        lengths = sorted({len(f) for f in forb})

        def cyclic_ok(w: Word) -> bool:
            ww = w + w
            return not any(ww[i:i + k] in forb for k in lengths for i in range(n))

        return {w for w in factors(spec, n) if cyclic_ok(w)}
    if isinstance(spec, Sofic):
        rel = spec.symbol_relations()
        result = set()
        for w in factors(spec, n):
            m = rel[w[0]].astype(np.uint8)
            for s in w[1:]:
                m = ((m @ rel[s].astype(np.uint8)) > 0).astype(np.uint8)
            if _has_cycle(m > 0):
                result.add(w)
        return result
    raise TypeError(f"circular admissibility needs a Tmc, Sft or Sofic spec, not {type(spec).__name__}")


def _transition_graph(spec: Tmc) -> list[list[int]]:
    return spec.successors()


def _reachable(succ: Sequence[Sequence[int]], start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def irreducible(spec: Tmc) -> bool:
    """The letter transition graph is strongly connected."""
    succ = _transition_graph(spec)
    m = spec.alphabet.size
    pred: list[list[int]] = [[] for _ in range(m)]
    for a, bs in enumerate(succ):
        for b in bs:
            pred[b].append(a)
    return len(_reachable(succ, 0)) == m and len(_reachable(pred, 0)) == m


def period(spec: Tmc) -> int:
    """gcd of cycle lengths of an irreducible chain (0 when there are no arrows)."""
    succ = _transition_graph(spec)
    level = {0: 0}
    queue = [0]
    for v in queue:
        for w in succ[v]:
            if w not in level:
                level[w] = level[v] + 1
                queue.append(w)
    g = 0
    for v in level:
        for w in succ[v]:
            g = math.gcd(g, level[v] + 1 - level[w])
    return g


def aperiodic(spec: Tmc) -> bool:
    """Irreducible with gcd of cycle lengths equal to 1."""
    return irreducible(spec) and period(spec) == 1


def primitivity_exponent(spec: Tmc) -> int:
    """Least k >= 1 with every entry of the k-th boolean power of the admissibility matrix positive."""
    if not irreducible(spec):
        raise ValueError("primitivity exponent undefined: the chain is not irreducible")
    if not aperiodic(spec):
        raise ValueError(f"primitivity exponent undefined: the chain has period {period(spec)}")
    m = spec.alphabet.size
    a = spec.matrix().astype(np.int64)
    power = a.copy()
    wielandt = m * m - 2 * m + 2
    for k in range(1, wielandt + 1):
        if power.all():
            return k
        power = ((power @ a) > 0).astype(np.int64)
    raise RuntimeError("boolean powers did not become positive within the Wielandt bound")


@dataclass(frozen=True)
class HigherBlockCode:
    """Recoding of an SFT as a Markov chain on its allowed (N-1)-blocks.

    A word of length ``n >= N-1`` over the original alphabet corresponds to
    the word of its ``n - N + 2`` overlapping (N-1)-blocks.
    """

    sft: Sft
    tmc: Tmc
    blocks: tuple[Word, ...]
    block_length: int
    _index: Mapping[Word, int] = field(repr=False, compare=False, default_factory=dict)

    def encode(self, word: Sequence[int]) -> Word:
        k = self.block_length
        word = tuple(word)
        if len(word) < k:
            raise ValueError(f"word shorter than the block length {k}")
        try:
            return tuple(self._index[word[i:i + k]] for i in range(len(word) - k + 1))
        except KeyError as exc:
            raise ValueError(f"block {exc.args[0]} is not allowed in the subshift") from None

    def decode(self, coded: Sequence[int]) -> Word:
        if not coded:
            raise ValueError("cannot decode an empty block word")
        blocks = [self.blocks[c] for c in coded]
        for u, v in zip(blocks, blocks[1:]):
            if u[1:] != v[:-1]:
                raise ValueError(f"blocks {u} and {v} do not overlap")
        return blocks[0] + tuple(b[-1] for b in blocks[1:])

    def coded_length(self, n: int) -> int:
        return n - self.block_length + 1


def sft_to_tmc(spec: Sft) -> HigherBlockCode:
    """Higher-block presentation of an SFT with longest forbidden word length N."""
    big_n = spec.max_forbidden
    k = big_n - 1
    blocks = tuple(sorted(factors(spec, k)))
    if not blocks:
        raise ValueError("subshift empty")
    index = {b: i for i, b in enumerate(blocks)}
    allowed_n = factors(spec, big_n)
    pairs = set()
    for u in blocks:
        for v in blocks:
            if u[1:] == v[:-1] and u + v[-1:] in allowed_n:
                pairs.add((index[u], index[v]))
    alphabet = Alphabet(len(blocks), tuple(spec.alphabet.format(b) for b in blocks))
    return HigherBlockCode(spec, Tmc(alphabet, frozenset(pairs)), blocks, k, index)


def substitution_fixed_point(rules: Mapping[int, Sequence[int]], seed: int, length: int) -> Word:
    """Prefix of the fixed point of a substitution prolongable on ``seed``."""
    if length < 1:
        raise ValueError("length must be positive")
    image = tuple(rules[seed])
    if len(image) < 2 or image[0] != seed:
        raise ValueError(f"substitution is not prolongable on {seed}: {seed} -> {image}")
    word: Word = (seed,)
    while len(word) < length:
        word = tuple(s for c in word for s in rules[c])
    return word[:length]


def fibonacci_word(length: int) -> Word:
    return substitution_fixed_point({0: (0, 1), 1: (0,)}, 0, length)
