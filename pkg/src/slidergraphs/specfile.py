"""Plain-text language spec files.

A spec file is a list of ``key = value`` lines; ``#`` starts a comment.
Words are written in their text form: labels concatenated when every label
is one character, otherwise joined by ``.``.  Examples::

    kind = tmc
    alphabet = 0 1
    admissible = 00 01 10

    kind = sft
    alphabet = 0 1
    forbidden = 111

    kind = sofic
    alphabet = a b
    states = 2
    edges = 0 0 a, 0 1 b, 1 0 a

    kind = word
    alphabet = 0 1
    word = 0100101001001

    kind = explicit
    alphabet = 0 1
    words = 000 001 010

Substitution files (for Rauzy graphs of fixed points) use ``kind =
substitution`` with ``seed = 0`` and ``rules = 0:01 1:0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .symbolic import Explicit, FiniteWord, LanguageSpec, Sft, Sofic, Tmc
from .words import Alphabet, Word

KINDS = ("tmc", "sft", "sofic", "word", "explicit", "substitution")


@dataclass(frozen=True)
class Substitution:
    alphabet: Alphabet
    rules: dict
    seed: int


def _fields(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in out:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def _words(alphabet: Alphabet, value: str) -> list[Word]:
    return [alphabet.parse(tok) for tok in value.split()]


def parse_spec(text: str) -> LanguageSpec | Substitution:
    f = _fields(text)
    kind = f.get("kind")
    if kind not in KINDS:
        raise ValueError(f"spec 'kind' must be one of {', '.join(KINDS)}; got {kind!r}")
    if "alphabet" not in f:
        raise ValueError("spec is missing 'alphabet'")
    alphabet = Alphabet.from_labels(f["alphabet"].split())

    def need(key: str) -> str:
        if key not in f:
            raise ValueError(f"{kind} spec is missing {key!r}")
        return f[key]

    if kind == "tmc":
        pairs = _words(alphabet, f.get("admissible", ""))
        for p in pairs:
            if len(p) != 2:
                raise ValueError(f"admissible entry {alphabet.format(p)!r} is not a letter pair")
        return Tmc(alphabet, frozenset(pairs))
    if kind == "sft":
        return Sft(alphabet, frozenset(_words(alphabet, need("forbidden"))))
    if kind == "sofic":
        edges = []
        for chunk in need("edges").split(","):
            parts = chunk.split()
            if len(parts) != 3:
                raise ValueError(f"sofic edge {chunk.strip()!r} is not 'from to label'")
            edges.append((int(parts[0]), int(parts[1]), alphabet.index(parts[2])))
        return Sofic(alphabet, int(need("states")), frozenset(edges))
    if kind == "word":
        return FiniteWord(alphabet, alphabet.parse(need("word")))
    if kind == "explicit":
        return Explicit(alphabet, frozenset(_words(alphabet, f.get("words", ""))))
    rules = {}
    for tok in need("rules").split():
        lhs, _, rhs = tok.partition(":")
        rules[alphabet.index(lhs)] = alphabet.parse(rhs)
    missing = set(range(alphabet.size)) - set(rules)
    if missing:
        raise ValueError(f"substitution has no rule for {[alphabet.labels[i] for i in sorted(missing)]}")
    return Substitution(alphabet, rules, alphabet.index(need("seed")))


def format_spec(spec: LanguageSpec | Substitution) -> str:
    a = spec.alphabet
    lines = []
    if isinstance(spec, Tmc):
        lines += ["kind = tmc", "alphabet = " + " ".join(a.labels)]
        lines.append("admissible = " + " ".join(sorted(a.format(p) for p in spec.admissible)))
    elif isinstance(spec, Sft):
        lines += ["kind = sft", "alphabet = " + " ".join(a.labels)]
        lines.append("forbidden = " + " ".join(sorted(a.format(w) for w in spec.forbidden)))
    elif isinstance(spec, Sofic):
        lines += ["kind = sofic", "alphabet = " + " ".join(a.labels), f"states = {spec.states}"]
        lines.append("edges = " + ", ".join(f"{p} {q} {a.labels[s]}" for p, q, s in sorted(spec.edges)))
    elif isinstance(spec, FiniteWord):
        lines += ["kind = word", "alphabet = " + " ".join(a.labels), "word = " + a.format(spec.word)]
    elif isinstance(spec, Explicit):
        lines += ["kind = explicit", "alphabet = " + " ".join(a.labels)]
        lines.append("words = " + " ".join(sorted(a.format(w) for w in spec.words)))
    elif isinstance(spec, Substitution):
        lines += ["kind = substitution", "alphabet = " + " ".join(a.labels), f"seed = {a.labels[spec.seed]}"]
        lines.append("rules = " + " ".join(f"{a.labels[k]}:{a.format(v)}" for k, v in sorted(spec.rules.items())))
    else:
        raise TypeError(f"cannot format {type(spec).__name__}")
    return "\n".join(lines) + "\n"


def load_spec(path: str | Path) -> LanguageSpec | Substitution:
    return parse_spec(Path(path).read_text())
