"""Free-group words and finite presentations.

A word is a tuple of ``(generator index, exponent)`` letters with exponent
``+1`` or ``-1``.  Text form juxtaposes generator symbols with optional
integer exponents, e.g. ``"x^6"``, ``"xyxy"``, ``"x^-1 y"``, ``"(xy)^3"``;
``"1"`` is the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError

Letter = tuple[int, int]
Word = tuple[Letter, ...]


def free_reduce(word: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def inverse_word(word: Sequence[Letter]) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def word_power(word: Sequence[Letter], k: int) -> Word:
    base = tuple(word) if k >= 0 else inverse_word(word)
    return free_reduce(base * abs(k))


def generator_word(g: int, k: int = 1) -> Word:
    e = 1 if k >= 0 else -1
    return ((g, e),) * abs(k)


def exponent_sums(word: Sequence[Letter], rank: int) -> list[int]:
    v = [0] * rank
    for g, e in word:
        v[g] += e
    return v


def evaluate(word: Sequence[Letter], images, identity, inverses=None):
    """Multiply out ``word`` with ``images[g]`` for each letter (left to right)."""
    if inverses is None:
        inverses = [x.inverse() for x in images]
    acc = identity
    for g, e in word:
        acc = acc * (images[g] if e > 0 else inverses[g])
    return acc


def format_word(word: Sequence[Letter], names: Sequence[str]) -> str:
    if not word:
        return "1"
    sep = "*" if any(len(n) > 1 for n in names) else ""
    parts = []
    i = 0
    w = list(word)
    while i < len(w):
        g, e = w[i]
        j = i
        while j < len(w) and w[j] == (g, e):
            j += 1
        k = (j - i) * e
        parts.append(names[g] if k == 1 else f"{names[g]}^{k}")
        i = j
    return sep.join(parts)


def _tokens(text: str, names: Sequence[str]):
    ordered = sorted(names, key=len, reverse=True)
    pos = 0
    out = []
    while pos < len(text):
        ch = text[pos]
        if ch.isspace() or ch == "*":
            pos += 1
            continue
        if ch in "()^":
            out.append(ch)
            pos += 1
            continue
        m = re.match(r"-?\d+", text[pos:])
        if m:
            out.append(int(m.group()))
            pos += m.end()
            continue
        for n in ordered:
            if text.startswith(n, pos):
                out.append(("gen", names.index(n)))
                pos += len(n)
                break
        else:
            raise ParseError(f"unknown symbol at {text[pos:]!r} (generators: {list(names)})")
    return out


def parse_word(text: str, names: Sequence[str]) -> Word:
    toks = _tokens(text, names)
    pos = 0

    def atom():
        nonlocal pos
        if pos >= len(toks):
            raise ParseError(f"unexpected end of word {text!r}")
        t = toks[pos]
        if t == "(":
            pos += 1
            w = seq()
            if pos >= len(toks) or toks[pos] != ")":
                raise ParseError(f"unbalanced parentheses in {text!r}")
            pos += 1
            return w
        if isinstance(t, tuple):
            pos += 1
            return ((t[1], 1),)
        if t == 1:
            pos += 1
            return ()
        raise ParseError(f"unexpected token {t!r} in {text!r}")

    def factor():
        nonlocal pos
        w = atom()
        if pos < len(toks) and toks[pos] == "^":
            pos += 1
            if pos >= len(toks) or not isinstance(toks[pos], int):
                raise ParseError(f"missing exponent in {text!r}")
            k = toks[pos]
            pos += 1
            w = word_power(w, k)
        return w

    def seq():
        w: list[Letter] = []
        while pos < len(toks) and toks[pos] != ")":
            w.extend(factor())
        return tuple(w)

    w = seq()
    if pos != len(toks):
        raise ParseError(f"trailing input in word {text!r}")
    return free_reduce(w)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        for r in self.relators:
            for g, e in r:
                if not 0 <= g < n or e not in (1, -1):
                    raise ValueError(f"relator {r} uses undeclared generator")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [format_word(r, self.generators) for r in self.relators],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        try:
            gens = tuple(str(g) for g in data["generators"])
            rels = data.get("relators", [])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad presentation: {exc}") from None
        if len(set(gens)) != len(gens):
            raise ParseError("duplicate generator symbols")
        return cls(gens, tuple(parse_word(r, gens) for r in rels))
