"""Free-product words: the universal input format for group expressions.

A word is a sequence of syllables ``(gen_index, exponent)`` with 0-based
generator indices.  Words are kept freely reduced: no zero exponents and no
two adjacent syllables on the same generator.  The textual form used in
files and reports is ``g1^2*g3^-1`` (1-based indices, ``^1`` may be
omitted); the empty word is written ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import WireFormatError

Syllable = tuple[int, int]

_SYLLABLE_RE = re.compile(r"g([1-9][0-9]*)(?:\^(-?[1-9][0-9]*))?$")


def _reduce(syllables: Iterable[Syllable]) -> tuple[Syllable, ...]:
    out: list[list[int]] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            out[-1][1] += exp
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([gen, exp])
    return tuple((g, e) for g, e in out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word over abstract generators g1, g2, ..."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for gen, exp in self.syllables:
            if not (isinstance(gen, int) and isinstance(exp, int)):
                raise ValueError("syllables must be pairs of integers")
            if gen < 0:
                raise ValueError(f"negative generator index {gen}")
            if exp == 0:
                raise ValueError("zero exponent in word")
            if prev is not None and prev == gen:
                raise ValueError("adjacent syllables share a generator (not reduced)")
            prev = gen

    @classmethod
    def of(cls, *syllables: Syllable) -> "Word":
        """Build a word, freely reducing the given syllables."""
        return cls(_reduce(syllables))

    @classmethod
    def from_syllables(cls, syllables: Iterable[Syllable]) -> "Word":
        return cls(_reduce(syllables))

    @classmethod
    def generator(cls, index: int, exp: int = 1) -> "Word":
        return cls.of((index, exp))

    @property
    def is_empty(self) -> bool:
        return not self.syllables

    def length(self) -> int:
        """Letter count: the sum of absolute exponents."""
        return sum(abs(e) for _, e in self.syllables)

    def max_index(self) -> int:
        """Largest generator index used, or -1 for the empty word."""
        return max((g for g, _ in self.syllables), default=-1)

    def letters(self) -> Iterator[tuple[int, int]]:
        """Yield single letters (gen, +1/-1), left to right."""
        for gen, exp in self.syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, step

    def __mul__(self, other: "Word") -> "Word":
        return Word(_reduce(self.syllables + other.syllables))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, k: int) -> "Word":
        if k == 0:
            return Word()
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def shifted(self, offset: int) -> "Word":
        """Same word with every generator index shifted by ``offset``."""
        return Word(tuple((g + offset, e) for g, e in self.syllables))

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def format_word(word: Word) -> str:
    """Render a word as ``g1^2*g3^-1`` (``^1`` omitted), or ``1`` if empty."""
    if word.is_empty:
        return "1"
    parts = []
    for gen, exp in word.syllables:
        parts.append(f"g{gen + 1}" if exp == 1 else f"g{gen + 1}^{exp}")
    return "*".join(parts)


def parse_word(text: str) -> Word:
    """Parse the ``g<i>^<e>`` syllable grammar; inverse of :func:`format_word`."""
    if text == "1":
        return Word()
    if not text or text != text.strip():
        raise WireFormatError(f"malformed word {text!r}")
    syllables = []
    for chunk in text.split("*"):
        m = _SYLLABLE_RE.fullmatch(chunk)
        if m is None:
            raise WireFormatError(f"malformed syllable {chunk!r} in word {text!r}")
        gen = int(m.group(1)) - 1
        exp = 1 if m.group(2) is None else int(m.group(2))
        syllables.append((gen, exp))
    return Word.from_syllables(syllables)
