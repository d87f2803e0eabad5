"""Platform-independent group interface and element algebra.

Every platform owns a canonical normal form: two elements are equal exactly
when their normal-form payloads are identical, so ``==`` on elements is the
word problem.  Conjugation follows the right-action convention

    conj(x, y) = y^-1 * x * y

throughout the package, and the commutator is comm(a, b) = a^-1 b^-1 a b.

Groups and elements are immutable; sampling is the only randomized
operation and takes an explicit seed or ``random.Random``, so callers own
all RNG state.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import GroupMismatchError
from .words import Word


class Group(ABC):
    """A group with computable canonical normal forms.

    Subclasses provide payload-level arithmetic; :class:`Element` wraps a
    payload together with its group and supplies the operator sugar.
    """

    kind: str = "abstract"
    name: str | None = None

    @property
    @abstractmethod
    def ngens(self) -> int:
        """Number of designated platform generators (>= 1)."""

    @abstractmethod
    def identity_payload(self) -> Any: ...

    @abstractmethod
    def generator_payload(self, index: int) -> Any: ...

    @abstractmethod
    def mul_payload(self, p: Any, q: Any) -> Any: ...

    @abstractmethod
    def inv_payload(self, p: Any) -> Any: ...

    @abstractmethod
    def payload_to_wire(self, p: Any) -> str:
        """Canonical one-line serialization of a normal form."""

    @abstractmethod
    def payload_from_wire(self, line: str) -> Any: ...

    # -- element-level conveniences -------------------------------------

    def identity(self) -> "Element":
        return Element(self, self.identity_payload())

    def generator(self, index: int) -> "Element":
        if not 0 <= index < self.ngens:
            raise ValueError(f"generator index {index} out of range 0..{self.ngens - 1}")
        return Element(self, self.generator_payload(index))

    def generators(self) -> list["Element"]:
        return [self.generator(i) for i in range(self.ngens)]

    def element(self, payload: Any) -> "Element":
        return Element(self, payload)

    def evaluate(self, word: Word) -> "Element":
        """Evaluate a word at the platform generators (normal form result)."""
        if word.max_index() >= self.ngens:
            raise ValueError(
                f"word uses generator index {word.max_index()} but group has {self.ngens}"
            )
        acc = self.identity()
        for gen, exp in word.syllables:
            acc = acc * self.generator(gen) ** exp
        return acc

    def element_from_wire(self, line: str) -> "Element":
        return Element(self, self.payload_from_wire(line))

    def __repr__(self) -> str:
        label = self.name or self.kind
        return f"<{type(self).__name__} {label} ngens={self.ngens}>"


class Element:
    """A group element held in canonical normal form."""

    __slots__ = ("group", "payload")

    def __init__(self, group: Group, payload: Any):
        self.group = group
        self.payload = payload

    def _require_same_group(self, other: "Element") -> None:
        if self.group is not other.group and self.group != other.group:
            raise GroupMismatchError("elements belong to different groups")

    def __mul__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_group(other)
        return Element(self.group, self.group.mul_payload(self.payload, other.payload))

    def inverse(self) -> "Element":
        return Element(self.group, self.group.inv_payload(self.payload))

    def __pow__(self, k: int) -> "Element":
        """a**k by square-and-multiply; a**0 is the identity."""
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (self ** (-k)).inverse()
        result = self.group.identity_payload()
        base = self.payload
        mul = self.group.mul_payload
        while k:
            if k & 1:
                result = mul(result, base)
            k >>= 1
            if k:
                base = mul(base, base)
        return Element(self.group, result)

    def conj(self, g: "Element") -> "Element":
        """g^-1 * self * g."""
        self._require_same_group(g)
        mul = self.group.mul_payload
        ginv = self.group.inv_payload(g.payload)
        return Element(self.group, mul(mul(ginv, self.payload), g.payload))

    def comm(self, other: "Element") -> "Element":
        """Commutator a^-1 b^-1 a b; identity iff the two commute."""
        self._require_same_group(other)
        return self.inverse() * other.inverse() * self * other

    @property
    def is_identity(self) -> bool:
        return self.payload == self.group.identity_payload()

    def to_wire(self) -> str:
        return self.group.payload_to_wire(self.payload)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.group == other.group and self.payload == other.payload

    def __hash__(self) -> int:
        # Payload-only: equal elements share payloads; cross-group collisions
        # are harmless.
        return hash(self.payload)

    def __repr__(self) -> str:
        try:
            return f"Element({self.to_wire()!r})"
        except NotImplementedError:
            return f"Element({self.payload!r})"


# -- spec-level operation aliases ----------------------------------------


def mul(a: Element, b: Element) -> Element:
    return a * b


def inv(a: Element) -> Element:
    return a.inverse()


def conj(a: Element, g: Element) -> Element:
    """The conjugate a^g = g^-1 a g."""
    return a.conj(g)


def comm(a: Element, b: Element) -> Element:
    return a.comm(b)


def pow_(a: Element, k: int) -> Element:
    return a**k


def commutes_with_all(a: Element, gens: Iterable[Element]) -> bool:
    """True iff a commutes with every listed element."""
    return all(a.comm(g).is_identity for g in gens)


# -- random elements ------------------------------------------------------


@dataclass(frozen=True)
class SamplerConfig:
    """Deterministic sampler: a uniform freely reduced word of fixed length.

    The distribution of "random group elements" is a deliberate artifact
    choice (no canonical one exists): draw a uniformly random freely reduced
    word of exactly ``word_length`` letters over the chosen generators and
    their inverses, then normalize.  Word length is the hardness knob.
    """

    word_length: int
    generator_set: tuple[int, ...]
    seed: int

    def validate_for(self, group: Group) -> None:
        if self.word_length < 1:
            raise ValueError("word_length must be >= 1")
        if not self.generator_set:
            raise ValueError("generator_set must be nonempty")
        for i in self.generator_set:
            if not 0 <= i < group.ngens:
                raise ValueError(f"generator index {i} out of range for group")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


def random_reduced_word(num_symbols: int, length: int, rng: random.Random) -> Word:
    """Uniform freely reduced word of exactly ``length`` letters.

    Letters are g1..g{num_symbols} and their inverses; "freely reduced"
    means no letter is immediately cancelled by the next.
    """
    if num_symbols < 1:
        raise ValueError("need at least one symbol")
    if length < 0:
        raise ValueError("length must be >= 0")
    letters: list[tuple[int, int]] = []
    for pos in range(length):
        if pos == 0:
            pick = rng.randrange(2 * num_symbols)
        else:
            pick = rng.randrange(2 * num_symbols - 1)
            banned = _letter_index(letters[-1][0], -letters[-1][1])
            if pick >= banned:
                pick += 1
        gen, step = divmod(pick, 2)
        letters.append((gen, 1 if step == 0 else -1))
    return Word.from_syllables(letters)


def _letter_index(gen: int, step: int) -> int:
    return 2 * gen + (0 if step == 1 else 1)


def sample(group: Group, cfg: SamplerConfig) -> Element:
    """Deterministic random element: same config, same element."""
    cfg.validate_for(group)
    rng = random.Random(cfg.seed)
    word = random_reduced_word(len(cfg.generator_set), cfg.word_length, rng)
    remapped = Word(tuple((cfg.generator_set[g], e) for g, e in word.syllables))
    return group.evaluate(remapped)


def sample_subgroup(gens: Sequence[Element], word_length: int, rng: random.Random) -> Element:
    """Random element of <gens>: a reduced word evaluated at the given elements."""
    if not gens:
        raise ValueError("need at least one subgroup generator")
    if word_length < 1:
        raise ValueError("word_length must be >= 1")
    word = random_reduced_word(len(gens), word_length, rng)
    acc = gens[0].group.identity()
    for gen, exp in word.syllables:
        acc = acc * gens[gen] ** exp
    return acc
