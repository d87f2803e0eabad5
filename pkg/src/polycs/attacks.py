"""Desk-scale adversarial oracles.

The hardness assumptions behind the protocols are realized here as honest
search procedures: breadth-first conjugacy search, power-conjugacy search
on top of it, and a linear-scan discrete log for the classical baseline.
Every search reports the number of distinct states it visited, which ties
attack cost directly to Cayley-ball growth.

Not-found outcomes are values, not exceptions: searches return a result
object whose ``found`` flag is False when the budget ran out.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence

from .cayley import BallWalk
from .errors import StateBudgetError
from .group import Element
from .words import Word, format_word


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for the search oracles.

    ``max_power`` only matters for power-conjugacy search.  Zero budgets
    are allowed and make the search trivially unsuccessful.
    """

    max_word_length: int
    max_states: int = 10**6
    max_power: int = 8

    def __post_init__(self) -> None:
        if self.max_word_length < 0 or self.max_states < 0 or self.max_power < 0:
            raise ValueError("budgets must be non-negative")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a conjugacy search; ``states`` counts visited normal forms."""

    conjugator: Element | None
    word: Word | None
    states: int
    power: int | None = None

    @property
    def found(self) -> bool:
        return self.conjugator is not None

    @property
    def length(self) -> int | None:
        return None if self.word is None else self.word.length()

    def report_line(self) -> str:
        """The one-line report format: ``found <len> <word>`` or ``notfound states=<n>``."""
        if not self.found:
            return f"notfound states={self.states}"
        assert self.word is not None
        return f"found {self.word.length()} {format_word(self.word)}"


def conj_search(
    b: Element, c: Element, gens: Sequence[Element], budget: SearchBudget
) -> SearchResult:
    """Find a shortest s in <gens> with s^-1 b s = c.

    BFS over normal forms, so each group element is tried once; ties among
    equal-length conjugators break in lexicographic letter order.  Any
    returned s exactly satisfies conj(b, s) = c.
    """
    b._require_same_group(c)
    group = b.group
    walk = BallWalk(group, gens, max_states=budget.max_states)
    mul, inv = group.mul_payload, group.inv_payload
    target = c.payload
    stratum: list[Any] = [group.identity_payload()]
    radius = 0
    while True:
        for payload in stratum:
            if mul(mul(inv(payload), b.payload), payload) == target:
                return SearchResult(
                    conjugator=group.element(payload),
                    word=walk.word_for(payload),
                    states=walk.states,
                )
        if radius >= budget.max_word_length:
            return SearchResult(conjugator=None, word=None, states=walk.states)
        try:
            stratum = walk.expand()
        except StateBudgetError:
            return SearchResult(conjugator=None, word=None, states=walk.states)
        if not stratum:
            return SearchResult(conjugator=None, word=None, states=walk.states)
        radius += 1


def power_conj_search(
    v: Element, w: Element, gens: Sequence[Element], budget: SearchBudget
) -> SearchResult:
    """Find (n, s) with w^n = s^-1 v s, minimal in (n, length, lex) order.

    Runs one conjugacy search per candidate exponent n = 1..max_power;
    ``states`` accumulates over all attempts.
    """
    v._require_same_group(w)
    total_states = 0
    for n in range(1, budget.max_power + 1):
        hit = conj_search(v, w**n, gens, budget)
        total_states += hit.states
        if hit.found:
            return dataclasses.replace(hit, states=total_states, power=n)
    return SearchResult(conjugator=None, word=None, states=total_states)


def dlog_bruteforce(g: int, y: int, p: int, q: int) -> int | None:
    """Linear-scan discrete log: the k in [0, q) with g^k = y mod p, else None."""
    acc = 1
    for k in range(q):
        if acc == y % p:
            return k
        acc = (acc * g) % p
    return None


# -- deterministic ciphertext mutation streams ------------------------------


@dataclass(frozen=True)
class ReplaceComponent:
    """Replace one ciphertext field by each given value in turn."""

    field: str
    values: tuple

    def __init__(self, field: str, values: Iterable):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "values", tuple(values))


@dataclass(frozen=True)
class SwapComponents:
    """Exchange two ciphertext fields."""

    first: str
    second: str


@dataclass(frozen=True)
class IdentityComponent:
    """Overwrite one field with the identity (group identity, or 1 for integers)."""

    field: str


TamperOp = ReplaceComponent | SwapComponents | IdentityComponent


def tamper_suite(ciphertext: Any, strategy: Sequence[TamperOp]) -> Iterator[Any]:
    """Yield deterministic mutations of a ciphertext dataclass.

    An empty strategy yields nothing.  Mutants equal to the original are
    not filtered; reject-path tests decide what to assert.
    """
    for op in strategy:
        if isinstance(op, ReplaceComponent):
            for value in op.values:
                yield dataclasses.replace(ciphertext, **{op.field: value})
        elif isinstance(op, SwapComponents):
            a = getattr(ciphertext, op.first)
            b = getattr(ciphertext, op.second)
            yield dataclasses.replace(ciphertext, **{op.first: b, op.second: a})
        elif isinstance(op, IdentityComponent):
            current = getattr(ciphertext, op.field)
            neutral = current.group.identity() if isinstance(current, Element) else 1
            yield dataclasses.replace(ciphertext, **{op.field: neutral})
        else:
            raise TypeError(f"unknown tamper op {op!r}")
