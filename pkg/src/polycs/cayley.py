"""Breadth-first exploration of Cayley balls with normal-form deduplication.

One BFS core backs both the growth measurements and the search attacks, so
"states visited by the attack" and "ball size" are the same count by
construction.  States are normal-form payloads; the walk stores parent
links, so the minimal word for any visited element can be reconstructed
without keeping whole words in memory.

Words of equal length are discovered in lexicographic letter order
(g1, g1^-1, g2, g2^-1, ...), which fixes the (length, lex) tie-break used
by the attack oracles.
"""

from __future__ import annotations

from typing import Any, Sequence

from .errors import StateBudgetError
from .group import Element, Group
from .words import Word


class BallWalk:
    """Layer-by-layer BFS over the Cayley graph of <gens>."""

    def __init__(self, group: Group, gens: Sequence[Element], *, max_states: int = 10**6):
        if not gens:
            raise ValueError("need at least one generator")
        for g in gens:
            if g.group != group:
                raise ValueError("generators must belong to the walked group")
        self.group = group
        self.max_states = max_states
        self._letters: list[tuple[Any, tuple[int, int]]] = []
        for i, g in enumerate(gens):
            self._letters.append((g.payload, (i, 1)))
            self._letters.append((group.inv_payload(g.payload), (i, -1)))
        root = group.identity_payload()
        # payload -> (parent payload | None, letter | None)
        self._visited: dict[Any, tuple[Any, tuple[int, int] | None]] = {root: (None, None)}
        self._frontier: list[Any] = [root]
        self.radius = 0

    @property
    def states(self) -> int:
        return len(self._visited)

    @property
    def frontier(self) -> list[Any]:
        return list(self._frontier)

    @property
    def exhausted(self) -> bool:
        return not self._frontier

    def expand(self) -> list[Any]:
        """Advance one radius; return the newly discovered stratum.

        An empty stratum means the ball closed up (finite subgroup).
        Raises StateBudgetError once the visited set would exceed the
        budget; the partial count stays readable via ``states``.
        """
        mul = self.group.mul_payload
        nxt: list[Any] = []
        visited = self._visited
        for payload in self._frontier:
            for letter_payload, letter in self._letters:
                neighbor = mul(payload, letter_payload)
                if neighbor not in visited:
                    if len(visited) >= self.max_states:
                        raise StateBudgetError(
                            f"ball exceeded {self.max_states} states at radius {self.radius + 1}"
                        )
                    visited[neighbor] = (payload, letter)
                    nxt.append(neighbor)
        self._frontier = nxt
        self.radius += 1
        return nxt

    def word_for(self, payload: Any) -> Word:
        """Minimal (length, lex) word over the generators reaching ``payload``."""
        letters: list[tuple[int, int]] = []
        cursor = payload
        while True:
            parent, letter = self._visited[cursor]
            if letter is None:
                break
            letters.append(letter)
            cursor = parent
        return Word.from_syllables(reversed(letters))
