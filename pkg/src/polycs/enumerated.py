"""Finite groups given by an explicit multiplication table.

This is the third platform kind: elements are table indices, products are
lookups.  Built either directly from a table (e.g. an independent model of
a small group in tests) or from an exhaustive enumeration of a finite
polycyclic presentation, and used as ground truth to cross-check the other
platforms.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Sequence

from .group import Group

if TYPE_CHECKING:
    from .pc import Enumeration


class EnumeratedGroup(Group):
    kind = "enum"

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        generators: Sequence[int],
        *,
        labels: Sequence[str] | None = None,
        name: str | None = None,
    ):
        size = len(table)
        if size < 1:
            raise ValueError("table must be nonempty")
        self.table = tuple(tuple(row) for row in table)
        for row in self.table:
            if len(row) != size or any(not 0 <= x < size for x in row):
                raise ValueError("table must be square with in-range entries")
        if not generators:
            raise ValueError("need at least one designated generator")
        self._generators = tuple(generators)
        for g in self._generators:
            if not 0 <= g < size:
                raise ValueError(f"generator index {g} out of range")
        self.labels = tuple(labels) if labels is not None else None
        self.name = name

        self._identity = next(
            i for i in range(size) if all(self.table[i][j] == j for j in range(size))
        )
        self._inverses = tuple(self.table[i].index(self._identity) for i in range(size))

    @classmethod
    def from_enumeration(cls, enum: "Enumeration", *, name: str | None = None) -> "EnumeratedGroup":
        """Wrap an exhaustive enumeration of a finite presentation."""
        pres = enum.group
        gens = [enum.index_of[pres.generator_payload(i)] for i in range(pres.ngens)]
        labels = [pres.payload_to_wire(f) for f in enum.forms]
        return cls(enum.table, gens, labels=labels, name=name or (pres.name and f"enum:{pres.name}"))

    def __len__(self) -> int:
        return len(self.table)

    @property
    def ngens(self) -> int:
        return len(self._generators)

    def identity_payload(self) -> int:
        return self._identity

    def generator_payload(self, index: int) -> int:
        return self._generators[index]

    def mul_payload(self, p: int, q: int) -> int:
        return self.table[p][q]

    def inv_payload(self, p: int) -> int:
        return self._inverses[p]

    def elements(self) -> list:
        return [self.element(i) for i in range(len(self.table))]

    def payload_to_wire(self, p: int) -> str:
        raise NotImplementedError("enumerated platforms have no canonical wire form")

    def payload_from_wire(self, line: str) -> int:
        raise NotImplementedError("enumerated platforms have no canonical wire form")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EnumeratedGroup):
            return NotImplemented
        return self.table == other.table and self._generators == other._generators

    def __hash__(self) -> int:
        return hash((self.table, self._generators))
