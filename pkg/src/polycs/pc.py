"""Polycyclic presentations and the collection normal-form engine.

A consistent polycyclic presentation on generators g1..gn consists of:

* relative orders r_i (an integer >= 2, or infinite),
* for each finite r_i a power relation  g_i^r_i = w  with w over g_{i+1}..gn,
* for each i < j conjugation relations  g_j^(g_i) and g_j^(g_i^-1),
  both words over g_{i+1}..gn.

Every element then has a unique normal form g1^e1 * ... * gn^en with
0 <= e_i < r_i for finite r_i.  ``collect`` computes it by collection from
the left: repeatedly locate the leftmost deviation from normal-form shape
and rewrite it, moving low-index generators leftward through the word.

Exponents are arbitrary-precision throughout.  A rewriting-step budget
guards against pathological or inconsistent presentations.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import (
    CollectionBudgetError,
    EnumerationError,
    PresentationError,
    WireFormatError,
)
from .group import Group
from .wire import format_int, parse_strict_int
from .words import Word, format_word, parse_word

DEFAULT_STEP_BUDGET = 10**6

ConjKey = tuple[int, int, int]  # (i, j, sign): the word for g_j ** (g_i^sign)


def _validate_relation_word(word: Word, low: int, n: int, what: str) -> None:
    for gen, _ in word.syllables:
        if not low < gen < n:
            raise PresentationError(
                f"{what} must use generator indices {low + 2}..{n} only, got g{gen + 1}"
            )


class PcGroup(Group):
    """A group given by a polycyclic presentation, with collection."""

    kind = "pc"

    def __init__(
        self,
        relative_orders: Sequence[int | None],
        power_relations: Mapping[int, Word] | None = None,
        conjugation_relations: Mapping[ConjKey, Word] | None = None,
        *,
        name: str | None = None,
        step_budget: int = DEFAULT_STEP_BUDGET,
    ):
        n = len(relative_orders)
        if n < 1:
            raise PresentationError("need at least one generator")
        for r in relative_orders:
            if r is not None and r < 2:
                raise PresentationError(f"relative order must be >= 2 or infinite, got {r}")
        self._orders: tuple[int | None, ...] = tuple(relative_orders)

        powers: dict[int, Word] = dict(power_relations or {})
        for i, w in powers.items():
            if not 0 <= i < n:
                raise PresentationError(f"power relation for unknown generator index {i}")
            if self._orders[i] is None:
                raise PresentationError(f"power relation given for infinite-order g{i + 1}")
            _validate_relation_word(w, i, n, f"power relation of g{i + 1}")
        self._powers: tuple[Word, ...] = tuple(powers.get(i, Word()) for i in range(n))

        conjs: dict[ConjKey, Word] = dict(conjugation_relations or {})
        for (i, j, sign), w in conjs.items():
            if not (0 <= i < j < n):
                raise PresentationError(f"conjugation relation needs 0 <= i < j < n, got {(i, j)}")
            if sign not in (1, -1):
                raise PresentationError("conjugation relation sign must be +1 or -1")
            _validate_relation_word(w, i, n, f"conjugation relation g{j + 1}^g{i + 1}")
        for i in range(n):
            if self._orders[i] is None:
                for j in range(i + 1, n):
                    plus = conjs.get((i, j, 1), Word.generator(j))
                    if (i, j, -1) not in conjs and not plus == Word.generator(j):
                        raise PresentationError(
                            f"g{i + 1} has infinite order and twists g{j + 1}; "
                            f"the inverse conjugation relation is required"
                        )
        self._conjs = conjs
        self.name = name
        self.step_budget = step_budget
        self._defining = (
            self._orders,
            self._powers,
            tuple(sorted((k, w.syllables) for k, w in conjs.items())),
        )
        # Syllable lists used by the rewriter, precomputed per relation.
        self._power_syl = [tuple(w.syllables) for w in self._powers]
        self._conj_syl = {k: tuple(w.syllables) for k, w in conjs.items()}

    # -- presentation data (read-only views) -----------------------------

    @property
    def ngens(self) -> int:
        return len(self._orders)

    @property
    def relative_orders(self) -> tuple[int | None, ...]:
        return self._orders

    @property
    def power_relations(self) -> tuple[Word, ...]:
        return self._powers

    @property
    def conjugation_relations(self) -> dict[ConjKey, Word]:
        return dict(self._conjs)

    def conjugate_word(self, i: int, j: int, sign: int) -> Word:
        """The stored (or default trivial) word for g_j ** (g_i^sign)."""
        return self._conjs.get((i, j, sign), Word.generator(j))

    @property
    def is_finite(self) -> bool:
        return all(r is not None for r in self._orders)

    def order(self) -> int | None:
        """Group order for finite presentations, else None."""
        if not self.is_finite:
            return None
        out = 1
        for r in self._orders:
            out *= r  # type: ignore[operator]
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PcGroup):
            return NotImplemented
        return self._defining == other._defining

    def __hash__(self) -> int:
        return hash(self._defining)

    # -- collection -------------------------------------------------------

    def _power_tail(self, g: int, q: int) -> list[list[int]]:
        """Syllables of (g_g^r_g)^q, i.e. the power word raised to q."""
        syl = self._power_syl[g]
        if not syl:
            return []
        if len(syl) == 1:
            h, c = syl[0]
            return [[h, c * q]]
        if q > 0:
            base = [list(s) for s in syl]
        else:
            base = [[h, -c] for h, c in reversed(syl)]
        return [pair.copy() for _ in range(abs(q)) for pair in base]

    def _conj_tail(self, j: int, i: int, sign: int, f: int) -> list[list[int]]:
        """Syllables of (g_j ** (g_i^sign))^f."""
        syl = self._conj_syl.get((i, j, sign))
        if syl is None:
            # Missing relation means the pair commutes; the constructor
            # rejects presentations where a needed inverse relation is absent.
            return [[j, f]]
        if len(syl) == 1:
            h, c = syl[0]
            return [[h, c * f]]
        if f > 0:
            base = [list(s) for s in syl]
        else:
            base = [[h, -c] for h, c in reversed(syl)]
        return [pair.copy() for _ in range(abs(f)) for pair in base]

    def collect_syllables(
        self, syllables: Iterable[tuple[int, int]], *, step_budget: int | None = None
    ) -> tuple[int, ...]:
        """Collect an arbitrary word (as syllables) into its normal form."""
        budget = self.step_budget if step_budget is None else step_budget
        n = self.ngens
        orders = self._orders
        syl: list[list[int]] = []
        for g, e in syllables:
            if not 0 <= g < n:
                raise ValueError(f"generator index g{g + 1} out of range (n={n})")
            if e != 0:
                syl.append([g, e])

        steps = 0
        p = 0
        while p < len(syl):
            g, e = syl[p]
            r = orders[g]
            if r is not None and not 0 <= e < r:
                q, rho = divmod(e, r)
                tail = self._power_tail(g, q)
                steps += 1 + len(tail)
                if steps > budget:
                    raise CollectionBudgetError(f"collection exceeded {budget} steps")
                if rho == 0:
                    syl[p : p + 1] = tail
                else:
                    syl[p][1] = rho
                    syl[p + 1 : p + 1] = tail
                p = max(p - 1, 0)
                continue
            if p > 0:
                pg, pe = syl[p - 1]
                if pg == g:
                    steps += 1
                    if steps > budget:
                        raise CollectionBudgetError(f"collection exceeded {budget} steps")
                    merged = pe + e
                    if merged == 0:
                        del syl[p - 1 : p + 1]
                    else:
                        syl[p - 1][1] = merged
                        del syl[p]
                    p = max(p - 1, 0)
                    continue
                if pg > g:
                    s = 1 if e > 0 else -1
                    tail = self._conj_tail(pg, g, s, pe)
                    steps += 1 + len(tail)
                    if steps > budget:
                        raise CollectionBudgetError(f"collection exceeded {budget} steps")
                    repl: list[list[int]] = [[g, s]]
                    repl.extend(tail)
                    if e != s:
                        repl.append([g, e - s])
                    syl[p - 1 : p + 1] = repl
                    p = max(p - 1, 0)
                    continue
            p += 1

        vec = [0] * n
        for g, e in syl:
            vec[g] = e
        return tuple(vec)

    def collect(self, word: Word, *, step_budget: int | None = None) -> tuple[int, ...]:
        """Normal-form exponent vector of a word over the generators."""
        return self.collect_syllables(word.syllables, step_budget=step_budget)

    def normal_form_word(self, payload: tuple[int, ...]) -> Word:
        return Word.from_syllables((i, e) for i, e in enumerate(payload))

    # -- Group interface ---------------------------------------------------

    def identity_payload(self) -> tuple[int, ...]:
        return (0,) * self.ngens

    def generator_payload(self, index: int) -> tuple[int, ...]:
        return self.collect_syllables([(index, 1)])

    def mul_payload(self, p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
        syllables = [(i, e) for i, e in enumerate(p) if e] + [
            (i, e) for i, e in enumerate(q) if e
        ]
        return self.collect_syllables(syllables)

    def inv_payload(self, p: tuple[int, ...]) -> tuple[int, ...]:
        syllables = [(i, -e) for i, e in reversed(list(enumerate(p))) if e]
        return self.collect_syllables(syllables)

    def element(self, payload):
        payload = tuple(payload)
        if len(payload) != self.ngens:
            raise ValueError(f"payload length {len(payload)} != {self.ngens}")
        for i, (e, r) in enumerate(zip(payload, self._orders)):
            if not isinstance(e, int):
                raise ValueError("exponents must be integers")
            if r is not None and not 0 <= e < r:
                raise ValueError(f"exponent {e} of g{i + 1} outside [0, {r})")
        return super().element(payload)

    def payload_to_wire(self, p: tuple[int, ...]) -> str:
        return "pc " + " ".join(format_int(e) for e in p)

    def payload_from_wire(self, line: str) -> tuple[int, ...]:
        tokens = line.split(" ")
        if tokens[0] != "pc" or len(tokens) != self.ngens + 1:
            raise WireFormatError(f"expected 'pc' line with {self.ngens} exponents: {line!r}")
        payload = tuple(parse_strict_int(t) for t in tokens[1:])
        for e, r in zip(payload, self._orders):
            if r is not None and not 0 <= e < r:
                raise WireFormatError(f"exponent {e} outside [0, {r}) in {line!r}")
        return payload


# -- exhaustive enumeration (finite presentations) -------------------------


class Enumeration:
    """All normal forms of a finite presentation plus its product table.

    Ground truth for the rest of the test suite: ``table[i][j]`` is the
    index of forms[i] * forms[j], computed once by exhaustive collection.
    """

    def __init__(self, group: PcGroup, forms: list[tuple[int, ...]], table: list[list[int]]):
        self.group = group
        self.forms = forms
        self.table = table
        self.index_of = {f: i for i, f in enumerate(forms)}
        self.identity_index = self.index_of[group.identity_payload()]

    def __len__(self) -> int:
        return len(self.forms)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        row = self.table[i]
        for j, prod in enumerate(row):
            if prod == self.identity_index:
                return j
        raise EnumerationError(f"element {i} has no inverse in table")

    def check_consistency(self) -> None:
        """Verify the table is a group of the expected order.

        The table must be a Latin square with a two-sided identity and be
        associative; collapse caused by an inconsistent presentation shows
        up as a repeated entry in some row or column.
        """
        size = len(self.forms)
        full = set(range(size))
        e = self.identity_index
        for i in range(size):
            if self.table[e][i] != i or self.table[i][e] != i:
                raise EnumerationError("identity law fails in enumeration table")
            if set(self.table[i]) != full:
                raise EnumerationError(f"row {i} is not a permutation (presentation collapses)")
            if {self.table[j][i] for j in range(size)} != full:
                raise EnumerationError(f"column {i} is not a permutation (presentation collapses)")
        for i in range(size):
            for j in range(size):
                tij = self.table[i][j]
                row_i = self.table[i]
                for k in range(size):
                    if self.table[tij][k] != row_i[self.table[j][k]]:
                        raise EnumerationError("associativity fails in enumeration table")


def enumerate_group(
    pres: PcGroup,
    *,
    max_elements: int = 10**6,
    max_products: int = 10**6,
    check: bool = True,
) -> Enumeration:
    """List all normal forms of a finite presentation and its product table."""
    if not pres.is_finite:
        raise EnumerationError("cannot enumerate an infinite presentation")
    order = pres.order()
    assert order is not None
    if order > max_elements:
        raise EnumerationError(f"group order {order} exceeds element budget {max_elements}")
    if order * order > max_products:
        raise EnumerationError(
            f"product table needs {order * order} entries, over budget {max_products}"
        )
    ranges = [range(r) for r in pres.relative_orders]  # type: ignore[arg-type]
    forms = [tuple(v) for v in itertools.product(*ranges)]
    index_of = {f: i for i, f in enumerate(forms)}
    table = [[index_of[pres.mul_payload(a, b)] for b in forms] for a in forms]
    enum = Enumeration(pres, forms, table)
    if check:
        enum.check_consistency()
    return enum


# -- built-in platform catalog ---------------------------------------------

CATALOG_NAMES = ("d4", "q8", "heis3", "heisZ", "dihedral_inf")


@lru_cache(maxsize=None)
def catalog(name: str) -> PcGroup:
    """A vetted presentation by name.

    d4           dihedral group of order 8: g1 the reflection, g2 the rotation
    q8           quaternion group: g1 = j, g2 = i, g3 = -1
    heis3        Heisenberg group mod 3 (order 27), g3 central
    heisZ        integral Heisenberg group, [g2, g1] = g3 central
    dihedral_inf infinite dihedral group: g1 the reflection, g2 the translation
    """
    if name == "d4":
        pres = PcGroup(
            [2, 4],
            conjugation_relations={(0, 1, 1): parse_word("g2^3")},
            name="d4",
        )
    elif name == "q8":
        pres = PcGroup(
            [2, 2, 2],
            power_relations={0: parse_word("g3"), 1: parse_word("g3")},
            conjugation_relations={(0, 1, 1): parse_word("g2*g3")},
            name="q8",
        )
    elif name == "heis3":
        pres = PcGroup(
            [3, 3, 3],
            conjugation_relations={(0, 1, 1): parse_word("g2*g3")},
            name="heis3",
        )
    elif name == "heisZ":
        pres = PcGroup(
            [None, None, None],
            conjugation_relations={
                (0, 1, 1): parse_word("g2*g3"),
                (0, 1, -1): parse_word("g2*g3^-1"),
            },
            name="heisZ",
        )
    elif name == "dihedral_inf":
        pres = PcGroup(
            [2, None],
            conjugation_relations={(0, 1, 1): parse_word("g2^-1")},
            name="dihedral_inf",
        )
    else:
        raise ValueError(f"unknown catalog entry {name!r}; choose from {CATALOG_NAMES}")
    if pres.is_finite:
        enumerate_group(pres, check=True)
    return pres


def direct_product(a: PcGroup, b: PcGroup, *, name: str | None = None) -> PcGroup:
    """The direct product A x B as one polycyclic presentation.

    Generators of A keep their indices, generators of B are shifted up by
    A's generator count, and all cross-factor conjugations are trivial, so
    words supported on different factors commute by construction.
    """
    na = a.ngens
    orders = list(a.relative_orders) + list(b.relative_orders)
    powers: dict[int, Word] = {}
    for i, w in enumerate(a.power_relations):
        if not w.is_empty:
            powers[i] = w
    for i, w in enumerate(b.power_relations):
        if not w.is_empty:
            powers[na + i] = w.shifted(na)
    conjs: dict[ConjKey, Word] = {}
    for (i, j, sign), w in a.conjugation_relations.items():
        conjs[(i, j, sign)] = w
    for (i, j, sign), w in b.conjugation_relations.items():
        conjs[(na + i, na + j, sign)] = w.shifted(na)
    if name is None and a.name and b.name:
        name = f"{a.name}x{b.name}"
    return PcGroup(orders, powers, conjs, name=name)


# -- presentation block file format -----------------------------------------


def format_presentation(pres: PcGroup) -> list[str]:
    """Line-oriented presentation block; inverse of :func:`parse_presentation`."""
    lines = [f"n {pres.ngens}"]
    for i, r in enumerate(pres.relative_orders):
        lines.append(f"order {i + 1} {'inf' if r is None else r}")
    for i, w in enumerate(pres.power_relations):
        if not w.is_empty:
            lines.append(f"power {i + 1} : {format_word(w)}")
    for (i, j, sign), w in sorted(pres.conjugation_relations.items()):
        lines.append(f"conj {i + 1} {j + 1} {'+' if sign == 1 else '-'} : {format_word(w)}")
    return lines


def parse_presentation(lines: Sequence[str], **kwargs) -> PcGroup:
    """Parse the ``n / order / power / conj`` block grammar."""
    if not lines:
        raise PresentationError("empty presentation block")
    head = lines[0].split(" ")
    if len(head) != 2 or head[0] != "n":
        raise PresentationError(f"first line must be 'n <count>', got {lines[0]!r}")
    n = parse_strict_int(head[1])
    if n < 1:
        raise PresentationError("generator count must be >= 1")

    orders: dict[int, int | None] = {}
    powers: dict[int, Word] = {}
    conjs: dict[ConjKey, Word] = {}
    for line in lines[1:]:
        tokens = line.split(" ")
        if tokens[0] == "order" and len(tokens) == 3:
            i = parse_strict_int(tokens[1]) - 1
            if not 0 <= i < n:
                raise PresentationError(f"order line for unknown generator: {line!r}")
            if i in orders:
                raise PresentationError(f"duplicate order line for g{i + 1}")
            orders[i] = None if tokens[2] == "inf" else parse_strict_int(tokens[2])
        elif tokens[0] == "power" and len(tokens) >= 4 and tokens[2] == ":":
            i = parse_strict_int(tokens[1]) - 1
            if i in powers:
                raise PresentationError(f"duplicate power line for g{i + 1}")
            powers[i] = parse_word(" ".join(tokens[3:]))
        elif tokens[0] == "conj" and len(tokens) >= 6 and tokens[4] == ":":
            i = parse_strict_int(tokens[1]) - 1
            j = parse_strict_int(tokens[2]) - 1
            if tokens[3] not in ("+", "-"):
                raise PresentationError(f"conj sign must be + or -: {line!r}")
            sign = 1 if tokens[3] == "+" else -1
            if (i, j, sign) in conjs:
                raise PresentationError(f"duplicate conj line: {line!r}")
            conjs[(i, j, sign)] = parse_word(" ".join(tokens[5:]))
        else:
            raise PresentationError(f"unknown presentation line: {line!r}")
    if set(orders) != set(range(n)):
        missing = sorted(set(range(n)) - set(orders))
        raise PresentationError(f"missing order lines for generators {[i + 1 for i in missing]}")
    return PcGroup([orders[i] for i in range(n)], powers, conjs, **kwargs)
