"""Platform specifications: a group plus designated commuting subgroups.

The group-based schemes all rely on the same structural trick: secrets are
drawn from a subgroup S and session randomizers from a subgroup T with
[S, T] = 1 (elementwise commuting), so the two parties' conjugations can be
interchanged.  A PlatformSpec packages a group, generator sets for S and T
(checkable, hence the commuting condition is verified on generators), the
sampler word length, and optional generator pools for the two public-base
slots of the non-abelian Cramer-Shoup scheme.

Platform files are line-oriented UTF-8; ``#`` comment lines and blank lines
are ignored.  See the README for the exact grammar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import WireFormatError
from .group import Element, Group, commutes_with_all
from .matrix import MatGroup, format_matgroup, parse_matgroup
from .pc import PcGroup, catalog, direct_product, format_presentation, parse_presentation
from .protocols.ccs import CcsParams
from .wire import format_int, parse_strict_int
from .words import Word, format_word, parse_word


@dataclass(frozen=True)
class PlatformSpec:
    group: Group
    s_gens: tuple[Element, ...]
    t_gens: tuple[Element, ...]
    word_length: int
    g1_gens: tuple[Element, ...] | None = None
    g2_gens: tuple[Element, ...] | None = None
    name: str | None = None
    # words over the platform generators, kept for serialization
    s_words: tuple[Word, ...] = field(default=(), compare=False)
    t_words: tuple[Word, ...] = field(default=(), compare=False)
    g1_words: tuple[Word, ...] = field(default=(), compare=False)
    g2_words: tuple[Word, ...] = field(default=(), compare=False)

    def validate(self) -> None:
        """Check the structural requirements, most importantly [S, T] = 1."""
        if not self.s_gens or not self.t_gens:
            raise ValueError("platform needs at least one S and one T generator")
        if self.word_length < 1:
            raise ValueError("sampler word length must be >= 1")
        for e in (*self.s_gens, *self.t_gens, *(self.g1_gens or ()), *(self.g2_gens or ())):
            if e.group != self.group:
                raise ValueError("subgroup generators must belong to the platform group")
        for s in self.s_gens:
            if not commutes_with_all(s, self.t_gens):
                raise ValueError("S and T generators must commute elementwise ([S,T] != 1)")


def _spec(group: Group, s_words, t_words, g1_words=(), g2_words=(), *, word_length=6, name=None):
    spec = PlatformSpec(
        group=group,
        s_gens=tuple(group.evaluate(w) for w in s_words),
        t_gens=tuple(group.evaluate(w) for w in t_words),
        word_length=word_length,
        g1_gens=tuple(group.evaluate(w) for w in g1_words) or None,
        g2_gens=tuple(group.evaluate(w) for w in g2_words) or None,
        name=name,
        s_words=tuple(s_words),
        t_words=tuple(t_words),
        g1_words=tuple(g1_words),
        g2_words=tuple(g2_words),
    )
    spec.validate()
    return spec


def d4_platform(*, word_length: int = 7) -> PlatformSpec:
    """Dihedral desk platform: S = <g1> (the reflection), T = <g2^2> (central)."""
    return _spec(
        catalog("d4"),
        [parse_word("g1")],
        [parse_word("g2^2")],
        word_length=word_length,
        name="d4",
    )


def d4xd4_platform(*, word_length: int = 7) -> PlatformSpec:
    """Direct product of two dihedral groups.

    S mixes the first factor's reflection with the second factor's central
    rotation, T the other way around, so [S, T] = 1 while both subgroups
    still act nontrivially by conjugation.  The g1/g2 pools are the two
    factors, which discharges the commuting-bases constraint of the
    non-abelian Cramer-Shoup scheme by construction.
    """
    group = direct_product(catalog("d4"), catalog("d4"))
    return _spec(
        group,
        [parse_word("g1"), parse_word("g4^2")],
        [parse_word("g2^2"), parse_word("g3")],
        g1_words=[parse_word("g1"), parse_word("g2")],
        g2_words=[parse_word("g3"), parse_word("g4")],
        word_length=word_length,
        name="d4xd4",
    )


def matrix_platform(*, word_length: int = 7) -> PlatformSpec:
    """Z^2 x| Z with the Anosov twist [[2,1],[1,1]].

    S = T = <t> (the twisting generator, self-centralizing), and the g1/g2
    pools are the abelian fiber, whose elements stay in the fiber under
    conjugation and therefore commute with each other.
    """
    group = MatGroup(name="mat2")
    return _spec(
        group,
        [parse_word("g3")],
        [parse_word("g3")],
        g1_words=[parse_word("g1"), parse_word("g2")],
        g2_words=[parse_word("g1"), parse_word("g2")],
        word_length=word_length,
        name="mat2",
    )


BUILTIN_PLATFORMS = {
    "d4": d4_platform,
    "d4xd4": d4xd4_platform,
    "mat2": matrix_platform,
}


# -- platform file format ----------------------------------------------------


def format_platform(spec: Union[PlatformSpec, CcsParams]) -> list[str]:
    lines = ["platform v1"]
    if isinstance(spec, CcsParams):
        lines.append("kind ccs")
        lines.append(f"p {format_int(spec.p)}")
        lines.append(f"q {format_int(spec.q)}")
        lines.append(f"g1 {format_int(spec.g1)}")
        lines.append(f"g2 {format_int(spec.g2)}")
        return lines
    group = spec.group
    if isinstance(group, PcGroup):
        lines.append("kind pc")
        lines.extend(format_presentation(group))
    elif isinstance(group, MatGroup):
        lines.append("kind mat")
        lines.extend(format_matgroup(group))
    else:
        raise ValueError(f"cannot serialize platform kind {group.kind!r}")
    for w in spec.s_words:
        lines.append(f"sgen {format_word(w)}")
    for w in spec.t_words:
        lines.append(f"tgen {format_word(w)}")
    for w in spec.g1_words:
        lines.append(f"g1gen {format_word(w)}")
    for w in spec.g2_words:
        lines.append(f"g2gen {format_word(w)}")
    lines.append(f"wordlen {format_int(spec.word_length)}")
    return lines


def parse_platform(text: str) -> Union[PlatformSpec, CcsParams]:
    """Parse a platform file (comments and blank lines allowed)."""
    raw = text.split("\n")
    lines = [line for line in raw if line.strip() and not line.lstrip().startswith("#")]
    lines = [line.rstrip() for line in lines]
    if not lines or lines[0] != "platform v1":
        raise WireFormatError("platform file must start with 'platform v1'")
    if len(lines) < 2 or not lines[1].startswith("kind "):
        raise WireFormatError("platform file needs a 'kind' line")
    kind = lines[1][len("kind "):]
    body = lines[2:]

    if kind == "ccs":
        values = {}
        if len(body) != 4:
            raise WireFormatError("ccs platform needs exactly p, q, g1, g2 lines")
        for key, line in zip(("p", "q", "g1", "g2"), body):
            tokens = line.split(" ")
            if len(tokens) != 2 or tokens[0] != key:
                raise WireFormatError(f"expected '{key} <int>' line, got {line!r}")
            values[key] = parse_strict_int(tokens[1])
        params = CcsParams(values["p"], values["q"], values["g1"], values["g2"])
        params.validate()
        return params

    if kind == "pc":
        block = []
        rest = []
        for i, line in enumerate(body):
            first = line.split(" ", 1)[0]
            if first in ("n", "order", "power", "conj"):
                block.append(line)
            else:
                rest = body[i:]
                break
        else:
            rest = []
        group: Group = parse_presentation(block)
    elif kind == "mat":
        if not body or not body[0].startswith("matgroup n="):
            raise WireFormatError("mat platform needs a 'matgroup n=<n>' block")
        dim = parse_strict_int(body[0][len("matgroup n="):])
        block, rest = body[: dim + 1], body[dim + 1 :]
        group = parse_matgroup(block)
    else:
        raise WireFormatError(f"unknown platform kind {kind!r}")

    s_words, t_words, g1_words, g2_words = [], [], [], []
    word_length = None
    buckets = {"sgen": s_words, "tgen": t_words, "g1gen": g1_words, "g2gen": g2_words}
    for line in rest:
        key, _, arg = line.partition(" ")
        if key in buckets and arg:
            buckets[key].append(parse_word(arg))
        elif key == "wordlen" and arg:
            if word_length is not None:
                raise WireFormatError("duplicate wordlen line")
            word_length = parse_strict_int(arg)
        else:
            raise WireFormatError(f"unknown platform line: {line!r}")
    if word_length is None:
        raise WireFormatError("platform file is missing the wordlen line")
    return _spec(group, s_words, t_words, g1_words, g2_words, word_length=word_length)
