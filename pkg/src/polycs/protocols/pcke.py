"""Power-conjugacy key exchange: the fallback if plain conjugacy is easy.

Bob publishes v = g^n and w = s^-1 g s, keeping (n, s); the publics satisfy
w^n = s^-1 v s.  Alice picks m and t and sends

    E = x^-1 t^-1 v^m t x      with header      h = t^-1 w^m t.

Bob computes E' = s h^n s^-1 = t^-1 g^(mn) t, and since E = x^-1 E' x he
recovers x by solving a conjugacy search instance.  The solver returns the
minimal-length conjugator, which may differ from the sender's x whenever
E' has a nontrivial centralizer; callers get whatever conjugator certifies
the public relation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from ..attacks import SearchBudget, conj_search
from ..errors import NotFoundError
from ..group import Element, Group, sample_subgroup
from ..wire import format_int, parse_strict_int

if TYPE_CHECKING:
    from ..platform import PlatformSpec


@dataclass(frozen=True)
class PckePublicKey:
    v: Element  # g^n
    w: Element  # s^-1 g s


@dataclass(frozen=True)
class PckeSecretKey:
    n: int
    s: Element


@dataclass(frozen=True)
class PckeKeyPair:
    public: PckePublicKey
    secret: PckeSecretKey
    g: Element  # retained so tests can check w^n = s^-1 v s


def centralizer_probe(
    group: Group,
    g: Element,
    *,
    trials: int = 16,
    word_length: int = 6,
    max_power: int = 16,
    rng: random.Random | None = None,
) -> bool:
    """Desk-scale stand-in for "the centralizer of g is trivial".

    Samples elements and checks that everything found to commute with g is
    a small power of g, i.e. that g looks self-centralizing.
    """
    rng = rng or random.Random(0)
    powers = {(g**k).payload for k in range(-max_power, max_power + 1)}
    for _ in range(trials):
        x = sample_subgroup(group.generators(), word_length, rng)
        if x.comm(g).is_identity and x.payload not in powers:
            return False
    return True


def keygen(
    spec: "PlatformSpec",
    g: Element,
    n: int,
    rng: random.Random,
    *,
    check_centralizer: bool = True,
) -> PckeKeyPair:
    """Publish (v, w) = (g^n, s^-1 g s) for a sampled s in <S>."""
    if g.is_identity:
        raise ValueError("base g must not be the identity")
    if n < 1:
        raise ValueError("exponent n must be >= 1")
    if check_centralizer and not centralizer_probe(
        spec.group, g, word_length=spec.word_length, rng=random.Random(rng.getrandbits(64))
    ):
        raise ValueError("base g fails the trivial-centralizer probe")
    s = sample_subgroup(spec.s_gens, spec.word_length, rng)
    return PckeKeyPair(
        public=PckePublicKey(v=g**n, w=g.conj(s)),
        secret=PckeSecretKey(n=n, s=s),
        g=g,
    )


def encrypt(
    public: PckePublicKey,
    x: Element,
    m: int,
    spec: "PlatformSpec",
    rng: random.Random,
) -> tuple[Element, Element]:
    """Wrap x; returns (E, h) = (x^-1 t^-1 v^m t x, t^-1 w^m t)."""
    if m < 1:
        raise ValueError("exponent m must be >= 1")
    t = sample_subgroup(spec.t_gens, spec.word_length, rng)
    e = (public.v ** m).conj(t * x)
    h = (public.w ** m).conj(t)
    return e, h


def decrypt_inner(secret: PckeSecretKey, h: Element) -> Element:
    """E' = s h^n s^-1: the conjugate of E the receiver can reconstruct."""
    return (h ** secret.n).conj(secret.s.inverse())


def decrypt(
    secret: PckeSecretKey,
    e: Element,
    h: Element,
    gens: Sequence[Element],
    budget: SearchBudget,
) -> Element:
    """Recover a session key x' with E = x'^-1 E' x'.

    Delegates to the BFS conjugacy solver over ``gens``; raises
    NotFoundError when the solver budget is exhausted.
    """
    e_prime = decrypt_inner(secret, h)
    hit = conj_search(e_prime, e, gens, budget)
    if not hit.found:
        raise NotFoundError(f"conjugacy solver exhausted ({hit.states} states)")
    assert hit.conjugator is not None
    return hit.conjugator


# -- wire formats -------------------------------------------------------------

PUBLIC_HEADER = "pcke-public v1"
SECRET_HEADER = "pcke-secret v1"
CIPHERTEXT_HEADER = "pcke-ciphertext v1"
PUBLIC_BODY_LINES = 2
SECRET_BODY_LINES = 2
CIPHERTEXT_BODY_LINES = 2


def public_to_lines(public: PckePublicKey) -> list[str]:
    return [PUBLIC_HEADER, public.v.to_wire(), public.w.to_wire()]


def public_from_lines(group: Group, body: Sequence[str]) -> PckePublicKey:
    v, w = (group.element_from_wire(line) for line in body)
    return PckePublicKey(v=v, w=w)


def secret_to_lines(secret: PckeSecretKey) -> list[str]:
    return [SECRET_HEADER, format_int(secret.n), secret.s.to_wire()]


def secret_from_lines(group: Group, body: Sequence[str]) -> PckeSecretKey:
    n_line, s_line = body
    n = parse_strict_int(n_line)
    if n < 1:
        raise ValueError("secret exponent must be >= 1")
    return PckeSecretKey(n=n, s=group.element_from_wire(s_line))


def ciphertext_to_lines(e: Element, h: Element) -> list[str]:
    return [CIPHERTEXT_HEADER, e.to_wire(), h.to_wire()]


def ciphertext_from_lines(group: Group, body: Sequence[str]) -> tuple[Element, Element]:
    e, h = (group.element_from_wire(line) for line in body)
    return e, h
