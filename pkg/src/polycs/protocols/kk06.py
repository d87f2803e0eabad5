"""Conjugacy-based key exchange (the KK06 scheme).

Bob publishes b and c = b^s for a secret s in S.  To send a session key x,
Alice picks t in T and transmits E = x^(c^t) with header h = b^t.  Because
[S, T] = 1, Bob can recompute (b^t)^s = (b^s)^t = c^t from the header and
unwrap x = E^((c^t)^-1).  There is no integrity check: tampered headers
silently yield a different session key.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from ..errors import RetryExhaustedError
from ..group import Element, Group, sample_subgroup

if TYPE_CHECKING:
    from ..platform import PlatformSpec


@dataclass(frozen=True)
class Kk06PublicKey:
    b: Element
    c: Element


@dataclass(frozen=True)
class Kk06KeyPair:
    public: Kk06PublicKey
    secret: Element  # s, with c = b^s


def keygen(spec: "PlatformSpec", rng: random.Random, *, retry_budget: int = 64) -> Kk06KeyPair:
    """Sample s from <S> and a base b that s actually moves.

    Each attempt redraws both; the retry budget only runs out on platforms
    where S (as sampled) centralizes everything, e.g. a central S.
    """
    length = spec.word_length
    for _ in range(retry_budget):
        s = sample_subgroup(spec.s_gens, length, rng)
        b = sample_subgroup(spec.group.generators(), length, rng)
        c = b.conj(s)
        if c != b:
            return Kk06KeyPair(public=Kk06PublicKey(b=b, c=c), secret=s)
    raise RetryExhaustedError(
        f"no moving base found in {retry_budget} attempts; S appears central"
    )


def encrypt(
    public: Kk06PublicKey, x: Element, spec: "PlatformSpec", rng: random.Random
) -> tuple[Element, Element]:
    """Wrap session key x; returns (E, h) = (x^(c^t), b^t)."""
    t = sample_subgroup(spec.t_gens, spec.word_length, rng)
    return x.conj(public.c.conj(t)), public.b.conj(t)


def decrypt(secret: Element, e: Element, h: Element) -> Element:
    """Unwrap with k = h^s = c^t; garbage in, garbage out (no reject path)."""
    k = h.conj(secret)
    return e.conj(k.inverse())


# -- wire formats -------------------------------------------------------------

PUBLIC_HEADER = "kk06-public v1"
SECRET_HEADER = "kk06-secret v1"
CIPHERTEXT_HEADER = "kk06-ciphertext v1"
PUBLIC_BODY_LINES = 2
SECRET_BODY_LINES = 1
CIPHERTEXT_BODY_LINES = 2


def public_to_lines(public: Kk06PublicKey) -> list[str]:
    return [PUBLIC_HEADER, public.b.to_wire(), public.c.to_wire()]


def public_from_lines(group: Group, body: Sequence[str]) -> Kk06PublicKey:
    b, c = (group.element_from_wire(line) for line in body)
    return Kk06PublicKey(b=b, c=c)


def secret_to_lines(keypair: Kk06KeyPair) -> list[str]:
    return [SECRET_HEADER, keypair.secret.to_wire()]


def secret_from_lines(group: Group, body: Sequence[str]) -> Element:
    (line,) = body
    return group.element_from_wire(line)


def ciphertext_to_lines(e: Element, h: Element) -> list[str]:
    return [CIPHERTEXT_HEADER, e.to_wire(), h.to_wire()]


def ciphertext_from_lines(group: Group, body: Sequence[str]) -> tuple[Element, Element]:
    e, h = (group.element_from_wire(line) for line in body)
    return e, h
