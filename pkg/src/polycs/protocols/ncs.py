"""Non-abelian Cramer-Shoup encryption (hashless variant).

All exponent arithmetic of the classical scheme is replaced by conjugation
in a group where every element has a computable normal form:

    keygen   secrets x1, x2, y1, y2, z from <S>
             bases g1, g2 != 1 with [g2^x2, g1^y1] = 1
             c = g1^x1 * g2^x2,  d = g1^y1 * g2^y2,  h = g1^z
    encrypt  r from <T> (so r commutes with every secret):
             u1 = g1^r, u2 = g2^r, e = m^(h^r), v = c^r * d^r
    decrypt  accept iff v = u1^x1 * u1^y1 * u2^x2 * u2^y2,
             then m = e^((u1^z)^-1), else reject.

The commuting-bases constraint is exactly what lets the verification chain
close: conjugating [g2^x2, g1^y1] = 1 by r lets u2^x2 slide past u1^y1.
The scheme carries no hash, so e is malleable while u1, u2, v are bound by
the check; that asymmetry is part of the contract and surfaced in tests,
not patched.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence, Union

from ..errors import RetryExhaustedError
from ..group import Element, Group, sample_subgroup
from .common import REJECT, Reject

if TYPE_CHECKING:
    from ..platform import PlatformSpec

MODES = ("direct-product", "checked")


class PlaintextLeakWarning(UserWarning):
    """The message commutes with h^r, so the ciphertext component e equals m."""


@dataclass(frozen=True)
class NcsPublicKey:
    g1: Element
    g2: Element
    c: Element
    d: Element
    h: Element


@dataclass(frozen=True)
class NcsSecretKey:
    x1: Element
    x2: Element
    y1: Element
    y2: Element
    z: Element


@dataclass(frozen=True)
class NcsKeyPair:
    public: NcsPublicKey
    secret: NcsSecretKey


@dataclass(frozen=True)
class NcsCiphertext:
    u1: Element
    u2: Element
    e: Element
    v: Element


def keygen(
    spec: "PlatformSpec",
    mode: str = "direct-product",
    *,
    rng: random.Random,
    retry_budget: int = 64,
) -> NcsKeyPair:
    """Draw secrets from <S> and bases satisfying the commuting constraint.

    direct-product mode draws g1 and g2 from the spec's disjoint generator
    pools, so [g2^x2, g1^y1] = 1 holds by construction (it is still
    asserted).  checked mode draws both bases from the whole group and
    retries until the constraint holds.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "direct-product":
        if spec.g1_gens is None or spec.g2_gens is None:
            raise ValueError("direct-product mode needs g1/g2 generator pools in the platform")
        pool1, pool2 = spec.g1_gens, spec.g2_gens
    else:
        pool1 = pool2 = tuple(spec.group.generators())

    length = spec.word_length
    for _ in range(retry_budget):
        x1, x2, y1, y2, z = (sample_subgroup(spec.s_gens, length, rng) for _ in range(5))
        g1 = sample_subgroup(pool1, length, rng)
        g2 = sample_subgroup(pool2, length, rng)
        if g1.is_identity or g2.is_identity:
            continue
        if not g2.conj(x2).comm(g1.conj(y1)).is_identity:
            continue
        public = NcsPublicKey(
            g1=g1,
            g2=g2,
            c=g1.conj(x1) * g2.conj(x2),
            d=g1.conj(y1) * g2.conj(y2),
            h=g1.conj(z),
        )
        return NcsKeyPair(public=public, secret=NcsSecretKey(x1, x2, y1, y2, z))
    raise RetryExhaustedError(
        f"no admissible (g1, g2) pair in {retry_budget} attempts ({mode} mode)"
    )


def encrypt(
    public: NcsPublicKey,
    m: Element,
    spec: "PlatformSpec",
    rng: random.Random,
) -> NcsCiphertext:
    """Encrypt m under a randomizer r drawn from <T>.

    Warns (PlaintextLeakWarning) when m commutes with h^r: then e = m and
    the ciphertext carries the message verbatim.  Nothing in the scheme
    constrains m, so the warning is advisory.
    """
    r = sample_subgroup(spec.t_gens, spec.word_length, rng)
    hr = public.h.conj(r)
    if m.comm(hr).is_identity:
        warnings.warn(
            "message commutes with h^r; ciphertext component e equals the plaintext",
            PlaintextLeakWarning,
            stacklevel=2,
        )
    return NcsCiphertext(
        u1=public.g1.conj(r),
        u2=public.g2.conj(r),
        e=m.conj(hr),
        v=public.c.conj(r) * public.d.conj(r),
    )


def verification_value(secret: NcsSecretKey, u1: Element, u2: Element) -> Element:
    """The receiver-side check value u1^x1 * u1^y1 * u2^x2 * u2^y2."""
    return u1.conj(secret.x1) * u1.conj(secret.y1) * u2.conj(secret.x2) * u2.conj(secret.y2)


def decrypt(secret: NcsSecretKey, ct: NcsCiphertext) -> Union[Element, Reject]:
    """Return m on a verifying ciphertext, REJECT otherwise."""
    if verification_value(secret, ct.u1, ct.u2) != ct.v:
        return REJECT
    return ct.e.conj(ct.u1.conj(secret.z).inverse())


# -- wire formats -------------------------------------------------------------

PUBLIC_HEADER = "ncs-public v1"
SECRET_HEADER = "ncs-secret v1"
CIPHERTEXT_HEADER = "ncs-ciphertext v1"
PUBLIC_BODY_LINES = 5
SECRET_BODY_LINES = 5
CIPHERTEXT_BODY_LINES = 4


def public_to_lines(public: NcsPublicKey) -> list[str]:
    parts = (public.g1, public.g2, public.c, public.d, public.h)
    return [PUBLIC_HEADER, *(x.to_wire() for x in parts)]


def public_from_lines(group: Group, body: Sequence[str]) -> NcsPublicKey:
    g1, g2, c, d, h = (group.element_from_wire(line) for line in body)
    return NcsPublicKey(g1=g1, g2=g2, c=c, d=d, h=h)


def secret_to_lines(secret: NcsSecretKey) -> list[str]:
    parts = (secret.x1, secret.x2, secret.y1, secret.y2, secret.z)
    return [SECRET_HEADER, *(x.to_wire() for x in parts)]


def secret_from_lines(group: Group, body: Sequence[str]) -> NcsSecretKey:
    x1, x2, y1, y2, z = (group.element_from_wire(line) for line in body)
    return NcsSecretKey(x1=x1, x2=x2, y1=y1, y2=y2, z=z)


def ciphertext_to_lines(ct: NcsCiphertext) -> list[str]:
    return [CIPHERTEXT_HEADER, *(x.to_wire() for x in (ct.u1, ct.u2, ct.e, ct.v))]


def ciphertext_from_lines(group: Group, body: Sequence[str]) -> NcsCiphertext:
    u1, u2, e, v = (group.element_from_wire(line) for line in body)
    return NcsCiphertext(u1=u1, u2=u2, e=e, v=v)
