"""Classical Cramer-Shoup encryption over a prime-order subgroup of Z_p*.

The baseline the non-abelian scheme is measured against.  Desk-scale
parameters only; the point here is exact semantics, above all the
verification equation and its reject branch:

    keygen   secrets x1, x2, y1, y2, z in Z_q
             c = g1^x1 g2^x2,  d = g1^y1 g2^y2,  h = g1^z      (mod p)
    encrypt  u1 = g1^r, u2 = g2^r, e = h^r m, v = c^r d^(r*a)
             with a = H(u1, u2, e)
    decrypt  accept iff v = u1^(x1 + a*y1) u2^(x2 + a*y2), then m = e / u1^z

H is any collision-resistant hash of the canonical serialization of
(u1, u2, e), reduced mod q; SHA-256 by default, pluggable via ``hash_fn``.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Callable, Union

from ..wire import format_int, render_file
from .common import REJECT, Reject

HashFn = Callable[[bytes], bytes]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for the desk-scale range (< 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CcsParams:
    """Primes p, q with q | p - 1 and two order-q bases mod p."""

    p: int
    q: int
    g1: int
    g2: int

    def validate(self) -> None:
        if not is_prime(self.p) or not is_prime(self.q):
            raise ValueError("p and q must be prime")
        if (self.p - 1) % self.q != 0:
            raise ValueError("q must divide p - 1")
        for g in (self.g1, self.g2):
            if not 1 < g < self.p:
                raise ValueError("bases must lie in (1, p)")
            if pow(g, self.q, self.p) != 1:
                raise ValueError("bases must have order dividing q")

    def in_subgroup(self, m: int) -> bool:
        return 0 < m < self.p and pow(m, self.q, self.p) == 1

    def subgroup_elements(self) -> list[int]:
        """All members of the order-q subgroup (desk-scale q only)."""
        members = {pow(self.g1, k, self.p) for k in range(self.q)}
        return sorted(members)


@dataclass(frozen=True)
class CcsPublicKey:
    params: CcsParams
    c: int
    d: int
    h: int


@dataclass(frozen=True)
class CcsSecretKey:
    params: CcsParams
    x1: int
    x2: int
    y1: int
    y2: int
    z: int


@dataclass(frozen=True)
class CcsKeyPair:
    public: CcsPublicKey
    secret: CcsSecretKey


@dataclass(frozen=True)
class CcsCiphertext:
    u1: int
    u2: int
    e: int
    v: int


def default_hash(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


def challenge(params: CcsParams, u1: int, u2: int, e: int, hash_fn: HashFn | None = None) -> int:
    """The scalar a = H(u1, u2, e) mod q over the canonical serialization."""
    hash_fn = hash_fn or default_hash
    data = render_file([format_int(u1), format_int(u2), format_int(e)]).encode()
    return int.from_bytes(hash_fn(data), "big") % params.q


def keygen(
    params: CcsParams,
    rng: random.Random | None = None,
    *,
    secrets: tuple[int, int, int, int, int] | None = None,
) -> CcsKeyPair:
    """Draw the five exponents (or take them verbatim) and derive c, d, h."""
    params.validate()
    if secrets is None:
        if rng is None:
            raise ValueError("provide either rng or explicit secrets")
        secrets = tuple(rng.randrange(params.q) for _ in range(5))  # type: ignore[assignment]
    x1, x2, y1, y2, z = (s % params.q for s in secrets)
    p = params.p
    c = pow(params.g1, x1, p) * pow(params.g2, x2, p) % p
    d = pow(params.g1, y1, p) * pow(params.g2, y2, p) % p
    h = pow(params.g1, z, p)
    return CcsKeyPair(
        public=CcsPublicKey(params, c, d, h),
        secret=CcsSecretKey(params, x1, x2, y1, y2, z),
    )


def encrypt(
    public: CcsPublicKey,
    m: int,
    r: int | None = None,
    *,
    rng: random.Random | None = None,
    hash_fn: HashFn | None = None,
) -> CcsCiphertext:
    params = public.params
    if not params.in_subgroup(m):
        raise ValueError("message must lie in the order-q subgroup")
    if r is None:
        if rng is None:
            raise ValueError("provide either r or rng")
        r = rng.randrange(params.q)
    r %= params.q
    p = params.p
    u1 = pow(params.g1, r, p)
    u2 = pow(params.g2, r, p)
    e = pow(public.h, r, p) * m % p
    alpha = challenge(params, u1, u2, e, hash_fn)
    v = pow(public.c, r, p) * pow(public.d, r * alpha, p) % p
    return CcsCiphertext(u1, u2, e, v)


def decrypt(
    secret: CcsSecretKey,
    ct: CcsCiphertext,
    *,
    hash_fn: HashFn | None = None,
) -> Union[int, Reject]:
    """Verify and strip; the reject branch is a value, not an exception."""
    params = secret.params
    p = params.p
    alpha = challenge(params, ct.u1, ct.u2, ct.e, hash_fn)
    check = (
        pow(ct.u1, (secret.x1 + alpha * secret.y1) % params.q, p)
        * pow(ct.u2, (secret.x2 + alpha * secret.y2) % params.q, p)
        % p
    )
    if ct.v % p != check:
        return REJECT
    return ct.e * pow(pow(ct.u1, secret.z, p), -1, p) % p


# -- wire formats (base-10 integers, one per line, fixed order) --------------


def public_to_lines(public: CcsPublicKey) -> list[str]:
    pr = public.params
    ints = (pr.p, pr.q, pr.g1, pr.g2, public.c, public.d, public.h)
    return ["ccs-public v1", *(format_int(x) for x in ints)]


def public_from_lines(body: list[str]) -> CcsPublicKey:
    from ..wire import parse_strict_int

    p, q, g1, g2, c, d, h = (parse_strict_int(t) for t in body)
    params = CcsParams(p, q, g1, g2)
    params.validate()
    return CcsPublicKey(params, c, d, h)


def secret_to_lines(secret: CcsSecretKey) -> list[str]:
    pr = secret.params
    ints = (pr.p, pr.q, pr.g1, pr.g2, secret.x1, secret.x2, secret.y1, secret.y2, secret.z)
    return ["ccs-secret v1", *(format_int(x) for x in ints)]


def secret_from_lines(body: list[str]) -> CcsSecretKey:
    from ..wire import parse_strict_int

    p, q, g1, g2, x1, x2, y1, y2, z = (parse_strict_int(t) for t in body)
    params = CcsParams(p, q, g1, g2)
    params.validate()
    return CcsSecretKey(params, x1, x2, y1, y2, z)


def ciphertext_to_lines(ct: CcsCiphertext) -> list[str]:
    return ["ccs-ciphertext v1", *(format_int(x) for x in (ct.u1, ct.u2, ct.e, ct.v))]


def ciphertext_from_lines(body: list[str]) -> CcsCiphertext:
    from ..wire import parse_strict_int

    u1, u2, e, v = (parse_strict_int(t) for t in body)
    return CcsCiphertext(u1, u2, e, v)


PUBLIC_HEADER = "ccs-public v1"
SECRET_HEADER = "ccs-secret v1"
CIPHERTEXT_HEADER = "ccs-ciphertext v1"
PUBLIC_BODY_LINES = 7
SECRET_BODY_LINES = 9
CIPHERTEXT_BODY_LINES = 4
