"""Shared protocol plumbing: the reject outcome."""

from __future__ import annotations


class Reject:
    """Decryption verdict for a ciphertext that fails verification.

    A value, not an exception: the reject branch is part of the scheme's
    contract.  There is a single instance, ``REJECT``, and it is falsy.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "REJECT"


REJECT = Reject()
