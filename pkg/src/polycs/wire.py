"""Exact wire grammar primitives shared by every serialized format.

All files are UTF-8, line-oriented, and bit-exact: integers are base-10
with no leading zeros (``0`` itself excepted), fields are separated by
single spaces, lines carry no trailing whitespace, and files end with one
final newline.  Parsers reject any deviation.
"""

from __future__ import annotations

import re
from typing import Sequence

from .errors import WireFormatError

_INT_RE = re.compile(r"0|-?[1-9][0-9]*")


def format_int(value: int) -> str:
    return str(value)


def parse_strict_int(token: str) -> int:
    """Parse a base-10 integer in canonical form (no '+', no leading zeros)."""
    if _INT_RE.fullmatch(token) is None:
        raise WireFormatError(f"malformed integer {token!r}")
    return int(token)


def render_file(lines: Sequence[str]) -> str:
    return "\n".join(lines) + "\n"


def split_file(text: str) -> list[str]:
    """Split file text into lines, enforcing the exact-newline discipline."""
    if not text.endswith("\n"):
        raise WireFormatError("file must end with a newline")
    lines = text.split("\n")
    if lines[-1] != "":
        raise WireFormatError("unexpected trailing content")
    lines = lines[:-1]
    for line in lines:
        if line == "" or line != line.rstrip():
            raise WireFormatError("blank line or trailing whitespace in file")
    return lines


def expect_lines(text: str, header: str, count: int) -> list[str]:
    """Parse a fixed-shape file: a header plus exactly ``count`` body lines."""
    lines = split_file(text)
    if not lines or lines[0] != header:
        raise WireFormatError(f"expected header {header!r}")
    if len(lines) != count + 1:
        raise WireFormatError(
            f"{header!r} file must have exactly {count} body lines, got {len(lines) - 1}"
        )
    return lines[1:]
