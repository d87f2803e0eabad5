"""Growth measurement and operation benchmarks.

Ball growth is the empirical face of the key-space argument: a platform
whose Cayley balls keep expanding geometrically offers exponentially many
candidate secrets per word length, while a finite platform saturates at its
group order.  Growth exponents are estimated by tail ratios of consecutive
ball sizes; desk-scale radii are too small for a stable regression, so no
curve fitting is attempted.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cayley import BallWalk
from .errors import WireFormatError
from .group import Element, Group, random_reduced_word
from .pc import PcGroup
from .wire import format_int, parse_strict_int


@dataclass(frozen=True)
class GrowthReport:
    """Ball sizes B(r) for r = 0..max radius, with consecutive ratios."""

    radii: tuple[int, ...]
    ball_sizes: tuple[int, ...]
    ratio_estimates: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.radii) != len(self.ball_sizes):
            raise ValueError("radii and ball_sizes must have equal length")
        if len(self.ratio_estimates) != max(len(self.radii) - 1, 0):
            raise ValueError("need one ratio per consecutive radius pair")
        for a, b in zip(self.ball_sizes, self.ball_sizes[1:]):
            if b < a:
                raise ValueError("ball sizes must be non-decreasing")

    def to_lines(self) -> list[str]:
        """Stable table: ``r <radius> <ball_size> <ratio>`` (first ratio is ``-``)."""
        out = []
        for i, (r, size) in enumerate(zip(self.radii, self.ball_sizes)):
            if i == 0:
                ratio = "-"
            else:
                frac = self.ratio_estimates[i - 1]
                ratio = f"{frac.numerator}/{frac.denominator}"
            out.append(f"r {r} {size} {ratio}")
        return out

    @classmethod
    def from_lines(cls, lines: Sequence[str]) -> "GrowthReport":
        radii, sizes, ratios = [], [], []
        for i, line in enumerate(lines):
            tokens = line.split(" ")
            if len(tokens) != 4 or tokens[0] != "r":
                raise WireFormatError(f"malformed growth line {line!r}")
            radii.append(parse_strict_int(tokens[1]))
            sizes.append(parse_strict_int(tokens[2]))
            if i == 0:
                if tokens[3] != "-":
                    raise WireFormatError("first growth line must carry ratio '-'")
            else:
                num, sep, den = tokens[3].partition("/")
                if sep != "/":
                    raise WireFormatError(f"malformed ratio {tokens[3]!r}")
                ratios.append(Fraction(parse_strict_int(num), parse_strict_int(den)))
        return cls(tuple(radii), tuple(sizes), tuple(ratios))


def ball_growth(
    group: Group,
    gens: Sequence[Element],
    max_radius: int,
    *,
    max_states: int = 10**6,
) -> GrowthReport:
    """Measure B(r) for r = 0..max_radius by deduplicated BFS.

    Raises StateBudgetError if the ball outgrows ``max_states`` (memory
    guard).  Once a finite subgroup saturates, remaining radii repeat the
    final size.
    """
    if max_radius < 1:
        raise ValueError("max_radius must be >= 1")
    walk = BallWalk(group, gens, max_states=max_states)
    sizes = [1]
    for _ in range(max_radius):
        if not walk.exhausted:
            walk.expand()
        sizes.append(walk.states)
    ratios = tuple(Fraction(b, a) for a, b in zip(sizes, sizes[1:]))
    return GrowthReport(tuple(range(max_radius + 1)), tuple(sizes), ratios)


def free_ball_bound(num_gens: int, radius: int) -> int:
    """Ball size of the free group on num_gens generators: the hard ceiling."""
    total = 1
    for r in range(1, radius + 1):
        total += 2 * num_gens * (2 * num_gens - 1) ** (r - 1)
    return total


# -- throughput benchmarks ---------------------------------------------------

BENCH_OPS = ("mul", "inv", "conj", "collect")


@dataclass(frozen=True)
class BenchReport:
    """Timed throughput plus a digest pinning the deterministic input stream."""

    op: str
    trials: int
    word_length: int
    seed: int
    stream_digest: str
    elapsed_seconds: float
    ops_per_second: float

    def to_lines(self) -> list[str]:
        """Deterministic fields only; timings are reported separately."""
        return [
            "bench v1",
            f"op {self.op}",
            f"trials {format_int(self.trials)}",
            f"wordlen {format_int(self.word_length)}",
            f"seed {format_int(self.seed)}",
            f"stream {self.stream_digest}",
        ]


def bench(
    group: Group,
    op_name: str,
    trials: int,
    *,
    word_length: int = 16,
    seed: int = 0,
) -> BenchReport:
    """Time one operation over a seeded input stream.

    The stream (and its digest) is a pure function of (group, op, trials,
    word_length, seed); wall-clock figures naturally vary run to run.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if op_name not in BENCH_OPS:
        raise ValueError(f"unknown op {op_name!r}; choose from {BENCH_OPS}")
    if op_name == "collect" and not isinstance(group, PcGroup):
        raise ValueError("collect benchmark needs a polycyclic presentation")

    rng = random.Random(seed)
    digest = hashlib.sha256()
    if op_name == "collect":
        words = [random_reduced_word(group.ngens, word_length, rng) for _ in range(trials)]
        for w in words:
            digest.update(str(w).encode())
        start = time.perf_counter()
        for w in words:
            group.collect(w)
        elapsed = time.perf_counter() - start
    else:
        def draw() -> Element:
            w = random_reduced_word(group.ngens, word_length, rng)
            return group.evaluate(w)

        if op_name in ("mul", "conj"):
            pairs = [(draw(), draw()) for _ in range(trials)]
            for a, b in pairs:
                digest.update(repr((a.payload, b.payload)).encode())
            start = time.perf_counter()
            if op_name == "mul":
                for a, b in pairs:
                    _ = a * b
            else:
                for a, b in pairs:
                    _ = a.conj(b)
            elapsed = time.perf_counter() - start
        else:
            singles = [draw() for _ in range(trials)]
            for a in singles:
                digest.update(repr(a.payload).encode())
            start = time.perf_counter()
            for a in singles:
                _ = a.inverse()
            elapsed = time.perf_counter() - start

    return BenchReport(
        op=op_name,
        trials=trials,
        word_length=word_length,
        seed=seed,
        stream_digest=digest.hexdigest(),
        elapsed_seconds=elapsed,
        ops_per_second=(trials / elapsed) if elapsed > 0 else float("inf"),
    )
