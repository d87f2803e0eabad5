"""Command-line frontend: keygen / encrypt / decrypt / exchange / attack /
growth / bench over files with bit-exact formats.

Every command is deterministic given its config and seed, and no command
leaves a partial output file behind on error (write-to-temp, atomic
rename).  Exit codes are a stable contract:

    0  success
    2  malformed platform/config/input (including missing files)
    3  keygen retry budget exhausted
    4  decryption rejected the ciphertext
    5  a search or state budget was exhausted (attack notfound, solver/BFS)
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import tempfile
from typing import Sequence

from .analysis import BENCH_OPS, ball_growth, bench
from .attacks import SearchBudget, conj_search, dlog_bruteforce, power_conj_search
from .errors import (
    NotFoundError,
    PolycsError,
    RetryExhaustedError,
    StateBudgetError,
    WireFormatError,
)
from .group import Element, sample_subgroup
from .platform import PlatformSpec, parse_platform
from .protocols import REJECT, ccs, kk06, ncs, pcke
from .protocols.ccs import CcsParams
from .wire import expect_lines, format_int, parse_strict_int, render_file, split_file
from .words import Word, format_word

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_RETRY_EXHAUSTED = 3
EXIT_REJECT = 4
EXIT_NOTFOUND = 5

SCHEMES = ("kk06", "pcke", "ccs", "ncs")


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".polycs-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8", newline="") as handle:
        return handle.read()


def _load_platform(path: str):
    return parse_platform(_read(path))


def _group_spec(platform, scheme: str) -> PlatformSpec:
    if scheme == "ccs" or isinstance(platform, CcsParams):
        raise WireFormatError(f"scheme {scheme!r} does not match this platform kind")
    return platform


def _ccs_params(platform, scheme: str) -> CcsParams:
    if scheme != "ccs" or not isinstance(platform, CcsParams):
        raise WireFormatError("ccs commands need a 'kind ccs' platform file")
    return platform


def _element_file(spec: PlatformSpec, text: str) -> Element:
    (line,) = split_file(text)
    return spec.group.element_from_wire(line)


# -- keygen -------------------------------------------------------------------


def _cmd_keygen(args: argparse.Namespace) -> int:
    platform = _load_platform(args.platform)
    rng = random.Random(args.seed)
    if args.scheme == "ccs":
        params = _ccs_params(platform, args.scheme)
        pair = ccs.keygen(params, rng)
        pub_lines = ccs.public_to_lines(pair.public)
        sec_lines = ccs.secret_to_lines(pair.secret)
    else:
        spec = _group_spec(platform, args.scheme)
        if args.scheme == "kk06":
            pair = kk06.keygen(spec, rng)
            pub_lines = kk06.public_to_lines(pair.public)
            sec_lines = kk06.secret_to_lines(pair)
        elif args.scheme == "pcke":
            pair = _pcke_keygen_sampled(spec, rng)
            pub_lines = pcke.public_to_lines(pair.public)
            sec_lines = pcke.secret_to_lines(pair.secret)
        else:
            mode = args.mode or ("direct-product" if spec.g1_gens else "checked")
            pair = ncs.keygen(spec, mode, rng=rng)
            pub_lines = ncs.public_to_lines(pair.public)
            sec_lines = ncs.secret_to_lines(pair.secret)
    _write_atomic(args.out + ".pub", render_file(pub_lines))
    _write_atomic(args.out + ".sec", render_file(sec_lines))
    return EXIT_OK


def _pcke_keygen_sampled(spec: PlatformSpec, rng: random.Random, *, retry_budget: int = 64):
    n = 1 + rng.randrange(4)
    for _ in range(retry_budget):
        g = sample_subgroup(spec.group.generators(), spec.word_length, rng)
        if g.is_identity:
            continue
        try:
            return pcke.keygen(spec, g, n, rng)
        except ValueError:
            continue
    raise RetryExhaustedError(f"no admissible pcke base found in {retry_budget} attempts")


# -- encrypt / decrypt ---------------------------------------------------------


def _cmd_encrypt(args: argparse.Namespace) -> int:
    platform = _load_platform(args.platform)
    rng = random.Random(args.seed)
    text = _read(args.infile)
    if args.scheme == "ccs":
        _ccs_params(platform, args.scheme)
        public = ccs.public_from_lines(
            expect_lines(_read(args.key), ccs.PUBLIC_HEADER, ccs.PUBLIC_BODY_LINES)
        )
        (m_line,) = split_file(text)
        ct = ccs.encrypt(public, parse_strict_int(m_line), rng=rng)
        out_lines = ccs.ciphertext_to_lines(ct)
    else:
        spec = _group_spec(platform, args.scheme)
        group = spec.group
        if args.scheme == "kk06":
            public = kk06.public_from_lines(
                group, expect_lines(_read(args.key), kk06.PUBLIC_HEADER, kk06.PUBLIC_BODY_LINES)
            )
            x = _element_file(spec, text)
            e, h = kk06.encrypt(public, x, spec, rng)
            out_lines = kk06.ciphertext_to_lines(e, h)
        elif args.scheme == "pcke":
            public = pcke.public_from_lines(
                group, expect_lines(_read(args.key), pcke.PUBLIC_HEADER, pcke.PUBLIC_BODY_LINES)
            )
            x_line, m_line = split_file(text)
            x = group.element_from_wire(x_line)
            m = parse_strict_int(m_line)
            e, h = pcke.encrypt(public, x, m, spec, rng)
            out_lines = pcke.ciphertext_to_lines(e, h)
        else:
            public = ncs.public_from_lines(
                group, expect_lines(_read(args.key), ncs.PUBLIC_HEADER, ncs.PUBLIC_BODY_LINES)
            )
            m_el = _element_file(spec, text)
            ct = ncs.encrypt(public, m_el, spec, rng)
            out_lines = ncs.ciphertext_to_lines(ct)
    _write_atomic(args.out, render_file(out_lines))
    return EXIT_OK


def _cmd_decrypt(args: argparse.Namespace) -> int:
    platform = _load_platform(args.platform)
    text = _read(args.infile)
    if args.scheme == "ccs":
        _ccs_params(platform, args.scheme)
        secret = ccs.secret_from_lines(
            expect_lines(_read(args.key), ccs.SECRET_HEADER, ccs.SECRET_BODY_LINES)
        )
        ct = ccs.ciphertext_from_lines(
            expect_lines(text, ccs.CIPHERTEXT_HEADER, ccs.CIPHERTEXT_BODY_LINES)
        )
        result = ccs.decrypt(secret, ct)
        if result is REJECT:
            print("reject")
            return EXIT_REJECT
        out_line = format_int(result)
    else:
        spec = _group_spec(platform, args.scheme)
        group = spec.group
        if args.scheme == "kk06":
            s = kk06.secret_from_lines(
                group, expect_lines(_read(args.key), kk06.SECRET_HEADER, kk06.SECRET_BODY_LINES)
            )
            e, h = kk06.ciphertext_from_lines(
                group, expect_lines(text, kk06.CIPHERTEXT_HEADER, kk06.CIPHERTEXT_BODY_LINES)
            )
            out_line = kk06.decrypt(s, e, h).to_wire()
        elif args.scheme == "pcke":
            secret = pcke.secret_from_lines(
                group, expect_lines(_read(args.key), pcke.SECRET_HEADER, pcke.SECRET_BODY_LINES)
            )
            e, h = pcke.ciphertext_from_lines(
                group, expect_lines(text, pcke.CIPHERTEXT_HEADER, pcke.CIPHERTEXT_BODY_LINES)
            )
            budget = SearchBudget(args.budget_len, args.budget_states)
            out_line = pcke.decrypt(secret, e, h, group.generators(), budget).to_wire()
        else:
            secret = ncs.secret_from_lines(
                group, expect_lines(_read(args.key), ncs.SECRET_HEADER, ncs.SECRET_BODY_LINES)
            )
            ct = ncs.ciphertext_from_lines(
                group, expect_lines(text, ncs.CIPHERTEXT_HEADER, ncs.CIPHERTEXT_BODY_LINES)
            )
            result = ncs.decrypt(secret, ct)
            if result is REJECT:
                print("reject")
                return EXIT_REJECT
            out_line = result.to_wire()
    print(out_line)
    if args.out:
        _write_atomic(args.out, render_file([out_line]))
    return EXIT_OK


# -- exchange ------------------------------------------------------------------


def _cmd_exchange(args: argparse.Namespace) -> int:
    platform = _load_platform(args.platform)
    spec = _group_spec(platform, args.scheme)
    rng = random.Random(args.seed)
    group = spec.group
    if args.scheme == "kk06":
        pair = kk06.keygen(spec, rng)
        x = sample_subgroup(group.generators(), spec.word_length, rng)
        e, h = kk06.encrypt(pair.public, x, spec, rng)
        recovered = kk06.decrypt(pair.secret, e, h)
        lines = [
            "kk06-exchange v1",
            pair.public.b.to_wire(),
            pair.public.c.to_wire(),
            e.to_wire(),
            h.to_wire(),
            x.to_wire(),
            recovered.to_wire(),
        ]
    elif args.scheme == "pcke":
        pair = _pcke_keygen_sampled(spec, rng)
        x = sample_subgroup(group.generators(), spec.word_length, rng)
        m = 1 + rng.randrange(4)
        e, h = pcke.encrypt(pair.public, x, m, spec, rng)
        budget = SearchBudget(args.budget_len, args.budget_states)
        recovered = pcke.decrypt(pair.secret, e, h, group.generators(), budget)
        lines = [
            "pcke-exchange v1",
            pair.public.v.to_wire(),
            pair.public.w.to_wire(),
            e.to_wire(),
            h.to_wire(),
            x.to_wire(),
            recovered.to_wire(),
        ]
    else:
        raise WireFormatError("exchange supports the kk06 and pcke schemes only")
    _write_atomic(args.out, render_file(lines))
    return EXIT_OK


# -- attack / growth / bench ---------------------------------------------------

CONJ_INSTANCE_HEADER = "conj-instance v1"
PCONJ_INSTANCE_HEADER = "pconj-instance v1"
DLOG_INSTANCE_HEADER = "dlog-instance v1"


def _cmd_attack(args: argparse.Namespace) -> int:
    platform = _load_platform(args.platform)
    text = _read(args.infile)
    if args.scheme == "ccs":
        params = _ccs_params(platform, args.scheme)
        g_line, y_line = expect_lines(text, DLOG_INSTANCE_HEADER, 2)
        g, y = parse_strict_int(g_line), parse_strict_int(y_line)
        k = dlog_bruteforce(g, y, params.p, params.q)
        if k is None:
            line = f"notfound states={params.q}"
        else:
            word = Word() if k == 0 else Word.of((0, k))
            line = f"found {k} {format_word(word)}"
        found = k is not None
    else:
        spec = _group_spec(platform, args.scheme)
        group = spec.group
        budget = SearchBudget(args.budget_len, args.budget_states, args.budget_power)
        if args.scheme == "pcke":
            v_line, w_line = expect_lines(text, PCONJ_INSTANCE_HEADER, 2)
            v = group.element_from_wire(v_line)
            w = group.element_from_wire(w_line)
            hit = power_conj_search(v, w, group.generators(), budget)
        else:
            b_line, c_line = expect_lines(text, CONJ_INSTANCE_HEADER, 2)
            b = group.element_from_wire(b_line)
            c = group.element_from_wire(c_line)
            hit = conj_search(b, c, group.generators(), budget)
        line = hit.report_line()
        found = hit.found
    print(line)
    _write_atomic(args.out, render_file([line]))
    return EXIT_OK if found else EXIT_NOTFOUND


def _cmd_growth(args: argparse.Namespace) -> int:
    platform = _load_platform(args.platform)
    if isinstance(platform, CcsParams):
        raise WireFormatError("growth needs a group platform (kind pc or mat)")
    group = platform.group
    report = ball_growth(group, group.generators(), args.radius, max_states=args.budget_states)
    _write_atomic(args.out, render_file(report.to_lines()))
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    platform = _load_platform(args.platform)
    if isinstance(platform, CcsParams):
        raise WireFormatError("bench needs a group platform (kind pc or mat)")
    report = bench(
        platform.group,
        args.op,
        args.trials,
        word_length=platform.word_length,
        seed=args.seed,
    )
    print(f"{report.op}: {report.ops_per_second:.1f} ops/s over {report.trials} trials")
    _write_atomic(args.out, render_file(report.to_lines()))
    return EXIT_OK


# -- argument plumbing ---------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycs",
        description="Group-based public-key protocols over polycyclic platforms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, scheme=False, seed=False, key=False, infile=False, out=True, budgets=False):
        p.add_argument("--platform", required=True, help="platform file path")
        if scheme:
            p.add_argument("--scheme", required=True, choices=SCHEMES)
        if seed:
            p.add_argument("--seed", type=int, default=0)
        if key:
            p.add_argument("--key", required=True, help="key file path")
        if infile:
            p.add_argument("--in", dest="infile", required=True, help="input file path")
        if out:
            p.add_argument("--out", required=True, help="output file path")
        if budgets:
            p.add_argument("--budget-len", dest="budget_len", type=int, default=8)
            p.add_argument("--budget-states", dest="budget_states", type=int, default=10**6)

    p = sub.add_parser("keygen", help="write <out>.pub and <out>.sec key files")
    common(p, scheme=True, seed=True)
    p.add_argument("--mode", choices=ncs.MODES, default=None, help="ncs base-pair mode")
    p.set_defaults(func=_cmd_keygen)

    p = sub.add_parser("encrypt", help="encrypt a message file under a public key")
    common(p, scheme=True, seed=True, key=True, infile=True)
    p.set_defaults(func=_cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a ciphertext file (prints result or 'reject')")
    common(p, scheme=True, key=True, infile=True, out=False, budgets=True)
    p.add_argument("--out", default=None, help="optional output file path")
    p.set_defaults(func=_cmd_decrypt)

    p = sub.add_parser("exchange", help="run a full key exchange, write a transcript")
    common(p, scheme=True, seed=True, budgets=True)
    p.set_defaults(func=_cmd_exchange)

    p = sub.add_parser("attack", help="run the search oracle for a scheme instance file")
    common(p, scheme=True, infile=True, budgets=True)
    p.add_argument("--budget-power", dest="budget_power", type=int, default=8)
    p.set_defaults(func=_cmd_attack)

    p = sub.add_parser("growth", help="measure Cayley ball growth of the platform group")
    common(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--budget-states", dest="budget_states", type=int, default=10**6)
    p.set_defaults(func=_cmd_growth)

    p = sub.add_parser("bench", help="time one group operation on a seeded input stream")
    common(p, seed=True)
    p.add_argument("--op", choices=BENCH_OPS, default="mul")
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RetryExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RETRY_EXHAUSTED
    except (NotFoundError, StateBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOTFOUND
    except (PolycsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
