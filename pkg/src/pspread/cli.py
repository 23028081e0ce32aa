"""Command-line interface.

Exit codes: 0 on success, 1 on domain errors (invalid parameters, not
decodable, failed verification), 2 on I/O or format errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

import numpy as np

from . import channel
from .code import (
    beutelspacher_lower_bound,
    build_code,
    cardinality,
    encode,
    is_maximal_exhaustive,
    is_partial_spread,
    membership,
    min_distance,
    partial_spread_upper_bound,
    singleton_bound,
)
from .decoder import DECODED, SPREAD_METHODS, decode, decode_mindist_oracle
from .fileio import FormatError, format_code, format_matrix, parse_code, parse_matrix, parse_poly, read_text, write_text
from .ffcore import rank
from .subspace import make_rng, random_subspace_of, span

EXIT_OK, EXIT_DOMAIN, EXIT_IO = 0, 1, 2


class DomainError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def _load_code(path: str):
    return parse_code(read_text(path))


def cmd_construct(args) -> int:
    p = parse_poly(args.p) if args.p else None
    pp = parse_poly(args.pp) if args.pp else None
    try:
        code = build_code(args.q, args.k, args.n, p, pp)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    _emit(format_code(code), args.out)
    return EXIT_OK


def cmd_info(args) -> int:
    code = _load_code(args.code)
    q, k, n = code.q, code.k, code.n
    lines = [
        f"q {q}", f"k {k}", f"n {n}", f"h {code.h}", f"r {code.r}",
        f"cardinality {cardinality(code)}",
        f"min_distance {code.min_dist}",
        f"singleton {singleton_bound(q, k, n, code.min_dist)}",
        f"upper {partial_spread_upper_bound(q, k, n)}",
        f"lower {beutelspacher_lower_bound(q, k, n)}",
    ]
    print("\n".join(lines))
    return EXIT_OK


def cmd_encode(args) -> int:
    code = _load_code(args.code)
    try:
        cw = encode(code, args.index)
    except IndexError as exc:
        raise DomainError(str(exc)) from exc
    _emit(format_matrix(code.q, cw.generator), args.out)
    return EXIT_OK


def cmd_corrupt(args) -> int:
    q, W = parse_matrix(read_text(args.word))
    V = span(q, W)
    k, n = W.shape
    a, b = args.erase, args.error
    if not 1 <= a <= V.dim or a + b > n or b < 0:
        raise DomainError(f"need 1 <= erase <= {V.dim} and erase + error <= {n}")
    rng = make_rng(args.seed)
    U = channel.inject_error(channel.erase(V, a, rng), b, rng)
    if U.dim > k:
        U = random_subspace_of(U, k, rng)
    M = np.zeros((k, n), dtype=np.int64)
    M[: U.dim] = U.basis
    _emit(format_matrix(q, M), args.out)
    return EXIT_OK


def cmd_decode(args) -> int:
    code = _load_code(args.code)
    q, M = parse_matrix(read_text(args.received))
    if q != code.q:
        raise FormatError(f"received word is over F_{q}, code is over F_{code.q}")
    if args.oracle:
        outcome = decode_mindist_oracle(code, M)
    else:
        outcome = decode(code, M, method=args.method)
    print("\n".join(outcome.to_lines()))
    return EXIT_OK if outcome.status == DECODED else EXIT_DOMAIN


def cmd_verify(args) -> int:
    code = _load_code(args.code)
    checks = [c for c in ("enumerate", "min_distance", "maximality", "bounds") if getattr(args, c)]
    if not checks:
        checks = ["enumerate", "min_distance", "bounds"]
    failed = False
    q, k, n = code.q, code.k, code.n
    for check in checks:
        if check == "enumerate":
            subs = code.subspaces
            ok = (
                len(set(subs)) == cardinality(code)
                and all(rank(q, cw.generator) == k for cw in code.codewords)
                and all(membership(code, S) == i for i, S in enumerate(subs))
                and is_partial_spread(subs)
            )
            print(f"codewords {len(subs)}")
        elif check == "min_distance":
            d, pairs = min_distance(code.subspaces)
            ok = d == code.min_dist
            print(f"pairs {pairs}")
            print(f"min_distance {d}")
        elif check == "maximality":
            ok = is_maximal_exhaustive(code)
        else:
            card = cardinality(code)
            lower = beutelspacher_lower_bound(q, k, n)
            upper = partial_spread_upper_bound(q, k, n)
            single = singleton_bound(q, k, n, code.min_dist)
            ok = card == lower and card <= upper <= single
        print(f"{check} {'pass' if ok else 'FAIL'}")
        failed |= not ok
    return EXIT_DOMAIN if failed else EXIT_OK


def cmd_trials(args) -> int:
    code = _load_code(args.code)
    if args.trials < 1:
        raise DomainError("--trials must be at least 1")
    try:
        spec = channel.ChannelSpec(args.erase, args.error, args.seed, args.policy)
        stats = channel.run_trials(code, spec, args.trials, method=args.method)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    print("\n".join(stats.to_lines()))
    if stats.wrong_within_radius or (stats.guarantee_holds and stats.decoded_wrong):
        return EXIT_DOMAIN
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pspread", description="Partial spread subspace codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code and write its PSC v1 file")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", nargs="+", help="coefficients c_0 ... c_k of p")
    c.add_argument("--pp", nargs="+", help="coefficients c_0 ... c_(k+r) of p'")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("info", help="parameters and bounds of a code")
    c.add_argument("code")
    c.set_defaults(func=cmd_info)

    c = sub.add_parser("encode", help="write the generator of codeword INDEX")
    c.add_argument("code")
    c.add_argument("--index", type=int, required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_encode)

    c = sub.add_parser("corrupt", help="apply an erasure and an error space to a word")
    c.add_argument("word")
    c.add_argument("--erase", type=int, required=True, help="dimension kept after erasure")
    c.add_argument("--error", type=int, default=0, help="dimension of the error space")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out")
    c.set_defaults(func=cmd_corrupt)

    c = sub.add_parser("decode", help="decode a received k x n word")
    c.add_argument("code")
    c.add_argument("received")
    c.add_argument("--oracle", action="store_true", help="brute-force minimum-distance decoding")
    c.add_argument("--method", choices=SPREAD_METHODS, default="oracle",
                   help="spread subdecoder used by the pipeline")
    c.set_defaults(func=cmd_decode)

    c = sub.add_parser("verify", help="exhaustive checks of a code")
    c.add_argument("code")
    c.add_argument("--enumerate", action="store_true")
    c.add_argument("--min-distance", dest="min_distance", action="store_true")
    c.add_argument("--maximality", action="store_true")
    c.add_argument("--bounds", action="store_true")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("trials", help="Monte Carlo channel trials")
    c.add_argument("code")
    c.add_argument("--erase", type=int, required=True)
    c.add_argument("--error", type=int, default=0)
    c.add_argument("--trials", type=int, default=1000)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--policy", choices=channel.POLICIES, default="full")
    c.add_argument("--method", choices=SPREAD_METHODS, default="oracle")
    c.set_defaults(func=cmd_trials)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
