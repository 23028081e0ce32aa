#!/usr/bin/env python3
"""Rebuild the worked C_2(2,7) example and print its parameters, bounds and a few codewords."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from pspread.code import (
    beutelspacher_lower_bound,
    build_code,
    cardinality,
    encode,
    is_maximal_partial_spread,
    min_distance,
    partial_spread_upper_bound,
    singleton_bound,
)


@dataclass
class ExampleConfig:
    q: int = 2
    k: int = 2
    n: int = 7
    p: tuple[int, ...] = (1, 1, 1)
    pp: tuple[int, ...] = (1, 1, 0, 1)
    show: int = 3


def main(cfg: ExampleConfig) -> None:
    code = build_code(cfg.q, cfg.k, cfg.n, list(cfg.p), list(cfg.pp))
    q, k, n = cfg.q, cfg.k, cfg.n
    d, pairs = min_distance(code.subspaces)
    print(f"code C_{q}({k},{n}) h={code.h} r={code.r}")
    print(f"cardinality {cardinality(code)} (enumerated {len(set(code.subspaces))})")
    print(f"min_distance {d} over {pairs} pairs")
    print(f"lower {beutelspacher_lower_bound(q, k, n)} upper {partial_spread_upper_bound(q, k, n)} "
          f"singleton {singleton_bound(q, k, n, 2 * k)}")
    print(f"maximal {is_maximal_partial_spread(code.subspaces)}")
    for i in range(cfg.show):
        cw = encode(code, i)
        print(f"\ncodeword {i} ({cw.kind}, block {cw.block})")
        for row in cw.generator:
            print("  " + " ".join(map(str, row)))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--show", type=int, default=3, help="number of codewords to print")
    main(ExampleConfig(show=ap.parse_args().show))
