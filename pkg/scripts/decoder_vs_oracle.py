#!/usr/bin/env python3
"""Compare the block pipeline, its interpolation variant and brute-force decoding on sampled H + E words."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from pspread.channel import erase, inject_error
from pspread.code import build_code
from pspread.decoder import Received, decode, decode_mindist_oracle
from pspread.subspace import distance, make_rng


@dataclass
class CompareConfig:
    q: int = 2
    k: int = 2
    n: int = 7
    samples: int = 1000
    seed: int = 0


def main(cfg: CompareConfig) -> int:
    code = build_code(cfg.q, cfg.k, cfg.n)
    rng = make_rng(cfg.seed)
    counts = {"cases": 0, "pipeline": 0, "interpolation": 0, "oracle": 0}
    t0 = time.perf_counter()
    while counts["cases"] < cfg.samples:
        index = int(rng.integers(len(code)))
        V = code.subspaces[index]
        a = int(rng.integers(1, code.k + 1))
        X = inject_error(erase(V, a, rng), int(rng.integers(0, a)), rng)
        if distance(V, X) >= code.k:
            continue
        x = Received.from_subspace(code, X)
        counts["cases"] += 1
        counts["pipeline"] += decode(code, x).index == index
        counts["interpolation"] += decode(code, x, "interpolation").index == index
        counts["oracle"] += decode_mindist_oracle(code, x).index == index
    dt = time.perf_counter() - t0
    print(f"C_{cfg.q}({cfg.k},{cfg.n}): " + ", ".join(f"{k} {v}" for k, v in counts.items()) + f" in {dt:.1f}s")
    return 0 if len(set(counts.values())) == 1 else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    raise SystemExit(main(CompareConfig(a.q, a.k, a.n, a.samples, a.seed)))
