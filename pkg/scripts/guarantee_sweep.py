#!/usr/bin/env python3
"""Decode success over every (erasure, error) pair for both collection policies.

Rows where the minimum-distance guarantee holds must show rate 1.0 under
the full policy; truncating to k rows can break it.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from pspread.channel import ChannelSpec, run_trials
from pspread.code import build_code


@dataclass
class SweepConfig:
    q: int = 2
    k: int = 2
    n: int = 7
    trials: int = 1000
    seed: int = 0
    method: str = "oracle"


def sweep(cfg: SweepConfig):
    code = build_code(cfg.q, cfg.k, cfg.n)
    for policy in ("full", "truncate_to_k"):
        for e in range(1, code.k + 1):
            for t in range(0, code.k + 1):
                spec = ChannelSpec(e, t, cfg.seed, policy)
                yield policy, e, t, run_trials(code, spec, cfg.trials, cfg.method)


def main(cfg: SweepConfig) -> int:
    print(f"{'policy':<14}{'e':>3}{'t':>3}  guarantee  {'rate':>7}  correct  wrong  undecodable")
    bad = 0
    for policy, e, t, s in sweep(cfg):
        print(f"{policy:<14}{e:>3}{t:>3}  {str(s.guarantee_holds):<9}  {s.rate:7.3f}  {s.decoded_correct:>7}"
              f"  {s.decoded_wrong:>5}  {s.not_decodable:>11}")
        bad += s.guarantee_holds and s.rate != 1.0
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--method", choices=("oracle", "interpolation"), default="oracle")
    a = ap.parse_args()
    raise SystemExit(main(SweepConfig(a.q, a.k, a.n, a.trials, a.seed, a.method)))
