"""Operator-channel simulation: erasures, error spaces and decode trials."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import Code, cardinality
from .decoder import DECODED, Received, decode
from .subspace import Subspace, distance, random_disjoint_extension, random_subspace_of

POLICIES = ("full", "truncate_to_k")


def erase(V: Subspace, e: int, rng: np.random.Generator) -> Subspace:
    """Replace V by a random e-dimensional subspace of itself."""
    if not 1 <= e <= V.dim:
        raise ValueError(f"erasure dimension {e} outside 1..{V.dim}")
    return random_subspace_of(V, e, rng)


def inject_error(H: Subspace, t_err: int, rng: np.random.Generator) -> Subspace:
    """``H ⊕ E`` with a random t_err-dimensional E meeting H trivially."""
    return random_disjoint_extension(H, t_err, rng)


def correction_guaranteed(e: int, t_err: int, ell: int, d: int) -> bool:
    """Minimum-distance decoding is guaranteed when 2(t + ell - e) < d."""
    return 2 * (t_err + ell - e) < d


@dataclass(frozen=True)
class ChannelSpec:
    e: int
    t_err: int
    seed: int = 0
    policy: str = "full"

    def __post_init__(self):
        if self.e < 1 or self.t_err < 0:
            raise ValueError(f"need e >= 1 and t_err >= 0, got e={self.e}, t_err={self.t_err}")
        if self.policy not in POLICIES:
            raise ValueError(f"unknown collection policy {self.policy!r}; choose from {POLICIES}")

    def check(self, code: Code) -> None:
        if self.e > code.k:
            raise ValueError(f"erasure dimension {self.e} exceeds k={code.k}")
        if self.e + self.t_err > code.n:
            raise ValueError(f"e + t_err = {self.e + self.t_err} exceeds n={code.n}")


@dataclass
class TrialStats:
    trials: int = 0
    decoded_correct: int = 0
    decoded_wrong: int = 0
    not_decodable: int = 0
    guarantee_holds: bool = False
    within_radius: int = 0
    wrong_within_radius: int = 0

    @property
    def rate(self) -> float:
        return self.decoded_correct / self.trials if self.trials else 0.0

    def to_lines(self) -> list[str]:
        return [
            f"trials {self.trials}",
            f"correct {self.decoded_correct}",
            f"wrong {self.decoded_wrong}",
            f"undecodable {self.not_decodable}",
            f"guarantee {'true' if self.guarantee_holds else 'false'}",
            f"rate {self.rate}",
            f"within_radius {self.within_radius}",
            f"wrong_within_radius {self.wrong_within_radius}",
        ]


def trial_rng(seed: int, i: int) -> np.random.Generator:
    """Independent, replayable stream for trial ``i``."""
    return np.random.default_rng([seed, i])


def transmit(code: Code, spec: ChannelSpec, rng: np.random.Generator) -> tuple[int, Subspace]:
    """Send a uniformly chosen codeword through the channel; returns (index, received space)."""
    index = int(rng.integers(cardinality(code)))
    V = code.subspaces[index]
    U = inject_error(erase(V, spec.e, rng), spec.t_err, rng)
    if spec.policy == "truncate_to_k" and U.dim > code.k:
        U = random_subspace_of(U, code.k, rng)
    return index, U


def run_trials(code: Code, spec: ChannelSpec, N: int, method: str = "oracle") -> TrialStats:
    if N < 1:
        raise ValueError("need at least one trial")
    spec.check(code)
    # truncation discards part of the received space, so the guarantee only covers the full view
    full_view = spec.policy == "full" or spec.e + spec.t_err <= code.k
    stats = TrialStats(guarantee_holds=full_view and correction_guaranteed(spec.e, spec.t_err, code.max_dim, code.min_dist))
    for i in range(N):
        index, X = transmit(code, spec, trial_rng(spec.seed, i))
        outcome = decode(code, Received.from_subspace(code, X), method)
        close = distance(code.subspaces[index], X) < code.k
        stats.trials += 1
        stats.within_radius += close
        if outcome.status != DECODED:
            stats.not_decodable += 1
        elif outcome.index == index:
            stats.decoded_correct += 1
        else:
            stats.decoded_wrong += 1
            stats.wrong_within_radius += close
    return stats
