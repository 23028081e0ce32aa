"""Partial spread subspace codes for random network coding.

Construction, parameters and bounds (:mod:`pspread.code`), operator-channel
simulation (:mod:`pspread.channel`) and the block-localisation decoder
(:mod:`pspread.decoder`), on top of finite-field arithmetic in
:mod:`pspread.ffcore` and canonical subspaces in :mod:`pspread.subspace`.
"""

from .channel import ChannelSpec, TrialStats, correction_guaranteed, erase, inject_error, run_trials
from .code import (
    Code,
    Codeword,
    beutelspacher_lower_bound,
    build_code,
    cardinality,
    decode_index,
    encode,
    enumerate_codewords,
    is_maximal_exhaustive,
    is_partial_spread,
    membership,
    min_distance_exhaustive,
    partial_spread_upper_bound,
    singleton_bound,
)
from .decoder import DecodeOutcome, Received, decode, decode_mindist_oracle
from .subspace import Subspace, distance, gaussian_binomial, span

__version__ = "0.1.0"
