"""
Seeded Monte Carlo runs over a q-ary symmetric channel.

Trial i draws all of its randomness from a Philox stream keyed by
(seed, i), so a run is bit-identical for any chunking or worker count.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Optional, Tuple

import numpy as np

from digit_ecc.analysis_oracles import SweepStats, classify, sample_pattern
from digit_ecc.code_model import CodeSpec
from digit_ecc.config import resolve_workers
from digit_ecc.errors import UsageError
from digit_ecc.families import Codec, codec_for

logger = logging.getLogger(__name__)

SEED_LIMIT = 2 ** 64


@dataclass(frozen=True)
class ChannelConfig:
    spec: CodeSpec
    epsilon: float
    trials: int
    seed: int
    # exactly this many symbols hit per trial; epsilon is then unused
    forced_weight: Optional[int] = None
    workers: Optional[int] = None

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= 1.0:
            raise UsageError(f"Symbol error rate must lie in [0, 1], got {self.epsilon}.")
        if self.trials < 1:
            raise UsageError(f"Trial count must be positive, got {self.trials}.")
        if not 0 <= self.seed < SEED_LIMIT:
            raise UsageError(f"Seed must be a 64-bit unsigned value, got {self.seed}.")
        if self.forced_weight is not None and not 1 <= self.forced_weight <= self.spec.n_block:
            raise UsageError(f"Forced weight must lie in [1, {self.spec.n_block}], got {self.forced_weight}.")


@dataclass
class SimulationReport:
    spec_label: str
    epsilon: float
    trials: int
    seed: int
    forced_weight: Optional[int]
    stats: SweepStats = field(default_factory=SweepStats)

    def to_record(self) -> str:
        mode = f"forced={self.forced_weight}" if self.forced_weight else f"epsilon={self.epsilon}"
        return f"spec={self.spec_label} seed={self.seed} {mode} {self.stats.to_record()}"

    def to_document(self) -> Dict[str, object]:
        return {
            "spec": self.spec_label,
            "epsilon": self.epsilon,
            "trials": self.trials,
            "seed": self.seed,
            "forced_weight": self.forced_weight,
            "counts": self.stats.to_document(),
            "rates": self.stats.rates(),
        }


def trial_generator(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(seed << 64) | trial))


def run_trial(codec: Codec, epsilon: float, forced_weight: Optional[int], seed: int, trial: int) -> str:
    rng = trial_generator(seed, trial)
    spec = codec.spec
    sent = codec.encode(codec.random_message(rng))
    if forced_weight is not None:
        pattern = sample_pattern(rng, spec.n_block, spec.base, forced_weight)
    else:
        hits = rng.random(spec.n_block) < epsilon
        # offsets in [1, p) turn each hit into a different symbol
        offsets = rng.integers(1, spec.base, size=spec.n_block)
        pattern = tuple((int(slot), int(offsets[slot])) for slot in np.flatnonzero(hits))
    received = sent.add_error(pattern)
    outcome, repaired = codec.decode(received)
    return classify(sent, received, outcome, repaired)


def _run_chunk(args: Tuple[CodeSpec, float, Optional[int], int, int, int]) -> SweepStats:
    spec, epsilon, forced_weight, seed, start, stop = args
    codec = codec_for(spec)
    stats = SweepStats()
    for trial in range(start, stop):
        stats.record(run_trial(codec, epsilon, forced_weight, seed, trial))
    return stats


def run(config: ChannelConfig) -> SimulationReport:
    pool_size = resolve_workers(config.workers)
    chunk = -(-config.trials // pool_size)
    tasks = [
        (config.spec, config.epsilon, config.forced_weight, config.seed, start, min(start + chunk, config.trials))
        for start in range(0, config.trials, chunk)
    ]
    logger.info(
        "Simulating %s: %d trials on %d worker(s)", config.spec.label, config.trials, pool_size
    )
    if pool_size > 1:
        with Pool(processes=pool_size) as pool:
            parts = pool.map(_run_chunk, tasks)
    else:
        parts = [_run_chunk(task) for task in tasks]
    stats = SweepStats()
    for part in parts:
        stats = stats.merge(part)
    report = SimulationReport(
        config.spec.label, config.epsilon, config.trials, config.seed, config.forced_weight, stats
    )
    logger.debug("Simulation %s", report.to_record())
    return report
