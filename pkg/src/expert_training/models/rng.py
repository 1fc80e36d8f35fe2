"""Per-task random streams.

Every consumer of randomness asks for a stream keyed by the run's master seed,
a stream purpose and an index. Streams are Philox (counter-based) generators
seeded through a SeedSequence of those keys, so task `t` sees the same numbers
whether or not tasks `0..t-1` were ever generated and in whatever order worker
threads pick tasks up.
"""

from enum import IntEnum

import numpy as np

_UINT64 = 1 << 64


class Stream(IntEnum):
    TRAIN_TASK = 0
    INIT = 1
    EVAL_TASK = 2
    HARDNESS_TASK = 3
    SAMPLE_DRAW = 4


def derive_task_rng(
    master_seed: int, task_index: int, stream: Stream = Stream.TRAIN_TASK
) -> np.random.Generator:
    key = [int(master_seed) % _UINT64, int(stream), int(task_index) % _UINT64]
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(key)))
