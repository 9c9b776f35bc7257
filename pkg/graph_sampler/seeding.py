# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

"""Sub-seed derivation so that any experiment cell can be replayed alone.

A derived seed is a chain of splitmix64 finalizers over the master seed and
each integer part: ``s = mix(s ^ mix(part))``. Random streams are numpy PCG64
generators, whose output does not depend on the platform.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

# Stream tag for the Louvain node ordering inside an experiment cell.
LOUVAIN_STREAM = 0x4C4F5556


def splitmix64(state: int) -> int:
    z = (state + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master: int, *parts: int) -> int:
    state = int(master) & MASK64
    for part in parts:
        state = splitmix64(state ^ splitmix64(int(part) & MASK64))
    return state


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed) & MASK64))
