# Copyright 2026 Isaacveg
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0

from __future__ import annotations

import unittest

from graph_sampler.seeding import MASK64, derive_seed, make_rng, splitmix64


class SeedingTests(unittest.TestCase):
    def test_splitmix64_matches_reference_output(self) -> None:
        # First output of the reference splitmix64 generator seeded with 0.
        self.assertEqual(0xE220A8397B1DCDAF, splitmix64(0))

    def test_derived_seeds_are_stable_and_distinct(self) -> None:
        first = derive_seed(42, 100, 0)

        self.assertEqual(first, derive_seed(42, 100, 0))
        self.assertNotEqual(first, derive_seed(42, 100, 1))
        self.assertNotEqual(first, derive_seed(42, 0, 100))
        self.assertNotEqual(first, derive_seed(43, 100, 0))
        self.assertTrue(0 <= first <= MASK64)

    def test_derive_without_parts_returns_master(self) -> None:
        self.assertEqual(17, derive_seed(17))

    def test_same_seed_gives_same_stream(self) -> None:
        seed = derive_seed(0, 5)

        self.assertEqual(
            make_rng(seed).integers(0, 1000, size=8).tolist(),
            make_rng(seed).integers(0, 1000, size=8).tolist(),
        )


if __name__ == "__main__":
    unittest.main()
