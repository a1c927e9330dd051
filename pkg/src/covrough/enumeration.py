"""Counting, enumerating and sampling coverings of small universes."""

from __future__ import annotations

import random
from math import comb
from typing import Iterator

from covrough import kernels
from covrough.core import Covering, Universe
from covrough.errors import OutOfSupportedRange, UniverseTooLargeForEnumeration

COUNT_MAX_N = 6
ENUM_MAX_N = 4
MAX_DRAWS = 12


def count_coverings(n: int) -> int:
    """Number of coverings of an n-element set, by alternating sum.

    Exact integer arithmetic throughout; the sum is checked to be even
    before halving.
    """
    if not 1 <= n <= COUNT_MAX_N:
        raise OutOfSupportedRange(f"count_coverings supports 1 <= n <= {COUNT_MAX_N}, got {n}")
    total = sum((-1) ** k * comb(n, k) * 2 ** (2 ** (n - k)) for k in range(n + 1))
    if total % 2:
        raise ArithmeticError(f"alternating sum {total} is odd")
    return total // 2


def family_to_masks(family: int) -> tuple[int, ...]:
    """Member masks selected by a family mask (bit j selects pattern j + 1)."""
    out = []
    j = 0
    while family:
        if family & 1:
            out.append(j + 1)
        family >>= 1
        j += 1
    return tuple(out)


class CoveringStream:
    """Every covering of ``universe`` exactly once, by ascending family mask.

    Iterating twice gives the same sequence; each iterator is independent.
    """

    def __init__(self, universe: Universe):
        if universe.n > ENUM_MAX_N:
            raise UniverseTooLargeForEnumeration(
                f"enumeration supports n <= {ENUM_MAX_N}, got {universe.n}"
            )
        self.universe = universe
        self._families = None

    def families(self) -> list[int]:
        if self._families is None:
            self._families = kernels.for_width(self.universe.n).covering_families(self.universe.n)
        return self._families

    def __len__(self) -> int:
        return len(self.families())

    def __iter__(self) -> Iterator[Covering]:
        for fam in self.families():
            yield Covering(self.universe, family_to_masks(fam))


def enumerate_coverings(universe: Universe) -> CoveringStream:
    return CoveringStream(universe)


def random_covering(universe: Universe, seed: int, density: float = 0.5) -> Covering:
    """A seeded random covering.

    Uses :class:`random.Random` (Mersenne Twister), whose output for an
    integer seed is fixed across platforms and Python versions. For n <= 4
    each nonempty subset is kept with probability ``density``; for larger n,
    up to ``min(2n, MAX_DRAWS)`` random subsets are drawn with each element
    present with probability ``density``. Elements left uncovered then each
    get a random set containing them, so a covering of n <= 8 elements has at
    most 20 members and stays within the default subcovering cap.
    """
    if not 0 < density <= 1:
        raise ValueError("density must be in (0, 1]")
    rng = random.Random(seed)
    n = universe.n
    full = universe.full_mask
    masks = []
    if n <= ENUM_MAX_N:
        masks = [s for s in range(1, full + 1) if rng.random() < density]
    else:
        for _ in range(rng.randint(1, min(2 * n, MAX_DRAWS))):
            s = sum(1 << i for i in range(n) if rng.random() < density)
            if s:
                masks.append(s)
    covered = 0
    for s in masks:
        covered |= s
    for i in range(n):
        if not covered >> i & 1:
            s = rng.getrandbits(n) | (1 << i)
            masks.append(s)
            covered |= s
    return Covering(universe, tuple(masks))


def set_partitions(n: int) -> Iterator[list[list[int]]]:
    """All partitions of ``range(n)`` as lists of blocks (restricted growth)."""
    def grow(i, blocks):
        if i == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from grow(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from grow(i + 1, blocks)
        blocks.pop()

    yield from grow(0, [])
