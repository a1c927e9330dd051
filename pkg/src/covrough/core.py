"""Universes, subsets, coverings and approximation spaces.

Elements are indices ``0..n-1``; labels only exist at the I/O boundary. A
subset is a Python int used as a bit vector (bit i = element i), so width is
unbounded and nothing is truncated for large universes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from covrough import kernels
from covrough.errors import (
    DuplicateName,
    EmptySet,
    EmptyUniverse,
    NotACovering,
    UniverseMismatch,
    UnknownLabel,
)


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Universe:
    """An ordered, finite, nonempty set of distinct labels."""

    names: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise EmptyUniverse("a universe needs at least one element")
        index = {}
        for i, name in enumerate(names):
            if not isinstance(name, str) or not name:
                raise ValueError(f"element labels must be nonempty strings, got {name!r}")
            if name in index:
                raise DuplicateName(f"duplicate element label {name!r}")
            index[name] = i
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", index)

    @classmethod
    def numbered(cls, n: int, prefix: str = "x") -> Universe:
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __len__(self) -> int:
        return self.n

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"{label!r} is not an element of the universe") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def subset(self, labels: Iterable[str] = ()) -> Subset:
        return Subset(self, self.mask_of(labels))

    def from_mask(self, mask: int) -> Subset:
        return Subset(self, mask)

    def full(self) -> Subset:
        return Subset(self, self.full_mask)

    def empty(self) -> Subset:
        return Subset(self, 0)

    def labels(self, mask: int) -> list[str]:
        return [self.names[i] for i in iter_bits(mask)]


def make_universe(names: Sequence[str]) -> Universe:
    return Universe(tuple(names))


@dataclass(frozen=True)
class Subset:
    """A subset of a universe stored as a bit vector."""

    universe: Universe
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe.n:
            raise ValueError(f"bit pattern {self.bits:#x} does not fit a universe of {self.universe.n}")

    def _same(self, other: Subset) -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.universe != self.universe:
            raise UniverseMismatch("subsets belong to different universes")

    def __or__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.universe, self.bits | other.bits)

    def __and__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.universe, self.bits & other.bits)

    def __sub__(self, other: Subset) -> Subset:
        self._same(other)
        return Subset(self.universe, self.bits & ~other.bits)

    def __invert__(self) -> Subset:
        return Subset(self.universe, self.universe.full_mask & ~self.bits)

    def __le__(self, other: Subset) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: Subset) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: Subset) -> bool:
        return other <= self

    def __gt__(self, other: Subset) -> bool:
        return other < self

    def __contains__(self, label: str) -> bool:
        return bool(self.bits >> self.universe.index(label) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels())

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def labels(self) -> list[str]:
        return self.universe.labels(self.bits)

    def __repr__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


def union(a: Subset, b: Subset) -> Subset:
    return a | b


def intersect(a: Subset, b: Subset) -> Subset:
    return a & b


def difference(a: Subset, b: Subset) -> Subset:
    return a - b


def complement(a: Subset) -> Subset:
    return ~a


def is_subset(a: Subset, b: Subset) -> bool:
    return a <= b


def is_empty(a: Subset) -> bool:
    return not a


def members(a: Subset) -> list[str]:
    return a.labels()


@dataclass(frozen=True)
class Covering:
    """A set of nonempty subsets whose union is the universe.

    ``masks`` is stored deduplicated and sorted ascending by integer value, so
    two coverings compare equal exactly when they have the same members.
    """

    universe: Universe
    masks: tuple[int, ...]

    def __post_init__(self):
        full = self.universe.full_mask
        canon = tuple(sorted(set(self.masks)))
        acc = 0
        for m in canon:
            if m == 0:
                raise EmptySet("covering members must be nonempty")
            if m < 0 or m & ~full:
                raise ValueError(f"member {m:#x} is not a subset of the universe")
            acc |= m
        if acc != full:
            missing = self.universe.labels(full & ~acc)
            raise NotACovering(f"members do not cover {missing}")
        object.__setattr__(self, "masks", canon)

    @classmethod
    def of(cls, universe: Universe, sets: Iterable[Subset]) -> Covering:
        masks = []
        for s in sets:
            if s.universe != universe:
                raise UniverseMismatch("member from a different universe")
            masks.append(s.bits)
        return cls(universe, tuple(masks))

    @property
    def members(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.universe, m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __contains__(self, s: Subset) -> bool:
        return s.universe == self.universe and s.bits in self.masks

    def as_lists(self) -> list[list[str]]:
        return [self.universe.labels(m) for m in self.masks]

    def is_partition(self) -> bool:
        seen = 0
        for m in self.masks:
            if seen & m:
                return False
            seen |= m
        return True

    def __repr__(self) -> str:
        inner = ", ".join("{" + ", ".join(s) + "}" for s in self.as_lists())
        return f"Covering({inner})"


def make_covering(universe: Universe, families: Iterable[Iterable[str]]) -> Covering:
    """Build a covering from label lists; duplicates merge, order is irrelevant."""
    masks = []
    for labels in families:
        mask = universe.mask_of(labels)
        if mask == 0:
            raise EmptySet("covering members must be nonempty")
        masks.append(mask)
    return Covering(universe, tuple(masks))


@dataclass(frozen=True)
class ApproxSpace:
    """A universe together with a covering of it.

    The neighborhood of every element is computed once at construction.
    """

    universe: Universe
    covering: Covering
    nbhd: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.covering.universe != self.universe:
            raise UniverseMismatch("covering is over a different universe")
        k = kernels.for_width(self.universe.n)
        object.__setattr__(self, "nbhd", tuple(k.neighborhoods(self.covering.masks, self.universe.n)))

    @classmethod
    def of(cls, covering: Covering) -> ApproxSpace:
        return cls(covering.universe, covering)

    @property
    def n(self) -> int:
        return self.universe.n

    @property
    def masks(self) -> tuple[int, ...]:
        return self.covering.masks
