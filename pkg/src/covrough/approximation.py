"""Neighborhoods and the lower/upper approximation operators.

The upper approximation has three independent routes which must agree:

* ``upper_def3``: neighborhoods of the elements of X outside the lower
  approximation, plus the lower approximation itself;
* ``upper_neigh``: union of the neighborhoods of all elements of X
  (the production route);
* ``upper_subcov``: intersection of the unions of every sub-family of the
  covering that covers X. Exponential in the number of members, kept for
  verification.
"""

from __future__ import annotations

from dataclasses import dataclass

from covrough import kernels
from covrough.core import ApproxSpace, Subset, iter_bits
from covrough.errors import CoveringTooLarge, OnlyTrivialSubcovering, UniverseMismatch

DEFAULT_CAP = 20


def _check(space: ApproxSpace, x: Subset) -> None:
    if not isinstance(x, Subset):
        raise TypeError(f"expected Subset, got {type(x).__name__}")
    if x.universe != space.universe:
        raise UniverseMismatch("subset is over a different universe than the space")


def _guard_cap(space: ApproxSpace, cap: int) -> None:
    if len(space.masks) > cap:
        raise CoveringTooLarge(
            f"{len(space.masks)} members exceeds the sub-family enumeration cap of {cap}"
        )


def neighborhood(space: ApproxSpace, x: str | int) -> Subset:
    """Intersection of all members containing ``x`` (a label or an index)."""
    i = space.universe.index(x) if isinstance(x, str) else x
    if not 0 <= i < space.n:
        raise IndexError(f"element index {i} out of range")
    return Subset(space.universe, space.nbhd[i])


def neighborhood_table(space: ApproxSpace) -> dict[str, Subset]:
    return {name: Subset(space.universe, space.nbhd[i]) for i, name in enumerate(space.universe.names)}


def lower(space: ApproxSpace, x: Subset) -> Subset:
    """Union of the members contained in ``x``; empty if none fits."""
    _check(space, x)
    k = kernels.for_width(space.n)
    return Subset(space.universe, k.lower(space.masks, x.bits))


def upper_def3(space: ApproxSpace, x: Subset) -> Subset:
    _check(space, x)
    k = kernels.for_width(space.n)
    return Subset(space.universe, k.upper_def3(space.masks, space.nbhd, x.bits))


def upper_neigh(space: ApproxSpace, x: Subset) -> Subset:
    _check(space, x)
    k = kernels.for_width(space.n)
    return Subset(space.universe, k.upper_neigh(space.nbhd, x.bits))


upper = upper_neigh


@dataclass(frozen=True)
class SubcoveringFamily:
    """All sub-families of ``base.covering`` whose union contains ``target``.

    Each sub-family is a bitmask over member indices of the covering (bit j
    selects ``base.masks[j]``), listed in ascending order.
    """

    base: ApproxSpace
    target: Subset
    members: tuple[int, ...]

    @property
    def whole(self) -> int:
        return (1 << len(self.base.masks)) - 1

    def union_of(self, family: int) -> int:
        acc = 0
        for j in iter_bits(family):
            acc |= self.base.masks[j]
        return acc

    def as_sets(self) -> list[list[Subset]]:
        return [[Subset(self.base.universe, self.base.masks[j]) for j in iter_bits(f)] for f in self.members]

    def __len__(self) -> int:
        return len(self.members)


def subcoverings(space: ApproxSpace, x: Subset, cap: int = DEFAULT_CAP) -> SubcoveringFamily:
    _check(space, x)
    _guard_cap(space, cap)
    masks = space.masks
    unions = kernels.pure.family_unions(masks)
    found = tuple(fam for fam, u in enumerate(unions) if x.bits & ~u == 0)
    return SubcoveringFamily(space, x, found)


def upper_subcov(space: ApproxSpace, x: Subset, cap: int = DEFAULT_CAP) -> Subset:
    _check(space, x)
    _guard_cap(space, cap)
    k = kernels.for_width(space.n, len(space.masks))
    return Subset(space.universe, k.upper_subcov(space.masks, x.bits, space.n))


def upper_subcov_nontrivial(space: ApproxSpace, x: Subset, cap: int = DEFAULT_CAP) -> Subset:
    """Like :func:`upper_subcov` but leaving the whole covering out."""
    fam = subcoverings(space, x, cap)
    rest = [f for f in fam.members if f != fam.whole]
    if not rest:
        raise OnlyTrivialSubcovering("the whole covering is the only sub-family covering the set")
    acc = space.universe.full_mask
    for f in rest:
        acc &= fam.union_of(f)
    return Subset(space.universe, acc)


# Table forms: entry s is the approximation of the subset with bit pattern s.
# Exhaustive checks run on these; they are limited to small universes.

TABLE_MAX_N = 20


def _table_guard(space: ApproxSpace) -> None:
    if space.n > TABLE_MAX_N:
        raise ValueError(f"approximation tables need n <= {TABLE_MAX_N}")


def lower_table(space: ApproxSpace) -> list[int]:
    _table_guard(space)
    return kernels.for_width(space.n).lower_table(space.masks, space.n)


def upper_table(space: ApproxSpace, method: str = "neigh", cap: int = DEFAULT_CAP) -> list[int]:
    _table_guard(space)
    if method == "neigh":
        return kernels.for_width(space.n).upper_neigh_table(space.nbhd, space.n)
    if method == "def3":
        return kernels.for_width(space.n).upper_def3_table(space.masks, space.nbhd, space.n)
    if method == "subcov":
        _guard_cap(space, cap)
        return kernels.for_width(space.n, len(space.masks)).upper_subcov_table(space.masks, space.n)
    raise ValueError(f"unknown upper approximation method {method!r}")


UPPER_METHODS = {"def3": upper_def3, "neigh": upper_neigh, "subcov": upper_subcov}


def pawlak(space: ApproxSpace, x: Subset) -> tuple[Subset, Subset]:
    """Classical lower/upper approximations for a partition covering.

    Works from equivalence classes over labels, with no bit tricks, so it can
    serve as an independent reference for :func:`lower` and :func:`upper`.
    """
    _check(space, x)
    if not space.covering.is_partition():
        raise ValueError("classical approximations need a partition")
    blocks = [frozenset(labels) for labels in space.covering.as_lists()]
    cls = {}
    for block in blocks:
        for label in block:
            cls[label] = block
    target = set(x.labels())
    inner, outer = set(), set()
    for label in space.universe.names:
        block = cls[label]
        if block <= target:
            inner |= block
        if block & target:
            outer |= block
    return space.universe.subset(inner), space.universe.subset(outer)
