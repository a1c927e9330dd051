"""Mappings between approximation spaces and what they preserve."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping as MappingABC

from covrough.approximation import lower, upper_neigh
from covrough.core import ApproxSpace, Subset, Universe, iter_bits
from covrough.errors import NotAHomomorphism, ParseError, UniverseMismatch


class HomMode(enum.Enum):
    # each member maps onto a member of the target covering
    STRICT = "strict"
    # each member maps onto a union of target members
    DEFINABLE = "definable"


@dataclass(frozen=True)
class Mapping:
    """A total function from ``source`` to ``target``, by element index."""

    source: Universe
    target: Universe
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(self.table)
        if len(table) != self.source.n:
            raise ValueError(f"mapping has {len(table)} entries for a source of {self.source.n}")
        for y in table:
            if not 0 <= y < self.target.n:
                raise ValueError(f"image index {y} outside the target universe")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_labels(cls, source: Universe, target: Universe, pairs: MappingABC[str, str]) -> Mapping:
        keys = set(pairs)
        if keys != set(source.names):
            missing = [x for x in source.names if x not in keys]
            extra = sorted(keys - set(source.names))
            raise ParseError(f"mapping keys must match the source universe (missing {missing}, extra {extra})")
        return cls(source, target, tuple(target.index(pairs[x]) for x in source.names))

    @classmethod
    def identity(cls, universe: Universe) -> Mapping:
        return cls(universe, universe, tuple(range(universe.n)))

    def __call__(self, label: str) -> str:
        return self.target.names[self.table[self.source.index(label)]]

    def image_mask(self, mask: int) -> int:
        out = 0
        for i in iter_bits(mask):
            out |= 1 << self.table[i]
        return out

    def preimage_mask(self, mask: int) -> int:
        out = 0
        for i, y in enumerate(self.table):
            if mask >> y & 1:
                out |= 1 << i
        return out

    def is_bijective(self) -> bool:
        return self.source.n == self.target.n and len(set(self.table)) == self.source.n

    def inverse(self) -> Mapping:
        if not self.is_bijective():
            raise ValueError("only a bijection has an inverse mapping")
        inv = [0] * self.target.n
        for i, y in enumerate(self.table):
            inv[y] = i
        return Mapping(self.target, self.source, tuple(inv))

    def then(self, g: Mapping) -> Mapping:
        """The composite ``g ∘ self``."""
        if g.source != self.target:
            raise UniverseMismatch("mappings do not compose")
        return Mapping(self.source, g.target, tuple(g.table[y] for y in self.table))

    def as_dict(self) -> dict[str, str]:
        return {x: self.target.names[y] for x, y in zip(self.source.names, self.table)}


def image(f: Mapping, x: Subset) -> Subset:
    if x.universe != f.source:
        raise UniverseMismatch("subset is not over the mapping's source")
    return Subset(f.target, f.image_mask(x.bits))


def preimage(f: Mapping, y: Subset) -> Subset:
    if y.universe != f.target:
        raise UniverseMismatch("subset is not over the mapping's target")
    return Subset(f.source, f.preimage_mask(y.bits))


def _check_spaces(f: Mapping, src: ApproxSpace, dst: ApproxSpace) -> None:
    if f.source != src.universe or f.target != dst.universe:
        raise UniverseMismatch("mapping universes do not match the spaces")


def is_definable(space: ApproxSpace, mask: int) -> bool:
    """Whether ``mask`` is a union of members (the empty union included)."""
    acc = 0
    for m in space.masks:
        if m & ~mask == 0:
            acc |= m
    return acc == mask


def is_homomorphism(f: Mapping, src: ApproxSpace, dst: ApproxSpace, mode: HomMode | str = HomMode.DEFINABLE) -> bool:
    _check_spaces(f, src, dst)
    mode = HomMode(mode)
    targets = set(dst.masks)
    for c in src.masks:
        img = f.image_mask(c)
        if mode is HomMode.STRICT:
            if img not in targets:
                return False
        elif not is_definable(dst, img):
            return False
    return True


def is_isomorphism(f: Mapping, src: ApproxSpace, dst: ApproxSpace, mode: HomMode | str = HomMode.DEFINABLE) -> bool:
    _check_spaces(f, src, dst)
    if not f.is_bijective():
        return False
    return is_homomorphism(f, src, dst, mode) and is_homomorphism(f.inverse(), dst, src, mode)


@dataclass(frozen=True)
class PreservationReport:
    f_lowerX: Subset
    lower_fX: Subset
    f_upperX: Subset
    upper_fX: Subset
    lower_inclusion_holds: bool
    lower_equal: bool
    upper_equal: bool
    isomorphism: bool
    # None unless the mapping is an isomorphism
    neighborhoods_transported: bool | None

    def as_dict(self) -> dict:
        out = {}
        for key, value in self.__dict__.items():
            out[key] = value.labels() if isinstance(value, Subset) else value
        return out


def preservation_report(f: Mapping, src: ApproxSpace, dst: ApproxSpace, x: Subset) -> PreservationReport:
    """Compare images of approximations with approximations of images."""
    if not is_homomorphism(f, src, dst, HomMode.DEFINABLE):
        raise NotAHomomorphism("mapping does not send members to definable sets")
    f_low = image(f, lower(src, x))
    low_f = lower(dst, image(f, x))
    f_up = image(f, upper_neigh(src, x))
    up_f = upper_neigh(dst, image(f, x))
    iso = is_isomorphism(f, src, dst, HomMode.DEFINABLE)
    transported = None
    if iso:
        transported = all(f.image_mask(src.nbhd[i]) == dst.nbhd[f.table[i]] for i in range(src.n))
    return PreservationReport(
        f_lowerX=f_low,
        lower_fX=low_f,
        f_upperX=f_up,
        upper_fX=up_f,
        lower_inclusion_holds=f_low <= low_f,
        lower_equal=f_low == low_f,
        upper_equal=f_up == up_f,
        isomorphism=iso,
        neighborhoods_transported=transported,
    )
