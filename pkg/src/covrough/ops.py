"""Operators on coverings and predicates comparing their approximations."""

from __future__ import annotations

import enum

from covrough.approximation import DEFAULT_CAP, lower_table, upper_table
from covrough.core import ApproxSpace, Covering, Universe
from covrough.errors import CoveringTooLarge, IndexOutOfRange, UniverseMismatch

EXHAUSTIVE_MAX_N = 12


class OperatorTag(enum.Enum):
    REDUCT = "reduct"
    INT = "int"
    NEI = "nei"
    JOIN = "join"
    MEET = "meet"
    DEFINABLE_CLOSURE = "closure"


def _member(covering: Covering, index: int) -> int:
    if not 0 <= index < len(covering.masks):
        raise IndexOutOfRange(f"member index {index} out of range for {len(covering.masks)} members")
    return covering.masks[index]


def _same_universe(c1: Covering, c2: Covering) -> Universe:
    if c1.universe != c2.universe:
        raise UniverseMismatch("coverings are over different universes")
    return c1.universe


def is_irreducible(covering: Covering, member_index: int) -> bool:
    """True iff the member is not a union of other members.

    A member is such a union exactly when it equals the union of all the
    other members it contains.
    """
    c = _member(covering, member_index)
    acc = 0
    for j, m in enumerate(covering.masks):
        if j != member_index and m & ~c == 0:
            acc |= m
    return acc != c


def reduct(covering: Covering) -> Covering:
    keep = [m for i, m in enumerate(covering.masks) if is_irreducible(covering, i)]
    return Covering(covering.universe, tuple(keep))


def is_non_intersectional(covering: Covering, member_index: int) -> bool:
    """True iff the member is not an intersection of other members.

    With at least one other member containing it, the member is such an
    intersection exactly when it equals the intersection of all of them.
    """
    c = _member(covering, member_index)
    acc = None
    for j, m in enumerate(covering.masks):
        if j != member_index and c & ~m == 0:
            acc = m if acc is None else acc & m
    return acc is None or acc != c


def int_op(covering: Covering) -> Covering:
    keep = [m for i, m in enumerate(covering.masks) if is_non_intersectional(covering, i)]
    return Covering(covering.universe, tuple(keep))


def nei_op(space: ApproxSpace | Covering) -> Covering:
    """The covering formed by all element neighborhoods."""
    if isinstance(space, Covering):
        space = ApproxSpace.of(space)
    return Covering(space.universe, space.nbhd)


def join_op(c1: Covering, c2: Covering) -> Covering:
    u = _same_universe(c1, c2)
    return Covering(u, c1.masks + c2.masks)


def meet_op(c1: Covering, c2: Covering) -> Covering:
    """Neighborhoods of every element, taken in the union of both families."""
    u = _same_universe(c1, c2)
    family = set(c1.masks) | set(c2.masks)
    out = []
    for i in range(u.n):
        acc = u.full_mask
        for m in family:
            if m >> i & 1:
                acc &= m
        out.append(acc)
    return Covering(u, tuple(out))


def definable_closure(covering: Covering, cap: int = DEFAULT_CAP) -> Covering:
    """All unions of nonempty sub-families of the covering."""
    if len(covering.masks) > cap:
        raise CoveringTooLarge(f"{len(covering.masks)} members exceeds cap {cap}")
    reached = set()
    for m in covering.masks:
        reached |= {r | m for r in reached}
        reached.add(m)
    return Covering(covering.universe, tuple(reached))


def apply(tag: OperatorTag | str, covering: Covering, other: Covering | None = None) -> Covering:
    tag = OperatorTag(tag)
    if tag is OperatorTag.REDUCT:
        return reduct(covering)
    if tag is OperatorTag.INT:
        return int_op(covering)
    if tag is OperatorTag.NEI:
        return nei_op(covering)
    if tag is OperatorTag.DEFINABLE_CLOSURE:
        return definable_closure(covering)
    if other is None:
        raise TypeError(f"{tag.value} needs two coverings")
    return join_op(covering, other) if tag is OperatorTag.JOIN else meet_op(covering, other)


def same_lower_operator(c1: Covering, c2: Covering) -> bool:
    """Equal lower approximations for every subset, decided by reduct equality."""
    _same_universe(c1, c2)
    return reduct(c1) == reduct(c2)


def same_upper_operator(c1: Covering, c2: Covering) -> bool:
    """Equal upper approximations for every subset, decided by neighborhoods."""
    _same_universe(c1, c2)
    return ApproxSpace.of(c1).nbhd == ApproxSpace.of(c2).nbhd


def _exhaustive_guard(u: Universe) -> None:
    if u.n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive comparison limited to n <= {EXHAUSTIVE_MAX_N}")


def same_lower_exhaustive(c1: Covering, c2: Covering) -> bool:
    """Reference check: compare lower approximations of all 2**n subsets."""
    u = _same_universe(c1, c2)
    _exhaustive_guard(u)
    return lower_table(ApproxSpace.of(c1)) == lower_table(ApproxSpace.of(c2))


def same_upper_exhaustive(c1: Covering, c2: Covering) -> bool:
    u = _same_universe(c1, c2)
    _exhaustive_guard(u)
    return upper_table(ApproxSpace.of(c1), "def3") == upper_table(ApproxSpace.of(c2), "def3")
