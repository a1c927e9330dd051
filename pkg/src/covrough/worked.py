"""Small hand-checkable spaces used by the law catalog, tests and docs.

Labels ``x1..x4`` with sets written by their digits: ``sets(u, "12", "234")``
is ``[{x1, x2}, {x2, x3, x4}]``.
"""

from itertools import combinations

from covrough.core import ApproxSpace, Covering, Universe, make_covering
from covrough.morphisms import Mapping

ABCD = Universe(("a", "b", "c", "d"))
ABC = Universe(("a", "b", "c"))
X4 = Universe.numbered(4)
X5 = Universe.numbered(5)
Y4 = Universe.numbered(4, prefix="y")


def digits(universe: Universe, code: str) -> int:
    return universe.mask_of(f"{universe.names[0][0]}{d}" for d in code)


def sets(universe: Universe, *codes: str) -> Covering:
    return Covering(universe, tuple(digits(universe, c) for c in codes))


PAIRS = tuple("".join(p) for p in combinations("1234", 2))

# {a,b}, {a,c}, {b,d} over {a,b,c,d}; neighborhoods {a}, {b}, {a,c}, {b,d}
ABCD_SPACE = ApproxSpace.of(make_covering(ABCD, [["a", "b"], ["a", "c"], ["b", "d"]]))

# all six pairs plus two triples, and plus three triples: same reduct
PAIRS_PLUS_TWO = sets(X4, *PAIRS, "123", "124")
PAIRS_PLUS_THREE = sets(X4, *PAIRS, "123", "134", "234")

# singletons, pairs and triples mixed so reduct and int do not commute
MIXED = sets(X4, "1", "2", "12", "13", "123", "124", "134", "234")

# two coverings whose meet contains the singleton {x2}
JOIN_LEFT = sets(X4, "12", "24", "234")
JOIN_RIGHT = sets(X4, "123", "234")

# the three pairs of {a,b,c}: every neighborhood is a singleton
TRIANGLE = make_covering(ABC, [["a", "b"], ["b", "c"], ["a", "c"]])

# a many-to-one map with no inclusion between image-of-upper and upper-of-image
COLLAPSE_SRC = ApproxSpace.of(sets(X5, "12", "23", "45"))
COLLAPSE_DST = ApproxSpace.of(sets(Y4, "12", "3", "4"))
COLLAPSE_MAP = Mapping.from_labels(X5, Y4, {"x1": "y1", "x2": "y2", "x3": "y1", "x4": "y3", "x5": "y4"})
