import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from covrough import (
    ApproxSpace,
    Covering,
    Universe,
    complement,
    difference,
    intersect,
    is_empty,
    is_subset,
    make_covering,
    make_universe,
    members,
    union,
)
from covrough.errors import (
    DuplicateName,
    EmptySet,
    EmptyUniverse,
    NotACovering,
    UniverseMismatch,
    UnknownLabel,
)


def test_make_universe():
    u = make_universe(["a", "b", "c", "d"])
    assert u.n == 4
    assert [u.index(x) for x in "abcd"] == [0, 1, 2, 3]
    assert make_universe(["a"]).n == 1


@pytest.mark.parametrize("names, exc", [([], EmptyUniverse), (["x", "x"], DuplicateName)])
def test_make_universe_rejects(names, exc):
    with pytest.raises(exc):
        make_universe(names)


def test_make_covering_example():
    u = make_universe("abcd")
    c = make_covering(u, [["a", "b"], ["a", "c"], ["b", "d"]])
    assert len(c) == 3
    assert c.as_lists() == [["a", "b"], ["a", "c"], ["b", "d"]]


def test_make_covering_whole_set_and_union_check():
    assert len(make_covering(make_universe("ab"), [["a", "b"]])) == 1
    u = make_universe("abc")
    assert len(make_covering(u, [["a", "b"], ["b", "c"]])) == 2
    with pytest.raises(NotACovering):
        make_covering(u, [["a", "b"]])


def test_make_covering_errors():
    u = make_universe("ab")
    with pytest.raises(EmptySet):
        make_covering(u, [[], ["a", "b"]])
    with pytest.raises(UnknownLabel):
        make_covering(u, [["a", "z"]])


def test_canonical_order_is_by_integer_value():
    u = make_universe("abcd")
    c = make_covering(u, [["b", "d"], ["a", "c"], ["a", "b"], ["a", "b"]])
    assert c.masks == (0b0011, 0b0101, 0b1010)


@given(st.permutations([["a", "b"], ["a", "c"], ["b", "d"], ["d"]]), st.lists(st.integers(0, 3), max_size=4))
def test_canonicalization_ignores_order_and_duplicates(perm, dups):
    u = make_universe("abcd")
    base = make_covering(u, perm)
    noisy = make_covering(u, list(perm) + [perm[i] for i in dups])
    assert base == noisy
    assert hash(base) == hash(noisy)


@given(st.lists(st.lists(st.sampled_from("abcdz"), max_size=4), max_size=6))
def test_constructor_totality(families):
    u = make_universe("abcd")
    try:
        c = make_covering(u, families)
    except (EmptySet, NotACovering, UnknownLabel):
        return
    acc = 0
    for m in c.masks:
        assert m != 0
        acc |= m
    assert acc == u.full_mask
    assert list(c.masks) == sorted(set(c.masks))


def test_subset_algebra_examples():
    u = make_universe("abcd")
    ab, ac = u.subset("ab"), u.subset("ac")
    assert intersect(ab, ac) == u.subset("a")
    assert difference(ab, ab) == u.empty()
    assert complement(u.subset("ad")) == u.subset("bc")
    assert union(ab, ac).labels() == ["a", "b", "c"]
    assert is_subset(u.subset("a"), ab) and not is_subset(ab, ac)
    assert is_empty(u.empty()) and not is_empty(ab)
    assert members(ac) == ["a", "c"]


def test_subset_universe_mismatch():
    a = make_universe("ab").subset("a")
    b = make_universe("abc").subset("a")
    with pytest.raises(UniverseMismatch):
        a | b
    with pytest.raises(UniverseMismatch):
        is_subset(a, b)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_boolean_lattice_laws_exhaustive(n):
    u = Universe.numbered(n)
    subs = [u.from_mask(m) for m in range(1 << n)]
    for a, b in itertools.product(subs, repeat=2):
        assert a | b == b | a and a & b == b & a
        assert a | (a & b) == a and a & (a | b) == a
        assert ~(a | b) == ~a & ~b and ~(a & b) == ~a | ~b
        assert (a <= b) == (a | b == b)
    for a, b, c in itertools.product(subs[: 1 << min(n, 3)], repeat=3):
        assert (a | b) | c == a | (b | c) and (a & b) & c == a & (b & c)


def test_wide_universe_is_not_truncated():
    u = Universe.numbered(100)
    last = u.subset(["x100"])
    assert last.bits == 1 << 99
    c = Covering(u, (u.full_mask ^ last.bits, last.bits | 1))
    space = ApproxSpace.of(c)
    assert space.nbhd[99] == last.bits | 1
    assert (~last).labels()[-1] == "x99"


def test_space_rejects_foreign_covering():
    c = make_covering(make_universe("ab"), [["a", "b"]])
    with pytest.raises(UniverseMismatch):
        ApproxSpace(make_universe("abc"), c)
