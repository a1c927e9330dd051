import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covrough import (
    ApproxSpace,
    Covering,
    Universe,
    definable_closure,
    int_op,
    is_irreducible,
    is_non_intersectional,
    join_op,
    lower,
    make_universe,
    meet_op,
    nei_op,
    reduct,
    same_lower_operator,
    same_upper_operator,
    upper,
)
from covrough import ops
from covrough import worked as W
from covrough.enumeration import enumerate_coverings
from covrough.errors import CoveringTooLarge, UniverseMismatch

import oracles


def codes(covering):
    u = covering.universe
    return sorted("".join(x[1:] for x in u.labels(m)) for m in covering.masks)


def as_fam(covering):
    return [frozenset(covering.universe.labels(m)) for m in covering.masks]


def test_reduct_of_pair_families():
    assert codes(reduct(W.PAIRS_PLUS_TWO)) == sorted(W.PAIRS)
    assert reduct(W.PAIRS_PLUS_TWO) == reduct(W.PAIRS_PLUS_THREE)
    assert same_lower_operator(W.PAIRS_PLUS_TWO, W.PAIRS_PLUS_THREE)
    assert same_upper_operator(W.PAIRS_PLUS_TWO, W.PAIRS_PLUS_THREE)


def test_int_of_mixed_is_the_four_triples():
    assert codes(int_op(W.MIXED)) == ["123", "124", "134", "234"]


def test_reduct_and_int_do_not_commute_on_mixed():
    assert codes(reduct(W.MIXED)) == ["1", "124", "13", "134", "2", "234"]
    assert codes(reduct(int_op(W.MIXED))) == ["123", "124", "134", "234"]
    assert codes(int_op(reduct(W.MIXED))) == ["124", "13", "134", "2", "234"]
    assert same_upper_operator(reduct(int_op(W.MIXED)), int_op(reduct(W.MIXED)))


def test_irreducible_flags_match_oracle_on_mixed():
    fam = as_fam(W.MIXED)
    for j, m in enumerate(W.MIXED.masks):
        c = frozenset(W.MIXED.universe.labels(m))
        assert is_irreducible(W.MIXED, j) == (not oracles.is_union_of_others(fam, c))


def test_nei_of_three_member_example():
    assert nei_op(W.ABCD_SPACE).as_lists() == [["a"], ["b"], ["a", "c"], ["b", "d"]]
    assert nei_op(W.ABCD_SPACE.covering) == nei_op(W.ABCD_SPACE)


def test_closure_of_three_member_example_has_six_unions():
    closed = definable_closure(W.ABCD_SPACE.covering)
    assert len(closed) == 6
    assert sorted("".join(s) for s in closed.as_lists()) == ["ab", "abc", "abcd", "abd", "ac", "bd"]
    assert same_lower_operator(closed, W.ABCD_SPACE.covering)
    assert same_upper_operator(closed, W.ABCD_SPACE.covering)


def test_closure_cap():
    u = Universe.numbered(5)
    with pytest.raises(CoveringTooLarge):
        definable_closure(Covering(u, tuple(range(1, 32))), cap=20)


def test_join_and_meet_of_worked_pair():
    assert codes(join_op(W.JOIN_LEFT, W.JOIN_RIGHT)) == ["12", "123", "234", "24"]
    assert codes(meet_op(W.JOIN_LEFT, W.JOIN_RIGHT)) == ["12", "2", "23", "24"]
    assert join_op(W.JOIN_LEFT, W.JOIN_LEFT) == W.JOIN_LEFT


def test_downstream_approximations_of_c23():
    u = W.X4
    x = u.from_mask(W.digits(u, "23"))
    c23 = x
    spaces = {
        "c1": ApproxSpace.of(W.JOIN_LEFT),
        "c2": ApproxSpace.of(W.JOIN_RIGHT),
        "join": ApproxSpace.of(join_op(W.JOIN_LEFT, W.JOIN_RIGHT)),
        "meet": ApproxSpace.of(meet_op(W.JOIN_LEFT, W.JOIN_RIGHT)),
    }
    for k in ("c1", "c2", "join"):
        assert lower(spaces[k], x) == u.empty()
    assert lower(spaces["meet"], x) == c23
    for k in ("c2", "join", "meet"):
        assert upper(spaces[k], x) == c23
    assert upper(spaces["c1"], x) == u.from_mask(W.digits(u, "234"))


def test_universe_mismatch():
    other = Covering(make_universe("pqrs"), (15,))
    with pytest.raises(UniverseMismatch):
        join_op(W.JOIN_LEFT, other)


def test_apply_dispatch():
    c = W.MIXED
    assert ops.apply("reduct", c) == reduct(c)
    assert ops.apply("int", c) == int_op(c)
    assert ops.apply("nei", c) == nei_op(c)
    assert ops.apply("closure", c) == definable_closure(c)
    assert ops.apply("join", c, W.JOIN_LEFT) == join_op(c, W.JOIN_LEFT)
    with pytest.raises(TypeError):
        ops.apply("meet", c)


@st.composite
def coverings(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    u = Universe.numbered(n)
    full = u.full_mask
    masks = draw(st.lists(st.integers(1, full), min_size=1, max_size=7))
    missing = full
    for m in masks:
        missing &= ~m
    if missing:
        masks.append(missing)
    return Covering(u, tuple(masks))


@settings(max_examples=300)
@given(coverings())
def test_operators_against_oracle(c):
    u = c.universe
    universe = frozenset(u.names)
    fam = as_fam(c)
    want_red = {f for f in fam if not oracles.is_union_of_others(fam, f)}
    want_int = {f for f in fam if not oracles.is_intersection_of_others(fam, universe, f)}
    want_nei = {oracles.neighborhood(fam, universe, x) for x in universe}
    want_clo = {oracles.big_union(s) for s in oracles.subfamilies(fam) if s}
    assert set(as_fam(reduct(c))) == want_red
    assert set(as_fam(int_op(c))) == want_int
    assert set(as_fam(nei_op(c))) == want_nei
    assert set(as_fam(definable_closure(c))) == want_clo


@settings(max_examples=300)
@given(coverings())
def test_idempotence(c):
    for op in (reduct, int_op, nei_op, definable_closure):
        once = op(c)
        assert op(once) == once


@settings(max_examples=150)
@given(coverings(max_n=3), coverings(max_n=3))
def test_fast_equivalence_checks_match_exhaustive(a, b):
    if a.universe != b.universe:
        return
    assert same_lower_operator(a, b) == ops.same_lower_exhaustive(a, b)
    assert same_upper_operator(a, b) == ops.same_upper_exhaustive(a, b)
    j, m = join_op(a, b), meet_op(a, b)
    assert m == nei_op(j)
    assert ApproxSpace.of(m).nbhd == ApproxSpace.of(j).nbhd


def test_non_intersectional_needs_a_witness():
    # a member contained in no other member is always kept
    u = Universe.numbered(2)
    c = Covering(u, (1, 2))
    assert all(is_non_intersectional(c, j) for j in range(2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_equivalence_exhaustive_pairs(n):
    cs = list(enumerate_coverings(Universe.numbered(n)))
    for a, b in itertools.product(cs, repeat=2):
        assert same_lower_operator(a, b) == ops.same_lower_exhaustive(a, b)
        assert same_upper_operator(a, b) == ops.same_upper_exhaustive(a, b)
