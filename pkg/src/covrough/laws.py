"""Executable catalog of laws about neighborhood-based covering approximations.

Each law pairs an instance generator with a predicate. The predicate looks at
one instance (a tuple of coverings, optionally a mapping) and returns ``None``
when nothing noteworthy happens, or a short description otherwise:

* for ordinary laws the description explains a violation;
* for expected-failure laws (the statement is that something does NOT hold in
  general) it describes the witness found.

A report's witness is the serialized instance plus that description, so
:func:`replay` can rerun the predicate on exactly that instance.

Exhaustive scopes: all coverings for n <= min(max_n, 4), all ordered pairs of
coverings for n <= min(max_n, 3). When ``max_n >= 4`` seeded random coverings
at n = 5..sample_max_n are added (pairs from n = 4).
"""

from __future__ import annotations

import enum
import itertools
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from covrough import approximation as ap
from covrough import kernels
from covrough import ops
from covrough.core import ApproxSpace, Covering, Universe
from covrough.enumeration import (
    ENUM_MAX_N,
    count_coverings,
    enumerate_coverings,
    random_covering,
    set_partitions,
)
from covrough.errors import ScopeTooLarge, UnknownLaw
from covrough.io import covering_to_dict
from covrough.morphisms import HomMode, Mapping, image, is_homomorphism, is_isomorphism, preservation_report
from covrough import worked as W


class LawId(str, enum.Enum):
    THM1 = "THM1"
    COR1 = "COR1"
    PROP1 = "PROP1"
    PROP1_CONVERSE_FAILS = "PROP1_CONVERSE_FAILS"
    COR2 = "COR2"
    COR3 = "COR3"
    COR4 = "COR4"
    COR5 = "COR5"
    LEM1_EQ_DEF3 = "LEM1_EQ_DEF3"
    LEM2 = "LEM2"
    LEM3 = "LEM3"
    LEM4 = "LEM4"
    THM2 = "THM2"
    THM3 = "THM3"
    THM4 = "THM4"
    THM5 = "THM5"
    THM6 = "THM6"
    THM7 = "THM7"
    PROP2 = "PROP2"
    EX1 = "EX1"
    EX2 = "EX2"
    EX3 = "EX3"
    EX4 = "EX4"
    EX5 = "EX5"
    EX6 = "EX6"
    RMK2_STRICTNESS = "RMK2_STRICTNESS"
    RMK3 = "RMK3"
    RMK4_STRICTNESS = "RMK4_STRICTNESS"
    RMK5 = "RMK5"
    COUNT_A003465 = "COUNT_A003465"
    SANDWICH = "SANDWICH"
    MONOTONE = "MONOTONE"
    PARTITION_PAWLAK = "PARTITION_PAWLAK"
    IDEMPOTENCE = "IDEMPOTENCE"


class Outcome(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    EXPECTED_FAILURE_FOUND = "expected-failure-found"


MAX_SAMPLE_N = 8


@dataclass(frozen=True)
class ScopeSpec:
    max_n: int = 4
    seeds: int = 200
    sample_max_n: int = 6
    iso_samples: int = 500

    def __post_init__(self):
        if not 1 <= self.max_n <= ENUM_MAX_N:
            raise ScopeTooLarge(f"max_n must be in 1..{ENUM_MAX_N}, got {self.max_n}")
        if self.sample_max_n > MAX_SAMPLE_N:
            raise ScopeTooLarge(f"sample_max_n must be <= {MAX_SAMPLE_N}, got {self.sample_max_n}")
        if self.seeds < 0 or self.iso_samples < 0:
            raise ValueError("sample counts must be nonnegative")

    @property
    def pair_n(self) -> int:
        return min(self.max_n, 3)

    def sampled_sizes(self, start: int) -> range:
        if self.max_n < ENUM_MAX_N:
            return range(0)
        return range(start, self.sample_max_n + 1)


@dataclass
class LawReport:
    law: LawId
    statement: str
    scope: str
    instances_checked: int
    outcome: Outcome
    witness: dict | None = None
    elapsed: float = 0.0
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.outcome is not Outcome.FAIL

    def as_dict(self) -> dict:
        return {
            "law": self.law.value,
            "statement": self.statement,
            "scope": self.scope,
            "instances_checked": self.instances_checked,
            "outcome": self.outcome.value,
            "passed": self.passed,
            "witness": self.witness,
            "elapsed": round(self.elapsed, 6),
            "note": self.note,
        }


@dataclass(frozen=True)
class Instance:
    coverings: tuple[Covering, ...] = ()
    mapping: Mapping | None = None

    def encode(self) -> dict:
        out = {"coverings": [covering_to_dict(c) for c in self.coverings]}
        if self.mapping is not None:
            out["map"] = {
                "source": list(self.mapping.source.names),
                "target": list(self.mapping.target.names),
                "map": self.mapping.as_dict(),
            }
        return out

    @classmethod
    def decode(cls, data: dict) -> Instance:
        covs = []
        for c in data.get("coverings", []):
            u = Universe(tuple(c["universe"]))
            covs.append(Covering(u, tuple(u.mask_of(m) for m in c["covering"])))
        f = None
        if data.get("map"):
            m = data["map"]
            f = Mapping.from_labels(Universe(tuple(m["source"])), Universe(tuple(m["target"])), m["map"])
        return cls(tuple(covs), f)


@dataclass(frozen=True)
class Law:
    id: LawId
    statement: str
    predicate: Callable[[Instance], str | None]
    instances: Callable[[ScopeSpec], Iterable[Instance]]
    scope: Callable[[ScopeSpec], str]
    expect_witness: bool = False
    note: str | None = None


# ---------------------------------------------------------------------------
# cached per-covering facts (cleared after every law run)


@lru_cache(maxsize=None)
def _space(c: Covering) -> ApproxSpace:
    return ApproxSpace.of(c)


@lru_cache(maxsize=None)
def _low(c: Covering) -> tuple[int, ...]:
    return tuple(ap.lower_table(_space(c)))


@lru_cache(maxsize=None)
def _up(c: Covering, method: str = "neigh") -> tuple[int, ...]:
    return tuple(ap.upper_table(_space(c), method))


def _clear_caches() -> None:
    _space.cache_clear()
    _low.cache_clear()
    _up.cache_clear()


def _fmt(u: Universe, mask: int) -> str:
    return "{" + ", ".join(u.labels(mask)) + "}"


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


# ---------------------------------------------------------------------------
# instance generators


def _seed(n: int, i: int, salt: int = 0) -> int:
    return (salt * 1_000_003 + n) * 1_000_033 + i


@lru_cache(maxsize=None)
def _all_coverings(n: int) -> tuple[Covering, ...]:
    return tuple(enumerate_coverings(Universe.numbered(n)))


def _exhaustive(limit: int) -> Iterator[Covering]:
    for n in range(1, limit + 1):
        yield from _all_coverings(n)


def _sampled(scope: ScopeSpec, start: int, salt: int) -> Iterator[Covering]:
    for n in scope.sampled_sizes(start):
        u = Universe.numbered(n)
        for i in range(scope.seeds):
            yield random_covering(u, _seed(n, i, salt))


def singles(scope: ScopeSpec, limit: int = ENUM_MAX_N) -> Iterator[Instance]:
    for c in _exhaustive(min(scope.max_n, limit)):
        yield Instance((c,))
    for c in _sampled(scope, 5, salt=1):
        yield Instance((c,))


def _singles_scope(limit: int = ENUM_MAX_N) -> Callable[[ScopeSpec], str]:
    def describe(scope: ScopeSpec) -> str:
        text = f"all coverings n<={min(scope.max_n, limit)} x all subsets"
        sizes = scope.sampled_sizes(5)
        if sizes:
            text += f"; {scope.seeds} seeded coverings per n in {sizes.start}..{sizes.stop - 1}"
        return text

    return describe


def pairs(scope: ScopeSpec) -> Iterator[Instance]:
    for n in range(1, scope.pair_n + 1):
        covs = _all_coverings(n)
        for a in covs:
            for b in covs:
                yield Instance((a, b))
    for n in scope.sampled_sizes(scope.pair_n + 1):
        u = Universe.numbered(n)
        for i in range(scope.seeds):
            a = random_covering(u, _seed(n, i, 2))
            yield Instance((a, random_covering(u, _seed(n, i, 3))))
            yield Instance((a, ops.reduct(a)))
            yield Instance((a, ops.int_op(a)))
            yield Instance((a, ops.nei_op(a)))
            yield Instance((a, ops.definable_closure(a)))


def _pairs_scope(scope: ScopeSpec) -> str:
    text = f"all ordered covering pairs n<={scope.pair_n} x all subsets"
    sizes = scope.sampled_sizes(scope.pair_n + 1)
    if sizes:
        text += (
            f"; {scope.seeds} seeded pairs per n in {sizes.start}..{sizes.stop - 1},"
            " each also against its reduct/int/nei/closure"
        )
    return text


def _fixed(*instances: Instance) -> Callable[[ScopeSpec], Iterable[Instance]]:
    return lambda scope: instances


def _fixed_scope(text: str) -> Callable[[ScopeSpec], str]:
    return lambda scope: text


# ---------------------------------------------------------------------------
# single-covering predicates


def _three_routes(inst: Instance) -> str | None:
    (c,) = inst.coverings
    d, nb, sc = _up(c, "def3"), _up(c, "neigh"), _up(c, "subcov")
    for s in range(len(d)):
        if not d[s] == nb[s] == sc[s]:
            u = c.universe
            return f"X={_fmt(u, s)}: def3={_fmt(u, d[s])} neigh={_fmt(u, nb[s])} subcov={_fmt(u, sc[s])}"
    return None


def _nontrivial_subcov(inst: Instance) -> str | None:
    (c,) = inst.coverings
    sp = _space(c)
    proper = kernels.for_width(sp.n, len(sp.masks)).upper_subcov_proper_table(sp.masks, sp.n)
    up = _up(c)
    for s, val in enumerate(proper):
        if val is not None and val != up[s]:
            u = c.universe
            return f"X={_fmt(u, s)}: without whole covering {_fmt(u, val)} vs upper {_fmt(u, up[s])}"
    return None


def _def3_is_neigh(inst: Instance) -> str | None:
    (c,) = inst.coverings
    d, nb = _up(c, "def3"), _up(c, "neigh")
    for s in range(len(d)):
        if d[s] != nb[s]:
            return f"X={_fmt(c.universe, s)}: {_fmt(c.universe, d[s])} != {_fmt(c.universe, nb[s])}"
    return None


def _int_keeps_neighborhoods(inst: Instance) -> str | None:
    (c,) = inst.coverings
    a, b = _space(c).nbhd, _space(ops.int_op(c)).nbhd
    for i in range(len(a)):
        if a[i] != b[i]:
            u = c.universe
            return f"N({u.names[i]}) = {_fmt(u, a[i])} but {_fmt(u, b[i])} after int"
    return None


def _shrinks_lower_keeps_upper(transform, name: str, bigger_after: bool):
    def check(inst: Instance) -> str | None:
        (c,) = inst.coverings
        t = transform(c)
        lc, lt, uc, ut = _low(c), _low(t), _up(c), _up(t)
        u = c.universe
        for s in range(len(lc)):
            ok = _sub(lc[s], lt[s]) if bigger_after else _sub(lt[s], lc[s])
            if not ok:
                return f"X={_fmt(u, s)}: lower {_fmt(u, lc[s])} vs {_fmt(u, lt[s])} under {name}"
            if uc[s] != ut[s]:
                return f"X={_fmt(u, s)}: upper {_fmt(u, uc[s])} vs {_fmt(u, ut[s])} under {name}"
        return None

    return check


def _preserves_both(transform, name: str):
    def check(inst: Instance) -> str | None:
        (c,) = inst.coverings
        t = transform(c)
        u = c.universe
        if _low(c) != _low(t) or _up(c) != _up(t):
            s = next(s for s in range(1 << u.n) if _low(c)[s] != _low(t)[s] or _up(c)[s] != _up(t)[s])
            return f"X={_fmt(u, s)}: approximations change under {name}"
        return None

    return check


def _closure_check(inst: Instance) -> str | None:
    (c,) = inst.coverings
    cu = ops.definable_closure(c)
    if ops.reduct(cu) != ops.reduct(c):
        return f"reduct of closure {cu} differs from reduct {ops.reduct(c)}"
    return _preserves_both(lambda _: cu, "closure")(inst)


def _sandwich(inst: Instance) -> str | None:
    (c,) = inst.coverings
    lo, up = _low(c), _up(c)
    for s in range(len(lo)):
        if not (_sub(lo[s], s) and _sub(s, up[s])):
            u = c.universe
            return f"X={_fmt(u, s)}: lower {_fmt(u, lo[s])}, upper {_fmt(u, up[s])}"
    return None


def _monotone(inst: Instance) -> str | None:
    (c,) = inst.coverings
    lo, up = _low(c), _up(c)
    n = c.universe.n
    # inclusion chains decompose into single-element steps
    for s in range(len(lo)):
        for i in range(n):
            t = s | (1 << i)
            if t != s and not (_sub(lo[s], lo[t]) and _sub(up[s], up[t])):
                u = c.universe
                return f"X={_fmt(u, s)} within Y={_fmt(u, t)} but approximations not nested"
    return None


def _idempotence(inst: Instance) -> str | None:
    (c,) = inst.coverings
    r, t, nb = ops.reduct(c), ops.int_op(c), ops.nei_op(c)
    if ops.reduct(r) != r:
        return f"reduct not idempotent on {c}"
    if not all(ops.is_irreducible(r, i) for i in range(len(r))):
        return f"reduct {r} still has a reducible member"
    if ops.int_op(t) != t:
        return f"int not idempotent on {c}"
    if ops.nei_op(nb) != nb:
        return f"nei not idempotent on {c}: {nb} -> {ops.nei_op(nb)}"
    return None


def _partition_instances(scope: ScopeSpec) -> Iterator[Instance]:
    hi = max(min(scope.max_n, ENUM_MAX_N), scope.sample_max_n if scope.max_n >= ENUM_MAX_N else 0)
    for n in range(1, hi + 1):
        u = Universe.numbered(n)
        for blocks in set_partitions(n):
            masks = tuple(sum(1 << i for i in b) for b in blocks)
            yield Instance((Covering(u, masks),))


def _partition_scope(scope: ScopeSpec) -> str:
    hi = max(min(scope.max_n, ENUM_MAX_N), scope.sample_max_n if scope.max_n >= ENUM_MAX_N else 0)
    return f"all set partitions n<={hi} x all subsets"


def _pawlak(inst: Instance) -> str | None:
    (c,) = inst.coverings
    sp = _space(c)
    u = c.universe
    for s in range(1 << u.n):
        x = u.from_mask(s)
        lo, hi = ap.pawlak(sp, x)
        if ap.lower(sp, x) != lo or ap.upper_neigh(sp, x) != hi:
            return f"X={x}: classical ({lo}, {hi}) vs ({ap.lower(sp, x)}, {ap.upper_neigh(sp, x)})"
    return None


# ---------------------------------------------------------------------------
# pairwise predicates


def _same_lower_tables(a: Covering, b: Covering) -> bool:
    return _low(a) == _low(b)


def _same_upper_tables(a: Covering, b: Covering) -> bool:
    return _up(a) == _up(b)


def _lower_dominates(inst: Instance) -> str | None:
    a, b = inst.coverings
    if _same_lower_tables(a, b) and not _same_upper_tables(a, b):
        return "equal lower operators but different upper operators"
    return None


def _converse_witness(inst: Instance) -> str | None:
    a, b = inst.coverings
    if _same_upper_tables(a, b) and not _same_lower_tables(a, b):
        s = next(s for s in range(1 << a.universe.n) if _low(a)[s] != _low(b)[s])
        u = a.universe
        return f"equal upper operators; at X={_fmt(u, s)} lowers are {_fmt(u, _low(a)[s])} and {_fmt(u, _low(b)[s])}"
    return None


def _converse_instances(scope: ScopeSpec) -> Iterator[Instance]:
    for n in range(1, 4):
        covs = _all_coverings(n)
        for a in covs:
            for b in covs:
                yield Instance((a, b))


def _members_lower_agree(inst: Instance) -> str | None:
    a, b = inst.coverings
    la, lb = _low(a), _low(b)
    if all(la[m] == lb[m] for m in set(a.masks) | set(b.masks)):
        if la != lb or not _same_upper_tables(a, b):
            return "members agree on lower approximations yet the operators differ"
    return None


def _lower_iff_reduct(inst: Instance) -> str | None:
    a, b = inst.coverings
    by_tables = _same_lower_tables(a, b)
    by_reduct = ops.reduct(a) == ops.reduct(b)
    if by_tables != by_reduct:
        return f"lower operators equal: {by_tables}; reducts equal: {by_reduct}"
    if ops.same_lower_operator(a, b) != by_tables or ops.same_upper_operator(a, b) != _same_upper_tables(a, b):
        return "certificate predicates disagree with exhaustive comparison"
    return None


def _members_upper_agree(inst: Instance) -> str | None:
    a, b = inst.coverings
    ua, ub = _up(a), _up(b)
    if all(ua[m] == ub[m] for m in set(a.masks) | set(b.masks)) and ua != ub:
        return "members agree on upper approximations yet the operators differ"
    return None


def _refines_both(combine, name: str):
    def check(inst: Instance) -> str | None:
        a, b = inst.coverings
        j = combine(a, b)
        lj, uj = _low(j), _up(j)
        u = a.universe
        for side in (a, b):
            ls, us = _low(side), _up(side)
            for s in range(len(lj)):
                if not _sub(ls[s], lj[s]):
                    return f"X={_fmt(u, s)}: lower under {name} misses part of {_fmt(u, ls[s])}"
                if not _sub(uj[s], us[s]):
                    return f"X={_fmt(u, s)}: upper under {name} {_fmt(u, uj[s])} exceeds {_fmt(u, us[s])}"
        return None

    return check


def _meet_is_nei_of_join(inst: Instance) -> str | None:
    a, b = inst.coverings
    m, nj = ops.meet_op(a, b), ops.nei_op(ops.join_op(a, b))
    if m != nj:
        return f"meet {m} vs nei(join) {nj}"
    return None


# ---------------------------------------------------------------------------
# worked examples


def _ex1(inst: Instance) -> str | None:
    sp = _space(inst.coverings[0])
    u = sp.universe
    want = {"a": "a", "b": "b", "c": "ac", "d": "bd"}
    for x, labels in want.items():
        if ap.neighborhood(sp, x) != u.subset(labels):
            return f"N({x}) = {ap.neighborhood(sp, x)}"
    x = u.subset("ad")
    if ap.lower(sp, x) != u.empty():
        return f"lower = {ap.lower(sp, x)}"
    for name, route in ap.UPPER_METHODS.items():
        if route(sp, x) != u.subset("abd"):
            return f"upper via {name} = {route(sp, x)}"
    return None


def _ex2(inst: Instance) -> str | None:
    sp = _space(inst.coverings[0])
    u = sp.universe
    x = u.subset("ad")
    idx = {m: j for j, m in enumerate(sp.masks)}
    c1, c2, c3 = (1 << idx[u.mask_of(s)] for s in ("ab", "ac", "bd"))
    want = {c1 | c2 | c3, c1 | c3, c2 | c3}
    fam = ap.subcoverings(sp, x)
    if set(fam.members) != want or len(fam.members) != 3:
        return f"subcoverings {fam.as_sets()}"
    abd = u.subset("abd")
    if ap.upper_subcov(sp, x) != abd or ap.upper_subcov_nontrivial(sp, x) != abd or ap.upper_neigh(sp, x) != abd:
        return "upper via sub-families differs from {a, b, d}"
    return None


def _ex3(inst: Instance) -> str | None:
    a, b = inst.coverings
    pairs_only = W.sets(W.X4, *W.PAIRS)
    r1, r2 = ops.reduct(a), ops.reduct(b)
    if r1 != pairs_only or r2 != pairs_only:
        return f"reducts {r1} and {r2}"
    if not (ops.same_lower_operator(a, b) and ops.same_lower_exhaustive(a, b) and ops.same_upper_exhaustive(a, b)):
        return "approximation operators differ"
    return None


def _ex4(inst: Instance) -> str | None:
    (c,) = inst.coverings
    want = W.sets(W.X4, "123", "124", "134", "234")
    if ops.int_op(c) != want:
        return f"int = {ops.int_op(c)}"
    for j, m in enumerate(c.masks):
        expect = bin(m).count("1") == 3
        if ops.is_non_intersectional(c, j) != expect:
            return f"{_fmt(W.X4, m)} classified wrongly"
    return None


EX5_NOTE = (
    "the printed member list of the meet omits {x2}; the literal neighborhood "
    "construction yields {x2}, {x1, x2}, {x2, x3}, {x2, x4}; downstream values agree"
)


def _ex5(inst: Instance) -> str | None:
    a, b = inst.coverings
    j, m = ops.join_op(a, b), ops.meet_op(a, b)
    if j != W.sets(W.X4, "12", "24", "123", "234"):
        return f"join = {j}"
    if m != W.sets(W.X4, "2", "12", "23", "24"):
        return f"meet = {m}"
    x = W.X4.from_mask(W.digits(W.X4, "23"))
    c23, c234 = x, W.X4.from_mask(W.digits(W.X4, "234"))
    sp = {k: ApproxSpace.of(v) for k, v in (("a", a), ("b", b), ("j", j), ("m", m))}
    checks = [
        (ap.lower(sp["a"], x), W.X4.empty()),
        (ap.lower(sp["b"], x), W.X4.empty()),
        (ap.lower(sp["j"], x), W.X4.empty()),
        (ap.lower(sp["m"], x), c23),
        (ap.upper(sp["b"], x), c23),
        (ap.upper(sp["j"], x), c23),
        (ap.upper(sp["m"], x), c23),
        (ap.upper(sp["a"], x), c234),
    ]
    for got, want in checks:
        if got != want:
            return f"got {got}, expected {want}"
    return None


def _ex6(inst: Instance) -> str | None:
    for c in _exhaustive(3):
        u = c.universe
        idf = Mapping.identity(u)
        sp, red, nei, itn = (ApproxSpace.of(x) for x in (c, ops.reduct(c), ops.nei_op(c), ops.int_op(c)))
        if not (is_homomorphism(idf, sp, red) and is_homomorphism(idf, red, sp)):
            return f"identity vs reduct fails on {c}"
        if not is_isomorphism(idf, sp, red):
            return f"identity to reduct not an isomorphism on {c}"
        if not is_homomorphism(idf, sp, nei):
            return f"identity to nei fails on {c}"
        if not is_homomorphism(idf, itn, sp):
            return f"identity from int fails on {c}"
    tri = ApproxSpace.of(W.TRIANGLE)
    if is_homomorphism(Mapping.identity(W.ABC), ApproxSpace.of(ops.nei_op(W.TRIANGLE)), tri):
        return "identity from nei back to the triangle covering should fail"
    mixed = ApproxSpace.of(W.MIXED)
    if is_homomorphism(Mapping.identity(W.X4), mixed, ApproxSpace.of(ops.int_op(W.MIXED))):
        return "identity into int of the mixed covering should fail"
    return None


RMK2_NOTE = (
    "direct computation gives lower {x1} under the covering and the empty set "
    "under int; the printed values have the two subscripts swapped"
)


def _rmk2(inst: Instance) -> str | None:
    (c,) = inst.coverings
    x = c.universe.subset(["x1"])
    lc = ap.lower(ApproxSpace.of(c), x)
    li = ap.lower(ApproxSpace.of(ops.int_op(c)), x)
    if li < lc and not li and lc == x:
        return f"X={x}: lower under int {li} strictly inside lower {lc}"
    return None


def _rmk3(inst: Instance) -> str | None:
    (c,) = inst.coverings
    ri, ir = ops.reduct(ops.int_op(c)), ops.int_op(ops.reduct(c))
    if ri != W.sets(W.X4, "123", "124", "134", "234"):
        return None
    if ir != W.sets(W.X4, "2", "13", "124", "134", "234"):
        return None
    if ri == ir or not (ops.same_upper_exhaustive(ri, ir) and ops.same_upper_exhaustive(c, ri)):
        return None
    return f"reduct after int {ri} differs from int after reduct {ir}; upper operators agree"


def _rmk4(inst: Instance) -> str | None:
    (c,) = inst.coverings
    u = c.universe
    nei = ops.nei_op(c)
    if nei != Covering(u, tuple(1 << i for i in range(u.n))):
        return None
    x = u.subset("a")
    lc, ln = ap.lower(ApproxSpace.of(c), x), ap.lower(ApproxSpace.of(nei), x)
    if lc == u.empty() and ln == x:
        return f"X={x}: lower {lc} strictly inside lower under nei {ln}"
    return None


def _rmk5(inst: Instance) -> str | None:
    (a, b), f = inst.coverings, inst.mapping
    src, dst = _space(a), _space(b)
    if not is_homomorphism(f, src, dst, HomMode.DEFINABLE) or is_homomorphism(f, src, dst, HomMode.STRICT):
        return None
    x = a.universe.subset(["x2", "x4"])
    rep = preservation_report(f, src, dst, x)
    y = b.universe
    if ap.upper(src, x) != a.universe.subset(["x2", "x4", "x5"]) or image(f, x) != y.subset(["y2", "y3"]):
        return None
    if rep.f_upperX != y.subset(["y2", "y3", "y4"]) or rep.upper_fX != y.subset(["y1", "y2", "y3"]):
        return None
    if rep.f_upperX <= rep.upper_fX or rep.upper_fX <= rep.f_upperX:
        return None
    return f"f(X+) = {rep.f_upperX}, f(X)+ = {rep.upper_fX}: neither contains the other"


def _count(inst: Instance) -> str | None:
    known = [1, 5, 109, 32297, 2147321017]
    got = [count_coverings(n) for n in range(1, 6)]
    if got != known:
        return f"formula gives {got}"
    for n in range(1, ENUM_MAX_N + 1):
        if len(enumerate_coverings(Universe.numbered(n))) != count_coverings(n):
            return f"enumeration at n={n} disagrees with the formula"
    return None


# ---------------------------------------------------------------------------
# morphism laws


def _all_maps(src: Universe, dst: Universe) -> Iterator[Mapping]:
    for table in itertools.product(range(dst.n), repeat=src.n):
        yield Mapping(src, dst, table)


def _hom_instances(scope: ScopeSpec) -> Iterator[Instance]:
    n = min(scope.max_n, 3)
    src, dst = Universe.numbered(n), Universe.numbered(n, prefix="y")
    covs = _all_coverings(n)
    rng = random.Random(_seed(n, 0, 4))
    maps = list(_all_maps(src, dst))
    for _ in range(scope.seeds):
        a = covs[rng.randrange(len(covs))]
        b = covs[rng.randrange(len(covs))]
        b = Covering(dst, b.masks)
        for f in maps:
            yield Instance((a, b), f)
    yield Instance((W.COLLAPSE_SRC.covering, W.COLLAPSE_DST.covering), W.COLLAPSE_MAP)


def _hom_scope(scope: ScopeSpec) -> str:
    n = min(scope.max_n, 3)
    return f"all {n ** n} mappings between {n}-element universes x {scope.seeds} seeded covering pairs"


def _random_permutation_iso(n: int, seed: int) -> Instance:
    rng = random.Random(seed)
    src, dst = Universe.numbered(n), Universe.numbered(n, prefix="y")
    c = random_covering(src, rng.getrandbits(32))
    perm = list(range(n))
    rng.shuffle(perm)
    f = Mapping(src, dst, tuple(perm))
    d = Covering(dst, tuple(f.image_mask(m) for m in c.masks))
    return Instance((c, d), f)


def _iso_instances(scope: ScopeSpec) -> Iterator[Instance]:
    hi = scope.sample_max_n if scope.max_n >= ENUM_MAX_N else scope.max_n
    for i in range(scope.iso_samples):
        n = 1 + i % hi
        yield _random_permutation_iso(n, _seed(n, i, 5))
    for inst in _hom_instances(scope):
        yield inst
    for c in _exhaustive(min(scope.max_n, 3)):
        # identity onto the reduct is an isomorphism with a different covering
        yield Instance((c, ops.reduct(c)), Mapping.identity(c.universe))


def _iso_scope(scope: ScopeSpec) -> str:
    hi = scope.sample_max_n if scope.max_n >= ENUM_MAX_N else scope.max_n
    return (
        f"{scope.iso_samples} seeded permutation isomorphisms n<={hi}; isomorphisms among "
        f"{_hom_scope(scope)}; identity onto reduct for all coverings n<={min(scope.max_n, 3)}"
    )


def _lemma3(inst: Instance) -> str | None:
    (a, b), f = inst.coverings, inst.mapping
    src, dst = _space(a), _space(b)
    strict = is_homomorphism(f, src, dst, HomMode.STRICT)
    definable = is_homomorphism(f, src, dst, HomMode.DEFINABLE)
    if strict and not definable:
        return "strict homomorphism that is not definable"
    if not definable:
        return None
    la, lb = _low(a), _low(b)
    for s in range(1 << a.universe.n):
        if not _sub(f.image_mask(la[s]), lb[f.image_mask(s)]):
            return f"X={_fmt(a.universe, s)}: image of lower not inside lower of image"
    return None


def _isos_only(check):
    def wrapped(inst: Instance) -> str | None:
        (a, b), f = inst.coverings, inst.mapping
        if not is_isomorphism(f, _space(a), _space(b)):
            return None
        return check(inst)

    return wrapped


def _lemma4(inst: Instance) -> str | None:
    (a, b), f = inst.coverings, inst.mapping
    na, nb = _space(a).nbhd, _space(b).nbhd
    for i in range(a.universe.n):
        if f.image_mask(na[i]) != nb[f.table[i]]:
            return f"neighborhood of {a.universe.names[i]} not carried to that of its image"
    return None


def _theorem7(inst: Instance) -> str | None:
    (a, b), f = inst.coverings, inst.mapping
    la, lb, ua, ub = _low(a), _low(b), _up(a), _up(b)
    for s in range(1 << a.universe.n):
        fs = f.image_mask(s)
        if f.image_mask(la[s]) != lb[fs] or f.image_mask(ua[s]) != ub[fs]:
            return f"X={_fmt(a.universe, s)}: approximations not preserved"
    return None


# ---------------------------------------------------------------------------
# the catalog

_EX_ONCE = _fixed(Instance())
_ABCD = _fixed(Instance((W.ABCD_SPACE.covering,)))
_MIXED = _fixed(Instance((W.MIXED,)))

LAWS: dict[LawId, Law] = {}


def _law(law_id, statement, predicate, instances, scope, expect_witness=False, note=None):
    LAWS[law_id] = Law(law_id, statement, predicate, instances, scope, expect_witness, note)


_law(LawId.THM1, "upper approximation = intersection of the unions of all sub-families covering X",
     _three_routes, singles, _singles_scope())
_law(LawId.COR1, "leaving the whole covering out of that intersection changes nothing when other sub-families exist",
     _nontrivial_subcov, singles, _singles_scope())
_law(LawId.LEM1_EQ_DEF3, "upper approximation by definition = union of neighborhoods of the elements of X",
     _def3_is_neigh, singles, _singles_scope())
_law(LawId.LEM2, "neighborhoods are unchanged by int",
     _int_keeps_neighborhoods, singles, _singles_scope())
_law(LawId.THM2, "int can only shrink lower approximations and keeps upper approximations",
     _shrinks_lower_keeps_upper(ops.int_op, "int", bigger_after=False), singles, _singles_scope())
_law(LawId.THM4, "nei can only grow lower approximations and keeps upper approximations",
     _shrinks_lower_keeps_upper(ops.nei_op, "nei", bigger_after=True), singles, _singles_scope())
_law(LawId.COR4, "closing a covering under unions keeps both approximations and the reduct",
     _closure_check, lambda s: singles(s, limit=3), _singles_scope(3))
_law(LawId.COR5, "a covering and its reduct give the same approximations",
     _preserves_both(ops.reduct, "reduct"), singles, _singles_scope())
_law(LawId.SANDWICH, "lower(X) is inside X, which is inside upper(X)",
     _sandwich, singles, _singles_scope())
_law(LawId.MONOTONE, "both approximations are monotone in X",
     _monotone, singles, _singles_scope())
_law(LawId.IDEMPOTENCE, "reduct, int and nei are idempotent; a reduct has no reducible member",
     _idempotence, singles, _singles_scope())
_law(LawId.PARTITION_PAWLAK, "for a partition the approximations are the classical ones",
     _pawlak, _partition_instances, _partition_scope)

_law(LawId.PROP1, "equal lower operators force equal upper operators",
     _lower_dominates, pairs, _pairs_scope)
_law(LawId.PROP1_CONVERSE_FAILS, "equal upper operators do not force equal lower operators",
     _converse_witness, _converse_instances,
     _fixed_scope("all ordered covering pairs n<=3 (search for a witness)"), expect_witness=True)
_law(LawId.COR2, "agreement of lower approximations on all members of both coverings gives agreement everywhere",
     _members_lower_agree, pairs, _pairs_scope)
_law(LawId.COR3, "equal lower operators exactly when the reducts are equal",
     _lower_iff_reduct, pairs, _pairs_scope)
_law(LawId.THM3, "agreement of upper approximations on all members of both coverings gives agreement everywhere",
     _members_upper_agree, pairs, _pairs_scope)
_law(LawId.THM5, "the join refines both coverings' approximations",
     _refines_both(ops.join_op, "join"), pairs, _pairs_scope)
_law(LawId.THM6, "the meet refines both coverings' approximations",
     _refines_both(ops.meet_op, "meet"), pairs, _pairs_scope)
_law(LawId.PROP2, "the meet is nei of the join",
     _meet_is_nei_of_join, pairs, _pairs_scope)

_law(LawId.EX1, "neighborhoods and approximations of {a, d} over {ab, ac, bd}",
     _ex1, _ABCD, _fixed_scope("fixed instance"))
_law(LawId.EX2, "sub-families covering {a, d} and the upper approximation they give",
     _ex2, _ABCD, _fixed_scope("fixed instance"))
_law(LawId.EX3, "pairs plus two triples and pairs plus three triples share the reduct of all pairs",
     _ex3, _fixed(Instance((W.PAIRS_PLUS_TWO, W.PAIRS_PLUS_THREE))), _fixed_scope("fixed instance"))
_law(LawId.EX4, "int of the mixed covering keeps exactly the four triples",
     _ex4, _MIXED, _fixed_scope("fixed instance"))
_law(LawId.EX5, "join and meet of two small coverings and approximations of {x2, x3}",
     _ex5, _fixed(Instance((W.JOIN_LEFT, W.JOIN_RIGHT))), _fixed_scope("fixed instance"), note=EX5_NOTE)
_law(LawId.EX6, "identity maps between a covering and its reduct, nei and int",
     _ex6, _EX_ONCE, _fixed_scope("all coverings n<=3 plus two fixed counter-instances"))
_law(LawId.RMK2_STRICTNESS, "int can strictly shrink a lower approximation",
     _rmk2, _MIXED, _fixed_scope("mixed covering, X={x1}"), expect_witness=True, note=RMK2_NOTE)
_law(LawId.RMK3, "reduct and int do not commute, though the upper operators agree",
     _rmk3, _MIXED, _fixed_scope("mixed covering"), expect_witness=True)
_law(LawId.RMK4_STRICTNESS, "nei can strictly grow a lower approximation",
     _rmk4, _fixed(Instance((W.TRIANGLE,))), _fixed_scope("three pairs of {a, b, c}, X={a}"), expect_witness=True)
_law(LawId.RMK5, "a homomorphism need not relate f(upper X) and upper f(X) either way",
     _rmk5, _fixed(Instance((W.COLLAPSE_SRC.covering, W.COLLAPSE_DST.covering), W.COLLAPSE_MAP)), _fixed_scope("five-to-four collapsing map, X={x2, x4}"), expect_witness=True)
_law(LawId.COUNT_A003465, "count of coverings of an n-set: 1, 5, 109, 32297, 2147321017",
     _count, _EX_ONCE, _fixed_scope(f"formula n=1..5; enumeration n<={ENUM_MAX_N}"))

_law(LawId.LEM3, "a homomorphism maps lower(X) inside lower(f(X)); strict implies definable",
     _lemma3, _hom_instances, _hom_scope)
_law(LawId.LEM4, "an isomorphism carries each neighborhood onto the neighborhood of the image",
     _isos_only(_lemma4), _iso_instances, _iso_scope)
_law(LawId.THM7, "an isomorphism preserves both approximations",
     _isos_only(_theorem7), _iso_instances, _iso_scope)


# ---------------------------------------------------------------------------
# running


def law_ids() -> list[LawId]:
    return list(LawId)


def get_law(law: LawId | str) -> Law:
    try:
        return LAWS[LawId(law)]
    except ValueError:
        raise UnknownLaw(f"unknown law {law!r}") from None


def run_law(law: LawId | str, scope: ScopeSpec | None = None) -> LawReport:
    entry = get_law(law)
    scope = scope or ScopeSpec()
    start = time.perf_counter()
    checked = 0
    found = None
    try:
        for inst in entry.instances(scope):
            checked += 1
            detail = entry.predicate(inst)
            if detail is not None:
                found = {"instance": inst.encode(), "detail": detail}
                break
    except Exception as exc:
        _clear_caches()
        return LawReport(entry.id, entry.statement, entry.scope(scope), checked, Outcome.FAIL,
                         {"error": f"{type(exc).__name__}: {exc}"}, time.perf_counter() - start, entry.note)
    _clear_caches()
    if entry.expect_witness:
        outcome = Outcome.EXPECTED_FAILURE_FOUND if found else Outcome.FAIL
    else:
        outcome = Outcome.FAIL if found else Outcome.PASS
    return LawReport(entry.id, entry.statement, entry.scope(scope), checked, outcome, found,
                     time.perf_counter() - start, entry.note)


def run_all(scope: ScopeSpec | None = None, laws: Iterable[LawId | str] | None = None) -> list[LawReport]:
    chosen = [get_law(x).id for x in laws] if laws else law_ids()
    return [run_law(x, scope) for x in chosen]


def replay(law: LawId | str, witness: dict) -> str | None:
    """Rerun one law on the instance stored in a witness.

    Returns the predicate's description (non-None reproduces the witness).
    """
    entry = get_law(law)
    inst = Instance.decode(witness.get("instance", {}))
    try:
        return entry.predicate(inst)
    finally:
        _clear_caches()
