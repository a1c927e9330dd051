"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import itertools
import sys
import time

import pytest

from covrough import (
    ApproxSpace,
    Universe,
    count_coverings,
    enumerate_coverings,
    int_op,
    join_op,
    lower,
    meet_op,
    nei_op,
    preservation_report,
    reduct,
    same_lower_operator,
    same_upper_operator,
    subcoverings,
    upper_def3,
    upper_neigh,
    upper_subcov,
)
from covrough import approximation as ap
from covrough import laws
from covrough import worked as W
from covrough.enumeration import set_partitions
from covrough.laws import LawId, Outcome, ScopeSpec


@pytest.fixture
def report(request):
    """Record the criterion's PASS/FAIL line for the terminal summary, then assert."""
    def record(number, title, failures, detail=""):
        status = "PASS" if not failures else "FAIL"
        line = f"[{status}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        lines = [line] + [f"         {f}" for f in failures[:5]]
        request.node.user_properties.append(("acceptance", "\n".join(lines)))
        assert not failures, failures

    return record


def codes(covering):
    return sorted("".join(x[1:] for x in covering.universe.labels(m)) for m in covering.masks)


def law_failures(ids, scope):
    out = []
    for r in laws.run_all(scope, ids):
        expected = Outcome.EXPECTED_FAILURE_FOUND if laws.get_law(r.law).expect_witness else Outcome.PASS
        if r.outcome is not expected:
            out.append(f"{r.law.value}: {r.outcome.value} {r.witness}")
    return out


def test_criterion_1_neighborhoods_and_approximations(report):
    fails = []
    u = W.ABCD
    covering = W.ABCD_SPACE.covering

    def compute():
        space = ApproxSpace.of(covering)
        x = u.subset(["a", "d"])
        return ap.neighborhood_table(space), lower(space, x), upper_neigh(space, x)

    table, lo, up = compute()
    got = {k: v.labels() for k, v in table.items()}
    if got != {"a": ["a"], "b": ["b"], "c": ["a", "c"], "d": ["b", "d"]}:
        fails.append(f"neighborhoods {got}")
    if lo.labels() != []:
        fails.append(f"lower {lo.labels()}")
    if up.labels() != ["a", "b", "d"]:
        fails.append(f"upper {up.labels()}")
    best = min(_timed(compute) for _ in range(200))
    if best >= 1e-3:
        fails.append(f"took {best * 1e3:.3f} ms")
    report(1, "N table, lower and upper of {a,d}", fails, f"best of 200: {best * 1e6:.1f} us")


def _timed(fn):
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


def test_criterion_2_subcovering_route(report):
    fails = []
    space = W.ABCD_SPACE
    u = W.ABCD
    x = u.subset(["a", "d"])
    c1, c2, c3 = (u.mask_of(s) for s in (["a", "b"], ["a", "c"], ["b", "d"]))
    fam = subcoverings(space, x)
    got = {frozenset(fam.base.masks[j] for j in range(len(space.masks)) if f >> j & 1) for f in fam.members}
    want = {frozenset({c1, c2, c3}), frozenset({c1, c3}), frozenset({c2, c3})}
    if got != want:
        fails.append(f"sub-families {got}")
    sc = upper_subcov(space, x)
    if sc.labels() != ["a", "b", "d"] or sc != upper_neigh(space, x):
        fails.append(f"subcov upper {sc.labels()}")
    report(2, "sub-families covering {a,d} and their upper approximation", fails)


def test_criterion_3_three_routes_exhaustive(report):
    fails = []
    checks = 0
    for n in (3, 4):
        for c in enumerate_coverings(Universe.numbered(n)):
            space = ApproxSpace.of(c)
            d3, ne, sc = (ap.upper_table(space, m) for m in ("def3", "neigh", "subcov"))
            checks += len(d3)
            if not d3 == ne == sc:
                s = next(i for i in range(len(d3)) if not d3[i] == ne[i] == sc[i])
                fails.append(f"{c} X={Universe.numbered(n).from_mask(s)}")
    # literal per-set routes on the small universe, no tables
    for c in enumerate_coverings(Universe.numbered(3)):
        space = ApproxSpace.of(c)
        for s in range(8):
            x = c.universe.from_mask(s)
            checks += 1
            if not upper_def3(space, x) == upper_neigh(space, x) == upper_subcov(space, x):
                fails.append(f"{c} X={x}")
    report(3, "three upper routes agree on every covering n=3,4 and every subset", fails, f"{checks} checks")


def test_criterion_4_counts(report):
    fails = []
    want = [1, 5, 109, 32297, 2147321017]
    got = [count_coverings(n) for n in range(1, 6)]
    if got != want:
        fails.append(f"formula {got}")
    for n in range(1, 5):
        t = time.perf_counter()
        size = sum(1 for _ in enumerate_coverings(Universe.numbered(n)).families())
        took = time.perf_counter() - t
        if size != want[n - 1]:
            fails.append(f"enumeration n={n}: {size}")
        if took >= 1.0:
            fails.append(f"enumeration n={n} took {took:.2f} s")
    report(4, "covering counts 1, 5, 109, 32297, 2147321017 and enumeration n<=4", fails)


def test_criterion_5_pairwise_operator_laws(report):
    fails = []
    u = Universe.numbered(3)
    covs = list(enumerate_coverings(u))
    low = {c: ap.lower_table(ApproxSpace.of(c)) for c in covs}
    up = {c: ap.upper_table(ApproxSpace.of(c), "def3") for c in covs}
    red = {c: reduct(c) for c in covs}

    def sub(a, b):
        return a & ~b == 0

    pairs = 0
    for a, b in itertools.product(covs, repeat=2):
        pairs += 1
        same_low, same_up = low[a] == low[b], up[a] == up[b]
        members = set(a.masks) | set(b.masks)
        if same_low and not same_up:
            fails.append(f"implication {a} {b}")
        if all(low[a][m] == low[b][m] for m in members) and not same_low:
            fails.append(f"members-lower {a} {b}")
        if same_low != (red[a] == red[b]):
            fails.append(f"reduct criterion {a} {b}")
        if same_low != same_lower_operator(a, b) or same_up != same_upper_operator(a, b):
            fails.append(f"decision procedures {a} {b}")
        if all(up[a][m] == up[b][m] for m in members) and not same_up:
            fails.append(f"members-upper {a} {b}")
        j, m = join_op(a, b), meet_op(a, b)
        lj, uj = ap.lower_table(ApproxSpace.of(j)), ap.upper_table(ApproxSpace.of(j), "def3")
        lm, um = ap.lower_table(ApproxSpace.of(m)), ap.upper_table(ApproxSpace.of(m), "def3")
        for s in range(8):
            for side in (a, b):
                if not (sub(low[side][s], lj[s]) and sub(uj[s], up[side][s])):
                    fails.append(f"join {a} {b} X={s}")
                if not (sub(low[side][s], lm[s]) and sub(um[s], up[side][s])):
                    fails.append(f"meet {a} {b} X={s}")
        if m != nei_op(j):
            fails.append(f"meet vs nei of join {a} {b}")
    fails += law_failures([LawId.PROP1, LawId.COR2, LawId.COR3, LawId.THM3, LawId.THM5, LawId.THM6, LawId.PROP2],
                          ScopeSpec(max_n=3))
    report(5, "pairwise operator laws over all 109^2 pairs x 8 subsets", fails, f"{pairs} pairs")


def test_criterion_6_expected_failures_found(report):
    fails = []
    r = laws.run_law(LawId.PROP1_CONVERSE_FAILS, ScopeSpec(max_n=3))
    if r.outcome is not Outcome.EXPECTED_FAILURE_FOUND:
        fails.append("(a) no covering pair with equal upper but unequal lower operators")
    else:
        a, b = laws.Instance.decode(r.witness["instance"]).coverings
        if not same_upper_operator(a, b) or same_lower_operator(a, b):
            fails.append(f"(a) witness does not replay: {a} {b}")
    x4, mixed = W.X4, W.MIXED
    c1 = x4.from_mask(W.digits(x4, "1"))
    if lower(ApproxSpace.of(int_op(mixed)), c1) != x4.empty() or lower(ApproxSpace.of(mixed), c1) != c1:
        fails.append("(b) int strictness on the mixed covering")
    tri = ApproxSpace.of(W.TRIANGLE)
    a = W.ABC.subset(["a"])
    if lower(tri, a) != W.ABC.empty() or lower(ApproxSpace.of(nei_op(tri)), a) != a:
        fails.append("(c) nei strictness on the three pairs")
    ri, ir = reduct(int_op(mixed)), int_op(reduct(mixed))
    if codes(ri) != ["123", "124", "134", "234"] or codes(ir) != ["124", "13", "134", "2", "234"]:
        fails.append(f"(d) reduct/int composites {codes(ri)} {codes(ir)}")
    if not same_upper_operator(ri, ir):
        fails.append("(d) composites differ in upper operator")
    fails += law_failures([LawId.RMK2_STRICTNESS, LawId.RMK3, LawId.RMK4_STRICTNESS], ScopeSpec())
    if laws.get_law(LawId.RMK2_STRICTNESS).note is None:
        fails.append("(b) subscript annotation missing")
    report(6, "expected-failure searches find their witnesses", fails)


def test_criterion_7_worked_operator_examples(report):
    fails = []
    if reduct(W.PAIRS_PLUS_TWO) != reduct(W.PAIRS_PLUS_THREE) or codes(reduct(W.PAIRS_PLUS_TWO)) != sorted(W.PAIRS):
        fails.append("reduct of pair families")
    if codes(int_op(W.MIXED)) != ["123", "124", "134", "234"]:
        fails.append(f"int {codes(int_op(W.MIXED))}")
    c1, c2 = W.JOIN_LEFT, W.JOIN_RIGHT
    j, m = join_op(c1, c2), meet_op(c1, c2)
    if codes(j) != ["12", "123", "234", "24"]:
        fails.append(f"join {codes(j)}")
    u = W.X4
    x = u.from_mask(W.digits(u, "23"))
    sp = {k: ApproxSpace.of(v) for k, v in {"c1": c1, "c2": c2, "j": j, "m": m}.items()}
    if any(lower(sp[k], x) != u.empty() for k in ("c1", "c2", "j")):
        fails.append("lower of C23 under c1, c2, join")
    if not lower(sp["m"], x) == upper_neigh(sp["c2"], x) == upper_neigh(sp["j"], x) == upper_neigh(sp["m"], x) == x:
        fails.append("C23 values under meet, c2, join")
    if upper_neigh(sp["c1"], x) != u.from_mask(W.digits(u, "234")):
        fails.append("upper of C23 under c1")
    # the printed member list of the meet differs; the literal definition gives this
    deviation = codes(m)
    fails += law_failures([LawId.EX3, LawId.EX4, LawId.EX5], ScopeSpec())
    report(7, "reduct, int, join and meet worked values", fails, f"meet members {deviation}, documented deviation")


def test_criterion_8_morphism_laws(report):
    fails = []
    scope = ScopeSpec()
    by_id = {r.law: r for r in laws.run_all(scope, [LawId.LEM3, LawId.LEM4, LawId.THM7, LawId.RMK5])}
    for law_id in (LawId.LEM3, LawId.LEM4, LawId.THM7):
        if by_id[law_id].outcome is not Outcome.PASS:
            fails.append(f"{law_id.value}: {by_id[law_id].witness}")
    if by_id[LawId.LEM3].instances_checked < 27 * 200:
        fails.append("homomorphism scope too small")
    if by_id[LawId.THM7].instances_checked < 500:
        fails.append("isomorphism scope too small")
    rep = preservation_report(W.COLLAPSE_MAP, W.COLLAPSE_SRC, W.COLLAPSE_DST, W.X5.subset(["x2", "x4"]))
    if rep.f_upperX.labels() != ["y2", "y3", "y4"] or rep.upper_fX.labels() != ["y1", "y2", "y3"]:
        fails.append(f"collapse map: {rep.f_upperX} vs {rep.upper_fX}")
    if rep.f_upperX <= rep.upper_fX or rep.upper_fX <= rep.f_upperX:
        fails.append("collapse map: an inclusion holds")
    if by_id[LawId.RMK5].outcome is not Outcome.EXPECTED_FAILURE_FOUND:
        fails.append("RMK5 witness not found")
    report(8, "homomorphism inclusion, isomorphism preservation, collapse witness", fails,
           f"{by_id[LawId.LEM3].instances_checked} hom / {by_id[LawId.THM7].instances_checked} iso instances")


def test_criterion_9_idempotence_sandwich_partitions(report):
    fails = []
    for n in range(1, 5):
        u = Universe.numbered(n)
        for c in enumerate_coverings(u):
            for op in (reduct, int_op, nei_op):
                once = op(c)
                if op(once) != once:
                    fails.append(f"{op.__name__} not idempotent on {c}")
            space = ApproxSpace.of(c)
            low, up = ap.lower_table(space), ap.upper_table(space)
            for s in range(1 << n):
                if low[s] & ~s or s & ~up[s]:
                    fails.append(f"sandwich {c} X={s}")
        for blocks in set_partitions(n):
            space = ApproxSpace.of(W.sets(u, *("".join(str(i + 1) for i in b) for b in blocks)))
            for s in range(1 << n):
                x = u.from_mask(s)
                if ap.pawlak(space, x) != (lower(space, x), upper_neigh(space, x)):
                    fails.append(f"partition {blocks} X={x}")
    fails += law_failures([LawId.IDEMPOTENCE, LawId.SANDWICH, LawId.PARTITION_PAWLAK], ScopeSpec())
    report(9, "idempotence, sandwich and partition specialization n<=4", fails)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
