"""Acceptance criteria, one check per criterion.

Each check returns ``(ok, detail)``.  Under pytest every criterion is a test
and a PASS/FAIL line per criterion is printed in the terminal summary; run
``python tests/test_acceptance.py`` to get the same lines without pytest.
"""

import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fixtures import GENERIC_MATRICES, M_1PMMP1_AUX_2_4, M_1PMMP1_INV, TABLE_3_2, W_ALPHA  # noqa: E402

import clansing  # noqa: E402
from clansing import algebra, analysis, ideal, order, patterns, slice  # noqa: E402
from clansing.algebra import buchberger, parse_polynomial  # noqa: E402
from clansing.clans import enumerate_clans, length  # noqa: E402
from clansing.errors import ComputationError, NotComparable, ResourceLimit  # noqa: E402

RESULTS: dict[int, tuple[str, bool, str]] = {}

TITLES = {
    1: "fixture exactness",
    2: "single generator example",
    3: "(3,2) singularity table",
    4: "pattern criterion cross-validation",
    5: "dimension law and free variables",
    6: "determinant constancy and symbolic inverse",
    7: "order equivalence",
    8: "transposition monotonicity and T7 formula",
    9: "interval isomorphism",
    10: "upper order ideal",
    11: "z64 basis element",
}


def cold():
    """Drop every memo so timings start from scratch."""
    for mod in (clansing.clans, algebra.groebner, algebra.polynomial, slice, ideal, order,
                patterns, analysis):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def signatures(n_max):
    for n in range(1, n_max + 1):
        for p in range(n + 1):
            yield p, n - p


def clans_up_to(n_max):
    for p, q in signatures(n_max):
        yield from enumerate_clans(p, q)


def comparable_pairs(p, q):
    P = order.hasse(p, q)
    for g in P.elements:
        for a in P.elements:
            if P.leq(a, g):
                yield a, g


# -- the criteria ---------------------------------------------------------------

def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for clan, w in W_ALPHA.items():
        if slice.w_alpha(clan) != w:
            bad.append(f"w_alpha({clan})")
    for clan, text in GENERIC_MATRICES.items():
        if slice.generic_matrix(clan).pretty() != text:
            bad.append(f"M_{clan}")
    if slice.format_matrix(slice.inverse("1+--+1")) != M_1PMMP1_INV:
        bad.append("M_{1+--+1}^{-1}")
    aux = ideal.aux_matrix(slice.inverse("1+--+1"), 2, 4, 3)
    if slice.format_matrix(aux) != M_1PMMP1_AUX_2_4:
        bad.append("M^{[2;4]}")
    dt = time.perf_counter() - t0
    if dt >= 1:
        bad.append(f"runtime {dt:.2f}s")
    return not bad, ("mismatch: " + ", ".join(bad)) if bad else f"{dt:.2f}s"


def criterion_2():
    cold()
    t0 = time.perf_counter()
    ms = ideal.generators("123231", "1+--+1")
    dt = time.perf_counter() - t0
    expected = parse_polynomial("z_{3,2}*z_{5,5} + z_{4,2}*z_{5,6}", ms.ring)
    gens = ms.generators
    ok = len(gens) == 1 and dt < 1
    if ok:
        g = gens[0]
        ratio = g.leading_coefficient() / expected.leading_coefficient()
        ok = ratio != 0 and g == expected.scale(ratio)
    return ok, f"{len(gens)} generator(s) {[str(g) for g in gens]} in {dt:.3f}s"


def criterion_3():
    cold()
    t0 = time.perf_counter()
    rows = analysis.singularity_table(3, 2)
    dt = time.perf_counter() - t0
    got = {(str(r.clan), r.length, frozenset(map(str, r.maxsing))) for r in rows}
    want = {(c, n, frozenset(m)) for c, n, m in TABLE_3_2}
    ok = got == want and len(rows) == 14 and dt < 300
    return ok, f"{len(rows)} rows, {len(got ^ want)} differing, {dt:.1f}s"


def criterion_4():
    bad, checked = [], 0
    clans = list(clans_up_to(5)) + list(enumerate_clans(3, 3))
    for g in clans:
        checked += 1
        if (not analysis.maxsing(g)) != patterns.mcgovern_smooth(g):
            bad.append(str(g))
    return not bad, f"{checked} clans, discrepancies {bad}"


def criterion_5():
    dim_bad, pairs = [], 0
    for p, q in signatures(5):
        for a, g in comparable_pairs(p, q):
            pairs += 1
            d = analysis.groebner_of(g, a).dimension
            if d != length(g) - length(a):
                dim_bad.append((str(g), str(a), d))
    var_bad, clans = [], 0
    for c in clans_up_to(7):
        clans += 1
        if slice.free_variable_count(c) != c.p * c.q - length(c):
            var_bad.append(str(c))
    ok = not dim_bad and not var_bad
    return ok, (f"{pairs} pairs, {len(dim_bad)} dimension mismatches; "
                f"{clans} clans, {len(var_bad)} variable-count mismatches")


def criterion_6():
    det_bad, n_det = [], 0
    for c in clans_up_to(6):
        n_det += 1
        try:
            d = slice.determinant(c)
        except ComputationError:
            det_bad.append(str(c))
            continue
        if d == 0:
            det_bad.append(str(c))
    inv_bad, n_inv = [], 0
    for c in clans_up_to(5):
        n_inv += 1
        sm = slice.generic_matrix(c)
        m, inv, ring = sm.polys(), slice.inverse(c), sm.ring
        n = sm.n
        for i in range(n):
            for j in range(n):
                acc = ring.zero()
                for k in range(n):
                    acc = acc + m[i][k] * inv[k][j]
                if acc != ring.const(Fraction(int(i == j))):
                    inv_bad.append(str(c))
                    break
            else:
                continue
            break
    ok = not det_bad and not inv_bad
    return ok, (f"{n_det} determinants, {len(det_bad)} non-constant; "
                f"{n_inv} inverses, {len(inv_bad)} wrong")


def criterion_7():
    bad, pairs = 0, 0
    for p, q in signatures(6):
        P = order.hasse(p, q)
        for a in P.elements:
            for b in P.elements:
                pairs += 1
                if P.leq(a, b) != order.leq_rank_oracle(a, b):
                    bad += 1
    return bad == 0, f"{pairs} pairs, {bad} discrepancies"


def criterion_8():
    mono_bad, t7_bad, moves, t7 = 0, 0, 0, 0
    for c in clans_up_to(6):
        for m in order.transpositions(c):
            moves += 1
            gain = length(m.result) - length(c)
            if gain <= 0:
                mono_bad += 1
            if m.rule == "T7":
                t7 += 1
                if order.t7_length_diff(c, *m.positions) != gain:
                    t7_bad += 1
    ok = mono_bad == 0 and t7_bad == 0 and t7 > 0
    return ok, (f"{moves} moves, {mono_bad} not increasing; "
                f"{t7} T7 moves, {t7_bad} formula mismatches")


def criterion_9():
    failures, exhausted, checked = [], [], 0

    def check(e):
        nonlocal checked
        checked += 1
        try:
            if not analysis.verify_interval_iso(e).verified:
                failures.append(e.to_json())
        except ResourceLimit:
            exhausted.append(e.to_json())
        except (ComputationError, NotComparable) as exc:
            failures.append(f"{e.to_json()}: {exc}")

    example = [e for e in patterns.find_interval_embeddings("123231", ("+--+", "1212"))
               if e.indices == (2, 3, 4, 5)]
    if not example:
        failures.append("example embedding not found")
    for e in example:
        check(e)
    thetas = list(clans_up_to(5))
    for p, q in signatures(4):
        for a, g in comparable_pairs(p, q):
            for th in thetas:
                if th.n < g.n or th.p < p or th.q < q:
                    continue
                for e in patterns.find_interval_embeddings(th, (a, g)):
                    check(e)
    ok = not failures and not exhausted
    return ok, (f"{checked} embeddings, {len(failures)} failed, "
                f"{len(exhausted)} budget exhausted")


def criterion_10():
    def singular(a, g):
        return analysis.smooth_at(g, a).singular

    parts, ok = [], True
    for p, q in [(2, 2), (3, 2)]:
        r = analysis.upper_ideal_check(p, q, singular)
        ok &= r.ok
        parts.append(f"({p},{q}): {r.pairs_checked} pairs, {r.embeddings_checked} embeddings, "
                     f"{len(r.violations)} violations, {len(r.budget_exhausted)} exhausted")
    return ok, "; ".join(parts)


def criterion_11():
    ms = ideal.generators("12-+12", "-1221+", method="minors")
    gb = buchberger(ms.generators, ring=ms.ring)
    z64 = ms.ring.gen("z_{6,4}")
    ok = z64 in gb.generators
    return ok, "reduced basis " + ", ".join(g.to_str() for g in gb.generators)


CHECKS = {n: globals()[f"criterion_{n}"] for n in TITLES}


def record(n):
    ok, detail = CHECKS[n]()
    RESULTS[n] = (TITLES[n], ok, detail)
    return ok, detail


def format_line(n):
    title, ok, detail = RESULTS[n]
    return f"criterion {n:2d} {'PASS' if ok else 'FAIL'}: {title} ({detail})"


@pytest.mark.parametrize("n", sorted(TITLES))
def test_criterion(n):
    ok, detail = record(n)
    assert ok, detail


if __name__ == "__main__":
    status = 0
    for n in sorted(TITLES):
        record(n)
        print(format_line(n), flush=True)
        status |= not RESULTS[n][1]
    sys.exit(status)
