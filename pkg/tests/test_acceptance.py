"""Acceptance suite: one test (or tightly related group) per criterion,
each printing a [PASS]/[FAIL] line. Run with `pytest tests/test_acceptance.py -v -s`.

Two checks are mathematically unattainable as stated and are marked
strict-xfail rather than weakened; their docstrings carry the analysis.
"""

import functools
import math
import random
import time
from itertools import product

import numpy as np
import pytest

import shadowcodes as sc

TIMINGS = {}


def _line(name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {name}: {detail}")


def _timed(name, fn):
    t0 = time.perf_counter()
    out = fn()
    TIMINGS[name] = time.perf_counter() - t0
    return out


@functools.lru_cache(maxsize=None)
def golden_code():
    f7 = sc.FiniteField(7)
    spec = sc.ShadowCodeSpec(
        f7, 2, [sc.Polynomial(f7, [1, 0, 1]), sc.Polynomial(f7, [3, 1, 1])]
    )
    G = sc.build(spec)
    return spec, G, sc.weight_distribution(G)


@functools.lru_cache(maxsize=None)
def q1301_code():
    report = _timed("q1301", lambda: sc.construct_code(1301, 2, epsilon=0.25))
    wd = sc.weight_distribution(report.matrix)
    return report, wd


@functools.lru_cache(maxsize=None)
def q10007_code():
    report = sc.construct_code(10007, 2, L=16)
    wd1 = _timed(
        "q10007_single", lambda: sc.weight_distribution(report.matrix, workers=1)
    )
    wd8 = _timed(
        "q10007_eight", lambda: sc.weight_distribution(report.matrix, workers=8)
    )
    return report, wd1, wd8


def _analyzed_codes():
    """Codes whose exact weight distribution the suite computes, at sizes
    where the exact big-integer bounds are still computable."""
    _, _, wd_golden = golden_code()
    _, wd_1301 = q1301_code()
    _, wd_10007, _ = q10007_code()
    return [("q7", wd_golden), ("q1301", wd_1301), ("q10007", wd_10007)]


def test_criterion_1_golden_small_code():
    spec, G, report = golden_code()
    ok_rows = G.rows.tolist() == [[0, 0, 1, 1, 1, 1, 0], [1, 1, 0, 0, 0, 1, 1]]
    ok_metrics = (
        report.k == 2
        and report.d_exact == 4
        and report.weight_distribution == {0: 1, 4: 2, 6: 1}
    )
    best = math.inf
    for _ in range(5):
        t0 = time.perf_counter()
        sc.weight_distribution(sc.build(spec))
        best = min(best, time.perf_counter() - t0)
    ok_time = best < 1e-3
    _line(
        "criterion 1 (golden q=7 code)",
        ok_rows and ok_metrics and ok_time,
        f"rows+metrics exact, build+analyze {best * 1e6:.0f}us",
    )
    assert ok_rows and ok_metrics
    assert ok_time, f"build+analyze took {best:.6f}s, budget 1ms"


@pytest.mark.parametrize("q,r", [(7, 2), (13, 3), (49, 2), (31, 5)])
def test_criterion_2_linearity(q, r):
    t0 = time.perf_counter()
    p, ell = sc.algebra.prime_power_decompose(q)
    field = sc.FiniteField(p, ell)
    spec = sc.ShadowCodeSpec(field, r, sc.enumerate_monic_irreducibles(field, 2, 3))
    rng = random.Random(2024)
    failures = 0
    for _ in range(1000):
        y = [rng.randrange(r) for _ in range(3)]
        z = [rng.randrange(r) for _ in range(3)]
        lhs = sc.encode_direct(spec, [(a + b) % r for a, b in zip(y, z)])
        rhs = (
            sc.encode_direct(spec, y).astype(int)
            + sc.encode_direct(spec, z).astype(int)
        ) % r
        if not (lhs == rhs).all():
            failures += 1
    elapsed = time.perf_counter() - t0
    _line(
        f"criterion 2 (linearity q={q} r={r})",
        failures == 0 and elapsed < 5,
        f"1000 pairs, {failures} failures, {elapsed:.2f}s",
    )
    assert failures == 0
    assert elapsed < 5


def _curve_count_2d(field, r, poly):
    count = 0
    for x in range(field.q):
        fx = poly(x)
        for y in range(field.q):
            if field.pow(y, r) == fx:
                count += 1
    return count


def _sweep_cases():
    for q in (7, 11, 13, 25):
        p, ell = sc.algebra.prime_power_decompose(q)
        field = sc.FiniteField(p, ell)
        polys = sc.enumerate_monic_irreducibles(field, 2, 3)
        spec = sc.ShadowCodeSpec(field, 2, polys)
        G = sc.build(spec)
        for v in product(range(2), repeat=3):
            if any(v):
                yield field, polys, G, v


def test_criterion_3_zeros_points_identity():
    t0 = time.perf_counter()
    checked = 0
    for field, polys, G, v in _sweep_cases():
        poly = None
        for p, e in zip(polys, v):
            if e:
                poly = p if poly is None else poly * p
        n_points = _curve_count_2d(field, 2, poly)  # independent q^2 scan
        zeros = int(np.sum(G.encode(list(v)) == 0))
        assert n_points == 2 * zeros, (field.q, v)
        checked += 1
    elapsed = time.perf_counter() - t0
    _line(
        "criterion 3 (zeros = points / r)",
        True,
        f"{checked} curves over q in {{7,11,13,25}}, {elapsed:.2f}s",
    )
    assert elapsed < 30


def test_criterion_4_hasse_weil():
    t0 = time.perf_counter()
    violations = []
    checked = 0
    for field, polys, G, v in _sweep_cases():
        report = sc.hasse_weil_check(field, 2, polys, list(v))
        poly = None
        for p, e in zip(polys, v):
            if e:
                poly = p if poly is None else poly * p
        assert report.n_affine == _curve_count_2d(field, 2, poly)
        if not report.passed:
            violations.append((field.q, v, report.slack))
        checked += 1
    elapsed = time.perf_counter() - t0
    _line(
        "criterion 4 (Hasse-Weil with genus bound)",
        not violations,
        f"{checked} curves, {len(violations)} violations, {elapsed:.2f}s",
    )
    assert not violations


def test_criterion_5_construction_end_to_end():
    report, wd = q1301_code()
    ok = (
        report.L == 6
        and report.rank == 6
        and wd.k == 6
        and wd.d_exact >= 217
        and wd.d_exact >= report.epsilon_distance_bound
        and wd.d_exact <= wd.d_upper_hint
        and TIMINGS["q1301"] < 1.0
    )
    _line(
        "criterion 5 (q=1301 epsilon=0.25)",
        ok,
        f"k={wd.k} d={wd.d_exact} >= 217, bound {report.epsilon_distance_bound:.1f}, "
        f"{TIMINGS['q1301']:.2f}s",
    )
    assert report.rank == 6 and wd.k == 6
    assert wd.d_exact >= 217
    assert wd.d_exact >= report.epsilon_distance_bound
    assert wd.d_exact <= wd.d_upper_hint
    assert TIMINGS["q1301"] < 1.0


def test_criterion_6_scale_run():
    report, wd1, wd8 = q10007_code()
    lo = 10007 / 2 - 32 * math.sqrt(10007)
    hi = 10007 / 2 + 32 * math.sqrt(10007)
    identical = (
        wd1.weight_distribution == wd8.weight_distribution
        and wd1.d_exact == wd8.d_exact
    )
    ok = (
        report.rank == 16
        and wd1.k == 16
        and lo <= wd1.d_exact <= hi
        and identical
        and TIMINGS["q10007_single"] < 600
        and TIMINGS["q10007_eight"] < 120
    )
    _line(
        "criterion 6 (q=10007, L=16 scale run)",
        ok,
        f"rank=16 d={wd1.d_exact} in [{lo:.0f}, {hi:.0f}], "
        f"single {TIMINGS['q10007_single']:.2f}s / 8w {TIMINGS['q10007_eight']:.2f}s, "
        f"identical={identical}",
    )
    assert report.rank == 16 and wd1.k == 16
    assert lo <= wd1.d_exact <= hi
    assert identical
    assert TIMINGS["q10007_single"] < 600
    assert TIMINGS["q10007_eight"] < 120


def test_criterion_7_charsum_claims():
    t0 = time.perf_counter()
    report = sc.verify_claims(1009, mode="sum_gt_one")
    elapsed = time.perf_counter() - t0
    ratios = {}
    for q in (257, 509, 1009):
        ratios[q] = sc.verify_claims(q).ratio_sqrt_q
    ok = (
        report.ell == 13
        and report.witness_found
        and report.max_signed >= 3
        and report.identity_holds
        and all(v > 0 for v in ratios.values())
        and elapsed < 60
    )
    _line(
        "criterion 7 (charsum witness and identity, q=1009)",
        ok,
        f"max_signed={report.max_signed}, 2d+max=q exact, "
        f"ratios={[f'{q}:{v:.2f}' for q, v in ratios.items()]}, {elapsed:.2f}s",
    )
    assert report.witness_found and report.max_signed >= 3
    assert report.identity_holds
    assert all(v > 0 for v in ratios.values())
    assert elapsed < 60


def test_criterion_8_bound_values():
    ok_h = sc.hamming_bound(7, 3, 2) == 16
    ok_g = sc.gv_bound(7, 4, 2) == 2
    ok_p = sc.plotkin_binary(7, 4) == 20
    ok_m = sc.mceliece_bound(100, 49)[0] == 400
    ok_s = True
    for n in (100, 10**4):
        rep = sc.spectral_bound(n, n // 2, 1)
        ok_s = ok_s and abs(rep.lambda_k - math.sqrt(n)) <= 1e-9 * n
    ok = ok_h and ok_g and ok_p and ok_m and ok_s
    _line(
        "criterion 8 (bound cross-checks)",
        ok,
        "hamming=16 gv=2 plotkin=20 mceliece=400 spectral-k1=sqrt(n)",
    )
    assert ok


@pytest.mark.xfail(
    strict=True,
    reason="H_2(1/4) = 0.8112781..., which is 7.8e-5 away from 0.8112; the "
    "stated 5e-5 tolerance cannot hold for a correct entropy function "
    "(0.8112 is the truncated, not rounded, 4-decimal value)",
)
def test_criterion_8_entropy_quoted_value():
    value = sc.entropy(2, 0.25)
    ok = abs(value - 0.8112) <= 5e-5
    _line("criterion 8 (entropy at 1/4, stated tolerance)", ok, f"H={value:.7f}")
    assert ok


def test_criterion_8_hamming_dominates_analyzed_codes():
    details = []
    for name, wd in _analyzed_codes():
        size = wd.r**wd.k
        bound = sc.hamming_bound(wd.n, wd.d_exact, wd.r)
        assert size <= bound, name
        details.append(f"{name}: 2^{wd.k} <= hamming")
    _line("criterion 8 (size below Hamming bound)", True, "; ".join(details))


@pytest.mark.xfail(
    strict=True,
    reason="the GV comparison is asymptotic: at desk scale gv(1301, 611) = 76 "
    "> 2^6 and gv(10007, 4692) ~ 2^32 > 2^16, so the per-code assertion "
    "cannot hold for the constructed instances (only the q=7 toy passes)",
)
def test_criterion_8_gv_dominated_by_analyzed_codes():
    failures = []
    for name, wd in _analyzed_codes():
        size = wd.r**wd.k
        bound = sc.gv_bound(wd.n, wd.d_exact, wd.r)
        if size < bound:
            failures.append(f"{name}: 2^{wd.k} < gv={bound}")
    _line("criterion 8 (size above GV bound)", not failures, "; ".join(failures))
    assert not failures


def test_criterion_9_delsarte_goethals_comparison():
    cmp = _timed("compare_dg", lambda: sc.compare_dg(20, 0.2))
    ok = (
        cmp.d_dg == 507904
        and cmp.L <= 5
        and cmp.shadow_d_exact
        and cmp.distance_inequality_holds
        and TIMINGS["compare_dg"] < 120
    )
    _line(
        "criterion 9 (shadow vs DG at m=20)",
        ok,
        f"q={cmp.q} L={cmp.L} d_shadow={cmp.d_shadow} >= d_dg={cmp.d_dg}, "
        f"{TIMINGS['compare_dg']:.1f}s",
    )
    assert cmp.d_dg == 507904
    assert cmp.L <= 5 and cmp.shadow_d_exact
    assert cmp.distance_inequality_holds
    assert TIMINGS["compare_dg"] < 120


def test_criterion_10_erasure_decoding():
    rng = random.Random(77)
    failures = 0
    trials = 0
    for maker, n_trials in ((golden_code, 1000), (q1301_code, 1000)):
        data = maker()
        if maker is golden_code:
            _, G, wd = data
        else:
            report, wd = data
            G = report.matrix
        d = wd.d_exact
        L, r, n = G.L, G.r, G.n
        for _ in range(n_trials):
            v = [rng.randrange(r) for _ in range(L)]
            cw = G.encode(v)
            n_erase = rng.randrange(d)  # at most d - 1
            erased = rng.sample(range(n), n_erase)
            received = list(cw)
            for j in erased:
                received[j] = sc.ERASED
            if sc.erasure_decode(G, received).tolist() != v:
                failures += 1
            trials += 1
    _line(
        "criterion 10 (erasure decoding)",
        failures == 0,
        f"{trials} random erasure patterns up to d-1, {failures} failures",
    )
    assert failures == 0
