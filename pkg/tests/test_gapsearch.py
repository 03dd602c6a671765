"""Exhaustive small-degree searches and their supporting inequalities."""

import math
import random
from collections import Counter
from fractions import Fraction

import pytest

from fgap.algnum import AlgebraicNumber, IntPoly, Surd, isolate_real_roots
from fgap.errors import InvalidInputError
from fgap.gapsearch import (
    EXPLORATORY_MARK,
    QUAD_DEFAULT_HI,
    QUAD_DEFAULT_LO,
    K_of,
    SearchConfig,
    mainineq_enclosure_pair,
    mainineq_exact_quadratic,
    orbit_inequality_exact,
    search_cubic,
    search_gap,
    search_quadratic,
    surd_text,
)

GOLDEN_GAP = Surd(Fraction(5, 2), Fraction(-1, 2), 5)  # (5 - sqrt 5)/2


@pytest.fixture(scope="module")
def gap_default_audit():
    return search_gap(QUAD_DEFAULT_HI, audit=True)


@pytest.fixture(scope="module")
def cubic_default_audit():
    return search_cubic(SearchConfig(3, audit=True))


# ---------------------------------------------------------------------------
# K(d) = (1/4 - sqrt(9/16 - 1/d^2))^(-1)

def test_K_pinned_endpoint():
    # K(4 sqrt 3 / 5) = 12 + 4 sqrt 6, just under 22
    iv = K_of(QUAD_DEFAULT_HI)
    exact = Surd(12, 4, 6)
    assert exact.cmp_fraction(iv.lo) >= 0
    assert exact.cmp_fraction(iv.hi) <= 0
    assert iv.hi < 22
    assert abs(float(iv.lo) - 21.79795897113271) < 1e-9


def test_K_pinned_golden():
    # K((5 - sqrt 5)/2) = 10 + 4 sqrt 5
    iv = K_of(GOLDEN_GAP)
    exact = Surd(10, 4, 5)
    assert exact.cmp_fraction(iv.lo) >= 0
    assert exact.cmp_fraction(iv.hi) <= 0
    assert abs(float(iv.lo) - 18.94427190999916) < 1e-9


def test_K_matches_float_formula():
    for num, den in [(27, 20), (69, 50), (11, 8), (138, 100)]:
        d = Fraction(num, den)
        iv = K_of(Surd(d))
        want = 1.0 / (0.25 - math.sqrt(9.0 / 16.0 - 1.0 / float(d) ** 2))
        assert abs(float(iv.lo) - want) < 1e-9 * want


def test_K_domain_errors():
    for bad in [Surd(Fraction(4, 3)), Surd(Fraction(13, 10)),
                Surd(0, 1, 2), Surd(Fraction(3, 2))]:
        with pytest.raises(InvalidInputError):
            K_of(bad)


# ---------------------------------------------------------------------------
# the pair inequality, decided two independent ways

def test_mainineq_encodings_agree_on_grid():
    checked = 0
    for a in range(1, 24):
        for b in range(1, a * a + 1):
            if a * a % b:
                continue
            disc = a * a - 4 * b
            if disc <= 0 or math.isqrt(disc) ** 2 == disc:
                continue
            p = IntPoly([b, -a, 1])
            prof = isolate_real_roots(p)
            d1 = AlgebraicNumber(p, prof.roots[0][0])
            d2 = AlgebraicNumber(p, prof.roots[1][0])
            exact = mainineq_exact_quadratic(a, b)
            enclosed = mainineq_enclosure_pair(d1, d2)
            assert exact == enclosed, (a, b)
            checked += 1
    assert checked >= 50


def test_mainineq_rejects_repeated_roots():
    with pytest.raises(InvalidInputError):
        mainineq_exact_quadratic(4, 4)


def test_orbit_inequality_matches_quadratic_form():
    for a, b in [(5, 5), (6, 4), (7, 7), (9, 27), (23, 23)]:
        disc = a * a - 4 * b
        if disc <= 0 or math.isqrt(disc) ** 2 == disc:
            p = IntPoly([b, -a, 1])
            continue
        p = IntPoly([b, -a, 1])
        prof = isolate_real_roots(p)
        top = AlgebraicNumber(p, prof.roots[-1][0])
        assert orbit_inequality_exact(p, top) == \
            mainineq_exact_quadratic(a, b)


def test_quadratic_prefilter_identity():
    # 16 - 12a + 9b = 9 * p(4/3) = product of (3 d_i - 4) over the roots
    rng = random.Random(11)
    for _ in range(200):
        a = rng.randint(-30, 30)
        b = rng.randint(-30, 30)
        disc = a * a - 4 * b
        if disc <= 0:
            continue
        s = math.sqrt(disc)
        prod = (3 * (a - s) / 2 - 4) * (3 * (a + s) / 2 - 4)
        lhs = 16 - 12 * a + 9 * b
        if abs(prod) > 1e-6:
            assert (lhs > 0) == (prod > 0), (a, b)


# ---------------------------------------------------------------------------
# quadratic search

def test_quadratic_default_survivor():
    r = search_quadratic()
    assert r.kind == "quadratic"
    assert [c.poly.coeffs for c in r.survivors] == [(5, -5, 1)]
    assert not r.exploratory
    assert r.warnings == ()
    c = r.survivors[0]
    assert abs(c.roots[0] - 1.381966011250105) < 1e-12
    assert abs(c.roots[1] - 3.618033988749895) < 1e-12
    assert all(status == "pass" for _, status in c.trace)
    assert r.config["d_lo"] == "-1/4 + 1*sqrt(41)/4"
    assert r.config["d_hi"] == "4*sqrt(3)/5"
    assert r.config["a_max"] == 23


def test_quadratic_default_agrees_with_float_sweep():
    # independent float model of the same filters
    lo = (math.sqrt(41) - 1) / 4
    hi = 4 * math.sqrt(3) / 5
    want = set()
    for a in range(1, 24):
        for b in range(1, a * a + 1):
            if a * a % b:
                continue
            disc = a * a - 4 * b
            if disc <= 0 or math.isqrt(disc) ** 2 == disc:
                continue
            d1 = (a - math.sqrt(disc)) / 2
            d2 = (a + math.sqrt(disc)) / 2
            if not (lo < d1 < hi and d1 > 0):
                continue
            if 1 / d1 ** 2 + 1 / d2 ** 2 > 0.5 + 1 / (2 * d2):
                continue
            want.add((b, -a, 1))
    got = {c.poly.coeffs for c in search_quadratic().survivors}
    assert got == want == {(5, -5, 1)}


def test_quadratic_moved_window_stays_certified():
    cfg = SearchConfig(2, d_lo=Surd(Fraction(27, 20)),
                       d_hi=Surd(Fraction(34, 25)))
    r = search_quadratic(cfg)
    assert r.survivors == ()
    assert not r.exploratory


def test_quadratic_empty_window_rejected():
    with pytest.raises(InvalidInputError, match="empty window"):
        SearchConfig(2, d_lo=Surd(Fraction(7, 5)),
                     d_hi=Surd(Fraction(34, 25)))


def test_quadratic_dropped_window_is_exploratory():
    r = search_quadratic(SearchConfig(2, drop=("window",), audit=True))
    assert r.exploratory
    assert EXPLORATORY_MARK in r.warnings
    assert (5, -5, 1) in {c.poly.coeffs for c in r.survivors}
    assert r.rejected
    for c in r.rejected:
        assert c.first_fail() != "window"


def test_quadratic_truncated_amax_is_exploratory():
    r = search_quadratic(SearchConfig(2, a_max=5))
    assert r.exploratory
    assert EXPLORATORY_MARK in r.warnings


def test_quadratic_threads_deterministic():
    a = search_quadratic(SearchConfig(2, audit=True, threads=1))
    b = search_quadratic(SearchConfig(2, audit=True, threads=4))
    assert [c.poly.coeffs for c in a.survivors] == \
        [c.poly.coeffs for c in b.survivors]
    assert [c.poly.coeffs for c in a.rejected] == \
        [c.poly.coeffs for c in b.rejected]
    assert a.config == b.config


# ---------------------------------------------------------------------------
# cubic search

def test_cubic_default_is_empty(cubic_default_audit):
    r = cubic_default_audit
    assert r.kind == "cubic"
    assert r.survivors == ()
    assert not r.exploratory
    assert len(r.rejected) == 18393
    hist = Counter(c.first_fail() for c in r.rejected)
    assert dict(hist) == {"divisibility-a3": 18243,
                          "divisibility-b3": 149,
                          "totally-positive": 1}


def test_cubic_divisibility_traces_are_honest(cubic_default_audit):
    rng = random.Random(5)
    sample = rng.sample(list(cubic_default_audit.rejected), 300)
    for c in sample:
        c0, c1, c2, _ = c.poly.coeffs
        a, b, cc = -c2, c1, -c0
        tag = c.first_fail()
        if tag == "divisibility-a3":
            assert a ** 3 % cc != 0
        elif tag == "divisibility-b3":
            assert a ** 3 % cc == 0 and b ** 3 % (cc * cc) != 0


def test_cubic_truncated_amax_is_exploratory():
    r = search_cubic(SearchConfig(3, a_max=3))
    assert r.survivors == ()
    assert r.exploratory


def test_cubic_exploratory_window_finds_seven_family():
    cfg = SearchConfig(3, d_lo=Surd(Fraction(9, 5)), d_hi=Surd(Fraction(19, 10)),
                       drop=("window", "mainineq"), audit=True)
    r = search_cubic(cfg)
    polys = [c.poly.coeffs for c in r.survivors]
    assert polys == [(-49, 49, -14, 1), (-192, 144, -24, 1),
                     (-256, 192, -32, 1), (-216, 180, -36, 1),
                     (-486, 324, -36, 1), (-675, 450, -45, 1)]
    assert r.exploratory
    for c in r.survivors:
        assert dict(c.trace)["mainineq"] == "skip"


# ---------------------------------------------------------------------------
# combined gap search

def test_gap_default_certifies_unique_survivor(gap_default_audit):
    r = gap_default_audit
    assert r.kind == "gap"
    assert [c.poly.coeffs for c in r.survivors] == [(5, -5, 1)]
    assert not r.exploratory
    assert r.config == {"d_max": "4*sqrt(3)/5", "k_max": 4, "f_max": "24",
                        "band": ["349/250", "213/125"]}
    assert len(r.warnings) == 2
    assert any("cost warning" in w for w in r.warnings)
    assert any("degree 4 skipped" in w for w in r.warnings)


def test_gap_default_audit_histogram(gap_default_audit):
    r = gap_default_audit
    assert len(r.rejected) == 4809
    hist = Counter(c.first_fail() for c in r.rejected)
    assert dict(hist) == {"d-number": 2623, "root-window": 1991,
                          "orbit-inequality": 1, "irreducible": 138,
                          "roots-real-ge-1": 56}


def test_gap_includes_quadratic_survivors(gap_default_audit):
    quad = {c.poly.coeffs for c in search_quadratic().survivors}
    gap = {c.poly.coeffs for c in gap_default_audit.survivors}
    assert quad <= gap


def test_gap_at_golden_bound_is_inclusive():
    r = search_gap(GOLDEN_GAP)
    assert [c.poly.coeffs for c in r.survivors] == [(5, -5, 1)]


def test_gap_below_golden_is_empty():
    r = search_gap(Surd(Fraction(67, 50)))
    assert r.survivors == ()
    assert r.config["d_max"] == "67/50"
    assert r.config["k_max"] == 2
    assert r.config["f_max"] == "4489/511"


def test_gap_preconditions():
    for bad in [Surd(Fraction(4, 3)), Surd(Fraction(13, 10)), Surd(0, 1, 2)]:
        with pytest.raises(InvalidInputError):
            search_gap(bad)


def test_gap_kmax_tracks_thresholds():
    # stay at or below 4 sqrt 3 / 5: past it the degree-4 shell opens up
    from fgap.obstruct import threshold
    for num, den in [(27, 20), (137, 100), (138, 100)]:
        d = Surd(Fraction(num, den))
        k_max = search_gap(d).config["k_max"]
        assert threshold("gdim_k", k_max).cmp(d) <= 0
        assert threshold("gdim_k", k_max + 1).cmp(d) > 0


def test_gap_fmax_formula():
    # f_max = d^2 / (2 - d^2) for rational d_max
    for num, den in [(27, 20), (67, 50), (11, 8)]:
        d = Fraction(num, den)
        got = Fraction(search_gap(Surd(d)).config["f_max"])
        assert got == d * d / (2 - d * d)


def test_gap_threads_deterministic():
    a = search_gap(Surd(Fraction(27, 20)), threads=1, audit=True)
    b = search_gap(Surd(Fraction(27, 20)), threads=4, audit=True)
    assert [c.poly.coeffs for c in a.survivors] == \
        [c.poly.coeffs for c in b.survivors]
    assert [c.poly.coeffs for c in a.rejected] == \
        [c.poly.coeffs for c in b.rejected]
    assert a.config == b.config and a.warnings == b.warnings


# ---------------------------------------------------------------------------
# rendering helpers

def test_surd_text_forms():
    assert surd_text(QUAD_DEFAULT_LO) == "-1/4 + 1*sqrt(41)/4"
    assert surd_text(QUAD_DEFAULT_HI) == "4*sqrt(3)/5"
    assert surd_text(Surd(Fraction(67, 50))) == "67/50"
    assert surd_text(Surd(5)) == "5"
