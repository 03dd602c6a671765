"""Exact arithmetic layer: isolation, factorization, surds, designated
roots, d-numbers, power polynomials, divisor bounds."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from fgap.algnum import (AlgebraicNumber, IntPoly, RatInterval, Surd,
                         conjugate_stats, factor_over_integers, is_d_number,
                         isolate_real_roots, largest_integer_divisor,
                         power_char_poly, ratio_integrality_oracle,
                         squarefree_decomposition)
from fgap.errors import DegreeCapError, InvalidInputError
from fgap.kernels import sturm_chain, varcount_at, varcount_inf

X = sympy.Symbol("x")


def P(*desc):
    """IntPoly from descending coefficients."""
    return IntPoly(list(reversed(desc)))


# ---------------------------------------------------------------------------
# IntPoly basics

def test_intpoly_text_forms():
    p = P(1, -5, 5)
    assert p.to_str() == "x^2 - 5x + 5"
    assert p.to_csv() == "1,-5,5"
    assert IntPoly.from_csv("1,-5,5") == p
    assert IntPoly.from_csv(" 1 , -5 , 5 ") == p


def test_intpoly_csv_rejects_garbage():
    with pytest.raises(InvalidInputError):
        IntPoly.from_csv("0,1,2")  # leading zero
    with pytest.raises(InvalidInputError):
        IntPoly.from_csv("1,,2")
    with pytest.raises(InvalidInputError):
        IntPoly.from_csv("x,1")
    with pytest.raises(InvalidInputError):
        IntPoly.from_csv("")


def test_intpoly_evaluate_exact():
    p = P(1, -5, 5)
    assert p(Fraction(4, 3)) == Fraction(16 - 60 + 45, 9)
    assert p(0) == 5


# ---------------------------------------------------------------------------
# root isolation

def test_isolate_pinned_quadratic():
    prof = isolate_real_roots(P(1, -5, 5))
    assert prof.n_real == 2 and prof.totally_real and prof.totally_positive
    (iv1, m1), (iv2, m2) = prof.roots
    assert m1 == m2 == 1
    assert iv1.hi <= iv2.lo
    assert float(iv1.lo) - 1e-15 <= 1.3819660112501051 <= float(iv1.hi) + 1e-15
    assert float(iv2.lo) - 1e-15 <= 3.6180339887498949 <= float(iv2.hi) + 1e-15


def test_isolate_no_real_roots():
    prof = isolate_real_roots(P(1, 0, 1))
    assert prof.n_real == 0 and not prof.totally_real


def test_isolate_multiplicity():
    prof = isolate_real_roots(P(1, -4, 4))
    assert len(prof.roots) == 1
    iv, mult = prof.roots[0]
    assert mult == 2
    assert iv.lo <= 2 <= iv.hi
    assert prof.totally_real and prof.totally_positive


def test_isolate_counts_match_sympy():
    rng = random.Random(3)
    for _ in range(80):
        c = [rng.randint(-10, 10) for _ in range(rng.randint(2, 6))]
        p = IntPoly(c) if any(c) and c[-1] else None
        if p is None or p.degree < 1:
            continue
        prof = isolate_real_roots(p)
        ivals = sympy.Poly(to_sympy_poly(p), X).intervals()
        assert len(prof.roots) == len(ivals)
        assert prof.n_real == sum(m for _, m in ivals)
        assert [m for _, m in prof.roots] == [m for _, m in ivals]
        # both lists enclose the same roots in the same order, so the
        # corresponding intervals must overlap
        for (iv, _), ((a, b), _) in zip(prof.roots, ivals):
            assert max(iv.lo, Fraction(int(a.p), int(a.q))) <= min(
                iv.hi, Fraction(int(b.p), int(b.q)))


def to_sympy_poly(p):
    return sum(v * X ** i for i, v in enumerate(p.coeffs))


# ---------------------------------------------------------------------------
# refinement

def test_refine_width_and_containment():
    prof = isolate_real_roots(P(1, -5, 5))
    a = AlgebraicNumber(P(1, -5, 5), prof.roots[0][0])
    iv = a.refine(Fraction(1, 10 ** 6))
    assert iv.width <= Fraction(1, 10 ** 6)
    assert Fraction("1.381965") <= iv.lo and iv.hi <= Fraction("1.381967")


def test_refine_rational_point():
    a = AlgebraicNumber(P(1, -2), None)
    iv = a.refine(Fraction(1, 10 ** 30))
    assert iv.lo == iv.hi == 2


def test_refine_sqrt2():
    prof = isolate_real_roots(P(1, 0, -2))
    a = AlgebraicNumber(P(1, 0, -2), prof.roots[1][0])
    iv = a.refine(Fraction(1, 1000))
    assert iv.width <= Fraction(1, 1000)
    assert iv.lo < Fraction(1414214, 1000000) < iv.hi + Fraction(1, 1000)


def test_refine_deterministic():
    prof = isolate_real_roots(P(1, -5, 5))
    a1 = AlgebraicNumber(P(1, -5, 5), prof.roots[0][0])
    a2 = AlgebraicNumber(P(1, -5, 5), prof.roots[0][0])
    w = Fraction(1, 10 ** 9)
    r1 = a1.refine(w)
    r2 = a2.refine(w)
    assert (r1.lo, r1.hi) == (r2.lo, r2.hi)


# ---------------------------------------------------------------------------
# factorization

def test_factor_pinned_examples():
    assert factor_over_integers(P(1, -5, 5)) == [(P(1, -5, 5), 1)]
    cube = P(1, -3) * P(1, -3) * P(1, -3)
    assert factor_over_integers(cube) == [(P(1, -3), 3)]
    mixed = P(1, 0, 0) * P(1, -5, 5)
    assert factor_over_integers(mixed) == [(P(1, 0), 2), (P(1, -5, 5), 1)]


def test_factor_swinnerton_dyer_case():
    # minimal polynomial of sqrt(2)+sqrt(3); splits mod every prime, so the
    # recombination stage has to do real work
    p = P(1, 0, -10, 0, 1)
    assert factor_over_integers(p) == [(p, 1)]


def test_factor_cyclotomic_product():
    # x^4 + x^3 + x^2 + x + 1 times x^2 + x + 1
    p = P(1, 1, 1, 1, 1) * P(1, 1, 1)
    assert factor_over_integers(p) == [(P(1, 1, 1), 1), (P(1, 1, 1, 1, 1), 1)]


def test_factor_matches_sympy_on_random_products():
    rng = random.Random(19)
    for _ in range(60):
        c = [rng.randint(-8, 8) for _ in range(rng.randint(2, 7))]
        if not any(c) or not c[-1]:
            continue
        p = IntPoly(c)
        got = factor_over_integers(p)
        want = sympy.factor_list(to_sympy_poly(p))[1]
        want_set = {}
        for fac, mult in want:
            coeffs = [int(v) for v in reversed(sympy.Poly(fac, X).all_coeffs())]
            if len(coeffs) == 1:
                continue  # sympy sometimes keeps integer content as a factor
            if coeffs[-1] < 0:
                coeffs = [-v for v in coeffs]
            want_set[tuple(coeffs)] = want_set.get(tuple(coeffs), 0) + mult
        got_set = {tuple(f.coeffs): m for f, m in got}
        assert got_set == want_set, (c, got, want)


def test_factor_roundtrip_reproduces_input():
    rng = random.Random(29)
    for _ in range(60):
        c = [rng.randint(-9, 9) for _ in range(rng.randint(2, 8))]
        if not any(c) or not c[-1]:
            continue
        p = IntPoly(c)
        prod = IntPoly([1])
        for fac, mult in factor_over_integers(p):
            for _ in range(mult):
                prod = prod * fac
        # equality up to rational content times sign
        k = len(p.coeffs) - 1
        assert prod.degree == p.degree
        lhs = [x * p.coeffs[-1] for x in prod.coeffs]
        rhs = [x * prod.coeffs[-1] for x in p.coeffs]
        assert lhs == rhs


def test_factor_degree_cap():
    coeffs = [0] * 26
    coeffs[0] = -1
    coeffs[25] = 1  # x^25 - 1, degree above the cap
    with pytest.raises(DegreeCapError):
        factor_over_integers(IntPoly(coeffs))


def test_squarefree_decomposition_known():
    p = P(1, -4, 4) * P(1, -1)
    parts = squarefree_decomposition(list(p.coeffs))
    rebuilt = {}
    for fac, mult in parts:
        rebuilt[mult] = IntPoly(fac)
    assert rebuilt[1] == P(1, -1)
    assert rebuilt[2] == P(1, -2)


# ---------------------------------------------------------------------------
# Surd arithmetic

def test_surd_construction_and_float():
    s = Surd(0, Fraction(4, 5), 3)  # 4*sqrt(3)/5
    assert abs(float(s) - 1.3856406460551018) < 1e-15
    assert s.cmp_fraction(Fraction(7, 5)) < 0
    assert s.cmp_fraction(Fraction(138, 100)) > 0


def test_surd_cross_field_cmp():
    a = Surd(0, 1, 2)           # sqrt(2)
    b = Surd(0, Fraction(4, 5), 3)  # 4 sqrt(3)/5
    assert a.cmp(b) > 0
    assert b.cmp(a) < 0
    assert a.cmp(Surd(0, 1, 2)) == 0
    phi2 = Surd(Fraction(5, 2), Fraction(-1, 2), 5)  # (5 - sqrt 5)/2
    assert phi2.cmp(b) < 0


def test_surd_arithmetic_identities():
    s = Surd(2, 3, 5)
    t = Surd(-1, Fraction(1, 2), 5)
    assert ((s + t) - t).cmp(s) == 0
    prod = s * t
    conj = s.conjugate() * t.conjugate()
    assert prod.conjugate().cmp(conj) == 0
    assert ((s / t) * t).cmp(s) == 0
    assert (s * Fraction(2, 3) - s / Fraction(3, 2)).cmp(Surd(0)) == 0


def test_surd_floor_ceil():
    s = Surd(0, 1, 2)
    assert s.floor() == 1 and s.ceil() == 2
    t = Surd(4, 2, 2)  # 4 + 2 sqrt 2 ~ 6.828
    assert t.floor() == 6 and t.ceil() == 7
    assert Surd(3).floor() == 3 and Surd(3).ceil() == 3
    neg = Surd(0, -1, 2)
    assert neg.floor() == -2 and neg.ceil() == -1


def test_surd_approx_encloses():
    s = Surd(1, 2, 7)
    iv = s.approx(Fraction(1, 10 ** 12))
    assert iv.hi - iv.lo <= Fraction(1, 10 ** 12)
    assert iv.lo <= Fraction(float(s)) + Fraction(1, 10 ** 9)
    assert s.cmp_fraction(iv.lo) >= 0 and s.cmp_fraction(iv.hi) <= 0


def test_surd_algebraic_integer_and_minpoly():
    phi = Surd(Fraction(5, 2), Fraction(1, 2), 5)  # (5 + sqrt 5)/2
    assert phi.is_algebraic_integer()
    assert phi.min_poly() == P(1, -5, 5)
    assert Surd(0, 1, 2).min_poly() == P(1, 0, -2)
    assert Surd(Fraction(1, 2), Fraction(1, 2), 3).is_algebraic_integer() \
        is False
    assert Surd(7).min_poly() == P(1, -7)


def test_surd_sqrt_fraction():
    s = Surd.sqrt_fraction(Fraction(32, 17))
    assert (s * s).cmp_fraction(Fraction(32, 17)) == 0
    assert Surd.sqrt_fraction(Fraction(49, 4)).cmp_fraction(
        Fraction(7, 2)) == 0


small_fracs = st.fractions(min_value=-8, max_value=8, max_denominator=12)


@given(small_fracs, small_fracs, small_fracs, small_fracs)
@settings(max_examples=80, deadline=None)
def test_surd_ring_axioms_property(p1, q1, p2, q2):
    a = Surd(p1, q1, 7)
    b = Surd(p2, q2, 7)
    assert ((a + b) * (a - b) - (a * a - b * b)).cmp(Surd(0)) == 0
    assert (a + b).cmp(b + a) == 0
    got = float(a * b)
    want = float(a) * float(b)
    assert abs(got - want) <= 1e-9 * (1 + abs(want))


@given(small_fracs, small_fracs)
@settings(max_examples=80, deadline=None)
def test_surd_floor_matches_float(p, q):
    s = Surd(p, q, 7)
    f = float(s)
    # stay away from integer boundaries where float rounding could differ
    if abs(f - round(f)) < 1e-6:
        return
    import math
    assert s.floor() == math.floor(f)
    assert s.ceil() == math.ceil(f)


# ---------------------------------------------------------------------------
# AlgebraicNumber comparisons

def fib_roots():
    p = P(1, -5, 5)
    prof = isolate_real_roots(p)
    return (AlgebraicNumber(p, prof.roots[0][0]),
            AlgebraicNumber(p, prof.roots[1][0]))


def test_algnum_cmp_families():
    lo, hi = fib_roots()
    assert lo.cmp_fraction(Fraction(4, 3)) > 0
    assert lo.cmp_fraction(Fraction(7, 5)) < 0
    assert lo.cmp_surd(Surd(0, Fraction(4, 5), 3)) < 0
    assert hi.cmp_surd(Surd(0, 1, 2)) > 0
    assert lo.cmp(hi) < 0 and hi.cmp(lo) > 0 and lo.cmp(lo) == 0
    # exact equality against its own surd form (5 - sqrt 5)/2
    assert lo.cmp_surd(Surd(Fraction(5, 2), Fraction(-1, 2), 5)) == 0


def test_algnum_rejects_non_monic_and_bad_interval():
    with pytest.raises(InvalidInputError):
        AlgebraicNumber(P(2, -5, 5), RatInterval(1, 2))
    with pytest.raises(InvalidInputError):
        AlgebraicNumber(P(1, -5, 5), RatInterval(5, 9))


def test_algnum_floor():
    lo, hi = fib_roots()
    assert lo.floor() == 1
    assert hi.floor() == 3
    assert AlgebraicNumber(P(1, -2), None).floor() == 2


# ---------------------------------------------------------------------------
# d-numbers

def test_d_number_pinned():
    assert is_d_number(P(1, -5, 5)) is True
    assert is_d_number(P(1, -5, 3)) is False
    assert is_d_number(P(1, -14, 49, -49)) is True
    assert is_d_number(P(1, -3, 1)) is True
    assert ratio_integrality_oracle(P(1, -3, 1)) is True
    assert ratio_integrality_oracle(P(1, -7)) is True
    assert ratio_integrality_oracle(P(1, -5, 5)) is True


def test_d_number_preconditions():
    with pytest.raises(InvalidInputError):
        is_d_number(P(2, -5, 5))
    with pytest.raises(InvalidInputError):
        is_d_number(P(1, -5, 0))


def test_d_number_degree4_uses_oracle():
    # x^4 - 4x^2 + 2: conjugate ratios are +-1, +-(1+sqrt 2), +-(sqrt 2 - 1),
    # all units, so the root ideal is stable under conjugation
    assert is_d_number(P(1, 0, -4, 0, 2)) is True
    # x^4 + x + 2: the ratio polynomial Res_y(p(y), p(xy)) has primitive
    # leading coefficient 8, so some conjugate ratio is not integral
    assert is_d_number(P(1, 0, 0, 1, 2)) is False
    # repeated quadratic factor: d-number status depends only on the roots
    p = P(1, -5, 5) * P(1, -5, 5)
    assert is_d_number(p) is True


# ---------------------------------------------------------------------------
# power_char_poly / largest_integer_divisor

def test_power_char_poly_pinned():
    lo, _ = fib_roots()
    assert power_char_poly(lo, 3) == P(1, -50, 125)
    assert power_char_poly(lo, 1) == P(1, -5, 5)
    two = AlgebraicNumber(P(1, -2), None)
    assert power_char_poly(two, 3) == P(1, -8)


def test_largest_integer_divisor_pinned():
    assert largest_integer_divisor(P(1, -50, 125)) == 5
    assert largest_integer_divisor(P(1, -8)) == 8
    assert largest_integer_divisor(P(1, -5, 5)) == 1


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_power_char_poly_contains_powered_root(a1, a0, m):
    p = IntPoly([a0, a1, 1])
    if factor_over_integers(p) != [(p, 1)]:
        return
    prof = isolate_real_roots(p)
    if len(prof.roots) != 2:
        return
    root = AlgebraicNumber(p, prof.roots[0][0])
    pcp = power_char_poly(root, m)
    iv = root.refine(Fraction(1, 10 ** 12))
    lo = min(iv.lo ** m, iv.hi ** m)
    hi = max(iv.lo ** m, iv.hi ** m)
    # certified: pcp vanishes somewhere on the powered enclosure
    assert pcp(lo) == 0 or pcp(hi) == 0 or \
        _count_roots_between(pcp, lo, hi) >= 1


def _count_roots_between(p, lo, hi):
    sq = squarefree_decomposition(list(p.coeffs))
    total = 0
    for fac, _ in sq:
        if len(fac) < 2:
            continue
        chain = sturm_chain(fac)
        total += (varcount_at(chain, lo.numerator, lo.denominator)
                  - varcount_at(chain, hi.numerator, hi.denominator))
    return total


@given(st.integers(-9, 9), st.integers(-9, 9), st.booleans())
@settings(max_examples=60, deadline=None)
def test_lid_is_one_for_unit_constant_term(a2, a1, neg):
    c0 = -1 if neg else 1
    p = IntPoly([c0, a1, a2, 1])
    assert largest_integer_divisor(p) == 1


# ---------------------------------------------------------------------------
# conjugate_stats

def test_conjugate_stats_pinned():
    lo, hi, mean = conjugate_stats(P(1, -5, 5))
    assert abs(lo.approx_float() - 1.381966011250105) < 1e-9
    assert abs(hi.approx_float() - 3.618033988749895) < 1e-9
    assert mean == Fraction(5, 2)

    cube = P(1, -3) * P(1, -3) * P(1, -3)
    lo, hi, mean = conjugate_stats(cube)
    assert lo.approx_float() == 3 and hi.approx_float() == 3
    assert mean == 3

    lo, hi, mean = conjugate_stats(P(1, -8, 8))
    assert abs(lo.approx_float() - 1.1715728752538097) < 1e-9
    assert abs(hi.approx_float() - 6.82842712474619) < 1e-9
    assert mean == 4


def test_conjugate_stats_rejects_complex_roots():
    with pytest.raises(InvalidInputError):
        conjugate_stats(P(1, 0, 1))
