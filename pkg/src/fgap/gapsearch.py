"""Certified exhaustive searches for candidate global dimensions.

Three entry points: search_quadratic and search_cubic reproduce the
appendix-style enumerations with their published coefficient bounds, and
search_gap runs the general bounded-degree enumeration below a cutoff
d_max.  Every filter decision is exact: quadratic data lives in closed
form as surds, cubic/d_max comparisons use exact order tests against
algebraic numbers, and the one genuinely irrational inequality (the
pair inequality between the smallest and largest root) is certified by
outward-rounded interval refinement with a hard precision cap.

Window conventions: the appendix searches use a half-open root window
[d_lo, d_hi); search_gap uses (4/3, d_max].  Irrational endpoints can
never tie with algebraic-integer candidates, which is asserted by the
exact comparisons rather than assumed.
"""

from fractions import Fraction
from math import comb, isqrt

from . import kernels
from .algnum import (AlgebraicNumber, IntPoly, RatInterval, Surd, WIDTH_CAP,
                     factor_over_integers, is_d_number, isolate_real_roots,
                     poly_div_exact, poly_gcd_int)
from .errors import AmbiguityError, InvalidInputError
from .obstruct import threshold

SQRT2 = Surd(0, 1, 2)
FOUR_THIRDS = Fraction(4, 3)

QUAD_DEFAULT_LO = Surd(Fraction(-1, 4), Fraction(1, 4), 41)   # (sqrt41 - 1)/4
QUAD_DEFAULT_HI = Surd(0, Fraction(4, 5), 3)                  # 4*sqrt(3)/5
CUBIC_DEFAULT_LO = Surd.sqrt_fraction(Fraction(32, 17))
CUBIC_DEFAULT_HI = QUAD_DEFAULT_HI

QUAD_A_MAX = 23
CUBIC_A_MAX = 45

EXPLORATORY_MARK = ("exploratory run - necessary-condition certificate "
                    "does not apply")


def surd_text(s):
    """Stable human form of a Surd for config echoes."""
    if s.is_rational:
        return str(s.p)
    parts = []
    if s.p:
        parts.append(str(s.p))
    q = s.q
    rad = "sqrt(%d)" % s.n
    if q == 1:
        qtxt = rad
    elif q == -1:
        qtxt = "-" + rad
    elif q.denominator == 1:
        qtxt = "%d*%s" % (q.numerator, rad)
    else:
        qtxt = "%d*%s/%d" % (q.numerator, rad, q.denominator)
    parts.append(qtxt)
    return " + ".join(parts).replace("+ -", "- ")


class Candidate:
    """One enumerated polynomial with its ordered filter trace."""

    __slots__ = ("poly", "trace", "survivor", "roots")

    def __init__(self, poly, trace, roots=None):
        self.poly = poly
        self.trace = tuple(trace)
        self.survivor = all(st != "fail" for _, st in trace)
        self.roots = tuple(roots) if roots is not None else None

    def first_fail(self):
        for name, st in self.trace:
            if st == "fail":
                return name
        return None

    def __repr__(self):
        return "Candidate(%s, %s)" % (self.poly.to_str(),
                                      "pass" if self.survivor else
                                      "fail@" + str(self.first_fail()))


class SearchConfig:
    """Window and override state for the fixed-degree searches."""

    __slots__ = ("degree", "d_lo", "d_hi", "a_max", "drop", "audit",
                 "threads", "exploratory")

    def __init__(self, degree, d_lo=None, d_hi=None, a_max=None, drop=(),
                 audit=False, threads=None):
        if degree not in (2, 3):
            raise InvalidInputError("degree must be 2 or 3")
        default_lo = QUAD_DEFAULT_LO if degree == 2 else CUBIC_DEFAULT_LO
        default_hi = QUAD_DEFAULT_HI if degree == 2 else CUBIC_DEFAULT_HI
        default_amax = QUAD_A_MAX if degree == 2 else CUBIC_A_MAX
        # the completeness certificate needs every necessary-condition
        # filter active and the full coefficient grid; window moves alone
        # keep it (the enumeration bounds are derived from the window)
        loosened = bool(drop)
        d_lo = default_lo if d_lo is None else _as_surd(d_lo)
        d_hi = default_hi if d_hi is None else _as_surd(d_hi)
        if d_lo.cmp(d_hi) >= 0:
            raise InvalidInputError("empty window: d_lo >= d_hi")
        drop = frozenset(drop)
        if d_hi.cmp(SQRT2) >= 0 and "mainineq" not in drop:
            raise InvalidInputError(
                "window reaches sqrt(2); the pair inequality is undefined "
                "there (drop the mainineq filter for an exploratory run)")
        self.degree = degree
        self.d_lo = d_lo
        self.d_hi = d_hi
        self.a_max = int(a_max) if a_max is not None else default_amax
        if self.a_max < default_amax:
            loosened = True
        self.drop = drop
        self.audit = bool(audit)
        self.threads = threads
        self.exploratory = loosened

    def echo(self):
        d = {
            "degree": self.degree,
            "d_lo": surd_text(self.d_lo),
            "d_hi": surd_text(self.d_hi),
            "a_max": self.a_max,
            "dropped_filters": sorted(self.drop),
            "exploratory": self.exploratory,
        }
        return d


class SearchResult:
    __slots__ = ("kind", "survivors", "rejected", "warnings", "exploratory",
                 "config")

    def __init__(self, kind, survivors, rejected, warnings, exploratory,
                 config):
        self.kind = kind
        self.survivors = tuple(survivors)
        self.rejected = tuple(rejected)
        self.warnings = tuple(warnings)
        self.exploratory = exploratory
        self.config = config


def _as_surd(x):
    if isinstance(x, Surd):
        return x
    if isinstance(x, float):
        raise InvalidInputError("window endpoints must be exact; pass a "
                                "string, Fraction, or Surd")
    return Surd(Fraction(x))


def _resolve_threads(threads):
    if threads is not None:
        n = int(threads)
    else:
        import os
        raw = os.environ.get("FGAP_THREADS", "1")
        try:
            n = int(raw)
        except ValueError:
            raise InvalidInputError("FGAP_THREADS must be a positive "
                                    "integer, got %r" % raw) from None
    if n < 1:
        raise InvalidInputError("thread count must be >= 1")
    return n


def _parallel_map(fn, items, threads):
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items))


# ---------------------------------------------------------------------------
# the pair inequality (smallest vs largest conjugate), two encodings

def mainineq_exact_quadratic(a, b):
    """Exact rational-form pair inequality for x^2 - ax + b.

    Clearing denominators in  1/d1^2 + 1/d2^2 <= 1/2 + 1/(2 d2)  gives
    b*d1 >= 2a^2 - 4b - b^2, decided exactly on the smaller root.
    """
    disc = a * a - 4 * b
    if disc <= 0:
        raise InvalidInputError("needs two distinct real roots")
    d1 = Surd(Fraction(a, 2), Fraction(-1, 2), disc)
    rhs = Fraction(2 * a * a - 4 * b - b * b, b)
    return d1.cmp_fraction(rhs) >= 0


def mainineq_enclosure_pair(d1, d3, cap=WIDTH_CAP, label=""):
    """Certified 1/d1^2 + 1/d3^2 - 1/(2 d3) - 1/2 <= 0 via refinement.

    d1 and d3 are AlgebraicNumbers with positive enclosures.  Raises an
    ambiguity error naming the candidate if the sign cannot be certified
    before the width cap.
    """
    width = Fraction(1, 2 ** 8)
    half = RatInterval(Fraction(1, 2), Fraction(1, 2))
    while True:
        iv1 = d1.refine(width)
        iv3 = d3.refine(width)
        if iv1.lo <= 0 or iv3.lo <= 0:
            width /= 16
            continue
        inv1 = iv1.inv()
        inv3 = iv3.inv()
        expr = (inv1 * inv1) + (inv3 * inv3) - inv3.scale(Fraction(1, 2)) \
            - half
        if expr.hi <= 0:
            return True
        if expr.lo > 0:
            return False
        if width < cap:
            raise AmbiguityError(
                "pair inequality sign not certified at width cap%s"
                % (" for " + label if label else ""))
        width /= 16


def orbit_inequality_exact(poly, f_root):
    """Exact sum-of-inverse-squares test against the largest root.

    sum 1/d_i^2 <= (1 + 1/f)/2 where the sum runs over the roots of poly
    and f is the largest of them.  Rational left side from coefficients;
    the comparison folds into one exact order test.
    """
    k = poly.degree
    c = poly.coeffs

    def e(j):
        if j < 0 or j > k:
            return 0
        return (-1 if j % 2 else 1) * c[k - j]

    lhs = Fraction(e(k - 1) ** 2 - 2 * e(k) * e(k - 2), e(k) ** 2)
    t = 2 * lhs - 1
    if t <= 0:
        return True
    return f_root.cmp_fraction(1 / t) <= 0


def K_of(d, digits=40):
    """Outward-rounded enclosure of K(d) = 1/(1/4 - sqrt(9/16 - 1/d^2)).

    Accepts a Surd, Fraction-like, or RatInterval; requires certified
    4/3 < d < sqrt(2).
    """
    if isinstance(d, RatInterval):
        lo, hi = d.lo, d.hi
        if not (lo > FOUR_THIRDS and hi * hi < 2):
            raise InvalidInputError("K(d) needs 4/3 < d < sqrt(2)")
    else:
        s = _as_surd(d)
        if not (s.cmp_fraction(FOUR_THIRDS) > 0 and s.cmp(SQRT2) < 0):
            raise InvalidInputError("K(d) needs 4/3 < d < sqrt(2)")
        iv = s.approx(Fraction(1, 10 ** digits))
        lo, hi = iv.lo, iv.hi

    def k_at(v, round_up):
        t = Fraction(9, 16) - 1 / (v * v)
        if t < 0:
            raise InvalidInputError("K(d) domain violated")
        s_lo, s_hi = _sqrt_bounds(t, digits)
        den = Fraction(1, 4) - (s_hi if round_up else s_lo)
        if den <= 0:
            raise InvalidInputError("K(d) domain violated (d too close to "
                                    "sqrt(2) at this precision)")
        return 1 / den

    return RatInterval(k_at(lo, False), k_at(hi, True))


def _sqrt_bounds(f, digits):
    """[lo, hi] rationals with lo <= sqrt(f) <= hi, width 10**-digits."""
    f = Fraction(f)
    if f < 0:
        raise InvalidInputError("negative radicand")
    scale = 10 ** digits
    r = isqrt(f.numerator * scale * scale // f.denominator)
    return Fraction(r, scale), Fraction(r + 2, scale)


# ---------------------------------------------------------------------------
# quadratic search

def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    out.sort()
    return out


def search_quadratic(cfg=None):
    """Enumerate x^2 - ax + b over the appendix grid and filter exactly."""
    if cfg is None:
        cfg = SearchConfig(2)
    if cfg.degree != 2:
        raise InvalidInputError("config degree must be 2")
    threads = _resolve_threads(cfg.threads)

    def run_a(a):
        cands = []
        if "window" in cfg.drop:
            blo, bhi = 1, a * a
        else:
            # integer b window from the root window: b = d1*(a - d1) is
            # increasing in d1 up to a/2, so the endpoint values bound it;
            # past the peak fall back to the unconditional b < a^2/4
            half_a = Fraction(a, 2)
            if cfg.d_lo.cmp_fraction(half_a) >= 0:
                return cands
            blo = (cfg.d_lo * Fraction(a) - cfg.d_lo * cfg.d_lo).ceil()
            if cfg.d_hi.cmp_fraction(half_a) <= 0:
                bhi = (cfg.d_hi * Fraction(a) - cfg.d_hi * cfg.d_hi).ceil() - 1
            else:
                bhi = (a * a - 1) // 4
        for b in _divisors(a * a):
            if b < blo or b > bhi:
                continue
            cands.append(_quad_candidate(cfg, a, b))
        return cands

    batches = _parallel_map(run_a, range(3, cfg.a_max + 1), threads)
    return _assemble("quadratic", cfg, batches)


def _quad_candidate(cfg, a, b):
    poly = IntPoly([b, -a, 1])
    trace = []
    roots = None

    def drop_or(name, decide):
        if name in cfg.drop:
            trace.append((name, "skip"))
            return True
        ok = decide()
        trace.append((name, "pass" if ok else "fail"))
        return ok

    ok = drop_or("integer-prefilter", lambda: 16 - 12 * a + 9 * b >= 1)
    disc = a * a - 4 * b
    if ok:
        red = disc >= 0 and isqrt(max(disc, 0)) ** 2 == disc
        ok = drop_or("irreducible", lambda: not red)
    if ok:
        ok = drop_or("totally-positive",
                     lambda: disc > 0 and a > 0 and b > 0)
    d1 = d2 = None
    if ok:
        d1 = Surd(Fraction(a, 2), Fraction(-1, 2), disc)
        d2 = Surd(Fraction(a, 2), Fraction(1, 2), disc)
        ok = drop_or("root-window",
                     lambda: d1.cmp(cfg.d_lo) >= 0 and d1.cmp(cfg.d_hi) < 0)
    if ok:
        drop_or("mainineq", lambda: mainineq_exact_quadratic(a, b))
    if d1 is not None:
        roots = (float(d1), float(d2))
    return Candidate(poly, trace, roots)


# ---------------------------------------------------------------------------
# cubic search

def search_cubic(cfg=None):
    """Enumerate x^3 - ax^2 + bx - c with the appendix constraints."""
    if cfg is None:
        cfg = SearchConfig(3)
    if cfg.degree != 3:
        raise InvalidInputError("config degree must be 3")
    threads = _resolve_threads(cfg.threads)
    drop_window = "window" in cfg.drop
    lo1, lo2, lo3 = cfg.d_lo, cfg.d_lo ** 2, cfg.d_lo ** 3
    hi1, hi2, hi3 = cfg.d_hi, cfg.d_hi ** 2, cfg.d_hi ** 3
    # rational lower bound on d_lo: P(r) <= 0 stays necessary at any
    # r below every root, which keeps the dropped-window enumeration sane
    r_lo = cfg.d_lo.approx(Fraction(1, 10 ** 20)).lo

    def run_a(a):
        cands = []
        lo_base = lo3 - lo2 * a
        hi_base = hi3 - hi2 * a
        for b in range(1, a * a // 3 + 1):
            if drop_window:
                # finiteness comes from the divisibility constraint
                c_min = r_lo * (r_lo * (r_lo - a) + b)
                c_iter = [c for c in _divisors(a ** 3) if c >= c_min]
            else:
                c_lo = (lo_base + lo1 * b).ceil()
                c_hi = (hi_base + hi1 * b).ceil() - 1
                c_iter = range(max(1, c_lo), c_hi + 1)
            for c in c_iter:
                cands.append(_cubic_candidate(cfg, a, b, c))
        return cands

    batches = _parallel_map(run_a, range(1, cfg.a_max + 1), threads)
    return _assemble("cubic", cfg, batches)


def _cubic_candidate(cfg, a, b, c):
    poly = IntPoly([-c, b, -a, 1])
    trace = []
    roots = None

    def drop_or(name, decide):
        if name in cfg.drop:
            trace.append((name, "skip"))
            return True
        ok = decide()
        trace.append((name, "pass" if ok else "fail"))
        return ok

    ok = drop_or("divisibility-a3", lambda: a ** 3 % c == 0)
    if ok:
        ok = drop_or("divisibility-b3", lambda: b ** 3 % (c * c) == 0)
    if ok:
        ok = drop_or("irreducible",
                     lambda: all(t ** 3 - a * t * t + b * t - c != 0
                                 for t in _divisors(c)))
    if ok:
        disc = (18 * a * b * c - 4 * a ** 3 * c + a * a * b * b
                - 4 * b ** 3 - 27 * c * c)
        ok = drop_or("totally-positive",
                     lambda: disc > 0 and a > 0 and b > 0 and c > 0)
    prof = None
    if ok:
        prof = isolate_real_roots(poly)
        d1 = AlgebraicNumber(poly, prof.roots[0][0])
        ok = drop_or("root-window",
                     lambda: d1.cmp_surd(cfg.d_lo) >= 0
                     and d1.cmp_surd(cfg.d_hi) < 0)
    if ok:
        d3 = AlgebraicNumber(poly, prof.roots[-1][0])
        label = poly.to_str()
        drop_or("mainineq",
                lambda: mainineq_enclosure_pair(d1, d3, label=label))
    if prof is not None:
        roots = tuple(AlgebraicNumber(poly, iv).approx_float()
                      for iv, _ in prof.roots)
    return Candidate(poly, trace, roots)


def _assemble(kind, cfg, batches):
    survivors = []
    rejected = []
    for batch in batches:
        for cand in batch:
            if cand.survivor:
                survivors.append(cand)
            elif cfg.audit:
                rejected.append(cand)
    warnings = []
    if cfg.exploratory:
        warnings.append(EXPLORATORY_MARK)
    return SearchResult(kind, survivors, rejected, warnings,
                        cfg.exploratory, cfg.echo())


# ---------------------------------------------------------------------------
# general bounded-degree search below d_max

def _gap_cut_points(d_max):
    """Rationals (gamma, delta) with d_max < gamma < delta < the lower
    bound on every non-smallest root.

    From the orbit inequality, any root other than the smallest d1 has
    1/g^2 <= 1/2 + 1/(2 d1) - 1/d1^2, which is increasing in d1 on the
    window, so g stays above 1/sqrt(h(d_max)); the band between d_max and
    that bound is root-free and gives two sign conditions on candidates.
    gamma hugs d_max (tight final-coefficient windows) and delta hugs the
    far bound (sharp symmetric-function envelopes).
    """
    one = Surd(1)
    h = (Surd(Fraction(1, 2)) + one / (d_max * Fraction(2))
         - one / (d_max * d_max))
    dm = float(d_max)
    bb = 1.0 / float(h) ** 0.5
    for digits in range(3, 60):
        scale = 10 ** digits
        gamma = Fraction(int((dm + (bb - dm) / 32) * scale) + 1, scale)
        delta = Fraction(int((dm + 31 * (bb - dm) / 32) * scale), scale)
        if gamma >= delta:
            continue
        if d_max.cmp_fraction(gamma) >= 0:
            continue
        # need delta < 1/sqrt(h)  <=>  h < 1/delta^2
        if h.cmp_fraction(1 / (delta * delta)) < 0:
            return gamma, delta
    raise AmbiguityError("could not certify a root-free band above d_max")


def _qnum(poly_asc, p, q):
    return kernels.eval_qnum(list(poly_asc), p, q)


def _deriv_prefix(prefix, k):
    """Ascending coefficients of P^(k-j) for the descending prefix."""
    j = len(prefix) - 1
    asc = [0] * (j + 1)
    for i, si in enumerate(prefix):
        c = si
        for v in range(j - i + 1, k - i + 1):
            c *= v
        asc[j - i] = c
    return asc


def _totally_real_in_box(asc, lo_n, lo_d, q_hi):
    """Sound prune: False only if the polynomial certainly cannot divide a
    totally real polynomial with all roots in (lo_n/lo_d, q_hi]."""
    deg = len(asc) - 1
    if deg < 1:
        return True
    if deg == 1:
        # single root -asc[0]/asc[1] must land in the box
        num, den = -asc[0], asc[1]
        if den < 0:
            num, den = -num, -den
        return lo_d * num > lo_n * den and num <= q_hi * den
    if deg == 2:
        c0, c1, c2 = asc
        if c2 < 0:
            c0, c1, c2 = -c0, -c1, -c2
        if c1 * c1 - 4 * c2 * c0 < 0:
            return False
        # both roots in the box: nonnegative values at the endpoints and
        # the vertex strictly inside (boundary ties stay unpruned)
        if lo_d * lo_d * c0 + lo_d * lo_n * c1 + lo_n * lo_n * c2 < 0:
            return False
        if c0 + q_hi * c1 + q_hi * q_hi * c2 < 0:
            return False
        return -lo_d * c1 > 2 * lo_n * c2 and -c1 <= 2 * c2 * q_hi
    g = poly_gcd_int(list(asc), [i * asc[i] for i in range(1, len(asc))])
    sqf = poly_div_exact(list(asc), g) if len(g) > 1 else list(asc)
    chain = kernels.sturm_chain(sqf)
    total = (kernels.varcount_inf(chain, False)
             - kernels.varcount_inf(chain, True))
    if total < len(sqf) - 1:
        return False
    inbox = (kernels.varcount_at(chain, lo_n, lo_d)
             - kernels.varcount_at(chain, q_hi, 1))
    return inbox == total


def _interval_eval(asc, iv):
    acc = RatInterval(asc[-1], asc[-1])
    for c in reversed(asc[:-1]):
        acc = acc * iv + RatInterval(c, c)
    return acc


def _next_coeff_range(prefix, k, box_lo, f_hi, cuts, final):
    """Integer range [lo, hi] for the next descending coefficient.

    Linear sign conditions on P^(k-j-1) at the box endpoints, at the
    (exactly computable) critical points for low depth, and, at the final
    coefficient, at the root-free band cut points.  The outer envelope
    bounds the elementary symmetric function of one root in (box_lo,
    gamma) and k-1 roots in (delta, f_hi].  All rounding is outward, so
    no valid candidate is lost.
    """
    j = len(prefix) - 1
    gamma, delta = cuts
    w_asc = _deriv_prefix(prefix + [0], k)
    bcoef = 1
    for v in range(1, k - j):
        bcoef *= v
    m = j + 1
    e_min = (box_lo * comb(k - 1, m - 1) * delta ** (m - 1)
             + comb(k - 1, m) * delta ** m)
    e_max = (gamma * comb(k - 1, m - 1) * f_hi ** (m - 1)
             + comb(k - 1, m) * f_hi ** m)
    if m % 2:
        lo, hi = (-e_max).__ceil__(), (-e_min).__floor__()
    else:
        lo, hi = e_min.__ceil__(), e_max.__floor__()

    def add(sigma, a_val, strict=False):
        nonlocal lo, hi
        # sigma * (a + B*s) >= 0   (or > 0 when strict)
        if sigma > 0:
            bound = -Fraction(a_val) / bcoef
            b = bound.__ceil__()
            if strict and bound == b:
                b += 1
            lo = max(lo, b)
        else:
            bound = -Fraction(a_val) / bcoef
            b = bound.__floor__()
            if strict and bound == b:
                b -= 1
            hi = min(hi, b)

    sig_lo = -1 if (j + 1) % 2 else 1
    add(sig_lo, _frac_eval(w_asc, box_lo))
    add(1, Fraction(_qnum(w_asc, f_hi, 1)))
    if final and lo <= hi:
        sig_cut = 1 if (k - 1) % 2 == 0 else -1
        add(sig_cut, _frac_eval(w_asc, gamma), strict=True)
        add(sig_cut, _frac_eval(w_asc, delta), strict=True)

    # interior alternation at the critical points (roots of P^(k-j))
    if j == 1 and lo <= hi:
        q1 = _deriv_prefix(prefix, k)
        root = Fraction(-q1[0], q1[1])
        add(-1, _frac_eval(w_asc, root))
    elif j == 2 and lo <= hi:
        q2 = _deriv_prefix(prefix, k)
        disc = q2[1] * q2[1] - 4 * q2[2] * q2[0]
        if disc > 0:
            r1 = Surd(Fraction(-q2[1], 2 * q2[2]),
                      Fraction(-1, 2 * q2[2]), disc)
            r2 = Surd(Fraction(-q2[1], 2 * q2[2]),
                      Fraction(1, 2 * q2[2]), disc)
            add(1, _surd_eval_bound(w_asc, r1, want_upper=True))
            add(-1, _surd_eval_bound(w_asc, r2, want_upper=False))
    elif j >= 3 and lo <= hi:
        prof = isolate_real_roots(_deriv_prefix(prefix, k))
        roots = prof.roots
        if prof.totally_real and all(m == 1 for _, m in roots):
            for t, (iv, _) in enumerate(roots, start=1):
                sigma = 1 if (j + 1 - t) % 2 == 0 else -1
                enc = _interval_eval(w_asc, iv)
                if sigma > 0:
                    add(1, enc.hi)
                else:
                    add(-1, enc.lo)
    return lo, hi


def _frac_eval(asc, x):
    x = Fraction(x)
    acc = Fraction(asc[-1])
    for c in reversed(asc[:-1]):
        acc = acc * x + c
    return acc


def _surd_eval_bound(asc, s, want_upper):
    """Rational bound for the exact value of the polynomial at a surd."""
    acc = Surd(0)
    for c in reversed(asc):
        acc = acc * s + c
    iv = acc.approx(Fraction(1, 10 ** 30))
    return iv.hi if want_upper else iv.lo


def _irreducible_fast(poly):
    """Irreducibility over the rationals for monic integer polynomials;
    closed form through degree 3, factorization beyond."""
    asc = poly.coeffs
    k = poly.degree
    if k == 1:
        return True
    if k == 2:
        disc = asc[1] * asc[1] - 4 * asc[0]
        return disc < 0 or isqrt(disc) ** 2 != disc
    if k == 3:
        if asc[0] == 0:
            return False
        for t in _divisors(abs(asc[0])):
            if poly(t) == 0 or poly(-t) == 0:
                return False
        return True
    factors = factor_over_integers(poly)
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0] == poly


def _gap_leaf(poly, d_max, gamma, keep_all):
    """Run the survivor battery on one candidate.

    Decisions are exact but routed through cheap paths: Sturm counts for
    realness and window membership (the root-free band makes the rational
    cut gamma decisive unless a root falls between 4/3 and gamma, where
    the exact algebraic comparison takes over), isolation only for the
    few candidates that reach the orbit inequality.
    """
    trace = []
    roots = None
    k = poly.degree
    asc = list(poly.coeffs)

    irr = _irreducible_fast(poly)
    trace.append(("irreducible", "pass" if irr else "fail"))
    ok = irr

    chain = v_minus = None
    if ok:
        chain = kernels.sturm_chain(asc)
        v_minus = kernels.varcount_inf(chain, False)
        total = v_minus - kernels.varcount_inf(chain, True)
        n_le_1 = v_minus - kernels.varcount_at(chain, 1, 1)
        good = total == k and (n_le_1 - (1 if poly(1) == 0 else 0)) == 0
        trace.append(("roots-real-ge-1", "pass" if good else "fail"))
        ok = good
    if ok:
        v43 = kernels.varcount_at(chain, 4, 3)
        if v_minus - v43 != 0:
            inwin = False  # a root at or below 4/3
        elif d_max.is_rational:
            q = d_max.p
            inwin = (v43 - kernels.varcount_at(chain, q.numerator,
                                               q.denominator)) >= 1
        else:
            n_gamma = v43 - kernels.varcount_at(chain, gamma.numerator,
                                                gamma.denominator)
            if n_gamma == 0:
                inwin = False  # smallest root beyond the band
            else:
                prof = isolate_real_roots(poly)
                d1 = AlgebraicNumber(poly, prof.roots[0][0])
                inwin = d1.cmp_surd(d_max) <= 0
        trace.append(("root-window", "pass" if inwin else "fail"))
        ok = inwin
    if ok:
        trace.append(("d-number", "pass" if is_d_number(poly) else "fail"))
        ok = trace[-1][1] == "pass"
    if ok:
        pref = (-1 if k % 2 else 1) * _qnum(asc, 4, 3)
        trace.append(("integer-prefilter", "pass" if pref >= 1 else "fail"))
        ok = pref >= 1
    prof = None
    if ok:
        prof = isolate_real_roots(poly)
        fmax = AlgebraicNumber(poly, prof.roots[-1][0])
        good = orbit_inequality_exact(poly, fmax)
        trace.append(("orbit-inequality", "pass" if good else "fail"))
        ok = good
    if prof is not None:
        roots = tuple(AlgebraicNumber(poly, iv).approx_float()
                      for iv, _ in prof.roots)
    cand = Candidate(poly, trace, roots)
    if cand.survivor or keep_all:
        return cand
    return None


def _gap_degree(k, d_max, box_lo, f_hi, cuts, audit):
    """All candidates of one degree via depth-first coefficient search."""
    out = []
    gamma = cuts[0]

    if k == 1:
        lo = 2  # > 4/3
        hi = d_max.floor()
        for c in range(lo, hi + 1):
            cand = _gap_leaf(IntPoly([-c, 1]), d_max, gamma, audit)
            if cand is not None:
                out.append(cand)
        return out

    lo_n, lo_d = box_lo.numerator, box_lo.denominator

    def descend(prefix):
        j = len(prefix) - 1
        if j == k:
            cand = _gap_leaf(IntPoly(list(reversed(prefix))), d_max, gamma,
                             audit)
            if cand is not None:
                out.append(cand)
            return
        if j >= 1:
            asc = _deriv_prefix(prefix, k)
            if not _totally_real_in_box(asc, lo_n, lo_d, f_hi):
                return
        lo, hi = _next_coeff_range(prefix, k, box_lo, f_hi, cuts,
                                   j + 1 == k)
        for s in range(lo, hi + 1):
            descend(prefix + [s])

    descend([1])
    return out


def search_gap(d_max, threads=None, audit=False):
    """Certified enumeration of minimal polynomials of candidate spherical
    dimensions in (4/3, d_max].

    Degrees run from 1 to the largest k whose conjugate-count bound stays
    below d_max; within each degree, coefficients are searched depth-first
    with interval pruning.  Survivors pass: irreducible, all roots real
    and >= 1, smallest root in (4/3, d_max], d-number, the integer
    prefilter prod(3 d_i - 4) >= 1, and the orbit inequality.
    """
    d_max = _as_surd(d_max)
    if d_max.cmp_fraction(FOUR_THIRDS) <= 0:
        raise InvalidInputError("d_max must exceed 4/3")
    if d_max.cmp(SQRT2) >= 0:
        raise InvalidInputError("d_max must stay below sqrt(2)")
    threads = _resolve_threads(threads)

    k_max = 2
    while threshold("gdim_k", k_max + 1).cmp(d_max) <= 0:
        k_max += 1
    warnings = []
    if k_max >= 4:
        warnings.append("cost warning: conjugate-count cap k_max = %d; "
                        "higher-degree enumeration may be slow" % k_max)

    f_max = (d_max * d_max) / (Surd(2) - d_max * d_max)
    f_hi = f_max.ceil()
    cuts = _gap_cut_points(d_max)

    skipped = []
    degrees = []
    for k in range(1, k_max + 1):
        if k >= 2 and threshold("gdim_k", k).cmp(d_max) == 0:
            # smallest root would have to equal d_max exactly
            if d_max.is_algebraic_integer() and \
                    d_max.min_poly().degree == k:
                degrees.append((k, d_max.min_poly()))
            else:
                skipped.append(k)
        else:
            degrees.append((k, None))
    for k in skipped:
        warnings.append("degree %d skipped: its bound equals d_max, which "
                        "is not an algebraic integer of that degree" % k)

    # per-degree root floor: every root of a degree-k candidate exceeds
    # the degree-k conjugate-count bound, of which box_lo is a certified
    # rational lower bound (at least 4/3)
    def box_floor(k):
        if k < 2:
            return FOUR_THIRDS
        t = threshold("gdim_k", k)
        if t.is_rational:
            return t.p
        return max(FOUR_THIRDS, t.approx(Fraction(1, 10 ** 6)).lo)

    def run_degree(item):
        k, forced = item
        if forced is not None:
            cand = _gap_leaf(forced, d_max, cuts[0], audit)
            return [cand] if cand is not None else []
        return _gap_degree(k, d_max, box_floor(k), f_hi, cuts, audit)

    batches = _parallel_map(run_degree, degrees, threads)
    survivors = []
    rejected = []
    for batch in batches:
        for cand in batch:
            if cand.survivor:
                survivors.append(cand)
            elif audit:
                rejected.append(cand)
    config = {
        "d_max": surd_text(d_max),
        "k_max": k_max,
        "f_max": surd_text(f_max),
        "band": [str(cuts[0]), str(cuts[1])],
    }
    return SearchResult("gap", survivors, rejected, warnings, False, config)
