"""Exact arithmetic on integer polynomials and real algebraic numbers.

Coefficient sequences are ascending: index i holds the coefficient of x**i.
All decisions (signs, comparisons, root locations) are exact; floats appear
only in reporting helpers.  Root isolation is squarefree decomposition
followed by Sturm bisection; comparisons against quadratic irrationals are
done in closed form through the Surd class, so no decision ever rests on a
rounded value.
"""

from fractions import Fraction
from math import gcd, isqrt

from . import kernels
from ._intfactor import factorize, square_free_part
from .errors import AmbiguityError, DegreeCapError, InvalidInputError

# enclosure refinement gives up (raises AmbiguityError) below this width
WIDTH_CAP = Fraction(1, 10 ** 40)


# ---------------------------------------------------------------------------
# coefficient-list helpers (ascending order, plain ints)

def _norm(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _deriv(c):
    return [i * c[i] for i in range(1, len(c))]


def _sub(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _norm(out)


def _primitive_pos(c):
    """Primitive part with positive leading coefficient."""
    c = _norm(c)
    if not c:
        return c
    g = kernels.int_content(c)
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def poly_gcd_int(a, b):
    """Primitive gcd over the integers, positive leading coefficient."""
    a = _norm(a)
    b = _norm(b)
    if not a:
        return _primitive_pos(b)
    if not b:
        return _primitive_pos(a)
    a = _primitive_pos(a)
    b = _primitive_pos(b)
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        r = kernels.pseudo_rem(a, b)
        a, b = b, _primitive_pos(r)
    return _primitive_pos(a)


def poly_div_exact(a, b):
    """Quotient a // b when the division is exact over the integers."""
    a = _norm(a)
    b = _norm(b)
    if not b:
        raise InvalidInputError("division by the zero polynomial")
    if not a:
        return []
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        raise InvalidInputError("inexact polynomial division")
    rem = list(a)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        top = rem[db + k]
        if top % b[db] != 0:
            raise InvalidInputError("inexact polynomial division")
        f = top // b[db]
        q[k] = f
        if f:
            for i in range(db + 1):
                rem[i + k] -= f * b[i]
    if any(rem):
        raise InvalidInputError("inexact polynomial division")
    return _norm(q)


def squarefree_decomposition(c):
    """Yun decomposition of a primitive polynomial with positive lead.

    Returns [(factor, multiplicity)] with primitive squarefree factors of
    positive lead whose weighted product reproduces the input.
    """
    w = _primitive_pos(c)
    if len(w) <= 1:
        return []
    d = _deriv(w)
    g = poly_gcd_int(w, d)
    if len(g) == 1:
        return [(w, 1)]
    cpart = poly_div_exact(w, g)
    dpart = poly_div_exact(d, g)
    out = []
    i = 1
    e = _sub(dpart, _deriv(cpart))
    while True:
        a = poly_gcd_int(cpart, e)
        if len(a) > 1:
            out.append((a, i))
        cpart = poly_div_exact(cpart, a)
        if len(cpart) == 1:
            break
        e = _sub(poly_div_exact(e, a), _deriv(cpart))
        i += 1
    return out


# ---------------------------------------------------------------------------
# IntPoly

class IntPoly:
    """Integer polynomial; coeffs[i] is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        self._require_nonzero()
        return self.coeffs[-1]

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _require_nonzero(self):
        if not self.coeffs:
            raise InvalidInputError("zero polynomial is not allowed here")

    def __call__(self, x):
        self._require_nonzero()
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPoly(_deriv(self.coeffs))

    def primitive(self):
        return IntPoly(_primitive_pos(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, IntPoly):
            return IntPoly(kernels.poly_mul(list(self.coeffs), list(other.coeffs)))
        return IntPoly([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __add__(self, other):
        return IntPoly(_sub(self.coeffs, [-c for c in other.coeffs]))

    def __sub__(self, other):
        return IntPoly(_sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "IntPoly(%s)" % self.to_str()

    def to_str(self):
        """Human form, descending powers: 'x^2 - 5x + 5'."""
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "x" if mag == 1 else "%dx" % mag
            else:
                body = "x^%d" % i if mag == 1 else "%dx^%d" % (mag, i)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_csv(self):
        """CLI form: comma-separated coefficients, highest degree first."""
        self._require_nonzero()
        return ",".join(str(c) for c in reversed(self.coeffs))

    @staticmethod
    def from_csv(text):
        """Parse the CLI form; rejects empty input and leading zeros."""
        toks = [t.strip() for t in text.split(",")]
        if not toks or any(t == "" for t in toks):
            raise InvalidInputError("bad polynomial %r: empty coefficient" % text)
        try:
            vals = [int(t) for t in toks]
        except ValueError:
            raise InvalidInputError("bad polynomial %r: coefficients must be "
                                    "integers" % text) from None
        if vals[0] == 0:
            raise InvalidInputError("bad polynomial %r: leading zero "
                                    "coefficient" % text)
        return IntPoly(list(reversed(vals)))


# ---------------------------------------------------------------------------
# RatInterval

class RatInterval:
    """Closed interval with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo = Fraction(lo)
        hi = Fraction(hi)
        if lo > hi:
            raise InvalidInputError("interval endpoints out of order")
        self.lo = lo
        self.hi = hi

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def contains(self, x):
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def __add__(self, other):
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other):
        return RatInterval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other):
        cands = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return RatInterval(min(cands), max(cands))

    def scale(self, f):
        f = Fraction(f)
        if f >= 0:
            return RatInterval(self.lo * f, self.hi * f)
        return RatInterval(self.hi * f, self.lo * f)

    def shift(self, f):
        f = Fraction(f)
        return RatInterval(self.lo + f, self.hi + f)

    def inv(self):
        """1/interval; requires the interval to exclude 0."""
        if self.lo > 0 or self.hi < 0:
            return RatInterval(1 / self.hi, 1 / self.lo)
        raise InvalidInputError("interval straddles zero, cannot invert")

    def square(self):
        return self * self

    def __repr__(self):
        return "RatInterval(%s, %s)" % (self.lo, self.hi)


# ---------------------------------------------------------------------------
# Surd: p + q*sqrt(n), the exact carrier for every window endpoint

class Surd:
    """Quadratic surd p + q*sqrt(n) with rational p, q and squarefree n.

    Rational values are normalized to q == 0, n == 0.  Comparisons against
    rationals and other surds (also from a different field) are exact.
    """

    __slots__ = ("p", "q", "n")

    def __init__(self, p, q=0, n=0):
        p = Fraction(p)
        q = Fraction(q)
        n = int(n)
        if n < 0:
            raise InvalidInputError("negative radicand")
        if q == 0 or n == 0:
            q, n = Fraction(0), 0
        else:
            s, m = square_free_part(n)
            q *= m
            n = s
            if n == 1:
                p += q
                q, n = Fraction(0), 0
        self.p = p
        self.q = q
        self.n = n

    @staticmethod
    def sqrt_fraction(fr):
        """sqrt of a nonnegative rational as a Surd."""
        fr = Fraction(fr)
        if fr < 0:
            raise InvalidInputError("negative radicand")
        if fr == 0:
            return Surd(0)
        a, b = fr.numerator, fr.denominator
        return Surd(0, Fraction(1, b), a * b)

    @property
    def is_rational(self):
        return self.q == 0

    def as_fraction(self):
        if not self.is_rational:
            raise InvalidInputError("surd is irrational")
        return self.p

    def _same_field(self, other):
        return self.n == other.n or self.is_rational or other.is_rational

    def _coerce(self, other):
        if isinstance(other, Surd):
            return other
        return Surd(Fraction(other))

    def __add__(self, other):
        o = self._coerce(other)
        if not self._same_field(o):
            raise InvalidInputError("surds from different fields")
        n = self.n or o.n
        return Surd(self.p + o.p, self.q + o.q, n)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.p, -self.q, self.n)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if not self._same_field(o):
            raise InvalidInputError("surds from different fields")
        n = self.n or o.n
        return Surd(self.p * o.p + self.q * o.q * n,
                    self.p * o.q + self.q * o.p, n)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Surd(1)
        base = self
        k = int(k)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_rational:
            if o.p == 0:
                raise ZeroDivisionError("surd division by zero")
            return Surd(self.p / o.p, self.q / o.p, self.n)
        if not self._same_field(o):
            raise InvalidInputError("surds from different fields")
        den = o.p * o.p - o.q * o.q * o.n
        return (self * o.conjugate()) / den

    def conjugate(self):
        return Surd(self.p, -self.q, self.n)

    def sign(self):
        if self.q == 0:
            return (self.p > 0) - (self.p < 0)
        if self.p == 0:
            return 1 if self.q > 0 else -1
        # p and q both nonzero; p**2 == q**2 * n is impossible (n squarefree)
        if self.p > 0 and self.q > 0:
            return 1
        if self.p < 0 and self.q < 0:
            return -1
        big_rat = self.p * self.p > self.q * self.q * self.n
        if big_rat:
            return 1 if self.p > 0 else -1
        return 1 if self.q > 0 else -1

    def cmp_fraction(self, r):
        return (self - Fraction(r)).sign()

    def cmp(self, other):
        """Exact trichotomy against a rational or any Surd."""
        if not isinstance(other, Surd):
            return self.cmp_fraction(other)
        if self._same_field(other):
            return (self - other).sign()
        # different radicands: shift so the right side is a pure radical
        x = Surd(self.p - other.p, self.q, self.n)
        y = Surd(0, other.q, other.n)
        sx, sy = x.sign(), y.sign()
        if sx != sy:
            return 1 if sx > sy else -1
        if sx == 0:
            return 0
        # same nonzero sign: compare squares (y**2 is rational)
        c = (x * x).cmp_fraction(y.q * y.q * y.n)
        return c if sx > 0 else -c

    def __eq__(self, other):
        if isinstance(other, (Surd, int, Fraction)):
            return self.cmp(self._coerce(other)) == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.q, self.n))

    def floor(self):
        m = int(float(self))  # seed only; certified below
        while self.cmp_fraction(m + 1) >= 0:
            m += 1
        while self.cmp_fraction(m) < 0:
            m -= 1
        return m

    def ceil(self):
        return -((-self).floor())

    def approx(self, eps):
        """Enclosing RatInterval of width <= eps (outward rounding)."""
        eps = Fraction(eps)
        if eps <= 0:
            raise InvalidInputError("width must be positive")
        if self.is_rational:
            return RatInterval(self.p, self.p)
        k = 1
        while Fraction(abs(self.q), 10 ** k) > eps:
            k += 1
        scale = 10 ** k
        r = isqrt(self.n * scale * scale)
        root = RatInterval(Fraction(r, scale), Fraction(r + 1, scale))
        return root.scale(self.q).shift(self.p)

    def __float__(self):
        iv = self.approx(Fraction(1, 10 ** 18))
        return float(iv.mid)

    def is_algebraic_integer(self):
        if self.is_rational:
            return self.p.denominator == 1
        tr = 2 * self.p
        nm = self.p * self.p - self.q * self.q * self.n
        return tr.denominator == 1 and nm.denominator == 1

    def min_poly(self):
        """Monic minimal polynomial; requires an algebraic integer."""
        if not self.is_algebraic_integer():
            raise InvalidInputError("surd is not an algebraic integer")
        if self.is_rational:
            return IntPoly([-int(self.p), 1])
        tr = 2 * self.p
        nm = self.p * self.p - self.q * self.q * self.n
        return IntPoly([int(nm), -int(tr), 1])

    def __repr__(self):
        if self.is_rational:
            return "Surd(%s)" % self.p
        return "Surd(%s + %s*sqrt(%d))" % (self.p, self.q, self.n)


# ---------------------------------------------------------------------------
# Sturm-based isolation

def _cauchy_bound(c):
    """Integer B with every real root of c inside (-B, B]."""
    lead = abs(c[-1])
    top = max(abs(x) for x in c)
    return 1 + top // lead + 1


def _isolate_squarefree(c):
    """Disjoint isolating intervals for the real roots of squarefree c.

    Each returned RatInterval [lo, hi] contains exactly one root, with the
    half-open convention that the root lies in (lo, hi]; intervals from one
    call are pairwise disjoint in that sense.
    """
    chain = kernels.sturm_chain(c)
    bound = _cauchy_bound(c)
    v_lo = kernels.varcount_at(chain, -bound, 1)
    v_hi = kernels.varcount_at(chain, bound, 1)
    out = []
    stack = [(Fraction(-bound), Fraction(bound), v_lo, v_hi)]
    while stack:
        lo, hi, vl, vh = stack.pop()
        k = vl - vh
        if k == 0:
            continue
        if k == 1:
            out.append(RatInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        vm = kernels.varcount_at(chain, mid.numerator, mid.denominator)
        # keep the right half first so the output pops in ascending order
        stack.append((mid, hi, vm, vh))
        stack.append((lo, mid, vl, vm))
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out, chain


def _count_in(chain, lo, hi):
    """Roots in the half-open interval (lo, hi] by Sturm variation counts."""
    lo = Fraction(lo)
    hi = Fraction(hi)
    return (kernels.varcount_at(chain, lo.numerator, lo.denominator)
            - kernels.varcount_at(chain, hi.numerator, hi.denominator))


def _shrink(chain, iv):
    """Halve an isolating interval, keeping the unique root in (lo, hi]."""
    mid = iv.mid
    if _count_in(chain, iv.lo, mid) == 1:
        return RatInterval(iv.lo, mid)
    return RatInterval(mid, iv.hi)


class RootProfile:
    """Real-root inventory of a polynomial."""

    __slots__ = ("roots", "n_real", "totally_real", "totally_positive")

    def __init__(self, roots, n_real, degree):
        self.roots = tuple(roots)
        self.n_real = n_real
        self.totally_real = (n_real == degree)
        self.totally_positive = False  # set by isolate_real_roots


def isolate_real_roots(p):
    """Isolate all distinct real roots of p with multiplicities.

    Returns a RootProfile; the intervals are pairwise disjoint and sorted.
    """
    if isinstance(p, IntPoly):
        coeffs = list(p.coeffs)
    else:
        coeffs = _norm(p)
    if not coeffs:
        raise InvalidInputError("cannot isolate roots of the zero polynomial")
    degree = len(coeffs) - 1
    if degree == 0:
        prof = RootProfile([], 0, 0)
        prof.totally_positive = True
        return prof
    work = _primitive_pos(coeffs)
    items = []  # (interval, multiplicity, chain)
    for factor, mult in squarefree_decomposition(work):
        ivs, chain = _isolate_squarefree(factor)
        for iv in ivs:
            items.append([iv, mult, chain])
    # separate intervals coming from different squarefree components
    changed = True
    while changed:
        changed = False
        items.sort(key=lambda it: (it[0].lo, it[0].hi))
        for i in range(len(items) - 1):
            a, b = items[i], items[i + 1]
            # shrink until disjoint in either order; the outer pass re-sorts,
            # so enclosures whose true roots are swapped still settle
            while not (a[0].hi <= b[0].lo or b[0].hi <= a[0].lo):
                a[0] = _shrink(a[2], a[0])
                b[0] = _shrink(b[2], b[0])
                changed = True
    items.sort(key=lambda it: (it[0].lo, it[0].hi))
    n_real = sum(m for _, m, _ in items)
    prof = RootProfile([(iv, m) for iv, m, _ in items], n_real, degree)
    if prof.totally_real:
        if coeffs[0] == 0:
            prof.totally_positive = False
        elif items:
            first = items[0]
            while first[0].lo < 0:
                if first[0].hi < 0:
                    break
                first[0] = _shrink(first[2], first[0])
            prof.totally_positive = first[0].lo >= 0
        else:
            prof.totally_positive = True
    return prof


# ---------------------------------------------------------------------------
# AlgebraicNumber

class AlgebraicNumber:
    """A designated real root: monic irreducible minpoly + isolating interval.

    The interval only ever shrinks, so the designation is stable.  For a
    degree-1 minpoly the interval is the exact point.
    """

    __slots__ = ("minpoly", "_isol", "_chain")

    def __init__(self, minpoly, isol):
        if not isinstance(minpoly, IntPoly):
            minpoly = IntPoly(minpoly)
        if not minpoly.is_monic:
            raise InvalidInputError("minimal polynomial must be monic")
        self.minpoly = minpoly
        if minpoly.degree == 1:
            r = Fraction(-minpoly.coeffs[0])
            self._isol = RatInterval(r, r)
            self._chain = None
            return
        self._chain = kernels.sturm_chain(list(minpoly.coeffs))
        if _count_in(self._chain, isol.lo, isol.hi) != 1:
            raise InvalidInputError("interval does not isolate one root")
        self._isol = RatInterval(isol.lo, isol.hi)

    @property
    def isol(self):
        return self._isol

    @property
    def degree(self):
        return self.minpoly.degree

    def refine(self, width):
        """Shrink the cached interval to width <= width and return it."""
        width = Fraction(width)
        if width <= 0:
            raise InvalidInputError("width must be positive")
        if self.degree == 1:
            return self._isol
        iv = self._isol
        # sign bisection: simple root of an irreducible polynomial, so the
        # endpoint signs differ and no rational point is a root
        p = self.minpoly
        lo, hi = iv.lo, iv.hi
        s_lo = _sign(p(lo))
        if s_lo == 0 or _sign(p(hi)) == 0:
            # endpoint happens to be a root of a *different* conjugate: fall
            # back to Sturm shrinking, which needs no sign assumptions
            while iv.width > width:
                iv = _shrink(self._chain, iv)
            self._isol = iv
            return iv
        while hi - lo > width:
            mid = (lo + hi) / 2
            s_mid = _sign(p(mid))
            if s_mid == 0:
                raise InvalidInputError("rational root in an irreducible "
                                        "polynomial of degree >= 2")
            if s_mid == s_lo:
                lo = mid
            else:
                hi = mid
        self._isol = RatInterval(lo, hi)
        return self._isol

    def approx_float(self):
        return float(self.refine(Fraction(1, 10 ** 18)).mid)

    def cmp_fraction(self, r):
        """Exact sign of (self - r)."""
        r = Fraction(r)
        if self.degree == 1:
            v = self._isol.lo
            return (v > r) - (v < r)
        iv = self._isol
        while iv.lo <= r <= iv.hi:
            iv = _shrink(self._chain, iv)
            self._isol = iv
        return 1 if iv.lo > r else -1

    def cmp_surd(self, s):
        """Exact sign of (self - s) for a Surd s."""
        if s.is_rational:
            return self.cmp_fraction(s.p)
        if _surd_is_root(self.minpoly, s):
            # s is one of the two conjugate roots; the designated root never
            # leaves the interval, so shrink until only one of the pair fits
            other = s.conjugate()
            iv = self._isol
            while _surd_in(s, iv) and _surd_in(other, iv):
                iv = _shrink(self._chain, iv)
                self._isol = iv
            if _surd_in(s, iv):
                return 0
            return 1 if s.cmp_fraction(iv.lo) < 0 else -1
        iv = self._isol
        while _surd_in(s, iv):
            iv = _shrink(self._chain, iv)
            self._isol = iv
        return 1 if s.cmp_fraction(iv.lo) < 0 else -1

    def cmp(self, other):
        """Exact trichotomy against Fraction/int, Surd or AlgebraicNumber."""
        if isinstance(other, AlgebraicNumber):
            return self._cmp_algebraic(other)
        if isinstance(other, Surd):
            return self.cmp_surd(other)
        return self.cmp_fraction(Fraction(other))

    def _cmp_algebraic(self, other):
        if self.minpoly == other.minpoly:
            if self.degree == 1:
                return 0
            mine = self._root_index()
            theirs = other._root_index()
            return (mine > theirs) - (mine < theirs)
        a, b = self._isol, other._isol
        while not (a.hi < b.lo or b.hi < a.lo):
            if self.degree > 1:
                a = _shrink(self._chain, a)
                self._isol = a
            if other.degree > 1:
                b = _shrink(other._chain, b)
                other._isol = b
            if self.degree == 1 and other.degree == 1:
                va, vb = a.lo, b.lo
                return (va > vb) - (va < vb)
        return -1 if a.hi < b.lo else 1

    def _root_index(self):
        bound = _cauchy_bound(list(self.minpoly.coeffs))
        return _count_in(self._chain, -bound, self._isol.hi)

    def floor(self):
        """Certified floor; AmbiguityError if not decidable at the cap."""
        if self.degree == 1:
            v = self._isol.lo
            return v.numerator // v.denominator
        iv = self._isol
        while True:
            flo = iv.lo.numerator // iv.lo.denominator
            fhi = iv.hi.numerator // iv.hi.denominator
            if flo == fhi:
                return flo
            if iv.width < WIDTH_CAP:
                raise AmbiguityError(
                    "floor not certifiable at width %s: candidates %d and %d"
                    % (WIDTH_CAP, flo, fhi))
            iv = _shrink(self._chain, iv)
            self._isol = iv

    def __repr__(self):
        return "AlgebraicNumber(%s, ~%.6f)" % (self.minpoly.to_str(),
                                               self.approx_float())


def _sign(x):
    return (x > 0) - (x < 0)


def _surd_in(s, iv):
    return s.cmp_fraction(iv.lo) >= 0 and s.cmp_fraction(iv.hi) <= 0


def _surd_is_root(poly, s):
    acc = Surd(0)
    for c in reversed(poly.coeffs):
        acc = acc * s + c
    return acc.sign() == 0


def refine_root(a, width):
    """Sub-interval of a.isol of width <= width containing the same root."""
    return a.refine(width)


# ---------------------------------------------------------------------------
# factorization entry point (heavy lifting lives in _factor)

def factor_over_integers(p):
    """Irreducible primitive factors with multiplicities, deterministic order.

    The product of factor**multiplicity reproduces p up to the sign and the
    integer content.  Factors have positive leading coefficients and are
    sorted by degree, then by coefficient sequence.
    """
    from ._factor import factor_squarefree_primitive
    if isinstance(p, IntPoly):
        coeffs = list(p.coeffs)
    else:
        coeffs = _norm(p)
    if not coeffs:
        raise InvalidInputError("cannot factor the zero polynomial")
    if len(coeffs) - 1 > 24:
        raise DegreeCapError("degree %d exceeds the factorization cap of 24"
                             % (len(coeffs) - 1))
    if len(coeffs) == 1:
        return []
    out = {}
    for sqf, mult in squarefree_decomposition(_primitive_pos(coeffs)):
        for irr in factor_squarefree_primitive(sqf):
            key = tuple(irr)
            out[key] = out.get(key, 0) + mult
    items = sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return [(IntPoly(list(k)), m) for k, m in items]


# ---------------------------------------------------------------------------
# d-numbers


def is_d_number(p):
    """Does every root of p divide all roots (as algebraic integers)?

    Degrees 1..3 use coefficient divisibility; higher degrees fall back to
    the resultant-based ratio test on the squarefree part.
    """
    p = p if isinstance(p, IntPoly) else IntPoly(p)
    if not p.is_monic:
        raise InvalidInputError("d-number test requires a monic polynomial")
    if p.degree < 1 or p.coeffs[0] == 0:
        raise InvalidInputError("d-number test requires degree >= 1 and a "
                                "nonzero constant term")
    c = p.coeffs
    if p.degree == 1:
        return True
    if p.degree == 2:
        # x^2 - a x + b: need b | a^2
        return c[1] ** 2 % c[0] == 0
    if p.degree == 3:
        # x^3 - a x^2 + b x - c: need c | a^3 and c^2 | b^3
        return c[2] ** 3 % c[0] == 0 and c[1] ** 3 % (c[0] * c[0]) == 0
    sqf = poly_div_exact(list(c), poly_gcd_int(list(c), _deriv(list(c))))
    sqf = _primitive_pos(sqf)
    return ratio_integrality_oracle(IntPoly(sqf))


def ratio_integrality_oracle(p):
    """Ground-truth ratio test: are all root ratios algebraic integers?

    Builds S(x) = Res_y(p(y), p(x*y)), whose roots are exactly the pairwise
    root ratios, by evaluation at integer points and exact interpolation.
    All ratios are algebraic integers iff every irreducible factor of the
    primitive part of S is monic, which happens iff its leading coefficient
    is +-1 (leading coefficients of primitive factors multiply).
    """
    p = p if isinstance(p, IntPoly) else IntPoly(p)
    if not p.is_monic:
        raise InvalidInputError("ratio test requires a monic polynomial")
    if p.degree < 1 or p.coeffs[0] == 0:
        raise InvalidInputError("ratio test requires degree >= 1 and a "
                                "nonzero constant term")
    if len(poly_gcd_int(list(p.coeffs), _deriv(list(p.coeffs)))) > 1:
        raise InvalidInputError("ratio test requires a squarefree polynomial")
    n = p.degree
    if n == 1:
        return True
    deg_s = n * n
    xs = list(range(1, deg_s + 2))
    base = list(p.coeffs)
    ys = []
    for t in xs:
        scaled = [base[i] * t ** i for i in range(len(base))]
        ys.append(kernels.resultant(base, scaled))
    s_coeffs = _interpolate_int(xs, ys)
    s_coeffs = _norm(s_coeffs)
    cont = kernels.int_content(s_coeffs)
    return abs(s_coeffs[-1]) == cont


def _interpolate_int(xs, ys):
    """Exact interpolation through integer points; asserts integer output."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]  # Newton divided differences
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    acc = [Fraction(1)]  # running product (x - x0)...(x - xk)
    for k in range(n):
        for i, a in enumerate(acc):
            poly[i] += coef[k] * a
        nxt = [Fraction(0)] * (len(acc) + 1)
        for i, a in enumerate(acc):
            nxt[i] -= a * xs[k]
            nxt[i + 1] += a
        acc = nxt
    out = []
    for f in poly:
        if f.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer")
        out.append(f.numerator)
    return out


# ---------------------------------------------------------------------------
# matrix helpers: exact characteristic polynomials and companion powers

def charpoly_int(mat):
    """Characteristic polynomial of an integer matrix, ascending IntPoly.

    Faddeev-LeVerrier recurrence; every division is exact over the integers.
    """
    n = len(mat)
    if n == 0 or any(len(row) != n for row in mat):
        raise InvalidInputError("characteristic polynomial needs a square "
                                "nonempty matrix")
    desc = [1]
    m = [list(row) for row in mat]
    ck = -sum(m[i][i] for i in range(n))
    desc.append(ck)
    for k in range(2, n + 1):
        for i in range(n):
            m[i][i] += ck
        m = _matmul(mat, m)
        tr = sum(m[i][i] for i in range(n))
        if tr % k != 0:
            raise ArithmeticError("inexact trace division")
        ck = -tr // k
        desc.append(ck)
    return IntPoly(list(reversed(desc)))


def _matmul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(n):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(n):
                    oi[j] += x * bk[j]
    return out


def _companion(poly):
    n = poly.degree
    c = poly.coeffs
    m = [[0] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = 1
    for i in range(n):
        m[i][n - 1] = -c[i]
    return m


def power_char_poly(a, m):
    """Monic polynomial whose roots are the m-th powers of a's conjugates."""
    m = int(m)
    if m < 1:
        raise InvalidInputError("power must be a positive integer")
    comp = _companion(a.minpoly)
    acc = None
    base = comp
    k = m
    while k:
        if k & 1:
            acc = base if acc is None else _matmul(acc, base)
        k >>= 1
        if k:
            base = _matmul(base, base)
    return charpoly_int(acc)


def largest_integer_divisor(p):
    """Largest M with M**i dividing the i-th (descending) coefficient.

    Equivalently the largest integer M such that root/M stays an algebraic
    integer.  Requires a monic polynomial with some nonzero non-leading
    coefficient.
    """
    p = p if isinstance(p, IntPoly) else IntPoly(p)
    if not p.is_monic:
        raise InvalidInputError("divisor bound requires a monic polynomial")
    n = p.degree
    pairs = []  # (i, |c_i|) for descending-index coefficients c_i != 0
    for i in range(1, n + 1):
        ci = p.coeffs[n - i]
        if ci:
            pairs.append((i, abs(ci)))
    if not pairs:
        raise InvalidInputError("all trailing coefficients vanish (root 0)")
    g = 0
    for _, v in pairs:
        g = gcd(g, v)
    if g == 1:
        return 1
    m = 1
    for q, _ in factorize(g).items():
        e = None
        for i, v in pairs:
            vq = 0
            while v % q == 0:
                v //= q
                vq += 1
            e = vq // i if e is None else min(e, vq // i)
            if e == 0:
                break
        m *= q ** e
    return m


# ---------------------------------------------------------------------------
# conjugate statistics

def conjugate_stats(p):
    """(smallest root, largest root, exact mean) of a totally real monic p."""
    p = p if isinstance(p, IntPoly) else IntPoly(p)
    if not p.is_monic:
        raise InvalidInputError("conjugate statistics require a monic "
                                "polynomial")
    prof = isolate_real_roots(p)
    if not prof.totally_real:
        raise InvalidInputError("polynomial is not totally real")
    mean = Fraction(-p.coeffs[p.degree - 1], p.degree)
    lo_an = None
    hi_an = None
    for factor, _ in factor_over_integers(p):
        fprof = isolate_real_roots(factor)
        first = AlgebraicNumber(factor, fprof.roots[0][0])
        last = AlgebraicNumber(factor, fprof.roots[-1][0])
        if lo_an is None or first.cmp(lo_an) < 0:
            lo_an = first
        if hi_an is None or last.cmp(hi_an) > 0:
            hi_an = last
    return lo_an, hi_an, mean
