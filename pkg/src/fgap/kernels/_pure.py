"""Pure-Python integer polynomial kernels.

Coefficient lists are ascending: c[i] is the coefficient of x**i, the last
entry is nonzero (the zero polynomial is the empty list).  Everything is
exact integer arithmetic; these are the hot loops behind root isolation,
resultants and the search pruning, so they stay free of Fraction objects.

A compiled twin of this module lives in _ck.pyx; both export the same names
and must stay behaviour-identical (the test suite compares them).
"""

from math import gcd

BACKEND = "pure"


def normalize(c):
    """Strip trailing zero coefficients, return a list."""
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def int_content(c):
    """gcd of the coefficients, nonnegative; 0 for the zero polynomial."""
    g = 0
    for x in c:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def poly_mul(a, b):
    """Product of two coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return normalize(out)


def pseudo_rem(a, b):
    """Pseudo-remainder of a by b: lb**(da-db+1) * a = q*b + r, returns r.

    Requires deg a >= deg b and b nonzero.  The full power of lb is applied
    even when a reduction step is trivial, so the multiplier is exactly
    lb**(da-db+1) (the resultant algorithm depends on that).
    """
    da = len(a) - 1
    db = len(b) - 1
    lb = b[db]
    r = list(a)
    for k in range(da - db, -1, -1):
        c = r[db + k]
        for i in range(len(r)):
            r[i] *= lb
        if c:
            for i in range(db + 1):
                r[i + k] -= c * b[i]
    del r[db:]
    return normalize(r)


def eval_qnum(c, p, q):
    """Homogeneous evaluation: sum c[i] * p**i * q**(d-i) for d = deg c.

    For q > 0 the sign equals the sign of the polynomial at p/q.
    """
    d = len(c) - 1
    acc = c[d]
    qq = 1
    for i in range(d - 1, -1, -1):
        qq *= q
        acc = acc * p + c[i] * qq
    return acc


def sign_variations(vals):
    """Number of sign changes in a sequence, zeros skipped."""
    count = 0
    prev = 0
    for v in vals:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def sturm_chain(c):
    """Sturm chain of c as primitive integer polynomials.

    Uses pseudo-remainders with the sign corrected so each element is a
    positive multiple of the exact Sturm sequence entry.
    """
    p0 = normalize(c)
    if len(p0) <= 1:
        return [p0] if p0 else []
    d0 = [i * p0[i] for i in range(1, len(p0))]
    chain = [_primitive(p0), _primitive(d0)]
    while True:
        a, b = chain[-2], chain[-1]
        if len(b) <= 1 or len(a) < len(b):
            break
        r = pseudo_rem(a, b)
        if not r:
            break
        # pseudo_rem scales by lb**(delta+1); undo its sign so the chain
        # keeps the Sturm sign pattern
        lb = b[-1]
        delta = len(a) - len(b)
        if lb < 0 and (delta + 1) % 2 == 1:
            sgn = -1
        else:
            sgn = 1
        nxt = _primitive([-x * sgn for x in r])
        chain.append(nxt)
        if len(nxt) <= 1:
            break
    return chain


def _primitive(c):
    g = int_content(c)
    if g > 1:
        return [x // g for x in c]
    return list(c)


def varcount_at(chain, p, q):
    """Sign variations of a Sturm chain at the rational p/q (q > 0)."""
    return sign_variations([eval_qnum(c, p, q) for c in chain])


def varcount_inf(chain, positive):
    """Sign variations of a chain at +infinity (positive, truthy) or -infinity."""
    vals = []
    for c in chain:
        lead = c[-1]
        if positive:
            vals.append(lead)
        else:
            vals.append(lead if (len(c) - 1) % 2 == 0 else -lead)
    return sign_variations(vals)


def resultant(a, b):
    """Resultant of two integer polynomials via the subresultant PRS.

    Returns 0 when either input is zero or when they share a factor.
    """
    a = normalize(a)
    b = normalize(b)
    if not a or not b:
        return 0
    da = len(a) - 1
    db = len(b) - 1
    if da == 0 and db == 0:
        return 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    s = 1
    if da < db:
        a, b = b, a
        if (da & 1) and (db & 1):
            s = -s
    ca = int_content(a)
    cb = int_content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    g = 1
    h = 1
    while True:
        da = len(a) - 1
        db = len(b) - 1
        delta = da - db
        if (da & 1) and (db & 1):
            s = -s
        r = pseudo_rem(a, b)
        if not r:
            return 0
        a = b
        divisor = g * h ** delta
        b = [x // divisor for x in r]
        g = a[-1]
        if delta > 0:
            h = g ** delta // h ** (delta - 1)
        if len(b) == 1:
            da = len(a) - 1
            return s * t * (b[0] ** da // h ** (da - 1))
