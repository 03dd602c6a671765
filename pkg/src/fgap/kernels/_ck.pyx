# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of fgap.kernels._pure.

Same names, same semantics, byte-identical results: coefficients stay
arbitrary-precision Python ints, only the loop framework is compiled.
The test suite runs both backends against each other.
"""

from math import gcd

BACKEND = "c"


def normalize(c):
    """Strip trailing zero coefficients, return a list."""
    cdef list out = list(c)
    while out and out[len(out) - 1] == 0:
        out.pop()
    return out


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
    cdef Py_ssize_t i, j, na, nb
    cdef list aa = list(a)
    cdef list bb = list(b)
    na = len(aa)
    nb = len(bb)
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    for i in range(na):
        x = aa[i]
        if x:
            for j in range(nb):
                y = bb[j]
                if y:
                    out[i + j] = out[i + j] + x * y
    return normalize(out)


def pseudo_rem(a, b):
    """Pseudo-remainder of a by b: lb**(da-db+1) * a = q*b + r, returns r.

    Requires deg a >= deg b and b nonzero.  The full power of lb is applied
    even when a reduction step is trivial, so the multiplier is exactly
    lb**(da-db+1) (the resultant algorithm depends on that).
    """
    cdef Py_ssize_t da, db, k, i, nr
    cdef list bb = list(b)
    cdef list r = list(a)
    da = len(r) - 1
    db = len(bb) - 1
    lb = bb[db]
    for k in range(da - db, -1, -1):
        c = r[db + k]
        nr = len(r)
        for i in range(nr):
            r[i] = r[i] * lb
        if c:
            for i in range(db + 1):
                r[i + k] = r[i + k] - c * bb[i]
    del r[db:]
    return normalize(r)


def eval_qnum(c, p, q):
    """Homogeneous evaluation: sum c[i] * p**i * q**(d-i) for d = deg c.

    For q > 0 the sign equals the sign of the polynomial at p/q.
    """
    cdef list cc = list(c)
    cdef Py_ssize_t d = len(cc) - 1
    cdef Py_ssize_t i
    acc = cc[d]
    qq = 1
    for i in range(d - 1, -1, -1):
        qq = qq * q
        acc = acc * p + cc[i] * qq
    return acc


def sign_variations(vals):
    """Number of sign changes in a sequence, zeros skipped."""
    cdef int count = 0
    cdef int prev = 0
    cdef int s
    for v in vals:
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def sturm_chain(c):
    """Sturm chain of c as primitive integer polynomials.

    Uses pseudo-remainders with the sign corrected so each element is a
    positive multiple of the exact Sturm sequence entry.
    """
    cdef Py_ssize_t i, delta
    cdef list p0 = normalize(c)
    if len(p0) <= 1:
        return [p0] if p0 else []
    cdef list d0 = [i * p0[i] for i in range(1, len(p0))]
    cdef list chain = [_primitive(p0), _primitive(d0)]
    cdef list a, b, r, nxt
    while True:
        a = chain[len(chain) - 2]
        b = chain[len(chain) - 1]
        if len(b) <= 1 or len(a) < len(b):
            break
        r = pseudo_rem(a, b)
        if not r:
            break
        # pseudo_rem scales by lb**(delta+1); undo its sign so the chain
        # keeps the Sturm sign pattern
        lb = b[len(b) - 1]
        delta = len(a) - len(b)
        if lb < 0 and (delta + 1) % 2 == 1:
            nxt = _primitive(r)
        else:
            nxt = _primitive([-x for x in r])
        chain.append(nxt)
        if len(nxt) <= 1:
            break
    return chain


cdef list _primitive(c):
    g = int_content(c)
    if g > 1:
        return [x // g for x in c]
    return list(c)


def varcount_at(chain, p, q):
    """Sign variations of a Sturm chain at the rational p/q (q > 0)."""
    return sign_variations([eval_qnum(c, p, q) for c in chain])


def varcount_inf(chain, positive):
    """Sign variations of a chain at +infinity (positive, truthy) or -infinity."""
    cdef list vals = []
    for c in chain:
        lead = c[len(c) - 1]
        if positive:
            vals.append(lead)
        else:
            vals.append(lead if (len(c) - 1) % 2 == 0 else -lead)
    return sign_variations(vals)


def resultant(a, b):
    """Resultant of two integer polynomials via the subresultant PRS.

    Returns 0 when either input is zero or when they share a factor.
    """
    cdef Py_ssize_t da, db, delta
    cdef int s = 1
    cdef list aa = normalize(a)
    cdef list bb = normalize(b)
    if not aa or not bb:
        return 0
    da = len(aa) - 1
    db = len(bb) - 1
    if da == 0 and db == 0:
        return 1
    if da == 0:
        return aa[0] ** db
    if db == 0:
        return bb[0] ** da
    if da < db:
        aa, bb = bb, aa
        if (da & 1) and (db & 1):
            s = -s
    ca = int_content(aa)
    cb = int_content(bb)
    aa = [x // ca for x in aa]
    bb = [x // cb for x in bb]
    t = ca ** (len(bb) - 1) * cb ** (len(aa) - 1)
    g = 1
    h = 1
    cdef list r
    while True:
        da = len(aa) - 1
        db = len(bb) - 1
        delta = da - db
        if (da & 1) and (db & 1):
            s = -s
        r = pseudo_rem(aa, bb)
        if not r:
            return 0
        aa = bb
        divisor = g * h ** delta
        bb = [x // divisor for x in r]
        g = aa[len(aa) - 1]
        if delta > 0:
            h = g ** delta // h ** (delta - 1)
        if len(bb) == 1:
            da = len(aa) - 1
            return s * t * (bb[0] ** da // h ** (da - 1))
