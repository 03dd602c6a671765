"""Inequality battery deciding which codegree orbits could be a spherical
global dimension, plus the bound constants backing the searches.

Every decision is exact: rational tests stay in Fraction arithmetic and
irrational thresholds are carried as quadratic surds compared by squares.
A failed check certifies an obstruction; a surviving orbit is only "not
obstructed", never a categorification claim.
"""

from fractions import Fraction

from .algnum import (AlgebraicNumber, Surd, is_d_number,
                     largest_integer_divisor, power_char_poly,
                     isolate_real_roots)
from .errors import InvalidInputError
from .fusionring import formal_codegrees

FOUR_THIRDS = Fraction(4, 3)


def threshold(kind, param=None):
    """Exact bound constants as Surd objects.

    kind = "gdim_i": 4/3 (global dimension of any nontrivial category).
    kind = "gdim_k": sqrt((16k-16)/(8k-7)) for dimensions with k > 1
    Galois conjugates.
    kind = "codeg_r": sqrt(2r/(r+1)), lower bound for every codegree of a
    rank-r ring.
    kind = "psc_F": sqrt(2F/(F+1)), smallest-codegree bound in terms of a
    dimension value F (exposed for reporting; not used in verdicts).
    """
    if kind == "gdim_i":
        return Surd(FOUR_THIRDS)
    if kind == "gdim_k":
        k = int(param)
        if k < 2:
            raise InvalidInputError("gdim_k needs k >= 2")
        return Surd.sqrt_fraction(Fraction(16 * k - 16, 8 * k - 7))
    if kind == "codeg_r":
        r = int(param)
        if r < 1:
            raise InvalidInputError("codeg_r needs r >= 1")
        return Surd.sqrt_fraction(Fraction(2 * r, r + 1))
    if kind == "psc_F":
        f = Fraction(param)
        if f < 1:
            raise InvalidInputError("psc_F needs F >= 1")
        return Surd.sqrt_fraction(2 * f / (f + 1))
    raise InvalidInputError("unknown threshold kind %r" % (kind,))


class CheckResult:
    __slots__ = ("name", "status", "detail")

    def __init__(self, name, status, detail=""):
        self.name = name
        self.status = status  # "pass" | "fail" | "skip"
        self.detail = detail

    def __repr__(self):
        return "CheckResult(%s: %s)" % (self.name, self.status)


class OrbitResult:
    __slots__ = ("index", "poly", "multiplicity", "checks", "survives")

    def __init__(self, index, poly, multiplicity, checks):
        self.index = index
        self.poly = poly
        self.multiplicity = multiplicity
        self.checks = tuple(checks)
        self.survives = all(c.status != "fail" for c in checks)


class ObstructionReport:
    """Verdict is a pure function of the check statuses."""

    __slots__ = ("rank", "spectrum", "orbit_results", "global_checks",
                 "surviving", "obstructed")

    def __init__(self, rank, spectrum, orbit_results, global_checks):
        self.rank = rank
        self.spectrum = spectrum
        self.orbit_results = tuple(orbit_results)
        self.global_checks = tuple(global_checks)
        self.surviving = tuple(o.index for o in orbit_results if o.survives)
        global_ok = all(c.status != "fail" for c in global_checks)
        self.obstructed = (not self.surviving) or (not global_ok)


def _cmp_root_surd(root, bound):
    """Exact sign of (root - bound) for AlgebraicNumber vs Surd."""
    return root.cmp_surd(bound)


def pseudo_unitary_inequality(spectrum, f):
    """Decide sum_i 1/f_i^2 <= (1 + 1/f)/2 exactly.

    The left side comes from the characteristic polynomial coefficients;
    the right side comparison is folded into an exact order test against
    the algebraic number f.  Returns (status, detail).
    """
    lhs = spectrum.inverse_square_sum()
    t = 2 * lhs - 1  # need t <= 1/f
    if t <= 0:
        return "pass", "lhs %s, 2*lhs - 1 = %s <= 0" % (lhs, t)
    # t > 0: inequality holds iff f <= 1/t
    c = f.cmp_fraction(1 / t)
    status = "pass" if c <= 0 else "fail"
    fv = f.approx_float() if hasattr(f, "approx_float") else float(f)
    return status, "lhs %s, needs f <= %s (f ~ %.6f)" % (lhs, 1 / t, fv)


def spherical_obstruction_report(ring):
    """Run the full battery on every Galois orbit of the codegree spectrum.

    Per orbit O: (a) min(O) >= 4/3 (the trivial rank-1 ring is exempt);
    (b) for |O| > 1, min(O) >= sqrt((16k-16)/(8k-7)) with k = |O|;
    (c) exact orbit mean >= rank; (d) the pseudo-unitary inequality at
    every f in O.  Global: every orbit polynomial is a d-number, all
    codegrees are real and >= 1, and the smallest codegree clears
    sqrt(2r/(r+1)).  Verdict "obstructed" iff no orbit survives or a
    global check fails.
    """
    spectrum = formal_codegrees(ring)
    r = ring.rank
    trivial_ring = (r == 1)

    orbit_results = []
    for idx, orb in enumerate(spectrum.orbits):
        checks = []
        k = orb.poly.degree

        if trivial_ring:
            checks.append(CheckResult(
                "min-above-4/3", "pass",
                "trivial ring: dimension 1 is the unit category"))
        else:
            c = orb.min_root.cmp_fraction(FOUR_THIRDS)
            checks.append(CheckResult(
                "min-above-4/3", "pass" if c >= 0 else "fail",
                "min root ~ %.9f vs 4/3" % orb.min_root.approx_float()))

        if k > 1:
            bound = threshold("gdim_k", k)
            c = _cmp_root_surd(orb.min_root, bound)
            checks.append(CheckResult(
                "conjugate-count-bound", "pass" if c >= 0 else "fail",
                "k = %d, bound sqrt(%s), min root ~ %.9f"
                % (k, (16 * k - 16) * Fraction(1, 8 * k - 7),
                   orb.min_root.approx_float())))
        else:
            checks.append(CheckResult(
                "conjugate-count-bound", "skip", "singleton orbit"))

        mean = orb.mean()
        checks.append(CheckResult(
            "orbit-mean-at-least-rank", "pass" if mean >= r else "fail",
            "mean %s vs rank %d" % (mean, r)))

        worst = None
        for root in orb.roots:
            status, detail = pseudo_unitary_inequality(spectrum, root)
            if status == "fail" and worst is None:
                worst = (root, detail)
        if worst is None:
            checks.append(CheckResult(
                "pseudo-unitary-sum", "pass",
                "lhs %s holds at every orbit root"
                % spectrum.inverse_square_sum()))
        else:
            checks.append(CheckResult(
                "pseudo-unitary-sum", "fail",
                "fails at f ~ %.9f: %s" % (worst[0].approx_float(),
                                           worst[1])))
        orbit_results.append(OrbitResult(idx, orb.poly, orb.multiplicity,
                                         checks))

    global_checks = []
    global_checks.append(CheckResult(
        "codegrees-real", "pass" if spectrum.all_real else "fail",
        "all eigenvalues real" if spectrum.all_real
        else "complex eigenvalues present"))
    if spectrum.all_real:
        ge1 = spectrum.all_ge_one
        global_checks.append(CheckResult(
            "codegrees-at-least-1", "pass" if ge1 else "fail",
            "min codegree ~ %.9f" % spectrum.min_root().approx_float()))
        bound = threshold("codeg_r", r)
        c = _cmp_root_surd(spectrum.min_root(), bound)
        global_checks.append(CheckResult(
            "min-codegree-bound", "pass" if c >= 0 else "fail",
            "bound sqrt(%s), min ~ %.9f"
            % (Fraction(2 * r, r + 1), spectrum.min_root().approx_float())))
    else:
        global_checks.append(CheckResult("codegrees-at-least-1", "skip",
                                         "spectrum not totally real"))
        global_checks.append(CheckResult("min-codegree-bound", "skip",
                                         "spectrum not totally real"))
    bad = [orb.poly.to_str() for orb in spectrum.orbits
           if not is_d_number(orb.poly)]
    global_checks.append(CheckResult(
        "codegrees-are-d-numbers", "pass" if not bad else "fail",
        "every orbit polynomial divides-all-roots" if not bad
        else "not a d-number: " + "; ".join(bad)))

    return ObstructionReport(r, spectrum, orbit_results, global_checks)


def ffib_fpdim_bound(d):
    """Integer M bounding FPdim for any category of global dimension d.

    f is the largest conjugate of d; M is the largest integer divisor (in
    the M^i | c_i sense) of the characteristic polynomial of d^floor(f).
    """
    if not isinstance(d, AlgebraicNumber):
        raise InvalidInputError("expected an AlgebraicNumber")
    prof = isolate_real_roots(d.minpoly)
    if not prof.totally_real or not prof.totally_positive:
        raise InvalidInputError("bound requires a totally positive input")
    f = AlgebraicNumber(d.minpoly, prof.roots[-1][0])
    m = f.floor()  # certified; AmbiguityError if undecidable at the cap
    return largest_integer_divisor(power_char_poly(d, m))
