"""Command line front end: parsing, rendering, exit codes.

The text and JSON renderers read from one payload and share the %.12g
float format, so the two views agree numerically.  Text output opens with
a reproducibility header (the subcommand plus its mathematical
configuration); thread counts, timing, and backend choice never appear in
the output, so reruns are byte-identical.

Exit codes: 0 success, 1 invalid input, 2 uncertified precision,
3 obstruction found under --expect-pass.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from .algnum import (AlgebraicNumber, IntPoly, Surd, factor_over_integers,
                     is_d_number, isolate_real_roots, largest_integer_divisor,
                     poly_gcd_int, power_char_poly, ratio_integrality_oracle)
from .errors import AmbiguityError, InvalidInputError
from .fusionring import (builtin_ring, emit_ring_file, fp_dimension_vector,
                         parse_ring_file, rep_g_codegrees, sum_identity_check)
from .gapsearch import (QUAD_DEFAULT_HI, SearchConfig, search_cubic,
                        search_gap, search_quadratic, surd_text)
from .obstruct import spherical_obstruction_report

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_AMBIGUOUS = 2
EXIT_OBSTRUCTED = 3

_FILTERS = {
    2: ("window", "integer-prefilter", "irreducible", "totally-positive",
        "root-window", "mainineq"),
    3: ("window", "divisibility-a3", "divisibility-b3", "irreducible",
        "totally-positive", "root-window", "mainineq"),
}


def _g(x):
    """Shared float rendering for both output modes."""
    return "%.12g" % float(x)


def _jf(x):
    """Float for JSON payloads, rounded to the shared precision."""
    return float(_g(x))


def _frac_text(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


_INT_RE = re.compile(r"[+-]?\d+")
_DEC_RE = re.compile(r"[+-]?\d+\.\d+")
_RAT_RE = re.compile(r"([+-]?\d+)/(\d+)")
_SURD_RE = re.compile(
    r"([+-]?\d*)\*?(?:sqrt\((\d+)\)|sqrt(\d+)|√(\d+))(?:/(\d+))?")


def parse_exact(text):
    """Exact numeric token: INT, DECIMAL, P/Q, or [k]sqrt(n)[/m].

    Decimals are read as exact rationals; sqrt may be spelled sqrt(n),
    sqrtn, or the radical sign.  Returns a Surd.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise InvalidInputError("empty numeric token")
    if _INT_RE.fullmatch(s):
        return Surd(Fraction(int(s)))
    if _DEC_RE.fullmatch(s):
        return Surd(Fraction(s))
    m = _RAT_RE.fullmatch(s)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise InvalidInputError("zero denominator in %r" % text)
        return Surd(Fraction(num, den))
    m = _SURD_RE.fullmatch(s)
    if m:
        ktxt = m.group(1)
        if ktxt in ("", "+"):
            k = 1
        elif ktxt == "-":
            k = -1
        else:
            k = int(ktxt)
        n = int(m.group(2) or m.group(3) or m.group(4))
        den = int(m.group(5)) if m.group(5) else 1
        if den == 0:
            raise InvalidInputError("zero denominator in %r" % text)
        return Fraction(k, den) * Surd.sqrt_fraction(Fraction(n))
    raise InvalidInputError(
        "cannot parse %r as an exact number; use INT, a decimal, P/Q, "
        "or k*sqrt(n)/m" % text)


def _parse_fraction(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidInputError("cannot parse %r as a rational" % text)


def _parse_int_csv(text, what):
    toks = [t.strip() for t in text.split(",")]
    if not toks or any(t == "" for t in toks):
        raise InvalidInputError("bad %s list %r" % (what, text))
    try:
        return [int(t) for t in toks]
    except ValueError:
        raise InvalidInputError("bad %s list %r" % (what, text))


def _header(words, config):
    return ["fgap " + " ".join(words),
            "config: " + json.dumps(config, sort_keys=True)]


# ---------------------------------------------------------------------------
# analyze

def _read_source(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InvalidInputError("cannot read %s: %s" % (path, exc))


def _check_json(chk):
    return {"name": chk.name, "status": chk.status, "detail": chk.detail}


def _cmd_analyze(args):
    ring = parse_ring_file(_read_source(args.ring))
    tol = _parse_fraction(args.tol) if args.tol else Fraction(1, 10 ** 12)
    report = spherical_obstruction_report(ring)
    spectrum = report.spectrum
    dims, fp_root, cert = fp_dimension_vector(ring, tol=tol)
    sum_id = sum_identity_check(ring)

    config = {"source": args.ring, "tol": _frac_text(tol)}
    lines = _header(["analyze"], config)
    lines.append("rank: %d" % ring.rank)
    lines.append("commutative: %s" % ("yes" if ring.is_commutative else "no"))
    lines.append("codegree charpoly: %s" % spectrum.charpoly.to_str())
    lines.append("codegrees ~ [%s]"
                 % ", ".join(_g(v) for v in spectrum.approx()))

    orbits_json = []
    for orb_res in report.orbit_results:
        orb = spectrum.orbits[orb_res.index]
        roots = [orb_res_root.approx_float() for orb_res_root in orb.roots]
        lines.append("orbit %d: %s multiplicity %d roots ~ [%s]"
                     % (orb_res.index, orb_res.poly.to_str(),
                        orb_res.multiplicity,
                        ", ".join(_g(r) for r in roots)))
        for chk in orb_res.checks:
            lines.append("  %s: %s | %s" % (chk.name, chk.status, chk.detail))
        orbits_json.append({
            "index": orb_res.index,
            "poly": orb_res.poly.to_str(),
            "coeffs": orb_res.poly.to_csv(),
            "multiplicity": orb_res.multiplicity,
            "roots": [_jf(r) for r in roots],
            "mean": _frac_text(orb.mean()),
            "checks": [_check_json(c) for c in orb_res.checks],
            "survives": orb_res.survives,
        })
    for chk in report.global_checks:
        lines.append("global %s: %s | %s" % (chk.name, chk.status,
                                             chk.detail))
    lines.append("surviving orbits: [%s]"
                 % ", ".join(str(i) for i in report.surviving))
    lines.append("verdict: %s" % ("no spherical categorification"
                                  if report.obstructed else "no obstruction"))
    lines.append("fp dims ~ [%s]" % ", ".join(_g(v) for v in dims))
    lines.append("fp certificate: rayleigh ~ %s residual_sq ~ %s tol %s "
                 "certified" % (_g(cert["rayleigh"]), _g(cert["residual_sq"]),
                                _frac_text(cert["tol"])))
    lines.append("sum identity: %s" % ("holds" if sum_id else "violated"))

    payload = {
        "command": "fgap analyze",
        "config": config,
        "results": {
            "rank": ring.rank,
            "commutative": ring.is_commutative,
            "charpoly": spectrum.charpoly.to_str(),
            "charpoly_coeffs": spectrum.charpoly.to_csv(),
            "codegrees": [_jf(v) for v in spectrum.approx()],
            "orbits": orbits_json,
            "global_checks": [_check_json(c) for c in report.global_checks],
            "surviving_orbits": list(report.surviving),
            "obstructed": report.obstructed,
            "fp_dims": [_jf(v) for v in dims],
        },
        "certificates": {
            "charpoly": spectrum.charpoly.to_csv(),
            "factorization": [{"poly": o.poly.to_csv(),
                               "multiplicity": o.multiplicity}
                              for o in spectrum.orbits],
            "fp": {
                "rayleigh": _jf(cert["rayleigh"]),
                "residual_sq": _jf(cert["residual_sq"]),
                "tol": _frac_text(cert["tol"]),
                "certified": bool(cert["certified"]),
            },
            "sum_identity": sum_id,
        },
    }
    code = EXIT_OBSTRUCTED if (args.expect_pass and report.obstructed) \
        else EXIT_OK
    return code, payload, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# search

def _candidate_json(cand):
    d = {
        "poly": cand.poly.to_str(),
        "coeffs": cand.poly.to_csv(),
        "trace": [{"filter": name, "status": st} for name, st in cand.trace],
    }
    if cand.roots is not None:
        d["roots"] = [_jf(r) for r in cand.roots]
    ff = cand.first_fail()
    if ff is not None:
        d["first_fail"] = ff
    return d


def _cmd_search(args):
    mode = args.mode
    drops = tuple(args.drop_filter or ())
    threads = args.threads
    if mode == "gap":
        if drops:
            raise InvalidInputError("the gap search has no droppable "
                                    "filters; --drop-filter applies to "
                                    "quadratic and cubic searches")
        if args.amax is not None:
            raise InvalidInputError("--amax applies to quadratic and cubic "
                                    "searches")
        if args.window is not None:
            raise InvalidInputError("the gap search takes --dmax, "
                                    "not --window")
        d_max = parse_exact(args.dmax) if args.dmax else QUAD_DEFAULT_HI
        result = search_gap(d_max, threads=threads, audit=args.audit)
    else:
        degree = 2 if mode == "quadratic" else 3
        allowed = set(_FILTERS[degree])
        unknown = sorted(set(drops) - allowed)
        if unknown:
            raise InvalidInputError(
                "unknown filter(s) for the %s search: %s; known: %s"
                % (mode, ", ".join(unknown), ", ".join(_FILTERS[degree])))
        if args.dmax is not None:
            raise InvalidInputError("--dmax applies to the gap search; use "
                                    "--window LO,HI here")
        d_lo = d_hi = None
        if args.window is not None:
            parts = args.window.split(",")
            if len(parts) != 2:
                raise InvalidInputError("--window takes LO,HI")
            d_lo, d_hi = parse_exact(parts[0]), parse_exact(parts[1])
        cfg = SearchConfig(degree, d_lo=d_lo, d_hi=d_hi, a_max=args.amax,
                           drop=drops, audit=args.audit, threads=threads)
        result = search_quadratic(cfg) if degree == 2 else search_cubic(cfg)

    config = dict(result.config)
    config["audit"] = bool(args.audit)
    lines = _header(["search", mode], config)
    for w in result.warnings:
        lines.append("warning: %s" % w)
    lines.append("survivors: %d" % len(result.survivors))
    for cand in result.survivors:
        lines.append("+ %s" % cand.poly.to_str())
        if cand.roots is not None:
            lines.append("    roots ~ [%s]"
                         % ", ".join(_g(r) for r in cand.roots))
        lines.append("    " + " ".join("%s=%s" % t for t in cand.trace))
    if args.audit:
        lines.append("rejected: %d" % len(result.rejected))
        hist = {}
        for cand in result.rejected:
            name = cand.first_fail()
            hist[name] = hist.get(name, 0) + 1
        lines.append("first-fail histogram: "
                     + json.dumps(hist, sort_keys=True))
        for cand in result.rejected:
            lines.append("- %s | first fail: %s"
                         % (cand.poly.to_str(), cand.first_fail()))

    results = {
        "survivors": [_candidate_json(c) for c in result.survivors],
        "warnings": list(result.warnings),
        "exploratory": result.exploratory,
    }
    if args.audit:
        results["rejected"] = [_candidate_json(c) for c in result.rejected]
    traces = [{"poly": c.poly.to_csv(),
               "trace": [{"filter": n, "status": s} for n, s in c.trace]}
              for c in list(result.survivors) + list(result.rejected)]
    payload = {
        "command": "fgap search " + mode,
        "config": config,
        "results": results,
        "certificates": {
            "necessary_condition_certificate": not result.exploratory,
            "filter_traces": traces,
        },
    }
    return EXIT_OK, payload, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# dnumber / ffib-bound / repg / builtin

def _poly_from_arg(text):
    return IntPoly.from_csv(text)


def _cmd_dnumber(args):
    poly = _poly_from_arg(args.poly)
    verdict = is_d_number(poly)
    config = {"poly": poly.to_str()}
    lines = _header(["dnumber"], config)
    lines.append("d-number: %s" % ("yes" if verdict else "no"))
    certificates = {}
    # for small squarefree inputs, cross-check the coefficient criterion
    # against the resultant oracle and say so
    deriv = [i * poly.coeffs[i] for i in range(1, len(poly.coeffs))]
    squarefree = len(poly_gcd_int(list(poly.coeffs), deriv)) == 1
    if poly.degree <= 3 and squarefree:
        oracle = ratio_integrality_oracle(poly)
        lines.append("oracle agreement: %s"
                     % ("yes" if oracle == verdict else "NO"))
        certificates["oracle"] = oracle
    payload = {
        "command": "fgap dnumber",
        "config": config,
        "results": {"is_d_number": verdict},
        "certificates": certificates,
    }
    return EXIT_OK, payload, "\n".join(lines) + "\n"


def _cmd_ffib_bound(args):
    poly = _poly_from_arg(args.poly)
    if not poly.is_monic:
        raise InvalidInputError("the bound needs a monic polynomial")
    factors = factor_over_integers(poly)
    if len(factors) != 1 or factors[0][1] != 1:
        raise InvalidInputError("the bound needs an irreducible polynomial")
    prof = isolate_real_roots(poly)
    if not (prof.totally_real and prof.totally_positive):
        raise InvalidInputError("the bound needs a totally positive "
                                "polynomial")
    d = AlgebraicNumber(poly, prof.roots[-1][0])
    m = d.floor()
    pcp = power_char_poly(d, m)
    bound = largest_integer_divisor(pcp)
    config = {"poly": poly.to_str()}
    lines = _header(["ffib-bound"], config)
    lines.append("largest conjugate ~ %s" % _g(d.approx_float()))
    lines.append("power: %d" % m)
    lines.append("power charpoly: %s" % pcp.to_str())
    lines.append("bound: %d" % bound)
    payload = {
        "command": "fgap ffib-bound",
        "config": config,
        "results": {"bound": bound},
        "certificates": {
            "power": m,
            "power_charpoly": pcp.to_str(),
            "power_charpoly_coeffs": pcp.to_csv(),
        },
    }
    return EXIT_OK, payload, "\n".join(lines) + "\n"


def _cmd_repg(args):
    sizes = _parse_int_csv(args.classes, "class size")
    rep = rep_g_codegrees(sizes)
    inv_sum = sum(1 / v for v in rep.values)
    inv_sq_sum = sum(1 / v ** 2 for v in rep.values)
    # pseudo-unitary test at f = |G| (the largest codegree): exact rationals
    rhs = Fraction(1, 2) + Fraction(1, 2 * rep.group_order)
    pseudo_ok = inv_sq_sum <= rhs
    config = {"class_sizes": sizes}
    lines = _header(["repg"], config)
    lines.append("group order: %d" % rep.group_order)
    lines.append("codegrees: [%s]"
                 % ", ".join(_frac_text(v) for v in rep.values))
    lines.append("all integer: %s" % ("yes" if rep.all_integer else "no"))
    lines.append("inverse sum: %s" % _frac_text(inv_sum))
    lines.append("inverse square sum: %s" % _frac_text(inv_sq_sum))
    lines.append("pseudo-unitary at f = %d: %s (%s vs %s)"
                 % (rep.group_order, "pass" if pseudo_ok else "fail",
                    _frac_text(inv_sq_sum), _frac_text(rhs)))
    payload = {
        "command": "fgap repg",
        "config": config,
        "results": {
            "group_order": rep.group_order,
            "codegrees": [_frac_text(v) for v in rep.values],
            "all_integer": rep.all_integer,
            "inverse_sum": _frac_text(inv_sum),
            "inverse_square_sum": _frac_text(inv_sq_sum),
            "pseudo_unitary": "pass" if pseudo_ok else "fail",
        },
        "certificates": {"pseudo_unitary_rhs": _frac_text(rhs)},
    }
    return EXIT_OK, payload, "\n".join(lines) + "\n"


def _cmd_builtin(args):
    ring = builtin_ring(args.kind, args.n)
    text = emit_ring_file(ring)
    payload = {
        "command": "fgap builtin",
        "config": {"kind": args.kind, "n": args.n},
        "results": {"rank": ring.rank, "ring_file": text},
        "certificates": {},
    }
    # text mode emits the bare ring file so it can pipe into `analyze -`
    return EXIT_OK, payload, text


# ---------------------------------------------------------------------------
# wiring

class _Parser(argparse.ArgumentParser):
    """Usage errors raise instead of exiting, so exit codes stay ours."""

    def error(self, message):
        raise InvalidInputError(message)


def _build_parser():
    parser = _Parser(prog="fgap",
                     description="Exact codegree computations for based "
                                 "rings, obstruction batteries, and "
                                 "certified dimension-gap searches.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="validate a ring file and run the "
                                       "obstruction battery")
    p.add_argument("ring", help="ring file path, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--expect-pass", action="store_true",
                   help="exit 3 if the ring is obstructed")
    p.add_argument("--tol", help="FP certificate tolerance (rational)")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("search", help="enumerate candidate dimensions in "
                                      "a window")
    p.add_argument("mode", choices=("quadratic", "cubic", "gap"))
    p.add_argument("--json", action="store_true")
    p.add_argument("--audit", action="store_true",
                   help="also report rejected candidates with their traces")
    p.add_argument("--drop-filter", action="append", metavar="NAME",
                   help="disable a named filter (exploratory run)")
    p.add_argument("--window", metavar="LO,HI",
                   help="dimension window, exact tokens (quadratic/cubic)")
    p.add_argument("--amax", type=int, metavar="N",
                   help="trace bound a <= N (quadratic/cubic)")
    p.add_argument("--dmax", metavar="TOKEN",
                   help="upper dimension bound, exact token (gap)")
    p.add_argument("--threads", type=int, metavar="N",
                   help="worker threads (default: FGAP_THREADS or 1)")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("dnumber", help="decide whether a monic polynomial "
                                       "has the root-divisibility property")
    p.add_argument("--poly", required=True,
                   help="comma-separated coefficients, highest degree first")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_dnumber)

    p = sub.add_parser("repg", help="codegrees from conjugacy class sizes")
    p.add_argument("--classes", required=True,
                   help="comma-separated class sizes")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_repg)

    p = sub.add_parser("ffib-bound", help="integer divisor bound from a "
                                          "dimension's minimal polynomial")
    p.add_argument("--poly", required=True,
                   help="comma-separated coefficients, highest degree first")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_ffib_bound)

    p = sub.add_parser("builtin", help="emit a built-in ring file")
    p.add_argument("kind", choices=("kn", "cyclic"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_builtin)

    return parser


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
        code, payload, text = args.handler(args)
    except InvalidInputError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_INVALID
    except AmbiguityError as exc:
        sys.stderr.write("ambiguous: %s\n" % exc)
        return EXIT_AMBIGUOUS
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
