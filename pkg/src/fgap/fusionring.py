"""Based rings with finite basis: validation, Perron data, codegree spectra.

A ring is stored as its structure tensor N[i][j][k] (multiplicity of b_k in
b_i*b_j) plus the duality permutation; index 0 is the unit.  The codegree
spectrum is computed exactly as the spectrum of Z = sum_i N_i N_i^T, which
for a commutative ring carries the same eigenvalues as the canonical
codegree functionals evaluated on characters.
"""

from fractions import Fraction

from .algnum import (AlgebraicNumber, IntPoly, charpoly_int,
                     factor_over_integers, isolate_real_roots)
from .errors import AmbiguityError, InvalidInputError, UnsupportedRingError


class FusionRing:
    """Immutable based ring: rank, duality permutation, structure tensor."""

    __slots__ = ("rank", "dual", "N")

    def __init__(self, rank, dual, tensor):
        rank = int(rank)
        if rank < 1:
            raise InvalidInputError("rank must be a positive integer")
        dual = tuple(int(x) for x in dual)
        if len(dual) != rank or sorted(dual) != list(range(rank)):
            raise InvalidInputError("dual is not a permutation of 0..%d"
                                    % (rank - 1))
        if len(tensor) != rank:
            raise InvalidInputError("tensor has %d slices, expected %d"
                                    % (len(tensor), rank))
        frozen = []
        for i, mat in enumerate(tensor):
            if len(mat) != rank:
                raise InvalidInputError("N[%d] has %d rows, expected %d"
                                        % (i, len(mat), rank))
            rows = []
            for j, row in enumerate(mat):
                if len(row) != rank:
                    raise InvalidInputError(
                        "N[%d][%d] has %d entries, expected %d"
                        % (i, j, len(row), rank))
                rows.append(tuple(int(x) for x in row))
            frozen.append(tuple(rows))
        self.rank = rank
        self.dual = dual
        self.N = tuple(frozen)

    def matrix(self, i):
        """Fusion matrix N_i with rows indexed by j, columns by k."""
        return [list(row) for row in self.N[i]]

    def validate(self):
        """All axiom violations, each with witnessing indices; [] if valid."""
        r = self.rank
        n = self.N
        dual = self.dual
        out = []
        for i in range(r):
            for j in range(r):
                for k in range(r):
                    if n[i][j][k] < 0:
                        out.append("negative multiplicity: N[%d][%d][%d] = %d"
                                   % (i, j, k, n[i][j][k]))
        for j in range(r):
            for k in range(r):
                want = 1 if j == k else 0
                if n[0][j][k] != want:
                    out.append("unit: N[0][%d][%d] = %d, expected %d"
                               % (j, k, n[0][j][k], want))
        for i in range(r):
            for k in range(r):
                want = 1 if i == k else 0
                if n[i][0][k] != want:
                    out.append("unit: N[%d][0][%d] = %d, expected %d"
                               % (i, k, n[i][0][k], want))
        if dual[0] != 0:
            out.append("duality: dual(0) = %d, expected 0" % dual[0])
        for i in range(r):
            if dual[dual[i]] != i:
                out.append("duality: dual(dual(%d)) = %d, expected %d"
                           % (i, dual[dual[i]], i))
            for j in range(r):
                want = 1 if j == dual[i] else 0
                if n[i][j][0] != want:
                    out.append("duality: N[%d][%d][0] = %d, expected %d"
                               % (i, j, n[i][j][0], want))
        for i in range(r):
            for j in range(r):
                for k in range(r):
                    if n[dual[i]][k][j] != n[i][j][k]:
                        out.append(
                            "transpose law: N[%d][%d][%d] = %d but "
                            "N[%d][%d][%d] = %d"
                            % (dual[i], k, j, n[dual[i]][k][j],
                               i, j, k, n[i][j][k]))
        for i in range(r):
            for j in range(r):
                for k in range(r):
                    for l in range(r):
                        lhs = sum(n[i][j][m] * n[m][k][l] for m in range(r))
                        rhs = sum(n[j][k][m] * n[i][m][l] for m in range(r))
                        if lhs != rhs:
                            out.append(
                                "associativity: (i,j,k,l)=(%d,%d,%d,%d) "
                                "lhs %d != rhs %d" % (i, j, k, l, lhs, rhs))
        return out

    @property
    def is_commutative(self):
        r = self.rank
        n = self.N
        for i in range(r):
            for j in range(i + 1, r):
                for a in range(r):
                    for b in range(r):
                        ab = sum(n[i][a][m] * n[j][m][b] for m in range(r))
                        ba = sum(n[j][a][m] * n[i][m][b] for m in range(r))
                        if ab != ba:
                            return False
        return True

    def __eq__(self, other):
        return (isinstance(other, FusionRing) and self.rank == other.rank
                and self.dual == other.dual and self.N == other.N)

    def __hash__(self):
        return hash((self.rank, self.dual, self.N))

    def __repr__(self):
        return "FusionRing(rank=%d)" % self.rank


def builtin_ring(name, n):
    """Built-in families: kn(n) for n >= 0, cyclic(n) for n >= 1."""
    n = int(n)
    if name == "kn":
        if n < 0:
            raise InvalidInputError("kn requires n >= 0")
        tensor = [
            [[1, 0], [0, 1]],
            [[0, 1], [1, n]],
        ]
        return FusionRing(2, (0, 1), tensor)
    if name == "cyclic":
        if n < 1:
            raise InvalidInputError("cyclic requires n >= 1")
        tensor = [[[1 if k == (i + j) % n else 0 for k in range(n)]
                   for j in range(n)] for i in range(n)]
        dual = tuple((-i) % n for i in range(n))
        return FusionRing(n, dual, tensor)
    raise InvalidInputError("unknown builtin ring %r (expected kn or cyclic)"
                            % (name,))


def codegree_matrix(ring):
    """Z = sum_i N_i N_i^T, exact integer symmetric matrix."""
    r = ring.rank
    z = [[0] * r for _ in range(r)]
    for i in range(r):
        ni = ring.N[i]
        for j in range(r):
            for k in range(r):
                acc = 0
                for m in range(r):
                    acc += ni[j][m] * ni[k][m]
                z[j][k] += acc
    return z


class CodegreeOrbit:
    """One Galois orbit of codegrees: an irreducible factor with its roots."""

    __slots__ = ("poly", "multiplicity", "roots")

    def __init__(self, poly, multiplicity, roots):
        self.poly = poly
        self.multiplicity = multiplicity
        self.roots = tuple(roots)  # ascending AlgebraicNumbers

    @property
    def size(self):
        return len(self.roots)

    @property
    def min_root(self):
        return self.roots[0]

    @property
    def max_root(self):
        return self.roots[-1]

    def mean(self):
        """Exact mean of the orbit roots (without multiplicity weighting)."""
        n = self.poly.degree
        return Fraction(-self.poly.coeffs[n - 1], n)

    def __repr__(self):
        return "CodegreeOrbit(%s, mult=%d)" % (self.poly.to_str(),
                                               self.multiplicity)


class CodegreeSpectrum:
    """Exact codegree data of a commutative based ring."""

    __slots__ = ("rank", "charpoly", "orbits", "fp_orbit_index", "fp_root",
                 "all_real", "all_ge_one")

    def __init__(self, rank, charpoly, orbits):
        self.rank = rank
        self.charpoly = charpoly
        self.orbits = tuple(orbits)
        fp_idx = None
        fp = None
        ok_real = True
        ok_ge1 = True
        for idx, orb in enumerate(self.orbits):
            prof_real = (orb.size == orb.poly.degree)
            ok_real = ok_real and prof_real
            if orb.size and orb.min_root.cmp_fraction(Fraction(1)) < 0:
                ok_ge1 = False
            if orb.size and (fp is None or orb.max_root.cmp(fp) > 0):
                fp = orb.max_root
                fp_idx = idx
        self.fp_orbit_index = fp_idx
        self.fp_root = fp
        self.all_real = ok_real
        self.all_ge_one = ok_real and ok_ge1

    def e(self, k):
        """Elementary symmetric function e_k of the codegrees, exact."""
        r = self.rank
        if k < 0 or k > r:
            return 0
        sign = -1 if k % 2 else 1
        return sign * self.charpoly.coeffs[r - k]

    def inverse_square_sum(self):
        """Sum of 1/f_i**2 over all codegrees, exact rational."""
        r = self.rank
        num = self.e(r - 1) ** 2 - 2 * self.e(r) * self.e(r - 2)
        return Fraction(num, self.e(r) ** 2)

    def inverse_sum(self):
        """Sum of 1/f_i over all codegrees, exact rational."""
        return Fraction(self.e(self.rank - 1), self.e(self.rank))

    def sum_identity(self):
        """Exact test of e_{r-1} == e_r (sum of codegree inverses == 1)."""
        return self.e(self.rank - 1) == self.e(self.rank)

    def approx(self):
        """All codegrees as floats, ascending, with multiplicity."""
        vals = []
        for orb in self.orbits:
            for root in orb.roots:
                vals.extend([root.approx_float()] * orb.multiplicity)
        return sorted(vals)

    def min_root(self):
        best = None
        for orb in self.orbits:
            if best is None or orb.min_root.cmp(best) < 0:
                best = orb.min_root
        return best

    def __repr__(self):
        return "CodegreeSpectrum(charpoly=%s)" % self.charpoly.to_str()


def formal_codegrees(ring):
    """Exact spectrum of Z as a CodegreeSpectrum.

    Requires a commutative ring; the eigenvalue multiset of Z then equals
    the multiset of codegree scalars.
    """
    if not ring.is_commutative:
        raise UnsupportedRingError(
            "ring is noncommutative; codegree spectra are computed for "
            "commutative based rings only")
    z = codegree_matrix(ring)
    cp = charpoly_int(z)
    orbits = []
    for poly, mult in factor_over_integers(cp):
        prof = isolate_real_roots(poly)
        roots = [AlgebraicNumber(poly, iv) for iv, _ in prof.roots]
        orbits.append(CodegreeOrbit(poly, mult, roots))
    return CodegreeSpectrum(ring.rank, cp, orbits)


def sum_identity_check(ring):
    """Exact integer identity e_{r-1} = e_r for the codegree spectrum."""
    return formal_codegrees(ring).sum_identity()


def fp_dimension_vector(ring, tol=Fraction(1, 10 ** 12), max_iter=20000):
    """Perron data: per-basis dimensions and the exact top codegree.

    Power iteration runs on B = sum_i N_i (primitive for a valid ring, and
    its Perron direction is the common positive eigenvector of every N_i);
    the vector is then certified against Z with an exact rational Rayleigh
    residual: ||(Z - rho) v||^2 <= tol^2 * rho^2 * ||v||^2.

    Returns (dims, fp_root, certificate) where dims are floats normalized
    to dims[0] = 1 and fp_root is the designated largest root of the exact
    characteristic polynomial of Z.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise InvalidInputError("tolerance must be positive")
    r = ring.rank
    b = [[sum(ring.N[i][j][k] for i in range(r)) for k in range(r)]
         for j in range(r)]
    v = [1.0] * r
    last = 0.0
    for _ in range(max_iter):
        w = [sum(b[j][k] * v[k] for k in range(r)) for j in range(r)]
        norm = max(abs(x) for x in w)
        v = [x / norm for x in w]
        if abs(norm - last) <= 1e-16 * norm:
            break
        last = norm
    scale = v[0]
    if scale <= 0:
        raise AmbiguityError("power iteration lost positivity")
    v = [x / scale for x in v]

    spectrum = formal_codegrees(ring)
    fp = spectrum.fp_root
    z = codegree_matrix(ring)
    vq = [Fraction(x) for x in v]
    zv = [sum(z[j][k] * vq[k] for k in range(r)) for j in range(r)]
    vv = sum(x * x for x in vq)
    rho = sum(zv[j] * vq[j] for j in range(r)) / vv
    res = sum((zv[j] - rho * vq[j]) ** 2 for j in range(r)) / vv
    certified = res <= tol * tol * rho * rho
    if not certified:
        raise AmbiguityError(
            "Rayleigh residual %.3g exceeds tolerance %.3g"
            % (float(res) ** 0.5, float(tol)))
    # rho must sit on the designated top eigenvalue
    iv = fp.refine(tol if tol < Fraction(1, 10 ** 6) else Fraction(1, 10 ** 6))
    if not (iv.lo - tol * rho <= rho <= iv.hi + tol * rho):
        raise AmbiguityError("Rayleigh quotient does not match the top "
                             "eigenvalue enclosure")
    certificate = {
        "rayleigh": rho,
        "residual_sq": res,
        "tol": tol,
        "certified": True,
    }
    return v, fp, certificate


class CharacterTable:
    """Numeric character data: values[j][i] = phi_j(b_i)."""

    __slots__ = ("values", "codegrees", "tol", "max_defect", "attempts")

    def __init__(self, values, codegrees, tol, max_defect, attempts):
        self.values = values
        self.codegrees = codegrees
        self.tol = tol
        self.max_defect = max_defect
        self.attempts = attempts


def characters_numeric(ring, tol=1e-9):
    """Simultaneous numeric eigenbasis of the fusion matrices.

    Diagonalizes a random real combination M = sum t_i N_i (normal, since
    M^T lies in the same commuting family), reads off each character as the
    eigenvalue tuple on one eigenvector, and cross-checks the resulting
    codegrees f_phi = sum_i phi(b_i) phi(b_dual(i)) against the exact
    spectrum.  Retries with fresh weights on eigenvalue collisions; raises
    a precision error after 5 attempts.
    """
    import numpy as np

    if not ring.is_commutative:
        raise UnsupportedRingError("characters need a commutative ring")
    r = ring.rank
    mats = [np.array(ring.matrix(i), dtype=float) for i in range(r)]
    exact = formal_codegrees(ring).approx()
    for attempt in range(1, 6):
        rng = np.random.default_rng(911 + attempt)
        t = rng.uniform(1.0, 2.0, size=r)
        m = sum(t[i] * mats[i] for i in range(r))
        eigvals, eigvecs = np.linalg.eig(m)
        gaps = np.abs(eigvals[:, None] - eigvals[None, :])
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() < 1e-6 * (1.0 + np.abs(eigvals).max()):
            continue
        values = []
        codegs = []
        defect = 0.0
        for col in range(r):
            w = eigvecs[:, col]
            denom = np.vdot(w, w)
            phi = [complex(np.vdot(w, mats[i] @ w) / denom) for i in range(r)]
            # homomorphism defect
            for i in range(r):
                for j in range(r):
                    want = sum(ring.N[i][j][k] * phi[k] for k in range(r))
                    defect = max(defect, abs(phi[i] * phi[j] - want))
            f = sum(phi[i] * phi[ring.dual[i]] for i in range(r))
            codegs.append(f)
            values.append(tuple(phi))
        if defect > tol:
            continue
        got = sorted(x.real for x in codegs)
        if max(abs(x.imag) for x in codegs) > tol:
            continue
        if max(abs(a - b) for a, b in zip(got, exact)) > 1e-8:
            raise AmbiguityError(
                "numeric codegrees disagree with the exact spectrum")
        return CharacterTable(tuple(values), tuple(codegs), tol, defect,
                              attempt)
    raise AmbiguityError(
        "eigenvalue separation failed after 5 attempts; use the exact "
        "spectrum or lower the tolerance")


class RepGCodegrees:
    """Codegrees |G|/|C_i| from conjugacy class sizes."""

    __slots__ = ("values", "group_order", "all_integer")

    def __init__(self, values, group_order):
        self.values = tuple(values)
        self.group_order = group_order
        self.all_integer = all(v.denominator == 1 for v in values)


def rep_g_codegrees(class_sizes):
    """Exact codegrees |G|/|C_i| for given conjugacy class sizes."""
    sizes = [int(x) for x in class_sizes]
    if not sizes:
        raise InvalidInputError("class size list is empty")
    if any(s < 1 for s in sizes):
        raise InvalidInputError("class sizes must be positive")
    if 1 not in sizes:
        raise InvalidInputError("no identity class (size 1) present")
    order = sum(sizes)
    return RepGCodegrees([Fraction(order, s) for s in sizes], order)


# ---------------------------------------------------------------------------
# ring file format

def parse_ring_file(text):
    """Parse the plain-text ring format; validates before returning.

    Format: `rank r`, then `dual p0 ... p{r-1}`, then r*r lines
    `N i j : m0 ... m{r-1}`.  '#' starts a comment line.  Errors carry
    1-based line numbers.
    """
    entries = []  # (lineno, tokens)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        entries.append((lineno, line.split()))
    if not entries:
        raise InvalidInputError("empty ring file")

    def fail(lineno, msg):
        raise InvalidInputError("line %d: %s" % (lineno, msg))

    lineno, toks = entries[0]
    if len(toks) != 2 or toks[0] != "rank":
        fail(lineno, "expected `rank r`")
    try:
        r = int(toks[1])
    except ValueError:
        fail(lineno, "rank is not an integer")
    if r < 1:
        fail(lineno, "rank must be positive")

    if len(entries) < 2:
        raise InvalidInputError("missing `dual` line")
    lineno, toks = entries[1]
    if toks[0] != "dual":
        fail(lineno, "expected `dual p0 ... p%d`" % (r - 1))
    if len(toks) != r + 1:
        fail(lineno, "dual needs %d entries, got %d" % (r, len(toks) - 1))
    try:
        dual = [int(x) for x in toks[1:]]
    except ValueError:
        fail(lineno, "dual entries must be integers")
    if sorted(dual) != list(range(r)):
        fail(lineno, "dual is not a permutation of 0..%d" % (r - 1))

    tensor = [[None] * r for _ in range(r)]
    for lineno, toks in entries[2:]:
        if toks[0] != "N":
            fail(lineno, "expected `N i j : m0 ... m%d`" % (r - 1))
        if len(toks) != r + 4 or toks[3] != ":":
            fail(lineno, "malformed N line (needs `N i j : %d integers`)" % r)
        try:
            i, j = int(toks[1]), int(toks[2])
            row = [int(x) for x in toks[4:]]
        except ValueError:
            fail(lineno, "N line entries must be integers")
        if not (0 <= i < r and 0 <= j < r):
            fail(lineno, "indices (%d,%d) out of range" % (i, j))
        if tensor[i][j] is not None:
            fail(lineno, "duplicate entry for N %d %d" % (i, j))
        tensor[i][j] = row
    missing = [(i, j) for i in range(r) for j in range(r)
               if tensor[i][j] is None]
    if missing:
        raise InvalidInputError("missing N lines for (i,j): %s"
                                % ", ".join("(%d,%d)" % ij
                                            for ij in missing[:8]))
    ring = FusionRing(r, dual, tensor)
    violations = ring.validate()
    if violations:
        raise InvalidInputError(
            "ring axioms violated:\n  " + "\n  ".join(violations[:20]))
    return ring


def emit_ring_file(ring):
    """Byte-stable text form: fixed ordering, no comments."""
    lines = ["rank %d" % ring.rank,
             "dual " + " ".join(str(x) for x in ring.dual)]
    for i in range(ring.rank):
        for j in range(ring.rank):
            lines.append("N %d %d : " % (i, j)
                         + " ".join(str(x) for x in ring.N[i][j]))
    return "\n".join(lines) + "\n"
