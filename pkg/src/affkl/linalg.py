"""Exact dense linear algebra.

Three layers:
  * mod-p kernels/rref on numpy int64 arrays (the workhorse for GF(p));
  * rational kernels via multi-modular reconstruction with exact verification;
  * generic small-field Gaussian elimination for finite-dimensional algebras.
"""

import math
from fractions import Fraction

import numpy as np

from .errors import SolverError

_MODULAR_PRIMES = (536870909, 536870923, 536871001, 536871017, 536871077,
                   536871133, 536871161, 536871199, 536871209, 536871239)


# -- GF(p), numpy ------------------------------------------------------------


def rref_mod_p(a, p):
    """Reduced row echelon form in place; returns (matrix, pivot columns)."""
    a = np.mod(a, p).astype(np.int64)
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = np.nonzero(a[r + 1:, c])[0]
        if below.size:
            rows = below + r + 1
            a[rows] = (a[rows] - np.outer(a[rows, c], a[r])) % p
        pivots.append(c)
        r += 1
    # back substitution on the pivot rows only
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        above = np.nonzero(a[:k, c])[0]
        if above.size:
            a[above] = (a[above] - np.outer(a[above, c], a[k])) % p
    return a[:len(pivots)], pivots


def kernel_mod_p(a, p):
    """Canonical kernel basis (one vector per free column, RREF-normalized)."""
    if a.size == 0:
        ncols = a.shape[1]
        return [np.zeros(ncols, dtype=np.int64) for _ in range(0)] or [
            _unit_vec(ncols, i) for i in range(ncols)
        ]
    r, pivots = rref_mod_p(a, p)
    ncols = a.shape[1]
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for k, c in enumerate(pivots):
            v[c] = (-int(r[k, f])) % p
        basis.append(v)
    return basis


def _unit_vec(n, i):
    v = np.zeros(n, dtype=np.int64)
    v[i] = 1
    return v


def rank_mod_p(a, p):
    if a.size == 0:
        return 0
    _, pivots = rref_mod_p(a, p)
    return len(pivots)


def solve_mod_p(a, b, p):
    """One solution of a x = b mod p, or None if inconsistent."""
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    r, pivots = rref_mod_p(aug, p)
    ncols = a.shape[1]
    if ncols in pivots:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for k, c in enumerate(pivots):
        x[c] = int(r[k, ncols])
    return x


# -- rationals ---------------------------------------------------------------


def _rational_reconstruct(r, m):
    """Unique n/d with n^2, d^2 <= m/2 and n = r d (mod m), or None."""
    bound = math.isqrt(m // 2)
    a0, a1 = m, r % m
    x0, x1 = 0, 1
    while a1 > bound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        x0, x1 = x1, x0 - q * x1
    n, d = a1, x1
    if d == 0 or abs(d) > bound:
        return None
    if d < 0:
        n, d = -n, -d
    if math.gcd(abs(n), d) != 1:
        return None
    return Fraction(n, d)


def kernel_rational(rows):
    """Kernel basis over Q of an integer matrix (list of int rows).

    Multi-modular with exact verification; falls back to Fraction elimination
    when reconstruction keeps failing (tiny systems only).
    """
    if not rows:
        return []
    ncols = len(rows[0])
    a_int = [list(map(int, row)) for row in rows]
    used = []
    residues = None
    free_cols = None
    modulus = 1
    for p in _MODULAR_PRIMES:
        a = np.array([[x % p for x in row] for row in a_int], dtype=np.int64)
        r, pivots = rref_mod_p(a, p)
        pivset = set(pivots)
        fc = tuple(c for c in range(ncols) if c not in pivset)
        if free_cols is None or len(fc) > len(free_cols):
            # first prime, or previous primes were unlucky (rank too high mod p
            # can't happen; too low rank mod p means MORE pivots... guard anyway)
            free_cols = fc
            used = [(p, r, pivots)]
            modulus = p
        elif fc == free_cols:
            used.append((p, r, pivots))
            modulus *= p
        else:
            continue
        # try reconstruction
        basis = _reconstruct_kernel(used, ncols, free_cols)
        if basis is not None and _verify_kernel(a_int, basis):
            return basis
        if modulus > 2 ** 200:
            break
    # fallback: exact Fraction elimination
    return _kernel_fraction(a_int)


def _reconstruct_kernel(used, ncols, free_cols):
    out = []
    modulus = 1
    for p, _, _ in used:
        modulus *= p
    for f in free_cols:
        vec = []
        ok = True
        # CRT-combine the canonical kernel vector entries
        for c in range(ncols):
            residue, mod = 0, 1
            for p, r, pivots in used:
                if c == f:
                    val = 1
                elif c in pivots:
                    k = pivots.index(c)
                    val = (-int(r[k, f])) % p
                else:
                    val = 0
                # CRT step
                g = pow(mod % p, p - 2, p) if mod % p else None
                if g is None:
                    ok = False
                    break
                t = ((val - residue) * g) % p
                residue = residue + mod * t
                mod *= p
            if not ok:
                break
            q = _rational_reconstruct(residue % modulus, modulus)
            if q is None:
                ok = False
                break
            vec.append(q)
        if not ok:
            return None
        out.append(_clear_denominators(vec))
    return out


def _clear_denominators(vec):
    lcm = 1
    for q in vec:
        lcm = lcm * q.denominator // math.gcd(lcm, q.denominator)
    return [Fraction(q * lcm) for q in vec]


def _verify_kernel(a_int, basis):
    for v in basis:
        for row in a_int:
            if sum(r * x for r, x in zip(row, v)) != 0:
                return False
    return True


def _kernel_fraction(a_int):
    rows = [[Fraction(x) for x in row] for row in a_int]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                fmul = rows[i][c]
                rows[i] = [x - fmul * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -rows[k][f]
        out.append(_clear_denominators(v))
    return out


# -- generic small-field elimination ------------------------------------------


def rref_field(rows, field):
    """RREF over an arbitrary field object; returns (rows, pivots)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if not field.is_zero(rows[i][c])),
                  None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not field.is_zero(rows[i][c]):
                fmul = rows[i][c]
                rows[i] = [field.sub(x, field.mul(fmul, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:len(pivots)], pivots


def kernel_field(rows, ncols, field):
    red, pivots = rref_field(rows, field)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for k, c in enumerate(pivots):
            v[c] = field.neg(red[k][f])
        out.append(v)
    return out


def solve_field(rows, rhs, field):
    """One solution of rows * x = rhs, or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref_field(aug, field)
    ncols = len(rows[0]) if rows else 0
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for k, c in enumerate(pivots):
        x[c] = red[k][ncols]
    return x


class SpanSolver:
    """Express vectors in the span of a fixed family (over a field)."""

    def __init__(self, vectors, field):
        self.field = field
        self.n = len(vectors[0]) if vectors else 0
        aug = [list(v) + [field.one if i == j else field.zero
                          for j in range(len(vectors))]
               for i, v in enumerate(vectors)]
        self.red, self.pivots = rref_field(aug, field)
        self.nvecs = len(vectors)
        if any(c >= self.n for c in self.pivots):
            raise SolverError("family is linearly dependent")

    def coords(self, vec):
        """Coefficients expressing vec, or None if outside the span."""
        fld = self.field
        work = list(vec) + [fld.zero] * self.nvecs
        for k, c in enumerate(self.pivots):
            if not fld.is_zero(work[c]):
                fmul = work[c]
                work = [fld.sub(x, fld.mul(fmul, y))
                        for x, y in zip(work, self.red[k])]
        if any(not fld.is_zero(x) for x in work[:self.n]):
            return None
        return [fld.neg(x) for x in work[self.n:]]


# -- fraction-free elimination over a polynomial ring -------------------------


def poly_rank(rows, ring):
    """Rank of a matrix of polynomials (entries over an integral domain)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = ring.one
    for c in range(ncols):
        pr = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[rank], m[pr] = m[pr], m[rank]
        piv = m[rank][c]
        for i in range(rank + 1, len(m)):
            row = m[i]
            if not any(row[c2] for c2 in range(c, ncols)):
                continue
            for j in range(ncols):
                if j == c:
                    continue
                num = ring.sub(ring.mul(piv, row[j]), ring.mul(row[c], m[rank][j]))
                row[j] = ring.exact_div(num, prev) if num else {}
            row[c] = {}
        prev = piv
        rank += 1
    return rank


def poly_kernel(rows, ncols, ring):
    """Kernel basis over Frac(R) of a small polynomial matrix, cleared to R."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                # row_i <- piv * row_i - row_i[c] * row_r  (no division: sizes tiny)
                piv = m[r][c]
                f = m[i][c]
                m[i] = [ring.sub(ring.mul(piv, m[i][j]), ring.mul(f, m[r][j]))
                        for j in range(ncols)]
        pivots.append(c)
        r += 1
    pivset = set(pivots)
    out = []
    for fcol in range(ncols):
        if fcol in pivset:
            continue
        # x_f = prod of pivots; x_{pivot c} = -(row coefficient scaled)
        num = {}
        den = {}
        x = [ring.zero for _ in range(ncols)]
        piv_prod = ring.one
        for k, c in enumerate(pivots):
            piv_prod = ring.mul(piv_prod, m[k][c])
        x[fcol] = piv_prod
        for k, c in enumerate(pivots):
            # m[k][c] * x_c + m[k][fcol] * x_f = 0 (rows are fully reduced)
            val = ring.mul(m[k][fcol], x[fcol])
            x[c] = ring.neg(ring.exact_div(val, m[k][c])) if val else {}
        out.append(x)
    return out
