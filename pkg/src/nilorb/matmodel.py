"""Concrete matrix model of the minimal nilpotent orbit of sp(2n).

The standard symplectic space (V, omega) with omega = [[0, I], [-I, 0]]
carries the degree-2 map mu sending a vector v to the rank-one square-zero
endomorphism u -> omega(v, u) v.  Its image is the cone over the minimal
orbit; the fiber over a nonzero image point is exactly {v, -v}.  Products
of such maps give coverings of degree 2^(k-1) after projectivizing, and
the trace pairing of mu(v) against commutators realizes the
Kostant-Kirillov form, of rank 2n.

All arithmetic is exact (fractions.Fraction).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg

F0 = Fraction(0)
F1 = Fraction(1)


def _mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [
        [sum((a[i][k] * b[k][j] for k in range(m)), F0) for j in range(p)]
        for i in range(n)
    ]


def _mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _trace(a):
    return sum((a[i][i] for i in range(len(a))), F0)


def _is_zero_mat(a):
    return all(x == 0 for row in a for x in row)


@dataclass(frozen=True)
class SymplecticSpace:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def dim(self):
        return 2 * self.n

    def form(self):
        """The standard alternating matrix [[0, I], [-I, 0]]."""
        n = self.n
        m = [[F0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            m[i][n + i] = F1
            m[n + i][i] = -F1
        return m

    def omega(self, u, v):
        n = self.n
        return sum((u[i] * v[n + i] - u[n + i] * v[i] for i in range(n)), F0)

    def sp_basis(self):
        """Basis of sp(2n) = {X : Omega X symmetric}, via X = -Omega S
        with S running over the symmetric-matrix basis."""
        d = self.dim
        omega = self.form()
        basis = []
        for a in range(d):
            for b in range(a, d):
                s = [[F0] * d for _ in range(d)]
                s[a][b] = F1
                s[b][a] = F1
                basis.append([[-x for x in row] for row in _mat_mul(omega, s)])
        return basis

    def in_sp(self, x):
        """omega(Xu, w) + omega(u, Xw) = 0, i.e. Omega X is symmetric."""
        m = _mat_mul(self.form(), x)
        d = self.dim
        return all(m[i][j] == m[j][i] for i in range(d) for j in range(d))


@dataclass(frozen=True)
class RankOneElement:
    space: SymplecticSpace
    v: tuple
    matrix: tuple   # tuple of row tuples

    def is_zero(self):
        return all(c == 0 for c in self.v)

    def rows(self):
        return [list(r) for r in self.matrix]

    def jordan_type(self):
        """Jordan partition from the ranks of the powers."""
        d = self.space.dim
        ranks = [d]
        p = self.rows()
        while not _is_zero_mat(p):
            ranks.append(linalg.rank(p))
            p = _mat_mul(p, self.rows())
        ranks.extend([0, 0])
        # number of blocks of size exactly k: r_{k-1} - 2 r_k + r_{k+1}
        parts = []
        for k in range(1, len(ranks) - 1):
            count = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1]
            parts.extend([k] * count)
        parts.sort(reverse=True)
        return tuple(parts)


def mu(space, v):
    """The degree-2 map v -> (u -> omega(v,u) v), landing in sp(2n)."""
    v = tuple(Fraction(c) for c in v)
    if len(v) != space.dim:
        raise ValueError("vector has wrong dimension")
    omega = space.form()
    w = [sum((v[i] * omega[i][j] for i in range(space.dim)), F0)
         for j in range(space.dim)]   # row vector v^T Omega
    x = tuple(tuple(v[i] * w[j] for j in range(space.dim)) for i in range(space.dim))
    elt = RankOneElement(space, v, x)
    rows = elt.rows()
    assert space.in_sp(rows)
    assert _is_zero_mat(_mat_mul(rows, rows))
    if any(c != 0 for c in v):
        assert linalg.rank(rows) == 1
    return elt


def _rational_sqrt(q):
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    if q == 0:
        return F0
    num, den = q.numerator, q.denominator
    rn = round(num ** 0.5)
    while rn * rn < num:
        rn += 1
    while rn * rn > num:
        rn -= 1
    rd = round(den ** 0.5)
    while rd * rd < den:
        rd += 1
    while rd * rd > den:
        rd -= 1
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def fiber(space, elt):
    """Exact fiber of mu over a nonzero image point: {v, -v}."""
    rows = elt.rows()
    d = space.dim
    # every nonzero column of the rank-one matrix is proportional to v
    col = next(
        (j for j in range(d) if any(rows[i][j] != 0 for i in range(d))), None
    )
    if col is None:
        raise ValueError("zero element has no finite fiber")
    u = tuple(rows[i][col] for i in range(d))
    base = mu(space, u)
    # mu(c u) = c^2 mu(u): solve c^2 exactly at a nonzero entry
    i = next(i for i in range(d) if base.matrix[i][col] != 0)
    c2 = rows[i][col] / base.matrix[i][col]
    c = _rational_sqrt(c2)
    if c is None:
        raise ValueError("fiber is irrational at this point")
    sols = []
    for s in (c, -c):
        w = tuple(s * x for x in u)
        if mu(space, w).matrix == elt.matrix:
            sols.append(w)
    assert len(sols) == 2 and sols[0] == tuple(-x for x in sols[1])
    return sols


def _fixture_vector(n):
    return tuple(Fraction(i + 1) for i in range(2 * n))


def product_cover_degree(n_list):
    """Degree of the product covering at a sample point with all
    components nonzero: sign tuples modulo the global scalar."""
    if not n_list or any(n < 1 for n in n_list):
        raise ValueError("need a nonempty list of positive integers")
    spaces = [SymplecticSpace(n) for n in n_list]
    vs = [_fixture_vector(n) for n in n_list]
    images = [mu(sp, v).matrix for sp, v in zip(spaces, vs)]
    # per-component fibers are exactly the sign pairs (solved, not assumed)
    for sp, v, img in zip(spaces, vs, images):
        got = set(fiber(sp, RankOneElement(sp, v, img)))
        assert got == {v, tuple(-c for c in v)}
    seen = set()
    for signs in product((1, -1), repeat=len(n_list)):
        cand = tuple(tuple(s * c for c in v) for s, v in zip(signs, vs))
        assert all(
            mu(sp, w).matrix == img
            for sp, w, img in zip(spaces, cand, images)
        )
        neg = tuple(tuple(-c for c in w) for w in cand)
        if neg not in seen:
            seen.add(cand)
    degree = len(seen)
    assert degree == 2 ** (len(n_list) - 1)
    return degree


def kk_rank_at(space, v):
    """Rank of the alternating form (X, Y) -> trace(mu(v) [X, Y]) on
    sp(2n); equals the minimal-orbit dimension 2n."""
    if all(Fraction(c) == 0 for c in v):
        raise ValueError("zero vector")
    nmat = mu(space, v).rows()
    basis = space.sp_basis()
    gram = []
    for x in basis:
        row = []
        for y in basis:
            comm = _mat_sub(_mat_mul(x, y), _mat_mul(y, x))
            row.append(_trace(_mat_mul(nmat, comm)))
        gram.append(row)
    return linalg.rank(gram)
