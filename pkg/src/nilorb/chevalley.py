"""Structure-constant realization of the simple Lie algebras.

Basis: one root vector X_r per root r, one coroot generator H_i per simple
root.  Brackets follow the Chevalley relations

    [H, X_r] = r(H) X_r,   [X_r, X_{-r}] = H_r,   [X_r, X_s] = N_{r,s} X_{r+s},

with integer constants N_{r,s}, |N_{r,s}| = p+1 for a root string of length
p below s in the direction of r.  Signs are fixed by the extraspecial-pair
convention over the height-then-lexicographic order on positive roots; the
build verifies the Jacobi identity on a deterministic sample and aborts on
any inconsistency.
"""

from fractions import Fraction

from . import linalg
from .rootsys import build_root_system


class LieElement:
    """Sparse coefficient vector over the algebra basis.

    Labels are root tuples (for X_r) or ('H', i) for the Cartan generators.
    Zero coefficients are never stored, so equality is coefficientwise.
    """

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg, coeffs):
        self.alg = alg
        self.coeffs = {k: Fraction(v) for k, v in coeffs.items() if v != 0}

    def __eq__(self, other):
        return (
            isinstance(other, LieElement)
            and self.alg is other.alg
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LieElement(self.alg, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LieElement(self.alg, {k: -v for k, v in self.coeffs.items()})

    def scale(self, c):
        return LieElement(self.alg, {k: c * v for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def _check(self, other):
        if not isinstance(other, LieElement) or other.alg is not self.alg:
            raise ValueError("elements belong to different algebras")

    def to_vector(self):
        v = [Fraction(0)] * self.alg.dim
        for k, c in self.coeffs.items():
            v[self.alg.index[k]] = c
        return v

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, key=lambda k: self.alg.index[k]):
            c = self.coeffs[k]
            name = f"H{k[1]+1}" if isinstance(k, tuple) and k and k[0] == "H" else f"X{k}"
            parts.append(f"{c}*{name}")
        return " + ".join(parts)


class ChevalleyAlgebra:
    def __init__(self, rs, jacobi_samples=250):
        self.rs = rs
        self.rank = rs.rank
        self.dim = len(rs.all_roots) + rs.rank
        self.basis_labels = list(rs.all_roots) + [("H", i) for i in range(rs.rank)]
        self.index = {lbl: i for i, lbl in enumerate(self.basis_labels)}
        self._pos = rs.positive_roots
        self._pos_index = {r: i for i, r in enumerate(self._pos)}
        self._len2 = {r: rs.inner(r, r) for r in rs.all_roots}
        self._npos = {}
        self._fill_structure_constants()
        self._jacobi_gate(jacobi_samples)

    # -- structure constants --------------------------------------------

    def _is_pos(self, r):
        return r in self._pos_index

    def _string_below(self, r, s):
        """Largest p with s - p r a root."""
        p = 0
        cur = tuple(a - b for a, b in zip(s, r))
        while self.rs.is_root(cur):
            p += 1
            cur = tuple(a - b for a, b in zip(cur, r))
        return p

    def _fill_structure_constants(self):
        for t in self._pos:
            ht = sum(t)
            decomps = []
            for r in self._pos:
                if sum(r) >= ht:
                    break
                s = tuple(a - b for a, b in zip(t, r))
                if s in self._pos_index and self._pos_index[r] < self._pos_index[s]:
                    decomps.append((r, s))
            if not decomps:
                continue
            r0, s0 = decomps[0]  # extraspecial: minimal first member
            n0 = self._string_below(r0, s0) + 1
            self._npos[(r0, s0)] = n0
            tt = self._len2[t]
            for r, s in decomps[1:]:
                d1 = tuple(a - b for a, b in zip(r0, r))
                d2 = tuple(a - b for a, b in zip(s0, r))
                term = Fraction(0)
                if self.rs.is_root(d1):
                    term += (
                        self._nany(r0, tuple(-c for c in r))
                        * self._nany(s0, tuple(-c for c in s))
                        / self._len2[d1]
                    )
                if self.rs.is_root(d2):
                    term += (
                        self._nany(tuple(-c for c in r), s0)
                        * self._nany(r0, tuple(-c for c in s))
                        / self._len2[d2]
                    )
                val = -tt * term / n0
                assert val.denominator == 1 and val != 0, (t, r, s, val)
                n = int(val)
                assert abs(n) == self._string_below(r, s) + 1, (t, r, s, n)
                self._npos[(r, s)] = n

    def _npos_any_order(self, r, s):
        if (r, s) in self._npos:
            return self._npos[(r, s)]
        return -self._npos[(s, r)]

    def _nany(self, a, b):
        """N_{a,b} for arbitrary roots a, b with a+b a root."""
        apos, bpos = self._is_pos(a), self._is_pos(b)
        if apos and bpos:
            return self._npos_any_order(a, b)
        if not apos and not bpos:
            return -self._npos_any_order(
                tuple(-c for c in a), tuple(-c for c in b)
            )
        if not apos:
            return -self._nany(b, a)
        r, u = a, tuple(-c for c in b)
        v = tuple(x - y for x, y in zip(r, u))
        if self._is_pos(v):
            val = -Fraction(self._len2[v], self._len2[r]) * self._npos_any_order(u, v)
        else:
            v = tuple(-c for c in v)
            val = Fraction(self._len2[v], self._len2[u]) * self._npos_any_order(v, r)
        assert val.denominator == 1
        return int(val)

    def struct_const(self, r, s):
        """N_{r,s} for roots r, s; 0 if r+s is not a root."""
        t = tuple(a + b for a, b in zip(r, s))
        if not self.rs.is_root(t):
            return 0
        return self._nany(r, s)

    # -- elements -------------------------------------------------------

    def element(self, coeffs):
        return LieElement(self, coeffs)

    def zero(self):
        return LieElement(self, {})

    def root_vector(self, r):
        r = tuple(r)
        if not self.rs.is_root(r):
            raise ValueError(f"{r} is not a root")
        return LieElement(self, {r: 1})

    def h(self, i):
        return LieElement(self, {("H", i): 1})

    def coroot_element(self, r):
        """H_r = r^vee expanded over the simple coroot generators."""
        co = self.rs.coroot(r)
        return LieElement(self, {("H", i): c for i, c in enumerate(co)})

    def cartan_element(self, values):
        return LieElement(
            self, {("H", i): v for i, v in enumerate(values)}
        )

    def root_value_on(self, r, cartan_coeffs):
        """r(H) for H = sum c_i H_i."""
        return sum(
            c * self.rs._cartan_pairing(r, i) for i, c in enumerate(cartan_coeffs)
        )

    # -- operations -----------------------------------------------------

    def _bracket_basis(self, k1, k2):
        """Bracket of two basis elements, as a sparse coeff dict."""
        h1 = isinstance(k1, tuple) and k1 and k1[0] == "H"
        h2 = isinstance(k2, tuple) and k2 and k2[0] == "H"
        if h1 and h2:
            return {}
        if h1:
            return {k2: self.rs._cartan_pairing(k2, k1[1])}
        if h2:
            return {k1: -self.rs._cartan_pairing(k1, k2[1])}
        t = tuple(a + b for a, b in zip(k1, k2))
        if all(c == 0 for c in t):
            return {("H", i): c for i, c in enumerate(self.rs.coroot(k1)) if c}
        if self.rs.is_root(t):
            return {t: self._nany(k1, k2)}
        return {}

    def bracket(self, a, b):
        a._check(b)
        if a.alg is not self:
            raise ValueError("elements belong to a different algebra")
        out = {}
        for k1, c1 in a.coeffs.items():
            for k2, c2 in b.coeffs.items():
                for k, v in self._bracket_basis(k1, k2).items():
                    out[k] = out.get(k, 0) + c1 * c2 * v
        return LieElement(self, out)

    def ad_columns(self, a):
        """Sparse columns of ad(a): column j holds [a, e_j]."""
        cols = []
        for lbl in self.basis_labels:
            img = self.bracket(a, LieElement(self, {lbl: 1}))
            cols.append({self.index[k]: v for k, v in img.coeffs.items()})
        return cols

    def ad_matrix(self, a):
        """Dense matrix of ad(a) over the full basis."""
        cols = self.ad_columns(a)
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j, col in enumerate(cols):
            for i, v in col.items():
                m[i][j] = v
        return m

    def killing(self, a, b):
        a._check(b)
        tot = Fraction(0)
        for lbl in self.basis_labels:
            e = LieElement(self, {lbl: 1})
            img = self.bracket(a, self.bracket(b, e))
            tot += img.coeffs.get(lbl, 0)
        return tot

    def centralizer(self, a):
        """Exact basis of ker ad(a) as a list of LieElements."""
        if a.is_zero():
            return [LieElement(self, {lbl: 1}) for lbl in self.basis_labels]
        cols = self.ad_columns(a)
        rows = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for j, col in enumerate(cols):
            for i, v in col.items():
                rows[i][j] = v
        basis = []
        for vec in linalg.kernel_basis(rows):
            basis.append(
                LieElement(
                    self,
                    {self.basis_labels[j]: c for j, c in enumerate(vec) if c},
                )
            )
        return basis

    def centralizer_dim(self, a):
        if a.is_zero():
            return self.dim
        cols = self.ad_columns(a)
        sparse_rows = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                sparse_rows.setdefault(i, {})[j] = v
        return self.dim - linalg.sparse_rank(list(sparse_rows.values()))

    def orbit_dimension(self, a):
        if a.is_zero():
            raise ValueError("orbit dimension of 0 is not defined")
        return self.dim - self.centralizer_dim(a)

    def projective_orbit_dimension(self, a):
        return self.orbit_dimension(a) - 1

    def is_ad_nilpotent(self, a):
        """Exact test that ad(a)^k = 0 for some k <= dim."""
        vecs = {lbl: LieElement(self, {lbl: 1}) for lbl in self.basis_labels}
        cur = list(vecs.values())
        for _ in range(self.dim + 1):
            cur = [self.bracket(a, v) for v in cur if not v.is_zero()]
            if all(v.is_zero() for v in cur):
                return True
        return False

    # -- build-time verification ----------------------------------------

    def _jacobi_residual(self, x, y, z):
        return (
            self.bracket(x, self.bracket(y, z))
            + self.bracket(y, self.bracket(z, x))
            + self.bracket(z, self.bracket(x, y))
        )

    def _jacobi_gate(self, samples):
        n = self.dim
        triples = []
        if n <= 16:
            triples = [
                (i, j, k)
                for i in range(n)
                for j in range(i + 1, n)
                for k in range(j + 1, n)
            ]
        else:
            # deterministic stride sample across all index triples
            step = max(1, (n * n * n) // (samples * 37))
            t = 0
            while len(triples) < samples:
                t += 1013904223 + step
                i = t % n
                j = (t // n) % n
                k = (t // (n * n)) % n
                if i < j < k:
                    triples.append((i, j, k))
                if t > 64 * samples * (step + n):
                    break
        for i, j, k in triples:
            x = LieElement(self, {self.basis_labels[i]: 1})
            y = LieElement(self, {self.basis_labels[j]: 1})
            z = LieElement(self, {self.basis_labels[k]: 1})
            r = self._jacobi_residual(x, y, z)
            if not r.is_zero():
                raise AssertionError(
                    f"Jacobi identity fails on basis triple {i},{j},{k}: {r}"
                )


_CACHE = {}


def build_algebra(t):
    """Chevalley algebra for a Cartan type, root system, or type label."""
    from .rootsys import CartanType, RootSystem

    if isinstance(t, RootSystem):
        rs = t
        key = rs.cartan_type
    else:
        rs = build_root_system(t)
        key = rs.cartan_type
    if key not in _CACHE:
        _CACHE[key] = ChevalleyAlgebra(rs)
    return _CACHE[key]
