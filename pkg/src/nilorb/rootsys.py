"""Root systems of the simple types with exact integer/rational data.

Simple roots are numbered as in Bourbaki's planches (see README for the
table).  Roots are stored as integer coordinate tuples in the simple-root
basis; inner products come from a realization of the simple roots in a
rational Euclidean space, rescaled so that long roots have squared
length 2.
"""

from dataclasses import dataclass, field
from fractions import Fraction

FAMILIES = "ABCDEFG"

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    @classmethod
    def parse(cls, s):
        """Parse a label like 'G2', 'B3' or 'E8'."""
        s = s.strip()
        if len(s) < 2 or s[0].upper() not in FAMILIES or not s[1:].isdigit():
            raise ValueError(f"cannot parse Cartan type {s!r}")
        return cls(s[0].upper(), int(s[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _simple_roots_epsilon(t):
    """Bourbaki simple roots in an ambient rational space, plus the factor
    by which the Euclidean dot product is rescaled (long roots -> length 2)."""
    fam, l = t.family, t.rank
    F = Fraction

    def e(i, dim):
        v = [F(0)] * dim
        v[i] = F(1)
        return v

    if fam == "A":
        dim = l + 1
        roots = [[a - b for a, b in zip(e(i, dim), e(i + 1, dim))] for i in range(l)]
        return roots, F(1)
    if fam == "B":
        roots = [[a - b for a, b in zip(e(i, l), e(i + 1, l))] for i in range(l - 1)]
        roots.append(e(l - 1, l))
        return roots, F(1)
    if fam == "C":
        roots = [[a - b for a, b in zip(e(i, l), e(i + 1, l))] for i in range(l - 1)]
        last = e(l - 1, l)
        roots.append([2 * x for x in last])
        return roots, F(1, 2)
    if fam == "D":
        roots = [[a - b for a, b in zip(e(i, l), e(i + 1, l))] for i in range(l - 1)]
        roots.append([a + b for a, b in zip(e(l - 2, l), e(l - 1, l))])
        return roots, F(1)
    if fam == "E":
        dim = 8
        a1 = [F(1, 2), -F(1, 2), -F(1, 2), -F(1, 2), -F(1, 2), -F(1, 2), -F(1, 2), F(1, 2)]
        a2 = [F(1), F(1), F(0), F(0), F(0), F(0), F(0), F(0)]
        roots = [a1, a2]
        for k in range(3, l + 1):
            # alpha_k = e_{k-2} - e_{k-3} in 0-based coordinates
            v = [F(0)] * dim
            v[k - 2] = F(1)
            v[k - 3] = F(-1)
            roots.append(v)
        return roots, F(1)
    if fam == "F":
        F1 = F(1)
        roots = [
            [F(0), F1, -F1, F(0)],
            [F(0), F(0), F1, -F1],
            [F(0), F(0), F(0), F1],
            [F(1, 2), -F(1, 2), -F(1, 2), -F(1, 2)],
        ]
        return roots, F(1)
    if fam == "G":
        roots = [
            [F(1), F(-1), F(0)],
            [F(-2), F(1), F(1)],
        ]
        return roots, F(1, 3)
    raise AssertionError(fam)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


class RootSystem:
    """All roots of a simple type, generated from the Cartan matrix by the
    root-string closure algorithm."""

    def __init__(self, cartan_type):
        self.cartan_type = cartan_type
        self.rank = cartan_type.rank
        simple_eps, scale = _simple_roots_epsilon(cartan_type)
        self._simple_eps = simple_eps
        self._scale = scale
        n = self.rank
        # sym_form[i][j] = (alpha_i, alpha_j), long roots of squared length 2
        self.sym_form = [
            [scale * _dot(simple_eps[i], simple_eps[j]) for j in range(n)]
            for i in range(n)
        ]
        # cartan_matrix[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
        self.cartan_matrix = [
            [int(2 * self.sym_form[i][j] / self.sym_form[j][j]) for j in range(n)]
            for i in range(n)
        ]
        self.simple_roots = [
            tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
        ]
        self.positive_roots = self._generate_positive()
        self.all_roots = self.positive_roots + [
            tuple(-c for c in r) for r in self.positive_roots
        ]
        self._root_set = set(self.all_roots)
        self.epsilon_realization = {r: self.epsilon_coords(r) for r in self.all_roots}

    # -- construction ---------------------------------------------------

    def _cartan_pairing(self, coords, j):
        """<r, alpha_j^vee> for r given by simple-root coordinates."""
        return sum(c * self.cartan_matrix[i][j] for i, c in enumerate(coords))

    def _generate_positive(self):
        n = self.rank
        roots = set(self.simple_roots)
        layer = list(self.simple_roots)
        while layer:
            new = []
            for r in layer:
                for j in range(n):
                    k = self._cartan_pairing(r, j)
                    # length of the string below r in direction alpha_j
                    p = 0
                    down = list(r)
                    while True:
                        down[j] -= 1
                        if tuple(down) in roots and all(c >= 0 for c in down):
                            p += 1
                        else:
                            break
                    if p - k > 0:
                        up = list(r)
                        up[j] += 1
                        t = tuple(up)
                        if t not in roots:
                            roots.add(t)
                            new.append(t)
            layer = new
        return sorted(roots, key=lambda r: (sum(r), r))

    # -- queries --------------------------------------------------------

    def is_root(self, coords):
        return tuple(coords) in self._root_set

    def epsilon_coords(self, coords):
        dim = len(self._simple_eps[0])
        v = [Fraction(0)] * dim
        for c, s in zip(coords, self._simple_eps):
            for i in range(dim):
                v[i] += c * s[i]
        return tuple(v)

    def inner(self, r1, r2):
        """Exact inner product, long roots normalized to squared length 2."""
        return sum(
            ci * cj * self.sym_form[i][j]
            for i, ci in enumerate(r1)
            for j, cj in enumerate(r2)
        )

    def squared_lengths(self):
        return sorted({self.inner(r, r) for r in self.all_roots})

    def is_long(self, r):
        return self.inner(r, r) == max(self.squared_lengths())

    def highest_root(self):
        """The unique root maximal in the coordinatewise order."""
        best = self.positive_roots[-1]
        for r in self.positive_roots:
            if all(a >= b for a, b in zip(r, best)):
                best = r
        assert all(
            all(a >= b for a, b in zip(best, r)) for r in self.positive_roots
        ), "highest root is not coordinatewise maximal"
        return best

    def long_positive_roots(self):
        return [r for r in self.positive_roots if self.is_long(r)]

    def short_positive_roots(self):
        return [r for r in self.positive_roots if not self.is_long(r)]

    def coroot(self, r):
        """r^vee = 2 r / (r,r) expressed in the simple-coroot basis.

        Returns rational coefficients c_i with r^vee = sum c_i alpha_i^vee.
        """
        rr = self.inner(r, r)
        return tuple(
            Fraction(2 * c * self.sym_form[i][i], 2) / rr for i, c in enumerate(r)
        )

    def root_from_epsilon(self, eps):
        """Simple-root coordinates of a vector given in the ambient
        realization, or None if it is not in the root lattice span."""
        from . import linalg

        dim = len(self._simple_eps[0])
        rows = [[self._simple_eps[j][i] for j in range(self.rank)] for i in range(dim)]
        x = linalg.solve(rows, [Fraction(v) for v in eps])
        if x is None:
            return None
        return tuple(x)

    # -- E-type end-node geometry ---------------------------------------

    def graph_ends(self):
        """Nodes of degree 1 in the Dynkin graph (0-based indices)."""
        n = self.rank
        deg = [0] * n
        for i in range(n):
            for j in range(n):
                if i != j and self.cartan_matrix[i][j] != 0:
                    deg[i] += 1
        return [i for i in range(n) if deg[i] == 1]

    def simple_root_sum_facts(self):
        """For E types: facts about sigma = sum of all simple roots.

        Reports whether sigma and sigma minus each end-node simple root are
        roots, and which pairs of the latter are orthogonal.
        """
        if self.cartan_type.family != "E":
            raise ValueError("only defined for E types")
        n = self.rank
        sigma = tuple(1 for _ in range(n))
        ends = self.graph_ends()
        assert len(ends) == 3
        sigma_minus = {}
        for e in ends:
            m = list(sigma)
            m[e] -= 1
            sigma_minus[e] = tuple(m)
        ortho = {}
        for i, a in enumerate(ends):
            for b in ends[i + 1 :]:
                ortho[(a, b)] = self.inner(sigma_minus[a], sigma_minus[b]) == 0
        return {
            "sigma": sigma,
            "sigma_is_root": self.is_root(sigma),
            "ends": ends,
            "sigma_minus_end_is_root": {
                e: self.is_root(sigma_minus[e]) for e in ends
            },
            "sigma_minus_end": sigma_minus,
            "orthogonal_pairs": ortho,
        }


_CACHE = {}


def build_root_system(t):
    """Construct (and cache) the root system of a valid Cartan type."""
    if isinstance(t, str):
        t = CartanType.parse(t)
    if t not in _CACHE:
        _CACHE[t] = RootSystem(t)
    return _CACHE[t]
