"""Gradings by a Cartan element, sl2-triples, and the orbit-level
decision procedures (centralizer location, extended-form kernel,
pairing criterion, type-by-type exclusion tests).
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .chevalley import LieElement, build_algebra
from .rootsys import CartanType


class NoTripleError(Exception):
    """Raised when a degree-2 element cannot be completed to an sl2-triple
    with the grading's defining Cartan element."""


@dataclass(frozen=True)
class WeightedDiagram:
    cartan_type: CartanType
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != self.cartan_type.rank:
            raise ValueError("label count does not match rank")
        if not all(v in (0, 1, 2) for v in self.labels):
            raise ValueError(f"labels must lie in {{0,1,2}}: {self.labels}")


@dataclass(frozen=True)
class Sl2Triple:
    n0: LieElement
    h: LieElement
    n1: LieElement


class Grading:
    """Eigenspace decomposition of the algebra under a Cartan element H
    with alpha_i(H) equal to the diagram labels."""

    def __init__(self, alg, diagram):
        if diagram.cartan_type != alg.rs.cartan_type:
            raise ValueError("diagram type does not match algebra")
        self.alg = alg
        self.diagram = diagram
        labels = diagram.labels
        # H = sum x_j H_j with alpha_i(H) = labels_i
        C = alg.rs.cartan_matrix
        n = alg.rank
        x = linalg.solve(
            [[Fraction(C[i][j]) for j in range(n)] for i in range(n)],
            [Fraction(v) for v in labels],
        )
        assert x is not None
        self.h_coeffs = x
        self.H = alg.cartan_element(x)
        self.degree = {}
        for lbl in alg.basis_labels:
            if isinstance(lbl[0], str):  # ('H', i)
                self.degree[lbl] = 0
            else:
                self.degree[lbl] = sum(c * v for c, v in zip(lbl, labels))
        self.pieces = {}
        for lbl, d in self.degree.items():
            self.pieces.setdefault(d, []).append(lbl)

    def piece(self, i):
        return self.pieces.get(i, [])

    def piece_dim(self, i):
        return len(self.pieces.get(i, [])) if i != 0 else len(self.pieces.get(0, []))

    def labels_with(self, pred):
        return [lbl for lbl, d in self.degree.items() if pred(d)]

    @property
    def p_labels(self):
        return self.labels_with(lambda d: d >= 0)

    @property
    def n_labels(self):
        return self.labels_with(lambda d: d >= 2)

    @property
    def n_perp_labels(self):
        return self.labels_with(lambda d: d >= -1)

    def degree_of(self, x):
        """Degree of a homogeneous element, or None for 0 / mixed."""
        degs = {self.degree[lbl] for lbl in x.coeffs}
        return degs.pop() if len(degs) == 1 else None

    def contains(self, x, label_set):
        return all(lbl in label_set for lbl in x.coeffs)

    def in_n(self, x):
        return all(self.degree[lbl] >= 2 for lbl in x.coeffs)

    def in_n_perp(self, x):
        return all(self.degree[lbl] >= -1 for lbl in x.coeffs)


def grading_from_diagram(alg, wd):
    return Grading(alg, wd)


def sl2_complete(alg, grading, n0):
    """Complete a nonzero degree-2 element to a triple (N0, H, N1) with
    [H,N0]=2N0, [H,N1]=-2N1, [N1,N0]=H; raises NoTripleError when the
    linear system has no solution."""
    if n0.is_zero():
        raise ValueError("N0 must be nonzero")
    if not all(grading.degree[lbl] == 2 for lbl in n0.coeffs):
        raise ValueError("N0 must be homogeneous of degree 2")
    neg = [lbl for lbl in alg.basis_labels if grading.degree[lbl] == -2]
    if not neg:
        raise NoTripleError("no degree -2 subspace")
    cols = []
    for lbl in neg:
        img = alg.bracket(LieElement(alg, {lbl: 1}), n0)
        cols.append(img.to_vector())
    rows = [[cols[j][i] for j in range(len(neg))] for i in range(alg.dim)]
    sol = linalg.solve(rows, grading.H.to_vector())
    if sol is None:
        raise NoTripleError("[N1, N0] = H has no solution in degree -2")
    n1 = LieElement(alg, {lbl: c for lbl, c in zip(neg, sol)})
    h = grading.H
    assert alg.bracket(h, n0) == n0.scale(2)
    assert alg.bracket(h, n1) == n1.scale(-2)
    assert alg.bracket(n1, n0) == h
    return Sl2Triple(n0, h, n1)


def generic_degree_two(alg, grading, max_attempts=8):
    """Deterministic generic element of the degree-2 piece: the plain basis
    sum first, then small integer coefficient perturbations."""
    g2 = [lbl for lbl in alg.basis_labels if grading.degree[lbl] == 2]
    if not g2:
        raise ValueError("degree-2 piece is zero")
    for attempt in range(max_attempts):
        coeffs = {lbl: (j + 1) ** attempt for j, lbl in enumerate(g2)}
        n0 = LieElement(alg, coeffs)
        try:
            sl2_complete(alg, grading, n0)
            return n0
        except NoTripleError:
            continue
    raise NoTripleError(
        f"no generic sl2 representative found in {max_attempts} attempts"
    )


@dataclass(frozen=True)
class NilpotencyReport:
    bracket_eigen_solvable: bool   # some H solves [H, N] = N
    centralizer_orthogonal: bool   # Killing form kills (z_N, N)
    ad_nilpotent: bool


def nilpotency_report(alg, n):
    """Evaluate the three equivalent nilpotency conditions on a nonzero
    element and assert that the verdicts agree."""
    if n.is_zero():
        raise ValueError("zero element")
    vec = n.to_vector()
    cols = alg.ad_columns(n)
    rows = [[Fraction(0)] * alg.dim for _ in range(alg.dim)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows[i][j] = v
    # [H, N] = N  <=>  ad(N) H = -N
    sol = linalg.solve(rows, [-v for v in vec])
    iv = sol is not None
    z = alg.centralizer(n)
    v = all(alg.killing(zi, n) == 0 for zi in z)
    nil = alg.is_ad_nilpotent(n)
    assert iv == v == nil, "nilpotency criteria disagree"
    return NilpotencyReport(iv, v, nil)


def centralizer_in_n_perp(alg, grading, n):
    """True iff every centralizer vector of N lies in the span of degrees
    >= -1; a necessary condition for the orbit-closure normalization to be
    smooth above N."""
    if n.is_zero():
        raise ValueError("N must be nonzero")
    if not grading.in_n(n):
        raise ValueError("N must lie in the degree >= 2 part")
    return all(grading.in_n_perp(z) for z in alg.centralizer(n))


def omega_kernel_dim(alg, grading, n):
    """Kernel dimension of the extended Kostant-Kirillov 2-form at (1, N):
    dim {X in n_perp : [N, X] in n} minus dim p."""
    if not n.is_zero() and not grading.in_n(n):
        raise ValueError("N must lie in the degree >= 2 part")
    perp = grading.n_perp_labels
    low = [lbl for lbl in alg.basis_labels if grading.degree[lbl] < 2]
    low_index = {lbl: i for i, lbl in enumerate(low)}
    rows = [[Fraction(0)] * len(perp) for _ in range(len(low))]
    for j, lbl in enumerate(perp):
        img = alg.bracket(n, LieElement(alg, {lbl: 1}))
        for k, v in img.coeffs.items():
            if k in low_index:
                rows[low_index[k]][j] = v
    sol_dim = len(perp) - linalg.rank(rows) if rows else len(perp)
    result = sol_dim - len(grading.p_labels)
    assert result >= 0
    return result


@dataclass(frozen=True)
class PairingVerdict:
    status: str                    # 'holds' | 'fails' | 'probabilistic_holds'
    witness: tuple = None          # (N coeffs, Q coeffs) when status == 'fails'
    samples: int = 0
    exact: bool = True


def _bracket_kernel(alg, g2, gm2, n_coeffs):
    """Kernel of Q -> [N, Q] restricted to the degree -2 piece."""
    n = LieElement(alg, dict(n_coeffs))
    cols = []
    for lbl in gm2:
        img = alg.bracket(n, LieElement(alg, {lbl: 1}))
        cols.append(img.to_vector())
    rows = [[cols[j][i] for j in range(len(gm2))] for i in range(alg.dim)]
    return linalg.kernel_basis(rows)


def pairing_criterion(alg, grading, seed=0, samples=1000):
    """Decide whether [N, Q] != 0 for all nonzero N of degree 2 and Q of
    degree -2.  Exact when the degree-2 piece is a line; otherwise a
    deterministic witness search followed by seeded exact-rational
    sampling."""
    g2 = [lbl for lbl in alg.basis_labels if grading.degree[lbl] == 2]
    gm2 = [lbl for lbl in alg.basis_labels if grading.degree[lbl] == -2]
    if not g2 or not gm2:
        return PairingVerdict("holds")

    def check(coeff_sets):
        for coeffs in coeff_sets:
            ker = _bracket_kernel(alg, g2, gm2, coeffs)
            if ker:
                q = {lbl: c for lbl, c in zip(gm2, ker[0]) if c}
                return PairingVerdict("fails", witness=(dict(coeffs), q))
        return None

    if len(g2) == 1:
        bad = check([{g2[0]: 1}])
        return bad if bad else PairingVerdict("holds")

    # witness search over small integer combinations
    candidates = [{lbl: 1} for lbl in g2]
    for i, a in enumerate(g2):
        for b in g2[i + 1 :]:
            candidates.append({a: 1, b: 1})
            candidates.append({a: 1, b: -1})
            candidates.append({a: 1, b: 2})
            candidates.append({a: 2, b: 1})
    bad = check(candidates)
    if bad:
        return bad
    rng = random.Random(seed)
    for _ in range(samples):
        coeffs = {
            lbl: Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for lbl in g2
        }
        if all(c == 0 for c in coeffs.values()):
            continue
        ker = _bracket_kernel(alg, g2, gm2, coeffs)
        if ker:
            q = {lbl: c for lbl, c in zip(gm2, ker[0]) if c}
            return PairingVerdict("fails", witness=(coeffs, q))
    return PairingVerdict(
        "probabilistic_holds", samples=samples, exact=False
    )


@dataclass(frozen=True)
class ExclusionVerdict:
    status: str          # 'excluded' | 'not_excluded' | 'degree_two_case'
    detail: dict = field(default_factory=dict)


def e_type_exclusion(alg, wd):
    """Exclusion test for E-type diagrams built from the sum of the simple
    roots and the three end nodes of the graph."""
    rs = alg.rs
    if rs.cartan_type.family != "E":
        raise ValueError("E-type algebras only")
    if wd.cartan_type != rs.cartan_type:
        raise ValueError("diagram type mismatch")
    grading = Grading(alg, wd)
    labels = wd.labels
    facts = rs.simple_root_sum_facts()
    ends = facts["ends"]
    s = sum(labels)
    m = max(labels[e] for e in ends)
    # pick an orthogonal pair among the sigma - end roots; gamma is the rest
    pair = next(p for p, ok in facts["orthogonal_pairs"].items() if ok)
    a, b = pair
    (g,) = [e for e in ends if e not in pair]
    sma = facts["sigma_minus_end"][a]
    smb = facts["sigma_minus_end"][b]
    gamma_minus_sigma = tuple(-c for c in facts["sigma_minus_end"][g])
    if s - m >= 2:
        n = alg.root_vector(sma) + alg.root_vector(smb)
        witness = alg.root_vector(gamma_minus_sigma)
        assert alg.bracket(n, witness).is_zero()
        assert grading.in_n(n)
        assert not grading.in_n_perp(witness)
        return ExclusionVerdict(
            "excluded",
            {
                "s": s,
                "m": m,
                "centralizing_witness": dict(witness.coeffs),
                "n_element": dict(n.coeffs),
            },
        )
    if s == 2:
        for (pa, pb), ok in facts["orthogonal_pairs"].items():
            if ok and labels[pa] == 0 and labels[pb] == 0:
                n = alg.root_vector(facts["sigma_minus_end"][pa]) + alg.root_vector(
                    facts["sigma_minus_end"][pb]
                )
                assert all(grading.degree[lbl] == 2 for lbl in n.coeffs)
                return ExclusionVerdict("degree_two_case", {"s": s, "m": m})
    return ExclusionVerdict("not_excluded", {"s": s, "m": m})


F4_ALPHA = (1, 1, 1, 0)
F4_BETA = (1, 2, 2, 2)
F4_GAMMA = (1, 2, 4, 2)


def f4_exclusion(alg, wd):
    """Exclusion test for F4 diagrams via the vanishing bracket of
    X_alpha + X_beta with X_{-gamma} for a fixed root triple."""
    rs = alg.rs
    if str(rs.cartan_type) != "F4":
        raise ValueError("F4 algebras only")
    if wd.cartan_type != rs.cartan_type:
        raise ValueError("diagram type mismatch")
    l1, l2, l3, l4 = wd.labels
    if l1 + l2 + l3 < 2:
        return ExclusionVerdict("not_excluded", {"l1+l2+l3": l1 + l2 + l3})
    grading = Grading(alg, wd)
    n = alg.root_vector(F4_ALPHA) + alg.root_vector(F4_BETA)
    witness = alg.root_vector(tuple(-c for c in F4_GAMMA))
    assert alg.bracket(n, witness).is_zero()
    assert grading.in_n(n)
    assert not grading.in_n_perp(witness)
    return ExclusionVerdict(
        "excluded",
        {
            "l1+l2+l3": l1 + l2 + l3,
            "centralizing_witness": dict(witness.coeffs),
            "n_element": dict(n.coeffs),
        },
    )


def diagram_of_root_vector_orbit(alg, r):
    """Weighted diagram of the orbit of the root vector X_r: conjugate the
    coroot of r into the dominant chamber by simple reflections and read
    off the simple-root values."""
    rs = alg.rs
    r = tuple(r)
    if not rs.is_root(r):
        raise ValueError(f"{r} is not a root")
    C = rs.cartan_matrix
    n = rs.rank
    x = list(rs.coroot(r))  # H in the simple-coroot basis

    def labels(xv):
        return [sum(xv[j] * C[i][j] for j in range(n)) for i in range(n)]

    lab = labels(x)
    guard = 0
    while any(v < 0 for v in lab):
        i = next(i for i, v in enumerate(lab) if v < 0)
        x[i] -= lab[i]
        lab = labels(x)
        guard += 1
        assert guard < 10_000
    ints = []
    for v in lab:
        assert Fraction(v).denominator == 1
        ints.append(int(v))
    return WeightedDiagram(rs.cartan_type, tuple(ints))


def minimal_orbit_diagram(alg):
    return diagram_of_root_vector_orbit(alg, alg.rs.highest_root())
