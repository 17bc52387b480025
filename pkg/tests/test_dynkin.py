from fractions import Fraction

import pytest

from nilorb import dynkin
from nilorb.chevalley import build_algebra
from nilorb.dynkin import (
    NoTripleError,
    WeightedDiagram,
    diagram_of_root_vector_orbit,
    e_type_exclusion,
    f4_exclusion,
    generic_degree_two,
    grading_from_diagram,
    minimal_orbit_diagram,
    nilpotency_report,
    omega_kernel_dim,
    pairing_criterion,
    sl2_complete,
)
from nilorb.rootsys import CartanType

F = Fraction


def _wd(name, labels):
    return WeightedDiagram(CartanType.parse(name), tuple(labels))


def test_diagram_validation():
    with pytest.raises(ValueError):
        _wd("G2", (3, 0))
    with pytest.raises(ValueError):
        _wd("G2", (1, 0, 0))


def test_grading_pieces_partition_algebra():
    for name, labels in [("G2", (0, 1)), ("C3", (1, 0, 0)), ("F4", (0, 0, 0, 1))]:
        alg = build_algebra(name)
        grading = grading_from_diagram(alg, _wd(name, labels))
        assert sum(len(v) for v in grading.pieces.values()) == alg.dim
        # bracket compatibility on every basis pair
        for a in alg.basis_labels:
            for b in alg.basis_labels:
                br = alg.bracket(alg.element({a: F(1)}), alg.element({b: F(1)}))
                da, db = grading.degree[a], grading.degree[b]
                assert all(grading.degree[x] == da + db for x in br.coeffs)


def test_minimal_diagrams():
    expected = {
        "G2": (0, 1),
        "F4": (1, 0, 0, 0),
        "C2": (1, 0),
        "B3": (0, 1, 0),
        "A3": (1, 0, 1),
        "E6": (0, 1, 0, 0, 0, 0),
    }
    for name, labels in expected.items():
        alg = build_algebra(name)
        assert minimal_orbit_diagram(alg).labels == labels


def test_root_vector_orbit_diagrams_g2():
    alg = build_algebra("G2")
    long_wd = diagram_of_root_vector_orbit(alg, alg.rs.highest_root())
    short = alg.rs.short_positive_roots()[0]
    short_wd = diagram_of_root_vector_orbit(alg, short)
    assert long_wd.labels == (0, 1)
    assert short_wd.labels == (1, 0)


def test_sl2_completion_on_g2_orbits():
    alg = build_algebra("G2")
    for labels in [(0, 1), (1, 0), (0, 2), (2, 2)]:
        grading = grading_from_diagram(alg, _wd("G2", labels))
        n0 = generic_degree_two(alg, grading)
        triple = sl2_complete(alg, grading, n0)
        h = grading.H
        assert alg.bracket(h, triple.n0) == 2 * triple.n0
        assert alg.bracket(h, triple.n1) == (-2) * triple.n1
        assert alg.bracket(triple.n1, triple.n0) == h


def test_no_triple_for_fake_g2_diagram():
    alg = build_algebra("G2")
    grading = grading_from_diagram(alg, _wd("G2", (2, 0)))
    with pytest.raises(NoTripleError):
        generic_degree_two(alg, grading)


def test_nilpotency_report_polarity():
    alg = build_algebra("B2")
    x = alg.root_vector(alg.rs.highest_root())
    rep = nilpotency_report(alg, x)
    assert rep.bracket_eigen_solvable and rep.centralizer_orthogonal
    assert rep.ad_nilpotent
    h = alg.h(0) + alg.h(1)
    rep = nilpotency_report(alg, h)
    assert not (rep.bracket_eigen_solvable or rep.centralizer_orthogonal
                or rep.ad_nilpotent)
    mixed = x + alg.h(0)
    rep = nilpotency_report(alg, mixed)
    assert not rep.ad_nilpotent


def test_pairing_criterion_g2():
    alg = build_algebra("G2")
    verdicts = {}
    for labels in [(0, 1), (1, 0), (0, 2), (2, 2)]:
        grading = grading_from_diagram(alg, _wd("G2", labels))
        verdicts[labels] = pairing_criterion(alg, grading, seed=0)
    assert verdicts[(0, 1)].status == "holds"
    assert verdicts[(1, 0)].status == "holds"
    assert verdicts[(0, 2)].status == "fails"
    assert verdicts[(0, 2)].witness is not None
    assert verdicts[(2, 2)].status == "fails"


def test_pairing_witness_is_genuine():
    alg = build_algebra("G2")
    grading = grading_from_diagram(alg, _wd("G2", (0, 2)))
    v = pairing_criterion(alg, grading, seed=0)
    n_coeffs, q_coeffs = v.witness
    n = alg.element({lbl: F(c) for lbl, c in n_coeffs.items()})
    q = alg.element({lbl: F(c) for lbl, c in q_coeffs.items()})
    assert not n.is_zero() and not q.is_zero()
    assert grading.degree_of(n) == 2 and grading.degree_of(q) == -2
    assert alg.bracket(n, q).is_zero()


def test_f4_exclusion_bracket_and_verdicts():
    alg = build_algebra("F4")
    a = alg.root_vector(dynkin.F4_ALPHA)
    b = alg.root_vector(dynkin.F4_BETA)
    g = alg.root_vector(tuple(-c for c in dynkin.F4_GAMMA))
    assert alg.bracket(a + b, g).is_zero()
    assert f4_exclusion(alg, _wd("F4", (1, 1, 0, 0))).status == "excluded"
    assert f4_exclusion(alg, _wd("F4", (0, 0, 0, 1))).status != "excluded"


def test_f4_roots_have_expected_lengths():
    rs = build_algebra("F4").rs
    # alpha short + beta long, orthogonal; gamma long
    assert rs.inner(dynkin.F4_ALPHA, dynkin.F4_BETA) == 0
    assert not rs.is_long(dynkin.F4_ALPHA)
    assert rs.is_long(dynkin.F4_BETA)


def test_e_type_exclusion_verdicts():
    alg = build_algebra("E6")
    v = e_type_exclusion(alg, _wd("E6", (1, 1, 1, 1, 1, 1)))
    assert v.status == "excluded"
    v = e_type_exclusion(alg, minimal_orbit_diagram(alg))
    assert v.status == "not_excluded"
    v = e_type_exclusion(alg, _wd("E6", (0, 0, 1, 0, 1, 0)))
    assert v.status in ("excluded", "degree_two_case")


def test_e8_displayed_diagram_facts():
    alg = build_algebra("E8")
    rs = alg.rs
    lam = rs.root_from_epsilon([F(1, 2)] * 8)
    mu = rs.root_from_epsilon([0, 0, 0, 0, 0, 0, -1, 1])
    assert rs.is_root(lam) and rs.is_root(mu)
    grading = grading_from_diagram(alg, _wd("E8", (1, 0, 0, 0, 0, 0, 0, 1)))
    assert grading.degree[lam] == 2
    assert grading.degree[mu] == 2
    assert rs.inner(lam, mu) == 0


def test_omega_kernel_zero_at_generic_points():
    for name, labels in [("G2", (0, 1)), ("G2", (1, 0)), ("C2", (1, 0)),
                         ("B3", (0, 1, 0))]:
        alg = build_algebra(name)
        grading = grading_from_diagram(alg, _wd(name, labels))
        n = generic_degree_two(alg, grading)
        assert omega_kernel_dim(alg, grading, n) == 0


def test_centralizer_in_n_perp_minimal_orbits():
    for name in ("G2", "C3", "B3"):
        alg = build_algebra(name)
        grading = grading_from_diagram(alg, minimal_orbit_diagram(alg))
        x = alg.root_vector(alg.rs.highest_root())
        assert dynkin.centralizer_in_n_perp(alg, grading, x)


def test_round_trip_minimal_diagram_rank_le_4():
    from nilorb import partitions
    for fam, l in [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("B", 4),
                   ("C", 2), ("C", 3), ("C", 4), ("D", 4)]:
        alg = build_algebra(f"{fam}{l}")
        computed = minimal_orbit_diagram(alg)
        curated = partitions.weighted_diagram(partitions.minimal_orbit(fam, l))
        assert computed.labels == curated.labels
