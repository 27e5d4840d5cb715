import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import charpoly_signature, determinant_from_bracket, sturm_signature
from pinchband.diagram import (
    UNKNOT,
    add_curl,
    edge_side_faces,
    faces,
    mirror,
    random_diagram,
    table_diagram,
    torus_2n_diagram,
)
from pinchband.errors import NonSymmetricInput
from pinchband.goeritz import (
    checkerboard,
    euler_from_signatures,
    goeritz_matrix,
    integer_determinant,
    knot_signature,
    matrix_signature,
    sigma_from_euler,
)
from pinchband.identify import kauffman_bracket, simplify


@pytest.mark.parametrize(
    "m,sig",
    [([[2]], 1), ([[1, 0], [0, -1]], 0), ([[0, 1], [1, 0]], 0), ([], 0), ([[0]], 0),
     ([[0, 0], [0, 0]], 0), ([[0, 2, 1], [2, 0, 3], [1, 3, 0]], -1)],
)
def test_matrix_signature_examples(m, sig):
    assert matrix_signature(m) == sig
    assert charpoly_signature(m) == sig


def test_non_symmetric_rejected():
    with pytest.raises(NonSymmetricInput):
        matrix_signature([[1, 2], [3, 4]])
    with pytest.raises(NonSymmetricInput):
        matrix_signature([[1, 2]])


def test_empty_determinant_is_one():
    assert integer_determinant([]) == 1
    assert integer_determinant([[3]]) == 3
    assert integer_determinant([[2, 1], [1, 2]]) == 3


def _sym(rng, n, lo=-5, hi=5):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    return m


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 6), st.randoms(use_true_random=False))
def test_matrix_signature_matches_sturm(n, rng):
    m = _sym(rng, n)
    assert matrix_signature(m) == sturm_signature(m)


def test_determinant_matches_sympy():
    import sympy

    rng = random.Random(3)
    for _ in range(100):
        m = _sym(rng, rng.randint(1, 7))
        assert integer_determinant(m) == sympy.Matrix(m).det()


def test_low_rank_signature():
    # v v^T has one positive eigenvalue, the rest zero
    v = [1, -2, 3, 0, 1]
    m = [[a * b for b in v] for a in v]
    assert matrix_signature(m) == 1
    assert matrix_signature([[-x for x in row] for row in m]) == -1


def test_unknot():
    rep = knot_signature(UNKNOT)
    assert (rep.sigma, rep.determinant) == (0, 1)
    c1, c2 = checkerboard(UNKNOT)
    assert len(c1.white) == len(c1.black) == 1
    assert c1.shaded == tuple(not s for s in c2.shaded)
    g = goeritz_matrix(UNKNOT, c1)
    assert g.dim == 0 and g.correction == 0 and g.determinant == 1


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11])
def test_torus_signature_and_determinant(n):
    rep = knot_signature(torus_2n_diagram(n))
    assert rep.sigma == -(n - 1)
    assert rep.determinant == n


def test_trefoil_face_split():
    c1, c2 = checkerboard(torus_2n_diagram(3))
    assert sorted([len(c1.white), len(c2.white)]) == [2, 3]
    for c in (c1, c2):
        g = goeritz_matrix(torus_2n_diagram(3), c)
        assert abs(g.determinant) == 3
        assert g.dim == len(c.white) - 1


@pytest.mark.parametrize("name,sigma,det", [
    ("unknot", 0, 1), ("T(2,3)", -2, 3), ("4_1", 0, 5), ("T(2,5)", -4, 5),
    ("6_1", 0, 9), ("6_2", None, 11), ("6_3", 0, 13), ("T(2,7)", -6, 7),
    ("T(2,9)", -8, 9), ("T(2,11)", -10, 11),
])
def test_table_values(name, sigma, det):
    rep = knot_signature(table_diagram(name))
    assert rep.determinant == det
    if sigma is not None:
        assert rep.sigma == sigma
    assert abs(rep.sigma) in {0, 2, 4}.union({abs(sigma or 0)})


def test_5_2_determinant():
    assert knot_signature(table_diagram("5_2")).determinant == 7
    assert abs(knot_signature(table_diagram("5_2")).sigma) == 2


def _proper(d, coloring):
    fs = edge_side_faces(d)
    n_edges = max(1, d.edge_count)
    return all(coloring.shaded[fs[(e, "L")]] != coloring.shaded[fs[(e, "R")]] for e in range(1, n_edges + 1))


def test_colorings_proper_and_complementary(corpus, random_diagrams):
    for d in [d for _, d in corpus] + random_diagrams:
        c1, c2 = checkerboard(d)
        assert _proper(d, c1) and _proper(d, c2)
        assert c1.shaded == tuple(not s for s in c2.shaded)
        assert len(c1.shaded) == len(faces(d))


def test_first_coloring_edge_one_left_is_white():
    d = table_diagram("6_1")
    c1, _ = checkerboard(d)
    assert not c1.shaded[edge_side_faces(d)[(1, "L")]]


def test_coloring_independence(corpus, random_diagrams):
    for d in [d for _, d in corpus] + random_diagrams:
        vals = []
        for c in checkerboard(d):
            g = goeritz_matrix(d, c)
            vals.append((g.signature - g.correction, abs(g.determinant)))
        assert vals[0] == vals[1]
        rep = knot_signature(d)
        assert vals[0] == (rep.sigma, rep.determinant)


def test_mirror_antisymmetry(corpus, random_diagrams):
    for d in [d for _, d in corpus] + random_diagrams:
        a, b = knot_signature(d), knot_signature(mirror(d))
        assert b.sigma == -a.sigma
        assert b.determinant == a.determinant


def test_goeritz_parity(corpus, random_diagrams):
    for d in [d for _, d in corpus] + random_diagrams:
        for c in checkerboard(d):
            g = goeritz_matrix(d, c)
            assert g.determinant != 0
            assert (g.signature - g.dim) % 2 == 0
            assert g.matrix == tuple(tuple(r) for r in map(list, zip(*g.matrix)))


def test_determinant_matches_jones_value(corpus, random_diagrams):
    for d in [d for _, d in corpus] + random_diagrams[:80]:
        assert knot_signature(d).determinant == determinant_from_bracket(kauffman_bracket(d))


def test_signature_mod_four_matches_determinant(corpus, random_diagrams):
    # for knots: sigma = 0 mod 4 exactly when det = 1 mod 4
    for d in [d for _, d in corpus] + random_diagrams:
        rep = knot_signature(d)
        assert rep.sigma % 2 == 0
        assert (rep.sigma % 4 == 0) == (rep.determinant % 4 == 1)


def test_reidemeister_invariance(corpus):
    rng = random.Random(11)
    for _, d in corpus:
        rep = knot_signature(d)
        assert knot_signature(simplify(d)).sigma == rep.sigma
        curled = d
        for _ in range(3):
            label = rng.randint(1, max(1, curled.edge_count))
            curled = add_curl(curled, label, rng.choice((1, -1)), rng.choice("LR"))
        again = knot_signature(curled)
        assert (again.sigma, again.determinant) == (rep.sigma, rep.determinant)


def test_euler_conversions():
    assert euler_from_signatures(-4, -1) == -6
    assert euler_from_signatures(-8, -1) == -14
    assert euler_from_signatures(0, 0) == 0
    assert euler_from_signatures(-4, 1) == -10
    assert sigma_from_euler(-4, -6) == -1
    assert sigma_from_euler(0, 2) == -1
    assert sigma_from_euler(-4, -5) == Fraction(-3, 2)
    assert sigma_from_euler(-4, -5).denominator != 1


def test_report_dict():
    d = knot_signature(torus_2n_diagram(3)).as_dict()
    assert d["sigma"] == -2 and d["determinant"] == 3
    assert len(d["breakdown"]) == 2
