"""Property tests: identities that must hold for every input, not just catalogued ones."""

from fractions import Fraction as F
from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from nilkahler import algebra as alg
from nilkahler import curvature as cv
from nilkahler import forms as fm
from nilkahler import linalg, operators
from nilkahler.forms import KForm, ce_differential, interior_product, wedge
from nilkahler.hitchin import hitchin_K, hitchin_operator
from nilkahler.operators import Endomorphism, MetricTensor
from nilkahler.structures import nijenhuis_value

NAMES = ["g1", "g1_magnin", "g2", "g2_renamed", "g3", "g3_renamed"]
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero = rationals.filter(lambda x: x != 0)


def kforms(n, k):
    keys = list(combinations(range(1, n + 1), k))
    return st.dictionaries(st.sampled_from(keys), rationals, max_size=6).map(lambda t: KForm(n, k, t))


def vectors(n):
    return st.lists(rationals, min_size=n, max_size=n).map(tuple)


def matrices(n):
    return st.lists(vectors(n), min_size=n, max_size=n).map(lambda rows: [list(r) for r in rows])


algebras = st.sampled_from(NAMES).map(alg.catalog)
degrees = st.integers(min_value=0, max_value=4)


@given(algebras, st.data())
def test_d_squared_vanishes(g, data):
    a = data.draw(kforms(6, data.draw(st.integers(0, 4))))
    assert ce_differential(g, ce_differential(g, a)).is_zero()


@given(algebras, st.data())
def test_leibniz_rule(g, data):
    k = data.draw(st.integers(0, 3))
    a, b = data.draw(kforms(6, k)), data.draw(kforms(6, 2))
    lhs = ce_differential(g, wedge(a, b))
    rhs = wedge(ce_differential(g, a), b) + wedge(a, ce_differential(g, b)) * (-1) ** k
    assert lhs == rhs


@given(st.data())
def test_graded_commutativity(data):
    p, q = data.draw(st.integers(0, 3)), data.draw(st.integers(0, 3))
    a, b = data.draw(kforms(6, p)), data.draw(kforms(6, q))
    assert wedge(a, b) == wedge(b, a) * (-1) ** (p * q)


@given(vectors(6), st.data())
def test_interior_product_is_an_antiderivation(X, data):
    k = data.draw(st.integers(1, 3))
    a, b = data.draw(kforms(6, k)), data.draw(kforms(6, 2))
    lhs = interior_product(X, wedge(a, b))
    rhs = wedge(interior_product(X, a), b) + wedge(a, interior_product(X, b)) * (-1) ** k
    assert lhs == rhs
    if k >= 2:
        assert interior_product(X, interior_product(X, a)).is_zero()


@given(kforms(6, 2), vectors(6), vectors(6))
def test_two_form_evaluation_matches_matrix(om, X, Y):
    W = om.matrix()
    assert om(X, Y) == sum(X[i] * W[i][j] * Y[j] for i in range(6) for j in range(6))


@given(kforms(6, 3), nonzero, nonzero)
@settings(max_examples=25)
def test_hitchin_scaling(Om, t, s):
    mu = KForm.volume(6)
    K = hitchin_K(Om, mu)
    assert hitchin_K(Om * t, mu) == K * (t * t)
    assert hitchin_K(Om, mu * s) == K * (1 / s)
    res = hitchin_operator(Om, mu)
    assert res.K.trace() == 0
    assert hitchin_operator(Om * t, mu).lam == res.lam * t ** 4


@given(algebras, st.data())
@settings(max_examples=25)
def test_nijenhuis_is_antisymmetric_and_bilinear(g, data):
    A = Endomorphism(data.draw(matrices(6)))
    kind = data.draw(st.sampled_from(["complex", "para"]))
    X, Y, Z = data.draw(vectors(6)), data.draw(vectors(6)), data.draw(vectors(6))
    c = data.draw(rationals)
    N = lambda U, V: nijenhuis_value(g, A, U, V, kind)  # noqa: E731
    assert N(X, Y) == tuple(-x for x in N(Y, X))
    XZ = tuple(x + c * z for x, z in zip(X, Z))
    assert N(XZ, Y) == tuple(a + c * b for a, b in zip(N(X, Y), N(Z, Y)))


def invertible(n):
    # unit lower times upper triangular with nonzero pivots
    def build(entries, piv):
        L = [[F(int(i == j)) if j >= i else entries[i * n + j] for j in range(n)] for i in range(n)]
        U = [[piv[i] if i == j else (entries[j * n + i] if j > i else F(0)) for j in range(n)] for i in range(n)]
        return linalg.mat_mul(L, U)
    return st.builds(build, st.lists(rationals, min_size=n * n, max_size=n * n),
                     st.lists(nonzero, min_size=n, max_size=n))


@given(algebras, invertible(6))
@settings(max_examples=25)
def test_basis_change_round_trip(g, M):
    T = alg.BasisChange(tuple(tuple(r) for r in M))
    h = alg.change_basis(g, T)
    assert alg.is_lie_algebra(h) and alg.is_nilpotent(h)
    assert alg.change_basis(h, T.inverse()) == g
    assert [s.dimension for s in alg.lower_central_series(h)] == \
        [s.dimension for s in alg.lower_central_series(g)]


@given(algebras, st.data())
@settings(max_examples=15)
def test_curvature_symmetries(g, data):
    M = data.draw(invertible(6))
    signs = data.draw(st.lists(st.sampled_from([1, -1]), min_size=6, max_size=6))
    # congruent to a diagonal sign matrix, so always nondegenerate
    G = MetricTensor(linalg.mat_mul(linalg.transpose(M), linalg.mat_mul(linalg.diag(signs), M)))
    cd = cv.curvature(g, G)
    assert linalg.is_symmetric(cd.ricci)
    assert cv.bianchi_defect(cd.R, 6) == {}
    assert cv.skew_defect(G, cd.R, 6) == []
    c = data.draw(nonzero)
    scaled = cv.curvature(g, MetricTensor(linalg.mat_scale(c, [list(r) for r in G.rows])))
    assert scaled.ricci == cd.ricci
    assert scaled.scalar == cd.scalar / c


@given(matrices(5))
def test_symmetric_signature_counts_rank(M):
    S = linalg.mat_add(M, linalg.transpose(M))
    p, q = linalg.signature(S)
    assert p + q == linalg.rank(S)


@given(matrices(4), matrices(4))
def test_det_is_multiplicative(A, B):
    assert linalg.det(linalg.mat_mul(A, B)) == linalg.det(A) * linalg.det(B)


@given(st.data())
def test_json_round_trips(data):
    k = data.draw(st.integers(0, 6))
    a = data.draw(kforms(6, k))
    assert fm.loads(fm.dumps(a)) == a
    A = Endomorphism(data.draw(matrices(6)))
    assert operators.loads(operators.dumps(A)) == A
    g = alg.catalog(data.draw(st.sampled_from(NAMES)))
    assert alg.loads(alg.dumps(g)) == g
