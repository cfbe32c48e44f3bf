"""Exact linear algebra: kernels, rank, solving and the LDL psd check."""

from hypothesis import given

from conftest import q, qi_matrices, qi_vectors
from schurmann import I, ONE, QMatrix, QVector, ZERO, kernel_basis, psd_check, rank, solve
from schurmann.linalg import gram_matrix, inner_product, project_onto_span


def test_kernel_of_rank_one_matrix():
    m = QMatrix([[ONE, q("2"), q("3")], [q("2"), q("4"), q("6")]])
    basis = kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert m.apply(v).is_zero()
    assert rank(m) == 1


def test_solve_frozen_example():
    m = QMatrix([[ONE, I], [ZERO, q("2")]])
    b = QVector((q(("0", "2")), q("4")))
    x = solve(m, b)
    assert x is not None
    assert m.apply(x) == b
    assert x == QVector((ZERO, q("2")))


def test_solve_inconsistent_returns_none():
    m = QMatrix([[ONE, ONE], [ONE, ONE]])
    assert solve(m, QVector((ONE, -ONE))) is None


def test_psd_frozen_examples():
    assert psd_check(QMatrix([[q("2"), ONE], [ONE, q("2")]]))
    assert not psd_check(QMatrix([[ONE, q("2")], [q("2"), ONE]]))
    assert psd_check(QMatrix.zero(3, 3))
    # hermitian with complex off-diagonal, eigenvalues 0 and 2
    assert psd_check(QMatrix([[ONE, I], [-I, ONE]]))
    assert not psd_check(QMatrix([[ONE, q(("0", "2"))], [q(("0", "-2")), ONE]]))


@given(qi_matrices(3, 2))
def test_gram_always_psd(m):
    assert psd_check(m.adjoint() @ m)


@given(qi_matrices(2, 4))
def test_rank_nullity(m):
    basis = kernel_basis(m)
    assert rank(m) + len(basis) == m.cols
    for v in basis:
        assert m.apply(v).is_zero()


@given(qi_matrices(3, 3), qi_vectors(3))
def test_solve_agrees_with_apply(m, x):
    b = m.apply(x)
    y = solve(m, b)
    assert y is not None
    assert m.apply(y) == b


@given(qi_matrices(2, 3), qi_matrices(3, 2), qi_matrices(2, 2))
def test_matmul_associative_and_adjoint(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert (a @ b).adjoint() == b.adjoint() @ a.adjoint()
    assert a.adjoint() == a.conj().transpose()
    assert a.transpose().transpose() == a


@given(qi_vectors(3), qi_vectors(3))
def test_inner_product_hermitian(x, y):
    assert inner_product(x, y) == inner_product(y, x).conj()
    n = inner_product(x, x)
    assert n.is_real()
    assert n.re >= 0


def test_gram_and_projection():
    e1 = QVector((ONE, ZERO))
    v = QVector((ONE, ONE))
    g = gram_matrix([e1, v])
    assert g == QMatrix([[ONE, ONE], [ONE, q("2")]])
    p = project_onto_span([e1], v)
    assert p == QVector((ONE, ZERO))
