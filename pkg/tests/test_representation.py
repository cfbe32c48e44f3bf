"""Finite dimensional *-representations and their eager validation."""

import pytest
from hypothesis import given, strategies as st

from conftest import qi_scalars
from schurmann import (
    Element,
    I,
    ONE,
    QMatrix,
    RelationViolation,
    ZERO,
    counit,
    counit_rep,
    direct_sum_rep,
    evaluate_rep,
    letters,
    representation,
    sign_rep,
)


def test_counit_rep_images(u2):
    rep = counit_rep(u2)
    assert rep.n == 1
    assert rep.image(1, 1) == QMatrix.identity(1)
    assert rep.image(1, 2).is_zero()
    assert rep.image(1, 2, star=True).is_zero()


def test_rep_rejects_wrong_blocks(u2):
    eye = QMatrix.identity(1)
    zero = QMatrix.zero(1, 1)
    # u[1,1] -> 1, u[1,2] -> 1 breaks unitarity row sums
    blocks = [[eye, eye], [zero, eye]]
    with pytest.raises(RelationViolation) as exc:
        representation(u2, blocks)
    assert exc.value.violations
    lbl, val = exc.value.violations[0]
    assert isinstance(lbl, str)
    assert not val.is_zero()


def test_sign_rep_validates(u2):
    rep = sign_rep(u2)
    assert rep.image(1, 1) == QMatrix([[-ONE]])
    a = Element.generator(2, 1, 1) * Element.generator(2, 1, 1)
    assert evaluate_rep(rep, a) == QMatrix.identity(1)


def test_diagonal_phase_rep(u2):
    # u -> diag(i, -i) is a valid 1-dim phase assignment
    blocks = [
        [QMatrix([[I]]), QMatrix.zero(1, 1)],
        [QMatrix.zero(1, 1), QMatrix([[-I]])],
    ]
    rep = representation(u2, blocks)
    assert rep.image(1, 1, star=True) == QMatrix([[-I]])


letters_d2 = st.sampled_from(letters(2))
words_d2 = st.lists(letters_d2, max_size=3).map(tuple)
elements_d2 = st.lists(
    st.tuples(words_d2, qi_scalars), min_size=1, max_size=2
).map(lambda pairs: Element(2, dict(pairs)))


@given(elements_d2, elements_d2)
def test_rep_is_star_homomorphism(u2, a, b):
    rep = sign_rep(u2, n=1)
    assert evaluate_rep(rep, a * b) == evaluate_rep(rep, a) @ evaluate_rep(rep, b)
    assert evaluate_rep(rep, a.star()) == evaluate_rep(rep, a).adjoint()


@given(elements_d2)
def test_counit_rep_agrees_with_counit(u2, a):
    rep = counit_rep(u2)
    assert evaluate_rep(rep, a) == QMatrix([[counit(a)]])


def test_direct_sum_blocks(u2):
    rep = direct_sum_rep(counit_rep(u2), sign_rep(u2))
    assert rep.n == 2
    assert rep.image(1, 1) == QMatrix([[ONE, ZERO], [ZERO, -ONE]])


def test_rep_relation_labels_name_the_relation(u2):
    eye = QMatrix.identity(1)
    blocks = [[eye, eye], [eye, eye]]
    with pytest.raises(RelationViolation) as exc:
        representation(u2, blocks)
    assert "uu*" in str(exc.value) or "u*u" in str(exc.value)
