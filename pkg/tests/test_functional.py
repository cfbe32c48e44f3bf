"""Generating functionals, conditional positivity and the splitting report."""

import pytest
from hypothesis import given

from conftest import q, qi_matrices, scalar_grid
from schurmann import (
    Cocycle,
    Element,
    I,
    ONE,
    QMatrix,
    Qi,
    RelationViolation,
    ZERO,
    admits_generating_functional,
    build_presentation,
    counit_rep,
    evaluate_functional,
    gaussian_cocycle,
    gram_psd_check,
    hermitianize,
    lk_decomposition,
    rational,
    schurmann_functional,
    su_q3_obstruction,
)
from schurmann.functional import Functional
from schurmann.representation import Representation


def test_functional_vanishes_on_relations(eta_sym_u2, u2):
    psi = schurmann_functional(eta_sym_u2)
    for lbl, r in u2.relations:
        assert evaluate_functional(psi, r).is_zero(), lbl


def test_functional_normalization_and_diagonal(eta_sym_u2):
    psi = schurmann_functional(eta_sym_u2)
    assert evaluate_functional(psi, Element.one(2)) == ZERO
    # psi(u_kk) = -|eta(u_kk)|^2 / 2; here eta(u_11) = (1, i)-row pairing
    assert psi.values == QMatrix([[-ONE, ZERO], [ZERO, -ONE]])
    assert psi.star_values == psi.values.conj()


def test_construction_rejects_obstructed_cocycle(eta_asym_u2):
    with pytest.raises(RelationViolation) as exc:
        schurmann_functional(eta_asym_u2)
    assert exc.value.violations
    assert admits_generating_functional(eta_asym_u2) is None


def test_selfadjoint_offset_still_validates(eta_sym_u2, u2):
    H = QMatrix([[q("2"), I], [-I, ZERO]])
    assert H.is_hermitian()
    psi = schurmann_functional(eta_sym_u2, H)
    for lbl, r in u2.relations:
        assert evaluate_functional(psi, r).is_zero(), lbl


def test_non_hermitian_offset_rejected(eta_sym_u2):
    with pytest.raises(ValueError):
        schurmann_functional(eta_sym_u2, QMatrix([[ZERO, ONE], [ZERO, ZERO]]))


def test_gram_psd_on_examples(eta_sym_u2, eta_rot_o3):
    assert gram_psd_check(schurmann_functional(eta_sym_u2))
    assert gram_psd_check(schurmann_functional(eta_rot_o3))
    assert gram_psd_check(schurmann_functional(eta_sym_u2), max_len=3)


def test_gram_check_surfaces_broken_star_structure(u2, eta_sym_u2):
    # a representation whose starred images were tampered with is the one
    # kind of inconsistency the kernel form cannot absorb: the assembled
    # matrix stops being hermitian and the psd factorization refuses it
    psi = schurmann_functional(eta_sym_u2)
    good = counit_rep(u2)
    bad_star = [list(row) for row in good.R_star]
    bad_star[0][0] = bad_star[0][0].scale(-ONE)
    rep = Representation(u2, 1, good.R, tuple(tuple(r) for r in bad_star))
    eta = Cocycle(rep, eta_sym_u2.V, eta_sym_u2.W)
    with pytest.raises(ValueError):
        gram_psd_check(Functional(eta, psi.values, psi.star_values))


def test_lk_report_on_gaussian_functional(eta_sym_u2):
    lk = lk_decomposition(schurmann_functional(eta_sym_u2))
    assert lk.gaussian_dim == 1
    assert lk.gf_exists_g
    assert lk.gf_exists_n
    assert lk.decomposable


def test_su_q3_obstruction_constant_iff_diagonal_symmetric():
    # twisted determinant relations force the diagonal values to sum to zero
    su3 = build_presentation("su_q", 3, q=rational("1/2"))
    eta = gaussian_cocycle(
        su3, scalar_grid([[ONE, ZERO, ZERO], [ZERO, -ONE, ZERO], [ZERO, ZERO, ZERO]])
    )
    report = su_q3_obstruction(eta)
    assert len(report.values) == 6
    assert report.constant

    mixed = gaussian_cocycle(
        su3,
        scalar_grid(
            [[Qi(rational(-1), rational(-1)), ZERO, ZERO],
             [ZERO, ONE, ZERO],
             [ZERO, ZERO, I]]
        ),
    )
    report = su_q3_obstruction(mixed)
    assert not report.constant
    assert len(set(report.values.values())) > 1


@given(qi_matrices(2), qi_matrices(2))
def test_hermitianize_properties(a, b):
    v, w = hermitianize(a, b)
    assert w == v.conj()
    v2, w2 = hermitianize(v, w)
    assert (v2, w2) == (v, w)
