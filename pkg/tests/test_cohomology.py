"""2-cocycles, defects, class coordinates, primitives and the verifier."""

import pytest
from hypothesis import given

from conftest import qi_scalars
from schurmann import (
    CombinationCocycle,
    Element,
    I,
    KPairCocycle,
    Letter,
    ONE,
    ObstructionError,
    Primitive,
    QMatrix,
    Qi,
    ZERO,
    basis_orthogonal,
    basis_unitary,
    build_presentation,
    check_2cocycle,
    check_primitive,
    class_coordinates,
    coboundary1,
    counit,
    counit_rep,
    defect_orthogonal,
    defect_unitary,
    is_normalized,
    letters,
    primitive,
    rational,
    schurmann_functional,
    square_zero_on_letters,
    sum_identity_defects,
    verify_primitive_exhaustive,
)
from schurmann.cocycle import Cocycle
from schurmann.representation import Representation


def unit(d, j, k):
    rows = [[ZERO] * d for _ in range(d)]
    rows[j - 1][k - 1] = ONE
    return QMatrix(rows)


# -- the degree-2 identity ----------------------------------------------------


def test_kpair_is_a_2cocycle(eta_sym_u2):
    c = KPairCocycle(eta_sym_u2, eta_sym_u2)
    assert check_2cocycle(c) is None
    assert square_zero_on_letters(c) is None
    assert is_normalized(c)


def test_kpair_frozen_sample(eta_sym_u2):
    c = KPairCocycle(eta_sym_u2, eta_sym_u2)
    a = Element.generator(2, 1, 2)
    b = Element.generator(2, 2, 1)
    assert c.value(a, b) == -ONE


def test_kpair_requires_matching_rep(eta_sym_u2, eta_rot_o3):
    with pytest.raises(ValueError):
        KPairCocycle(eta_sym_u2, eta_rot_o3)


def test_square_zero_finds_witness_on_adhoc_bilinear():
    # c(a, b) = [len(a) = len(b) = 1] is not a 2-cocycle: the identity
    # reduces to eps(a) - eps(x) on letter triples
    class FlatPairing:
        d = 2

        def word_value(self, wa, wb):
            return ONE if len(wa) == 1 and len(wb) == 1 else ZERO

    witness = square_zero_on_letters(FlatPairing())
    assert witness is not None
    a, b, x, val = witness
    assert not val.is_zero()
    ea = ONE if a.row == a.col else ZERO
    ex = ONE if x.row == x.col else ZERO
    assert val == ea - ex


def test_coboundary_is_a_2cocycle(eta_sym_u2):
    psi = schurmann_functional(eta_sym_u2)
    c = coboundary1(psi)
    assert check_2cocycle(c) is None
    assert square_zero_on_letters(c) is None


def test_coboundary_matches_direct_formula(eta_sym_u2):
    psi = schurmann_functional(eta_sym_u2)
    c = coboundary1(psi)
    for la in letters(2):
        for lb in letters(2):
            a = Element.from_word(2, (la,))
            b = Element.from_word(2, (lb,))
            direct = (
                counit(a) * psi.value(b)
                - psi.value(a * b)
                + psi.value(a) * counit(b)
            )
            assert c.value(a, b) == direct


def test_coboundary_of_canonical_functional_is_minus_pairing(eta_sym_u2):
    # the sign convention: d(psi) = -<eta(.*), eta(.)> for the canonical psi
    psi = schurmann_functional(eta_sym_u2)
    c = coboundary1(psi)
    kp = KPairCocycle(eta_sym_u2, eta_sym_u2)
    for la in letters(2):
        for lb in letters(2):
            assert c.letter_value(la, lb) == -kp.letter_value(la, lb)


# -- defects and class coordinates -------------------------------------------


def test_defect_frozen_unitary(eta_asym_u2):
    c = KPairCocycle(eta_asym_u2, eta_asym_u2)
    m = defect_unitary(c)
    assert m == QMatrix([[-ONE, ZERO], [ZERO, ONE]])
    assert m.trace().is_zero()


def test_coboundary_has_zero_defect(eta_sym_u2):
    psi = schurmann_functional(eta_sym_u2)
    assert defect_unitary(coboundary1(psi)).is_zero()


def test_orthogonal_basis_defects():
    o3 = build_presentation("o_plus", 3)
    basis = basis_orthogonal(o3)
    assert sorted(basis) == ["Khat_1_2", "Khat_1_3", "Khat_2_3"]
    for m in range(1, 4):
        for n in range(m + 1, 4):
            d = defect_orthogonal(basis[f"Khat_{m}_{n}"])
            assert d == unit(3, m, n) - unit(3, n, m)
            assert (d + d.transpose()).is_zero()


def test_anti_gaussian_pair_defect_d2():
    o2 = build_presentation("o_plus", 2)
    kz = basis_orthogonal(o2)["Kz"]
    assert defect_orthogonal(kz) == QMatrix(
        [[ZERO, Qi(rational(2))], [Qi(rational(-2)), ZERO]]
    )


def test_unitary_basis_coordinates_are_indicators(u2):
    basis = basis_unitary(u2)
    assert sorted(basis) == ["K_1_2", "K_2_1", "K_p_1"]
    for label, c in basis.items():
        cc = class_coordinates(c)
        assert cc.flavor == "unitary"
        for other, coeff in cc.coefficients.items():
            assert coeff == (ONE if other == label else ZERO)


def test_class_coordinates_frozen(eta_asym_u2):
    cc = class_coordinates(KPairCocycle(eta_asym_u2, eta_asym_u2))
    assert cc.flavor == "unitary"
    assert {k: v for k, v in cc.coefficients.items() if not v.is_zero()} == {
        "K_p_1": ONE
    }
    assert cc.defect == QMatrix([[-ONE, ZERO], [ZERO, ONE]])


@given(qi_scalars, qi_scalars)
def test_defect_is_linear(eta_asym_u2, eta_sym_u2, x, y):
    c1 = KPairCocycle(eta_asym_u2, eta_asym_u2)
    c2 = KPairCocycle(eta_sym_u2, eta_sym_u2)
    combo = CombinationCocycle(((x, c1), (y, c2)))
    assert defect_unitary(combo) == defect_unitary(c1).scale(x) + defect_unitary(
        c2
    ).scale(y)


def test_sum_identity_defects_vanish(eta_sym_u2, eta_rot_o3):
    for c in (
        KPairCocycle(eta_sym_u2, eta_sym_u2),
        KPairCocycle(eta_rot_o3, eta_rot_o3),
    ):
        defects = sum_identity_defects(c)
        assert defects
        for label, value in defects.items():
            assert value.is_zero(), label


# -- primitives ---------------------------------------------------------------


def test_primitive_roundtrip_through_coboundary(eta_sym_u2):
    psi = schurmann_functional(eta_sym_u2)
    c = coboundary1(psi)
    phi = primitive(c)
    assert phi.values == psi.values
    assert phi.star_values == psi.star_values
    assert check_primitive(phi) is None


def test_primitive_obstruction_unitary(eta_asym_u2):
    with pytest.raises(ObstructionError) as exc:
        primitive(KPairCocycle(eta_asym_u2, eta_asym_u2))
    assert exc.value.flavor == "unitary"
    assert exc.value.defect == QMatrix([[-ONE, ZERO], [ZERO, ONE]])


def test_primitive_of_orthogonal_basis_obstructed():
    o3 = build_presentation("o_plus", 3)
    c = basis_orthogonal(o3)["Khat_1_2"]
    with pytest.raises(ObstructionError) as exc:
        primitive(c)
    assert exc.value.flavor == "orthogonal"
    assert not exc.value.defect.is_zero()


def test_exhaustive_verification_counts(eta_sym_u2):
    # the symmetric pairing has zero defect, so a primitive exists
    c = KPairCocycle(eta_sym_u2, eta_sym_u2)
    assert defect_unitary(c).is_zero()
    phi = primitive(c)
    checked, witness = verify_primitive_exhaustive(phi, max_len=2)
    assert witness is None
    # 73 words of length <= 2 over the 8 letters, squared
    assert checked == 5329


def test_exhaustive_verifier_needs_a_pairing(eta_sym_u2):
    phi = primitive(coboundary1(schurmann_functional(eta_sym_u2)))
    with pytest.raises(TypeError):
        verify_primitive_exhaustive(phi)


def test_exhaustive_verifier_catches_broken_star_structure(u2, eta_sym_u2):
    # letter-value corruptions extend to counit derivations and cancel in
    # the coboundary, so the only way to manufacture a violation is to break
    # the *-compatibility of the representation underneath the pairing
    clean = primitive(KPairCocycle(eta_sym_u2, eta_sym_u2))
    good = counit_rep(u2)
    bad_star = [list(row) for row in good.R_star]
    bad_star[0][0] = bad_star[0][0].scale(I)
    rep = Representation(u2, 1, good.R, tuple(tuple(r) for r in bad_star))
    eta = Cocycle(rep, eta_sym_u2.V, eta_sym_u2.W)
    c = KPairCocycle(eta, eta)
    checked, witness = verify_primitive_exhaustive(
        Primitive(c, clean.values, clean.star_values), max_len=2
    )
    assert witness is not None
    aw, bw, got, want = witness
    assert checked == 659
    assert aw == (Letter(1, 1, False), Letter(1, 1, False))
    assert bw == (Letter(1, 1, False),)
    assert got != want
    assert got == Qi(rational(-2))
    assert want == Qi(rational(-1), rational(1))


def test_check_primitive_passes_on_construction(eta_rot_o3):
    c = KPairCocycle(eta_rot_o3, eta_rot_o3)
    # zero defect here, so a primitive exists
    assert defect_orthogonal(c).is_zero()
    phi = primitive(c)
    assert check_primitive(phi) is None
    checked, witness = verify_primitive_exhaustive(phi, max_len=2)
    assert witness is None
