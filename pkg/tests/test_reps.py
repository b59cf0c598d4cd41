import math
from fractions import Fraction

import pytest

from gmnrep.cyclo import CycRat, root_of_unity
from gmnrep.groups import (
    AlgebraElement,
    evaluate_word,
    gen_s,
    gen_t,
    jm_j,
    jm_jtilde,
    projector,
)
from gmnrep.matrices import Matrix
from gmnrep.reps import (
    all_representations,
    branching,
    build_seminormal,
    completeness_check,
    dimension_census,
    evaluate_algebra_element,
    hermitian_form,
    homomorphism_spot_check,
    intertwiner_action_check,
    irreducibility_check,
    jm_diagonal_check,
    projector_matrix_check,
    prop_swap_encoding_check,
    spectrum_bound_check,
    unitarity_residual,
    unitary_matrices,
    verify_form_invariance,
    verify_relations,
)
from gmnrep.tableaux import MPartition, enum_mpartitions


def P(m, *parts):
    return MPartition(m, tuple(tuple(p) for p in parts))


def F(m, value):
    return CycRat.from_rational(m, Fraction(value))


def test_one_dimensional_row_shape():
    rep = build_seminormal(1, 2, P(1, (2,)))
    assert rep.dim == 1
    assert rep.mat_s[0] == Matrix(1, [[1]])
    assert rep.mat_t == Matrix(1, [[1]])


def test_pinned_two_one_matrices():
    rep = build_seminormal(1, 3, P(1, (2, 1)))
    assert rep.dim == 2
    s2 = rep.mat_s[1]
    # columns act: s_2 X1 = -1/2 X1 + 1/2 X2, s_2 X2 = 3/2 X1 + 1/2 X2
    assert s2 == Matrix(1, [[Fraction(-1, 2), Fraction(3, 2)], [Fraction(1, 2), Fraction(1, 2)]])
    assert s2 * s2 == Matrix.identity(1, 2)
    # entries 1,2 share a row in T1 (eigenvalue +1) and a column in T2 (-1)
    assert rep.mat_s[0] == Matrix.diagonal(1, [1, -1])


def test_two_color_single_boxes():
    rep = build_seminormal(2, 2, P(2, (1,), (1,)))
    assert rep.mat_t == Matrix.diagonal(2, [root_of_unity(2, 1), root_of_unity(2, 2)])
    assert rep.mat_s[0] == Matrix(2, [[0, 1], [1, 0]])


def test_relations_certificates():
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for rep in all_representations(m, n):
                cert = verify_relations(rep)
                assert cert.passed, cert.failures()


def test_braid_on_two_one():
    rep = build_seminormal(1, 3, P(1, (2, 1)))
    s1, s2 = rep.mat_s
    assert s1 * s2 * s1 == s2 * s1 * s2


def test_homomorphism_and_word_consistency():
    rep = build_seminormal(2, 3, P(2, (2,), (1,)))
    cert = homomorphism_spot_check(rep, pairs=50, seed=11)
    assert cert.passed
    for word in ("t s1 s2", "s2 s1 t t", "t t s1 t s2 s1"):
        assert rep.matrix_of(evaluate_word(2, 3, word)) == rep.matrix_of_word(word)


def test_evaluate_algebra_element():
    rep = build_seminormal(2, 2, P(2, (1,), (1,)))
    a = AlgebraElement.basis(gen_t(2, 2)) + Fraction(1, 2) * AlgebraElement.basis(gen_s(2, 2, 1))
    expected = rep.mat_t + rep.mat_s[0] * Fraction(1, 2)
    assert evaluate_algebra_element(rep, a) == expected
    assert evaluate_algebra_element(rep, jm_jtilde(2, 2, 1)).is_zero()


def test_jm_diagonal_small():
    rep = build_seminormal(1, 3, P(1, (2, 1)))
    cert = jm_diagonal_check(rep)
    assert cert.passed, cert.failures()
    jt2 = evaluate_algebra_element(rep, jm_jtilde(1, 3, 2))
    jt3 = evaluate_algebra_element(rep, jm_jtilde(1, 3, 3))
    assert jt2 == Matrix.diagonal(1, [1, -1])
    assert jt3 == Matrix.diagonal(1, [-1, 1])


def test_jm_matrix_recursion_matches_direct_evaluation():
    for m, n in ((1, 3), (2, 3), (3, 2)):
        for rep in all_representations(m, n):
            for i in range(1, n + 1):
                assert rep.jm_matrix(i) == evaluate_algebra_element(rep, jm_j(m, n, i))
                assert rep.jm_matrix(i, tilde=True) == evaluate_algebra_element(
                    rep, jm_jtilde(m, n, i)
                )


def test_jm_diagonal_sweep():
    for m in (1, 2, 3):
        for n in (2, 3):
            for rep in all_representations(m, n):
                assert jm_diagonal_check(rep).passed


def test_spectrum_bound():
    for rep in all_representations(2, 4):
        cert = spectrum_bound_check(rep)
        assert cert.passed, cert.failures()
    one_box = build_seminormal(2, 1, P(2, (1,), ()))
    assert one_box.jm_matrix(1, tilde=True).is_zero()


def test_hermitian_form_values():
    assert hermitian_form(build_seminormal(1, 2, P(1, (1, 1)))).diag == (Fraction(1),)
    form = hermitian_form(build_seminormal(1, 3, P(1, (2, 1))))
    assert form.diag == (Fraction(1, 2), Fraction(3, 2))
    assert hermitian_form(build_seminormal(2, 2, P(2, (1,), (1,)))).diag == (
        Fraction(1),
        Fraction(1),
    )


def test_form_invariance():
    rep = build_seminormal(1, 3, P(1, (2, 1)))
    form = hermitian_form(rep)
    gram = Matrix.diagonal(1, form.diag)
    s2 = rep.mat_s[1]
    assert s2.conjugate_transpose() * gram * s2 == gram
    for m, n in ((1, 3), (2, 2), (2, 3), (3, 2)):
        for rep in all_representations(m, n):
            assert verify_form_invariance(rep).passed


def test_unitary_matrices():
    rep = build_seminormal(1, 3, P(1, (2, 1)))
    mats = unitary_matrices(rep)
    s2 = mats[2]
    root3 = math.sqrt(3.0) / 2
    assert abs(s2[0][0] - (-0.5)) < 1e-12
    assert abs(s2[0][1] - root3) < 1e-12
    assert abs(s2[1][0] - root3) < 1e-12
    assert abs(s2[1][1] - 0.5) < 1e-12
    for m, n in ((1, 4), (2, 3), (3, 2)):
        for rep in all_representations(m, n):
            assert unitarity_residual(unitary_matrices(rep)) < 1e-10


def test_intertwiner_action_cases():
    # row of two: everything collapses to the zero map
    assert intertwiner_action_check(build_seminormal(1, 2, P(1, (2,)))).passed
    # distinct roots with equal contents: coefficient vanishes
    assert intertwiner_action_check(build_seminormal(2, 2, P(2, (1,), (1,)))).passed
    # hook shape: u~_3 maps T1 to 1 * T2
    rep = build_seminormal(1, 3, P(1, (2, 1)))
    from gmnrep.groups import intertwiner

    u3 = evaluate_algebra_element(rep, intertwiner(1, 3, 2))
    assert [u3.entry(r, 0) for r in range(2)] == [F(1, 0), F(1, 1)]
    assert intertwiner_action_check(rep).passed


def test_projector_matrices():
    for m, n in ((1, 3), (2, 2), (2, 3), (3, 2)):
        for rep in all_representations(m, n):
            assert projector_matrix_check(rep).passed


def test_prop_swap_encoding():
    for m, n in ((1, 3), (1, 4), (2, 3)):
        for rep in all_representations(m, n):
            cert = prop_swap_encoding_check(rep)
            assert cert.passed, cert.failures()


def test_branching_examples():
    cert = branching(build_seminormal(1, 3, P(1, (2, 1))))
    assert cert.passed, cert.failures()
    assert branching(build_seminormal(2, 2, P(2, (1,), (1,)))).passed
    for rep in all_representations(2, 3):
        assert branching(rep).passed
    # one-dimensional shapes restrict to one-dimensional shapes
    assert branching(build_seminormal(1, 4, P(1, (4,)))).passed


def test_completeness():
    census = dimension_census(2, 2)
    assert census["sum_sq"] == 8 and census["pass"]
    assert dimension_census(2, 3)["sum_sq"] == 48
    census32 = dimension_census(3, 2)
    assert census32["sum_sq"] == 18 and census32["pass"]
    dims = sorted(census32["dims"].values())
    assert dims.count(1) == 6 and dims.count(2) == 3
    assert completeness_check(2, 2).passed
    assert completeness_check(3, 2).passed


def test_irreducibility_check():
    for rep in all_representations(2, 3):
        assert irreducibility_check(rep).passed


def test_build_is_deterministic():
    a = build_seminormal(2, 3, P(2, (2,), (1,)))
    b = build_seminormal(2, 3, P(2, (2,), (1,)))
    assert a.mat_t == b.mat_t and a.mat_s == b.mat_s and a.basis == b.basis


def test_shape_size_mismatch():
    with pytest.raises(ValueError):
        build_seminormal(1, 3, P(1, (2,)))
    with pytest.raises(ValueError):
        build_seminormal(2, 2, P(1, (2,)))
