from fractions import Fraction

import pytest

from gmnrep.affine import (
    build_a2,
    build_one_dim,
    build_two_dim_distinct,
    build_two_dim_equal,
    expected_irreducible,
    is_irreducible_a2,
    pairwise_commuting,
    quotient_relations_check,
    verify_a2_relations,
)
from gmnrep.cyclo import CycRat, all_roots, root_of_unity
from gmnrep.matrices import Matrix
from gmnrep.reps import all_representations


def test_one_dim_values():
    a = root_of_unity(2, 1)
    rep = build_one_dim(2, a, Fraction(3), +1)
    assert rep.x == Matrix(2, [[a]])
    assert rep.y == Matrix(2, [[a]])
    assert rep.xt == Matrix(2, [[3]])
    assert rep.yt == Matrix(2, [[4]])
    assert rep.s == Matrix(2, [[1]])
    assert verify_a2_relations(rep).passed


def test_two_dim_equal_pinned_matrix():
    rep = build_two_dim_equal(1, root_of_unity(1, 1), Fraction(0), Fraction(2))
    assert rep.s == Matrix(1, [[Fraction(1, 2), Fraction(3, 4)], [1, Fraction(-1, 2)]])
    assert rep.s * rep.s == Matrix.identity(1, 2)
    assert verify_a2_relations(rep).passed


def test_two_dim_distinct_swap():
    rep = build_two_dim_distinct(2, root_of_unity(2, 1), root_of_unity(2, 2), 0, 0)
    assert rep.s == Matrix(2, [[0, 1], [1, 0]])
    assert verify_a2_relations(rep).passed
    with pytest.raises(ValueError):
        build_two_dim_distinct(2, root_of_unity(2, 1), root_of_unity(2, 1), 0, 0)


def test_constraint_errors():
    with pytest.raises(ValueError):
        build_two_dim_equal(2, root_of_unity(2, 1), Fraction(1), Fraction(1))
    with pytest.raises(ValueError):
        build_one_dim(2, root_of_unity(2, 1), 0, 2)
    with pytest.raises(ValueError):
        build_one_dim(2, CycRat.from_rational(2, Fraction(1, 2)), 0, 1)
    with pytest.raises(ValueError):
        build_a2("three-dim", 2)


def test_relations_across_grid():
    for m in (1, 2, 3):
        roots = all_roots(m)
        for a in roots:
            for eps in (1, -1):
                for at in (-2, 0, 1):
                    rep = build_one_dim(m, a, at, eps)
                    assert verify_a2_relations(rep).passed
                    assert pairwise_commuting(rep)
            for b in roots:
                if a == b:
                    continue
                rep = build_two_dim_distinct(m, a, b, Fraction(-1), Fraction(2))
                assert verify_a2_relations(rep).passed
                assert pairwise_commuting(rep)
            for bt in (-3, -1, 2):
                rep = build_two_dim_equal(m, a, Fraction(0), Fraction(bt))
                assert verify_a2_relations(rep).passed
                assert pairwise_commuting(rep)


def test_m1_reduction_single_term():
    # with one root the conjugate sum has a single term: y~ = s x~ s + s
    rep = build_two_dim_equal(1, root_of_unity(1, 1), 0, 3)
    assert rep.yt == rep.s * rep.xt * rep.s + rep.s


def test_irreducibility_boundary():
    a = root_of_unity(2, 1)
    assert is_irreducible_a2(build_two_dim_equal(2, a, 0, 2)).irreducible
    red_up = is_irreducible_a2(build_two_dim_equal(2, a, 0, 1))
    assert not red_up.irreducible
    assert red_up.invariant_vector is not None
    red_down = is_irreducible_a2(build_two_dim_equal(2, a, 0, -1))
    assert not red_down.irreducible
    # emitted vector really is invariant for all five matrices
    rep = build_two_dim_equal(2, a, 0, 1)
    v = red_up.invariant_vector
    for mat in rep.matrices().values():
        w0 = mat.entry(0, 0) * v[0] + mat.entry(0, 1) * v[1]
        w1 = mat.entry(1, 0) * v[0] + mat.entry(1, 1) * v[1]
        assert w0 * v[1] == w1 * v[0]


def test_irreducibility_matches_closed_form():
    for m in (1, 2):
        for a in all_roots(m):
            for at in range(-2, 3):
                for bt in range(-2, 3):
                    if at == bt:
                        continue
                    rep = build_two_dim_equal(m, a, at, bt)
                    assert is_irreducible_a2(rep).irreducible == expected_irreducible(rep)
            for b in all_roots(m):
                if a != b:
                    rep = build_two_dim_distinct(m, a, b, 0, 0)
                    assert is_irreducible_a2(rep).irreducible


def test_spectrum_of_x_is_roots():
    for m in (2, 3):
        for a in all_roots(m):
            rep = build_two_dim_equal(m, a, 0, 2)
            assert all(v ** m == 1 for v in rep.x.diagonal_entries())


def test_quotient_inside_group_representations():
    for m, n in ((1, 3), (2, 2), (2, 3), (3, 2)):
        for rep in all_representations(m, n):
            for i in range(1, n):
                cert = quotient_relations_check(rep, i)
                assert cert.passed, cert.failures()
