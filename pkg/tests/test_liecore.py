import random
from fractions import Fraction

import pytest

from glaw import (
    AmbiguousGrading,
    FundamentalTriplet,
    LieAlgebraData,
    Matrix,
    QuadraticForm,
    Representation,
    StructureError,
    center,
    derived_subalgebra,
    dual_rep,
    grading_element,
    rep_kernel,
    validate,
)
from glaw.exactla import in_span, rank
from glaw.liecore import basis_vector, direct_sum_with_zero_factor, killing_form
from glaw.generators import gen_symplectic

from helpers import gl_standard_triplet, random_rational_vector, sl2_algebra, sl2_triplet

F = Fraction


def test_validate_gl2_standard_is_clean():
    assert validate(gl_standard_triplet(2)).ok


def test_validate_reports_degenerate_form():
    t = gl_standard_triplet(2)
    broken = FundamentalTriplet(t.g0, QuadraticForm(Matrix.zeros(4, 4)), t.rho)
    rep = validate(broken)
    assert not rep.ok
    assert any("degenerate" in v for v in rep.violations)


def test_validate_abelian_with_any_symmetric_invertible_form():
    g = LieAlgebraData.abelian(2)
    gram = Matrix.from_rows([[2, 1], [1, 1]])
    rho = Representation(1, (Matrix.from_rows([[1]]), Matrix.from_rows([[3]])))
    assert validate(FundamentalTriplet(g, QuadraticForm(gram), rho)).ok


def test_validate_catches_each_invariant():
    t = gl_standard_triplet(2)
    bad_gram = Matrix.from_rows([[0, 1, 0, 0]] + [list(r) for r in t.b0.gram.entries[1:]])
    rep = validate(FundamentalTriplet(t.g0, QuadraticForm(bad_gram), t.rho))
    assert any("symmetric" in v for v in rep.violations)

    rows = [list(r) for r in t.b0.gram.entries]
    rows[0][0] = F(7)  # breaks invariance but stays symmetric and nondegenerate
    rep = validate(FundamentalTriplet(t.g0, QuadraticForm(Matrix.from_rows(rows)), t.rho))
    assert any("invariance" in v for v in rep.violations)

    mats = list(t.rho.action)
    mats[1] = mats[1].scale(2)
    rep = validate(FundamentalTriplet(t.g0, t.b0, Representation(2, tuple(mats))))
    assert any("homomorphism" in v for v in rep.violations)

    table = [[list(v) for v in row] for row in t.g0.structure]
    table[0][1] = [x + 1 for x in table[0][1]]
    rep = validate(FundamentalTriplet(LieAlgebraData.from_table(table), t.b0, t.rho))
    assert any("antisymmetry" in v for v in rep.violations)

    # symmetric but Jacobi-breaking perturbation on sl2
    g = sl2_algebra()
    table = [[list(v) for v in row] for row in g.structure]
    table[1][2] = [F(1), F(1), F(0)]
    table[2][1] = [F(-1), F(-1), F(0)]
    t2 = sl2_triplet()
    rep = validate(FundamentalTriplet(LieAlgebraData.from_table(table), t2.b0, t2.rho))
    assert any("Jacobi" in v for v in rep.violations)


def test_structure_errors_are_distinct_from_invariant_violations():
    t = gl_standard_triplet(2)
    with pytest.raises(StructureError):
        FundamentalTriplet(t.g0, QuadraticForm(Matrix.identity(3)), t.rho)
    with pytest.raises(StructureError):
        Representation(2, (Matrix.identity(3),))


def test_dual_rep_cases():
    r = Representation(2, (Matrix.identity(2), Matrix.from_rows([[1, 0], [0, 2]])))
    d = dual_rep(r)
    assert d.action[0].entries == Matrix.identity(2).scale(-1).entries
    assert d.action[1].entries == Matrix.from_rows([[-1, 0], [0, -2]]).entries
    t = gl_standard_triplet(2)
    # E_12 is basis index 1 in row-major order; its dual is -E_21
    assert dual_rep(t.rho).action[1].entries == Matrix.from_rows([[0, 0], [-1, 0]]).entries
    dd = dual_rep(dual_rep(t.rho))
    assert all(a.entries == b.entries for a, b in zip(dd.action, t.rho.action))


def test_derived_subalgebra_dimensions():
    assert derived_subalgebra(LieAlgebraData.abelian(3)) == []
    for n in (2, 3):
        der = derived_subalgebra(gl_standard_triplet(n).g0)
        assert len(der) == n * n - 1
        # derived part of gl(n) is trace-zero
        for v in der:
            assert sum(v[a * n + a] for a in range(n)) == 0
    assert len(derived_subalgebra(sl2_algebra())) == 3


def test_center_dimensions():
    assert len(center(LieAlgebraData.abelian(4))) == 4
    for n in (2, 3):
        z = center(gl_standard_triplet(n).g0)
        assert len(z) == 1
        ident = tuple(F(1) if a == b else F(0) for a in range(n) for b in range(n))
        assert in_span(ident, z)
    assert center(sl2_algebra()) == []


def test_subalgebra_closure_properties():
    g = gl_standard_triplet(2).g0
    der = derived_subalgebra(g)
    z = center(g)
    for u in der:
        for v in der:
            assert in_span(g.bracket(u, v), der)
    for u in z:
        for a in range(g.dim):
            assert g.bracket(basis_vector(g.dim, a), u) == tuple([F(0)] * g.dim)


def test_rep_kernel_cases():
    t = gl_standard_triplet(2)
    assert rep_kernel(t.rho, t.g0) == []
    zero_rho = Representation(2, tuple(Matrix.zeros(2, 2) for _ in range(4)))
    assert len(rep_kernel(zero_rho, t.g0)) == 4
    glued = direct_sum_with_zero_factor(t, gl_standard_triplet(2).g0, t.b0)
    k = rep_kernel(glued.rho, glued.g0)
    assert len(k) == 4
    # the kernel is an ideal
    for u in k:
        for a in range(glued.g0.dim):
            assert in_span(glued.g0.bracket(basis_vector(glued.g0.dim, a), u), k)


def test_grading_element_cases():
    t = gen_symplectic(3, 2, 2, "trace")
    h = grading_element(t)
    ident = tuple(F(1) if a == b else F(0) for a in range(3) for b in range(3))
    assert h == ident
    assert grading_element(sl2_triplet()) is None
    t = gen_symplectic(3, 1, 3, "sl-shifted")
    assert grading_element(t) == tuple(F(2, 3) * x for x in ident)


def test_grading_element_ambiguity_is_an_error():
    base = gen_symplectic(2, 2, 2, "trace")
    widened = direct_sum_with_zero_factor(base, LieAlgebraData.abelian(1), QuadraticForm(Matrix.identity(1)))
    with pytest.raises(AmbiguousGrading):
        grading_element(widened)


def test_form_invariance_on_random_triples():
    t = gen_symplectic(2, 2, 2, "trace")
    rng = random.Random(7)
    for _ in range(100):
        x = random_rational_vector(rng, t.dim_g0)
        y = random_rational_vector(rng, t.dim_g0)
        z = random_rational_vector(rng, t.dim_g0)
        assert t.b0.value(t.g0.bracket(x, y), z) == t.b0.value(x, t.g0.bracket(y, z))


def test_killing_form_of_sl2():
    k = killing_form(sl2_algebra())
    assert k.entries == Matrix.from_rows([[8, 0, 0], [0, 0, 4], [0, 4, 0]]).entries
    assert rank(k) == 3
