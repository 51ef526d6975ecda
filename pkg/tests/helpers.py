"""Shared constructions for the test suite (hand-built algebras and oracles)."""

from __future__ import annotations

import random
from fractions import Fraction

from glaw import (
    FundamentalTriplet,
    LieAlgebraData,
    Matrix,
    QuadraticForm,
    Representation,
    gen_principal,
    gen_symplectic,
)
from glaw.liecore import basis_vector

F = Fraction


def sl2_algebra() -> LieAlgebraData:
    """Basis (h, e, f): [h,e]=2e, [h,f]=-2f, [e,f]=h."""
    z = (F(0), F(0), F(0))
    table = [[z, (F(0), F(2), F(0)), (F(0), F(0), F(-2))],
             [(F(0), F(-2), F(0)), z, (F(1), F(0), F(0))],
             [(F(0), F(0), F(2)), (F(-1), F(0), F(0)), z]]
    return LieAlgebraData(3, tuple(tuple(row) for row in table))


def sl2_triplet() -> FundamentalTriplet:
    """sl(2) with the trace form and the standard action on column pairs."""
    g = sl2_algebra()
    gram = Matrix.from_rows([[2, 0, 0], [0, 0, 1], [0, 1, 0]])  # tr(ab) on (h,e,f)
    h = Matrix.from_rows([[1, 0], [0, -1]])
    e = Matrix.from_rows([[0, 1], [0, 0]])
    f = Matrix.from_rows([[0, 0], [1, 0]])
    return FundamentalTriplet(g, QuadraticForm(gram), Representation(2, (h, e, f)))


def gl_standard_triplet(n: int) -> FundamentalTriplet:
    """gl(n) with the trace form acting on coordinates (center acts by 1)."""
    return gen_symplectic(n, 1, 1, "trace")


def random_rational_vector(rng: random.Random, dim: int, span: int = 4) -> tuple:
    return tuple(F(rng.randint(-span, span)) for _ in range(dim))


def random_abelian_triplet(rng: random.Random, dim: int = 2) -> FundamentalTriplet:
    """Random diagonal-weight triplet (always valid; invariance is vacuous)."""
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim)]
        m = Matrix.from_rows(rows)
        from glaw.exactla import rank

        if rank(m) == dim:
            try:
                return gen_principal(rows, symmetrizer=None)
            except Exception:
                continue


def random_gl2_triplet(rng: random.Random) -> FundamentalTriplet:
    """gl(2) on degree-p polynomials with a random invariant form a*tr+b*trtr."""
    from glaw.generators import symplectic_form_gram
    from glaw.exactla import rank

    p = rng.choice([1, 2])
    while True:
        a, b = rng.randint(1, 3), rng.randint(-2, 2)
        gram = symplectic_form_gram(2, "trace").scale(a)
        shifted = symplectic_form_gram(2, "sl-shifted") - symplectic_form_gram(2, "trace")
        gram = gram + shifted.scale(b)
        if rank(gram) == 4:
            lam = F(rng.randint(1, 4))
            return gen_symplectic(2, p, lam, gram)


def sum_of_powers_vector(n: int, p: int) -> tuple:
    """Coordinates of x_0^p + ... + x_{n-1}^p in the monomial basis."""
    from glaw import monomial_basis

    mono = monomial_basis(n, p)
    coords = [F(0)] * len(mono.exponents)
    for i in range(n):
        alpha = tuple(p if k == i else 0 for k in range(n))
        coords[mono.index(alpha)] = F(1)
    return tuple(coords)


def enumerate_positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Brute-force positive-root enumeration for a finite-type Cartan matrix.

    Height-by-height closure using root strings: beta + alpha_i is a root iff
    p - <beta, alpha_i^vee> > 0 where p counts how far the string extends
    downward.  Independent of the tower machinery.
    """
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(m * cartan[i][j] for j, m in enumerate(beta))
                p = 0
                probe = tuple(m - (1 if j == i else 0) for j, m in enumerate(beta))
                while all(x >= 0 for x in probe) and (probe in roots or all(x == 0 for x in probe)):
                    if all(x == 0 for x in probe):
                        break
                    p += 1
                    probe = tuple(m - (1 if j == i else 0) for j, m in enumerate(probe))
                if p - pairing > 0:
                    cand = tuple(m + (1 if j == i else 0) for j, m in enumerate(beta))
                    if cand not in roots:
                        roots.add(cand)
                        new.append(cand)
        frontier = new
    return sorted(roots)


def root_height_counts(cartan: list[list[int]]) -> list[int]:
    roots = enumerate_positive_roots(cartan)
    heights = [sum(r) for r in roots]
    out = []
    for h in range(1, max(heights) + 1):
        out.append(heights.count(h))
    return out


def jacobi_holds_everywhere(g: LieAlgebraData) -> bool:
    from glaw.exactla import vadd, vis_zero, vneg

    for i in range(g.dim):
        for j in range(g.dim):
            if g.structure[i][j] != vneg(g.structure[j][i]):
                return False
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            for k in range(j + 1, g.dim):
                ei, ej, ek = (basis_vector(g.dim, m) for m in (i, j, k))
                acc = vadd(
                    vadd(g.bracket(ei, g.bracket(ej, ek)), g.bracket(ej, g.bracket(ek, ei))),
                    g.bracket(ek, g.bracket(ei, ej)),
                )
                if not vis_zero(acc):
                    return False
    return True
