"""Lie algebras by structure constants, invariant forms, representations.

Houses the fundamental triplet (g0, B0, rho) and the subalgebra computations
(derived algebra, center, representation kernel, grading element) that the
local-bracket construction and the sl2 machinery rely on.  Validation is
exhaustive on basis tuples; Jacobi runs over i<j<k, which suffices once the
separately checked antisymmetry holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactla import (
    Matrix,
    Vector,
    ZERO,
    as_vector,
    image_basis,
    kernel_basis,
    rank,
    solve,
    span_matrix,
    vadd,
    vis_zero,
    vscale,
    vzero,
)


class StructureError(Exception):
    """Shapes or indices are inconsistent; distinct from an invariant violation."""


class Refusal(Exception):
    """An operation precondition does not hold; the operation was not performed."""


class AmbiguousGrading(Refusal):
    """More than one central element acts as 2*Id; silent tie-breaking is unsafe."""


class TransitivityRequired(Refusal):
    """Growth needs a transitive local part; reduce the triplet first."""


class NoTriple(Refusal):
    """The nil-positive candidate admits no completed sl2-triple."""


@dataclass(frozen=True)
class LieAlgebraData:
    """A Lie algebra on basis e_0..e_{dim-1}; structure[i][j] is [e_i, e_j]."""

    dim: int
    structure: tuple[tuple[Vector, ...], ...]

    def __post_init__(self):
        if len(self.structure) != self.dim:
            raise StructureError("structure table has wrong outer size")
        for row in self.structure:
            if len(row) != self.dim or any(len(v) != self.dim for v in row):
                raise StructureError("structure table has wrong inner size")

    @staticmethod
    def from_table(table) -> "LieAlgebraData":
        dim = len(table)
        return LieAlgebraData(dim, tuple(tuple(as_vector(v) for v in row) for row in table))

    @staticmethod
    def abelian(dim: int) -> "LieAlgebraData":
        z = vzero(dim)
        return LieAlgebraData(dim, tuple(tuple(z for _ in range(dim)) for _ in range(dim)))

    def bracket(self, x: Vector, y: Vector) -> Vector:
        out = vzero(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.structure[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                out = vadd(out, vscale(xi * yj, row[j]))
        return out

    def ad_matrix(self, x: Vector) -> Matrix:
        cols = [self.bracket(x, basis_vector(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_cols(cols, nrows=self.dim)

    def direct_sum(self, other: "LieAlgebraData") -> "LieAlgebraData":
        n, m = self.dim, other.dim
        table = [[vzero(n + m) for _ in range(n + m)] for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                table[i][j] = self.structure[i][j] + vzero(m)
            # cross brackets stay zero
        for i in range(m):
            for j in range(m):
                table[n + i][n + j] = vzero(n) + other.structure[i][j]
        return LieAlgebraData(n + m, tuple(tuple(row) for row in table))


def basis_vector(dim: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else ZERO for k in range(dim))


@dataclass(frozen=True)
class QuadraticForm:
    gram: Matrix

    def value(self, u: Vector, v: Vector) -> Fraction:
        return sum(
            (ui * self.gram.entries[i][j] * vj for i, ui in enumerate(u) if ui for j, vj in enumerate(v) if vj),
            ZERO,
        )

    def direct_sum(self, other: "QuadraticForm") -> "QuadraticForm":
        n, m = self.gram.rows, other.gram.rows
        rows = [list(self.gram.entries[i]) + [ZERO] * m for i in range(n)]
        rows += [[ZERO] * n + list(other.gram.entries[i]) for i in range(m)]
        return QuadraticForm(Matrix.from_rows(rows))


@dataclass(frozen=True)
class Representation:
    dim_v: int
    action: tuple[Matrix, ...]

    def __post_init__(self):
        for a in self.action:
            if a.rows != self.dim_v or a.cols != self.dim_v:
                raise StructureError("representation matrices must be dim_v x dim_v")

    def act(self, u: Vector, x: Vector) -> Vector:
        if len(u) != len(self.action):
            raise StructureError("coefficient vector does not match the algebra dimension")
        out = vzero(self.dim_v)
        for a, ua in enumerate(u):
            if ua == 0:
                continue
            out = vadd(out, vscale(ua, self.action[a].matvec(x)))
        return out

    def matrix_of(self, u: Vector) -> Matrix:
        out = Matrix.zeros(self.dim_v, self.dim_v)
        for a, ua in enumerate(u):
            if ua == 0:
                continue
            out = out + self.action[a].scale(ua)
        return out


@dataclass(frozen=True)
class FundamentalTriplet:
    g0: LieAlgebraData
    b0: QuadraticForm
    rho: Representation

    def __post_init__(self):
        if self.b0.gram.rows != self.g0.dim or self.b0.gram.cols != self.g0.dim:
            raise StructureError("form Gram matrix must be dim_g0 x dim_g0")
        if len(self.rho.action) != self.g0.dim:
            raise StructureError("one representation matrix per g0 basis element is required")

    @property
    def dim_g0(self) -> int:
        return self.g0.dim

    @property
    def dim_v(self) -> int:
        return self.rho.dim_v


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, msg: str):
        self.violations.append(msg)


def validate(t: FundamentalTriplet) -> ValidationReport:
    """Exhaustive invariant check of a fundamental triplet.

    Checks antisymmetry and Jacobi for the bracket, symmetry / nondegeneracy /
    invariance for the form, and the homomorphism property of the
    representation, all on basis tuples.
    """
    rep = ValidationReport()
    g, b0, rho = t.g0, t.b0, t.rho
    n = g.dim
    for i in range(n):
        for j in range(i, n):
            lhs = g.structure[i][j]
            rhs = vscale(Fraction(-1), g.structure[j][i])
            if lhs != rhs:
                rep.add(f"antisymmetry fails at basis pair ({i},{j})")
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = (basis_vector(n, m) for m in (i, j, k))
                acc = g.bracket(ei, g.bracket(ej, ek))
                acc = vadd(acc, g.bracket(ej, g.bracket(ek, ei)))
                acc = vadd(acc, g.bracket(ek, g.bracket(ei, ej)))
                if not vis_zero(acc):
                    rep.add(f"Jacobi identity fails at basis triple ({i},{j},{k})")
    if not b0.gram.is_symmetric():
        rep.add("form is not symmetric")
    if rank(b0.gram) != n:
        rep.add("form is degenerate")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = b0.value(g.structure[i][j], basis_vector(n, k))
                rhs = b0.value(basis_vector(n, i), g.structure[j][k])
                if lhs != rhs:
                    rep.add(f"form invariance fails at basis triple ({i},{j},{k})")
    for i in range(n):
        for j in range(i + 1, n):
            lhs = rho.matrix_of(g.structure[i][j])
            rhs = rho.action[i] @ rho.action[j] - rho.action[j] @ rho.action[i]
            if lhs.entries != rhs.entries:
                rep.add(f"representation homomorphism fails at basis pair ({i},{j})")
    return rep


def dual_rep(r: Representation) -> Representation:
    """Contragredient action: each generator goes to minus its transpose."""
    return Representation(r.dim_v, tuple((-a.transpose()) for a in r.action))


def derived_subalgebra(g: LieAlgebraData) -> list[Vector]:
    cols = [g.structure[i][j] for i in range(g.dim) for j in range(i + 1, g.dim)]
    return list(image_basis(span_matrix(cols, g.dim)).basis)


def center(g: LieAlgebraData) -> list[Vector]:
    rows = []
    for j in range(g.dim):
        for k in range(g.dim):
            rows.append(tuple(g.structure[i][j][k] for i in range(g.dim)))
    return kernel_basis(Matrix.from_rows(rows) if rows else Matrix.zeros(0, g.dim))


def rep_kernel(r: Representation, g: LieAlgebraData) -> list[Vector]:
    rows = []
    for p in range(r.dim_v):
        for q in range(r.dim_v):
            rows.append(tuple(r.action[i].entries[p][q] for i in range(g.dim)))
    return kernel_basis(Matrix.from_rows(rows))


def grading_element(t: FundamentalTriplet) -> Vector | None:
    """The unique central H0 with rho(H0) = 2*Id, None if absent.

    Raises AmbiguousGrading when several central solutions exist, since H0
    feeds sl2 certificates and an arbitrary choice would corrupt them.
    """
    z = center(t.g0)
    if not z:
        return None
    rows = []
    target = []
    two = Fraction(2)
    for p in range(t.dim_v):
        for q in range(t.dim_v):
            rows.append(tuple(t.rho.act(zv, basis_vector(t.dim_v, q))[p] for zv in z))
            target.append(two if p == q else ZERO)
    sys = Matrix.from_rows(rows)
    coeffs = solve(sys, target)
    if coeffs is None:
        return None
    if kernel_basis(sys):
        raise AmbiguousGrading("several central elements act as 2*Id")
    h = vzero(t.dim_g0)
    for c, zv in zip(coeffs, z):
        h = vadd(h, vscale(c, zv))
    return h


def killing_form(g: LieAlgebraData) -> Matrix:
    """Gram matrix of the Killing form tr(ad x ad y) on the basis."""
    ads = [g.ad_matrix(basis_vector(g.dim, i)) for i in range(g.dim)]
    n = g.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for a in range(n):
                for b in range(n):
                    x = ads[i].entries[a][b]
                    if x:
                        y = ads[j].entries[b][a]
                        if y:
                            acc += x * y
            row.append(acc)
        rows.append(row)
    return Matrix.from_rows(rows)


def direct_sum_with_zero_factor(
    t: FundamentalTriplet, extra: LieAlgebraData, extra_form: QuadraticForm
) -> FundamentalTriplet:
    """Adjoin an orthogonal ideal that acts by zero on V (a representation kernel)."""
    g = t.g0.direct_sum(extra)
    b = t.b0.direct_sum(extra_form)
    zero = Matrix.zeros(t.dim_v, t.dim_v)
    action = tuple(t.rho.action) + tuple(zero for _ in range(extra.dim))
    return FundamentalTriplet(g, b, Representation(t.dim_v, action))
