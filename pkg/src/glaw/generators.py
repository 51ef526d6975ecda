"""Built-in fundamental-triplet constructors for the standard example families.

All bases are deterministic: gl(n) uses elementary matrices E_ab in row-major
order, monomials of fixed degree are listed in descending lexicographic order
of their exponent vectors, and the block family lists its grading element
first, then the two traceless factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactla import (
    Matrix,
    Vector,
    ZERO,
    frac,
    kernel_basis,
    rank,
    solve,
    span_matrix,
)
from .liecore import (
    FundamentalTriplet,
    LieAlgebraData,
    QuadraticForm,
    Refusal,
    Representation,
)
from .sl2 import PolyInvariant, vector_field_apply

FORMS = ("trace", "sl-shifted", "g2")


@dataclass(frozen=True)
class MonomialBasis:
    """Exponent vectors of the degree-p monomials in n variables, graded-lex."""

    n: int
    p: int
    exponents: tuple[tuple[int, ...], ...]

    def index(self, exps) -> int:
        return self.exponents.index(tuple(exps))

    def factorials(self) -> tuple[int, ...]:
        return tuple(math.prod(math.factorial(e) for e in alpha) for alpha in self.exponents)


def monomial_basis(n: int, p: int) -> MonomialBasis:
    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for head in range(total, -1, -1):
            for rest in compositions(total - head, parts - 1):
                yield (head,) + rest

    exps = tuple(compositions(p, n))
    return MonomialBasis(n, p, exps)


def _gl_basis_matrices(n: int) -> list[Matrix]:
    out = []
    for a in range(n):
        for b in range(n):
            out.append(
                Matrix.from_rows([[1 if (i, j) == (a, b) else 0 for j in range(n)] for i in range(n)])
            )
    return out


def _gl_structure(n: int) -> LieAlgebraData:
    basis = _gl_basis_matrices(n)
    dim = n * n
    table = []
    for p in range(dim):
        row = []
        for q in range(dim):
            m = basis[p] @ basis[q] - basis[q] @ basis[p]
            row.append(tuple(m.entries[i][j] for i in range(n) for j in range(n)))
        table.append(tuple(row))
    return LieAlgebraData(dim, tuple(table))


def symplectic_form_gram(n: int, form) -> Matrix:
    rows = []
    for a in range(n):
        for b in range(n):
            row = []
            for c in range(n):
                for d in range(n):
                    tr_prod = Fraction(1) if (b == c and a == d) else ZERO
                    tr_sep = Fraction(1) if (a == b and c == d) else ZERO
                    if form == "trace":
                        row.append(tr_prod)
                    elif form == "sl-shifted":
                        row.append(tr_sep + tr_prod)
                    elif form == "g2":
                        row.append(3 * tr_prod - tr_sep)
                    else:
                        raise Refusal(f"unknown named form {form!r}")
            rows.append(row)
    return Matrix.from_rows(rows)


def gen_symplectic(n: int, p: int, lam, form="trace") -> FundamentalTriplet:
    """gl(n) acting on degree-p polynomials, the center rescaled to act by lam.

    The traceless part acts by the vector fields sum a_ij x_i d/dx_j; ``form``
    is one of "trace", "sl-shifted", "g2", or an explicit Gram matrix on the
    E_ab basis.

    The dual side is the abstract coordinate dual: the basis covector f_alpha
    pairs with x^alpha as 1.  Identifying covectors with dual-variable
    monomials acting as constant-coefficient differential operators rescales
    each f_alpha by the multi-factorial alpha! (see MonomialBasis.factorials);
    only tests rely on that identification, the core bracket does not.
    """
    lam = frac(lam)
    if n < 1 or p < 1:
        raise Refusal("n and p must be at least 1")
    if lam == 0:
        raise Refusal("lambda must be nonzero")
    mono = monomial_basis(n, p)
    dim_v = len(mono.exponents)
    index = {alpha: k for k, alpha in enumerate(mono.exponents)}
    shift = (lam - p) / n
    action = []
    for a in range(n):
        for b in range(n):
            cols = []
            for alpha in mono.exponents:
                col = [ZERO] * dim_v
                if alpha[b] > 0:
                    beta = list(alpha)
                    beta[b] -= 1
                    beta[a] += 1
                    col[index[tuple(beta)]] += Fraction(alpha[b])
                if a == b:
                    col[index[alpha]] += shift
                cols.append(tuple(col))
            action.append(Matrix.from_cols(cols, nrows=dim_v))
    if isinstance(form, Matrix):
        gram = form
        if not gram.is_symmetric() or gram.rows != n * n:
            raise Refusal("custom form must be a symmetric (n^2 x n^2) Gram matrix")
    else:
        gram = symplectic_form_gram(n, form)
    if rank(gram) != n * n:
        raise Refusal("the chosen form is degenerate on gl(n)")
    return FundamentalTriplet(_gl_structure(n), QuadraticForm(gram), Representation(dim_v, tuple(action)))


def _sl_basis_matrices(n: int) -> list[Matrix]:
    out = []
    for a in range(n):
        for b in range(n):
            if a != b:
                out.append(
                    Matrix.from_rows(
                        [[1 if (i, j) == (a, b) else 0 for j in range(n)] for i in range(n)]
                    )
                )
    for i in range(n - 1):
        out.append(
            Matrix.from_rows(
                [
                    [
                        (1 if (r, c) == (i, i) else -1 if (r, c) == (i + 1, i + 1) else 0)
                        for c in range(n)
                    ]
                    for r in range(n)
                ]
            )
        )
    return out


def gen_glblock(n: int, lam1, lam2) -> FundamentalTriplet:
    """Two gl(n) blocks with joint trace zero acting on n x n matrices by
    (A,B).X = AX - XB, with the block-scaled trace form."""
    lam1, lam2 = frac(lam1), frac(lam2)
    if lam1 == 0 or lam2 == 0 or lam1 + lam2 == 0:
        raise Refusal("the block form needs lam1, lam2 and lam1+lam2 nonzero")
    ident = Matrix.identity(n)
    zero = Matrix.zeros(n, n)
    pairs: list[tuple[Matrix, Matrix]] = [(ident, -ident)]
    pairs += [(m, zero) for m in _sl_basis_matrices(n)]
    pairs += [(zero, m) for m in _sl_basis_matrices(n)]
    dim = len(pairs)

    def flatten(pair: tuple[Matrix, Matrix]) -> Vector:
        a, b = pair
        return tuple(a.entries[i][j] for i in range(n) for j in range(n)) + tuple(
            b.entries[i][j] for i in range(n) for j in range(n)
        )

    basis_m = Matrix.from_cols([flatten(p) for p in pairs], nrows=2 * n * n)
    table = []
    for p in range(dim):
        row = []
        for q in range(dim):
            ap, bp = pairs[p]
            aq, bq = pairs[q]
            br = (ap @ aq - aq @ ap, bp @ bq - bq @ bp)
            coords = solve(basis_m, flatten(br))
            if coords is None:
                raise Refusal("bracket escaped the block subalgebra; internal error")
            row.append(coords)
        table.append(tuple(row))
    g0 = LieAlgebraData(dim, tuple(table))

    def tr(m: Matrix) -> Fraction:
        return sum((m.entries[i][i] for i in range(n)), ZERO)

    gram = Matrix.from_rows(
        [
            [lam1 * tr(pairs[p][0] @ pairs[q][0]) + lam2 * tr(pairs[p][1] @ pairs[q][1]) for q in range(dim)]
            for p in range(dim)
        ]
    )
    dim_v = n * n
    action = []
    for ap, bp in pairs:
        cols = []
        for i in range(n):
            for j in range(n):
                x = Matrix.from_rows([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)])
                res = ap @ x - x @ bp
                cols.append(tuple(res.entries[r][c] for r in range(n) for c in range(n)))
        action.append(Matrix.from_cols(cols, nrows=dim_v))
    return FundamentalTriplet(g0, QuadraticForm(gram), Representation(dim_v, tuple(action)))


def find_symmetrizer(cartan: Matrix) -> Vector:
    """Positive diagonal D with A*D symmetric, by propagation along edges."""
    n = cartan.rows
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j:
                    continue
                aij, aji = cartan.entries[i][j], cartan.entries[j][i]
                if (aij == 0) != (aji == 0):
                    raise Refusal("not symmetrizable: zero pattern is not symmetric")
                if aij == 0:
                    continue
                expected = d[i] * aji / aij
                if d[j] is None:
                    d[j] = expected
                    stack.append(j)
                elif d[j] != expected:
                    raise Refusal("not symmetrizable: inconsistent scaling around a cycle")
    return tuple(x for x in d)


def gen_principal(cartan, symmetrizer=None) -> FundamentalTriplet:
    """Abelian Cartan factor with the diagonal weight action of an invertible
    symmetrizable matrix; growth reproduces the root-height dimensions.

    The Gram matrix is A*D (symmetric exactly when D symmetrizes A), which
    makes each [e_i, f_i] proportional to the i-th coroot.
    """
    a = cartan if isinstance(cartan, Matrix) else Matrix.from_rows(cartan)
    if a.rows != a.cols:
        raise Refusal("the matrix must be square")
    n = a.rows
    if symmetrizer is None:
        d = find_symmetrizer(a)
    else:
        d = tuple(frac(x) for x in symmetrizer)
        if len(d) != n or any(x == 0 for x in d):
            raise Refusal("the symmetrizer must be a nonzero diagonal of the right size")
    gram = a @ Matrix.from_rows([[d[j] if i == j else 0 for j in range(n)] for i in range(n)])
    if not gram.is_symmetric():
        raise Refusal("the diagonal does not symmetrize the matrix")
    if rank(a) != n:
        raise Refusal("the matrix must be invertible for the Cartan factor to suffice")
    g0 = LieAlgebraData.abelian(n)
    action = tuple(
        Matrix.from_rows([[a.entries[i][j] if j == k else 0 for k in range(n)] for j in range(n)])
        for i in range(n)
    )
    return FundamentalTriplet(g0, QuadraticForm(gram), Representation(n, action))


def gen_with_trivial_summand(base: FundamentalTriplet, k: int) -> FundamentalTriplet:
    """Append a k-dimensional summand on which everything acts by zero."""
    if k == 0:
        return base
    dv = base.dim_v + k
    action = []
    for m in base.rho.action:
        rows = [list(m.entries[i]) + [ZERO] * k for i in range(base.dim_v)]
        rows += [[ZERO] * dv for _ in range(k)]
        action.append(Matrix.from_rows(rows))
    return FundamentalTriplet(base.g0, base.b0, Representation(dv, tuple(action)))


def stabilizer_of_poly(n: int, p: PolyInvariant) -> list[Vector]:
    """Basis of the gl(n) elements whose vector field kills the polynomial."""
    if p.is_zero():
        raise Refusal("the zero polynomial has full stabilizer; supply a nonzero one")
    if p.nvars != n:
        raise Refusal("variable count does not match n")
    target = monomial_basis(n, p.degree())
    index = {alpha: k for k, alpha in enumerate(target.exponents)}
    basis = _gl_basis_matrices(n)
    cols = []
    for u in basis:
        res = vector_field_apply(p, u)
        col = [ZERO] * len(target.exponents)
        for e, c in res.terms:
            col[index[e]] = c
        cols.append(tuple(col))
    return kernel_basis(Matrix.from_cols(cols, nrows=len(target.exponents)))


def gen_stabilizer_triplet(p: PolyInvariant, center_scale) -> FundamentalTriplet:
    """The scalars plus the stabilizer of a polynomial, acting on the variable
    space itself, the identity rescaled to act by center_scale."""
    center_scale = frac(center_scale)
    if center_scale == 0:
        raise Refusal("the center must act nontrivially")
    n = p.nvars
    stab = stabilizer_of_poly(n, p)
    mats = [Matrix.identity(n)] + [
        Matrix.from_rows([[v[a * n + b] for b in range(n)] for a in range(n)]) for v in stab
    ]
    dim = len(mats)

    def flatten(m: Matrix) -> Vector:
        return tuple(m.entries[i][j] for i in range(n) for j in range(n))

    basis_m = span_matrix([flatten(m) for m in mats], n * n)
    if rank(basis_m) != dim:
        raise Refusal("identity lies in the stabilizer; the family does not apply")
    table = []
    for q1 in range(dim):
        row = []
        for q2 in range(dim):
            br = mats[q1] @ mats[q2] - mats[q2] @ mats[q1]
            coords = solve(basis_m, flatten(br))
            if coords is None:
                raise Refusal("the stabilizer is not closed under the bracket; internal error")
            row.append(coords)
        table.append(tuple(row))
    g0 = LieAlgebraData(dim, tuple(table))
    gram = Matrix.from_rows(
        [
            [
                sum(((mats[q1] @ mats[q2]).entries[i][i] for i in range(n)), ZERO)
                for q2 in range(dim)
            ]
            for q1 in range(dim)
        ]
    )
    if rank(gram) != dim:
        raise Refusal("the trace form is degenerate on this stabilizer family")
    action = [Matrix.identity(n).scale(center_scale)] + [
        mats[q] for q in range(1, dim)
    ]
    return FundamentalTriplet(g0, QuadraticForm(gram), Representation(n, tuple(action)))
