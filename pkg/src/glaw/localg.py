"""The local three-piece algebra V* + g0 + V built from a fundamental triplet.

The degree-(1,-1) bracket [X,Y] is the unique g0 element with
B0([X,Y],U) = Y(rho(U)X); it is produced by one Gram solve per basis pair and
cached in a table.  Sign conventions, fixed once: [Y,X] = -[X,Y]; the table
always stores [X,Y] with the V side first; [U,Y] is the contragredient action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactla import (
    Matrix,
    Vector,
    ZERO,
    hstack,
    in_span,
    inverse,
    kernel_basis,
    rank,
    solve,
    span_matrix,
    vadd,
    vdot,
    vis_zero,
    vneg,
    vscale,
    vzero,
)
from .liecore import (
    FundamentalTriplet,
    LieAlgebraData,
    QuadraticForm,
    Refusal,
    Representation,
    basis_vector,
    center,
    dual_rep,
    grading_element,
    rep_kernel,
    AmbiguousGrading,
)


@dataclass(frozen=True)
class LocalAlgebra:
    triplet: FundamentalTriplet
    dual_action: Representation
    xy_table: tuple[tuple[Vector, ...], ...]  # [i over V][j over V*] -> g0 vector
    gram_inverse: Matrix

    @property
    def dim_g0(self) -> int:
        return self.triplet.dim_g0

    @property
    def dim_v(self) -> int:
        return self.triplet.dim_v

    def act_v(self, u: Vector, x: Vector) -> Vector:
        return self.triplet.rho.act(u, x)

    def act_v_dual(self, u: Vector, y: Vector) -> Vector:
        return self.dual_action.act(u, y)

    def bracket_xy(self, x: Vector, y: Vector) -> Vector:
        out = vzero(self.dim_g0)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.xy_table[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                out = vadd(out, vscale(xi * yj, row[j]))
        return out

    def bracket_yx(self, y: Vector, x: Vector) -> Vector:
        return vneg(self.bracket_xy(x, y))


def build_local(t: FundamentalTriplet) -> LocalAlgebra:
    """Construct the local algebra; refuses a degenerate form.

    The mixed Jacobi identity [U,[X,Y]] = [[U,X],Y] + [X,[U,Y]] is re-verified
    exhaustively on basis triples as a post-check; failure means the input
    triplet was not valid.
    """
    g = t.b0.gram
    if rank(g) != t.dim_g0:
        raise Refusal("the invariant form is degenerate; no local bracket exists")
    g_inv = inverse(g)
    rho = t.rho
    dual = dual_rep(rho)
    table = []
    for i in range(t.dim_v):
        row = []
        for j in range(t.dim_v):
            rhs = tuple(rho.action[a].entries[j][i] for a in range(t.dim_g0))
            row.append(g_inv.matvec(rhs))
        table.append(tuple(row))
    local = LocalAlgebra(t, dual, tuple(table), g_inv)
    _check_mixed_jacobi(local)
    return local


def _check_mixed_jacobi(local: LocalAlgebra):
    t = local.triplet
    n, dv = t.dim_g0, t.dim_v
    for a in range(n):
        ea = basis_vector(n, a)
        for i in range(dv):
            xi = basis_vector(dv, i)
            for j in range(dv):
                yj = basis_vector(dv, j)
                lhs = t.g0.bracket(ea, local.xy_table[i][j])
                rhs = vadd(
                    local.bracket_xy(local.act_v(ea, xi), yj),
                    local.bracket_xy(xi, local.act_v_dual(ea, yj)),
                )
                if lhs != rhs:
                    raise Refusal(
                        f"mixed Jacobi identity fails at (g0={a}, V={i}, V*={j}); "
                        "the input triplet does not satisfy the construction hypotheses"
                    )


@dataclass(frozen=True)
class LocalForm:
    """Block description of the invariant form on V* + g0 + V.

    On g0 x g0 it is the triplet form, the (V, V*) pairing is the dual
    evaluation Y(X), and all cross blocks vanish.
    """

    local: LocalAlgebra

    def value(self, a: tuple[int, Vector], b: tuple[int, Vector]) -> Fraction:
        da, va = a
        db, vb = b
        if da + db != 0:
            return ZERO
        if da == 0:
            return self.local.triplet.b0.value(va, vb)
        x, y = (va, vb) if da == 1 else (vb, va)
        return vdot(x, y)


@dataclass(frozen=True)
class TransitivityReport:
    transitive: bool
    faithful: bool
    spans_v: bool
    spans_v_dual: bool
    via_grading_element: bool


def transitivity_check(L: LocalAlgebra) -> TransitivityReport:
    """Faithfulness plus the two span conditions; short-circuits when a
    grading element exists (then the span conditions hold automatically)."""
    t = L.triplet
    faithful = not rep_kernel(t.rho, t.g0)
    try:
        h0 = grading_element(t)
    except AmbiguousGrading:
        h0 = None
    if h0 is not None:
        return TransitivityReport(faithful, faithful, True, True, True)
    dv = t.dim_v
    cols_v = [t.rho.action[a].col(x) for a in range(t.dim_g0) for x in range(dv)]
    cols_w = [L.dual_action.action[a].col(x) for a in range(t.dim_g0) for x in range(dv)]
    spans_v = rank(span_matrix(cols_v, dv)) == dv
    spans_w = rank(span_matrix(cols_w, dv)) == dv
    return TransitivityReport(faithful and spans_v and spans_w, faithful, spans_v, spans_w, False)


def _component_change_of_basis(t: FundamentalTriplet, ideal_bases: list[list[Vector]]) -> Matrix:
    n = t.dim_g0
    all_cols = [v for basis in ideal_bases for v in basis]
    if len(all_cols) != n:
        raise Refusal("ideal bases do not add up to the dimension of g0")
    m = span_matrix(all_cols, n)
    if rank(m) != n:
        raise Refusal("ideal bases are not linearly independent")
    return m


def _check_orthogonal_ideals(t: FundamentalTriplet, ideal_bases: list[list[Vector]]):
    n = t.dim_g0
    for basis in ideal_bases:
        for w in basis:
            for a in range(n):
                if not in_span(t.g0.bracket(basis_vector(n, a), w), basis):
                    raise Refusal("a listed subspace is not an ideal of g0")
    for p in range(len(ideal_bases)):
        for q in range(p + 1, len(ideal_bases)):
            for u in ideal_bases[p]:
                for v in ideal_bases[q]:
                    if t.b0.value(u, v) != 0:
                        raise Refusal("the listed ideals are not mutually orthogonal")


def scale_by_components(
    t: FundamentalTriplet, ideal_bases: list[list[Vector]], lambdas: list[Fraction], u: Vector
) -> Vector:
    """Scale the component of u in the p-th ideal by lambdas[p]."""
    m = _component_change_of_basis(t, ideal_bases)
    coords = solve(m, u)
    scaled = []
    pos = 0
    for basis, lam in zip(ideal_bases, lambdas, strict=True):
        scaled.extend(lam * c for c in coords[pos : pos + len(basis)])
        pos += len(basis)
    return m.matvec(scaled)


def deform_form(
    t: FundamentalTriplet, ideal_bases: list[list[Vector]], lambdas: list[Fraction]
) -> FundamentalTriplet:
    """Replace B0 by the direct sum of lambda_p * B0 restricted to each ideal."""
    if len(ideal_bases) != len(lambdas):
        raise Refusal("one scale per ideal is required")
    if any(lam == 0 for lam in lambdas):
        raise Refusal("zero scales make the deformed form degenerate")
    _check_orthogonal_ideals(t, ideal_bases)
    m = _component_change_of_basis(t, ideal_bases)
    m_inv = inverse(m)
    g_t = m.transpose() @ t.b0.gram @ m
    scaled_rows = []
    pos = 0
    for basis, lam in zip(ideal_bases, lambdas, strict=True):
        for r in range(pos, pos + len(basis)):
            scaled_rows.append([lam * x for x in g_t.entries[r]])
        pos += len(basis)
    # row scaling suffices: the blocks off the diagonal are zero by orthogonality
    g_scaled = Matrix.from_rows(scaled_rows)
    g_new = m_inv.transpose() @ g_scaled @ m_inv
    if rank(g_new) != t.dim_g0:
        raise Refusal("the deformed form is degenerate")
    return FundamentalTriplet(t.g0, QuadraticForm(g_new), t.rho)


def box_rescale_rep(
    t: FundamentalTriplet, center_part: list[Vector], gamma: Fraction
) -> FundamentalTriplet:
    """Rescale the action of a central orthogonal ideal Z by gamma (rho off Z kept).

    Post-verifies that the new degree-(1,-1) bracket is the old one with its
    Z-component scaled by gamma, on all basis pairs.
    """
    if gamma == 0:
        raise Refusal("gamma must be nonzero")
    n = t.dim_g0
    z_basis = list(center_part)
    zc = center(t.g0)
    for z in z_basis:
        if not in_span(z, zc):
            raise Refusal("the given subspace is not central")
    rows = [t.b0.gram.matvec(z) for z in z_basis]
    l_basis = kernel_basis(Matrix.from_rows(rows)) if rows else [
        basis_vector(n, i) for i in range(n)
    ]
    m = _component_change_of_basis(t, [z_basis, l_basis])
    for a in range(n):
        for w in l_basis:
            if not in_span(t.g0.bracket(basis_vector(n, a), w), l_basis):
                raise Refusal("the orthogonal complement of Z is not an ideal")
    m_inv = inverse(m)
    k = len(z_basis)
    new_action = []
    for a in range(n):
        coords = m_inv.matvec(basis_vector(n, a))
        z_part = vzero(n)
        for c, z in zip(coords[:k], z_basis):
            z_part = vadd(z_part, vscale(c, z))
        new_action.append(t.rho.matrix_of(basis_vector(n, a)) + t.rho.matrix_of(z_part).scale(gamma - 1))
    out = FundamentalTriplet(t.g0, t.b0, Representation(t.dim_v, tuple(new_action)))
    old_local = build_local(t)
    new_local = build_local(out)
    for i in range(t.dim_v):
        for j in range(t.dim_v):
            expected = _box_scale_vector(m, m_inv, k, gamma, old_local.xy_table[i][j])
            if new_local.xy_table[i][j] != expected:
                raise Refusal("rescaled bracket identity failed; Z and its complement do not split B0")
    return out


def _box_scale_vector(m: Matrix, m_inv: Matrix, k: int, gamma: Fraction, u: Vector) -> Vector:
    coords = list(m_inv.matvec(u))
    for i in range(k):
        coords[i] *= gamma
    return m.matvec(coords)


def theta_swap(t: FundamentalTriplet) -> FundamentalTriplet:
    """Swap the roles of V and V*: the triplet (g0, B0, rho*)."""
    return FundamentalTriplet(t.g0, t.b0, dual_rep(t.rho))


@dataclass(frozen=True)
class LocalIsomorphism:
    a_map: Matrix
    gamma: Matrix
    gamma_tilde: Matrix


@dataclass(frozen=True)
class IsoRefusal:
    condition: str
    witness: tuple


def triplet_iso_extend(
    t1: FundamentalTriplet, t2: FundamentalTriplet, a_map: Matrix, gamma: Matrix
) -> LocalIsomorphism | IsoRefusal:
    """Check the two isomorphism-of-triplets conditions and extend.

    On success returns (gamma_tilde = inverse transpose of gamma, A, gamma),
    post-verified to intertwine all three local brackets on basis pairs.  On
    failure reports the violated condition with a witness basis pair.
    """
    if a_map.rows != t2.dim_g0 or a_map.cols != t1.dim_g0 or t1.dim_g0 != t2.dim_g0:
        raise Refusal("A must be square of the common g0 dimension")
    if gamma.rows != t2.dim_v or gamma.cols != t1.dim_v or t1.dim_v != t2.dim_v:
        raise Refusal("gamma must be square of the common V dimension")
    n, dv = t1.dim_g0, t1.dim_v
    try:
        a_inv = inverse(a_map)
        del a_inv
    except ValueError:
        raise Refusal("A is not invertible") from None
    try:
        gamma_inv = inverse(gamma)
    except ValueError:
        raise Refusal("gamma is not invertible") from None
    for i in range(n):
        for j in range(i + 1, n):
            lhs = a_map.matvec(t1.g0.structure[i][j])
            rhs = t2.g0.bracket(a_map.col(i), a_map.col(j))
            if lhs != rhs:
                return IsoRefusal("lie-homomorphism", (i, j))
    pulled = a_map.transpose() @ t2.b0.gram @ a_map
    for i in range(n):
        for j in range(n):
            if pulled.entries[i][j] != t1.b0.gram.entries[i][j]:
                return IsoRefusal("form-isometry", (i, j))
    for a in range(n):
        lhs = t2.rho.matrix_of(a_map.col(a)) @ gamma
        rhs = gamma @ t1.rho.action[a]
        if lhs.entries != rhs.entries:
            return IsoRefusal("representation-intertwiner", (a,))
    gamma_tilde = gamma_inv.transpose()
    # post-verification of the full local criterion on basis elements
    l1, l2 = build_local(t1), build_local(t2)
    d1, d2 = dual_rep(t1.rho), dual_rep(t2.rho)
    for a in range(n):
        lhs = d2.matrix_of(a_map.col(a)) @ gamma_tilde
        rhs = gamma_tilde @ d1.action[a]
        if lhs.entries != rhs.entries:
            raise Refusal("dual intertwining failed after extension; inconsistent input data")
    for i in range(dv):
        for j in range(dv):
            lhs = a_map.matvec(l1.xy_table[i][j])
            rhs = l2.bracket_xy(gamma.col(i), gamma_tilde.col(j))
            if lhs != rhs:
                raise Refusal("degree-(1,-1) bracket not preserved; inconsistent input data")
    return LocalIsomorphism(a_map, gamma, gamma_tilde)


def local_iso_check(
    t1: FundamentalTriplet,
    t2: FundamentalTriplet,
    gamma_tilde: Matrix,
    a_map: Matrix,
    gamma: Matrix,
) -> LocalIsomorphism | IsoRefusal:
    """General criterion for (gamma_tilde, A, gamma) to be a local isomorphism.

    Unlike triplet_iso_extend, gamma_tilde is caller-chosen, which admits the
    non-isometric scaling maps between a form and its multiples.
    """
    n, dv = t1.dim_g0, t1.dim_v
    if a_map.rows != n or gamma.rows != dv or gamma_tilde.rows != dv:
        raise Refusal("maps must match the common dimensions")
    for m in (a_map, gamma, gamma_tilde):
        try:
            inverse(m)
        except ValueError:
            raise Refusal("all three maps must be invertible") from None
    for i in range(n):
        for j in range(i + 1, n):
            if a_map.matvec(t1.g0.structure[i][j]) != t2.g0.bracket(a_map.col(i), a_map.col(j)):
                return IsoRefusal("lie-homomorphism", (i, j))
    d1, d2 = dual_rep(t1.rho), dual_rep(t2.rho)
    for a in range(n):
        col = a_map.col(a)
        if (t2.rho.matrix_of(col) @ gamma).entries != (gamma @ t1.rho.action[a]).entries:
            return IsoRefusal("v-intertwiner", (a,))
        if (d2.matrix_of(col) @ gamma_tilde).entries != (gamma_tilde @ d1.action[a]).entries:
            return IsoRefusal("v-dual-intertwiner", (a,))
    l1 = build_local(t1)
    twist = gamma_tilde.transpose() @ gamma
    for i in range(dv):
        for j in range(dv):
            lhs_vec = a_map.matvec(l1.xy_table[i][j])
            for u in range(n):
                lhs = t2.b0.value(lhs_vec, a_map.col(u))
                rhs = t1.b0.value(l1.bracket_xy(twist.col(i), basis_vector(dv, j)), basis_vector(n, u))
                if lhs != rhs:
                    return IsoRefusal("bracket-form-compatibility", (i, j, u))
    return LocalIsomorphism(a_map, gamma, gamma_tilde)


@dataclass(frozen=True)
class ReductionResult:
    transitive_part: FundamentalTriplet
    v0: tuple[Vector, ...]
    v1: tuple[Vector, ...]
    g0_kernel: tuple[Vector, ...]
    g0_faithful: tuple[Vector, ...]


def reduce_triplet(t: FundamentalTriplet, assert_completely_reducible: bool) -> ReductionResult:
    """Split off the representation kernel and the trivial isotypic component.

    Reductivity of g0 is the caller's assertion; every consequence actually
    used is verified (orthogonal ideal split, V0 + V1 = V, nondegeneracy of
    the restricted forms).
    """
    if not assert_completely_reducible:
        raise Refusal("reduction requires the caller to assert complete reducibility")
    n, dv = t.dim_g0, t.dim_v
    k_basis = rep_kernel(t.rho, t.g0)
    zc = center(t.g0)
    z_and_k = _intersect_spans(zc, k_basis, n)
    if z_and_k:
        mzk = span_matrix(z_and_k, n)
        if rank(mzk.transpose() @ t.b0.gram @ mzk) != len(z_and_k):
            raise Refusal("B0 restricted to the central part of the kernel is degenerate")
    rows = [t.b0.gram.matvec(kv) for kv in k_basis]
    f_basis = kernel_basis(Matrix.from_rows(rows)) if rows else [basis_vector(n, i) for i in range(n)]
    if len(f_basis) + len(k_basis) != n or rank(span_matrix(list(k_basis) + f_basis, n)) != n:
        raise Refusal("the orthogonal complement of the kernel does not complement it")
    for a in range(n):
        for w in f_basis:
            if not in_span(t.g0.bracket(basis_vector(n, a), w), f_basis):
                raise Refusal("the orthogonal complement of the kernel is not an ideal")
    v0 = _trivial_component(t)
    img_cols = [t.rho.action[a].col(x) for a in range(n) for x in range(dv)]
    from .exactla import image_basis as _image_basis

    v1 = list(_image_basis(span_matrix(img_cols, dv)).basis)
    if len(v0) + len(v1) != dv or rank(span_matrix(v0 + v1, dv)) != dv:
        raise Refusal("reducibility check failed: the trivial part does not complement the span of g0.V")
    if not k_basis and not v0:
        return ReductionResult(t, (), tuple(basis_vector(dv, i) for i in range(dv)), (), tuple(f_basis))
    f_m = span_matrix(f_basis, n)
    nf = len(f_basis)
    table = []
    for p in range(nf):
        row = []
        for q in range(nf):
            br = t.g0.bracket(f_basis[p], f_basis[q])
            coords = solve(f_m, br)
            if coords is None:
                raise Refusal("bracket left the faithful ideal; inconsistent data")
            row.append(coords)
        table.append(tuple(row))
    g0f = LieAlgebraData(nf, tuple(table))
    gram_f = f_m.transpose() @ t.b0.gram @ f_m
    if rank(gram_f) != nf:
        raise Refusal("B0 restricted to the faithful ideal is degenerate")
    v1_m = span_matrix(v1, dv)
    nv1 = len(v1)
    action = []
    for p in range(nf):
        cols = []
        for m in range(nv1):
            img = t.rho.act(f_basis[p], v1[m])
            coords = solve(v1_m, img)
            if coords is None:
                raise Refusal("the span of g0.V is not rho-stable; inconsistent data")
            cols.append(coords)
        action.append(Matrix.from_cols(cols, nrows=nv1))
    part = FundamentalTriplet(g0f, QuadraticForm(gram_f), Representation(nv1, tuple(action)))
    return ReductionResult(part, tuple(v0), tuple(v1), tuple(k_basis), tuple(f_basis))


def _trivial_component(t: FundamentalTriplet) -> list[Vector]:
    rows = []
    for a in range(t.dim_g0):
        rows.extend(t.rho.action[a].entries)
    return kernel_basis(Matrix.from_rows(rows))


def _intersect_spans(a: list[Vector], b: list[Vector], dim: int) -> list[Vector]:
    if not a or not b:
        return []
    m = hstack([span_matrix(a, dim), span_matrix(list(vneg(v) for v in b), dim)])
    out = []
    for kv in kernel_basis(m):
        vec = vzero(dim)
        for c, av in zip(kv[: len(a)], a):
            vec = vadd(vec, vscale(c, av))
        if not vis_zero(vec):
            out.append(vec)
    return out
