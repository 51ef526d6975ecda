"""Degree-by-degree growth of the minimal graded algebra over a local part.

The positive part is grown as the image of the map
Phi(x (x) u)(y) = [[y,x],u] + [x,[y,u]] from V (x) g_n into Hom(V*, g_n):
minimality makes [g_1, g_n] span g_{n+1} and transitivity makes the kernel of
lowering exactly the excess, so no free-algebra scaffolding is needed.  The
negative side is the positive side of the swapped triplet (the swap fixes all
elements).  Bases of each new degree are pivot columns under the deterministic
elimination of exactla, so reruns are bit-identical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactla import (
    Matrix,
    Vector,
    ZERO,
    image_basis,
    in_span,
    kernel_basis,
    rank,
    solve,
    span_matrix,
    vadd,
    vis_zero,
    vneg,
    vscale,
    vzero,
)
from .liecore import (
    FundamentalTriplet,
    LieAlgebraData,
    Refusal,
    TransitivityRequired,
    basis_vector,
    center as algebra_center,
    killing_form,
)
from .localg import LocalAlgebra, build_local, reduce_triplet, theta_swap, transitivity_check

POSITIVE = "pos"
NEGATIVE = "neg"


@dataclass(frozen=True)
class GradedComponent:
    """One graded piece with its g0 action and the maps tying it to its neighbours.

    ``lower[j]`` is ad of the j-th degree-(-1) generator, a (prev_dim x dim)
    matrix (prev_dim is dim g0 at degree 1).  ``provenance`` lists, for degree
    >= 2, the pivot tensors (generator index, previous-degree index) whose
    classes form the basis; ``tensor_coords`` expresses every tensor class in
    that basis.
    """

    degree: int
    dim: int
    act0: tuple[Matrix, ...]
    lower: tuple[Matrix, ...]
    provenance: tuple[tuple[int, int], ...]
    tensor_coords: Matrix | None


@dataclass(frozen=True)
class Tower:
    local: LocalAlgebra
    side: str
    growth_local: LocalAlgebra
    components: tuple[GradedComponent, ...]
    phis: tuple[Matrix, ...]  # phis[n-1] built candidates for degree n+1
    terminated: bool

    def dims(self) -> list[int]:
        return [c.dim for c in self.components]

    def dim_at(self, n: int) -> int:
        if n < 1:
            raise ValueError("degrees start at 1")
        if n <= len(self.components):
            return self.components[n - 1].dim
        if self.terminated:
            return 0
        raise Refusal(f"degree {n} exceeds the grown budget and the tower has not terminated")

    def component(self, n: int) -> GradedComponent:
        return self.components[n - 1]

    @property
    def top_degree(self) -> int:
        return max((n for n in range(1, len(self.components) + 1) if self.component(n).dim > 0), default=0)


def grow(L: LocalAlgebra, side: str, max_degree: int) -> Tower:
    """Grow one side of the minimal graded algebra up to max_degree.

    Raises TransitivityRequired for a non-transitive local part (reduce the
    triplet first); stops early once a degree vanishes.
    """
    if side not in (POSITIVE, NEGATIVE):
        raise ValueError("side must be 'pos' or 'neg'")
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    report = transitivity_check(L)
    if not report.transitive:
        raise TransitivityRequired(
            "the local part is not transitive "
            f"(faithful={report.faithful}, spans_V={report.spans_v}, spans_V*={report.spans_v_dual}); "
            "reduce the triplet first"
        )
    growth = L if side == POSITIVE else build_local(theta_swap(L.triplet))
    t = growth.triplet
    dv, n0 = t.dim_v, t.dim_g0
    lower1 = tuple(
        Matrix.from_cols([vneg(growth.xy_table[i][j]) for i in range(dv)], nrows=n0) for j in range(dv)
    )
    comps = [
        GradedComponent(1 if side == POSITIVE else -1, dv, tuple(t.rho.action), lower1, (), None)
    ]
    phis: list[Matrix] = []
    terminated = False
    while len(comps) < max_degree:
        n = len(comps)
        cur = comps[-1]
        if cur.dim == 0:
            terminated = True
            break
        phi = _growth_map(growth, comps, n)
        phis.append(phi)
        ib = image_basis(phi)
        new_dim = len(ib.pivots)
        sign = 1 if side == POSITIVE else -1
        if new_dim == 0:
            comps.append(GradedComponent(sign * (n + 1), 0, tuple(), tuple(), (), None))
            terminated = True
            break
        provenance = tuple((p // cur.dim, p % cur.dim) for p in ib.pivots)
        tensor_coords = Matrix.from_cols(list(ib.coords), nrows=new_dim)
        lower = tuple(
            Matrix.from_rows(
                [[ib.basis[tcol][j * cur.dim + r] for tcol in range(new_dim)] for r in range(cur.dim)]
            )
            for j in range(dv)
        )
        act0 = _lifted_action(growth, comps, provenance, tensor_coords, n)
        comps.append(GradedComponent(sign * (n + 1), new_dim, act0, lower, provenance, tensor_coords))
    if comps and comps[-1].dim == 0:
        terminated = True
    return Tower(L, side, growth, tuple(comps), tuple(phis), terminated)


def _raise_into(growth: LocalAlgebra, comps: list[GradedComponent], n: int, gen: int, w: Vector) -> Vector:
    """[x_gen, w] for w in degree n-1 (degree 0 means g0 itself)."""
    if n == 1:
        return vneg(growth.act_v(w, basis_vector(growth.dim_v, gen)))
    comp = comps[n - 1]
    prev_dim = comps[n - 2].dim
    out = vzero(comp.dim)
    for m, wm in enumerate(w):
        if wm == 0:
            continue
        out = vadd(out, vscale(wm, comp.tensor_coords.col(gen * prev_dim + m)))
    return out


def _growth_map(growth: LocalAlgebra, comps: list[GradedComponent], n: int) -> Matrix:
    cur = comps[n - 1]
    dv = growth.dim_v
    cols = []
    for i in range(dv):
        for l in range(cur.dim):
            u = basis_vector(cur.dim, l)
            blocks: list[Fraction] = []
            for j in range(dv):
                br = vneg(growth.xy_table[i][j])  # [f_j, x_i]
                part = vzero(cur.dim)
                for a, ca in enumerate(br):
                    if ca == 0:
                        continue
                    part = vadd(part, vscale(ca, cur.act0[a].col(l)))
                w = cur.lower[j].col(l)
                part = vadd(part, _raise_into(growth, comps, n, i, w))
                blocks.extend(part)
            cols.append(tuple(blocks))
    return Matrix.from_cols(cols, nrows=dv * cur.dim)


def _lifted_action(
    growth: LocalAlgebra,
    comps: list[GradedComponent],
    provenance: tuple[tuple[int, int], ...],
    tensor_coords: Matrix,
    n: int,
) -> tuple[Matrix, ...]:
    cur = comps[n - 1]
    dv, n0 = growth.dim_v, growth.dim_g0
    new_dim = len(provenance)
    out = []
    for a in range(n0):
        rho_a = growth.triplet.rho.action[a]
        cols = []
        for (i_t, l_t) in provenance:
            col = vzero(new_dim)
            for i2 in range(dv):
                c = rho_a.entries[i2][i_t]
                if c:
                    col = vadd(col, vscale(c, tensor_coords.col(i2 * cur.dim + l_t)))
            acted = cur.act0[a].col(l_t)
            for m, cm in enumerate(acted):
                if cm:
                    col = vadd(col, vscale(cm, tensor_coords.col(i_t * cur.dim + m)))
            cols.append(col)
        out.append(Matrix.from_cols(cols, nrows=new_dim))
    return tuple(out)


# ---------------------------------------------------------------------------
# extended invariant form: degree pairings


def pairing(tp: Tower, tn: Tower, n: int) -> Matrix:
    """Pairing matrix of g_n against g_{-n} under the extended form.

    Degree 0 is the triplet Gram; degree 1 is the dual-basis pairing Y(X);
    higher degrees unfold one lowering at a time through the stored maps.
    """
    if tp.side != POSITIVE or tn.side != NEGATIVE:
        raise Refusal("pairing expects a positive and a negative tower, in that order")
    if n == 0:
        return tp.local.triplet.b0.gram
    return pairing_table(tp, tn, n)[n - 1]


def pairing_table(tp: Tower, tn: Tower, up_to: int) -> list[Matrix]:
    tp.dim_at(up_to)
    tn.dim_at(up_to)
    tables = [Matrix.identity(tp.local.dim_v)]
    for k in range(2, up_to + 1):
        dp, dn = tp.dim_at(k), tn.dim_at(k)
        prev = tables[-1]
        cols = []
        for tcol in range(dn):
            j, m = tn.component(k).provenance[tcol]
            lw = tp.component(k).lower[j]
            col = []
            for s in range(dp):
                acc = ZERO
                for r in range(tp.dim_at(k - 1)):
                    x = lw.entries[r][s]
                    if x:
                        acc -= x * prev.entries[r][m]
                col.append(acc)
            cols.append(tuple(col))
        tables.append(Matrix.from_cols(cols, nrows=dp) if dn else Matrix.zeros(dp, 0))
    return tables


def candidate_pairing_rank(tp: Tower, tn: Tower, n: int) -> int:
    """Rank of the pairing between all degree-(n+1) candidates on both sides.

    This is the form-radical route to dim g_{n+1}: candidates pair through
    B([x,u],[y,v]) = -B(Phi(x(x)u)(y), v), and the radical is exactly the
    growth kernel.
    """
    if n < 1 or n >= len(tp.components) or n >= len(tn.components):
        raise Refusal("towers are too short for this candidate degree")
    phi_p = tp.phis[n - 1]
    dim_n = tp.dim_at(n)
    dv = tp.local.dim_v
    pair_n = pairing(tp, tn, n)
    rows = []
    for c in range(phi_p.cols):
        col = phi_p.col(c)
        row = []
        for j in range(dv):
            for m in range(tn.dim_at(n)):
                acc = ZERO
                for r in range(dim_n):
                    x = col[j * dim_n + r]
                    if x:
                        acc -= x * pair_n.entries[r][m]
                row.append(acc)
        rows.append(tuple(row))
    return rank(Matrix.from_rows(rows)) if rows else 0


# ---------------------------------------------------------------------------
# universal vanishing identities


@dataclass(frozen=True)
class PnExpansion:
    n: int
    terms: tuple[tuple, ...]

    def __str__(self) -> str:
        return " + ".join(term_to_str(t) for t in self.terms)


def term_to_str(ast) -> str:
    kind = ast[0]
    if kind == "X":
        return f"X{ast[1] + 1}"
    if kind == "Y":
        return f"Y{ast[1] + 1}"
    return f"[{term_to_str(ast[1])},{term_to_str(ast[2])}]"


def _lower_symbolic(y_ast, word: tuple) -> list[tuple]:
    if len(word) == 2:
        a, b = word
        return [(("b", ("b", y_ast, a), b),), (("b", a, ("b", y_ast, b)),)]
    head, rest = word[0], word[1:]
    u = ("b", y_ast, head)
    out = [rest[:k] + (("b", u, rest[k]),) + rest[k + 1 :] for k in range(len(rest))]
    out.extend((head,) + w for w in _lower_symbolic(y_ast, rest))
    return out


def pn_expand(n: int) -> PnExpansion:
    """Evaluable expansion of the degree-n vanishing identity, 2 <= n <= 5.

    Every bracket node of every term is defined in a local algebra when the
    X variables sit in degree 1 and the Y variables in degree -1.
    """
    if not 2 <= n <= 5:
        raise Refusal("the expansion is supported for 2 <= n <= 5")
    words = [tuple(("X", i) for i in range(n))]
    for j in reversed(range(n - 1)):
        words = [w2 for w in words for w2 in _lower_symbolic(("Y", j), w)]
    return PnExpansion(n, tuple(w[0] for w in words))


def eval_term(L: LocalAlgebra, ast, xs: list[Vector], ys: list[Vector]) -> tuple[int, Vector]:
    kind = ast[0]
    if kind == "X":
        return 1, xs[ast[1]]
    if kind == "Y":
        return -1, ys[ast[1]]
    da, va = eval_term(L, ast[1], xs, ys)
    db, vb = eval_term(L, ast[2], xs, ys)
    if da == 0 and db == 1:
        return 1, L.act_v(va, vb)
    if da == 1 and db == 0:
        return 1, vneg(L.act_v(vb, va))
    if da == 0 and db == -1:
        return -1, L.act_v_dual(va, vb)
    if da == -1 and db == 0:
        return -1, vneg(L.act_v_dual(vb, va))
    if da == 1 and db == -1:
        return 0, L.bracket_xy(va, vb)
    if da == -1 and db == 1:
        return 0, L.bracket_yx(va, vb)
    if da == 0 and db == 0:
        return 0, L.triplet.g0.bracket(va, vb)
    raise Refusal(f"bracket of degrees {da} and {db} is not defined in the local algebra")


def _lower_word(L: LocalAlgebra, y: Vector, word: tuple[Vector, ...]) -> list[tuple[Vector, ...]]:
    if len(word) == 2:
        first = L.act_v(L.bracket_yx(y, word[0]), word[1])
        second = vneg(L.act_v(L.bracket_yx(y, word[1]), word[0]))
        return [(first,), (second,)]
    head, rest = word[0], word[1:]
    u = L.bracket_yx(y, head)
    out = [rest[:k] + (L.act_v(u, rest[k]),) + rest[k + 1 :] for k in range(len(rest))]
    out.extend((head,) + w for w in _lower_word(L, y, rest))
    return out


def pn_evaluate(L: LocalAlgebra, ys: list[Vector], xs: list[Vector]) -> Vector:
    """Value in V of the degree-n identity on concrete arguments.

    ys are the n-1 degree-(-1) slots in their printed order (the last one is
    applied first), xs the n degree-1 slots.
    """
    words = [tuple(xs)]
    for y in reversed(ys):
        words = [w2 for w in words for w2 in _lower_word(L, y, w)]
    out = vzero(L.dim_v)
    for w in words:
        out = vadd(out, w[0])
    return out


@dataclass(frozen=True)
class PnResult:
    n: int
    holds: bool
    witness: tuple | None
    value: Vector | None


def pn_check(L: LocalAlgebra, n: int) -> PnResult:
    """Does the degree-n identity hold on all basis tuples?  Multilinearity
    makes basis tuples sufficient.  Returns the first nonvanishing tuple."""
    if not 2 <= n <= 5:
        raise Refusal("the identity check is supported for 2 <= n <= 5")
    dv = L.dim_v
    basis = [basis_vector(dv, i) for i in range(dv)]
    for jx in itertools.product(range(dv), repeat=n - 1):
        ys = [basis[j] for j in jx]
        for ix in itertools.product(range(dv), repeat=n):
            xs = [basis[i] for i in ix]
            val = pn_evaluate(L, ys, xs)
            if not vis_zero(val):
                return PnResult(n, False, (tuple(jx), tuple(ix)), val)
    return PnResult(n, True, None, None)


# ---------------------------------------------------------------------------
# assembly of a terminated pair of towers into plain structure constants


@dataclass(frozen=True)
class AssembledAlgebra:
    algebra: LieAlgebraData
    degrees: tuple[int, ...]
    blocks: dict[int, tuple[int, int]]  # degree -> (offset, dim)

    def degree_basis(self, degree: int) -> list[int]:
        off, dim = self.blocks[degree]
        return list(range(off, off + dim))


class _Assembler:
    def __init__(self, tp: Tower, tn: Tower, L: LocalAlgebra):
        self.tp, self.tn, self.L = tp, tn, L
        self.t = L.triplet
        self.memo: dict[tuple[int, int, int, int], Vector] = {}

    def dim_of(self, d: int) -> int:
        if d == 0:
            return self.t.dim_g0
        return self.tp.dim_at(d) if d > 0 else self.tn.dim_at(-d)

    def act0(self, d: int, u: Vector, w: Vector) -> Vector:
        if d == 0:
            return self.t.g0.bracket(u, w)
        comp = self.tp.component(d) if d > 0 else self.tn.component(-d)
        out = vzero(comp.dim)
        for a, ua in enumerate(u):
            if ua == 0:
                continue
            out = vadd(out, vscale(ua, comp.act0[a].matvec(w)))
        return out

    def _gen_bracket(self, positive_gen: bool, gen_vec: Vector, d: int, w: Vector) -> Vector:
        """[g, w] for g a degree +1 (V) or -1 (V*) vector and w in degree d."""
        L = self.L
        if positive_gen:
            if d == 0:
                return vneg(L.act_v(w, gen_vec))
            if d >= 1:
                target = self.dim_of(d + 1)
                if target == 0:
                    return ()
                tower, idx = self.tp, d + 1
                out = vzero(target)
                comp = tower.component(idx)
                prev = tower.dim_at(d)
                for i, gi in enumerate(gen_vec):
                    if gi == 0:
                        continue
                    for m, wm in enumerate(w):
                        if wm == 0:
                            continue
                        out = vadd(out, vscale(gi * wm, comp.tensor_coords.col(i * prev + m)))
                return out
            # d <= -1: lower along the negative tower
            comp = self.tn.component(-d)
            out = vzero(self.dim_of(d + 1))
            for i, gi in enumerate(gen_vec):
                if gi == 0:
                    continue
                out = vadd(out, vscale(gi, comp.lower[i].matvec(w)))
            return out
        # generator in V*
        if d == 0:
            return vneg(L.act_v_dual(w, gen_vec))
        if d <= -1:
            target = self.dim_of(d - 1)
            if target == 0:
                return ()
            comp = self.tn.component(-d + 1)
            prev = self.tn.dim_at(-d)
            out = vzero(target)
            for j, gj in enumerate(gen_vec):
                if gj == 0:
                    continue
                for m, wm in enumerate(w):
                    if wm == 0:
                        continue
                    out = vadd(out, vscale(gj * wm, comp.tensor_coords.col(j * prev + m)))
            return out
        comp = self.tp.component(d)
        out = vzero(self.dim_of(d - 1))
        for j, gj in enumerate(gen_vec):
            if gj == 0:
                continue
            out = vadd(out, vscale(gj, comp.lower[j].matvec(w)))
        return out

    def bracket_vec(self, da: int, va: Vector, db: int, vb: Vector) -> Vector:
        target = self.dim_of(da + db)
        if target == 0:
            return ()
        if vis_zero(va) or vis_zero(vb):
            return vzero(target)
        out = vzero(target)
        for sa, ca in enumerate(va):
            if ca == 0:
                continue
            for sb, cb in enumerate(vb):
                if cb == 0:
                    continue
                out = vadd(out, vscale(ca * cb, self.bracket_basis(da, sa, db, sb)))
        return out

    def bracket_basis(self, da: int, sa: int, db: int, sb: int) -> Vector:
        key = (da, sa, db, sb)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        val = self._bracket_basis(da, sa, db, sb)
        self.memo[key] = val
        return val

    def _bracket_basis(self, da: int, sa: int, db: int, sb: int) -> Vector:
        dv = self.t.dim_v
        if abs(da) <= 1:
            ea = basis_vector(self.dim_of(da), sa)
            eb = basis_vector(self.dim_of(db), sb)
            if da == 0:
                return self.t.g0.bracket(ea, eb) if db == 0 else self.act0(db, ea, eb)
            if db == 0:
                return vneg(self.act0(da, eb, ea))
            if da == 1 and db == -1:
                return self.L.bracket_xy(ea, eb)
            if da == -1 and db == 1:
                return self.L.bracket_yx(ea, eb)
            # a generator against any other degree: stored raise/lower maps
            return self._gen_bracket(da == 1, ea, db, eb)
        if abs(db) <= 1:
            res = self.bracket_basis(db, sb, da, sa)
            return vneg(res) if res else res
        tower = self.tp if da > 0 else self.tn
        gen, prev_idx = tower.component(abs(da)).provenance[sa]
        gen_vec = basis_vector(dv, gen)
        positive_gen = da > 0
        d_prev = da - 1 if da > 0 else da + 1
        inner1 = self.bracket_basis(d_prev, prev_idx, db, sb)
        term1 = self._gen_bracket(positive_gen, gen_vec, d_prev + db, inner1) if inner1 else ()
        shift = db + 1 if positive_gen else db - 1
        eb = basis_vector(self.dim_of(db), sb)
        inner2 = self._gen_bracket(positive_gen, gen_vec, db, eb)
        prev_basis = basis_vector(self.dim_of(d_prev), prev_idx)
        term2 = self.bracket_vec(d_prev, prev_basis, shift, inner2) if inner2 else ()
        target = self.dim_of(da + db)
        out = vzero(target)
        if term1:
            out = vadd(out, term1)
        if term2:
            out = vadd(out, vneg(term2))
        return out


def assemble(tp: Tower, tn: Tower, L: LocalAlgebra) -> AssembledAlgebra:
    """Full structure constants of the direct sum of all grown degrees.

    Requires both towers terminated; cross brackets are reduced by the graded
    Jacobi identity to the stored raise/lower/action maps, memoized per basis
    pair.
    """
    if not (tp.terminated and tn.terminated):
        raise Refusal("assembly needs both towers terminated (a zero degree reached)")
    asm = _Assembler(tp, tn, L)
    degrees = [d for d in range(-tn.top_degree, tp.top_degree + 1) if asm.dim_of(d) > 0]
    blocks: dict[int, tuple[int, int]] = {}
    off = 0
    for d in degrees:
        blocks[d] = (off, asm.dim_of(d))
        off += asm.dim_of(d)
    total = off
    labels = []
    for d in degrees:
        labels.extend([d] * asm.dim_of(d))

    def embed(d: int, v: Vector) -> Vector:
        if not v:
            return vzero(total)
        o, _ = blocks[d]
        out = [ZERO] * total
        for k, x in enumerate(v):
            out[o + k] = x
        return tuple(out)

    table = [[vzero(total) for _ in range(total)] for _ in range(total)]
    for da in degrees:
        oa, na = blocks[da]
        for db in degrees:
            ob, nb = blocks[db]
            dres = da + db
            has_target = dres in blocks
            for sa in range(na):
                for sb in range(nb):
                    if not has_target:
                        continue
                    v = asm.bracket_basis(da, sa, db, sb)
                    if v:
                        table[oa + sa][ob + sb] = embed(dres, v)
    algebra = LieAlgebraData(total, tuple(tuple(row) for row in table))
    return AssembledAlgebra(algebra, tuple(labels), blocks)


def assemble_nontransitive(t: FundamentalTriplet, max_degree: int) -> AssembledAlgebra:
    """Assemble the minimal algebra of a non-transitive triplet.

    Splits off the trivial component and the representation kernel, grows the
    transitive part, and glues the pieces back with the zero brackets the
    reduction prescribes: [V0, V0*] = 0 and the kernel commutes with all of V.
    """
    red = reduce_triplet(t, assert_completely_reducible=True)
    part = red.transitive_part
    L = build_local(part)
    tp = grow(L, POSITIVE, max_degree)
    tn = grow(L, NEGATIVE, max_degree)
    core = assemble(tp, tn, L)
    k = len(red.v0)
    nk = len(red.g0_kernel)
    n_core = core.algebra.dim
    total = n_core + 2 * k + nk
    table = [[vzero(total) for _ in range(total)] for _ in range(total)]
    for i in range(n_core):
        for j in range(n_core):
            table[i][j] = core.algebra.structure[i][j] + vzero(2 * k + nk)
    kb = span_matrix(list(red.g0_kernel), t.dim_g0)
    for p in range(nk):
        for q in range(nk):
            br = t.g0.bracket(red.g0_kernel[p], red.g0_kernel[q])
            coords = solve(kb, br)
            if coords is None:
                raise Refusal("the kernel is not closed under the bracket; inconsistent data")
            vec = vzero(n_core + 2 * k) + coords
            table[n_core + 2 * k + p][n_core + 2 * k + q] = vec
    algebra = LieAlgebraData(total, tuple(tuple(row) for row in table))
    degrees = core.degrees + (1,) * k + (-1,) * k + (0,) * nk
    blocks = dict(core.blocks)
    return AssembledAlgebra(algebra, degrees, blocks)


# ---------------------------------------------------------------------------
# finiteness reporting and centralizers


@dataclass(frozen=True)
class FinitenessReport:
    dims_pos: tuple[int, ...]
    dims_neg: tuple[int, ...]
    terminated: bool
    advisory: str
    center_dim: int
    irreducible_components: int | None
    killing_nondegenerate: bool | None
    assembled_center_dim: int | None


def finiteness_report(
    L: LocalAlgebra,
    max_degree: int,
    completely_reducible: bool = False,
    irreducible_components: int | None = None,
) -> FinitenessReport:
    """Advisory finiteness analysis: growth observation, the center-dimension
    bound (caller supplies the irreducible count), and the semisimplicity
    consistency checks when the towers terminate."""
    tp = grow(L, POSITIVE, max_degree)
    tn = grow(L, NEGATIVE, max_degree)
    z = len(algebra_center(L.triplet.g0))
    terminated = tp.terminated and tn.terminated
    killing_ok = None
    asm_center = None
    if terminated:
        asm = assemble(tp, tn, L)
        killing_ok = rank(killing_form(asm.algebra)) == asm.algebra.dim
        asm_center = len(algebra_center(asm.algebra))
        advisory = "terminated: finite-dimensional minimal algebra"
    elif completely_reducible and irreducible_components is not None and z < irreducible_components:
        advisory = "infinite: the center is smaller than the number of irreducible components"
    else:
        advisory = f"not terminated within degree budget {max_degree}: infinite or larger than the budget"
    return FinitenessReport(
        tuple(tp.dims()),
        tuple(tn.dims()),
        terminated,
        advisory,
        z,
        irreducible_components,
        killing_ok,
        asm_center,
    )


def _check_subalgebra(g, sub: list[Vector]):
    for p in range(len(sub)):
        for q in range(len(sub)):
            if not in_span(g.bracket(sub[p], sub[q]), sub):
                raise Refusal("the given subspace is not closed under the bracket")


def centralizer_graded(
    tp: Tower, tn: Tower, L: LocalAlgebra, sub: list[Vector], max_degree: int
) -> dict[int, list[Vector]]:
    """Per-degree centralizer of a g0 subalgebra in the grown algebra."""
    t = L.triplet
    _check_subalgebra(t.g0, sub)
    out: dict[int, list[Vector]] = {}
    for d in range(-max_degree, max_degree + 1):
        if d == 0:
            rows = []
            for s in sub:
                for kcoord in range(t.dim_g0):
                    rows.append(
                        tuple(t.g0.bracket(basis_vector(t.dim_g0, a), s)[kcoord] for a in range(t.dim_g0))
                    )
            out[0] = kernel_basis(Matrix.from_rows(rows)) if rows else [
                basis_vector(t.dim_g0, a) for a in range(t.dim_g0)
            ]
            continue
        tower = tp if d > 0 else tn
        dim_d = tower.dim_at(abs(d))
        if dim_d == 0:
            out[d] = []
            continue
        comp = tower.component(abs(d))
        mats = []
        for s in sub:
            m = Matrix.zeros(dim_d, dim_d)
            for a, ca in enumerate(s):
                if ca:
                    m = m + comp.act0[a].scale(ca)
            mats.append(m)
        stacked = Matrix.from_rows([row for m in mats for row in m.entries])
        out[d] = kernel_basis(stacked)
    return out


def centralizer_in_degree_zero(
    tp: Tower, tn: Tower, L: LocalAlgebra, graded_sub: dict[int, list[Vector]]
) -> list[Vector]:
    """Elements of g0 commuting with a graded subspace (any degrees)."""
    t = L.triplet
    n0 = t.dim_g0
    rows = []
    for d, vecs in sorted(graded_sub.items()):
        for s in vecs:
            if d == 0:
                for kcoord in range(n0):
                    rows.append(tuple(t.g0.bracket(basis_vector(n0, a), s)[kcoord] for a in range(n0)))
                continue
            tower = tp if d > 0 else tn
            comp = tower.component(abs(d))
            dim_d = tower.dim_at(abs(d))
            for kcoord in range(dim_d):
                rows.append(tuple(comp.act0[a].matvec(s)[kcoord] for a in range(n0)))
    return kernel_basis(Matrix.from_rows(rows)) if rows else [basis_vector(n0, a) for a in range(n0)]
