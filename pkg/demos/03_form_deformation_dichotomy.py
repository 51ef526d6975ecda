"""How the invariant form steers the growth: a finite/infinite dichotomy.

Two gl(n) blocks with joint trace zero act on n x n matrices by
(A,B).X = AX - XB.  With the balanced block form the tower closes after one
step (a classical 3-grading); unbalancing the two trace factors breaks the
degree-2 vanishing identity and the tower grows without bound.  The failure
is visible locally: the universal identity
P2(Y,X,X') = [[Y,X],X'] + [X,[Y,X']] stops vanishing.
"""

from glaw import POSITIVE, build_local, gen_glblock, grow, pn_check, pn_expand

print("universal degree-2 identity:", pn_expand(2))
print()

for lam2 in (1, 2):
    t = gen_glblock(2, 1, lam2)
    local = build_local(t)
    tower = grow(local, POSITIVE, 3)
    res = pn_check(local, 2)
    print(f"block scales (1, {lam2}):")
    print("  dims:", tower.dims(), " terminated:", tower.terminated)
    print("  degree-2 identity holds:", res.holds)
    if not res.holds:
        dual_idx, v_idx = res.witness
        print("  first failing basis tuple: duals", dual_idx, "vectors", v_idx)
        print("  residual:", [str(c) for c in res.value])
print()

# the residual has a closed form: for scales (l1, l2) it is
# (1/l2 - 1/l1) ( (X Y X' - X' Y X) + (l2-l1)/(n(l1+l2)) (tr(YX') X - tr(YX) X') )
# -- see tests/test_tower.py::test_block_family_residual_closed_form for the
# exact comparison on random rational tuples.
print("degree-3 identity for the unbalanced form:", pn_check(build_local(gen_glblock(2, 1, 2)), 3).holds)
