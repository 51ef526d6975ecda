"""Dual pairs inside a symplectic tower, and towers from Cartan matrices.

The rotation algebra o(n) sits inside gl(n) as the stabilizer of the standard
quadric.  Its centralizer in the rank-n symplectic tower is a graded copy of
sl(2) spanned by the quadric, the identity, and the dual quadric; taking the
centralizer again recovers o(n).  The same growth engine run on an abelian
degree-0 part with diagonal weights reproduces root-height dimension tables
of finite-type Cartan matrices.
"""

from glaw import (
    NEGATIVE,
    POSITIVE,
    build_local,
    centralizer_graded,
    centralizer_in_degree_zero,
    gen_principal,
    gen_symplectic,
    grow,
    stabilizer_of_poly,
)
from glaw.sl2 import PolyInvariant

n = 3
t = gen_symplectic(n, 2, 2, "trace")
local = build_local(t)
tp = grow(local, POSITIVE, 2)
tn = grow(local, NEGATIVE, 2)

quad = PolyInvariant.from_string("+".join(f"x{i}^2" for i in range(n)), n)
rotations = stabilizer_of_poly(n, quad)
print(f"o({n}) has dimension {len(rotations)}")

graded = centralizer_graded(tp, tn, local, rotations, 1)
print("centralizer dims by degree:", {d: len(v) for d, v in sorted(graded.items())})

double = centralizer_in_degree_zero(tp, tn, local, graded)
print(f"double centralizer in degree 0 has dimension {len(double)} (back to o({n}))")
print()

for label, cartan, budget in (
    ("A2", [[2, -1], [-1, 2]], 3),
    ("C2", [[2, -1], [-2, 2]], 4),
    ("G2", [[2, -1], [-3, 2]], 6),
):
    local = build_local(gen_principal(cartan))
    print(f"{label} principal tower dims:", grow(local, POSITIVE, budget).dims())
