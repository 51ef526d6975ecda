"""sl2-triples through the linear criterion and through relative invariants.

A candidate X completes to a triple (Y, H0, X) exactly when X stays outside
the span of the derived algebra applied to X.  When an explicit polynomial
relative invariant is available, the scaled logarithmic gradient of the
invariant produces the same Y up to the annihilator of the orbit direction.
"""

from fractions import Fraction

from glaw import (
    build_local,
    complete_triple,
    gen_stabilizer_triplet,
    gen_symplectic,
    gradlog_triple,
    property_p_test,
)
from glaw.sl2 import PolyInvariant

from glaw import monomial_basis

# sum of p-th powers in the degree-p family
n, p = 2, 3
t = gen_symplectic(n, p, 1, "g2")
mono = monomial_basis(n, p)
x = [Fraction(0)] * len(mono.exponents)
for i in range(n):
    x[mono.index(tuple(p if k == i else 0 for k in range(n)))] = Fraction(1)
x = tuple(x)
print("candidate x0^3 + x1^3 has the splitting property:", property_p_test(t, x))
cert = complete_triple(t, x)
print("certificate residuals vanish:", cert.ok)
print("  y =", [str(c) for c in cert.y])
print("  h0 =", [str(c) for c in cert.h0])
print()

# the quadric route: scalars + rotations acting on coordinates, with the
# quadric itself as the relative invariant
quad = PolyInvariant.from_string("x0^2+x1^2+x2^2", 3)
tq = gen_stabilizer_triplet(quad, 2)
point = (Fraction(1), Fraction(2), Fraction(2))
c1 = complete_triple(tq, point)
c2 = gradlog_triple(tq, quad, point)
print("point on the quadric complement:", [str(c) for c in point])
print("completion y:", [str(c) for c in c1.y])
print("gradlog    y:", [str(c) for c in c2.y])
L = build_local(tq)
diff = tuple(a - b for a, b in zip(c1.y, c2.y))
print("difference annihilates the candidate:", all(c == 0 for c in L.bracket_yx(diff, point)))
