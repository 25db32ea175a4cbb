# # Generalized Clifford algebras Clg(l, m)
#
# Generators x_1..x_m with x_i^l = 1 and x_j x_i = xi x_i x_j for i < j,
# xi a primitive l-th root of unity.  Ordered monomials form a basis of
# dimension l^m.

from lmalg.genclifford import (GCElement, GCParams, center_basis, clock_shift_rep, extract_components,
                               radical_dim, wedderburn)
from lmalg.errors import FieldExtensionRequired

p = GCParams(3, 2)
x1, x2 = GCElement.gen(p, 1), GCElement.gen(p, 2)
print("x2 x1 =", x2 * x1, "  (xi = z)")
print("x1^3 =", x1 ** 3)

# Splitting an element by powers of x_1 uses the automorphism x_1 -> xi x_1
# and the inverse Vandermonde matrix.

a = 1 + x1 + 2 * x1 * x2 + x1 * x1
print("components along x1:", extract_components(a, 1))

# The clock and shift matrices realize Clg(3, 2) as M_3.

for row in clock_shift_rep(p)[0]:
    print("  X:", [str(c) for c in row])

# Even m gives one matrix block, odd m gives l blocks split by central
# idempotents built from the monomial z = x^(1, -1, 1, ...).

for l, m in [(2, 2), (3, 2), (3, 4), (3, 1), (3, 3)]:
    q = GCParams(l, m)
    print("Clg(%d,%d):" % (l, m), wedderburn(q).blocks, " center", [next(iter(c.terms)) for c in center_basis(q)],
          " radical", radical_dim(q))

# For even l some constructions need a root of -1 that Q(xi_l) lacks; a
# larger cyclotomic field removes the obstruction.

try:
    wedderburn(GCParams(2, 3))
except FieldExtensionRequired as exc:
    print("Clg(2,3) over Q:", exc)
print("Clg(2,3) over Q(i):", wedderburn(GCParams(2, 3, field_order=4)).blocks)
