# # Clifford algebras of diagonal forms
#
# Cl(V, f) is generated by e_1..e_n with e_i^2 = d_i and e_i e_j = -e_j e_i.
# Basis blades are bit masks; multiplication tracks a reordering sign and the
# metric factors of repeated generators.

from lmalg.clifford import DiagonalForm, Multivector, center, centralizer, lemma22_check, structure_id

form = DiagonalForm([2, 3, 5])
e1, e2, e3 = (Multivector.gen(form, i) for i in (1, 2, 3))
print("e1^2 =", e1 * e1)
print("(e1 e2)^2 =", (e1 * e2) * (e1 * e2))
v = Multivector.vector(form, [1, 1, 1])
print("v^2 = f(v) =", v * v)

# The centralizer of e_1 in Cl of three unit generators: scalars, e_1, and the
# even products of the remaining generators times either.

unit3 = DiagonalForm([1, 1, 1])
print("C(e1):", centralizer(unit3, [Multivector.gen(unit3, 1)]))

# Split forms give full matrix algebras in even dimension and a sum of two
# in odd dimension (once the field can take the square root the center needs).

for n in (2, 4, 6):
    f = DiagonalForm([1 if i % 2 == 0 else -1 for i in range(n)])
    print("n=%d over Q:" % n, structure_id(f).blocks, " center dim", len(center(f)))
for n in (3, 5):
    f = DiagonalForm([1] * n, 4)
    print("n=%d over Q(i):" % n, structure_id(f).blocks, " center dim", len(center(f)))

# Centralizers of an odd number of orthonormal vectors are again small
# Clifford algebras, of dimension 2^(n-k).

r = lemma22_check(DiagonalForm([1] * 5, 4), [1, 2, 3])
print("C(e1) n C(e2) n C(e3) in Cl_5:", r)
