# # Locally matrix algebras as embedding chains
#
# M_2 -> M_4 -> M_8 -> ... is a direct limit of unital embeddings; its
# invariant is the lcm of the sizes that embed, a Steinitz number.  Two
# countable-dimensional algebras of this kind are isomorphic exactly when
# these numbers agree.

from lmalg.fdalg import StructureTable
from lmalg.genclifford import GCParams, pullback
from lmalg.locmat import (EmbeddingChain, check_matrix_units, d_membership, isomorphic_countable,
                          standard_matrix_units, steinitz_of_chain, steinitz_realization, tensor,
                          universally_equivalent)
from lmalg.steinitz import INF, SteinitzNumber

doubling = EmbeddingChain([2], tail=2, label="Cl of a countable space")
quadrupling = EmbeddingChain([4], tail=4)
print(doubling, "->", steinitz_of_chain(doubling))
print("same algebra as", quadrupling, ":", isomorphic_countable(doubling, quadrupling))
print("M_3 embeds:", d_membership(3, doubling), "  M_1024 embeds:", d_membership(1024, doubling))

# Tensor products multiply the invariants.

c = tensor(doubling, EmbeddingChain([3], tail=3))
print("tensor:", c, "->", steinitz_of_chain(c))
print("equivalent to the 6-chain:", universally_equivalent(c, EmbeddingChain([6], tail=6)))

# Any Steinitz number with an infinite exponent is realized by some chain.

tau = SteinitzNumber({2: 3, 3: INF})
print("realize", tau, ":", steinitz_realization(tau))

# Matrix units: x_ij x_ts = delta_jt x_is and sum x_ii = 1.  The standard
# units of M_3 pass; pulled back through the clock-shift isomorphism, the
# units of M_3 inside Clg(3, 2) pass too.

print(check_matrix_units(standard_matrix_units(StructureTable.matrix_algebra(3), 3)))
p = GCParams(3, 2)
units = [[pullback(p, {(i, j): p.field.one}) for j in range(3)] for i in range(3)]
print("E_11 in Clg(3,2) =", units[0][0])
print(check_matrix_units(units))
