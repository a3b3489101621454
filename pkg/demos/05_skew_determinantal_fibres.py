"""Conormal fibres of skew-symmetric determinantal loci, via type D.

Run with: python demos/05_skew_determinantal_fibres.py
"""

from cograss import fibre_rank, skew_rank_element
from cograss.detvar import chain_perm, even_rank

# The rank <= r locus of skew-symmetric n x n matrices is indexed by a
# signed permutation; its conormal fibre at the zero matrix is again a
# skew-symmetric determinantal locus, of complementary even rank.
for n in (4, 5, 6, 7):
    nbar = even_rank(n)
    print(f"n = {n} (top even rank {nbar}):")
    for r in range(0, nbar + 1, 2):
        corank, witness = fibre_rank(n, r)
        print(f"   rank <= {r}: stratum {skew_rank_element(n, r)}"
              f"  ->  fibre rank {corank}, witness {witness}")

# The stratum elements factor into the chain elements x_i.
n = 6
print("\nchain elements for n = 6:")
for i in range(1, n):
    print(f"   x_{i} = {chain_perm(n, i)}")
w4 = skew_rank_element(n, 4)
product = chain_perm(n, 3) * chain_perm(n, 1)
print("x_3 * x_1 == rank-4 stratum:", product == w4)
