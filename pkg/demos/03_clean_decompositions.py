"""
Clean decompositions
====================

An element is clean when it splits as idempotent + unit.  Z/3 is the
classic boundary case: 2 = 0 + 2 = 1 + 1 splits twice, so Z/3 is not
uniquely clean -- but 2^2 = 1 splits exactly once, which makes Z/3
uniquely pi-clean (some power of every element is uniquely clean).

The inclusion chain is strict:

    uniquely clean  <  uniquely pi-clean  <  strongly clean
"""

from ringlab import (
    clean_decompositions,
    is_clean,
    is_strongly_clean,
    is_uniquely_clean,
    is_uniquely_pi_clean,
    matrix_ring,
    pi_clean_witness,
    predicate_vector,
    zmod,
)

z3 = zmod(3)
for a in range(3):
    pairs = clean_decompositions(z3, a)
    w = pi_clean_witness(z3, a)
    print(f"Z/3 element {a}: decompositions {pairs}; "
          f"witness {a}^{w.exponent} = {w.idempotent} + {w.complement}")
print(f"Z/3: uniquely clean = {is_uniquely_clean(z3)}, "
      f"uniquely pi-clean = {is_uniquely_pi_clean(z3)}")

# Z/4 sits lower in the chain: every element splits exactly once.
z4 = zmod(4)
print(f"\nZ/4: uniquely clean = {is_uniquely_clean(z4)} "
      f"(e.g. 2 = {clean_decompositions(z4, 2)})")

# The 2x2 matrices over Z/2 separate the top of the chain: the ring is
# clean, but no power of a non-central idempotent is uniquely clean.
m2 = matrix_ring(zmod(2), 2)
print(f"\n{m2.label}: clean = {is_clean(m2)}, "
      f"uniquely pi-clean = {is_uniquely_pi_clean(m2)}")
vec = predicate_vector(m2)
witness = vec.witnesses["uniquely_pi_clean"][0]
print(f"witness element {witness} = {m2.name_of(witness)}")
print(f"its decompositions: "
      f"{[(m2.name_of(e), m2.name_of(u)) for e, u in clean_decompositions(m2, witness)]}")

print(f"\nstrongly clean survey: Z/3 {is_strongly_clean(z3)}, "
      f"Z/4 {is_strongly_clean(z4)}, Z/6 {is_strongly_clean(zmod(6))}")
