"""The holomorph, its regular subgroups, and the skew braces they define.

A holomorph element is a pair (translation, twist) acting by
x -> twist(x) * translation^-1.  A subgroup is regular when evaluating at
the identity hits every element once; such subgroups are the same data as
bijective crossed homomorphisms and as skew braces on the group.
"""

import numpy as np

from holoreg import (crossed_from_regular, cyclic_group,
                     cyclic_regular_oracle, dihedral_group, hol_group,
                     lambda_embedding, regular_from_crossed,
                     regular_subgroups_isomorphic_to, rho_embedding,
                     skew_brace_from_regular, subgroup_generated_by_hol)

N = dihedral_group(8)

# the holomorph as an honest Cayley table (|N| * |Aut N| = 64 here)
H = hol_group(N)
print("holomorph of D8 has order", H.order)

# both regular representations are regular subgroups
print("right translations regular?", len(rho_embedding(N)) == 8)
print("left translations give the trivial brace:",
      np.array_equal(skew_brace_from_regular(N, lambda_embedding(N)).circle_table,
                     N.table))

# the oracle scans every (translation, twist) pair for a full-length cycle
generators = cyclic_regular_oracle(N)
print("cyclic regular generators found in Hol(D8):", len(generators))
h = generators[0]
subgroup = subgroup_generated_by_hol(h)
print("first one has order", h.order(), "and spans", len(subgroup), "elements")

# a regular subgroup splits into a twist map and a bijective translation map
G, crossed = crossed_from_regular(N, subgroup)
print("crossed data is bijective?", crossed.is_bijective)
print("round trip returns the same subgroup:",
      {x.key() for x in regular_from_crossed(N, crossed)} ==
      {x.key() for x in subgroup})

# the brace attached to the cyclic subgroup has a cyclic circle group
brace = skew_brace_from_regular(N, subgroup)
print("circle group element orders:",
      sorted(int(o) for o in brace.multiplicative.orders))

# subgroup-level enumeration: C4 copies inside the holomorph of the Klein group
klein = dihedral_group(4)
print("regular C4 subgroups in Hol(C2 x C2):",
      len(regular_subgroups_isomorphic_to(cyclic_group(4), klein)))
