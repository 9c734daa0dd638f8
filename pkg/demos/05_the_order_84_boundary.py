"""A group of order 84 that defeats every coarse necessary condition.

Take the order-21 cyclic group and let the Klein four-group act through
all four square roots of unity mod 21.  The result is isomorphic to a
product of two dihedral groups, its odd part is cyclic, its Sylow
2-subgroup is as tame as possible, and still no cyclic regular subgroup
exists in its holomorph because the action is too big by exactly one notch.  The same group IS fine in the mirrored question where the target
group is cyclic, so the two questions genuinely differ.
"""

import math

from holoreg import (CGroupPresentation, cgroup_group, classify,
                     classify_rump, decompose, dihedral_group, direct_product,
                     find_isomorphism, hol_group, parse_group_spec,
                     quotient_action_probe)

N = parse_group_spec(
    "semidirect (cgroup 21 1 1) (dihedral 4) alpha r->phi:8 s->phi:13")
verdict = classify(N)
print("order:", N.order)
print("classifier verdict:", verdict.realizable, f"({verdict.reason})")
print("decomposition:", verdict.decomposition.summary())

# the group in friendlier clothes: a product of two dihedral groups
d14 = cgroup_group(CGroupPresentation(7, 2, 6))
d6 = cgroup_group(CGroupPresentation(3, 2, 2))
print("isomorphic to D14 x D6?",
      find_isomorphism(N, direct_product(d14, d6), bound=None) is not None)

# the holomorph splits over the two factors; scan their element orders
hol14, hol6 = hol_group(d14), hol_group(d6)
orders14 = set(int(o) for o in hol14.orders)
orders6 = set(int(o) for o in hol6.orders)
print(f"element orders in Hol(D14) (order {hol14.order}):", sorted(orders14))
print(f"element orders in Hol(D6)  (order {hol6.order}):", sorted(orders6))
print("any pair with lcm 84?",
      any(math.lcm(a, b) == 84 for a in orders14 for b in orders6))

# the structural reason: every automorphism of N collapses on the Klein
# quotient, so no twist can drive a full cycle
probe = quotient_action_probe(N, decompose(N))
print("automorphisms induced on the Klein quotient:", len(probe))

# the mirrored question (cyclic target group) accepts this group happily
print("fine as the acting group over a cyclic target?", classify_rump(N))
