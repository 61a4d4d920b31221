"""The two exact s-dispersion routes: convolution cosets vs triangles.

For s solutions we either sweep all (s-2)-tuples of XOR offsets and
convolve once per tuple, or split candidate points into three groups
and look for a maximum triangle.  Both are exact; they cross-check each
other here on the same instance.
"""

from dispersat import (
    CnfFormula,
    DispersionObjective,
    brute_opt,
    enumerate_solutions,
    exact_dispersion,
    opt_min_clique,
    opt_sum_clique,
    min_pairwise_distance,
    sum_pairwise_distance,
)

formula = CnfFormula(5, [(1, 2, 3), (-2, 4, 5), (-1, -4, 3)])
points = enumerate_solutions(formula).members
print(f"{len(points)} solutions on 5 variables")

for s in (3, 4):
    via_fwht = exact_dispersion(formula, s, DispersionObjective.MIN_PD)
    via_clique = opt_min_clique(points, s)
    value, _ = brute_opt(formula, s, DispersionObjective.MIN_PD)
    print(f"\ns={s}  Opt-min = {value}")
    print("  convolution witness:", [z.to_string() for z in via_fwht])
    print("  clique witness:     ", [z.to_string() for z in via_clique])
    assert min_pairwise_distance(via_fwht) == value
    assert min_pairwise_distance(via_clique) == value

s = 3
multiset = exact_dispersion(formula, s, DispersionObjective.SUM_PD)
distinct = exact_dispersion(formula, s, DispersionObjective.SUM_PD_DISTINCT)
print(f"\nsum dispersion, s={s}:")
print("  over multisets:", [z.to_string() for z in multiset],
      "sumPD", sum_pairwise_distance(multiset))
print("  over sets:     ", [z.to_string() for z in distinct],
      "sumPD", sum_pairwise_distance(distinct))

clique_sum = opt_sum_clique(points, s, distinct=False)
assert sum_pairwise_distance(clique_sum) == sum_pairwise_distance(multiset)
print("clique route agrees on the multiset optimum")

# the clique route works on any explicit point set, not just solution spaces
from dispersat.cnf import Assignment

cloud = [Assignment.from_string(s) for s in
         ("000000", "111000", "000111", "111111", "101010", "010101")]
best = opt_min_clique(cloud, 4)
print("\narbitrary point cloud, best 4-subset:",
      [z.to_string() for z in best],
      "minPD", min_pairwise_distance(best))
