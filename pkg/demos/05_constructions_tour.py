"""The named constructions and their stability guarantees, checked live.

Each construction keeps the distances its agents enjoy while making every
deviation unattractive: removals stretch only their own endpoints by one,
and any addition collapses someone's distances by too much.
"""

from fractions import Fraction

from sdncg import (
    embed_in_clique,
    full_state,
    hypercube_clique_network,
    is_pairwise_stable,
    path_of_cliques,
    path_of_cliques_middle,
    removal_increases,
    star_of_cliques,
    wheel_clique_network,
)

cases = [
    ("star of cliques", star_of_cliques(14, 2), Fraction(2), True),
    ("hypercube clique network", hypercube_clique_network(64), Fraction(64, 6) - 3, True),
    ("path of cliques", path_of_cliques(20, 4), Fraction(8), True),
    ("wheel clique network", wheel_clique_network(10), Fraction(1), False),
]

for name, graph, alpha, on_complete_host in cases:
    state = embed_in_clique(graph) if on_complete_host else full_state(graph)
    where = "on K_n" if on_complete_host else "as its own host"
    verdict = is_pairwise_stable(state, alpha)
    print(f"{name}: n={graph.n}, m={graph.m}, alpha={alpha} {where} -> "
          f"{'stable' if verdict.stable else 'UNSTABLE'}")

print("\nclique-network removal property on the star of cliques:")
g = star_of_cliques(14, 2)
st = full_state(g)
incs = {removal_increases(st, u, v) for u, v in g.edges}
print(f"  distance increases over all {g.m} removals: {incs}")

print("\npath of cliques, the cheapest addition:")
n = 20
g = path_of_cliques(n, 4)
v1, _, _, _, v3, _ = path_of_cliques_middle(n)
st = embed_in_clique(g)
from sdncg import addition_decreases

dec = addition_decreases(st, v1, v3)
print(f"  adding ({v1},{v3}) drops distance sums by {dec} — "
      f"exactly (floor(n/2)-2, ceil(n/2)-2) = ({n//2 - 2}, {(n+1)//2 - 2})")
