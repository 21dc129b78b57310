"""Utilities, welfare, and improving moves on a small complete host.

Agents like having neighbors (each edge is worth alpha to both endpoints)
and they like being far from everyone else (hop distances count positively).
"""

from fractions import Fraction

from sdncg import (
    GameState,
    apply_move,
    clique,
    full_state,
    improving_moves,
    social_welfare,
    utility,
)

host = clique(5)
state = GameState(host, [(0, 1), (1, 2), (2, 3), (3, 4)])  # the 5-path
alpha = Fraction(5, 2)

print(f"host: K_{host.n}, state: spanning path, alpha = {alpha}")
for v in range(host.n):
    print(f"  u({v}) = {alpha} * deg {state.degree(v)} + distances "
          f"{state.table.per_node_sum[v]} = {utility(state, v, alpha)}")
print(f"social welfare: {social_welfare(state, alpha)}")

print("\nimproving moves (additions need both endpoints to gain):")
for mv in improving_moves(state, alpha):
    print(f"  {mv}")

mv = improving_moves(state, alpha)[0]
after = apply_move(state, mv)
print(f"\nafter '{mv}': welfare {social_welfare(state, alpha)} -> "
      f"{social_welfare(after, alpha)}")
print("welfare can go DOWN after a move that helps only its movers:")
print(f"  u({mv.u}) {utility(state, mv.u, alpha)} -> {utility(after, mv.u, alpha)}")
print(f"  u({mv.v}) {utility(state, mv.v, alpha)} -> {utility(after, mv.v, alpha)}")
