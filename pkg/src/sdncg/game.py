"""The distancing game itself: utilities, welfare, improving moves,
pairwise stability, and improving-move dynamics with cycle detection.

Agents value both their degree (each incident edge is worth ``alpha``) and
their summed hop distances to everyone else; both enter the utility with a
positive sign. ``alpha`` is handled as an exact rational throughout because
the interesting regime boundaries (n/3, (n-1)/2, n/2, ...) are exact ratios
and float ties would silently flip verdicts.

Move legality follows bilateral consent: an edge is removed unilaterally if
that does not disconnect the state and strictly helps at least one endpoint;
an edge is added only when it exists in the host and strictly helps both
endpoints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ParameterError, StructureError
from .graphs import (
    GameState,
    _bfs_distance_sum,
    canonical_key,
    edge,
    is_bridge,
)

Alpha = Fraction

ADD = "add"
REMOVE = "remove"

FIRST_IMPROVING = "first"
BEST_IMPROVING = "best"
SEEDED_RANDOM = "random"
POLICIES = (FIRST_IMPROVING, BEST_IMPROVING, SEEDED_RANDOM)

STABLE = "stable"
CYCLE = "cycle"
BUDGET_EXHAUSTED = "budget-exhausted"


def parse_alpha(text: str) -> Fraction:
    """Parse an exact rational from ``"p"`` or ``"p/q"`` text.

    Decimal notation is rejected on purpose: boundary cases like alpha = n/3
    must be decided exactly, and a float detour can corrupt them.
    """
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise ParameterError(
            f"alpha must be an exact rational like '7/3' or '2', got {text!r}"
        )
    try:
        if "/" in s:
            num, den = s.split("/")
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"cannot parse alpha {text!r}: {exc}") from None
    if value <= 0:
        raise ParameterError(f"alpha must be positive, got {value}")
    return value


def as_alpha(value) -> Fraction:
    """Coerce an int/Fraction/str to a positive exact rational; floats are refused."""
    if isinstance(value, str):
        return parse_alpha(value)
    if isinstance(value, float):
        raise ParameterError("alpha must be exact (int, Fraction, or 'p/q' string)")
    out = Fraction(value)
    if out <= 0:
        raise ParameterError(f"alpha must be positive, got {out}")
    return out


@dataclass(frozen=True, order=True)
class Move:
    """One bilateral add or unilateral remove; sorts as (kind, u, v)."""

    kind: str
    u: int
    v: int

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)

    def __str__(self):
        return f"{self.kind} {self.u} {self.v}"


def add_move(u: int, v: int) -> Move:
    a, b = edge(u, v)
    return Move(ADD, a, b)


def remove_move(u: int, v: int) -> Move:
    a, b = edge(u, v)
    return Move(REMOVE, a, b)


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    stable_against_addition: bool
    stable_against_removal: bool
    witnesses: tuple
    moves_examined: int
    truncated: bool = False


@dataclass(frozen=True)
class DynamicsOutcome:
    """Trajectory of improving moves plus how it ended.

    ``trajectory`` holds ``(state key, move)`` pairs, the move being the one
    taken from that state. In a cycle outcome the final state equals the
    state at index ``cycle_start``.
    """

    trajectory: tuple
    terminal: str
    final_state: GameState
    cycle_start: Optional[int] = None

    @property
    def steps(self) -> int:
        return len(self.trajectory)


def utility(state: GameState, v: int, alpha) -> Fraction:
    """u(v) = alpha * degree(v) + summed distances from v. Larger is better."""
    a = as_alpha(alpha)
    if not 0 <= v < state.host.n:
        raise StructureError(f"node {v} out of range")
    return a * state.degree(v) + state.table.per_node_sum[v]


def social_welfare(state: GameState, alpha) -> Fraction:
    """Sum of utilities; equals 2*alpha*|E| + d(V, V), asserted both ways."""
    a = as_alpha(alpha)
    table = state.table
    direct = 2 * a * len(state.active) + table.total
    by_sum = a * sum(state.degree(v) for v in range(state.host.n)) + sum(
        table.per_node_sum
    )
    assert direct == by_sum, "welfare definitions disagree"
    return direct


def addition_decreases(state: GameState, u: int, v: int) -> tuple[int, int]:
    """Exact drop of each endpoint's distance sum if edge (u, v) were added.

    Uses d'(u, x) = min(d(u, x), 1 + d(v, x)); a single added edge is used at
    most once on any new shortest path.
    """
    dist = state.table.dist
    du = dist[u]
    dv = dist[v]
    dec_u = 0
    dec_v = 0
    for a, b in zip(du, dv):
        d = a - b
        if d > 1:
            dec_u += d - 1
        elif d < -1:
            dec_v += -d - 1
    return dec_u, dec_v


def removal_increases(state: GameState, u: int, v: int):
    """Exact rise of each endpoint's distance sum if (u, v) were removed.

    Returns ``None`` when the edge is a bridge (removal illegal).
    """
    n = state.host.n
    nbr = list(state.adjacency_masks)
    nbr[u] ^= 1 << v
    nbr[v] ^= 1 << u
    full = (1 << n) - 1
    sum_u, seen = _bfs_distance_sum(nbr, u)
    if seen != full:
        return None
    sum_v, _ = _bfs_distance_sum(nbr, v)
    ps = state.table.per_node_sum
    return sum_u - ps[u], sum_v - ps[v]


def improving_moves(state: GameState, alpha, limit: Optional[int] = None) -> list:
    """All improving moves in deterministic lexicographic (kind, u, v) order.

    Additions need a strict gain for both endpoints, removals for at least
    one; ``limit`` truncates the list without changing the order.
    """
    a = as_alpha(alpha)
    out = []
    active = state.active
    for u, v in state.host.edges:
        if (u, v) in active:
            continue
        dec_u, dec_v = addition_decreases(state, u, v)
        if dec_u < a and dec_v < a:
            out.append(Move(ADD, u, v))
            if limit is not None and len(out) >= limit:
                return out
    for u, v in sorted(active):
        inc = removal_increases(state, u, v)
        if inc is None:
            continue
        if inc[0] > a or inc[1] > a:
            out.append(Move(REMOVE, u, v))
            if limit is not None and len(out) >= limit:
                return out
    return out


def has_improving_move(state: GameState, alpha) -> bool:
    """Cheapest possible instability test: stop at the first improving move."""
    a = as_alpha(alpha)
    active = state.active
    for u, v in state.host.edges:
        if (u, v) in active:
            continue
        dec_u, dec_v = addition_decreases(state, u, v)
        if dec_u < a and dec_v < a:
            return True
    for u, v in active:
        inc = removal_increases(state, u, v)
        if inc is not None and (inc[0] > a or inc[1] > a):
            return True
    return False


def is_pairwise_stable(state: GameState, alpha, witness_limit: Optional[int] = None) -> StabilityReport:
    """Full stability verdict: every host-legal addition and every non-bridge
    removal is examined (unless the witness list fills up first)."""
    a = as_alpha(alpha)
    witnesses = []
    examined = 0
    truncated = False

    def room():
        return witness_limit is None or len(witnesses) < witness_limit

    stable_add = True
    active = state.active
    for u, v in state.host.edges:
        if (u, v) in active:
            continue
        if not stable_add and not room():
            truncated = True
            break
        examined += 1
        dec_u, dec_v = addition_decreases(state, u, v)
        if dec_u < a and dec_v < a:
            stable_add = False
            if room():
                witnesses.append(Move(ADD, u, v))
    stable_rem = True
    for u, v in sorted(active):
        if not stable_rem and not room():
            truncated = True
            break
        examined += 1
        inc = removal_increases(state, u, v)
        if inc is None:
            continue
        if inc[0] > a or inc[1] > a:
            stable_rem = False
            if room():
                witnesses.append(Move(REMOVE, u, v))
    return StabilityReport(
        stable=stable_add and stable_rem,
        stable_against_addition=stable_add,
        stable_against_removal=stable_rem,
        witnesses=tuple(witnesses),
        moves_examined=examined,
        truncated=truncated,
    )


def stability_interval(state: GameState) -> tuple[Optional[int], Optional[int]]:
    """Exact closed alpha-interval [lo, hi] on which the state is stable.

    ``lo`` is the largest distance increase any legal removal can hand an
    endpoint (None when nothing is removable); ``hi`` is the smallest
    blocking decrease over all host additions, i.e. min over addable edges of
    max(dec_u, dec_v) (None when nothing is addable). The state is pairwise
    stable at alpha iff lo <= alpha <= hi with None meaning unbounded. Both
    bounds are integers, so one pass answers stability for every alpha.
    """
    active = state.active
    hi = None
    for u, v in state.host.edges:
        if (u, v) in active:
            continue
        dec_u, dec_v = addition_decreases(state, u, v)
        block = dec_u if dec_u >= dec_v else dec_v
        if hi is None or block < hi:
            hi = block
    lo = None
    for u, v in active:
        inc = removal_increases(state, u, v)
        if inc is None:
            continue
        worst = inc[0] if inc[0] >= inc[1] else inc[1]
        if lo is None or worst > lo:
            lo = worst
    return lo, hi


def stable_in_interval(interval, alpha) -> bool:
    lo, hi = interval
    a = as_alpha(alpha)
    return (lo is None or a >= lo) and (hi is None or a <= hi)


def apply_move(state: GameState, move: Move) -> GameState:
    """New state with the move applied; raises on any illegal move."""
    e = edge(move.u, move.v)
    host = state.host
    if move.kind == ADD:
        if e not in host.edge_index:
            raise StructureError(f"cannot add {e}: not a host edge")
        if e in state.active:
            raise StructureError(f"cannot add {e}: already active")
        bit = 1 << host.edge_index[e]
        return GameState._unchecked(host, state.active | {e}, state.mask | bit)
    if move.kind == REMOVE:
        if e not in state.active:
            raise StructureError(f"cannot remove {e}: not active")
        if is_bridge(state, e):
            raise StructureError(f"cannot remove {e}: removal disconnects the state")
        bit = 1 << host.edge_index[e]
        return GameState._unchecked(host, state.active - {e}, state.mask ^ bit)
    raise StructureError(f"unknown move kind {move.kind!r}")


def _best_move(state: GameState, alpha: Fraction, moves) -> Move:
    # welfare-greedy pivot; ties fall back to lexicographic move order
    best = None
    best_w = None
    for mv in moves:
        w = social_welfare(apply_move(state, mv), alpha)
        if best_w is None or w > best_w or (w == best_w and mv < best):
            best = mv
            best_w = w
    return best


def run_dynamics(
    start: GameState,
    alpha,
    policy: str = FIRST_IMPROVING,
    budget: int = 10_000,
    seed: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> DynamicsOutcome:
    """Iterate policy-selected improving moves until stable, revisit, or budget.

    Revisits are detected on labeled canonical keys, so a cycle outcome means
    an exact state recurrence. Deterministic given (start, alpha, policy,
    seed); ``rng`` may be passed instead of ``seed`` to share a generator.
    """
    a = as_alpha(alpha)
    if policy not in POLICIES:
        raise ParameterError(f"unknown policy {policy!r}; pick one of {POLICIES}")
    if policy == SEEDED_RANDOM and rng is None:
        if seed is None:
            raise ParameterError("the seeded-random policy requires a seed")
        rng = random.Random(seed)
    if budget < 0:
        raise ParameterError("budget must be nonnegative")
    state = start
    seen = {canonical_key(state): 0}
    trajectory = []
    for _ in range(budget):
        if policy == FIRST_IMPROVING:
            moves = improving_moves(state, a, limit=1)
        else:
            moves = improving_moves(state, a)
        if not moves:
            return DynamicsOutcome(tuple(trajectory), STABLE, state)
        if policy == FIRST_IMPROVING:
            mv = moves[0]
        elif policy == SEEDED_RANDOM:
            mv = rng.choice(moves)
        else:
            mv = _best_move(state, a, moves)
        nxt = apply_move(state, mv)
        trajectory.append((canonical_key(state), mv))
        key = canonical_key(nxt)
        if key in seen:
            return DynamicsOutcome(tuple(trajectory), CYCLE, nxt, cycle_start=seen[key])
        seen[key] = len(trajectory)
        state = nxt
    # one last look: the budget may have run out exactly at a stable state
    if not improving_moves(state, a, limit=1):
        return DynamicsOutcome(tuple(trajectory), STABLE, state)
    return DynamicsOutcome(tuple(trajectory), BUDGET_EXHAUSTED, state)
