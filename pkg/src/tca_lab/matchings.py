"""Finite matchings on the positive integers, rewriting moves, and orders.

A matching is a finite set of disjoint edges (i, j) with 0 < i < j; it is
stored canonically as a tuple of (min, max) pairs sorted by the edge
comparison key (larger endpoint first, then smaller endpoint).

Two families of rewriting moves act on matchings:

* growth moves ("type 1"): add a fresh edge on two unused labels, or shift
  one endpoint of an edge up by one onto an unused label;
* swap moves ("type 2"): given two edges that are nested (k < i < j < l) or
  crossing (i < k < j < l), exchange endpoints to form (k,j),(i,l) resp.
  (i,k),(j,l), allowed only when every label strictly inside the left gap
  is matched to something beyond j.

``leq_type1`` asks whether a matching can be rewritten into another using
growth moves only; ``leq_full`` allows both families.  Both are decided by
exact breadth-first search: growth moves never decrease the edge count, the
label sum, or the largest label, and swap moves preserve all three, so the
state space below a fixed target is finite and the search is complete.

The total comparison ``matching_key`` orders matchings by edge count first
(more edges = larger), then by comparing the sorted edge sequences from the
largest edge downward.  Comparing from the largest edge (colex) rather than
the smallest is deliberate.  Reading from the smallest edge would rank the
nested pair {(1,4),(2,3)} above the crossing pair {(1,3),(2,4)}, and then
no leading-term set of a nonzero equivariant ideal could be closed under
the swap moves: the one-dimensional slice spanned by the sum of the three
two-edge matchings on {1,2,3,4} would have the nested pair as its only
leading term, yet the nested pair still has swap moves available.  Colex
ranks the move-free aligned pair on top instead, which is the only
orientation compatible with closure on small supports.  (On eight-point
supports closure provably fails for every total order; the equivariant
algebra module documents the lone violating slice.)
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

from .errors import IndexTooSmallError, SearchBudgetExceededError

DEFAULT_BUDGET = 10**6


class Move(NamedTuple):
    """A single rewriting step; ``data`` holds (old edges..., new edges...)."""

    kind: str
    data: tuple


def edge_key(e):
    return (e[1], e[0])


def edge_leq(e1, e2) -> bool:
    """Edge comparison: larger endpoint decides, then smaller endpoint."""
    return edge_key(e1) <= edge_key(e2)


def matching(edges):
    """Canonicalize an iterable of edges; reject loops and repeated labels."""
    seen = set()
    out = []
    for e in edges:
        i, j = int(e[0]), int(e[1])
        if i == j:
            raise ValueError(f"loop edge ({i},{j})")
        if i > j:
            i, j = j, i
        if i < 1:
            raise ValueError(f"labels must be positive, got ({i},{j})")
        for v in (i, j):
            if v in seen:
                raise ValueError(f"label {v} used twice")
            seen.add(v)
        out.append((i, j))
    return tuple(sorted(out, key=edge_key))


def vertices(g):
    return frozenset(v for e in g for v in e)


def max_vertex(g) -> int:
    return max((e[1] for e in g), default=0)


def label_sum(g) -> int:
    return sum(i + j for i, j in g)


def matching_key(g):
    """Sort key realizing the total order on matchings."""
    return (len(g), tuple(sorted((edge_key(e) for e in g), reverse=True)))


def matching_leq(a, b) -> bool:
    return matching_key(a) <= matching_key(b)


def compare(a, b) -> int:
    """Three-way comparison under the total order: -1, 0, or 1."""
    ka, kb = matching_key(a), matching_key(b)
    return (ka > kb) - (ka < kb)


def fmt_matching(g) -> str:
    """Render with the greatest edge first, e.g. ``{(1,4),(2,3)}``."""
    return ("{" + ",".join(f"({i},{j})"
                           for i, j in sorted(g, key=edge_key, reverse=True)) + "}")


# ---------------------------------------------------------------------------
# Moves.


def type1_moves(g, vertex_bound):
    """All growth moves from ``g`` staying within labels <= vertex_bound."""
    used = vertices(g)
    free = [v for v in range(1, vertex_bound + 1) if v not in used]
    out = []
    for ai in range(len(free)):
        for bi in range(ai + 1, len(free)):
            e = (free[ai], free[bi])
            out.append((Move("add_edge", (e,)), matching(g + (e,))))
    for e in g:
        i, j = e
        rest = tuple(f for f in g if f != e)
        for moved, other in ((i, j), (j, i)):
            up = moved + 1
            if up <= vertex_bound and up not in used:
                ne = (other, up) if other < up else (up, other)
                out.append((Move("shift_endpoint", (e, ne)), matching(rest + (ne,))))
    return out


def type2_moves(g):
    """All swap moves from ``g`` (no new labels, so no bound is needed)."""
    partner = {}
    for i, j in g:
        partner[i] = j
        partner[j] = i
    out = []
    for e in g:
        for f in g:
            if e == f:
                continue
            i, j = e
            k, l = f
            if not j < l:
                continue
            rest = tuple(x for x in g if x != e and x != f)
            if k < i:  # nested: k < i < j < l
                gap = range(k + 1, i)
                kind = "swap_nested"
                new = ((k, j), (i, l))
            elif i < k < j:  # crossing: i < k < j < l
                gap = range(k + 1, j)
                kind = "swap_crossing"
                new = ((i, k), (j, l))
            else:
                continue
            if all(partner.get(v, l + j) > j for v in gap if v in partner):
                out.append((Move(kind, (e, f) + new), matching(rest + new)))
    return out


def apply_move(g, move):
    """Replay one move against ``g``; raises ValueError if it does not apply."""
    candidates = type1_moves(g, max(max_vertex(g) + 2, _move_bound(move)))
    candidates += type2_moves(g)
    for m, result in candidates:
        if m == move:
            return result
    raise ValueError(f"move {move} does not apply to {fmt_matching(g)}")


def _move_bound(move):
    return max((v for e in move.data for v in e), default=0)


def replay(g, moves):
    """Apply a witness sequence of moves, returning the final matching."""
    for m in moves:
        g = apply_move(g, m)
    return g


def fmt_move(mv) -> str:
    """One-line rendering of a move for reports and witnesses."""
    def pair(e):
        return f"({e[0]},{e[1]})"

    if mv.kind == "add_edge":
        return f"add_edge {pair(mv.data[0])}"
    if mv.kind == "shift_endpoint":
        old, new = mv.data
        return f"shift_endpoint {pair(old)}->{pair(new)}"
    if mv.kind in ("swap_nested", "swap_crossing"):
        e, f, p, q = mv.data
        return f"{mv.kind} {pair(e)},{pair(f)}->{pair(p)},{pair(q)}"
    if mv.kind == "add_element":
        (v, c), = mv.data
        return f"add_element {v}{c}"
    if mv.kind == "shift_element":
        (v, c), (u, _) = mv.data
        return f"shift_element {v}{c}->{u}{c}"
    return f"{mv.kind} {mv.data}"


# ---------------------------------------------------------------------------
# Order decision procedures (bounded BFS).


def _bfs_reach(a, b, use_swaps, budget, want_witness):
    if a == b:
        return (True, []) if want_witness else True
    nb = len(b)
    maxb = max_vertex(b)
    sumb = label_sum(b)
    if len(a) > nb or max_vertex(a) > maxb or label_sum(a) > sumb:
        return (False, None) if want_witness else False
    if budget is None:
        budget = DEFAULT_BUDGET
    visited = {a}
    parent = {a: None} if want_witness else None
    queue = deque([a])
    spent = 0
    while queue:
        state = queue.popleft()
        spent += 1
        if spent > budget:
            raise SearchBudgetExceededError(budget)
        moves = type1_moves(state, maxb)
        if use_swaps:
            moves += type2_moves(state)
        for mv, nxt in moves:
            if nxt in visited:
                continue
            if len(nxt) > nb or label_sum(nxt) > sumb:
                continue
            if want_witness:
                parent[nxt] = (state, mv)
            if nxt == b:
                if not want_witness:
                    return True
                path = []
                cur = nxt
                while parent[cur] is not None:
                    prev, mv2 = parent[cur]
                    path.append(mv2)
                    cur = prev
                return True, list(reversed(path))
            visited.add(nxt)
            queue.append(nxt)
    return (False, None) if want_witness else False


def leq_type1(a, b, budget=None) -> bool:
    """Is ``b`` reachable from ``a`` by growth moves alone?"""
    return _bfs_reach(matching(a), matching(b), False, budget, False)


def leq_full(a, b, budget=None, witness=False):
    """Is ``b`` reachable from ``a`` by growth and swap moves?

    With ``witness=True`` returns (verdict, move list or None); the move
    list replays from ``a`` to ``b`` via :func:`replay`.
    """
    res = _bfs_reach(matching(a), matching(b), True, budget, witness)
    return res


# ---------------------------------------------------------------------------
# The standard family and antichain search.


def gamma_family(n):
    """The n-edge family on labels {1..2n}: edges (2i+1, 2i+4) plus (2, 2n-1).

    Its members are pairwise unreachable from one another under growth moves
    alone but form a chain once swap moves are allowed.  Defined for n >= 3.
    """
    if n < 3:
        raise IndexTooSmallError(f"family defined for n >= 3, got {n}")
    edges = [(2 * i + 1, 2 * i + 4) for i in range(n - 1)]
    edges.append((2, 2 * n - 1))
    return matching(edges)


def relabel(g, perm):
    """Apply a label permutation (dict, identity where missing)."""
    return matching(tuple((perm.get(i, i), perm.get(j, j)) for i, j in g))


def _rotation(i):
    """The permutation sending 2 to i+1 and k to k-1 for 3 <= k <= i+1."""
    perm = {2: i + 1}
    for k in range(3, i + 2):
        perm[k] = k - 1
    return perm


def family_rotation_chain(n):
    """Replay the stepwise swap-move chain between rotated copies of
    ``gamma_family(n)``.

    Returns a dict with the per-step record ``(i, source, target, move)``
    (move is None when the target is not one swap away — reported, never
    assumed), the final transposition step that swaps the top two labels,
    and whether the end matching grows into ``gamma_family(n+1)`` using
    growth moves alone.
    """
    g = gamma_family(n)
    top = 2 * n
    steps = []
    for i in range(2, top - 3):
        src = relabel(g, _rotation(i))
        tgt = relabel(g, _rotation(i + 1))
        move = next((mv for mv, img in type2_moves(src) if img == tgt), None)
        steps.append((i, src, tgt, move))
    last = relabel(g, _rotation(top - 3))
    final = relabel(last, {top - 1: top, top: top - 1})
    final_move = next((mv for mv, img in type2_moves(last) if img == final), None)
    grows = leq_type1(final, gamma_family(n + 1))
    return {
        "family_index": n,
        "steps": steps,
        "final_step": (last, final, final_move),
        "grows_into_next": grows,
    }


def all_matchings(edge_count, vertex_bound):
    """Every matching with exactly ``edge_count`` edges on labels <= bound,
    in a deterministic order."""
    out = []

    def build(avail, k, acc):
        if k == 0:
            out.append(matching(acc))
            return
        if len(avail) < 2 * k:
            return
        first = avail[0]
        rest = avail[1:]
        # first stays unused
        build(rest, k, acc)
        for idx in range(len(rest)):
            build(rest[:idx] + rest[idx + 1:], k - 1, acc + [(first, rest[idx])])

    build(list(range(1, vertex_bound + 1)), edge_count, [])
    return sorted(set(out), key=matching_key)


def antichain_search(edge_count, vertex_bound, order="type1", budget=None):
    """Greedy maximal antichain among matchings of a fixed edge count.

    ``order`` selects the comparison ('type1' for growth moves only, 'full'
    for both families).  Deterministic: candidates are scanned in the total
    order, and each is kept iff incomparable with everything kept so far.
    """
    if order == "type1":
        leq = lambda a, b: leq_type1(a, b, budget)
    elif order == "full":
        leq = lambda a, b: leq_full(a, b, budget)
    else:
        raise ValueError(f"order must be 'type1' or 'full', got {order!r}")
    chosen = []
    for cand in all_matchings(edge_count, vertex_bound):
        if all(not leq(cand, kept) and not leq(kept, cand) for kept in chosen):
            chosen.append(cand)
    return chosen


def max_antichain(elements, leq):
    """A maximum antichain of a small finite poset, with certificate.

    Chain-cover duality: the width equals the element count minus a
    maximum matching on the strict comparability relation, and the
    uncovered side of the corresponding minimum vertex cover is an
    antichain of exactly that size.  Returns (antichain, width).
    Quadratic in the universe size — meant for sandbox-scale posets.
    """
    elems = list(elements)
    n = len(elems)
    succ = [[v for v in range(n)
             if v != u and leq(elems[u], elems[v])] for u in range(n)]
    match_l = [-1] * n
    match_r = [-1] * n

    def augment(u, seen):
        for v in succ[u]:
            if v in seen:
                continue
            seen.add(v)
            if match_r[v] == -1 or augment(match_r[v], seen):
                match_l[u] = v
                match_r[v] = u
                return True
        return False

    matched = sum(augment(u, set()) for u in range(n))
    # Koenig: alternating reachability from unmatched left vertices.
    frontier = deque(u for u in range(n) if match_l[u] == -1)
    zl = set(frontier)
    zr = set()
    while frontier:
        u = frontier.popleft()
        for v in succ[u]:
            if v in zr:
                continue
            zr.add(v)
            w = match_r[v]
            if w != -1 and w not in zl:
                zl.add(w)
                frontier.append(w)
    antichain = [elems[i] for i in range(n) if i in zl and i not in zr]
    assert len(antichain) == n - matched
    return antichain, n - matched


# ---------------------------------------------------------------------------
# Degree-one sandbox: colored sets.  The same growth-move story one degree
# down: elements carry a fixed color, moves add a fresh element or shift an
# element up onto a free slot, and colors never change.


COLORS = ("R", "B")


def colored_set(pairs):
    """Canonicalize {(element, color), ...}; colors are 'R' or 'B'."""
    seen = set()
    out = []
    for elem, color in pairs:
        elem = int(elem)
        if elem < 1:
            raise ValueError(f"elements must be positive, got {elem}")
        if color not in COLORS:
            raise ValueError(f"color must be one of {COLORS}, got {color!r}")
        if elem in seen:
            raise ValueError(f"element {elem} used twice")
        seen.add(elem)
        out.append((elem, color))
    return tuple(sorted(out))


def colored_word(s):
    """Colors read in increasing element order."""
    return tuple(color for _, color in s)


def colored_key(s):
    """Display/pivot order: compare supports from the largest element down,
    then color words letter by letter with R before B."""
    support = tuple(sorted((e for e, _ in s), reverse=True))
    word = tuple(0 if c == "R" else 1 for c in colored_word(s))
    return (len(s), support, word)


def fmt_colored_set(s) -> str:
    return "{" + ",".join(f"{e}{c}" for e, c in s) + "}"


def degree_one_moves(s, vertex_bound):
    """Growth moves for colored sets: add a fresh colored element or shift
    an element up by one onto a free slot (keeping its color)."""
    used = {e for e, _ in s}
    out = []
    for v in range(1, vertex_bound + 1):
        if v in used:
            continue
        for color in COLORS:
            out.append(
                (Move("add_element", ((v, color),)), colored_set(s + ((v, color),)))
            )
    for elem, color in s:
        up = elem + 1
        if up <= vertex_bound and up not in used:
            rest = tuple(p for p in s if p != (elem, color))
            out.append(
                (
                    Move("shift_element", ((elem, color), (up, color))),
                    colored_set(rest + ((up, color),)),
                )
            )
    return out


def degree_one_leq(a, b, budget=None) -> bool:
    """BFS reachability for colored sets under growth moves."""
    a, b = colored_set(a), colored_set(b)
    if a == b:
        return True
    maxb = max((e for e, _ in b), default=0)
    sumb = sum(e for e, _ in b)
    if len(a) > len(b) or sum(e for e, _ in a) > sumb:
        return False
    if max((e for e, _ in a), default=0) > maxb:
        return False
    for color in COLORS:
        if sum(1 for _, c in a if c == color) > sum(1 for _, c in b if c == color):
            return False
    if budget is None:
        budget = DEFAULT_BUDGET
    visited = {a}
    queue = deque([a])
    spent = 0
    while queue:
        state = queue.popleft()
        spent += 1
        if spent > budget:
            raise SearchBudgetExceededError(budget)
        for _, nxt in degree_one_moves(state, maxb):
            if nxt in visited:
                continue
            if len(nxt) > len(b) or sum(e for e, _ in nxt) > sumb:
                continue
            if nxt == b:
                return True
            visited.add(nxt)
            queue.append(nxt)
    return False


def all_colored_sets(max_size, vertex_bound):
    """Every colored set with at most ``max_size`` elements on labels <= bound."""
    from itertools import combinations, product

    out = [colored_set(())]
    for size in range(1, max_size + 1):
        for support in combinations(range(1, vertex_bound + 1), size):
            for colors in product(COLORS, repeat=size):
                out.append(colored_set(zip(support, colors)))
    return sorted(set(out), key=colored_key)
