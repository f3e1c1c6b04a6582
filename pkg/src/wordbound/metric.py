"""Word length and ball enumeration over the implicit Cayley graph.

Distances are computed by hash-based breadth-first search from the identity,
with an optional bidirectional mode for deep queries in infinite groups.
Frontier order is deterministic (FIFO, letters in ascending symbol id), so
geodesic witnesses are reproducible across runs and platforms.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass

from .errors import ResourceLimitExceeded

DEFAULT_MEM_LIMIT = 1 << 30  # 1 GiB
_ENTRY_OVERHEAD = 160  # rough dict-entry + value-tuple bytes per visited node


def memory_limit(explicit=None):
    """Resolve the BFS memory budget in bytes.

    Priority: explicit argument, then the WORDBOUND_MEM_LIMIT environment
    variable, then 1 GiB.
    """
    if explicit is not None:
        return explicit
    env = os.environ.get("WORDBOUND_MEM_LIMIT")
    if env:
        return int(env)
    return DEFAULT_MEM_LIMIT


@dataclass
class LengthCert:
    """Word length of an element with a geodesic witness.

    ``length`` is None when the element was not found within ``cap`` (every
    element of length <= cap was enumerated).  When present, ``witness`` is a
    tuple of symbol ids of exactly ``length`` letters evaluating to
    ``element``.
    """

    element: object
    length: object
    witness: object
    cap: int
    explored: int

    @property
    def in_ball(self):
        return self.length is not None


@dataclass
class Ball:
    """Exact distances from the identity out to ``radius``.

    ``table`` maps each normal form to ``(length, parent_symbol)``; the
    identity has parent symbol None.
    """

    group: object
    genset: object
    radius: int
    table: dict

    def __contains__(self, g):
        return g in self.table

    def __len__(self):
        return len(self.table)

    def length(self, g):
        return self.table[g][0]

    def word_to(self, g):
        """Reconstruct the stored geodesic word for an element of the ball."""
        S = self.genset
        G = self.group
        syms = []
        while True:
            _, sym = self.table[g]
            if sym is None:
                break
            syms.append(sym)
            g = G.mul(g, S.element(S.inv_symbol(sym)))
        return tuple(reversed(syms))

    def at_distance(self, r):
        return [g for g, (d, _) in self.table.items() if d == r]


class _Budget:
    """Approximate byte accounting for visited-set growth."""

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def charge(self, key):
        self.used += sys.getsizeof(key) + _ENTRY_OVERHEAD
        return self.used <= self.limit


def ball(G, S, radius, mem_limit=None):
    """BFS ball of the given radius around the identity.

    Raises ResourceLimitExceeded (carrying the last completed radius) if the
    memory budget runs out.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    budget = _Budget(memory_limit(mem_limit))
    e = G.identity()
    table = {e: (0, None)}
    budget.charge(e)
    frontier = [e]
    for depth in range(1, radius + 1):
        nxt = []
        for g in frontier:
            for sym in S.symbols():
                h = G.mul(g, S.element(sym))
                if h not in table:
                    if not budget.charge(h):
                        raise ResourceLimitExceeded(
                            f"ball memory budget exhausted at radius {depth - 1}",
                            partial_radius=depth - 1,
                            explored=len(table),
                        )
                    table[h] = (depth, sym)
                    nxt.append(h)
        frontier = nxt
    return Ball(group=G, genset=S, radius=radius, table=table)


def word_length(G, S, g, cap, mode="auto", mem_limit=None):
    """Exact word length of g over S, searched up to ``cap``.

    ``mode`` is "auto", "bfs" or "bidirectional".  Auto switches to the
    bidirectional search for deep queries (cap > 8) in infinite groups; the
    two modes always agree on the computed length.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    G.check(g)
    if g == G.identity():
        return LengthCert(element=g, length=0, witness=(), cap=cap, explored=1)
    if mode == "auto":
        mode = "bidirectional" if cap > 8 and not G.is_finite else "bfs"
    if mode == "bfs":
        return _length_bfs(G, S, g, cap, memory_limit(mem_limit))
    if mode == "bidirectional":
        return _length_bidirectional(G, S, g, cap, memory_limit(mem_limit))
    raise ValueError(f"unknown mode {mode!r}")


def _length_bfs(G, S, g, cap, limit):
    budget = _Budget(limit)
    e = G.identity()
    table = {e: (0, None)}
    budget.charge(e)
    frontier = [e]
    for depth in range(1, cap + 1):
        nxt = []
        for u in frontier:
            for sym in S.symbols():
                v = G.mul(u, S.element(sym))
                if v in table:
                    continue
                if not budget.charge(v):
                    raise ResourceLimitExceeded(
                        f"search memory budget exhausted at depth {depth - 1}",
                        partial_radius=depth - 1,
                        explored=len(table),
                    )
                table[v] = (depth, sym)
                if v == g:
                    b = Ball(group=G, genset=S, radius=depth, table=table)
                    return LengthCert(
                        element=g, length=depth, witness=b.word_to(g),
                        cap=cap, explored=len(table),
                    )
                nxt.append(v)
        frontier = nxt
    return LengthCert(element=g, length=None, witness=None, cap=cap,
                      explored=len(table))


def _length_bidirectional(G, S, g, cap, limit):
    """Meet-in-the-middle BFS from the identity and from the target.

    Both searches use the full symmetric alphabet; a backward entry for v
    stores the first symbol of a geodesic continuation from v to g.
    """
    budget = _Budget(limit)
    e = G.identity()
    fwd = {e: (0, None)}
    bwd = {g: (0, None)}
    budget.charge(e)
    budget.charge(g)
    f_frontier, b_frontier = [e], [g]
    df = db = 0
    best = None  # (total, meet element)
    if g in fwd:  # g == e is handled by the caller
        raise AssertionError
    while True:
        if best is not None and df + db >= best[0]:
            break
        if df + db >= cap:
            break
        if not f_frontier and not b_frontier:
            break
        expand_fwd = (
            b_frontier == [] or (f_frontier != [] and len(f_frontier) <= len(b_frontier))
        )
        if expand_fwd:
            df += 1
            nxt = []
            for u in f_frontier:
                for sym in S.symbols():
                    v = G.mul(u, S.element(sym))
                    if v in fwd:
                        continue
                    if not budget.charge(v):
                        raise ResourceLimitExceeded(
                            "search memory budget exhausted",
                            partial_radius=df - 1,
                            explored=len(fwd) + len(bwd),
                        )
                    fwd[v] = (df, sym)
                    nxt.append(v)
                    if v in bwd:
                        total = df + bwd[v][0]
                        if best is None or total < best[0]:
                            best = (total, v)
            f_frontier = nxt
        else:
            db += 1
            nxt = []
            for u in b_frontier:
                for sym in S.symbols():
                    v = G.mul(u, S.element(sym))
                    if v in bwd:
                        continue
                    if not budget.charge(v):
                        raise ResourceLimitExceeded(
                            "search memory budget exhausted",
                            partial_radius=db - 1,
                            explored=len(fwd) + len(bwd),
                        )
                    # walking v -> u -> ... -> g applies the inverse letter
                    bwd[v] = (db, S.inv_symbol(sym))
                    nxt.append(v)
                    if v in fwd:
                        total = db + fwd[v][0]
                        if best is None or total < best[0]:
                            best = (total, v)
            b_frontier = nxt
    explored = len(fwd) + len(bwd)
    if best is None or best[0] > cap:
        return LengthCert(element=g, length=None, witness=None, cap=cap,
                          explored=explored)
    total, meet = best
    head = Ball(group=G, genset=S, radius=df, table=fwd).word_to(meet)
    tail = []
    v = meet
    while v != g:
        _, sym = bwd[v]
        tail.append(sym)
        v = G.mul(v, S.element(sym))
    witness = head + tuple(tail)
    return LengthCert(element=g, length=total, witness=witness, cap=cap,
                      explored=explored)


def length_profile(G, labeled_gensets, g, cap, mode="auto"):
    """Word length of g across a parameterized family of alphabets.

    ``labeled_gensets`` is an iterable of (label, GenSet) pairs; returns
    (label, length) pairs in the same order.
    """
    out = []
    for label, S in labeled_gensets:
        cert = word_length(G, S, g, cap, mode=mode)
        out.append((label, cert.length))
    return out
