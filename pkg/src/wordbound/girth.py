"""Girth of Cayley graphs: shortest simple loop at the identity.

Words are tuples of symbol ids over a GenSet alphabet.  An involution letter
is its own formal inverse, so an involution edge is a single undirected edge
and never counts as a 2-cycle.  The production search prunes with a
half-radius ball (meet-in-the-middle over BFS tree edges); a plain
iterative-deepening search over cyclically reduced words is kept as the
reference implementation and the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .metric import ball


def _check_word(S, w):
    for sym in w:
        if not 0 <= sym < len(S.letters):
            raise DomainError(f"unknown symbol id {sym}")


def reduce_word(S, w):
    """Freely reduce: drop adjacent (x, involution(x)) pairs."""
    _check_word(S, w)
    out = []
    for sym in w:
        if out and sym == S.inv_symbol(out[-1]):
            out.pop()
        else:
            out.append(sym)
    return tuple(out)


def cyclic_reduce(S, w):
    """Reduce, then strip matching inverse pairs across the seam.

    Returns a cyclically reduced word conjugate-equivalent to the input.
    """
    w = list(reduce_word(S, w))
    while len(w) >= 2 and w[0] == S.inv_symbol(w[-1]):
        w = w[1:-1]
    return tuple(w)


def is_cyclically_reduced(S, w):
    if w != reduce_word(S, w):
        return False
    return len(w) < 2 or w[0] != S.inv_symbol(w[-1])


@dataclass
class GirthResult:
    """Shortest relation length, or evidence that it exceeds the cap.

    ``value`` is None when no simple loop of length <= cap exists; the
    witness, when present, is a nonempty cyclically reduced word evaluating
    to the identity along pairwise-distinct vertices.
    """

    value: object
    cap: int
    witness: object = None

    @property
    def greater_than_cap(self):
        return self.value is None

    def __str__(self):
        return f"> {self.cap}" if self.value is None else str(self.value)


def _validate_witness(G, S, w):
    assert w, "witness must be nonempty"
    assert is_cyclically_reduced(S, w), "witness must be cyclically reduced"
    seen = set()
    v = G.identity()
    for sym in w:
        assert v not in seen, "witness path revisits a vertex"
        seen.add(v)
        v = G.mul(v, S.element(sym))
    assert v == G.identity(), "witness does not evaluate to the identity"


def girth(G, S, cap, mem_limit=None):
    """Least length <= cap of a nonempty cyclically reduced relation over S.

    Minimality forces the witness path to be a simple loop.  Requires the
    alphabet to be deduplicated (make_symmetric guarantees this).
    """
    if cap < 2:
        raise ValueError("cap must be >= 2")
    if len(set(S.letters)) != len(S.letters):
        raise DomainError("alphabet carries duplicate elements")
    radius = (cap + 1) // 2
    B = ball(G, S, radius, mem_limit=mem_limit)
    table = B.table

    def parent_of(v):
        d, sym = table[v]
        if sym is None:
            return None
        return G.mul(v, S.element(S.inv_symbol(sym)))

    parents = {v: parent_of(v) for v in table}
    best = None  # (length, u, sym, v)
    for u in table:  # insertion order == BFS discovery order: deterministic
        du = table[u][0]
        for sym in S.symbols():
            v = G.mul(u, S.element(sym))
            if v not in table:
                continue
            if parents[u] == v or parents[v] == u:
                continue  # BFS tree edge, not a cycle closer
            total = du + table[v][0] + 1
            if best is None or total < best[0]:
                best = (total, u, sym, v)
    if best is None or best[0] > cap:
        return GirthResult(value=None, cap=cap)
    total, u, sym, v = best
    back = B.word_to(v)
    witness = B.word_to(u) + (sym,) + tuple(
        S.inv_symbol(s) for s in reversed(back)
    )
    _validate_witness(G, S, witness)
    return GirthResult(value=total, cap=cap, witness=witness)


def girth_reference(G, S, cap):
    """Iterative deepening over cyclically reduced words; exponential, small
    caps only.  Agreement with :func:`girth` is part of the contract."""
    if cap < 2:
        raise ValueError("cap must be >= 2")
    e = G.identity()

    def dfs(word, value, remaining):
        if remaining == 0:
            if value == e and word[0] != S.inv_symbol(word[-1]):
                return tuple(word)
            return None
        for sym in S.symbols():
            if word and sym == S.inv_symbol(word[-1]):
                continue
            word.append(sym)
            got = dfs(word, G.mul(value, S.element(sym)), remaining - 1)
            if got is not None:
                return got
            word.pop()
        return None

    for n in range(2, cap + 1):
        got = dfs([], e, n)
        if got is not None:
            witness = got
            _validate_witness(G, S, witness)
            return GirthResult(value=n, cap=cap, witness=witness)
    return GirthResult(value=None, cap=cap)


@dataclass
class LoopVerdict:
    """Outcome of the repeated-word simple-loop construction."""

    ok: bool
    loop_length: object = None
    reason: str = ""


def simple_loop_check(G, S, g, w):
    """Walk the cyclically reduced form of w, order(g) times, from the
    identity, and verify the path is a simple loop.

    Returns LoopVerdict(ok=True, loop_length=n*|w'|) on success.
    """
    _check_word(S, w)
    if S.eval_word(w) != g:
        return LoopVerdict(ok=False, reason="word does not evaluate to the element")
    n = G.element_order(g, cap=G.size)
    if not isinstance(n, int):
        return LoopVerdict(ok=False, reason="element is not torsion")
    if n == 1:
        return LoopVerdict(ok=False, reason="identity yields an empty loop")
    wp = cyclic_reduce(S, w)
    if not wp:
        return LoopVerdict(ok=False, reason="word is conjugate to the empty word")
    path = wp * n
    seen = set()
    v = G.identity()
    for sym in path:
        if v in seen:
            return LoopVerdict(ok=False, reason="path revisits a vertex")
        seen.add(v)
        v = G.mul(v, S.element(sym))
    if v != G.identity():
        return LoopVerdict(ok=False, reason="path does not close at the identity")
    return LoopVerdict(ok=True, loop_length=len(path))
