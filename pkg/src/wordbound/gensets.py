"""Symmetric generating sets, generation decisions and Smith normal form.

A ``GenSet`` is a formal alphabet: each letter has a symbol id (its index),
carries a group element, and the involution permutation pairs every letter
with the letter carrying its inverse (self-paired exactly for involutions).
Cardinality counts distinct group elements, so {+1, -1} in Z has cardinality
two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import groups as gr
from .errors import DomainError, EmptyGenSetError, UnsupportedFamilyError


@dataclass(frozen=True)
class GenSet:
    """Symmetric generating alphabet over a group.

    Build with :func:`make_symmetric`; the constructor trusts its inputs.
    """

    group: gr.Group
    letters: tuple
    involution: tuple

    @property
    def cardinality(self):
        return len(self.letters)

    def symbols(self):
        return range(len(self.letters))

    def element(self, sym):
        return self.letters[sym]

    def inv_symbol(self, sym):
        return self.involution[sym]

    def symbol_of(self, element):
        return self.letters.index(element)

    def eval_word(self, word):
        """Multiply out a sequence of symbol ids."""
        g = self.group.identity()
        for sym in word:
            g = self.group.mul(g, self.letters[sym])
        return g

    def to_obj(self):
        return {
            "group": gr.group_to_obj(self.group),
            "elements": [gr.element_to_obj(self.group, x) for x in self.letters],
        }

    @staticmethod
    def from_obj(obj):
        G = gr.group_from_obj(obj["group"])
        elems = [gr.element_from_obj(G, o) for o in obj["elements"]]
        return make_symmetric(G, elems)


def make_symmetric(G, elements):
    """Canonicalize elements into a symmetric generating alphabet.

    Drops identities, merges duplicates, and inserts missing inverses right
    after the letter they invert.  Idempotent on already-symmetric input.
    """
    index = {}
    order = []
    for x in elements:
        G.check(x)
        if x == G.identity() or x in index:
            continue
        index[x] = len(order)
        order.append(x)
        xi = G.inv(x)
        if xi not in index:
            index[xi] = len(order)
            order.append(xi)
    if not order:
        raise EmptyGenSetError("all proposed generators were the identity")
    involution = tuple(index[G.inv(x)] for x in order)
    return GenSet(group=G, letters=tuple(order), involution=involution)


# -- Smith normal form ---------------------------------------------------


def smith_normal_form(M):
    """Exact Smith normal form with transforms: returns (D, U, V).

    ``U * M * V == D`` with U, V unimodular and the diagonal of D nonnegative
    with each entry dividing the next.  Pivots are chosen by least absolute
    value to keep intermediate entries small.  Everything is Python-int exact.
    """
    A = [[int(v) for v in row] for row in M]
    if not A or not A[0]:
        raise ValueError("matrix must be nonempty")
    r, c = len(A), len(A[0])
    if any(len(row) != c for row in A):
        raise ValueError("matrix must be rectangular")
    U = [[int(i == j) for j in range(r)] for i in range(r)]
    V = [[int(i == j) for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        for k in range(c):
            A[dst][k] -= q * A[src][k]
        for k in range(r):
            U[dst][k] -= q * U[src][k]

    def add_col(dst, src, q):
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    t = 0
    while t < min(r, c):
        # locate the smallest-magnitude nonzero pivot in the trailing block
        pivot = None
        for i in range(t, r):
            for j in range(t, c):
                v = abs(A[i][j])
                if v and (pivot is None or v < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])
        while True:
            dirty = False
            for i in range(t + 1, r):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, q)
                    if A[i][t]:
                        swap_rows(t, i)  # remainder is a smaller pivot
                        dirty = True
            for j in range(t + 1, c):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # pivot must divide the whole trailing block
            offender = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if A[i][j] % A[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, -1)  # pull the offending row into play
        if A[t][t] < 0:
            for k in range(c):
                A[t][k] = -A[t][k]
            for k in range(r):
                U[t][k] = -U[t][k]
        t += 1

    D = tuple(tuple(row) for row in A)
    return D, tuple(tuple(row) for row in U), tuple(tuple(row) for row in V)


def invariant_factors(M):
    """Nonzero diagonal entries of the Smith normal form, in order."""
    D, _, _ = smith_normal_form(M)
    n = min(len(D), len(D[0]))
    return [D[i][i] for i in range(n) if D[i][i]]


# -- generation decision -------------------------------------------------


@dataclass(frozen=True)
class GenerationResult:
    """Outcome of a generation check with re-validatable evidence."""

    status: str  # "yes" | "no" | "inconclusive"
    reason: str
    evidence: dict = field(default_factory=dict)

    @property
    def is_yes(self):
        return self.status == "yes"

    @property
    def is_no(self):
        return self.status == "no"


def generates(G, S, budget=8, witnesses=None):
    """Decide whether the alphabet S generates G.

    Family-specific: exact for finite groups (closure), lattices and abelian
    products (Smith normal form), Z x finite products (Schreier generators of
    the translation kernel), and the infinite dihedral group.  Heisenberg and
    free groups fall back to bounded witness searches and may return
    "inconclusive".  ``witnesses`` optionally maps a free-group basis index to
    a word (symbol ids) evaluating to that basis letter.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if S.group != G:
        raise DomainError("alphabet belongs to a different group")
    if G.is_finite:
        return _generates_finite(G, S)
    if isinstance(G, gr.IntVector):
        return _generates_lattice(G, S)
    if isinstance(G, gr.DihedralInfinite):
        return _generates_dihedral_infinite(G, S)
    if isinstance(G, gr.Heisenberg):
        return _generates_heisenberg(G, S, budget)
    if isinstance(G, gr.Free):
        return _generates_free(G, S, budget, witnesses)
    if isinstance(G, gr.Product):
        flat = _flatten_abelian(G)
        if flat is not None:
            return _generates_abelian_product(G, S, flat)
        split = _split_z_cross_finite(G)
        if split is not None:
            return _generates_z_cross_finite(G, S, split)
    return GenerationResult("inconclusive", f"no decision procedure for {G}")


def _generates_finite(G, S):
    reached = gr.closure(G, S.letters)
    if len(reached) == G.size:
        return GenerationResult(
            "yes", "closure is the whole group",
            {"closure_size": len(reached), "group_size": G.size},
        )
    missing = next(x for x in G.elements() if x not in reached)
    return GenerationResult(
        "no", "closure is a proper subgroup",
        {"closure_size": len(reached), "group_size": G.size, "missing": missing},
    )


def _generates_lattice(G, S):
    matrix = [[x[i] for x in S.letters] for i in range(G.d)]
    factors = invariant_factors(matrix)
    ok = len(factors) == G.d and all(f == 1 for f in factors)
    return GenerationResult(
        "yes" if ok else "no",
        "invariant factors of the letter matrix",
        {"matrix": matrix, "invariant_factors": factors},
    )


def _flatten_abelian(G):
    """(free_rank, torsion moduli, flatten fn) for abelian product trees."""

    def walk(H):
        if isinstance(H, gr.IntVector):
            return H.d, [], lambda g: list(g)
        if isinstance(H, gr.FiniteCyclic):
            if H.q == 1:
                return 0, [], lambda g: []
            return 0, [H.q], lambda g: [g]
        if isinstance(H, gr.Product):
            left = walk(H.left)
            right = walk(H.right)
            if left is None or right is None:
                return None
            a1, t1, f1 = left
            a2, t2, f2 = right

            def flat(g, f1=f1, f2=f2, a1=a1, t1=t1):
                u = f1(g[0])
                v = f2(g[1])
                # free coordinates first, then torsion coordinates
                return u[:a1] + v[: len(v) - len(t2)] + u[a1:] + v[len(v) - len(t2):]

            return a1 + a2, t1 + t2, flat
        return None

    return walk(G)


def _generates_abelian_product(G, S, flat):
    rank, torsion, flatten = flat
    dim = rank + len(torsion)
    cols = [flatten(x) for x in S.letters]
    for i, q in enumerate(torsion):
        rel = [0] * dim
        rel[rank + i] = q
        cols.append(rel)
    matrix = [[col[i] for col in cols] for i in range(dim)]
    factors = invariant_factors(matrix)
    ok = len(factors) == dim and all(f == 1 for f in factors)
    return GenerationResult(
        "yes" if ok else "no",
        "invariant factors of letters plus torsion relations",
        {"matrix": matrix, "invariant_factors": factors,
         "free_rank": rank, "torsion": list(torsion)},
    )


def _split_z_cross_finite(G):
    """Orientation of a Product as Z x (finite group), if it has one."""
    if isinstance(G.left, gr.IntVector) and G.left.d == 1 and G.right.is_finite:
        return ("left", G.right)
    if isinstance(G.right, gr.IntVector) and G.right.d == 1 and G.left.is_finite:
        return ("right", G.left)
    return None


def _generates_z_cross_finite(G, S, split):
    """Exact decision for Z x F via Schreier generators of the kernel.

    S generates iff the finite components generate F and the Schreier
    generators of (subgroup intersect Z) have gcd 1.
    """
    side, F = split
    if side == "left":
        parts = [(x[0][0], x[1]) for x in S.letters]
    else:
        parts = [(x[1][0], x[0]) for x in S.letters]
    rep = {F.identity(): 0}
    frontier = [F.identity()]
    g = 0
    while frontier:
        nxt = []
        for f in frontier:
            for a, u in parts:
                f2 = F.mul(f, u)
                n2 = rep[f] + a
                if f2 in rep:
                    g = gcd(g, n2 - rep[f2])
                else:
                    rep[f2] = n2
                    nxt.append(f2)
        frontier = nxt
    ok = len(rep) == F.size and g == 1
    if ok:
        reason = "finite image surjects and the translation kernel is all of Z"
    elif len(rep) != F.size:
        reason = "finite components generate a proper subgroup"
    else:
        reason = f"translation kernel has index {g}"
    return GenerationResult(
        "yes" if ok else "no", reason,
        {"finite_image_size": len(rep), "finite_group_size": F.size,
         "translation_gcd": g},
    )


def _generates_dihedral_infinite(G, S):
    reflections = [k for k, e in S.letters if e == 1]
    translations = [k for k, e in S.letters if e == 0]
    if not reflections:
        return GenerationResult(
            "no", "no reflection letter", {"translations": translations})
    base = reflections[0]
    g = 0
    for k in translations:
        g = gcd(g, k)
    for k in reflections:
        g = gcd(g, k - base)
    ok = g == 1
    return GenerationResult(
        "yes" if ok else "no",
        "gcd of reachable translation exponents",
        {"translation_gcd": g, "reflections": reflections,
         "translations": translations},
    )


def _generates_heisenberg(G, S, budget):
    images = [[x[0] for x in S.letters], [x[1] for x in S.letters]]
    factors = invariant_factors(images)
    if not (len(factors) == 2 and all(f == 1 for f in factors)):
        return GenerationResult(
            "no", "abelianized letters do not generate Z^2",
            {"abelianization_factors": factors},
        )
    central = []
    for x in S.letters:
        for y in S.letters:
            _, _, l = G.commutator(x, y)
            if l:
                central.append(l)
    g = 0
    for l in central:
        g = gcd(g, l)
    if g != 1:
        # widen with central elements reached by short products of letters
        seen = {G.identity()}
        frontier = [G.identity()]
        for _ in range(budget):
            nxt = []
            for w in frontier:
                for x in S.letters:
                    h = G.mul(w, x)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
                        if h[0] == 0 and h[1] == 0 and h[2]:
                            central.append(h[2])
                            g = gcd(g, h[2])
            if g == 1:
                break
            frontier = nxt
    if g == 1:
        return GenerationResult(
            "yes", "abelianization surjects and the center is reached",
            {"abelianization_factors": factors,
             "central_exponents": sorted(set(central))},
        )
    return GenerationResult(
        "inconclusive",
        f"center only reached up to index {g} within budget {budget}",
        {"abelianization_factors": factors,
         "central_exponents": sorted(set(central))},
    )


def _generates_free(G, S, budget, witnesses):
    targets = {i: G.generator(i) for i in range(1, G.k + 1)}
    found = {}
    if witnesses:
        for i, word in witnesses.items():
            if S.eval_word(word) != targets[i]:
                raise DomainError(f"witness for basis letter {i} is wrong")
            found[i] = tuple(word)
    missing = [i for i in targets if i not in found]
    if missing:
        # budget-bounded breadth-first search for the remaining basis letters
        seen = {G.identity(): ()}
        frontier = [G.identity()]
        for _ in range(budget):
            if not missing:
                break
            nxt = []
            for w in frontier:
                for sym in S.symbols():
                    h = G.mul(w, S.letters[sym])
                    if h not in seen:
                        seen[h] = seen[w] + (sym,)
                        nxt.append(h)
            frontier = nxt
            for i in list(missing):
                if targets[i] in seen:
                    found[i] = seen[targets[i]]
                    missing.remove(i)
        if missing:
            return GenerationResult(
                "inconclusive",
                f"no witness for basis letters {missing} within budget {budget}",
                {"witnesses": dict(found)},
            )
    return GenerationResult(
        "yes", "every basis letter has a witness word",
        {"witnesses": dict(found)},
    )


# -- quotient maps -------------------------------------------------------


@dataclass(frozen=True)
class QuotientMap:
    """A family-specific surjection used to push generating sets forward."""

    source: gr.Group
    target: gr.Group
    rule: str
    params: tuple = ()

    def apply(self, g):
        self.source.check(g)
        if self.rule == "project-left":
            return g[0]
        if self.rule == "project-right":
            return g[1]
        if self.rule == "abelianize-heisenberg":
            return (g[0], g[1])
        if self.rule == "mod-dihedral":
            return (g[0] % self.params[0], g[1])
        if self.rule == "mod-int":
            return g[0] % self.params[0]
        raise UnsupportedFamilyError(f"unknown quotient rule {self.rule!r}")


def project_left(G):
    if not isinstance(G, gr.Product):
        raise UnsupportedFamilyError("project_left needs a product group")
    return QuotientMap(G, G.left, "project-left")


def project_right(G):
    if not isinstance(G, gr.Product):
        raise UnsupportedFamilyError("project_right needs a product group")
    return QuotientMap(G, G.right, "project-right")


def heisenberg_abelianization():
    return QuotientMap(gr.Heisenberg(), gr.IntVector(2), "abelianize-heisenberg")


def dihedral_mod(p):
    return QuotientMap(gr.DihedralInfinite(), gr.DihedralFinite(p), "mod-dihedral", (p,))


def int_mod(q):
    return QuotientMap(gr.IntVector(1), gr.FiniteCyclic(q), "mod-int", (q,))


def project_genset(pi, S):
    """Push a generating alphabet through a quotient map.

    The image of a generating set generates the target, so the result is a
    genuine generating alphabet whenever S was one.
    """
    if S.group != pi.source:
        raise DomainError("alphabet is not over the source of the quotient")
    images = [pi.apply(x) for x in S.letters]
    nontrivial = [y for y in images if y != pi.target.identity()]
    if not nontrivial:
        raise RuntimeError(
            "all letters map to the identity; the source alphabet cannot "
            "have generated a nontrivial target"
        )
    return make_symmetric(pi.target, nontrivial)
