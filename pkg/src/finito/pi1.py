"""Fundamental groups of finite T0 spaces from their cover digraphs.

Loops are walks along cover edges (in either direction).  The group is
presented through the edge-path group of the order complex: generators are
the comparability edges outside a spanning tree, relators come from
three-point chains.  Arbitrary loop equivalence is not decided (that is
the word problem); the module exposes rewriting moves, word images and
abelian invariants instead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import IllFormedMoveError, IllFormedPathError, NotConnectedError
from .poset import FinitePoset
from .snf import matrix_rank


@dataclass(frozen=True)
class HEdge:
    """One step along a cover edge, in either direction."""

    origin: int
    end: int

    def inverse(self) -> "HEdge":
        return HEdge(self.end, self.origin)


@dataclass(frozen=True)
class HPath:
    """Composable sequence of cover steps; empty paths sit at the basepoint."""

    basepoint: int
    edges: tuple[HEdge, ...] = ()

    @property
    def origin(self) -> int:
        return self.basepoint

    @property
    def end(self) -> int:
        return self.edges[-1].end if self.edges else self.basepoint

    def points(self) -> list[int]:
        pts = [self.basepoint]
        for e in self.edges:
            pts.append(e.end)
        return pts

    def is_loop(self) -> bool:
        return self.origin == self.end

    def reversed(self) -> "HPath":
        return HPath(self.end, tuple(e.inverse() for e in reversed(self.edges)))

    def __mul__(self, other: "HPath") -> "HPath":
        if self.end != other.origin:
            raise IllFormedPathError("paths do not compose")
        return HPath(self.basepoint, self.edges + other.edges)


def validate_path(p: FinitePoset, path: HPath) -> None:
    """Raise IllFormedPathError unless every step is a cover edge and
    consecutive steps compose."""
    covers = p.hasse().covers
    at = path.basepoint
    for e in path.edges:
        if e.origin != at:
            raise IllFormedPathError(f"edge {e} does not start at {at}")
        if (e.origin, e.end) not in covers and (e.end, e.origin) not in covers:
            raise IllFormedPathError(f"{e} is not a cover edge")
        at = e.end


def is_monotonic(p: FinitePoset, path: HPath) -> bool:
    """True iff all steps ascend, or all descend, in the cover digraph."""
    validate_path(p, path)
    ups = [p.leq(e.origin, e.end) for e in path.edges]
    return all(ups) or not any(ups)


def close_move(p: FinitePoset, loop: HPath, cut, insert=None) -> HPath:
    """One closeness move between loops.

    With ``insert=(xi2, xi3)``: splice the monotonic pair at edge position
    ``cut``; the pair must form a closed detour at that point.  Without
    ``insert``: ``cut=(i, j, k)`` deletes ``edges[i:k]``, where
    ``edges[i:j]`` and ``edges[j:k]`` are monotonic and the deleted
    segment returns to its start.
    """
    validate_path(p, loop)
    if not loop.is_loop():
        raise IllFormedMoveError("close moves are defined on loops")
    pts = loop.points()
    if insert is not None:
        if not isinstance(cut, int) or not 0 <= cut <= len(loop.edges):
            raise IllFormedMoveError("cut must be an edge position")
        xi2, xi3 = insert
        for xi in (xi2, xi3):
            if not is_monotonic(p, xi):
                raise IllFormedMoveError("inserted paths must be monotonic")
        at = pts[cut]
        if xi2.origin != at or xi2.end != xi3.origin or xi3.end != at:
            raise IllFormedMoveError("inserted pair must close up at the cut point")
        edges = loop.edges[:cut] + xi2.edges + xi3.edges + loop.edges[cut:]
        return HPath(loop.basepoint, edges)
    i, j, k = cut
    if not 0 <= i <= j <= k <= len(loop.edges):
        raise IllFormedMoveError("cut positions out of order")
    if pts[i] != pts[k]:
        raise IllFormedMoveError("deleted segment must return to its start")
    xi2 = HPath(pts[i], loop.edges[i:j])
    xi3 = HPath(pts[j], loop.edges[j:k])
    if not is_monotonic(p, xi2) or not is_monotonic(p, xi3):
        raise IllFormedMoveError("deleted segment must split into monotonic halves")
    return HPath(loop.basepoint, loop.edges[:i] + loop.edges[k:])


# -- edge-path presentations --------------------------------------------------


@dataclass(frozen=True)
class GroupPresentation:
    """Generators 1..g with relator words of signed letters, freely reduced."""

    generators: int
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        reduced = tuple(
            r for r in (free_reduce(rel) for rel in self.relators) if r
        )
        object.__setattr__(self, "relators", reduced)
        for rel in self.relators:
            for letter in rel:
                if letter == 0 or abs(letter) > self.generators:
                    raise ValueError(f"letter {letter} out of range")


def free_reduce(word) -> tuple[int, ...]:
    out = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(word) -> tuple[int, ...]:
    w = list(free_reduce(word))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def invert_word(word) -> tuple[int, ...]:
    return tuple(-letter for letter in reversed(word))


def spanning_tree(p: FinitePoset, x0: int) -> frozenset[tuple[int, int]]:
    """BFS tree of the comparability graph rooted at x0, smallest index
    first; edges are index-sorted pairs."""
    if not p.is_connected():
        raise NotConnectedError("the space is not connected")
    seen = {x0}
    tree = set()
    queue = deque([x0])
    while queue:
        v = queue.popleft()
        for w in range(p.n):
            if w not in seen and w != v and p.comparable(v, w):
                seen.add(w)
                tree.add((min(v, w), max(v, w)))
                queue.append(w)
    return frozenset(tree)


def comparability_edges(p: FinitePoset) -> list[tuple[int, int]]:
    """1-skeleton of the order complex: index-sorted comparable pairs."""
    return [
        (i, j)
        for i in range(p.n)
        for j in range(i + 1, p.n)
        if p.comparable(i, j)
    ]


def _edge_letter(p, tree, gen_index, a, b) -> tuple[int, ...]:
    """Word of the skeleton edge traversed from a to b."""
    pair = (min(a, b), max(a, b))
    if pair in tree:
        return ()
    g = gen_index[pair]
    return (g,) if p.leq(a, b) else (-g,)


def edge_path_presentation(p: FinitePoset, x0: int) -> GroupPresentation:
    """Edge-path presentation of the fundamental group at x0.

    Generators are comparability edges outside the spanning tree (so for
    height <= 2 the group is free of rank 1 - euler characteristic);
    each three-point chain x < y < z contributes the relator saying the
    two short steps compose to the long one.
    """
    tree = spanning_tree(p, x0)
    gens = [e for e in comparability_edges(p) if e not in tree]
    gen_index = {e: i + 1 for i, e in enumerate(gens)}
    relators = []
    for chain in p.chains():
        if len(chain) != 3:
            continue
        x, y, z = chain
        word = free_reduce(
            _edge_letter(p, tree, gen_index, x, y)
            + _edge_letter(p, tree, gen_index, y, z)
            + invert_word(_edge_letter(p, tree, gen_index, x, z))
        )
        if word:
            relators.append(word)
    return GroupPresentation(len(gens), tuple(relators))


def loop_to_word(p: FinitePoset, x0: int, loop: HPath, tree=None) -> tuple[int, ...]:
    """Image of a loop in the presentation: tree edges vanish, any other
    edge maps to its generator, signed by traversal direction."""
    if tree is None:
        tree = spanning_tree(p, x0)
    validate_path(p, loop)
    if loop.basepoint != x0 or not loop.is_loop():
        raise IllFormedPathError(f"not a loop at {x0}")
    gens = [e for e in comparability_edges(p) if e not in tree]
    gen_index = {e: i + 1 for i, e in enumerate(gens)}
    word = []
    for e in loop.edges:
        word.extend(_edge_letter(p, tree, gen_index, e.origin, e.end))
    return free_reduce(word)


def tietze_simplify(pres: GroupPresentation) -> GroupPresentation:
    """Eliminate generators defined by short relators.

    A generator occurring exactly once in some relator is rewritten away
    (this covers length-1 and length-2 defining relators); relators are
    freely and cyclically reduced and duplicates and empties dropped.  The
    isomorphism class of the presented group never changes.
    """
    g = pres.generators
    relators = {cyclic_reduce(r) for r in pres.relators}
    relators.discard(())
    while True:
        target = None
        for rel in sorted(relators, key=lambda r: (len(r), r)):
            once = sorted(
                a
                for a in {abs(l) for l in rel}
                if sum(1 for l in rel if abs(l) == a) == 1
            )
            if once:
                target = (rel, once[0])
                break
        if target is None:
            break
        rel, a = target
        pos = next(i for i, l in enumerate(rel) if abs(l) == a)
        rot = rel[pos:] + rel[:pos]
        # rot starts with a^s, so a = inverse(rest)^s
        expr = invert_word(rot[1:]) if rot[0] > 0 else rot[1:]
        relators.discard(rel)

        def renumber(letter):
            s = 1 if letter > 0 else -1
            v = abs(letter)
            return s * (v - 1) if v > a else s * v

        new_relators = set()
        for r in relators:
            out = []
            for letter in r:
                if abs(letter) == a:
                    out.extend(expr if letter > 0 else invert_word(expr))
                else:
                    out.append(letter)
            w = cyclic_reduce(tuple(renumber(l) for l in free_reduce(out)))
            if w:
                new_relators.add(w)
        relators = new_relators
        g -= 1
    return GroupPresentation(g, tuple(sorted(relators, key=lambda r: (len(r), r))))


def free_rank(pres: GroupPresentation) -> int | None:
    """Rank when the presentation is visibly free, else None."""
    return pres.generators if not pres.relators else None


def first_betti(p: FinitePoset) -> int:
    """Rank of the abelianized fundamental group (equals homology b1)."""
    pres = edge_path_presentation(p, 0)
    if not pres.relators:
        return pres.generators
    matrix = []
    for rel in pres.relators:
        row = [0] * pres.generators
        for letter in rel:
            row[abs(letter) - 1] += 1 if letter > 0 else -1
        matrix.append(row)
    return pres.generators - matrix_rank(matrix)


def abelianized(word, generators: int) -> list[int]:
    """Exponent vector of a word."""
    vec = [0] * generators
    for letter in word:
        vec[abs(letter) - 1] += 1 if letter > 0 else -1
    return vec


def presentation_text(pres: GroupPresentation) -> str:
    """Conventional <generators | relators> rendering; lowercase letters
    are generators and uppercase their inverses."""

    def name(i):
        return chr(ord("a") + i - 1) if pres.generators <= 26 else f"x{i}"

    def letter(l):
        if pres.generators <= 26:
            c = name(abs(l))
            return c if l > 0 else c.upper()
        return name(abs(l)) if l > 0 else f"{name(abs(l))}^-1"

    gens = ", ".join(name(i) for i in range(1, pres.generators + 1))
    sep = "" if pres.generators <= 26 else " "
    rels = ", ".join(sep.join(letter(l) for l in r) for r in pres.relators)
    return f"< {gens} | {rels} >" if rels else f"< {gens} | >"
