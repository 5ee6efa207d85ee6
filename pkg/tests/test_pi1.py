import random

import pytest

from finito import (
    FinitePoset,
    GroupPresentation,
    HEdge,
    HPath,
    IllFormedMoveError,
    IllFormedPathError,
    NotConnectedError,
    betti_numbers,
    close_move,
    edge_path_presentation,
    euler_characteristic,
    first_betti,
    free_rank,
    is_contractible,
    is_monotonic,
    loop_to_word,
    presentation_text,
    spanning_tree,
    tietze_simplify,
)
from finito.models import bipartite_model, enumerate_posets
from finito.pi1 import abelianized, free_reduce
from finito.snf import IntRowSpan


def cover_steps(p, x):
    """H-edges leaving x, in either direction."""
    out = []
    for (a, b) in p.hasse().covers:
        if a == x:
            out.append(HEdge(a, b))
        if b == x:
            out.append(HEdge(b, a))
    return out


def random_loop(p, x0, rng, steps=8):
    """Random cover walk from x0, closed off by walking back."""
    edges = []
    at = x0
    for _ in range(rng.randrange(steps)):
        options = cover_steps(p, at)
        if not options:
            break
        e = rng.choice(options)
        edges.append(e)
        at = e.end
        if at == x0 and rng.random() < 0.4:
            return HPath(x0, tuple(edges))
    back = HPath(at, tuple(e.inverse() for e in reversed(edges)))
    return HPath(x0, tuple(edges) + back.edges)


def monotonic_detour(p, a, rng, depth=2):
    """A pair of monotonic paths out of a and back; None if a is isolated."""
    goes_up = rng.random() < 0.5
    forward = []
    at = a
    for _ in range(rng.randrange(1, depth + 1)):
        if goes_up:
            options = [
                HEdge(at, y) for (x, y) in p.hasse().covers if x == at
            ]
        else:
            options = [
                HEdge(at, x) for (x, y) in p.hasse().covers if y == at
            ]
        if not options:
            break
        e = rng.choice(options)
        forward.append(e)
        at = e.end
    if not forward:
        return None
    # walk back monotonically inside the interval between a and at
    lo, hi = (a, at) if goes_up else (at, a)
    backward = []
    cur = at
    while cur != a:
        if goes_up:
            options = [
                HEdge(cur, x)
                for (x, y) in p.hasse().covers
                if y == cur and p.leq(lo, x)
            ]
        else:
            options = [
                HEdge(cur, y)
                for (x, y) in p.hasse().covers
                if x == cur and p.leq(y, hi)
            ]
        e = rng.choice(options)
        backward.append(e)
        cur = e.end
    return HPath(a, tuple(forward)), HPath(at, tuple(backward))


def find_delete_move(p, loop, rng):
    """A random valid deletion (i, j, k) in the loop, if any exists."""
    pts = loop.points()
    length = len(loop.edges)
    options = []
    for i in range(length):
        for k in range(i + 1, length + 1):
            if pts[i] != pts[k]:
                continue
            for j in range(i, k + 1):
                left = HPath(pts[i], loop.edges[i:j])
                right = HPath(pts[j], loop.edges[j:k])
                if is_monotonic(p, left) and is_monotonic(p, right):
                    options.append((i, j, k))
                    break
    return rng.choice(options) if options else None


def test_is_monotonic(ss0):
    assert is_monotonic(ss0, HPath(0))
    assert is_monotonic(ss0, HPath(0, (HEdge(0, 2),)))
    assert is_monotonic(ss0, HPath(2, (HEdge(2, 0),)))
    assert not is_monotonic(ss0, HPath(0, (HEdge(0, 2), HEdge(2, 1))))
    with pytest.raises(IllFormedPathError):
        is_monotonic(ss0, HPath(0, (HEdge(2, 3),)))  # not a cover edge


def test_close_move_insert_and_delete(ss0):
    loop = HPath(0, (HEdge(0, 2), HEdge(2, 1), HEdge(1, 3), HEdge(3, 0)))
    grown = close_move(
        ss0, loop, 1, insert=(HPath(2, (HEdge(2, 1),)), HPath(1, (HEdge(1, 2),)))
    )
    assert grown.is_loop() and len(grown.edges) == 6
    shrunk = close_move(ss0, grown, (1, 2, 3))
    assert shrunk == loop
    # deleting a whole out-and-back loop leaves the empty loop
    out_back = HPath(0, (HEdge(0, 2), HEdge(2, 0)))
    empty = close_move(ss0, out_back, (0, 1, 2))
    assert empty == HPath(0)


def test_close_move_rejects_bad_moves(ss0):
    loop = HPath(0, (HEdge(0, 2), HEdge(2, 0)))
    with pytest.raises(IllFormedMoveError):
        close_move(ss0, HPath(0, (HEdge(0, 2),)), (0, 1, 1))  # not a loop
    with pytest.raises(IllFormedMoveError):
        # inserted pair does not close up at the cut point
        close_move(
            ss0, loop, 0, insert=(HPath(0, (HEdge(0, 2),)), HPath(2, (HEdge(2, 1),)))
        )
    with pytest.raises(IllFormedMoveError):
        # non-monotonic deletion: segment zigzags
        zig = HPath(0, (HEdge(0, 2), HEdge(2, 1), HEdge(1, 2), HEdge(2, 0)))
        close_move(ss0, zig, (0, 1, 4))


def test_presentation_sphere_circle(ss0):
    pres = edge_path_presentation(ss0, 0)
    assert pres.generators == 1 and pres.relators == ()
    assert free_rank(pres) == 1


def test_presentation_counterexample_rank_two(osaki_x):
    pres = edge_path_presentation(osaki_x, 0)
    assert pres.generators == 2 and pres.relators == ()
    assert first_betti(osaki_x) == 2


def test_presentation_disconnected_raises():
    with pytest.raises(NotConnectedError):
        edge_path_presentation(FinitePoset.antichain(2), 0)
    with pytest.raises(NotConnectedError):
        first_betti(FinitePoset.antichain(2))


def test_contractible_presentations_trivialize():
    for k in range(1, 7):
        for p in enumerate_posets(k):
            if not p.is_connected() or not is_contractible(p):
                continue
            simp = tietze_simplify(edge_path_presentation(p, 0))
            assert simp.generators == 0 and simp.relators == ()


def test_height2_presentations_are_free():
    for k in range(1, 8):
        for p in enumerate_posets(k):
            if p.height != 2 or not p.is_connected():
                continue
            pres = edge_path_presentation(p, 0)
            assert pres.relators == ()
            assert pres.generators == 1 - euler_characteristic(p)


def test_tietze_unit_cases():
    trivial = tietze_simplify(GroupPresentation(1, ((1,),)))
    assert trivial.generators == 0 and trivial.relators == ()
    rank1 = tietze_simplify(GroupPresentation(2, ((1, 2),)))
    assert rank1.generators == 1 and rank1.relators == ()
    z2 = tietze_simplify(GroupPresentation(1, ((1, 1),)))
    assert z2.generators == 1 and z2.relators == ((1, 1),)
    # free generators without relators survive untouched
    free2 = tietze_simplify(GroupPresentation(2, ()))
    assert free2.generators == 2


def test_group_presentation_normalizes():
    pres = GroupPresentation(2, ((1, -1), (1, 2, -2, -1)))
    assert pres.relators == ()
    with pytest.raises(ValueError):
        GroupPresentation(1, ((2,),))


def test_first_betti_values(wedge5):
    assert first_betti(FinitePoset.chain(4)) == 0
    assert first_betti(wedge5) == 2
    for i in (1, 2, 3):
        for j in (1, 2, 4):
            assert first_betti(bipartite_model(i, j)) == (i - 1) * (j - 1)


def test_first_betti_matches_homology():
    for k in range(1, 8):
        for p in enumerate_posets(k):
            if not p.is_connected():
                continue
            betti = betti_numbers(p)
            b1 = betti[1] if len(betti) > 1 else 0
            assert first_betti(p) == b1, p


def test_loop_to_word_four_cycle(ss0):
    tree = spanning_tree(ss0, 0)
    loop = HPath(0, (HEdge(0, 2), HEdge(2, 1), HEdge(1, 3), HEdge(3, 0)))
    word = loop_to_word(ss0, 0, loop, tree)
    assert len(word) == 1 and abs(word[0]) == 1
    assert loop_to_word(ss0, 0, HPath(0), tree) == ()
    assert loop_to_word(ss0, 0, HPath(0, (HEdge(0, 2), HEdge(2, 0))), tree) == ()
    reversed_word = loop_to_word(ss0, 0, loop.reversed(), tree)
    assert reversed_word == tuple(-l for l in reversed(word))


def test_loop_to_word_product_law(ss0, osaki_x):
    rng = random.Random(5)
    for p in (ss0, osaki_x):
        tree = spanning_tree(p, 0)
        for _ in range(40):
            a = random_loop(p, 0, rng)
            b = random_loop(p, 0, rng)
            assert loop_to_word(p, 0, a * b, tree) == free_reduce(
                loop_to_word(p, 0, a, tree) + loop_to_word(p, 0, b, tree)
            )


def test_loop_to_word_validates(ss0):
    with pytest.raises(IllFormedPathError):
        loop_to_word(ss0, 0, HPath(0, (HEdge(0, 2),)))
    with pytest.raises(IllFormedPathError):
        loop_to_word(ss0, 1, HPath(0))


def test_close_moves_fix_words_exhaustively():
    # insert moves never change the freely reduced word for height <= 2
    # spaces (the group is free), and never change the image in the
    # abelianization of the presented group in general
    rng = random.Random(9)
    for k in range(2, 7):
        for p in enumerate_posets(k):
            if not p.is_connected():
                continue
            x0 = 0
            tree = spanning_tree(p, x0)
            pres = edge_path_presentation(p, x0)
            relator_span = IntRowSpan(pres.generators)
            for rel in pres.relators:
                relator_span.add(abelianized(rel, pres.generators))
            for _ in range(6):
                loop = random_loop(p, x0, rng)
                word = loop_to_word(p, x0, loop, tree)
                pts = loop.points()
                detour = monotonic_detour(p, rng.choice(pts), rng)
                if detour is None:
                    continue
                cut = rng.choice(
                    [i for i, q in enumerate(pts) if q == detour[0].basepoint]
                )
                moved = close_move(p, loop, cut, insert=detour)
                variants = [loop_to_word(p, x0, moved, tree)]
                deletion = find_delete_move(p, moved, rng)
                if deletion is not None:
                    shrunk = close_move(p, moved, deletion)
                    variants.append(loop_to_word(p, x0, shrunk, tree))
                for new_word in variants:
                    if p.height <= 2:
                        assert new_word == word
                    diff = [
                        a - b
                        for a, b in zip(
                            abelianized(new_word, pres.generators),
                            abelianized(word, pres.generators),
                        )
                    ]
                    assert diff in relator_span, (p, loop, detour)


def test_spanning_tree_deterministic(osaki_x):
    t1 = spanning_tree(osaki_x, 0)
    t2 = spanning_tree(osaki_x, 0)
    assert t1 == t2
    assert len(t1) == osaki_x.n - 1


def test_presentation_text():
    assert presentation_text(GroupPresentation(2, ())) == "< a, b | >"
    assert (
        presentation_text(GroupPresentation(2, ((1, 2, -1, -2),)))
        == "< a, b | abAB >"
    )
