"""Classical validators, invertibility, and coherence cells."""

from __future__ import annotations

import dataclasses
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from opetokit import (
    Bracketing,
    FiniteCategory,
    PathMismatch,
    all_bracketings,
    coherence_cell,
    invert_two_cell,
    is_equivalence_1cell,
    is_invertible_2cell,
    validate_bicategory,
    validate_category,
    validate_lax_functor,
)
from opetokit.bicat import bracketed_value
from opetokit.fixtures import (
    absorbing_constraint_functor,
    arrow_perturbed_functor,
    identity_lax_functor,
    sign_bicategory,
    sign_bicategory_broken_pentagon,
    sign_twisted_endofunctor,
)


# -- categories ----------------------------------------------------------------


def test_group_category_is_clean(z2cat):
    assert validate_category(z2cat).ok


def test_category_totality_violation(z2cat):
    table = dict(z2cat.compose)
    del table[("s", "s")]
    report = validate_category(dataclasses.replace(z2cat, compose=table))
    assert "totality" in report.rules()


def test_category_associativity_violation():
    # three endo-arrows with a deliberately non-associative table
    C = FiniteCategory(
        objects=("o",),
        arrows={"1": ("o", "o"), "a": ("o", "o"), "b": ("o", "o")},
        identities={"o": "1"},
        compose={
            ("1", "1"): "1", ("1", "a"): "a", ("1", "b"): "b",
            ("a", "1"): "a", ("b", "1"): "b",
            ("a", "a"): "b", ("b", "a"): "1", ("a", "b"): "a", ("b", "b"): "b",
        },
    )
    report = validate_category(C)
    violations = report.filter("associativity")
    assert violations, str(report)
    h, g, f = violations[0].witness
    lhs = C.compose[(h, C.compose[(g, f)])]
    rhs = C.compose[(C.compose[(h, g)], f)]
    assert lhs != rhs


# -- bicategories ----------------------------------------------------------------


def test_fixture_bicategories_are_clean(sign, idem, arrow, terminal):
    for B in (sign, idem, arrow, terminal):
        report = validate_bicategory(B)
        assert report.ok, str(report)


def _cocycle_defect(omega):
    """Independent oracle: failing quadruples of the 3-cocycle identity."""
    bad = set()
    for k, h, g, f in itertools.product(("e", "s"), repeat=4):
        mul = lambda x, y: "e" if x == y else "s"
        lhs = omega(k, h, mul(g, f)) ^ omega(mul(k, h), g, f)
        rhs = omega(h, g, f) ^ omega(k, mul(h, g), f) ^ omega(k, h, g)
        if lhs != rhs:
            bad.add((k, h, g, f))
    return bad


def test_pentagon_agrees_with_cocycle_oracle_instancewise():
    good = lambda h, g, f: 1 if (h, g, f) == ("s", "s", "s") else 0
    assert _cocycle_defect(good) == set()
    report = validate_bicategory(sign_bicategory())
    assert not report.filter("pentagon")

    bad_omega = lambda h, g, f: 1 if g == "s" else 0
    oracle_bad = _cocycle_defect(bad_omega)
    assert oracle_bad
    report = validate_bicategory(sign_bicategory_broken_pentagon())
    witnesses = {v.witness for v in report.filter("pentagon")}
    assert witnesses == oracle_bad


def test_interchange_matches_commutative_product_oracle(idem):
    # in a commutative idempotent monoid (ab)(cd) = (ac)(bd) always holds
    for quad in itertools.product(("1", "t"), repeat=4):
        b2, b1, a2, a1 = quad
        mul = lambda x, y: "1" if x == y == "1" else "t"
        assert mul(mul(b2, b1), mul(a2, a1)) == mul(mul(b2, a2), mul(b1, a1))
    assert not validate_bicategory(idem).filter("interchange")


def test_invertibility(sign, idem):
    assert is_invertible_2cell(sign, "1s")
    assert is_invertible_2cell(sign, "ne")
    assert is_invertible_2cell(idem, "1")
    assert not is_invertible_2cell(idem, "t")


def test_equivalence_1cells(sign, idem, arrow):
    assert is_equivalence_1cell(sign, "e")
    assert is_equivalence_1cell(sign, "s")  # s composed with itself is e
    assert is_equivalence_1cell(idem, "i")
    assert is_equivalence_1cell(arrow, "iA")
    assert not is_equivalence_1cell(arrow, "k")  # no 1-cell back from B to A


# -- bracketings and coherence cells -------------------------------------------


def test_bracketing_counts_are_catalan():
    assert [sum(1 for _ in all_bracketings(m)) for m in (1, 2, 3, 4, 5)] == [1, 1, 2, 5, 14]


def test_canonical_bracketing_shape():
    b = Bracketing.canonical(3)
    assert b.left.is_leaf and not b.right.is_leaf
    assert b.size == 3


def test_coherence_cell_same_bracketing_is_identity(sign):
    for m in (1, 2, 3, 4):
        for g in all_bracketings(m):
            edges = ("s",) * m
            expected = sign.id2[bracketed_value(sign, edges, g)]
            assert coherence_cell(sign, edges, g, g) == expected


def test_coherence_cell_three_edges_is_associator_component(sign):
    head_first = Bracketing.canonical(3)
    tail_first = Bracketing.node(
        Bracketing.node(Bracketing.leaf(), Bracketing.leaf()), Bracketing.leaf()
    )
    for edges in itertools.product(("e", "s"), repeat=3):
        got = coherence_cell(sign, edges, head_first, tail_first)
        assert got == sign.assoc[(edges[2], edges[1], edges[0])]


def test_coherence_cells_compose_and_invert(sign):
    for m in (2, 3, 4):
        brackets = list(all_bracketings(m))
        for edges in itertools.product(("e", "s"), repeat=m):
            for g1, g2, g3 in itertools.product(brackets, repeat=3):
                c12 = coherence_cell(sign, edges, g1, g2)
                c23 = coherence_cell(sign, edges, g2, g3)
                c13 = coherence_cell(sign, edges, g1, g3)
                assert sign.then2(c12, c23) == c13
                assert is_invertible_2cell(sign, c12)


def test_pentagon_legs_agree(sign):
    for f, g, h, k in itertools.product(("e", "s"), repeat=4):
        gf, hg, kh = sign.beside1(g, f), sign.beside1(h, g), sign.beside1(k, h)
        one = sign.then2(sign.assoc[(kh, g, f)], sign.assoc[(k, h, gf)])
        other = sign.then2(
            sign.beside2(sign.assoc[(k, h, g)], sign.id2[f]),
            sign.then2(
                sign.assoc[(k, hg, f)],
                sign.beside2(sign.id2[k], sign.assoc[(h, g, f)]),
            ),
        )
        assert one == other


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_coherence_cell_frames_property(data, sign):
    m = data.draw(st.integers(1, 4))
    edges = tuple(data.draw(st.sampled_from(["e", "s"])) for _ in range(m))
    brackets = list(all_bracketings(m))
    g1 = data.draw(st.sampled_from(brackets))
    g2 = data.draw(st.sampled_from(brackets))
    cell = coherence_cell(sign, edges, g1, g2)
    assert sign.src2(cell) == bracketed_value(sign, edges, g1)
    assert sign.tgt2(cell) == bracketed_value(sign, edges, g2)
    assert is_invertible_2cell(sign, cell)


def test_coherence_cell_path_mismatch(sign):
    with pytest.raises(PathMismatch):
        coherence_cell(sign, ("e", "s"), Bracketing.canonical(3), Bracketing.canonical(3))
    with pytest.raises(PathMismatch):
        coherence_cell(sign, (), Bracketing.canonical(1), Bracketing.canonical(1))


def _rotation_moves(B, bracketing, edges):
    """All single reassociation steps out of a bracketing, with the whiskered
    component 2-cell realising each; an oracle route independent of the
    normalisation in coherence_cell."""
    moves = []

    def value(br, lo):
        if br.is_leaf:
            return edges[lo], lo + 1
        lv, mid = value(br.left, lo)
        rv, hi = value(br.right, mid)
        return B.beside1(rv, lv), hi

    def whisker(cell, trail):
        for side, other in reversed(trail):
            if side == "left":
                cell = B.beside2(B.id2[other], cell)
            else:
                cell = B.beside2(cell, B.id2[other])
        return cell

    def rebuild(br, pos, replacement):
        if not pos:
            return replacement
        head, rest = pos[0], pos[1:]
        if head == "left":
            return Bracketing.node(rebuild(br.left, rest, replacement), br.right)
        return Bracketing.node(br.left, rebuild(br.right, rest, replacement))

    def walk(br, lo, trail, pos):
        if br.is_leaf:
            return
        lv, mid = value(br.left, lo)
        rv, _ = value(br.right, mid)
        if not br.right.is_leaf:
            # node(A, node(B, C)) -> node(node(A, B), C)
            bv, bmid = value(br.right.left, mid)
            cv, _ = value(br.right.right, bmid)
            component = B.assoc[(cv, bv, lv)]
            rotated = Bracketing.node(
                Bracketing.node(br.left, br.right.left), br.right.right
            )
            moves.append((rebuild(bracketing, pos, rotated), whisker(component, trail)))
        if not br.left.is_leaf:
            # node(node(A, B), C) -> node(A, node(B, C))
            av, amid = value(br.left.left, lo)
            bv, _ = value(br.left.right, amid)
            component = B.assoc[(rv, bv, av)]
            back = invert_two_cell(B, component)
            rotated = Bracketing.node(
                br.left.left, Bracketing.node(br.left.right, br.right)
            )
            moves.append((rebuild(bracketing, pos, rotated), whisker(back, trail)))
        walk(br.left, lo, trail + [("right", rv)], pos + ("left",))
        walk(br.right, mid, trail + [("left", lv)], pos + ("right",))

    walk(bracketing, 0, [], ())
    return moves


def test_coherence_cell_matches_rotation_path_oracle(sign):
    # breadth-first search over single reassociation steps gives a second,
    # independent route to the connecting 2-cell; any route must agree
    from collections import deque

    for m in (2, 3, 4):
        brackets = list(all_bracketings(m))
        for edges in itertools.product(("e", "s"), repeat=m):
            for start in brackets:
                reached = {start: sign.id2[bracketed_value(sign, edges, start)]}
                queue = deque([start])
                while queue:
                    current = queue.popleft()
                    for nxt, step in _rotation_moves(sign, current, edges):
                        if nxt not in reached:
                            reached[nxt] = sign.then2(reached[current], step)
                            queue.append(nxt)
                assert set(reached) == set(brackets)
                for goal, via_rotations in reached.items():
                    assert via_rotations == coherence_cell(sign, edges, start, goal)


def test_generation_at_bound_five(sign):
    from opetokit import check_coherence, from_bicategory, to_bicategory, validate_op2

    X, b = from_bicategory(sign, 5)
    assert max(cell.source.arity for cell in X.cells2.values()) == 5
    assert validate_op2(X).ok
    assert check_coherence(X).ok
    assert to_bicategory(X, b) == sign


# -- lax functors ----------------------------------------------------------------


def test_identity_lax_functor_is_clean(sign, idem, arrow):
    for B in (sign, idem, arrow):
        assert validate_lax_functor(identity_lax_functor(B), B, B).ok


def test_sign_twisted_functor_is_clean(sign):
    report = validate_lax_functor(sign_twisted_endofunctor(), sign, sign)
    assert report.ok, str(report)


def test_absorbing_constraint_fails_unit_axioms(terminal, idem):
    # the absorbing 2-cell is a legal constraint only until the unit axioms
    # are checked: t composed against itself never reaches the identity
    report = validate_lax_functor(absorbing_constraint_functor(), terminal, idem)
    assert report.rules() == {"right unit axiom", "left unit axiom"}


def test_perturbed_constraint_breaks_naturality(arrow):
    report = validate_lax_functor(arrow_perturbed_functor(), arrow, arrow)
    assert "phi naturality" in report.rules()
    witnesses = {v.witness for v in report.filter("phi naturality")}
    assert ("1iB", "a0") in witnesses
