"""Finite categories, bicategories, lax functors, and their validators.

Everything is a lookup table: hom-sets, vertical and horizontal composition,
unitor and associator components.  The validators check each axiom as a
separately reported rule so a test can target one law (interchange, the
naturality squares, the pentagon, the triangle, the lax functor axioms).

``coherence_cell`` builds the canonical invertible 2-cell between two
parenthesisations of the same composable chain by normalising both to the
head-first form ((h.g).f and its longer analogues) through whiskered
associator components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DanglingId,
    MissingComposite,
    PathMismatch,
    ValidationReport,
    _Collector,
)


@dataclass(frozen=True)
class FiniteCategory:
    """Objects, arrows, identities, and a composition table.

    ``compose[(g, f)]`` is g after f, recorded for every composable pair.
    """

    objects: tuple[str, ...]
    arrows: dict[str, tuple[str, str]]
    identities: dict[str, str]
    compose: dict[tuple[str, str], str]

    def src(self, f: str) -> str:
        return self.arrows[f][0]

    def tgt(self, f: str) -> str:
        return self.arrows[f][1]

    def then(self, f: str, g: str) -> str:
        """g after f."""
        try:
            return self.compose[(g, f)]
        except KeyError:
            raise MissingComposite(f"no composite for ({g!r}, {f!r})") from None


@dataclass(frozen=True)
class FiniteBicategory:
    """All the coherence data of a bicategory as explicit finite tables.

    2-cells are stored globally with 1-cell source and target in the same
    frame; ``vcomp[(b, a)]`` is b after a.  ``hcomp1``/``hcomp2`` take the
    later cell first, matching ``compose``.  ``assoc[(h, g, f)]`` is the
    component (h.g).f => h.(g.f); ``runit[f]``: f.I => f and ``lunit[f]``:
    I.f => f.
    """

    objects: tuple[str, ...]
    one_cells: dict[str, tuple[str, str]]
    two_cells: dict[str, tuple[str, str]]
    id2: dict[str, str]
    vcomp: dict[tuple[str, str], str]
    id1: dict[str, str]
    hcomp1: dict[tuple[str, str], str]
    hcomp2: dict[tuple[str, str], str]
    assoc: dict[tuple[str, str, str], str]
    lunit: dict[str, str]
    runit: dict[str, str]

    def src1(self, f: str) -> str:
        return self.one_cells[f][0]

    def tgt1(self, f: str) -> str:
        return self.one_cells[f][1]

    def src2(self, a: str) -> str:
        return self.two_cells[a][0]

    def tgt2(self, a: str) -> str:
        return self.two_cells[a][1]

    def then2(self, a: str, b: str) -> str:
        """b after a, vertically."""
        try:
            return self.vcomp[(b, a)]
        except KeyError:
            raise MissingComposite(f"no vertical composite for ({b!r}, {a!r})") from None

    def beside1(self, g: str, f: str) -> str:
        """g after f, horizontally, on 1-cells."""
        try:
            return self.hcomp1[(g, f)]
        except KeyError:
            raise MissingComposite(f"no horizontal composite for ({g!r}, {f!r})") from None

    def beside2(self, b: str, a: str) -> str:
        """b after a, horizontally, on 2-cells."""
        try:
            return self.hcomp2[(b, a)]
        except KeyError:
            raise MissingComposite(f"no horizontal composite for ({b!r}, {a!r})") from None


@dataclass(frozen=True)
class LaxFunctor:
    """Level maps plus comparison constraints.

    ``phi_pair[(g, f)]`` is a 2-cell Fg.Ff => F(g.f) in the target;
    ``phi_obj[A]`` is a 2-cell I_{FA} => F(I_A).  Neither is required to be
    invertible.
    """

    on_objects: dict[str, str]
    on_one_cells: dict[str, str]
    on_two_cells: dict[str, str]
    phi_pair: dict[tuple[str, str], str]
    phi_obj: dict[str, str]


@dataclass(frozen=True)
class CatFunctor:
    on_objects: dict[str, str]
    on_arrows: dict[str, str]


# ---------------------------------------------------------------------------
# bracketings


@dataclass(frozen=True)
class Bracketing:
    """A binary parenthesisation of a composable chain, unit-free.

    Leaves are positional: the i-th leaf (left to right) stands for the i-th
    1-cell of the path being bracketed.
    """

    left: "Bracketing | None" = None
    right: "Bracketing | None" = None

    def __post_init__(self):
        if (self.left is None) != (self.right is None):
            raise ValueError("a bracketing node needs both children")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def size(self) -> int:
        if self.is_leaf:
            return 1
        return self.left.size + self.right.size

    @staticmethod
    def leaf() -> "Bracketing":
        return Bracketing()

    @staticmethod
    def node(left: "Bracketing", right: "Bracketing") -> "Bracketing":
        return Bracketing(left, right)

    @staticmethod
    def canonical(m: int) -> "Bracketing":
        """The head-first normal form: later edges compose first, then the
        result attaches to the head, as in ((h.g).f)."""
        if m < 1:
            raise ValueError("a bracketing needs at least one leaf")
        b = Bracketing.leaf()
        for _ in range(m - 1):
            b = Bracketing.node(Bracketing.leaf(), b)
        return b

    def __repr__(self) -> str:
        if self.is_leaf:
            return "*"
        return f"({self.left!r}{self.right!r})"


def all_bracketings(m: int):
    """Every parenthesisation of an m-fold chain (Catalan many)."""
    if m == 1:
        yield Bracketing.leaf()
        return
    for k in range(1, m):
        for l in all_bracketings(k):
            for r in all_bracketings(m - k):
                yield Bracketing.node(l, r)


# labeled trees: leaves carry a 1-cell id or a unit marker for an object.
_LEAF, _UNIT, _NODE = "leaf", "unit", "node"


def _tree_of(b: Bracketing, edges: tuple[str, ...]):
    if b.size != len(edges):
        raise PathMismatch(f"bracketing has {b.size} leaves, path has {len(edges)}")

    def build(br, lo):
        if br.is_leaf:
            return (_LEAF, edges[lo]), lo + 1
        l, mid = build(br.left, lo)
        r, hi = build(br.right, mid)
        return (_NODE, l, r), hi

    t, _ = build(b, 0)
    return t


def _comb_tree(subtrees):
    """Chain subtrees into head-first shape: node(t1, node(t2, ...))."""
    t = subtrees[-1]
    for s in reversed(subtrees[:-1]):
        t = (_NODE, s, t)
    return t


def _tree_value(B: FiniteBicategory, t) -> str:
    if t[0] == _LEAF:
        return t[1]
    if t[0] == _UNIT:
        return B.id1[t[1]]
    return B.beside1(_tree_value(B, t[2]), _tree_value(B, t[1]))


def invert_two_cell(B: FiniteBicategory, a: str) -> str | None:
    """The two-sided vertical inverse of ``a`` if one exists."""
    if a not in B.two_cells:
        raise DanglingId(f"unknown 2-cell {a!r}")
    x, y = B.two_cells[a]
    for b, (s, t) in B.two_cells.items():
        if (s, t) != (y, x):
            continue
        if B.vcomp.get((b, a)) == B.id2[x] and B.vcomp.get((a, b)) == B.id2[y]:
            return b
    return None


def is_invertible_2cell(B: FiniteBicategory, a: str) -> bool:
    return invert_two_cell(B, a) is not None


def is_equivalence_1cell(B: FiniteBicategory, f: str) -> bool:
    """True when some reverse 1-cell composes with ``f`` to the identities up
    to invertible 2-cells, in both orders."""
    if f not in B.one_cells:
        raise DanglingId(f"unknown 1-cell {f!r}")
    a, b = B.one_cells[f]

    def isomorphic(x: str, y: str) -> bool:
        if x == y:
            return True
        for c, (s, t) in B.two_cells.items():
            if {s, t} == {x, y} and is_invertible_2cell(B, c):
                return True
        return False

    for g, (s, t) in B.one_cells.items():
        if (s, t) != (b, a):
            continue
        if isomorphic(B.beside1(g, f), B.id1[a]) and isomorphic(B.beside1(f, g), B.id1[b]):
            return True
    return False


def _normalize(B: FiniteBicategory, t) -> tuple[tuple[str, ...], str, str]:
    """Rewrite a labeled tree to head-first unit-free form.

    Returns (leaves, value, iso) where ``iso`` is the invertible 2-cell from
    the tree's composite to the normal form's composite, assembled from
    whiskered associator and unitor components.
    """
    if t[0] == _LEAF:
        return (t[1],), t[1], B.id2[t[1]]
    if t[0] == _UNIT:
        unit = B.id1[t[1]]
        return (), unit, B.id2[unit]

    l_leaves, lv, liso = _normalize(B, t[1])
    r_leaves, rv, riso = _normalize(B, t[2])
    base = B.beside2(riso, liso)
    if not l_leaves:
        step = B.runit[rv]
        return r_leaves, rv, B.then2(base, step)
    if not r_leaves:
        step = B.lunit[lv]
        return l_leaves, lv, B.then2(base, step)

    def merge(xs: tuple[str, ...], rv: str) -> tuple[str, str]:
        """Iso rv.comb(xs) => comb(xs ++ tail of rv), with its value."""
        if len(xs) == 1:
            v = B.beside1(rv, xs[0])
            return v, B.id2[v]
        tail_v = xs[-1]
        for e in reversed(xs[1:-1]):
            tail_v = B.beside1(tail_v, e)
        a = B.assoc[(rv, tail_v, xs[0])]
        a_inv = invert_two_cell(B, a)
        if a_inv is None:
            raise MissingComposite(f"associator component {a!r} has no inverse")
        rec_v, rec = merge(xs[1:], rv)
        whisk = B.beside2(rec, B.id2[xs[0]])
        return B.beside1(rec_v, xs[0]), B.then2(a_inv, whisk)

    value, miso = merge(l_leaves, rv)
    return l_leaves + r_leaves, value, B.then2(base, miso)


def chain_value(B: FiniteBicategory, edges, anchor: str | None = None) -> str:
    """Head-first composite of a chain of 1-cells; the identity for an empty
    chain at ``anchor``."""
    edges = tuple(edges)
    if not edges:
        if anchor is None:
            raise PathMismatch("an empty chain needs an anchor object")
        return B.id1[anchor]
    v = edges[-1]
    for e in reversed(edges[:-1]):
        v = B.beside1(v, e)
    return v


def _whisker_at(B: FiniteBicategory, vals, slot: int, beta: str) -> str:
    """Whisker ``beta`` into position ``slot`` of a head-first chain.

    ``vals`` are the chain's 1-cell values with ``vals[slot]`` equal to the
    source of ``beta``; the result runs from the chain composite at the source
    of ``beta`` to the composite at its target.
    """
    if len(vals) == 1:
        return beta
    if slot == 0:
        return B.beside2(B.id2[chain_value(B, vals[1:])], beta)
    return B.beside2(_whisker_at(B, vals[1:], slot - 1, beta), B.id2[vals[0]])


def coherence_cell(B: FiniteBicategory, edges, g1: Bracketing, g2: Bracketing) -> str:
    """The canonical invertible 2-cell from one bracketed composite of
    ``edges`` to another, independent of the rewrite route."""
    edges = tuple(edges)
    if not edges:
        raise PathMismatch("coherence cells need at least one edge")
    for e in edges:
        if e not in B.one_cells:
            raise DanglingId(f"unknown 1-cell {e!r}")
    t1 = _tree_of(g1, edges)
    t2 = _tree_of(g2, edges)
    _, _, iso1 = _normalize(B, t1)
    _, _, iso2 = _normalize(B, t2)
    back = invert_two_cell(B, iso2)
    if back is None:
        raise MissingComposite(f"normalisation leg {iso2!r} has no inverse")
    return B.then2(iso1, back)


def bracketed_value(B: FiniteBicategory, edges, g: Bracketing) -> str:
    """Evaluate one bracketed composite of a chain of 1-cells."""
    return _tree_value(B, _tree_of(g, tuple(edges)))


# ---------------------------------------------------------------------------
# validators


def validate_category(C: FiniteCategory) -> ValidationReport:
    out = _Collector()
    for f, (s, t) in C.arrows.items():
        if s not in C.objects or t not in C.objects:
            out.add("dangling id", (f,), "endpoint object missing")
    for a in C.objects:
        i = C.identities.get(a)
        if i is None or i not in C.arrows:
            out.add("identity", (a,), "no identity arrow")
        elif C.arrows[i] != (a, a):
            out.add("identity", (a, i), "identity endpoints are wrong")
    if out.items:
        return out.report()
    for (g, f), h in C.compose.items():
        if g not in C.arrows or f not in C.arrows or h not in C.arrows:
            out.add("dangling id", (g, f, h))
            continue
        if C.tgt(f) != C.src(g):
            out.add("frame", (g, f), "entry for a non-composable pair")
        elif C.arrows[h] != (C.src(f), C.tgt(g)):
            out.add("frame", (g, f, h), "composite endpoints are wrong")
    for f in C.arrows:
        for g in C.arrows:
            if C.tgt(f) == C.src(g) and (g, f) not in C.compose:
                out.add("totality", (g, f), "composable pair missing from the table")
    if out.items:
        return out.report()
    for f in C.arrows:
        if C.then(f, C.identities[C.tgt(f)]) != f:
            out.add("unit", (f,), "left identity law fails")
        if C.then(C.identities[C.src(f)], f) != f:
            out.add("unit", (f,), "right identity law fails")
    for f in C.arrows:
        for g in C.arrows:
            if C.tgt(f) != C.src(g):
                continue
            for h in C.arrows:
                if C.tgt(g) != C.src(h):
                    continue
                if C.then(C.then(f, g), h) != C.then(f, C.then(g, h)):
                    out.add("associativity", (h, g, f))
    return out.report()


def _hom_pairs(B: FiniteBicategory):
    """2-cell pairs (b, a) whose object frames chain: a in hom(A,B), b in hom(B,C)."""
    for a, (f1, _f2) in B.two_cells.items():
        _, mid = B.one_cells[f1]
        for b, (g1, _g2) in B.two_cells.items():
            if B.one_cells[g1][0] == mid:
                yield b, a


def validate_bicategory(B: FiniteBicategory) -> ValidationReport:
    """Every axiom as a separately reported rule.

    Rules: ``dangling id``, ``frame``, ``totality``, ``hom category``,
    ``hcomp identity``, ``interchange``, ``associator invertible``,
    ``associator naturality``, ``unitor invertible``, ``left unitor
    naturality``, ``right unitor naturality``, ``pentagon``, ``triangle``.
    """
    out = _Collector()
    for f, (s, t) in B.one_cells.items():
        if s not in B.objects or t not in B.objects:
            out.add("dangling id", (f,))
    for a, (x, y) in B.two_cells.items():
        if x not in B.one_cells or y not in B.one_cells:
            out.add("dangling id", (a,))
        elif B.one_cells[x] != B.one_cells[y]:
            out.add("frame", (a,), "2-cell endpoints live in different frames")
    for A in B.objects:
        i = B.id1.get(A)
        if i is None or i not in B.one_cells or B.one_cells[i] != (A, A):
            out.add("frame", (A,), "identity 1-cell missing or mistyped")
    if out.items:
        return out.report()

    # each hom is a category
    for f in B.one_cells:
        i = B.id2.get(f)
        if i is None or i not in B.two_cells or B.two_cells[i] != (f, f):
            out.add("hom category", (f,), "identity 2-cell missing or mistyped")
    for (b, a), c in B.vcomp.items():
        if B.tgt2(a) != B.src2(b):
            out.add("hom category", (b, a), "vertical entry for a non-composable pair")
        elif B.two_cells[c] != (B.src2(a), B.tgt2(b)):
            out.add("hom category", (b, a, c), "vertical composite mistyped")
    for a in B.two_cells:
        for b in B.two_cells:
            if B.tgt2(a) == B.src2(b) and (b, a) not in B.vcomp:
                out.add("totality", (b, a), "vertical composite missing")
    if out.items:
        return out.report()
    for a in B.two_cells:
        if B.then2(a, B.id2[B.tgt2(a)]) != a or B.then2(B.id2[B.src2(a)], a) != a:
            out.add("hom category", (a,), "identity 2-cell is not neutral")
    for a in B.two_cells:
        for b in B.two_cells:
            if B.tgt2(a) != B.src2(b):
                continue
            for c in B.two_cells:
                if B.tgt2(b) != B.src2(c):
                    continue
                if B.then2(B.then2(a, b), c) != B.then2(a, B.then2(b, c)):
                    out.add("hom category", (c, b, a), "vertical associativity fails")

    # horizontal composition tables
    comp1 = [
        (g, f)
        for f in B.one_cells
        for g in B.one_cells
        if B.tgt1(f) == B.src1(g)
    ]
    for g, f in comp1:
        if (g, f) not in B.hcomp1:
            out.add("totality", (g, f), "1-cell composite missing")
    for (g, f), h in B.hcomp1.items():
        if B.one_cells[h] != (B.src1(f), B.tgt1(g)):
            out.add("frame", (g, f, h), "1-cell composite mistyped")
    if out.items:
        return out.report()
    for b, a in _hom_pairs(B):
        if (b, a) not in B.hcomp2:
            out.add("totality", (b, a), "2-cell horizontal composite missing")
            continue
        c = B.hcomp2[(b, a)]
        want = (
            B.beside1(B.src2(b), B.src2(a)),
            B.beside1(B.tgt2(b), B.tgt2(a)),
        )
        if B.two_cells[c] != want:
            out.add("frame", (b, a, c), "2-cell horizontal composite mistyped")
    if out.items:
        return out.report()

    # functoriality of horizontal composition
    for g, f in comp1:
        if B.beside2(B.id2[g], B.id2[f]) != B.id2[B.beside1(g, f)]:
            out.add("hcomp identity", (g, f))
    for b2, a2 in _hom_pairs(B):
        for b1 in B.two_cells:
            if B.tgt2(b1) != B.src2(b2):
                continue
            for a1 in B.two_cells:
                if B.tgt2(a1) != B.src2(a2):
                    continue
                if B.src1(B.src2(b1)) != B.tgt1(B.src2(a1)):
                    continue
                lhs = B.beside2(B.then2(b1, b2), B.then2(a1, a2))
                rhs = B.then2(B.beside2(b1, a1), B.beside2(b2, a2))
                if lhs != rhs:
                    out.add("interchange", (b2, b1, a2, a1))

    # associator: typing, invertibility, naturality
    comp3 = [
        (h, g, f)
        for (g, f) in comp1
        for h in B.one_cells
        if B.tgt1(g) == B.src1(h)
    ]
    for h, g, f in comp3:
        a = B.assoc.get((h, g, f))
        if a is None:
            out.add("totality", (h, g, f), "associator component missing")
            continue
        want = (B.beside1(B.beside1(h, g), f), B.beside1(h, B.beside1(g, f)))
        if B.two_cells[a] != want:
            out.add("frame", (h, g, f, a), "associator component mistyped")
        elif not is_invertible_2cell(B, a):
            out.add("associator invertible", (h, g, f, a))
    if out.items:
        return out.report()
    for c in B.two_cells:
        for b in B.two_cells:
            if B.src1(B.src2(c)) != B.tgt1(B.src2(b)):
                continue
            for a in B.two_cells:
                if B.src1(B.src2(b)) != B.tgt1(B.src2(a)):
                    continue
                src_comp = B.assoc[(B.src2(c), B.src2(b), B.src2(a))]
                tgt_comp = B.assoc[(B.tgt2(c), B.tgt2(b), B.tgt2(a))]
                lhs = B.then2(B.beside2(B.beside2(c, b), a), tgt_comp)
                rhs = B.then2(src_comp, B.beside2(c, B.beside2(b, a)))
                if lhs != rhs:
                    out.add("associator naturality", (c, b, a))

    # unitors: typing, invertibility, naturality
    for f in B.one_cells:
        r = B.runit.get(f)
        l = B.lunit.get(f)
        s, t = B.one_cells[f]
        if r is None or B.two_cells.get(r) != (B.beside1(f, B.id1[s]), f):
            out.add("frame", (f, r), "right unitor missing or mistyped")
        elif not is_invertible_2cell(B, r):
            out.add("unitor invertible", (f, r))
        if l is None or B.two_cells.get(l) != (B.beside1(B.id1[t], f), f):
            out.add("frame", (f, l), "left unitor missing or mistyped")
        elif not is_invertible_2cell(B, l):
            out.add("unitor invertible", (f, l))
    if out.items:
        return out.report()
    for a, (f1, f2) in B.two_cells.items():
        s, t = B.one_cells[f1]
        lhs = B.then2(B.beside2(a, B.id2[B.id1[s]]), B.runit[f2])
        rhs = B.then2(B.runit[f1], a)
        if lhs != rhs:
            out.add("right unitor naturality", (a,))
        lhs = B.then2(B.beside2(B.id2[B.id1[t]], a), B.lunit[f2])
        rhs = B.then2(B.lunit[f1], a)
        if lhs != rhs:
            out.add("left unitor naturality", (a,))

    # pentagon
    for (h, g, f) in comp3:
        for k in B.one_cells:
            if B.tgt1(h) != B.src1(k):
                continue
            gf = B.beside1(g, f)
            hg = B.beside1(h, g)
            kh = B.beside1(k, h)
            one_leg = B.then2(B.assoc[(kh, g, f)], B.assoc[(k, h, gf)])
            other = B.then2(
                B.beside2(B.assoc[(k, h, g)], B.id2[f]),
                B.then2(B.assoc[(k, hg, f)], B.beside2(B.id2[k], B.assoc[(h, g, f)])),
            )
            if one_leg != other:
                out.add("pentagon", (k, h, g, f))

    # triangle
    for g, f in comp1:
        mid = B.tgt1(f)
        lhs = B.beside2(B.runit[g], B.id2[f])
        rhs = B.then2(B.assoc[(g, B.id1[mid], f)], B.beside2(B.id2[g], B.lunit[f]))
        if lhs != rhs:
            out.add("triangle", (g, f))
    return out.report()


def validate_functor(F: CatFunctor, C: FiniteCategory, D: FiniteCategory) -> ValidationReport:
    out = _Collector()
    for a in C.objects:
        if F.on_objects.get(a) not in D.objects:
            out.add("totality", (a,), "object has no image")
    for f, (s, t) in C.arrows.items():
        ff = F.on_arrows.get(f)
        if ff is None or ff not in D.arrows:
            out.add("totality", (f,), "arrow has no image")
        elif D.arrows[ff] != (F.on_objects.get(s), F.on_objects.get(t)):
            out.add("frame", (f,), "image endpoints do not match")
    if out.items:
        return out.report()
    for a in C.objects:
        if F.on_arrows[C.identities[a]] != D.identities[F.on_objects[a]]:
            out.add("identity", (a,))
    for (g, f), h in C.compose.items():
        if D.then(F.on_arrows[f], F.on_arrows[g]) != F.on_arrows[h]:
            out.add("composition", (g, f))
    return out.report()


def validate_lax_functor(F: LaxFunctor, B: FiniteBicategory, B2: FiniteBicategory) -> ValidationReport:
    """Check the comparison-constraint axioms of a lax functor.

    Rules: ``totality``, ``frame``, ``hom functor``, ``phi naturality``,
    ``hexagon``, ``right unit axiom``, ``left unit axiom``.
    """
    out = _Collector()
    for A in B.objects:
        if F.on_objects.get(A) not in B2.objects:
            out.add("totality", (A,), "object has no image")
    for f, (s, t) in B.one_cells.items():
        ff = F.on_one_cells.get(f)
        if ff is None or ff not in B2.one_cells:
            out.add("totality", (f,), "1-cell has no image")
        elif B2.one_cells[ff] != (F.on_objects.get(s), F.on_objects.get(t)):
            out.add("frame", (f,), "1-cell image endpoints do not match")
    if out.items:
        return out.report()
    for a, (x, y) in B.two_cells.items():
        fa = F.on_two_cells.get(a)
        if fa is None or fa not in B2.two_cells:
            out.add("totality", (a,), "2-cell has no image")
        elif B2.two_cells[fa] != (F.on_one_cells[x], F.on_one_cells[y]):
            out.add("frame", (a,), "2-cell image frame does not match")
    comp1 = [
        (g, f)
        for f in B.one_cells
        for g in B.one_cells
        if B.tgt1(f) == B.src1(g)
    ]
    for g, f in comp1:
        p = F.phi_pair.get((g, f))
        if p is None or p not in B2.two_cells:
            out.add("totality", (g, f), "pair constraint missing")
            continue
        want = (
            B2.beside1(F.on_one_cells[g], F.on_one_cells[f]),
            F.on_one_cells[B.beside1(g, f)],
        )
        if B2.two_cells[p] != want:
            out.add("frame", (g, f, p), "pair constraint mistyped")
    for A in B.objects:
        p = F.phi_obj.get(A)
        if p is None or p not in B2.two_cells:
            out.add("totality", (A,), "object constraint missing")
            continue
        want = (B2.id1[F.on_objects[A]], F.on_one_cells[B.id1[A]])
        if B2.two_cells[p] != want:
            out.add("frame", (A, p), "object constraint mistyped")
    if out.items:
        return out.report()

    G0, G1, G2 = F.on_objects, F.on_one_cells, F.on_two_cells
    for f in B.one_cells:
        if G2[B.id2[f]] != B2.id2[G1[f]]:
            out.add("hom functor", (f,), "identity 2-cell not preserved")
    for (b, a), c in B.vcomp.items():
        if B2.then2(G2[a], G2[b]) != G2[c]:
            out.add("hom functor", (b, a), "vertical composition not preserved")

    for b, a in _hom_pairs(B):
        g1, g2 = B.two_cells[b]
        f1, f2 = B.two_cells[a]
        lhs = B2.then2(B2.beside2(G2[b], G2[a]), F.phi_pair[(g2, f2)])
        rhs = B2.then2(F.phi_pair[(g1, f1)], G2[B.beside2(b, a)])
        if lhs != rhs:
            out.add("phi naturality", (b, a))

    for f in B.one_cells:
        for g in B.one_cells:
            if B.tgt1(f) != B.src1(g):
                continue
            for h in B.one_cells:
                if B.tgt1(g) != B.src1(h):
                    continue
                gf, hg = B.beside1(g, f), B.beside1(h, g)
                lhs = B2.then2(
                    B2.beside2(F.phi_pair[(h, g)], B2.id2[G1[f]]),
                    B2.then2(F.phi_pair[(hg, f)], G2[B.assoc[(h, g, f)]]),
                )
                rhs = B2.then2(
                    B2.assoc[(G1[h], G1[g], G1[f])],
                    B2.then2(B2.beside2(B2.id2[G1[h]], F.phi_pair[(g, f)]), F.phi_pair[(h, gf)]),
                )
                if lhs != rhs:
                    out.add("hexagon", (h, g, f))

    for f, (s, t) in B.one_cells.items():
        lhs = B2.then2(
            B2.beside2(B2.id2[G1[f]], F.phi_obj[s]),
            B2.then2(F.phi_pair[(f, B.id1[s])], G2[B.runit[f]]),
        )
        if lhs != B2.runit[G1[f]]:
            out.add("right unit axiom", (f,))
        lhs = B2.then2(
            B2.beside2(F.phi_obj[t], B2.id2[G1[f]]),
            B2.then2(F.phi_pair[(B.id1[t], f)], G2[B.lunit[f]]),
        )
        if lhs != B2.lunit[G1[f]]:
            out.add("left unit axiom", (f,))
    return out.report()
