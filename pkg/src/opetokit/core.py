"""Finite presentations of opetopic 0-, 1- and 2-categories.

Cells live in three layers: objects, 1-cells with source/target objects, and
2-cells whose source is a linear pasting path of 1-cells and whose target is a
single 1-cell.  Composition of 2-cells is encoded by a grafting table: the
unique way to substitute a 2-cell into one source position of another.  All
tables are fully materialised up to a fixed arity bound, every value is
immutable after construction, and every operation here is a pure function.

Cell equality is identifier equality throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    ArityBoundExceeded,
    DanglingId,
    FrameMismatch,
    MissingEntry,
    ValidationReport,
    _Collector,
)

DEFAULT_ARITY_BOUND = 4


@dataclass(frozen=True, eq=False)
class PastingPath:
    """A linear pasting diagram: a composable chain of 1-cells.

    An empty path does not touch any 1-cell, so it carries an explicit anchor
    object; that anchor is the only place an object appears in a niche.  For
    non-empty paths the anchor is dropped (it is the source of the first edge).
    """

    edges: tuple[str, ...]
    anchor: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.edges:
            object.__setattr__(self, "anchor", None)
        elif self.anchor is None:
            raise ValueError("an empty pasting path needs an anchor object")

    @property
    def arity(self) -> int:
        return len(self.edges)

    def key(self) -> tuple:
        """Hashable, order-comparable identity of the path."""
        if self.edges:
            return (1,) + self.edges
        return (0, self.anchor)

    def __eq__(self, other) -> bool:
        return isinstance(other, PastingPath) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        if not self.edges:
            return f"PastingPath(@{self.anchor})"
        return f"PastingPath({';'.join(self.edges)})"

    def splice(self, slot: int, inner: "PastingPath") -> "PastingPath":
        """Replace the edge at ``slot`` by the whole path ``inner``."""
        if not 0 <= slot < self.arity:
            raise FrameMismatch(f"slot {slot} out of range for arity {self.arity}")
        edges = self.edges[:slot] + inner.edges + self.edges[slot + 1 :]
        if edges:
            return PastingPath(edges)
        return PastingPath((), inner.anchor)


def path(*edges: str) -> PastingPath:
    return PastingPath(tuple(edges))


def empty_path(anchor: str) -> PastingPath:
    return PastingPath((), anchor)


@dataclass(frozen=True)
class TwoCell:
    """A 2-cell: a pasting path flowing into a single 1-cell."""

    id: str
    source: PastingPath
    target: str


@dataclass(frozen=True)
class TwoCellTree:
    """A tree-shaped pasting of 2-cells: the source of a 3-niche.

    ``slots`` has one entry per source position of ``root``; ``None`` keeps
    the 1-cell at that position, a subtree grafts another 2-cell whose target
    is that 1-cell.
    """

    root: str
    slots: tuple["TwoCellTree | None", ...] = ()


@dataclass(frozen=True)
class FiniteOpZeroCat:
    """A 0-dimensional presentation: objects plus one loop per object."""

    objects: tuple[str, ...]
    cells1: dict[str, tuple[str, str]]


@dataclass(frozen=True)
class FiniteOpOneCat:
    """Objects, 1-cells, and a total composition table on paths.

    ``comp`` assigns to every composable path of length at most
    ``arity_bound`` (including the empty path at each object) the 1-cell that
    uniquely fills that niche.
    """

    objects: tuple[str, ...]
    cells1: dict[str, tuple[str, str]]
    comp: dict[tuple, str]
    arity_bound: int = DEFAULT_ARITY_BOUND

    def src(self, f: str) -> str:
        return self.cells1[f][0]

    def tgt(self, f: str) -> str:
        return self.cells1[f][1]

    def compose(self, p: PastingPath) -> str:
        try:
            return self.comp[p.key()]
        except KeyError:
            raise MissingEntry(f"no composite recorded for {p!r}") from None


@dataclass(frozen=True)
class FiniteOpTwoCat:
    """Objects, 1-cells, 2-cells with linear sources, and a grafting table.

    ``graft`` records, for every admissible (outer, slot, inner) triple whose
    result stays within the arity bound, the target of the unique 3-cell
    pasting ``inner`` into the given source position of ``outer``.  ``ident2``
    names the 1-ary identity 2-cell on each 1-cell.
    """

    objects: tuple[str, ...]
    cells1: dict[str, tuple[str, str]]
    cells2: dict[str, TwoCell]
    ident2: dict[str, str]
    graft: dict[tuple[str, int, str], str]
    arity_bound: int = DEFAULT_ARITY_BOUND

    def src1(self, f: str) -> str:
        return self.cells1[f][0]

    def tgt1(self, f: str) -> str:
        return self.cells1[f][1]

    def cell(self, alpha: str) -> TwoCell:
        try:
            return self.cells2[alpha]
        except KeyError:
            raise DanglingId(f"unknown 2-cell {alpha!r}") from None

    def arity(self, alpha: str) -> int:
        return self.cell(alpha).source.arity


# ---------------------------------------------------------------------------
# path machinery


def path_endpoints(X, p: PastingPath) -> tuple[str, str]:
    """Source and target objects of a pasting path; raises on broken chains."""
    if not p.edges:
        if p.anchor not in X.objects:
            raise DanglingId(f"unknown anchor object {p.anchor!r}")
        return p.anchor, p.anchor
    prev_tgt = None
    for e in p.edges:
        if e not in X.cells1:
            raise DanglingId(f"unknown 1-cell {e!r}")
        s, t = X.cells1[e]
        if prev_tgt is not None and s != prev_tgt:
            raise FrameMismatch(f"path breaks at {e!r}: expected source {prev_tgt!r}")
        prev_tgt = t
    return X.cells1[p.edges[0]][0], prev_tgt


def iter_paths(X, max_len: int | None = None):
    """All composable paths over ``X.cells1`` up to the arity bound."""
    bound = X.arity_bound if max_len is None else max_len
    for a in X.objects:
        yield empty_path(a)
    by_src: dict[str, list[str]] = {}
    for f, (s, _) in X.cells1.items():
        by_src.setdefault(s, []).append(f)
    for bucket in by_src.values():
        bucket.sort()
    frontier = [(f,) for f in sorted(X.cells1)]
    length = 1
    while frontier and length <= bound:
        for edges in frontier:
            yield PastingPath(edges)
        length += 1
        if length > bound:
            break
        frontier = [
            edges + (g,)
            for edges in frontier
            for g in by_src.get(X.cells1[edges[-1]][1], ())
        ]


# ---------------------------------------------------------------------------
# validation


def validate_op0(X: FiniteOpZeroCat) -> ValidationReport:
    out = _Collector()
    loops: dict[str, int] = {a: 0 for a in X.objects}
    for f, (s, t) in X.cells1.items():
        if s not in X.objects or t not in X.objects:
            out.add("dangling id", (f,), "endpoint object missing")
        elif s != t:
            out.add("frame", (f,), "1-cells of a 0-dimensional presentation must be loops")
        else:
            loops[s] += 1
    for a, n in loops.items():
        if n != 1:
            out.add("totality", (a,), f"object has {n} loops, expected exactly 1")
    return out.report()


def validate_op1(X: FiniteOpOneCat) -> ValidationReport:
    """Check that ``comp`` presents a 1-dimensional structure at the bound.

    Reported rules: ``dangling id``, ``totality``, ``endpoints``,
    ``singleton``, ``substitution``.  An empty report means every niche of
    arity at most the bound has the recorded unique occupant and the table is
    closed under collapsing or expanding any contiguous segment.
    """
    out = _Collector()
    for f, (s, t) in X.cells1.items():
        if s not in X.objects or t not in X.objects:
            out.add("dangling id", (f,), "endpoint object missing")
    for key, result in X.comp.items():
        if result not in X.cells1:
            out.add("dangling id", (result,), f"comp{key} names an unknown 1-cell")

    paths = list(iter_paths(X))
    known = set(X.comp)
    for p in paths:
        if p.key() not in known:
            out.add("totality", (p.key(),), "composable path has no recorded composite")
    valid_keys = {p.key() for p in paths}
    for key in known - valid_keys:
        out.add("dangling id", (key,), "comp entry for a path that does not exist at this bound")
    if not out.items:
        for p in paths:
            result = X.comp[p.key()]
            s, t = path_endpoints(X, p)
            if X.cells1[result] != (s, t):
                out.add("endpoints", (p.key(), result))
            if p.arity == 1 and result != p.edges[0]:
                out.add("singleton", (p.edges[0], result), "comp of a one-edge path must be that edge")
        comp = X.comp
        bound = X.arity_bound
        for p in paths:
            whole = comp[p.key()]
            edges = p.edges
            m = len(edges)
            # objects sitting at positions 0..m along the path
            if m == 0:
                at = [p.anchor]
            else:
                at = [X.cells1[edges[0]][0]] + [X.cells1[e][1] for e in edges]
            for i in range(m + 1):
                prefix = edges[:i]
                for j in range(i, m + 1):
                    segment = edges[i:j]
                    mid = comp[(1,) + segment if segment else (0, at[i])]
                    collapsed = prefix + (mid,) + edges[j:]
                    if len(collapsed) > bound:
                        continue
                    if comp[(1,) + collapsed] != whole:
                        out.add(
                            "substitution",
                            (p.key(), i, j),
                            f"comp disagrees after collapsing segment [{i}:{j}]",
                        )
    return out.report(arity_bound=X.arity_bound)


def _splice_check(X: FiniteOpTwoCat, outer: TwoCell, slot: int, inner: TwoCell) -> PastingPath:
    return outer.source.splice(slot, inner.source)


def validate_op2(X: FiniteOpTwoCat) -> ValidationReport:
    """Check frames, identities, and the grafting laws at the bound.

    Rules: ``dangling id``, ``frame``, ``identity``, ``totality``,
    ``right unit``, ``left unit``, ``sequential associativity``,
    ``parallel commutation``.
    """
    out = _Collector()
    for f, (s, t) in X.cells1.items():
        if s not in X.objects or t not in X.objects:
            out.add("dangling id", (f,), "endpoint object missing")
    for cid, cell in X.cells2.items():
        if cid != cell.id:
            out.add("dangling id", (cid,), "cell stored under a different id")
        if cell.target not in X.cells1:
            out.add("dangling id", (cid, cell.target), "target 1-cell missing")
            continue
        try:
            s, t = path_endpoints(X, cell.source)
        except (DanglingId, FrameMismatch) as exc:
            out.add("dangling id", (cid,), str(exc))
            continue
        if X.cells1[cell.target] != (s, t):
            out.add("frame", (cid,), "source path endpoints differ from target endpoints")
    if out.items:
        return out.report(arity_bound=X.arity_bound)

    for f in X.cells1:
        ident = X.ident2.get(f)
        if ident is None or ident not in X.cells2:
            out.add("identity", (f,), "no identity 2-cell recorded")
            continue
        cell = X.cells2[ident]
        if cell.source != path(f) or cell.target != f:
            out.add("identity", (f, ident), "identity 2-cell has the wrong frame")
    for f in set(X.ident2) - set(X.cells1):
        out.add("dangling id", (f,), "identity recorded for an unknown 1-cell")

    # totality and frame agreement of the grafting table
    by_target: dict[str, list[str]] = {}
    for cid, cell in X.cells2.items():
        by_target.setdefault(cell.target, []).append(cid)
    for cid, outer in sorted(X.cells2.items()):
        for slot, edge in enumerate(outer.source.edges):
            for inner_id in by_target.get(edge, ()):
                inner = X.cells2[inner_id]
                if outer.source.arity + inner.source.arity - 1 > X.arity_bound:
                    continue
                key = (cid, slot, inner_id)
                if key not in X.graft:
                    out.add("totality", key, "in-bound graft has no table entry")
    for (cid, slot, inner_id), result in X.graft.items():
        if cid not in X.cells2 or inner_id not in X.cells2 or result not in X.cells2:
            out.add("dangling id", (cid, slot, inner_id, result))
            continue
        outer, inner = X.cells2[cid], X.cells2[inner_id]
        if not 0 <= slot < outer.source.arity:
            out.add("frame", (cid, slot, inner_id), "slot out of range")
            continue
        if inner.target != outer.source.edges[slot]:
            out.add("frame", (cid, slot, inner_id), "inner target differs from the slot edge")
            continue
        res = X.cells2[result]
        if res.source != _splice_check(X, outer, slot, inner):
            out.add("frame", (cid, slot, inner_id), "result source is not the spliced path")
        if res.target != outer.target:
            out.add("frame", (cid, slot, inner_id), "result target differs from the outer target")
    if out.items:
        return out.report(arity_bound=X.arity_bound)

    # unit laws
    for cid, outer in X.cells2.items():
        for slot, edge in enumerate(outer.source.edges):
            key = (cid, slot, X.ident2[edge])
            if X.graft.get(key) != cid:
                out.add("right unit", key, "grafting an identity must not change the cell")
    for cid, cell in X.cells2.items():
        ident = X.ident2[cell.target]
        key = (ident, 0, cid)
        if X.graft.get(key) != cid:
            out.add("left unit", key, "grafting under an identity must not change the cell")

    # sequential associativity: graft(graft(a,i,b), i+j, c) = graft(a, i, graft(b,j,c))
    entries_by_inner: dict[str, list[tuple[str, int, str]]] = {}
    for key in X.graft:
        entries_by_inner.setdefault(key[2], []).append(key)
    for (b, j, c), bc in X.graft.items():
        for (a, i, _b) in entries_by_inner.get(b, ()):
            ab = X.graft[(a, i, b)]
            lhs = X.graft.get((ab, i + j, c))
            rhs = X.graft.get((a, i, bc))
            if lhs is None or rhs is None:
                # the composite leaves the bound; nothing to compare
                continue
            if lhs != rhs:
                out.add("sequential associativity", (a, i, b, j, c), f"{lhs} != {rhs}")

    # parallel commutation for disjoint slots of one outer cell
    by_outer: dict[str, list[tuple[int, str, str]]] = {}
    for (a, i, b), r in X.graft.items():
        by_outer.setdefault(a, []).append((i, b, r))
    for a, rows in by_outer.items():
        for (i, b, r_ib), (j, c, r_jc) in itertools.combinations(sorted(rows), 2):
            if i == j:
                continue
            if i > j:
                (i, b, r_ib), (j, c, r_jc) = (j, c, r_jc), (i, b, r_ib)
            shift = X.cells2[b].source.arity - 1
            lhs = X.graft.get((r_ib, j + shift, c))
            rhs = X.graft.get((r_jc, i, b))
            if lhs is None or rhs is None:
                continue
            if lhs != rhs:
                out.add("parallel commutation", (a, i, b, j, c), f"{lhs} != {rhs}")
    return out.report(arity_bound=X.arity_bound)


# ---------------------------------------------------------------------------
# operations


def graft(X: FiniteOpTwoCat, outer: str, slot: int, inner: str) -> str:
    """Paste ``inner`` into the given source position of ``outer``.

    Returns the target of the unique 3-cell with that pasting as its source,
    read off the grafting table.
    """
    o = X.cell(outer)
    i = X.cell(inner)
    if not 0 <= slot < o.source.arity:
        raise FrameMismatch(
            f"slot {slot} out of range for {outer!r} of arity {o.source.arity}"
        )
    if i.target != o.source.edges[slot]:
        raise FrameMismatch(
            f"inner {inner!r} targets {i.target!r}, slot {slot} of {outer!r} holds "
            f"{o.source.edges[slot]!r}"
        )
    if o.source.arity + i.source.arity - 1 > X.arity_bound:
        raise ArityBoundExceeded(
            f"graft result arity {o.source.arity + i.source.arity - 1} exceeds bound "
            f"{X.arity_bound}"
        )
    try:
        return X.graft[(outer, slot, inner)]
    except KeyError:
        raise MissingEntry(f"graft table lacks ({outer!r}, {slot}, {inner!r})") from None


def composite_of_tree(X: FiniteOpTwoCat, t: TwoCellTree) -> str:
    """Fold a tree of 2-cells into its unique composite.

    The fold order is immaterial in a valid structure; slots are processed
    right to left so earlier indices stay put as sources get spliced.
    """
    root = X.cell(t.root)
    if len(t.slots) != root.source.arity:
        raise FrameMismatch(
            f"tree on {t.root!r} has {len(t.slots)} slots, cell has arity "
            f"{root.source.arity}"
        )
    current = t.root
    for slot in range(len(t.slots) - 1, -1, -1):
        sub = t.slots[slot]
        if sub is None:
            continue
        inner = composite_of_tree(X, sub)
        current = graft(X, current, slot, inner)
    return current


def occupants_of_niche(X: FiniteOpTwoCat, p: PastingPath) -> set[str]:
    """All 2-cells whose source equals the given path (order-sensitive)."""
    path_endpoints(X, p)
    return {cid for cid, cell in X.cells2.items() if cell.source == p}


def hom_category_of_frame(X: FiniteOpTwoCat, a: str, b: str) -> FiniteOpOneCat:
    """The 1-dimensional structure living between two objects.

    Its objects are the 1-cells a -> b, its 1-cells the 1-ary 2-cells between
    them, and its composition table iterates grafting along vertical chains.
    """
    if a not in X.objects:
        raise DanglingId(f"unknown object {a!r}")
    if b not in X.objects:
        raise DanglingId(f"unknown object {b!r}")
    objects = tuple(sorted(f for f, (s, t) in X.cells1.items() if (s, t) == (a, b)))
    obj_set = set(objects)
    cells1 = {
        cid: (cell.source.edges[0], cell.target)
        for cid, cell in X.cells2.items()
        if cell.source.arity == 1 and cell.source.edges[0] in obj_set
    }
    comp: dict[tuple, str] = {}
    for f in objects:
        comp[empty_path(f).key()] = X.ident2[f]
    by_src: dict[str, list[str]] = {}
    for cid, (s, _) in cells1.items():
        by_src.setdefault(s, []).append(cid)
    for bucket in by_src.values():
        bucket.sort()
    chains = [(cid,) for cid in sorted(cells1)]
    length = 1
    while chains and length <= X.arity_bound:
        for chain in chains:
            acc = chain[0]
            for nxt in chain[1:]:
                acc = graft(X, nxt, 0, acc)
            comp[(1,) + chain] = acc
        length += 1
        if length > X.arity_bound:
            break
        chains = [
            chain + (nxt,)
            for chain in chains
            for nxt in by_src.get(cells1[chain[-1]][1], ())
        ]
    return FiniteOpOneCat(objects, cells1, comp, X.arity_bound)
