"""Decidable universality for cells of finite 2-dimensional structures.

A 2-cell is universal when every occupant of its niche factors through it by
exactly one 1-ary 2-cell: existence is the factorisation clause, uniqueness is
what universality of the factorisation collapses to at top dimension, where
occupants of 3-niches are already unique.

One dimension down, universality of a 1-cell f asks that every 1-cell g out
of the same object admit a factorisation through f by a universal binary
2-cell, and that every such factorisation through f be universal as a
factorisation: each comparison 2-cell into the same target is reached by
grafting exactly one 1-ary 2-cell into the free slot.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ArityError, DanglingId, NicheMismatch, Violation
from .core import (
    FiniteOpOneCat,
    FiniteOpTwoCat,
    iter_paths,
    occupants_of_niche,
    path,
)


def factorizations_through(X: FiniteOpTwoCat, a: str, c: str) -> set[str]:
    """All 1-ary b with b grafted onto ``a`` equal to ``c``.

    ``a`` and ``c`` must occupy the same niche.
    """
    cell_a = X.cell(a)
    cell_c = X.cell(c)
    if cell_a.source != cell_c.source:
        raise NicheMismatch(f"{a!r} and {c!r} occupy different niches")
    wanted = path(cell_a.target)
    return {
        b
        for b, cell in X.cells2.items()
        if cell.source == wanted and X.graft.get((b, 0, a)) == c
    }


def is_universal_2cell(X: FiniteOpTwoCat, a: str) -> bool:
    """Every occupant of the niche factors through ``a`` exactly once."""
    cell = X.cell(a)
    for c in occupants_of_niche(X, cell.source):
        if len(factorizations_through(X, a, c)) != 1:
            return False
    return True


def is_universal_factorization_1(X: FiniteOpTwoCat, u: str) -> bool:
    """Universality of a binary factorisation of 1-cells.

    For every 2-cell v over (f, h) into the same target, with h in the frame
    of the second source edge, exactly one 1-ary cell grafts into that slot to
    give v.
    """
    cell = X.cell(u)
    if cell.source.arity != 2:
        raise ArityError(f"{u!r} has arity {cell.source.arity}, expected 2")
    f, gbar = cell.source.edges
    frame = X.cells1[gbar]
    for h, fr in X.cells1.items():
        if fr != frame:
            continue
        probe = path(f, h)
        for v, vc in X.cells2.items():
            if vc.source != probe or vc.target != cell.target:
                continue
            matches = [
                t
                for t, tc in X.cells2.items()
                if tc.source == path(h)
                and tc.target == gbar
                and X.graft.get((u, 1, t)) == v
            ]
            if len(matches) != 1:
                return False
    return True


def is_universal_1cell(X: FiniteOpTwoCat, f: str) -> bool:
    """Factorisation-based universality of a 1-cell.

    Quantifies over universal binary occupants: every 1-cell out of the same
    object must be reachable through ``f`` by one, and every universal binary
    occupant through ``f`` must be a universal factorisation.
    """
    if f not in X.cells1:
        raise DanglingId(f"unknown 1-cell {f!r}")
    src_f = X.src1(f)
    for g, (s, _) in X.cells1.items():
        if s != src_f:
            continue
        universal_through = [
            u
            for u, uc in X.cells2.items()
            if uc.source.arity == 2
            and uc.source.edges[0] == f
            and uc.target == g
            and is_universal_2cell(X, u)
        ]
        if not universal_through:
            return False
        for u in universal_through:
            if not is_universal_factorization_1(X, u):
                return False
    return True


def is_universal_1cell_op1(X: FiniteOpOneCat, f: str) -> bool:
    """The one-dimensional analogue: unique factorisation through ``f``.

    A 1-cell is universal exactly when every 1-cell out of the same object is
    comp of (f, gbar) for exactly one gbar.
    """
    if f not in X.cells1:
        raise DanglingId(f"unknown 1-cell {f!r}")
    src_f, tgt_f = X.cells1[f]
    for g, (s, _) in X.cells1.items():
        if s != src_f:
            continue
        matches = [
            gbar
            for gbar, (s2, _) in X.cells1.items()
            if s2 == tgt_f and X.comp.get(path(f, gbar).key()) == g
        ]
        if len(matches) != 1:
            return False
    return True


@dataclass(frozen=True)
class CoherenceReport:
    """Outcome of the niche-by-niche coherence check.

    ``niche_universals`` records, per 2-niche, the universal occupants found
    (or the occupant derived by closure for arities above two).  An empty
    violation list means the structure is a 2-dimensional opetopic category
    at the stated bound.
    """

    violations: tuple[Violation, ...]
    universal_one_cells: frozenset[str]
    universal_two_cells: frozenset[str]
    niche_universals: dict[tuple, tuple[str, ...]] = field(default_factory=dict)
    mode: str = "closure checked via generators"
    arity_bound: int = 4

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return f"coherent at arity bound {self.arity_bound} ({self.mode})"
        return "\n".join(str(v) for v in self.violations)


def check_coherence(X: FiniteOpTwoCat, direct_niche_search: bool = False) -> CoherenceReport:
    """Does every niche have a universal occupant, closed under pasting?

    Assumes the grafting tables already validate.  Nullary and binary
    2-niches are searched directly.  Higher arities are, by default, derived
    by grafting universal binary occupants together, which closure makes
    universal; ``direct_niche_search`` forces the exhaustive search instead.
    """
    violations: list[Violation] = []
    u2 = frozenset(c for c in X.cells2 if is_universal_2cell(X, c))
    u1 = frozenset(f for f in X.cells1 if is_universal_1cell(X, f))

    for a in X.objects:
        if not any(X.src1(f) == a for f in u1):
            violations.append(
                Violation("1-niche without universal occupant", (a,))
            )

    niche_universals: dict[tuple, tuple[str, ...]] = {}

    def binary_universal(f: str, g: str) -> str | None:
        found = sorted(
            c for c in occupants_of_niche(X, path(f, g)) if c in u2
        )
        return found[0] if found else None

    for p in iter_paths(X):
        if direct_niche_search or p.arity <= 2:
            found = tuple(sorted(c for c in occupants_of_niche(X, p) if c in u2))
            niche_universals[p.key()] = found
            if not found:
                violations.append(
                    Violation("niche without universal occupant", (p.key(),))
                )
            continue
        # derive an occupant by folding universal binary occupants
        edges = p.edges
        acc_cell = binary_universal(edges[0], edges[1])
        ok = acc_cell is not None
        if ok:
            for e in edges[2:]:
                step = binary_universal(X.cells2[acc_cell].target, e)
                if step is None:
                    ok = False
                    break
                acc_cell = X.graft.get((step, 0, acc_cell))
                if acc_cell is None:
                    ok = False
                    break
        if ok:
            niche_universals[p.key()] = (acc_cell,)
        else:
            niche_universals[p.key()] = ()
            violations.append(
                Violation(
                    "niche without universal occupant",
                    (p.key(),),
                    "no derivation from binary universals",
                )
            )

    # closure of universality under grafting, checked on generators
    for (outer, slot, inner), result in X.graft.items():
        if outer in u2 and inner in u2 and result not in u2:
            violations.append(
                Violation("composite of universals not universal", (outer, slot, inner, result))
            )
    for u in u2:
        cell = X.cells2[u]
        if cell.source.arity != 2:
            continue
        f, g = cell.source.edges
        if f in u1 and g in u1 and cell.target not in u1:
            violations.append(
                Violation("composite 1-cell not universal", (u, f, g, cell.target))
            )

    return CoherenceReport(
        violations=tuple(violations),
        universal_one_cells=u1,
        universal_two_cells=u2,
        niche_universals=niche_universals,
        mode="direct niche search" if direct_niche_search else "closure checked via generators",
        arity_bound=X.arity_bound,
    )
