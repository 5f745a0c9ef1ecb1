"""Conversions between opetopic and classical presentations, both directions.

Dimension 0 swaps a one-loop-per-object presentation with a plain set.
Dimension 1 reads composition and identities off the unique niche occupants;
the inverse materialises the full composition table of a category up to the
arity bound.  Dimension 2 needs a choice: a biasing picks one universal
occupant for every nullary and binary 2-niche, and the bicategory's data is
then solved for through unique factorisations.  The inverse generates cells
as canonical pairs (head-first bracketing, labelling 2-cell) and computes the
grafting table by whiskering and renormalising through coherence cells.

Morphisms translate likewise: constraint components are the unique solutions
against the chosen occupants, and a lax functor extends back to all arities
through the canonical presentation.  Classification compares images of
universal and of chosen occupants.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    ArityBoundExceeded,
    InvalidBiasing,
    InvalidInput,
    NonUniqueSolution,
    NoSolution,
    NoUniversalOccupant,
    ValidationReport,
    _Collector,
)
from .core import (
    DEFAULT_ARITY_BOUND,
    FiniteOpOneCat,
    FiniteOpTwoCat,
    FiniteOpZeroCat,
    PastingPath,
    TwoCell,
    empty_path,
    iter_paths,
    occupants_of_niche,
    path,
    validate_op0,
    validate_op1,
    validate_op2,
)
from .bicat import (
    CatFunctor,
    FiniteBicategory,
    FiniteCategory,
    LaxFunctor,
    _LEAF,
    _UNIT,
    _comb_tree,
    _normalize,
    _whisker_at,
    chain_value,
    invert_two_cell,
    validate_bicategory,
    validate_category,
)
from .universality import check_coherence, is_universal_1cell, is_universal_2cell


@dataclass(frozen=True)
class Biasing:
    """Chosen universal occupants: one per nullary and per binary 2-niche.

    ``c`` is keyed by the two-edge source path in order (first, second).
    """

    iota: dict[str, str]
    c: dict[tuple[str, str], str]


@dataclass(frozen=True)
class OpMorphism:
    """Level-wise maps of cells between opetopic presentations."""

    on_objects: dict[str, str]
    on_one_cells: dict[str, str]
    on_two_cells: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class MorphismClassification:
    verdict: str  # "strict", "weak" or "lax"
    witness: tuple = ()

    def __str__(self) -> str:
        if self.witness:
            return f"{self.verdict} (witness: {self.witness})"
        return self.verdict


# ---------------------------------------------------------------------------
# dimension 0


def to_set(X: FiniteOpZeroCat) -> tuple[str, ...]:
    report = validate_op0(X)
    if not report.ok:
        raise InvalidInput(str(report))
    return tuple(sorted(X.objects))


def from_set(elements) -> FiniteOpZeroCat:
    objects = tuple(sorted(elements))
    return FiniteOpZeroCat(objects, {f"1_{a}": (a, a) for a in objects})


# ---------------------------------------------------------------------------
# dimension 1


def to_category(X: FiniteOpOneCat, check: bool = True) -> FiniteCategory:
    """Read a category off the unique occupants of nullary and binary niches."""
    if check:
        report = validate_op1(X)
        if not report.ok:
            raise InvalidInput(str(report))
    identities = {a: X.comp[empty_path(a).key()] for a in X.objects}
    compose = {
        (g, f): X.comp[path(f, g).key()]
        for f, (_, t) in X.cells1.items()
        for g, (s, _) in X.cells1.items()
        if t == s
    }
    return FiniteCategory(
        tuple(sorted(X.objects)), dict(X.cells1), identities, compose
    )


def from_category(
    C: FiniteCategory, arity_bound: int | None = None, check: bool = True
) -> FiniteOpOneCat:
    """Materialise the composition table over all paths up to the bound."""
    if check:
        report = validate_category(C)
        if not report.ok:
            raise InvalidInput(str(report))
    bound = DEFAULT_ARITY_BOUND if arity_bound is None else arity_bound
    X = FiniteOpOneCat(tuple(sorted(C.objects)), dict(C.arrows), {}, bound)
    comp: dict[tuple, str] = {}
    for p in iter_paths(X):
        if p.arity == 0:
            comp[p.key()] = C.identities[p.anchor]
            continue
        acc = p.edges[0]
        for e in p.edges[1:]:
            acc = C.then(acc, e)
        comp[p.key()] = acc
    return FiniteOpOneCat(X.objects, X.cells1, comp, bound)


def functor_from_morphism(
    F: OpMorphism, X: FiniteOpOneCat, Y: FiniteOpOneCat, check: bool = True
) -> CatFunctor:
    """A morphism of 1-dimensional presentations is already a functor."""
    if check:
        for a in X.objects:
            if F.on_objects.get(a) not in Y.objects:
                raise InvalidInput(f"object {a!r} has no valid image")
        for f, (s, t) in X.cells1.items():
            ff = F.on_one_cells.get(f)
            if ff is None or ff not in Y.cells1:
                raise InvalidInput(f"1-cell {f!r} has no valid image")
            if Y.cells1[ff] != (F.on_objects[s], F.on_objects[t]):
                raise InvalidInput(f"image of {f!r} breaks its frame")
        for p in iter_paths(X):
            if p.arity == 0:
                image = empty_path(F.on_objects[p.anchor])
            else:
                image = PastingPath(tuple(F.on_one_cells[e] for e in p.edges))
            if Y.comp[image.key()] != F.on_one_cells[X.comp[p.key()]]:
                raise InvalidInput(f"composition not preserved on {p!r}")
    return CatFunctor(dict(F.on_objects), dict(F.on_one_cells))


# ---------------------------------------------------------------------------
# dimension 2: biasing and the forward direction


def choose_biasing(X: FiniteOpTwoCat) -> Biasing:
    """Pick the lexicographically least universal occupant per niche."""
    iota: dict[str, str] = {}
    for a in X.objects:
        found = sorted(
            c for c in occupants_of_niche(X, empty_path(a)) if is_universal_2cell(X, c)
        )
        if not found:
            raise NoUniversalOccupant(f"nullary niche at {a!r}")
        iota[a] = found[0]
    c_table: dict[tuple[str, str], str] = {}
    for f, (_, t) in X.cells1.items():
        for g, (s, _) in X.cells1.items():
            if t != s:
                continue
            found = sorted(
                c
                for c in occupants_of_niche(X, path(f, g))
                if is_universal_2cell(X, c)
            )
            if not found:
                raise NoUniversalOccupant(f"binary niche at ({f!r}, {g!r})")
            c_table[(f, g)] = found[0]
    return Biasing(iota, c_table)


def validate_biasing(X: FiniteOpTwoCat, b: Biasing) -> ValidationReport:
    out = _Collector()
    for a in X.objects:
        cell_id = b.iota.get(a)
        if cell_id is None or cell_id not in X.cells2:
            out.add("totality", (a,), "no chosen nullary occupant")
            continue
        if X.cells2[cell_id].source != empty_path(a):
            out.add("niche", (a, cell_id), "chosen cell not in the nullary niche")
        elif not is_universal_2cell(X, cell_id):
            out.add("universality", (a, cell_id), "chosen nullary occupant not universal")
    for f, (_, t) in X.cells1.items():
        for g, (s, _) in X.cells1.items():
            if t != s:
                continue
            cell_id = b.c.get((f, g))
            if cell_id is None or cell_id not in X.cells2:
                out.add("totality", (f, g), "no chosen binary occupant")
                continue
            if X.cells2[cell_id].source != path(f, g):
                out.add("niche", (f, g, cell_id), "chosen cell not in its binary niche")
            elif not is_universal_2cell(X, cell_id):
                out.add("universality", (f, g, cell_id), "chosen binary occupant not universal")
    composable = {
        (f, g)
        for f, (_, t) in X.cells1.items()
        for g, (s, _) in X.cells1.items()
        if t == s
    }
    for a in set(b.iota) - set(X.objects):
        out.add("niche", (a,), "choice for an unknown object")
    for pair in set(b.c) - composable:
        out.add("niche", (pair,), "choice for a non-composable pair")
    return out.report()


def _solve_unique(X: FiniteOpTwoCat, base: str, composite: str, what: str) -> str:
    """The unique 1-ary cell whose graft over ``base`` equals ``composite``."""
    src_needed = X.cells2[base].target
    matches = [
        t
        for t, cell in X.cells2.items()
        if cell.source == path(src_needed) and X.graft.get((t, 0, base)) == composite
    ]
    if not matches:
        raise NoSolution(f"no {what} over {base!r} reaching {composite!r}")
    if len(matches) > 1:
        raise NonUniqueSolution(f"{what} over {base!r} not unique: {sorted(matches)}")
    return matches[0]


def to_bicategory(X: FiniteOpTwoCat, b: Biasing, check: bool = True) -> FiniteBicategory:
    """Solve the classical coherence data out of a biased presentation."""
    if X.arity_bound < 3:
        raise ArityBoundExceeded("building a bicategory needs arity bound at least 3")
    if check:
        report = validate_op2(X)
        if not report.ok:
            raise InvalidInput(str(report))
        coherence = check_coherence(X)
        if not coherence.ok:
            raise InvalidInput(str(coherence))
        breport = validate_biasing(X, b)
        if not breport.ok:
            raise InvalidBiasing(str(breport))

    one_cells = dict(X.cells1)
    two_cells = {
        cid: (cell.source.edges[0], cell.target)
        for cid, cell in X.cells2.items()
        if cell.source.arity == 1
    }
    id2 = dict(X.ident2)
    vcomp = {
        (b2, a2): X.graft[(b2, 0, a2)]
        for a2, (s1, t1) in two_cells.items()
        for b2, (s2, _) in two_cells.items()
        if t1 == s2
    }
    id1 = {a: X.cells2[b.iota[a]].target for a in X.objects}
    hcomp1 = {
        (g, f): X.cells2[b.c[(f, g)]].target
        for (f, g) in b.c
    }

    hcomp2: dict[tuple[str, str], str] = {}
    for a2, (f1, f2) in two_cells.items():
        mid = X.tgt1(f1)
        for b2, (g1, g2) in two_cells.items():
            if X.src1(g1) != mid:
                continue
            pasted = X.graft[(X.graft[(b.c[(f2, g2)], 0, a2)], 1, b2)]
            hcomp2[(b2, a2)] = _solve_unique(
                X, b.c[(f1, g1)], pasted, "horizontal composite"
            )

    assoc: dict[tuple[str, str, str], str] = {}
    for f, (_, bf) in X.cells1.items():
        for g, (sg, bg) in X.cells1.items():
            if sg != bf:
                continue
            for h, (sh, _) in X.cells1.items():
                if sh != bg:
                    continue
                gf = hcomp1[(g, f)]
                hg = hcomp1[(h, g)]
                head_first = X.graft[(b.c[(f, hg)], 1, b.c[(g, h)])]
                tail_first = X.graft[(b.c[(gf, h)], 0, b.c[(f, g)])]
                assoc[(h, g, f)] = _solve_unique(
                    X, head_first, tail_first, "associator component"
                )

    lunit: dict[str, str] = {}
    runit: dict[str, str] = {}
    for f, (s, t) in X.cells1.items():
        padded = X.graft[(b.c[(id1[s], f)], 0, b.iota[s])]
        runit[f] = _solve_unique(X, padded, X.ident2[f], "right unitor")
        padded = X.graft[(b.c[(f, id1[t])], 1, b.iota[t])]
        lunit[f] = _solve_unique(X, padded, X.ident2[f], "left unitor")

    return FiniteBicategory(
        objects=tuple(sorted(X.objects)),
        one_cells=one_cells,
        two_cells=two_cells,
        id2=id2,
        vcomp=vcomp,
        id1=id1,
        hcomp1=hcomp1,
        hcomp2=hcomp2,
        assoc=assoc,
        lunit=lunit,
        runit=runit,
    )


# ---------------------------------------------------------------------------
# dimension 2: generation (the inverse direction)


@dataclass(frozen=True)
class _Generated:
    structure: FiniteOpTwoCat
    biasing: Biasing
    value_of: dict[str, tuple[PastingPath, str]]
    cell_of: dict[tuple, str]


def _cell_name(p: PastingPath, alpha: str) -> str:
    if p.arity == 1:
        return alpha
    if p.arity == 0:
        return f"@{p.anchor}|{alpha}"
    return f"{';'.join(p.edges)}|{alpha}"


def _bicat_paths(B: FiniteBicategory, bound: int):
    for a in sorted(B.objects):
        yield empty_path(a)
    by_src: dict[str, list[str]] = {}
    for f, (s, _) in B.one_cells.items():
        by_src.setdefault(s, []).append(f)
    for bucket in by_src.values():
        bucket.sort()
    frontier = [(f,) for f in sorted(B.one_cells)]
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
            for g in by_src.get(B.one_cells[edges[-1]][1], ())
        ]


def _generate(B: FiniteBicategory, bound: int) -> _Generated:
    cells2: dict[str, TwoCell] = {}
    value_of: dict[str, tuple[PastingPath, str]] = {}
    cell_of: dict[tuple, str] = {}
    for p in _bicat_paths(B, bound):
        base = chain_value(B, p.edges, p.anchor)
        for alpha, (s, t) in B.two_cells.items():
            if s != base:
                continue
            cid = _cell_name(p, alpha)
            if cid in cells2:
                raise InvalidInput(f"generated cell id collision at {cid!r}")
            cells2[cid] = TwoCell(cid, p, t)
            value_of[cid] = (p, alpha)
            cell_of[(p.key(), alpha)] = cid

    ident2 = {f: _cell_name(path(f), B.id2[f]) for f in B.one_cells}

    graft_table: dict[tuple[str, int, str], str] = {}
    by_target: dict[str, list[str]] = {}
    for cid, cell in cells2.items():
        by_target.setdefault(cell.target, []).append(cid)
    for outer_id, outer in cells2.items():
        p, alpha_o = value_of[outer_id]
        for slot, edge in enumerate(p.edges):
            for inner_id in by_target.get(edge, ()):
                q, alpha_i = value_of[inner_id]
                if p.arity + q.arity - 1 > bound:
                    continue
                spliced = p.splice(slot, q)
                subtrees = [(_LEAF, e) for e in p.edges]
                if q.arity == 0:
                    subtrees[slot] = (_UNIT, q.anchor)
                else:
                    subtrees[slot] = _comb_tree([(_LEAF, e) for e in q.edges])
                _, _, sigma = _normalize(B, _comb_tree(subtrees))
                coh = invert_two_cell(B, sigma)
                if coh is None:
                    raise InvalidInput(f"normalisation leg {sigma!r} has no inverse")
                vals = list(p.edges)
                vals[slot] = B.src2(alpha_i)
                whisk = _whisker_at(B, vals, slot, alpha_i)
                value = B.then2(B.then2(coh, whisk), alpha_o)
                graft_table[(outer_id, slot, inner_id)] = cell_of[(spliced.key(), value)]

    X = FiniteOpTwoCat(
        objects=tuple(sorted(B.objects)),
        cells1=dict(B.one_cells),
        cells2=cells2,
        ident2=ident2,
        graft=graft_table,
        arity_bound=bound,
    )
    biasing = Biasing(
        iota={a: cell_of[(empty_path(a).key(), B.id2[B.id1[a]])] for a in B.objects},
        c={
            (f, g): cell_of[(path(f, g).key(), B.id2[B.beside1(g, f)])]
            for f, (_, t) in B.one_cells.items()
            for g, (s, _) in B.one_cells.items()
            if t == s
        },
    )
    return _Generated(X, biasing, value_of, cell_of)


def from_bicategory(
    B: FiniteBicategory, arity_bound: int | None = None, check: bool = True
) -> tuple[FiniteOpTwoCat, Biasing]:
    """Generate the canonical opetopic presentation of a bicategory.

    Each niche's occupants are the pairs (head-first composite, 2-cell out of
    it); the chosen occupants carry the identity 2-cells.
    """
    bound = DEFAULT_ARITY_BOUND if arity_bound is None else arity_bound
    if bound < 2:
        raise ArityBoundExceeded("generation needs arity bound at least 2")
    if check:
        report = validate_bicategory(B)
        if not report.ok:
            raise InvalidInput(str(report))
    gen = _generate(B, bound)
    return gen.structure, gen.biasing


# ---------------------------------------------------------------------------
# morphisms in dimension 2


def _check_morphism_shape(
    F: OpMorphism, X: FiniteOpTwoCat, X2: FiniteOpTwoCat
) -> None:
    """Frames, identities, and vertical grafting; full grafting is separate."""
    for a in X.objects:
        if F.on_objects.get(a) not in X2.objects:
            raise InvalidInput(f"object {a!r} has no valid image")
    for f, (s, t) in X.cells1.items():
        ff = F.on_one_cells.get(f)
        if ff is None or ff not in X2.cells1:
            raise InvalidInput(f"1-cell {f!r} has no valid image")
        if X2.cells1[ff] != (F.on_objects[s], F.on_objects[t]):
            raise InvalidInput(f"image of 1-cell {f!r} breaks its frame")
    for cid, cell in X.cells2.items():
        img = F.on_two_cells.get(cid)
        if img is None or img not in X2.cells2:
            raise InvalidInput(f"2-cell {cid!r} has no valid image")
        if cell.source.arity == 0:
            want_src = empty_path(F.on_objects[cell.source.anchor])
        else:
            want_src = PastingPath(tuple(F.on_one_cells[e] for e in cell.source.edges))
        target_cell = X2.cells2[img]
        if target_cell.source != want_src or target_cell.target != F.on_one_cells[cell.target]:
            raise InvalidInput(f"image of 2-cell {cid!r} breaks its frame")
    for f in X.cells1:
        if F.on_two_cells[X.ident2[f]] != X2.ident2[F.on_one_cells[f]]:
            raise InvalidInput(f"identity 2-cell on {f!r} not preserved")
    for (outer, slot, inner), result in X.graft.items():
        if X.cells2[outer].source.arity != 1 or X.cells2[inner].source.arity != 1:
            continue
        image = X2.graft.get((F.on_two_cells[outer], slot, F.on_two_cells[inner]))
        if image != F.on_two_cells[result]:
            raise InvalidInput(
                f"vertical composition not preserved at ({outer!r}, {inner!r})"
            )


def validate_op_morphism(
    F: OpMorphism, X: FiniteOpTwoCat, X2: FiniteOpTwoCat
) -> ValidationReport:
    """Full morphism check: frames, identities, and all grafting."""
    out = _Collector()
    try:
        _check_morphism_shape(F, X, X2)
    except InvalidInput as exc:
        out.add("shape", (), str(exc))
        return out.report()
    for (outer, slot, inner), result in X.graft.items():
        image = X2.graft.get(
            (F.on_two_cells[outer], slot, F.on_two_cells[inner])
        )
        if image != F.on_two_cells[result]:
            out.add("grafting", (outer, slot, inner), "grafting not preserved")
    return out.report()


def lax_functor_from_morphism(
    F: OpMorphism,
    X: FiniteOpTwoCat,
    X2: FiniteOpTwoCat,
    b: Biasing,
    b2: Biasing,
    check: bool = True,
) -> LaxFunctor:
    """Translate a morphism; constraints solved against the chosen occupants."""
    if check:
        _check_morphism_shape(F, X, X2)
    on_two = {
        cid: F.on_two_cells[cid]
        for cid, cell in X.cells2.items()
        if cell.source.arity == 1
    }
    phi_pair = {
        (g, f): _solve_unique(
            X2,
            b2.c[(F.on_one_cells[f], F.on_one_cells[g])],
            F.on_two_cells[b.c[(f, g)]],
            "pair constraint",
        )
        for (f, g) in b.c
    }
    phi_obj = {
        a: _solve_unique(
            X2, b2.iota[F.on_objects[a]], F.on_two_cells[b.iota[a]], "object constraint"
        )
        for a in X.objects
    }
    return LaxFunctor(
        on_objects=dict(F.on_objects),
        on_one_cells=dict(F.on_one_cells),
        on_two_cells=on_two,
        phi_pair=phi_pair,
        phi_obj=phi_obj,
    )


def _phi_chain(G: LaxFunctor, B: FiniteBicategory, B2: FiniteBicategory, p: PastingPath) -> str:
    """The canonical constraint composite along a head-first chain."""
    if p.arity == 0:
        return G.phi_obj[p.anchor]
    if p.arity == 1:
        return B2.id2[G.on_one_cells[p.edges[0]]]
    head, tail = p.edges[0], PastingPath(p.edges[1:])
    tail_phi = _phi_chain(G, B, B2, tail)
    tail_val = chain_value(B, tail.edges)
    whisk = B2.beside2(tail_phi, B2.id2[G.on_one_cells[head]])
    return B2.then2(whisk, G.phi_pair[(tail_val, head)])


def morphism_from_lax_functor(
    G: LaxFunctor,
    B: FiniteBicategory,
    B2: FiniteBicategory,
    arity_bound: int | None = None,
    check: bool = True,
) -> OpMorphism:
    """Extend a lax functor to all arities of the generated presentations.

    This is a data-level translation: level maps and frames are checked, the
    constraint axioms themselves are not (use ``validate_lax_functor``).
    """
    bound = DEFAULT_ARITY_BOUND if arity_bound is None else arity_bound
    gen, gen2 = _generate(B, bound), _generate(B2, bound)
    if check:
        for A in B.objects:
            if G.on_objects.get(A) not in B2.objects:
                raise InvalidInput(f"object {A!r} has no valid image")
        for f, (s, t) in B.one_cells.items():
            ff = G.on_one_cells.get(f)
            if ff is None or B2.one_cells.get(ff) != (G.on_objects[s], G.on_objects[t]):
                raise InvalidInput(f"image of 1-cell {f!r} breaks its frame")
        for a, (x, y) in B.two_cells.items():
            ga = G.on_two_cells.get(a)
            if ga is None or B2.two_cells.get(ga) != (G.on_one_cells[x], G.on_one_cells[y]):
                raise InvalidInput(f"image of 2-cell {a!r} breaks its frame")
        for f in B.one_cells:
            if G.on_two_cells[B.id2[f]] != B2.id2[G.on_one_cells[f]]:
                raise InvalidInput(f"identity 2-cell on {f!r} not preserved")
        for (b2c, a2c), c in B.vcomp.items():
            if B2.then2(G.on_two_cells[a2c], G.on_two_cells[b2c]) != G.on_two_cells[c]:
                raise InvalidInput("vertical composition not preserved")

    on_two: dict[str, str] = {}
    for cid, (p, alpha) in gen.value_of.items():
        if p.arity == 0:
            image_path = empty_path(G.on_objects[p.anchor])
        else:
            image_path = PastingPath(tuple(G.on_one_cells[e] for e in p.edges))
        value = B2.then2(_phi_chain(G, B, B2, p), G.on_two_cells[alpha])
        on_two[cid] = gen2.cell_of[(image_path.key(), value)]
    return OpMorphism(dict(G.on_objects), dict(G.on_one_cells), on_two)


def classify_morphism(
    F: OpMorphism,
    X: FiniteOpTwoCat,
    X2: FiniteOpTwoCat,
    b: Biasing,
    b2: Biasing,
    check: bool = True,
) -> MorphismClassification:
    """Strict preserves the chosen occupants, weak preserves universality,
    anything else is lax."""
    if check:
        _check_morphism_shape(F, X, X2)

    strict = True
    strict_witness: tuple = ()
    for a, cell in b.iota.items():
        if F.on_two_cells[cell] != b2.iota[F.on_objects[a]]:
            strict = False
            strict_witness = (cell, F.on_two_cells[cell])
            break
    if strict:
        for (f, g), cell in b.c.items():
            image_key = (F.on_one_cells[f], F.on_one_cells[g])
            if F.on_two_cells[cell] != b2.c[image_key]:
                strict = False
                strict_witness = (cell, F.on_two_cells[cell])
                break
    if strict:
        return MorphismClassification("strict")

    for cid in sorted(X.cells2):
        if is_universal_2cell(X, cid) and not is_universal_2cell(X2, F.on_two_cells[cid]):
            return MorphismClassification("lax", (cid, F.on_two_cells[cid]))
    for f in sorted(X.cells1):
        if is_universal_1cell(X, f) and not is_universal_1cell(X2, F.on_one_cells[f]):
            return MorphismClassification("lax", (f, F.on_one_cells[f]))
    return MorphismClassification("weak", strict_witness)
