"""JSON documents for every structure kind, with a canonical layout.

One document per structure, discriminated by a top-level ``kind`` in
{set, op1cat, op2cat, category, bicategory, opmorphism, laxfunctor}.
Serialisation sorts every list by its natural key and every object by key, so
parsing followed by dumping is byte-stable.
"""

from __future__ import annotations

import json

from .bicat import FiniteBicategory, FiniteCategory, LaxFunctor
from .core import (
    FiniteOpOneCat,
    FiniteOpTwoCat,
    PastingPath,
    TwoCell,
    empty_path,
)
from .equivalences import Biasing, OpMorphism
from .errors import ParseError, UnknownKind

KINDS = ("set", "op1cat", "op2cat", "category", "bicategory", "opmorphism", "laxfunctor")


def _cells(table: dict[str, tuple[str, str]]) -> list[dict]:
    return [
        {"id": i, "src": s, "tgt": t} for i, (s, t) in sorted(table.items())
    ]


def _read_cells(rows) -> dict[str, tuple[str, str]]:
    return {row["id"]: (row["src"], row["tgt"]) for row in rows}


def _path_doc(p: PastingPath) -> dict:
    if p.arity == 0:
        return {"anchor": p.anchor, "edges": []}
    return {"edges": list(p.edges)}


def _read_path(doc) -> PastingPath:
    edges = tuple(doc.get("edges", ()))
    if edges:
        return PastingPath(edges)
    return empty_path(doc["anchor"])


def to_doc(obj, biasing: Biasing | None = None) -> dict:
    if isinstance(obj, (set, frozenset, tuple, list)) and not isinstance(obj, PastingPath):
        return {"kind": "set", "elements": sorted(obj)}
    if isinstance(obj, FiniteCategory):
        return {
            "kind": "category",
            "objects": sorted(obj.objects),
            "arrows": _cells(obj.arrows),
            "identities": dict(sorted(obj.identities.items())),
            "compose": [
                {"g": g, "f": f, "result": r}
                for (g, f), r in sorted(obj.compose.items())
            ],
        }
    if isinstance(obj, FiniteOpOneCat):
        comp_rows = []
        for key, r in sorted(obj.comp.items()):
            if key[0] == 0:
                comp_rows.append({"anchor": key[1], "edges": [], "result": r})
            else:
                comp_rows.append({"edges": list(key[1:]), "result": r})
        return {
            "kind": "op1cat",
            "objects": sorted(obj.objects),
            "one_cells": _cells(obj.cells1),
            "arity_bound": obj.arity_bound,
            "comp": comp_rows,
        }
    if isinstance(obj, FiniteOpTwoCat):
        doc = {
            "kind": "op2cat",
            "objects": sorted(obj.objects),
            "one_cells": _cells(obj.cells1),
            "two_cells": [
                {"id": cid, "source": _path_doc(cell.source), "target": cell.target}
                for cid, cell in sorted(obj.cells2.items())
            ],
            "identity_two_cells": dict(sorted(obj.ident2.items())),
            "arity_bound": obj.arity_bound,
            "graft": [
                {"outer": o, "slot": s, "inner": i, "result": r}
                for (o, s, i), r in sorted(obj.graft.items())
            ],
        }
        if biasing is not None:
            doc["biasing"] = {
                "iota": dict(sorted(biasing.iota.items())),
                "c": [
                    {"f": f, "g": g, "cell": cell}
                    for (f, g), cell in sorted(biasing.c.items())
                ],
            }
        return doc
    if isinstance(obj, FiniteBicategory):
        return {
            "kind": "bicategory",
            "objects": sorted(obj.objects),
            "one_cells": _cells(obj.one_cells),
            "two_cells": _cells(obj.two_cells),
            "identity_two_cells": dict(sorted(obj.id2.items())),
            "vertical": [
                {"after": b, "before": a, "result": r}
                for (b, a), r in sorted(obj.vcomp.items())
            ],
            "identity_one_cells": dict(sorted(obj.id1.items())),
            "horizontal_one": [
                {"g": g, "f": f, "result": r}
                for (g, f), r in sorted(obj.hcomp1.items())
            ],
            "horizontal_two": [
                {"beta": b, "alpha": a, "result": r}
                for (b, a), r in sorted(obj.hcomp2.items())
            ],
            "associator": [
                {"h": h, "g": g, "f": f, "component": r}
                for (h, g, f), r in sorted(obj.assoc.items())
            ],
            "left_unitor": dict(sorted(obj.lunit.items())),
            "right_unitor": dict(sorted(obj.runit.items())),
        }
    if isinstance(obj, OpMorphism):
        return {
            "kind": "opmorphism",
            "objects": dict(sorted(obj.on_objects.items())),
            "one_cells": dict(sorted(obj.on_one_cells.items())),
            "two_cells": dict(sorted(obj.on_two_cells.items())),
        }
    if isinstance(obj, LaxFunctor):
        return {
            "kind": "laxfunctor",
            "objects": dict(sorted(obj.on_objects.items())),
            "one_cells": dict(sorted(obj.on_one_cells.items())),
            "two_cells": dict(sorted(obj.on_two_cells.items())),
            "pair_constraints": [
                {"g": g, "f": f, "component": r}
                for (g, f), r in sorted(obj.phi_pair.items())
            ],
            "object_constraints": dict(sorted(obj.phi_obj.items())),
        }
    raise UnknownKind(f"cannot serialise {type(obj).__name__}")


def from_doc(doc: dict):
    """Structure (or (structure, biasing) for op2cat documents) from a doc."""
    kind = doc.get("kind")
    if kind == "set":
        return tuple(sorted(doc["elements"]))
    if kind == "category":
        return FiniteCategory(
            objects=tuple(sorted(doc["objects"])),
            arrows=_read_cells(doc["arrows"]),
            identities=dict(doc["identities"]),
            compose={(row["g"], row["f"]): row["result"] for row in doc["compose"]},
        )
    if kind == "op1cat":
        comp = {}
        for row in doc["comp"]:
            p = _read_path(row)
            comp[p.key()] = row["result"]
        return FiniteOpOneCat(
            objects=tuple(sorted(doc["objects"])),
            cells1=_read_cells(doc["one_cells"]),
            comp=comp,
            arity_bound=doc.get("arity_bound", 4),
        )
    if kind == "op2cat":
        cells2 = {
            row["id"]: TwoCell(row["id"], _read_path(row["source"]), row["target"])
            for row in doc["two_cells"]
        }
        X = FiniteOpTwoCat(
            objects=tuple(sorted(doc["objects"])),
            cells1=_read_cells(doc["one_cells"]),
            cells2=cells2,
            ident2=dict(doc["identity_two_cells"]),
            graft={
                (row["outer"], row["slot"], row["inner"]): row["result"]
                for row in doc["graft"]
            },
            arity_bound=doc.get("arity_bound", 4),
        )
        if "biasing" in doc:
            b = Biasing(
                iota=dict(doc["biasing"]["iota"]),
                c={(row["f"], row["g"]): row["cell"] for row in doc["biasing"]["c"]},
            )
            return X, b
        return X, None
    if kind == "bicategory":
        return FiniteBicategory(
            objects=tuple(sorted(doc["objects"])),
            one_cells=_read_cells(doc["one_cells"]),
            two_cells=_read_cells(doc["two_cells"]),
            id2=dict(doc["identity_two_cells"]),
            vcomp={(row["after"], row["before"]): row["result"] for row in doc["vertical"]},
            id1=dict(doc["identity_one_cells"]),
            hcomp1={(row["g"], row["f"]): row["result"] for row in doc["horizontal_one"]},
            hcomp2={(row["beta"], row["alpha"]): row["result"] for row in doc["horizontal_two"]},
            assoc={
                (row["h"], row["g"], row["f"]): row["component"]
                for row in doc["associator"]
            },
            lunit=dict(doc["left_unitor"]),
            runit=dict(doc["right_unitor"]),
        )
    if kind == "opmorphism":
        return OpMorphism(
            on_objects=dict(doc["objects"]),
            on_one_cells=dict(doc["one_cells"]),
            on_two_cells=dict(doc["two_cells"]),
        )
    if kind == "laxfunctor":
        return LaxFunctor(
            on_objects=dict(doc["objects"]),
            on_one_cells=dict(doc["one_cells"]),
            on_two_cells=dict(doc["two_cells"]),
            phi_pair={
                (row["g"], row["f"]): row["component"]
                for row in doc["pair_constraints"]
            },
            phi_obj=dict(doc["object_constraints"]),
        )
    raise UnknownKind(f"unknown kind {kind!r}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc), exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError("document must be an object with a 'kind' field")
    if doc["kind"] not in KINDS:
        raise UnknownKind(f"unknown kind {doc['kind']!r}")
    return doc


def load_path(filename: str) -> dict:
    try:
        with open(filename, "r", encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {filename}: {exc}") from None


def save_path(filename: str, doc: dict) -> None:
    with open(filename, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
