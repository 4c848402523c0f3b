"""Design-file export/import and byte-stable JSON rendering.

A design file is a single JSON document with fields: kind ("sic" | "mub"),
dim, provenance, seed (null unless the d = 8 MUB construction), and vectors
as arrays of [re, im] pairs in canonical order (SIC: state order; MUB:
basis-major). Floats are always written with 17 significant digits, which
round-trips doubles exactly and keeps repeated runs byte-identical, so the
writer below is used instead of ``json.dump`` (which has no float format
control). Reading uses the stdlib parser.
"""

import json

from .designs import MubCollection, Provenance, SicSet
from .numerics import UnitKet

MUB_PROVENANCE = {2: "QubitPauli", 3: "QutritWH", 8: "GF8Classes"}
_MUB_DIMS = {v: k for k, v in MUB_PROVENANCE.items()}


def format_float(x):
    """17-significant-digit decimal rendering (exact double round-trip)."""
    x = float(x)
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError("non-finite value in output")
    return f"{x:.17g}"


def dumps_stable(obj, indent=0):
    """Minimal JSON writer with fixed key order and fixed float format."""
    pad = " " * indent
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return repr(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f'{pad}  {json.dumps(str(k))}: {dumps_stable(v, indent + 2)}'
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}  {dumps_stable(v, indent + 2)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _vector_doc(ket):
    return [[a.real, a.imag] for a in ket.amps]


def design_to_document(design):
    if isinstance(design, SicSet):
        return {
            "kind": "sic",
            "dim": design.dim,
            "provenance": design.provenance.value,
            "seed": None,
            "vectors": [_vector_doc(k) for k in design.kets],
        }
    if isinstance(design, MubCollection):
        return {
            "kind": "mub",
            "dim": design.dim,
            "provenance": MUB_PROVENANCE[design.dim],
            "seed": design.seed,
            "vectors": [_vector_doc(k) for basis in design.bases for k in basis],
        }
    raise TypeError(f"cannot export {type(design).__name__}")


def document_to_design(doc):
    dim = doc["dim"]
    kets = [
        UnitKet([complex(re, im) for re, im in vec]) for vec in doc["vectors"]
    ]
    if doc["kind"] == "sic":
        return SicSet(dim=dim, kets=tuple(kets), provenance=Provenance(doc["provenance"]))
    if doc["kind"] == "mub":
        if len(kets) != dim * (dim + 1):
            raise ValueError("wrong vector count for a complete MUB set")
        bases = tuple(
            tuple(kets[m * dim : (m + 1) * dim]) for m in range(dim + 1)
        )
        return MubCollection(dim=dim, bases=bases, seed=doc.get("seed"))
    raise ValueError(f"unknown design kind {doc['kind']!r}")


def write_design(path, design):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_stable(design_to_document(design)))
        fh.write("\n")


def read_design(path):
    with open(path, "r", encoding="utf-8") as fh:
        return document_to_design(json.load(fh))
