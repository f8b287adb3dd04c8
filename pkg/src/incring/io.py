"""JSON formats for rings, prosets, families, matrices, lazy elements and
maps.

Everything emitted can be re-read bit-identically: element labels are kept
as written (integers or strings), coefficient values travel as exact strings
through each ring's parse/format pair, and relation lists are sorted.
"""

import json

from .lazy import LazyMatrix, lazy_finitary, named_oracle
from .matrices import IncMatrix
from .prosets import (
    AugmentedFamily,
    NFamily,
    NStarDivFamily,
    Proset,
    ZFamily,
    ZigFamily,
    elem_key,
    two_block,
)
from .rings import QQ, ZZ, ModRing, PrimeField

__all__ = [
    "ring_from_json",
    "ring_to_json",
    "proset_from_json",
    "proset_to_json",
    "family_from_json",
    "family_to_json",
    "matrix_from_json",
    "matrix_to_json",
    "lazy_from_json",
    "lazy_to_json",
    "map_from_json",
    "map_to_json",
    "canonical_labels",
    "load_json",
]


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _maybe_file(obj):
    if isinstance(obj, str) and obj.endswith(".json"):
        return load_json(obj)
    return obj


def ring_from_json(obj):
    obj = _maybe_file(obj)
    if isinstance(obj, dict) and "ring" in obj:
        obj = obj["ring"]
    if obj == "Z":
        return ZZ
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and "mod" in obj:
        return ModRing(int(obj["mod"]))
    if isinstance(obj, dict) and "gf" in obj:
        return PrimeField(int(obj["gf"]))
    raise ValueError("unrecognized ring %r" % (obj,))


def ring_to_json(ring):
    return ring.descriptor()


def _resolve(label, elements):
    """Match a JSON label against proset elements, tolerating the string
    coercion JSON object keys force on integers."""
    if label in elements:
        return label
    by_str = {str(e): e for e in elements}
    if str(label) in by_str:
        return by_str[str(label)]
    raise ValueError("label %r is not an element" % (label,))


def proset_from_json(obj):
    obj = _maybe_file(obj)
    if isinstance(obj, dict) and ("family" in obj or "augment" in obj):
        fam = family_from_json(obj)
        if isinstance(fam, Proset):
            return fam
        raise ValueError("an infinite family is not a finite proset")
    elements = list(obj["elements"])
    rel = [
        (_resolve(a, elements), _resolve(b, elements))
        for a, b in obj.get("relations", [])
    ]
    return Proset(elements, rel)


def proset_to_json(pro):
    return {
        "elements": list(pro.elements),
        "relations": [[a, b] for (a, b) in pro.strict_pairs()],
    }


def _coerce_int(x):
    if isinstance(x, bool):
        return x
    try:
        return int(x)
    except (TypeError, ValueError):
        return x


def family_from_json(obj):
    obj = _maybe_file(obj)
    if isinstance(obj, dict) and "augment" in obj:
        desc = obj["augment"]
        base = family_from_json(desc["base"])
        sets = [frozenset(_coerce_int(x) for x in s) for s in desc["sets"]]
        return AugmentedFamily(base, sets)
    if isinstance(obj, dict) and "family" in obj:
        desc = obj["family"]
        if desc == "N":
            return NFamily()
        if desc == "Z":
            return ZFamily()
        if desc == "Zig":
            return ZigFamily()
        if isinstance(desc, dict) and desc.get("nstar_div"):
            return NStarDivFamily()
        if isinstance(desc, dict) and "two_block" in desc:
            m, n = desc["two_block"]
            return two_block(int(m), int(n))
    if isinstance(obj, dict) and "elements" in obj:
        return proset_from_json(obj)
    raise ValueError("unrecognized family %r" % (obj,))


def family_to_json(fam):
    if isinstance(fam, Proset):
        return proset_to_json(fam)
    return fam.descriptor()


def matrix_from_json(obj):
    obj = _maybe_file(obj)
    pro = proset_from_json(obj["proset"])
    ring = ring_from_json(obj["ring"])
    entries = {}
    for s1, s2, v in obj.get("entries", []):
        a, b = _resolve(s1, pro.elements), _resolve(s2, pro.elements)
        entries[(a, b)] = ring.parse(str(v))
    return IncMatrix(pro, ring, entries)


def matrix_to_json(m):
    rows = [
        [a, b, m.ring.format(v)]
        for (a, b), v in sorted(
            m.entries.items(), key=lambda kv: (elem_key(kv[0][0]), elem_key(kv[0][1]))
        )
    ]
    return {
        "proset": proset_to_json(m.pro),
        "ring": ring_to_json(m.ring),
        "entries": rows,
    }


def lazy_from_json(obj):
    obj = _maybe_file(obj)
    fam = family_from_json(obj["family"])
    ring = ring_from_json(obj["ring"])
    if "oracle" in obj:
        return named_oracle(obj["oracle"], fam, ring)
    off = {}
    for s1, s2, v in obj.get("off_diagonal", []):
        off[(_coerce_int(s1), _coerce_int(s2))] = ring.parse(str(v))
    exc = {}
    for s, v in obj.get("diagonal_exceptions", []):
        exc[_coerce_int(s)] = ring.parse(str(v))
    default = ring.parse(str(obj.get("diagonal_default", "1")))
    return lazy_finitary(fam, ring, off_diag=off, exceptions=exc, default=default)


def lazy_to_json(lz):
    if lz.finitary is None:
        raise ValueError("only finitary lazy elements serialize")
    off, exc, default = lz.finitary
    return {
        "family": family_to_json(lz.family),
        "ring": ring_to_json(lz.ring),
        "off_diagonal": [
            [a, b, lz.ring.format(v)]
            for (a, b), v in sorted(
                off.items(), key=lambda kv: (elem_key(kv[0][0]), elem_key(kv[0][1]))
            )
        ],
        "diagonal_exceptions": [
            [s, lz.ring.format(v)]
            for s, v in sorted(exc.items(), key=lambda kv: elem_key(kv[0]))
        ],
        "diagonal_default": lz.ring.format(default),
    }


def map_from_json(obj):
    from .functor_cat import FccMap

    obj = _maybe_file(obj)
    dom = proset_from_json(obj["domain"])
    cod = proset_from_json(obj["codomain"])
    mapping = {}
    raw = obj["map"]
    items = raw.items() if isinstance(raw, dict) else raw
    for k, v in items:
        mapping[_resolve(k, dom.elements)] = _resolve(v, cod.elements)
    return FccMap(dom, cod, mapping)


def map_to_json(f):
    return {
        "domain": proset_to_json(f.domain),
        "codomain": proset_to_json(f.codomain),
        "map": {str(s): f(s) for s in f.domain.elements},
    }


def canonical_labels(pro):
    """Relabel a proset onto c0..cN-1 (handy when elements are quotient
    classes that JSON cannot carry).  Returns the relabeled proset and the
    legend mapping new labels to printable originals."""
    order = sorted(pro.elements, key=elem_key)
    names = {s: "c%d" % i for i, s in enumerate(order)}
    rel = [(names[a], names[b]) for (a, b) in pro.pairs()]
    legend = {
        names[s]: sorted(str(x) for x in s) if isinstance(s, frozenset) else str(s)
        for s in order
    }
    return Proset(names.values(), rel), legend
