"""JSON formats for frameworks, stresses, matroids, arrangements, layouts.

All rationals are serialized as "num/den" strings (including integers, so
"0/1" not 0), which keeps files byte-stable across platforms.  Dumps are
canonical: sorted keys, no whitespace, one trailing newline.  Loaders accept
extra keys, so a gadget layout file can be fed to any operation expecting a
framework.
"""

import hashlib
import json
from fractions import Fraction

from .arrangements import LineArrangement
from .errors import InvalidInput
from .exact_geom import Line, Point, rat_str
from .framework import Framework, make_framework
from .gadget import GadgetLayout
from .sign_matroid import StressMatroid
from .stress_kernel import StressBasis


def canonical_json(data):
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def dump_canonical(data, path=None):
    text = canonical_json(data)
    if path is None:
        return text
    with open(path, "w") as fh:
        fh.write(text)
    return text


def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _parse_rat(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidInput(f"bad rational {text!r}: {exc}")


# --- frameworks ---

def framework_to_data(f):
    return {
        "vertices": [
            {"id": vid, "x": rat_str(f.pos(vid).x), "y": rat_str(f.pos(vid).y)}
            for vid in f.vertex_ids
        ],
        "edges": [[u, v] for u, v in f.edges],
    }


def framework_from_data(data):
    if "framework" in data:  # layout files embed the framework
        data = data["framework"]
    try:
        vertices = [
            (v["id"], Point(_parse_rat(v["x"]), _parse_rat(v["y"])))
            for v in data["vertices"]
        ]
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed framework data: {exc}")
    return make_framework(vertices, edges)


# --- stresses and bases ---

def stress_to_data(f, s):
    return {
        "edges_order": f.edge_keys(),
        "values": [rat_str(x) for x in s],
    }


def stress_from_data(data, f=None):
    """Stress tuple; aligned to the framework's edge order when f is given."""
    try:
        order = list(data["edges_order"])
        values = [_parse_rat(x) for x in data["values"]]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed stress data: {exc}")
    if len(order) != len(values):
        raise InvalidInput("edges_order and values differ in length")
    if f is None:
        return tuple(values)
    out = [None] * len(f.edges)
    for key, val in zip(order, values):
        out[f.edge_index(key)] = val
    if any(x is None for x in out):
        raise InvalidInput("stress file does not cover every edge")
    return tuple(out)


def basis_to_data(f, basis):
    return {
        "dimension": basis.dimension,
        "edges_order": f.edge_keys(),
        "stresses": [[rat_str(x) for x in vec] for vec in basis.vectors],
    }


def basis_from_data(data):
    try:
        vectors = tuple(
            tuple(_parse_rat(x) for x in vec) for vec in data["stresses"])
        count = len(data["edges_order"]) if "edges_order" in data else (
            len(vectors[0]) if vectors else 0)
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed basis data: {exc}")
    return StressBasis(vectors, count)


# --- matroids ---

def matroid_to_data(m):
    data = {
        "edge_order": list(m.edge_order),
        "circuits": list(m.circuits),
    }
    if m.covectors is not None:
        data["covectors"] = sorted(m.covectors)
    data["sha"] = hashlib.sha256(
        canonical_json(data).encode()).hexdigest()
    return data


def matroid_from_data(data):
    try:
        edge_order = tuple(data["edge_order"])
        circuits = tuple(data["circuits"])
        covectors = frozenset(data["covectors"]) if "covectors" in data else None
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed matroid data: {exc}")
    if "sha" in data:
        body = {k: v for k, v in data.items() if k != "sha"}
        digest = hashlib.sha256(canonical_json(body).encode()).hexdigest()
        if digest != data["sha"]:
            raise InvalidInput("matroid file sha does not match its content")
    return StressMatroid(edge_order, circuits, covectors)


# --- arrangements ---

def arrangement_to_data(arr):
    return {
        "lines": [
            {"a": rat_str(l.a), "b": rat_str(l.b), "c": rat_str(l.c)}
            for l in arr.lines
        ],
    }


def arrangement_from_data(data):
    try:
        lines = tuple(
            Line(_parse_rat(l["a"]), _parse_rat(l["b"]), _parse_rat(l["c"]))
            for l in data["lines"])
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed arrangement data: {exc}")
    return LineArrangement(lines)


# --- gadget layouts ---

def layout_to_data(layout):
    meta = layout.meta
    return {
        "framework": framework_to_data(layout.framework),
        "labels": dict(layout.labels),
        "line_of": {str(i): list(ks) for i, ks in layout.line_of.items()},
        "n": layout.n,
        "transform": {
            "shear": rat_str(meta["transform"]["shear"]),
            "shift": rat_str(meta["transform"]["shift"]),
        },
        "rhombus": {
            "a": rat_str(meta["rhombus"]["a"]),
            "b": rat_str(meta["rhombus"]["b"]),
        },
        "line_permutation": list(meta["line_permutation"]),
        "roles": [list(r) for r in meta["roles"]],
    }


def layout_from_data(data):
    try:
        fw = framework_from_data(data["framework"])
        labels = dict(data["labels"])
        line_of = {int(i): list(ks) for i, ks in data["line_of"].items()}
        n = int(data["n"])
        meta = {
            "transform": {
                "shear": _parse_rat(data["transform"]["shear"]),
                "shift": _parse_rat(data["transform"]["shift"]),
            },
            "rhombus": {
                "a": _parse_rat(data["rhombus"]["a"]),
                "b": _parse_rat(data["rhombus"]["b"]),
            },
            "line_permutation": list(data["line_permutation"]),
            "roles": [tuple(r) for r in data["roles"]],
        }
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed layout data: {exc}")
    return GadgetLayout(fw, labels, line_of, n, meta)
