"""JSON file formats.

Complex: {"m": int, "facets": [[int, ...], ...]} with 1-based vertices,
facet lists sorted.  Multicomplex: {"c": [int, ...],
"max_monomials": [[int, ...], ...]}.  These are the interchange formats of
the command-line tool.
"""

from __future__ import annotations

import json

from .complexes import Complex, make_complex
from .errors import InvalidInput
from .multicomplexes import Multicomplex, make_multicomplex


def complex_to_dict(k: Complex) -> dict:
    return {"m": k.m, "facets": [list(f) for f in k.facet_sets()]}


def complex_from_dict(d: dict) -> Complex:
    try:
        m = int(d["m"])
        facets = [[int(v) for v in f] for f in d["facets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"bad complex JSON: {exc}") from exc
    for f in facets:
        for v in f:
            if not 1 <= v <= m:
                raise InvalidInput(f"vertex {v} outside ground set [{m}]")
    return make_complex(m, facets)


def multicomplex_to_dict(mc: Multicomplex) -> dict:
    return {"c": list(mc.c), "max_monomials": [list(a) for a in mc.max_monomials]}


def multicomplex_from_dict(d: dict) -> Multicomplex:
    try:
        c = [int(x) for x in d["c"]]
        gens = [[int(x) for x in a] for a in d["max_monomials"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"bad multicomplex JSON: {exc}") from exc
    return make_multicomplex(c, gens)


def load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def load_complex(path: str) -> Complex:
    return complex_from_dict(load_json(path))


def load_multicomplex(path: str) -> Multicomplex:
    return multicomplex_from_dict(load_json(path))


def dump_json(data, path: str | None):
    text = json.dumps(data, indent=2, sort_keys=True)
    if path is None:
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
