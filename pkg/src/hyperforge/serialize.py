"""JSON structure files.

Layout::

    {"k": 3, "m": 2, "n": 2, "f": [[0], [0, 1], ...], "g": [0, 0, ...]}

``f`` has ``k**m`` rows and ``g`` has ``k**n`` entries, both in row-major
tuple order.  :func:`dumps_structure` is canonical: re-loading and dumping
gives identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import HyperOpTable, MAX_K, OpTable, Structure, mask_of, members, tuple_decode
from .errors import StructureFormatError


def structure_to_dict(S: Structure) -> dict:
    return {
        "k": S.k,
        "m": S.m,
        "n": S.n,
        "f": [list(members(entry)) for entry in S.f.table],
        "g": list(S.g.table),
    }


def dumps_structure(S: Structure, pretty: bool = False) -> str:
    return dumps(structure_to_dict(S), pretty)


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


def _int_field(data, name, minimum):
    value = data.get(name)
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise StructureFormatError(f"field {name!r} must be an integer >= {minimum}")
    return value


def structure_from_dict(data) -> Structure:
    if not isinstance(data, dict):
        raise StructureFormatError("structure file must hold a JSON object")
    k = _int_field(data, "k", 1)
    m = _int_field(data, "m", 2)
    n = _int_field(data, "n", 2)
    if k > MAX_K:
        raise StructureFormatError(f"k={k} exceeds the maximum of {MAX_K}")
    f, g = data.get("f"), data.get("g")
    if not isinstance(f, list) or len(f) != k**m:
        raise StructureFormatError(f"'f' must be a list of k^m = {k**m} rows")
    if not isinstance(g, list) or len(g) != k**n:
        raise StructureFormatError(f"'g' must be a list of k^n = {k**n} entries")

    ftab = []
    for idx, row in enumerate(f):
        where = dict(flat_index=idx, tuple=list(tuple_decode(idx, k, m)))
        if not isinstance(row, list) or not row:
            raise StructureFormatError(
                f"f entry at flat index {idx} (tuple {where['tuple']}) must be a "
                f"non-empty list", **where)
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < k:
                raise StructureFormatError(
                    f"f entry at flat index {idx} (tuple {where['tuple']}) has "
                    f"invalid element {x!r}", **where)
        ftab.append(mask_of(row))
    gtab = []
    for idx, x in enumerate(g):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < k:
            t = list(tuple_decode(idx, k, n))
            raise StructureFormatError(
                f"g entry at flat index {idx} (tuple {t}) has invalid element {x!r}",
                flat_index=idx, tuple=t)
        gtab.append(x)
    return Structure(HyperOpTable(m, k, tuple(ftab)), OpTable(n, k, tuple(gtab)))


def loads_structure(text: str) -> Structure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureFormatError(f"invalid JSON: {exc}") from exc
    return structure_from_dict(data)


def load_structure(path) -> Structure:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise StructureFormatError(f"cannot read {path}: {exc}") from exc
    return loads_structure(text)


def save_structure(S: Structure, path) -> None:
    Path(path).write_text(dumps_structure(S) + "\n", encoding="utf-8")
