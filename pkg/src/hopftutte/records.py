"""JSON input records for matroids, perspectives, graphs, delta-matroids and ribbon graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .delta_matroid import DeltaMatroid
from .errors import HopfTutteError, ParseError
from .graph import Multigraph, VertexPartition
from .matroid import Matroid, MatroidPerspective
from .ribbon import RibbonGraph


@dataclass(frozen=True)
class ParsedObject:
    kind: str  # matroid | perspective | graph | delta-matroid | ribbon
    payload: Any
    partition: VertexPartition | None = None


def _need(rec: dict, key: str, path: str):
    if not isinstance(rec, dict):
        raise ParseError("expected an object", field=path or None)
    if key not in rec:
        raise ParseError("missing field", field=f"{path}{key}")
    return rec[key]


def _int(value, path: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", field=path)
    if minimum is not None and value < minimum:
        raise ParseError(f"expected at least {minimum}, got {value}", field=path)
    return value


def _list(value, path: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f"expected a list, got {type(value).__name__}", field=path)
    return value


def _matroid(rec: dict, path: str = "") -> Matroid:
    kind = _need(rec, "type", path)
    if kind == "uniform":
        k = _int(_need(rec, "k", path), f"{path}k", 0)
        n = _int(_need(rec, "n", path), f"{path}n", 0)
        if k > n:
            raise ParseError(f"rank {k} exceeds size {n}", field=f"{path}k")
        return Matroid.uniform(k, n)
    if kind != "matroid":
        raise ParseError(f"expected type 'matroid' or 'uniform', got {kind!r}", field=f"{path}type")
    n = _int(_need(rec, "n", path), f"{path}n", 0)
    ranks = _list(_need(rec, "ranks", path), f"{path}ranks")
    if len(ranks) != 1 << n:
        raise ParseError(f"expected {1 << n} ranks, got {len(ranks)}", field=f"{path}ranks")
    ranks = [_int(r, f"{path}ranks[{i}]", 0) for i, r in enumerate(ranks)]
    try:
        return Matroid(ranks)
    except HopfTutteError as exc:
        raise ParseError(str(exc), field=f"{path}ranks") from exc


def _partition(rec: dict, num_vertices: int) -> VertexPartition | None:
    if "partition" not in rec:
        return None
    blocks = _list(_need(rec["partition"], "blocks", "partition."), "partition.blocks")
    parsed = []
    for i, b in enumerate(blocks):
        parsed.append([_int(v, f"partition.blocks[{i}][{j}]", 0) for j, v in enumerate(_list(b, f"partition.blocks[{i}]"))])
    try:
        return VertexPartition.from_blocks(parsed, num_vertices)
    except (ValueError, HopfTutteError) as exc:
        raise ParseError(str(exc), field="partition.blocks") from exc


def parse_record(rec: Any) -> ParsedObject:
    kind = _need(rec, "type", "")
    if kind in ("matroid", "uniform"):
        return ParsedObject("matroid", _matroid(rec))
    if kind == "perspective":
        front = _matroid(_need(rec, "front", ""), "front.")
        back = _matroid(_need(rec, "back", ""), "back.")
        try:
            return ParsedObject("perspective", MatroidPerspective(front, back))
        except HopfTutteError as exc:
            raise ParseError(str(exc), field="back") from exc
    if kind == "graph":
        v = _int(_need(rec, "v", ""), "v", 0)
        ends = []
        for i, e in enumerate(_list(_need(rec, "edges", ""), "edges")):
            e = _list(e, f"edges[{i}]")
            if len(e) != 2:
                raise ParseError("an edge needs two endpoints", field=f"edges[{i}]")
            a, b = (_int(w, f"edges[{i}][{j}]", 0) for j, w in enumerate(e))
            if a >= v or b >= v:
                raise ParseError(f"endpoint out of range 0..{v - 1}", field=f"edges[{i}]")
            ends.append((a, b))
        return ParsedObject("graph", Multigraph(v, ends), _partition(rec, v))
    if kind == "delta-matroid":
        n = _int(_need(rec, "n", ""), "n", 0)
        fam = []
        for i, f in enumerate(_list(_need(rec, "feasible", ""), "feasible")):
            mask = 0
            for j, e in enumerate(_list(f, f"feasible[{i}]")):
                e = _int(e, f"feasible[{i}][{j}]", 0)
                if e >= n:
                    raise ParseError(f"element {e} is outside 0..{n - 1}", field=f"feasible[{i}][{j}]")
                mask |= 1 << e
            fam.append(mask)
        try:
            return ParsedObject("delta-matroid", DeltaMatroid(fam, n))
        except HopfTutteError as exc:
            raise ParseError(str(exc), field="feasible") from exc
    if kind == "ribbon":
        rots = []
        for i, r in enumerate(_list(_need(rec, "vertices", ""), "vertices")):
            rots.append([_int(h, f"vertices[{i}][{j}]", 0) for j, h in enumerate(_list(r, f"vertices[{i}]"))])
        ends, signs = [], []
        for i, e in enumerate(_list(_need(rec, "edges", ""), "edges")):
            pair = _list(_need(e, "pair", f"edges[{i}]."), f"edges[{i}].pair")
            if len(pair) != 2:
                raise ParseError("a pair needs two half-edges", field=f"edges[{i}].pair")
            ends.append(tuple(_int(h, f"edges[{i}].pair[{j}]", 0) for j, h in enumerate(pair)))
            sign = e.get("sign", 1)
            if sign in ("+", "+1"):
                sign = 1
            elif sign in ("-", "-1"):
                sign = -1
            if sign not in (1, -1):
                raise ParseError(f"sign must be +1 or -1, got {sign!r}", field=f"edges[{i}].sign")
            signs.append(sign)
        try:
            G = RibbonGraph(rots, ends, signs)
        except HopfTutteError as exc:
            raise ParseError(str(exc), field="vertices") from exc
        return ParsedObject("ribbon", G, _partition(rec, G.num_vertices))
    raise ParseError(f"unknown type {kind!r}", field="type")


def parse_text(text: str) -> ParsedObject:
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from exc
    return parse_record(rec)


def load(path: str) -> ParsedObject:
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read())
