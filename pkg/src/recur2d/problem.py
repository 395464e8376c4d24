"""Problem-file ingestion: JSON in, fully validated ProblemSpec out.

Schema (all scalars are JSON integers or strings like "3/4" / "5 mod 7"):

    {
      "field":  {"kind": "rationals"} | {"kind": "prime", "p": <prime>},
      "template": "<expression>",            # exactly one of template/overlay
      "overlay": [[...], ...],               # display orientation (row m on top)
      "layout": {
        "kind": "standard" | "diagonal" | "custom",
        "params": {"a":..,"d":..} | {"k":..} | {"coords": [[r,c],...]},
        "values": [{"r":..,"c":..,"value":..}, ...]      # explicit, exact cover
                  | {"generator": "delta"|"zero"}
                  | {"generator": "indicator", "at": [r,c]}
                  | {"generator": "random", "seed": <int>}
      },
      "window": {"r_min":..,"r_max":..,"c_min":..,"c_max":..}
    }

Every rejection is a SchemaError whose pointer names the offending JSON node.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (InvalidOverlayError, LayoutOutOfWindow,
                     NonContiguousExtremeRow, ParseError, SchemaError,
                     ZeroTemplateError)
from .field import (FieldDescriptor, RATIONALS, Scalar, from_int, parse_scalar,
                    prime_field)
from .layout import (Layout, custom_layout, delta_values, diagonal_coords,
                     diagonal_layout, explicit_values, indicator_values,
                     random_values, standard_coords, standard_layout,
                     zero_values)
from .overlay import Overlay
from .parser import parse_template
from .window import Bounds


@dataclass(frozen=True)
class ProblemSpec:
    field: FieldDescriptor
    overlay: Overlay
    layout: Layout
    window: Bounds


def load_problem(path: str) -> ProblemSpec:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise SchemaError("", f"cannot read {path}: {e}") from None
    return loads_problem(text)


def loads_problem(text: str) -> ProblemSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError("", f"invalid JSON: {e.msg} (line {e.lineno}, "
                          f"column {e.colno})") from None
    return _build_spec(doc)


# -- validation helpers -----------------------------------------------------

def _require_object(node, pointer: str) -> dict:
    if not isinstance(node, dict):
        raise SchemaError(pointer, f"expected an object, got {type(node).__name__}")
    return node


def _require_int(node, pointer: str) -> int:
    if isinstance(node, bool) or not isinstance(node, int):
        raise SchemaError(pointer, f"expected an integer, got {node!r}")
    return node


def _check_keys(obj: dict, pointer: str, required: set[str],
                optional: set[str] = frozenset()) -> None:
    for key in obj:
        if key not in required and key not in optional:
            raise SchemaError(f"{pointer}/{key}", "unknown key")
    for key in required:
        if key not in obj:
            raise SchemaError(pointer, f"missing required key {key!r}")


def _parse_cell(node, fd: FieldDescriptor, pointer: str) -> Scalar:
    if isinstance(node, bool):
        raise SchemaError(pointer, f"expected a scalar, got {node!r}")
    if isinstance(node, int):
        return from_int(node, fd)
    if isinstance(node, str):
        try:
            return parse_scalar(node, fd)
        except ParseError as e:
            raise SchemaError(pointer, str(e)) from None
    raise SchemaError(pointer, f"expected an integer or scalar string, got {node!r}")


# -- section builders -------------------------------------------------------

def _build_field(doc: dict) -> FieldDescriptor:
    node = _require_object(doc["field"], "/field")
    _check_keys(node, "/field", {"kind"}, {"p"})
    kind = node["kind"]
    if kind == "rationals":
        if "p" in node:
            raise SchemaError("/field/p", "the rationals take no modulus")
        return RATIONALS
    if kind == "prime":
        if "p" not in node:
            raise SchemaError("/field", "missing required key 'p'")
        p = _require_int(node["p"], "/field/p")
        try:
            return prime_field(p)
        except ValueError as e:
            raise SchemaError("/field/p", str(e)) from None
    raise SchemaError("/field/kind", f"unknown field kind {kind!r}")


def _build_window(doc: dict) -> Bounds:
    node = _require_object(doc["window"], "/window")
    keys = {"r_min", "r_max", "c_min", "c_max"}
    _check_keys(node, "/window", keys)
    vals = {k: _require_int(node[k], f"/window/{k}") for k in keys}
    try:
        return Bounds(vals["r_min"], vals["r_max"], vals["c_min"], vals["c_max"])
    except Exception as e:
        raise SchemaError("/window", str(e)) from None


def _build_overlay(doc: dict, fd: FieldDescriptor) -> Overlay:
    if "template" in doc:
        text = doc["template"]
        if not isinstance(text, str):
            raise SchemaError("/template", f"expected a string, got {text!r}")
        try:
            template = parse_template(text, fd)
            return Overlay.from_template(template)
        except (ParseError, ZeroTemplateError) as e:
            raise SchemaError("/template", str(e)) from None
    grid = doc["overlay"]
    if not isinstance(grid, list) or not grid:
        raise SchemaError("/overlay", "expected a non-empty list of rows")
    rows: list[list[Scalar]] = []
    width = None
    for i, row in enumerate(grid):
        if not isinstance(row, list) or not row:
            raise SchemaError(f"/overlay/{i}", "expected a non-empty row")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise SchemaError(f"/overlay/{i}",
                              f"row has {len(row)} cells, expected {width}")
        rows.append([_parse_cell(cell, fd, f"/overlay/{i}/{j}")
                     for j, cell in enumerate(row)])
    try:
        return Overlay.from_display_grid(fd, rows)
    except InvalidOverlayError as e:
        raise SchemaError("/overlay", str(e)) from None


def _layout_value_source(node: dict, fd: FieldDescriptor):
    _check_keys(node, "/layout/values", {"generator"}, {"at", "seed"})
    kind = node["generator"]
    if kind == "delta":
        if "at" in node or "seed" in node:
            raise SchemaError("/layout/values", "delta takes no parameters")
        return delta_values(fd)
    if kind == "zero":
        if "at" in node or "seed" in node:
            raise SchemaError("/layout/values", "zero takes no parameters")
        return zero_values(fd)
    if kind == "indicator":
        if "at" not in node:
            raise SchemaError("/layout/values", "indicator needs 'at': [r, c]")
        at = node["at"]
        if (not isinstance(at, list) or len(at) != 2):
            raise SchemaError("/layout/values/at", f"expected [r, c], got {at!r}")
        r = _require_int(at[0], "/layout/values/at/0")
        c = _require_int(at[1], "/layout/values/at/1")
        return indicator_values((r, c), fd)
    if kind == "random":
        if "seed" not in node:
            raise SchemaError("/layout/values", "random needs an integer 'seed'")
        return random_values(_require_int(node["seed"], "/layout/values/seed"), fd)
    raise SchemaError("/layout/values/generator", f"unknown generator {kind!r}")


def _explicit_value_map(entries: list, fd: FieldDescriptor) -> dict:
    mapping: dict[tuple[int, int], Scalar] = {}
    for k, entry in enumerate(entries):
        node = _require_object(entry, f"/layout/values/{k}")
        _check_keys(node, f"/layout/values/{k}", {"r", "c", "value"})
        r = _require_int(node["r"], f"/layout/values/{k}/r")
        c = _require_int(node["c"], f"/layout/values/{k}/c")
        if (r, c) in mapping:
            raise SchemaError(f"/layout/values/{k}", f"duplicate coordinate ({r},{c})")
        mapping[(r, c)] = _parse_cell(node["value"], fd, f"/layout/values/{k}/value")
    return mapping


def _build_layout(doc: dict, fd: FieldDescriptor, overlay: Overlay,
                  window: Bounds) -> Layout:
    node = _require_object(doc["layout"], "/layout")
    _check_keys(node, "/layout", {"kind", "values"}, {"params"})
    kind = node["kind"]
    params = _require_object(node.get("params", {}), "/layout/params")
    values = node["values"]

    if kind == "standard":
        _check_keys(params, "/layout/params", set(), {"a", "d"})
        a = _require_int(params.get("a", 0), "/layout/params/a")
        d = _require_int(params.get("d", 0), "/layout/params/d")
        try:
            coords = standard_coords(overlay, window, a, d)
        except (NonContiguousExtremeRow, LayoutOutOfWindow) as e:
            raise SchemaError("/layout", str(e)) from None
        return _finish_layout(values, fd, coords,
                              lambda src: standard_layout(overlay, window, a, d, src))
    if kind == "diagonal":
        _check_keys(params, "/layout/params", {"k"})
        k = _require_int(params["k"], "/layout/params/k")
        try:
            coords = diagonal_coords(k, window)
        except LayoutOutOfWindow as e:
            raise SchemaError("/layout", str(e)) from None
        return _finish_layout(values, fd, coords,
                              lambda src: diagonal_layout(k, window, src))
    if kind == "custom":
        _check_keys(params, "/layout/params", set(), {"coords"})
        coords = None
        if "coords" in params:
            raw = params["coords"]
            if not isinstance(raw, list):
                raise SchemaError("/layout/params/coords", "expected a list of [r, c]")
            coords = []
            for k2, pair in enumerate(raw):
                if not isinstance(pair, list) or len(pair) != 2:
                    raise SchemaError(f"/layout/params/coords/{k2}",
                                      f"expected [r, c], got {pair!r}")
                coords.append((_require_int(pair[0], f"/layout/params/coords/{k2}/0"),
                               _require_int(pair[1], f"/layout/params/coords/{k2}/1")))
        if coords is None:
            if not isinstance(values, list):
                raise SchemaError("/layout/values",
                                  "a custom layout without params.coords needs an "
                                  "explicit values list")
            mapping = _explicit_value_map(values, fd)
            try:
                return custom_layout(mapping, window)
            except LayoutOutOfWindow as e:
                raise SchemaError("/layout/values", str(e)) from None
        try:
            return _finish_layout(
                values, fd, coords,
                lambda src: custom_layout({c2: src(c2) for c2 in coords}, window))
        except LayoutOutOfWindow as e:
            raise SchemaError("/layout", str(e)) from None
    raise SchemaError("/layout/kind", f"unknown layout kind {kind!r}")


def _finish_layout(values, fd: FieldDescriptor,
                   coords: list[tuple[int, int]], build) -> Layout:
    """Apply a values node (generator object or explicit list) to known coords."""
    if isinstance(values, dict):
        source = _layout_value_source(values, fd)
        if values.get("generator") == "indicator":
            at = (values["at"][0], values["at"][1])
            if at not in set(coords):
                raise SchemaError("/layout/values/at",
                                  f"coordinate {at} is not part of this layout")
        return build(source)
    if isinstance(values, list):
        mapping = _explicit_value_map(values, fd)
        coord_set = set(coords)
        for k, coord in enumerate(mapping):
            if coord not in coord_set:
                raise SchemaError(f"/layout/values/{k}",
                                  f"coordinate {coord} is not part of this layout")
        for coord in coords:
            if coord not in mapping:
                raise SchemaError("/layout/values",
                                  f"no value prescribed for coordinate {coord}")
        return build(explicit_values(mapping))
    raise SchemaError("/layout/values",
                      "expected a generator object or a list of value entries")


def _build_spec(doc) -> ProblemSpec:
    root = _require_object(doc, "")
    _check_keys(root, "", {"field", "layout", "window"}, {"template", "overlay"})
    has_template = "template" in root
    has_overlay = "overlay" in root
    if has_template and has_overlay:
        raise SchemaError("", "give exactly one of 'template' or 'overlay', not both")
    if not has_template and not has_overlay:
        raise SchemaError("", "one of 'template' or 'overlay' is required")
    fd = _build_field(root)
    window = _build_window(root)
    overlay = _build_overlay(root, fd)
    layout = _build_layout(root, fd, overlay, window)
    return ProblemSpec(fd, overlay, layout, window)
