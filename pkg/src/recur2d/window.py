"""Finite rectangular views of the infinite Z^2-indexed array.

A window stores one cell state per coordinate of an inclusive rectangle:
``None`` for Unknown, a :class:`Scalar` for Known. Known(0) and Unknown are
deliberately distinct — prescribed zeros carry information. Reads outside the
bounds return Unknown rather than raising, so fill scheduling can probe the
frontier freely; writes outside the bounds are programming errors.

Windows are mutable while being filled and can be frozen; every published
result is a frozen snapshot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import FrozenWindowError, MixedFieldError, ShapeMismatch
from .field import FieldDescriptor, Scalar, parse_scalar, zero


@dataclass(frozen=True)
class Bounds:
    """Inclusive rectangle r_min..r_max x c_min..c_max."""

    r_min: int
    r_max: int
    c_min: int
    c_max: int

    def __post_init__(self):
        if self.r_min > self.r_max or self.c_min > self.c_max:
            raise ShapeMismatch(f"empty bounds {self}")

    @property
    def height(self) -> int:
        return self.r_max - self.r_min + 1

    @property
    def width(self) -> int:
        return self.c_max - self.c_min + 1

    def contains(self, r: int, c: int) -> bool:
        return self.r_min <= r <= self.r_max and self.c_min <= c <= self.c_max

    def coords(self) -> Iterator[tuple[int, int]]:
        """All coordinates in row-major order."""
        for r in range(self.r_min, self.r_max + 1):
            for c in range(self.c_min, self.c_max + 1):
                yield (r, c)


class ArrayWindow:
    """Dense grid of cell states over a :class:`Bounds`."""

    def __init__(self, bounds: Bounds, field: FieldDescriptor):
        self.bounds = bounds
        self.field = field
        self._cells: list[list[Scalar | None]] = [
            [None] * bounds.width for _ in range(bounds.height)
        ]
        self._frozen = False

    @property
    def frozen(self) -> bool:
        return self._frozen

    def freeze(self) -> "ArrayWindow":
        self._frozen = True
        return self

    def copy(self) -> "ArrayWindow":
        """Mutable copy (the copy is never frozen)."""
        out = ArrayWindow(self.bounds, self.field)
        out._cells = [row[:] for row in self._cells]
        return out

    def get(self, r: int, c: int) -> Scalar | None:
        """Cell state; Unknown (None) for out-of-bounds coordinates."""
        if not self.bounds.contains(r, c):
            return None
        return self._cells[r - self.bounds.r_min][c - self.bounds.c_min]

    def set(self, r: int, c: int, value: Scalar) -> None:
        if self._frozen:
            raise FrozenWindowError(f"window is frozen; cannot set ({r},{c})")
        if not self.bounds.contains(r, c):
            raise ValueError(f"({r},{c}) outside bounds {self.bounds}")
        if value.field != self.field:
            raise MixedFieldError(
                f"cell value field {value.field!r} does not match window field {self.field!r}")
        self._cells[r - self.bounds.r_min][c - self.bounds.c_min] = value

    def known_cells(self) -> Iterator[tuple[int, int, Scalar]]:
        """(r, c, value) for every Known cell, row-major."""
        for r, c in self.bounds.coords():
            v = self.get(r, c)
            if v is not None:
                yield (r, c, v)

    def unknown_coords(self) -> list[tuple[int, int]]:
        return [(r, c) for r, c in self.bounds.coords() if self.get(r, c) is None]

    def is_complete(self) -> bool:
        return not self.unknown_coords()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArrayWindow):
            return NotImplemented
        return (self.bounds == other.bounds and self.field == other.field
                and self._cells == other._cells)

    def __repr__(self) -> str:
        known = sum(1 for _ in self.known_cells())
        return (f"ArrayWindow({self.bounds}, {self.field!r}, "
                f"{known}/{self.bounds.height * self.bounds.width} known)")

    # -- exports ---------------------------------------------------------

    def to_tsv(self) -> str:
        """Row-major TSV grid; '?' marks Unknown cells."""
        lines = []
        for r in range(self.bounds.r_min, self.bounds.r_max + 1):
            row = []
            for c in range(self.bounds.c_min, self.bounds.c_max + 1):
                v = self.get(r, c)
                row.append("?" if v is None else v.render())
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        """{bounds, cells:[{r,c,value}]} with only Known cells listed."""
        return {
            "bounds": {
                "r_min": self.bounds.r_min, "r_max": self.bounds.r_max,
                "c_min": self.bounds.c_min, "c_max": self.bounds.c_max,
            },
            "cells": [
                {"r": r, "c": c, "value": v.render()}
                for r, c, v in self.known_cells()
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict, field: FieldDescriptor) -> "ArrayWindow":
        b = obj["bounds"]
        w = cls(Bounds(b["r_min"], b["r_max"], b["c_min"], b["c_max"]), field)
        for cell in obj["cells"]:
            w.set(cell["r"], cell["c"], parse_scalar(str(cell["value"]), field))
        return w

    def to_ascii(self) -> str:
        """Human-oriented grid with row/column labels; smaller row indices on top."""
        col_labels = [str(c) for c in range(self.bounds.c_min, self.bounds.c_max + 1)]
        rows: list[list[str]] = []
        row_labels = []
        for r in range(self.bounds.r_min, self.bounds.r_max + 1):
            row_labels.append(str(r))
            row = []
            for c in range(self.bounds.c_min, self.bounds.c_max + 1):
                v = self.get(r, c)
                row.append("?" if v is None else v.render())
            rows.append(row)
        label_w = max(len("r\\c"), max(len(s) for s in row_labels))
        widths = [
            max(len(col_labels[j]), max(len(rows[i][j]) for i in range(len(rows))))
            for j in range(len(col_labels))
        ]
        lines = ["  ".join(["r\\c".rjust(label_w)]
                           + [col_labels[j].rjust(widths[j]) for j in range(len(widths))])]
        for i, row in enumerate(rows):
            lines.append("  ".join([row_labels[i].rjust(label_w)]
                                   + [row[j].rjust(widths[j]) for j in range(len(widths))]))
        return "\n".join(lines) + "\n"


def window_from_cells(bounds: Bounds, field: FieldDescriptor,
                      cells: dict[tuple[int, int], Scalar]) -> ArrayWindow:
    w = ArrayWindow(bounds, field)
    for (r, c), v in cells.items():
        w.set(r, c, v)
    return w


def window_linear_combine(pairs: list[tuple[Scalar, ArrayWindow]]) -> ArrayWindow:
    """Entry-wise sum of alpha_k * w_k; a cell is Known iff it is Known in all inputs.

    All windows (and the coefficients) must share one field and one bounds.
    """
    if not pairs:
        raise ShapeMismatch("nothing to combine")
    first = pairs[0][1]
    for alpha, w in pairs:
        if w.bounds != first.bounds:
            raise ShapeMismatch(f"bounds {w.bounds} != {first.bounds}")
        if w.field != first.field or alpha.field != first.field:
            raise MixedFieldError("all windows and coefficients must share one field")
    out = ArrayWindow(first.bounds, first.field)
    for r, c in first.bounds.coords():
        acc = zero(first.field)
        known = True
        for alpha, w in pairs:
            v = w.get(r, c)
            if v is None:
                known = False
                break
            acc = acc + alpha * v
        if known:
            out.set(r, c, acc)
    return out


def emit_series_terms(w: ArrayWindow) -> list[tuple[int, int, Scalar]]:
    """Known nonzero cells as generating-series terms (r, c, value), sorted by (r, c)."""
    return [(r, c, v) for r, c, v in w.known_cells() if not v.is_zero()]
