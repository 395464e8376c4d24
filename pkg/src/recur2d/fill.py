"""Constructive window filling by sliding an overlay over a seeded window.

The engine is a worklist constraint propagator. Each placement of the overlay
inside the window is one linear equation over the cells it touches; a
placement whose equation has exactly one Unknown cell (necessarily under a
nonzero coefficient — zero-coefficient cells never appear in an equation)
solves that cell by dividing the known part by the negated pivot coefficient.
Placements are scanned in row-major order and the scan restarts after any
sweep that solved something, until a fixpoint.

After the fixpoint every placement whose cells are all Known is re-checked;
a nonzero residual makes the result Inconsistent with that placement as the
witness. Otherwise the result is Complete, or Partial with the list of cells
no in-window chain of solves can reach. Cells whose stencil would exit the
window are never extrapolated.

The derivable-cell set is a least fixpoint of a monotone enabling relation,
so it does not depend on scan order; scan order is fixed (and seedable) only
to make step logs reproducible.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .errors import CoordinateNotInLayout, LayoutOutOfWindow, ShapeMismatch
from .field import FieldDescriptor, Scalar, parse_scalar, zero
from .layout import (DiagonalProvenance, Layout, StandardProvenance,
                     indicator_values)
from .overlay import Overlay
from .window import ArrayWindow, Bounds, window_linear_combine

COMPLETE = "complete"
PARTIAL = "partial"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class FillStep:
    """One solve: at ``placement``, cell ``solved`` was the only Unknown and
    took ``value``; ``pivot`` is the overlay grid index of its coefficient."""

    placement: tuple[int, int]
    solved: tuple[int, int]
    pivot: tuple[int, int]
    value: Scalar

    def to_json_obj(self) -> dict:
        return {"placement": list(self.placement), "solved": list(self.solved),
                "pivot": list(self.pivot), "value": self.value.render()}


@dataclass(frozen=True)
class FillResult:
    window: ArrayWindow
    status: str
    steps: tuple[FillStep, ...]
    unfilled: tuple[tuple[int, int], ...] = ()
    witness: tuple[int, int] | None = None


def steps_to_jsonl(steps: tuple[FillStep, ...]) -> str:
    """Step log as JSON lines, for audit and replay."""
    return "".join(json.dumps(s.to_json_obj(), sort_keys=True) + "\n" for s in steps)


def steps_from_jsonl(text: str, fd: FieldDescriptor) -> tuple[FillStep, ...]:
    steps = []
    for line in text.splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        steps.append(FillStep(tuple(obj["placement"]), tuple(obj["solved"]),
                              tuple(obj["pivot"]),
                              parse_scalar(obj["value"], fd)))
    return tuple(steps)


def _seed_window(overlay: Overlay, layout: Layout, bounds: Bounds) -> ArrayWindow:
    window = ArrayWindow(bounds, overlay.field)
    for coord, value in layout.prescribed.items():
        if not bounds.contains(*coord):
            raise LayoutOutOfWindow(f"layout coordinate {coord} outside {bounds}")
        window.set(*coord, value)
    return window


def _solve_single_unknown(window: ArrayWindow, overlay: Overlay,
                          placement: tuple[int, int]) -> FillStep | None:
    """Solve the placement's equation if exactly one Unknown cell carries it."""
    r, c = placement
    unknown: tuple[int, int] | None = None
    pivot: Scalar | None = None
    rest = zero(overlay.field)
    for (cr, cc), coeff in overlay.placement_equation(r, c):
        v = window.get(cr, cc)
        if v is None:
            if unknown is not None:
                return None
            unknown, pivot = (cr, cc), coeff
        else:
            rest = rest + coeff * v
    if unknown is None or pivot is None:
        return None
    value = rest / (-pivot)
    window.set(*unknown, value)
    return FillStep(placement, unknown, (r - unknown[0], c - unknown[1]), value)


def _propagate(window: ArrayWindow, overlay: Overlay,
               placements: list[tuple[int, int]],
               steps: list[FillStep]) -> None:
    changed = True
    while changed:
        changed = False
        for placement in placements:
            step = _solve_single_unknown(window, overlay, placement)
            if step is not None:
                steps.append(step)
                changed = True


def _consistency_witness(window: ArrayWindow, overlay: Overlay,
                         bounds: Bounds) -> tuple[int, int] | None:
    """First (row-major) fully-Known placement whose equation has a nonzero residual."""
    for placement in overlay.placements_within(bounds):
        residual = zero(overlay.field)
        fully_known = True
        for (cr, cc), coeff in overlay.placement_equation(*placement):
            v = window.get(cr, cc)
            if v is None:
                fully_known = False
                break
            residual = residual + coeff * v
        if fully_known and not residual.is_zero():
            return placement
    return None


def _finish(window: ArrayWindow, overlay: Overlay, bounds: Bounds,
            steps: list[FillStep]) -> FillResult:
    witness = _consistency_witness(window, overlay, bounds)
    unfilled = tuple(window.unknown_coords())
    if witness is not None:
        status = INCONSISTENT
    elif unfilled:
        status = PARTIAL
    else:
        status = COMPLETE
    return FillResult(window.freeze(), status, tuple(steps), unfilled, witness)


def fill(overlay: Overlay, layout: Layout, bounds: Bounds, *,
         order_seed: int | None = None) -> FillResult:
    """Propagate the overlay's recurrence from the layout across the window.

    ``order_seed`` shuffles the placement scan order; it exists so tests can
    demonstrate that the reachable cells and their values are order-independent.
    The default (None) scans placements row-major.
    """
    window = _seed_window(overlay, layout, bounds)
    placements = overlay.placements_within(bounds)
    if order_seed is not None:
        random.Random(order_seed).shuffle(placements)
    steps: list[FillStep] = []
    _propagate(window, overlay, placements, steps)
    return _finish(window, overlay, bounds, steps)


def replay(overlay: Overlay, layout: Layout, steps: tuple[FillStep, ...],
           bounds: Bounds) -> ArrayWindow:
    """Re-execute a step log from the layout seed; raises if any step no longer applies."""
    window = _seed_window(overlay, layout, bounds)
    for step in steps:
        redone = _solve_single_unknown(window, overlay, step.placement)
        if redone is None or redone.solved != step.solved:
            raise ValueError(f"step {step} does not replay against this layout")
        if redone.value != step.value:
            raise ValueError(
                f"replayed value {redone.value!r} differs from logged {step.value!r}")
    return window.freeze()


# -- diagonal-layout specialization ---------------------------------------

def _diagonal_stencil_coeffs(overlay: Overlay) -> tuple[Scalar, Scalar, Scalar]:
    """The (b00, b10, b11) of the 3-term stencil b00 + b10*Y + b11*XY, or ShapeMismatch."""
    if overlay.m != 1 or overlay.n != 1:
        raise ShapeMismatch("diagonal fill needs a 2x2 overlay (template b00 + b10*Y + b11*XY)")
    b00 = overlay.coefficient(0, 0)
    b01 = overlay.coefficient(0, 1)
    b10 = overlay.coefficient(1, 0)
    b11 = overlay.coefficient(1, 1)
    if b00.is_zero() or b10.is_zero() or b11.is_zero() or not b01.is_zero():
        raise ShapeMismatch(
            "diagonal fill needs b00, b10, b11 all nonzero and no plain-X term")
    return b00, b10, b11


def _try_region_solve(window: ArrayWindow, overlay: Overlay, bounds: Bounds,
                      placement: tuple[int, int], solved: tuple[int, int],
                      steps: list[FillStep]) -> None:
    r, c = placement
    if not (bounds.r_min + overlay.m <= r <= bounds.r_max
            and bounds.c_min + overlay.n <= c <= bounds.c_max):
        return
    if window.get(*solved) is not None:
        return
    step = _solve_single_unknown(window, overlay, placement)
    if step is not None:
        if step.solved != solved:
            raise AssertionError(
                f"region solve at {placement} targeted {step.solved}, expected {solved}")
        steps.append(step)


def fill_diagonal(overlay: Overlay, layout: Layout, bounds: Bounds) -> FillResult:
    """Fill from a diagonal layout by the three-region induction, for the
    3-term stencil b00 + b10*Y + b11*XY (all three nonzero).

    Region 1 sweeps the strict upper triangle level by level (pivot b10),
    region 2 the rows above row k right-to-left (pivot b11), region 3 the rows
    below row k right-to-left (pivot b00). The induction order is an
    infinite-plane construction; near window edges it can skip cells that are
    still derivable (the generic engine reaches them with another pivot), so a
    generic completion pass follows — making the result equal to fill() on the
    same inputs. The consistency check is the same as fill()'s.
    """
    _diagonal_stencil_coeffs(overlay)
    if not isinstance(layout.provenance, DiagonalProvenance):
        raise ValueError("fill_diagonal requires a layout with diagonal provenance")
    k = layout.provenance.k
    window = _seed_window(overlay, layout, bounds)
    steps: list[FillStep] = []

    # Region 1: cells strictly above the diagonal, by level p = c - r,
    # solving the cell under b10 at placement one row down.
    for p in range(1, bounds.c_max - bounds.r_min + 1):
        for rr in range(bounds.r_min, bounds.r_max + 1):
            cc = rr + p
            if bounds.c_min <= cc <= bounds.c_max:
                _try_region_solve(window, overlay, bounds, (rr + 1, cc), (rr, cc), steps)

    # Region 2: rows above row k, right-to-left below the diagonal,
    # solving the cell under b11 at placement one row down, one column right.
    for rr in range(min(k - 1, bounds.r_max), bounds.r_min - 1, -1):
        for cc in range(min(rr - 1, bounds.c_max), bounds.c_min - 1, -1):
            _try_region_solve(window, overlay, bounds, (rr + 1, cc + 1), (rr, cc), steps)

    # Region 3: rows below row k, right-to-left below the diagonal,
    # solving the cell under b00 at its own placement.
    for rr in range(max(k + 1, bounds.r_min), bounds.r_max + 1):
        for cc in range(min(rr - 1, bounds.c_max), bounds.c_min - 1, -1):
            _try_region_solve(window, overlay, bounds, (rr, cc), (rr, cc), steps)

    # Window-edge completion: anything the infinite-plane order missed.
    _propagate(window, overlay, overlay.placements_within(bounds), steps)
    return _finish(window, overlay, bounds, steps)


# -- basis arrays and superposition ---------------------------------------

def basis_array(overlay: Overlay, layout: Layout, at: tuple[int, int],
                bounds: Bounds) -> ArrayWindow:
    """E(at): the fill whose layout values are 1 at ``at`` and 0 elsewhere."""
    if at not in layout:
        raise CoordinateNotInLayout(f"{at} is not a layout coordinate")
    indicator = layout.with_values(indicator_values(at, overlay.field))
    return fill(overlay, indicator, bounds).window


def superpose(overlay: Overlay, layout: Layout, bounds: Bounds) -> ArrayWindow:
    """Sum of d_(i,j) * E(i,j) over the layout; equals fill(...).window cell-for-cell.

    All basis arrays share one Known set (reachability depends only on the
    overlay's zero pattern and the coordinate set, never on values), so the
    combination's Known structure matches the direct fill exactly.
    """
    coords = layout.coords
    if not coords:
        return fill(overlay, layout, bounds).window
    pairs = [(layout.value_at(coord), basis_array(overlay, layout, coord, bounds))
             for coord in coords]
    return window_linear_combine(pairs).freeze()


def finite_contribution_report(overlay: Overlay, layout: Layout, bounds: Bounds,
                               at: tuple[int, int]) -> list[tuple[tuple[int, int], Scalar]]:
    """Layout coordinates whose basis array is nonzero at ``at``, with the weights.

    The list is finite by construction (the layout is clipped to the window);
    its length across growing windows is the empirical growth measure.
    """
    if not bounds.contains(*at):
        raise ValueError(f"cell {at} outside {bounds}")
    contributors = []
    for coord in layout.coords:
        e = basis_array(overlay, layout, coord, bounds)
        v = e.get(*at)
        if v is not None and not v.is_zero():
            contributors.append((coord, v))
    return contributors


# -- empirical support-region checks --------------------------------------

@dataclass(frozen=True)
class SupportCaseResult:
    """Empirical outcome of one claimed vanishing region for one basis coordinate.

    ``condition`` names which hypothesis applied ("j>=m", "j<0", "i>=n",
    "i<0", or "none" when no claim is made for this coordinate); the claim is
    that E(coord) vanishes on ``region`` within the window. Counterexamples
    are recorded, never asserted away.
    """

    coord: tuple[int, int]
    condition: str
    region: str
    checked: int
    unknown: int
    counterexamples: tuple[tuple[tuple[int, int], Scalar], ...]

    @property
    def confirmed(self) -> bool:
        return self.condition != "none" and not self.counterexamples


@dataclass(frozen=True)
class SupportReport:
    results: tuple[SupportCaseResult, ...]

    def counterexample_count(self) -> int:
        return sum(len(r.counterexamples) for r in self.results)

    def to_text(self) -> str:
        lines = []
        for res in self.results:
            coord = f"E({res.coord[0]},{res.coord[1]})"
            if res.condition == "none":
                lines.append(f"{coord}: no claim")
                continue
            verdict = ("confirmed" if res.confirmed
                       else f"{len(res.counterexamples)} counterexample(s)")
            lines.append(
                f"{coord}: {res.condition} claims zero on {res.region}: {verdict} "
                f"({res.checked} cells checked, {res.unknown} unknown)")
            for (cell, value) in res.counterexamples:
                lines.append(f"  counterexample at {cell}: {value.render()}")
        return "\n".join(lines) + "\n"


def check_support_cases(overlay: Overlay, layout: Layout, bounds: Bounds) -> SupportReport:
    """Empirically test the claimed vanishing regions of each basis array.

    For a standard layout with coordinates (i, j), the claimed regions are:
    j >= m: zero at columns l < j;  j < 0: zero at columns l > j;
    i >= n: zero at rows k < i;     i < 0: zero at rows k > i.
    Each applicable claim is scanned over the window and confirmations or
    counterexamples reported; nothing is assumed.
    """
    if not isinstance(layout.provenance, StandardProvenance):
        raise ValueError("support-case checks are defined for standard layouts")
    m, n = overlay.m, overlay.n
    results: list[SupportCaseResult] = []
    for (i, j) in layout.coords:
        e = basis_array(overlay, layout, (i, j), bounds)
        claims: list[tuple[str, str]] = []
        if j >= m:
            claims.append(("j>=m", f"l<{j}"))
        if j < 0:
            claims.append(("j<0", f"l>{j}"))
        if i >= n:
            claims.append(("i>=n", f"k<{i}"))
        if i < 0:
            claims.append(("i<0", f"k>{i}"))
        if not claims:
            results.append(SupportCaseResult((i, j), "none", "", 0, 0, ()))
            continue
        for condition, region in claims:
            checked = 0
            unknown = 0
            bad: list[tuple[tuple[int, int], Scalar]] = []
            for (kk, ll) in bounds.coords():
                in_region = (
                    (condition == "j>=m" and ll < j)
                    or (condition == "j<0" and ll > j)
                    or (condition == "i>=n" and kk < i)
                    or (condition == "i<0" and kk > i)
                )
                if not in_region:
                    continue
                v = e.get(kk, ll)
                if v is None:
                    unknown += 1
                    continue
                checked += 1
                if not v.is_zero():
                    bad.append(((kk, ll), v))
            results.append(SupportCaseResult((i, j), condition, region,
                                             checked, unknown, tuple(bad)))
    return SupportReport(tuple(results))
