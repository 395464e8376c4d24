"""Independent verification of window fills by exact linear algebra.

A window, an overlay, and a layout define a linear system: one variable per
window cell, one homogeneous equation per in-window placement, and one
inhomogeneous pinning equation per prescribed layout cell. Gauss-Jordan
elimination over the exact field classifies the system as having a unique
solution, many solutions, or none, and extracts the solved values.

This module never calls the constructive fill engine; it builds its equations
directly from the overlay and layout, so agreement between the two routes is
evidence, not tautology.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldDescriptor, Scalar, one, zero
from .layout import Layout
from .overlay import Overlay
from .window import ArrayWindow, Bounds

UNIQUE = "unique"
UNDERDETERMINED = "underdetermined"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class LinearSystem:
    """Dense exact system Ax = b with provenance strings for each row."""

    variables: tuple[tuple[int, int], ...]
    rows: list[list[Scalar]]
    rhs: list[Scalar]
    provenance: list[str]
    field: FieldDescriptor

    @property
    def var_index(self) -> dict[tuple[int, int], int]:
        return {coord: k for k, coord in enumerate(self.variables)}


@dataclass(frozen=True)
class Certificate:
    """A row reduced to 0 = rhs with rhs != 0, proving inconsistency.

    ``combination`` gives, per original row, the multiplier carrying it into
    the contradictory row; checking it needs only the original system.
    """

    combination: tuple[Scalar, ...]
    rhs: Scalar


@dataclass(frozen=True)
class OracleResult:
    kind: str
    assignment: dict[tuple[int, int], Scalar] | None = None
    forced: dict[tuple[int, int], Scalar] | None = None
    free_witness: tuple[int, int] | None = None
    certificate: Certificate | None = None


def assemble_system(overlay: Overlay, layout: Layout, bounds: Bounds) -> LinearSystem:
    """One homogeneous row per placement, then one pinning row per layout cell."""
    field = overlay.field
    variables = tuple(bounds.coords())
    index = {coord: k for k, coord in enumerate(variables)}
    nvars = len(variables)
    rows: list[list[Scalar]] = []
    rhs: list[Scalar] = []
    provenance: list[str] = []
    zero_s = zero(field)
    for (r, c) in overlay.placements_within(bounds):
        row = [zero_s] * nvars
        for (coord, coeff) in overlay.placement_equation(r, c):
            row[index[coord]] = row[index[coord]] + coeff
        rows.append(row)
        rhs.append(zero_s)
        provenance.append(f"placement ({r},{c})")
    for coord, value in layout.prescribed.items():
        if coord not in index:
            raise ValueError(f"layout coordinate {coord} outside {bounds}")
        row = [zero_s] * nvars
        row[index[coord]] = one(field)
        rows.append(row)
        rhs.append(value)
        provenance.append(f"layout ({coord[0]},{coord[1]})")
    return LinearSystem(variables, rows, rhs, provenance, field)


def _eliminate(system: LinearSystem, track_combo: bool):
    """Gauss-Jordan to reduced row echelon form.

    Returns (a, b, combo, pivot_col_of_row, row_of_pivot_col, rank). The
    ``combo`` matrix expresses each working row as a combination of original
    rows; tracking it doubles the arithmetic, so it is skipped unless the
    caller needs an inconsistency certificate.
    """
    field = system.field
    nrows = len(system.rows)
    nvars = len(system.variables)
    zero_s = zero(field)
    one_s = one(field)
    a = [list(row) for row in system.rows]
    b = list(system.rhs)
    combo = ([[one_s if i == j else zero_s for j in range(nrows)]
              for i in range(nrows)] if track_combo else None)

    pivot_col_of_row: list[int] = []
    row_of_pivot_col: dict[int, int] = {}
    rank = 0
    for col in range(nvars):
        pivot_row = next((i for i in range(rank, nrows) if not a[i][col].is_zero()), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        b[rank], b[pivot_row] = b[pivot_row], b[rank]
        if combo is not None:
            combo[rank], combo[pivot_row] = combo[pivot_row], combo[rank]
        if a[rank][col] != one_s:
            inv = a[rank][col].inverse()
            a[rank] = [x if x.is_zero() else x * inv for x in a[rank]]
            b[rank] = b[rank] * inv
            if combo is not None:
                combo[rank] = [x if x.is_zero() else x * inv for x in combo[rank]]
        for i in range(nrows):
            if i != rank and not a[i][col].is_zero():
                factor = a[i][col]
                a[i] = [x if y.is_zero() else x - factor * y
                        for x, y in zip(a[i], a[rank])]
                b[i] = b[i] - factor * b[rank]
                if combo is not None:
                    combo[i] = [x if y.is_zero() else x - factor * y
                                for x, y in zip(combo[i], combo[rank])]
        pivot_col_of_row.append(col)
        row_of_pivot_col[col] = rank
        rank += 1
        if rank == nrows:
            break
    return a, b, combo, pivot_col_of_row, row_of_pivot_col, rank


def classify_and_solve(system: LinearSystem) -> OracleResult:
    """Exact Gauss-Jordan with full classification.

    An inconsistent system is re-eliminated with combination tracking so the
    result carries a certificate checkable against the original rows alone.
    """
    nrows = len(system.rows)
    nvars = len(system.variables)
    a, b, _, pivot_col_of_row, row_of_pivot_col, rank = _eliminate(system, False)

    bad_row = next((i for i in range(rank, nrows) if not b[i].is_zero()), None)
    if bad_row is not None:
        _, b2, combo, _, _, rank2 = _eliminate(system, True)
        i = next(i for i in range(rank2, nrows) if not b2[i].is_zero())
        return OracleResult(INCONSISTENT,
                            certificate=Certificate(tuple(combo[i]), b2[i]))

    if rank == nvars:
        assignment = {system.variables[col]: b[row_of_pivot_col[col]]
                      for col in range(nvars)}
        return OracleResult(UNIQUE, assignment=assignment)

    free_cols = [col for col in range(nvars) if col not in row_of_pivot_col]
    # A pivot variable is forced (same value in every solution) iff its row
    # has zero coefficients on all free columns.
    forced: dict[tuple[int, int], Scalar] = {}
    for row, col in enumerate(pivot_col_of_row):
        if all(a[row][f].is_zero() for f in free_cols):
            forced[system.variables[col]] = b[row]
    return OracleResult(UNDERDETERMINED, forced=forced,
                        free_witness=system.variables[free_cols[0]])


def solve_problem(overlay: Overlay, layout: Layout, bounds: Bounds) -> OracleResult:
    return classify_and_solve(assemble_system(overlay, layout, bounds))


def verify_assignment(system: LinearSystem,
                      assignment: dict[tuple[int, int], Scalar]) -> bool:
    """Check an assignment against every original equation (no elimination)."""
    index = system.var_index
    for row, rhs in zip(system.rows, system.rhs):
        total = zero(system.field)
        for coord, k in index.items():
            if not row[k].is_zero():
                total = total + row[k] * assignment[coord]
        if total != rhs:
            return False
    return True


def verify_certificate(system: LinearSystem, certificate: Certificate) -> bool:
    """Check that the certificate combination cancels every variable but not the rhs."""
    nvars = len(system.variables)
    lhs = [zero(system.field)] * nvars
    rhs = zero(system.field)
    for mult, row, r in zip(certificate.combination, system.rows, system.rhs):
        if mult.is_zero():
            continue
        lhs = [x + mult * y for x, y in zip(lhs, row)]
        rhs = rhs + mult * r
    return all(x.is_zero() for x in lhs) and rhs == certificate.rhs and not rhs.is_zero()


def oracle_equals_fill(result: OracleResult, fill_result) -> tuple[bool, list[str]]:
    """Whether the algebraic classification corresponds to a fill outcome.

    complete <-> unique with cell-identical values; partial <-> underdetermined
    with every filled cell forced to the same value; inconsistent <-> inconsistent.
    """
    diffs: list[str] = []
    status = fill_result.status
    if status == "complete":
        if result.kind != UNIQUE:
            return False, [f"fill complete but oracle {result.kind}"]
        assert result.assignment is not None
        for r, c, v in fill_result.window.known_cells():
            ov = result.assignment[(r, c)]
            if ov != v:
                diffs.append(f"({r},{c}): fill {v.render()} oracle {ov.render()}")
        return (not diffs), diffs
    if status == "partial":
        if result.kind != UNDERDETERMINED:
            return False, [f"fill partial but oracle {result.kind}"]
        assert result.forced is not None
        for r, c, v in fill_result.window.known_cells():
            if (r, c) not in result.forced:
                diffs.append(f"({r},{c}): fill derived {v.render()} but oracle "
                             "does not force this cell")
            elif result.forced[(r, c)] != v:
                diffs.append(f"({r},{c}): fill {v.render()} oracle forces "
                             f"{result.forced[(r, c)].render()}")
        return (not diffs), diffs
    if status == "inconsistent":
        if result.kind != INCONSISTENT:
            return False, [f"fill inconsistent but oracle {result.kind}"]
        return True, []
    return False, [f"unrecognized fill status {status!r}"]


def layout_is_valid(overlay: Overlay, layout: Layout, bounds: Bounds) -> bool:
    """True iff the layout pins the whole window: unique for these values.

    Uniqueness depends only on the coordinate set (the coefficient matrix),
    not on the prescribed values.
    """
    return classify_and_solve(assemble_system(overlay, layout, bounds)).kind == UNIQUE


def dump_system(system: LinearSystem) -> str:
    """Deterministic sparse text dump: header, variables, then row entries."""
    lines = [f"system rows={len(system.rows)} vars={len(system.variables)} "
             f"field={system.field!r}"]
    lines.append("vars " + " ".join(f"({r},{c})" for r, c in system.variables))
    for i, (row, rhs, tag) in enumerate(zip(system.rows, system.rhs,
                                            system.provenance)):
        entries = " ".join(f"{k}:{v.render()}" for k, v in enumerate(row)
                           if not v.is_zero())
        lines.append(f"row {i} [{tag}] {entries} = {rhs.render()}")
    return "\n".join(lines) + "\n"
