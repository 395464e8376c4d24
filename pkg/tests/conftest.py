"""Shared fixtures: the worked-example overlay, reference values, and a
generator of random overlays usable with standard layouts."""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from recur2d import (Bounds, FieldDescriptor, Overlay, RATIONALS, Scalar,
                     from_int, parse_template, prime_field, zero)

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fd_q() -> FieldDescriptor:
    return RATIONALS


@pytest.fixture
def fd_f7() -> FieldDescriptor:
    return prime_field(7)


@pytest.fixture
def example_overlay(fd_q) -> Overlay:
    """Overlay of X*Y + 3*Y + 2*X - I, the running 2x2 example."""
    return Overlay.from_template(parse_template("X*Y + 3*Y + 2*X - I", fd_q))


@pytest.fixture
def example_bounds() -> Bounds:
    return Bounds(-1, 3, -1, 3)


# Reference window for the running example with the delta standard layout,
# derived independently: row 0 and column 0 are the prescribed delta; rows
# 1..3 follow A[r][c] = A[r-1][c-1] + 3*A[r-1][c] + 2*A[r][c-1]; the flank
# columns come from solving the same equation for its other corners,
# A[r][-1] = (A[r][0] - A[r-1][-1] - 3*A[r-1][0]) / 2 and
# A[-1][c] = (A[0][c] - A[-1][c-1] - 2*A[0][c-1]) / 3.
GOLDEN = {
    (-1, -1): Fraction(1), (-1, 0): Fraction(0), (-1, 1): Fraction(-2, 3),
    (-1, 2): Fraction(2, 9), (-1, 3): Fraction(-2, 27),
    (0, -1): Fraction(0), (0, 0): Fraction(1), (0, 1): Fraction(0),
    (0, 2): Fraction(0), (0, 3): Fraction(0),
    (1, -1): Fraction(-3, 2), (1, 0): Fraction(0), (1, 1): Fraction(1),
    (1, 2): Fraction(2), (1, 3): Fraction(4),
    (2, -1): Fraction(3, 4), (2, 0): Fraction(0), (2, 1): Fraction(3),
    (2, 2): Fraction(13), (2, 3): Fraction(40),
    (3, -1): Fraction(-3, 8), (3, 0): Fraction(0), (3, 1): Fraction(9),
    (3, 2): Fraction(60), (3, 3): Fraction(253),
}


@pytest.fixture
def golden_values() -> dict[tuple[int, int], Fraction]:
    return dict(GOLDEN)


def _nonzero(rng: random.Random, field: FieldDescriptor) -> Scalar:
    if field.kind == "rationals":
        v = 0
        while v == 0:
            v = rng.randint(-4, 4)
        return from_int(v, field)
    return from_int(rng.randint(1, field.p - 1), field)


def make_random_overlay(rng: random.Random, field: FieldDescriptor,
                        max_m: int = 2, max_n: int = 2) -> Overlay:
    """Random overlay with contiguous nonzero extreme rows and populated
    boundary rows/columns, so the standard-layout construction applies."""
    m = rng.randint(0, max_m)
    n = rng.randint(0, max_n)
    z = zero(field)
    grid = [[_nonzero(rng, field) if rng.random() < 0.7 else z
             for _ in range(n + 1)] for _ in range(m + 1)]
    # Extreme rows: one contiguous nonzero block each.
    for i in {0, m}:
        lo = rng.randint(0, n)
        hi = rng.randint(lo, n)
        grid[i] = [_nonzero(rng, field) if lo <= j <= hi else z
                   for j in range(n + 1)]
    # Boundary columns 0 and n must hold a nonzero somewhere; patch interior
    # rows first so the extreme rows stay contiguous.
    for j in {0, n}:
        if all(grid[i][j].is_zero() for i in range(m + 1)):
            if m >= 2:
                grid[rng.randint(1, m - 1)][j] = _nonzero(rng, field)
            else:
                row = rng.choice([0, m])
                span = [jj for jj in range(n + 1) if not grid[row][jj].is_zero()]
                lo, hi = min(span + [j]), max(span + [j])
                for jj in range(lo, hi + 1):
                    grid[row][jj] = _nonzero(rng, field)
    return Overlay(field, grid)


@pytest.fixture
def random_overlay():
    return make_random_overlay
