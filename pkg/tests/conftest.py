"""Shared fixtures: the golden corpus and an independent constraint oracle.

The golden corpus is a fixed set of labelled forms spanning every
generator kind plus the two worked examples. The brute-force oracle
below rebuilds the symmetrizer conditions from raw coefficients with no
multiset dedup and every slot transposition imposed, so it shares no
assembly code with the production path.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest

from symmetrizer.corpus import GeneratorSpec, generate
from symmetrizer.forms import SymForm
from symmetrizer.linalg import Matrix, Vec, nullspace, span_equal
from symmetrizer.polytext import parse_poly

# square-zero map e0 -> e1 on three variables
H_SQUARE_ZERO_3 = Matrix.from_rows(
    [[0, 0, 0], [1, 0, 0], [0, 0, 0]]
)

# regular nilpotent e0 -> e1 -> e2 -> 0
H_REGULAR_3 = Matrix.from_rows(
    [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
)


def build_golden_corpus() -> dict[str, SymForm]:
    corpus: dict[str, SymForm] = {
        "cusp_2_3": parse_poly("x0^2*x1"),
        "whitney_3_3": parse_poly("x0^2*x2 + x0*x1^2"),
        "norm_2_3": parse_poly("3*x0^2*x1 + 2*x1^3"),
    }
    for n in (2, 3, 4):
        for d in (3, 4):
            corpus[f"fermat_{n}_{d}"] = generate(
                GeneratorSpec(kind="fermat", nvars=n, degree=d)
            )
    corpus["st_sum_4_3"] = generate(
        GeneratorSpec(kind="st_sum", nvars=4, degree=3, seed=7, blocks=(2, 2))
    )
    corpus["st_sum_5_4"] = generate(
        GeneratorSpec(kind="st_sum", nvars=5, degree=4, seed=3, blocks=(2, 3))
    )
    corpus["prescribed_3_3"] = generate(
        GeneratorSpec(
            kind="prescribed_nilpotent",
            nvars=3,
            degree=3,
            seed=5,
            nilpotent=H_SQUARE_ZERO_3,
        )
    )
    corpus["random_3_3"] = generate(GeneratorSpec(kind="random", nvars=3, degree=3, seed=0))
    corpus["random_2_4"] = generate(GeneratorSpec(kind="random", nvars=2, degree=4, seed=2))
    corpus["random_3_4"] = generate(GeneratorSpec(kind="random", nvars=3, degree=4, seed=1))
    corpus["cone_3_3"] = generate(GeneratorSpec(kind="cone", nvars=3, degree=3))
    return corpus


DEGENERATE_LABELS = frozenset({"cone_3_3"})

_GOLDEN = build_golden_corpus()


@pytest.fixture(scope="session")
def golden_corpus() -> dict[str, SymForm]:
    return _GOLDEN


@pytest.fixture(scope="session")
def golden_nondegenerate() -> dict[str, SymForm]:
    return {k: F for k, F in _GOLDEN.items() if k not in DEGENERATE_LABELS}


def slot_value(F: SymForm, indices: tuple[int, ...]) -> Fraction:
    """F on basis vectors, straight from the coefficient: c_alpha * alpha!/d!."""
    alpha = [0] * F.nvars
    for i in indices:
        alpha[i] += 1
    num = 1
    for a in alpha:
        num *= math.factorial(a)
    return F.coefficient(tuple(alpha)) * Fraction(num, math.factorial(F.degree))


def brute_force_symmetrizer_basis(F: SymForm) -> list[Matrix]:
    """Nullspace of the fully redundant constraint system.

    One row per transposition of slot 1 with each later slot, per raw
    index tuple in {0..n-1}^d. Column (m, i) of the unknown g sits at
    flat position m*n + i, matching Matrix.from_flat.
    """
    n, d = F.nvars, F.degree
    rows = []
    for k in range(1, d):
        for tup in itertools.product(range(n), repeat=d):
            row = [Fraction(0)] * (n * n)
            rest_first = tup[1:]
            rest_swapped = tup[1:k] + (tup[0],) + tup[k + 1 :]
            for m in range(n):
                row[m * n + tup[0]] += slot_value(F, (m,) + rest_first)
                row[m * n + tup[k]] -= slot_value(F, (m,) + rest_swapped)
            rows.append(row)
    M = Matrix.from_rows(rows, n * n)
    return [Matrix.from_flat(n, v) for v in nullspace(M)]


def same_span(a: list[Matrix], b: list[Matrix], n: int) -> bool:
    return span_equal([g.flatten() for g in a], [g.flatten() for g in b], width=n * n)


def flats(mats) -> list[Vec]:
    return [g.flatten() for g in mats]
