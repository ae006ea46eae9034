"""Deterministic corpus of test forms.

Five families: Fermat sums of pure powers, cones (degenerate by
construction), dense seeded random forms, direct sums of independently
generated blocks, and forms admitting a prescribed nilpotent symmetrizer
(solved from the transposed constraint system). A spec plus its seed
fully determines the output, byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator

from .algebra import embed_form, nilpotent_report, symmetrizer_algebra
from .forms import (
    SymForm,
    alpha_factorial,
    enumerate_monomials,
    is_nondegenerate,
    monomial_index,
    monomial_slots,
    symmetry_violation,
)
from .linalg import InvariantError, Matrix, nilpotency_index, nullspace
from .rng import SplitMix64

KINDS = ("fermat", "random", "st_sum", "cone", "prescribed_nilpotent")

RETRY_CAP = 32


class GeneratorError(ValueError):
    """The requested form family is empty or exhausted its retry budget."""


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one corpus form. The seed pins down all randomness."""

    kind: str
    nvars: int
    degree: int
    seed: int = 0
    coefficient_bound: int = 10
    blocks: tuple[int, ...] | None = None
    nilpotent: Matrix | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GeneratorError(f"unknown generator kind {self.kind!r}")
        if self.nvars < 2:
            raise GeneratorError("need at least 2 variables")
        if self.degree < 3:
            raise GeneratorError("need degree at least 3")
        if self.coefficient_bound < 1:
            raise GeneratorError("coefficient bound must be positive")
        if self.kind == "st_sum":
            if not self.blocks or any(b < 1 for b in self.blocks):
                raise GeneratorError("st_sum needs positive block sizes")
            if sum(self.blocks) != self.nvars:
                raise GeneratorError(
                    f"block sizes {self.blocks} do not sum to {self.nvars}"
                )
        if self.kind == "prescribed_nilpotent":
            h = self.nilpotent
            if h is None or h.nrows != self.nvars or h.ncols != self.nvars:
                raise GeneratorError(
                    "prescribed_nilpotent needs an n x n matrix payload"
                )
            if nilpotency_index(h) is None:
                raise GeneratorError("prescribed matrix is not nilpotent")


def _random_form(nvars: int, degree: int, seed: int, bound: int) -> SymForm:
    """Dense integer coefficients in [-bound, bound], drawn one per
    monomial in the canonical order."""
    rng = SplitMix64(seed)
    coeffs = {}
    for alpha in enumerate_monomials(nvars, degree):
        c = rng.int_in(-bound, bound)
        if c:
            coeffs[alpha] = c
    return SymForm.from_coeffs(nvars, degree, coeffs)


def _fermat(nvars: int, degree: int) -> SymForm:
    return SymForm.from_coeffs(
        nvars,
        degree,
        {
            tuple(degree if j == i else 0 for j in range(nvars)): 1
            for i in range(nvars)
        },
    )


def nilpotent_form_space(h: Matrix, degree: int) -> list[SymForm]:
    """Basis of the space {F of this degree : h symmetrizes F}.

    Same equations as the symmetrizer constraint system, read the other
    way: h is fixed and the unknowns are the polynomial coefficients,
    entering through the polarization factor alpha!/d!.
    """
    n, d = h.nrows, degree
    monos = enumerate_monomials(n, d)
    index = monomial_index(n, d)

    def alpha_of(slots: tuple[int, ...]) -> tuple[int, ...]:
        alpha = [0] * n
        for s in slots:
            alpha[s] += 1
        return tuple(alpha)

    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for beta in enumerate_monomials(n, d - 2):
                tail = monomial_slots(beta)
                row = [Fraction(0)] * len(monos)
                for k in range(n):
                    hki, hkj = h.entry(k, i), h.entry(k, j)
                    if hki:
                        alpha = alpha_of((k, j) + tail)
                        row[index[alpha]] += hki * Fraction(
                            alpha_factorial(alpha), factorial(d)
                        )
                    if hkj:
                        alpha = alpha_of((k, i) + tail)
                        row[index[alpha]] -= hkj * Fraction(
                            alpha_factorial(alpha), factorial(d)
                        )
                rows.append(row)
    basis = nullspace(Matrix.from_rows(rows, len(monos)))
    return [
        SymForm.from_coeffs(n, d, dict(zip(monos, v)))
        for v in basis
    ]


def generate(spec: GeneratorSpec) -> SymForm:
    """Produce the form a spec describes. Deterministic."""
    n, d = spec.nvars, spec.degree
    if spec.kind == "fermat":
        return _fermat(n, d)

    if spec.kind == "cone":
        # pure powers on all but the last variable: always degenerate
        return embed_form(_fermat(n - 1, d), n, range(n - 1))

    if spec.kind == "random":
        return _random_form(n, d, spec.seed, spec.coefficient_bound)

    if spec.kind == "st_sum":
        stream = SplitMix64(spec.seed)
        total = SymForm.zero(n, d)
        off = 0
        for size in spec.blocks:
            for _ in range(RETRY_CAP):
                sub = _random_form(size, d, stream.next_u64(), spec.coefficient_bound)
                if is_nondegenerate(sub):
                    break
            else:
                raise GeneratorError(
                    f"no nondegenerate block of size {size} within {RETRY_CAP} draws"
                )
            total = total + embed_form(sub, n, range(off, off + size))
            off += size
        return total

    # prescribed_nilpotent
    space = nilpotent_form_space(spec.nilpotent, d)
    if not space:
        raise GeneratorError("only the zero form admits this symmetrizer")
    rng = SplitMix64(spec.seed)
    for _ in range(RETRY_CAP):
        F = SymForm.zero(n, d)
        for b in space:
            c = rng.int_in(-spec.coefficient_bound, spec.coefficient_bound)
            if c:
                F = F + c * b
        if F.is_zero or not is_nondegenerate(F):
            continue
        if symmetry_violation(F, spec.nilpotent) is not None:
            raise InvariantError("solved form space does not contain its output")
        return F
    raise GeneratorError(
        f"no nondegenerate form with the prescribed symmetrizer in {RETRY_CAP} draws"
    )


def census(specs: Iterable[GeneratorSpec]) -> Iterator[dict]:
    """One record per spec, in order: algebra dimensions and square-zero
    count for nondegenerate draws, a skip marker otherwise."""
    for spec in specs:
        base = {
            "kind": spec.kind,
            "nvars": spec.nvars,
            "degree": spec.degree,
            "seed": spec.seed,
        }
        try:
            F = generate(spec)
        except GeneratorError as exc:
            yield {**base, "skipped": str(exc)}
            continue
        A = symmetrizer_algebra(F)
        if not A.nondegenerate:
            yield {**base, "skipped": "degenerate"}
            continue
        rep = nilpotent_report(A)
        yield {
            **base,
            "dim_g": A.dim_total,
            "dim_torus": A.dim_torus,
            "dim_unipotent": A.dim_unipotent,
            "square_zero_count": len(rep.classes),
        }
