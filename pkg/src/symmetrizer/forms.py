"""Symmetric d-linear forms over the rationals.

A form F is stored by the polynomial coefficients of P(x) = F(x, ..., x);
multilinear access goes through the alpha!/d! polarization factor, so the
polarized values are fully symmetric by construction. The canonical
monomial order everywhere is descending lexicographic.

Degree and variable-count constraints of the application domain (d >= 3,
n >= 2) are enforced at the generation and parsing boundary, not here:
contraction and Jacobian rows naturally produce lower-degree forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, Vec, nullspace, rref, vec_is_zero, vector

Exponents = tuple[int, ...]


class DegenerateFormError(ValueError):
    """A nondegenerate form was required. Carries a kernel basis of ∂F."""

    def __init__(self, message: str, kernel: list[Vec]):
        super().__init__(message)
        self.kernel = kernel


class NotASymmetrizerError(ValueError):
    """Twist verification failed: F(g·v1, v2, ...) is not slot-symmetric.

    Attributes pin down one witness: the offending slot pair and the basis
    tuple on which the two evaluations differ.
    """

    def __init__(self, slot_pair: tuple[int, int], basis_tuple: tuple[int, ...]):
        super().__init__(
            f"not a symmetrizer: swapping slots {slot_pair} changes the value "
            f"on basis tuple {basis_tuple}"
        )
        self.slot_pair = slot_pair
        self.basis_tuple = basis_tuple


@lru_cache(maxsize=None)
def enumerate_monomials(nvars: int, degree: int) -> tuple[Exponents, ...]:
    """All exponent vectors of total degree `degree` in `nvars` variables,
    descending lexicographic. This order is canonical module-wide."""
    if nvars < 1 or degree < 0:
        raise ValueError("need nvars >= 1 and degree >= 0")
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in enumerate_monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict[Exponents, int]:
    return {a: i for i, a in enumerate(enumerate_monomials(nvars, degree))}


def monomial_count(nvars: int, degree: int) -> int:
    return comb(nvars + degree - 1, degree)


def monomial_slots(alpha: Exponents) -> tuple[int, ...]:
    """Expand an exponent vector into the sorted tuple of slot indices it
    repeats, e.g. (2, 1) -> (0, 0, 1)."""
    return tuple(i for i, e in enumerate(alpha) for _ in range(e))


def basis_vector(nvars: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(nvars))


def alpha_factorial(alpha: Exponents) -> int:
    out = 1
    for e in alpha:
        out *= factorial(e)
    return out


@dataclass(frozen=True)
class SymForm:
    """Symmetric multilinear form of arity `degree` on Q^nvars.

    `terms` holds (exponents, coefficient) pairs for the defining
    polynomial, sorted in the canonical monomial order with zeros dropped,
    so equality of forms is equality of the dataclass.
    """

    nvars: int
    degree: int
    terms: tuple[tuple[Exponents, Fraction], ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        if self.degree < 0:
            raise ValueError("negative degree")
        for alpha, c in self.terms:
            if len(alpha) != self.nvars or any(e < 0 for e in alpha):
                raise ValueError(f"bad exponent vector {alpha}")
            if sum(alpha) != self.degree:
                raise ValueError(
                    f"exponent vector {alpha} is not homogeneous of degree {self.degree}"
                )
            if c == 0:
                raise ValueError("zero coefficient stored; use from_coeffs")

    @staticmethod
    def from_coeffs(
        nvars: int,
        degree: int,
        coeffs: Mapping[Exponents, object] | Iterable[tuple[Exponents, object]],
    ) -> "SymForm":
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        merged: dict[Exponents, Fraction] = {}
        for alpha, c in items:
            alpha = tuple(int(e) for e in alpha)
            merged[alpha] = merged.get(alpha, Fraction(0)) + Fraction(c)
        order = monomial_index(nvars, degree)
        unknown = [a for a in merged if a not in order]
        if unknown:
            raise ValueError(f"exponent vector {unknown[0]} out of range")
        terms = tuple(
            (a, merged[a])
            for a in sorted(merged, key=order.__getitem__)
            if merged[a] != 0
        )
        return SymForm(nvars, degree, terms)

    @staticmethod
    def zero(nvars: int, degree: int) -> "SymForm":
        return SymForm(nvars, degree, ())

    @cached_property
    def coeff_map(self) -> dict[Exponents, Fraction]:
        return dict(self.terms)

    def coefficient(self, alpha: Exponents) -> Fraction:
        return self.coeff_map.get(tuple(alpha), Fraction(0))

    def coeff_vector(self) -> Vec:
        """Coefficients in the canonical monomial order, dense."""
        cm = self.coeff_map
        return tuple(
            cm.get(a, Fraction(0)) for a in enumerate_monomials(self.nvars, self.degree)
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SymForm") -> "SymForm":
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            raise ValueError("shape mismatch")
        return SymForm.from_coeffs(
            self.nvars, self.degree, list(self.terms) + list(other.terms)
        )

    def __neg__(self) -> "SymForm":
        return SymForm(self.nvars, self.degree, tuple((a, -c) for a, c in self.terms))

    def __sub__(self, other: "SymForm") -> "SymForm":
        return self + (-other)

    def __mul__(self, scalar) -> "SymForm":
        s = Fraction(scalar)
        if s == 0:
            return SymForm.zero(self.nvars, self.degree)
        return SymForm(self.nvars, self.degree, tuple((a, s * c) for a, c in self.terms))

    __rmul__ = __mul__

    def value_on_basis(self, slots: Sequence[int]) -> Fraction:
        """F(e_{i1}, ..., e_{id}) via polarization: c_alpha * alpha! / d!."""
        if len(slots) != self.degree:
            raise ValueError("slot count must equal the arity")
        alpha = [0] * self.nvars
        for i in slots:
            alpha[i] += 1
        alpha = tuple(alpha)
        return self.coefficient(alpha) * Fraction(
            alpha_factorial(alpha), factorial(self.degree)
        )

    def polynomial_value(self, v: Sequence) -> Fraction:
        """Direct evaluation of the defining polynomial at v."""
        v = vector(v)
        if len(v) != self.nvars:
            raise ValueError("shape mismatch")
        acc = Fraction(0)
        for alpha, c in self.terms:
            term = c
            for x, e in zip(v, alpha):
                if e:
                    term *= x**e
            acc += term
        return acc

    def contract(self, u: Sequence) -> "SymForm":
        """The (degree-1)-form F(u, ., ..., .) = (1/d) * directional
        derivative of the defining polynomial along u."""
        if self.degree < 1:
            raise ValueError("cannot contract a 0-form")
        u = vector(u)
        if len(u) != self.nvars:
            raise ValueError("shape mismatch")
        d = self.degree
        out: dict[Exponents, Fraction] = {}
        for alpha, c in self.terms:
            for i, e in enumerate(alpha):
                if e == 0 or u[i] == 0:
                    continue
                beta = alpha[:i] + (e - 1,) + alpha[i + 1 :]
                out[beta] = out.get(beta, Fraction(0)) + Fraction(e, d) * u[i] * c
        return SymForm.from_coeffs(self.nvars, d - 1, out)

    def evaluate(self, *vectors: Sequence) -> Fraction:
        """Multilinear value F(v1, ..., vd) by iterated contraction."""
        if len(vectors) != self.degree:
            raise ValueError("argument count must equal the arity")
        g: SymForm = self
        for v in vectors:
            g = g.contract(v)
        return g.coefficient((0,) * self.nvars)

    def __str__(self) -> str:
        from .polytext import format_poly

        return format_poly(self)


@dataclass(frozen=True)
class ProjectivePoint:
    """Point of projective space; first nonzero coordinate normalized to 1."""

    coords: Vec

    @staticmethod
    def from_vector(v: Sequence) -> "ProjectivePoint":
        v = vector(v)
        lead = next((x for x in v if x != 0), None)
        if lead is None:
            raise ValueError("the zero vector does not define a projective point")
        return ProjectivePoint(tuple(x / lead for x in v))

    @property
    def nvars(self) -> int:
        return len(self.coords)

    def __str__(self) -> str:
        return "[" + " : ".join(str(x) for x in self.coords) + "]"


@dataclass(frozen=True)
class GrassmannPoint:
    """Canonical representative of Im(∂F) inside degree-(d-1) forms.

    `basis` is the reduced echelon form of the Jacobian matrix; since the
    echelon form is unique for the row space, two forms get equal points
    exactly when their Jacobian images agree.
    """

    nvars: int
    degree: int
    basis: Matrix


def jacobian_matrix(F: SymForm) -> Matrix:
    """Row i holds the coefficients of (1/d) ∂P/∂x_i, i.e. of the
    contraction F(e_i, ., ..., .), in the canonical degree-(d-1) order."""
    rows = [F.contract(basis_vector(F.nvars, i)).coeff_vector() for i in range(F.nvars)]
    return Matrix.from_rows(rows, monomial_count(F.nvars, F.degree - 1))


def jacobian_kernel(F: SymForm) -> list[Vec]:
    """Basis of Ker(∂F) = directions u with F(u, ., ..., .) = 0."""
    return nullspace(jacobian_matrix(F).transpose())


def is_nondegenerate(F: SymForm) -> bool:
    return not jacobian_kernel(F)


def grassmann_point(F: SymForm) -> GrassmannPoint:
    """The point J(F): the span of the partial derivatives, canonically.

    Only defined away from cones, so degenerate forms are refused.
    """
    J = jacobian_matrix(F)
    red, _, rank = rref(J)
    if rank != F.nvars:
        raise DegenerateFormError(
            "form is degenerate; Im(∂F) has positive-dimensional kernel",
            jacobian_kernel(F),
        )
    return GrassmannPoint(F.nvars, F.degree, red)


def symmetry_violation(
    F: SymForm, g: Matrix
) -> tuple[tuple[int, int], tuple[int, ...]] | None:
    """Search for a witness that g fails to symmetrize F.

    Checks F(g·e_i, e_j, e^beta) = F(g·e_j, e_i, e^beta) over all i < j and
    all degree-(d-2) monomials beta. Symmetry of F in its last d-1 slots
    makes this single swap equivalent to full slot-symmetry of the twist.
    """
    n, d = F.nvars, F.degree
    if g.nrows != n or g.ncols != n:
        raise ValueError("endomorphism dimension must match the form")
    images = [g.apply(basis_vector(n, i)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for beta in enumerate_monomials(n, d - 2):
                rest = [basis_vector(n, k) for k in monomial_slots(beta)]
                lhs = F.evaluate(images[i], basis_vector(n, j), *rest)
                rhs = F.evaluate(images[j], basis_vector(n, i), *rest)
                if lhs != rhs:
                    return (0, 1), (i, j) + monomial_slots(beta)
    return None


def is_symmetrizer(F: SymForm, g: Matrix) -> bool:
    return symmetry_violation(F, g) is None


def twist(F: SymForm, g: Matrix, check: bool = True) -> SymForm:
    """The form F^g with values F(g·v1, v2, ..., vd).

    With `check` on (the default), g is first verified to be a
    symmetrizer, which is exactly the condition for F^g to be symmetric.
    With `check` off the result is the symmetrization of the values.
    """
    if check:
        witness = symmetry_violation(F, g)
        if witness is not None:
            raise NotASymmetrizerError(*witness)
    n, d = F.nvars, F.degree
    out: dict[Exponents, Fraction] = {}
    for alpha, c in F.terms:
        for i, e in enumerate(alpha):
            if e == 0:
                continue
            # (1/d) * x_i-partial, then multiply by the linear form (g·x)_i
            base = alpha[:i] + (e - 1,) + alpha[i + 1 :]
            scale = Fraction(e, d) * c
            for j in range(n):
                gij = g.entry(i, j)
                if gij == 0:
                    continue
                beta = base[:j] + (base[j] + 1,) + base[j + 1 :]
                out[beta] = out.get(beta, Fraction(0)) + scale * gij
    return SymForm.from_coeffs(n, d, out)


def vanishing_order(F: SymForm, u: Sequence | ProjectivePoint) -> int:
    """Order of vanishing of F at [u]: the least k such that some value
    F(u, ..., u, v1, ..., vk) with d-k copies of u is nonzero; d if F = 0.

    0 means [u] is off the hypersurface; >= 2 means a singular point.
    Scaling-invariant in u.
    """
    coords = u.coords if isinstance(u, ProjectivePoint) else vector(u)
    if vec_is_zero(coords):
        raise ValueError("vanishing order needs a nonzero vector")
    if len(coords) != F.nvars:
        raise ValueError("shape mismatch")
    deepest = -1
    g = F
    for j in range(F.degree + 1):
        if not g.is_zero:
            deepest = j
        if j < F.degree:
            g = g.contract(coords)
    if deepest < 0:
        return F.degree
    return F.degree - deepest


def compose_linear(F: SymForm, A: Matrix) -> SymForm:
    """The form (v1, ..., vd) -> F(A·v1, ..., A·vd); polynomial P(A·x)."""
    n = F.nvars
    if A.nrows != n or A.ncols != n:
        raise ValueError("endomorphism dimension must match the form")
    # rows of A give the substitution x_i -> sum_j A[i][j] * x_j
    unit = lambda j: tuple(1 if k == j else 0 for k in range(n))
    images = [
        {unit(j): A.entry(i, j) for j in range(n) if A.entry(i, j) != 0}
        for i in range(n)
    ]
    out: dict[Exponents, Fraction] = {}
    for alpha, c in F.terms:
        acc: dict[Exponents, Fraction] = {(0,) * n: c}
        for i, e in enumerate(alpha):
            for _ in range(e):
                nxt: dict[Exponents, Fraction] = {}
                for mono, mc in acc.items():
                    for lin, lc in images[i].items():
                        key = tuple(a + b for a, b in zip(mono, lin))
                        nxt[key] = nxt.get(key, Fraction(0)) + mc * lc
                acc = nxt
        for mono, mc in acc.items():
            out[mono] = out.get(mono, Fraction(0)) + mc
    return SymForm.from_coeffs(n, F.degree, out)
