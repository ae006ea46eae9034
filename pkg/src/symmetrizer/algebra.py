"""Symmetrizer algebras and everything they force.

For a symmetric d-form F, the symmetrizer algebra g_F is the space of
endomorphisms g with F(g·v1, v2, ..., vd) still fully symmetric. This
module computes g_F as an exact nullspace, splits it into semisimple
(torus) and nilpotent (unipotent) parts, derives direct-sum
decompositions of F from the torus, locates the singular points forced
by square-zero nilpotents, and transports forms along shared Jacobian
images. Identity checks over all of these are bundled at the end; a
failing check is an engine bug, never a property of the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd, lcm
from typing import Iterator, Sequence

from .forms import (
    DegenerateFormError,
    NotASymmetrizerError,
    ProjectivePoint,
    SymForm,
    alpha_factorial,
    basis_vector,
    compose_linear,
    enumerate_monomials,
    grassmann_point,
    is_nondegenerate,
    jacobian_kernel,
    jacobian_matrix,
    monomial_count,
    monomial_slots,
    symmetry_violation,
    twist,
    vanishing_order,
)
from .linalg import (
    InvariantError,
    Matrix,
    Vec,
    coordinates_in_span,
    jordan_chevalley,
    minimal_polynomial,
    nilpotency_index,
    nullspace,
    poly_at_matrix,
    row_space_basis,
    solve,
    span_contains,
    span_equal,
)
from .polys import Poly, factor_rational, is_squarefree, poly_gcd
from .rng import SplitMix64


class FiberMismatchError(ValueError):
    """The two forms have different Jacobian images; no transport exists."""


# ---------------------------------------------------------------------------
# The algebra itself


def constraint_matrix(F: SymForm) -> Matrix:
    """Linear system cutting out g_F inside End(V), flattened row-major.

    One row per (pair i < j, degree-(d-2) monomial beta), encoding

        sum_k g[k][i] F(e_k, e_j, e^beta) - sum_k g[k][j] F(e_k, e_i, e^beta) = 0,

    i.e. the slot-1/slot-2 swap symmetry of F(g·v1, v2, ...). Since F is
    already symmetric in slots 2..d, this single swap is equivalent to
    symmetry under every permutation, so the nullspace is exactly g_F.
    The unknown g[k][i] sits at flat index k*n + i.
    """
    n, d = F.nvars, F.degree
    betas = enumerate_monomials(n, d - 2)
    values = {}

    def pair_value(k: int, j: int, beta) -> Fraction:
        key = (min(k, j), max(k, j), beta)
        if key not in values:
            slots = (key[0], key[1]) + monomial_slots(beta)
            values[key] = F.value_on_basis(slots)
        return values[key]

    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for beta in betas:
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[k * n + i] += pair_value(k, j, beta)
                    row[k * n + j] -= pair_value(k, i, beta)
                rows.append(row)
    return Matrix.from_rows(rows, n * n)


@dataclass(frozen=True)
class SymmetrizerAlgebra:
    """g_F with its semisimple/nilpotent split.

    The split fields are None when the form is degenerate: commutativity
    can fail there, and with it the meaning of the torus/unipotent split.
    dim_total = 1 + dim_torus + dim_unipotent always holds when populated.
    """

    form: SymForm
    basis: tuple[Matrix, ...]
    contains_identity: bool
    semisimple_parts: tuple[Matrix, ...] | None
    nilpotent_parts: tuple[Matrix, ...] | None
    unipotent_basis: tuple[Matrix, ...] | None
    dim_total: int
    dim_torus: int | None
    dim_unipotent: int | None

    @property
    def nondegenerate(self) -> bool:
        return self.dim_torus is not None

    def flat_basis(self) -> list[Vec]:
        return [b.flatten() for b in self.basis]

    def contains(self, g: Matrix) -> bool:
        return span_contains(self.flat_basis(), g.flatten())


def symmetrizer_algebra(F: SymForm) -> SymmetrizerAlgebra:
    """Compute g_F and, for nondegenerate F, its torus/unipotent split."""
    n = F.nvars
    vecs = nullspace(constraint_matrix(F))
    basis = tuple(Matrix.from_flat(n, v) for v in vecs)
    if not span_contains(vecs, Matrix.identity(n).flatten()):
        raise InvariantError("identity endomorphism missing from the algebra")

    if not is_nondegenerate(F):
        return SymmetrizerAlgebra(
            form=F, basis=basis, contains_identity=True,
            semisimple_parts=None, nilpotent_parts=None, unipotent_basis=None,
            dim_total=len(basis), dim_torus=None, dim_unipotent=None,
        )

    sems, nils = [], []
    for b in basis:
        S, N = jordan_chevalley(b)
        # both parts are polynomials in b, so closure keeps them in g_F;
        # violation would mean the nullspace itself is wrong
        for part in (S, N):
            if not span_contains(vecs, part.flatten()):
                raise InvariantError("semisimple/nilpotent part left the algebra")
        if nilpotency_index(N) is None:
            raise InvariantError("nilpotent part is not nilpotent")
        sems.append(S)
        nils.append(N)

    unip_vecs = row_space_basis([N.flatten() for N in nils], width=n * n)
    unipotent = tuple(Matrix.from_flat(n, v) for v in unip_vecs)
    dim_unip = len(unipotent)
    dim_torus = len(basis) - 1 - dim_unip
    if dim_torus < 0:
        raise InvariantError("split dimensions exceed the algebra dimension")
    return SymmetrizerAlgebra(
        form=F, basis=basis, contains_identity=True,
        semisimple_parts=tuple(sems), nilpotent_parts=tuple(nils),
        unipotent_basis=unipotent,
        dim_total=len(basis), dim_torus=dim_torus, dim_unipotent=dim_unip,
    )


# ---------------------------------------------------------------------------
# Structural checks on the algebra


@dataclass(frozen=True)
class PairCheck:
    i: int
    j: int
    product_in_span: bool
    commutes: bool | None  # None when commutativity is not guaranteed


@dataclass(frozen=True)
class ClosureReport:
    pairs: tuple[PairCheck, ...]

    @property
    def all_in_span(self) -> bool:
        return all(p.product_in_span for p in self.pairs)

    @property
    def all_commute(self) -> bool:
        return all(p.commutes is not False for p in self.pairs)

    @property
    def ok(self) -> bool:
        return self.all_in_span and self.all_commute


def algebra_closure_check(A: SymmetrizerAlgebra) -> ClosureReport:
    """Verify products of basis elements stay in the span, and commute
    when the form is nondegenerate."""
    flats = A.flat_basis()
    check_comm = A.nondegenerate
    pairs = []
    for i, gi in enumerate(A.basis):
        for j in range(i, len(A.basis)):
            gj = A.basis[j]
            prod = gi * gj
            in_span = span_contains(flats, prod.flatten()) and span_contains(
                flats, (gj * gi).flatten()
            )
            commutes = (prod == gj * gi) if check_comm else None
            pairs.append(PairCheck(i, j, in_span, commutes))
    return ClosureReport(tuple(pairs))


def kernel_image_vanishing(F: SymForm, h: Matrix) -> bool:
    """True iff F(u, w, e^beta) = 0 for all u in Im(h), w in Ker(h), and
    all degree-(d-2) basis tuples. Multilinearity makes the basis check
    decide the universally quantified statement."""
    witness = symmetry_violation(F, h)
    if witness is not None:
        raise NotASymmetrizerError(*witness)
    n, d = F.nvars, F.degree
    image = row_space_basis([h.column(j) for j in range(n)], width=n)
    kernel = nullspace(h)
    for u in image:
        for w in kernel:
            for beta in enumerate_monomials(n, d - 2):
                rest = [basis_vector(n, t) for t in monomial_slots(beta)]
                if F.evaluate(u, w, *rest) != 0:
                    return False
    return True


# ---------------------------------------------------------------------------
# Direct-sum decomposition driven by the torus


@dataclass(frozen=True)
class STBlock:
    """One summand: ambient basis of the subspace, the restricted form in
    block coordinates, and the irreducible factor that cut the block out."""

    basis: tuple[Vec, ...]
    form: SymForm
    factor: Poly


@dataclass(frozen=True)
class STDecomposition:
    blocks: tuple[STBlock, ...]
    splitting_element: Matrix
    k: int

    def change_of_basis(self) -> Matrix:
        """Columns are the block bases, concatenated in block order."""
        cols = [v for b in self.blocks for v in b.basis]
        return Matrix.from_rows(cols).transpose()


def restrict_form(F: SymForm, basis: Sequence[Vec]) -> SymForm:
    """F pulled back to the span of `basis`, written in those coordinates."""
    dim, d = len(basis), F.degree
    coeffs = {}
    for gamma in enumerate_monomials(dim, d):
        val = F.evaluate(*[basis[t] for t in monomial_slots(gamma)])
        if val != 0:
            coeffs[gamma] = val * Fraction(factorial(d), alpha_factorial(gamma))
    return SymForm.from_coeffs(dim, d, coeffs)


def embed_form(G: SymForm, nvars: int, offsets: Sequence[int]) -> SymForm:
    """Re-index a block form into ambient variables via offsets."""
    coeffs = {}
    for gamma, c in G.terms:
        alpha = [0] * nvars
        for t, e in enumerate(gamma):
            alpha[offsets[t]] = e
        coeffs[tuple(alpha)] = c
    return SymForm.from_coeffs(nvars, G.degree, coeffs)


def _is_scalar(g: Matrix) -> bool:
    n = g.nrows
    return span_contains([Matrix.identity(n).flatten()], g.flatten())


def _integer_scaled(g: Matrix) -> Matrix:
    """Nonzero scalar multiple of g with coprime integer entries.

    Scaling never changes the kernels of the irreducible factors, but it
    keeps the minimal polynomial monic integer, which is the cheap case
    for factorization."""
    flat = g.flatten()
    denom = lcm(*(x.denominator for x in flat))
    nums = [int(x * denom) for x in flat]
    common = 0
    for v in nums:
        common = gcd(common, abs(v))
    if common > 1:
        nums = [v // common for v in nums]
    return Matrix.from_flat(g.nrows, nums)


def _splitting_candidates(
    A: SymmetrizerAlgebra, seed: int, retries: int = 8
) -> Iterator[Matrix]:
    """First non-scalar semisimple part, then seeded random combinations
    of the semisimple parts (still semisimple: they commute)."""
    sems = A.semisimple_parts or ()
    first = next((s for s in sems if not _is_scalar(s)), None)
    if first is not None:
        yield _integer_scaled(first)
    rng = SplitMix64(seed)
    n = A.form.nvars
    for _ in range(retries):
        cand = Matrix.zeros(n)
        for s in sems:
            cand = cand + rng.int_in(-9, 9) * s
        if not cand.is_zero and not _is_scalar(cand):
            yield _integer_scaled(cand)


def st_decompose(
    F: SymForm, seed: int = 0, algebra: SymmetrizerAlgebra | None = None
) -> STDecomposition | None:
    """Split F into a direct sum of forms on independent subspaces, or
    None when the torus gives no rational splitting.

    Blocks are kernels of the irreducible factors of the minimal
    polynomial of a non-scalar semisimple element s in g_F; candidates
    are tried to maximize the block count. The decomposition is certified
    before returning: the blocks must sum to V, and rewriting F in the
    block basis must produce exactly the sum of the block forms (hence
    all cross-block values vanish).
    """
    A = algebra if algebra is not None else symmetrizer_algebra(F)
    if not A.nondegenerate:
        raise DegenerateFormError(
            "direct-sum decomposition needs a nondegenerate form", jacobian_kernel(F)
        )
    if A.dim_torus == 0:
        return None
    n = F.nvars

    best: tuple[int, Matrix, list[tuple[Poly, int]]] | None = None
    for cand in _splitting_candidates(A, seed):
        mp = minimal_polynomial(cand)
        if not is_squarefree(mp):
            raise InvariantError("semisimple candidate has a repeated factor")
        factors = factor_rational(mp)
        k = len(factors)
        if best is None or k > best[0]:
            best = (k, cand, factors)
        if k == n:
            break
    if best is None or best[0] < 2:
        return None
    k, s, factors = best

    blocks = []
    offsets = []
    pos = 0
    for p, mult in factors:
        if mult != 1:
            raise InvariantError("semisimple minimal polynomial not squarefree")
        block_basis = nullspace(poly_at_matrix(p, s))
        if not block_basis:
            raise InvariantError("irreducible factor with trivial kernel")
        blocks.append(
            STBlock(tuple(block_basis), restrict_form(F, block_basis), p)
        )
        offsets.append(pos)
        pos += len(block_basis)
    if pos != n:
        raise InvariantError("block dimensions do not fill the space")

    dec = STDecomposition(tuple(blocks), s, k)
    B = dec.change_of_basis()
    if B.rank() != n:
        raise InvariantError("block bases are not independent")
    total = SymForm.zero(n, F.degree)
    for blk, off in zip(blocks, offsets):
        dims = len(blk.basis)
        total = total + embed_form(blk.form, n, range(off, off + dims))
    if compose_linear(F, B) != total:
        raise InvariantError("cross-block values fail to vanish")
    return dec


# ---------------------------------------------------------------------------
# Nilpotents: square-zero classes and the singular points they force


@dataclass(frozen=True)
class SquareZeroClass:
    """A projective class of h in the unipotent part with h^2 = 0.

    `coefficients` are over the unipotent basis, first nonzero entry 1.
    Each image point carries its verified vanishing order (always >= d-1
    on a nondegenerate form).
    """

    coefficients: Vec
    matrix: Matrix
    image_dim: int
    image_points: tuple[tuple[ProjectivePoint, int], ...]


@dataclass(frozen=True)
class NilpotentReport:
    classes: tuple[SquareZeroClass, ...]
    max_nilpotency_index: int
    cube_zero_all: bool
    search_complete: bool
    infinite_family: bool


def _max_index_over_span(unip: Sequence[Matrix], n: int) -> int:
    """Largest nilpotency index over the whole span of commuting
    nilpotents: the smallest k with every k-fold basis product zero.
    (The generic element realizes it; products detect it exactly.)"""
    if not unip:
        return 1
    level = {(): Matrix.identity(n)}
    for k in range(1, n + 1):
        nxt = {}
        for key, prod in level.items():
            start = key[-1] if key else 0
            for idx in range(start, len(unip)):
                q = prod * unip[idx]
                if not q.is_zero:
                    nxt[key + (idx,)] = q
        if not nxt:
            return k
        level = nxt
    raise InvariantError("commuting nilpotents survived n-fold products")


def nilpotent_report(A: SymmetrizerAlgebra) -> NilpotentReport:
    """Find square-zero elements of the unipotent part and the singular
    points their images force.

    Search strategy: (a) h = f^(l-1) for each unipotent basis element f
    of nilpotency index l; (b) for unipotent dimension <= 2, solve
    h^2 = 0 exactly over the rationals on the projective parameter space
    (entries are quadratics in at most two parameters); (c) in dimension
    >= 3 only the (a)-classes are reported and the search is flagged
    incomplete.
    """
    if A.unipotent_basis is None:
        raise DegenerateFormError(
            "nilpotent analysis needs a nondegenerate form",
            jacobian_kernel(A.form),
        )
    F = A.form
    n, d = F.nvars, F.degree
    unip = A.unipotent_basis
    flats = [u.flatten() for u in unip]
    classes: dict[Vec, SquareZeroClass] = {}

    def register(h: Matrix, coeffs: Vec | None = None):
        if coeffs is None:
            coeffs = coordinates_in_span(flats, h.flatten())
            if coeffs is None:
                raise InvariantError("square-zero element left the unipotent part")
        lead = next((c for c in coeffs if c != 0), None)
        if lead is None:
            raise InvariantError("zero element offered as a square-zero class")
        coeffs = tuple(c / lead for c in coeffs)
        if coeffs in classes:
            return
        hn = (Fraction(1) / lead) * h
        if not (hn * hn).is_zero:
            raise InvariantError("square-zero candidate fails h^2 = 0")
        image = row_space_basis([hn.column(j) for j in range(n)], width=n)
        points = []
        for v in image:
            pt = ProjectivePoint.from_vector(v)
            order = vanishing_order(F, pt)
            if order < d - 1:
                raise InvariantError(
                    "image of a square-zero symmetrizer is insufficiently singular"
                )
            points.append((pt, order))
        classes[coeffs] = SquareZeroClass(coeffs, hn, len(image), tuple(points))

    # (a) the power construction, always available
    for f in unip:
        ell = nilpotency_index(f)
        if ell is None or ell < 2:
            raise InvariantError("unipotent basis element is not a nonzero nilpotent")
        register(f ** (ell - 1))

    infinite_family = False
    search_complete = True
    dim = len(unip)
    if dim == 1:
        f = unip[0]
        if (f * f).is_zero:
            register(f, coeffs=(Fraction(1),))
    elif dim == 2:
        f1, f2 = unip
        cross = f1 * f2 + f2 * f1
        sq1, sq2 = f1 * f1, f2 * f2
        entry_polys = [
            Poly.from_coeffs([sq1.entry(r, c), cross.entry(r, c), sq2.entry(r, c)])
            for r in range(n)
            for c in range(n)
        ]
        g = Poly.zero()
        for p in entry_polys:
            g = poly_gcd(g, p)
        if g.is_zero:
            # (f1 + b f2)^2 = 0 identically: a whole line of classes
            infinite_family = True
        elif g.degree >= 1:
            roots = sorted(
                -q.coeffs[0]
                for q, _ in factor_rational(g)
                if q.degree == 1 and q.coeffs[1] == 1
            )
            for b0 in roots:
                register(f1 + b0 * f2, coeffs=(Fraction(1), b0))
        if (sq2).is_zero:
            register(f2, coeffs=(Fraction(0), Fraction(1)))
    elif dim >= 3:
        search_complete = False

    max_index = _max_index_over_span(unip, n)
    ordered = tuple(classes[key] for key in sorted(classes))
    return NilpotentReport(
        classes=ordered,
        max_nilpotency_index=max_index,
        cube_zero_all=max_index <= 3,
        search_complete=search_complete,
        infinite_family=infinite_family,
    )


# ---------------------------------------------------------------------------
# Fiber transport along the Jacobian image


def recover_symmetrizer(F: SymForm, Ft: SymForm) -> Matrix:
    """The unique g with twist(F, g) = Ft, for forms sharing a Jacobian
    image. Column j of g solves J_F^T x = (row j of J_Ft): it rewrites
    each partial of Ft over the partials of F."""
    if (F.nvars, F.degree) != (Ft.nvars, Ft.degree):
        raise ValueError("forms live in different spaces")
    if grassmann_point(F) != grassmann_point(Ft):
        raise FiberMismatchError("forms have different Jacobian images")
    n = F.nvars
    lhs = jacobian_matrix(F).transpose()
    rows_t = jacobian_matrix(Ft).rows
    cols = []
    for j in range(n):
        x = solve(lhs, rows_t[j])
        if x is None:
            raise InvariantError("equal Jacobian images but unsolvable transport")
        cols.append(x)
    g = Matrix.from_rows([[cols[j][k] for j in range(n)] for k in range(n)])
    if g.rank() != n:
        raise InvariantError("fiber transport is singular")
    witness = symmetry_violation(F, g)
    if witness is not None:
        raise InvariantError("fiber transport is not a symmetrizer")
    if twist(F, g, check=False) != Ft:
        raise InvariantError("fiber transport fails to reproduce the target")
    return g


@dataclass(frozen=True)
class FiberInvarianceReport:
    algebra_match: bool
    kernel_match: bool
    grassmann_match: bool | None  # None when the form is degenerate

    @property
    def ok(self) -> bool:
        return self.algebra_match and self.kernel_match and self.grassmann_match is not False


def fiber_invariance_check(F: SymForm, g: Matrix) -> FiberInvarianceReport:
    """Check that twisting by an invertible symmetrizer g preserves the
    symmetrizer algebra, transports Ker(∂F) by g^{-1}, and fixes the
    Jacobian image (the last only when defined)."""
    witness = symmetry_violation(F, g)
    if witness is not None:
        raise NotASymmetrizerError(*witness)
    n = F.nvars
    if g.rank() != n:
        raise ValueError("twisting element must be invertible")
    Fg = twist(F, g, check=False)

    span_F = [b.flatten() for b in symmetrizer_algebra(F).basis]
    span_Fg = [b.flatten() for b in symmetrizer_algebra(Fg).basis]
    algebra_match = span_equal(span_F, span_Fg, width=n * n)

    ginv = g.inverse()
    transported = [ginv.apply(v) for v in jacobian_kernel(F)]
    kernel_match = span_equal(transported, jacobian_kernel(Fg), width=n)

    grassmann_match: bool | None
    if is_nondegenerate(F):
        grassmann_match = grassmann_point(F) == grassmann_point(Fg)
    else:
        grassmann_match = None
    return FiberInvarianceReport(algebra_match, kernel_match, grassmann_match)


def sample_invertible_symmetrizers(
    F: SymForm,
    algebra: SymmetrizerAlgebra | None = None,
    seed: int = 0,
    count: int = 20,
) -> list[Matrix]:
    """Deterministic invertible elements of g_F: seeded integer
    combinations of the basis, keeping the invertible ones."""
    A = algebra if algebra is not None else symmetrizer_algebra(F)
    n = F.nvars
    rng = SplitMix64(seed)
    out: list[Matrix] = []
    for _ in range(64 * count):
        if len(out) >= count:
            break
        g = Matrix.zeros(n)
        for b in A.basis:
            g = g + rng.int_in(-5, 5) * b
        if g.rank() == n:
            out.append(g)
    if not out:
        out.append(Matrix.identity(n))
    return out


# ---------------------------------------------------------------------------
# The identity suite


@dataclass(frozen=True)
class CheckResult:
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""


def _passfail(ok: bool, detail: str = "") -> CheckResult:
    return CheckResult("pass" if ok else "fail", detail if not ok else "")


def check_identities(
    F: SymForm,
    seed: int = 0,
    samples: int = 8,
    assume_finite_singular: bool = False,
    algebra: SymmetrizerAlgebra | None = None,
) -> dict[str, CheckResult]:
    """Run every identity the engine promises on this form.

    Each check passes, fails with a certificate string, or is skipped
    with the unmet hypothesis. Failures are engine bugs by construction.
    The finiteness of the singular locus cannot be decided here, so the
    checks needing it run only when the caller asserts it.
    """
    A = algebra if algebra is not None else symmetrizer_algebra(F)
    nondeg = A.nondegenerate
    d = F.degree
    out: dict[str, CheckResult] = {}

    closure = algebra_closure_check(A)
    out["product_closure"] = _passfail(
        closure.all_in_span,
        "basis product left the span at pairs "
        + str([(p.i, p.j) for p in closure.pairs if not p.product_in_span]),
    )
    if nondeg:
        out["commutativity"] = _passfail(
            closure.all_commute,
            "non-commuting basis pairs "
            + str([(p.i, p.j) for p in closure.pairs if p.commutes is False]),
        )
    else:
        out["commutativity"] = CheckResult(
            "skip", "degenerate form: commutativity is not guaranteed"
        )
    out["identity_element"] = _passfail(A.contains_identity, "identity not in span")

    bad = [
        i for i, h in enumerate(A.basis) if not kernel_image_vanishing(F, h)
    ]
    out["kernel_image_vanishing"] = _passfail(
        not bad, f"failed for basis elements {bad}"
    )

    if nondeg:
        out["split_additivity"] = _passfail(
            A.dim_total == 1 + A.dim_torus + A.dim_unipotent,
            f"dims ({A.dim_total}, {A.dim_torus}, {A.dim_unipotent})",
        )
        ok_split = all(
            is_squarefree(minimal_polynomial(S)) and nilpotency_index(N) is not None
            for S, N in zip(A.semisimple_parts, A.nilpotent_parts)
        )
        out["split_parts"] = _passfail(ok_split, "a split part has the wrong type")
    else:
        skip = CheckResult("skip", "degenerate form: split not computed")
        out["split_additivity"] = skip
        out["split_parts"] = skip

    gs = sample_invertible_symmetrizers(F, A, seed=seed, count=samples)
    bad_inv = [
        i for i, g in enumerate(gs) if symmetry_violation(F, g.inverse()) is not None
    ]
    out["group_inverses"] = _passfail(not bad_inv, f"inverse fails at samples {bad_inv}")
    bad_prod = [
        i
        for i in range(len(gs) - 1)
        if symmetry_violation(F, gs[i] * gs[i + 1]) is not None
    ]
    out["group_products"] = _passfail(not bad_prod, f"product fails at samples {bad_prod}")

    fiber_bad = []
    for i, g in enumerate(gs[: min(len(gs), 5)]):
        if not fiber_invariance_check(F, g).ok:
            fiber_bad.append(i)
    out["fiber_invariance"] = _passfail(not fiber_bad, f"failed at samples {fiber_bad}")

    if nondeg:
        rt_bad = [
            i for i, g in enumerate(gs) if recover_symmetrizer(F, twist(F, g, check=False)) != g
        ]
        out["twist_roundtrip"] = _passfail(not rt_bad, f"failed at samples {rt_bad}")
    else:
        out["twist_roundtrip"] = CheckResult(
            "skip", "degenerate form: transport undefined"
        )

    if not nondeg:
        skip = CheckResult("skip", "degenerate form")
        out["block_decomposition"] = skip
        out["block_algebra_sum"] = skip
    elif A.dim_torus == 0:
        skip = CheckResult("skip", "torus is trivial: nothing splits")
        out["block_decomposition"] = skip
        out["block_algebra_sum"] = skip
    else:
        dec = st_decompose(F, seed=seed, algebra=A)
        if dec is None:
            skip = CheckResult(
                "skip",
                "splitting elements have irreducible minimal polynomials over "
                "the rationals; no rational block decomposition",
            )
            out["block_decomposition"] = skip
            out["block_algebra_sum"] = skip
        else:
            out["block_decomposition"] = _cross_block_check(F, dec)
            out["block_algebra_sum"] = _block_algebra_sum_check(F, A, dec)

    if nondeg:
        rep = nilpotent_report(A)
        if A.dim_unipotent == 0:
            out["square_zero_exists"] = CheckResult("skip", "unipotent part is zero")
        else:
            out["square_zero_exists"] = _passfail(
                bool(rep.classes), "nonzero unipotent part but no square-zero class"
            )
        if rep.classes:
            out["square_zero_images_singular"] = _passfail(
                all(o >= d - 1 for cl in rep.classes for _, o in cl.image_points),
                "an image point has too small a vanishing order",
            )
        else:
            out["square_zero_images_singular"] = CheckResult(
                "skip", "no square-zero classes"
            )
        if assume_finite_singular and rep.classes:
            out["square_zero_image_lines"] = _passfail(
                all(cl.image_dim == 1 for cl in rep.classes),
                "a square-zero image is not a line",
            )
            images = [cl.image_points[0][0] for cl in rep.classes]
            out["square_zero_images_distinct"] = _passfail(
                len(set(images)) == len(images), "two classes share an image point"
            )
            out["cube_vanishing"] = _passfail(
                rep.cube_zero_all,
                f"max nilpotency index {rep.max_nilpotency_index} exceeds 3",
            )
        else:
            reason = (
                "no square-zero classes"
                if not rep.classes
                else "finiteness of the singular locus not asserted"
            )
            skip = CheckResult("skip", reason)
            out["square_zero_image_lines"] = skip
            out["square_zero_images_distinct"] = skip
            out["cube_vanishing"] = skip
    else:
        skip = CheckResult("skip", "degenerate form")
        for key in (
            "square_zero_exists",
            "square_zero_images_singular",
            "square_zero_image_lines",
            "square_zero_images_distinct",
            "cube_vanishing",
        ):
            out[key] = skip

    return out


def _cross_block_check(F: SymForm, dec: STDecomposition) -> CheckResult:
    """Explicit cross-block vanishing: evaluate F on pairs of vectors
    from different blocks against every degree-(d-2) basis tuple."""
    n, d = F.nvars, F.degree
    betas = enumerate_monomials(n, d - 2)
    for a in range(len(dec.blocks)):
        for b in range(a + 1, len(dec.blocks)):
            for u in dec.blocks[a].basis:
                for w in dec.blocks[b].basis:
                    for beta in betas:
                        rest = [basis_vector(n, t) for t in monomial_slots(beta)]
                        if F.evaluate(u, w, *rest) != 0:
                            return CheckResult(
                                "fail", f"blocks {a},{b} have a nonzero cross value"
                            )
    return CheckResult("pass", f"{dec.k} blocks")


def _block_algebra_sum_check(
    F: SymForm, A: SymmetrizerAlgebra, dec: STDecomposition
) -> CheckResult:
    """g_F, conjugated into block coordinates, must equal the direct sum
    of the block algebras."""
    n = F.nvars
    B = dec.change_of_basis()
    Binv = B.inverse()
    conjugated = [(Binv * g * B).flatten() for g in A.basis]

    embedded = []
    off = 0
    for blk in dec.blocks:
        dim = len(blk.basis)
        sub = symmetrizer_algebra(blk.form)
        for m in sub.basis:
            big = [[Fraction(0)] * n for _ in range(n)]
            for r in range(dim):
                for c in range(dim):
                    big[off + r][off + c] = m.entry(r, c)
            embedded.append(Matrix.from_rows(big).flatten())
        off += dim
    ok = span_equal(conjugated, embedded, width=n * n)
    return _passfail(ok, "block algebras do not sum to the whole algebra")
