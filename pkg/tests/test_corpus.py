"""Form generators: determinism, family shapes, census records."""

import pytest

from conftest import H_REGULAR_3, H_SQUARE_ZERO_3
from symmetrizer.algebra import restrict_form, symmetrizer_algebra
from symmetrizer.corpus import (
    KINDS,
    GeneratorError,
    GeneratorSpec,
    census,
    generate,
    nilpotent_form_space,
)
from symmetrizer.forms import (
    basis_vector,
    is_nondegenerate,
    is_symmetrizer,
    jacobian_kernel,
    symmetry_violation,
)
from symmetrizer.linalg import Matrix, coordinates_in_span, vector
from symmetrizer.polytext import parse_poly
from symmetrizer.rng import GAMMA, MASK64, MIX1, MIX2, SplitMix64


class TestStreamContract:
    # hand-stepped from the documented recurrence: state += GAMMA, then
    # two xor-shift-multiply rounds with MIX1/MIX2, final xor-shift 31
    def test_first_outputs_for_seed_zero(self):
        r = SplitMix64(0)
        assert [r.next_u64() for _ in range(3)] == [
            0x187C7E5A30947AEF,
            0x9E64613A7A6AA0CB,
            0xA754B030F199B800,
        ]

    def test_constants_are_fixed(self):
        assert GAMMA == 0x9E3779B97F4A7C15
        assert MIX1 == 0xBF58476D1CE4B9B1
        assert MIX2 == 0x94D049BB133111EB
        assert MASK64 == (1 << 64) - 1

    def test_int_in_is_modular_reduction(self):
        a, b = SplitMix64(42), SplitMix64(42)
        for _ in range(20):
            assert a.int_in(-9, 9) == -9 + b.next_u64() % 19

    def test_int_in_rejects_empty_range(self):
        with pytest.raises(ValueError):
            SplitMix64(0).int_in(3, 2)

    def test_nonzero_skips_zero(self):
        r = SplitMix64(0)
        assert all(r.nonzero_int_in(-1, 1) != 0 for _ in range(50))


class TestDeterminism:
    @pytest.mark.parametrize(
        "spec",
        [
            GeneratorSpec("random", 3, 3, seed=9),
            GeneratorSpec("st_sum", 4, 3, seed=7, blocks=(2, 2)),
            GeneratorSpec("prescribed_nilpotent", 3, 3, seed=5, nilpotent=H_SQUARE_ZERO_3),
        ],
    )
    def test_same_spec_same_form(self, spec):
        assert generate(spec) == generate(spec)

    def test_seed_changes_the_draw(self):
        a = generate(GeneratorSpec("random", 3, 3, seed=0))
        b = generate(GeneratorSpec("random", 3, 3, seed=1))
        assert a != b


class TestFamilies:
    def test_fermat(self):
        F = generate(GeneratorSpec("fermat", 3, 3))
        assert F == parse_poly("x0^3 + x1^3 + x2^3")

    def test_cone_is_degenerate(self):
        F = generate(GeneratorSpec("cone", 2, 3))
        assert F == parse_poly("x0^3", nvars=2)
        assert not is_nondegenerate(F)

    def test_cone_kernel_is_the_silent_variable(self):
        F = generate(GeneratorSpec("cone", 3, 3))
        assert jacobian_kernel(F) == [vector([0, 0, 1])]

    def test_random_coefficients_respect_the_bound(self):
        F = generate(GeneratorSpec("random", 3, 4, seed=12, coefficient_bound=3))
        assert F.coeff_map
        assert all(abs(c) <= 3 for c in F.coeff_map.values())

    def test_st_sum_has_no_cross_block_monomials(self):
        F = generate(GeneratorSpec("st_sum", 4, 3, seed=7, blocks=(2, 2)))
        for alpha in F.coeff_map:
            touches_low = alpha[0] or alpha[1]
            touches_high = alpha[2] or alpha[3]
            assert not (touches_low and touches_high)

    def test_st_sum_blocks_are_nondegenerate(self):
        F = generate(GeneratorSpec("st_sum", 5, 4, seed=3, blocks=(2, 3)))
        lo = restrict_form(F, [basis_vector(5, 0), basis_vector(5, 1)])
        hi = restrict_form(F, [basis_vector(5, i) for i in (2, 3, 4)])
        assert is_nondegenerate(lo) and is_nondegenerate(hi)


class TestPrescribedNilpotent:
    def test_space_members_admit_the_matrix(self):
        for F in nilpotent_form_space(H_REGULAR_3, 3):
            assert symmetry_violation(F, H_REGULAR_3) is None

    def test_space_contains_the_chain_pairing_form(self):
        # F = x0^2*x2 + x0*x1^2 admits e0 -> e1 -> e2 -> 0
        space = nilpotent_form_space(H_REGULAR_3, 3)
        target = parse_poly("x0^2*x2 + x0*x1^2")
        coords = coordinates_in_span([B.coeff_vector() for B in space], target.coeff_vector())
        assert coords is not None

    def test_generated_form_carries_the_matrix(self):
        F = generate(
            GeneratorSpec("prescribed_nilpotent", 3, 3, seed=5, nilpotent=H_SQUARE_ZERO_3)
        )
        assert is_nondegenerate(F)
        assert is_symmetrizer(F, H_SQUARE_ZERO_3)
        assert symmetrizer_algebra(F).contains(H_SQUARE_ZERO_3)


class TestSpecValidation:
    def test_kind_list_is_closed(self):
        assert set(KINDS) == {"fermat", "random", "st_sum", "cone", "prescribed_nilpotent"}
        with pytest.raises(GeneratorError):
            GeneratorSpec("hessian", 3, 3)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"kind": "fermat", "nvars": 1, "degree": 3},
            {"kind": "fermat", "nvars": 3, "degree": 2},
            {"kind": "random", "nvars": 3, "degree": 3, "coefficient_bound": 0},
            {"kind": "st_sum", "nvars": 4, "degree": 3},
            {"kind": "st_sum", "nvars": 4, "degree": 3, "blocks": (2, 3)},
            {"kind": "st_sum", "nvars": 4, "degree": 3, "blocks": (4, 0)},
            {"kind": "prescribed_nilpotent", "nvars": 3, "degree": 3},
        ],
    )
    def test_bad_specs_are_rejected(self, kwargs):
        with pytest.raises(GeneratorError):
            GeneratorSpec(**kwargs)

    def test_prescribed_matrix_must_be_nilpotent(self):
        with pytest.raises(GeneratorError, match="not nilpotent"):
            GeneratorSpec(
                "prescribed_nilpotent", 2, 3, nilpotent=Matrix.identity(2)
            )

    def test_prescribed_matrix_must_match_nvars(self):
        with pytest.raises(GeneratorError):
            GeneratorSpec(
                "prescribed_nilpotent", 3, 3, nilpotent=Matrix.from_rows([[0, 0], [1, 0]])
            )


class TestCensus:
    def test_fermat_rows_have_maximal_torus(self):
        specs = [GeneratorSpec("fermat", n, 3) for n in (2, 3, 4)]
        rows = list(census(specs))
        assert [r["nvars"] for r in rows] == [2, 3, 4]
        for r in rows:
            assert r["dim_g"] == r["nvars"]
            assert r["dim_torus"] == r["nvars"] - 1
            assert r["dim_unipotent"] == 0
            assert r["square_zero_count"] == 0

    def test_prescribed_rows_report_unipotent_dimension(self):
        spec = GeneratorSpec(
            "prescribed_nilpotent", 3, 3, seed=5, nilpotent=H_SQUARE_ZERO_3
        )
        (row,) = census([spec])
        assert row["dim_unipotent"] >= 1

    def test_degenerate_rows_are_skipped_not_crashed(self):
        (row,) = census([GeneratorSpec("cone", 3, 3)])
        assert row["skipped"] == "degenerate"
        assert row["kind"] == "cone"
        assert "dim_g" not in row

    def test_rows_come_back_in_spec_order_with_seeds(self):
        specs = [GeneratorSpec("random", 3, 3, seed=s) for s in (5, 1, 3)]
        rows = list(census(specs))
        assert [r["seed"] for r in rows] == [5, 1, 3]
