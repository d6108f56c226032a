import pytest

from fiberdt.linalg import rank
from fiberdt.localhom import (
    LINE_IDEAL,
    LINE_WITH_EMBEDDED_POINT_IDEAL,
    POINT_IDEAL,
    MonomialIdeal,
    hom_dimension,
    standard_monomials,
    syzygy_pairs,
    tangent_jump_report,
    verify_hom_solution,
)


# --- ideals -------------------------------------------------------------------


def test_ideal_validation():
    with pytest.raises(ValueError, match="at least one generator"):
        MonomialIdeal(())
    with pytest.raises(ValueError, match="divides"):
        MonomialIdeal(((1, 0, 0), (2, 0, 0)))
    # Non-minimal generator lists are allowed when flagged.
    MonomialIdeal(((1, 0, 0), (2, 0, 0)), minimal=False)
    with pytest.raises(ValueError, match="triple"):
        MonomialIdeal(((1, 0),))


def test_ideal_json_round_trip():
    ideal = MonomialIdeal.from_json([[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1]])
    assert ideal == LINE_WITH_EMBEDDED_POINT_IDEAL
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal


# --- standard monomials --------------------------------------------------------


def test_standard_monomials_line():
    quotient = standard_monomials(LINE_IDEAL, 3)
    assert quotient.basis == ((0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 0, 3))


def test_standard_monomials_embedded_point():
    quotient = standard_monomials(LINE_WITH_EMBEDDED_POINT_IDEAL, 3)
    assert set(quotient.basis) == {
        (0, 0, 0),
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (0, 0, 2),
        (0, 0, 3),
    }
    assert len(quotient.basis) == 6


def test_standard_monomials_point():
    for d in (0, 2, 5):
        assert standard_monomials(POINT_IDEAL, d).basis == ((0, 0, 0),)


def test_standard_monomials_complete_and_duplicate_free():
    # Independent brute-force scan over a box strictly larger than any
    # generator exponent.
    for ideal in (LINE_IDEAL, LINE_WITH_EMBEDDED_POINT_IDEAL, POINT_IDEAL):
        for d in (0, 2, 4):
            basis = standard_monomials(ideal, d).basis
            assert len(basis) == len(set(basis))
            expected = {
                (x, y, z)
                for x in range(10)
                for y in range(10)
                for z in range(d + 1)
                if not ideal.contains_monomial((x, y, z))
            }
            assert set(basis) == expected


def test_standard_monomials_unbounded():
    with pytest.raises(ValueError, match="unbounded in the w2"):
        standard_monomials(MonomialIdeal(((1, 0, 0),)), 2)
    with pytest.raises(ValueError, match="unbounded in the w1"):
        standard_monomials(MonomialIdeal(((1, 1, 0), (0, 2, 0)), minimal=False), 2)


# --- syzygy pairs ---------------------------------------------------------------


def test_syzygy_pair_counts():
    assert len(syzygy_pairs(LINE_IDEAL)) == 1
    assert len(syzygy_pairs(LINE_WITH_EMBEDDED_POINT_IDEAL)) == 10


def test_syzygy_pair_lcm():
    pairs = dict(syzygy_pairs(LINE_WITH_EMBEDDED_POINT_IDEAL))
    # generators 0 and 1 are w1^2 and w1 w2; their lcm is w1^2 w2
    assert pairs[(0, 1)] == (2, 1, 0)


# --- hom dimensions -------------------------------------------------------------


@pytest.mark.parametrize("d", range(9))
def test_line_dimension(d):
    assert hom_dimension(LINE_IDEAL, d).dimension == 2 * (d + 1)


@pytest.mark.parametrize("d", range(9))
def test_embedded_point_dimension(d):
    assert hom_dimension(LINE_WITH_EMBEDDED_POINT_IDEAL, d).dimension == 10 + 2 * d


def test_point_dimension():
    assert hom_dimension(POINT_IDEAL, 0).dimension == 3


def test_hand_checked_example():
    # (w1, w2) at D = 3: two unconstrained truncated series, dimension 8.
    solution = hom_dimension(LINE_IDEAL, 3)
    assert solution.dimension == 8
    assert solution.rank == 0


def test_rank_plus_nullity():
    for ideal, d in ((LINE_IDEAL, 4), (LINE_WITH_EMBEDDED_POINT_IDEAL, 3), (POINT_IDEAL, 2)):
        solution = hom_dimension(ideal, d)
        assert solution.rank + solution.dimension == solution.n_unknowns


def test_basis_maps_verify_and_are_independent():
    solution = hom_dimension(LINE_WITH_EMBEDDED_POINT_IDEAL, 2)
    assert verify_hom_solution(solution)
    flat = [
        [c for image in images for c in image]
        for images in solution.basis_maps
    ]
    assert rank(flat, solution.n_unknowns) == solution.dimension


def test_embedded_point_solution_shape():
    # At D = 1 the surviving parameters are the ten w1/w2 coefficients plus
    # one w3 coefficient in each of the images of w1 w3 and w2 w3; no basis
    # map may touch a constant term or the w3 coefficients of the first three
    # generator images.
    solution = hom_dimension(LINE_WITH_EMBEDDED_POINT_IDEAL, 1)
    assert solution.dimension == 12
    basis = solution.quotient.basis
    const_idx = basis.index((0, 0, 0))
    w3_idx = basis.index((0, 0, 1))
    for images in solution.basis_maps:
        for gen_image in images:
            assert gen_image[const_idx] == 0
        for gen in (0, 1, 2):  # images of w1^2, w1 w2, w2^2
            assert images[gen][w3_idx] == 0


def test_dimension_invariant_under_generator_permutation():
    gens = LINE_WITH_EMBEDDED_POINT_IDEAL.gens
    reordered = (
        tuple(reversed(gens)),
        gens[2:] + gens[:2],
        (gens[3], gens[0], gens[4], gens[1], gens[2]),
    )
    for perm in reordered:
        assert hom_dimension(MonomialIdeal(perm), 2).dimension == 14


def test_dimension_invariant_under_variable_swap():
    swapped = MonomialIdeal(
        tuple((g[1], g[0], g[2]) for g in LINE_WITH_EMBEDDED_POINT_IDEAL.gens)
    )
    for d in (0, 1, 3):
        assert (
            hom_dimension(swapped, d).dimension
            == hom_dimension(LINE_WITH_EMBEDDED_POINT_IDEAL, d).dimension
        )
    assert hom_dimension(MonomialIdeal(((0, 1, 0), (1, 0, 0))), 2).dimension == 6


# --- tangent jump report ---------------------------------------------------------


def test_tangent_jump_report_passes():
    report = tangent_jump_report(range(1, 9))
    assert report["passed"]
    assert report["local_difference"] == 8
    assert report["series_family_offset"] == 2
    assert report["global_jump"] == 10
    for row in report["rows"]:
        assert row["line_dimension"] == 2 * row["d_max"] + 2
        assert row["embedded_dimension"] == 10 + 2 * row["d_max"]
        assert row["ok"]


def test_tangent_jump_report_rejects_empty_range():
    with pytest.raises(ValueError, match="at least one"):
        tangent_jump_report([])
    with pytest.raises(ValueError, match="nonnegative"):
        tangent_jump_report([-1])
