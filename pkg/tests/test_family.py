import itertools
from fractions import Fraction

import pytest

from turaev_lab.bracket import is_adequate
from turaev_lab.diagram import count_components, is_planar
from turaev_lab.family import (
    COMPONENT_TABLE,
    FamilyCheckError,
    FamilyParams,
    components_by_parity,
    family_report,
    generate,
    region_indices,
    strict_grid,
    target_writhe,
)


def test_params_validation():
    with pytest.raises(ValueError):
        FamilyParams(1, 2, 3, 2, 2)
    with pytest.raises(ValueError):
        FamilyParams(2, 2, 2.5, 2, 2)
    p = FamilyParams.parse("3,3,5,-3,-3")
    assert p.as_tuple() == (3, 3, 5, 3, 3)
    assert p.crossings == 17 and p.strict
    assert not FamilyParams(3, 3, 4, 3, 3).strict
    with pytest.raises(ValueError):
        FamilyParams.parse("3,3,5")


@pytest.mark.parametrize(
    "params, c, comps",
    [((3, 3, 4, 3, 3), 16, 1), ((3, 3, 5, 3, 3), 17, 2), ((2, 2, 2, 2, 2), 10, 4)],
)
def test_generated_sizes(params, c, comps):
    d = generate(params)
    assert d.n == c
    assert count_components(d) == comps
    assert is_planar(d)


def test_regions_are_annotated():
    d = generate((2, 3, 4, 5, 6))
    for name, size in zip("rstuv", (2, 3, 4, 5, 6)):
        assert len(region_indices(d, name)) == size


def test_regions_have_opposite_handedness():
    # each twist region is a chain of parallel crossings, so all crossings in
    # one region share a sign once both strands run the same way
    d = generate((3, 3, 5, 3, 3))
    for name in "rstuv":
        assert len({d.signs[i] for i in region_indices(d, name)}) == 1


@pytest.mark.parametrize(
    "parity, comps", [((0, 1, 0, 1, 1), 1), ((1, 1, 1, 1, 0), 2), ((0, 0, 0, 0, 1), 3)]
)
def test_component_table_lookup(parity, comps):
    assert components_by_parity(tuple(2 + x for x in parity)) == comps


def test_table_covers_all_parities():
    assert set(COMPONENT_TABLE) == set(itertools.product((0, 1), repeat=5))


def test_table_matches_generated_diagrams():
    for par in itertools.product((0, 1), repeat=5):
        p = tuple(2 + x for x in par)
        assert count_components(generate(p)) == components_by_parity(p)


def test_writhe_on_strict_regime_with_r_equal_u():
    for p in strict_grid():
        if p.r == p.u:
            assert generate(p).writhe == target_writhe(p)


def test_never_adequate():
    for p in [(2, 2, 2, 2, 2), (3, 3, 4, 3, 3), (2, 3, 4, 2, 3)]:
        assert not is_adequate(generate(p))


@pytest.mark.parametrize(
    "params, c, span, delta, comps",
    [
        ((3, 3, 5, 3, 3), 17, 11, 4, 2),
        ((2, 2, 4, 2, 2), 12, 8, 2, 4),
        ((3, 3, 4, 3, 3), 16, 10, 4, 1),
    ],
)
def test_family_report(params, c, span, delta, comps):
    rep = family_report(params)
    assert (rep.c, rep.span, rep.gT, rep.delta, rep.components) == (c, span, 2, delta, comps)
    assert rep.delta == rep.c - rep.gT - rep.span
    assert rep.ok


def test_report_outside_strict_regime_skips_closed_forms():
    rep = family_report((2, 3, 4, 2, 3))
    assert not rep.checks["span"]["applies"]
    assert rep.checks["components"]["applies"] and rep.checks["components"]["ok"]
    assert "max_degree" not in rep.checks


def test_report_flags_the_writhe_when_r_differs_from_u():
    # the parities leave no orientation with writhe -2r + t here
    with pytest.raises(FamilyCheckError):
        family_report((3, 3, 5, 2, 2))
    rep = family_report((3, 3, 5, 2, 2), raise_on_mismatch=False)
    assert not rep.checks["writhe"]["ok"]
    assert rep.span == 10 and rep.delta == Fraction(3)


def test_report_dict():
    out = family_report((2, 2, 4, 2, 2)).to_dict()
    assert out["params"] == [2, 2, 4, 2, 2]
    assert out["all_checks_ok"] is True
    assert out["span"] == "8"


def test_strict_grid():
    grid = strict_grid()
    assert len(grid) == 8
    assert all(p.strict for p in grid)
    assert max(p.crossings for p in grid) == 18
    assert len(strict_grid(max_c=17)) < 8
