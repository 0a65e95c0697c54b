import random

import pytest

from turaev_lab.algebra import LaurentPoly, LaurentPoly2
from turaev_lab.bracket import bracket
from turaev_lab.diagram import (
    connected_sum,
    disjoint_union,
    longest_bridge,
    mirror,
    named_diagram,
    smooth,
    switch_crossing,
    unknot,
)
from turaev_lab.errors import BudgetExceeded
from turaev_lab.family import generate
from turaev_lab.jones import jones_polynomial
from turaev_lab.kauffman2 import (
    LOOP,
    ONE,
    Z,
    check_bounds,
    descending_candidate,
    kauffman_f,
    kauffman_lambda,
    kauffman_report,
    z_degree,
)
from turaev_lab.reidemeister import apply_move, triangle_sites
from turaev_lab.samples import random_diagram, random_reduced_alternating

ONE_T = LaurentPoly({0: 1}, var="t", denom=2)


def specialize(lam: LaurentPoly2) -> tuple[LaurentPoly, int]:
    """Lambda at a = -A^3, z = A + A^-1, times (A + A^-1)^k to clear negative powers of z."""
    zs = LaurentPoly({1: 1, -1: 1})
    k = max(0, -lam.z_min_degree())
    out = LaurentPoly()
    for (a, z), c in lam.terms.items():
        out = out + LaurentPoly({3 * a: c * (-1) ** (a % 2)}) * zs ** (z + k)
    return out, k


def test_unknot_and_unlink():
    assert kauffman_lambda(unknot()) == ONE
    assert kauffman_lambda(disjoint_union(unknot(), unknot())) == LOOP
    assert LOOP == LaurentPoly2({(1, -1): 1, (-1, -1): 1, (0, 0): -1})


def test_kink_factors():
    # positive kink gives a, so F = a^-w Lambda is unchanged by the first move
    assert kauffman_lambda(named_diagram("positive_kink")) == LaurentPoly2.monomial(1, 0)
    assert kauffman_lambda(named_diagram("negative_kink")) == LaurentPoly2.monomial(-1, 0)
    assert kauffman_f(named_diagram("positive_kink")) == ONE


def test_f_of_unknot_with_many_kinks():
    rng = random.Random(41)
    d = named_diagram("positive_kink")
    for _ in range(4):
        d = apply_move(d, "RI", (rng.choice(sorted(d.occurrences)), rng.choice((1, -1)), 1))
    assert kauffman_f(d) == ONE


def test_trefoil_top_coefficient():
    lam = kauffman_lambda(named_diagram("trefoil"))
    assert lam.z_degree() == 2
    top = lam.z_coefficient(2)
    k = top.coeff(1)
    assert k > 0 and top == LaurentPoly({1: k, -1: k}, var="a")


def test_mirror_inverts_a():
    t = named_diagram("trefoil")
    assert kauffman_f(mirror(t)) == kauffman_f(t).invert_a()
    assert kauffman_lambda(mirror(t)) == kauffman_lambda(t).invert_a()


def test_specializes_to_bracket():
    rng = random.Random(42)
    cases = [named_diagram("hopf"), generate((2, 2, 2, 2, 2))]
    cases += [random_diagram(rng, 8) for _ in range(15)]
    delta_fac = LaurentPoly({1: 1, -1: 1})
    for d in cases:
        val, k = specialize(kauffman_lambda(d))
        assert val == bracket(d) * delta_fac ** k


def test_skein_identity():
    rng = random.Random(43)
    for _ in range(15):
        d = random_diagram(rng, 7)
        i = rng.randrange(d.n)
        e = switch_crossing(d, i)
        lhs = kauffman_lambda(d) + kauffman_lambda(e)
        rhs = Z * (kauffman_lambda(smooth(d, i, "A")) + kauffman_lambda(smooth(d, i, "B")))
        assert lhs == rhs


def test_regular_isotopy_invariance():
    rng = random.Random(44)
    done = 0
    while done < 10:
        d = random_diagram(rng, 8)
        sites = triangle_sites(d)
        if not sites:
            continue
        assert kauffman_lambda(apply_move(d, "RIII", rng.choice(sites))) == kauffman_lambda(d)
        done += 1


def test_multiplicative_under_connected_sum():
    t, f = named_diagram("trefoil"), named_diagram("figure_eight")
    assert kauffman_f(connected_sum(t, f)) == kauffman_f(t) * kauffman_f(f)


def test_bounds_and_bridges():
    rng = random.Random(45)
    for _ in range(15):
        d = random_diagram(rng, 8)
        res = check_bounds(kauffman_lambda(d), d.n, [longest_bridge(d)])
        assert res["total_degree_ok"] and res["bridge_ok"], res


def test_check_bounds_reports_violations():
    res = check_bounds(LaurentPoly2({(2, 2): 1}), 3, [1])
    assert not res["total_degree_ok"] and res["violations"] == [[2, 2]]


def test_alternating_bridges_have_length_one():
    rng = random.Random(46)
    for _ in range(10):
        assert longest_bridge(random_reduced_alternating(rng, 9)) == 1


def test_switching_to_descending_gives_an_unknot():
    rng = random.Random(47)
    checked = 0
    while checked < 10:
        d = random_diagram(rng, 9)
        if len(d.components) != 1:
            continue
        assert descending_candidate(d) is not None or jones_polynomial(d) == ONE_T
        while (i := descending_candidate(d)) is not None:
            d = switch_crossing(d, i)
        assert jones_polynomial(d) == ONE_T
        checked += 1


def test_z_degree_of_zero():
    with pytest.raises(ValueError):
        z_degree(LaurentPoly2())


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        kauffman_lambda(generate((2, 2, 3, 2, 2)), budget=3)


def test_report():
    rep = kauffman_report(named_diagram("figure_eight"))
    # writhe 0, so F and Lambda agree
    assert rep.f == rep.lam
    assert rep.z_degree == 3
    assert rep.longest_bridges == [1]
    assert rep.to_dict()["bounds_check"]["bridge_ok"]
