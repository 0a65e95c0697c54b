import random

import pytest

from turaev_lab.diagram import disjoint_union, named_diagram, unknot
from turaev_lab.errors import SplitDiagramError
from turaev_lab.family import generate
from turaev_lab.jones import JonesReport, jones
from turaev_lab.samples import random_diagram, random_reduced_alternating
from turaev_lab.turaev import certify_genus_two, turaev_genus_diagram


def test_trefoil_genus_zero():
    rep = turaev_genus_diagram(named_diagram("trefoil"))
    assert (rep.sA, rep.sB, rep.g_T_diagram) == (2, 3, 0)
    assert rep.certified_link_genus == 0


def test_unknot_genus_zero():
    assert turaev_genus_diagram(unknot()).g_T_diagram == 0


def test_family_diagram_has_genus_two():
    rep = turaev_genus_diagram(generate((3, 3, 4, 3, 3)))
    assert rep.g_T_diagram == 2
    assert rep.c + 2 - rep.sA - rep.sB == 4
    # only an upper bound without the certificate
    assert rep.certified_link_genus is None


def test_split_diagram_rejected():
    with pytest.raises(SplitDiagramError):
        turaev_genus_diagram(disjoint_union(named_diagram("trefoil"), named_diagram("hopf")))


def test_parity_and_span_bound_on_random_diagrams():
    rng = random.Random(31)
    for _ in range(40):
        d = random_diagram(rng, 9)
        rep = turaev_genus_diagram(d)
        assert (rep.c + 2 - rep.sA - rep.sB) == 2 * rep.g_T_diagram >= 0
        assert jones(d).span <= d.n - rep.g_T_diagram


def test_alternating_diagrams_have_genus_zero():
    rng = random.Random(32)
    for _ in range(15):
        assert turaev_genus_diagram(random_reduced_alternating(rng, 9)).g_T_diagram == 0


def test_certificate_on_golden_link():
    d = generate((3, 3, 5, 3, 3))
    cert = certify_genus_two(d, jones(d))
    assert cert.certified and cert.genus == 2


def test_certificate_refuses_alternating_diagram():
    d = named_diagram("trefoil")
    cert = certify_genus_two(d, jones(d))
    assert not cert.certified
    assert cert.reason == "diagram genus is 0, certificate inapplicable"


def test_certificate_refuses_unit_coefficient():
    d = generate((2, 2, 4, 2, 2))
    real = jones(d)
    fake = JonesReport(real.polynomial, real.max_deg, real.min_deg, real.span, 1, real.a_m)
    cert = certify_genus_two(d, fake)
    assert not cert.certified and cert.reason == "extreme coefficient is a unit"
