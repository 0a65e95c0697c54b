"""Turaev genus of a diagram and the genus-two certificate.

``g_T(D) = (c + 2 - |s_A| - |s_B|) / 2`` is an upper bound for the Turaev genus
of the link.  The link genus is only claimed in two situations: an
alternating connected diagram (genus 0) and the extreme-coefficient
certificate for genus 2, which combines ``g_T(D) = 2`` with the fact that a
link of Turaev genus at most one has a Jones polynomial whose first or last
coefficient is a unit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bracket import all_A_circles, all_B_circles
from .diagram import Diagram, is_split
from .errors import SplitDiagramError
from .jones import JonesReport


@dataclass(frozen=True)
class GenusReport:
    c: int
    sA: int
    sB: int
    g_T_diagram: int
    certified_link_genus: int | None = None
    certificate: str | None = None

    def to_dict(self) -> dict:
        return {
            "c": self.c,
            "sA": self.sA,
            "sB": self.sB,
            "g_T_diagram": self.g_T_diagram,
            "certified_link_genus": self.certified_link_genus,
            "certificate": self.certificate,
            "note": "g_T(L) <= g_T(D); the link genus is reported only when certified",
        }


def turaev_genus_diagram(d: Diagram) -> GenusReport:
    if d.n == 0 and d.free_loops == 1:
        return GenusReport(0, 1, 1, 0, 0, "crossingless unknot")
    if is_split(d):
        raise SplitDiagramError("Turaev genus needs a connected (non-split) diagram")
    c = d.n
    sA = all_A_circles(d)
    sB = all_B_circles(d)
    twice = c + 2 - sA - sB
    if twice < 0 or twice % 2:
        # cannot happen for a connected diagram; guard against corrupted input
        raise ValueError(f"c + 2 - sA - sB = {twice} is not a nonnegative even number")
    g = twice // 2
    if g == 0 and d.is_alternating():
        return GenusReport(c, sA, sB, 0, 0, "alternating diagram")
    return GenusReport(c, sA, sB, g)


@dataclass(frozen=True)
class Certificate:
    certified: bool
    genus: int | None
    reason: str

    def to_dict(self) -> dict:
        return {"certified": self.certified, "genus": self.genus, "reason": self.reason}


def certify_genus_two(d: Diagram, jr: JonesReport) -> Certificate:
    """Certify ``g_T(L) = 2`` from a genus-2 diagram and non-unit extreme Jones coefficients."""
    rep = turaev_genus_diagram(d)
    if rep.g_T_diagram != 2:
        return Certificate(False, None, f"diagram genus is {rep.g_T_diagram}, certificate inapplicable")
    if abs(jr.a_M) == 1 or abs(jr.a_m) == 1:
        return Certificate(False, None, "extreme coefficient is a unit")
    return Certificate(
        True,
        2,
        f"g_T(D) = 2 gives g_T(L) <= 2; |a_M| = {abs(jr.a_M)} and |a_m| = {abs(jr.a_m)} rule out genus 0 and 1",
    )
