"""Local Reidemeister moves and the closure analysis of their effect on Turaev genus.

Moves
-----
``apply_move(d, move, site)`` supports

* ``"RI"``: site ``(label, sign, turn)`` adds a kink of the given crossing sign
  on arc ``label``; ``turn`` (+1/-1) picks the side the loop sits on.
* ``"RI-"``: site is the index of a kink crossing.
* ``"RII"``: site ``(dart1, dart2, over)`` pushes the arc of ``dart1`` across
  the arc of ``dart2``; both darts (see :func:`diagram.faces`) must border
  the same face.  ``over=True`` puts the first arc on top.
* ``"RII-"``: site ``(i, j)`` is a reducible bigon.
* ``"RIII"``: site is a dart on a triangular face whose crossings admit the
  move (some strand passes over at both of its corners).

Every move returns a new diagram through :func:`diagram.assemble`, keeping
the orientation of the untouched arcs.

Closure analysis
----------------
A move happens inside a disk meeting the diagram in 2, 4 or 6 points.  Once
all outside crossings are smoothed, the outside of a state is a planar
matching of those points.  :func:`analyze_closure` closes the local tangles
before and after the move with such a matching and counts state circles.

Endpoint labels run around the disk.  For the second move the cyclic order
is ``a, b, d, c`` with the two strands joining ``a`` to ``c`` and ``b`` to
``d``, so the two planar matchings are (i) ``a-b, c-d`` and (ii) ``a-c,
b-d``.  For the third move the labels ``a..f`` run around the disk and the
five planar matchings are the cases (i)-(v).  The third move is modelled as
the braid relation ``s1 s2 s1 -> s2 s1 s2`` on three strands with ``a, b, c``
at the bottom and ``d, e, f`` at the top read right to left; the barred
variant uses the mirror tangles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Sequence

from .bracket import all_A_circles, all_B_circles
from .diagram import (
    Diagram,
    assemble,
    faces,
    port_graph,
    remove_bigon,
    remove_kink,
)
from .errors import MoveError, SplitDiagramError
from .turaev import turaev_genus_diagram

MOVES = ("RI", "RI-", "RII", "RII-", "RIII", "RIII-mirror")


# ---------------------------------------------------------------------------
# applying moves to diagrams


def _base(d: Diagram):
    partner, directed = port_graph(d)
    xs = [tuple((i, s) for s in range(4)) for i in range(d.n)]
    regions = list(d.regions) if d.regions is not None else None
    return xs, partner, directed, regions


def _connect(partner, directed, u, v, forward: bool):
    partner[u] = v
    partner[v] = u
    directed.add((u, v) if forward else (v, u))


def add_kink(d: Diagram, label: int, sign: int, turn: int = 1) -> Diagram:
    if sign not in (1, -1) or turn not in (1, -1):
        raise MoveError("kink sign and turn must be +1 or -1")
    occ = d.occurrences
    if label not in occ:
        raise MoveError(f"no arc labelled {label}")
    for entry in (0, 1):
        out = _kink(d, label, entry, turn)
        if out.signs[-1] == sign:
            return out
    raise MoveError("could not realise the requested kink")  # pragma: no cover


def _kink(d: Diagram, label: int, entry: int, turn: int) -> Diagram:
    xs, partner, directed, regions = _base(d)
    tail, head = d.occurrences[label]
    directed.discard((tail, head))
    q = [("k", s) for s in range(4)]
    e1 = entry
    e2 = (entry + 2) % 4
    e3 = (e2 + turn) % 4
    e4 = (e3 + 2) % 4
    _connect(partner, directed, tail, q[e1], True)
    _connect(partner, directed, q[e2], q[e3], True)
    _connect(partner, directed, q[e4], head, True)
    xs.append(tuple(q))
    if regions is not None:
        regions.append(None)
    return assemble(xs, partner, directed, None, d.free_loops, regions)


def add_bigon(d: Diagram, dart1: tuple[int, int], dart2: tuple[int, int], over: bool = True) -> Diagram:
    """Second move pushing the arc of ``dart1`` across the arc of ``dart2`` inside their common face."""
    face_of = {}
    for k, f in enumerate(faces(d)):
        for dart in f:
            face_of[dart] = k
    if dart1 not in face_of or dart2 not in face_of:
        raise MoveError("darts must be (crossing, slot) pairs of the diagram")
    if dart1 == dart2:
        raise MoveError("the two darts must differ")
    if face_of[dart1] != face_of[dart2]:
        raise MoveError("darts do not border a common face")
    xs, partner, directed, regions = _base(d)
    p1, q1 = dart1, d.partner[dart1]
    p2, q2 = dart2, d.partner[dart2]
    f1 = (p1, q1) in directed
    f2 = (p2, q2) in directed
    for p, q in ((p1, q1), (p2, q2)):
        directed.discard((p, q))
        directed.discard((q, p))
    # new crossings x and y, ports listed counterclockwise as E, N, W, S
    xE, xN, xW, xS = (("x", k) for k in "ENWS")
    yE, yN, yW, yS = (("y", k) for k in "ENWS")
    # strand 2 runs P2 -> x.W -> x.E -> y.W -> y.E -> Q2
    _connect(partner, directed, p2, xW, f2)
    _connect(partner, directed, xE, yW, f2)
    _connect(partner, directed, yE, q2, f2)
    # strand 1 runs P1 -> y.N -> y.S -> x.S -> x.N -> Q1
    _connect(partner, directed, p1, yN, f1)
    _connect(partner, directed, yS, xS, f1)
    _connect(partner, directed, xN, q1, f1)
    if over:
        xs += [(xE, xN, xW, xS), (yE, yN, yW, yS)]
    else:
        xs += [(xN, xW, xS, xE), (yN, yW, yS, yE)]
    if regions is not None:
        regions += [None, None]
    return assemble(xs, partner, directed, None, d.free_loops, regions)


def triangle_sites(d: Diagram) -> list[tuple[int, int]]:
    """One dart per triangular face on which the third move can be performed."""
    out = []
    for f in faces(d):
        if len(f) != 3:
            continue
        crossings = {i for i, _ in f}
        if len(crossings) != 3:
            continue
        same = False
        for i, s in f:
            _, t = d.partner[(i, s)]
            if s % 2 == t % 2:
                same = True
        if same:
            out.append(min(f))
    return out


def apply_rIII(d: Diagram, dart: tuple[int, int]) -> Diagram:
    if dart not in triangle_sites(d):
        # accept any dart of a valid triangle
        for f in faces(d):
            if dart in f and min(f) in triangle_sites(d):
                dart = min(f)
                break
        else:
            raise MoveError(f"dart {dart} does not lie on a triangle admitting the third move")
    x, p = dart
    y, q = d.partner[(x, p)]
    z, r = d.partner[(y, (q - 1) % 4)]
    xs_old, partner, directed, regions = _base(d)
    ext = {
        "X1": (x, (p + 2) % 4),
        "X2": (x, (p + 3) % 4),
        "Y1": (y, (q + 2) % 4),
        "Y2": (y, (q + 1) % 4),
        "Z1": (z, (r + 1) % 4),
        "Z2": (z, (r + 2) % 4),
    }
    outer = {k: d.partner[v] for k, v in ext.items()}
    # orientation of each strand through the triangle, read from its external ends
    strand_dir = {}
    for k, v in ext.items():
        strand_dir[k] = (v, outer[k]) in directed
    removed = {x, y, z}
    for i in removed:
        for s in range(4):
            other = partner.pop((i, s), None)
            if other is not None and other[0] not in removed:
                partner.pop(other, None)
    directed = {e for e in directed if e[0][0] not in removed and e[1][0] not in removed}
    xn = [("x'", s) for s in range(4)]
    yn = [("y'", s) for s in range(4)]
    zn = [("z'", s) for s in range(4)]
    slot = {
        "X1": yn[1],
        "X2": zn[1],
        "Y1": xn[2],
        "Y2": zn[2],
        "Z1": xn[3],
        "Z2": yn[0],
    }
    ext_key = {v: k for k, v in ext.items()}
    for k, new in slot.items():
        target = outer[k]
        if target in ext_key:
            # an arc joining two corners of the triangle from outside
            k2 = ext_key[target]
            if k < k2:
                _connect(partner, directed, new, slot[k2], strand_dir[k])
            continue
        # an external arc leaving the triangle keeps its direction
        _connect(partner, directed, new, target, strand_dir[k])
    internal = ((xn[0], yn[3]), (xn[1], zn[3]), (yn[2], zn[0]))
    for u, v in internal:
        partner[u] = v
        partner[v] = u
    keep = [i for i in range(d.n) if i not in removed]
    xs = [xs_old[i] for i in keep]

    def rot(ports, flag):
        return tuple(ports[1:] + ports[:1]) if flag else tuple(ports)

    xs.append(rot(xn, p % 2 == 1))
    xs.append(rot(yn, q % 2 == 0))
    xs.append(rot(zn, r % 2 == 1))
    new_regions = None
    if regions is not None:
        new_regions = [regions[i] for i in keep] + [regions[x], regions[y], regions[z]]
    return assemble(xs, partner, directed, None, d.free_loops, new_regions)


def apply_move(d: Diagram, move: str, site) -> Diagram:
    move = move.upper().replace("^-1", "-").replace("INV", "-")
    if move == "RI":
        label, sign, *rest = site
        return add_kink(d, label, sign, rest[0] if rest else 1)
    if move == "RI-":
        try:
            return remove_kink(d, site)
        except ValueError as exc:
            raise MoveError(str(exc)) from None
    if move == "RII":
        dart1, dart2, *rest = site
        return add_bigon(d, tuple(dart1), tuple(dart2), rest[0] if rest else True)
    if move == "RII-":
        i, j = site
        try:
            return remove_bigon(d, i, j)
        except ValueError as exc:
            raise MoveError(str(exc)) from None
    if move == "RIII":
        return apply_rIII(d, tuple(site))
    raise MoveError(f"unknown move {move!r}; choose from RI, RI-, RII, RII-, RIII")


# ---------------------------------------------------------------------------
# closure analysis


@dataclass(frozen=True)
class TangleClosure:
    move: str
    matching: tuple[tuple[str, str], ...]
    case: str = ""

    def text(self) -> str:
        return " ".join(f"{a}-{b}" for a, b in self.matching)


@dataclass(frozen=True)
class MoveEffect:
    delta_c: int
    delta_sA: int
    delta_sB: int
    sA_before: int
    sA_after: int
    sB_before: int
    sB_after: int

    @property
    def delta_gT(self) -> Fraction:
        return Fraction(self.delta_c - self.delta_sA - self.delta_sB, 2)


@dataclass(frozen=True)
class _Tangle:
    xs: tuple
    partner: dict
    boundary: dict  # endpoint letter -> boundary node id


def _braid_tangle(word: Sequence[int], strands: int, names: dict) -> _Tangle:
    """Braid tangle; ``names`` maps ('bot'|'top', position) to endpoint letters."""
    dangling: list[Hashable] = [("bot", k) for k in range(strands)]
    partner: dict = {}
    xs = []
    for n, g in enumerate(word):
        k = abs(g)
        ne, nw, sw, se = ("x", n, "ne"), ("x", n, "nw"), ("x", n, "sw"), ("x", n, "se")
        xs.append((nw, sw, se, ne) if g > 0 else (ne, nw, sw, se))
        for pos, port in ((k - 1, sw), (k, se)):
            src = dangling[pos]
            partner[src] = port
            partner[port] = src
        dangling[k - 1] = nw
        dangling[k] = ne
    for pos in range(strands):
        top = ("top", pos)
        partner[dangling[pos]] = top
        partner[top] = dangling[pos]
    boundary = {letter: node for node, letter in names.items()}
    return _Tangle(tuple(xs), partner, boundary)


def _kink_tangle(entry: int, turn: int) -> _Tangle:
    q = [("k", s) for s in range(4)]
    e1 = entry
    e2 = (entry + 2) % 4
    e3 = (e2 + turn) % 4
    e4 = (e3 + 2) % 4
    partner = {}
    for u, v in ((("end", "a"), q[e1]), (q[e2], q[e3]), (q[e4], ("end", "b"))):
        partner[u] = v
        partner[v] = u
    return _Tangle((tuple(q),), partner, {"a": ("end", "a"), "b": ("end", "b")})


def _straight_tangle() -> _Tangle:
    partner = {("end", "a"): ("end", "b"), ("end", "b"): ("end", "a")}
    return _Tangle((), partner, {"a": ("end", "a"), "b": ("end", "b")})


_RII_NAMES = {("top", 0): "a", ("top", 1): "b", ("bot", 0): "c", ("bot", 1): "d"}
_RIII_NAMES = {("bot", 0): "a", ("bot", 1): "b", ("bot", 2): "c", ("top", 2): "d", ("top", 1): "e", ("top", 0): "f"}

# cyclic order of endpoints around the disk
_CYCLIC = {2: "ab", 4: "abdc", 6: "abcdef"}

RII_CASES = {(("a", "b"), ("c", "d")): "i", (("a", "c"), ("b", "d")): "ii"}
RIII_CASES = {
    (("a", "b"), ("c", "d"), ("e", "f")): "i",
    (("a", "b"), ("c", "f"), ("d", "e")): "ii",
    (("a", "d"), ("b", "c"), ("e", "f")): "iii",
    (("a", "f"), ("b", "c"), ("d", "e")): "iv",
    (("a", "f"), ("b", "e"), ("c", "d")): "v",
}


def _local_models(move: str) -> list[tuple[_Tangle, _Tangle]]:
    """(before, after) tangle pairs; the first move has one pair per kink type."""
    if move in ("RI", "RI-"):
        pairs = [(_straight_tangle(), _kink_tangle(e, t)) for e in (0, 1) for t in (1, -1)]
        return pairs if move == "RI" else [(b, a) for a, b in pairs]
    if move in ("RII", "RII-"):
        flat = _braid_tangle([], 2, _RII_NAMES)
        bigon = _braid_tangle([1, -1], 2, _RII_NAMES)
        return [(flat, bigon)] if move == "RII" else [(bigon, flat)]
    if move == "RIII":
        return [(_braid_tangle([1, 2, 1], 3, _RIII_NAMES), _braid_tangle([2, 1, 2], 3, _RIII_NAMES))]
    if move == "RIII-mirror":
        return [(_braid_tangle([-1, -2, -1], 3, _RIII_NAMES), _braid_tangle([-2, -1, -2], 3, _RIII_NAMES))]
    raise MoveError(f"unknown move {move!r}; choose from {MOVES}")


def _n_points(move: str) -> int:
    return {"RI": 2, "RI-": 2, "RII": 4, "RII-": 4, "RIII": 6, "RIII-mirror": 6}[move]


def _normalise_matching(matching) -> tuple[tuple[str, str], ...]:
    pairs = []
    for pair in matching:
        if isinstance(pair, str):
            pair = tuple(pair.replace("-", ""))
        a, b = sorted(pair)
        pairs.append((a, b))
    return tuple(sorted(pairs))


def is_planar_matching(matching, n: int) -> bool:
    order = _CYCLIC[n]
    pos = {ch: k for k, ch in enumerate(order)}
    pairs = _normalise_matching(matching)
    letters = sorted(ch for p in pairs for ch in p)
    if letters != sorted(order):
        return False
    spans = [tuple(sorted((pos[a], pos[b]))) for a, b in pairs]
    for (a1, b1) in spans:
        for (a2, b2) in spans:
            if a1 < a2 < b1 < b2:
                return False
    return True


def planar_matchings(n: int) -> list[tuple[tuple[str, str], ...]]:
    order = _CYCLIC[n]

    def rec(items):
        if not items:
            yield ()
            return
        first = items[0]
        for k in range(1, len(items), 2):
            inside, outside = items[1:k], items[k + 1:]
            for m1 in rec(inside):
                for m2 in rec(outside):
                    yield ((first, items[k]),) + m1 + m2

    return sorted({_normalise_matching(m) for m in rec(list(order))})


def case_name(move: str, matching) -> str:
    m = _normalise_matching(matching)
    if _n_points(move) == 4:
        return RII_CASES.get(m, "")
    if _n_points(move) == 6:
        return RIII_CASES.get(m, "")
    return "i"


def close_tangle(t: _Tangle, matching) -> Diagram:
    """Closed diagram: the tangle plus crossingless arcs realising ``matching`` outside."""
    joins = {}
    for a, b in _normalise_matching(matching):
        u, v = t.boundary[a], t.boundary[b]
        joins[u] = v
        joins[v] = u
    return assemble(list(t.xs), dict(t.partner), (), joins)


def _effect(before: Diagram, after: Diagram, after_B: Diagram | None = None, before_B: Diagram | None = None) -> MoveEffect:
    bB = before_B if before_B is not None else before
    aB = after_B if after_B is not None else after
    sA0, sA1 = all_A_circles(before), all_A_circles(after)
    sB0, sB1 = all_B_circles(bB), all_B_circles(aB)
    return MoveEffect(after.n - before.n, sA1 - sA0, sB1 - sB0, sA0, sA1, sB0, sB1)


def analyze_closure(move: str, closure, closure_B=None, variant: int = 0) -> MoveEffect:
    """Circle-count changes when the move happens inside a disk whose outside
    closes up as ``closure`` in the A-state (and ``closure_B`` in the B-state,
    defaulting to the same matching)."""
    if isinstance(closure, TangleClosure):
        move = closure.move
        closure = closure.matching
    n = _n_points(move)
    for m in (closure, closure_B if closure_B is not None else closure):
        if not is_planar_matching(m, n):
            raise MoveError(f"matching {m} is not a planar closure of {n} endpoints")
    models = _local_models(move)
    if not 0 <= variant < len(models):
        raise MoveError(f"variant {variant} out of range for {move}")
    tb, ta = models[variant]
    before, after = close_tangle(tb, closure), close_tangle(ta, closure)
    if closure_B is None:
        return _effect(before, after)
    return _effect(before, after, close_tangle(ta, closure_B), close_tangle(tb, closure_B))


def enumerate_closures(move: str) -> list[TangleClosure]:
    return [TangleClosure(move, m, case_name(move, m)) for m in planar_matchings(_n_points(move))]


def enumerate_decreasing_closures(move: str) -> list[TangleClosure]:
    """Closures (the same matching in both states) for which some model of the move lowers g_T(D)."""
    out = []
    for cl in enumerate_closures(move):
        for v in range(len(_local_models(move))):
            if analyze_closure(move, cl.matching, variant=v).delta_gT < 0:
                out.append(cl)
                break
    return out


def global_delta(move: str, closure, variant: int = 0) -> Fraction | None:
    """Turaev-genus change of the closed local diagrams computed by :mod:`turaev`.

    Returns ``None`` when a closed diagram splits, where the diagram genus
    formula does not apply.
    """
    matching = closure.matching if isinstance(closure, TangleClosure) else closure
    tb, ta = _local_models(move)[variant]
    try:
        g0 = turaev_genus_diagram(close_tangle(tb, matching)).g_T_diagram
        g1 = turaev_genus_diagram(close_tangle(ta, matching)).g_T_diagram
    except SplitDiagramError:
        return None
    return Fraction(g1 - g0)


def analysis_rows(move: str) -> list[dict]:
    rows = []
    for cl in enumerate_closures(move):
        for v in range(len(_local_models(move))):
            eff = analyze_closure(move, cl.matching, variant=v)
            rows.append(
                {
                    "closure": cl.text(),
                    "case": cl.case,
                    "variant": v,
                    "delta_c": eff.delta_c,
                    "delta_sA": eff.delta_sA,
                    "delta_sB": eff.delta_sB,
                    "delta_gT": str(eff.delta_gT),
                    "sB_before": eff.sB_before,
                    "sB_after": eff.sB_after,
                }
            )
    return rows
