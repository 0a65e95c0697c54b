"""Oriented link diagrams in planar diagram (PD) notation.

A crossing is written ``X[a,b,c,d]``: the four arc labels met when walking
counterclockwise around the crossing, starting with the incoming under-strand.
The under-strand therefore runs ``a -> c`` and the over-strand joins ``b`` and
``d``.  A crossing is positive when the over-strand runs ``d -> b``.

Every structural operation (smoothing, switching, local moves, connected
sums) goes through :func:`assemble`, which takes an unoriented port graph and
returns a freshly labelled, oriented :class:`Diagram`.  Ports are opaque
hashable ids; arcs join two ports, and "junction" ports belonging to deleted
crossings are threaded through according to a pairing.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import PDError

# slot pairings used when a crossing is deleted
A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((0, 3), (1, 2))
PASS_PAIRS = ((0, 2), (1, 3))


def _is_in_slot(slot: int, sign: int) -> bool:
    if slot == 0:
        return True
    if slot == 2:
        return False
    # positive: over-strand enters at slot 3, leaves at slot 1
    return (slot == 3) == (sign > 0)


@dataclass(frozen=True)
class Diagram:
    """An oriented link diagram.

    ``crossings`` holds PD 4-tuples (slot 0 is the incoming under-strand),
    ``signs`` the crossing signs and ``free_loops`` the number of crossingless
    circles.  ``regions`` is an optional per-crossing annotation (twist-region
    names for generated families); it does not take part in equality.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]
    free_loops: int = 0
    regions: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        xs = tuple(tuple(int(v) for v in x) for x in self.crossings)
        object.__setattr__(self, "crossings", xs)
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if self.regions is not None:
            object.__setattr__(self, "regions", tuple(self.regions))
            if len(self.regions) != len(xs):
                raise PDError("region annotation length differs from crossing count")
        if len(self.signs) != len(xs):
            raise PDError("one sign per crossing is required")
        if any(s not in (1, -1) for s in self.signs):
            raise PDError("crossing signs must be +1 or -1")
        if self.free_loops < 0:
            raise PDError("negative free loop count")
        if any(len(x) != 4 for x in xs):
            raise PDError("every crossing needs four slots")
        heads: Counter = Counter()
        tails: Counter = Counter()
        for x, sgn in zip(xs, self.signs):
            for slot, label in enumerate(x):
                (heads if _is_in_slot(slot, sgn) else tails)[label] += 1
        labels = set(heads) | set(tails)
        for label in labels:
            if heads[label] + tails[label] != 2:
                raise PDError(f"arc {label} appears {heads[label] + tails[label]} times (expected 2)")
            if heads[label] != 1:
                raise PDError(f"arc {label} is not consistently oriented")

    # basic queries -------------------------------------------------------
    @property
    def n(self) -> int:
        """Crossing count c(D)."""
        return len(self.crossings)

    def __len__(self):
        return len(self.crossings)

    @cached_property
    def occurrences(self) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
        """``label -> (tail_port, head_port)``; a port is ``(crossing, slot)``."""
        tail: dict[int, tuple[int, int]] = {}
        head: dict[int, tuple[int, int]] = {}
        for i, (x, sgn) in enumerate(zip(self.crossings, self.signs)):
            for s, label in enumerate(x):
                (head if _is_in_slot(s, sgn) else tail)[label] = (i, s)
        return {label: (tail[label], head[label]) for label in tail}

    @cached_property
    def partner(self) -> dict[tuple[int, int], tuple[int, int]]:
        out = {}
        for p, q in self.occurrences.values():
            out[p] = q
            out[q] = p
        return out

    def is_in(self, i: int, s: int) -> bool:
        return _is_in_slot(s, self.signs[i])

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Arc labels of each crossing-carrying component in traversal order.

        Components are sorted by their smallest label; free loops are not
        listed.
        """
        occ = self.occurrences
        seen: set[int] = set()
        comps = []
        for start in sorted(occ):
            if start in seen:
                continue
            comp = []
            label = start
            while label not in seen:
                seen.add(label)
                comp.append(label)
                i, s = occ[label][1]
                label = self.crossings[i][(s + 2) % 4]
            comps.append(tuple(comp))
        comps.sort(key=min)
        return tuple(comps)

    def component_of_label(self) -> dict[int, int]:
        return {label: k for k, comp in enumerate(self.components) for label in comp}

    def count_components(self) -> int:
        return len(self.components) + self.free_loops

    def is_alternating(self) -> bool:
        for (i, s), (j, t) in self.occurrences.values():
            if s % 2 == t % 2:
                return False
        return True

    def pd_text(self) -> str:
        return to_pd_text(self)

    def __str__(self):
        return to_pd_text(self)


# ---------------------------------------------------------------------------
# assembling diagrams from port graphs


def assemble(
    xs: Sequence[Sequence[Hashable]],
    partner: Mapping[Hashable, Hashable],
    directed: Iterable[tuple[Hashable, Hashable]] = (),
    joins: Mapping[Hashable, Hashable] | None = None,
    free_loops: int = 0,
    regions: Sequence | None = None,
) -> Diagram:
    """Build an oriented, freshly labelled diagram from a port graph.

    ``xs`` lists live crossings as four port ids in counterclockwise order with
    the under-strand on positions 0 and 2.  ``partner`` is the symmetric arc
    relation.  Ports absent from ``xs`` are junctions and must appear in
    ``joins``; a walk entering a junction leaves through its joined port.
    ``directed`` holds ``(u, v)`` pairs recording a preferred direction
    ``u -> v`` for arcs; each new component takes the orientation that agrees
    with the majority of these hints.
    """
    joins = joins or {}
    pref = set(directed)
    live: dict[Hashable, tuple[int, int]] = {}
    for k, x in enumerate(xs):
        if len(x) != 4:
            raise PDError("crossing needs four ports")
        for s, p in enumerate(x):
            live[p] = (k, s)

    def vote(u, v) -> int:
        if (u, v) in pref:
            return 1
        if (v, u) in pref:
            return -1
        return 0

    new_partner: dict[tuple[int, int], tuple[int, int]] = {}
    votes: dict[tuple[tuple[int, int], tuple[int, int]], int] = {}
    visited_junctions: set = set()
    for p, (k, s) in live.items():
        if (k, s) in new_partner:
            continue
        total = 0
        cur = p
        q = partner[cur]
        total += vote(cur, q)
        steps = 0
        while q not in live:
            visited_junctions.add(q)
            r = joins[q]
            visited_junctions.add(r)
            nxt = partner[r]
            total += vote(r, nxt)
            q = nxt
            steps += 1
            if steps > 4 * len(partner) + 4:
                raise PDError("junction walk does not terminate")
        a, b = live[p], live[q]
        new_partner[a] = b
        new_partner[b] = a
        votes[(a, b)] = total
        votes[(b, a)] = -total

    loops = free_loops
    for j in joins:
        if j in visited_junctions:
            continue
        cur = j
        while True:
            visited_junctions.add(cur)
            r = joins[cur]
            visited_junctions.add(r)
            cur = partner[r]
            if cur in visited_junctions:
                break
        loops += 1

    # orient components and label arcs
    label_of: dict[tuple[int, int], int] = {}
    is_in: dict[tuple[int, int], bool] = {}
    next_label = 1
    for k in range(len(xs)):
        for s in range(4):
            if (k, s) in label_of:
                continue
            start = (k, s)
            arcs = []
            total = 0
            cur = start
            while True:
                nb = new_partner[cur]
                arcs.append((cur, nb))
                total += votes[(cur, nb)]
                cur = (nb[0], (nb[1] + 2) % 4)
                if cur == start:
                    break
            if total < 0:
                arcs = [(b, a) for a, b in reversed(arcs)]
            for tail, head in arcs:
                label_of[tail] = label_of[head] = next_label
                is_in[tail] = False
                is_in[head] = True
                next_label += 1

    crossings = []
    signs = []
    for k in range(len(xs)):
        labels = [label_of[(k, s)] for s in range(4)]
        if is_in[(k, 0)]:
            crossings.append(tuple(labels))
            signs.append(1 if is_in[(k, 3)] else -1)
        else:
            crossings.append((labels[2], labels[3], labels[0], labels[1]))
            signs.append(1 if is_in[(k, 1)] else -1)
    return Diagram(tuple(crossings), tuple(signs), loops, tuple(regions) if regions is not None else None)


def port_graph(d: Diagram) -> tuple[dict, set]:
    """The arc relation on ports ``(crossing, slot)`` and the oriented arcs of ``d``."""
    directed = {(tail, head) for tail, head in d.occurrences.values()}
    return dict(d.partner), directed


def rebuild(d: Diagram, deleted: Mapping[int, Sequence[tuple[int, int]]], extra_loops: int = 0) -> Diagram:
    """Delete crossings, threading each one's slots together by the given pairing."""
    partner, directed = port_graph(d)
    joins = {}
    for i, pairs in deleted.items():
        for s, t in pairs:
            joins[(i, s)] = (i, t)
            joins[(i, t)] = (i, s)
    keep = [i for i in range(d.n) if i not in deleted]
    xs = [tuple((i, s) for s in range(4)) for i in keep]
    regions = [d.regions[i] for i in keep] if d.regions is not None else None
    return assemble(xs, partner, directed, joins, d.free_loops + extra_loops, regions)


# ---------------------------------------------------------------------------
# parsing and printing

_TOKEN = re.compile(r"([XO])\[([^\]]*)\]")


def parse_orientation(text: str) -> dict[int, int]:
    out = {}
    for item in re.split(r"[,\s]+", text.strip()):
        if not item:
            continue
        m = re.fullmatch(r"c(\d+)=([+-])", item)
        if not m:
            raise PDError(f"bad orientation override {item!r}")
        out[int(m.group(1))] = 1 if m.group(2) == "+" else -1
    return out


def parse_pd(text: str, orient: str | Mapping[int, int] | None = None) -> Diagram:
    """Parse PD text into a validated :class:`Diagram`.

    Accepted tokens are ``X[i,j,k,l]`` and ``O[m]`` (a crossingless loop),
    separated by whitespace or commas, optionally wrapped in ``PD[...]``.  A
    line ``orient: c1=+,c2=-`` reverses the listed components relative to the
    orientation read off the code (components are numbered by smallest arc
    label).  ``orient`` overrides given as an argument are applied after the
    header.
    """
    overrides: dict[int, int] = {}
    body_lines = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if stripped.lower().startswith("orient:"):
            overrides.update(parse_orientation(stripped.split(":", 1)[1]))
            continue
        body_lines.append(line)
    body = " ".join(body_lines).strip()
    if body.startswith("PD[") and body.endswith("]"):
        body = body[3:-1]

    raw: list[tuple[int, int, int, int]] = []
    loop_labels: list[int] = []
    pos = 0
    for m in _TOKEN.finditer(body):
        gap = body[pos:m.start()]
        if gap.strip(" \t\n,"):
            raise PDError(f"malformed token near {gap.strip()!r}")
        pos = m.end()
        parts = [p.strip() for p in m.group(2).split(",")]
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise PDError(f"non-integer label in {m.group(0)!r}") from None
        if any(v <= 0 for v in vals):
            raise PDError(f"labels must be positive in {m.group(0)!r}")
        if m.group(1) == "X":
            if len(vals) != 4:
                raise PDError(f"{m.group(0)!r} needs four labels")
            raw.append(tuple(vals))
        else:
            if len(vals) != 1:
                raise PDError(f"{m.group(0)!r} needs one label")
            loop_labels.append(vals[0])
    if body[pos:].strip(" \t\n,"):
        raise PDError(f"malformed token near {body[pos:].strip()!r}")

    d = from_pd(raw, len(loop_labels), loop_labels=loop_labels)
    if not is_planar(d):
        raise PDError("the code does not describe a planar diagram")
    if isinstance(orient, str):
        overrides.update(parse_orientation(orient))
    elif orient:
        overrides.update(orient)
    if overrides:
        d = reorient(d, [k - 1 for k, v in overrides.items() if v < 0], _check=len(d.components))
    return d


def from_pd(
    raw: Sequence[Sequence[int]],
    free_loops: int = 0,
    loop_labels: Sequence[int] = (),
    regions: Sequence | None = None,
) -> Diagram:
    """Orient a raw PD code (slot 0 = incoming under-strand) and compute signs.

    Over-strand directions are propagated along components from the
    under-crossings.  A component that only passes over crossings is oriented
    so that arc labels increase from its smallest label.
    """
    raw = [tuple(int(v) for v in x) for x in raw]
    counts = Counter(v for x in raw for v in x)
    for label, k in sorted(counts.items()):
        if k != 2:
            raise PDError(f"arc {label} appears {k} times (expected 2)")
    for label in loop_labels:
        if label in counts:
            raise PDError(f"free loop label {label} is also used by a crossing")
    if len(set(loop_labels)) != len(loop_labels):
        raise PDError("duplicate free loop label")

    where: dict[int, list[tuple[int, int]]] = {}
    for i, x in enumerate(raw):
        for s, v in enumerate(x):
            where.setdefault(v, []).append((i, s))

    def other(port):
        i, s = port
        a, b = where[raw[i][s]]
        return b if a == port else a

    # traverse each component from an arbitrary port; record passes
    entered: dict[tuple[int, int], bool] = {}
    seen: set[tuple[int, int]] = set()
    for i in range(len(raw)):
        for s in range(4):
            if (i, s) in seen:
                continue
            # walk leaving via (i, s)
            passes = []
            cur = (i, s)
            while True:
                nb = other(cur)
                passes.append((cur, nb))
                seen.add(cur)
                seen.add(nb)
                cur = (nb[0], (nb[1] + 2) % 4)
                if cur == (i, s):
                    break
            forward = backward = 0
            for tail, head in passes:
                if head[1] == 0 or tail[1] == 2:
                    forward += 1
                if head[1] == 2 or tail[1] == 0:
                    backward += 1
            if forward and backward:
                raise PDError("non-realizable orientation: a component enters an under-strand from both sides")
            if forward:
                direction = 1
            elif backward:
                direction = -1
            else:
                labels = [raw[t[0]][t[1]] for t, _ in passes]
                k = labels.index(min(labels))
                nxt = labels[(k + 1) % len(labels)]
                prv = labels[(k - 1) % len(labels)]
                direction = 1 if nxt <= prv else -1
            for tail, head in passes:
                if direction > 0:
                    entered[head] = True
                    entered[tail] = False
                else:
                    entered[head] = False
                    entered[tail] = True

    signs = []
    for i in range(len(raw)):
        signs.append(1 if entered[(i, 3)] else -1)
    return Diagram(tuple(raw), tuple(signs), free_loops, regions)


def to_pd_text(d: Diagram) -> str:
    parts = [f"X[{a},{b},{c},{e}]" for a, b, c, e in d.crossings]
    top = max((v for x in d.crossings for v in x), default=0)
    parts += [f"O[{top + k + 1}]" for k in range(d.free_loops)]
    return " ".join(parts)


# ---------------------------------------------------------------------------
# basic operations


def writhe(d: Diagram) -> int:
    return d.writhe


def count_components(d: Diagram) -> int:
    return d.count_components()


def _check_index(d: Diagram, i: int) -> None:
    if not 0 <= i < d.n:
        raise IndexError(f"crossing index {i} out of range for {d.n} crossings")


def smooth(d: Diagram, i: int, resolution: str) -> Diagram:
    """Replace crossing ``i`` by its A- or B-smoothing.

    The A-smoothing joins the regions swept by turning the over-strand
    counterclockwise, which in PD slots pairs ``(0,1)`` and ``(2,3)``.
    Circles left without crossings become free loops.
    """
    _check_index(d, i)
    res = resolution.upper()
    if res in ("A", "0"):
        pairs = A_PAIRS
    elif res in ("B", "1", "INF"):
        pairs = B_PAIRS
    else:
        raise ValueError(f"unknown resolution {resolution!r}")
    return rebuild(d, {i: pairs})


def _switched(x: tuple[int, int, int, int], sign: int) -> tuple[tuple[int, int, int, int], int]:
    a, b, c, e = x
    if sign > 0:
        return (e, a, b, c), -1
    return (b, c, e, a), 1


def switch_crossing(d: Diagram, i: int) -> Diagram:
    """Exchange over- and under-strand at crossing ``i`` (labels unchanged)."""
    _check_index(d, i)
    xs = list(d.crossings)
    signs = list(d.signs)
    xs[i], signs[i] = _switched(xs[i], signs[i])
    return Diagram(tuple(xs), tuple(signs), d.free_loops, d.regions)


def mirror(d: Diagram) -> Diagram:
    xs, signs = [], []
    for x, s in zip(d.crossings, d.signs):
        y, t = _switched(x, s)
        xs.append(y)
        signs.append(t)
    return Diagram(tuple(xs), tuple(signs), d.free_loops, d.regions)


def reorient(d: Diagram, reversed_components: Iterable[int], _check: int | None = None) -> Diagram:
    """Reverse the given components (0-based, ordered as ``d.components``)."""
    rev = set(reversed_components)
    ncomp = len(d.components)
    for k in rev:
        if not 0 <= k < ncomp:
            raise PDError(f"component c{k + 1} does not exist (diagram has {ncomp})")
    comp_of = d.component_of_label()
    xs, signs = [], []
    for x, sgn in zip(d.crossings, d.signs):
        under_rev = comp_of[x[0]] in rev
        over_rev = comp_of[x[1]] in rev
        if under_rev:
            x = (x[2], x[3], x[0], x[1])
        xs.append(x)
        signs.append(-sgn if under_rev != over_rev else sgn)
    return Diagram(tuple(xs), tuple(signs), d.free_loops, d.regions)


def connected_sum(d1: Diagram, d2: Diagram) -> Diagram:
    """Band two diagrams together along their smallest-labelled arcs, keeping orientations."""
    if d1.n == 0 and d1.free_loops == 0 or d2.n == 0 and d2.free_loops == 0:
        raise ValueError("connected sum needs nonempty diagrams")
    if d1.n == 0:
        return Diagram(d2.crossings, d2.signs, d2.free_loops + d1.free_loops - 1, d2.regions)
    if d2.n == 0:
        return Diagram(d1.crossings, d1.signs, d1.free_loops + d2.free_loops - 1, d1.regions)
    partner = {}
    directed = set()
    for tag, d in (("L", d1), ("R", d2)):
        for tail, head in d.occurrences.values():
            t, h = (tag,) + tail, (tag,) + head
            partner[t] = h
            partner[h] = t
            directed.add((t, h))
    t1, h1 = (("L",) + p for p in d1.occurrences[min(d1.occurrences)])
    t2, h2 = (("R",) + p for p in d2.occurrences[min(d2.occurrences)])
    directed -= {(t1, h1), (t2, h2)}
    partner[t1], partner[h2] = h2, t1
    partner[t2], partner[h1] = h1, t2
    directed |= {(t1, h2), (t2, h1)}
    xs = [tuple(("L", i, s) for s in range(4)) for i in range(d1.n)]
    xs += [tuple(("R", i, s) for s in range(4)) for i in range(d2.n)]
    regions = None
    if d1.regions is not None or d2.regions is not None:
        regions = list(d1.regions or [None] * d1.n) + list(d2.regions or [None] * d2.n)
    return assemble(xs, partner, directed, None, d1.free_loops + d2.free_loops, regions)


def disjoint_union(d1: Diagram, d2: Diagram) -> Diagram:
    shift = max((v for x in d1.crossings for v in x), default=0)
    xs = d1.crossings + tuple(tuple(v + shift for v in x) for x in d2.crossings)
    regions = None
    if d1.regions is not None or d2.regions is not None:
        regions = tuple(d1.regions or [None] * d1.n) + tuple(d2.regions or [None] * d2.n)
    return Diagram(xs, d1.signs + d2.signs, d1.free_loops + d2.free_loops, regions)


# ---------------------------------------------------------------------------
# combinatorial structure


def faces(d: Diagram) -> list[list[tuple[int, int]]]:
    """Faces as cycles of darts.

    A dart ``(i, s)`` is the arc leaving crossing ``i`` through slot ``s``;
    along a face cycle the face lies on the left.
    """
    partner = d.partner
    seen: set[tuple[int, int]] = set()
    out = []
    for i in range(d.n):
        for s in range(4):
            if (i, s) in seen:
                continue
            face = []
            cur = (i, s)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                j, t = partner[cur]
                cur = (j, (t - 1) % 4)
            out.append(face)
    return out


def crossing_pieces(d: Diagram) -> list[list[int]]:
    """Crossing indices grouped by connected piece of the diagram's projection."""
    parent = list(range(d.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, _), (j, _) in d.occurrences.values():
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(d.n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def is_split(d: Diagram) -> bool:
    """True when the projection is disconnected (free loops count as pieces)."""
    pieces = len(crossing_pieces(d)) + d.free_loops
    return pieces > 1


def pieces(d: Diagram) -> list[Diagram]:
    """Connected crossing-carrying pieces; free loops are dropped."""
    groups = crossing_pieces(d)
    if len(groups) <= 1:
        return [Diagram(d.crossings, d.signs, 0, d.regions)] if d.n else []
    out = []
    for g in groups:
        xs = [d.crossings[i] for i in g]
        sg = [d.signs[i] for i in g]
        rg = [d.regions[i] for i in g] if d.regions is not None else None
        out.append(Diagram(tuple(xs), tuple(sg), 0, rg))
    return out


def _piece_code(d: Diagram) -> tuple:
    n = d.n
    nbr = [[d.partner[(i, s)] for s in range(4)] for i in range(n)]
    best = None
    for i0 in range(n):
        for s0 in range(4):
            ids = {i0: 0}
            order = [i0]
            frames = [s0]
            code = []
            q = 0
            worse = False
            while q < len(order):
                x = order[q]
                f = frames[q]
                row = [f & 1]
                for k in range(4):
                    j, t = nbr[x][(f + k) & 3]
                    if j not in ids:
                        ids[j] = len(order)
                        order.append(j)
                        frames.append(t)
                    jj = ids[j]
                    row.append(jj * 4 + ((t - frames[jj]) & 3))
                row = tuple(row)
                if best is not None and not worse:
                    ref = best[q]
                    if row > ref:
                        worse = True
                        break
                    if row < ref:
                        best = None
                code.append(row)
                q += 1
            if worse:
                continue
            code = tuple(code)
            if best is None or code < best:
                best = code
    return best


def canonical_code(d: Diagram) -> tuple:
    """A key equal for diagrams that agree up to relabelling, crossing order,
    component orientation and isotopy of the sphere (reflections excluded).

    Each connected piece is encoded by the lexicographically smallest
    breadth-first traversal over all starting darts; split pieces are sorted.
    """
    codes = sorted(_piece_code(p) for p in pieces(d))
    return (tuple(codes), d.free_loops)


def oriented_code(d: Diagram) -> tuple:
    """Like :func:`canonical_code` but sensitive to orientation (used for equality tests)."""
    n = d.n
    if n == 0:
        return ((), d.free_loops)
    codes = []
    for p in pieces(d):
        nbr = [[p.partner[(i, s)] for s in range(4)] for i in range(p.n)]
        best = None
        for i0 in range(p.n):
            ids = {i0: 0}
            order = [i0]
            code = []
            q = 0
            while q < len(order):
                x = order[q]
                row = [p.signs[x]]
                for s in range(4):
                    j, t = nbr[x][s]
                    if j not in ids:
                        ids[j] = len(order)
                        order.append(j)
                    row.append(ids[j] * 4 + t)
                code.append(tuple(row))
                q += 1
            code = tuple(code)
            if best is None or code < best:
                best = code
        codes.append(best)
    return (tuple(sorted(codes)), d.free_loops)


def longest_bridge(d: Diagram) -> int:
    """Length of the longest run of consecutive over-passes along any component.

    A component that passes over every one of its crossings (possible only in
    split situations) counts its full length.
    """
    best = 0
    for comp in d.components:
        passes = []
        occ = d.occurrences
        for label in comp:
            i, s = occ[label][1]
            passes.append(s % 2 == 1)
        if all(passes):
            best = max(best, len(passes))
            continue
        k = passes.index(False)
        rot = passes[k:] + passes[:k]
        run = 0
        for over in rot:
            run = run + 1 if over else 0
            best = max(best, run)
    return best


# ---------------------------------------------------------------------------
# standard constructions


def braid_closure(word: Sequence[int], strands: int | None = None) -> Diagram:
    """Closure of a braid word; ``k`` is the generator crossing positions
    ``k-1`` and ``k`` (positive: the left strand passes over), ``-k`` its inverse.

    Strands run upward, so generator ``k`` gives a positive crossing.
    """
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    dangling: list[Hashable] = [("bot", k) for k in range(strands)]
    partner: dict = {}
    directed = set()
    joins = {}
    xs = []
    for n, g in enumerate(word):
        k = abs(g)
        if not 1 <= k < strands:
            raise ValueError(f"generator {g} out of range for {strands} strands")
        ne, nw, sw, se = ("x", n, "ne"), ("x", n, "nw"), ("x", n, "sw"), ("x", n, "se")
        xs.append((nw, sw, se, ne) if g > 0 else (ne, nw, sw, se))
        for pos, port in ((k - 1, sw), (k, se)):
            src = dangling[pos]
            partner[src] = port
            partner[port] = src
            directed.add((src, port))
        dangling[k - 1] = nw
        dangling[k] = ne
    for pos in range(strands):
        top = ("top", pos)
        src = dangling[pos]
        partner[src] = top
        partner[top] = src
        directed.add((src, top))
        joins[top] = ("bot", pos)
        joins[("bot", pos)] = top
    return assemble(xs, partner, directed, joins)


def unknot() -> Diagram:
    return Diagram((), (), 1)


def named_diagram(name: str) -> Diagram:
    """A few standard diagrams used in tests and on the command line."""
    table = {
        "unknot": unknot,
        "trefoil": lambda: braid_closure([1, 1, 1]),
        "right_trefoil": lambda: braid_closure([1, 1, 1]),
        "left_trefoil": lambda: braid_closure([-1, -1, -1]),
        "figure_eight": lambda: braid_closure([1, -2, 1, -2]),
        "hopf": lambda: braid_closure([1, 1]),
        "positive_kink": lambda: from_pd([(1, 1, 2, 2)]),
        "negative_kink": lambda: from_pd([(1, 2, 2, 1)]),
        "unlink2": lambda: Diagram((), (), 2),
    }
    try:
        return table[name]()
    except KeyError:
        raise KeyError(f"unknown diagram {name!r}; choose from {sorted(table)}") from None


# ---------------------------------------------------------------------------
# kinks and bigons


def kink_sites(d: Diagram) -> list[int]:
    """Crossings with two adjacent slots joined by a single arc (removable by RI)."""
    out = []
    for i in range(d.n):
        for s in range(4):
            j, t = d.partner[(i, s)]
            if j == i and (t - s) % 4 in (1, 3):
                out.append(i)
                break
    return out


def remove_kink(d: Diagram, i: int) -> Diagram:
    if i not in kink_sites(d):
        raise ValueError(f"crossing {i} is not a kink")
    return rebuild(d, {i: PASS_PAIRS})


def bigons(d: Diagram, reducible: bool | None = None) -> list[tuple[int, int]]:
    """Pairs of distinct crossings bounding a two-sided face.

    With ``reducible=True`` only bigons where one strand passes over at both
    corners are returned (removable by an inverse second move); with
    ``reducible=False`` only the alternating ones.
    """
    out = []
    seen = set()
    for face in faces(d):
        if len(face) != 2:
            continue
        (i, s), (j, _) = face
        if i == j:
            continue
        _, t = d.partner[(i, s)]
        removable = s % 2 == t % 2
        if reducible is not None and removable != reducible:
            continue
        key = (min(i, j), max(i, j))
        if key not in seen:
            seen.add(key)
            out.append(key)
    return out


def remove_bigon(d: Diagram, i: int, j: int) -> Diagram:
    if (min(i, j), max(i, j)) not in bigons(d, reducible=True):
        raise ValueError(f"crossings {i} and {j} do not bound a reducible bigon")
    return rebuild(d, {i: PASS_PAIRS, j: PASS_PAIRS})


def is_planar(d: Diagram) -> bool:
    """Euler check: each connected piece with c crossings must have c + 2 faces."""
    return len(faces(d)) == d.n + 2 * len(crossing_pieces(d))
