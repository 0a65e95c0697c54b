"""Kauffman states, state circles, the bracket polynomial and degree bounds.

Normalization: ``<D> = sum_s A^{sgn s} d^{|s|-1}`` with ``d = -A^2 - A^-2``, so
the crossingless unknot has bracket 1.  The un-normalized sum (exponent
``|s|``) is ``d * <D>``; its extreme degrees are two more (resp. less) than
those of ``<D>``.  :func:`degree_bounds` reports ``M(D)`` and ``m(D)`` for the
un-normalized sum, which is where ``c + 2|s_A|`` and ``-c - 2|s_B|`` are sharp.

The state sum is evaluated over all ``2^c`` states with numpy: each state is a
permutation of arc ends, and its cycles (two per state circle) are counted
by pointer doubling.  States are processed in chunks and tallied into a
histogram keyed by (number of B-choices, circles); the polynomial is then
assembled with Python integers, so the result is exact and independent of
chunking.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .algebra import LaurentPoly
from .diagram import A_PAIRS, B_PAIRS, Diagram, is_split
from .errors import BudgetExceeded, SplitDiagramError

DEFAULT_BUDGET = 24
CHUNK = 1 << 15

DELTA = LaurentPoly({2: -1, -2: -1})


@dataclass(frozen=True)
class KauffmanState:
    """One A/B choice per crossing; ``choices[i] == 1`` means B at crossing ``i``."""

    choices: tuple[int, ...]

    @classmethod
    def from_int(cls, bits: int, n: int) -> "KauffmanState":
        return cls(tuple((bits >> i) & 1 for i in range(n)))

    @classmethod
    def parse(cls, choices) -> "KauffmanState":
        if isinstance(choices, KauffmanState):
            return choices
        if isinstance(choices, str):
            return cls(tuple(0 if ch in "Aa0" else 1 for ch in choices))
        return cls(tuple(int(bool(b)) for b in choices))

    @classmethod
    def all_A(cls, n: int) -> "KauffmanState":
        return cls((0,) * n)

    @classmethod
    def all_B(cls, n: int) -> "KauffmanState":
        return cls((1,) * n)

    def __len__(self):
        return len(self.choices)

    @property
    def n_B(self) -> int:
        return sum(self.choices)

    @property
    def sgn(self) -> int:
        return len(self.choices) - 2 * self.n_B


# ---------------------------------------------------------------------------
# circles of a single state (reference implementation)


def _uf_circles(d: Diagram, state: KauffmanState) -> tuple[dict[int, int], int]:
    labels = sorted({v for x in d.crossings for v in x})
    parent = {v: v for v in labels}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, b in zip(d.crossings, state.choices):
        for s, t in (B_PAIRS if b else A_PAIRS):
            ra, rb = find(x[s]), find(x[t])
            if ra != rb:
                parent[ra] = rb
    roots = {}
    circle_of = {}
    for v in labels:
        r = find(v)
        if r not in roots:
            roots[r] = len(roots)
        circle_of[v] = roots[r]
    return circle_of, len(roots)


def state_circles(d: Diagram, state) -> int:
    """Number of circles ``|s(D)|`` after smoothing every crossing per ``state``."""
    st = KauffmanState.parse(state)
    if len(st) != d.n:
        raise ValueError(f"state has {len(st)} choices but diagram has {d.n} crossings")
    _, k = _uf_circles(d, st)
    return k + d.free_loops


@dataclass(frozen=True)
class StateGraph:
    """Vertices are state circles, one edge per crossing joining the circles at its trace."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    @property
    def loop_edges(self) -> tuple[int, ...]:
        return tuple(i for i, (a, b) in enumerate(self.edges) if a == b)

    def has_loop(self) -> bool:
        return any(a == b for a, b in self.edges)


def state_graph(d: Diagram, state) -> StateGraph:
    st = KauffmanState.parse(state)
    if len(st) != d.n:
        raise ValueError(f"state has {len(st)} choices but diagram has {d.n} crossings")
    circle_of, k = _uf_circles(d, st)
    edges = []
    for x, b in zip(d.crossings, st.choices):
        # slots 0 and 2 always land on the two sides of the trace
        edges.append((circle_of[x[0]], circle_of[x[2]]) if not b else (circle_of[x[0]], circle_of[x[1]]))
    return StateGraph(k + d.free_loops, tuple(edges))


def is_A_adequate(d: Diagram) -> bool:
    return not state_graph(d, KauffmanState.all_A(d.n)).has_loop()


def is_B_adequate(d: Diagram) -> bool:
    return not state_graph(d, KauffmanState.all_B(d.n)).has_loop()


def is_adequate(d: Diagram) -> bool:
    return is_A_adequate(d) and is_B_adequate(d)


def all_A_circles(d: Diagram) -> int:
    return state_circles(d, KauffmanState.all_A(d.n))


def all_B_circles(d: Diagram) -> int:
    return state_circles(d, KauffmanState.all_B(d.n))


# ---------------------------------------------------------------------------
# vectorised state sum


def _half_edge_tables(d: Diagram):
    """Arc ends as integers 2*(label index) + (0 tail | 1 head) and their joins."""
    occ = d.occurrences
    index = {label: k for k, label in enumerate(sorted(occ))}
    at = {}
    for label, (tail, head) in occ.items():
        at[tail] = 2 * index[label]
        at[head] = 2 * index[label] + 1
    n_half = 2 * len(occ)
    join_a = np.empty(n_half, dtype=np.int16)
    join_b = np.empty(n_half, dtype=np.int16)
    cross = np.empty(n_half, dtype=np.int64)
    for i in range(d.n):
        for pairs, table in ((A_PAIRS, join_a), (B_PAIRS, join_b)):
            for s, t in pairs:
                table[at[(i, s)]] = at[(i, t)]
                table[at[(i, t)]] = at[(i, s)]
        for s in range(4):
            cross[at[(i, s)]] = i
    # following an arc end to its join and then along the joined arc
    return join_a ^ 1, join_b ^ 1, cross


def _count_cycles(nxt: np.ndarray) -> np.ndarray:
    """Number of cycles of each row permutation, via min-label pointer doubling."""
    rows, n = nxt.shape
    label = np.broadcast_to(np.arange(n, dtype=nxt.dtype), (rows, n)).copy()
    steps = max(1, int(n - 1).bit_length())
    for _ in range(steps):
        label = np.minimum(label, np.take_along_axis(label, nxt, axis=1))
        nxt = np.take_along_axis(nxt, nxt, axis=1)
    return (label == np.arange(n, dtype=label.dtype)).sum(axis=1)


def state_histogram(
    d: Diagram,
    classes: Sequence[int] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Counter:
    """Tally states by (B-choice count per crossing class, circle count).

    ``classes[i]`` assigns crossing ``i`` to a class ``0..K-1``; without it all
    crossings share one class.  Keys are ``(counts_tuple, circles)`` where
    circles include free loops.
    """
    n = d.n
    if n > budget:
        raise BudgetExceeded(f"{n} crossings exceeds the state-sum budget of {budget}")
    if classes is None:
        classes = [0] * n
    n_classes = max(classes, default=-1) + 1
    if n == 0:
        return Counter({((0,) * n_classes, d.free_loops): 1})
    step_a, step_b, cross = _half_edge_tables(d)
    class_masks = [sum(1 << i for i in range(n) if classes[i] == k) for k in range(n_classes)]
    sizes = [bin(m).count("1") for m in class_masks]
    radix = [s + 1 for s in sizes]
    hist: Counter = Counter()
    total = 1 << n
    shifts = np.arange(n, dtype=np.int64)
    class_arr = np.asarray(classes, dtype=np.int64)
    for start in range(0, total, CHUNK):
        states = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
        bits = ((states[:, None] >> shifts[None, :]) & 1).astype(np.int16)
        choose = bits[:, cross].astype(bool)
        nxt = np.where(choose, step_b[None, :], step_a[None, :]).astype(np.int64)
        circles = _count_cycles(nxt) // 2 + d.free_loops
        # combined key: class counts in mixed radix, then circles
        key = np.zeros(len(states), dtype=np.int64)
        for k in range(n_classes):
            cnt = bits[:, class_arr == k].sum(axis=1, dtype=np.int64)
            key = key * radix[k] + cnt
        key = key * (2 * n + 2 + d.free_loops) + circles
        uniq, counts = np.unique(key, return_counts=True)
        for kk, cc in zip(uniq.tolist(), counts.tolist()):
            hist[kk] += cc
    out: Counter = Counter()
    base = 2 * n + 2 + d.free_loops
    for kk, cc in hist.items():
        circles = kk % base
        kk //= base
        counts = []
        for k in reversed(range(n_classes)):
            counts.append(kk % radix[k])
            kk //= radix[k]
        out[(tuple(reversed(counts)), circles)] += cc
    return out


def _poly_from_histogram(n: int, hist: Mapping, shift_circles: int) -> LaurentPoly:
    """``sum count * A^{n - 2 nB} * d^{circles + shift_circles}``."""
    powers: dict[int, LaurentPoly] = {}

    def dpow(k):
        if k < 0:
            raise ValueError("negative power of the loop value")
        if k not in powers:
            powers[k] = DELTA ** k
        return powers[k]

    terms: Counter = Counter()
    # group by circles to multiply each power of d once
    by_circles: dict[int, Counter] = {}
    for (counts, circles), cc in hist.items():
        nb = sum(counts)
        by_circles.setdefault(circles, Counter())[n - 2 * nb] += cc
    for circles, mono in sorted(by_circles.items()):
        poly = LaurentPoly(dict(mono)) * dpow(circles + shift_circles)
        for e, c in poly.terms.items():
            terms[e] += c
    return LaurentPoly(dict(terms))


def bracket(d: Diagram, budget: int = DEFAULT_BUDGET) -> LaurentPoly:
    """Normalized Kauffman bracket (``<unknot> = 1``) by full state enumeration."""
    if d.n == 0 and d.free_loops == 0:
        raise ValueError("the empty diagram has no bracket")
    hist = state_histogram(d, budget=budget)
    return _poly_from_histogram(d.n, hist, -1)


def bracket_reference(d: Diagram, budget: int = 16) -> LaurentPoly:
    """Sequential state sum with union-find circle counting (slow; used as a cross-check)."""
    if d.n > budget:
        raise BudgetExceeded(f"{d.n} crossings exceeds the reference budget of {budget}")
    if d.n == 0 and d.free_loops == 0:
        raise ValueError("the empty diagram has no bracket")
    hist: Counter = Counter()
    for bits in range(1 << d.n):
        st = KauffmanState.from_int(bits, d.n)
        hist[((st.n_B,), state_circles(d, st))] += 1
    return _poly_from_histogram(d.n, hist, -1)


# ---------------------------------------------------------------------------
# degree bounds


@dataclass(frozen=True)
class DegreeBounds:
    M: int
    m: int
    M_J: Fraction
    m_J: Fraction
    sA: int
    sB: int
    writhe: int

    def as_tuple(self):
        return (self.M, self.m, self.M_J, self.m_J)


def degree_bounds(d: Diagram) -> DegreeBounds:
    """``M(D) = c + 2|s_A|`` and ``m(D) = -c - 2|s_B|`` for the un-normalized sum.

    ``M_J`` and ``m_J`` bound the Jones polynomial computed from the
    normalized bracket: ``M_J = -(m+2)/4 + 3w/4`` and ``m_J = -(M-2)/4 + 3w/4``.
    """
    if is_split(d):
        raise SplitDiagramError("degree bounds need a connected diagram")
    c = d.n
    sA = all_A_circles(d)
    sB = all_B_circles(d)
    w = d.writhe
    M = c + 2 * sA
    m = -c - 2 * sB
    M_J = Fraction(-(m + 2), 4) + Fraction(3 * w, 4)
    m_J = Fraction(-(M - 2), 4) + Fraction(3 * w, 4)
    return DegreeBounds(M, m, M_J, m_J, sA, sB, w)


# ---------------------------------------------------------------------------
# grouped partial sums for the five-region family

REGION_NAMES = ("r", "s", "t", "u", "v")

GROUPINGS = ("S1", "S2", "S3", "S4", "Sbar1", "Sbar2", "Sbar3", "Sbar_rest")
_ALIASES = {"S̄1": "Sbar1", "S̄2": "Sbar2", "S̄3": "Sbar3"}


def _in_group(name: str, sig: Mapping[str, int], size: Mapping[str, int]) -> bool:
    r, s, t, u, v = (sig[k] for k in REGION_NAMES)
    R, S, T, U, V = (size[k] for k in REGION_NAMES)
    if name == "S1":
        return t == 0 and u != U and v != V
    if name == "S2":
        return t == 0 and u == U and v != V
    if name == "S3":
        return t == 0 and v == V
    if name == "S4":
        return t > 0
    full = u + v == U + V
    if name == "Sbar1":
        return not full
    if name == "Sbar2":
        return full and r == R and s != S
    if name == "Sbar3":
        return full and s == S
    if name == "Sbar_rest":
        # states the three barred groups leave out
        return full and r != R and s != S
    raise ValueError(f"unknown grouping {name!r}; choose from {GROUPINGS}")


def _region_classes(d: Diagram) -> list[int]:
    if d.regions is None:
        raise ValueError("diagram lacks twist-region annotation")
    try:
        return [REGION_NAMES.index(r) for r in d.regions]
    except ValueError:
        raise ValueError("region annotation must use the names r, s, t, u, v") from None


def grouped_state_sums(d: Diagram, budget: int = DEFAULT_BUDGET) -> dict[str, LaurentPoly]:
    """Partial un-normalized state sums (exponent ``|s|``) for every grouping."""
    classes = _region_classes(d)
    size = {name: classes.count(k) for k, name in enumerate(REGION_NAMES)}
    hist = state_histogram(d, classes, budget=budget)
    out = {}
    for name in GROUPINGS:
        sub = {}
        for (counts, circles), cc in hist.items():
            if _in_group(name, dict(zip(REGION_NAMES, counts)), size):
                sub[(counts, circles)] = cc
        out[name] = _poly_from_histogram(d.n, sub, 0)
    return out


def grouped_state_sum(d: Diagram, grouping: str, budget: int = DEFAULT_BUDGET) -> LaurentPoly:
    name = _ALIASES.get(grouping, grouping)
    if name not in GROUPINGS:
        raise ValueError(f"unknown grouping {grouping!r}; choose from {GROUPINGS}")
    return grouped_state_sums(d, budget)[name]


def grouped_state_degrees(d: Diagram, grouping: str, budget: int = DEFAULT_BUDGET) -> tuple[int, int] | None:
    """(max, min) A-degree of the partial un-normalized sum, or None if it vanishes."""
    p = grouped_state_sum(d, grouping, budget)
    if p.is_zero():
        return None
    return p.max_exp(), p.min_exp()
