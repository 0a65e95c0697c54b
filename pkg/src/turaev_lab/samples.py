"""Seeded random diagrams for property checks.

Braid closures give connected diagrams cheaply; an optional second-move
scramble pushes one arc across another so the result is no longer a braid
picture.  Everything is driven by a ``random.Random`` passed in, so runs are
reproducible.
"""

from __future__ import annotations

import random

from .diagram import Diagram, braid_closure, faces, is_split
from .reidemeister import add_bigon


def random_braid_word(rng: random.Random, strands: int, length: int, alternating: bool = False) -> list[int]:
    word = [rng.randint(1, strands - 1) for _ in range(length)]
    if alternating:
        # odd generators positive, even ones negative: the closure is alternating
        return [g if g % 2 else -g for g in word]
    return [g * rng.choice((1, -1)) for g in word]


def random_diagram(rng: random.Random, max_crossings: int = 10, min_crossings: int = 1, scramble: bool = True) -> Diagram:
    """A connected diagram with ``min_crossings <= c <= max_crossings``."""
    if max_crossings < max(1, min_crossings):
        raise ValueError("need max_crossings >= max(1, min_crossings)")
    while True:
        strands = rng.randint(2, 4)
        budget = max_crossings
        extra = 0
        if scramble and budget >= 3 and rng.random() < 0.5:
            extra = 2
            budget -= 2
        length = rng.randint(max(1, min_crossings - extra), budget)
        d = braid_closure(random_braid_word(rng, strands, length), strands)
        if is_split(d):
            continue
        if extra:
            fs = [f for f in faces(d) if len(f) >= 2]
            f = rng.choice(fs)
            a, b = rng.sample(f, 2)
            d = add_bigon(d, a, b, rng.random() < 0.5)
        if min_crossings <= d.n <= max_crossings:
            return d


def random_reduced_alternating(rng: random.Random, max_crossings: int = 10) -> Diagram:
    """Closure of an alternating braid in which every generator occurs at least twice."""
    while True:
        strands = rng.randint(2, 4)
        if 2 * (strands - 1) > max_crossings:
            continue
        length = rng.randint(2 * (strands - 1), max_crossings)
        word = random_braid_word(rng, strands, length, alternating=True)
        if all(sum(1 for g in word if abs(g) == k) >= 2 for k in range(1, strands)):
            return braid_closure(word, strands)
