import random

import pytest

from turaev_lab.diagram import canonical_code, is_split
from turaev_lab.samples import random_braid_word, random_diagram, random_reduced_alternating


def test_seeded_runs_repeat():
    a = [canonical_code(random_diagram(random.Random(9), 8)) for _ in range(3)]
    b = [canonical_code(random_diagram(random.Random(9), 8)) for _ in range(3)]
    assert a == b


def test_random_diagrams_are_connected_and_in_range():
    rng = random.Random(61)
    for _ in range(30):
        d = random_diagram(rng, 10, min_crossings=3)
        assert 3 <= d.n <= 10
        assert not is_split(d)


def test_alternating_words():
    rng = random.Random(62)
    word = random_braid_word(rng, 4, 30, alternating=True)
    assert all((g > 0) == (abs(g) % 2 == 1) for g in word)
    for _ in range(10):
        assert random_reduced_alternating(rng, 10).is_alternating()


def test_bad_range():
    with pytest.raises(ValueError):
        random_diagram(random.Random(0), 2, min_crossings=5)
