import random

import pytest

from turaev_lab.bracket import bracket
from turaev_lab.diagram import bigons, canonical_code, faces, kink_sites, named_diagram
from turaev_lab.errors import MoveError
from turaev_lab.jones import jones_polynomial
from turaev_lab.kauffman2 import kauffman_lambda
from turaev_lab.reidemeister import (
    MOVES,
    analysis_rows,
    analyze_closure,
    apply_move,
    enumerate_closures,
    enumerate_decreasing_closures,
    global_delta,
    is_planar_matching,
    planar_matchings,
    triangle_sites,
)
from turaev_lab.samples import random_diagram


def test_kink_round_trip():
    rng = random.Random(51)
    for _ in range(15):
        d = random_diagram(rng, 8)
        k = apply_move(d, "RI", (rng.choice(sorted(d.occurrences)), rng.choice((1, -1)), rng.choice((1, -1))))
        assert k.n == d.n + 1
        back = apply_move(k, "RI-", kink_sites(k)[-1])
        assert canonical_code(back) == canonical_code(d)


def test_kink_sign_is_respected():
    d = named_diagram("trefoil")
    for sign in (1, -1):
        for turn in (1, -1):
            k = apply_move(d, "RI", (next(iter(d.occurrences)), sign, turn))
            assert k.writhe == d.writhe + sign


def test_bigon_round_trip():
    rng = random.Random(52)
    for _ in range(15):
        d = random_diagram(rng, 8)
        a, b = rng.sample(rng.choice([f for f in faces(d) if len(f) >= 2]), 2)
        e = apply_move(d, "RII", (a, b, rng.random() < 0.5))
        assert e.n == d.n + 2
        assert bracket(e) == bracket(d)
        back = apply_move(e, "RII-", bigons(e, reducible=True)[-1])
        assert back.n == d.n
        assert jones_polynomial(back) == jones_polynomial(d)


def test_third_move_preserves_invariants():
    rng = random.Random(53)
    done = 0
    while done < 15:
        d = random_diagram(rng, 9)
        sites = triangle_sites(d)
        if not sites:
            continue
        e = apply_move(d, "RIII", rng.choice(sites))
        assert e.n == d.n and e.writhe == d.writhe
        assert jones_polynomial(e) == jones_polynomial(d)
        assert kauffman_lambda(e) == kauffman_lambda(d)
        done += 1


def test_bad_sites():
    t = named_diagram("trefoil")
    with pytest.raises(MoveError):
        apply_move(t, "RI-", 0)
    with pytest.raises(MoveError):
        apply_move(t, "RI", (999, 1, 1))
    with pytest.raises(MoveError):
        apply_move(t, "RX", 0)
    with pytest.raises(MoveError):
        apply_move(t, "RII-", (0, 1))


def test_planar_matchings():
    assert len(planar_matchings(4)) == 2
    six = planar_matchings(6)
    assert len(six) == 5
    # a never pairs with c or e
    assert all(("a", "c") not in m and ("a", "e") not in m for m in six)
    assert not is_planar_matching(["ad", "be", "cf"], 6)


def test_non_planar_closure_is_rejected():
    with pytest.raises(MoveError):
        analyze_closure("RIII", ["ad", "be", "cf"])


def test_first_and_second_moves_never_lower_genus():
    for move in ("RI", "RI-", "RII"):
        assert enumerate_decreasing_closures(move) == []
    for cl in enumerate_closures("RI") + enumerate_closures("RI-"):
        assert analyze_closure(cl.move, cl.matching).delta_gT == 0


def test_second_move_deltas():
    assert analyze_closure("RII", ["ab", "cd"]).delta_c == 2
    assert analyze_closure("RII-", ["ab", "cd"]).delta_gT == 0
    assert analyze_closure("RII-", ["ac", "bd"]).delta_gT < 0
    # closure (ii) in only one of the two states is enough
    assert analyze_closure("RII-", ["ab", "cd"], ["ac", "bd"]).delta_gT < 0


def test_inverse_second_move_closure():
    found = [(c.text(), c.case) for c in enumerate_decreasing_closures("RII-")]
    assert found == [("a-c b-d", "ii")]


def test_third_move_closure_table():
    rows = {r["case"]: r for r in analysis_rows("RIII")}
    assert (rows["i"]["sB_before"], rows["i"]["sB_after"], rows["i"]["delta_gT"]) == (3, 1, "1")
    assert (rows["iv"]["sB_before"], rows["iv"]["sB_after"], rows["iv"]["delta_gT"]) == (1, 3, "-1")
    for case in ("ii", "iii", "v"):
        assert rows[case]["sB_before"] == rows[case]["sB_after"]
        assert rows[case]["delta_gT"] == "0"
    assert all(r["delta_sA"] == 0 for r in rows.values())


def test_third_move_decreasing_closure():
    found = [(c.text(), c.case) for c in enumerate_decreasing_closures("RIII")]
    assert found == [("a-f b-c d-e", "iv")]


def test_mirror_third_move_swaps_states():
    rows = {r["case"]: r for r in analysis_rows("RIII-mirror")}
    assert all(r["delta_sB"] == 0 for r in rows.values())
    assert rows["iv"]["delta_gT"] == "-1"
    assert [c.case for c in enumerate_decreasing_closures("RIII-mirror")] == ["iv"]


@pytest.mark.parametrize("move", MOVES)
def test_local_and_global_deltas_agree(move):
    for cl in enumerate_closures(move):
        g = global_delta(move, cl)
        if g is not None:
            assert g == analyze_closure(move, cl.matching).delta_gT
