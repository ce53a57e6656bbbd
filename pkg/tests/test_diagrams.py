import json
import random

import numpy as np
import pytest

from oracles import (
    det_from_bracket,
    pd_bracket,
    pmirror,
    ratio_is_unit_monomial,
    rational_knot_bracket,
    twist_closures,
)

from hexatangle.diagrams import (
    SKELETON,
    LinkDiagram,
    bracket,
    brackets_batch,
    component_count,
    component_counts_batch,
    dense_to_poly,
    determinant,
    determinants_batch,
    diagram_jones,
    fill,
    filling_component_count,
    hex_writhe,
    jones,
    jones_batch,
    multilinear_bracket,
    parity_components,
    state_sum_bracket,
    twist_bracket,
    writhes_batch,
)
from hexatangle.filling import OPPOSITE, Unfilled
from hexatangle.harness import all_fillings
from hexatangle.laurent import A, DELTA, ONE, ZERO, LaurentPoly


def poly(d):
    return LaurentPoly(d)


# -- fill -------------------------------------------------------------------------


def test_empty_filling_is_a_crossingless_link():
    d = fill(SKELETON, (0,) * 6)
    assert d.n_crossings == 0
    assert component_count(d) >= 2
    assert bracket((0,) * 6) == DELTA ** (component_count(d) - 1)


@pytest.mark.parametrize("x", [(1, 1, 1, 0, 0, 0), (1, -1, -2, 1, 2, 1), (3, -2, 5, 0, -1, 4)])
def test_crossing_count_is_total_twisting(x):
    assert fill(SKELETON, x).n_crossings == sum(abs(v) for v in x)


def test_fill_rejects_unfilled_slots():
    with pytest.raises(ValueError):
        fill(SKELETON, (1, Unfilled, 0, 0, 0, 0))


def test_skeleton_slots_and_opposites():
    assert len(SKELETON.frames) == 6
    for box, frame in SKELETON.frames.items():
        neighbours = set(frame)
        assert box not in neighbours
        assert OPPOSITE[box] not in neighbours
        assert len(neighbours) == 4


def test_three_crossing_unknot():
    x = (1, 1, 1, 0, 0, 0)
    assert fill(SKELETON, x).n_crossings == 3
    assert filling_component_count(x) == 1
    assert jones(x) == ONE


def test_two_bridge_thirteen_fifths_against_standard_diagram():
    """Bracket agrees, up to a unit monomial and mirror image, with the 4-plat of [2, 1, 1, 2]."""
    x = (1, -1, -2, 1, 2, 1)
    assert fill(SKELETON, x).n_crossings == 8
    ours = multilinear_bracket(x).coeffs
    ref = rational_knot_bracket([2, 1, 1, 2])
    assert det_from_bracket(ref) == 13
    assert ratio_is_unit_monomial(ours, ref) or ratio_is_unit_monomial(ours, pmirror(ref))
    assert determinant(x) == 13


def test_thirteen_fifths_jones_value():
    j = jones((1, -1, -2, 1, 2, 1))
    expected = poly({12: -1, 8: 2, 4: -2, 0: 3, -4: -2, -8: 2, -12: -1})
    assert j == expected or j == expected.invert_variable()


# -- component counts -------------------------------------------------------------


def test_component_count_only_depends_on_parities():
    rng = random.Random(2)
    table = parity_components()
    for p in range(64):
        for _ in range(3):
            x = [((p >> i) & 1) + 2 * rng.randint(-2, 2) for i in range(6)]
            assert fill(SKELETON, x).component_count() == table[p]


def test_four_zeros_give_a_link():
    import itertools

    for zeros in itertools.combinations(range(6), 4):
        x = [1] * 6
        for i in zeros:
            x[i] = 0
        assert filling_component_count(x) >= 2


def test_even_corner_boxes_give_a_link():
    assert filling_component_count((2, 2, 5, 7, 2, 2)) >= 2
    assert fill(SKELETON, (2, 2, 5, 7, 2, 2)).component_count() >= 2


def test_batch_component_counts_match_traversal():
    xs = all_fillings(1)
    cc = component_counts_batch(xs)
    for x, c in zip(xs.tolist()[::37], cc.tolist()[::37]):
        assert fill(SKELETON, x).component_count() == c


# -- twist brackets ------------------------------------------------------------------


def test_twist_bracket_small_cases():
    assert twist_bracket(0).c0 == ONE and twist_bracket(0).cinf == ZERO
    assert twist_bracket(1).c0 == A and twist_bracket(1).cinf == A ** -1


@pytest.mark.parametrize("n", [-4, -3, -2, -1, 1, 2, 3, 4])
def test_twist_bracket_against_state_sum_oracle(n):
    """A positive twist here is the opposite handedness of the oracle's positive rational twist."""
    num, den = twist_closures(-n)
    v = twist_bracket(n)
    assert v.numerator().coeffs == num
    assert v.denominator().coeffs == den


def test_twist_bracket_mirror():
    for n in range(-6, 7):
        a, b = twist_bracket(n), twist_bracket(-n)
        assert a.c0.invert_variable() == b.c0
        assert a.cinf.invert_variable() == b.cinf


# -- bracket -------------------------------------------------------------------------


def test_all_ones_bracket_against_independent_state_sum():
    x = (1, 1, 1, 1, 1, 1)
    d = fill(SKELETON, x)
    assert multilinear_bracket(x).coeffs == pd_bracket(d.crossings, d.free_loops)


def test_independent_state_sum_on_random_small_fillings():
    rng = random.Random(8)
    for _ in range(25):
        x = [rng.randint(-2, 2) for _ in range(6)]
        if sum(map(abs, x)) > 9:
            continue
        d = fill(SKELETON, x)
        assert multilinear_bracket(x).coeffs == pd_bracket(d.crossings, d.free_loops)


def test_multilinear_matches_state_sum_sample():
    rng = random.Random(9)
    for _ in range(40):
        x = [rng.randint(-3, 3) for _ in range(6)]
        assert bracket(x) == bracket(x, method="statesum")


def test_unknown_bracket_method():
    with pytest.raises(ValueError):
        bracket((0,) * 6, method="magic")


def test_batch_brackets_match_single():
    xs = all_fillings(2)
    lo, B = brackets_batch(xs)
    rng = random.Random(4)
    for i in rng.sample(range(len(xs)), 200):
        assert dense_to_poly(lo, B[i]) == multilinear_bracket(xs[i].tolist())


def test_batch_writhe_is_linear_per_parity_class():
    rng = random.Random(6)
    xs = np.array([[rng.randint(-4, 4) for _ in range(6)] for _ in range(300)])
    knots = xs[component_counts_batch(xs) == 1]
    w = writhes_batch(knots)
    for x, wx in zip(knots.tolist(), w.tolist()):
        assert hex_writhe(x) == wx


def test_batch_brackets_bound():
    with pytest.raises(ValueError):
        brackets_batch(np.array([[5, 0, 0, 0, 0, 0]]))


# -- Jones -------------------------------------------------------------------------


def test_jones_rejects_links():
    with pytest.raises(ValueError):
        jones((0,) * 6)


def test_jones_of_table_row_instance():
    assert jones((1, 3, -2, -1, 2, 1)) == ONE


def _mirror_dense(lo, arr):
    """Dense rows of ``P(A^-1)``."""
    return -(lo + arr.shape[1] - 1), arr[:, ::-1]


def _same_dense(l1, a1, l2, a2):
    lo = min(l1, l2)
    hi = max(l1 + a1.shape[1], l2 + a2.shape[1])
    x = np.zeros((a1.shape[0], hi - lo), dtype=np.int64)
    y = np.zeros_like(x)
    x[:, l1 - lo : l1 - lo + a1.shape[1]] = a1
    y[:, l2 - lo : l2 - lo + a2.shape[1]] = a2
    return np.all(x == y, axis=1)


def test_mirror_jones_exhaustive_up_to_three():
    xs = all_fillings(3)
    knots = xs[component_counts_batch(xs) == 1]
    lo, J = jones_batch(knots)
    lo_m, J_m = jones_batch(-knots)
    ok = _same_dense(lo_m, J_m, *_mirror_dense(lo, J))
    assert ok.all(), knots[~ok][:5].tolist()


def test_jones_batch_matches_single():
    xs = all_fillings(2)
    knots = xs[component_counts_batch(xs) == 1]
    lo, J = jones_batch(knots)
    rng = random.Random(12)
    for i in rng.sample(range(len(knots)), 100):
        assert dense_to_poly(lo, J[i]) == jones(knots[i].tolist())


def test_diagram_jones_agrees_with_filling_jones():
    x = (1, -1, -2, 1, 2, 1)
    assert diagram_jones(fill(SKELETON, x)) == jones(x)


# -- determinant ----------------------------------------------------------------------


def test_determinant_examples():
    assert determinant((1, -1, -2, 1, 2, 1)) == 13
    assert determinant((1, 1, 1, 0, 0, 0)) == 1


def test_determinant_odd_iff_knot_exhaustive():
    xs = all_fillings(3)
    dets = determinants_batch(xs)
    comps = component_counts_batch(xs)
    assert np.array_equal(dets % 2 == 1, comps == 1)


def test_batch_determinants_match_single():
    rng = random.Random(14)
    xs = np.array([[rng.randint(-6, 6) for _ in range(6)] for _ in range(150)])
    for x, d in zip(xs.tolist(), determinants_batch(xs).tolist()):
        assert determinant(x) == d


def test_determinant_matches_oracle_evaluation():
    rng = random.Random(15)
    for _ in range(60):
        x = [rng.randint(-3, 3) for _ in range(6)]
        assert determinant(x) == det_from_bracket(multilinear_bracket(x).coeffs)


# -- serialisation ------------------------------------------------------------------------


def test_pd_json_round_trip():
    d = fill(SKELETON, (1, -1, -2, 1, 2, 1))
    doc = json.loads(d.dumps())
    assert doc["format"] == "pd" and doc["version"] == 1
    assert len(doc["signs"]) == len(doc["crossings"])
    back = LinkDiagram.from_json(d.dumps())
    assert back == d
    assert state_sum_bracket(back) == state_sum_bracket(d)


def test_pd_json_rejects_other_documents():
    with pytest.raises(ValueError):
        LinkDiagram.from_json({"format": "dt", "version": 1, "crossings": []})


def test_diagram_validation():
    with pytest.raises(ValueError):
        LinkDiagram(((0, 1, 2, 3),))
    with pytest.raises(ValueError):
        LinkDiagram(((0, 0, 1, 1), (2, 2, 3, 3)), free_loops=-1)
    LinkDiagram(((0, 1, 1, 0),))
