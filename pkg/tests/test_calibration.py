"""The skeleton layout and the braid letter convention are pinned by these checks."""

import itertools
import random

from oracles import braid_permutation, perm_cycles

from hexatangle.braids import BraidWord3, braid_closure_diagram, q5_word
from hexatangle.diagrams import (
    determinant,
    diagram_determinant,
    diagram_jones,
    filling_component_count,
    jones,
)
from hexatangle.laurent import ONE
from hexatangle.tanglecalc import Fraction, MontesinosSpec, montesinos_determinant


def test_three_twist_unknots_all_sign_choices():
    for a, b, g in itertools.product((1, -1), repeat=3):
        x = (a, b, g, 0, 0, 0)
        assert filling_component_count(x) == 1
        assert jones(x) == ONE
        assert determinant(x) == 1


def test_montesinos_identification_determinants():
    rng = random.Random(2024)
    checked = 0
    while checked < 50:
        a, b, g, e = (rng.randint(-7, 7) for _ in range(4))
        if e * a == 1 or g == -1 or b == 1:
            continue
        spec = MontesinosSpec([Fraction(a, 1 - e * a), Fraction(g, g + 1), Fraction(b, 1 - b)])
        assert determinant((a, b, g, -1, e, 1)) == montesinos_determinant(spec), (a, b, g, e)
        checked += 1


def test_q5_closure_matches_filling():
    rng = random.Random(77)
    for _ in range(30):
        a, b, g = (rng.choice([v for v in range(-5, 6) if v]) for _ in range(3))
        w = q5_word(a, b, g)
        d = braid_closure_diagram(w)
        x = (a, b, g, 1, 1, 1)
        assert d.component_count() == filling_component_count(x) == perm_cycles(braid_permutation(w.letters))
        assert diagram_determinant(d) == determinant(x)
        if d.component_count() == 1:
            assert diagram_jones(d) == jones(x)


def test_q5_word_text():
    assert q5_word(2, 3, 4) == BraidWord3.parse("s1^-2 s2 s1^-3 s2 s1^-4 s2")
