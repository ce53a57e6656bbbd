import json
import random

import pytest

from oracles import braid_permutation, burau_trace, perm_cycles

from hexatangle.braids import (
    BraidWord3,
    ClosedBraidClass,
    LinkingModel,
    SurgeryDescription,
    are_conjugate,
    braid_closure_diagram,
    braid_from_surgery,
    closed_braid_class,
    closure_linking_matrix,
    composite_witness,
    filling_to_surgery,
    framed_braid_h1,
    h1_order,
    q5_word,
    schreier_normal_form,
    surgery_to_filling,
)
from hexatangle.braids.schreier import composite_pattern_1, composite_pattern_2, trivial_knot_forms
from hexatangle.braids.surgery import bareiss_det
from hexatangle.diagrams import diagram_jones
from hexatangle.filling import HexFilling, Unfilled
from hexatangle.laurent import ONE
from hexatangle.tanglecalc import INFINITY, Fraction

W = BraidWord3.parse


def nf(text_or_word):
    w = W(text_or_word) if isinstance(text_or_word, str) else text_or_word
    return schreier_normal_form(w)


def random_word(rng, n):
    return BraidWord3(rng.choice((1, -1, 2, -2)) for _ in range(n))


# -- words -------------------------------------------------------------------------------


def test_parse_and_text():
    w = W("s1^4 s2^-2 D^-2")
    assert w.letters[:6] == (1, 1, 1, 1, -2, -2)
    assert len(w) == 12
    assert W("s1^{-3}") == BraidWord3((-1, -1, -1))
    assert W("C") == BraidWord3((1, 2) * 3)
    assert W("1") == BraidWord3()
    assert BraidWord3().to_text() == "1"
    assert W("s1 s1 s2^-1").to_text() == "s1^2 s2^-1"
    with pytest.raises(ValueError):
        W("s3")
    with pytest.raises(ValueError):
        BraidWord3((3,))


def test_word_algebra():
    rng = random.Random(1)
    for _ in range(50):
        w = random_word(rng, 10)
        assert (w + w.inverse()).free_reduce() == BraidWord3()
        assert w.mirror().mirror() == w
        assert w.exponent_sum() == -w.inverse().exponent_sum()
        assert list(w.permutation()) == [braid_permutation(w.letters).index(i) for i in range(3)]


def test_closure_components_against_permutation_cycles():
    rng = random.Random(2)
    for _ in range(100):
        w = random_word(rng, rng.randint(0, 12))
        c = perm_cycles(braid_permutation(w.letters))
        assert w.closure_components() == c
        assert braid_closure_diagram(w).component_count() == c


def test_closure_diagram_shapes():
    d = braid_closure_diagram(BraidWord3())
    assert d.n_crossings == 0 and d.component_count() == 3
    d = braid_closure_diagram(W("s1 s2"))
    assert d.n_crossings == 2 and d.component_count() == 1
    assert diagram_jones(d) == ONE


# -- Schreier normal forms ------------------------------------------------------------------


def test_burau_oracle_respects_braid_relation():
    assert burau_trace([1, 2, 1]) == burau_trace([2, 1, 2])
    assert burau_trace([1, -1]) == burau_trace([]) == 2


def test_three_unknot_classes_are_distinct():
    forms = [nf("s1 s2"), nf("s1^-1 s2"), nf("C^-1 s1 s2 s1 s2")]
    assert len(set(forms)) == 3
    assert tuple(forms) == trivial_knot_forms()
    for t in ("s1 s2", "s1^-1 s2", "C^-1 s1 s2 s1 s2", "s2 s1", "s2^-1 s1", "s1 s2^-1"):
        assert closed_braid_class(W(t)) is ClosedBraidClass.TRIVIAL_KNOT


def test_all_positive_parameters_are_fixed_points():
    """The form of ``s1^-a s2 s1^-b s2 s1^-g s2`` is a cyclic rotation of itself."""
    for a in range(1, 6):
        for b in range(1, 6):
            for g in range(1, 6):
                w = q5_word(a, b, g)
                f = nf(w)
                assert f.central_power == 0
                L = list(w.letters)
                assert any(tuple(L[i:] + L[:i]) == f.tail.letters for i in range(len(L)))
    assert nf(q5_word(2, 3, 4)).tail.to_text() == "s1^-2 s2 s1^-3 s2 s1^-4 s2"


def test_one_negative_parameter():
    for a in range(-8, -2):
        for b in range(1, 6):
            for g in range(1, 6):
                assert nf(q5_word(a, b, g)) == nf(f"C s1^{-g - 1} s2^{-a - 2} s1^{-b - 1} s2")


def test_two_negative_parameters():
    for a in range(-8, -2):
        for b in range(-8, -2):
            for g in range(1, 6):
                assert nf(q5_word(a, b, g)) == nf(f"C^2 s1^{-g - 2} s2^{-a - 3} s1^-1 s2^{-b - 3}")


def test_three_negative_parameters_generic():
    for a in range(-9, -3):
        for b in range(-9, -3):
            for g in range(-9, -3):
                expected = f"C^3 s1^-1 s2^{-a - 4} s1^-1 s2^{-b - 4} s1^-1 s2^{-g - 4}"
                assert nf(q5_word(a, b, g)) == nf(expected)


def test_three_negative_parameters_special():
    for g in range(-10, -2):
        assert nf(q5_word(-3, -3, g)) == nf(f"C^2 s1^{-g - 3}")
    assert nf(q5_word(-3, -4, -4)).to_text() == "C^2 s1 s2"
    assert nf(q5_word(-3, -4, -5)).to_text() == "C^2 s1 s2 s1"
    assert nf(q5_word(-3, -4, -6)).to_text() == "C^2 s1 s2 s1 s2"
    for g in range(-12, -6):
        assert nf(q5_word(-3, -4, g)) == nf(f"C^3 s1^-1 s2^{-g - 7}")
    for b in range(-9, -4):
        for g in range(-9, -4):
            assert nf(q5_word(-3, b, g)) == nf(f"C^3 s1^-1 s2^{-b - 5} s1^-1 s2^{-g - 5}")


def test_generator_powers_share_a_class():
    for k in range(-5, 6):
        assert nf(f"C^2 s1^{k}") == nf(f"C^2 s2^{k}")


def test_conjugation_invariance_random():
    rng = random.Random(1000)
    for _ in range(300):
        w = random_word(rng, rng.randint(0, 14))
        u = random_word(rng, rng.randint(0, 8))
        assert are_conjugate(w, u + w + u.inverse())


def test_normal_form_represents_the_same_class():
    """Burau traces are conjugacy invariants, so they must agree with the normal form's."""
    rng = random.Random(5)
    for _ in range(300):
        w = random_word(rng, rng.randint(0, 16))
        f = nf(w)
        assert burau_trace(f.as_braid().letters) == burau_trace(w.letters)
        assert f.as_braid().exponent_sum() == w.exponent_sum()


def test_normal_form_is_idempotent():
    rng = random.Random(6)
    for _ in range(200):
        w = random_word(rng, rng.randint(0, 14))
        f = nf(w)
        assert nf(f.as_braid()) == f
        assert nf(W(f.to_text())) == f


# -- closed braid classes -------------------------------------------------------------------------


def test_composite_patterns_recognised():
    for u in range(2, 7):
        for v in range(2, u + 1):
            assert closed_braid_class(composite_pattern_1(u, v)) is ClosedBraidClass.COMPOSITE_LINK
    for u in range(0, 7):
        for v in range(0, u + 1):
            w = composite_pattern_2(u, v)
            if closed_braid_class(w) is ClosedBraidClass.TRIVIAL_KNOT:
                continue
            assert composite_witness(w) is not None


def test_trefoil_plus_hopf_family_is_composite():
    for b in range(-6, 7):
        w = q5_word(-2, b, -b)
        assert closed_braid_class(w) is ClosedBraidClass.COMPOSITE_LINK
        assert w.closure_components() == 2


def test_positive_parameter_family_is_never_trivial():
    for a in range(1, 7):
        for b in range(1, 7):
            for g in range(1, 7):
                assert closed_braid_class(q5_word(a, b, g)) is ClosedBraidClass.OTHER


def test_composites_only_at_the_exceptional_family():
    rng = random.Random(9)
    vals = [v for v in range(-6, 7) if v not in (0, -1)]
    for _ in range(400):
        a, b, g = (rng.choice(vals) for _ in range(3))
        composite = closed_braid_class(q5_word(a, b, g)) is ClosedBraidClass.COMPOSITE_LINK
        exceptional = any(p == -2 and q + r == 0 for p, q, r in ((a, b, g), (b, g, a), (g, a, b)))
        assert composite == exceptional, (a, b, g)


def test_other_class_example():
    assert closed_braid_class(W("s1^-2 s2 s1^-3 s2 s1^-4 s2")) is ClosedBraidClass.OTHER


# -- surgery ---------------------------------------------------------------------------------------


def test_filling_to_surgery_family():
    for g in range(-6, 7):
        if g == 0:
            continue
        s = filling_to_surgery((3, -2, g, 2, 1, -1))
        assert s.coefficients == (Fraction(1, 2), Fraction(1, g), Fraction(-1), Fraction(-3), Fraction(2), Fraction(-1))


def test_unfilled_boxes_become_infinite():
    s = filling_to_surgery(HexFilling.of([Unfilled] * 6))
    assert all(c == INFINITY for c in s.coefficients)
    assert h1_order(s) == 1


def test_surgery_round_trip():
    rng = random.Random(3)
    for _ in range(200):
        x = tuple(rng.randint(-5, 5) for _ in range(6))
        s = filling_to_surgery(x)
        assert surgery_to_filling(s).as_tuple() == x
        assert SurgeryDescription.from_json(s.dumps()) == s
    y = HexFilling.of((Unfilled, 2, 0, 1, Unfilled, -1))
    assert surgery_to_filling(filling_to_surgery(y)) == y


def test_surgery_json_shape():
    s = filling_to_surgery((3, -2, 5, 2, 1, -1))
    assert json.loads(s.dumps()) == [[1, 2], [1, 5], [-1, 1], [-3, 1], [2, 1], [-1, 1]]


def test_surgery_validation():
    with pytest.raises(ValueError):
        SurgeryDescription([Fraction(2, 3)] + [Fraction(0)] * 5)
    with pytest.raises(ValueError):
        SurgeryDescription([Fraction(1)] * 3 + [Fraction(1, 2)] * 3)
    with pytest.raises(ValueError):
        SurgeryDescription([Fraction(1)] * 5)


def test_braid_from_surgery_family():
    for g in range(-6, 7):
        if g == 0:
            continue
        s = SurgeryDescription([Fraction(1, 2), Fraction(1, g), Fraction(-1), Fraction(-3), Fraction(2), Fraction(-1)])
        fb = braid_from_surgery(s)
        assert fb.word == W(f"s1^4 s2^{2 * g} D^-2")
        assert fb.to_json()["braid"] == f"s1^4 s2^{2 * g} D^-2"
        assert fb.framings == (-4, 1 - g, -g)


def test_braid_from_surgery_without_twisting():
    s = SurgeryDescription([INFINITY, INFINITY, INFINITY, Fraction(2), Fraction(-1), Fraction(3)])
    fb = braid_from_surgery(s)
    assert fb.word == BraidWord3()
    assert fb.to_json() == {"braid": "1", "framings": [2, -1, 3]}


def test_framings_shift_linearly_with_twists():
    rng = random.Random(4)
    for _ in range(100):
        e1, f1, e = (rng.choice([v for v in range(-5, 6) if v]) for _ in range(3))
        m, n, p = (rng.randint(-5, 5) for _ in range(3))
        s = SurgeryDescription([Fraction(1, e1), Fraction(1, f1), Fraction(1, e), m, n, p])
        fb = braid_from_surgery(s)
        assert fb.framings == (m - e1 - e, n - e1 - f1 - e, p - f1 - e)
        assert fb.word.permutation() == (0, 1, 2)


def test_braid_from_surgery_rejects_fractional_strands():
    with pytest.raises(ValueError):
        braid_from_surgery(SurgeryDescription([Fraction(1), Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1), Fraction(1)]))


def test_family_closure_linking_matrix():
    for g in [v for v in range(-6, 7) if v]:
        fb = braid_from_surgery(filling_to_surgery((3, -2, g, 2, 1, -1)))
        assert closure_linking_matrix(fb) == [[-4, -1, 1], [-1, 1 - g, 1 - g], [1, 1 - g, -g]]
        assert framed_braid_h1(fb) == 1
        assert h1_order(filling_to_surgery((3, -2, g, 2, 1, -1))) == 1


def test_linking_model_validation():
    lm = LinkingModel.standard()
    assert all(lm.matrix[i][j] == lm.matrix[j][i] for i in range(6) for j in range(6))
    with pytest.raises(ValueError):
        LinkingModel(((0,) * 6,) * 5)
    bad = [[0] * 6 for _ in range(6)]
    bad[0][1] = 1
    with pytest.raises(ValueError):
        LinkingModel(tuple(map(tuple, bad)))


def test_bareiss_against_fraction_elimination():
    from fractions import Fraction as Q

    def ref(m):
        m = [[Q(v) for v in r] for r in m]
        n, d = len(m), Q(1)
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                d = -d
            d *= m[c][c]
            for r in range(c + 1, n):
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return d

    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 6)
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(m) == ref(m)


def test_homology_order_of_all_fives_equals_determinant():
    assert h1_order(filling_to_surgery((5,) * 6)) == 2000
