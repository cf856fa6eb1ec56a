"""Exact rational LP for membership certificates.

Soundness is self-certifying.  An "inside" answer carries weights that must
be nonnegative and sum to the threshold while staying under the target
componentwise; an "outside" answer carries a separating functional y with
y >= 0, y . a_j >= 1 for every column and y . target equal to the optimum,
which is below the threshold.  By weak duality either certificate is a
complete proof, so the property tests just re-check the arithmetic.
"""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from monoclose.simplex import max_weight_lp


def check_inside(columns, target, threshold, weights):
    total = sum(weights.values())
    assert total == threshold
    combo = [Fraction(0)] * len(target)
    for j, w in weights.items():
        assert w > 0
        for i, c in enumerate(columns[j]):
            combo[i] += w * c
    for got, cap in zip(combo, target):
        assert got <= cap


def check_outside(columns, target, threshold, separator, optimum):
    assert optimum < threshold
    assert sum(y * t for y, t in zip(separator, target)) == optimum
    for y in separator:
        assert y >= 0
    for col in columns:
        assert sum(y * c for y, c in zip(separator, col)) >= 1


def test_known_inside_case():
    columns = [(0, 0, 7), (0, 5, 0), (4, 0, 0)]
    decision, weights = max_weight_lp(columns, (0, 3, 3))
    assert decision == "inside"
    check_inside(columns, (0, 3, 3), 1, weights)


def test_known_outside_case():
    columns = [(4, 0, 0), (0, 5, 0), (0, 0, 7)]
    decision, separator, optimum = max_weight_lp(columns, (0, 3, 2))
    assert decision == "outside"
    assert separator == (Fraction(1, 4), Fraction(1, 5), Fraction(1, 7))
    assert optimum == Fraction(31, 35)
    check_outside(columns, (0, 3, 2), 1, separator, optimum)


def test_generator_is_inside_with_unit_weight():
    columns = [(4, 0), (0, 5)]
    decision, weights = max_weight_lp(columns, (4, 0))
    assert decision == "inside"
    assert weights == {0: Fraction(1)}


def test_zero_target_is_outside():
    columns = [(2, 1), (1, 3)]
    decision, separator, optimum = max_weight_lp(columns, (0, 0))
    assert decision == "outside"
    assert optimum == 0
    check_outside(columns, (0, 0), 1, separator, optimum)


def test_threshold_two():
    columns = [(4, 0, 0), (0, 5, 0), (0, 0, 7)]
    decision, weights = max_weight_lp(columns, (4, 5, 0), threshold=2)
    assert decision == "inside"
    check_inside(columns, (4, 5, 0), 2, weights)
    decision, separator, optimum = max_weight_lp(columns, (4, 5, 0), threshold=3)
    assert decision == "outside"
    check_outside(columns, (4, 5, 0), 3, separator, optimum)


def test_unbounded_counts_as_inside():
    # a zero column lets the objective grow without bound
    decision, weights = max_weight_lp([(0, 0), (5, 5)], (1, 1))
    assert decision == "inside"
    check_inside([(0, 0), (5, 5)], (1, 1), 1, weights)


@st.composite
def lp_case(draw):
    dim = draw(st.integers(1, 4))
    ncols = draw(st.integers(1, 6))
    col = st.tuples(*[st.integers(0, 10)] * dim)
    columns = [draw(col.filter(lambda c: any(c))) for _ in range(ncols)]
    target = tuple(draw(st.integers(0, 15)) for _ in range(dim))
    threshold = draw(st.integers(1, 3))
    return columns, target, threshold


@settings(max_examples=300)
@given(lp_case())
def test_certificates_are_sound(case):
    columns, target, threshold = case
    result = max_weight_lp(columns, target, threshold)
    if result[0] == "inside":
        check_inside(columns, target, threshold, result[1])
    else:
        check_outside(columns, target, threshold, result[1], result[2])


@given(lp_case())
def test_deterministic(case):
    columns, target, threshold = case
    assert max_weight_lp(columns, target, threshold) == max_weight_lp(
        columns, target, threshold
    )


@given(lp_case())
def test_scaling_target_by_threshold(case):
    # v in k*NP(columns) iff the threshold-k problem at v is feasible,
    # which matches the threshold-1 problem at v/k over scaled columns.
    columns, target, threshold = case
    scaled_cols = [tuple(Fraction(c) * threshold for c in col) for col in columns]
    a = max_weight_lp(columns, target, threshold)[0]
    b = max_weight_lp(scaled_cols, target, 1)[0]
    assert a == b
