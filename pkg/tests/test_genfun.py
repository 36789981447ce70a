from fractions import Fraction
from math import comb

import pytest

from resonance.errors import InsufficientData, LeadingNotConstant
from resonance.genfun import (elementary_symmetric, fit_exp_poly, fq_betti, fq_hilbert_rational,
                              fq_hilbert_series, gaussian_binomial, to_rational_function)


def seq(f, top, start=1):
    return [(n, f(n)) for n in range(start, top + 1)]


def test_resonance_b1_fit():
    form = fit_exp_poly(seq(lambda n: 2 ** n - 1, 8), 2)
    assert form.coefficients == {1: [-1], 2: [1]}
    assert form.valid_from == 1 and form.held_out_verified
    rat = to_rational_function(form)
    # 2t/(1-2t) - t/(1-t) = t / ((1-t)(1-2t))
    assert rat.numerator == [0, 1] and rat.denominator == [1, -3, 2]
    assert rat.proper


def test_threshold_b1_fit():
    form = fit_exp_poly(seq(lambda n: 2 ** (n - 1), 8), 2)
    assert form.coefficients == {2: [Fraction(1, 2)]}
    rat = to_rational_function(form)
    assert rat.numerator == [0, 1] and rat.denominator == [1, -2]


def test_constant_and_zero():
    assert fit_exp_poly(seq(lambda n: 1, 5), 1).coefficients == {1: [1]}
    zero = fit_exp_poly(seq(lambda n: 0, 5), 1)
    rat = to_rational_function(zero)
    assert zero.coefficients == {} and rat.numerator == [] and rat.denominator == [1]


def test_late_validity_and_polynomial_coefficients():
    values = lambda n: 7 if n == 1 else n * 3 ** n + 2
    form = fit_exp_poly(seq(values, 10), 3, max_poly_degree=1, require_leading_constant=False)
    assert form.valid_from == 2
    assert form.coefficients == {1: [2], 3: [0, 1]}
    with pytest.raises(LeadingNotConstant):
        fit_exp_poly(seq(values, 10), 3, max_poly_degree=1)
    rat = to_rational_function(form, seq(values, 10))
    assert rat.series(11)[1:] == [values(n) for n in range(1, 11)]
    # poles only at 1/j with multiplicity at most degree + 1
    assert rat.denominator == [1, -7, 15, -9]


def test_insufficient_data():
    with pytest.raises(InsufficientData) as info:
        fit_exp_poly(seq(lambda n: 2 ** n, 3), 2)
    assert info.value.additional_needed == 1
    with pytest.raises(InsufficientData):
        fit_exp_poly(seq(lambda n: 5 ** n, 8), 2)


def test_resonance_b2_sequence():
    data = [0, 2, 15, 80, 375, 1652, 7035, 29360, 120975]
    form = fit_exp_poly(list(zip(range(1, 10), data)), 4)
    assert form.coefficients == {1: [Fraction(1, 2)], 2: [Fraction(-1, 2)], 3: [Fraction(-1, 2)],
                                 4: [Fraction(1, 2)]}
    rat = to_rational_function(form)
    assert rat.proper and rat.denominator == [1, -10, 35, -50, 24]


def test_fq_formulas():
    assert fq_betti(2, 2, 1) == 3
    assert fq_betti(2, 3, 2) == 14
    assert all(fq_betti(q, 5, 0) == 1 for q in (2, 3, 5))
    assert fq_hilbert_series(2, 1, 4) == [0, 1, 3, 7, 15]
    assert fq_hilbert_series(3, 0, 5) == [1] * 6


@pytest.mark.parametrize("q", [2, 3, 5])
def test_fq_identities(q):
    for n in range(1, 9):
        for i in range(n + 1):
            assert elementary_symmetric([q ** j for j in range(n)], i) == q ** comb(i, 2) * gaussian_binomial(n, i, q)
    for i in range(9):
        series = fq_hilbert_series(q, i, 8)
        assert all(series[n] == fq_betti(q, n, i) for n in range(i, 9))
        den = fq_hilbert_rational(q, i).denominator
        assert len(den) == i + 2  # distinct simple poles at q^-j
