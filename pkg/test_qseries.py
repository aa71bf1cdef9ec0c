"""
Testes de q-séries: aritmética exata, q-binomiais, q-multinomiais e separação por resíduo
"""
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from qseries import (IntLaurentPoly, ONE, Q, WeightIndexedPoly, ZERO, q_binomial, q_factorial,
                     q_int, q_multinomial, residue_split)
from tableaux import Partition
from word_statistics import inv_word, maj_word, words_of_weight

polinomios = st.dictionaries(st.integers(-20, 20), st.integers(-5, 5), max_size=6).map(IntLaurentPoly)


def poly(texto_termos):
    return IntLaurentPoly.from_terms(texto_termos)


def test_zero_coefficients_are_dropped():
    p = IntLaurentPoly({0: 1, 3: 0, -2: 0})
    assert p.coeffs == {0: 1}
    assert IntLaurentPoly({1: 0}).is_zero()


def test_rejects_non_integer_terms():
    with pytest.raises(ValueError):
        IntLaurentPoly({0: 1.5})


def test_canonical_text():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(poly([(0, 1), (1, 1), (2, 1)])) == "1+q+q^2"
    assert str(poly([(2, 2)])) == "2q^2"
    assert str(poly([(0, 1), (1, -1)])) == "1-q"
    assert str(poly([(-2, 1)])) == "q^-2"
    assert str(poly([(1, -3), (4, 1)])) == "-3q+q^4"


def test_constants_hash_like_integers():
    assert IntLaurentPoly.constant(5) == 5
    assert hash(IntLaurentPoly.constant(5)) == hash(5)
    assert hash(ZERO) == hash(0) and hash(ONE) == hash(1)
    assert len({IntLaurentPoly.constant(3), 3}) == 1
    assert {2: 'dois'}[IntLaurentPoly.constant(2)] == 'dois'
    assert Q != 1 and hash(Q) == hash(IntLaurentPoly.monomial(1))


def test_json_sorted_by_exponent():
    p = poly([(3, 1), (-1, 2), (0, -1)])
    assert p.to_json() == {'terms': [[-1, 2], [0, -1], [3, 1]]}


def test_q_int():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert str(q_int(3)) == "1+q+q^2"
    with pytest.raises(ValueError):
        q_int(-1)


def test_q_binomial_examples():
    assert q_binomial(3, 1) == q_int(3)
    assert q_binomial(5, 0) == ONE
    assert str(q_binomial(4, 2)) == "1+q+2q^2+q^3+q^4"
    assert q_binomial(3, 4) == ZERO
    assert q_binomial(3, -1) == ZERO


def test_q_multinomial_examples():
    assert str(q_multinomial(3, (1, 1, 1))) == "1+2q+2q^2+q^3"
    assert q_multinomial(4, (4,)) == ONE
    assert str(q_multinomial(3, (2, 1))) == "1+q+q^2"
    assert q_multinomial(3, (2, 0, 1)) == q_multinomial(3, (2, 1))


def test_q_multinomial_rejects_wrong_sum():
    with pytest.raises(ValueError):
        q_multinomial(4, (2, 1))


@pytest.mark.parametrize("peso", [(1, 1, 1), (2, 1), (2, 2), (3, 1, 1), (2, 2, 1), (1, 2, 1, 1)])
def test_q_multinomial_is_inv_and_maj_generating_function(peso):
    n = sum(peso)
    esperado = q_multinomial(n, peso)
    palavras = words_of_weight(peso)
    assert IntLaurentPoly.from_exponents(inv_word(w) for w in palavras) == esperado
    assert IntLaurentPoly.from_exponents(maj_word(w) for w in palavras) == esperado


def test_q_multinomial_at_one_is_multinomial():
    for n in range(0, 9):
        for k in range(0, n + 1):
            parts = (k, n - k)
            assert q_multinomial(n, parts).evaluate(1) == factorial(n) // (factorial(k) * factorial(n - k))
    assert q_multinomial(6, (1, 2, 3)).evaluate(1) == 60


def test_exact_division_failure():
    with pytest.raises(ArithmeticError):
        q_int(3).exact_div(q_int(2))
    assert q_factorial(4).exact_div(q_factorial(2)) == q_int(3) * q_int(4)


def test_division_with_laurent_terms():
    divisor = q_int(2).shift(-3)
    quociente, resto = (q_int(4).shift(-1)).divmod_exact(divisor)
    assert resto.is_zero()
    assert quociente * divisor == q_int(4).shift(-1)


def test_residue_split_example():
    g = poly([(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)])
    assert [str(p) for p in residue_split(g, 3)] == ["1+q^3", "q+q^4", "2q^2"]


def test_residue_split_trivial_and_offset():
    g = q_int(4)
    assert residue_split(g, 1) == [g]
    partes = residue_split(Q ** 5, 4, 2)
    assert partes[3] == Q ** 5
    assert all(p.is_zero() for i, p in enumerate(partes) if i != 3)


def test_evaluate():
    assert q_int(4).evaluate(1) == 4
    assert q_int(3).evaluate(2) == 7
    assert Q.shift(-2).evaluate(2) == Fraction(1, 2)


@settings(max_examples=60)
@given(polinomios, polinomios, polinomios)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@settings(max_examples=40)
@given(polinomios, st.integers(-5, 5))
def test_residue_split_partitions_terms(p, offset):
    partes = residue_split(p, 3, offset)
    assert sum(partes, ZERO) == p
    for i, parte in enumerate(partes):
        assert all((e - offset) % 3 == i for e, _ in parte.terms())


def test_weight_indexed_poly_lookup_and_equality():
    f = WeightIndexedPoly({Partition((2,)): q_int(2), Partition((1, 1)): ZERO})
    g = WeightIndexedPoly({Partition((2,)): q_int(2)})
    assert f == g
    assert f[Partition((1, 1))] == ZERO
    assert f.size == 2
    assert f.keys() == [Partition((2,)), Partition((1, 1))]


def test_weight_indexed_poly_rejects_mixed_sizes():
    with pytest.raises(ValueError):
        WeightIndexedPoly({Partition((2,)): ONE, Partition((1,)): ONE})
