"""
Testes das estatísticas em palavras: inv, maj, Foata, rotação, agenda de ordenação e família h
"""
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from qseries import IntLaurentPoly, q_binomial, q_multinomial
from word_statistics import (KVector, TranspositionSchedule, alpha_prime, apply_schedule, foata,
                             foata_inverse, h_0_k, h_general, h_two, inv_word, maj_word,
                             merge_words, rotate_gamma, sort_schedule, split_word, word_from_text,
                             word_to_text, words_of_weight)

palavras = st.lists(st.integers(1, 4), max_size=8).map(tuple)


def w(texto):
    return word_from_text(texto)


def test_word_text_round_trip_formats():
    assert w("12312") == (1, 2, 3, 1, 2)
    assert w("10,2,3") == (10, 2, 3)
    assert word_to_text((1, 2, 3)) == "123"
    assert word_to_text((10, 2)) == "10,2"
    with pytest.raises(ValueError):
        w("1a2")


def test_words_of_weight():
    assert words_of_weight((2, 1)) == ((1, 1, 2), (1, 2, 1), (2, 1, 1))
    assert words_of_weight(()) == ((),)
    assert words_of_weight((1, 0, 1)) == ((1, 3), (3, 1))


def test_inv_and_maj():
    assert inv_word(w("213312")) == 6
    assert inv_word(w("112233")) == 0
    assert inv_word(w("21")) == 1
    assert maj_word(w("213312")) == 5
    assert maj_word(w("1123")) == 0
    assert maj_word(w("12142")) == 6


def test_foata_small_cases():
    assert foata(w("1123")) == w("1123")
    assert foata(w("21")) == w("21")
    assert foata(()) == ()
    maj = sorted(maj_word(x) for x in words_of_weight((2, 1)))
    inv = sorted(inv_word(foata(x)) for x in words_of_weight((2, 1)))
    assert maj == inv == [0, 1, 2]


@pytest.mark.parametrize("peso", [(1, 1, 1, 1), (2, 2, 1), (3, 1, 2), (1, 2, 1, 1), (4, 3)])
def test_foata_is_weight_preserving_bijection(peso):
    dominio = words_of_weight(peso)
    imagem = {foata(x) for x in dominio}
    assert imagem == set(dominio)
    for x in dominio:
        assert inv_word(foata(x)) == maj_word(x)
        assert foata_inverse(foata(x)) == x


@settings(max_examples=200)
@given(palavras)
def test_foata_inverse_property(x):
    assert foata_inverse(foata(x)) == x
    assert foata(foata_inverse(x)) == x
    assert inv_word(foata(x)) == maj_word(x)


def test_rotate_gamma():
    assert rotate_gamma(w("1212")) == w("2121")
    assert rotate_gamma((3,)) == (3,)
    with pytest.raises(ValueError):
        rotate_gamma(())


def test_rotation_identity():
    for n in range(1, 7):
        for a in range(n + 1):
            for x in words_of_weight((n - a, a)):
                assert inv_word(rotate_gamma(x)) + a == inv_word(x) + n * h_0_k(x, 1)


def test_h_0_k_examples():
    assert h_0_k(w("1212"), 1) == 1
    assert h_0_k(w("1212"), 0) == 0
    assert h_0_k(w("12"), 3) == 2
    assert h_0_k(w("21"), -1) == -1
    assert h_0_k(w("12"), -1) == 0
    assert h_0_k(w("212"), -4) == -3
    with pytest.raises(ValueError):
        h_0_k(w("123"), 1)


def test_h_two_examples():
    assert h_two(w("1212"), 0, 0) == 0
    assert h_two(w("12"), 1, 0) == 1


def test_h_two_identity():
    for n in range(1, 6):
        for a in range(n + 1):
            for k1, k2 in product(range(-3, 4), repeat=2):
                esperado = q_binomial(n, a).shift(k1 * (n - a) + k2 * a)
                obtido = IntLaurentPoly.from_exponents(n * h_two(x, k1, k2) + inv_word(x)
                                                       for x in words_of_weight((n - a, a)))
                assert obtido == esperado, (n, a, k1, k2)


def test_split_word_example():
    assert split_word(w("12312")) == (w("232"), w("12212"))
    assert split_word(w("111")) == ((), w("111"))


def test_split_and_merge_are_inverse():
    for n in range(0, 6):
        for peso in product(range(3), repeat=3):
            if sum(peso) != n:
                continue
            for x in words_of_weight(peso):
                linha, duas = split_word(x)
                assert merge_words(linha, duas) == x
                assert inv_word(x) == inv_word(linha) + inv_word(duas)


def test_merge_words_rejects_inconsistent_input():
    with pytest.raises(ValueError):
        merge_words(w("23"), w("121"))
    with pytest.raises(ValueError):
        merge_words(w("1"), w("12"))


def _h_sum(peso, kv, estatistica, lado):
    n = sum(peso)
    return IntLaurentPoly.from_exponents(n * estatistica(x, kv) + lado(x) for x in words_of_weight(peso))


def test_h_general_examples():
    assert str(_h_sum((1, 1, 1), (0, 0, 1), h_general, inv_word)) == "q+2q^2+2q^3+q^4"
    assert str(_h_sum((2, 1), (1, -1), h_general, inv_word)) == "q+q^2+q^3"
    assert all(h_general(x, (0, 0, 0)) == 0 for x in words_of_weight((1, 2, 1)))


def test_h_general_letter_bound():
    with pytest.raises(ValueError):
        h_general(w("13"), (0, 0))


def test_alpha_prime_examples():
    assert str(_h_sum((1, 1, 1), (0, 0, 1), alpha_prime, maj_word)) == "q+2q^2+2q^3+q^4"
    assert all(alpha_prime(x, KVector((0, 0))) == 0 for x in words_of_weight((2, 2)))
    assert alpha_prime(w("1123"), (1, -2, 2)) == h_general(w("1123"), (1, -2, 2))


@pytest.mark.parametrize("peso", [(2, 1), (1, 2, 1), (2, 2), (1, 1, 1), (3, 2), (1, 3, 1)])
def test_h_family_identities(peso):
    n = sum(peso)
    for kv in product(range(-2, 3), repeat=len(peso)):
        esperado = q_multinomial(n, peso).shift(sum(k * v for k, v in zip(kv, peso)))
        assert _h_sum(peso, kv, h_general, inv_word) == esperado
        assert _h_sum(peso, kv, alpha_prime, maj_word) == esperado


def test_scaled_convention_differs_from_canonical():
    # com o fator (n - nu_1) a identidade deixa de valer em algum caso
    peso, kv = (1, 1, 1), (0, 0, 1)
    esperado = q_multinomial(3, peso).shift(1)
    obtido = IntLaurentPoly.from_exponents(3 * h_general(x, kv, scaled=True) + inv_word(x)
                                           for x in words_of_weight(peso))
    assert obtido != esperado


def test_sort_schedule_example():
    agenda = sort_schedule(w("213312"))
    assert agenda == TranspositionSchedule((1, 4, 3, 2, 5, 4))
    assert apply_schedule(w("213312"), agenda) == w("112233")
    assert len(sort_schedule(w("1123"))) == 0


@settings(max_examples=200)
@given(st.lists(st.integers(1, 4), max_size=6).map(tuple))
def test_sort_schedule_properties(x):
    agenda = sort_schedule(x)
    assert len(agenda) == inv_word(x)
    assert apply_schedule(x, agenda) == tuple(sorted(x))
    atual = list(x)
    for i in agenda:
        assert atual[i - 1] > atual[i]
        atual[i - 1], atual[i] = atual[i], atual[i - 1]


def test_apply_schedule_rejects_out_of_range():
    with pytest.raises(ValueError):
        apply_schedule(w("12"), TranspositionSchedule((2,)))
