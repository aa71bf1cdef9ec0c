"""
Testes de funções simétricas: Kostka, expansão de Schur, q-LR, pletismo e autoespaços de n-ciclos
"""
import warnings

import pytest
from sympy import Matrix, eye

from llt_engine import LLTInstance, count_class_i, llt_polynomial
from qseries import IntLaurentPoly, ONE, Q, WeightIndexedPoly, ZERO, q_int
from symmetric_functions import (a_q_plethysm, cyclic_eigenspace_dim, inverse_kostka, k_lambda_i,
                                 kostka, kostka_matrix, mn_character, monomial_expand,
                                 negativity_scan, plethysm_multiplicity, plethysm_oracle,
                                 q_littlewood_richardson, q_lr_component, ramanujan_sum,
                                 schur_expand, table_to_csv, tensor_power_multiplicity,
                                 weight_space_dimension)
from tableaux import (Partition, StandardTableau, count_standard, enumerate_partitions,
                      enumerate_sstab, enumerate_standard, maj_standard)


def P(*partes):
    return Partition(partes)


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1), (2,)) == 0
    assert kostka((2, 1), (1, 0, 2)) == 1
    with pytest.raises(ValueError):
        kostka((2,), (1,))


def test_kostka_matches_enumeration():
    for n in range(1, 6):
        for lam in enumerate_partitions(n):
            for nu in enumerate_partitions(n):
                assert kostka(lam, nu) == len(enumerate_sstab(lam, weight=tuple(nu)))


def test_inverse_kostka_n2():
    inversa = inverse_kostka(2)
    assert inversa.as_matrix() == Matrix([[1, -1], [0, 1]])
    assert inversa[P(1, 1), P(2)] == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_inverse_kostka_is_inverse(n):
    K = kostka_matrix(n).as_matrix()
    assert K * inverse_kostka(n).as_matrix() == eye(K.rows)


def test_schur_expand_llt_example():
    c = schur_expand(llt_polynomial(LLTInstance(P(2), 2)))
    assert c.nonzero() == {P(4): ONE, P(3, 1): Q, P(2, 2): Q ** 2}


def test_schur_monomial_round_trip():
    for inst in [LLTInstance(P(1), 3), LLTInstance(P(2), 2), LLTInstance(P(1, 1), 2)]:
        g = llt_polynomial(inst)
        assert monomial_expand(schur_expand(g)) == g
    assert schur_expand(WeightIndexedPoly()) == WeightIndexedPoly()


@pytest.mark.parametrize("mu, n", [((1,), 2), ((1,), 3), ((2,), 2), ((1, 1), 2), ((2,), 3), ((2, 1), 2)])
def test_q_lr_at_one_is_tensor_multiplicity(mu, n):
    inst = LLTInstance(P(*mu), n)
    for nu in enumerate_partitions(inst.total_size):
        lr = q_littlewood_richardson(inst, nu)
        assert lr.is_nonnegative()
        assert lr.evaluate(1) == tensor_power_multiplicity(inst.mu, n, nu)
        assert sum((q_lr_component(inst, nu, i) for i in range(n)), ZERO) == lr


def test_tensor_power_multiplicity_examples():
    assert tensor_power_multiplicity(P(1), 3, P(2, 1)) == 2
    assert tensor_power_multiplicity(P(2), 2, P(2, 2)) == 1
    assert tensor_power_multiplicity(P(2), 2, P(2, 1, 1)) == 0
    with pytest.raises(ValueError):
        tensor_power_multiplicity(P(2), 2, P(3))


def test_q_lr_component_range():
    with pytest.raises(ValueError):
        q_lr_component(LLTInstance(P(1), 2), P(2), 2)


def test_plethysm_examples():
    assert plethysm_multiplicity(P(1, 1), P(2), P(3, 1)) == 1
    assert plethysm_multiplicity(P(2), P(2), P(3, 1)) == 0
    assert plethysm_multiplicity(P(2), P(2), P(2, 2)) == 1
    assert plethysm_multiplicity(P(2), P(1), P(2)) == 1
    assert plethysm_multiplicity(P(2), P(1), P(1, 1)) == 0
    assert plethysm_multiplicity(P(), P(2), P()) == 1
    with pytest.raises(ValueError):
        plethysm_multiplicity(P(2), P(2), P(3))


@pytest.mark.parametrize("lam, mu", [((2,), (2,)), ((1, 1), (2,)), ((2, 1), (1,)), ((3,), (2,)),
                                     ((2, 1), (2,)), ((1, 1, 1), (2,)), ((2,), (1, 1))])
def test_plethysm_matches_monomial_oracle(lam, mu):
    lam, mu = P(*lam), P(*mu)
    for nu in enumerate_partitions(lam.size * mu.size):
        assert plethysm_multiplicity(lam, mu, nu) == plethysm_oracle(lam, mu, nu)


def test_a_q_plethysm_specializes_to_multiplicity():
    inst = LLTInstance(P(2), 3)
    for lam in enumerate_partitions(3):
        for S in enumerate_standard(lam):
            for nu in enumerate_partitions(6):
                assert a_q_plethysm(S, inst, nu).evaluate(1) == plethysm_multiplicity(lam, inst.mu, nu)


def test_a_q_plethysm_rejects_wrong_size():
    with pytest.raises(ValueError):
        a_q_plethysm(StandardTableau.parse("1,2"), LLTInstance(P(2), 3), P(4, 2))


def test_k_lambda_i():
    assert [k_lambda_i(P(2, 1), i) for i in range(3)] == [0, 1, 1]
    assert [k_lambda_i(P(3), i) for i in range(3)] == [1, 0, 0]
    with pytest.raises(ValueError):
        k_lambda_i(P(2, 1), 3)


def test_mn_character():
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((1, 1, 1), (2, 1)) == -1
    assert mn_character((3,), (2, 1)) == 1
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            assert mn_character(lam, (1,) * n) == count_standard(lam)


def test_ramanujan_sum():
    assert ramanujan_sum(3, 0) == 2
    assert ramanujan_sum(3, 1) == -1
    assert ramanujan_sum(4, 2) == -2
    assert ramanujan_sum(1, 5) == 1
    with pytest.raises(ValueError):
        ramanujan_sum(0, 1)


def test_ramanujan_sum_without_deprecation_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert [ramanujan_sum(6, i) for i in range(6)] == [2, 1, -1, -2, -1, 1]
        assert cyclic_eigenspace_dim(P(2, 1), 1) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_cyclic_eigenspace_matches_maj_counts(n):
    for lam in enumerate_partitions(n):
        for i in range(n):
            assert cyclic_eigenspace_dim(lam, i) == k_lambda_i(lam, i)


@pytest.mark.parametrize("mu, n", [((1,), 3), ((2,), 2), ((2,), 3), ((1, 1), 3)])
def test_weight_space_dimension_matches_class_counts(mu, n):
    inst = LLTInstance(P(*mu), n)
    for nu in enumerate_partitions(inst.total_size):
        for i in range(n):
            assert weight_space_dimension(inst, nu, i) == count_class_i(inst, nu, i)


def test_negativity_scan_single_copy():
    relatorio = negativity_scan(LLTInstance(P(2, 1), 1))
    assert relatorio.findings == []
    assert relatorio.revalidated and relatorio.aggregates_nonnegative
    assert relatorio.to_json()['n'] == 1


def test_negativity_scan_aggregates_are_components():
    inst = LLTInstance(P(2), 2)
    relatorio = negativity_scan(inst, max_parts=2)
    assert all(len(a['nu']) <= 2 for a in relatorio.aggregates)
    for agregado in relatorio.aggregates:
        nu = Partition(tuple(agregado['nu']))
        assert agregado['text'] == str(q_lr_component(inst, nu, agregado['component']))
    assert all(f['revalidated'] for f in relatorio.findings)


def test_negativity_scan_finds_negative_coefficients():
    inst = LLTInstance(P(2), 4)
    relatorio = negativity_scan(inst, max_parts=3)
    assert relatorio.findings
    assert relatorio.revalidated and relatorio.aggregates_nonnegative
    assert all(f['revalidated'] and len(f['nu']) <= 3 for f in relatorio.findings)
    achado = {(f['S'], tuple(f['nu'])): f['text'] for f in relatorio.findings}
    assert achado[("1,2,3,4", (5, 2, 1))] == "-q^4+q^8"
    S = StandardTableau.parse("1,2,3,4")
    assert a_q_plethysm(S, inst, P(5, 2, 1)) == IntLaurentPoly({4: -1, 8: 1})
    assert a_q_plethysm(S, inst, P(5, 2, 1)).evaluate(1) == plethysm_multiplicity(P(4), P(2), P(5, 2, 1))


def test_table_to_csv():
    texto = table_to_csv([P(4), P(3, 1)], [("LR", [ONE, q_int(2)])])
    assert texto == 'statistic,4,"3,1"\nLR,1,1+q\n'


def test_maj_classes_cover_standard_tableaux():
    for n in range(1, 6):
        for lam in enumerate_partitions(n):
            assert sum(k_lambda_i(lam, i) for i in range(n)) == count_standard(lam)
            assert all(0 <= maj_standard(S) for S in enumerate_standard(lam))
