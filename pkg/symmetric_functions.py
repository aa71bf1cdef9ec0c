"""
Funções simétricas em coordenadas monomiais: Kostka e Kostka inversa,
expansão de Schur, coeficientes q-Littlewood-Richardson e suas componentes,
multiplicidades de pletismo (via separação RS e via substituição monomial),
os polinômios a_{S[mu]}^nu(q), a busca por coeficientes negativos e a
verificação por caracteres da dimensão dos autoespaços de um n-ciclo
"""
import csv
import io
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import Matrix, divisors, eye
from sympy.functions.combinatorial.numbers import mobius

from llt_engine import (LLTInstance, alpha_statistic, class_poly, component_split, d_min_closed,
                        enumerate_tuples, llt_coefficient_by, rs_class_tuples)
from qseries import IntLaurentPoly, WeightIndexedPoly, ZERO
from tableaux import (Partition, StandardTableau, enumerate_partitions,
                      enumerate_sstab, enumerate_standard, maj_standard, reading_word,
                      row_superstandard, rs_correspondence)

logger = logging.getLogger(__name__)


def _horizontal_strips(shape: Tuple[int, ...], size: int) -> Iterator[Tuple[int, ...]]:
    """Partições kappa contidas em shape com shape/kappa faixa horizontal de tamanho size"""
    partes = list(shape)

    def recursao(i: int, falta: int, acumulado: List[int]):
        if i == len(partes):
            if falta == 0:
                yield tuple(p for p in acumulado if p > 0)
            return
        minimo = partes[i + 1] if i + 1 < len(partes) else 0
        for kappa_i in range(partes[i], minimo - 1, -1):
            removido = partes[i] - kappa_i
            if removido > falta:
                break
            acumulado.append(kappa_i)
            yield from recursao(i + 1, falta - removido, acumulado)
            acumulado.pop()

    yield from recursao(0, size, [])


@lru_cache(maxsize=None)
def _kostka(shape: Tuple[int, ...], weight: Tuple[int, ...]) -> int:
    if not weight:
        return 1 if not shape else 0
    return sum(_kostka(kappa, weight[:-1]) for kappa in _horizontal_strips(shape, weight[-1]))


def kostka(lam: Sequence[int], nu: Sequence[int]) -> int:
    """
    K_{lambda,nu} = #SSTab(lambda, nu), retirando a maior letra como faixa
    horizontal; nu pode ser composição (zeros permitidos)
    """
    if sum(lam) != sum(nu):
        raise ValueError(f"|lambda| = {sum(lam)} difere de |nu| = {sum(nu)}")
    return _kostka(tuple(lam), tuple(int(v) for v in nu))


@dataclass(frozen=True)
class KostkaMatrix:
    """Matriz indexada por partições de size, na ordem lexicográfica reversa"""
    size: int
    partitions: Tuple[Partition, ...]
    entries: Dict[Tuple[Partition, Partition], int] = field(compare=False)

    def __getitem__(self, key: Tuple[Partition, Partition]) -> int:
        return self.entries.get(key, 0)

    def as_matrix(self) -> Matrix:
        return Matrix(len(self.partitions), len(self.partitions),
                      lambda i, j: self[self.partitions[i], self.partitions[j]])


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> KostkaMatrix:
    particoes = enumerate_partitions(n)
    entradas = {}
    for lam in particoes:
        for nu in particoes:
            valor = kostka(lam, nu)
            if valor:
                entradas[(lam, nu)] = valor
    return KostkaMatrix(n, particoes, entradas)


@lru_cache(maxsize=None)
def inverse_kostka(n: int) -> KostkaMatrix:
    """
    Inversa exata da matriz de Kostka: m_lambda = sum K^-1_{lambda,nu} s_nu.
    Na ordem lexicográfica reversa K é unitriangular superior.
    """
    K = kostka_matrix(n)
    M = K.as_matrix()
    tamanho = len(K.partitions)
    inversa = M.upper_triangular_solve(eye(tamanho))
    if M * inversa != eye(tamanho):
        raise ArithmeticError(f"K * K^-1 != I para n={n}")
    entradas = {}
    for i, lam in enumerate(K.partitions):
        for j, nu in enumerate(K.partitions):
            valor = inversa[i, j]
            if valor != 0:
                if not valor.is_integer:
                    raise ArithmeticError(f"Entrada não inteira em K^-1: {valor}")
                entradas[(lam, nu)] = int(valor)
    logger.info(f"Kostka inversa n={n}: {tamanho}x{tamanho}")
    return KostkaMatrix(n, K.partitions, entradas)


def schur_expand(f: WeightIndexedPoly) -> WeightIndexedPoly:
    """c_nu = sum_rho K^-1_{rho,nu} f(rho)"""
    if f.size is None:
        return WeightIndexedPoly()
    inversa = inverse_kostka(f.size)
    resultado = {}
    for nu in inversa.partitions:
        total = ZERO
        for rho in inversa.partitions:
            coef = inversa[rho, nu]
            if coef:
                total = total + coef * f[rho]
        resultado[nu] = total
    return WeightIndexedPoly(resultado)


def monomial_expand(c: WeightIndexedPoly) -> WeightIndexedPoly:
    """Inverso de schur_expand: f(rho) = sum_lambda c_lambda K_{lambda,rho}"""
    if c.size is None:
        return WeightIndexedPoly()
    K = kostka_matrix(c.size)
    resultado = {}
    for rho in K.partitions:
        total = ZERO
        for lam in K.partitions:
            coef = K[lam, rho]
            if coef:
                total = total + coef * c[lam]
        resultado[rho] = total
    return WeightIndexedPoly(resultado)


def _schur_coefficient(nu: Partition, coefficient_at) -> IntLaurentPoly:
    inversa = inverse_kostka(nu.size)
    total = ZERO
    for rho in inversa.partitions:
        coef = inversa[rho, nu]
        if coef:
            total = total + coef * coefficient_at(rho)
    return total


def q_littlewood_richardson(inst: LLTInstance, nu: Partition, fast: bool = False) -> IntLaurentPoly:
    """LR~_{mu,nu}(q) = sum_rho K^-1_{rho,nu} G_{mu,rho}(q)"""
    inst.check_weight(nu)
    return _schur_coefficient(nu, lambda rho: llt_coefficient_by(inst, rho, fast))


def q_lr_component(inst: LLTInstance, nu: Partition, i: int, fast: bool = False) -> IntLaurentPoly:
    """LR~^{(i)} = sum_rho K^-1_{rho,nu} G^{(i)}_{mu,rho}(q)"""
    inst.check_weight(nu)
    if not 0 <= i < inst.n:
        raise ValueError(f"Resíduo {i} fora de 0..{inst.n - 1}")
    return _schur_coefficient(nu, lambda rho: component_split(inst, rho, fast)[i])


def _compositions_bounded(total: int, bounds: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Composições fracas de total com parte i <= bounds[i]"""
    if not bounds:
        if total == 0:
            yield ()
        return
    for primeiro in range(min(total, bounds[0]), -1, -1):
        for resto in _compositions_bounded(total - primeiro, bounds[1:]):
            yield (primeiro,) + resto


@lru_cache(maxsize=None)
def _power_monomial(mu: Tuple[int, ...], n: int, remaining: Tuple[int, ...]) -> int:
    """Coeficiente de x^remaining em s_mu^n"""
    if n == 0:
        return 1 if not any(remaining) else 0
    tamanho = sum(mu)
    total = 0
    for alpha in _compositions_bounded(tamanho, remaining):
        k = _kostka(mu, alpha)
        if k:
            total += k * _power_monomial(mu, n - 1, tuple(r - a for r, a in zip(remaining, alpha)))
    return total


def tensor_power_multiplicity(mu: Partition, n: int, nu: Partition) -> int:
    """[V_mu^{tensor n} : V_nu] por aritmética monomial de s_mu^n"""
    if nu.size != n * mu.size:
        raise ValueError(f"|nu| = {nu.size} difere de n|mu| = {n * mu.size}")
    inversa = inverse_kostka(nu.size)
    return sum(inversa[rho, nu] * _power_monomial(tuple(mu), n, tuple(rho))
               for rho in inversa.partitions if inversa[rho, nu])


def plethysm_multiplicity(lam: Partition, mu: Partition, nu: Partition) -> int:
    """
    a_{lambda[mu]}^nu = sum_rho K^-1_{rho,nu} #SSTab(S[mu], rho), com S o
    tableau superstandard por linhas de forma lambda
    """
    if nu.size != lam.size * mu.size:
        raise ValueError(f"|nu| = {nu.size} difere de |lambda||mu| = {lam.size * mu.size}")
    if lam.size == 0:
        return 1 if nu.size == 0 else 0
    inst = LLTInstance(mu, lam.size)
    S = row_superstandard(lam)
    inversa = inverse_kostka(nu.size)
    return sum(inversa[rho, nu] * len(rs_class_tuples(S, inst, rho))
               for rho in inversa.partitions if inversa[rho, nu])


def _plethysm_monomial(lam: Partition, mu: Partition, rho: Tuple[int, ...]) -> int:
    """Coeficiente de x^rho em s_lambda[s_mu]: preenchimentos de lambda por SSTab(mu)"""
    L = len(rho)
    variaveis = []
    for T in enumerate_sstab(mu, max_entry=L):
        peso = [0] * L
        for x in reading_word(T):
            peso[x - 1] += 1
        variaveis.append(tuple(peso))
    celulas = lam.cells()
    linhas = [[-1] * p for p in lam.parts]
    restante = list(rho)
    contagem = [0]

    def recursao(idx: int):
        if idx == len(celulas):
            if not any(restante):
                contagem[0] += 1
            return
        r, c = celulas[idx]
        minimo = 0
        if c > 0:
            minimo = max(minimo, linhas[r][c - 1])
        if r > 0:
            minimo = max(minimo, linhas[r - 1][c] + 1)
        for v in range(minimo, len(variaveis)):
            peso = variaveis[v]
            if any(peso[x] > restante[x] for x in range(L)):
                continue
            for x in range(L):
                restante[x] -= peso[x]
            linhas[r][c] = v
            recursao(idx + 1)
            for x in range(L):
                restante[x] += peso[x]
        linhas[r][c] = -1

    recursao(0)
    return contagem[0]


def plethysm_oracle(lam: Partition, mu: Partition, nu: Partition) -> int:
    """a_{lambda[mu]}^nu por substituição monomial, sem RS"""
    if nu.size != lam.size * mu.size:
        raise ValueError(f"|nu| = {nu.size} difere de |lambda||mu| = {lam.size * mu.size}")
    inversa = inverse_kostka(nu.size)
    return sum(inversa[rho, nu] * _plethysm_monomial(lam, mu, tuple(rho))
               for rho in inversa.partitions if inversa[rho, nu])


def a_q_plethysm(S: StandardTableau, inst: LLTInstance, nu: Partition) -> IntLaurentPoly:
    """a_{S[mu]}^nu(q) = sum_rho K^-1_{rho,nu} G_{S[mu],rho}(q); pode ter coeficientes negativos"""
    inst.check_weight(nu)
    if S.size != inst.n:
        raise ValueError(f"|S| = {S.size} difere de n = {inst.n}")
    return _schur_coefficient(nu, lambda rho: class_poly(S, inst, rho))


def k_lambda_i(lam: Partition, i: int) -> int:
    """K_lambda^{(i)} = #{S em STab(lambda): maj(S) = i mod |lambda|}"""
    n = lam.size
    if n == 0:
        raise ValueError("lambda vazia não define resíduo")
    if not 0 <= i < n:
        raise ValueError(f"Resíduo {i} fora de 0..{n - 1}")
    return sum(1 for S in enumerate_standard(lam) if maj_standard(S) % n == i)


def _beta_to_partition(beta: Sequence[int]) -> Tuple[int, ...]:
    ordenado = sorted(beta, reverse=True)
    ell = len(ordenado)
    return tuple(p for p in (b - (ell - 1 - i) for i, b in enumerate(ordenado)) if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: Tuple[int, ...], cycle: Tuple[int, ...]) -> int:
    if not cycle:
        return 1 if not lam else 0
    r = cycle[0]
    ell = len(lam)
    beta = {lam[i] + (ell - 1 - i) for i in range(ell)}
    total = 0
    for b in beta:
        alvo = b - r
        if alvo < 0 or alvo in beta:
            continue
        altura = sum(1 for x in beta if alvo < x < b)
        novo = (beta - {b}) | {alvo}
        total += (-1) ** altura * _mn(_beta_to_partition(novo), cycle[1:])
    return total


def mn_character(lam: Sequence[int], cycle_type: Sequence[int]) -> int:
    """chi^lambda(tipo de ciclo) pela regra de Murnaghan-Nakayama (remoção de contas)"""
    if sum(lam) != sum(cycle_type):
        raise ValueError(f"|lambda| = {sum(lam)} difere do tipo de ciclo {sum(cycle_type)}")
    return _mn(tuple(lam), tuple(sorted(cycle_type, reverse=True)))


def ramanujan_sum(n: int, i: int) -> int:
    """c_n(i) = sum_{d | gcd(n,i)} mobius(n/d) d"""
    if n < 1:
        raise ValueError(f"n deve ser >= 1, recebido {n}")
    return sum(int(mobius(n // d)) * d for d in divisors(gcd(n, i)))


def cyclic_eigenspace_dim(lam: Partition, i: int) -> int:
    """
    Dimensão do autoespaço zeta_n^i de um n-ciclo em S^lambda:
    (1/n) sum_{g | n} chi^lambda((n/g)^g) c_{n/g}(i)
    """
    n = lam.size
    if n == 0:
        raise ValueError("lambda vazia não define n-ciclo")
    total = sum(mn_character(lam, (n // g,) * g) * ramanujan_sum(n // g, i) for g in divisors(n))
    if total % n:
        raise ArithmeticError(f"Dimensão não inteira para lambda={lam}, i={i}: {total}/{n}")
    return total // n


def weight_space_dimension(inst: LLTInstance, nu: Partition, i: int) -> int:
    """sum_lambda K_lambda^{(i)} #SSTab(S_lambda[mu], nu), S_lambda superstandard por linhas"""
    if not 0 <= i < inst.n:
        raise ValueError(f"Resíduo {i} fora de 0..{inst.n - 1}")
    return sum(k_lambda_i(lam, i) * len(rs_class_tuples(row_superstandard(lam), inst, nu))
               for lam in enumerate_partitions(inst.n))


def _a_q_plethysm_recomputed(S: StandardTableau, inst: LLTInstance, nu: Partition) -> IntLaurentPoly:
    """Recalcula a_{S[mu]}^nu(q) sem caches: filtra todas as uplas e inverte K pelo sympy"""
    particoes = enumerate_partitions(nu.size)
    K = Matrix(len(particoes), len(particoes),
               lambda a, b: len(enumerate_sstab(particoes[a], weight=tuple(particoes[b]))))
    inversa = K.inv()
    j = particoes.index(nu)
    base = maj_standard(S) + d_min_closed(inst)
    total = ZERO
    for a, rho in enumerate(particoes):
        coef = int(inversa[a, j])
        if not coef:
            continue
        classe = IntLaurentPoly.from_exponents(
            inst.n * alpha_statistic(t) + base
            for t in enumerate_tuples(inst, rho) if rs_correspondence(t.components).Q == S)
        total = total + coef * classe
    return total


@dataclass
class NegativityReport:
    """Resultado da busca por coeficientes negativos em a_{S[mu]}^nu(q)"""
    mu: Partition
    n: int
    findings: List[dict] = field(default_factory=list)
    aggregates: List[dict] = field(default_factory=list)
    revalidated: bool = True
    aggregates_nonnegative: bool = True

    def to_json(self) -> dict:
        return {
            'mu': list(self.mu),
            'n': self.n,
            'findings': self.findings,
            'revalidated': self.revalidated,
            'aggregates_nonnegative': self.aggregates_nonnegative,
            'aggregates': self.aggregates,
        }


def negativity_scan(inst: LLTInstance, max_parts: Optional[int] = None) -> NegativityReport:
    """
    Percorre (S, nu) com S standard de tamanho n e l(nu) <= max_parts e registra
    todo a_{S[mu]}^nu(q) com coeficiente negativo; cada achado é recalculado
    e as somas por classe de maj mod n são conferidas
    """
    relatorio = NegativityReport(inst.mu, inst.n)
    tableaux = [S for lam in enumerate_partitions(inst.n) for S in enumerate_standard(lam)]
    for nu in enumerate_partitions(inst.total_size):
        if max_parts is not None and len(nu) > max_parts:
            continue
        por_classe = [ZERO] * inst.n
        for S in tableaux:
            a = a_q_plethysm(S, inst, nu)
            por_classe[maj_standard(S) % inst.n] += a
            if a.is_nonnegative():
                continue
            confere = _a_q_plethysm_recomputed(S, inst, nu) == a
            if not confere:
                logger.error(f"Achado não confere na recomputação: S={S.to_text()} nu={nu}")
                relatorio.revalidated = False
            logger.warning(f"Coeficiente negativo: S={S.to_text()} nu=({nu}) a(q)={a}")
            relatorio.findings.append({'S': S.to_text(), 'nu': list(nu),
                                       'poly': a.to_json(), 'text': str(a), 'revalidated': confere})
        for i, soma in enumerate(por_classe):
            ok = soma.is_nonnegative()
            if not ok:
                relatorio.aggregates_nonnegative = False
            relatorio.aggregates.append({'nu': list(nu), 'component': i,
                                         'poly': soma.to_json(), 'text': str(soma),
                                         'nonnegative': ok})
    logger.info(f"Busca de negativos {inst}: {len(relatorio.findings)} achados")
    return relatorio


def table_to_csv(columns: Sequence[Partition], rows: Sequence[Tuple[str, Sequence[IntLaurentPoly]]]) -> str:
    """Cabeçalho statistic,<nu_1>,...; uma linha por estatística com polinômios canônicos"""
    saida = io.StringIO()
    escritor = csv.writer(saida, lineterminator='\n')
    escritor.writerow(['statistic'] + [str(nu) for nu in columns])
    for nome, polinomios in rows:
        escritor.writerow([nome] + [str(p) for p in polinomios])
    return saida.getvalue()
