"""
Suítes de verificação: cada identidade é conferida por enumeração exaustiva
dentro de limites pequenos e o resultado volta como um relatório por suíte
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from llt_engine import (LLTInstance, component_split, component_split_by_maj, count_class_i,
                        d_min_closed, d_min_oracle, enumerate_tuples, inversion_number,
                        keylem_rhs, llt_coefficient, llt_coefficient_enumerated, rs_class_tuples,
                        rs_split, class_poly, theorem_a_rhs, theorem_b_rhs, tuple_maj)
from qseries import IntLaurentPoly, ZERO, q_multinomial
from symmetric_functions import (cyclic_eigenspace_dim, k_lambda_i, plethysm_multiplicity,
                                 plethysm_oracle, q_littlewood_richardson, q_lr_component,
                                 tensor_power_multiplicity, weight_space_dimension)
from tableaux import (Partition, StandardTableau, count_standard, enumerate_partitions,
                      enumerate_sstab, enumerate_standard, maj_standard)
from word_statistics import (alpha_prime, foata, foata_inverse, h_0_k, h_general, inv_word,
                             maj_word, rotate_gamma, word_to_text, words_of_weight)

logger = logging.getLogger(__name__)

SUITES = ('theorem-a', 'theorem-b', 'foata', 'h-family', 'dmu', 'positivity',
          'components', 'rs-split', 'kw', 'plethysm')

# limites padrão por suíte
DEFAULT_BOUNDS: Dict[str, Dict[str, int]] = {
    'theorem-a': {'max_cells': 3, 'max_copies': 4},
    'theorem-b': {'max_cells': 3, 'max_copies': 4},
    'foata': {'max_len': 7},
    'h-family': {'max_len': 5, 'max_parts': 3, 'max_k': 2},
    'dmu': {'max_cells': 4, 'max_copies': 3},
    'positivity': {'max_cells': 3, 'max_copies': 3},
    'components': {'max_cells': 3, 'max_copies': 3},
    'rs-split': {'max_cells': 2, 'max_copies': 3},
    'kw': {'max_n': 6},
    'plethysm': {'max_cells': 2, 'max_copies': 4},
}

# theorem-a também confere o coeficiente contra a soma upla por upla até este total de células
ENUMERATION_MAX_CELLS = 8


@dataclass
class SuiteReport:
    """Casos conferidos, falhas e o primeiro contraexemplo de uma suíte"""
    name: str
    cases: int = 0
    failures: int = 0
    first_counterexample: Optional[dict] = None
    notes: List[str] = field(default_factory=list)

    def record(self, ok: bool, counterexample: Callable[[], dict]):
        self.cases += 1
        if ok:
            return
        self.failures += 1
        if self.first_counterexample is None:
            self.first_counterexample = counterexample()
            logger.error(f"❌ Suíte {self.name}: {self.first_counterexample}")

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            'suite': self.name,
            'passed': self.passed,
            'cases': self.cases,
            'failures': self.failures,
            'first_counterexample': self.first_counterexample,
            'notes': self.notes,
        }


def _instances(max_cells: int, max_copies: int) -> Iterator[LLTInstance]:
    for tamanho in range(1, max_cells + 1):
        for mu in enumerate_partitions(tamanho):
            for n in range(1, max_copies + 1):
                yield LLTInstance(mu, n)


def _compositions(total: int, max_parts: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Composições de total com partes positivas"""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for primeiro in range(1, total + 1):
        for resto in _compositions(total - primeiro, None if max_parts is None else max_parts - 1):
            yield (primeiro,) + resto


def _header(inst: LLTInstance, nu: Partition) -> dict:
    return {'mu': list(inst.mu), 'n': inst.n, 'nu': list(nu)}


def suite_theorem_a(max_cells: int = 3, max_copies: int = 4) -> SuiteReport:
    relatorio = SuiteReport('theorem-a')
    for inst in _instances(max_cells, max_copies):
        logger.info(f"theorem-a: {inst}")
        for nu in enumerate_partitions(inst.total_size):
            g = llt_coefficient(inst, nu)
            if inst.total_size <= ENUMERATION_MAX_CELLS:
                e = llt_coefficient_enumerated((inst.mu,) * inst.n, tuple(nu))
                relatorio.record(e == g, lambda: {**_header(inst, nu), 'llt': str(g), 'enumerated': str(e)})
            a = theorem_a_rhs(inst, nu)
            relatorio.record(a == g, lambda: {**_header(inst, nu), 'llt': str(g), 'rhs': str(a)})
            k = keylem_rhs(inst, nu)
            relatorio.record(k == g, lambda: {**_header(inst, nu), 'llt': str(g), 'keylem': str(k)})
    return relatorio


def suite_theorem_b(max_cells: int = 3, max_copies: int = 4) -> SuiteReport:
    relatorio = SuiteReport('theorem-b')
    for inst in _instances(max_cells, max_copies):
        logger.info(f"theorem-b: {inst}")
        for nu in enumerate_partitions(inst.total_size):
            g = llt_coefficient(inst, nu)
            b = theorem_b_rhs(inst, nu)
            relatorio.record(b == g, lambda: {**_header(inst, nu), 'llt': str(g), 'rhs': str(b)})
            relatorio.record(b.is_zero() or b.min_degree >= 0,
                             lambda: {**_header(inst, nu), 'negative_exponent': b.min_degree})
    return relatorio


def suite_foata(max_len: int = 7) -> SuiteReport:
    relatorio = SuiteReport('foata')
    for n in range(0, max_len + 1):
        for nu in _compositions(n):
            palavras = words_of_weight(nu)
            imagens = set()
            soma_inv: List[int] = []
            soma_maj: List[int] = []
            for w in palavras:
                u = foata(w)
                imagens.add(u)
                soma_inv.append(inv_word(w))
                soma_maj.append(maj_word(w))
                relatorio.record(inv_word(u) == maj_word(w) and sorted(u) == sorted(w),
                                 lambda: {'word': word_to_text(w), 'foata': word_to_text(u)})
                relatorio.record(foata_inverse(u) == tuple(w),
                                 lambda: {'word': word_to_text(w), 'inverse': word_to_text(foata_inverse(u))})
            relatorio.record(imagens == set(palavras), lambda: {'weight': list(nu), 'not_bijective': True})
            esperado = q_multinomial(n, nu)
            relatorio.record(IntLaurentPoly.from_exponents(soma_inv) == esperado
                             and IntLaurentPoly.from_exponents(soma_maj) == esperado,
                             lambda: {'weight': list(nu), 'q_multinomial': str(esperado)})
    return relatorio


def _h_identity_holds(nu: Tuple[int, ...], kv: Tuple[int, ...], scaled: bool) -> Tuple[bool, bool]:
    n = sum(nu)
    esperado = q_multinomial(n, nu).shift(sum(k * v for k, v in zip(kv, nu)))
    palavras = words_of_weight(nu)
    lado_h = IntLaurentPoly.from_exponents(n * h_general(w, kv, scaled) + inv_word(w) for w in palavras)
    lado_alpha = IntLaurentPoly.from_exponents(n * alpha_prime(w, kv, scaled) + maj_word(w)
                                               for w in palavras)
    return lado_h == esperado, lado_alpha == esperado


def suite_h_family(max_len: int = 5, max_parts: int = 3, max_k: int = 2) -> SuiteReport:
    relatorio = SuiteReport('h-family')
    alternativa_ok = True
    for n in range(1, max_len + 1):
        for nu in _compositions(n, max_parts):
            for kv in product(range(-max_k, max_k + 1), repeat=len(nu)):
                h_ok, alpha_ok = _h_identity_holds(nu, kv, scaled=False)
                if not (h_ok and alpha_ok):
                    alt_h, alt_alpha = _h_identity_holds(nu, kv, scaled=True)
                    alternativa_ok = alternativa_ok and alt_h and alt_alpha
                relatorio.record(h_ok, lambda: {'weight': list(nu), 'k': list(kv), 'side': 'inv'})
                relatorio.record(alpha_ok, lambda: {'weight': list(nu), 'k': list(kv), 'side': 'maj'})
    # identidade da rotação: inv(gamma w) + a = inv(w) + n h_{0,1}(w)
    for n in range(1, max_len + 1):
        for a in range(0, n + 1):
            for w in words_of_weight((n - a, a)):
                relatorio.record(inv_word(rotate_gamma(w)) + a == inv_word(w) + n * h_0_k(w, 1),
                                 lambda: {'word': word_to_text(w), 'identity': 'rotation'})
    if not relatorio.passed:
        convencao = 'scaled' if alternativa_ok else 'none'
        logger.warning(f"⚠️ h-family falhou na convenção canônica; convenção que vale: {convencao}")
        relatorio.notes.append(f"alternative scaling holds: {alternativa_ok}")
    return relatorio


def suite_dmu(max_cells: int = 4, max_copies: int = 3, max_entry: Optional[int] = None) -> SuiteReport:
    relatorio = SuiteReport('dmu')
    exemplo = LLTInstance(Partition((2,)), 3)
    relatorio.record(d_min_closed(exemplo) == 0, lambda: {'mu': [2], 'n': 3, 'closed': d_min_closed(exemplo)})
    for inst in _instances(max_cells, max_copies):
        fechado = d_min_closed(inst)
        oraculo = d_min_oracle(inst, exhaustive=True, max_entry=max_entry)
        relatorio.record(fechado == oraculo,
                         lambda: {'mu': list(inst.mu), 'n': inst.n, 'closed': fechado, 'oracle': oraculo})
    # independência das entradas nas uplas constantes
    for tamanho in range(1, max_cells + 1):
        for mu in enumerate_partitions(tamanho):
            for T in enumerate_sstab(mu, max_entry=4):
                for n in range(1, 5):
                    esperado = d_min_closed(LLTInstance(mu, n))
                    obtido = inversion_number((T,) * n)
                    relatorio.record(obtido == esperado,
                                     lambda: {'tableau': T.to_text(), 'n': n, 'inv': obtido, 'closed': esperado})
    return relatorio


def suite_positivity(max_cells: int = 3, max_copies: int = 3, fast: bool = False) -> SuiteReport:
    relatorio = SuiteReport('positivity')
    for inst in _instances(max_cells, max_copies):
        logger.info(f"positivity: {inst}")
        for nu in enumerate_partitions(inst.total_size):
            lr = q_littlewood_richardson(inst, nu, fast)
            relatorio.record(lr.is_nonnegative(), lambda: {**_header(inst, nu), 'lr': str(lr)})
            tensor = tensor_power_multiplicity(inst.mu, inst.n, nu)
            relatorio.record(lr.evaluate(1) == tensor,
                             lambda: {**_header(inst, nu), 'lr_at_1': lr.evaluate(1), 'tensor': tensor})
            soma = ZERO
            for i in range(inst.n):
                comp = q_lr_component(inst, nu, i, fast)
                soma = soma + comp
                relatorio.record(comp.is_nonnegative(),
                                 lambda: {**_header(inst, nu), 'component': i, 'lr_i': str(comp)})
            relatorio.record(soma == lr, lambda: {**_header(inst, nu), 'components_sum': str(soma)})
    return relatorio


def suite_components(max_cells: int = 3, max_copies: int = 3) -> SuiteReport:
    relatorio = SuiteReport('components')
    exemplo = LLTInstance(Partition((2,)), 3)
    esperado = ['1+q^3', 'q+q^4', '2q^2']
    obtido = [str(p) for p in component_split(exemplo, Partition((4, 2)))]
    relatorio.record(obtido == esperado, lambda: {'mu': [2], 'n': 3, 'nu': [4, 2], 'components': obtido})
    for inst in _instances(max_cells, max_copies):
        for nu in enumerate_partitions(inst.total_size):
            por_residuo = component_split(inst, nu)
            por_maj = component_split_by_maj(inst, nu)
            relatorio.record(por_residuo == por_maj,
                             lambda: {**_header(inst, nu), 'by_residue': [str(p) for p in por_residuo],
                                      'by_maj': [str(p) for p in por_maj]})
            relatorio.record(sum(por_residuo, ZERO) == llt_coefficient(inst, nu),
                             lambda: {**_header(inst, nu), 'sum': str(sum(por_residuo, ZERO))})
            for i in range(inst.n):
                k = count_class_i(inst, nu, i)
                relatorio.record(k == por_residuo[i].evaluate(1),
                                 lambda: {**_header(inst, nu), 'component': i, 'count': k})
    return relatorio


def suite_rs_split(max_cells: int = 2, max_copies: int = 3) -> SuiteReport:
    relatorio = SuiteReport('rs-split')
    exemplo = LLTInstance(Partition((2,)), 3)
    S = StandardTableau(((1, 2), (3,)))
    classe = {str(t) for t in rs_class_tuples(S, exemplo, Partition((4, 2)))}
    total = sum(1 for _ in enumerate_tuples(exemplo, Partition((4, 2))))
    relatorio.record(classe == {'(12,12,11)', '(11,22,11)'} and total == 6,
                     lambda: {'class': sorted(classe), 'total': total})
    for inst in _instances(max_cells, max_copies):
        for nu in enumerate_partitions(inst.total_size):
            todas = list(enumerate_tuples(inst, nu))
            classes = rs_split(inst, nu)
            reunidas = [t for lista in classes.values() for t in lista]
            relatorio.record(len(reunidas) == len(todas) and set(reunidas) == set(todas),
                             lambda: {**_header(inst, nu), 'tuples': len(todas), 'classified': len(reunidas)})
            for S_q, lista in classes.items():
                relatorio.record(all(tuple_maj(t) == maj_standard(S_q) for t in lista),
                                 lambda: {**_header(inst, nu), 'S': S_q.to_text(), 'maj_mismatch': True})
            componentes = component_split(inst, nu)
            padroes = [S_q for lam in enumerate_partitions(inst.n) for S_q in enumerate_standard(lam)]
            for i in range(inst.n):
                soma = sum((class_poly(S_q, inst, nu) for S_q in padroes
                            if maj_standard(S_q) % inst.n == i), ZERO)
                relatorio.record(soma == componentes[i],
                                 lambda: {**_header(inst, nu), 'component': i, 'class_sum': str(soma)})
                dim = weight_space_dimension(inst, nu, i)
                relatorio.record(dim == count_class_i(inst, nu, i),
                                 lambda: {**_header(inst, nu), 'component': i, 'weight_space': dim})
    return relatorio


def suite_kw(max_n: int = 6) -> SuiteReport:
    relatorio = SuiteReport('kw')
    for n in range(1, max_n + 1):
        for lam in enumerate_partitions(n):
            for i in range(n):
                dim = cyclic_eigenspace_dim(lam, i)
                k = k_lambda_i(lam, i)
                relatorio.record(dim == k, lambda: {'lambda': list(lam), 'i': i, 'eigenspace': dim, 'K': k})
    return relatorio


def suite_plethysm(max_cells: int = 2, max_copies: int = 4, fast: bool = False) -> SuiteReport:
    relatorio = SuiteReport('plethysm')
    for inst in _instances(max_cells, max_copies):
        logger.info(f"plethysm: {inst}")
        externas = enumerate_partitions(inst.n)
        for nu in enumerate_partitions(inst.total_size):
            multiplicidades = {}
            for lam in externas:
                via_rs = plethysm_multiplicity(lam, inst.mu, nu)
                via_oraculo = plethysm_oracle(lam, inst.mu, nu)
                relatorio.record(via_rs == via_oraculo,
                                 lambda: {**_header(inst, nu), 'lambda': list(lam),
                                          'rs': via_rs, 'oracle': via_oraculo})
                multiplicidades[lam] = via_rs
            for i in range(inst.n):
                lado_esq = q_lr_component(inst, nu, i, fast).evaluate(1)
                lado_dir = sum(multiplicidades[lam] * k_lambda_i(lam, i) for lam in externas)
                relatorio.record(lado_esq == lado_dir,
                                 lambda: {**_header(inst, nu), 'component': i, 'lr_i_at_1': lado_esq,
                                          'plethysm_sum': lado_dir})
            tensor = tensor_power_multiplicity(inst.mu, inst.n, nu)
            soma_f = sum(count_standard(lam) * multiplicidades[lam] for lam in externas)
            relatorio.record(soma_f == tensor, lambda: {**_header(inst, nu), 'sum_f': soma_f, 'tensor': tensor})
    return relatorio


RUNNERS: Dict[str, Callable[..., SuiteReport]] = {
    'theorem-a': suite_theorem_a,
    'theorem-b': suite_theorem_b,
    'foata': suite_foata,
    'h-family': suite_h_family,
    'dmu': suite_dmu,
    'positivity': suite_positivity,
    'components': suite_components,
    'rs-split': suite_rs_split,
    'kw': suite_kw,
    'plethysm': suite_plethysm,
}


def run_suite(name: str, overrides: Optional[Dict[str, Optional[int]]] = None,
              fast: bool = False) -> SuiteReport:
    """Executa uma suíte com os limites padrão sobrescritos pelos valores não nulos"""
    if name not in RUNNERS:
        raise ValueError(f"Suíte desconhecida: {name}")
    limites = dict(DEFAULT_BOUNDS[name])
    for chave, valor in (overrides or {}).items():
        if valor is not None and (chave in limites or (name == 'dmu' and chave == 'max_entry')):
            limites[chave] = valor
    if name in ('positivity', 'plethysm'):
        limites['fast'] = fast
    logger.info(f"Rodando suíte {name} com {limites}")
    relatorio = RUNNERS[name](**limites)
    simbolo = "✅" if relatorio.passed else "❌"
    logger.info(f"{simbolo} {name}: {relatorio.cases} casos, {relatorio.failures} falhas")
    return relatorio
