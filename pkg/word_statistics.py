"""
Estatísticas mahonianas em palavras: inv, maj, bijeção de Foata, rotação,
agenda de transposições que ordena uma palavra e a família de estatísticas h
com sua companheira alpha' do lado do maj

Bijeção de Foata (fatoração pela última letra):
    Phi(x) = x para uma letra. Para w = v.x, seja u = Phi(v).
    Se a última letra de u é maior que x, corta-se u em blocos que terminam
    em letras > x; caso contrário, em blocos que terminam em letras <= x.
    Cada bloco é girado (última letra vai para a frente) e x é anexado ao fim.
A inversa lê o processo de trás para frente: os blocos girados começam nas
letras que satisfazem a mesma condição.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from sympy.utilities.iterables import multiset_permutations

from tableaux import Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KVector:
    """Vetor (k_1, ..., k_m) de inteiros, um por valor de letra"""
    ks: Tuple[int, ...]

    def __post_init__(self):
        valores = tuple(int(k) for k in self.ks)
        if not valores:
            raise ValueError("KVector precisa de pelo menos uma entrada")
        object.__setattr__(self, 'ks', valores)

    def __len__(self):
        return len(self.ks)

    def __iter__(self):
        return iter(self.ks)

    def __getitem__(self, i):
        return self.ks[i]

    def pairing(self, weight: Sequence[int]) -> int:
        """Soma k_i * nu_i"""
        return sum(k * v for k, v in zip(self.ks, weight))


@dataclass(frozen=True)
class TranspositionSchedule:
    """Sequência de transposições adjacentes s_i = (i-1, i), em ordem de aplicação"""
    indices: Tuple[int, ...] = ()

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


KLike = Union[KVector, Sequence[int]]


def _as_k(kv: KLike) -> KVector:
    return kv if isinstance(kv, KVector) else KVector(tuple(kv))


def word_from_text(text: str) -> Word:
    """Aceita "12312" (um dígito por letra) ou "10,2,3" (separado por vírgulas)"""
    texto = text.strip()
    if not texto:
        return ()
    try:
        if ',' in texto:
            letras = tuple(int(t.strip()) for t in texto.split(','))
        else:
            letras = tuple(int(ch) for ch in texto)
    except ValueError:
        raise ValueError(f"Palavra inválida: {text!r}")
    if any(l < 1 for l in letras):
        raise ValueError(f"Palavra com letra não positiva: {text!r}")
    return letras


def word_to_text(w: Sequence[int]) -> str:
    if all(l <= 9 for l in w):
        return "".join(str(l) for l in w)
    return ",".join(str(l) for l in w)


@lru_cache(maxsize=None)
def _words_of_weight(weight: Tuple[int, ...]) -> Tuple[Word, ...]:
    letras = [letra for letra, vezes in enumerate(weight, start=1) for _ in range(vezes)]
    if not letras:
        return ((),)
    return tuple(tuple(p) for p in multiset_permutations(letras))


def words_of_weight(weight: Sequence[int]) -> Tuple[Word, ...]:
    """Word(nu): todas as palavras com peso nu, em ordem lexicográfica"""
    peso = tuple(int(v) for v in weight)
    if any(v < 0 for v in peso):
        raise ValueError(f"Peso com parte negativa: {peso}")
    return _words_of_weight(peso)


def inv_word(w: Sequence[int]) -> int:
    """#{(i,j): i<j, w_i > w_j}"""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descents_word(w: Sequence[int]) -> List[int]:
    """Posições i (base 1) com w_i > w_{i+1}"""
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


def maj_word(w: Sequence[int]) -> int:
    return sum(descents_word(w))


def _cut_blocks(u: Sequence[int], closes) -> List[List[int]]:
    blocos: List[List[int]] = []
    atual: List[int] = []
    for letra in u:
        atual.append(letra)
        if closes(letra):
            blocos.append(atual)
            atual = []
    if atual:
        blocos.append(atual)
    return blocos


def foata(w: Sequence[int]) -> Word:
    """Bijeção de Foata: inv(foata(w)) = maj(w), preservando o peso"""
    if not w:
        return ()
    u: List[int] = [w[0]]
    for x in w[1:]:
        if u[-1] > x:
            blocos = _cut_blocks(u, lambda letra: letra > x)
        else:
            blocos = _cut_blocks(u, lambda letra: letra <= x)
        u = [letra for bloco in blocos for letra in [bloco[-1]] + bloco[:-1]]
        u.append(x)
    return tuple(u)


def foata_inverse(w: Sequence[int]) -> Word:
    """Inversa de foata, desfazendo as rotações da última letra para a primeira"""
    restante = list(w)
    sufixo: List[int] = []
    while len(restante) > 1:
        x = restante.pop()
        if restante[0] > x:
            abre = lambda letra: letra > x
        else:
            abre = lambda letra: letra <= x
        blocos: List[List[int]] = []
        for letra in restante:
            if abre(letra) or not blocos:
                blocos.append([letra])
            else:
                blocos[-1].append(letra)
        restante = [letra for bloco in blocos for letra in bloco[1:] + [bloco[0]]]
        sufixo.append(x)
    return tuple(restante + sufixo[::-1])


def rotate_gamma(w: Sequence[int]) -> Word:
    """gamma(w) = w_n w_1 ... w_{n-1}"""
    if not w:
        raise ValueError("rotate_gamma exige palavra não vazia")
    return (w[-1],) + tuple(w[:-1])


def _check_binary(w: Sequence[int]):
    if any(letra not in (1, 2) for letra in w):
        raise ValueError(f"Palavra não binária: {word_to_text(w)}")


def h_0_k(w: Sequence[int], k: int) -> int:
    """
    Conta os 2 nas k últimas letras da extensão cíclica de w (k > 0).
    Para k < 0 devolve o NEGATIVO da contagem nas |k| primeiras letras.

    Returns:
        inteiro com sinal; 0 para k = 0 ou palavra vazia
    """
    _check_binary(w)
    n = len(w)
    if n == 0 or k == 0:
        return 0
    total_dois = sum(1 for letra in w if letra == 2)
    voltas, resto = divmod(abs(k), n)
    if k > 0:
        janela = w[n - resto:] if resto else ()
        return voltas * total_dois + sum(1 for letra in janela if letra == 2)
    janela = w[:resto]
    return -(voltas * total_dois + sum(1 for letra in janela if letra == 2))


def h_two(w: Sequence[int], k1: int, k2: int) -> int:
    """h_{k1,k2}(w) = k1 + h_{0,k2-k1}(w)"""
    return k1 + h_0_k(w, -k1 + k2)


def split_word(w: Sequence[int]) -> Tuple[Word, Word]:
    """
    Returns:
        (w', w''): w' sem as letras 1; w'' com toda letra > 1 trocada por 2
    """
    w_linha = tuple(letra for letra in w if letra != 1)
    w_duas = tuple(1 if letra == 1 else 2 for letra in w)
    return w_linha, w_duas


def merge_words(w_prime: Sequence[int], w_doubleprime: Sequence[int]) -> Word:
    """Reconstrói w a partir de split_word(w)"""
    _check_binary(w_doubleprime)
    if any(letra == 1 for letra in w_prime):
        raise ValueError("w' não pode conter a letra 1")
    dois = sum(1 for letra in w_doubleprime if letra == 2)
    if dois != len(w_prime):
        raise ValueError(f"w'' tem {dois} letras 2 mas w' tem comprimento {len(w_prime)}")
    fonte = iter(w_prime)
    return tuple(1 if letra == 1 else next(fonte) for letra in w_doubleprime)


def h_general(w: Sequence[int], kv: KLike, scaled: bool = False) -> int:
    """
    Estatística h_{k_1,...,k_m}(w) pela recursão
        h(w) = h_two(w'', k_1, h_{k_2,...,k_m}(w' deslocada))
    com base m = 1 devolvendo k_1. Garante
        q^{sum k_i nu_i} [n; nu]_q = sum_w q^{n h(w) + inv(w)}.
    scaled=True multiplica o segundo índice por (n - nu_1), a convenção alternativa.
    """
    ks = _as_k(kv).ks
    if w and max(w) > len(ks):
        raise ValueError(f"Letra {max(w)} excede o comprimento do vetor k ({len(ks)})")
    return _h_general(tuple(w), ks, scaled)


def _h_general(w: Word, ks: Tuple[int, ...], scaled: bool) -> int:
    if len(ks) == 1:
        return ks[0]
    w_linha, w_duas = split_word(w)
    interno = _h_general(tuple(letra - 1 for letra in w_linha), ks[1:], scaled)
    if scaled:
        interno *= len(w_linha)
    return h_two(w_duas, ks[0], interno)


def alpha_prime(w: Sequence[int], kv: KLike, scaled: bool = False) -> int:
    """alpha'(w) = h(foata(w)): sum_w q^{n alpha'(w) + maj(w)} = q^{sum k_i nu_i} [n; nu]_q"""
    return h_general(foata(w), kv, scaled=scaled)


def sort_schedule(w: Sequence[int]) -> TranspositionSchedule:
    """
    Leva o menor valor (ocorrência mais à esquerda) para a primeira posição
    livre por transposições adjacentes, repetindo até ordenar
    """
    atual = list(w)
    indices: List[int] = []
    for p in range(len(atual)):
        j = min(range(p, len(atual)), key=lambda i: (atual[i], i))
        for i in range(j, p, -1):
            atual[i - 1], atual[i] = atual[i], atual[i - 1]
            indices.append(i)
    return TranspositionSchedule(tuple(indices))


def apply_schedule(w: Sequence[int], schedule: TranspositionSchedule) -> Word:
    atual = list(w)
    for i in schedule:
        if not 1 <= i < len(atual):
            raise ValueError(f"Transposição s_{i} fora do intervalo para comprimento {len(atual)}")
        atual[i - 1], atual[i] = atual[i], atual[i - 1]
    return tuple(atual)
