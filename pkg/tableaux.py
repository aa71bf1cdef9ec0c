"""
Módulo de combinatória básica: partições, composições, células, tableaux
semistandard e standard, palavras de leitura, a ordem total em SSTab(mu)
e a correspondência de Robinson-Schensted sobre alfabetos totalmente ordenados
"""
import logging
import math
from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache, total_ordering
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions as sympy_partitions

logger = logging.getLogger(__name__)

# Palavras são tuplas de inteiros positivos
Word = Tuple[int, ...]


def _parse_ints(text: str) -> Tuple[int, ...]:
    texto = text.strip()
    if not texto:
        return ()
    try:
        return tuple(int(token.strip()) for token in texto.split(','))
    except ValueError:
        raise ValueError(f"Lista de inteiros inválida: {text!r}")


@dataclass(frozen=True)
class Partition:
    """Partição: partes positivas em ordem não crescente"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        partes = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in partes):
            raise ValueError(f"Partição com parte não positiva: {partes}")
        if any(partes[i] < partes[i + 1] for i in range(len(partes) - 1)):
            raise ValueError(f"Partição não é decrescente: {partes}")
        object.__setattr__(self, 'parts', partes)

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """Formato "4,2,1" (espaços tolerados)"""
        return cls(_parse_ints(text))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def cells(self) -> List['Cell']:
        """Células na ordem de leitura (linha a linha, esquerda para direita)"""
        return [Cell(r, c) for r, comprimento in enumerate(self.parts) for c in range(comprimento)]

    def conjugate(self) -> 'Partition':
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def dominates(self, other: 'Partition') -> bool:
        """Ordem de dominância: somas parciais de self >= de other"""
        if self.size != other.size:
            return False
        soma_a = soma_b = 0
        for i in range(max(len(self), len(other))):
            soma_a += self.parts[i] if i < len(self) else 0
            soma_b += other.parts[i] if i < len(other) else 0
            if soma_a < soma_b:
                return False
        return True

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Composition:
    """Composição: partes positivas em qualquer ordem (zeros são descartados)"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        partes = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in partes):
            raise ValueError(f"Composição com parte negativa: {partes}")
        object.__setattr__(self, 'parts', tuple(p for p in partes if p > 0))

    @classmethod
    def parse(cls, text: str) -> 'Composition':
        return cls(_parse_ints(text))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(str(p) for p in self.parts)


class Cell(NamedTuple):
    """Célula (linha, coluna) indexada a partir de 0"""
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


def word_weight(letters: Sequence[int]) -> Tuple[int, ...]:
    """Peso de uma palavra: peso[k-1] = quantidade de letras iguais a k"""
    if not letters:
        return ()
    peso = [0] * max(letters)
    for letra in letters:
        if letra < 1:
            raise ValueError(f"Letra não positiva: {letra}")
        peso[letra - 1] += 1
    return tuple(peso)


@total_ordering
@dataclass(frozen=True)
class SemistandardTableau:
    """Tableau semistandard: linhas fracamente crescentes, colunas estritamente crescentes"""
    rows: Tuple[Tuple[int, ...], ...]
    shape: Partition = field(init=False, compare=False)

    def __post_init__(self):
        linhas = tuple(tuple(int(x) for x in linha) for linha in self.rows)
        object.__setattr__(self, 'rows', linhas)
        object.__setattr__(self, 'shape', Partition(tuple(len(linha) for linha in linhas)))
        for r, linha in enumerate(linhas):
            for c, valor in enumerate(linha):
                if valor < 1:
                    raise ValueError(f"Entrada não positiva {valor} na célula ({r},{c})")
                if c > 0 and linha[c - 1] > valor:
                    raise ValueError(f"Linha {r} não é fracamente crescente: {linha}")
                if r > 0 and linhas[r - 1][c] >= valor:
                    raise ValueError(f"Coluna {c} não é estritamente crescente na linha {r}")

    @classmethod
    def parse(cls, text: str) -> 'SemistandardTableau':
        """Formato "1,2/3": linhas separadas por '/', entradas por ','"""
        texto = text.strip()
        if not texto:
            return cls(())
        return cls(tuple(_parse_ints(linha) for linha in texto.split('/')))

    def entry(self, cell: Cell) -> int:
        return self.rows[cell.row][cell.col]

    @property
    def entries(self) -> Dict[Cell, int]:
        return {Cell(r, c): v for r, linha in enumerate(self.rows) for c, v in enumerate(linha)}

    @property
    def size(self) -> int:
        return self.shape.size

    @property
    def weight(self) -> Tuple[int, ...]:
        return word_weight(reading_word(self))

    def _check_comparable(self, other):
        if not isinstance(other, SemistandardTableau):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"Formas diferentes: {self.shape} e {other.shape}")
        return True

    def __lt__(self, other):
        if self._check_comparable(other) is NotImplemented:
            return NotImplemented
        return reading_word(self) < reading_word(other)

    def to_text(self) -> str:
        return "/".join(",".join(str(x) for x in linha) for linha in self.rows)

    def __str__(self):
        # Forma compacta "11/22" quando todas as entradas têm um dígito
        if all(x <= 9 for linha in self.rows for x in linha):
            return "/".join("".join(str(x) for x in linha) for linha in self.rows)
        return self.to_text()


class StandardTableau(SemistandardTableau):
    """Tableau standard: cada número 1..n aparece exatamente uma vez"""

    def __post_init__(self):
        super().__post_init__()
        valores = sorted(x for linha in self.rows for x in linha)
        if valores != list(range(1, len(valores) + 1)):
            raise ValueError(f"Não é standard: entradas {valores}")

    def position(self, value: int) -> Cell:
        for r, linha in enumerate(self.rows):
            if value in linha:
                return Cell(r, linha.index(value))
        raise ValueError(f"Valor {value} ausente do tableau")


@dataclass(frozen=True)
class TableauTuple:
    """n-upla de tableaux semistandard, todos da mesma forma mu"""
    components: Tuple[SemistandardTableau, ...]

    def __post_init__(self):
        componentes = tuple(self.components)
        object.__setattr__(self, 'components', componentes)
        formas = {t.shape for t in componentes}
        if len(formas) > 1:
            raise ValueError(f"Componentes com formas diferentes: {sorted(str(f) for f in formas)}")

    @classmethod
    def parse(cls, texts: Sequence[str]) -> 'TableauTuple':
        return cls(tuple(SemistandardTableau.parse(t) for t in texts))

    @property
    def shape(self) -> Optional[Partition]:
        return self.components[0].shape if self.components else None

    @property
    def weight(self) -> Tuple[int, ...]:
        total: List[int] = []
        for t in self.components:
            for i, k in enumerate(t.weight):
                if i >= len(total):
                    total.append(0)
                total[i] += k
        return tuple(total)

    def sorted(self) -> 'TableauTuple':
        return TableauTuple(tuple(sorted(self.components)))

    def is_sorted(self) -> bool:
        return all(not (self.components[i + 1] < self.components[i])
                   for i in range(len(self.components) - 1))

    def __len__(self):
        return len(self.components)

    def __iter__(self) -> Iterator[SemistandardTableau]:
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __str__(self):
        return "(" + ",".join(str(t) for t in self.components) + ")"


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> Tuple[Partition, ...]:
    """Todas as partições de n em ordem lexicográfica reversa"""
    if n < 0:
        raise ValueError(f"n deve ser >= 0, recebido {n}")
    resultado = []
    for multiplicidades in sympy_partitions(n):
        partes = []
        for parte, vezes in sorted(multiplicidades.items(), reverse=True):
            partes.extend([parte] * vezes)
        resultado.append(tuple(partes))
    resultado.sort(reverse=True)
    return tuple(Partition(p) for p in resultado)


def enumerate_sstab(shape: Partition, weight: Optional[Sequence[int]] = None,
                    max_entry: Optional[int] = None) -> Tuple[SemistandardTableau, ...]:
    """
    Tableaux semistandard de uma forma, com peso dado OU entradas <= max_entry

    Returns:
        tupla ordenada pela ordem total (palavra de leitura lexicográfica)
    """
    if (weight is None) == (max_entry is None):
        raise ValueError("Informe exatamente um entre weight e max_entry")
    if weight is not None:
        peso = tuple(int(k) for k in weight)
        if any(k < 0 for k in peso):
            raise ValueError(f"Peso com parte negativa: {peso}")
        if sum(peso) != shape.size:
            raise ValueError(f"Peso {peso} tem tamanho {sum(peso)}, forma {shape} tem {shape.size}")
        return _sstab_with_weight(shape, peso)
    if max_entry < 0:
        raise ValueError(f"max_entry deve ser >= 0, recebido {max_entry}")
    return _sstab_bounded(shape, int(max_entry))


def _fill(shape: Partition, alphabet_size: int, remaining: Optional[List[int]]):
    """Preenche as células em ordem de leitura; gera em ordem lexicográfica"""
    celulas = shape.cells()
    linhas = [[0] * p for p in shape.parts]

    def recursao(idx: int):
        if idx == len(celulas):
            yield SemistandardTableau(tuple(tuple(linha) for linha in linhas))
            return
        r, c = celulas[idx]
        minimo = 1
        if c > 0:
            minimo = max(minimo, linhas[r][c - 1])
        if r > 0:
            minimo = max(minimo, linhas[r - 1][c] + 1)
        for valor in range(minimo, alphabet_size + 1):
            if remaining is not None:
                if remaining[valor - 1] == 0:
                    continue
                remaining[valor - 1] -= 1
            linhas[r][c] = valor
            yield from recursao(idx + 1)
            if remaining is not None:
                remaining[valor - 1] += 1
        linhas[r][c] = 0

    yield from recursao(0)


@lru_cache(maxsize=None)
def _sstab_with_weight(shape: Partition, weight: Tuple[int, ...]) -> Tuple[SemistandardTableau, ...]:
    return tuple(sorted(_fill(shape, len(weight), list(weight))))


@lru_cache(maxsize=None)
def _sstab_bounded(shape: Partition, max_entry: int) -> Tuple[SemistandardTableau, ...]:
    return tuple(sorted(_fill(shape, max_entry, None)))


def reading_word(T: SemistandardTableau) -> Word:
    """Concatena as linhas, de cima para baixo, cada uma da esquerda para a direita"""
    return tuple(x for linha in T.rows for x in linha)


def tableau_compare(T: SemistandardTableau, U: SemistandardTableau) -> int:
    """-1, 0 ou 1 conforme word(T) <, = ou > word(U) (lexicográfica)"""
    if T.shape != U.shape:
        raise ValueError(f"Formas diferentes: {T.shape} e {U.shape}")
    a, b = reading_word(T), reading_word(U)
    return (a > b) - (a < b)


@lru_cache(maxsize=None)
def enumerate_standard(shape: Partition) -> Tuple[StandardTableau, ...]:
    """Tableaux standard de uma forma, na ordem da palavra de leitura"""
    tableaux = _sstab_with_weight(shape, (1,) * shape.size)
    return tuple(StandardTableau(t.rows) for t in tableaux)


def count_standard(shape: Partition) -> int:
    """f^lambda pela fórmula dos ganchos"""
    conjugada = shape.conjugate()
    produto = 1
    for r, comprimento in enumerate(shape.parts):
        for c in range(comprimento):
            produto *= (comprimento - c - 1) + (conjugada.parts[c] - r - 1) + 1
    return math.factorial(shape.size) // produto


def row_superstandard(shape: Partition) -> StandardTableau:
    """Tableau standard preenchido linha a linha: 1..lambda_1 / ..."""
    linhas = []
    proximo = 1
    for comprimento in shape.parts:
        linhas.append(tuple(range(proximo, proximo + comprimento)))
        proximo += comprimento
    return StandardTableau(tuple(linhas))


def descents_standard(S: StandardTableau) -> List[int]:
    """i é descida quando i+1 está em linha estritamente abaixo de i"""
    n = S.size
    return [i for i in range(1, n) if S.position(i + 1).row > S.position(i).row]


def maj_standard(S: StandardTableau) -> int:
    return sum(descents_standard(S))


class RSPair(NamedTuple):
    """Par (P, Q) de Robinson-Schensted; P é dado por linhas sobre o alfabeto"""
    P: Tuple[Tuple[Any, ...], ...]
    Q: StandardTableau


def rs_correspondence(letters: Sequence[Any]) -> RSPair:
    """
    Inserção por linhas: a letra substitui a entrada mais à esquerda
    estritamente maior, que desce para a linha seguinte
    """
    P: List[List[Any]] = []
    Q: List[List[int]] = []
    for passo, letra in enumerate(letters, start=1):
        atual = letra
        linha = 0
        while True:
            if linha == len(P):
                P.append([atual])
                Q.append([passo])
                break
            pos = bisect_right(P[linha], atual)
            if pos == len(P[linha]):
                P[linha].append(atual)
                Q[linha].append(passo)
                break
            P[linha][pos], atual = atual, P[linha][pos]
            linha += 1
    return RSPair(tuple(tuple(l) for l in P), StandardTableau(tuple(tuple(l) for l in Q)))
