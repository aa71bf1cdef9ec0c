"""
Motor LLT: estatística de inversão em n-uplas de tableaux, coeficientes LLT
G_{mu,nu}(q) para n cópias de uma forma mu, a expansão q-multinomial sobre
uplas ordenadas, d_mu, o vetor k canônico, a estatística alpha, as
componentes por resíduo e a separação por Robinson-Schensted
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from qseries import IntLaurentPoly, WeightIndexedPoly, q_multinomial, residue_split
from tableaux import (Composition, Partition, SemistandardTableau, StandardTableau, TableauTuple,
                      enumerate_partitions, enumerate_sstab, maj_standard, reading_word,
                      rs_correspondence)
from word_statistics import KVector, alpha_prime, inv_word, maj_word, words_of_weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LLTInstance:
    """n cópias da forma mu"""
    mu: Partition
    n: int

    def __post_init__(self):
        if not isinstance(self.mu, Partition):
            object.__setattr__(self, 'mu', Partition(tuple(self.mu)))
        if self.n < 1:
            raise ValueError(f"Número de cópias deve ser >= 1, recebido {self.n}")

    @property
    def total_size(self) -> int:
        return self.n * self.mu.size

    def check_weight(self, nu: Sequence[int]):
        if sum(nu) != self.total_size:
            raise ValueError(
                f"|nu| = {sum(nu)} difere de n|mu| = {self.n}*{self.mu.size} = {self.total_size}")

    def __str__(self):
        return f"mu=({self.mu}) n={self.n}"


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocos distintos de uma upla ordenada, multiplicidades rho e vetor k"""
    blocks: Tuple[SemistandardTableau, ...]
    rho: Composition
    k: KVector

    def __post_init__(self):
        if len(self.blocks) != len(self.rho) or len(self.blocks) != len(self.k):
            raise ValueError("blocks, rho e k precisam ter o mesmo comprimento")
        for a, b in zip(self.blocks, self.blocks[1:]):
            if not a < b:
                raise ValueError(f"Blocos fora de ordem estrita: {a} e {b}")
        if self.blocks and self.pairing() != self.expected_pairing():
            raise ArithmeticError(
                f"Vetor k inconsistente: sum k_j rho_j = {self.pairing()}, "
                f"Inv - d_mu = {self.expected_pairing()} para {[str(b) for b in self.blocks]}")

    @property
    def n(self) -> int:
        return self.rho.size

    def pairing(self) -> int:
        """Soma k_j * rho_j"""
        return self.k.pairing(self.rho.parts)

    def expected_pairing(self) -> int:
        """Inv da upla ordenada menos d_mu, pelas inversões entre blocos"""
        rho = self.rho.parts
        mu = self.blocks[0].shape
        inv = sum(comb(rho[j], 2) * inversion_pair(self.blocks[j], self.blocks[j])
                  + sum(rho[i] * rho[j] * inversion_pair(self.blocks[i], self.blocks[j]) for i in range(j))
                  for j in range(len(self.blocks)))
        return inv - comb(self.n, 2) * (d1(mu) + d2(mu))


@lru_cache(maxsize=None)
def _pair_structure(shape_a: Partition, shape_b: Partition) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """
    Pares de posições (na palavra de leitura) que podem formar inversão:
    conteúdo igual (tipo i) e conteúdo de u uma unidade menor que o de v (tipo ii)
    """
    celulas_a = shape_a.cells()
    celulas_b = shape_b.cells()
    mesmo = tuple((i, j) for i, u in enumerate(celulas_a) for j, v in enumerate(celulas_b)
                  if u.content == v.content)
    # tipo ii: u percorre a forma do tableau posterior, v a do anterior
    adjacente = tuple((i, j) for i, u in enumerate(celulas_b) for j, v in enumerate(celulas_a)
                      if u.content == v.content - 1)
    return mesmo, adjacente


def _pair_words(shape_a: Partition, word_a: Sequence[int],
                shape_b: Partition, word_b: Sequence[int]) -> int:
    mesmo, adjacente = _pair_structure(shape_a, shape_b)
    tipo_i = sum(1 for i, j in mesmo if word_a[i] > word_b[j])
    tipo_ii = sum(1 for i, j in adjacente if word_b[i] > word_a[j])
    return tipo_i + tipo_ii


def inversion_pair(U: SemistandardTableau, V: SemistandardTableau) -> int:
    """
    Inversões entre a componente anterior U e a posterior V:
    #{U(u) > V(v), c(u) = c(v)} + #{V(u) > U(v), c(u) = c(v) - 1}
    """
    if U.shape != V.shape:
        raise ValueError(f"Formas diferentes: {U.shape} e {V.shape}")
    return _pair_words(U.shape, reading_word(U), V.shape, reading_word(V))


def inversion_number(t: Sequence[SemistandardTableau]) -> int:
    """Inv(T) = soma de inversion_pair sobre os pares a < b"""
    componentes = list(t)
    palavras = [reading_word(c) for c in componentes]
    return sum(_pair_words(componentes[a].shape, palavras[a], componentes[b].shape, palavras[b])
               for a in range(len(componentes)) for b in range(a + 1, len(componentes)))


def tuple_maj(t: Sequence[SemistandardTableau]) -> int:
    """Soma das posições i (base 1) com t_{i-1} > t_i na ordem total"""
    componentes = list(t)
    return sum(i for i in range(1, len(componentes)) if componentes[i] < componentes[i - 1])


def tuple_inv(t: Sequence[SemistandardTableau]) -> int:
    """Inversões da sequência de componentes na ordem total"""
    componentes = list(t)
    return sum(1 for a in range(len(componentes)) for b in range(a + 1, len(componentes))
               if componentes[b] < componentes[a])


def _padded_weight(T: SemistandardTableau, length: int) -> Tuple[int, ...]:
    peso = [0] * length
    for x in reading_word(T):
        peso[x - 1] += 1
    return tuple(peso)


def _validated(shapes: Sequence, weight: Sequence[int]) -> Tuple[Tuple[Partition, ...], Tuple[int, ...]]:
    formas = tuple(s if isinstance(s, Partition) else Partition(tuple(s)) for s in shapes)
    peso = tuple(int(v) for v in weight)
    if any(v < 0 for v in peso):
        raise ValueError(f"Peso com parte negativa: {peso}")
    if sum(peso) != sum(s.size for s in formas):
        raise ValueError(f"|peso| = {sum(peso)} difere do total de células {sum(s.size for s in formas)}")
    return formas, peso


# subformas como tuplas de linhas positivas; um estado tem uma subforma por componente
Shape = Tuple[int, ...]
State = Tuple[Shape, ...]


@lru_cache(maxsize=None)
def _cells(shape: Shape) -> Tuple[Tuple[int, int], ...]:
    return tuple((r, c) for r, comprimento in enumerate(shape) for c in range(comprimento))


@lru_cache(maxsize=None)
def _strip_extensions(outer: Shape, inner: Shape) -> Tuple[Tuple[Shape, int], ...]:
    """
    Subformas new de outer que contêm inner com new/inner faixa horizontal
    (new_i <= inner_{i-1}), junto com o tamanho da faixa, em ordem de tamanho
    """
    velho = list(inner) + [0] * (len(outer) - len(inner))
    resultado: List[Tuple[Shape, int]] = []
    novo: List[int] = []

    def recursao(i: int, tamanho: int):
        if i == len(outer):
            resultado.append((tuple(p for p in novo if p > 0), tamanho))
            return
        teto = outer[i] if i == 0 else min(outer[i], velho[i - 1])
        for p in range(velho[i], teto + 1):
            novo.append(p)
            recursao(i + 1, tamanho + p - velho[i])
            novo.pop()

    recursao(0, 0)
    return tuple(sorted(resultado, key=lambda par: par[1]))


@lru_cache(maxsize=None)
def _letter_increment(old_a: Shape, new_a: Shape, old_b: Shape, new_b: Shape) -> int:
    """
    Inversões entre a componente anterior a e a posterior b criadas quando as
    células de new/old recebem a letra atual: só contam parceiras já preenchidas
    com letras menores
    """
    velhas_a, velhas_b = set(_cells(old_a)), set(_cells(old_b))
    novas_a = [u for u in _cells(new_a) if u not in velhas_a]
    novas_b = [u for u in _cells(new_b) if u not in velhas_b]
    tipo_i = sum(1 for r, c in novas_a for s, d in velhas_b if c - r == d - s)
    tipo_ii = sum(1 for r, c in novas_b for s, d in velhas_a if c - r == d - s - 1)
    return tipo_i + tipo_ii


@lru_cache(maxsize=None)
def _transitions(outers: State, state: State, size: int) -> Tuple[Tuple[State, int], ...]:
    """Uma faixa horizontal por componente, somando size células, e as inversões criadas"""
    resultado: List[Tuple[State, int]] = []
    novos: List[Shape] = []

    def recursao(a: int, restante: int, inv: int):
        if a == len(outers):
            if restante == 0:
                resultado.append((tuple(novos), inv))
            return
        for novo, tamanho in _strip_extensions(outers[a], state[a]):
            if tamanho > restante:
                break
            extra = sum(_letter_increment(state[b], novos[b], state[a], novo) for b in range(a))
            novos.append(novo)
            recursao(a + 1, restante - tamanho, inv + extra)
            novos.pop()

    recursao(0, size, 0)
    return tuple(resultado)


@lru_cache(maxsize=None)
def _letter_layers(outers: State, prefix: Tuple[int, ...]) -> Dict[State, Counter]:
    """Estados alcançados depois de colocar as letras 1..len(prefix), com a distribuição de Inv"""
    if not prefix:
        return {tuple(() for _ in outers): Counter({0: 1})}
    camada: Dict[State, Counter] = {}
    for estado, expoentes in _letter_layers(outers, prefix[:-1]).items():
        for novo, inv in _transitions(outers, estado, prefix[-1]):
            destino = camada.setdefault(novo, Counter())
            for e, c in expoentes.items():
                destino[e + inv] += c
    return camada


@lru_cache(maxsize=None)
def llt_coefficient_shapes(shapes: Tuple[Partition, ...], weight: Tuple[int, ...]) -> IntLaurentPoly:
    """
    Coeficiente de x^weight em G_{shapes}(x;q): soma de q^Inv sobre todas as
    uplas (T_0, ..., T_{n-1}) com T_a de forma shapes[a]

    As letras entram em ordem crescente. As células com letra <= x formam uma
    subforma em cada componente, e a letra x ocupa uma faixa horizontal. Uma
    célula nova forma inversão exatamente com as parceiras já preenchidas, então
    a soma percorre cadeias de subformas em vez de uplas. Aceita formas
    diferentes e pesos que são composições (zeros permitidos).
    """
    formas, peso = _validated(shapes, weight)
    externas = tuple(f.parts for f in formas)
    expoentes = _letter_layers(externas, peso).get(externas, Counter())
    logger.info(f"Coeficiente formas={[str(f) for f in formas]} peso={peso}: "
                f"{sum(expoentes.values())} uplas")
    return IntLaurentPoly(dict(expoentes))


def llt_coefficient_enumerated(shapes: Sequence[Partition], weight: Sequence[int]) -> IntLaurentPoly:
    """Mesmo coeficiente que llt_coefficient_shapes, somando q^Inv upla por upla"""
    formas, peso = _validated(shapes, weight)
    L = len(peso)

    candidatos: Dict[Partition, List[Tuple[Tuple[int, ...], Tuple[int, ...]]]] = {}
    for forma in set(formas):
        candidatos[forma] = [(reading_word(T), _padded_weight(T, L))
                             for T in enumerate_sstab(forma, max_entry=L)]

    expoentes: Counter = Counter()
    escolhidos: List[int] = []
    restante = list(peso)

    def recursao(a: int, inv_parcial: int):
        if a == len(formas):
            if not any(restante):
                expoentes[inv_parcial] += 1
            return
        for i, (palavra, peso_t) in enumerate(candidatos[formas[a]]):
            if any(peso_t[x] > restante[x] for x in range(L)):
                continue
            for x in range(L):
                restante[x] -= peso_t[x]
            extra = sum(_pair_words(formas[b], candidatos[formas[b]][escolhidos[b]][0], formas[a], palavra)
                        for b in range(a))
            escolhidos.append(i)
            recursao(a + 1, inv_parcial + extra)
            escolhidos.pop()
            for x in range(L):
                restante[x] += peso_t[x]

    recursao(0, 0)
    logger.info(f"Força bruta formas={[str(f) for f in formas]} peso={peso}: "
                f"{sum(expoentes.values())} uplas")
    return IntLaurentPoly(dict(expoentes))


def llt_coefficient(inst: LLTInstance, nu: Partition) -> IntLaurentPoly:
    """G_{mu,nu}(q) = soma de q^Inv(T) sobre SSTab(mu,nu)"""
    inst.check_weight(nu)
    return llt_coefficient_shapes((inst.mu,) * inst.n, tuple(nu))


@lru_cache(maxsize=None)
def _candidate_table(mu: Partition, length: int):
    """
    Tableaux de forma mu com entradas <= length, seus pesos esparsos
    ((letra, vezes), ...) e os índices agrupados pela menor letra
    """
    tableaux = enumerate_sstab(mu, max_entry=length)
    pesos = tuple(tuple(sorted(Counter(reading_word(T)).items())) for T in tableaux)
    grupos: Dict[int, List[int]] = {}
    for i, peso in enumerate(pesos):
        grupos.setdefault(peso[0][0] if peso else 0, []).append(i)
    return tableaux, pesos, {letra: tuple(indices) for letra, indices in grupos.items()}


def _sorted_indices(inst: LLTInstance, nu: Partition) -> List[Tuple[int, ...]]:
    """
    Multiconjuntos de tableaux com peso total nu, como índices crescentes.
    A menor letra ainda não coberta só pode vir de um tableau cuja menor letra
    é ela; dentro do mesmo grupo os índices não decrescem
    """
    tableaux, pesos, grupos = _candidate_table(inst.mu, len(nu))
    if inst.mu.size == 0:
        return [(0,) * inst.n]
    restante = [0] + list(nu)
    escolhidos: List[int] = []
    resultado: List[Tuple[int, ...]] = []

    def recursao(letra: int, inicio: int):
        proxima = letra
        while proxima < len(restante) and restante[proxima] == 0:
            proxima += 1
        if proxima == len(restante):
            resultado.append(tuple(sorted(escolhidos)))
            return
        if proxima != letra:
            inicio = 0
        grupo = grupos.get(proxima, ())
        for posicao in range(inicio, len(grupo)):
            i = grupo[posicao]
            if any(vezes > restante[x] for x, vezes in pesos[i]):
                continue
            for x, vezes in pesos[i]:
                restante[x] -= vezes
            escolhidos.append(i)
            recursao(proxima, posicao)
            escolhidos.pop()
            for x, vezes in pesos[i]:
                restante[x] += vezes

    recursao(1, 0)
    resultado.sort()
    return resultado


@lru_cache(maxsize=None)
def _sorted_records(inst: LLTInstance, nu: Partition) -> Tuple[Tuple[Tuple[SemistandardTableau, ...], Tuple[int, ...], int], ...]:
    """(upla ordenada, rho, Inv) para cada upla fracamente crescente de peso nu"""
    inst.check_weight(nu)
    tableaux = _candidate_table(inst.mu, len(nu))[0]
    registros = []
    for indices in _sorted_indices(inst, nu):
        ordenada = tuple(tableaux[i] for i in indices)
        _, rho = _blocks(ordenada)
        registros.append((ordenada, rho, inversion_number(ordenada)))
    logger.info(f"Uplas ordenadas {inst} nu={nu}: {len(registros)}")
    return tuple(registros)


def sorted_tuples(inst: LLTInstance, nu: Partition) -> Tuple[Tuple[SemistandardTableau, ...], ...]:
    """Uplas fracamente crescentes T_0 <= ... <= T_{n-1} de peso nu"""
    return tuple(ordenada for ordenada, _, _ in _sorted_records(inst, nu))


def _blocks(sorted_t: Sequence[SemistandardTableau]) -> Tuple[Tuple[SemistandardTableau, ...], Tuple[int, ...]]:
    blocos: List[SemistandardTableau] = []
    rho: List[int] = []
    for T in sorted_t:
        if blocos and blocos[-1] == T:
            rho[-1] += 1
        else:
            blocos.append(T)
            rho.append(1)
    return tuple(blocos), tuple(rho)


def enumerate_tuples(inst: LLTInstance, nu: Partition) -> Iterator[TableauTuple]:
    """Todas as uplas de SSTab(mu,nu): cada upla ordenada vezes os rearranjos de seus blocos"""
    for ordenada in sorted_tuples(inst, nu):
        blocos, rho = _blocks(ordenada)
        for w in words_of_weight(rho):
            yield TableauTuple(tuple(blocos[letra - 1] for letra in w))


def llt_polynomial(inst: LLTInstance, fast: bool = False) -> WeightIndexedPoly:
    """G_mu(x;q) em coordenadas monomiais: um coeficiente por partição de n|mu|"""
    calcula = theorem_a_rhs if fast else llt_coefficient
    entradas = {nu: calcula(inst, nu) for nu in enumerate_partitions(inst.total_size)}
    logger.info(f"Polinômio LLT {inst}: {len(entradas)} pesos (fast={fast})")
    return WeightIndexedPoly(entradas)


def llt_coefficient_by(inst: LLTInstance, nu: Partition, fast: bool = False) -> IntLaurentPoly:
    return theorem_a_rhs(inst, nu) if fast else llt_coefficient(inst, nu)


def d1(mu: Partition) -> int:
    """Soma de min(linha, coluna) sobre as células (índices a partir de 0)"""
    return sum(min(c.row, c.col) for c in mu.cells())


def d2(mu: Partition) -> int:
    """Soma de min(linha, coluna + 1) sobre as células"""
    return sum(min(c.row, c.col + 1) for c in mu.cells())


def d_min_closed(inst: LLTInstance) -> int:
    """d_mu = C(n,2) (d1 + d2)"""
    return comb(inst.n, 2) * (d1(inst.mu) + d2(inst.mu))


def d_min_oracle(inst: LLTInstance, exhaustive: bool = False, max_entry: Optional[int] = None) -> int:
    """
    Mínimo de Inv por busca.

    Sem exhaustive: apenas uplas constantes (T,...,T). Com exhaustive: mínimo
    exato sobre todas as uplas com entradas <= max_entry (padrão n|mu|, que
    cobre todo padrão relativo de entradas), caminho mínimo sobre as cadeias
    de subformas letra a letra.
    """
    mu = inst.mu
    if mu.size == 0:
        return 0
    if not exhaustive:
        return min(inversion_number((T,) * inst.n)
                   for T in enumerate_sstab(mu, max_entry=max(len(mu), 1)))

    limite = max_entry if max_entry is not None else inst.total_size
    externas = (mu.parts,) * inst.n
    camada: Dict[State, int] = {tuple(() for _ in externas): 0}
    for _ in range(limite):
        proxima: Dict[State, int] = {}
        for estado, custo in camada.items():
            livres = inst.total_size - sum(sum(s) for s in estado)
            for tamanho in range(livres + 1):
                for novo, inv in _transitions(externas, estado, tamanho):
                    if custo + inv < proxima.get(novo, custo + inv + 1):
                        proxima[novo] = custo + inv
        camada = proxima
    logger.info(f"d_mu exaustivo {inst}: entradas <= {limite}, {len(camada)} estados finais")
    if externas not in camada:
        raise ValueError(f"Nenhum tableau de forma {mu} com entradas <= {limite}")
    return camada[externas]


@lru_cache(maxsize=None)
def theorem_a_rhs(inst: LLTInstance, nu: Partition) -> IntLaurentPoly:
    """Soma sobre uplas ordenadas de q^Inv(T) [n; rho]_q"""
    expoentes: Counter = Counter()
    for _, rho, inv in _sorted_records(inst, nu):
        for e, c in q_multinomial(inst.n, rho).terms():
            expoentes[e + inv] += c
    return IntLaurentPoly(dict(expoentes))


@lru_cache(maxsize=None)
def _inv_histogram(rho: Tuple[int, ...]) -> Tuple[Tuple[int, int], ...]:
    """(inv, quantidade) sobre as palavras de peso rho, contadas uma a uma"""
    return tuple(sorted(Counter(inv_word(w) for w in words_of_weight(rho)).items()))


def keylem_rhs(inst: LLTInstance, nu: Partition) -> IntLaurentPoly:
    """Soma sobre todas as uplas de q^{Inv(upla ordenada) + inv(upla)}"""
    expoentes: Counter = Counter()
    for _, rho, base in _sorted_records(inst, nu):
        for inv, quantidade in _inv_histogram(rho):
            expoentes[base + inv] += quantidade
    return IntLaurentPoly(dict(expoentes))


def canonical_k(sorted_t: Sequence[SemistandardTableau]) -> BlockDecomposition:
    """
    k_j = sum_{i<j} c_ij rho_i - (sum_{l>j} rho_l)(d1 + d2), c_ij = inversion_pair(U_i, U_j);
    garante sum k_j rho_j = Inv(upla) - d_mu
    """
    componentes = tuple(sorted_t)
    for a, b in zip(componentes, componentes[1:]):
        if b < a:
            raise ValueError(f"Upla não está ordenada: {a} > {b}")
    if not componentes:
        raise ValueError("Upla vazia")
    blocos, rho = _blocks(componentes)
    mu = componentes[0].shape
    diagonal = d1(mu) + d2(mu)
    ks = []
    for j in range(len(blocos)):
        cruzado = sum(inversion_pair(blocos[i], blocos[j]) * rho[i] for i in range(j))
        ks.append(cruzado - sum(rho[j + 1:]) * diagonal)
    return BlockDecomposition(blocos, Composition(rho), KVector(tuple(ks)))


def block_word(t: Sequence[SemistandardTableau], bd: BlockDecomposition) -> Tuple[int, ...]:
    """w_j = índice (base 1) do bloco de t_j; maj(w) = tuple_maj(t)"""
    indice = {T: i for i, T in enumerate(bd.blocks, start=1)}
    return tuple(indice[T] for T in t)


def alpha_statistic(t: Sequence[SemistandardTableau]) -> int:
    """alpha(T) = alpha'_{k}(w), com k canônico e w a palavra de blocos"""
    componentes = tuple(t)
    bd = canonical_k(tuple(sorted(componentes)))
    return alpha_prime(block_word(componentes, bd), bd.k)


@lru_cache(maxsize=None)
def _alpha_maj_exponents(rho: Tuple[int, ...], ks: Tuple[int, ...]) -> Tuple[Tuple[int, int], ...]:
    """(n alpha' + maj, maj) para cada w em Word(rho)"""
    n = sum(rho)
    return tuple((n * alpha_prime(w, ks) + maj_word(w), maj_word(w)) for w in words_of_weight(rho))


@lru_cache(maxsize=None)
def theorem_b_rhs(inst: LLTInstance, nu: Partition) -> IntLaurentPoly:
    """Soma sobre SSTab(mu,nu) de q^{n alpha(T) + maj(T) + d_mu}"""
    d_mu = d_min_closed(inst)
    expoentes: Counter = Counter()
    for ordenada in sorted_tuples(inst, nu):
        bd = canonical_k(ordenada)
        for expoente, _ in _alpha_maj_exponents(bd.rho.parts, bd.k.ks):
            expoentes[expoente + d_mu] += 1
    return IntLaurentPoly(dict(expoentes))


def component_split(inst: LLTInstance, nu: Partition, fast: bool = False) -> List[IntLaurentPoly]:
    """G^{(0)}, ..., G^{(n-1)}: termos de G com expoente congruente a i + d_mu mod n"""
    return residue_split(llt_coefficient_by(inst, nu, fast), inst.n, d_min_closed(inst))


def component_split_by_maj(inst: LLTInstance, nu: Partition) -> List[IntLaurentPoly]:
    """G^{(i)} como soma de q^{n alpha + maj + d_mu} sobre as uplas com maj = i mod n"""
    d_mu = d_min_closed(inst)
    expoentes: List[Counter] = [Counter() for _ in range(inst.n)]
    for ordenada in sorted_tuples(inst, nu):
        bd = canonical_k(ordenada)
        for expoente, maj in _alpha_maj_exponents(bd.rho.parts, bd.k.ks):
            expoentes[maj % inst.n][expoente + d_mu] += 1
    return [IntLaurentPoly(dict(c)) for c in expoentes]


def _tuple_key(t: TableauTuple):
    return tuple(reading_word(T) for T in t)


@lru_cache(maxsize=None)
def rs_split(inst: LLTInstance, nu: Partition) -> Dict[StandardTableau, Tuple[TableauTuple, ...]]:
    """Agrupa SSTab(mu,nu) pelo tableau de registro Q da inserção RS das componentes"""
    classes: Dict[StandardTableau, List[TableauTuple]] = {}
    for t in enumerate_tuples(inst, nu):
        _, Q = rs_correspondence(t.components)
        classes.setdefault(Q, []).append(t)
    return {S: tuple(sorted(lista, key=_tuple_key)) for S, lista in classes.items()}


def rs_class_tuples(S: StandardTableau, inst: LLTInstance, nu: Partition) -> Tuple[TableauTuple, ...]:
    """SSTab(S[mu], nu): uplas cujo tableau de registro é S"""
    if S.size != inst.n:
        raise ValueError(f"|S| = {S.size} difere de n = {inst.n}")
    return rs_split(inst, nu).get(S, ())


def class_poly(S: StandardTableau, inst: LLTInstance, nu: Partition) -> IntLaurentPoly:
    """G_{S[mu],nu}(q) = soma sobre a classe de q^{n alpha + maj(S) + d_mu}"""
    base = maj_standard(S) + d_min_closed(inst)
    return IntLaurentPoly.from_exponents(inst.n * alpha_statistic(t) + base
                                         for t in rs_class_tuples(S, inst, nu))


def count_class_i(inst: LLTInstance, nu: Partition, i: int) -> int:
    """#SSTab(mu,nu;i): uplas com maj congruente a i mod n"""
    if not 0 <= i < inst.n:
        raise ValueError(f"Resíduo {i} fora de 0..{inst.n - 1}")
    total = 0
    for ordenada in sorted_tuples(inst, nu):
        _, rho = _blocks(ordenada)
        total += sum(1 for w in words_of_weight(rho) if maj_word(w) % inst.n == i)
    return total
