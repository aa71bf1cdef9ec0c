"""
Módulo de q-séries: polinômios de Laurent com coeficientes inteiros exatos,
q-inteiros, q-fatoriais, q-binomiais, q-multinomiais e separação por resíduo
"""
import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


class IntLaurentPoly:
    """Polinômio de Laurent em q com coeficientes inteiros (imutável)"""

    __slots__ = ('_coeffs', '_hash')

    def __init__(self, coeffs: Optional[Dict[int, int]] = None):
        limpos = {}
        for expoente, coef in (coeffs or {}).items():
            if not isinstance(expoente, int) or not isinstance(coef, int):
                raise ValueError(f"Termo inválido: expoente={expoente!r}, coeficiente={coef!r}")
            if coef != 0:
                limpos[expoente] = coef
        self._coeffs = limpos
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> 'IntLaurentPoly':
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> 'IntLaurentPoly':
        return cls({exponent: coeff})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> 'IntLaurentPoly':
        """Soma de q^e para cada expoente da sequência (com repetição)"""
        acumulado: Dict[int, int] = {}
        for e in exponents:
            acumulado[e] = acumulado.get(e, 0) + 1
        return cls(acumulado)

    @classmethod
    def from_terms(cls, terms: Iterable[Sequence[int]]) -> 'IntLaurentPoly':
        acumulado: Dict[int, int] = {}
        for e, c in terms:
            acumulado[e] = acumulado.get(e, 0) + c
        return cls(acumulado)

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._coeffs)

    def terms(self) -> List[Tuple[int, int]]:
        """Termos (expoente, coeficiente) em ordem crescente de expoente"""
        return sorted(self._coeffs.items())

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_degree(self) -> Optional[int]:
        return min(self._coeffs) if self._coeffs else None

    @property
    def max_degree(self) -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    def is_nonnegative(self) -> bool:
        """Todos os coeficientes são >= 0"""
        return all(c >= 0 for c in self._coeffs.values())

    def evaluate(self, q: int = 1):
        """Avalia o polinômio em um inteiro q (q=1 dá a soma dos coeficientes)"""
        if q == 1:
            return sum(self._coeffs.values())
        if q == 0 and any(e < 0 for e in self._coeffs):
            raise ZeroDivisionError("Expoente negativo avaliado em q=0")
        from fractions import Fraction
        total = Fraction(0)
        for e, c in self._coeffs.items():
            total += c * Fraction(q) ** e
        return int(total) if total.denominator == 1 else total

    def shift(self, k: int) -> 'IntLaurentPoly':
        """Multiplica por q^k"""
        return IntLaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def _coerce(self, other) -> 'IntLaurentPoly':
        if isinstance(other, IntLaurentPoly):
            return other
        if isinstance(other, int):
            return IntLaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        soma = dict(self._coeffs)
        for e, c in other._coeffs.items():
            soma[e] = soma.get(e, 0) + c
        return IntLaurentPoly(soma)

    __radd__ = __add__

    def __neg__(self):
        return IntLaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        produto: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                produto[e1 + e2] = produto.get(e1 + e2, 0) + c1 * c2
        return IntLaurentPoly(produto)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("Apenas potências inteiras não negativas")
        resultado = IntLaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                resultado = resultado * base
            base = base * base
            k >>= 1
        return resultado

    def divmod_exact(self, divisor: 'IntLaurentPoly') -> Tuple['IntLaurentPoly', 'IntLaurentPoly']:
        """
        Divisão longa exata (sem ponto flutuante)

        Returns:
            (quociente, resto); o coeficiente líder do divisor precisa dividir
            cada coeficiente líder intermediário, senão ArithmeticError
        """
        if divisor.is_zero():
            raise ZeroDivisionError("Divisão por polinômio nulo")
        resto = dict(self._coeffs)
        grau_d = divisor.max_degree
        base_d = divisor.min_degree
        lider = divisor.coefficient(grau_d)
        quociente: Dict[int, int] = {}
        # menor expoente possível no quociente
        limite = (min(resto) - base_d) if resto else 0
        while resto:
            grau_r = max(resto)
            if grau_r - grau_d < limite:
                break
            c = resto[grau_r]
            if c % lider != 0:
                raise ArithmeticError(f"Coeficiente {c} não divisível por {lider}")
            fator = c // lider
            deslocamento = grau_r - grau_d
            quociente[deslocamento] = quociente.get(deslocamento, 0) + fator
            for e, cd in divisor._coeffs.items():
                chave = e + deslocamento
                novo = resto.get(chave, 0) - fator * cd
                if novo:
                    resto[chave] = novo
                else:
                    resto.pop(chave, None)
        return IntLaurentPoly(quociente), IntLaurentPoly(resto)

    def exact_div(self, divisor: 'IntLaurentPoly') -> 'IntLaurentPoly':
        """Divisão que exige resto zero"""
        quociente, resto = self.divmod_exact(divisor)
        if not resto.is_zero():
            raise ArithmeticError(f"Divisão não exata: resto {resto}")
        return quociente

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntLaurentPoly.constant(other)
        if not isinstance(other, IntLaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            # constante c tem hash(c)
            if not self._coeffs or set(self._coeffs) == {0}:
                self._hash = hash(self._coeffs.get(0, 0))
            else:
                self._hash = hash(tuple(self.terms()))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def to_json(self) -> dict:
        """Formato {"terms": [[expoente, coeficiente], ...]} ordenado por expoente"""
        return {'terms': [[e, c] for e, c in self.terms()]}

    def __str__(self):
        if not self._coeffs:
            return "0"
        partes = []
        for e, c in self.terms():
            if e == 0:
                corpo = str(abs(c))
            else:
                potencia = "q" if e == 1 else f"q^{e}"
                corpo = potencia if abs(c) == 1 else f"{abs(c)}{potencia}"
            sinal = "-" if c < 0 else "+"
            if not partes:
                partes.append(corpo if c > 0 else f"-{corpo}")
            else:
                partes.append(f"{sinal}{corpo}")
        return "".join(partes)

    def __repr__(self):
        return f"<IntLaurentPoly {self}>"


ZERO = IntLaurentPoly()
ONE = IntLaurentPoly.constant(1)
Q = IntLaurentPoly.monomial(1)


def q_int(k: int) -> IntLaurentPoly:
    """[k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0"""
    if k < 0:
        raise ValueError(f"q-inteiro exige k >= 0, recebido {k}")
    return IntLaurentPoly({e: 1 for e in range(k)})


@lru_cache(maxsize=None)
def q_factorial(k: int) -> IntLaurentPoly:
    if k < 0:
        raise ValueError(f"q-fatorial exige k >= 0, recebido {k}")
    resultado = ONE
    for j in range(1, k + 1):
        resultado = resultado * q_int(j)
    return resultado


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> IntLaurentPoly:
    """[n;k]_q, zero fora do intervalo 0 <= k <= n"""
    if k < 0 or n < 0 or k > n:
        return ZERO
    denominador = q_factorial(k) * q_factorial(n - k)
    return q_factorial(n).exact_div(denominador)


def q_multinomial(n: int, parts: Sequence[int]) -> IntLaurentPoly:
    """[n;k_1,...,k_r]_q = [n]_q! / prod [k_i]_q!"""
    parts = tuple(p for p in parts if p != 0)
    if any(p < 0 for p in parts):
        raise ValueError(f"Partes negativas em {parts}")
    if sum(parts) != n:
        raise ValueError(f"As partes {parts} não somam {n}")
    return _q_multinomial(n, parts)


@lru_cache(maxsize=None)
def _q_multinomial(n: int, parts: Tuple[int, ...]) -> IntLaurentPoly:
    denominador = ONE
    for p in parts:
        denominador = denominador * q_factorial(p)
    return q_factorial(n).exact_div(denominador)


def residue_split(p: IntLaurentPoly, modulus: int, offset: int = 0) -> List[IntLaurentPoly]:
    """
    Separa p por classes de resíduo: a componente i guarda os termos com
    expoente congruente a i + offset módulo modulus
    """
    if modulus < 1:
        raise ValueError(f"Módulo deve ser >= 1, recebido {modulus}")
    componentes: List[Dict[int, int]] = [{} for _ in range(modulus)]
    for e, c in p.terms():
        componentes[(e - offset) % modulus][e] = c
    partes = [IntLaurentPoly(comp) for comp in componentes]
    assert sum(partes, ZERO) == p
    return partes


class WeightIndexedPoly:
    """
    Família de polinômios em q indexada por partições de mesmo tamanho
    (coordenadas monomiais ou de Schur de uma função simétrica)
    """

    def __init__(self, entries: Optional[Dict] = None):
        self._entries: Dict = {}
        tamanhos = set()
        for nu, poly in (entries or {}).items():
            if isinstance(poly, int):
                poly = IntLaurentPoly.constant(poly)
            if not isinstance(poly, IntLaurentPoly):
                raise ValueError(f"Entrada inválida para {nu}: {poly!r}")
            tamanhos.add(sum(nu))
            self._entries[nu] = poly
        if len(tamanhos) > 1:
            raise ValueError(f"Partições de tamanhos diferentes: {sorted(tamanhos)}")

    @property
    def size(self) -> Optional[int]:
        for nu in self._entries:
            return sum(nu)
        return None

    def __getitem__(self, nu) -> IntLaurentPoly:
        return self._entries.get(nu, ZERO)

    def __contains__(self, nu):
        return nu in self._entries

    def __len__(self):
        return len(self._entries)

    def keys(self) -> List:
        """Índices em ordem lexicográfica reversa das partes"""
        return sorted(self._entries, key=lambda nu: tuple(nu), reverse=True)

    def items(self) -> List[Tuple]:
        return [(nu, self._entries[nu]) for nu in self.keys()]

    def nonzero(self) -> Dict:
        return {nu: p for nu, p in self._entries.items() if not p.is_zero()}

    def evaluate(self, q: int = 1) -> Dict:
        return {nu: p.evaluate(q) for nu, p in self.items()}

    def __add__(self, other: 'WeightIndexedPoly') -> 'WeightIndexedPoly':
        soma = dict(self._entries)
        for nu, p in other._entries.items():
            soma[nu] = soma.get(nu, ZERO) + p
        return WeightIndexedPoly(soma)

    def __eq__(self, other):
        if not isinstance(other, WeightIndexedPoly):
            return NotImplemented
        return self.nonzero() == other.nonzero()

    __hash__ = None

    def to_json(self) -> List[dict]:
        return [{'nu': list(nu), 'poly': p.to_json()} for nu, p in self.items()]

    def __repr__(self):
        corpo = ", ".join(f"({','.join(str(x) for x in nu)}): {p}" for nu, p in self.items())
        return f"<WeightIndexedPoly {{{corpo}}}>"
