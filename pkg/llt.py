"""
Linha de comando para coeficientes LLT, coeficientes q-Littlewood-Richardson,
pletismos e suítes de verificação

Comandos:
- coeff: coeficiente LLT G_{mu,nu}(q) (ou uma componente por resíduo)
- schur: tabela de LR~(q) por nu
- plethysm: a_{S[mu]}^nu(q) para um tableau S ou a_{lambda[mu]}^nu para uma forma
- verify: suítes de identidades
- scan-negative: busca por coeficientes negativos em a_{S[mu]}^nu(q)
"""
import argparse
import json
import logging
import os
import sys
import traceback
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from dotenv import load_dotenv

from llt_engine import LLTInstance, component_split, llt_coefficient, theorem_a_rhs
from symmetric_functions import (a_q_plethysm, negativity_scan, plethysm_multiplicity,
                                 q_littlewood_richardson, q_lr_component, table_to_csv)
from tableaux import Partition, StandardTableau, enumerate_partitions
from verification import SUITES, run_suite

# Carrega variáveis de ambiente
load_dotenv()

# Configuração de logging (resultados vão para stdout, logs para stderr)
logging.basicConfig(
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    level=getattr(logging, os.getenv('LLT_LOG_LEVEL', 'WARNING').upper(), logging.WARNING),
    stream=sys.stderr
)
logger = logging.getLogger(__name__)

MAX_CELLS = int(os.getenv('LLT_MAX_CELLS', '4'))
MAX_COPIES = int(os.getenv('LLT_MAX_COPIES', '5'))
FAST_PATH = os.getenv('LLT_FAST_PATH', '0') == '1'

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    """Parâmetros de uma execução"""
    command: str
    mu: Optional[Partition] = None
    copies: Optional[int] = None
    nu: Optional[Partition] = None
    component: Optional[int] = None
    outer: Optional[Partition] = None
    tableau: Optional[StandardTableau] = None
    suite: Optional[str] = None
    bounds: Dict[str, Optional[int]] = field(default_factory=dict)
    format: str = 'text'
    force: bool = False
    fast: bool = False

    def instance(self) -> LLTInstance:
        return LLTInstance(self.mu, self.copies)


def is_within_caps(cfg: RunConfig) -> bool:
    """Verifica os limites de escala de mesa (|mu| <= LLT_MAX_CELLS, n <= LLT_MAX_COPIES)"""
    celulas = [cfg.mu.size if cfg.mu is not None else None, cfg.bounds.get('max_cells')]
    copias = [cfg.copies, cfg.bounds.get('max_copies')]
    if any(c is not None and c > MAX_CELLS for c in celulas):
        return False
    return not any(c is not None and c > MAX_COPIES for c in copias)


def emit(cfg: RunConfig, input_data: dict, result, text: str, csv_text: Optional[str] = None):
    """Escreve o resultado no formato pedido"""
    if cfg.format == 'json':
        envelope = {'command': cfg.command, 'input': input_data, 'result': result}
        print(json.dumps(envelope, indent=2, ensure_ascii=False))
    elif cfg.format == 'csv' and csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        print(text)


def _base_input(cfg: RunConfig) -> dict:
    return {
        'mu': list(cfg.mu) if cfg.mu is not None else None,
        'n': cfg.copies,
        'nu': list(cfg.nu) if cfg.nu is not None else None,
    }


def _require(cfg: RunConfig, *names: str):
    faltando = [nome for nome in names if getattr(cfg, nome) is None]
    if faltando:
        raise ValueError(f"Parâmetros obrigatórios ausentes: {', '.join(faltando)}")


def cmd_coeff(cfg: RunConfig) -> int:
    """Imprime G_{mu,nu}(q) ou G^{(i)}"""
    _require(cfg, 'mu', 'copies', 'nu')
    inst = cfg.instance()
    inst.check_weight(cfg.nu)
    entrada = {**_base_input(cfg), 'component': cfg.component}
    if cfg.component is not None:
        if not 0 <= cfg.component < inst.n:
            raise ValueError(f"--component deve estar em 0..{inst.n - 1}")
        poly = component_split(inst, cfg.nu, cfg.fast)[cfg.component]
        nome = f"G^({cfg.component})"
    else:
        poly = theorem_a_rhs(inst, cfg.nu) if cfg.fast else llt_coefficient(inst, cfg.nu)
        nome = "G"
    emit(cfg, entrada, poly.to_json(), str(poly), table_to_csv([cfg.nu], [(nome, [poly])]))
    return EXIT_OK


def cmd_schur(cfg: RunConfig) -> int:
    """Tabela de LR~(q) (ou LR~^{(i)}) por nu"""
    _require(cfg, 'mu', 'copies')
    inst = cfg.instance()
    if cfg.component is not None and not 0 <= cfg.component < inst.n:
        raise ValueError(f"--component deve estar em 0..{inst.n - 1}")
    particoes = list(enumerate_partitions(inst.total_size))

    def linha(i: Optional[int]):
        if i is None:
            return [q_littlewood_richardson(inst, nu, cfg.fast) for nu in particoes]
        return [q_lr_component(inst, nu, i, cfg.fast) for nu in particoes]

    principal = linha(cfg.component)
    entrada = {**_base_input(cfg), 'component': cfg.component}
    nao_nulos = [(nu, p) for nu, p in zip(particoes, principal) if not p.is_zero()]
    resultado = [{'nu': list(nu), 'poly': p.to_json()} for nu, p in nao_nulos]
    texto = "\n".join(f"({nu}): {p}" for nu, p in nao_nulos)

    csv_text = None
    if cfg.format == 'csv':
        if cfg.component is None:
            linhas = [('LR', principal)] + [(f"LR^({i})", linha(i)) for i in range(inst.n)]
        else:
            linhas = [(f"LR^({cfg.component})", principal)]
        csv_text = table_to_csv(particoes, linhas)
    emit(cfg, entrada, resultado, texto, csv_text)
    return EXIT_OK


def cmd_plethysm(cfg: RunConfig) -> int:
    """a_{S[mu]}^nu(q) com --tableau, ou a_{lambda[mu]}^nu com --outer"""
    _require(cfg, 'mu', 'nu')
    if (cfg.tableau is None) == (cfg.outer is None):
        raise ValueError("Informe exatamente um entre --outer e --tableau")
    if cfg.tableau is not None:
        inst = LLTInstance(cfg.mu, cfg.tableau.size)
        poly = a_q_plethysm(cfg.tableau, inst, cfg.nu)
        entrada = {'tableau': cfg.tableau.to_text(), 'inner': list(cfg.mu), 'nu': list(cfg.nu)}
        resultado = {'poly': poly.to_json(), 'at_1': poly.evaluate(1)}
        emit(cfg, entrada, resultado, str(poly), table_to_csv([cfg.nu], [("a", [poly])]))
        return EXIT_OK
    valor = plethysm_multiplicity(cfg.outer, cfg.mu, cfg.nu)
    entrada = {'outer': list(cfg.outer), 'inner': list(cfg.mu), 'nu': list(cfg.nu)}
    emit(cfg, entrada, {'multiplicity': valor}, str(valor))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    """Roda uma suíte (ou todas) e sai com 1 se alguma identidade falhar"""
    nomes = list(SUITES) if cfg.suite == 'all' else [cfg.suite]
    relatorios = [run_suite(nome, cfg.bounds, cfg.fast) for nome in nomes]
    linhas: List[str] = []
    for r in relatorios:
        estado = "PASS" if r.passed else "FAIL"
        linhas.append(f"{r.name}: {estado} ({r.cases} casos, {r.failures} falhas)")
        if r.first_counterexample is not None:
            linhas.append(f"  contraexemplo: {json.dumps(r.first_counterexample, ensure_ascii=False)}")
        for nota in r.notes:
            linhas.append(f"  nota: {nota}")
    entrada = {'suite': cfg.suite, 'bounds': {k: v for k, v in cfg.bounds.items() if v is not None}}
    emit(cfg, entrada, [r.to_json() for r in relatorios], "\n".join(linhas))
    return EXIT_OK if all(r.passed for r in relatorios) else EXIT_IDENTITY


def cmd_scan_negative(cfg: RunConfig) -> int:
    """Lista os a_{S[mu]}^nu(q) com coeficientes negativos"""
    _require(cfg, 'mu', 'copies')
    relatorio = negativity_scan(cfg.instance(), cfg.bounds.get('max_parts'))
    if relatorio.findings:
        texto = "\n".join(f"S={f['S']} nu=({','.join(str(x) for x in f['nu'])}): {f['text']}"
                          for f in relatorio.findings)
    else:
        texto = "nenhum coeficiente negativo"
    emit(cfg, _base_input(cfg), relatorio.to_json(), texto)
    if not (relatorio.revalidated and relatorio.aggregates_nonnegative):
        return EXIT_IDENTITY
    return EXIT_OK


HANDLERS = {
    'coeff': cmd_coeff,
    'schur': cmd_schur,
    'plethysm': cmd_plethysm,
    'verify': cmd_verify,
    'scan-negative': cmd_scan_negative,
}


def build_parser() -> argparse.ArgumentParser:
    comum = argparse.ArgumentParser(add_help=False)
    comum.add_argument('--format', choices=['json', 'csv', 'text'], default='text')
    comum.add_argument('--force', action='store_true', help='ignora os limites de escala de mesa')
    comum.add_argument('--fast', action='store_true', help='usa a expansão q-multinomial')

    forma = argparse.ArgumentParser(add_help=False)
    forma.add_argument('--shape', type=Partition.parse, help='forma mu, ex.: 2,1')
    forma.add_argument('--copies', type=int, help='número de cópias n')

    parser = argparse.ArgumentParser(prog='llt', description='Coeficientes LLT e pletismos')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('coeff', parents=[comum, forma], help='coeficiente LLT')
    p.add_argument('--weight', type=Partition.parse, required=True)
    p.add_argument('--component', type=int)

    p = sub.add_parser('schur', parents=[comum, forma], help='coeficientes q-LR')
    p.add_argument('--component', type=int)

    p = sub.add_parser('plethysm', parents=[comum], help='multiplicidades de pletismo')
    p.add_argument('--outer', type=Partition.parse)
    p.add_argument('--tableau', type=StandardTableau.parse)
    p.add_argument('--inner', type=Partition.parse, required=True)
    p.add_argument('--weight', type=Partition.parse, required=True)

    p = sub.add_parser('verify', parents=[comum], help='suítes de verificação')
    p.add_argument('suite', choices=list(SUITES) + ['all'])
    p.add_argument('--max-cells', type=int)
    p.add_argument('--max-copies', type=int)
    p.add_argument('--max-len', type=int)
    p.add_argument('--max-n', type=int)
    p.add_argument('--max-entry', type=int)
    p.add_argument('--max-parts', type=int)

    p = sub.add_parser('scan-negative', parents=[comum, forma], help='busca coeficientes negativos')
    p.add_argument('--max-parts', type=int)
    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command, format=args.format, force=args.force,
                    fast=args.fast or FAST_PATH)
    cfg.mu = getattr(args, 'shape', None) or getattr(args, 'inner', None)
    cfg.copies = getattr(args, 'copies', None)
    cfg.nu = getattr(args, 'weight', None)
    cfg.component = getattr(args, 'component', None)
    cfg.outer = getattr(args, 'outer', None)
    cfg.tableau = getattr(args, 'tableau', None)
    cfg.suite = getattr(args, 'suite', None)
    if cfg.outer is not None:
        cfg.copies = cfg.outer.size
    elif cfg.tableau is not None:
        cfg.copies = cfg.tableau.size
    for chave in ('max_cells', 'max_copies', 'max_len', 'max_n', 'max_entry', 'max_parts'):
        cfg.bounds[chave] = getattr(args, chave, None)
    return cfg


def main(argv: Optional[List[str]] = None) -> int:
    """Ponto de entrada: interpreta os argumentos e despacha para o comando"""
    args = build_parser().parse_args(argv)
    cfg = build_config(args)

    if not is_within_caps(cfg):
        if not cfg.force:
            print(f"erro: limites excedidos (|mu| <= {MAX_CELLS}, n <= {MAX_COPIES}); use --force",
                  file=sys.stderr)
            return EXIT_USAGE
        logger.warning(f"⚠️ Limites de escala de mesa ignorados por --force ({cfg.command})")

    try:
        return HANDLERS[cfg.command](cfg)
    except ValueError as e:
        print(f"erro: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Erro inesperado em {cfg.command}: {e}")
        logger.error(traceback.format_exc())
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
