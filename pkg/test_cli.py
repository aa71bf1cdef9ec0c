"""
Testes da linha de comando (main com argv explícito)
"""
import json

import pytest

from llt import EXIT_OK, EXIT_USAGE, main
from symmetric_functions import plethysm_multiplicity
from tableaux import Partition


def rodar(capsys, *argv):
    codigo = main(list(argv))
    saida = capsys.readouterr()
    return codigo, saida.out, saida.err


def test_coeff_text(capsys):
    codigo, out, _ = rodar(capsys, 'coeff', '--shape', '2', '--copies', '2', '--weight', '2,2')
    assert codigo == EXIT_OK
    assert out.strip() == "1+q+q^2"


def test_coeff_fast_path_same_answer(capsys):
    _, out, _ = rodar(capsys, 'coeff', '--shape', '2', '--copies', '3', '--weight', '3,2,1', '--fast')
    assert out.strip() == "1+2q+4q^2+4q^3+3q^4+q^5"


def test_coeff_component(capsys):
    codigo, out, _ = rodar(capsys, 'coeff', '--shape', '2', '--copies', '3', '--weight', '4,2',
                           '--component', '0')
    assert codigo == EXIT_OK
    assert out.strip() == "1+q^3"


def test_coeff_trivial(capsys):
    _, out, _ = rodar(capsys, 'coeff', '--shape', '1', '--copies', '1', '--weight', '1')
    assert out.strip() == "1"


def test_coeff_json_envelope(capsys):
    _, out, _ = rodar(capsys, 'coeff', '--shape', '2', '--copies', '2', '--weight', '2,2',
                      '--format', 'json')
    assert json.loads(out) == {
        'command': 'coeff',
        'input': {'mu': [2], 'n': 2, 'nu': [2, 2], 'component': None},
        'result': {'terms': [[0, 1], [1, 1], [2, 1]]},
    }


def test_coeff_csv(capsys):
    _, out, _ = rodar(capsys, 'coeff', '--shape', '2', '--copies', '2', '--weight', '2,2',
                      '--format', 'csv')
    assert out == 'statistic,"2,2"\nG,1+q+q^2\n'


def test_coeff_weight_mismatch_is_usage_error(capsys):
    codigo, out, err = rodar(capsys, 'coeff', '--shape', '2', '--copies', '2', '--weight', '3,3')
    assert codigo == EXIT_USAGE
    assert out == ""
    assert err.startswith("erro:")


def test_coeff_component_out_of_range(capsys):
    codigo, _, _ = rodar(capsys, 'coeff', '--shape', '2', '--copies', '3', '--weight', '4,2',
                         '--component', '3')
    assert codigo == EXIT_USAGE


def test_malformed_partition_rejected_by_parser():
    with pytest.raises(SystemExit) as excinfo:
        main(['coeff', '--shape', '2', '--copies', '2', '--weight', '2,x'])
    assert excinfo.value.code == 2


def test_caps_gate(capsys):
    codigo, _, err = rodar(capsys, 'coeff', '--shape', '5', '--copies', '1', '--weight', '5')
    assert codigo == EXIT_USAGE
    assert "--force" in err
    codigo, out, _ = rodar(capsys, 'coeff', '--shape', '5', '--copies', '1', '--weight', '5', '--force')
    assert codigo == EXIT_OK
    assert out.strip() == "1"


def test_schur_text(capsys):
    codigo, out, _ = rodar(capsys, 'schur', '--shape', '2', '--copies', '2')
    assert codigo == EXIT_OK
    assert out.strip().splitlines() == ["(4): 1", "(3,1): q", "(2,2): q^2"]


def test_schur_csv_has_component_rows(capsys):
    _, out, _ = rodar(capsys, 'schur', '--shape', '1', '--copies', '2', '--format', 'csv')
    linhas = out.strip().splitlines()
    assert linhas[0] == 'statistic,2,"1,1"'
    assert linhas[1] == "LR,1,q"
    assert [linha.split(',')[0] for linha in linhas[2:]] == ["LR^(0)", "LR^(1)"]


def test_plethysm_outer(capsys):
    codigo, out, _ = rodar(capsys, 'plethysm', '--outer', '1,1', '--inner', '2', '--weight', '3,1')
    assert codigo == EXIT_OK
    assert out.strip() == "1"
    _, out, _ = rodar(capsys, 'plethysm', '--outer', '2', '--inner', '2', '--weight', '3,1')
    assert out.strip() == "0"


def test_plethysm_tableau_json(capsys):
    codigo, out, _ = rodar(capsys, 'plethysm', '--tableau', '1,2/3', '--inner', '2', '--weight', '4,2',
                           '--format', 'json')
    assert codigo == EXIT_OK
    dados = json.loads(out)
    assert dados['input'] == {'tableau': '1,2/3', 'inner': [2], 'nu': [4, 2]}
    assert dados['result']['at_1'] == plethysm_multiplicity(Partition((2, 1)), Partition((2,)),
                                                            Partition((4, 2)))


def test_plethysm_needs_exactly_one_outer_source(capsys):
    codigo, _, _ = rodar(capsys, 'plethysm', '--inner', '2', '--weight', '2,2')
    assert codigo == EXIT_USAGE
    codigo, _, _ = rodar(capsys, 'plethysm', '--outer', '2', '--tableau', '1,2', '--inner', '2',
                         '--weight', '2,2')
    assert codigo == EXIT_USAGE


def test_verify_kw(capsys):
    codigo, out, _ = rodar(capsys, 'verify', 'kw', '--max-n', '4')
    assert codigo == EXIT_OK
    assert out.startswith("kw: PASS")


def test_verify_json(capsys):
    codigo, out, _ = rodar(capsys, 'verify', 'foata', '--max-len', '3', '--format', 'json')
    assert codigo == EXIT_OK
    dados = json.loads(out)
    assert dados['input'] == {'suite': 'foata', 'bounds': {'max_len': 3}}
    assert dados['result'][0]['passed'] is True


def test_verify_caps_apply_to_bounds(capsys):
    codigo, _, _ = rodar(capsys, 'verify', 'theorem-a', '--max-cells', '9')
    assert codigo == EXIT_USAGE


def test_scan_negative_single_copy(capsys):
    codigo, out, _ = rodar(capsys, 'scan-negative', '--shape', '2,1', '--copies', '1')
    assert codigo == EXIT_OK
    assert out.strip() == "nenhum coeficiente negativo"
