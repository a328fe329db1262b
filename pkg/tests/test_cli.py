import json

import pytest

from src.cli import EXIT_INVARIANT, EXIT_OK, EXIT_USAGE, run
from src.errors import ConsistencyError
from src.utils.json_codec import decode_vector


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def write_payload(tmp_path, payload, name="payload.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def schur(*entries):
    return [{'partition': list(lam), 'coeff': str(c)} for lam, c in entries]


def sympoly(alphabet, nvars, *terms):
    return {'alphabet': alphabet, 'vars': nvars,
            'terms': [{'exp': list(exp), 'coeff': str(c)} for exp, c in terms]}


def test_ring_command(capsys):
    code, document = run_json(capsys, ['ring', '--r', '1', '--n', '3'])
    assert code == EXIT_OK
    assert document['basis'] == [[], [1], [2]]
    assert document['rank'] == 3
    assert len(document['generators']) == 1
    assert len(document['relations']) == 1


def test_mul_command(capsys, tmp_path):
    path = write_payload(tmp_path, [schur(((1, 1), 1)), schur(((1, 1), 1))])
    code, document = run_json(capsys, ['mul', '--r', '2', '--n', '4', '--json', path])
    assert code == EXIT_OK
    assert document['product'] == [{'partition': [2, 2], 'coeff': '1'}]


def test_mul_reads_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr('sys.stdin', io.StringIO(json.dumps([schur(((1,), 1))] * 5)))
    code, document = run_json(capsys, ['mul', '--r', '2', '--n', '4'])
    assert code == EXIT_OK
    assert document['product'] == []


def test_usage_errors(capsys, tmp_path):
    assert run(['ring', '--r', '1', '--n', '2', '--bogus']) == EXIT_USAGE
    assert run(['ring', '--r', '3', '--n', '2']) == EXIT_USAGE
    assert run(['geom', 'dim', '--r', '2']) == EXIT_USAGE
    assert run(['pont', 'nilpotency', '--r', '1']) == EXIT_USAGE
    assert run([]) == EXIT_USAGE

    broken = tmp_path / 'broken.json'
    broken.write_text('[{"partition": [1],', encoding='utf-8')
    assert run(['mul', '--r', '1', '--n', '2', '--json', str(broken)]) == EXIT_USAGE
    assert run(['mul', '--r', '1', '--n', '2', '--json', str(tmp_path / 'missing.json')]) == EXIT_USAGE
    capsys.readouterr()


def test_consistency_error_maps_to_invariant_exit(capsys, monkeypatch):
    def contradict(spec):
        raise ConsistencyError("rank mismatch")

    monkeypatch.setattr('src.cli.rank', contradict)
    assert run(['ring', '--r', '1', '--n', '3']) == EXIT_INVARIANT
    assert 'rank mismatch' in capsys.readouterr().err


def test_unexpected_errors_propagate(monkeypatch):
    def crash(spec):
        raise RuntimeError("boom")

    monkeypatch.setattr('src.cli.rank', crash)
    with pytest.raises(RuntimeError, match="boom"):
        run(['ring', '--r', '1', '--n', '3'])


def test_unwritable_export_is_a_usage_error(capsys, tmp_path):
    export = tmp_path / 'missing-dir' / 'report.csv'
    argv = ['verify', '--max-r', '0', '--max-n', '1', '--samples', '1', '--export', str(export)]
    assert run(argv) == EXIT_USAGE
    assert 'Error writing export' in capsys.readouterr().err


def test_help_exits_cleanly(capsys):
    assert run(['--help']) == EXIT_OK
    assert 'hgr' in capsys.readouterr().out


def test_flag_command(capsys):
    code, document = run_json(capsys, ['flag', '--r', '2', '--n', '3', '--check-ideals', '--basis'])
    assert code == EXIT_OK
    assert document['rank'] == 6
    assert len(document['basis_Br']) == 2
    assert document['ideals_equal'] is True
    assert document['powers_in_ideal'] is True
    assert document['generators_in_power_of_maximal_ideal'] is True
    assert document['module_basis_check'] is True


def test_pont_roots(capsys, tmp_path):
    path = write_payload(tmp_path, {'roots': [sympoly('y', 2, ((1, 0), 1)),
                                              sympoly('y', 2, ((0, 1), 1))]})
    code, document = run_json(capsys, ['pont', 'roots', '--json', path])
    assert code == EXIT_OK
    assert document['half_rank'] == 2
    assert document['classes'][0]['terms'] == [{'exp': [0, 1], 'coeff': '1'},
                                               {'exp': [1, 0], 'coeff': '1'}]
    assert document['classes'][1]['terms'] == [{'exp': [1, 1], 'coeff': '1'}]
    assert len(document['total_class']) == 3


def test_pont_sum_in_grassmannian(capsys, tmp_path):
    line = {'classes': [schur(((1,), 1))]}
    path = write_payload(tmp_path, {'ring': {'r': 2, 'n': 4}, 'bundles': [line, line]})
    code, document = run_json(capsys, ['pont', 'sum', '--json', path])
    assert code == EXIT_OK
    assert document['half_rank'] == 2
    assert decode_vector(document['classes'][0]) == {(1,): 2}
    assert decode_vector(document['classes'][1]) == {(2,): 1, (1, 1): 1}


def test_pont_divide(capsys, tmp_path):
    payload = {
        'dividend': [sympoly('y', 1, ((2,), -1)), sympoly('y', 1), sympoly('y', 1, ((0,), 1))],
        'divisor': [sympoly('y', 1, ((1,), -1)), sympoly('y', 1, ((0,), 1))],
    }
    code, document = run_json(capsys, ['pont', 'divide', '--json', write_payload(tmp_path, payload)])
    assert code == EXIT_OK
    assert document['divides'] is True
    assert [q['terms'] for q in document['quotient']] == [[{'exp': [1], 'coeff': '1'}],
                                                         [{'exp': [0], 'coeff': '1'}]]

    payload['divisor'] = [sympoly('y', 1, ((1,), 2)), sympoly('y', 1, ((0,), 1))]
    code, document = run_json(capsys, ['pont', 'divide', '--json', write_payload(tmp_path, payload)])
    assert code == EXIT_OK
    assert document == {'divides': False, 'quotient': None}


def test_pont_nilpotency(capsys, tmp_path):
    path = write_payload(tmp_path, schur(((1,), 1)))
    code, document = run_json(capsys, ['pont', 'nilpotency', '--r', '1', '--n', '3', '--json', path])
    assert code == EXIT_OK
    assert document['index'] == 3


def test_localize_command(capsys):
    code, document = run_json(capsys, ['localize', '--r', '1', '--n', '2'])
    assert code == EXIT_OK
    assert document['tau']['matrix'] == [['0'], ['-1']]
    assert document['sigma']['matrix'] == [['1', '0']]
    assert document['exactness']['passed'] is True


def test_stability_command(capsys):
    code, document = run_json(capsys, ['stability', '--r', '1', '--max-n', '4', '--cap', '2'])
    assert code == EXIT_OK
    assert [row['monomial'] for row in document['table']] == ['1', 'p1', 'p1^2']
    assert document['table'][2]['normal_form'] == [{'partition': [2], 'coeff': '1'}]
    assert document['table'][2]['witness'] == 3


@pytest.mark.parametrize("argv,expected", [
    (['geom', 'dim', '--r', '2', '--n', '4'],
     {'r': 2, 'n': 4, 'hgr_dimension': 16, 'hflag_dimension': 20, 'tower_consistent': True}),
    (['geom', 'ga', '--n', '2', '--i', '1'],
     {'n': 2, 'i': 1, 'total_space_dim': 7, 'group_dim': 1, 'quotient_dim': 6}),
    (['geom', 'normal', '--r', '2'], {'r': 2, 'rank_plus': 4, 'rank_minus': 4, 'holds': True}),
])
def test_geom_commands(capsys, argv, expected):
    code, document = run_json(capsys, argv)
    assert code == EXIT_OK
    assert document == expected


def test_geom_strata(capsys):
    code, document = run_json(capsys, ['geom', 'strata', '--n', '2'])
    assert code == EXIT_OK
    assert [s['dim'] for s in document['strata']] == [8, 6, 4]
    assert [s['affine'] for s in document['strata']] == [False, False, True]


def test_verify_command(capsys, tmp_path):
    export = tmp_path / 'report.csv'
    code, document = run_json(capsys, ['verify', '--max-r', '1', '--max-n', '2', '--samples', '1',
                                       '--workers', '2', '--export', str(export)])
    assert code == EXIT_OK
    assert document['summary']['Overall_Status'] == 'Pass'
    assert [(cell['r'], cell['n']) for cell in document['cells']] == [(0, 0), (0, 1), (1, 1), (0, 2), (1, 2)]
    assert export.exists()


def test_output_is_byte_deterministic(capsys):
    argv = ['verify', '--max-r', '1', '--max-n', '2', '--samples', '1', '--seed', '7']
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    assert capsys.readouterr().out == first
