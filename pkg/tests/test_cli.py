#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0

"""Tests for the command-line front end and its exit codes"""

import sys
import os
import io
import json

import pytest

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from toeplitz_queens.__main__ import main
from toeplitz_queens.search.output_generator import read_census

S_4_DOC = '{"n": 4, "variant": "full", "cells": [[1, 3], [2, 2], [3, 4], [4, 1]]}'


def run(capsys, *argv):
    """Invoke the CLI and return (exit code, stdout)"""
    with pytest.raises(SystemExit) as excinfo:
        main(list(argv))
    return excinfo.value.code, capsys.readouterr().out


def test_no_command_prints_help(capsys):
    code, out = run(capsys)
    assert code == 2
    assert 'usage' in out


def test_solve_json(capsys):
    code, out = run(capsys, 'solve', '4', '--format', 'json')
    assert code == 0
    assert json.loads(out) == json.loads(S_4_DOC)


def test_solve_ascii(capsys):
    code, out = run(capsys, 'solve', '4', '--format', 'ascii')
    assert code == 0
    assert '  4  Q  .  .  .' in out.splitlines()


def test_solve_variants(capsys):
    code, out = run(capsys, 'solve', '5', '--variant', 'double-star', '--format', 'json')
    assert code == 0
    assert json.loads(out) == {'n': 5, 'variant': 'double_star', 'cells': [[2, 2], [3, 5], [4, 3]]}


def test_solve_with_trace(capsys):
    code, out = run(capsys, 'solve', '8', '--trace', '--format', 'json')
    doc = json.loads(out)
    assert code == 0
    assert doc['placement']['n'] == 8
    assert doc['trace']['case'] == '3r+2'


def test_solve_unsolvable_prints_certificate(capsys):
    code, out = run(capsys, 'solve', '6', '--format', 'json')
    assert code == 1
    assert json.loads(out)['certificate']['quantity'] == 762


def test_solve_star_below_order_four_is_a_usage_error(capsys):
    code, _ = run(capsys, 'solve', '1', '--variant', 'star')
    assert code == 2


@pytest.mark.parametrize('argv', [('solve', '0'), ('solve', 'x'), ('nm1', '1'), ('solve', '4', '--variant', 'hex')])
def test_argument_errors_exit_2(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == 2


def test_nm1(capsys):
    code, out = run(capsys, 'nm1', '6', '--format', 'json')
    assert code == 0
    assert json.loads(out)['cells'] == [[1, 1], [3, 6], [4, 5], [5, 3], [6, 2]]
    code, out = run(capsys, 'nm1', '2', '--format', 'json')
    assert json.loads(out)['cells'] == [[1, 1]]


def test_verify_file(capsys, tmp_path):
    path = tmp_path / 's4.json'
    path.write_text(S_4_DOC, encoding='utf-8')
    code, out = run(capsys, 'verify', str(path), '--format', 'json')
    assert code == 0
    assert json.loads(out)['ok'] is True


def test_verify_rejects_broken_placement(capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO(S_4_DOC.replace('[4, 1]', '[4, 2]')))
    code, out = run(capsys, 'verify', '--format', 'json')
    assert code == 1
    assert json.loads(out)['reason'] in ('duplicate column', 'value cover fails')


def test_render_rejects_cells_off_the_board(capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO('{"n": 4, "variant": "full", "cells": [[9, 9]]}'))
    code, out = run(capsys, 'render')
    assert code == 1
    assert out == ''


def test_verify_rejects_repeated_cell(capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO(S_4_DOC.replace('[[1, 3],', '[[1, 3], [1, 3],')))
    code, out = run(capsys, 'verify', '--format', 'json')
    assert code == 1
    assert json.loads(out)['reason'] == 'duplicate row'


def test_verify_out_of_region_is_a_negative_result(capsys, monkeypatch):
    doc = '{"n": 4, "variant": "star", "cells": [[1, 3], [2, 2], [4, 4]]}'
    monkeypatch.setattr('sys.stdin', io.StringIO(doc))
    code, out = run(capsys, 'verify', '--format', 'json')
    assert code == 1
    assert json.loads(out)['reason'] == 'out of region'


@pytest.mark.parametrize('text', ['{"n": 4, "variant": "full", "cells": [[1, 3]', '{"n": 4}', '[]'])
def test_verify_parse_failures_exit_2(capsys, monkeypatch, text):
    monkeypatch.setattr('sys.stdin', io.StringIO(text))
    code, _ = run(capsys, 'verify')
    assert code == 2


def test_verify_missing_file_exits_2(capsys, tmp_path):
    code, _ = run(capsys, 'verify', str(tmp_path / 'missing.json'))
    assert code == 2


def test_solve_output_round_trips_through_verify(capsys, monkeypatch):
    for n in range(1, 201):
        if n % 4 not in (0, 1):
            continue
        _, out = run(capsys, 'solve', str(n), '--format', 'json')
        monkeypatch.setattr('sys.stdin', io.StringIO(out))
        code, _ = run(capsys, 'verify')
        assert code == 0, n


@pytest.mark.slow
def test_solve_output_round_trips_up_to_500(capsys, monkeypatch):
    for n in range(201, 501):
        if n % 4 not in (0, 1):
            continue
        _, out = run(capsys, 'solve', str(n), '--format', 'json')
        monkeypatch.setattr('sys.stdin', io.StringIO(out))
        code, _ = run(capsys, 'verify')
        assert code == 0, n


def test_enumerate_fundamental(capsys):
    code, out = run(capsys, '--workers', '1', 'enumerate', '4', '--fundamental')
    doc = json.loads(out)
    assert code == 0
    assert doc['total_count'] == 4 and doc['fundamental_count'] == 1


@pytest.mark.parametrize('n, total', [('1', 1), ('2', 0)])
def test_enumerate_small(capsys, n, total):
    code, out = run(capsys, '--workers', '1', 'enumerate', n)
    assert code == 0
    assert json.loads(out)['total_count'] == total


def test_enumerate_cap_exceeded(capsys):
    code, out = run(capsys, 'enumerate', '20')
    assert code == 2
    assert out == ''


def test_enumerate_cap_flag_wins_over_environment(capsys, monkeypatch):
    monkeypatch.setenv('TOEPLITZ_QUEENS_CAPS', '3')
    assert run(capsys, '--workers', '1', 'enumerate', '4')[0] == 2
    assert run(capsys, '--workers', '1', 'enumerate', '4', '--cap', '4')[0] == 0


def test_malformed_caps_environment_exits_2(capsys, monkeypatch):
    monkeypatch.setenv('TOEPLITZ_QUEENS_CAPS', '{"depth": 3}')
    assert run(capsys, '--workers', '1', 'enumerate', '4')[0] == 2


def test_enumerate_writes_results_file(capsys, tmp_path):
    target = tmp_path / 'e.json'
    code, _ = run(capsys, '--workers', '1', 'enumerate', '5', '--count-only', '--output', str(target))
    assert code == 0
    assert json.loads(target.read_text(encoding='utf-8'))['n'] == 5


def test_enumerate_save_uses_output_dir(capsys, tmp_path):
    results = tmp_path / 'results'
    code, _ = run(capsys, '--workers', '1', '--output-dir', str(results), 'enumerate', '4', '--save')
    assert code == 0
    assert [p.name.startswith('enumerate-n4-') for p in results.iterdir()] == [True]


def test_dominate(capsys):
    code, out = run(capsys, 'dominate', '2', '--format', 'json')
    assert code == 0
    assert json.loads(out) == {'n': 2, 'gamma': 1, 'witness': {'n': 2, 'variant': 'full', 'cells': [[1, 1]]}}

    code, out = run(capsys, 'dominate', '3', '--format', 'ascii')
    assert code == 0
    assert out.startswith('Domination number of T_3:')


def test_dominate_cap(capsys):
    assert run(capsys, 'dominate', '9')[0] == 2


def test_certificate(capsys):
    code, out = run(capsys, 'certificate', '7', '--format', 'json')
    cert = json.loads(out)['certificate']
    assert code == 0
    assert cert['contradiction_kind'] == 'OddCase'
    assert cert['quantity'] == 1134 and cert['quantity_mod_4'] == 2

    code, out = run(capsys, 'certificate', '6', '--format', 'ascii')
    assert code == 0
    assert 'EvenCase' in out


def test_certificate_for_solvable_order_exits_1(capsys):
    code, out = run(capsys, 'certificate', '4')
    assert code == 1
    assert out == ''


def test_render(capsys, monkeypatch):
    monkeypatch.setattr('sys.stdin', io.StringIO(S_4_DOC))
    code, out = run(capsys, 'render', '--values')
    assert code == 0
    assert out.splitlines() == [
        '     1  2  3  4',
        '  1  0  1  Q  3',
        '  2  1  Q  1  2',
        '  3  2  1  0  Q',
        '  4  Q  2  1  0',
    ]


def test_explain(capsys):
    code, out = run(capsys, 'explain', '9')
    assert code == 0
    assert 'case 3r' in out and 'Star board of order 4' in out
    assert run(capsys, 'explain', '7')[0] == 1


def test_census(capsys, tmp_path):
    target = tmp_path / 'census.csv'
    code, out = run(capsys, '--workers', '1', 'census', '1', '6', '--cap', '5', '--output', str(target))
    assert code == 0
    assert out.splitlines()[0].split() == ['n', 'solvable', 'total_count', 'fundamental_count', 'orbit_sizes', 'construct_ok']
    headers, rows = read_census(target)
    assert [r[2] for r in rows[:4]] == ['1', '0', '0', '4']
    assert rows[5][2] == ''
    assert run(capsys, 'census', '5', '1')[0] == 2


def test_config_show_and_init(capsys, isolated_data_dir):
    code, out = run(capsys, 'config')
    assert code == 0
    assert json.loads(out[out.index('{'):])['caps'] == {'enumerate': 14, 'count': 16, 'dominate': 8}

    assert run(capsys, 'config', '--init')[0] == 0
    assert (isolated_data_dir / 'config.yml').exists()
    assert run(capsys, 'config', '--init')[0] == 2
    assert run(capsys, 'config', '--init', '--force')[0] == 0
