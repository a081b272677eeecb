# coding: utf-8
import json

import pytest

from ..bin import format_report, main, parse_args, validate_args
from .. import commands
from ..commands import (DEFAULT_CONFIG, cmd_classify, cmd_count, cmd_pell,
                        cmd_schur, cmd_table, cmd_verify, get_config_path,
                        load_config, load_source, load_yaml,
                        wedderburn_from_descriptors)
from ..classify import classify_irreducibles
from ..errors import SpecError
from ..groups import build_group
from .conftest import builtin, c4_over


@pytest.fixture(autouse=True)
def no_user_config(monkeypatch, tmp_path):
    monkeypatch.setenv('SLR_CONFIG', str(tmp_path / 'missing.ini'))


def test_load_source(tmp_path):
    spec = load_source('builtin:S3', 'groups')
    assert spec['name'] == 'S3'
    assert spec['sigma_images'] == [1, 0]
    with pytest.raises(SpecError, match='Unknown builtin'):
        load_source('builtin:S4', 'groups')
    listed = tmp_path / 'list.yml'
    listed.write_text('- 1\n- 2\n')
    with pytest.raises(SpecError):
        load_source(str(listed), 'groups')


def test_load_yaml_reports_line(tmp_path):
    broken = tmp_path / 'broken.yml'
    broken.write_text('generators:\n  - [2, 1\n')
    with pytest.raises(SpecError) as info:
        load_yaml(broken)
    assert 'Malformed YAML' in str(info.value)
    with pytest.raises(SpecError, match='Cannot read'):
        load_yaml(tmp_path / 'absent.yml')


def test_config_resolution(monkeypatch, tmp_path):
    config = tmp_path / 'slr.ini'
    monkeypatch.setenv('SLR_CONFIG', str(config))
    assert get_config_path() == str(config.resolve())
    assert get_config_path(str(tmp_path / 'other.ini')) == \
        str(tmp_path / 'other.ini')
    monkeypatch.delenv('SLR_CONFIG')
    assert get_config_path().name == 'slr.ini'


def test_load_config(tmp_path):
    assert load_config() == DEFAULT_CONFIG
    path = tmp_path / 'slr.ini'
    path.write_text('[limits]\nbudget = 5\nheight = many\nspeed = 3\n')
    limits = load_config(str(path))['limits']
    assert limits['budget'] == 5
    assert limits['height'] == DEFAULT_CONFIG['limits']['height']
    assert 'speed' not in limits


def test_cmd_classify(s3_sqrt5, s3_sqrt_minus3):
    report = cmd_classify(s3_sqrt5)
    assert len(report['descriptors']) == 2
    assert report['wedderburn'] == [[2, 1], [2, 2]]
    assert report['count'] is None
    json.dumps(report)
    report = cmd_classify(s3_sqrt_minus3)
    assert report['count'] == 3
    assert [d['schur_index']['value'] for d in report['descriptors']] == \
        [1, 1, 1]


def test_cmd_classify_bounded_descent():
    report = cmd_classify(builtin('sqrt-3', 'Q8xC2'))
    quaternion = report['descriptors'][4]
    assert quaternion['descent'] is None
    assert quaternion['descent_divisors'] == [1, 2]
    assert quaternion['schur_index']['divisors'] == [1, 2]
    assert report['wedderburn'] is None
    json.dumps(report)
    assert '1|2' in format_report('classify', report)


def test_cmd_classify_budget_runs_witnesses(s3_gf4):
    def criteria(report):
        return {e['criterion'] for d in report['descriptors']
                for e in d['schur_index']['evidence']}

    assert 'extension-search' not in criteria(cmd_classify(s3_gf4))
    report = cmd_classify(s3_gf4, budget=10 ** 6)
    assert 'extension-search' in criteria(report)

def test_wedderburn_totals():
    for d in (2, 3, -1):
        surjection = c4_over(d)
        profile = wedderburn_from_descriptors(
            surjection, classify_irreducibles(surjection))
        assert sum(f.n ** 2 * f.division_dimension for f in profile) == 8


def test_cmd_schur():
    report = cmd_schur(c4_over(3), orbit=1)
    assert len(report['orbits']) == 1
    schur = report['orbits'][0]['schur_index']
    assert schur['value'] == 2
    assert 'orbit 1 (rows [1]): m = 2 [exact]' in format_report('schur',
                                                                report)
    with pytest.raises(SpecError):
        cmd_schur(c4_over(3), orbit=5)


def test_cmd_count(s3_sqrt_minus3, s3_sqrt5):
    report = cmd_count(s3_sqrt_minus3)
    assert report['conductor'] == 6
    assert report['count'] == 3
    assert len(report['orbits']) == 3
    disabled = cmd_count(s3_sqrt5)
    assert disabled['count'] is None
    assert 'disabled' in disabled


def test_cmd_table():
    report = cmd_table(build_group(load_source('builtin:S3', 'groups')))
    assert report['conductor'] == 3
    assert report['sizes'] == [1, 3, 2]
    assert report['rows'][2] == ['2', '0', '-1']


def test_cmd_pell():
    report = cmd_pell(2)
    assert report['solvable']
    assert report['certificate'] == ['1', '1']
    assert report['pell_criterion'] is True
    obstructed = cmd_pell(3)
    assert obstructed['obstruction'] == '2'
    assert 'not solvable (obstruction at 2)' in format_report('pell',
                                                              obstructed)


def test_cmd_verify(s3_sqrt5):
    report = cmd_verify(s3_sqrt5, load_source('builtin:S3-standard', 'reps'))
    assert report['valid']
    assert report['character'] == ['2', '-1', '-1']
    assert report['matches'] == [{'orbit': 1, 'multiplicity': 1,
                                  'copies': 1}]
    assert report['irreducible']
    corrupted = cmd_verify(s3_sqrt5,
                           load_source('builtin:S3-corrupted', 'reps'))
    assert not corrupted['valid']
    assert len(corrupted['witness']) == 2
    assert format_report('verify', corrupted).startswith('G = ')


def test_cmd_verify_against(s3_sqrt5, monkeypatch):
    standard = load_source('builtin:S3-standard', 'reps')
    report = cmd_verify(s3_sqrt5, standard, against=standard)
    assert report['isomorphic'] is True
    assert 'isomorphic to --against: True' in format_report('verify',
                                                           report)

    calls = []

    def is_isomorphic(V, W, coefficient_range, budget):
        calls.append((coefficient_range, budget))
        return False

    monkeypatch.setattr(commands, 'is_isomorphic', is_isomorphic)
    config = {'limits': dict(DEFAULT_CONFIG['limits'], coefficient_range=1,
                             budget=500)}
    report = cmd_verify(s3_sqrt5, standard, config, against=standard)
    assert report['isomorphic'] is False
    assert calls == [(1, 500)]
    with pytest.raises(SpecError):
        cmd_verify(s3_sqrt5, standard,
                   against=load_source('builtin:S3-corrupted', 'reps'))


def test_main_writes_json(tmp_path, capsys):
    output = tmp_path / 'report.json'
    main(parse_args(['classify', '--tower', 'builtin:sqrt5', '--group',
                     'builtin:S3', '--json', str(output)]))
    report = json.loads(output.read_text())
    assert [d['schur_index']['value'] for d in report['descriptors']] == \
        [1, 1]
    assert 'dim_K End' in capsys.readouterr().out


def test_main_exit_codes():
    with pytest.raises(SystemExit) as info:
        main(parse_args(['verify', '--tower', 'builtin:sqrt5', '--group',
                         'builtin:S3', '--rep', 'builtin:S3-corrupted']))
    assert info.value.code == 2
    # omega does not lie in Q(sqrt(5))
    with pytest.raises(SystemExit) as info:
        main(parse_args(['verify', '--tower', 'builtin:sqrt5', '--group',
                         'builtin:S3', '--rep', 'builtin:S3-omega']))
    assert info.value.code == 2
    main(parse_args(['pell', '34']))


def test_validate_args():
    with pytest.raises(SystemExit) as info:
        validate_args(parse_args(['schur', '--tower', 'builtin:sqrt3',
                                  '--group', 'builtin:C4', '--budget', '0']))
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        validate_args(parse_args(['classify', '--tower', 'builtin:GF4',
                                  '--group', 'builtin:S3', '--budget',
                                  '-3']))
    assert info.value.code == 2
    args = parse_args(['classify', '--tower', 'builtin:GF4', '--group',
                       'builtin:S3', '--budget', '500'])
    assert args.budget == 500
    args = parse_args(['verify', '--tower', 'builtin:sqrt5', '--group',
                       'builtin:S3', '--rep', 'a.yml', '--against',
                       'b.yml'])
    assert args.against == 'b.yml'
    args = validate_args(parse_args(['table', '--group', 'builtin:Q8']))
    assert args.config_file.name == 'missing.ini'
