"""CLI: exit codes, report determinism, and witness re-validation."""

import json

import pytest

from oreprimes.cli import (EXIT_DOMAIN, EXIT_OK, EXIT_PRECONDITION,
                           EXIT_UNDECIDED, main)
from oreprimes import build_domain, ideal_from_json, is_stable_ideal


F3_DOMAIN = {'kind': 'PolyOverFiniteField', 'q': 3,
             'sigma_a': 1, 'sigma_b': 1, 'delta_h': 1}


def write_config(tmp_path, name='cfg.json', **fields):
    data = {'domain': F3_DOMAIN}
    data.update(fields)
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_classify_report(tmp_path, capsys):
    cfg = write_config(tmp_path, command='classify', ideal='t')
    out = tmp_path / 'report.json'
    assert main(['--config', cfg, '--out', str(out)]) == EXIT_OK
    report = json.loads(out.read_text())
    cls = report['result']['classification']
    assert cls['verdict'] == 'NotMinimal'
    # the printed witness re-validates when parsed back in
    dom = build_domain(F3_DOMAIN)
    witness = ideal_from_json(dom, cls['witness'])
    assert is_stable_ideal(dom, witness, 'sigma_delta')
    assert not witness.is_zero


def test_classify_extension_minimal(tmp_path):
    cfg = write_config(tmp_path, command='classify',
                       ideal='t^3 + 2*t', seed=5)
    out = tmp_path / 'r.json'
    assert main(['--config', cfg, '--out', str(out)]) == EXIT_OK
    report = json.loads(out.read_text())
    assert report['result']['classification']['verdict'] == 'ExtensionMinimal'


def test_invalid_domain_exit(tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps({
        'domain': {'kind': 'PolyOverRationals', 'sigma_a': 0, 'sigma_b': 1},
        'command': 'check-domain'}))
    assert main(['--config', str(path)]) == EXIT_DOMAIN


def test_config_parse_failure(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{not json')
    assert main(['--config', str(path), '--command', 'classify']) == 2


def test_precondition_exit(tmp_path):
    cfg = write_config(tmp_path, command='classify', ideal='0 mod 3')
    assert main(['--config', cfg]) == EXIT_PRECONDITION


def test_budget_exit(tmp_path):
    path = tmp_path / 'qd.json'
    path.write_text(json.dumps({
        'domain': {'kind': 'PolyOverRationals', 'sigma_a': 1, 'sigma_b': 0,
                   'delta_h': 1},
        'command': 'largest-stable', 'ideal': 't', 'budget': 8}))
    assert main(['--config', str(path)]) == EXIT_UNDECIDED


def test_enumerate_minimal_report(tmp_path):
    path = tmp_path / 'zi.json'
    path.write_text(json.dumps({
        'domain': {'kind': 'GaussianIntegers', 'sigma': 'conjugation',
                   'delta_d': 2},
        'command': 'enumerate-minimal', 'norm_bound': 25}))
    out = tmp_path / 'r.json'
    assert main(['--config', str(path), '--out', str(out)]) == EXIT_OK
    report = json.loads(out.read_text())
    listed = report['result']['minimal_prime_contractions']
    assert len(listed) == 3
    assert listed[0] == [{'exp': 1, 'prime': '1+1*i'}]


def test_verify_reproducible(tmp_path):
    cfg = write_config(tmp_path, command='verify', norm_bound=27, seed=11)
    out1, out2 = tmp_path / 'a.json', tmp_path / 'b.json'
    assert main(['--config', cfg, '--out', str(out1)]) == EXIT_OK
    assert main(['--config', cfg, '--out', str(out2)]) == EXIT_OK
    assert out1.read_bytes() == out2.read_bytes()
    report = json.loads(out1.read_text())
    assert report['result']['disagreements'] == []


def test_flag_overrides_config(tmp_path, capsys):
    cfg = write_config(tmp_path, command='classify', ideal='t')
    assert main(['--config', cfg, '--ideal', 't^3 + 2*t']) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report['result']['classification']['verdict'] == 'ExtensionMinimal'


def test_missing_command(tmp_path):
    path = tmp_path / 'none.json'
    path.write_text(json.dumps({'domain': F3_DOMAIN}))
    assert main(['--config', str(path)]) == 2
