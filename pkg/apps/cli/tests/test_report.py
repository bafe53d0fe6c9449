import pytest

from apps.cli.report import render_value_curves, write_report
from apps.core.exceptions import OutputError, ParameterError


def test_seller_only_report(seller, tmp_path):
    text = write_report(seller, None, tmp_path / 'report.txt')
    assert 'case: MAboveL' in text
    assert '[buyer]\nnot computed' in text
    assert 'residual.pasting_B = ' in text
    assert 'positive_pattern_ok: True' in text
    assert 'cells_per_unit = 4096' in text


def test_report_with_buyer(seller, buyer, tmp_path):
    text = write_report(seller, buyer, tmp_path / 'nested' / 'report.txt')
    assert 'k_case: a<H<=b' in text
    assert 'residual.continuity_L = ' in text
    assert (tmp_path / 'nested' / 'report.txt').read_text(encoding='utf-8') == text


def test_report_needs_a_solution(tmp_path):
    with pytest.raises(ParameterError):
        write_report(None, None, tmp_path / 'report.txt')


def test_unwritable_path(seller, tmp_path):
    blocker = tmp_path / 'file'
    blocker.write_text('x')
    with pytest.raises(OutputError) as info:
        write_report(seller, None, blocker / 'report.txt')
    assert str(blocker) in str(info.value)


def test_value_curves(seller, buyer, util):
    lines = render_value_curves(seller, buyer, util).splitlines()
    assert lines[0] == 'x,regime,branch,value,utility'
    branches = {tuple(line.split(',')[1:3]) for line in lines[1:]}
    assert branches == {('+', 'seller'), ('-', 'seller'), ('+', 'buyer'), ('-', 'buyer')}
    assert lines[1].startswith('1,+,seller,1,1')
