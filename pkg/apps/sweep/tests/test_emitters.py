import io

import pytest

from apps.core.exceptions import ParameterError
from apps.seller.models import SellerCase
from apps.sweep.emitters import emit_csv, emit_plot, parse_csv
from apps.sweep.managers import SweepRowSet
from apps.sweep.models import SweepRow, SweepStatus


@pytest.fixture
def rows():
    return SweepRowSet([
        SweepRow(0.7, A=3.1, B=3.5, m=1.9, a=1.2, b=2.0, seller_case=SellerCase.M_ABOVE_L),
        SweepRow(0.8, A=3.3, B=3.9, m=1.8, a=1.2, b=2.1, seller_case=SellerCase.M_ABOVE_L),
        SweepRow(0.9, status=SweepStatus.ASSUMPTION_FAILED, detail='нет A'),
        SweepRow(1.0, A=3.6, B=4.6, m=0.8, a=1.3, b=2.3, seller_case=SellerCase.M_BELOW_L),
    ])


def test_csv_layout(rows):
    lines = emit_csv(rows).splitlines()
    assert lines[0] == 'gamma,A,B,m,a,b,seller_case,status'
    assert lines[1] == '0.700000,3.10000,3.50000,1.90000,1.20000,2.00000,MAboveL,ok'
    assert lines[3] == '0.900000,,,,,,,assumption_failed'
    assert len(lines) == 5


def test_csv_reads_back(rows):
    parsed = parse_csv(emit_csv(rows))
    assert parsed.column('gamma') == [0.7, 0.8, 0.9, 1.0]
    assert parsed[2].A is None
    assert parsed[3].seller_case == SellerCase.M_BELOW_L
    assert len(parsed.successful()) == 3


def test_empty_csv_is_refused():
    with pytest.raises(ParameterError):
        emit_csv([])


def test_plot_series_and_reference(rows):
    out = io.StringIO()
    document = emit_plot(rows, out, L=1.0)
    assert out.getvalue() == document
    for key in ('B', 'm', 'a', 'b'):
        assert f'id="series-{key}"' in document
    assert 'id="reference"' in document
    assert 'L = 1' in document
    assert document == emit_plot(rows, L=1.0)


def test_plot_needs_two_successful_rows(rows):
    with pytest.raises(ParameterError):
        emit_plot(SweepRowSet(rows[2:3] + rows[:1]), L=1.0)


def test_row_violations():
    row = SweepRow(0.8, A=3.0, B=2.9, m=2.5, a=2.2, b=2.1)
    problems = row.violations(1.0, 2.0)
    assert len(problems) == 3
    assert SweepRowSet([row]).failed() == []


def test_seller_only_row_keeps_closed_form_boundaries():
    row = SweepRow(
        0.8, A=20 / 7, B=3.839282, m=1.775502, seller_case=SellerCase.M_ABOVE_L,
        status=SweepStatus.BUYER_FAILED, detail='InvalidShapeError',
    )
    text = emit_csv([row])
    assert text.splitlines()[1] == '0.800000,2.85714,3.83928,1.77550,,,MAboveL,buyer_failed'
    (parsed,) = parse_csv(text)
    assert (parsed.B, parsed.m) == (3.83928, 1.7755)
    assert parsed.a is None and parsed.b is None
    assert parsed.status == SweepStatus.BUYER_FAILED
    assert emit_csv([parsed]) == text
