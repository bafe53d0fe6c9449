"""CSV и SVG по строкам прогона."""
import csv
import io

from django.template.loader import render_to_string

from apps.core.exceptions import ParameterError

from .managers import SweepRowSet
from .serializers import CSV_COLUMNS, SweepRowSerializer

PLOT_WIDTH = 640
PLOT_HEIGHT = 400
MARGIN = {'left': 64, 'right': 120, 'top': 24, 'bottom': 48}
SERIES = (
    ('B', 'B', '#1f77b4'),
    ('m', 'm', '#d62728'),
    ('a', 'a', '#2ca02c'),
    ('b', 'b', '#ff7f0e'),
)
TICKS = 5


def emit_csv(rows):
    """Текст CSV: заголовок и строка на каждое gamma"""
    if not rows:
        raise ParameterError('Нет строк для CSV')
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator='\n')
    writer.writeheader()
    for row in rows:
        writer.writerow(SweepRowSerializer(row).data)
    return buffer.getvalue()


def parse_csv(text):
    """Обратное чтение CSV в строки прогона"""
    rows = SweepRowSet()
    for record in csv.DictReader(io.StringIO(text)):
        serializer = SweepRowSerializer(data=record)
        serializer.is_valid(raise_exception=True)
        rows.append(serializer.save())
    return rows


class _Axis:
    def __init__(self, lo, hi, start, length, flip=False):
        if hi <= lo:
            lo, hi = lo - 0.5, hi + 0.5
        self.lo, self.hi = lo, hi
        self.start, self.length, self.flip = start, length, flip

    def __call__(self, value):
        fraction = (value - self.lo) / (self.hi - self.lo)
        if self.flip:
            fraction = 1.0 - fraction
        return self.start + fraction * self.length

    def ticks(self):
        step = (self.hi - self.lo) / (TICKS - 1)
        return [
            {'position': f'{self(self.lo + i * step):.2f}', 'label': f'{self.lo + i * step:.3g}'}
            for i in range(TICKS)
        ]


def emit_plot(rows, out=None, *, L):
    """SVG: ломаные B, m, a, b против gamma и линия уровня L.

    out: необязательный приёмник с методом write.
    """
    points = SweepRowSet(rows).successful().ordered()
    if len(points) < 2:
        raise ParameterError(f'Для графика нужно не меньше 2 успешных строк, есть {len(points)}')
    gammas = points.column('gamma')
    values = [v for key, _, _ in SERIES for v in points.column(key)]
    values.append(L)
    inner_width = PLOT_WIDTH - MARGIN['left'] - MARGIN['right']
    inner_height = PLOT_HEIGHT - MARGIN['top'] - MARGIN['bottom']
    x_axis = _Axis(min(gammas), max(gammas), MARGIN['left'], inner_width)
    pad = 0.05 * (max(values) - min(values))
    y_axis = _Axis(min(values) - pad, max(values) + pad, MARGIN['top'], inner_height, flip=True)

    series = []
    for index, (key, label, colour) in enumerate(SERIES):
        coords = ' '.join(f'{x_axis(g):.2f},{y_axis(v):.2f}' for g, v in zip(gammas, points.column(key)))
        series.append({
            'key': key,
            'label': label,
            'colour': colour,
            'points': coords,
            'legend_y': f'{MARGIN["top"] + 20 * index + 10:.2f}',
        })
    context = {
        'width': PLOT_WIDTH,
        'height': PLOT_HEIGHT,
        'left': MARGIN['left'],
        'right': PLOT_WIDTH - MARGIN['right'],
        'top': MARGIN['top'],
        'bottom': PLOT_HEIGHT - MARGIN['bottom'],
        'legend_x': PLOT_WIDTH - MARGIN['right'] + 16,
        'series': series,
        'reference_y': f'{y_axis(L):.2f}',
        'reference_label': f'L = {L:g}',
        'x_ticks': x_axis.ticks(),
        'y_ticks': y_axis.ticks(),
    }
    document = render_to_string('sweep/boundaries.svg', context)
    if out is not None:
        out.write(document)
    return document
