"""Разбор файла конфигурации вида `section.key = value`."""
from pathlib import Path

from django.conf import settings

from apps.core.exceptions import ConfigError

from .models import OutputPaths, RunSpec, SimulationRequest
from .serializers import RunSpecSerializer

DYNAMICS_KEYS = ('kind', 'mu', 'c', 'sigma2', 'table_x', 'table_mu', 'table_sigma2')
SECTION_KEYS = {
    'model': ('L', 'H', 'r'),
    'utility': ('gamma',),
    'numerics': (
        'cells_per_unit', 'tol_boundary', 'tol_pasting', 'tol_continuity', 'x_max', 'B_max',
        'phi_cells_per_unit', 'tol_truncation', 'scan_points',
    ),
    'mc': ('n_paths', 'dt', 't_max', 'seed', 'start_x', 'start_regime', 'rule', 'compare_standard'),
    'output': ('dir', 'csv', 'svg', 'report', 'values'),
    'sweep': ('gammas',),
}
KNOWN_KEYS = frozenset(
    [f'{section}.{key}' for section, keys in SECTION_KEYS.items() for key in keys]
    + [f'model.{regime}.{key}' for regime in ('positive', 'negative') for key in DYNAMICS_KEYS]
)
OPTIONAL_SECTIONS = ('numerics', 'mc', 'output', 'sweep')


def tokenize(text):
    """{ключ: (значение, номер строки)}; '#' начинает комментарий"""
    entries = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition('=')
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError('ожидается строка вида section.key = value', line=number)
        if key not in KNOWN_KEYS:
            raise ConfigError('неизвестный ключ', line=number, key=key)
        if key in entries:
            raise ConfigError(f'ключ уже задан в строке {entries[key][1]}', line=number, key=key)
        if not value:
            raise ConfigError('пустое значение', line=number, key=key)
        entries[key] = (value, number)
    return entries


def _nest(entries):
    tree = {section: {} for section in OPTIONAL_SECTIONS}
    for key, (value, _) in entries.items():
        node = tree
        *parents, leaf = key.split('.')
        for part in parents:
            node = node.setdefault(part, {})
        node[leaf] = value
    return tree


def _flatten(errors, prefix=''):
    if isinstance(errors, dict):
        for key, value in errors.items():
            name = prefix if key == 'non_field_errors' else (f'{prefix}.{key}' if prefix else key)
            yield from _flatten(value, name)
    elif isinstance(errors, list) and errors and isinstance(errors[0], (dict, list)):
        for item in errors:
            yield from _flatten(item, prefix)
    else:
        messages = errors if isinstance(errors, list) else [errors]
        yield prefix, '; '.join(str(m) for m in messages)


def _line_of(key, entries):
    if key in entries:
        return entries[key][1]
    lines = [number for name, (_, number) in entries.items() if name.startswith(f'{key}.')]
    return min(lines) if lines else None


def _effective(data):
    """Плоский список действующих параметров для отчёта"""
    rows = []
    model = data['model']
    for regime in ('positive', 'negative'):
        for key in DYNAMICS_KEYS:
            value = model[regime][key]
            if key == 'c' and value is None:
                continue
            if key.startswith('table_') and not value:
                continue
            rows.append((f'model.{regime}.{key}', _format(value)))
    rows.extend((f'model.{key}', _format(model[key])) for key in ('L', 'H', 'r'))
    rows.append(('utility.gamma', _format(data['utility']['gamma'])))
    for section in OPTIONAL_SECTIONS:
        for key in SECTION_KEYS[section]:
            rows.append((f'{section}.{key}', _format(data[section][key])))
    return tuple(rows)


def _format(value):
    if isinstance(value, float):
        return f'{value:.10g}'
    if isinstance(value, (list, tuple)):
        return ', '.join(_format(v) for v in value)
    if value is None:
        return 'auto'
    return str(value)


def parse_config(text):
    """Текст конфигурации -> RunSpec; ошибки указывают строку и ключ"""
    entries = tokenize(text)
    if not any(key.startswith('model.') for key in entries):
        raise ConfigError('нужна секция model', key='model')
    serializer = RunSpecSerializer(data=_nest(entries))
    if not serializer.is_valid():
        key, message = next(_flatten(serializer.errors))
        raise ConfigError(message, line=_line_of(key, entries), key=key)
    data = serializer.validated_data
    mc = data['mc']
    output = data['output']
    gamma = data['utility']['gamma']
    return RunSpec(
        model=data['model']['spec'],
        utility=data['utility_spec'],
        numerics=data['numerics']['numerics'],
        mc=mc['params'],
        simulation=SimulationRequest(
            start_x=mc['start_x'],
            start_regime=mc['start_regime'],
            rule=mc['rule'],
            compare_standard=mc['compare_standard'],
        ),
        outputs=OutputPaths(**{name: output[name] for name in ('dir', 'csv', 'svg', 'report', 'values')}),
        gammas=tuple(data['sweep']['gammas']) or (gamma,),
        effective=_effective(data),
    )


def resolve_config_path(path):
    """Путь как есть; если файла нет, ищется одноимённый набор в STOPLINE_PRESETS_DIR"""
    path = Path(path)
    if not path.exists() and not path.is_absolute():
        preset = Path(settings.STOPLINE_PRESETS_DIR) / path
        if preset.is_file():
            return preset
    return path


def load_config(path):
    path = resolve_config_path(path)
    try:
        with open(path, encoding='utf-8') as handle:
            text = handle.read()
    except OSError as exc:
        raise ConfigError(f'не удалось прочитать {path}: {exc.strerror}') from exc
    return parse_config(text)
