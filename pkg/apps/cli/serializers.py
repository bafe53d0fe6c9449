import os
from pathlib import Path

from django.core.exceptions import ValidationError as ModelValidationError
from rest_framework import serializers

from apps.core.models import MonteCarloParams, Numerics
from apps.dynamics.models import DynamicsKind, ModelSpec, Regime, RegimeDynamics, UtilitySpec

NUMERICS_DEFAULTS = Numerics()
MC_DEFAULTS = MonteCarloParams()


def _model_errors(exc):
    """Ошибка clean() доменного объекта в формат DRF"""
    if hasattr(exc, 'message_dict'):
        return {key: [str(m) for m in messages] for key, messages in exc.message_dict.items()}
    return [str(m) for m in exc.messages]


class RealField(serializers.FloatField):
    """Вещественное число; допускает дроби вида 1/30 и inf"""

    def to_internal_value(self, data):
        if isinstance(data, str) and '/' in data:
            numerator, _, denominator = data.partition('/')
            try:
                return float(numerator) / float(denominator)
            except (ValueError, ZeroDivisionError):
                self.fail('invalid')
        return super().to_internal_value(data)


class RealListField(serializers.ListField):
    """Список чисел через запятую"""

    child = RealField()

    def to_internal_value(self, data):
        if isinstance(data, str):
            data = [item.strip() for item in data.split(',') if item.strip()]
        return super().to_internal_value(data)


class DynamicsSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=DynamicsKind.choices)
    mu = RealField(required=False, default=0.0)
    c = RealField(required=False, allow_null=True, default=None)
    sigma2 = RealField(required=False, default=0.0)
    table_x = RealListField(required=False, default=list)
    table_mu = RealListField(required=False, default=list)
    table_sigma2 = RealListField(required=False, default=list)

    def validate(self, attrs):
        try:
            attrs['dynamics'] = RegimeDynamics(**attrs)
        except ModelValidationError as exc:
            raise serializers.ValidationError(_model_errors(exc))
        return attrs


class ModelSerializer(serializers.Serializer):
    positive = DynamicsSerializer()
    negative = DynamicsSerializer()
    L = RealField()
    H = RealField()
    r = RealField()

    def validate(self, attrs):
        try:
            attrs['spec'] = ModelSpec(
                positive=attrs['positive']['dynamics'],
                negative=attrs['negative']['dynamics'],
                L=attrs['L'],
                H=attrs['H'],
                r=attrs['r'],
            )
        except ModelValidationError as exc:
            raise serializers.ValidationError(_model_errors(exc))
        return attrs


class UtilitySerializer(serializers.Serializer):
    gamma = RealField()

    def validate_gamma(self, value):
        if not value > 0:
            raise serializers.ValidationError('Показатель полезности должен быть положительным')
        return value


class NumericsSerializer(serializers.Serializer):
    cells_per_unit = serializers.IntegerField(required=False, default=NUMERICS_DEFAULTS.cells_per_unit)
    tol_boundary = RealField(required=False, default=NUMERICS_DEFAULTS.tol_boundary)
    tol_pasting = RealField(required=False, default=NUMERICS_DEFAULTS.tol_pasting)
    tol_continuity = RealField(required=False, default=NUMERICS_DEFAULTS.tol_continuity)
    x_max = RealField(required=False, allow_null=True, default=None)
    B_max = RealField(required=False, allow_null=True, default=None)
    phi_cells_per_unit = serializers.IntegerField(required=False, default=NUMERICS_DEFAULTS.phi_cells_per_unit)
    tol_truncation = RealField(required=False, default=NUMERICS_DEFAULTS.tol_truncation)
    scan_points = serializers.IntegerField(required=False, default=NUMERICS_DEFAULTS.scan_points)

    def validate(self, attrs):
        try:
            attrs['numerics'] = Numerics(**attrs)
        except ModelValidationError as exc:
            raise serializers.ValidationError(_model_errors(exc))
        return attrs


class MonteCarloSerializer(serializers.Serializer):
    n_paths = serializers.IntegerField(required=False, min_value=100, default=MC_DEFAULTS.n_paths)
    dt = RealField(required=False, default=MC_DEFAULTS.dt)
    t_max = RealField(required=False, default=MC_DEFAULTS.t_max)
    seed = serializers.IntegerField(required=False, min_value=0, default=MC_DEFAULTS.seed)
    start_x = RealField(required=False, allow_null=True, default=None)
    start_regime = serializers.ChoiceField(choices=Regime.choices, required=False, default=Regime.POSITIVE)
    rule = serializers.ChoiceField(choices=['seller', 'buyer'], required=False, default='seller')
    compare_standard = serializers.BooleanField(required=False, default=False)

    def validate_start_x(self, value):
        if value is not None and not value >= 0:
            raise serializers.ValidationError('Начальная цена не может быть отрицательной')
        return value

    def validate(self, attrs):
        try:
            attrs['params'] = MonteCarloParams(
                n_paths=attrs['n_paths'], dt=attrs['dt'], t_max=attrs['t_max'], seed=attrs['seed']
            )
        except ModelValidationError as exc:
            raise serializers.ValidationError(_model_errors(exc))
        return attrs


def _writable(path):
    """Ближайший существующий предок пути доступен на запись"""
    ancestor = path.parent
    while not ancestor.exists() and ancestor != ancestor.parent:
        ancestor = ancestor.parent
    return ancestor.is_dir() and os.access(ancestor, os.W_OK)


class OutputSerializer(serializers.Serializer):
    dir = serializers.CharField(required=False, default='stopline_output')
    csv = serializers.CharField(required=False, default='sweep.csv')
    svg = serializers.CharField(required=False, default='sweep.svg')
    report = serializers.CharField(required=False, default='report.txt')
    values = serializers.CharField(required=False, default='values.csv')

    def validate(self, attrs):
        base = Path(attrs['dir'])
        errors = {}
        for name in ('csv', 'svg', 'report', 'values'):
            attrs[name] = base / attrs[name]
            if not _writable(attrs[name]):
                errors[name] = [f'Путь {attrs[name]} недоступен для записи']
        if errors:
            raise serializers.ValidationError(errors)
        attrs['dir'] = base
        return attrs


class SweepSerializer(serializers.Serializer):
    gammas = RealListField(required=False, default=list)

    def validate_gammas(self, value):
        if any(g <= 0 for g in value):
            raise serializers.ValidationError('Значения gamma должны быть положительными')
        if value != sorted(value):
            raise serializers.ValidationError('Значения gamma должны идти по возрастанию')
        return value


class RunSpecSerializer(serializers.Serializer):
    """Корень конфигурации: секции model, utility, numerics, mc, output, sweep"""

    model = ModelSerializer()
    utility = UtilitySerializer()
    numerics = NumericsSerializer(required=False, default=dict)
    mc = MonteCarloSerializer(required=False, default=dict)
    output = OutputSerializer(required=False, default=dict)
    sweep = SweepSerializer(required=False, default=dict)

    def validate(self, attrs):
        try:
            attrs['utility_spec'] = UtilitySpec(attrs['utility']['gamma'])
        except ModelValidationError as exc:
            raise serializers.ValidationError({'utility': _model_errors(exc)})
        return attrs
