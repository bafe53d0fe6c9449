from dataclasses import dataclass, field
from pathlib import Path

from apps.core.models import MonteCarloParams, Numerics
from apps.dynamics.models import ModelSpec, Regime, UtilitySpec


@dataclass(frozen=True)
class OutputPaths:
    dir: Path
    csv: Path
    svg: Path
    report: Path
    values: Path


@dataclass(frozen=True)
class SimulationRequest:
    """Что моделировать в команде simulate"""

    start_x: float | None = None
    start_regime: Regime = Regime.POSITIVE
    rule: str = 'seller'
    compare_standard: bool = False


@dataclass(frozen=True)
class RunSpec:
    """Полностью проверенная конфигурация запуска"""

    model: ModelSpec
    utility: UtilitySpec
    numerics: Numerics
    mc: MonteCarloParams
    simulation: SimulationRequest
    outputs: OutputPaths
    gammas: tuple = ()
    effective: tuple = field(default=(), compare=False)

    def parameter_lines(self):
        """Все действующие параметры, включая умолчания"""
        return [f'{key} = {value}' for key, value in self.effective]
