"""Сигналы жизненного цикла решателей и их журналирование"""
import logging

from django.dispatch import Signal, receiver

logger = logging.getLogger(__name__)

# sender: класс результата; аргумент solution
seller_solved = Signal()
buyer_solved = Signal()
# sender: SweepRow; аргумент row
sweep_row_finished = Signal()
# sender: McEstimate; аргументы estimate, label
estimate_ready = Signal()


@receiver(seller_solved)
def log_seller_solution(sender, solution, **kwargs):
    """Запись границ продавца в журнал"""
    logger.info(
        f'Продавец: B={solution.B:.6f}, m={solution.m:.6f}, случай {solution.case}, '
        f'невязки B={solution.pasting_residual_B:.2e}, m={solution.pasting_residual_m:.2e}'
    )


@receiver(buyer_solved)
def log_buyer_solution(sender, solution, **kwargs):
    """Запись интервала покупки в журнал"""
    logger.info(
        f'Покупатель: a={solution.a:.6f}, b={solution.b:.6f}, '
        f'хвост {solution.tail_coeff:.6f}, k={solution.k:.6f}'
    )


@receiver(sweep_row_finished)
def log_sweep_row(sender, row, **kwargs):
    """Строка прогона по gamma"""
    if row.is_successful:
        logger.info(f'gamma={row.gamma:g}: B={row.B:.6f}, m={row.m:.6f}, status {row.status}')
    else:
        logger.warning(f'gamma={row.gamma:g}: status {row.status}')


@receiver(estimate_ready)
def log_estimate(sender, estimate, label='', **kwargs):
    """Оценка Монте-Карло; предупреждение при большой доле усечённых траекторий"""
    logger.info(f'MC {label}: {estimate.mean:.6f} ± {estimate.stderr:.6f} ({estimate.n_paths} траекторий)')
    if estimate.truncation_warning:
        logger.warning(
            f'MC {label}: доля траекторий, дошедших до t_max, {estimate.truncated_fraction:.1%}'
        )
