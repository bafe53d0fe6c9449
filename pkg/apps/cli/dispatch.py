"""Разбор argv и коды выхода: 0 успех, 1 сбой решателя или проверки, 2 конфигурация."""
import logging
import sys

from django.core.exceptions import ValidationError
from django.core.management.base import CommandError, CommandParser

from apps.core.exceptions import ConfigError, OutputError, StoplineError

from .config import load_config
from .handlers import HANDLERS

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


def build_parser():
    parser = CommandParser(prog='stopline', called_from_command_line=False)
    parser.add_argument('subcommand', choices=sorted(HANDLERS))
    parser.add_argument('config', help='файл section.key = value')
    return parser


def _validation_message(exc):
    if hasattr(exc, 'message_dict'):
        return '; '.join(f'{key}: {", ".join(map(str, msgs))}' for key, msgs in exc.message_dict.items())
    return '; '.join(map(str, exc.messages))


def dispatch(argv, stdout=None, stderr=None):
    """Запуск подкоманды; возвращает код выхода"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except CommandError as exc:
        stderr.write(f'{exc}\n')
        return EXIT_USAGE
    except SystemExit as exc:
        return EXIT_OK if exc.code in (None, 0) else EXIT_USAGE

    try:
        spec = load_config(args.config)
        return HANDLERS[args.subcommand](spec, stdout)
    except (ConfigError, OutputError) as exc:
        stderr.write(f'ошибка: {exc}\n')
        return EXIT_USAGE
    except StoplineError as exc:
        logger.debug('Сбой подкоманды', exc_info=True)
        stderr.write(f'{type(exc).__name__}: {exc}\n')
        return EXIT_FAILURE
    except ValidationError as exc:
        logger.debug('Сбой подкоманды', exc_info=True)
        stderr.write(f'ValidationError: {_validation_message(exc)}\n')
        return EXIT_FAILURE
