from django.core.management.base import BaseCommand

from apps.cli.dispatch import dispatch
from apps.cli.handlers import HANDLERS


class Command(BaseCommand):
    help = 'Границы покупки и продажи в модели с линией поддержки/сопротивления'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('subcommand', choices=sorted(HANDLERS))
        parser.add_argument('config', help='файл section.key = value')

    def handle(self, *args, **options):
        code = dispatch([options['subcommand'], options['config']], self.stdout, self.stderr)
        if code:
            raise SystemExit(code)
