"""
Shared plumbing of the billiard management commands.

A command fills a Report and returns an exit code; the report is always
written before a nonzero code is raised as CommandError.
"""

import logging
from pathlib import Path
from typing import Optional

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from apps.core.exceptions import InvalidLabelError, RepeatedLabelError, SingularOrbitError
from apps.tracer.states import BilliardWord
from .reports import OutputFormat, Report, RunConfig, write_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_VERIFICATION_FAILED = 2
EXIT_INFEASIBLE = 3
EXIT_SINGULAR = 4
EXIT_DIMENSION_TOO_HIGH = 5

STATUS = {
    EXIT_OK: 'ok',
    EXIT_VERIFICATION_FAILED: 'verification failed',
    EXIT_INFEASIBLE: 'infeasible',
    EXIT_SINGULAR: 'singular',
    EXIT_DIMENSION_TOO_HIGH: 'dimension too high',
}


def caused_by_singularity(exc: Optional[BaseException]) -> bool:
    while exc is not None:
        if isinstance(exc, SingularOrbitError):
            return True
        exc = exc.__cause__
    return False


class BilliardCommand(BaseCommand):
    formats = (OutputFormat.JSON, OutputFormat.TEXT, OutputFormat.CSV)
    takes_word = False

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True, help='Dimension of the simplex.')
        if self.takes_word:
            parser.add_argument('--word', required=True, help="Face labels, e.g. '0123' or '0,1,10,1'.")
        parser.add_argument(
            '--format', dest='output_format', default=OutputFormat.JSON.value,
            choices=[f.value for f in self.formats],
        )
        parser.add_argument('--output', dest='output_path', type=Path, default=None,
                            help='Write the report to this file instead of stdout.')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    @property
    def command_name(self) -> str:
        return self.__module__.rsplit('.', 1)[-1]

    def run(self, config: RunConfig, report: Report, **options) -> int:
        raise NotImplementedError

    def handle(self, *args, **options):
        try:
            word = BilliardWord.parse(options['word']) if options.get('word') else None
            config = RunConfig(
                command=self.command_name,
                n=options['n'],
                word=word,
                output_format=options['output_format'],
                output_path=options['output_path'],
            )
            report = Report(config)
            returncode = self.run(config, report, **options)
        except ValidationError as exc:
            raise CommandError('; '.join(exc.messages), returncode=EXIT_INVALID_INPUT)
        except (InvalidLabelError, RepeatedLabelError) as exc:
            raise CommandError(str(exc), returncode=EXIT_INVALID_INPUT)

        report.status = STATUS[returncode]
        write_report(report, self.stdout)
        logger.info('%s n=%s finished: %s', config.command, config.n, report.status)
        if returncode:
            raise CommandError(f'{config.command}: {report.status}', returncode=returncode)
