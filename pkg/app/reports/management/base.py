import json
import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import APIException

logger = logging.getLogger(__name__)

EXIT_VIOLATION = 1
EXIT_USAGE = 2


def format_value(value) -> str:
    if value is None:
        return 'none'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, (list, tuple)):
        return ','.join(format_value(v) for v in value)
    value = str(value)
    return json.dumps(value) if ' ' in value else value


class ReportCommand(BaseCommand):
    """Command printing ``key=value`` lines, or one JSON object with ``--json``.

    Subclasses implement ``run``. API errors become exit codes: 1 for internal
    invariant failures (with a JSON diagnostic on stdout), 2 for bad input.
    """

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.add_argument('--json', action='store_true', dest='as_json', help='Print one JSON object.')
        return parser

    def handle(self, *args, **options):
        self.as_json = options['as_json']
        try:
            self.run(*args, **options)
        except APIException as e:
            if e.status_code >= 500:
                self.fail(e.default_code, str(e.detail))
            logger.debug(f'{type(e).__name__}: {e.detail}')
            raise CommandError(self.describe(e.detail), returncode=EXIT_USAGE)

    def run(self, *args, **options):
        raise NotImplementedError('subclasses of ReportCommand must provide a run() method')

    def emit(self, fields: dict, ok: bool | None = None):
        if self.as_json:
            data = dict(fields) if ok is None else {**fields, 'ok': ok}
            self.stdout.write(json.dumps(data))
            return
        line = ' '.join(f'{key}={format_value(value)}' for key, value in fields.items())
        if ok is not None:
            line = f'{line} {"OK" if ok else "FAIL"}'
        self.stdout.write(line)

    def fail(self, code: str, detail: str, **fields):
        self.stdout.write(json.dumps({'error': code, 'detail': detail, **fields}))
        raise CommandError(detail, returncode=EXIT_VIOLATION)

    @staticmethod
    def describe(detail) -> str:
        if isinstance(detail, dict):
            return '; '.join(f'{key}: {ReportCommand.describe(value)}' for key, value in detail.items())
        if isinstance(detail, list):
            return '; '.join(ReportCommand.describe(value) for value in detail)
        return str(detail)
