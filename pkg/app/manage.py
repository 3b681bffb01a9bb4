#!/usr/bin/env python
"""Entry point for the management commands: generate, tw, ell, stabilize, connectify,
pipeline, verify, bramble, report and export-dot."""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Django is not importable; install the project with `poetry install` "
            "and run from inside its environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
