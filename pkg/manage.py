#!/usr/bin/env python
"""Command-line entry for the planar Hamiltonian toolkit.

    python manage.py planar grinberg --face-lengths 6,6,6,6,6,18
    python manage.py planar corpus grid 3 3 > grid.pg
    python manage.py seed_corpus
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install the packages from requirements.txt "
            "into the active environment first."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
