from django.core.management.base import BaseCommand, CommandError

from core.exceptions import PlanarError
from hamiltonian.cli import DOMAIN_ERROR, add_arguments, dispatch


class Command(BaseCommand):
    help = (
        "Faces, Grinberg sets, Hamiltonian number bounds, exact solving and walk "
        "reductions for embedded planar graphs."
    )
    requires_system_checks = []

    def add_arguments(self, parser):
        add_arguments(parser)

    def handle(self, *args, **options):
        try:
            result = dispatch(options)
        except PlanarError as exc:
            raise CommandError(f"{exc.name}: {exc}", returncode=DOMAIN_ERROR) from exc

        if result.json is not None:
            self.stdout.write(result.json)
        if result.text:
            self.stdout.write(result.text, ending="")
