from django.core.management.base import BaseCommand

from core.corpus import DEFAULT_CORPUS, fixture
from core.embedding import serialize_embedding
from core.models import StoredGraph


class Command(BaseCommand):
    help = "Store every embedding-bearing fixture of the default corpus as a StoredGraph."

    def add_arguments(self, parser):
        parser.add_argument(
            "--replace",
            action="store_true",
            help="Overwrite the source of graphs that already exist.",
        )

    def handle(self, *args, **options):
        self.stdout.write(self.style.MIGRATE_HEADING("Seeding corpus graphs..."))

        created_count = 0
        for name, *params in DEFAULT_CORPUS:
            item = fixture(name, *params)
            if item.embedding is None:
                self.stdout.write(f"  skip {item.name} (face vector only)")
                continue

            source = serialize_embedding(item.embedding)
            description = ", ".join(
                f"{key}={value} [{item.provenance[key]}]" for key, value in item.expected.items()
            )
            graph, created = StoredGraph.objects.get_or_create(
                name=item.name,
                defaults={"source": source, "description": description},
            )
            if not created and options["replace"]:
                graph.source = source
                graph.description = description
                graph.save()
            created_count += created

        self.stdout.write(self.style.SUCCESS(f"{created_count} graphs created."))
        self.stdout.write(self.style.SUCCESS("Corpus seeding completed."))
