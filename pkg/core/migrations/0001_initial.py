from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="StoredGraph",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                (
                    "name",
                    models.CharField(
                        help_text="Short identifier, e.g. grid(3,3)",
                        max_length=100,
                        unique=True,
                    ),
                ),
                (
                    "description",
                    models.TextField(
                        blank=True,
                        default="",
                        help_text="Where the graph comes from and what it illustrates",
                    ),
                ),
                (
                    "source",
                    models.TextField(
                        help_text="Graph file content: 'p planar', 'e' and 'r' lines",
                    ),
                ),
                ("created_at", models.DateTimeField(auto_now_add=True)),
            ],
            options={
                "verbose_name": "Stored graph",
                "verbose_name_plural": "Stored graphs",
                "ordering": ["name"],
            },
        ),
    ]
