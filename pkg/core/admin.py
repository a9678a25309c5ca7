from django.contrib import admin

from .models import StoredGraph


@admin.register(StoredGraph)
class StoredGraphAdmin(admin.ModelAdmin):
    """
    Stored graphs; the model's clean() rejects files that do not embed.
    """

    list_display = ("id", "name", "vertex_count", "edge_count", "created_at")
    search_fields = ("name", "description")
    readonly_fields = ("created_at",)

    @admin.display(description="n")
    def vertex_count(self, obj):
        return obj.embedding.num_vertices

    @admin.display(description="m")
    def edge_count(self, obj):
        return obj.embedding.num_edges
