"""
URL configuration for the planar Hamiltonian toolkit.

    /admin/              stored graphs
    /api/core/           stored graphs and face tracing
    /api/hamiltonian/    Grinberg sets, bounds and walk reductions
"""
from django.contrib import admin
from django.urls import include, path

urlpatterns = [
    path("admin/", admin.site.urls),
    path("api/core/", include("core.urls")),
    path("api/hamiltonian/", include("hamiltonian.urls")),
]
