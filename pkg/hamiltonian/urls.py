from django.urls import path

from .views import bounds_view, grinberg_view, reduce_view

urlpatterns = [
    path("grinberg/", grinberg_view, name="grinberg"),
    path("bounds/", bounds_view, name="bounds"),
    path("reduce/", reduce_view, name="reduce"),
]
