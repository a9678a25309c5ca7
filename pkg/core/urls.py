from django.urls import path
from rest_framework.routers import DefaultRouter

from .views import StoredGraphViewSet, faces_view

router = DefaultRouter()
router.register(r"graphs", StoredGraphViewSet)

urlpatterns = [
    path("faces/", faces_view, name="faces"),
]

urlpatterns += router.urls
