from django.urls import path

from .views import ClassifyView

app_name = "exclusion"

urlpatterns = [
    path("classify/", ClassifyView.as_view(), name="classify"),
]
