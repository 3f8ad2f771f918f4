from django.urls import path

from .views import SpreadBoundView, VspCheckView

app_name = "applications"

urlpatterns = [
    path("spread-bound/", SpreadBoundView.as_view(), name="spread-bound"),
    path("vsp-check/", VspCheckView.as_view(), name="vsp-check"),
]
