from django.urls import path

from .views import ExpandView, FeasibleView

app_name = "lengths"

urlpatterns = [
    path("expand/", ExpandView.as_view(), name="expand"),
    path("feasible/", FeasibleView.as_view(), name="feasible"),
]
