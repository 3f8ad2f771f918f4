from django.contrib import admin
from .models import ClassificationRun, LengthVerdict


class LengthVerdictInline(admin.TabularInline):
    model = LengthVerdict
    extra = 0
    fields = ("n", "status", "criterion")
    readonly_fields = ("n", "status", "criterion")
    can_delete = False
    show_change_link = True


@admin.register(ClassificationRun)
class ClassificationRunAdmin(admin.ModelAdmin):
    list_display = (
        "id",
        "q",
        "r",
        "lam",
        "n_max",
        "used_lp",
        "created_at",
    )
    list_filter = ("q", "r", "lam", "used_lp")
    readonly_fields = ("created_at", "open_lengths")
    inlines = [LengthVerdictInline]

    fieldsets = (
        ("Parámetros", {
            "fields": (
                ("q", "r", "lam"),
                "n_max",
                "used_lp",
            )
        }),
        ("Resultado", {
            "fields": (
                "open_lengths",
                "notes",
                "created_at",
            )
        }),
    )


@admin.register(LengthVerdict)
class LengthVerdictAdmin(admin.ModelAdmin):
    list_display = ("run", "n", "status", "criterion")
    list_filter = ("status", "criterion", "run__q", "run__r")
    search_fields = ("n", "criterion")
    readonly_fields = ("certificate", "witness")
