# exclusion/models.py
from django.db import models, transaction


class ClassificationRun(models.Model):
    """Una tabla de clasificación calculada y guardada (classify --store)."""

    q = models.PositiveIntegerField("Orden del cuerpo")
    r = models.PositiveIntegerField("Exponente r")
    lam = models.PositiveIntegerField(
        "Multiplicidad máxima λ",
        default=1,
        help_text="1 para conjuntos (caso proyectivo).",
    )
    n_max = models.PositiveIntegerField("Cardinalidad máxima")
    used_lp = models.BooleanField("Con programación lineal", default=True)
    notes = models.TextField("Notas", blank=True)

    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ["-created_at"]
        verbose_name = "Clasificación"
        verbose_name_plural = "Clasificaciones"

    def __str__(self):
        return f"q={self.q} r={self.r} λ={self.lam} (n <= {self.n_max})"

    # ---------- Resumen ----------

    def count(self, status):
        return self.verdicts.filter(status=status).count()

    @property
    def open_lengths(self):
        return list(
            self.verdicts.filter(status=LengthVerdict.Status.OPEN).values_list("n", flat=True)
        )

    @classmethod
    def store(cls, table, used_lp=True, notes=""):
        """Guarda una ClassificationTable con un veredicto por cardinalidad."""
        with transaction.atomic():
            run = cls.objects.create(
                q=table.q, r=table.r, lam=table.lam, n_max=table.n_max,
                used_lp=used_lp, notes=notes,
            )
            LengthVerdict.objects.bulk_create([
                LengthVerdict(
                    run=run,
                    n=entry.n,
                    status=entry.status,
                    criterion=entry.criterion,
                    certificate=entry.certificate,
                    witness=entry.witness,
                )
                for entry in table
            ])
        return run


class LengthVerdict(models.Model):
    class Status(models.TextChoices):
        REALIZABLE = "REALIZABLE", "Realizable"
        EXCLUDED = "EXCLUDED", "Excluida"
        OPEN = "OPEN", "Abierta"

    run = models.ForeignKey(
        ClassificationRun,
        on_delete=models.CASCADE,
        related_name="verdicts",
    )
    n = models.PositiveIntegerField("Cardinalidad")
    status = models.CharField(
        max_length=20,
        choices=Status.choices,
        default=Status.OPEN,
        db_index=True,
    )
    # Tipo del primer criterio que excluye n (interval, linear, ...)
    criterion = models.CharField("Criterio", max_length=20, blank=True)
    certificate = models.JSONField(null=True, blank=True)
    witness = models.JSONField(null=True, blank=True)

    class Meta:
        ordering = ["run", "n"]
        verbose_name = "Veredicto"
        verbose_name_plural = "Veredictos"
        constraints = [
            models.UniqueConstraint(fields=["run", "n"], name="unique_length_per_run"),
        ]

    def __str__(self):
        return f"n={self.n}: {self.get_status_display()}"
