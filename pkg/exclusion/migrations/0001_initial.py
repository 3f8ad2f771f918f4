# Generated by Django 5.2.7 on 2025-10-20 10:12

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='ClassificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('q', models.PositiveIntegerField(verbose_name='Orden del cuerpo')),
                ('r', models.PositiveIntegerField(verbose_name='Exponente r')),
                ('lam', models.PositiveIntegerField(default=1, help_text='1 para conjuntos (caso proyectivo).', verbose_name='Multiplicidad máxima λ')),
                ('n_max', models.PositiveIntegerField(verbose_name='Cardinalidad máxima')),
                ('used_lp', models.BooleanField(default=True, verbose_name='Con programación lineal')),
                ('notes', models.TextField(blank=True, verbose_name='Notas')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'verbose_name': 'Clasificación',
                'verbose_name_plural': 'Clasificaciones',
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='LengthVerdict',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('n', models.PositiveIntegerField(verbose_name='Cardinalidad')),
                ('status', models.CharField(choices=[('REALIZABLE', 'Realizable'), ('EXCLUDED', 'Excluida'), ('OPEN', 'Abierta')], db_index=True, default='OPEN', max_length=20)),
                ('criterion', models.CharField(blank=True, max_length=20, verbose_name='Criterio')),
                ('certificate', models.JSONField(blank=True, null=True)),
                ('witness', models.JSONField(blank=True, null=True)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='verdicts', to='exclusion.classificationrun')),
            ],
            options={
                'verbose_name': 'Veredicto',
                'verbose_name_plural': 'Veredictos',
                'ordering': ['run', 'n'],
                'constraints': [models.UniqueConstraint(fields=('run', 'n'), name='unique_length_per_run')],
            },
        ),
    ]
