# Generated by Django 4.2.3 on 2026-10-19 10:02

import django.core.validators
import django.utils.timezone
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='InvariantRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('algebra', models.CharField(max_length=100, verbose_name='Algebra')),
                ('diagram', models.CharField(max_length=100, verbose_name='Diagram')),
                ('degree_offset', models.IntegerField(default=0, verbose_name='Framing Degree Offset')),
                ('convention', models.CharField(choices=[('g-action', 'g-action'), ('antipode-inverse', 'antipode-inverse')], max_length=20, verbose_name='Half-Integer Cointegral Convention')),
                ('value', models.TextField(verbose_name='Exact Value')),
                ('field', models.CharField(max_length=50, verbose_name='Field')),
                ('max_intermediate', models.BigIntegerField(validators=[django.core.validators.MinValueValidator(0, 'Term counts cannot be negative.')], verbose_name='Max Intermediate Terms')),
                ('term_count', models.BigIntegerField(validators=[django.core.validators.MinValueValidator(0, 'Term counts cannot be negative.')], verbose_name='Term Count')),
                ('computed_at', models.DateTimeField(default=django.utils.timezone.now, verbose_name='Computed At')),
            ],
            options={
                'verbose_name': 'Invariant Record',
            },
        ),
        migrations.AddConstraint(
            model_name='invariantrecord',
            constraint=models.UniqueConstraint(fields=('algebra', 'diagram', 'degree_offset', 'convention'), name='unique_invariant_per_algebra_diagram_degree_convention'),
        ),
    ]
