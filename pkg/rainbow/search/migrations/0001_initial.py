# Generated by Django 5.2.6 on 2026-10-17 09:12

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
        ('colorings', '0001_initial'),
    ]

    operations = [
        migrations.CreateModel(
            name='SearchRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('n', models.PositiveIntegerField(verbose_name='Vertices')),
                ('ell', models.PositiveIntegerField(verbose_name='Colors')),
                ('q', models.PositiveIntegerField(verbose_name='Clique size')),
                ('strategy', models.CharField(choices=[('local_search', 'Local search'), ('backtracking', 'Backtracking')], default='local_search', max_length=20, verbose_name='Strategy')),
                ('seed', models.PositiveBigIntegerField(default=0, verbose_name='Seed')),
                ('config', models.JSONField(verbose_name='Configuration')),
                ('status', models.CharField(choices=[('pending', 'Pending'), ('running', 'Running'), ('found', 'Found'), ('exhausted', 'Exhausted'), ('exhausted_budget', 'Budget exhausted'), ('trivial_instance', 'Trivial instance'), ('failed', 'Failed')], default='pending', max_length=20, verbose_name='Status')),
                ('stats', models.JSONField(blank=True, default=dict, verbose_name='Statistics')),
                ('error_message', models.TextField(blank=True, verbose_name='Error Message')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('initial', models.ForeignKey(blank=True, null=True, on_delete=django.db.models.deletion.SET_NULL, related_name='repair_runs', to='colorings.certificate')),
                ('result', models.ForeignKey(blank=True, null=True, on_delete=django.db.models.deletion.SET_NULL, related_name='found_by', to='colorings.certificate')),
            ],
            options={
                'verbose_name': 'Search Run',
                'verbose_name_plural': 'Search Runs',
                'ordering': ['-created_at'],
            },
        ),
    ]
