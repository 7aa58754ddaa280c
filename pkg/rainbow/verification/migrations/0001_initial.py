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
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('q', models.PositiveIntegerField(verbose_name='Clique size')),
                ('mode', models.CharField(choices=[('exhaustive', 'Exhaustive'), ('sampled', 'Sampled')], default='exhaustive', max_length=20, verbose_name='Mode')),
                ('samples', models.PositiveBigIntegerField(blank=True, null=True, verbose_name='Samples')),
                ('seed', models.PositiveBigIntegerField(blank=True, null=True, verbose_name='Seed')),
                ('status', models.CharField(choices=[('pending', 'Pending'), ('running', 'Running'), ('accepted', 'Accepted'), ('rejected', 'Rejected'), ('failed', 'Failed')], default='pending', max_length=20, verbose_name='Status')),
                ('balanced', models.BooleanField(blank=True, null=True, verbose_name='Balanced')),
                ('uniform_t', models.PositiveIntegerField(blank=True, null=True, verbose_name='t')),
                ('rainbow_free', models.BooleanField(blank=True, null=True, verbose_name='Rainbow-free')),
                ('subsets_examined', models.PositiveBigIntegerField(blank=True, null=True, verbose_name='Subsets examined')),
                ('witness', models.JSONField(blank=True, null=True, verbose_name='Witness')),
                ('unbalanced_vertices', models.JSONField(blank=True, default=list)),
                ('elapsed_seconds', models.FloatField(blank=True, null=True, verbose_name='Wall time (s)')),
                ('error_message', models.TextField(blank=True, verbose_name='Error Message')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('certificate', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='verification_runs', to='colorings.certificate')),
            ],
            options={
                'verbose_name': 'Verification Run',
                'verbose_name_plural': 'Verification Runs',
                'ordering': ['-created_at'],
            },
        ),
    ]
