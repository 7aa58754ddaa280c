# Generated by Django 5.2.6 on 2026-10-17 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='Certificate',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(blank=True, max_length=100, verbose_name='Name')),
                ('source', models.CharField(choices=[('embedded', 'Embedded certificate'), ('power', 'Lexicographic power'), ('search', 'Computer search'), ('file', 'Imported file')], default='file', max_length=20, verbose_name='Source')),
                ('n', models.PositiveIntegerField(verbose_name='Vertices')),
                ('ell', models.PositiveIntegerField(verbose_name='Colors')),
                ('q', models.PositiveIntegerField(blank=True, help_text='Set when the coloring is claimed to have no rainbow K_q', null=True, verbose_name='Clique size')),
                ('matrix', models.JSONField(verbose_name='Matrix')),
                ('meta', models.JSONField(blank=True, default=dict, verbose_name='Provenance')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'verbose_name': 'Certificate',
                'verbose_name_plural': 'Certificates',
                'ordering': ['-created_at'],
            },
        ),
    ]
