from django.db import models


class ComputationRun(models.Model):
    COMMAND_CHOICES = [
        ('pair', 'Pair'),
        ('factorize', 'Factorize'),
        ('multiplicity', 'Multiplicity'),
        ('oracle', 'Oracle'),
    ]
    STATUS_CHOICES = [
        ('pending', 'Pending'),
        ('running', 'Running'),
        ('completed', 'Completed'),
        ('failed', 'Failed'),
    ]
    command = models.CharField(max_length=20, choices=COMMAND_CHOICES)
    status = models.CharField(max_length=20, choices=STATUS_CHOICES, default='pending')
    job = models.JSONField(default=dict)
    results = models.JSONField(null=True, blank=True)
    routes_agree = models.BooleanField(null=True, blank=True)
    error_logs = models.TextField(null=True, blank=True)
    started_at = models.DateTimeField(auto_now_add=True)
    completed_at = models.DateTimeField(null=True, blank=True)

    def __str__(self):
        return f"{self.command} run ({self.status.capitalize()})"
