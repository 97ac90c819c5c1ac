from celery import shared_task
from django.db import OperationalError
from rest_framework.exceptions import ValidationError
from algebra.eigenvalue_orbits import FieldParam
from pairings.reeder_engine import iota_summand
from .codecs import decode_pair, decode_shape
from .execution import JobExecutor
from .models import ComputationRun
from .serializers import ComputationRunSerializer, JobSpecSerializer
import logging

logger = logging.getLogger(__name__)


@shared_task
def evaluate_iota_summand(payload):
    field = FieldParam(payload['q'])
    value = iota_summand(payload['family'], decode_pair(payload['big'], field),
                         decode_pair(payload['small'], field), decode_shape(payload['shape']))
    return str(value)


@shared_task
def evaluate_iota_batch(payloads):
    return [evaluate_iota_summand(payload) for payload in payloads]


@shared_task(bind=True, autoretry_for=(OperationalError,), retry_kwargs={'max_retries': 3})
def run_computation(self, run_id):
    try:
        run = ComputationRun.objects.get(id=run_id)
        serializer = JobSpecSerializer(data=run.job)
        if not serializer.is_valid():
            run.status = 'failed'
            run.error_logs = str(serializer.errors)
            run.save()
            logger.error(f"ComputationRun {run_id} has an invalid job: {serializer.errors}")
            return None
        JobExecutor(run).execute(serializer.validated_data)
        return ComputationRunSerializer(run).data
    except ComputationRun.DoesNotExist:
        logger.error(f"ComputationRun {run_id} not found")
    except (ValueError, AssertionError, RuntimeError, ValidationError) as e:
        # the executor has already marked the run failed
        logger.error(f"ComputationRun {run_id} failed: {e}")
    except Exception as e:
        logger.critical(f"Critical computation error: {str(e)}", exc_info=True)
        raise self.retry(exc=e)
