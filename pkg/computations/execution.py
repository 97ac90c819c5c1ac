from fractions import Fraction
from time import perf_counter
from typing import Callable, Dict, List, Optional, Sequence
import logging

from celery import group
from django.conf import settings
from django.utils import timezone

from algebra.eigenvalue_orbits import FieldParam
from pairings.lusztig_decomposition import factorized_pairing
from pairings.reeder_engine import PairingReport, reeder_closed_form, reeder_direct
from representations.unipotent_reps import ggp_multiplicity

from .codecs import decode_pair, decode_series, encode_pair, encode_series, encode_summand, jsonable
from .models import ComputationRun
from .oracle import run_oracle
from .validators import JobValidator

logger = logging.getLogger(__name__)


class JobExecutor:
    def __init__(self, run: Optional[ComputationRun] = None, jobs: int = 1,
                 inject_fault: bool = False, progress: bool = False):
        self.run = run
        self.jobs = max(1, min(jobs, settings.GGP_MAX_JOBS))
        self.inject_fault = inject_fault
        self.progress = progress
        self.handlers: Dict[str, Callable[[Dict], Dict]] = {
            'pair': self.run_pair,
            'factorize': self.run_factorize,
            'multiplicity': self.run_multiplicity,
            'oracle': self.run_oracle,
        }

    def execute(self, job: Dict) -> Dict:
        started = perf_counter()
        try:
            if self.run:
                self.run.status = 'running'
                self.run.save()

            report = jsonable(self.handlers[job['command']](job))
            report['timings'] = {'elapsed_ms': round((perf_counter() - started) * 1000, 3)}

            if self.run:
                self.run.status = 'completed'
                self.run.completed_at = timezone.now()
                self.run.results = report
                self.run.routes_agree = report.get('routes_agree')
                self.run.save()
            return report
        except Exception as e:
            logger.error(f"{job.get('command')} job failed: {e}", exc_info=True)
            if self.run:
                self.run.status = 'failed'
                self.run.error_logs = str(e)
                self.run.completed_at = timezone.now()
                self.run.save()
            raise

    def celery_mapper(self, fn: Callable, items: List[tuple]) -> List[Fraction]:
        """Summand mapper for the direct route: ``jobs`` batches, one Celery task each."""
        from .tasks import evaluate_iota_batch

        payloads = [encode_summand(*item) for item in items]
        batches = [payloads[i::self.jobs] for i in range(self.jobs)]
        result = group(evaluate_iota_batch.s(batch) for batch in batches if batch).apply_async()
        values = result.get(disable_sync_subtasks=False)
        # batches interleave, so undo the striding to restore shape order
        ordered: List[Optional[Fraction]] = [None] * len(payloads)
        for offset, batch in enumerate(values):
            for j, value in enumerate(batch):
                ordered[offset + j * self.jobs] = Fraction(value)
        return ordered

    def _evaluate(self, route: str, family: str, big, small, options: Dict) -> PairingReport:
        if route == 'direct':
            return reeder_direct(family, big, small, mapper=self.celery_mapper if self.jobs > 1 else None)
        if route == 'closed_form':
            return reeder_closed_form(family, big, small)
        return factorized_pairing(
            family, big, small,
            base_route=options.get('base_route', 'closed_form'),
            reading=options.get('reading', 'union'),
            padding_variant=options.get('padding_variant', 0),
            theta_seed=options.get('theta_seed', 0),
        )

    def _pairing_report(self, job: Dict, command: str, routes: Sequence[str]) -> Dict:
        errors = JobValidator.validate_pair_job(job)
        if errors:
            raise ValueError('; '.join(errors))
        field = FieldParam(job['q'])
        big, small = decode_pair(job['big'], field), decode_pair(job['small'], field)
        options = job.get('options', {})

        values, breakdown, signs = {}, {}, {}
        for route in routes:
            report = self._evaluate(route, job['pair_kind'], big, small, options)
            values[route] = report.value
            breakdown[route] = report.breakdown
            if report.signs:
                signs[route] = report.signs
        if self.inject_fault:
            logger.warning(f"Injecting a fault into route {routes[-1]}")
            values[routes[-1]] += 1

        agree = len(set(values.values())) == 1
        if not agree:
            logger.error(f"Routes disagree on {big} / {small}: {values}")
        return {
            'command': command, 'family': job['pair_kind'], 'q': job['q'],
            'big': encode_pair(big), 'small': encode_pair(small),
            'value': values[routes[0]] if agree else None,
            'routes': values, 'routes_agree': agree,
            'breakdown': breakdown, 'signs': signs,
        }

    def run_pair(self, job: Dict) -> Dict:
        routes = job.get('options', {}).get('routes') or settings.GGP_DEFAULT_ROUTES
        return self._pairing_report(job, 'pair', list(routes))

    def run_factorize(self, job: Dict) -> Dict:
        # the closed form rides along as a check on the product
        routes = job.get('options', {}).get('routes') or ['factorized', 'closed_form']
        return self._pairing_report(job, 'factorize', list(routes))

    def run_multiplicity(self, job: Dict) -> Dict:
        errors = JobValidator.validate_series_job(job)
        if errors:
            raise ValueError('; '.join(errors))
        field = FieldParam(job['q'])
        pi, sigma = decode_series(job['pi'], field), decode_series(job['sigma'], field)
        report = ggp_multiplicity(pi, sigma, job.get('options', {}).get('tau_seed', 0))
        return {
            'command': 'multiplicity', 'family': report.family, 'q': job['q'],
            'pi': encode_series(pi), 'sigma': encode_series(sigma),
            'value': report.value, 'lhs': report.lhs, 'rhs': report.rhs,
            'lhs_equals_rhs': report.lhs == report.rhs, 'routes_agree': report.lhs == report.rhs,
            'factors': report.factors, 'reduction': report.reduction,
        }

    def run_oracle(self, job: Dict) -> Dict:
        bound = job.get('options', {}).get('oracle_bound') or 2
        errors = JobValidator.validate_oracle_bound(bound)
        if errors:
            raise ValueError('; '.join(errors))
        summary = run_oracle(bound, q_values=(job['q'],), progress=self.progress)
        summary['command'] = 'oracle'
        summary['routes_agree'] = summary['all_passed']
        return summary
