import json
import sys

from django.core.management.base import BaseCommand, CommandError

from pairings.exceptions import HypothesisViolation, RouteDisagreement
from computations.execution import JobExecutor
from computations.models import ComputationRun
from computations.serializers import COMMANDS, JobSpecSerializer

ROUTE_ALIASES = {'closed': 'closed_form', 'factor': 'factorized'}


class Command(BaseCommand):
    help = "Evaluate a Deligne-Lusztig pairing, a Bessel multiplicity or the brute-force oracle for one job file."

    def add_arguments(self, parser):
        parser.add_argument('job_command', choices=COMMANDS, metavar='command')
        parser.add_argument('--input', help="Job JSON file, or - for standard input")
        parser.add_argument('--routes', help="Comma separated: direct,closed_form,factorized")
        parser.add_argument('--jobs', type=int, default=1, help="Parallel summand evaluation through Celery")
        parser.add_argument('--oracle-bound', type=int, dest='oracle_bound')
        parser.add_argument('--inject-fault', action='store_true', dest='inject_fault',
                            help="Perturb the last route (exercises the exit code 2 path)")
        parser.add_argument('--record', action='store_true', help="Store the run as a ComputationRun")
        parser.add_argument('--progress', action='store_true')

    def load_job(self, path):
        if path is None:
            return {}
        try:
            if path == '-':
                return json.load(sys.stdin)
            with open(path) as handle:
                return json.load(handle)
        except json.JSONDecodeError as e:
            raise CommandError(f"Malformed JSON in {path}: {e}", returncode=1)
        except OSError as e:
            raise CommandError(f"Cannot read {path}: {e}", returncode=1)

    def handle(self, *args, **options):
        job = self.load_job(options['input'])
        if not isinstance(job, dict):
            raise CommandError("A job file holds one JSON object", returncode=1)
        job['command'] = options['job_command']
        job_options = dict(job.get('options') or {})
        if options['routes']:
            job_options['routes'] = [ROUTE_ALIASES.get(r.strip(), r.strip()) for r in options['routes'].split(',')]
        if options['oracle_bound'] is not None:
            job_options['oracle_bound'] = options['oracle_bound']
        job['options'] = job_options

        serializer = JobSpecSerializer(data=job)
        if not serializer.is_valid():
            raise CommandError(f"Invalid job: {json.dumps(serializer.errors, sort_keys=True)}", returncode=1)

        run = ComputationRun.objects.create(command=job['command'], job=job) if options['record'] else None
        executor = JobExecutor(run, jobs=options['jobs'], inject_fault=options['inject_fault'],
                               progress=options['progress'])
        try:
            report = executor.execute(serializer.validated_data)
        except HypothesisViolation as e:
            raise CommandError(f"Hypothesis violated at orbit [{e.orbit}]: {e}", returncode=1)
        except RouteDisagreement as e:
            raise CommandError(str(e), returncode=2)
        except ValueError as e:
            raise CommandError(str(e), returncode=1)
        except (AssertionError, RuntimeError) as e:
            raise CommandError(f"Consistency check failed: {e}", returncode=2)

        timings = report.pop('timings', {})
        self.stdout.write(json.dumps({'report': report, 'timings': timings}, sort_keys=True, indent=2))
        if not report.get('routes_agree', True):
            what = 'Oracle found failures' if job['command'] == 'oracle' else 'Routes disagree'
            raise CommandError(what, returncode=2)
